//! Distinguishing colorings and the exact distinguishing number.
//!
//! The exact search assigns colors vertex by vertex in a fixed order, only
//! producing colorings in first-occurrence canonical form. A partial coloring
//! is abandoned when
//!
//! - two twins share a color,
//! - some nontrivial automorphism moving only colored vertices preserves it
//!   (no completion can break that automorphism), or
//! - with the group listed, an automorphism mapping the colored prefix onto
//!   itself produces a lexicographically smaller canonical prefix (some other
//!   branch covers the same orbit of colorings).

use alloc::vec;
use alloc::vec::Vec;

use crate::automorphism::{
    color_preserving, enumerate_automorphisms_with, naive_elements, AutConfig,
};
use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::refine::Budget;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DistConfig {
    /// Fail with [`Error::ExceedsCap`] instead of trying more colors than this.
    pub k_cap: Option<usize>,
    /// Primitive search steps allowed before [`Error::SearchBudgetExceeded`].
    pub budget: u64,
    /// Groups up to this size are listed and used for orbit pruning.
    pub listing_cap: usize,
}

impl Default for DistConfig {
    fn default() -> Self {
        DistConfig {
            k_cap: None,
            budget: 100_000_000,
            listing_cap: 20_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistResult {
    pub value: usize,
    /// A distinguishing coloring with exactly `value` colors.
    pub certificate: Coloring,
    /// Size of the largest twin class, when that alone forces `value`.
    pub lower_bound_witness: Option<usize>,
}

pub fn is_distinguishing(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.len() != g.order() {
        return Err(Error::SizeMismatch {
            expected: g.order(),
            found: c.len(),
        });
    }
    Ok(color_preserving(g, c.colors(), &mut Budget::unlimited())?.is_none())
}

/// Size of the largest class of mutual twins: 0 for the null graph, else at least 1.
pub fn twin_lower_bound(g: &Graph) -> usize {
    g.twin_classes().iter().map(Vec::len).max().unwrap_or(0)
}

pub fn distinguishing_number(g: &Graph, k_cap: Option<usize>) -> Result<DistResult> {
    distinguishing_number_with(
        g,
        &DistConfig {
            k_cap,
            ..DistConfig::default()
        },
    )
}

pub fn distinguishing_number_with(g: &Graph, config: &DistConfig) -> Result<DistResult> {
    let n = g.order();
    if n == 0 {
        return Ok(DistResult {
            value: 0,
            certificate: Coloring::new(Vec::new(), 0)?,
            lower_bound_witness: None,
        });
    }
    let mut budget = Budget::new(config.budget);
    let group = listing(g, config.listing_cap)?;
    let twins = twin_lower_bound(g);
    let trivial_group = match &group {
        Some(elements) => elements.is_empty(),
        None => color_preserving(g, &vec![0; n], &mut budget)?.is_none(),
    };
    if trivial_group {
        return Ok(DistResult {
            value: 1,
            certificate: Coloring::constant(n),
            lower_bound_witness: None,
        });
    }
    let start = twins.max(2);
    for k in start..=n {
        if config.k_cap.is_some_and(|cap| k > cap) {
            return Err(Error::ExceedsCap {
                cap: config.k_cap.unwrap_or(0),
            });
        }
        // no distinguishing coloring with fewer than k colors exists here, so
        // any hit uses all k colors
        let mut search = ColoringSearch::new(g, k, true, group.as_deref(), &mut budget);
        if let Some(certificate) = search.run()? {
            return Ok(DistResult {
                value: k,
                certificate,
                lower_bound_witness: (k == twins).then_some(twins),
            });
        }
    }
    unreachable!("giving every vertex its own color is distinguishing")
}

/// A distinguishing coloring with at most `k` colors, if one exists.
pub fn find_distinguishing_coloring(
    g: &Graph,
    k: usize,
    config: &DistConfig,
) -> Result<Option<Coloring>> {
    if g.order() == 0 {
        return Ok(Some(Coloring::new(Vec::new(), k)?));
    }
    if k == 0 {
        return Ok(None);
    }
    let mut budget = Budget::new(config.budget);
    let group = listing(g, config.listing_cap)?;
    let found = ColoringSearch::new(g, k, false, group.as_deref(), &mut budget).run()?;
    found
        .map(|c| Coloring::new(c.colors().to_vec(), k))
        .transpose()
}

/// Nonidentity automorphisms, when the group is small enough to list.
fn listing(g: &Graph, cap: usize) -> Result<Option<Vec<Permutation>>> {
    let config = AutConfig {
        max_n: usize::MAX,
        max_elements: cap,
    };
    match enumerate_automorphisms_with(g, &config) {
        Ok(listing) => Ok(Some(
            listing
                .elements()
                .iter()
                .filter(|p| !p.is_identity())
                .cloned()
                .collect(),
        )),
        Err(Error::GroupTooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Per-depth views of the listed group: for each prefix length `d`, the
/// elements mapping the first `d` vertices of the order onto themselves, and
/// the subset moving nothing outside them.
struct PrefixTables<'g> {
    elements: &'g [Permutation],
    stabilizing: Vec<Vec<u32>>,
    supported: Vec<Vec<u32>>,
}

impl<'g> PrefixTables<'g> {
    fn new(elements: &'g [Permutation], order: &[usize]) -> Self {
        let n = order.len();
        let mut in_prefix = vec![false; n];
        let mut stabilizing = Vec::with_capacity(n + 1);
        let mut supported = Vec::with_capacity(n + 1);
        for d in 0..=n {
            if d > 0 {
                in_prefix[order[d - 1]] = true;
            }
            let mut stab = Vec::new();
            let mut supp = Vec::new();
            for (idx, p) in elements.iter().enumerate() {
                let stabilizes = (0..d).all(|j| in_prefix[p.apply(order[j])]);
                if stabilizes {
                    stab.push(idx as u32);
                    if (d..n).all(|j| p.apply(order[j]) == order[j]) {
                        supp.push(idx as u32);
                    }
                }
            }
            stabilizing.push(stab);
            supported.push(supp);
        }
        PrefixTables {
            elements,
            stabilizing,
            supported,
        }
    }
}

struct ColoringSearch<'a> {
    g: &'a Graph,
    k: usize,
    require_all: bool,
    order: Vec<usize>,
    /// For each position, the earlier positions holding a twin.
    earlier_twins: Vec<Vec<usize>>,
    tables: Option<PrefixTables<'a>>,
    colors: Vec<usize>,
    budget: &'a mut Budget,
}

impl<'a> ColoringSearch<'a> {
    fn new(
        g: &'a Graph,
        k: usize,
        require_all: bool,
        group: Option<&'a [Permutation]>,
        budget: &'a mut Budget,
    ) -> Self {
        let n = g.order();
        let classes = g.twin_classes();
        let order: Vec<usize> = {
            let mut sorted: Vec<&Vec<usize>> = classes.iter().collect();
            sorted.sort_by_key(|c| core::cmp::Reverse(c.len()));
            sorted.into_iter().flatten().copied().collect()
        };
        let mut class_of = vec![0; n];
        for (idx, class) in classes.iter().enumerate() {
            for &v in class {
                class_of[v] = idx;
            }
        }
        let earlier_twins = (0..n)
            .map(|pos| {
                (0..pos)
                    .filter(|&j| class_of[order[j]] == class_of[order[pos]])
                    .collect()
            })
            .collect();
        let tables = group.map(|elements| PrefixTables::new(elements, &order));
        ColoringSearch {
            g,
            k,
            require_all,
            order,
            earlier_twins,
            tables,
            colors: vec![0; n],
            budget,
        }
    }

    fn run(&mut self) -> Result<Option<Coloring>> {
        if self.earlier_twins.iter().any(|t| t.len() >= self.k) {
            return Ok(None);
        }
        if self.dfs(0, 0)? {
            let c = Coloring::new(self.colors.clone(), self.k)?;
            return Ok(Some(c));
        }
        Ok(None)
    }

    fn dfs(&mut self, pos: usize, used: usize) -> Result<bool> {
        let n = self.order.len();
        if pos == n {
            return self.complete_is_distinguishing();
        }
        let v = self.order[pos];
        let max_color = self.k.min(used + 1);
        'colors: for c in 1..=max_color {
            self.budget.spend(1)?;
            let now_used = used.max(c);
            if self.require_all && self.k - now_used > n - pos - 1 {
                continue;
            }
            for &j in &self.earlier_twins[pos] {
                if self.colors[self.order[j]] == c {
                    continue 'colors;
                }
            }
            self.colors[v] = c;
            if pos + 1 < n && self.prune(pos + 1)? {
                continue;
            }
            if self.dfs(pos + 1, now_used)? {
                return Ok(true);
            }
        }
        self.colors[v] = 0;
        Ok(false)
    }

    /// Whether the partial coloring of the first `depth` positions can be
    /// discarded.
    fn prune(&mut self, depth: usize) -> Result<bool> {
        let Some(tables) = &self.tables else {
            // uncolored vertices get private colors, so any automorphism found
            // fixes them
            let n = self.order.len();
            let mut colors = self.colors.clone();
            for (offset, &v) in self.order[depth..].iter().enumerate() {
                colors[v] = self.k + 1 + offset;
            }
            debug_assert!(colors.iter().all(|&c| c != 0) || n == 0);
            return Ok(color_preserving(self.g, &colors, self.budget)?.is_some());
        };
        let colors = &self.colors;
        let supported = &tables.supported[depth];
        self.budget.spend(supported.len() as u64 + 1)?;
        for &idx in supported {
            let p = &tables.elements[idx as usize];
            if self.order[..depth]
                .iter()
                .all(|&x| colors[p.apply(x)] == colors[x])
            {
                return Ok(true);
            }
        }
        let stabilizing = &tables.stabilizing[depth];
        self.budget.spend(stabilizing.len() as u64)?;
        let mut rename = vec![0usize; self.k + 1];
        for &idx in stabilizing {
            let p = &tables.elements[idx as usize];
            rename.iter_mut().for_each(|r| *r = 0);
            let mut next = 0;
            for &x in &self.order[..depth] {
                let raw = colors[p.apply(x)];
                if rename[raw] == 0 {
                    next += 1;
                    rename[raw] = next;
                }
                match rename[raw].cmp(&colors[x]) {
                    core::cmp::Ordering::Less => return Ok(true),
                    core::cmp::Ordering::Greater => break,
                    core::cmp::Ordering::Equal => {}
                }
            }
        }
        Ok(false)
    }

    fn complete_is_distinguishing(&mut self) -> Result<bool> {
        match &self.tables {
            Some(tables) => {
                let colors = &self.colors;
                let all = &tables.supported[self.order.len()];
                self.budget.spend(all.len() as u64)?;
                Ok(!all.iter().any(|&idx| {
                    let p = &tables.elements[idx as usize];
                    (0..colors.len()).all(|x| colors[p.apply(x)] == colors[x])
                }))
            }
            None => Ok(color_preserving(self.g, &self.colors, self.budget)?.is_none()),
        }
    }
}

/// Largest order accepted by [`distinguishing_number_bruteforce`].
pub const BRUTEFORCE_MAX_N: usize = 10;

/// Reference computation: for `k = 1, 2, ...` tries every canonical
/// `k`-coloring against the full naive automorphism listing.
pub fn distinguishing_number_bruteforce(g: &Graph) -> Result<DistResult> {
    let n = g.order();
    if n > BRUTEFORCE_MAX_N {
        return Err(Error::GraphTooLarge {
            n,
            max: BRUTEFORCE_MAX_N,
        });
    }
    if n == 0 {
        return Ok(DistResult {
            value: 0,
            certificate: Coloring::new(Vec::new(), 0)?,
            lower_bound_witness: None,
        });
    }
    let nontrivial: Vec<Permutation> = naive_elements(g)
        .into_iter()
        .filter(|p| !p.is_identity())
        .collect();
    let preserved = |colors: &[usize]| {
        nontrivial
            .iter()
            .any(|p| (0..n).all(|x| colors[p.apply(x)] == colors[x]))
    };
    for k in 1..=n {
        // restricted growth strings with values in 1..=k
        let mut colors = vec![1usize; n];
        loop {
            if !preserved(&colors) {
                let certificate = Coloring::new(colors, k)?;
                let twins = twin_lower_bound(g);
                return Ok(DistResult {
                    value: k,
                    certificate,
                    lower_bound_witness: (k == twins && k > 1).then_some(twins),
                });
            }
            if !next_growth_string(&mut colors, k) {
                break;
            }
        }
    }
    unreachable!("giving every vertex its own color is distinguishing")
}

/// Advances a restricted growth string (`s[0] = 1`, `s[i] <= 1 + max(s[..i])`,
/// all values `<= k`) in lexicographic order.
fn next_growth_string(s: &mut [usize], k: usize) -> bool {
    let n = s.len();
    for i in (1..n).rev() {
        let prefix_max = s[..i].iter().copied().max().unwrap_or(0);
        if s[i] < k && s[i] <= prefix_max {
            s[i] += 1;
            s[i + 1..].iter_mut().for_each(|x| *x = 1);
            return true;
        }
    }
    false
}
