//! Ordered partitions, equitable refinement and the individualization search
//! shared by the automorphism and distinguishing modules.
//!
//! Refinement splits every cell by the multiset of cell indices of each
//! vertex's neighbors, keeping the split pieces (ordered by that signature) in
//! the position of the parent cell, and repeats until nothing splits. The
//! result depends only on the graph and the ordered partition, so an
//! isomorphism carrying one ordered partition to another carries the refined
//! partitions onto each other cell by cell.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;

/// Step counter shared by every search in one top-level call.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Budget {
        Budget { limit, used: 0 }
    }

    pub(crate) fn unlimited() -> Budget {
        Budget::new(u64::MAX)
    }

    #[inline]
    pub(crate) fn spend(&mut self, steps: u64) -> Result<()> {
        self.used = self.used.saturating_add(steps);
        if self.used > self.limit {
            Err(Error::SearchBudgetExceeded { budget: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Ordered partition of `0..n`; each cell is kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Partition {
    cells: Vec<Vec<usize>>,
    cell_of: Vec<usize>,
}

impl Partition {
    /// Cells are the color classes, in increasing color order.
    pub(crate) fn from_colors(colors: &[usize]) -> Partition {
        let mut keyed: Vec<(usize, usize)> = colors.iter().copied().zip(0..).collect();
        keyed.sort_unstable();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        let mut last = None;
        for (c, v) in keyed {
            if last != Some(c) {
                cells.push(Vec::new());
                last = Some(c);
            }
            cells.last_mut().expect("pushed").push(v);
        }
        Partition::from_cells(colors.len(), cells)
    }

    pub(crate) fn unit(n: usize) -> Partition {
        Partition::from_colors(&vec![0; n])
    }

    fn from_cells(n: usize, cells: Vec<Vec<usize>>) -> Partition {
        let mut cell_of = vec![0; n];
        for (idx, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = idx;
            }
        }
        Partition { cells, cell_of }
    }

    #[cfg(test)]
    pub(crate) fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub(crate) fn is_discrete(&self) -> bool {
        self.cells.len() == self.cell_of.len()
    }

    /// First smallest non-singleton cell.
    pub(crate) fn target_cell(&self) -> Option<usize> {
        self.cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(idx, c)| (c.len(), *idx))
            .map(|(idx, _)| idx)
    }

    /// Splits `v` off its cell as a singleton placed in front of the rest.
    pub(crate) fn individualize(&self, v: usize) -> Partition {
        let idx = self.cell_of[v];
        let mut cells = Vec::with_capacity(self.cells.len() + 1);
        cells.extend_from_slice(&self.cells[..idx]);
        cells.push(vec![v]);
        cells.push(
            self.cells[idx]
                .iter()
                .copied()
                .filter(|&x| x != v)
                .collect(),
        );
        cells.extend_from_slice(&self.cells[idx + 1..]);
        Partition::from_cells(self.cell_of.len(), cells)
    }

    /// Refines to the coarsest equitable partition below `self`.
    pub(crate) fn refine(&mut self, g: &Graph, budget: &mut Budget) -> Result<()> {
        let n = self.cell_of.len();
        let cost = (n + 2 * g.edge_count()) as u64 + 1;
        loop {
            budget.spend(cost)?;
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
            let mut split = false;
            for cell in &self.cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(Vec<usize>, usize)> = cell
                    .iter()
                    .map(|&v| {
                        let mut sig: Vec<usize> =
                            g.neighbors(v).iter().map(|&u| self.cell_of[u]).collect();
                        sig.sort_unstable();
                        (sig, v)
                    })
                    .collect();
                keyed.sort_unstable();
                let before = next.len();
                let mut prev: Option<&Vec<usize>> = None;
                for (sig, v) in &keyed {
                    if prev != Some(sig) {
                        next.push(Vec::new());
                        prev = Some(sig);
                    }
                    next.last_mut().expect("pushed").push(*v);
                }
                split |= next.len() - before > 1;
            }
            *self = Partition::from_cells(n, next);
            if !split {
                return Ok(());
            }
        }
    }

    /// Cell sizes plus the quotient row of each cell. Two refined partitions
    /// related by an isomorphism have equal invariants.
    pub(crate) fn invariant(&self, g: &Graph) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.cells.len() * 2);
        for cell in &self.cells {
            out.push(cell.len());
            let mut sig: Vec<usize> = g
                .neighbors(cell[0])
                .iter()
                .map(|&u| self.cell_of[u])
                .collect();
            sig.sort_unstable();
            out.push(usize::MAX);
            out.extend(sig);
        }
        out
    }

    /// For a discrete pair, the map sending `left`'s i-th cell to `right`'s.
    fn leaf_map(&self, right: &Partition) -> Vec<usize> {
        let mut map = vec![0; self.cell_of.len()];
        for (l, r) in self.cells.iter().zip(&right.cells) {
            map[l[0]] = r[0];
        }
        map
    }
}

/// True iff `map` is an isomorphism from `left` onto `right`.
pub(crate) fn is_isomorphism(left: &Graph, right: &Graph, map: &[usize]) -> bool {
    left.order() == right.order()
        && left.edge_count() == right.edge_count()
        && left.edges().all(|(u, v)| right.has_edge(map[u], map[v]))
}

/// Individualization-refinement search for isomorphisms `left -> right` that
/// respect two ordered partitions.
pub(crate) struct Searcher<'a> {
    left: &'a Graph,
    right: &'a Graph,
    budget: &'a mut Budget,
}

type Visit<'v> = dyn FnMut(&[usize]) -> ControlFlow<()> + 'v;

impl<'a> Searcher<'a> {
    pub(crate) fn new(left: &'a Graph, right: &'a Graph, budget: &'a mut Budget) -> Self {
        Searcher {
            left,
            right,
            budget,
        }
    }

    /// Refines both initial partitions and returns them if they are compatible.
    pub(crate) fn start(
        &mut self,
        mut lp: Partition,
        mut rp: Partition,
    ) -> Result<Option<(Partition, Partition)>> {
        let sizes = |p: &Partition| p.cells.iter().map(Vec::len).collect::<Vec<_>>();
        if lp.cell_of.len() != rp.cell_of.len() || sizes(&lp) != sizes(&rp) {
            return Ok(None);
        }
        lp.refine(self.left, self.budget)?;
        rp.refine(self.right, self.budget)?;
        if lp.invariant(self.left) != rp.invariant(self.right) {
            return Ok(None);
        }
        Ok(Some((lp, rp)))
    }

    /// Visits every isomorphism below the (refined, compatible) node
    /// `(lp, rp)`, in increasing order of the right-hand branching choices.
    pub(crate) fn descend(
        &mut self,
        lp: &Partition,
        rp: &Partition,
        visit: &mut Visit<'_>,
    ) -> Result<ControlFlow<()>> {
        self.budget.spend(1)?;
        let Some(target) = lp.target_cell() else {
            let map = lp.leaf_map(rp);
            if is_isomorphism(self.left, self.right, &map) {
                return Ok(visit(&map));
            }
            return Ok(ControlFlow::Continue(()));
        };
        let a = lp.cells[target][0];
        let mut lchild = lp.individualize(a);
        lchild.refine(self.left, self.budget)?;
        let linv = lchild.invariant(self.left);
        for &b in &rp.cells[target] {
            let mut rchild = rp.individualize(b);
            rchild.refine(self.right, self.budget)?;
            if rchild.invariant(self.right) != linv {
                continue;
            }
            if self.descend(&lchild, &rchild, visit)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    /// First isomorphism below `(lp, rp)`, if any.
    pub(crate) fn first(&mut self, lp: &Partition, rp: &Partition) -> Result<Option<Vec<usize>>> {
        let mut found = None;
        let _ = self.descend(lp, rp, &mut |map| {
            found = Some(map.to_vec());
            ControlFlow::Break(())
        })?;
        Ok(found)
    }
}

/// Union-find over `0..n` used for orbit bookkeeping.
pub(crate) struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    pub(crate) fn new(n: usize) -> Orbits {
        Orbits {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }

    pub(crate) fn absorb(&mut self, p: &Permutation) {
        for (x, &y) in p.image().iter().enumerate() {
            self.union(x, y);
        }
    }

    /// Orbits as sorted classes ordered by least member.
    pub(crate) fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut by_root: Vec<Vec<usize>> = vec![Vec::new(); n];
        for v in 0..n {
            let r = self.find(v);
            by_root[r].push(v);
        }
        by_root.into_iter().filter(|c| !c.is_empty()).collect()
    }
}

/// Strong generators and group order for the automorphisms of `g` that
/// preserve the ordered partition `initial`, found along the leftmost path
/// of the search tree.
pub(crate) fn stabilizer_chain(
    g: &Graph,
    initial: Partition,
    budget: &mut Budget,
) -> Result<(Vec<Permutation>, u128)> {
    let mut searcher = Searcher::new(g, g, budget);
    let Some((lp, _)) = searcher.start(initial.clone(), initial)? else {
        unreachable!("a partition is always compatible with itself");
    };
    let mut gens = Vec::new();
    let order = chain_level(&mut searcher, g.order(), &lp, &mut gens)?;
    Ok((gens, order))
}

fn chain_level(
    searcher: &mut Searcher<'_>,
    n: usize,
    node: &Partition,
    gens: &mut Vec<Permutation>,
) -> Result<u128> {
    let Some(target) = node.target_cell() else {
        return Ok(1);
    };
    let a = node.cells[target][0];
    let mut child = node.individualize(a);
    child.refine(searcher.left, searcher.budget)?;
    let below = chain_level(searcher, n, &child, gens)?;
    // every generator found so far fixes the individualized prefix
    for &b in &node.cells[target][1..] {
        let mut orbits = Orbits::new(n);
        gens.iter().for_each(|p| orbits.absorb(p));
        if orbits.find(a) == orbits.find(b) {
            continue;
        }
        let mut rchild = node.individualize(b);
        rchild.refine(searcher.right, searcher.budget)?;
        if rchild.invariant(searcher.right) != child.invariant(searcher.left) {
            continue;
        }
        if let Some(map) = searcher.first(&child, &rchild)? {
            gens.push(Permutation::from_image_unchecked(map));
        }
    }
    let mut orbits = Orbits::new(n);
    gens.iter().for_each(|p| orbits.absorb(p));
    let root = orbits.find(a);
    let orbit_len = node.cells[target]
        .iter()
        .filter(|&&b| orbits.find(b) == root)
        .count();
    Ok(below * orbit_len as u128)
}
