//! The generalized Mycielskian `mu_t(G)`.
//!
//! Vertex `u_i^s` (source vertex `i`, level `s`, `0 <= s <= t`) gets id
//! `s * n + i`; the root gets id `(t + 1) * n`. Level 0 is an identical copy of
//! `G`. Every source edge `ij` also produces the cross edges
//! `u_i^s u_j^{s+1}` and `u_j^s u_i^{s+1}` for `0 <= s < t`, and the root is
//! adjacent to exactly the level-`t` vertices.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// `v_i = u_i^0`.
    Original(usize),
    /// `u_i^level` with `1 <= level <= t`.
    Shadow {
        i: usize,
        level: usize,
    },
    Root,
}

impl Role {
    pub fn level(self, t: usize) -> usize {
        match self {
            Role::Original(_) => 0,
            Role::Shadow { level, .. } => level,
            Role::Root => t + 1,
        }
    }

    pub fn source(self) -> Option<usize> {
        match self {
            Role::Original(i) | Role::Shadow { i, .. } => Some(i),
            Role::Root => None,
        }
    }
}

/// Role of every vertex of a constructed `mu_t(G)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MycLayout {
    n: usize,
    t: usize,
    roles: Vec<Role>,
}

impl MycLayout {
    fn new(n: usize, t: usize) -> MycLayout {
        let mut roles = Vec::with_capacity((t + 1) * n + 1);
        for s in 0..=t {
            for i in 0..n {
                roles.push(if s == 0 {
                    Role::Original(i)
                } else {
                    Role::Shadow { i, level: s }
                });
            }
        }
        roles.push(Role::Root);
        MycLayout { n, t, roles }
    }

    /// Order of the source graph.
    pub fn source_order(&self) -> usize {
        self.n
    }

    pub fn levels(&self) -> usize {
        self.t
    }

    pub fn order(&self) -> usize {
        self.roles.len()
    }

    pub fn roles(&self) -> &[Role] {
        &self.roles
    }

    pub fn role(&self, v: usize) -> Role {
        self.roles[v]
    }

    pub fn root(&self) -> usize {
        (self.t + 1) * self.n
    }

    /// Id of `u_i^level`.
    pub fn vertex(&self, i: usize, level: usize) -> usize {
        assert!(i < self.n && level <= self.t, "u_{i}^{level} out of range");
        level * self.n + i
    }

    /// Vertices at `level`, in source order.
    pub fn level_vertices(&self, level: usize) -> Vec<usize> {
        (0..self.n).map(|i| self.vertex(i, level)).collect()
    }

    /// The isolated vertices of `mu_t(G)`: copies of the isolates of `g` at
    /// levels `0..t`, ordered by (level, source index). These are mutual twins.
    pub fn isolated_twins(&self, g: &Graph) -> Vec<usize> {
        let isolates = g.isolated_vertices();
        (0..self.t)
            .flat_map(|s| isolates.iter().map(move |&i| s * self.n + i))
            .collect()
    }

    /// Level-`t` shadows of the isolates of `g` (the degree-1 neighbors of the root).
    pub fn top_isolate_shadows(&self, g: &Graph) -> Vec<usize> {
        g.isolated_vertices()
            .into_iter()
            .map(|i| self.vertex(i, self.t))
            .collect()
    }

    /// Level-`s` copies of the non-isolated vertices of `g`.
    pub fn non_isolate_level(&self, g: &Graph, level: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&i| !g.neighbors(i).is_empty())
            .map(|i| self.vertex(i, level))
            .collect()
    }
}

/// Builds `mu_t(g)` and its layout.
pub fn build_mycielskian(g: &Graph, t: usize) -> Result<(Graph, MycLayout)> {
    let n = g.order();
    if n == 0 {
        return Err(Error::EmptySource);
    }
    if t == 0 {
        return Err(Error::InvalidT(t));
    }
    let layout = MycLayout::new(n, t);
    let order = layout.order();
    let mut matrix = vec![false; order * order];
    let mut join = |a: usize, b: usize| {
        matrix[a * order + b] = true;
        matrix[b * order + a] = true;
    };
    for (i, j) in g.edges() {
        join(i, j);
        for s in 0..t {
            join(s * n + i, (s + 1) * n + j);
            join(s * n + j, (s + 1) * n + i);
        }
    }
    let root = layout.root();
    for i in 0..n {
        join(t * n + i, root);
    }
    Ok((Graph::from_matrix(order, matrix), layout))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Fact {
    /// `|mu_t(G)| = (t+1) n + 1`
    Order,
    /// `d(w) = n`
    RootDegree,
    /// `d(u_i^s) = 2 d_G(v_i)` for `0 <= s < t`
    LowerLevelDegree,
    /// `d(u_i^t) = d_G(v_i) + 1`
    TopLevelDegree,
    /// each level `s >= 1` is an independent set
    ShadowLevelsIndependent,
    /// `N(u_i^t) \ {w}` is the level-`(t-1)` copy of `N_G(v_i)`
    TopShadowNeighborhood,
}

impl Fact {
    pub const ALL: [Fact; 6] = [
        Fact::Order,
        Fact::RootDegree,
        Fact::LowerLevelDegree,
        Fact::TopLevelDegree,
        Fact::ShadowLevelsIndependent,
        Fact::TopShadowNeighborhood,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fact::Order => "order",
            Fact::RootDegree => "root_degree",
            Fact::LowerLevelDegree => "lower_level_degree",
            Fact::TopLevelDegree => "top_level_degree",
            Fact::ShadowLevelsIndependent => "shadow_levels_independent",
            Fact::TopShadowNeighborhood => "top_shadow_neighborhood",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactCheck {
    pub fact: Fact,
    pub passed: bool,
    /// Description of the first counterexample.
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactReport {
    pub checks: Vec<FactCheck>,
}

impl FactReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, fact: Fact) -> Option<&FactCheck> {
        self.checks.iter().find(|c| c.fact == fact)
    }
}

fn check_layout(g: &Graph, t: usize, h: &Graph, layout: &MycLayout) -> Result<()> {
    let n = g.order();
    if layout.n != n || layout.t != t {
        return Err(Error::LayoutMismatch(format!(
            "layout is for n = {}, t = {}; expected n = {n}, t = {t}",
            layout.n, layout.t
        )));
    }
    if layout.order() != h.order() {
        return Err(Error::LayoutMismatch(format!(
            "layout has {} vertices, graph has {}",
            layout.order(),
            h.order()
        )));
    }
    if *layout != MycLayout::new(n, t) {
        return Err(Error::LayoutMismatch(
            "roles do not follow the id scheme".into(),
        ));
    }
    Ok(())
}

/// Checks the structural facts of `mu_t(G)` on a built graph.
pub fn validate_facts(g: &Graph, t: usize, h: &Graph, layout: &MycLayout) -> Result<FactReport> {
    check_layout(g, t, h, layout)?;
    let n = g.order();
    let root = layout.root();
    let mut checks = Vec::new();
    let mut push = |fact: Fact, witness: Option<String>| {
        checks.push(FactCheck {
            fact,
            passed: witness.is_none(),
            witness,
        });
    };

    let expected_order = (t + 1) * n + 1;
    push(
        Fact::Order,
        (h.order() != expected_order).then(|| format!("order {} != {expected_order}", h.order())),
    );

    let root_degree = h.neighbors(root).len();
    push(
        Fact::RootDegree,
        (root_degree != n).then(|| format!("d(w) = {root_degree} != {n}")),
    );

    let lower = (0..t)
        .flat_map(|s| (0..n).map(move |i| (s, i)))
        .find_map(|(s, i)| {
            let d = h.neighbors(layout.vertex(i, s)).len();
            let want = 2 * g.neighbors(i).len();
            (d != want).then(|| format!("d(u_{i}^{s}) = {d} != {want}"))
        });
    push(Fact::LowerLevelDegree, lower);

    let top = (0..n).find_map(|i| {
        let d = h.neighbors(layout.vertex(i, t)).len();
        let want = g.neighbors(i).len() + 1;
        (d != want).then(|| format!("d(u_{i}^{t}) = {d} != {want}"))
    });
    push(Fact::TopLevelDegree, top);

    let independent = (1..=t).find_map(|s| {
        let level = layout.level_vertices(s);
        level.iter().enumerate().find_map(|(a, &x)| {
            level[a + 1..]
                .iter()
                .find(|&&y| h.has_edge(x, y))
                .map(|&y| format!("edge {x}-{y} inside level {s}"))
        })
    });
    push(Fact::ShadowLevelsIndependent, independent);

    let neighborhood = (0..n).find_map(|i| {
        let mut got: Vec<usize> = h
            .neighbors(layout.vertex(i, t))
            .iter()
            .copied()
            .filter(|&x| x != root)
            .collect();
        got.sort_unstable();
        let want: Vec<usize> = g
            .neighbors(i)
            .iter()
            .map(|&j| layout.vertex(j, t - 1))
            .collect();
        (got != want).then(|| format!("N(u_{i}^{t}) \\ {{w}} = {got:?}, expected {want:?}"))
    });
    push(Fact::TopShadowNeighborhood, neighborhood);

    Ok(FactReport { checks })
}
