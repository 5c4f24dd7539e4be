//! Automorphism enumeration, orbits and color-preserving automorphism search.
//!
//! Everything is driven by one individualization-refinement search: branch on
//! the first smallest non-singleton cell of an equitable partition, fix its
//! lowest vertex on the left, and try every vertex of the matching cell on the
//! right. Refinement only ever separates vertices that differ in degree into
//! the current cells, so degree and neighborhood-degree-multiset invariants are
//! respected automatically.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::refine::{is_isomorphism, stabilizer_chain, Budget, Orbits, Partition, Searcher};

/// Limits for [`enumerate_automorphisms_with`] and [`group_summary`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AutConfig {
    pub max_n: usize,
    pub max_elements: usize,
}

impl Default for AutConfig {
    fn default() -> Self {
        AutConfig {
            max_n: 24,
            max_elements: 1_000_000,
        }
    }
}

/// The complete automorphism group of a graph, as a sorted list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutListing {
    n: usize,
    elements: Vec<Permutation>,
}

impl AutListing {
    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Elements in lexicographic order of their image vectors.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    /// Checks identity, inverses and closure under composition exhaustively.
    pub fn satisfies_group_axioms(&self) -> bool {
        self.contains(&Permutation::identity(self.n))
            && self.elements.iter().all(|p| self.contains(&p.inverse()))
            && self
                .elements
                .iter()
                .all(|p| self.elements.iter().all(|q| self.contains(&p.compose(q))))
    }
}

/// Generators, order and orbits of `Aut(G)` (or of a color-preserving subgroup).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSummary {
    pub order: u128,
    /// Generators in the order the search discovered them.
    pub generators: Vec<Permutation>,
    /// Orbits, each sorted, ordered by least member.
    pub orbits: Vec<Vec<usize>>,
}

impl GroupSummary {
    pub fn orbit_of(&self, v: usize) -> Option<&[usize]> {
        self.orbits
            .iter()
            .find(|o| o.binary_search(&v).is_ok())
            .map(Vec::as_slice)
    }
}

pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.len() != g.order() {
        return Err(Error::SizeMismatch {
            expected: g.order(),
            found: p.len(),
        });
    }
    Ok(is_isomorphism(g, g, p.image()))
}

fn check_order(g: &Graph, max: usize) -> Result<()> {
    if g.order() > max {
        Err(Error::GraphTooLarge { n: g.order(), max })
    } else {
        Ok(())
    }
}

/// Generators, order and orbits of the automorphisms of `g` that preserve
/// `coloring` (all automorphisms when `coloring` is `None`).
pub fn group_summary(g: &Graph, coloring: Option<&Coloring>) -> Result<GroupSummary> {
    check_order(g, AutConfig::default().max_n)?;
    let initial = initial_partition(g, coloring)?;
    let (generators, order) = stabilizer_chain(g, initial, &mut Budget::unlimited())?;
    let mut orbits = Orbits::new(g.order());
    generators.iter().for_each(|p| orbits.absorb(p));
    Ok(GroupSummary {
        order,
        generators,
        orbits: orbits.classes(),
    })
}

fn initial_partition(g: &Graph, coloring: Option<&Coloring>) -> Result<Partition> {
    match coloring {
        None => Ok(Partition::unit(g.order())),
        Some(c) if c.len() == g.order() => Ok(Partition::from_colors(c.colors())),
        Some(c) => Err(Error::SizeMismatch {
            expected: g.order(),
            found: c.len(),
        }),
    }
}

pub fn enumerate_automorphisms(g: &Graph) -> Result<AutListing> {
    enumerate_automorphisms_with(g, &AutConfig::default())
}

/// Lists `Aut(g)` in lexicographic order.
///
/// The group order is computed first (from a strong generating set), so an
/// oversized group is rejected with [`Error::GroupTooLarge`] before any
/// listing work.
pub fn enumerate_automorphisms_with(g: &Graph, config: &AutConfig) -> Result<AutListing> {
    check_order(g, config.max_n)?;
    let mut budget = Budget::unlimited();
    let (_, order) = stabilizer_chain(g, Partition::unit(g.order()), &mut budget)?;
    if order > config.max_elements as u128 {
        return Err(Error::GroupTooLarge {
            cap: config.max_elements,
        });
    }
    let elements = collect_all(g, Partition::unit(g.order()), &mut budget)?;
    debug_assert_eq!(elements.len() as u128, order);
    Ok(AutListing {
        n: g.order(),
        elements,
    })
}

pub(crate) fn collect_all(
    g: &Graph,
    initial: Partition,
    budget: &mut Budget,
) -> Result<Vec<Permutation>> {
    let mut searcher = Searcher::new(g, g, budget);
    let Some((lp, rp)) = searcher.start(initial.clone(), initial)? else {
        unreachable!("a partition is always compatible with itself");
    };
    let mut elements = Vec::new();
    let _ = searcher.descend(&lp, &rp, &mut |map| {
        elements.push(Permutation::from_image_unchecked(map.to_vec()));
        ControlFlow::Continue(())
    })?;
    elements.sort_unstable();
    Ok(elements)
}

/// Largest order accepted by [`enumerate_automorphisms_naive`].
pub const NAIVE_MAX_N: usize = 9;

/// Every automorphism of `g` by exhaustive filtering, without a size check.
pub(crate) fn naive_elements(g: &Graph) -> Vec<Permutation> {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut elements = Vec::new();
    loop {
        if is_isomorphism(g, g, &perm) {
            elements.push(Permutation::from_image_unchecked(perm.clone()));
        }
        if !next_permutation(&mut perm) {
            return elements;
        }
    }
}

/// Reference listing: filters all `n!` permutations (in lexicographic order).
pub fn enumerate_automorphisms_naive(g: &Graph) -> Result<AutListing> {
    check_order(g, NAIVE_MAX_N)?;
    Ok(AutListing {
        n: g.order(),
        elements: naive_elements(g),
    })
}

pub(crate) fn next_permutation(xs: &mut [usize]) -> bool {
    let Some(i) = xs.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = xs
        .iter()
        .rposition(|&x| x > xs[i])
        .expect("exists since xs[i] < xs[i + 1]");
    xs.swap(i, j);
    xs[i + 1..].reverse();
    true
}

/// `{ phi(v) : phi in Aut(g) }`, sorted. Uses orbit union-find over a
/// generating set, never the full listing.
pub fn orbit_of(g: &Graph, v: usize) -> Result<Vec<usize>> {
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            n: g.order(),
        });
    }
    let summary = group_summary(g, None)?;
    Ok(summary
        .orbit_of(v)
        .expect("orbits cover every vertex")
        .to_vec())
}

/// A nontrivial automorphism of `g` preserving every color class of `c`, if
/// one exists.
///
/// # Panics
///
/// If `c` does not color exactly the vertices of `g`.
pub fn search_color_preserving(g: &Graph, c: &Coloring) -> Option<Permutation> {
    assert_eq!(c.len(), g.order(), "coloring must cover every vertex");
    color_preserving(g, c.colors(), &mut Budget::unlimited())
        .expect("an unlimited budget cannot be exceeded")
}

/// Nontrivial automorphism preserving the classes of the raw color vector.
pub(crate) fn color_preserving(
    g: &Graph,
    colors: &[usize],
    budget: &mut Budget,
) -> Result<Option<Permutation>> {
    let initial = Partition::from_colors(colors);
    let mut searcher = Searcher::new(g, g, budget);
    let Some((lp, rp)) = searcher.start(initial.clone(), initial)? else {
        unreachable!("a partition is always compatible with itself");
    };
    if lp.is_discrete() {
        return Ok(None);
    }
    let mut found = None;
    let _ = searcher.descend(&lp, &rp, &mut |map| {
        if map.iter().enumerate().any(|(i, &x)| i != x) {
            found = Some(Permutation::from_image_unchecked(map.to_vec()));
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// An isomorphism from `left` onto `right` (as the image of each vertex of
/// `left`), if the graphs are isomorphic.
pub fn find_isomorphism(left: &Graph, right: &Graph) -> Option<Permutation> {
    if left.order() != right.order() || left.edge_count() != right.edge_count() {
        return None;
    }
    let mut budget = Budget::unlimited();
    let mut searcher = Searcher::new(left, right, &mut budget);
    let n = left.order();
    let (lp, rp) = searcher
        .start(Partition::unit(n), Partition::unit(n))
        .ok()??;
    searcher
        .first(&lp, &rp)
        .ok()?
        .map(Permutation::from_image_unchecked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mycielskian::build_mycielskian;
    use alloc::vec;

    #[test]
    fn is_automorphism_examples() {
        let k3 = Graph::complete(3);
        let mut perm = vec![0, 1, 2];
        loop {
            assert!(is_automorphism(&k3, &Permutation::new(perm.clone()).unwrap()).unwrap());
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let p3 = Graph::path(3);
        assert!(is_automorphism(&p3, &Permutation::from_cycles(3, &[&[0, 2]]).unwrap()).unwrap());
        assert!(!is_automorphism(&p3, &Permutation::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap());
        assert_eq!(
            is_automorphism(&p3, &Permutation::identity(2)),
            Err(Error::SizeMismatch {
                expected: 3,
                found: 2
            })
        );
    }

    #[test]
    fn group_sizes() {
        assert_eq!(
            enumerate_automorphisms(&Graph::complete(3)).unwrap().len(),
            6
        );
        assert_eq!(enumerate_automorphisms(&Graph::cycle(5)).unwrap().len(), 10);
        assert_eq!(
            enumerate_automorphisms_naive(&Graph::cycle(5))
                .unwrap()
                .len(),
            10
        );
        assert_eq!(
            enumerate_automorphisms_naive(&Graph::complete(2))
                .unwrap()
                .len(),
            2
        );
        assert_eq!(
            enumerate_automorphisms_naive(&Graph::empty(1))
                .unwrap()
                .len(),
            1
        );
        assert_eq!(enumerate_automorphisms(&Graph::empty(0)).unwrap().len(), 1);
    }

    #[test]
    fn limits() {
        assert_eq!(
            enumerate_automorphisms_naive(&Graph::empty(10)),
            Err(Error::GraphTooLarge { n: 10, max: 9 })
        );
        let cfg = AutConfig {
            max_n: 24,
            max_elements: 100,
        };
        assert_eq!(
            enumerate_automorphisms_with(&Graph::empty(6), &cfg),
            Err(Error::GroupTooLarge { cap: 100 })
        );
        // Aut(mu_2 of the edgeless graph on 6 vertices) has 12! * 6! elements
        let (h, _) = build_mycielskian(&Graph::empty(6), 2).unwrap();
        assert_eq!(
            enumerate_automorphisms(&h),
            Err(Error::GroupTooLarge { cap: 1_000_000 })
        );
        assert_eq!(group_summary(&h, None).unwrap().order, 479_001_600 * 720);
    }

    #[test]
    fn root_moves_to_center_shadow_in_star_mycielskian() {
        let (h, layout) = build_mycielskian(&Graph::star(3), 1).unwrap();
        let w = layout.root();
        let u4 = layout.vertex(3, 1);
        let listing = enumerate_automorphisms(&h).unwrap();
        assert!(listing.elements().iter().any(|p| p.apply(w) == u4));
        assert_eq!(orbit_of(&h, w).unwrap(), vec![u4, w]);
    }

    #[test]
    fn root_orbits() {
        for t in 1..=2 {
            let (h, layout) = build_mycielskian(&Graph::complete(2), t).unwrap();
            assert_eq!(orbit_of(&h, layout.root()).unwrap().len(), h.order());
        }
        let (h, layout) = build_mycielskian(&Graph::complete(3), 1).unwrap();
        assert_eq!(orbit_of(&h, layout.root()).unwrap(), vec![layout.root()]);
    }

    #[test]
    fn color_preserving_examples() {
        let c5 = Graph::cycle(5);
        let p = search_color_preserving(&c5, &Coloring::constant(5)).unwrap();
        assert!(!p.is_identity() && is_automorphism(&c5, &p).unwrap());
        let k3 = Graph::complete(3);
        assert!(
            search_color_preserving(&k3, &Coloring::from_colors(vec![1, 2, 3]).unwrap()).is_none()
        );
        // red (2) on u_2^0 and u_3^1 of mu(K_3)
        let (h, layout) = build_mycielskian(&k3, 1).unwrap();
        let mut colors = vec![1; h.order()];
        colors[layout.vertex(1, 0)] = 2;
        colors[layout.vertex(2, 1)] = 2;
        assert!(search_color_preserving(&h, &Coloring::from_colors(colors).unwrap()).is_none());
    }

    #[test]
    fn isomorphism_helper() {
        let (h, _) = build_mycielskian(&Graph::complete(2), 1).unwrap();
        let iso = find_isomorphism(&h, &Graph::cycle(5)).unwrap();
        assert!(is_isomorphism(&h, &Graph::cycle(5), iso.image()));
        assert!(find_isomorphism(&Graph::path(5), &Graph::cycle(5)).is_none());
        assert!(find_isomorphism(
            &Graph::cycle(6),
            &Graph::cycle(3).disjoint_union(&Graph::cycle(3))
        )
        .is_none());
    }
}
