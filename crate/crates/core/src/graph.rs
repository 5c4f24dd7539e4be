//! Simple undirected graphs on dense vertex ids `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An immutable simple undirected graph.
///
/// Adjacency is kept twice: as sorted neighbor lists for iteration and as a
/// dense matrix for constant-time edge queries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Multiset of the degrees of a vertex's neighbors, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NeighborhoodDegreeMultiset(Vec<usize>);

impl NeighborhoodDegreeMultiset {
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable();
        NeighborhoodDegreeMultiset(degrees)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Result of [`Graph::classify_star`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarShape {
    NotStar,
    /// `K_{1,m}` with the given center. For `K_2` the lower id is reported.
    Star {
        m: usize,
        center: usize,
    },
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut matrix = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(alloc::format!(
                    "edge {u}-{v} out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(alloc::format!("self-loop at {u}")));
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        Ok(Self::from_matrix(n, matrix))
    }

    pub(crate) fn from_matrix(n: usize, matrix: Vec<bool>) -> Graph {
        debug_assert_eq!(matrix.len(), n * n);
        let adjacency = (0..n)
            .map(|u| (0..n).filter(|&v| matrix[u * n + v]).collect())
            .collect();
        Graph { adjacency, matrix }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Graph {
        Self::from_matrix(n, vec![false; n * n])
    }

    pub fn complete(n: usize) -> Graph {
        let matrix = (0..n * n).map(|x| x / n != x % n).collect();
        Self::from_matrix(n, matrix)
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::from_edges(n, &edges).expect("valid cycle")
    }

    /// The path `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_edges(n, &edges).expect("valid path")
    }

    /// `K_{1,m}` with leaves `0..m` and the center last (id `m`).
    pub fn star(m: usize) -> Graph {
        let edges: Vec<_> = (0..m).map(|i| (i, m)).collect();
        Self::from_edges(m + 1, &edges).expect("valid star")
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        let edges: Vec<_> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_edges(shift + other.order(), &edges).expect("valid union")
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let n = self.order();
        u < n && v < n && self.matrix[u * n + v]
    }

    /// Sorted neighbor list. Panics if `v` is out of range.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.order(),
            })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn neighborhood_degree_multiset(&self, v: usize) -> Result<NeighborhoodDegreeMultiset> {
        self.check_vertex(v)?;
        Ok(NeighborhoodDegreeMultiset::new(
            self.adjacency[v]
                .iter()
                .map(|&u| self.adjacency[u].len())
                .collect(),
        ))
    }

    /// Classes of vertices with identical open neighborhoods, each sorted,
    /// ordered by least member. Singletons are included.
    pub fn twin_classes(&self) -> Vec<Vec<usize>> {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        'outer: for v in 0..self.order() {
            for class in classes.iter_mut() {
                if self.adjacency[class[0]] == self.adjacency[v] {
                    class.push(v);
                    continue 'outer;
                }
            }
            classes.push(vec![v]);
        }
        classes
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.order())
            .filter(|&v| self.adjacency[v].is_empty())
            .collect()
    }

    /// Connected components, each sorted, ordered by least member.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut component = vec![start];
            let mut stack = vec![start];
            while let Some(u) = stack.pop() {
                for &v in &self.adjacency[u] {
                    if !seen[v] {
                        seen[v] = true;
                        component.push(v);
                        stack.push(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Articulation points (Hopcroft-Tarjan low-link), ascending.
    pub fn cut_vertices(&self) -> Vec<usize> {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut is_cut = vec![false; n];
        let mut timer = 0;
        // frames: (vertex, parent, next neighbor index, child count)
        let mut stack: Vec<(usize, usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0, 0));
            while let Some(frame) = stack.last_mut() {
                let (u, parent, idx, _) = *frame;
                if idx < self.adjacency[u].len() {
                    frame.2 += 1;
                    let v = self.adjacency[u][idx];
                    if disc[v] == usize::MAX {
                        frame.3 += 1;
                        disc[v] = timer;
                        low[v] = timer;
                        timer += 1;
                        stack.push((v, u, 0, 0));
                    } else if v != parent {
                        low[u] = low[u].min(disc[v]);
                    }
                } else {
                    let (_, _, _, children) = stack.pop().expect("non-empty");
                    if parent == usize::MAX {
                        if children >= 2 {
                            is_cut[u] = true;
                        }
                    } else {
                        low[parent] = low[parent].min(low[u]);
                        let grandparent = stack.last().map(|f| f.1).unwrap_or(usize::MAX);
                        if grandparent != usize::MAX && low[u] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
        }
        (0..n).filter(|&v| is_cut[v]).collect()
    }

    /// Recognizes `K_{1,m}`. `K_1` is `Star { m: 0 }`.
    pub fn classify_star(&self) -> StarShape {
        let n = self.order();
        match n {
            0 => StarShape::NotStar,
            1 => StarShape::Star { m: 0, center: 0 },
            _ => {
                let m = n - 1;
                if self.edge_count() != m {
                    return StarShape::NotStar;
                }
                match (0..n).find(|&v| self.adjacency[v].len() == m) {
                    Some(center) => StarShape::Star { m, center },
                    None => StarShape::NotStar,
                }
            }
        }
    }

    /// BFS distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for &v in &self.adjacency[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Subgraph induced on `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let k = vertices.len();
        let mut matrix = vec![false; k * k];
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate() {
                matrix[a * k + b] = self.has_edge(u, v);
            }
        }
        Self::from_matrix(k, matrix)
    }

    /// `self` relabeled so that vertex `v` becomes `image[v]`.
    pub fn relabel(&self, image: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().map(|(u, v)| (image[u], image[v])).collect();
        Self::from_edges(self.order(), &edges).expect("relabel by a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k13() -> Graph {
        // leaves 0..2, center 3
        Graph::star(3)
    }

    #[test]
    fn degrees() {
        assert_eq!(Graph::complete(3).degree(0), Ok(2));
        assert_eq!(k13().degree(3), Ok(3));
        assert_eq!(Graph::empty(1).degree(0), Ok(0));
        assert_eq!(
            Graph::empty(1).degree(1),
            Err(Error::VertexOutOfRange { vertex: 1, n: 1 })
        );
    }

    #[test]
    fn neighborhood_degrees() {
        assert_eq!(
            Graph::complete(3)
                .neighborhood_degree_multiset(1)
                .unwrap()
                .entries(),
            &[2, 2]
        );
        assert_eq!(
            Graph::path(3)
                .neighborhood_degree_multiset(1)
                .unwrap()
                .entries(),
            &[1, 1]
        );
    }

    #[test]
    fn twins() {
        assert_eq!(k13().twin_classes(), vec![vec![0, 1, 2], vec![3]]);
        assert_eq!(
            Graph::complete(3).twin_classes(),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn cut_vertices_small() {
        assert_eq!(Graph::path(3).cut_vertices(), vec![1]);
        assert!(Graph::cycle(5).cut_vertices().is_empty());
        assert_eq!(Graph::path(5).cut_vertices(), vec![1, 2, 3]);
        assert!(Graph::complete(2).cut_vertices().is_empty());
    }

    #[test]
    fn stars() {
        assert_eq!(k13().classify_star(), StarShape::Star { m: 3, center: 3 });
        assert_eq!(Graph::complete(3).classify_star(), StarShape::NotStar);
        assert_eq!(
            Graph::empty(1).classify_star(),
            StarShape::Star { m: 0, center: 0 }
        );
        assert_eq!(
            Graph::complete(2).classify_star(),
            StarShape::Star { m: 1, center: 0 }
        );
        assert_eq!(Graph::empty(0).classify_star(), StarShape::NotStar);
        // two isolated vertices: 2 vertices, 0 edges
        assert_eq!(Graph::empty(2).classify_star(), StarShape::NotStar);
        // P_3 is K_{1,2}
        assert_eq!(
            Graph::path(3).classify_star(),
            StarShape::Star { m: 2, center: 1 }
        );
    }

    #[test]
    fn isolated_and_components() {
        let g = Graph::empty(1).disjoint_union(&Graph::complete(2));
        assert_eq!(g.isolated_vertices(), vec![0]);
        assert_eq!(g.connected_components(), vec![vec![0], vec![1, 2]]);
        assert!(Graph::complete(3).isolated_vertices().is_empty());
        assert_eq!(Graph::empty(4).isolated_vertices(), vec![0, 1, 2, 3]);
        assert_eq!(Graph::cycle(5).connected_components().len(), 1);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 0)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::InvalidGraph(_))
        ));
    }
}
