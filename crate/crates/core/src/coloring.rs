//! Vertex colorings with colors `1..=k`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    k: usize,
    colors: Vec<usize>,
}

impl Coloring {
    /// A coloring with palette `1..=k`. Every color must lie in the palette;
    /// `k` may exceed the number of colors actually used.
    pub fn new(colors: Vec<usize>, k: usize) -> Result<Coloring> {
        if let Some((v, &c)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(Error::InvalidColoring(format!(
                "vertex {v} has color {c} outside 1..={k}"
            )));
        }
        if k == 0 && !colors.is_empty() {
            return Err(Error::InvalidColoring("empty palette".into()));
        }
        Ok(Coloring { k, colors })
    }

    /// Palette size taken as the largest color present.
    pub fn from_colors(colors: Vec<usize>) -> Result<Coloring> {
        let k = colors.iter().copied().max().unwrap_or(0);
        Coloring::new(colors, k)
    }

    pub fn constant(n: usize) -> Coloring {
        Coloring {
            k: 1,
            colors: vec![1; n],
        }
    }

    pub fn palette_size(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors actually used.
    pub fn distinct_colors(&self) -> usize {
        let mut used = vec![false; self.k + 1];
        self.colors
            .iter()
            .filter(|&&c| !core::mem::replace(&mut used[c], true))
            .count()
    }

    /// Color classes `C_1..C_k` (some possibly empty).
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c - 1].push(v);
        }
        classes
    }

    /// Colors renamed by first occurrence in vertex order; the palette shrinks
    /// to the colors used.
    pub fn canonical(&self) -> Coloring {
        let mut rename = vec![0; self.k + 1];
        let mut next = 0;
        let colors = self
            .colors
            .iter()
            .map(|&c| {
                if rename[c] == 0 {
                    next += 1;
                    rename[c] = next;
                }
                rename[c]
            })
            .collect();
        Coloring { k: next, colors }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Coloring::new(vec![1, 2, 3], 3).is_ok());
        assert!(Coloring::new(vec![1, 4], 3).is_err());
        assert!(Coloring::new(vec![0], 3).is_err());
        assert_eq!(Coloring::from_colors(vec![2, 2]).unwrap().palette_size(), 2);
        assert_eq!(Coloring::new(vec![], 0).unwrap().len(), 0);
    }

    #[test]
    fn canonical_form() {
        let c = Coloring::new(vec![3, 3, 1, 2, 1], 4).unwrap();
        let canon = c.canonical();
        assert_eq!(canon.colors(), &[1, 1, 2, 3, 2]);
        assert_eq!(canon.palette_size(), 3);
        assert_eq!(c.distinct_colors(), 3);
        assert_eq!(c.classes(), vec![vec![2, 4], vec![3], vec![0, 1], vec![]]);
    }
}
