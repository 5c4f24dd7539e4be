use alloc::vec::Vec;

/// A permutation of `0..n`, stored as its image vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    /// Returns `None` unless `image` is a bijection on `0..image.len()`.
    pub fn new(image: Vec<usize>) -> Option<Permutation> {
        let n = image.len();
        let mut seen = alloc::vec![false; n];
        for &x in &image {
            if x >= n || core::mem::replace(&mut seen[x], true) {
                return None;
            }
        }
        Some(Permutation { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Permutation {
        debug_assert!(Permutation::new(image.clone()).is_some());
        Permutation { image }
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            image: (0..n).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Option<Permutation> {
        let mut image: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                *image.get_mut(x)? = cycle[(k + 1) % cycle.len()];
            }
        }
        Permutation::new(image)
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.image[x]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.len(), other.len());
        Permutation {
            image: other.image.iter().map(|&x| self.image[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = alloc::vec![0; self.len()];
        for (i, &x) in self.image.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { image: inv }
    }

    /// Points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.image
            .iter()
            .enumerate()
            .filter(|(i, x)| i != *x)
            .map(|(i, _)| i)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_invert() {
        let p = Permutation::new(alloc::vec![0, 2, 1, 4, 3]).unwrap();
        assert!(p.compose(&p).is_identity());
        let q = Permutation::from_cycles(5, &[&[0, 1, 2]]).unwrap();
        assert_eq!(q.image(), &[1, 2, 0, 3, 4]);
        assert!(q.compose(&q.inverse()).is_identity());
        assert_eq!(q.compose(&p).apply(1), q.apply(p.apply(1)));
        assert_eq!(p.support(), alloc::vec![1, 2, 3, 4]);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(alloc::vec![0, 0]).is_none());
        assert!(Permutation::new(alloc::vec![0, 2]).is_none());
    }
}
