use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0, ..., d-1}` stored as its image table.
///
/// Composition follows function notation: `p.compose(&q)` is `x -> p(q(x))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || std::mem::replace(&mut seen[x], true) {
                return Err(Error::domain(format!("image table {images:?} is not a bijection")));
            }
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles; unlisted points are fixed.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &x) in cycle.iter().enumerate() {
                if x >= degree || std::mem::replace(&mut used[x], true) {
                    return Err(Error::domain(format!("cycles {cycles:?} are not disjoint in S_{degree}")));
                }
                images[x] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `i` and `j`.
    pub fn transposition(degree: usize, i: usize, j: usize) -> Self {
        assert!(i != j && i < degree && j < degree);
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(i, j);
        Permutation { images }
    }

    /// The permutation whose cycles are consecutive blocks of lengths `mu`,
    /// listed in the order of `mu`: `(0 .. mu_1-1)(mu_1 .. mu_1+mu_2-1)...`.
    pub fn with_cycle_type(mu: &[usize]) -> Self {
        let degree: usize = mu.iter().sum();
        let mut images = Vec::with_capacity(degree);
        let mut start = 0;
        for &len in mu {
            assert!(len >= 1, "cycle lengths must be positive");
            images.extend((start + 1..start + len).chain(std::iter::once(start)));
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    /// Cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle lengths in weakly decreasing order; a partition of the degree.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return f.write_str("()");
        }
        for c in nontrivial {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_type_is_partition() {
        let t = Permutation::with_cycle_type(&[3, 1, 2]);
        assert_eq!(t.cycle_type(), vec![3, 2, 1]);
        assert_eq!(t.cycles(), vec![vec![0, 1, 2], vec![3], vec![4, 5]]);
        assert_eq!(t.cycle_count(), 3);
        assert_eq!(t.to_string(), "(1 2 3)(5 6)");
    }

    #[test]
    fn composition_and_inverse() {
        let p = Permutation::from_cycles(4, &[vec![0, 1, 2]]).unwrap();
        let q = Permutation::transposition(4, 2, 3);
        let pq = p.compose(&q);
        assert_eq!(pq.apply(2), p.apply(3));
        assert!(pq.compose(&pq.inverse()).is_identity());
        assert_eq!(pq.cycle_type().iter().sum::<usize>(), 4);
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0]).is_err());
        assert!(Permutation::from_images(vec![2, 0]).is_err());
        assert!(Permutation::from_cycles(3, &[vec![0, 1], vec![1, 2]]).is_err());
    }
}
