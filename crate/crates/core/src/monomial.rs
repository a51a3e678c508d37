//! Exponent vectors with a graded lexicographic order.

use std::cmp::Ordering;
use std::ops::Index;

/// A monomial is an exponent vector aligned with some `VarSet`. The vector
/// length always equals the number of variables of the owning polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        Monomial { exps }
    }

    /// The monomial 1 in `n` variables.
    pub fn one(n: usize) -> Monomial {
        Monomial { exps: vec![0; n] }
    }

    /// Single variable power x_idx^k in `n` variables.
    pub fn var_pow(n: usize, idx: usize, k: u32) -> Monomial {
        let mut exps = vec![0; n];
        exps[idx] = k;
        Monomial { exps }
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Degree in the variables selected by `idxs`.
    pub fn degree_in(&self, idxs: &[usize]) -> u32 {
        idxs.iter().map(|&i| self.exps[i]).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    /// Componentwise division; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }
}

impl Index<usize> for Monomial {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.exps[i]
    }
}

/// Graded lexicographic: compare total degree first, then exponent vectors
/// lexicographically with the first-declared variable most significant.
impl Ord for Monomial {
    fn cmp(&self, other: &Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn grlex_degree_dominates() {
        // x*y (degree 2) beats y (degree 1) regardless of lex position
        assert!(m(&[1, 1]) > m(&[0, 1]));
        assert!(m(&[0, 3]) > m(&[1, 1]));
    }

    #[test]
    fn grlex_first_var_breaks_ties() {
        // same degree: x^2 > x*y > y^2
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
    }

    #[test]
    fn division() {
        assert_eq!(m(&[3, 1]).div(&m(&[1, 0])), Some(m(&[2, 1])));
        assert_eq!(m(&[3, 1]).div(&m(&[0, 2])), None);
        assert!(m(&[1, 0]).divides(&m(&[3, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[3, 1])));
    }

    #[test]
    fn degree_in_subset() {
        let mono = m(&[2, 3, 5]);
        assert_eq!(mono.degree_in(&[0, 2]), 7);
        assert_eq!(mono.total_degree(), 10);
    }
}
