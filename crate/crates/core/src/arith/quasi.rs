use std::collections::BTreeMap;

use num_traits::Zero;
use serde_json::{json, Value};

use super::poly::MultiPolynomial;
use super::rational::Rational;

/// A function that is polynomial on each residue class of its arguments
/// modulo `modulus`. Classes without a stored branch are identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiPolynomial {
    modulus: u32,
    nvars: usize,
    branches: BTreeMap<Vec<u32>, MultiPolynomial>,
}

impl QuasiPolynomial {
    pub fn new(modulus: u32, nvars: usize) -> Self {
        assert!(modulus >= 1, "modulus must be positive");
        QuasiPolynomial { modulus, nvars, branches: BTreeMap::new() }
    }

    /// A single polynomial viewed as a quasi-polynomial with modulus one.
    pub fn from_polynomial(p: MultiPolynomial) -> Self {
        let mut q = Self::new(1, p.nvars());
        q.set_branch(vec![0; p.nvars()], p);
        q
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn set_branch(&mut self, residues: Vec<u32>, p: MultiPolynomial) {
        assert_eq!(residues.len(), self.nvars);
        assert_eq!(p.nvars(), self.nvars);
        assert!(residues.iter().all(|&r| r < self.modulus), "residue out of range");
        if p.is_zero() {
            self.branches.remove(&residues);
        } else {
            self.branches.insert(residues, p);
        }
    }

    pub fn residues_of(&self, point: &[i64]) -> Vec<u32> {
        point.iter().map(|&x| x.rem_euclid(i64::from(self.modulus)) as u32).collect()
    }

    pub fn branch(&self, residues: &[u32]) -> Option<&MultiPolynomial> {
        self.branches.get(residues)
    }

    pub fn branches(&self) -> impl Iterator<Item = (&[u32], &MultiPolynomial)> {
        self.branches.iter().map(|(r, p)| (r.as_slice(), p))
    }

    pub fn eval_int(&self, point: &[i64]) -> Rational {
        match self.branches.get(&self.residues_of(point)) {
            Some(p) => p.eval_int(point),
            None => Rational::zero(),
        }
    }

    /// `{"modulus":a,"branches":[{"residues":[...],"poly":[...]}, ...]}`.
    pub fn to_json(&self) -> Value {
        let branches: Vec<Value> =
            self.branches.iter().map(|(r, p)| json!({ "residues": r, "poly": p.to_json() })).collect();
        json!({ "modulus": self.modulus, "nvars": self.nvars, "branches": branches })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    #[test]
    fn dispatch_on_residue() {
        let x = MultiPolynomial::var(1, 0);
        let mut q = QuasiPolynomial::new(2, 1);
        q.set_branch(vec![1], (x.pow(2) - MultiPolynomial::constant(1, int(3))).scale(&rat(1, 48)));
        assert_eq!(q.eval_int(&[5]), rat(11, 24));
        assert_eq!(q.eval_int(&[4]), int(0));
        assert_eq!(q.eval_int(&[-1]), rat(-1, 24));
    }

    #[test]
    fn modulus_one_is_polynomial() {
        let p = MultiPolynomial::var(2, 0) * MultiPolynomial::var(2, 1);
        let q = QuasiPolynomial::from_polynomial(p.clone());
        for pt in [[1, 2], [3, -4], [0, 7]] {
            assert_eq!(q.eval_int(&pt), p.eval_int(&pt));
        }
    }
}
