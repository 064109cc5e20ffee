//! Brute-force enumeration of symmetric-group factorisations: the ground truth
//! for simple, pruned, orbifold and cycle Hurwitz numbers.

mod cycle;
mod factorization;
mod permutation;

pub use cycle::{count_cycle, cycle_degree};
pub use factorization::{count_orbifold, count_simple, count_simple_for, transposition_count, validate_mu};
pub use permutation::Permutation;

/// Which factorisation problem to solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Simple,
    PrunedSimple,
    Orbifold,
    PrunedOrbifold,
    Cycle,
}

/// A fully specified oracle instance.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorizationProblem {
    pub variant: Variant,
    pub a: usize,
    pub g: usize,
    pub mu: Vec<usize>,
}

impl FactorizationProblem {
    pub fn new(variant: Variant, a: usize, g: usize, mu: Vec<usize>) -> Self {
        FactorizationProblem { variant, a, g, mu }
    }

    /// Degree of the symmetric group the problem lives in.
    pub fn degree(&self) -> Option<usize> {
        match self.variant {
            Variant::Cycle => cycle_degree(self.g, &self.mu),
            _ => Some(self.mu.iter().sum()),
        }
    }

    /// Number of transposition factors, for the Hurwitz variants.
    pub fn transpositions(&self) -> Option<usize> {
        match self.variant {
            Variant::Simple | Variant::PrunedSimple => transposition_count(1, self.g, &self.mu),
            Variant::Orbifold | Variant::PrunedOrbifold => transposition_count(self.a, self.g, &self.mu),
            Variant::Cycle => None,
        }
    }

    /// The raw count (an integer for the Hurwitz variants, `P_{g,n}` for cycles).
    pub fn count(&self, budget: &crate::Budget) -> crate::Result<crate::Rational> {
        let whole = |n: num_bigint::BigUint| crate::Rational::from_integer(n.into());
        match self.variant {
            Variant::Simple => count_simple(self.g, &self.mu, false, budget).map(whole),
            Variant::PrunedSimple => count_simple(self.g, &self.mu, true, budget).map(whole),
            Variant::Orbifold => count_orbifold(self.a, self.g, &self.mu, false, budget).map(whole),
            Variant::PrunedOrbifold => count_orbifold(self.a, self.g, &self.mu, true, budget).map(whole),
            Variant::Cycle => count_cycle(self.g, &self.mu, budget),
        }
    }
}
