use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, Rational};
use crate::error::{Error, Result};

/// Which side of a pruning correspondence is being computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    /// Unpruned value from pruned values.
    PrunedToFull,
    /// Pruned value from unpruned values, by triangular back-substitution.
    FullToPruned,
}

/// A source of values indexed by `mu`. Returning [`Error::Dependency`] signals
/// that the source does not know the requested value.
pub type Provider<'a> = dyn Fn(&[usize]) -> Result<Rational> + Sync + 'a;

/// A provider backed by a finite table; misses name the key.
pub fn table_provider<'t>(
    family: &str,
    g: usize,
    table: &'t HashMap<Vec<usize>, Rational>,
) -> impl Fn(&[usize]) -> Result<Rational> + Sync + 't {
    let family = family.to_string();
    move |mu: &[usize]| table.get(mu).cloned().ok_or_else(|| Error::Dependency(format!("{family} g={g} mu={mu:?}")))
}

/// One of the three pruning correspondences, written uniformly as
/// `F(mu) = sum over nu <= mu, nu = mu (mod step) of P(nu) prod w(mu_i, nu_i)`
/// with `w(mu, mu) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Correspondence {
    /// `w = mu^(mu-nu) / (mu-nu)!`.
    Simple,
    /// `w = mu^e / e!` with `e = (mu-nu)/a`.
    Orbifold(usize),
    /// `w = nu C(mu, (mu-nu)/2) / mu`, from `M(mu) prod mu = sum N(nu) prod nu C(mu, (mu-nu)/2)`.
    Belyi,
}

impl Correspondence {
    pub fn step(&self) -> usize {
        match *self {
            Correspondence::Simple => 1,
            Correspondence::Orbifold(a) => a,
            Correspondence::Belyi => 2,
        }
    }

    /// Per-face weight; zero off the lattice.
    pub fn weight(&self, mu: usize, nu: usize) -> Rational {
        let step = self.step();
        if nu == 0 || nu > mu || (mu - nu) % step != 0 {
            return Rational::zero();
        }
        let e = ((mu - nu) / step) as u32;
        match *self {
            Correspondence::Simple | Correspondence::Orbifold(_) => {
                Rational::new(num_bigint::BigInt::from(mu).pow(e), factorial(e))
            }
            Correspondence::Belyi => Rational::new(
                binomial(mu as u64, u64::from(e)) * num_bigint::BigInt::from(nu),
                num_bigint::BigInt::from(mu),
            ),
        }
    }

    pub fn weight_product(&self, mu: &[usize], nu: &[usize]) -> Rational {
        mu.iter().zip(nu).fold(Rational::one(), |acc, (&m, &n)| acc * self.weight(m, n))
    }

    /// All `nu` in the lattice below `mu`, in lexicographically ascending order.
    pub fn lattice_below(&self, mu: &[usize]) -> Vec<Vec<usize>> {
        let step = self.step();
        let mut out = vec![Vec::new()];
        for &m in mu {
            let start = (m - 1) % step + 1;
            let choices: Vec<usize> = (start..=m).step_by(step).collect();
            out = out
                .into_iter()
                .flat_map(|p| {
                    choices.iter().map(move |&c| {
                        let mut q = p.clone();
                        q.push(c);
                        q
                    })
                })
                .collect();
        }
        out.sort();
        out
    }

    /// Unpruned value at `mu` from pruned values.
    pub fn pruned_to_full(&self, mu: &[usize], pruned: &Provider) -> Result<Rational> {
        let mut total = Rational::zero();
        for nu in self.lattice_below(mu) {
            total += pruned(&nu)? * self.weight_product(mu, &nu);
        }
        Ok(total)
    }

    /// Pruned value at `mu` from unpruned values, solving the triangular system
    /// in lexicographic order of `nu`.
    pub fn full_to_pruned(&self, mu: &[usize], full: &Provider) -> Result<Rational> {
        let lattice = self.lattice_below(mu);
        let mut solved: HashMap<&[usize], Rational> = HashMap::with_capacity(lattice.len());
        for nu in &lattice {
            let mut value = full(nu)?;
            for (lower, p) in &solved {
                if lower.iter().zip(nu).all(|(l, n)| l <= n) {
                    value -= p * self.weight_product(nu, lower);
                }
            }
            solved.insert(nu.as_slice(), value);
        }
        Ok(solved.remove(mu).expect("mu lies in its own lattice"))
    }

    pub fn apply(&self, direction: Direction, mu: &[usize], source: &Provider) -> Result<Rational> {
        if mu.is_empty() || mu.contains(&0) {
            return Err(Error::domain(format!("mu must consist of positive integers, got {mu:?}")));
        }
        match direction {
            Direction::PrunedToFull => self.pruned_to_full(mu, source),
            Direction::FullToPruned => self.full_to_pruned(mu, source),
        }
    }
}

/// `H^(g,n)(mu) = sum_nu K^(g,n)(nu) prod mu_i^(mu_i-nu_i)/(mu_i-nu_i)!` and its inverse.
pub fn transform_simple(direction: Direction, g: usize, mu: &[usize], source: &Provider) -> Result<Rational> {
    if g == 0 && mu.len() == 1 {
        return Err(Error::domain("the pruning correspondence excludes (g,n) = (0,1)"));
    }
    Correspondence::Simple.apply(direction, mu, source)
}

/// The orbifold correspondence, summing over `nu = mu (mod a)`.
pub fn transform_orbifold(
    a: usize,
    direction: Direction,
    g: usize,
    mu: &[usize],
    source: &Provider,
) -> Result<Rational> {
    if a == 0 {
        return Err(Error::domain("orbifold parameter a must be positive"));
    }
    if g == 0 && mu.len() == 1 {
        return Err(Error::domain("the pruning correspondence excludes (g,n) = (0,1)"));
    }
    Correspondence::Orbifold(a).apply(direction, mu, source)
}

/// Belyi numbers `M` from pruned Belyi numbers `N`, or back. Only stable
/// `(g,n)`: at `(0,1)` the relation fails (`M_{0,1}(2) = 1/2` while `N_{0,1} = 0`).
pub fn transform_belyi(direction: Direction, g: usize, mu: &[usize], source: &Provider) -> Result<Rational> {
    if 2 * g + mu.len() <= 2 {
        return Err(Error::domain(format!(
            "the Belyi pruning correspondence needs 2g-2+n > 0, got (g,n) = ({g},{})",
            mu.len()
        )));
    }
    Correspondence::Belyi.apply(direction, mu, source)
}
