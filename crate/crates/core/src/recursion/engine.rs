use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{eulerian, factorial, int, Rational};
use crate::pruning::Correspondence;

/// Which pruned family a memo entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PrunedSimple,
    PrunedOrbifold,
}

/// Canonical memo key: `mu` sorted ascending, since `K^` is symmetric in `mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HurwitzKey {
    pub family: Family,
    pub a: usize,
    pub g: usize,
    pub mu: Vec<usize>,
}

impl HurwitzKey {
    pub fn new(a: usize, g: usize, mu: &[usize]) -> Self {
        let mut mu = mu.to_vec();
        mu.sort_unstable();
        let family = if a == 1 { Family::PrunedSimple } else { Family::PrunedOrbifold };
        HurwitzKey { family, a, g, mu }
    }

    /// `m = 2g - 2 + n + |mu|/a`, or `None` when `a` does not divide `|mu|`.
    pub fn m(&self) -> Option<i64> {
        let size: usize = self.mu.iter().sum();
        (size % self.a == 0).then(|| 2 * self.g as i64 - 2 + self.mu.len() as i64 + (size / self.a) as i64)
    }
}

/// Which form of the pruned cut-and-join recursion the engine evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecursionForm {
    /// Path weights `beta`, `gamma`; cut constraint `alpha + beta + gamma = mu_i + 1`;
    /// every unstable split term dropped.
    Printed,
    /// Path weights `beta a^(beta-1)`, `gamma a^(gamma-1)`; cut constraint
    /// `alpha + beta + a gamma = mu_i + a`; splits into two `(0,2)` pieces are
    /// subtracted rather than dropped. Agrees with the factorisation oracle.
    Corrected,
}

type FullKey = (usize, usize, Vec<usize>);

/// Memoised evaluator for `K^_{g,n}` and `K^[a]_{g,n}` by the pruned
/// cut-and-join recursion, and for `H^[a]_{g,n}` by the unpruned one.
///
/// Lookups take a read lock; finished values are published under a short
/// write lock. Two threads may compute the same entry, which is harmless.
pub struct Engine {
    form: RecursionForm,
    pruned: RwLock<HashMap<HurwitzKey, Rational>>,
    full: RwLock<HashMap<FullKey, Rational>>,
}

impl Default for Engine {
    fn default() -> Self {
        Engine::new(RecursionForm::Corrected)
    }
}

impl Engine {
    pub fn new(form: RecursionForm) -> Self {
        Engine { form, pruned: RwLock::default(), full: RwLock::default() }
    }

    /// Process-wide engine used by the free functions.
    pub fn global() -> &'static Engine {
        static GLOBAL: OnceLock<Engine> = OnceLock::new();
        GLOBAL.get_or_init(Engine::default)
    }

    pub fn form(&self) -> RecursionForm {
        self.form
    }

    fn path_weight(&self, a: usize, len: usize) -> Rational {
        match self.form {
            RecursionForm::Printed => int(len as i64),
            RecursionForm::Corrected => int((len * a.pow(len as u32 - 1)) as i64),
        }
    }

    /// `K^[a]_{g,n}(mu) = K^[a]_{g,n}(mu) / m!`; `a = 1` is the simple family.
    pub fn pruned(&self, a: usize, g: usize, mu: &[usize]) -> Rational {
        assert!(a >= 1 && !mu.is_empty() && !mu.contains(&0), "invalid arguments a={a} mu={mu:?}");
        let key = HurwitzKey::new(a, g, mu);
        if let Some(v) = self.pruned.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let value = self.compute_pruned(&key);
        self.pruned.write().expect("memo lock").insert(key, value.clone());
        value
    }

    /// Unpruned `H^[a]_{g,n}(mu) / m!` by the unpruned cut-and-join recursion.
    pub fn unpruned(&self, a: usize, g: usize, mu: &[usize]) -> Rational {
        let mut sorted = mu.to_vec();
        sorted.sort_unstable();
        let key = (a, g, sorted);
        if let Some(v) = self.full.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let value = self.compute_unpruned(a, g, &key.2);
        self.full.write().expect("memo lock").insert(key, value.clone());
        value
    }

    /// Memoised pruned values, sorted by key.
    pub fn entries(&self) -> Vec<(HurwitzKey, Rational)> {
        let mut out: Vec<_> =
            self.pruned.read().expect("memo lock").iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        out.sort_by(|x, y| x.0.cmp(&y.0));
        out
    }

    /// Seeds the memo, e.g. from a cache file.
    pub fn insert(&self, key: HurwitzKey, value: Rational) {
        self.pruned.write().expect("memo lock").insert(key, value);
    }

    pub fn clear(&self) {
        self.pruned.write().expect("memo lock").clear();
        self.full.write().expect("memo lock").clear();
    }

    fn compute_pruned(&self, key: &HurwitzKey) -> Rational {
        let (a, g, mu) = (key.a, key.g, key.mu.as_slice());
        let Some(m) = key.m() else {
            return Rational::zero();
        };
        match (g, mu.len()) {
            (0, 1) => Rational::zero(),
            (0, 2) if a == 1 => {
                let (x, y) = (mu[0] as i64, mu[1] as i64);
                let count = eulerian(x + y - 1, x - 1) * (x * y);
                Rational::new(count, factorial((x + y) as u32))
            }
            (0, 2) => self.orbifold_cylinder(a, mu),
            _ => {
                let rhs = self.join_sum(a, g, mu) + self.cut_sum(a, g, mu) / int(2);
                rhs / int(m)
            }
        }
    }

    /// `K^[a]_{0,2}` by inverting the orbifold pruning correspondence on
    /// `H^[a]_{0,2}` (lexicographic back-substitution over the mod-`a` lattice).
    fn orbifold_cylinder(&self, a: usize, mu: &[usize]) -> Rational {
        let corr = Correspondence::Orbifold(a);
        let mut value = self.unpruned(a, 0, mu);
        for nu in corr.lattice_below(mu) {
            if nu != mu {
                let w = corr.weight(mu[0], nu[0]) * corr.weight(mu[1], nu[1]);
                value -= self.pruned(a, 0, &nu) * w;
            }
        }
        value
    }

    /// `sum_{i<j} mu_i mu_j sum_{alpha + a beta = mu_i + mu_j + a} w(beta) K^_{g,n-1}(mu_rest, alpha)`.
    fn join_sum(&self, a: usize, g: usize, mu: &[usize]) -> Rational {
        let n = mu.len();
        let mut total = Rational::zero();
        for i in 0..n {
            for j in i + 1..n {
                let mut args: Vec<usize> = without(mu, &[i, j]);
                args.push(0);
                let s = mu[i] + mu[j] + a;
                let mut inner = Rational::zero();
                for beta in 1..=(s - 1) / a {
                    *args.last_mut().unwrap() = s - a * beta;
                    inner += self.pruned(a, g, &args) * self.path_weight(a, beta);
                }
                total += inner * int((mu[i] * mu[j]) as i64);
            }
        }
        total
    }

    /// `sum_i mu_i sum w(gamma) [K^_{g-1,n+1}(rest, alpha, beta) + split products]`,
    /// before the overall factor 1/2.
    fn cut_sum(&self, a: usize, g: usize, mu: &[usize]) -> Rational {
        let n = mu.len();
        let step = match self.form {
            RecursionForm::Printed => 1,
            RecursionForm::Corrected => a,
        };
        let mut total = Rational::zero();
        for i in 0..n {
            let rest = without(mu, &[i]);
            let s = mu[i] + step;
            let mut inner = Rational::zero();
            for gamma in 1.. {
                if step * gamma + 2 > s {
                    break;
                }
                let ab = s - step * gamma;
                for alpha in 1..ab {
                    let beta = ab - alpha;
                    let bracket = self.cut_bracket(a, g, &rest, alpha, beta);
                    if !bracket.is_zero() {
                        inner += bracket * self.path_weight(a, gamma);
                    }
                }
            }
            total += inner * int(mu[i] as i64);
        }
        total
    }

    fn cut_bracket(&self, a: usize, g: usize, rest: &[usize], alpha: usize, beta: usize) -> Rational {
        let mut total = Rational::zero();
        if g >= 1 {
            let mut args = rest.to_vec();
            args.extend([alpha, beta]);
            total += self.pruned(a, g - 1, &args);
        }
        let r = rest.len();
        for mask in 0u32..(1 << r) {
            let (mut left, mut right): (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
            for (k, &x) in rest.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    left.push(x)
                } else {
                    right.push(x)
                }
            }
            left.push(alpha);
            right.push(beta);
            for g1 in 0..=g {
                let g2 = g - g1;
                let cylinders = self.form == RecursionForm::Corrected && g == 0 && left.len() == 2 && right.len() == 2;
                if !cylinders && (!stable(g1, left.len()) || !stable(g2, right.len())) {
                    continue;
                }
                let l = self.pruned(a, g1, &left);
                if l.is_zero() {
                    continue;
                }
                let product = l * self.pruned(a, g2, &right);
                // The join sum already counts every cylinder pair once too often.
                if cylinders {
                    total -= product
                } else {
                    total += product
                }
            }
        }
        total
    }

    fn compute_unpruned(&self, a: usize, g: usize, mu: &[usize]) -> Rational {
        let size: usize = mu.iter().sum();
        if size % a != 0 {
            return Rational::zero();
        }
        let m = 2 * g as i64 - 2 + mu.len() as i64 + (size / a) as i64;
        if m < 0 {
            return Rational::zero();
        }
        if m == 0 {
            return if g == 0 && mu == [a] { Rational::one() } else { Rational::zero() };
        }
        let n = mu.len();
        let mut total = Rational::zero();
        for i in 0..n {
            for j in i + 1..n {
                let mut args = without(mu, &[i, j]);
                args.push(mu[i] + mu[j]);
                total += self.unpruned(a, g, &args) * int((mu[i] * mu[j]) as i64);
            }
        }
        let mut cut = Rational::zero();
        for i in 0..n {
            let rest = without(mu, &[i]);
            let mut inner = Rational::zero();
            for alpha in 1..mu[i] {
                let beta = mu[i] - alpha;
                if g >= 1 {
                    let mut args = rest.clone();
                    args.extend([alpha, beta]);
                    inner += self.unpruned(a, g - 1, &args);
                }
                for mask in 0u32..(1 << rest.len()) {
                    let (mut left, mut right): (Vec<usize>, Vec<usize>) = (Vec::new(), Vec::new());
                    for (k, &x) in rest.iter().enumerate() {
                        if mask >> k & 1 == 1 {
                            left.push(x)
                        } else {
                            right.push(x)
                        }
                    }
                    left.push(alpha);
                    right.push(beta);
                    for g1 in 0..=g {
                        let l = self.unpruned(a, g1, &left);
                        if !l.is_zero() {
                            inner += l * self.unpruned(a, g - g1, &right);
                        }
                    }
                }
            }
            cut += inner * int(mu[i] as i64);
        }
        (total + cut / int(2)) / int(m)
    }
}

/// `2g - 2 + n > 0`.
pub(crate) fn stable(g: usize, n: usize) -> bool {
    2 * g + n > 2
}

fn without(mu: &[usize], skip: &[usize]) -> Vec<usize> {
    mu.iter().enumerate().filter(|(k, _)| !skip.contains(k)).map(|(_, &x)| x).collect()
}

/// `K^_{g,n}(mu)` for the simple family.
pub fn pruned_simple_value(g: usize, mu: &[usize]) -> Rational {
    Engine::global().pruned(1, g, mu)
}

/// `K^[a]_{g,n}(mu)`; zero unless `a` divides `|mu|`.
pub fn pruned_orbifold_value(a: usize, g: usize, mu: &[usize]) -> Rational {
    Engine::global().pruned(a, g, mu)
}

/// `H^[a]_{g,n}(mu) / m!` from the unpruned cut-and-join recursion.
pub fn unpruned_value(a: usize, g: usize, mu: &[usize]) -> Rational {
    Engine::global().unpruned(a, g, mu)
}
