use std::collections::HashMap;

use num_traits::Zero;

use crate::arith::{factorial, int, Rational};
use crate::error::{Budget, Result};
use crate::symgroup::{count_simple, transposition_count};

/// Oracle values `H_{g,n}(mu)/m!`, memoised per call.
struct OracleTable<'b> {
    budget: &'b Budget,
    memo: HashMap<(usize, Vec<usize>), Rational>,
}

impl OracleTable<'_> {
    fn get(&mut self, g: usize, mu: &[usize]) -> Result<Rational> {
        let mut key = mu.to_vec();
        key.sort_unstable();
        if let Some(v) = self.memo.get(&(g, key.clone())) {
            return Ok(v.clone());
        }
        let value = match transposition_count(1, g, &key) {
            None => Rational::zero(),
            Some(m) => {
                let count = count_simple(g, &key, false, self.budget)?;
                Rational::new(count.into(), factorial(m as u32))
            }
        };
        self.memo.insert((g, key), value.clone());
        Ok(value)
    }
}

/// Checks the unpruned cut-and-join identity
/// `m H^_{g,n}(mu) = join + cut` at one instance, every term taken from the
/// factorisation oracle.
pub fn verify_caj_simple(g: usize, mu: &[usize], budget: &Budget) -> Result<bool> {
    crate::symgroup::validate_mu(mu)?;
    let Some(m) = transposition_count(1, g, mu) else {
        return Ok(true);
    };
    let mut table = OracleTable { budget, memo: HashMap::new() };
    let lhs = table.get(g, mu)? * int(m as i64);
    let n = mu.len();
    let mut rhs = Rational::zero();
    for i in 0..n {
        for j in i + 1..n {
            let mut args: Vec<usize> = (0..n).filter(|&k| k != i && k != j).map(|k| mu[k]).collect();
            args.push(mu[i] + mu[j]);
            rhs += table.get(g, &args)? * int((mu[i] * mu[j]) as i64);
        }
    }
    let mut cut = Rational::zero();
    for i in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&k| k != i).map(|k| mu[k]).collect();
        let mut inner = Rational::zero();
        for alpha in 1..mu[i] {
            let beta = mu[i] - alpha;
            if g >= 1 {
                let mut args = rest.clone();
                args.extend([alpha, beta]);
                inner += table.get(g - 1, &args)?;
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
                    let l = table.get(g1, &left)?;
                    if !l.is_zero() {
                        inner += l * table.get(g - g1, &right)?;
                    }
                }
            }
        }
        cut += inner * int(mu[i] as i64);
    }
    rhs += cut / int(2);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        let b = Budget::default();
        assert!(verify_caj_simple(0, &[2, 1], &b).unwrap());
        assert!(verify_caj_simple(0, &[3, 1], &b).unwrap());
        assert!(verify_caj_simple(1, &[2], &b).unwrap());
    }

    #[test]
    fn over_budget() {
        assert!(verify_caj_simple(2, &[3, 3], &Budget::new(10)).unwrap_err().is_budget());
    }
}
