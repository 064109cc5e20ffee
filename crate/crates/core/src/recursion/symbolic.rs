use super::engine::stable;
use super::reconstruct::pruned_simple_polynomial;
use crate::arith::{int, rat, MultiPolynomial};
use crate::error::{Error, Result};

/// Outcome of dividing the symbolic right-hand side by `m(g, mu)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisibilityReport {
    pub rhs: MultiPolynomial,
    pub quotient: MultiPolynomial,
    pub remainder: MultiPolynomial,
}

impl DivisibilityReport {
    pub fn divides(&self) -> bool {
        self.remainder.is_zero()
    }
}

/// `K^_{g,n}` as a polynomial in `nvars` variables, its arguments replaced by `args`.
fn substitute(g: usize, args: &[MultiPolynomial]) -> Result<MultiPolynomial> {
    let n = args.len();
    if !stable(g, n) {
        return Err(Error::Unsupported(format!("the right-hand side needs the non-polynomial K^_{{{g},{n}}}")));
    }
    Ok(pruned_simple_polynomial(g, n)?.compose(args))
}

/// The right-hand side of the simple pruned recursion, as a polynomial in
/// `mu_1, ..., mu_n`, with every inner sum closed by discrete summation.
///
/// Only available where every ingredient is itself a polynomial, i.e. where
/// neither sum reaches `K^_{0,2}`.
pub fn recursion_rhs_polynomial(g: usize, n: usize) -> Result<MultiPolynomial> {
    if !stable(g, n) {
        return Err(Error::domain(format!("(g, n) = ({g}, {n}) is not stable")));
    }
    // variables 0..n are mu; n and n + 1 are summation variables
    let nv = n + 2;
    let mu: Vec<MultiPolynomial> = (0..n).map(|i| MultiPolynomial::var(nv, i)).collect();
    let (u, v) = (MultiPolynomial::var(nv, n), MultiPolynomial::var(nv, n + 1));
    let one = MultiPolynomial::one(nv);
    let mut total = MultiPolynomial::zero(nv);

    // join: sum_{beta=1}^{s-1} beta K^_{g,n-1}(rest, s - beta), s = mu_i + mu_j + 1
    if n >= 2 {
        for i in 0..n {
            for j in i + 1..n {
                let s = &(&mu[i] + &mu[j]) + &one;
                let mut args: Vec<MultiPolynomial> =
                    (0..n).filter(|&k| k != i && k != j).map(|k| mu[k].clone()).collect();
                args.push(&s - &u);
                let summand = &u * &substitute(g, &args)?;
                let summed = summand.definite_sum(n, &(&s - &one));
                total = total + &(&mu[i] * &mu[j]) * &summed;
            }
        }
    }

    // cut: alpha = u, gamma = v, beta = mu_i + 1 - alpha - gamma
    for i in 0..n {
        let rest: Vec<usize> = (0..n).filter(|&k| k != i).collect();
        let beta = &(&(&mu[i] + &one) - &u) - &v;
        let mut bracket = MultiPolynomial::zero(nv);
        if g >= 1 {
            let mut args: Vec<MultiPolynomial> = rest.iter().map(|&k| mu[k].clone()).collect();
            args.extend([u.clone(), beta.clone()]);
            bracket = bracket + substitute(g - 1, &args)?;
        }
        for mask in 0u32..(1 << rest.len()) {
            let (mut left, mut right): (Vec<MultiPolynomial>, Vec<MultiPolynomial>) = (Vec::new(), Vec::new());
            for (b, &k) in rest.iter().enumerate() {
                if mask >> b & 1 == 1 {
                    left.push(mu[k].clone())
                } else {
                    right.push(mu[k].clone())
                }
            }
            left.push(u.clone());
            right.push(beta.clone());
            for g1 in 0..=g {
                let g2 = g - g1;
                if stable(g1, left.len()) && stable(g2, right.len()) {
                    bracket = bracket + &substitute(g1, &left)? * &substitute(g2, &right)?;
                }
            }
        }
        if bracket.is_zero() {
            continue;
        }
        let inner = (&v * &bracket).definite_sum(n, &(&mu[i] - &v));
        let outer = inner.definite_sum(n + 1, &(&mu[i] - &one));
        total = total + (&mu[i] * &outer).scale(&rat(1, 2));
    }

    let keep: Vec<usize> = (0..n).collect();
    Ok(MultiPolynomial::from_terms(
        n,
        total.terms().map(|(e, c)| {
            debug_assert!(e[n] == 0 && e[n + 1] == 0, "summation variable left over");
            (keep.iter().map(|&k| e[k]).collect(), c.clone())
        }),
    ))
}

/// Divides the symbolic right-hand side by `m = 2g - 2 + n + |mu|`.
pub fn rhs_divisibility(g: usize, n: usize) -> Result<DivisibilityReport> {
    let rhs = recursion_rhs_polynomial(g, n)?;
    let mut m = MultiPolynomial::constant(n, int(2 * g as i64 + n as i64 - 2));
    for i in 0..n {
        m = m + MultiPolynomial::var(n, i);
    }
    let (quotient, remainder) = rhs.div_rem(&m);
    Ok(DivisibilityReport { rhs, quotient, remainder })
}
