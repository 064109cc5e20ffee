use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::qpoly::q_polynomial;
use crate::arith::{format_rational, MultiPolynomial, Rational};
use crate::error::{Error, Result};

/// `<tau_{d_1} ... tau_{d_n} lambda_ell>_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BracketKey {
    pub g: u32,
    pub d: Vec<u32>,
    #[serde(rename = "lambda")]
    pub ell: u32,
}

impl BracketKey {
    pub fn new(g: u32, d: Vec<u32>, ell: u32) -> Self {
        BracketKey { g, d, ell }
    }

    /// `|d| + ell = 3g - 3 + n`; brackets off this constraint vanish.
    pub fn is_dimensional(&self) -> bool {
        let lhs = i64::from(self.d.iter().sum::<u32>() + self.ell);
        lhs == 3 * i64::from(self.g) - 3 + self.d.len() as i64
    }

    pub fn to_json(&self, value: &Rational) -> Value {
        json!({ "g": self.g, "d": self.d, "lambda": self.ell, "value": format_rational(value) })
    }
}

/// Writes `p(x)` (a polynomial in `x` with coefficients in the other
/// variables) as `sum_k c_k(rest) q_k(x)`, eliminating the top power of `x` each step.
fn q_expand(p: &MultiPolynomial, var: usize) -> Result<BTreeMap<u32, MultiPolynomial>> {
    let nvars = p.nvars();
    let mut rest = p.clone();
    let mut out = BTreeMap::new();
    while let Some(top) = rest.degree_in(var) {
        if top % 2 == 1 {
            return Err(Error::Inconsistent(format!("odd power {top} of variable {} is outside the q-basis", var + 1)));
        }
        let k = top / 2;
        let coeff = MultiPolynomial::from_terms(
            nvars,
            rest.terms().filter(|(e, _)| e[var] == top).map(|(e, c)| {
                let mut e = e.to_vec();
                e[var] = 0;
                (e, c.clone())
            }),
        );
        let q = q_polynomial(k);
        let lead = q.coefficient(&[2 * k]);
        let coeff = coeff.scale(&(Rational::from_integer(1.into()) / lead));
        let qx = q.embed(nvars, &[var]);
        rest = rest - &coeff * &qx;
        out.insert(k, coeff);
    }
    Ok(out)
}

/// Reads `<tau_d lambda_ell>_g` off `K^_{g,n}` through
/// `K^(nu) = prod nu_i sum_{|d| + ell = 3g-3+n} (-1)^ell <tau_d lambda_ell>_g prod q_{d_i}(nu_i)`.
///
/// Every key with `|d| <= 3g - 3 + n` is reported, zeros included.
pub fn extract_brackets(g: u32, n: usize, khat: &MultiPolynomial) -> Result<BTreeMap<BracketKey, Rational>> {
    if khat.nvars() != n {
        return Err(Error::domain(format!("polynomial has {} variables, expected {n}", khat.nvars())));
    }
    let dim = 3 * i64::from(g) - 3 + n as i64;
    if dim < 0 {
        return Err(Error::domain(format!("(g, n) = ({g}, {n}) is not stable")));
    }
    let reduced = khat
        .divide_by_variables()
        .ok_or_else(|| Error::Inconsistent("polynomial is not divisible by the product of its variables".into()))?;
    let mut partial: Vec<(Vec<u32>, MultiPolynomial)> = vec![(Vec::new(), reduced)];
    for var in 0..n {
        let mut next = Vec::new();
        for (prefix, p) in partial {
            for (k, c) in q_expand(&p, var)? {
                let mut d = prefix.clone();
                d.push(k);
                next.push((d, c));
            }
        }
        partial = next;
    }
    let mut coefficients: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
    for (d, c) in partial {
        let value = c.coefficient(&vec![0; n]);
        debug_assert!(c.total_degree().unwrap_or(0) == 0);
        if !value.is_zero() {
            coefficients.insert(d, value);
        }
    }
    let mut out = BTreeMap::new();
    for d in exponent_vectors(n, dim as u32) {
        let size: u32 = d.iter().sum();
        let ell = dim as u32 - size;
        let c = coefficients.remove(&d).unwrap_or_else(Rational::zero);
        let value = if ell % 2 == 1 { -c } else { c };
        out.insert(BracketKey::new(g, d, ell), value);
    }
    if let Some((d, _)) = coefficients.into_iter().next() {
        return Err(Error::Inconsistent(format!("q-coefficient at d = {d:?} exceeds the dimension {dim}")));
    }
    Ok(out)
}

/// All `d` in `N^n` with `|d| <= max_total`, lexicographically.
pub(crate) fn exponent_vectors(n: usize, max_total: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for d in out {
            let used: u32 = d.iter().sum();
            for k in 0..=max_total - used {
                let mut e = d.clone();
                e.push(k);
                next.push(e);
            }
        }
        out = next;
    }
    out
}
