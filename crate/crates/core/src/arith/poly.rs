use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::combinatorics::binomial;
use super::rational::{format_rational, int, parse_rational, Rational};
use crate::error::{Error, Result};

/// Sparse polynomial in `nvars` variables with exact rational coefficients.
///
/// Terms are keyed by exponent vector; zero coefficients are never stored, so
/// two polynomials are equal exactly when their term maps are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPolynomial {
    pub fn zero(nvars: usize) -> Self {
        MultiPolynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        Self::monomial(nvars, exp, Rational::one())
    }

    pub fn monomial(nvars: usize, exp: Vec<u32>, coef: Rational) -> Self {
        assert_eq!(exp.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        MultiPolynomial { nvars, terms }
    }

    /// Sums the given terms; repeated exponents accumulate.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (exp, c) in terms {
            p.add_term(exp, c);
        }
        p
    }

    /// Univariate polynomial from coefficients in increasing degree.
    pub fn from_coefficients(coeffs: &[Rational]) -> Self {
        Self::from_terms(1, coeffs.iter().enumerate().map(|(k, c)| (vec![k as u32], c.clone())))
    }

    fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        assert_eq!(exp.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Coefficients of a univariate polynomial, lowest degree first.
    pub fn univariate_coefficients(&self) -> Result<Vec<Rational>> {
        self.require_univariate()?;
        let deg = self.total_degree().unwrap_or(0) as usize;
        Ok((0..=deg).map(|k| self.coefficient(&[k as u32])).collect())
    }

    fn require_univariate(&self) -> Result<()> {
        if self.nvars != 1 {
            return Err(Error::domain(format!("expected a univariate polynomial, got {} variables", self.nvars)));
        }
        Ok(())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars, "evaluation point arity");
        let mut powers: Vec<Vec<Rational>> = vec![vec![Rational::one()]; self.nvars];
        let mut total = Rational::zero();
        for (exp, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &point[i];
                    table.push(next);
                }
                term *= &table[e as usize];
            }
            total += term;
        }
        total
    }

    pub fn eval_int(&self, point: &[i64]) -> Rational {
        let point: Vec<Rational> = point.iter().map(|&x| int(x)).collect();
        self.eval(&point)
    }

    /// Substitutes `subs[i]` for variable `i`; all substitutes share one arity.
    pub fn compose(&self, subs: &[MultiPolynomial]) -> MultiPolynomial {
        assert_eq!(subs.len(), self.nvars, "one substitute per variable");
        let target = subs.first().map(|s| s.nvars).unwrap_or(0);
        assert!(subs.iter().all(|s| s.nvars == target), "substitutes differ in arity");
        let mut powers: Vec<Vec<MultiPolynomial>> = subs.iter().map(|_| vec![MultiPolynomial::one(target)]).collect();
        let mut out = MultiPolynomial::zero(target);
        for (exp, c) in &self.terms {
            let mut term = MultiPolynomial::constant(target, c.clone());
            for (i, &e) in exp.iter().enumerate() {
                let table = &mut powers[i];
                while table.len() <= e as usize {
                    let next = table.last().unwrap() * &subs[i];
                    table.push(next);
                }
                if e > 0 {
                    term = &term * &table[e as usize];
                }
            }
            out = out + term;
        }
        out
    }

    /// Re-homes variable `i` as variable `map[i]` of a polynomial in `nvars` variables.
    pub fn embed(&self, nvars: usize, map: &[usize]) -> MultiPolynomial {
        assert_eq!(map.len(), self.nvars);
        MultiPolynomial::from_terms(
            nvars,
            self.terms.iter().map(|(exp, c)| {
                let mut e = vec![0; nvars];
                for (i, &k) in exp.iter().enumerate() {
                    e[map[i]] += k;
                }
                (e, c.clone())
            }),
        )
    }

    pub fn permute(&self, perm: &[usize]) -> MultiPolynomial {
        self.embed(self.nvars, perm)
    }

    /// Invariant under every permutation of the variables.
    pub fn is_symmetric(&self) -> bool {
        if self.nvars < 2 {
            return true;
        }
        let mut swap: Vec<usize> = (0..self.nvars).collect();
        swap.swap(0, 1);
        let mut cycle: Vec<usize> = (1..self.nvars).collect();
        cycle.push(0);
        self.permute(&swap) == *self && self.permute(&cycle) == *self
    }

    /// Exact quotient by `x_1 x_2 ... x_n`, or `None` if some term lacks a variable.
    pub fn divide_by_variables(&self) -> Option<MultiPolynomial> {
        let mut out = MultiPolynomial::zero(self.nvars);
        for (exp, c) in &self.terms {
            if exp.contains(&0) {
                return None;
            }
            out.terms.insert(exp.iter().map(|e| e - 1).collect(), c.clone());
        }
        Some(out)
    }

    pub fn multiply_by_variables(&self) -> MultiPolynomial {
        MultiPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|k| k + 1).collect(), c.clone())).collect(),
        }
    }

    /// Division with remainder under lexicographic order (`x_1 > x_2 > ...`).
    /// With a single divisor the remainder is zero iff the divisor divides `self`.
    pub fn div_rem(&self, divisor: &MultiPolynomial) -> (MultiPolynomial, MultiPolynomial) {
        assert_eq!(self.nvars, divisor.nvars);
        let (lead_exp, lead_coef) = divisor.terms.iter().next_back().expect("division by zero polynomial");
        let mut rest = self.clone();
        let mut quotient = MultiPolynomial::zero(self.nvars);
        let mut remainder = MultiPolynomial::zero(self.nvars);
        while let Some((exp, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if exp.iter().zip(lead_exp).all(|(a, b)| a >= b) {
                let shift: Vec<u32> = exp.iter().zip(lead_exp).map(|(a, b)| a - b).collect();
                let t = MultiPolynomial::monomial(self.nvars, shift, c / lead_coef);
                rest = rest - &t * divisor;
                quotient = quotient + t;
            } else {
                rest.terms.remove(&exp);
                remainder.add_term(exp, c);
            }
        }
        (quotient, remainder)
    }

    /// Terms in graded-lexicographic order: higher total degree first, ties
    /// broken by descending lexicographic exponent.
    pub fn graded_lex_terms(&self) -> Vec<(&[u32], &Rational)> {
        let mut terms: Vec<(&[u32], &Rational)> = self.terms().collect();
        terms.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        terms
    }

    /// `[{"exp":[...],"coef":"p/q"}, ...]` in graded-lex order.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.graded_lex_terms().into_iter().map(|(e, c)| json!({ "exp": e, "coef": format_rational(c) })).collect(),
        )
    }

    pub fn from_json(nvars: usize, value: &Value) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("polynomial JSON: {why}"));
        let items = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut terms = Vec::with_capacity(items.len());
        for item in items {
            let exp = item
                .get("exp")
                .and_then(Value::as_array)
                .ok_or_else(|| bad("missing exp"))?
                .iter()
                .map(|v| v.as_u64().map(|x| x as u32).ok_or_else(|| bad("bad exponent")))
                .collect::<Result<Vec<u32>>>()?;
            if exp.len() != nvars {
                return Err(bad("exponent arity"));
            }
            let coef = item.get("coef").and_then(Value::as_str).ok_or_else(|| bad("missing coef"))?;
            terms.push((exp, parse_rational(coef)?));
        }
        Ok(Self::from_terms(nvars, terms))
    }

    /// Human-readable form with the given variable names.
    pub fn display_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (exp, c)) in self.graded_lex_terms().into_iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono: Vec<String> = exp
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { names[i].to_string() } else { format!("{}^{e}", names[i]) })
                .collect();
            if mono.is_empty() {
                out.push_str(&format_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&mono.join("*"));
            } else {
                out.push_str(&format!("{}*{}", format_rational(&mag), mono.join("*")));
            }
        }
        out
    }

    /// `sum_{t=1}^{upper} self`, summing over variable `var`. The summation
    /// variable is bound, so `upper` may itself mention `var`. The identity
    /// holds wherever `upper >= 0`.
    pub fn definite_sum(&self, var: usize, upper: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(upper.nvars, self.nvars);
        let mut by_power: BTreeMap<u32, MultiPolynomial> = BTreeMap::new();
        for (exp, c) in &self.terms {
            let mut rest = exp.clone();
            let k = std::mem::take(&mut rest[var]);
            by_power.entry(k).or_insert_with(|| MultiPolynomial::zero(self.nvars)).add_term(rest, c.clone());
        }
        let mut out = MultiPolynomial::zero(self.nvars);
        for (k, coef) in by_power {
            let faulhaber = faulhaber(k).compose(std::slice::from_ref(upper));
            out = out + &coef * &faulhaber;
        }
        out
    }
}

/// `S_k(x) = 1^k + 2^k + ... + x^k` as a univariate polynomial, from
/// `(x+1)^{k+1} - 1 = sum_{j<=k} C(k+1, j) S_j(x)`.
fn faulhaber(k: u32) -> MultiPolynomial {
    let x = MultiPolynomial::var(1, 0);
    let x_plus_one = &x + &MultiPolynomial::one(1);
    let mut sums: Vec<MultiPolynomial> = Vec::with_capacity(k as usize + 1);
    for j in 0..=k {
        let mut acc = x_plus_one.pow(j + 1) - MultiPolynomial::one(1);
        for (i, s) in sums.iter().enumerate() {
            acc = acc - s.scale(&Rational::from_integer(binomial(u64::from(j) + 1, i as u64)));
        }
        sums.push(acc.scale(&Rational::new(BigInt::one(), BigInt::from(j + 1))));
    }
    sums.pop().unwrap()
}

/// The polynomial `P` with `P(x) = p(1) + ... + p(x)` for every integer `x >= 0`.
pub fn discrete_antiderivative(p: &MultiPolynomial) -> Result<MultiPolynomial> {
    p.require_univariate()?;
    Ok(p.definite_sum(0, &MultiPolynomial::var(1, 0)))
}

/// `sum over alpha_1 + ... + alpha_m = N (alpha_i >= 1) of prod alpha_i^{k_i}`
/// as a polynomial in `N`, valid for `N >= 1`.
pub fn power_sum_polynomial(exponents: &[u32]) -> MultiPolynomial {
    assert!(!exponents.is_empty());
    // variables: 0 = N, 1 = alpha
    let n = MultiPolynomial::var(2, 0);
    let alpha = MultiPolynomial::var(2, 1);
    let mut acc = MultiPolynomial::var(1, 0).pow(exponents[0]);
    for &k in &exponents[1..] {
        let shifted = acc.compose(&[&n - &alpha]);
        let summand = &alpha.pow(k) * &shifted;
        let upper = &n - &MultiPolynomial::one(2);
        let summed = summand.definite_sum(1, &upper);
        acc = MultiPolynomial::from_terms(1, summed.terms().map(|(e, c)| (vec![e[0]], c.clone())));
    }
    acc
}

impl fmt::Display for MultiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (1..=self.nvars).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        f.write_str(&self.display_with(&refs))
    }
}

impl Add<&MultiPolynomial> for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.clone() + rhs
    }
}

impl Add<&MultiPolynomial> for MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(mut self, rhs: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
        self
    }
}

impl Add for MultiPolynomial {
    type Output = MultiPolynomial;
    fn add(self, rhs: MultiPolynomial) -> MultiPolynomial {
        self + &rhs
    }
}

impl Neg for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        MultiPolynomial { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for MultiPolynomial {
    type Output = MultiPolynomial;
    fn neg(self) -> MultiPolynomial {
        -&self
    }
}

impl Sub<&MultiPolynomial> for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn sub(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self.clone() + &(-rhs)
    }
}

impl Sub<&MultiPolynomial> for MultiPolynomial {
    type Output = MultiPolynomial;
    fn sub(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        self + &(-rhs)
    }
}

impl Sub for MultiPolynomial {
    type Output = MultiPolynomial;
    fn sub(self, rhs: MultiPolynomial) -> MultiPolynomial {
        self + &(-rhs)
    }
}

impl Mul<&MultiPolynomial> for &MultiPolynomial {
    type Output = MultiPolynomial;
    fn mul(self, rhs: &MultiPolynomial) -> MultiPolynomial {
        assert_eq!(self.nvars, rhs.nvars, "arity mismatch");
        let mut out = MultiPolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

impl Mul for MultiPolynomial {
    type Output = MultiPolynomial;
    fn mul(self, rhs: MultiPolynomial) -> MultiPolynomial {
        &self * &rhs
    }
}
