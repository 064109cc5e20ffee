use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::engine::{pruned_orbifold_value, pruned_simple_value, stable};
use crate::arith::{
    format_rational, int, interpolate, interpolate_grid, GridAxes, MultiPolynomial, QuasiPolynomial, Rational,
};
use crate::error::{Error, Result};

const HELD_OUT: usize = 10;
const SEED: u64 = 0x0068_7572_7769_747a;

/// `6g - 6 + 3n`, the degree of `K^_{g,n}`.
pub fn pruned_degree(g: usize, n: usize) -> u32 {
    (6 * g + 3 * n - 6) as u32
}

fn check_stable(g: usize, n: usize) -> Result<()> {
    if n == 0 || !stable(g, n) {
        return Err(Error::domain(format!("(g, n) = ({g}, {n}) is not stable")));
    }
    Ok(())
}

fn held_out_check<F>(poly: &MultiPolynomial, points: &[Vec<i64>], f: F) -> Result<()>
where
    F: Fn(&[usize]) -> Rational,
{
    for p in points {
        let mu: Vec<usize> = p.iter().map(|&x| x as usize).collect();
        let want = f(&mu);
        let got = poly.eval_int(p);
        if got != want {
            return Err(Error::Inconsistent(format!(
                "interpolant gives {} at {p:?}, recursion gives {}",
                format_rational(&got),
                format_rational(&want)
            )));
        }
    }
    Ok(())
}

fn simple_cache() -> &'static RwLock<HashMap<(usize, usize), MultiPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, usize), MultiPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(RwLock::default)
}

/// The symmetric polynomial equal to `K^_{g,n}` at every positive tuple.
///
/// Interpolates `K^_{g,n}(mu) / prod mu_i`, of degree `D = 6g-6+2n`, from
/// recursion values on `{1, ..., D+1}^n`, multiplies back by `prod mu_i`,
/// then checks ten pseudo-random held-out tuples with entries up to `2D + 1`
/// against the recursion.
pub fn pruned_simple_polynomial(g: usize, n: usize) -> Result<MultiPolynomial> {
    check_stable(g, n)?;
    if let Some(p) = simple_cache().read().expect("poly cache").get(&(g, n)) {
        return Ok(p.clone());
    }
    let degree = pruned_degree(g, n);
    let reduced = degree - n as u32;
    let axes = GridAxes::uniform(n, 1, 1, reduced as usize + 1);
    let quotient = interpolate_grid(&axes, reduced, true, |p| {
        let mu: Vec<usize> = p.iter().map(|&x| x as usize).collect();
        let prod: i64 = p.iter().product();
        Ok(pruned_simple_value(g, &mu) / int(prod))
    })?;
    let poly = quotient.multiply_by_variables();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (g as u64) << 8 ^ n as u64);
    let top = 2 * i64::from(reduced.max(1)) + 1;
    let points: Vec<Vec<i64>> = (0..HELD_OUT).map(|_| (0..n).map(|_| rng.random_range(1..=top)).collect()).collect();
    held_out_check(&poly, &points, |mu| pruned_simple_value(g, mu))?;
    simple_cache().write().expect("poly cache").insert((g, n), poly.clone());
    Ok(poly)
}

/// `a^{|mu|/a}`, the exponential factor carried by `K^[a]_{g,n}(mu)`.
///
/// The critical points of `x(z) = z exp(-z^a)` lie on `z^a = 1/a`, so the
/// expansion coefficients of the pruned differentials grow like `a^{mu_i/a}`.
pub fn orbifold_scale(a: usize, mu: &[usize]) -> Rational {
    let size: usize = mu.iter().sum();
    let base = int(a as i64);
    let e = (size / a) as i32;
    num_traits::Pow::pow(&base, e)
}

/// The quasi-polynomial `Q` modulo `a` with `K^[a]_{g,n}(mu) = a^{|mu|/a} Q(mu)`,
/// one interpolant of degree at most `6g-6+3n` per residue class. Classes
/// with `a` not dividing the coordinate sum vanish.
pub fn pruned_orbifold_quasipolynomial(a: usize, g: usize, n: usize) -> Result<QuasiPolynomial> {
    check_stable(g, n)?;
    if a == 0 {
        return Err(Error::domain("orbifold parameter a must be positive"));
    }
    let degree = pruned_degree(g, n);
    let side = degree as usize + 1;
    let mut out = QuasiPolynomial::new(a as u32, n);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (a as u64) << 16 ^ (g as u64) << 8 ^ n as u64);
    let classes = GridAxes(vec![(0..a as i64).collect(); n]).points();
    for residues in classes {
        if residues.iter().sum::<i64>() % a as i64 != 0 {
            continue;
        }
        let base: Vec<i64> = residues.iter().map(|&r| if r == 0 { a as i64 } else { r }).collect();
        let axes = GridAxes(base.iter().map(|&b| (0..side as i64).map(|t| b + a as i64 * t).collect()).collect());
        let samples: Vec<(Vec<i64>, Rational)> = {
            use rayon::prelude::*;
            axes.points()
                .into_par_iter()
                .map(|p| {
                    let mu: Vec<usize> = p.iter().map(|&x| x as usize).collect();
                    let v = pruned_orbifold_value(a, g, &mu) / orbifold_scale(a, &mu);
                    (p, v)
                })
                .collect()
        };
        let poly = interpolate(&samples, degree, n)?;
        let top = 2 * side as i64;
        let points: Vec<Vec<i64>> =
            (0..HELD_OUT).map(|_| base.iter().map(|&b| b + a as i64 * rng.random_range(0..=top)).collect()).collect();
        held_out_check(&poly, &points, |mu| pruned_orbifold_value(a, g, mu) / orbifold_scale(a, mu))?;
        out.set_branch(residues.iter().map(|&r| r as u32).collect(), poly);
    }
    Ok(out)
}
