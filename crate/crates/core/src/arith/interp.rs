use std::collections::{BTreeSet, HashMap};

use num_traits::Zero;
use rayon::prelude::*;

use super::poly::MultiPolynomial;
use super::rational::{format_rational, int, Rational};
use crate::error::{Error, Result};

/// Monomial coefficients (lowest degree first) of the polynomial through
/// `(nodes[i], values[i])`, by Newton divided differences.
pub fn newton_coefficients(nodes: &[Rational], values: &[Rational]) -> Vec<Rational> {
    assert_eq!(nodes.len(), values.len());
    let n = nodes.len();
    if n == 0 {
        return Vec::new();
    }
    let mut dd = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&nodes[i] - &nodes[i - level]);
        }
    }
    // Horner expansion of the Newton form.
    let mut coeffs = vec![dd[n - 1].clone()];
    for k in (0..n - 1).rev() {
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &nodes[k];
        }
        next[0] += &dd[k];
        coeffs = next;
    }
    coeffs
}

/// Interpolation nodes along each axis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridAxes(pub Vec<Vec<i64>>);

impl GridAxes {
    /// `{start, start + step, ...}` with `len` nodes on each of `nvars` axes.
    pub fn uniform(nvars: usize, start: i64, step: i64, len: usize) -> Self {
        GridAxes(vec![(0..len as i64).map(|t| start + step * t).collect(); nvars])
    }

    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for axis in &self.0 {
            out = out
                .into_iter()
                .flat_map(|p| {
                    axis.iter().map(move |&x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        out
    }
}

/// The unique polynomial of total degree at most `degree_bound` in `nvars`
/// variables through the samples.
///
/// The `degree_bound + 1` smallest distinct coordinates on each axis must form
/// a complete rectangular grid; the interpolant is built on that grid by
/// iterated univariate Newton interpolation, then checked against every
/// sample. A missing grid point is [`Error::UnderDetermined`]; a total degree
/// above the bound or a sample off the interpolant is [`Error::Inconsistent`].
pub fn interpolate(samples: &[(Vec<i64>, Rational)], degree_bound: u32, nvars: usize) -> Result<MultiPolynomial> {
    let side = degree_bound as usize + 1;
    let mut values: HashMap<&[i64], &Rational> = HashMap::with_capacity(samples.len());
    let mut coords: Vec<BTreeSet<i64>> = vec![BTreeSet::new(); nvars];
    for (point, value) in samples {
        if point.len() != nvars {
            return Err(Error::domain(format!("sample {point:?} has wrong arity, expected {nvars}")));
        }
        if let Some(prev) = values.insert(point.as_slice(), value) {
            if prev != value {
                return Err(Error::Inconsistent(format!("two values at {point:?}")));
            }
        }
        for (axis, &x) in point.iter().enumerate() {
            coords[axis].insert(x);
        }
    }
    let mut nodes: Vec<Vec<i64>> = Vec::with_capacity(nvars);
    for (axis, set) in coords.iter().enumerate() {
        if set.len() < side {
            return Err(Error::UnderDetermined(format!(
                "axis {axis} has {} distinct nodes, degree {degree_bound} needs {side}",
                set.len()
            )));
        }
        nodes.push(set.iter().take(side).copied().collect());
    }

    let total = side.checked_pow(nvars as u32).ok_or_else(|| Error::domain("grid too large"))?;
    let mut tensor: Vec<Rational> = Vec::with_capacity(total);
    let mut point = vec![0i64; nvars];
    for idx in 0..total {
        let mut rem = idx;
        for axis in 0..nvars {
            point[axis] = nodes[axis][rem % side];
            rem /= side;
        }
        match values.get(point.as_slice()) {
            Some(v) => tensor.push((*v).clone()),
            None => return Err(Error::UnderDetermined(format!("no sample at grid point {point:?}"))),
        }
    }

    let mut stride = 1usize;
    for axis_nodes in &nodes {
        let rational_nodes: Vec<Rational> = axis_nodes.iter().map(|&x| int(x)).collect();
        let basis: Vec<Vec<Rational>> = (0..side)
            .map(|j| {
                let unit: Vec<Rational> = (0..side).map(|i| if i == j { int(1) } else { Rational::zero() }).collect();
                newton_coefficients(&rational_nodes, &unit)
            })
            .collect();
        for base in 0..total {
            if (base / stride) % side != 0 {
                continue;
            }
            let fiber: Vec<Rational> = (0..side).map(|j| tensor[base + j * stride].clone()).collect();
            for k in 0..side {
                let mut acc = Rational::zero();
                for (j, v) in fiber.iter().enumerate() {
                    if !v.is_zero() && !basis[j][k].is_zero() {
                        acc += v * &basis[j][k];
                    }
                }
                tensor[base + k * stride] = acc;
            }
        }
        stride *= side;
    }

    let mut terms = Vec::new();
    for (idx, c) in tensor.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut rem = idx;
        let exp: Vec<u32> = (0..nvars)
            .map(|_| {
                let e = (rem % side) as u32;
                rem /= side;
                e
            })
            .collect();
        terms.push((exp, c));
    }
    let poly = MultiPolynomial::from_terms(nvars, terms);
    if let Some(deg) = poly.total_degree() {
        if deg > degree_bound {
            return Err(Error::Inconsistent(format!("grid values need total degree {deg}, bound is {degree_bound}")));
        }
    }
    // The tensor interpolant reproduces the grid exactly; only off-grid
    // samples can disagree with it.
    let on_grid = |point: &[i64]| point.iter().zip(&nodes).all(|(x, axis)| axis.contains(x));
    for (point, value) in samples.iter().filter(|(p, _)| !on_grid(p)) {
        let got = poly.eval_int(point);
        if &got != value {
            return Err(Error::Inconsistent(format!(
                "interpolant gives {} at {point:?}, sample is {}",
                format_rational(&got),
                format_rational(value)
            )));
        }
    }
    Ok(poly)
}

/// Evaluates `f` on the grid (in parallel) and interpolates. With `symmetric`
/// set, `f` is called once per sorted tuple and the value reused for every
/// rearrangement.
pub fn interpolate_grid<F>(axes: &GridAxes, degree_bound: u32, symmetric: bool, f: F) -> Result<MultiPolynomial>
where
    F: Fn(&[i64]) -> Result<Rational> + Sync,
{
    let nvars = axes.0.len();
    let points = axes.points();
    let key = |p: &[i64]| {
        let mut k = p.to_vec();
        if symmetric {
            k.sort_unstable();
        }
        k
    };
    let distinct: BTreeSet<Vec<i64>> = points.iter().map(|p| key(p)).collect();
    let distinct: Vec<Vec<i64>> = distinct.into_iter().collect();
    let evaluated: Vec<Rational> = distinct.par_iter().map(|p| f(p)).collect::<Result<Vec<Rational>>>()?;
    let lookup: HashMap<&[i64], &Rational> = distinct.iter().map(Vec::as_slice).zip(evaluated.iter()).collect();
    let samples: Vec<(Vec<i64>, Rational)> = points
        .into_iter()
        .map(|p| {
            let v = lookup[key(&p).as_slice()].clone();
            (p, v)
        })
        .collect();
    interpolate(&samples, degree_bound, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use proptest::prelude::*;

    #[test]
    fn cubes() {
        let samples: Vec<_> = (1..=4).map(|x| (vec![x], int(x * x * x))).collect();
        let p = interpolate(&samples, 3, 1).unwrap();
        assert_eq!(p, MultiPolynomial::var(1, 0).pow(3));
    }

    #[test]
    fn product_of_three() {
        let axes = GridAxes::uniform(3, 1, 1, 4);
        let p = interpolate_grid(&axes, 3, true, |m| Ok(int(m[0] * m[1] * m[2]))).unwrap();
        let v = |i| MultiPolynomial::var(3, i);
        assert_eq!(p, &(&v(0) * &v(1)) * &v(2));
    }

    #[test]
    fn stirling_row_one() {
        use crate::arith::stirling2;
        let samples: Vec<_> =
            (1..=3u32).map(|v| (vec![v as i64], Rational::from_integer(stirling2(v + 1, v)))).collect();
        let p = interpolate(&samples, 2, 1).unwrap();
        assert_eq!(p, MultiPolynomial::from_coefficients(&[rat(0, 1), rat(1, 2), rat(1, 2)]));
    }

    #[test]
    fn missing_grid_point() {
        let samples = vec![(vec![1, 1], int(1)), (vec![1, 2], int(2)), (vec![2, 1], int(2))];
        assert!(matches!(interpolate(&samples, 1, 2), Err(Error::UnderDetermined(_))));
        let samples = vec![(vec![1], int(1))];
        assert!(matches!(interpolate(&samples, 1, 1), Err(Error::UnderDetermined(_))));
    }

    #[test]
    fn inconsistent_samples() {
        // x^2 sampled on four points but declared linear.
        let samples: Vec<_> = (1..=4).map(|x| (vec![x], int(x * x))).collect();
        assert!(matches!(interpolate(&samples, 1, 1), Err(Error::Inconsistent(_))));
        // x*y has per-axis degree 1 but total degree 2.
        let axes = GridAxes::uniform(2, 1, 1, 2);
        assert!(matches!(interpolate_grid(&axes, 1, false, |m| Ok(int(m[0] * m[1]))), Err(Error::Inconsistent(_))));
    }

    fn arb_poly() -> impl Strategy<Value = MultiPolynomial> {
        (1usize..=3, 0u32..=6).prop_flat_map(|(n, deg)| {
            let term = (prop::collection::vec(0u32..=6, n), -9i64..9, 1i64..4);
            prop::collection::vec(term, 0..8).prop_map(move |ts| {
                MultiPolynomial::from_terms(
                    n,
                    ts.into_iter().filter(|(e, _, _)| e.iter().sum::<u32>() <= deg).map(|(e, c, d)| (e, rat(c, d))),
                )
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn interpolation_inverts_evaluation(p in arb_poly()) {
            let n = p.nvars();
            let deg = p.total_degree().unwrap_or(0);
            let axes = GridAxes::uniform(n, -2, 1, deg as usize + 1);
            let mut samples: Vec<(Vec<i64>, Rational)> =
                axes.points().into_iter().map(|pt| { let v = p.eval_int(&pt); (pt, v) }).collect();
            let held_out = vec![7i64; n];
            samples.push((held_out.clone(), p.eval_int(&held_out)));
            prop_assert_eq!(interpolate(&samples, deg, n).unwrap(), p);
        }
    }
}
