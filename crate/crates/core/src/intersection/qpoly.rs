use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Zero};

use crate::arith::{double_factorial, factorial, int, interpolate, stirling2, MultiPolynomial, Rational};

fn q_cache() -> &'static RwLock<HashMap<u32, MultiPolynomial>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, MultiPolynomial>>> = OnceLock::new();
    CACHE.get_or_init(RwLock::default)
}

/// `q_d`, the degree-`2d` polynomial with `q_d(nu) = S(nu + d, nu)` for `nu >= 1`.
///
/// Built by interpolating Stirling numbers at `nu = 1, ..., 2d + 1`; the
/// recurrence `q_d(nu) = q_d(nu - 1) + nu q_{d-1}(nu)` is asserted on the result.
pub fn q_polynomial(d: u32) -> MultiPolynomial {
    if let Some(q) = q_cache().read().expect("q cache").get(&d) {
        return q.clone();
    }
    let samples: Vec<(Vec<i64>, Rational)> =
        (1..=2 * d + 1).map(|nu| (vec![i64::from(nu)], Rational::from_integer(stirling2(nu + d, nu)))).collect();
    let q = interpolate(&samples, 2 * d, 1).expect("Stirling samples determine q_d");
    if d > 0 {
        assert!(differences_match(&q, &q_polynomial(d - 1)), "q_{d} violates q_d(v) = q_d(v-1) + v q_(d-1)(v)");
    }
    q_cache().write().expect("q cache").insert(d, q.clone());
    q
}

/// `q(v) - q(v - 1) == v p(v)` as polynomials.
fn differences_match(q: &MultiPolynomial, p: &MultiPolynomial) -> bool {
    let v = MultiPolynomial::var(1, 0);
    let shifted = q.compose(&[&v - &MultiPolynomial::one(1)]);
    q - &shifted == &v * p
}

/// Both recurrences for `q_{d+1}` hold as polynomial identities:
/// the difference form and `q_{d+1}(v) = sum_{i=1}^{v} i q_d(i)`.
pub fn q_recurrences_hold(d: u32) -> bool {
    let (q, next) = (q_polynomial(d), q_polynomial(d + 1));
    let v = MultiPolynomial::var(1, 0);
    let partial = (&v * &q).definite_sum(0, &v);
    differences_match(&next, &q) && partial == next
}

/// `mu^{mu+d+1}/mu! = sum_{nu=1}^{mu} q_d(nu) nu mu^{mu-nu}/(mu-nu)!`.
pub fn q_defining_system_holds(d: u32, mu: u32) -> bool {
    let q = q_polynomial(d);
    let m = int(i64::from(mu));
    let lhs = num_traits::Pow::pow(&m, mu + d + 1) / Rational::from_integer(factorial(mu));
    let mut rhs = Rational::zero();
    for nu in 1..=mu {
        let weight =
            num_traits::Pow::pow(&m, mu - nu) * int(i64::from(nu)) / Rational::from_integer(factorial(mu - nu));
        rhs += q.eval_int(&[i64::from(nu)]) * weight;
    }
    lhs == rhs
}

/// `a_d = 1/(2d)!!`, the leading coefficient of `q_d`.
pub fn q_leading_coefficient(d: u32) -> Rational {
    Rational::new(One::one(), double_factorial(2 * i64::from(d)).expect("non-negative"))
}

/// `P_i(x, y) = sum_{alpha + beta = x + y + 1} alpha beta q_i(alpha)`.
pub fn p_single(i: u32) -> MultiPolynomial {
    // variables: x, y, alpha
    let x = MultiPolynomial::var(3, 0);
    let y = MultiPolynomial::var(3, 1);
    let alpha = MultiPolynomial::var(3, 2);
    let one = MultiPolynomial::one(3);
    let total = &(&x + &y) + &one;
    let q = q_polynomial(i).embed(3, &[2]);
    let summand = &(&alpha * &(&total - &alpha)) * &q;
    let summed = summand.definite_sum(2, &(&total - &one));
    MultiPolynomial::from_terms(2, summed.terms().map(|(e, c)| (vec![e[0], e[1]], c.clone())))
}

/// `P_{i,j}(x) = sum_{alpha + beta + gamma = x + 1} alpha beta gamma q_i(alpha) q_j(beta)`.
pub fn p_double(i: u32, j: u32) -> MultiPolynomial {
    // variables: x, alpha, beta
    let x = MultiPolynomial::var(3, 0);
    let alpha = MultiPolynomial::var(3, 1);
    let beta = MultiPolynomial::var(3, 2);
    let one = MultiPolynomial::one(3);
    let gamma = &(&(&x + &one) - &alpha) - &beta;
    let summand = &(&(&(&alpha * &beta) * &gamma) * &q_polynomial(i).embed(3, &[1])) * &q_polynomial(j).embed(3, &[2]);
    let inner = summand.definite_sum(2, &(&x - &alpha));
    let outer = inner.definite_sum(1, &(&x - &one));
    MultiPolynomial::from_terms(1, outer.terms().map(|(e, c)| (vec![e[0]], c.clone())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{power_sum_polynomial, rat};

    fn poly(coeffs: &[i64], denom: i64) -> MultiPolynomial {
        MultiPolynomial::from_coefficients(&coeffs.iter().map(|&c| rat(c, denom)).collect::<Vec<_>>())
    }

    #[test]
    fn table_rows() {
        assert_eq!(q_polynomial(0), MultiPolynomial::one(1));
        assert_eq!(q_polynomial(1), poly(&[0, 1, 1], 2));
        assert_eq!(q_polynomial(2), poly(&[0, 2, 9, 10, 3], 24));
        assert_eq!(q_polynomial(3), poly(&[0, 0, 6, 17, 17, 7, 1], 48));
        assert_eq!(q_polynomial(4), poly(&[0, -48, 20, 900, 2015, 1848, 830, 180, 15], 5760));
        assert_eq!(q_polynomial(5), poly(&[0, 0, -240, 52, 2120, 4055, 3467, 1598, 410, 55, 3], 11520));
        assert_eq!(q_polynomial(2).eval_int(&[2]), int(7));
    }

    #[test]
    fn stirling_values_and_leading_terms() {
        for d in 0..=8 {
            let q = q_polynomial(d);
            for v in 1..=12u32 {
                assert_eq!(q.eval_int(&[i64::from(v)]), Rational::from_integer(stirling2(v + d, v)));
            }
            assert_eq!(q.degree_in(0), Some(2 * d));
            assert_eq!(q.coefficient(&[2 * d]), q_leading_coefficient(d));
            assert!(q_recurrences_hold(d));
        }
    }

    #[test]
    fn defining_system() {
        for d in 0..=4 {
            for mu in 1..=10 {
                assert!(q_defining_system_holds(d, mu), "d={d} mu={mu}");
            }
        }
    }

    #[test]
    fn p_zero_closed_form() {
        let x = MultiPolynomial::var(2, 0);
        let y = MultiPolynomial::var(2, 1);
        let n = &(&x + &y) + &MultiPolynomial::one(2);
        let want = (&(&n * &n) * &n - n.clone()).scale(&rat(1, 6));
        assert_eq!(p_single(0), want);
    }

    #[test]
    fn p_single_symmetry_and_leading() {
        for i in 0..=3 {
            let p = p_single(i);
            assert_eq!(p.total_degree(), Some(2 * i + 3));
            assert_eq!(p.permute(&[1, 0]), p);
        }
        for (a, b) in [(1u32, 0u32), (0, 1), (1, 1), (2, 1), (0, 3)] {
            let p = p_single(a + b - 1);
            let want = Rational::new(
                double_factorial(2 * i64::from(a + b) - 1).unwrap(),
                factorial(2 * a + 1) * factorial(2 * b),
            );
            assert_eq!(p.coefficient(&[2 * a + 1, 2 * b]), want, "a={a} b={b}");
        }
        assert_eq!(p_single(0).coefficient(&[3, 0]), rat(1, 6));
    }

    #[test]
    fn p_double_values() {
        assert_eq!(p_double(0, 0).eval_int(&[2]), int(1));
        assert_eq!(p_double(0, 0).coefficient(&[5]), rat(1, 120));
        for (a, b) in [(0u32, 1u32), (1, 1), (2, 0)] {
            let p = p_double(a, b);
            assert_eq!(p, p_double(b, a));
            assert_eq!(p.degree_in(0), Some(2 * a + 2 * b + 5));
            let want = Rational::new(
                double_factorial(2 * i64::from(a) + 1).unwrap() * double_factorial(2 * i64::from(b) + 1).unwrap(),
                factorial(2 * a + 2 * b + 5),
            );
            assert_eq!(p.coefficient(&[2 * a + 2 * b + 5]), want);
        }
        // direct summation at x = 5
        let q1 = q_polynomial(1);
        let mut direct = Rational::zero();
        for alpha in 1..=4i64 {
            for beta in 1..=(5 - alpha) {
                let gamma = 6 - alpha - beta;
                if gamma >= 1 {
                    direct += int(alpha * beta * gamma) * q1.eval_int(&[alpha]);
                }
            }
        }
        assert_eq!(p_double(1, 0).eval_int(&[5]), direct);
    }

    #[test]
    fn power_sum_lemma() {
        let exps: Vec<Vec<u32>> =
            vec![vec![0], vec![3], vec![1, 1], vec![2, 0], vec![2, 3], vec![1, 1, 1], vec![0, 2, 4], vec![3, 3]];
        for k in exps {
            let p = power_sum_polynomial(&k);
            let m = k.len() as u32;
            let total: u32 = k.iter().sum();
            assert_eq!(p.degree_in(0), Some(total + m - 1), "k={k:?}");
            let num: num_bigint::BigInt = k.iter().map(|&x| factorial(x)).product();
            assert_eq!(p.coefficient(&[total + m - 1]), Rational::new(num, factorial(total + m - 1)));
        }
    }
}
