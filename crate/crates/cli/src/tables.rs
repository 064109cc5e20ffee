//! Reference tables, stored as data, next to recomputed values.

use std::collections::BTreeSet;

use hurwitz_core::arith::{int, rat, MultiPolynomial, Rational};
use hurwitz_core::belyi::gw_eval;
use hurwitz_core::intersection::q_polynomial;
use hurwitz_core::recursion::pruned_simple_polynomial;
use hurwitz_core::Result;

/// `sum` of `x^lambda` over the distinct rearrangements of `lambda` padded to `n` slots.
pub fn monomial_symmetric(n: usize, lambda: &[u32]) -> MultiPolynomial {
    let mut exp = lambda.to_vec();
    exp.resize(n, 0);
    exp.sort_unstable();
    let mut seen = BTreeSet::new();
    let mut out = MultiPolynomial::zero(n);
    loop {
        if seen.insert(exp.clone()) {
            out = out + MultiPolynomial::monomial(n, exp.clone(), int(1));
        }
        if !next_permutation(&mut exp) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("a larger element exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn combination(n: usize, terms: &[(Rational, &[u32])]) -> MultiPolynomial {
    terms.iter().fold(MultiPolynomial::zero(n), |acc, (c, lambda)| acc + monomial_symmetric(n, lambda).scale(c))
}

/// One row of the pruned polynomial table, `K^_{g,n} / prod mu_i`.
pub struct KhatRow {
    pub g: usize,
    pub n: usize,
    pub text: &'static str,
    pub printed: MultiPolynomial,
}

pub fn khat_rows() -> Vec<KhatRow> {
    let x = |n: usize, i: usize| MultiPolynomial::var(n, i);
    let (x1, x2) = (x(2, 0), x(2, 1));
    let two = |a: &MultiPolynomial, b: &MultiPolynomial| a + b;
    let g21 = [
        (0u32, rat(0, 1)),
        (1, rat(13, 138240)),
        (2, rat(329, 1658880)),
        (3, rat(-53, 552960)),
        (4, rat(-1873, 6635520)),
        (5, rat(-7, 276480)),
        (6, rat(271, 3317760)),
        (7, rat(1, 36864)),
        (8, rat(1, 442368)),
    ];
    vec![
        KhatRow { g: 0, n: 3, text: "1", printed: MultiPolynomial::one(3) },
        KhatRow {
            g: 0,
            n: 4,
            text: "1/2 sum mu_i^2 + 1/2 sum mu_i",
            printed: combination(4, &[(rat(1, 2), &[2]), (rat(1, 2), &[1])]),
        },
        KhatRow {
            g: 0,
            n: 5,
            text: "1/8 sum mu_i^4 + 1/2 sum mu_i^2 mu_j^2 + 5/12 sum mu_i^3 + 1/2 sum mu_i^2 mu_j + 3/8 sum mu_i^2 + 1/2 sum mu_i mu_j + 1/12 sum mu_i",
            printed: combination(
                5,
                &[
                    (rat(1, 8), &[4]),
                    (rat(1, 2), &[2, 2]),
                    (rat(5, 12), &[3]),
                    (rat(1, 2), &[2, 1]),
                    (rat(3, 8), &[2]),
                    (rat(1, 2), &[1, 1]),
                    (rat(1, 12), &[1]),
                ],
            ),
        },
        KhatRow {
            g: 1,
            n: 1,
            text: "1/48 mu_1^2 + 1/48 mu_1 - 1/24",
            printed: MultiPolynomial::from_coefficients(&[rat(-1, 24), rat(1, 48), rat(1, 48)]),
        },
        KhatRow {
            g: 1,
            n: 2,
            text: "1/192 (mu_1^4 + mu_2^4) + 1/96 mu_1^2 mu_2^2 + 5/288 (mu_1^3 + mu_2^3) + 1/96 (mu_1^2 mu_2 + mu_1 mu_2^2) - 1/192 (mu_1^2 + mu_2^2) + 1/96 mu_1 mu_2 - 5/288 (mu_1 + mu_2)",
            printed: two(&x1.pow(4), &x2.pow(4)).scale(&rat(1, 192))
                + (&x1.pow(2) * &x2.pow(2)).scale(&rat(1, 96))
                + two(&x1.pow(3), &x2.pow(3)).scale(&rat(5, 288))
                + two(&(&x1.pow(2) * &x2), &(&x1 * &x2.pow(2))).scale(&rat(1, 96))
                - two(&x1.pow(2), &x2.pow(2)).scale(&rat(1, 192))
                + (&x1 * &x2).scale(&rat(1, 96))
                - two(&x1, &x2).scale(&rat(5, 288)),
        },
        KhatRow {
            g: 2,
            n: 1,
            text: "1/442368 mu^8 + 1/36864 mu^7 + 271/3317760 mu^6 - 7/276480 mu^5 - 1873/6635520 mu^4 - 53/552960 mu^3 + 329/1658880 mu^2 + 13/138240 mu",
            printed: MultiPolynomial::from_coefficients(&g21.iter().map(|(_, c)| c.clone()).collect::<Vec<_>>()),
        },
    ]
}

/// Printed row against `pruned_simple_polynomial / prod mu_i`.
pub struct KhatComparison {
    pub row: KhatRow,
    pub recomputed: MultiPolynomial,
}

impl KhatComparison {
    pub fn matches(&self) -> bool {
        self.row.printed == self.recomputed
    }
}

pub fn compare_khat() -> Result<Vec<KhatComparison>> {
    khat_rows()
        .into_iter()
        .map(|row| {
            let full = pruned_simple_polynomial(row.g, row.n)?;
            let recomputed = full.divide_by_variables().unwrap_or_else(|| MultiPolynomial::zero(row.n));
            Ok(KhatComparison { row, recomputed })
        })
        .collect()
}

/// `(d, numerators from nu^0 upward, denominator)` of the printed `q_d` rows.
pub const Q_ROWS: [(u32, &[i64], i64); 6] = [
    (0, &[1], 1),
    (1, &[0, 1, 1], 2),
    (2, &[0, 2, 9, 10, 3], 24),
    (3, &[0, 0, 6, 17, 17, 7, 1], 48),
    (4, &[0, -48, 20, 900, 2015, 1848, 830, 180, 15], 5760),
    (5, &[0, 0, -240, 52, 2120, 4055, 3467, 1598, 410, 55, 3], 11520),
];

pub fn q_printed(d: u32) -> Option<MultiPolynomial> {
    Q_ROWS
        .iter()
        .find(|row| row.0 == d)
        .map(|(_, num, den)| MultiPolynomial::from_coefficients(&num.iter().map(|&c| rat(c, *den)).collect::<Vec<_>>()))
}

pub fn q_recomputed(d: u32) -> MultiPolynomial {
    q_polynomial(d)
}

/// One printed row of the Gromov–Witten table.
pub struct GwRow {
    pub g: u32,
    pub n: usize,
    /// Admissible counts of odd entries.
    pub odd: &'static [usize],
    pub text: &'static str,
    pub printed: fn(&[i64]) -> Rational,
}

fn sq(mu: &[i64]) -> i64 {
    mu.iter().map(|x| x * x).sum()
}

pub fn gw_rows() -> Vec<GwRow> {
    vec![
        GwRow { g: 0, n: 3, odd: &[0, 2], text: "0", printed: |_| int(0) },
        GwRow { g: 0, n: 3, odd: &[1, 3], text: "1", printed: |_| int(1) },
        GwRow { g: 1, n: 1, odd: &[0], text: "0", printed: |_| int(0) },
        GwRow { g: 1, n: 1, odd: &[1], text: "(1/48)(mu_1^2 - 3)", printed: |m| rat(sq(m) - 3, 48) },
        GwRow { g: 0, n: 4, odd: &[0, 4], text: "(1/4)(sum mu_i^2)", printed: |m| rat(sq(m), 4) },
        GwRow { g: 0, n: 4, odd: &[1, 3], text: "0", printed: |_| int(0) },
        GwRow { g: 0, n: 4, odd: &[2], text: "(1/4)(sum mu_i^2 - 2)", printed: |m| rat(sq(m) - 2, 4) },
        GwRow {
            g: 1,
            n: 2,
            odd: &[0],
            text: "(1/384)(mu_1^2 + mu_2^2 - 8)(mu_1^2 + mu_2^2)",
            printed: |m| rat((sq(m) - 8) * sq(m), 384),
        },
        GwRow { g: 1, n: 2, odd: &[1], text: "0", printed: |_| int(0) },
        GwRow {
            g: 1,
            n: 2,
            odd: &[2],
            text: "(1/384)(mu_1^2 + mu_2^2 - 6)(mu_1^2 + mu_2^2 - 2)",
            printed: |m| rat((sq(m) - 6) * (sq(m) - 2), 384),
        },
        GwRow { g: 2, n: 1, odd: &[0], text: "0", printed: |_| int(0) },
        GwRow {
            g: 2,
            n: 1,
            odd: &[1],
            text: "(mu_1^2 - 1)^2 (5 mu_1^4 - 186 mu_1^2 + 1605) / (2^16 3^3 5)",
            printed: |m| {
                let s = sq(m);
                rat((s - 1) * (s - 1) * (5 * s * s - 186 * s + 1605), 8_847_360)
            },
        },
    ]
}

/// Five tuples with entries in `1..=9` whose odd-entry count lies in
/// `row.odd`, spread evenly through the lexicographic list of such tuples.
pub fn gw_samples(row: &GwRow) -> Vec<Vec<u32>> {
    let mut all = vec![Vec::new()];
    for _ in 0..row.n {
        all = all
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (1..=9u32).map(move |k| {
                    let mut q = p.clone();
                    q.push(k);
                    q
                })
            })
            .collect();
    }
    all.retain(|mu| row.odd.contains(&mu.iter().filter(|&&x| x % 2 == 1).count()));
    (0..5).map(|k| all[k * all.len() / 5 + all.len() / 10].clone()).collect()
}

/// `(row, mu, printed, gw_eval)`.
pub type GwSample = (usize, Vec<u32>, Rational, Rational);

/// Every sample of every row.
pub fn compare_gw() -> Result<Vec<GwSample>> {
    let mut out = Vec::new();
    for (idx, row) in gw_rows().iter().enumerate() {
        for mu in gw_samples(row) {
            let point: Vec<i64> = mu.iter().map(|&x| i64::from(x)).collect();
            out.push((idx, mu.clone(), (row.printed)(&point), gw_eval(row.g, &mu)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_sums() {
        assert_eq!(monomial_symmetric(3, &[1, 1]).len(), 3);
        assert_eq!(monomial_symmetric(3, &[2, 1]).len(), 6);
        assert_eq!(monomial_symmetric(4, &[2, 2]).len(), 6);
        assert_eq!(monomial_symmetric(2, &[]).len(), 1);
    }

    #[test]
    fn q_rows_match() {
        for (d, _, _) in Q_ROWS {
            assert_eq!(q_printed(d).unwrap(), q_recomputed(d));
        }
    }

    #[test]
    fn gw_samples_hit_every_row() {
        for row in gw_rows() {
            let samples = gw_samples(&row);
            assert_eq!(samples.len(), 5);
            for mu in samples {
                let odd = mu.iter().filter(|&&x| x % 2 == 1).count();
                assert!(row.odd.contains(&odd));
            }
        }
        assert!(compare_gw().unwrap().iter().all(|(_, _, a, b)| a == b));
    }
}
