use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Lazily grown table of rows. Readers take the shared lock; a missing row is
/// built under the exclusive lock and pushed whole, so a row is either absent
/// or complete.
struct Triangle {
    rows: RwLock<Vec<Vec<BigInt>>>,
    next_row: fn(usize, Option<&[BigInt]>) -> Vec<BigInt>,
}

impl Triangle {
    const fn new(next_row: fn(usize, Option<&[BigInt]>) -> Vec<BigInt>) -> Self {
        Triangle { rows: RwLock::new(Vec::new()), next_row }
    }

    fn get(&self, n: usize, k: usize) -> BigInt {
        {
            let rows = self.rows.read().expect("triangle lock poisoned");
            if let Some(row) = rows.get(n) {
                return row.get(k).cloned().unwrap_or_default();
            }
        }
        let mut rows = self.rows.write().expect("triangle lock poisoned");
        while rows.len() <= n {
            let row = (self.next_row)(rows.len(), rows.last().map(Vec::as_slice));
            rows.push(row);
        }
        rows[n].get(k).cloned().unwrap_or_default()
    }
}

fn stirling_row(n: usize, prev: Option<&[BigInt]>) -> Vec<BigInt> {
    let Some(prev) = prev else {
        return vec![BigInt::one()];
    };
    (0..=n)
        .map(|k| {
            let stay = prev.get(k).map(|s| s * k).unwrap_or_default();
            let new_block = if k == 0 { BigInt::zero() } else { prev[k - 1].clone() };
            stay + new_block
        })
        .collect()
}

fn eulerian_row(m: usize, prev: Option<&[BigInt]>) -> Vec<BigInt> {
    let Some(prev) = prev else {
        return vec![BigInt::one()];
    };
    (0..m.max(1))
        .map(|k| {
            let keep = prev.get(k).map(|a| a * (k + 1)).unwrap_or_default();
            let add = if k == 0 { BigInt::zero() } else { prev.get(k - 1).map(|a| a * (m - k)).unwrap_or_default() };
            keep + add
        })
        .collect()
}

fn factorial_row(n: usize, prev: Option<&[BigInt]>) -> Vec<BigInt> {
    match prev {
        None => vec![BigInt::one()],
        Some(prev) => vec![&prev[0] * n],
    }
}

static STIRLING: Triangle = Triangle::new(stirling_row);
static EULERIAN: Triangle = Triangle::new(eulerian_row);
static FACTORIAL: Triangle = Triangle::new(factorial_row);

pub fn factorial(n: u32) -> BigInt {
    FACTORIAL.get(n as usize, 0)
}

/// `n!!`, with `(-1)!! = 0!! = 1`.
pub fn double_factorial(n: i64) -> Result<BigInt> {
    if n < -1 {
        return Err(Error::domain(format!("double factorial of {n}")));
    }
    let mut acc = BigInt::one();
    let mut k = n;
    while k > 1 {
        acc *= k;
        k -= 2;
    }
    Ok(acc)
}

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Eulerian number `A(m, k)`: permutations of `{1..m}` with exactly `k` ascents.
/// Zero outside `0 <= k <= m - 1`.
pub fn eulerian(m: i64, k: i64) -> BigInt {
    if m < 0 || k < 0 || (m > 0 && k >= m) || (m == 0 && k > 0) {
        return BigInt::zero();
    }
    EULERIAN.get(m as usize, k as usize)
}

/// Stirling number of the second kind `S(n, k)`.
pub fn stirling2(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    STIRLING.get(n as usize, k as usize)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Combinatorial {
    Factorial,
    DoubleFactorial,
    Binomial,
}

/// Argument-checked entry point for the elementary counting functions.
pub fn basic_combinatorics(kind: Combinatorial, args: &[i64]) -> Result<BigInt> {
    let non_negative = |x: i64| -> Result<u64> {
        u64::try_from(x).map_err(|_| Error::domain(format!("negative argument {x} to {kind:?}")))
    };
    match (kind, args) {
        (Combinatorial::Factorial, [n]) => {
            let n = non_negative(*n)?;
            let n = u32::try_from(n).map_err(|_| Error::domain("factorial argument too large"))?;
            Ok(factorial(n))
        }
        (Combinatorial::DoubleFactorial, [n]) => double_factorial(*n),
        (Combinatorial::Binomial, [n, k]) => {
            let (n, k) = (non_negative(*n)?, non_negative(*k)?);
            if k > n {
                return Err(Error::domain(format!("binomial({n}, {k}) needs k <= n")));
            }
            Ok(binomial(n, k))
        }
        _ => Err(Error::domain(format!("{kind:?} called with {} arguments", args.len()))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ascents(p: &[usize]) -> usize {
        p.windows(2).filter(|w| w[0] < w[1]).count()
    }

    fn permutations(m: usize) -> Vec<Vec<usize>> {
        if m == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(m - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, m);
                out.push(q);
            }
        }
        out
    }

    /// Number of set partitions of `{0..n}` into exactly `k` blocks, via
    /// restricted growth strings.
    fn count_set_partitions(n: usize, k: usize) -> u64 {
        fn go(i: usize, n: usize, blocks: usize, k: usize) -> u64 {
            if i == n {
                return u64::from(blocks == k);
            }
            (0..=blocks.min(k.saturating_sub(1))).map(|b| go(i + 1, n, blocks.max(b + 1), k)).sum()
        }
        go(0, n, 0, k)
    }

    #[test]
    fn elementary_values() {
        let b = |kind, args: &[i64]| basic_combinatorics(kind, args).unwrap();
        assert_eq!(b(Combinatorial::Factorial, &[5]), BigInt::from(120));
        assert_eq!(b(Combinatorial::DoubleFactorial, &[7]), BigInt::from(105));
        assert_eq!(b(Combinatorial::DoubleFactorial, &[-1]), BigInt::one());
        assert_eq!(b(Combinatorial::DoubleFactorial, &[0]), BigInt::one());
        assert_eq!(b(Combinatorial::Binomial, &[4, 2]), BigInt::from(6));
        assert_eq!(factorial(0), BigInt::one());
    }

    #[test]
    fn domain_errors() {
        assert!(basic_combinatorics(Combinatorial::Factorial, &[-1]).is_err());
        assert!(basic_combinatorics(Combinatorial::DoubleFactorial, &[-3]).is_err());
        assert!(basic_combinatorics(Combinatorial::Binomial, &[2, 3]).is_err());
        assert!(basic_combinatorics(Combinatorial::Binomial, &[-2, 1]).is_err());
        assert!(basic_combinatorics(Combinatorial::Binomial, &[2]).is_err());
    }

    #[test]
    fn eulerian_matches_ascent_enumeration() {
        assert_eq!(eulerian(1, 0), BigInt::one());
        for m in 1..=6usize {
            let mut counts = vec![0u64; m];
            for p in permutations(m) {
                counts[ascents(&p)] += 1;
            }
            for (k, c) in counts.iter().enumerate() {
                assert_eq!(eulerian(m as i64, k as i64), BigInt::from(*c), "A({m},{k})");
            }
        }
        assert_eq!(eulerian(3, 1), BigInt::from(4));
        assert_eq!(eulerian(4, 1), BigInt::from(11));
        assert_eq!(eulerian(4, 4), BigInt::zero());
        assert_eq!(eulerian(4, -1), BigInt::zero());
    }

    #[test]
    fn stirling_matches_set_partitions() {
        for n in 0..=7usize {
            for k in 0..=n {
                assert_eq!(stirling2(n as u32, k as u32), BigInt::from(count_set_partitions(n, k)), "S({n},{k})");
            }
        }
        assert_eq!(stirling2(3, 3), BigInt::one());
        assert_eq!(stirling2(3, 2), BigInt::from(3));
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        assert_eq!(stirling2(4, 0), BigInt::zero());
    }

    #[test]
    fn eulerian_row_sums_and_symmetry() {
        for m in 1..=15i64 {
            let total: BigInt = (0..m).map(|k| eulerian(m, k)).sum();
            assert_eq!(total, factorial(m as u32));
            for k in 0..m {
                assert_eq!(eulerian(m, k), eulerian(m, m - 1 - k));
            }
        }
    }

    #[test]
    fn stirling_recurrence() {
        for n in 1..=20u32 {
            for k in 1..=n {
                let rhs = stirling2(n - 1, k) * k + stirling2(n - 1, k - 1);
                assert_eq!(stirling2(n, k), rhs);
            }
        }
    }

    #[test]
    fn concurrent_table_growth() {
        let handles: Vec<_> = (0..8u32).map(|t| std::thread::spawn(move || stirling2(30 + t, 12))).collect();
        let got: Vec<BigInt> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (t, v) in got.iter().enumerate() {
            let n = 30 + t as u32;
            assert_eq!(*v, stirling2(n - 1, 12) * 12u32 + stirling2(n - 1, 11));
        }
    }
}
