use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_traits::Zero;

use crate::arith::{double_factorial, int, rat, Rational};

type Memo = RwLock<HashMap<(u32, Vec<u32>), Rational>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(RwLock::default)
}

fn df(n: i64) -> Rational {
    Rational::from_integer(double_factorial(n).expect("argument is at least -1"))
}

/// `<tau_{d_1} ... tau_{d_n}>_g`, zero off the dimension constraint
/// `|d| = 3g - 3 + n` and on unstable `(g, n)`.
///
/// Uses the Witten–Kontsevich recursion with a largest `d_i` as pivot, seeded
/// by `<tau_0^3>_0 = 1` and `<tau_1>_1 = 1/24`.
pub fn wk_intersection(g: u32, d: &[u32]) -> Rational {
    let n = d.len() as i64;
    let size: u32 = d.iter().sum();
    if n == 0 || i64::from(size) != 3 * i64::from(g) - 3 + n || (g == 0 && n < 3) {
        return Rational::zero();
    }
    let mut key = d.to_vec();
    key.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(v) = memo().read().expect("memo lock").get(&(g, key.clone())) {
        return v.clone();
    }
    let value = compute(g, &key);
    memo().write().expect("memo lock").insert((g, key), value.clone());
    value
}

fn compute(g: u32, d: &[u32]) -> Rational {
    match (g, d) {
        (0, [0, 0, 0]) => return int(1),
        (1, [1]) => return rat(1, 24),
        _ => {}
    }
    let d1 = i64::from(d[0]);
    let rest = &d[1..];
    let mut total = Rational::zero();
    for j in 0..rest.len() {
        let dj = i64::from(rest[j]);
        if d1 + dj == 0 {
            continue;
        }
        let coef = df(2 * d1 + 2 * dj - 1) / (df(2 * d1 + 1) * df(2 * dj - 1));
        let mut args: Vec<u32> = rest.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect();
        args.push((d1 + dj - 1) as u32);
        total += coef * wk_intersection(g, &args);
    }
    let mut cut = Rational::zero();
    for i in 0..=(d1 - 2).max(-1) {
        let j = d1 - 2 - i;
        let coef = df(2 * i + 1) * df(2 * j + 1) / df(2 * d1 + 1);
        let mut bracket = Rational::zero();
        if g >= 1 {
            let mut args = rest.to_vec();
            args.extend([i as u32, j as u32]);
            bracket += wk_intersection(g - 1, &args);
        }
        for mask in 0u32..(1 << rest.len()) {
            let (mut left, mut right) = (vec![i as u32], vec![j as u32]);
            for (k, &x) in rest.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    left.push(x)
                } else {
                    right.push(x)
                }
            }
            for g1 in 0..=g {
                let l = wk_intersection(g1, &left);
                if !l.is_zero() {
                    bracket += l * wk_intersection(g - g1, &right);
                }
            }
        }
        cut += coef * bracket;
    }
    total + cut / int(2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intersection::brackets::exponent_vectors;

    #[test]
    fn known_values() {
        assert_eq!(wk_intersection(0, &[0, 0, 0]), int(1));
        assert_eq!(wk_intersection(0, &[1, 0, 0, 0]), int(1));
        assert_eq!(wk_intersection(0, &[0, 1, 0, 0]), int(1));
        assert_eq!(wk_intersection(1, &[1]), rat(1, 24));
        assert_eq!(wk_intersection(2, &[4]), rat(1, 1152));
        assert_eq!(wk_intersection(0, &[2, 0, 0, 0, 0]), int(1));
        assert_eq!(wk_intersection(1, &[1, 1]), rat(1, 24));
        assert_eq!(wk_intersection(2, &[3, 2]), rat(29, 5760));
        assert_eq!(wk_intersection(3, &[7]), rat(1, 82944));
        assert_eq!(wk_intersection(1, &[2]), int(0));
    }

    #[test]
    fn string_and_dilaton() {
        for g in 0..=2u32 {
            for n in 1..=4usize {
                let dim = 3 * g as i64 - 3 + n as i64 + 1;
                if dim < 0 || (g == 0 && n < 3) {
                    continue;
                }
                for d in exponent_vectors(n, dim as u32) {
                    if d.iter().sum::<u32>() as i64 != dim {
                        continue;
                    }
                    let mut with_zero = d.clone();
                    with_zero.push(0);
                    let mut string = Rational::zero();
                    for j in 0..n {
                        if d[j] > 0 {
                            let mut e = d.clone();
                            e[j] -= 1;
                            string += wk_intersection(g, &e);
                        }
                    }
                    assert_eq!(wk_intersection(g, &with_zero), string, "string g={g} d={d:?}");
                }
                let dim = dim - 1;
                if dim < 0 {
                    continue;
                }
                for d in exponent_vectors(n, dim as u32) {
                    if d.iter().sum::<u32>() as i64 != dim {
                        continue;
                    }
                    let mut with_one = d.clone();
                    with_one.push(1);
                    let euler = int(2 * g as i64 - 2 + n as i64);
                    assert_eq!(wk_intersection(g, &with_one), euler * wk_intersection(g, &d), "dilaton g={g} d={d:?}");
                }
            }
        }
    }
}
