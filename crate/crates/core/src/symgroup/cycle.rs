use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;

use super::factorization::validate_mu;
use super::permutation::Permutation;
use crate::arith::{binomial, factorial, Rational};
use crate::error::{Budget, Result};

/// Degree `d = (sum(mu_i - 1) + 2 - 2g) / 2` of a cycle Hurwitz cover, when
/// it is a positive integer.
pub fn cycle_degree(g: usize, mu: &[usize]) -> Option<usize> {
    let excess: i64 = mu.iter().map(|&x| x as i64 - 1).sum::<i64>() + 2 - 2 * g as i64;
    if excess <= 0 || excess % 2 != 0 {
        return None;
    }
    Some((excess / 2) as usize)
}

/// All permutations of `S_d` with cycle type `(k, 1, ..., 1)`, `k >= 2`.
fn k_cycles(d: usize, k: usize) -> Vec<Permutation> {
    fn subsets(d: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..d {
            cur.push(x);
            subsets(d, k, x + 1, cur, out);
            cur.pop();
        }
    }
    fn arrangements(rest: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..rest.len() {
            let x = rest.remove(i);
            prefix.push(x);
            arrangements(rest, prefix, out);
            prefix.pop();
            rest.insert(i, x);
        }
    }
    let mut sets = Vec::new();
    subsets(d, k, 0, &mut Vec::new(), &mut sets);
    let mut out = Vec::new();
    for set in sets {
        let mut cycles = Vec::new();
        arrangements(&mut set[1..].to_vec(), &mut vec![set[0]], &mut cycles);
        for c in cycles {
            out.push(Permutation::from_cycles(d, &[c]).expect("a single cycle"));
        }
    }
    out
}

fn class_size(d: usize, k: usize) -> BigUint {
    let arrangements = factorial(k as u32 - 1).to_biguint().expect("factorial is positive");
    binomial(d as u64, k as u64).to_biguint().expect("binomial is non-negative") * arrangements
}

fn transitive(d: usize, factors: &[&Permutation]) -> bool {
    let mut comp: Vec<usize> = (0..d).collect();
    fn find(comp: &mut [usize], mut x: usize) -> usize {
        while comp[x] != x {
            comp[x] = comp[comp[x]];
            x = comp[x];
        }
        x
    }
    for p in factors {
        for x in 0..d {
            let (rx, ry) = (find(&mut comp, x), find(&mut comp, p.apply(x)));
            comp[rx] = ry;
        }
    }
    let root = find(&mut comp, 0);
    (0..d).all(|x| find(&mut comp, x) == root)
}

/// `P_{g,n}(mu)`: transitive tuples `(s_1, ..., s_n)` in `S_d` with `s_i` of
/// cycle type `(mu_i, 1, ..., 1)` and `s_1 ... s_n = 1`, divided by `d!`.
/// A factor with `mu_i = 1` is the identity together with a marked point, so
/// it contributes a factor of `d`.
pub fn count_cycle(g: usize, mu: &[usize], budget: &Budget) -> Result<Rational> {
    validate_mu(mu)?;
    let Some(d) = cycle_degree(g, mu) else {
        return Ok(Rational::zero());
    };
    if mu.iter().any(|&k| k > d) {
        return Ok(Rational::zero());
    }
    let ones = mu.iter().filter(|&&k| k == 1).count();
    let nontrivial: Vec<usize> = mu.iter().copied().filter(|&k| k > 1).collect();
    let labeled: BigUint = match nontrivial.len() {
        0 => BigUint::from(u32::from(d == 1)),
        1 => BigUint::zero(),
        len => {
            let mut work = BigUint::from(1u32);
            for &k in &nontrivial[1..len - 1] {
                work *= class_size(d, k);
            }
            budget.check(&work)?;
            let first = Permutation::with_cycle_type(
                &std::iter::once(nontrivial[0]).chain(std::iter::repeat(1).take(d - nontrivial[0])).collect::<Vec<_>>(),
            );
            let classes: Vec<Vec<Permutation>> = nontrivial[1..len - 1].iter().map(|&k| k_cycles(d, k)).collect();
            let last = nontrivial[len - 1];
            let fixed_first = count_completions(d, &first, &classes, last);
            BigUint::from(fixed_first) * class_size(d, nontrivial[0])
        }
    };
    let total = labeled * BigUint::from(d).pow(ones as u32);
    let d_fact = factorial(d as u32);
    Ok(Rational::new(total.into(), d_fact))
}

/// Tuples `(first, s_2, ..., s_{n-1}, s_n)` with the middle factors drawn from
/// `classes`, `s_n` forced to close the product, `s_n` a `last`-cycle and the
/// whole tuple transitive.
fn count_completions(d: usize, first: &Permutation, classes: &[Vec<Permutation>], last: usize) -> u64 {
    fn rec(d: usize, prefix: &mut Vec<Permutation>, classes: &[Vec<Permutation>], last: usize) -> u64 {
        let depth = prefix.len() - 1;
        if depth == classes.len() {
            let product = prefix.iter().fold(Permutation::identity(d), |acc, p| acc.compose(p));
            let closing = product.inverse();
            let moved = closing.images().iter().enumerate().filter(|(x, &y)| *x != y).count();
            if moved != last || closing.cycles().iter().filter(|c| c.len() > 1).count() != 1 {
                return 0;
            }
            let mut all: Vec<&Permutation> = prefix.iter().collect();
            all.push(&closing);
            return u64::from(transitive(d, &all));
        }
        let mut total = 0;
        for p in &classes[depth] {
            prefix.push(p.clone());
            total += rec(d, prefix, classes, last);
            prefix.pop();
        }
        total
    }
    if classes.is_empty() {
        return rec(d, &mut vec![first.clone()], classes, last);
    }
    classes[0].par_iter().map(|p| rec(d, &mut vec![first.clone(), p.clone()], classes, last)).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn p(g: usize, mu: &[usize]) -> Rational {
        count_cycle(g, mu, &Budget::default()).unwrap()
    }

    #[test]
    fn three_point_genus_zero() {
        assert_eq!(p(0, &[2, 2, 1]), int(1));
        assert_eq!(p(0, &[3, 2, 2]), int(1));
        assert_eq!(p(0, &[3, 1, 1]), int(0));
        for d in 1..=4 {
            assert_eq!(p(0, &[d, d, 1]), int(1), "d = {d}");
        }
    }

    #[test]
    fn two_totally_ramified_points() {
        // The unique cover z -> z^d has d automorphisms.
        for d in 2..=4 {
            assert_eq!(p(0, &[d, d]), crate::arith::rat(1, d as i64));
        }
    }

    #[test]
    fn class_enumeration_sizes() {
        for d in 2..=5 {
            for k in 2..=d {
                assert_eq!(BigUint::from(k_cycles(d, k).len()), class_size(d, k));
            }
        }
    }

    #[test]
    fn parity_failure_is_zero() {
        assert_eq!(p(0, &[2, 1, 1]), int(0));
        assert_eq!(cycle_degree(0, &[2, 1, 1]), None);
    }
}
