use std::collections::{BTreeMap, HashMap};
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::fatgraph::{matching_count, matchings};
use crate::arith::{factorial, format_rational, interpolate_grid, GridAxes, QuasiPolynomial, Rational};
use crate::error::{Budget, Error, Result};
use crate::symgroup::validate_mu;

const HELD_OUT: usize = 6;
const SEED: u64 = 0x0062_656c_7969;

/// A cell `P_Gamma`: for every edge, the labels of the two boundaries it borders.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CellPolytope {
    pub incidence: Vec<(usize, usize)>,
}

impl CellPolytope {
    /// Columns of `A_Gamma`; each sums to two.
    pub fn matrix(&self, n: usize) -> Vec<Vec<u32>> {
        let mut rows = vec![vec![0; self.incidence.len()]; n];
        for (e, &(a, b)) in self.incidence.iter().enumerate() {
            rows[a][e] += 1;
            rows[b][e] += 1;
        }
        rows
    }

    /// `#{x in Z_+^E : A x = mu}`.
    pub fn lattice_points(&self, mu: &[usize]) -> u64 {
        let mut remaining: Vec<i64> = mu.iter().map(|&m| m as i64).collect();
        // Minimum perimeter still owed to each boundary by edges k.. (all lengths 1).
        let mut floor = vec![vec![0i64; mu.len()]; self.incidence.len() + 1];
        for e in (0..self.incidence.len()).rev() {
            floor[e] = floor[e + 1].clone();
            let (a, b) = self.incidence[e];
            floor[e][a] += 1;
            floor[e][b] += 1;
        }
        let mut memo = HashMap::new();
        count_from(&self.incidence, &floor, 0, &mut remaining, &mut memo)
    }
}

fn count_from(
    edges: &[(usize, usize)],
    floor: &[Vec<i64>],
    e: usize,
    remaining: &mut Vec<i64>,
    memo: &mut HashMap<(usize, Vec<i64>), u64>,
) -> u64 {
    if e == edges.len() {
        return u64::from(remaining.iter().all(|&r| r == 0));
    }
    if remaining.iter().zip(&floor[e]).any(|(r, f)| r < f) {
        return 0;
    }
    if let Some(&v) = memo.get(&(e, remaining.clone())) {
        return v;
    }
    let (a, b) = edges[e];
    let slack = |i: usize| remaining[i] - floor[e + 1][i];
    let top = if a == b { slack(a) / 2 } else { slack(a).min(slack(b)) };
    let mut total = 0;
    for len in 1..=top {
        remaining[a] -= len;
        remaining[b] -= len;
        total += count_from(edges, floor, e + 1, remaining, memo);
        remaining[a] += len;
        remaining[b] += len;
    }
    memo.insert((e, remaining.clone()), total);
    total
}

/// Partitions of `total` into exactly `parts` parts, each at least `min`, descending.
fn partitions(total: usize, parts: usize, min: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, max: usize, min: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for p in (min..=max.min(total)).rev() {
            if total - p < (parts - 1) * min {
                continue;
            }
            cur.push(p);
            go(total - p, parts - 1, p, min, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, total, min, &mut Vec::new(), &mut out);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

type CellTable = Vec<(CellPolytope, Rational)>;

/// Valence-at-least-three fatgraphs of type `(g, n)` with labeled boundaries,
/// as cells with their weights `sum 1/|Aut|`.
fn cell_table(g: usize, n: usize, budget: &Budget) -> Result<CellTable> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, usize), CellTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(RwLock::default);
    if let Some(t) = cache.read().expect("cell cache").get(&(g, n)) {
        return Ok(t.clone());
    }
    let euler = 2 * g as i64 - 2 + n as i64;
    if n == 0 || euler <= 0 {
        return Err(Error::domain(format!("(g, n) = ({g}, {n}) is not stable")));
    }
    let max_edges = 3 * euler as usize;
    let mut work = BigUint::zero();
    let mut jobs = Vec::new();
    for edges in 1..=max_edges {
        let vertices = edges as i64 - euler;
        if vertices < 1 {
            continue;
        }
        for cycle_type in partitions(2 * edges, vertices as usize, 3) {
            work += matching_count(2 * edges);
            jobs.push((edges, cycle_type));
        }
    }
    budget.check(&work)?;
    let labelings = permutations(n);
    let mut table: BTreeMap<CellPolytope, Rational> = BTreeMap::new();
    for (edges, cycle_type) in jobs {
        let x = 2 * edges;
        let mut tau0 = vec![0; x];
        let mut offset = 0;
        for &len in &cycle_type {
            for k in 0..len {
                tau0[offset + k] = offset + (k + 1) % len;
            }
            offset += len;
        }
        let mut centralizer = BigInt::one();
        let mut multiplicity: BTreeMap<usize, u32> = BTreeMap::new();
        for &len in &cycle_type {
            centralizer *= BigInt::from(len);
            *multiplicity.entry(len).or_default() += 1;
        }
        for &m in multiplicity.values() {
            centralizer *= factorial(m);
        }
        let weight = Rational::new(BigInt::one(), centralizer);
        let found: Vec<Vec<(usize, usize)>> = matchings(x)
            .into_par_iter()
            .filter_map(|tau1| {
                let tau2: Vec<usize> = (0..x).map(|d| tau0[tau1[d]]).collect();
                let mut face = vec![usize::MAX; x];
                let mut faces = 0;
                for start in 0..x {
                    if face[start] != usize::MAX {
                        continue;
                    }
                    let mut d = start;
                    while face[d] == usize::MAX {
                        face[d] = faces;
                        d = tau2[d];
                    }
                    faces += 1;
                }
                // Faces and vertex count fix the Euler characteristic; one
                // face orbit per boundary and connectivity fix the genus.
                if faces != n || !connected(&tau0, &tau1) {
                    return None;
                }
                Some((0..x).filter(|&d| d < tau1[d]).map(|d| (face[d], face[tau1[d]])).collect())
            })
            .collect();
        for edges in found {
            for labeling in &labelings {
                let mut incidence: Vec<(usize, usize)> = edges
                    .iter()
                    .map(|&(a, b)| {
                        let (a, b) = (labeling[a], labeling[b]);
                        (a.min(b), a.max(b))
                    })
                    .collect();
                incidence.sort_unstable();
                *table.entry(CellPolytope { incidence }).or_insert_with(Rational::zero) += &weight;
            }
        }
    }
    let table: Vec<(CellPolytope, Rational)> = table.into_iter().collect();
    cache.write().expect("cell cache").insert((g, n), table.clone());
    Ok(table)
}

fn connected(a: &[usize], b: &[usize]) -> bool {
    let mut seen = vec![false; a.len()];
    let mut stack = vec![0];
    seen[0] = true;
    let mut reached = 1;
    while let Some(x) = stack.pop() {
        for y in [a[x], b[x]] {
            if !seen[y] {
                seen[y] = true;
                reached += 1;
                stack.push(y);
            }
        }
    }
    reached == a.len()
}

/// The cells of `M_{g,n}` with their weights `sum 1/|Aut Gamma|`.
pub fn cells(g: usize, n: usize, budget: &Budget) -> Result<Vec<(CellPolytope, Rational)>> {
    cell_table(g, n, budget)
}

/// `N_{g,n}(mu) = sum_Gamma N_Gamma(mu)/|Aut Gamma|` over valence-at-least-three
/// fatgraphs, counting lattice points of every cell.
pub fn lattice_count(g: usize, mu: &[usize], budget: &Budget) -> Result<Rational> {
    validate_mu(mu)?;
    let table = cell_table(g, mu.len(), budget)?;
    if mu.iter().sum::<usize>() % 2 != 0 {
        return Ok(Rational::zero());
    }
    Ok(table
        .par_iter()
        .map(|(cell, w)| w * Rational::from_integer(BigInt::from(cell.lattice_points(mu))))
        .reduce(Rational::zero, |a, b| a + b))
}

/// `6g - 6 + 2n`.
pub fn belyi_degree(g: usize, n: usize) -> u32 {
    (6 * g + 2 * n - 6) as u32
}

/// `N_{g,n}` as a quasi-polynomial modulo 2, interpolated from lattice counts
/// on each residue class with non-vanishing total and checked on held-out tuples.
pub fn belyi_quasipolynomial(g: usize, n: usize, budget: &Budget) -> Result<QuasiPolynomial> {
    cell_table(g, n, budget)?;
    let degree = belyi_degree(g, n);
    let side = degree as usize + 1;
    let mut out = QuasiPolynomial::new(2, n);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ (g as u64) << 8 ^ n as u64);
    for class in 0..(1usize << n) {
        let residues: Vec<i64> = (0..n).map(|i| (class >> i & 1) as i64).collect();
        if residues.iter().sum::<i64>() % 2 != 0 {
            continue;
        }
        let axes = GridAxes(residues.iter().map(|&r| (0..side as i64).map(|t| 2 - r + 2 * t).collect()).collect());
        let poly = interpolate_grid(&axes, degree, false, |p| {
            let mu: Vec<usize> = p.iter().map(|&x| x as usize).collect();
            lattice_count(g, &mu, budget)
        })?;
        for _ in 0..HELD_OUT {
            let point: Vec<i64> = residues.iter().map(|&r| 2 - r + 2 * rng.random_range(0..=side as i64 + 1)).collect();
            let mu: Vec<usize> = point.iter().map(|&x| x as usize).collect();
            let want = lattice_count(g, &mu, budget)?;
            let got = poly.eval_int(&point);
            if got != want {
                return Err(Error::Inconsistent(format!(
                    "interpolant gives {} at {point:?}, lattice count gives {}",
                    format_rational(&got),
                    format_rational(&want)
                )));
            }
        }
        out.set_branch(residues.iter().map(|&r| r as u32).collect(), poly);
    }
    Ok(out)
}

/// `chi(M_{g,n}) = N_{g,n}(0, ..., 0)`, read off the all-even branch.
pub fn euler_characteristic(g: usize, n: usize, budget: &Budget) -> Result<Rational> {
    let quasi = belyi_quasipolynomial(g, n, budget)?;
    Ok(quasi.eval_int(&vec![0; n]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::belyi::{enumerate_fatgraphs, GraphMode};

    #[test]
    fn genus_one_one() {
        let b = Budget::default();
        assert_eq!(lattice_count(1, &[2], &b).unwrap(), int(0));
        assert_eq!(lattice_count(1, &[4], &b).unwrap(), rat(1, 4));
        assert_eq!(lattice_count(1, &[3], &b).unwrap(), int(0));
        // N_{1,1}(b) = (b^2 - 4)/48 on even b.
        for b2 in 1..=6i64 {
            let mu = 2 * b2;
            assert_eq!(lattice_count(1, &[mu as usize], &b).unwrap(), rat(mu * mu - 4, 48));
        }
    }

    #[test]
    fn genus_zero_three_is_one_on_even_totals() {
        let b = Budget::default();
        for mu in [[1usize, 1, 2], [2, 2, 2], [1, 3, 4], [5, 1, 2], [3, 3, 2], [1, 1, 1]] {
            let want = int(i64::from(mu.iter().sum::<usize>() % 2 == 0));
            assert_eq!(lattice_count(0, &mu, &b).unwrap(), want, "{mu:?}");
        }
    }

    #[test]
    fn matches_pruned_enumeration() {
        let b = Budget::default();
        for mu in [
            vec![2usize],
            vec![4],
            vec![6],
            vec![8],
            vec![10],
            vec![1, 1, 2],
            vec![2, 2, 2],
            vec![3, 2, 1],
            vec![4, 2, 2],
        ] {
            let g = if mu.len() == 1 { 1 } else { 0 };
            let pruned = enumerate_fatgraphs(g, &mu, GraphMode::Pruned, &b).unwrap().weighted;
            assert_eq!(lattice_count(g, &mu, &b).unwrap(), pruned, "g={g} mu={mu:?}");
        }
    }

    #[test]
    fn columns_sum_to_two() {
        for (cell, w) in cells(1, 1, &Budget::default()).unwrap() {
            assert!(w > Rational::zero());
            let m = cell.matrix(1);
            for e in 0..cell.incidence.len() {
                assert_eq!(m.iter().map(|row| row[e]).sum::<u32>(), 2);
            }
        }
    }

    #[test]
    fn euler_characteristics() {
        let b = Budget::default();
        assert_eq!(euler_characteristic(1, 1, &b).unwrap(), rat(-1, 12));
        assert_eq!(euler_characteristic(0, 3, &b).unwrap(), int(1));
        assert_eq!(euler_characteristic(0, 4, &b).unwrap(), int(-1));
        assert_eq!(euler_characteristic(1, 2, &b).unwrap(), rat(1, 12));
    }

    #[test]
    fn unstable_is_refused() {
        assert!(lattice_count(0, &[2, 2], &Budget::default()).is_err());
        assert!(euler_characteristic(0, 1, &Budget::default()).is_err());
    }

    #[test]
    fn lattice_points_of_a_loop() {
        // One edge bordering boundary 0 on both sides: 2x = mu.
        let cell = CellPolytope { incidence: vec![(0, 0)] };
        assert_eq!(cell.lattice_points(&[4]), 1);
        assert_eq!(cell.lattice_points(&[3]), 0);
        let theta = CellPolytope { incidence: vec![(0, 1), (0, 1), (0, 1)] };
        assert_eq!(theta.lattice_points(&[5, 5]), 6);
    }
}
