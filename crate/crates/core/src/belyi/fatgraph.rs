use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::arith::{double_factorial, Rational};
use crate::error::{Budget, Error, Result};
use crate::symgroup::validate_mu;

/// A fatgraph on oriented edges `0..x`: `tau0` rotates darts around their
/// vertex, `tau1` swaps the two darts of an edge, and the boundary map is
/// `tau2 = tau0 . tau1` (apply `tau1` first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fatgraph {
    pub tau0: Vec<usize>,
    pub tau1: Vec<usize>,
}

fn orbits(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push(x);
            x = perm[x];
        }
        out.push(cycle);
    }
    out
}

fn orbit_count(perm: &[usize], seen: &mut [bool]) -> usize {
    seen.iter_mut().for_each(|s| *s = false);
    let mut count = 0;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        count += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = perm[x];
        }
    }
    count
}

fn connected(a: &[usize], b: &[usize]) -> bool {
    if a.is_empty() {
        return true;
    }
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

impl Fatgraph {
    /// Checks that `tau0` is a permutation and `tau1` a fixed-point-free involution.
    pub fn new(tau0: Vec<usize>, tau1: Vec<usize>) -> Result<Self> {
        let x = tau0.len();
        if tau1.len() != x || x % 2 != 0 {
            return Err(Error::domain("tau0 and tau1 must act on the same even number of darts"));
        }
        let mut hit = vec![false; x];
        for &y in &tau0 {
            if y >= x || std::mem::replace(&mut hit[y], true) {
                return Err(Error::domain("tau0 is not a permutation"));
            }
        }
        if (0..x).any(|i| tau1[i] >= x || tau1[i] == i || tau1[tau1[i]] != i) {
            return Err(Error::domain("tau1 is not a fixed-point-free involution"));
        }
        Ok(Fatgraph { tau0, tau1 })
    }

    pub fn darts(&self) -> usize {
        self.tau0.len()
    }

    pub fn tau2(&self) -> Vec<usize> {
        (0..self.darts()).map(|x| self.tau0[self.tau1[x]]).collect()
    }

    pub fn vertices(&self) -> Vec<Vec<usize>> {
        orbits(&self.tau0)
    }

    pub fn edges(&self) -> Vec<Vec<usize>> {
        orbits(&self.tau1)
    }

    pub fn boundaries(&self) -> Vec<Vec<usize>> {
        orbits(&self.tau2())
    }

    pub fn is_connected(&self) -> bool {
        connected(&self.tau0, &self.tau1)
    }

    /// Genus from `V - E + n = 2 - 2g`; `None` if that is not a non-negative integer.
    pub fn genus(&self) -> Option<usize> {
        let chi = self.vertices().len() as i64 - (self.darts() / 2) as i64 + self.boundaries().len() as i64;
        let twice = 2 - chi;
        (twice >= 0 && twice % 2 == 0).then_some((twice / 2) as usize)
    }

    pub fn is_pruned(&self) -> bool {
        (0..self.darts()).all(|x| self.tau0[x] != x)
    }

    pub fn min_valence(&self) -> usize {
        self.vertices().iter().map(Vec::len).min().unwrap_or(0)
    }
}

/// Which fatgraphs an enumeration keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphMode {
    All,
    /// No univalent vertices.
    Pruned,
    /// Every vertex has valence at least three.
    Valence3Plus,
}

impl GraphMode {
    fn admits(self, tau0: &[usize], seen: &mut [bool]) -> bool {
        let min = match self {
            GraphMode::All => return true,
            GraphMode::Pruned => 2,
            GraphMode::Valence3Plus => 3,
        };
        seen.iter_mut().for_each(|s| *s = false);
        for start in 0..tau0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = tau0[x];
            }
            if len < min {
                return false;
            }
        }
        true
    }
}

/// An isomorphism class of fatgraphs with labeled boundaries, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphClass {
    pub graph: Fatgraph,
    /// Boundary label of every dart.
    pub labels: Vec<usize>,
    pub aut: usize,
}

impl GraphClass {
    pub fn genus(&self) -> usize {
        self.graph.genus().expect("enumerated graphs have a genus")
    }

    /// Boundary cycles ordered by label.
    pub fn labeled_boundaries(&self) -> Vec<Vec<usize>> {
        let mut cycles = self.graph.boundaries();
        cycles.sort_by_key(|c| self.labels[c[0]]);
        cycles
    }

    /// `{"X":2E,"tau0":[..],"tau1":[..],"genus":g,"boundaries":[[..],..],"aut":k}`.
    pub fn to_json(&self) -> Value {
        json!({
            "X": self.graph.darts(),
            "tau0": self.graph.tau0,
            "tau1": self.graph.tau1,
            "genus": self.genus(),
            "boundaries": self.labeled_boundaries(),
            "aut": self.aut,
        })
    }
}

/// Breadth-first relabeling from `start`, visiting `tau0` then `tau1`
/// neighbours. Returns the relabeled `(tau0, tau1, labels)`.
fn relabel(tau0: &[usize], tau1: &[usize], labels: &[usize], start: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
    let x = tau0.len();
    let mut new = vec![usize::MAX; x];
    let mut order = Vec::with_capacity(x);
    new[start] = 0;
    order.push(start);
    let mut head = 0;
    while head < order.len() {
        let d = order[head];
        head += 1;
        for y in [tau0[d], tau1[d]] {
            if new[y] == usize::MAX {
                new[y] = order.len();
                order.push(y);
            }
        }
    }
    let t0 = order.iter().map(|&d| new[tau0[d]]).collect();
    let t1 = order.iter().map(|&d| new[tau1[d]]).collect();
    let l = order.iter().map(|&d| labels[d]).collect();
    (t0, t1, l)
}

/// Canonical form over all starting darts and the number of starts reaching it.
fn canonical(tau0: &[usize], tau1: &[usize], labels: &[usize]) -> GraphClass {
    let mut best: Option<(Vec<usize>, Vec<usize>, Vec<usize>)> = None;
    let mut aut = 0;
    for start in 0..tau0.len() {
        let code = relabel(tau0, tau1, labels, start);
        match best.as_ref().map(|b| code.cmp(b)) {
            None | Some(std::cmp::Ordering::Less) => {
                best = Some(code);
                aut = 1;
            }
            Some(std::cmp::Ordering::Equal) => aut += 1,
            Some(std::cmp::Ordering::Greater) => {}
        }
    }
    let (t0, t1, labels) = best.expect("at least one dart");
    GraphClass { graph: Fatgraph { tau0: t0, tau1: t1 }, labels, aut }
}

/// All fixed-point-free involutions of `0..x`.
pub(crate) fn matchings(x: usize) -> Vec<Vec<usize>> {
    fn go(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(first) = partner.iter().position(|&p| p == usize::MAX) else {
            out.push(partner.clone());
            return;
        };
        for second in first + 1..partner.len() {
            if partner[second] == usize::MAX {
                partner[first] = second;
                partner[second] = first;
                go(partner, out);
                partner[first] = usize::MAX;
                partner[second] = usize::MAX;
            }
        }
    }
    let mut out = Vec::new();
    if x % 2 == 0 {
        go(&mut vec![usize::MAX; x], &mut out);
    }
    out
}

pub(crate) fn matching_count(x: usize) -> BigUint {
    if x == 0 {
        return BigUint::from(1u32);
    }
    double_factorial(x as i64 - 1).expect("non-negative").to_biguint().expect("positive")
}

/// The boundary permutation with consecutive cycles of lengths `mu` and the
/// label of every dart.
fn boundary_layout(mu: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let total: usize = mu.iter().sum();
    let mut tau2 = vec![0; total];
    let mut labels = vec![0; total];
    let mut offset = 0;
    for (i, &len) in mu.iter().enumerate() {
        for k in 0..len {
            tau2[offset + k] = offset + (k + 1) % len;
            labels[offset + k] = i;
        }
        offset += len;
    }
    (tau2, labels)
}

/// Result of [`enumerate_fatgraphs`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FatgraphCount {
    /// `sum 1/|Aut|` over classes.
    pub weighted: Rational,
    pub classes: Vec<GraphClass>,
}

/// `M_{g,n}(mu)` (mode [`GraphMode::All`]), `N_{g,n}(mu)` ([`GraphMode::Pruned`])
/// or the valence-three restriction, together with the isomorphism classes.
///
/// The boundary permutation is fixed with cycles of lengths `mu`; every
/// edge matching `tau1` gives `tau0 = tau2 . tau1`. Filtering by genus,
/// connectedness and mode and dividing by `prod mu_i` gives `sum 1/|Aut|`.
pub fn enumerate_fatgraphs(g: usize, mu: &[usize], mode: GraphMode, budget: &Budget) -> Result<FatgraphCount> {
    validate_mu(mu)?;
    let x: usize = mu.iter().sum();
    if x % 2 != 0 {
        return Ok(FatgraphCount { weighted: Rational::zero(), classes: Vec::new() });
    }
    budget.check(&matching_count(x))?;
    let (tau2, labels) = boundary_layout(mu);
    let want_vertices = (2 - 2 * g as i64 - mu.len() as i64) + (x / 2) as i64;
    if want_vertices < 1 {
        return Ok(FatgraphCount { weighted: Rational::zero(), classes: Vec::new() });
    }
    let found: Vec<Vec<usize>> = matchings(x)
        .into_par_iter()
        .filter_map(|tau1| {
            let tau0: Vec<usize> = (0..x).map(|d| tau2[tau1[d]]).collect();
            let mut seen = vec![false; x];
            let ok = orbit_count(&tau0, &mut seen) as i64 == want_vertices
                && mode.admits(&tau0, &mut seen)
                && connected(&tau0, &tau1);
            ok.then_some(tau1)
        })
        .collect();
    let product: usize = mu.iter().product();
    let weighted = Rational::new(BigInt::from(found.len()), BigInt::from(product));
    let mut classes: BTreeMap<(Fatgraph, Vec<usize>), usize> = BTreeMap::new();
    for tau1 in found {
        let tau0: Vec<usize> = (0..x).map(|d| tau2[tau1[d]]).collect();
        let class = canonical(&tau0, &tau1, &labels);
        classes.insert((class.graph, class.labels), class.aut);
    }
    let classes = classes.into_iter().map(|((graph, labels), aut)| GraphClass { graph, labels, aut }).collect();
    Ok(FatgraphCount { weighted, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use num_traits::One;

    fn count(g: usize, mu: &[usize], mode: GraphMode) -> Rational {
        enumerate_fatgraphs(g, mu, mode, &Budget::default()).unwrap().weighted
    }

    #[test]
    fn small_counts() {
        assert_eq!(count(0, &[2], GraphMode::All), rat(1, 2));
        assert_eq!(count(1, &[2], GraphMode::All), int(0));
        assert_eq!(count(1, &[4], GraphMode::All), rat(1, 4));
        assert_eq!(count(1, &[2], GraphMode::Pruned), int(0));
        assert_eq!(count(1, &[4], GraphMode::Pruned), rat(1, 4));
        assert_eq!(count(0, &[4], GraphMode::All), rat(1, 2));
        assert_eq!(count(0, &[3], GraphMode::All), int(0));
        // The theta graph and the dumbbell, with distinguishable faces.
        assert_eq!(count(0, &[2, 2, 2], GraphMode::Pruned), int(1));
    }

    #[test]
    fn planar_single_face_is_catalan() {
        // Plane trees with k edges, rooted-tree count C_k divided by 2k.
        let catalan = [1u64, 1, 2, 5, 14, 42];
        for (k, &c) in catalan.iter().enumerate().skip(1) {
            assert_eq!(count(0, &[2 * k], GraphMode::All), rat(c as i64, 2 * k as i64), "k={k}");
        }
    }

    #[test]
    fn classes_sum_to_weighted_count() {
        for (g, mu) in
            [(0usize, vec![4usize]), (1, vec![4]), (0, vec![2, 2]), (1, vec![3, 3]), (0, vec![3, 2, 1]), (1, vec![6])]
        {
            for mode in [GraphMode::All, GraphMode::Pruned, GraphMode::Valence3Plus] {
                let result = enumerate_fatgraphs(g, &mu, mode, &Budget::default()).unwrap();
                let total: Rational =
                    result.classes.iter().map(|c| Rational::new(BigInt::one(), BigInt::from(c.aut))).sum();
                assert_eq!(total, result.weighted, "g={g} mu={mu:?} {mode:?}");
                for class in &result.classes {
                    assert_eq!(class.genus(), g);
                    let lengths: Vec<usize> = class.labeled_boundaries().iter().map(Vec::len).collect();
                    assert_eq!(lengths, mu);
                }
            }
        }
    }

    #[test]
    fn genus_one_four_has_one_class() {
        let result = enumerate_fatgraphs(1, &[4], GraphMode::All, &Budget::default()).unwrap();
        assert_eq!(result.classes.len(), 1);
        let class = &result.classes[0];
        assert_eq!(class.aut, 4);
        assert_eq!(class.graph.vertices().len(), 1);
        let json = class.to_json();
        assert_eq!(json["X"], 4);
        assert_eq!(json["genus"], 1);
        assert_eq!(json["aut"], 4);
    }

    #[test]
    fn fatgraph_validation() {
        assert!(Fatgraph::new(vec![0, 1], vec![1, 0]).is_ok());
        assert!(Fatgraph::new(vec![0, 1], vec![0, 1]).is_err());
        assert!(Fatgraph::new(vec![0, 0], vec![1, 0]).is_err());
        assert!(Fatgraph::new(vec![0], vec![0]).is_err());
        let g = Fatgraph::new(vec![1, 2, 3, 0], vec![2, 3, 0, 1]).unwrap();
        assert_eq!(g.genus(), Some(1));
        assert!(g.is_pruned());
        assert_eq!(g.min_valence(), 4);
    }

    #[test]
    fn budget_is_refused() {
        let err = enumerate_fatgraphs(0, &[6, 6], GraphMode::All, &Budget::new(100)).unwrap_err();
        assert!(err.is_budget());
    }

    #[test]
    fn matching_enumeration() {
        for x in [0usize, 2, 4, 6, 8] {
            assert_eq!(BigUint::from(matchings(x).len()), matching_count(x));
        }
    }
}
