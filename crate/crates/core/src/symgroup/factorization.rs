use num_bigint::BigUint;
use rayon::prelude::*;

use super::permutation::Permutation;
use crate::error::{Budget, Error, Result};

/// Transposition count `m = 2g - 2 + n + |mu|/a`, or `None` when it is not a
/// non-negative integer.
pub fn transposition_count(a: usize, g: usize, mu: &[usize]) -> Option<usize> {
    let size: usize = mu.iter().sum();
    if a == 0 || size % a != 0 {
        return None;
    }
    let m = 2 * g as i64 - 2 + mu.len() as i64 + (size / a) as i64;
    usize::try_from(m).ok()
}

/// Candidate tuples visited by an exhaustive search: `(d(d-1)/2)^m`.
fn candidate_count(d: usize, m: usize) -> BigUint {
    BigUint::from(d * d.saturating_sub(1) / 2).pow(m as u32)
}

/// The point orbits a transposition-factorisation search must reach at the
/// leaf. `Identity` is the simple problem; `Orbifold(a)` lets the leftover
/// permutation be any product of disjoint `a`-cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Leaf {
    Identity,
    Orbifold(usize),
}

struct Search {
    d: usize,
    m: usize,
    pruned: bool,
    leaf: Leaf,
    transpositions: Vec<(u8, u8)>,
}

/// Mutable search state. `r` is the part of the target not yet factored:
/// after choosing `s_1..s_k` it equals `T s_1 ... s_k`.
#[derive(Clone)]
struct State {
    r: Vec<u8>,
    comp: Vec<u8>,
    ncomp: usize,
    appear: Vec<u8>,
    chosen: Vec<(u8, u8)>,
}

fn cycles_of(images: &[u8]) -> usize {
    let mut seen = 0u64;
    let mut count = 0;
    for start in 0..images.len() {
        if seen >> start & 1 == 1 {
            continue;
        }
        count += 1;
        let mut x = start;
        while seen >> x & 1 == 0 {
            seen |= 1 << x;
            x = images[x] as usize;
        }
    }
    count
}

impl State {
    fn new(target: &Permutation) -> Self {
        let d = target.degree();
        State {
            r: target.images().iter().map(|&x| x as u8).collect(),
            comp: (0..d as u8).collect(),
            ncomp: d,
            appear: vec![0; d],
            chosen: Vec::new(),
        }
    }

    fn push(&mut self, (i, j): (u8, u8)) {
        self.r.swap(i as usize, j as usize);
        let (ci, cj) = (self.comp[i as usize], self.comp[j as usize]);
        if ci != cj {
            for c in self.comp.iter_mut() {
                if *c == cj {
                    *c = ci;
                }
            }
            self.ncomp -= 1;
        }
        self.appear[i as usize] += 1;
        self.appear[j as usize] += 1;
        self.chosen.push((i, j));
    }
}

impl Search {
    fn new(d: usize, m: usize, pruned: bool, leaf: Leaf) -> Self {
        assert!(d <= 64, "oracle supports degree at most 64");
        let mut transpositions = Vec::new();
        for i in 0..d as u8 {
            for j in i + 1..d as u8 {
                transpositions.push((i, j));
            }
        }
        Search { d, m, pruned, leaf, transpositions }
    }

    fn target_cycles(&self) -> usize {
        match self.leaf {
            Leaf::Identity => self.d,
            Leaf::Orbifold(a) => self.d / a,
        }
    }

    /// Can `rem` more transpositions still complete this branch?
    fn feasible(&self, st: &State, rem: usize) -> bool {
        let c = cycles_of(&st.r);
        let gap = c.abs_diff(self.target_cycles());
        if gap > rem || (rem - gap) % 2 != 0 {
            return false;
        }
        if self.leaf == Leaf::Identity && st.ncomp - 1 > rem {
            return false;
        }
        if self.pruned && self.leaf == Leaf::Identity {
            let missing: usize = st.appear.iter().map(|&k| 2usize.saturating_sub(k as usize)).sum();
            if missing > 2 * rem {
                return false;
            }
        }
        true
    }

    fn accept(&self, st: &State) -> bool {
        match self.leaf {
            Leaf::Identity => {
                st.r.iter().enumerate().all(|(x, &y)| x == y as usize)
                    && st.ncomp == 1
                    && (!self.pruned || st.appear.iter().all(|&k| k >= 2))
            }
            Leaf::Orbifold(a) => {
                let sigma0: Vec<usize> = st.r.iter().map(|&x| x as usize).collect();
                let sigma0 = Permutation::from_images(sigma0).expect("search state is a permutation");
                let cycles = sigma0.cycles();
                if cycles.iter().any(|c| c.len() != a) {
                    return false;
                }
                let mut comp = st.comp.clone();
                let mut ncomp = st.ncomp;
                for c in &cycles {
                    for w in c.windows(2) {
                        let (ci, cj) = (comp[w[0]], comp[w[1]]);
                        if ci != cj {
                            comp.iter_mut().filter(|x| **x == cj).for_each(|x| *x = ci);
                            ncomp -= 1;
                        }
                    }
                }
                if ncomp != 1 {
                    return false;
                }
                if self.pruned {
                    let mut colour = vec![0usize; self.d];
                    for (k, c) in cycles.iter().enumerate() {
                        for &x in c {
                            colour[x] = k;
                        }
                    }
                    let mut uses = vec![0usize; cycles.len()];
                    for &(i, j) in &st.chosen {
                        let (ci, cj) = (colour[i as usize], colour[j as usize]);
                        uses[ci] += 1;
                        uses[cj] += 1;
                    }
                    if uses.iter().any(|&u| u < 2) {
                        return false;
                    }
                }
                true
            }
        }
    }

    fn dfs(&self, st: &mut State, rem: usize) -> u64 {
        if rem == 0 {
            return u64::from(self.accept(st));
        }
        if !self.feasible(st, rem) {
            return 0;
        }
        let mut total = 0;
        for &t in &self.transpositions {
            let saved = st.clone();
            st.push(t);
            total += self.dfs(st, rem - 1);
            *st = saved;
        }
        total
    }

    fn count(&self, target: &Permutation) -> u64 {
        let root = State::new(target);
        if self.m == 0 {
            return u64::from(self.accept(&root));
        }
        if !self.feasible(&root, self.m) {
            return 0;
        }
        self.transpositions
            .par_iter()
            .map(|&t| {
                let mut st = root.clone();
                st.push(t);
                self.dfs(&mut st, self.m - 1)
            })
            .sum()
    }
}

/// `H_{g,n}(mu)` (or `K_{g,n}(mu)` when `pruned`): transitive factorisations of
/// the fixed representative `T = Permutation::with_cycle_type(mu)` into `m`
/// transpositions.
pub fn count_simple(g: usize, mu: &[usize], pruned: bool, budget: &Budget) -> Result<BigUint> {
    validate_mu(mu)?;
    count_simple_for(g, &Permutation::with_cycle_type(mu), pruned, budget)
}

/// As [`count_simple`] for an arbitrary target; its cycle type plays the role of `mu`.
pub fn count_simple_for(g: usize, target: &Permutation, pruned: bool, budget: &Budget) -> Result<BigUint> {
    let d = target.degree();
    let n = target.cycle_count();
    let Some(m) = usize::try_from(2 * g as i64 - 2 + (n + d) as i64).ok() else {
        return Ok(BigUint::ZERO);
    };
    budget.check(&candidate_count(d, m))?;
    Ok(BigUint::from(Search::new(d, m, pruned, Leaf::Identity).count(target)))
}

/// `H^[a]_{g,n}(mu)` (or `K^[a]_{g,n}(mu)` when `pruned`): factorisations
/// `s_0 s_1 ... s_m = T` with `s_0` of cycle type `(a, ..., a)`, transitive on
/// all points. In the pruned count every cycle of `s_0` (a colour, i.e. a
/// vertex of the branching graph) must have essential degree at least two:
/// a transposition inside one colour is a loop and counts twice.
pub fn count_orbifold(a: usize, g: usize, mu: &[usize], pruned: bool, budget: &Budget) -> Result<BigUint> {
    validate_mu(mu)?;
    if a == 0 {
        return Err(Error::domain("orbifold parameter a must be positive"));
    }
    if a == 1 {
        return count_simple(g, mu, pruned, budget);
    }
    let Some(m) = transposition_count(a, g, mu) else {
        return Ok(BigUint::ZERO);
    };
    let d: usize = mu.iter().sum();
    budget.check(&candidate_count(d, m))?;
    let target = Permutation::with_cycle_type(mu);
    Ok(BigUint::from(Search::new(d, m, pruned, Leaf::Orbifold(a)).count(&target)))
}

pub fn validate_mu(mu: &[usize]) -> Result<()> {
    if mu.is_empty() || mu.contains(&0) {
        return Err(Error::domain(format!("mu must be a non-empty tuple of positive integers, got {mu:?}")));
    }
    Ok(())
}
