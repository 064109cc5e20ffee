use hurwitz_core::arith::{eulerian, factorial, int, rat, Rational};
use hurwitz_core::belyi::{enumerate_fatgraphs, euler_characteristic, lattice_count, GraphMode};
use hurwitz_core::intersection::{extract_brackets, wk_intersection};
use hurwitz_core::pruning::{transform_simple, Direction};
use hurwitz_core::recursion::{
    export_cache, import_cache, pruned_simple_polynomial, pruned_simple_value, unpruned_value, Engine,
};
use hurwitz_core::symgroup::{count_simple, transposition_count};
use hurwitz_core::{BracketKey, Budget};

fn oracle(g: usize, mu: &[usize], pruned: bool) -> Rational {
    let m = transposition_count(1, g, mu).unwrap();
    let count = count_simple(g, mu, pruned, &Budget::default()).unwrap();
    Rational::new(count.into(), factorial(m as u32))
}

#[test]
fn recursion_matches_oracle() {
    assert_eq!(pruned_simple_value(1, &[2]), rat(1, 6));
    for (g, mu) in [(0, vec![2, 2, 1]), (1, vec![1, 1]), (0, vec![3, 1, 1]), (1, vec![2, 1])] {
        assert_eq!(oracle(g, &mu, true), pruned_simple_value(g, &mu), "g={g} mu={mu:?}");
        assert_eq!(oracle(g, &mu, false), unpruned_value(1, g, &mu), "g={g} mu={mu:?}");
    }
}

#[test]
fn transform_rebuilds_unpruned_counts() {
    for (g, mu) in [(0usize, vec![2usize, 2]), (1, vec![3]), (0, vec![2, 1, 1])] {
        let full =
            transform_simple(Direction::PrunedToFull, g, &mu, &|nu: &[usize]| Ok(pruned_simple_value(g, nu))).unwrap();
        assert_eq!(full, oracle(g, &mu, false), "g={g} mu={mu:?}");
    }
}

#[test]
fn genus_zero_two_is_eulerian() {
    let count = count_simple(0, &[3, 4], true, &Budget::new(u128::MAX)).unwrap();
    assert_eq!(Rational::from_integer(count.into()), Rational::from_integer(eulerian(6, 2) * 12));
}

#[test]
fn polynomial_evaluates_to_recursion() {
    let p = pruned_simple_polynomial(1, 2).unwrap();
    for mu in [[1i64, 1], [4, 7], [9, 2]] {
        let as_usize: Vec<usize> = mu.iter().map(|&x| x as usize).collect();
        assert_eq!(p.eval_int(&mu), pruned_simple_value(1, &as_usize));
    }
}

#[test]
fn intersection_numbers_from_polynomials() {
    let k = pruned_simple_polynomial(2, 1).unwrap();
    let brackets = extract_brackets(2, 1, &k).unwrap();
    assert_eq!(brackets[&BracketKey::new(2, vec![4], 0)], wk_intersection(2, &[4]));
    assert_eq!(wk_intersection(2, &[4]), rat(1, 1152));
}

#[test]
fn lattice_points_match_fatgraphs() {
    let b = Budget::default();
    for bnd in [2usize, 4, 6, 8] {
        let want = rat((bnd * bnd) as i64 - 4, 48);
        assert_eq!(lattice_count(1, &[bnd], &b).unwrap(), want);
        assert_eq!(enumerate_fatgraphs(1, &[bnd], GraphMode::Pruned, &b).unwrap().weighted, want);
    }
    assert_eq!(euler_characteristic(0, 4, &b).unwrap(), int(-1));
}

#[test]
fn cache_survives_export_and_verified_import() {
    let engine = Engine::default();
    let v = engine.pruned(1, 1, &[3, 2]);
    let mut buffer = Vec::new();
    let written = export_cache(&engine, &mut buffer).unwrap();
    assert!(written > 0);
    let fresh = Engine::default();
    assert_eq!(import_cache(&fresh, buffer.as_slice(), true).unwrap(), written);
    assert_eq!(fresh.pruned(1, 1, &[3, 2]), v);
}
