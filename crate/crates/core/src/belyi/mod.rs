//! Belyi Hurwitz numbers by fatgraph enumeration, lattice points in the cells
//! of `M_{g,n}`, orbifold Euler characteristics, and the Gromov–Witten
//! quasi-polynomials of `P^1` with their cycle Hurwitz comparison.

mod fatgraph;
mod gw;
mod lattice;

pub use fatgraph::{enumerate_fatgraphs, Fatgraph, FatgraphCount, GraphClass, GraphMode};
pub use gw::{
    compare_n_p, gw_eval, gw_relations_check, is_triangle, GwRelation, NpComparison, RelationStatus, GW_TABLE,
};
pub use lattice::{belyi_degree, belyi_quasipolynomial, cells, euler_characteristic, lattice_count, CellPolytope};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::pruning::{transform_belyi, Direction};
    use crate::Budget;
    use proptest::prelude::*;

    fn pruned(g: usize, mu: &[usize]) -> crate::Result<Rational> {
        enumerate_fatgraphs(g, mu, GraphMode::Pruned, &Budget::default()).map(|c| c.weighted)
    }

    fn full(g: usize, mu: &[usize]) -> crate::Result<Rational> {
        enumerate_fatgraphs(g, mu, GraphMode::All, &Budget::default()).map(|c| c.weighted)
    }

    #[test]
    fn pruning_correspondence_round_trips() {
        for (g, mu) in [
            (1usize, vec![4usize]),
            (1, vec![6]),
            (0, vec![2, 2, 2]),
            (0, vec![3, 2, 1]),
            (0, vec![4, 2, 2]),
            (1, vec![3, 3]),
        ] {
            let m = transform_belyi(Direction::PrunedToFull, g, &mu, &|nu: &[usize]| pruned(g, nu)).unwrap();
            assert_eq!(m, full(g, &mu).unwrap(), "g={g} mu={mu:?}");
            let n = transform_belyi(Direction::FullToPruned, g, &mu, &|nu: &[usize]| full(g, nu)).unwrap();
            assert_eq!(n, pruned(g, &mu).unwrap(), "g={g} mu={mu:?}");
        }
    }

    #[test]
    fn unstable_correspondence_fails() {
        // M_{0,1}(2) = 1/2 while no pruned graph exists.
        assert_eq!(full(0, &[2]).unwrap(), crate::arith::rat(1, 2));
        assert_eq!(pruned(0, &[2]).unwrap(), crate::arith::int(0));
        assert!(transform_belyi(Direction::PrunedToFull, 0, &[2], &|nu: &[usize]| pruned(0, nu)).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn denominators_divide_factorial(mu in prop::collection::vec(1usize..=4, 1..=3), g in 0usize..=1) {
            prop_assume!(mu.iter().sum::<usize>() <= 10);
            let size: usize = mu.iter().sum();
            let fact = crate::arith::factorial(size as u32);
            for mode in [GraphMode::All, GraphMode::Pruned] {
                let v = enumerate_fatgraphs(g, &mu, mode, &Budget::default()).unwrap().weighted;
                prop_assert!((fact.clone() % v.denom()).eq(&num_bigint::BigInt::from(0)));
            }
        }

        #[test]
        fn symmetric_in_mu(mu in prop::collection::vec(1usize..=4, 2..=3)) {
            prop_assume!(mu.iter().sum::<usize>() <= 10);
            let mut rev = mu.clone();
            rev.reverse();
            prop_assert_eq!(pruned(0, &mu).unwrap(), pruned(0, &rev).unwrap());
            prop_assert_eq!(full(0, &mu).unwrap(), full(0, &rev).unwrap());
        }
    }
}
