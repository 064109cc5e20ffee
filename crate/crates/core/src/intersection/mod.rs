//! The `q_d`, `P_i`, `P_{i,j}` polynomials, extraction of psi/lambda
//! intersection numbers from pruned polynomials, and the Witten–Kontsevich
//! recursion used to cross-check them.

mod brackets;
mod qpoly;
mod witten;

pub use brackets::{extract_brackets, BracketKey};
pub use qpoly::{p_double, p_single, q_defining_system_holds, q_leading_coefficient, q_polynomial, q_recurrences_hold};
pub use witten::wk_intersection;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::recursion::pruned_simple_polynomial;

    #[test]
    fn extraction_agrees_with_recursion() {
        for (g, n) in [(0u32, 3usize), (0, 4), (0, 5), (1, 1), (1, 2)] {
            let khat = pruned_simple_polynomial(g as usize, n).unwrap();
            let map = extract_brackets(g, n, &khat).unwrap();
            for (key, value) in map.iter().filter(|(k, _)| k.ell == 0) {
                assert_eq!(value, &wk_intersection(key.g, &key.d), "{key:?}");
            }
        }
        let k11 = extract_brackets(1, 1, &pruned_simple_polynomial(1, 1).unwrap()).unwrap();
        assert_eq!(k11[&BracketKey::new(1, vec![0], 1)], rat(1, 24));
    }
}
