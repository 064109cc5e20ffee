use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Ways to grow a face of pruned perimeter `nu` back to perimeter `mu`:
/// `(mu / nu) T(mu, nu) = mu^(mu - nu)`, where `T(mu, nu) = nu mu^(mu-nu-1)`
/// counts rooted forests on `mu` labeled vertices with `nu` prescribed roots.
pub fn forest_count(mu: u32, nu: u32) -> BigInt {
    if nu == 0 || nu > mu {
        return BigInt::zero();
    }
    BigInt::from(mu).pow(mu - nu)
}

/// `T^[a]_{k,e} = k (a e + k)^(e-1)`: rooted forests with `k` labeled roots and
/// `e` labeled non-root vertices, each edge not hanging off a root weighted `a`.
pub fn forest_count_orbifold(a: u32, k: u32, e: u32) -> BigInt {
    assert!(k >= 1, "a forest needs at least one component");
    if e == 0 {
        return BigInt::one();
    }
    BigInt::from(k) * BigInt::from(a * e + k).pow(e - 1)
}
