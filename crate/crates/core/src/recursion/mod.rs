//! Pruned cut-and-join recursions with a shared memo, closed-form
//! reconstruction by interpolation, and the unpruned cut-and-join check.

mod cache;
mod engine;
mod reconstruct;
mod symbolic;
mod verify;

pub use cache::{export_cache, import_cache, CacheRecord};
pub use engine::{
    pruned_orbifold_value, pruned_simple_value, unpruned_value, Engine, Family, HurwitzKey, RecursionForm,
};
pub use reconstruct::{orbifold_scale, pruned_degree, pruned_orbifold_quasipolynomial, pruned_simple_polynomial};
pub use symbolic::{recursion_rhs_polynomial, rhs_divisibility, DivisibilityReport};
pub use verify::verify_caj_simple;
