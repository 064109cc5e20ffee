//! Pruning correspondences: triangular linear relations between unpruned and
//! pruned counts for the simple, orbifold and Belyi families.

mod forest;
mod transform;

pub use forest::{forest_count, forest_count_orbifold};
pub use transform::{
    table_provider, transform_belyi, transform_orbifold, transform_simple, Correspondence, Direction, Provider,
};
