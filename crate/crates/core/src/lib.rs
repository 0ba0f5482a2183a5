//! Momentum classification of SU(n) multiplets in `V_σ^{⊗N}` for symmetric
//! representations `σ`, using extended Young tableaux, with brute-force
//! product-basis oracles to check the results.

pub mod bench;
pub mod branching;
pub mod cli;
pub mod error;
pub mod extension;
pub mod oracle;
pub mod partitions;
pub mod tally;

pub use error::{Error, Result};
pub use extension::{extend_tableau, shape_tally, tableau_momentum, ExtendedTableau, Momentum};
pub use partitions::{decompose_product, ProblemConfig, Shape, Tableau};
pub use tally::MomentumTally;
