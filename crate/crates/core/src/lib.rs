pub mod connection;
pub mod error;
pub mod families;
pub mod field;
pub mod io;
pub mod qkernel;
pub mod scalar;
pub mod series;

pub use connection::{ConnectionExpansion, PartitionSolution, SymPoly};
pub use error::{Error, Result};
pub use families::{CosPolynomial, LaguerreIndex, ZPolynomial};
pub use field::{ExactRational, IntPoly, RatFunc};
pub use qkernel::{QBase, QExpKind};
pub use scalar::{Algebra, Coefficient};
pub use series::TruncatedSeries;
