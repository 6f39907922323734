//! Rendering, JSON documents, reference tables and verification suites.

pub mod eval;
pub mod json;
pub mod render;
pub mod tables;
pub mod verify;

pub use eval::{connect, evaluate, sample_deviation, EvalFamily, Evaluation};
pub use json::{ConnectionDocument, PolynomialDocument};
pub use render::Format;
pub use verify::{run_suite, CheckResult, Suite, VerificationReport};
