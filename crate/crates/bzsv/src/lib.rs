//! Exact calculus for BZSV quadruples `(G, H, ρ_H, ι)` and their duals.
//!
//! The crate models split reductive groups as root data with explicit
//! character/cocharacter lattices, computes highest-weight representation
//! data in exact integer arithmetic, and drives structural verification of a
//! shipped corpus of strongly tempered quadruples: symplectic and anomaly
//! tests, reduction to the centralizer Levi, Whittaker induction on the dual
//! side, gluing along marked `A₁` factors, and unramified Satake `L`-factor
//! evaluation for the period conjecture's right-hand sides.
//!
//! Numerical evaluation (only the `lfactor` module) is generic over the
//! floating scalar; the lattice kernel is integer-exact throughout.

pub mod gluing;
pub mod grading;
pub mod lattice;
pub mod lfactor;
pub mod quadruple;
pub mod repcalc;
pub mod rootdata;
pub mod tables;
pub mod typelabel;

pub mod cli;
pub mod families;

/// Default floating scalar used by the CLI and the acceptance suite.
pub type Real = f64;
/// Complex numbers over [`Real`].
pub type Cplx = num_complex::Complex<f64>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("lattice error: {0}")]
    Lattice(String),
    #[error("root datum error: {0}")]
    RootDatum(String),
    #[error("group spec parse error: {0}")]
    GroupSpec(String),
    #[error("rep spec parse error: {0}")]
    RepSpec(String),
    #[error("representation error: {0}")]
    Rep(String),
    #[error("grading error: {0}")]
    Grading(String),
    #[error("quadruple error: {0}")]
    Quadruple(String),
    #[error("corpus schema error in {file}: {msg}")]
    Schema { file: String, msg: String },
    #[error("gluing error: {0}")]
    Gluing(String),
    #[error("L-factor pole at weight {0}")]
    Pole(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
