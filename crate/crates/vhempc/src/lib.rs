//! Varying-horizon robust economic model predictive control.
//!
//! The crate implements a terminal-constraint-free EMPC scheme for
//! discrete-time nonlinear systems with bounded additive disturbances and
//! economic stage costs that may be unknown and learned online:
//!
//! - [`model`] — plant abstraction, constraint boxes, and the CSTR /
//!   four-tank benchmark scenarios;
//! - [`regressor`] — online mixed-kernel regression of the economic cost;
//! - [`nlp`] — dense SQP solver with a primal active-set QP backend;
//! - [`ingredients`] — offline stabilizing ingredients (DLQR terminal law,
//!   terminal-set levels, Lipschitz constants, admissible-horizon sets);
//! - [`fheoc`] — the finite-horizon economic optimal control problem,
//!   constraint tightening, and candidate-plan machinery;
//! - [`controller`] — the online loop: horizon adaptation and the
//!   contraction-constrained receding-horizon controller;
//! - [`offline`] — the offline pipeline assembling an ingredients bundle;
//! - [`harness`] — closed-loop simulation, Monte Carlo batches, the RPI
//!   sampling check, and CSV export.

pub mod controller;
pub mod fheoc;
pub mod harness;
pub mod ingredients;
pub mod model;
pub mod nlp;
pub mod offline;
pub mod regressor;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got} ({context})")]
    Dimension {
        expected: usize,
        got: usize,
        context: &'static str,
    },
    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("degenerate set: {0}")]
    DegenerateSet(String),
    #[error("empty tightened constraint set at step {step} (margin {margin:.3e})")]
    EmptyTightenedSet { step: usize, margin: f64 },
    #[error("Riccati iteration did not converge after {0} iterations")]
    RiccatiDiverged(usize),
    #[error("terminal control law inadequate: {0}")]
    LawInadequate(String),
    #[error("QP active-set cycling: exceeded {0} pivots")]
    QpCycling(usize),
    #[error("QP subproblem infeasible")]
    QpInfeasible,
    #[error("initial state outside the feasible start set: {0}")]
    InfeasibleStart(String),
    #[error("candidate prerequisites violated: {0}")]
    CandidatePrerequisite(String),
    #[error("empty sample set")]
    EmptySamples,
    #[error("regressor is frozen")]
    RegressorFrozen,
    #[error("no feasible initial points found for RPI sampling")]
    NoFeasiblePoints,
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
