//! λ-rings and τ-rings: universal polynomials, the τ map with its structure
//! maps, and exact axiom checkers.

mod lambda;
mod report;
mod series;
mod tau;
mod universal;

pub use lambda::{
    binomial_signed, check_lambda_axioms, lambda_plethysm, IntegerLambdaRing, LambdaBudget,
    LambdaRing, SymFuncLambdaRing,
};
pub use report::{AxiomRecord, AxiomReport, Status};
pub use series::{TauQ, TauSeries, TauSquare};
pub use tau::{
    check_lambda_closed_form, check_tau_axioms, lambda_from_tau, sign_projection_of_cross,
    tau_closed_form, tau_dot, tau_genuine, tau_symfunc, TauBudget, TauModel,
};
pub use universal::{universal_p, universal_q, UniversalP, UniversalQ};
