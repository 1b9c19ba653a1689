//! Forward map: Jacobi parameters to Jost function, Jost solutions,
//! `M`-function, perturbation determinant, bound states and eigenvalue
//! counts.

mod bound;
mod determinant;
mod gc;
mod jacobi;
mod mfunc;
mod solutions;
mod sturm;

pub use bound::{bound_states, bound_states_with_tol, residue_to_weight, weight_to_residue, BoundState};
pub use determinant::perturbation_determinant;
pub use gc::{gc_step, jost_from_finite, jost_function, jost_tail_limit, GCState};
pub use jacobi::{JacobiParams, Tail};
pub use mfunc::{m_continued_fraction, m_from_jost};
pub use solutions::{
    boundary_identity_check, jost_solution, jost_solution_sequence, jost_value, polynomial_solution,
    wronskian,
};
pub use sturm::sturm_count;
