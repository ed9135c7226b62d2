//! Exterior calculus of a Lie algebroid, the bialgebroid condition and the
//! linear Poisson structure on the dual.

mod bialgebroid;
mod differential;
pub mod lie_poisson;
mod multisection;
mod schouten;
mod semidirect;

pub use bialgebroid::{base_poisson, check_bialgebroid, derivation_residual, lie_derivative_residual, tangent_pair};
pub use differential::{contraction, lie_derivative_form, lie_differential};
pub use lie_poisson::{lie_poisson_bracket, lie_poisson_jacobiator};
pub use multisection::{index_tuples, MultiSection};
pub use schouten::schouten_bracket;
pub use semidirect::{semidirect_e, semidirect_edual};
