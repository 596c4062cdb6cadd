//! Precision contexts, decimal serialization and exact Bernoulli numbers.

mod bernoulli;
mod context;
mod decimal;

pub use bernoulli::{bernoulli_numbers, bernoulli_numbers_by_recurrence};
pub use context::{digits_to_bits, make_context, PrecisionContext};
pub use decimal::{format_real, parse_real};
