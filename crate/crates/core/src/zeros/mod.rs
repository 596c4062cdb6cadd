//! Complex zeros `σ_k` of `λ(s)`: seeding, Newton refinement, tabulation,
//! fixture comparison and the product over zeros.
//!
//! Zeros come in fours `±x ± iy`; only the representative with `x > 0`,
//! `y >= 0` is stored.

mod newton;
mod product;
mod table;
mod verify;

pub use newton::{certify_zero, refine_zero, seed_zero, MAX_NEWTON_STEPS, SEED_FALLBACK};
pub use product::product_partial;
pub use table::{ComplexZero, Provenance, ZeroTable, REFERENCE_ZEROS_CSV};
pub use verify::{verify_against_fixture, FixtureReport, ReportStatus, ZeroComparison, FIXTURE_TOLERANCE};
