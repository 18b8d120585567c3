//! Exact-arithmetic workbench for congruences satisfied by the
//! Catalan–Larcombe–French numbers `P_n`, their normalization `S_n = P_n/2^n`
//! and the Franel numbers `f_n`.
//!
//! Every check evaluates both sides with exact integers and rationals and
//! reports the p-adic valuation actually achieved by their difference.

pub mod campaign;
pub mod error;
pub mod exact_arith;
pub mod lemma_checks;
pub mod sequences;
pub mod special_numbers;
pub mod theorem_checks;

pub use error::{Error, Result};
