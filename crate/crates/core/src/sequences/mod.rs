//! `P_n`, `S_n = P_n / 2^n` and the Franel numbers `f_n`.
//!
//! Values come from the three-term recurrences through process-wide caches;
//! the closed forms in [`closed_forms`] are independent evaluations used to
//! cross-check them.

mod cache;
pub mod closed_forms;
mod identities;

pub(crate) use cache::cache;
pub use cache::{clf_p, clf_s, franel, prefill, SequenceCache, SequenceId};
pub use closed_forms::{clf_p_closed, clf_s_closed, franel_sum, PForm, SForm};
pub use identities::{
    identity_1_12_first, identity_1_12_second, identity_2_2, identity_2_4, lemma_3_1,
    log_convexity, p_log_convex, LogConvexity,
};
