//! Exact re-verification of the numeric steps of the induction: the
//! inequality ledger, dominance certificates for all `n`, and the
//! exhaustive 7-vertex lemma. No floating point is used anywhere here.

pub mod dominance;
pub mod exact;
pub mod ledger;
pub mod lemma_claim;

pub use dominance::{all_dominance, exponent_dominance, DominanceCertificate};
pub use exact::{Exact, Factored};
pub use ledger::{all_claimed_pass, audit_all, summarize, AuditConfig, FamilySummary, InequalityInstance, Relation, Scope};
pub use lemma_claim::{verify_lemma_claim, LemmaClaimReport};
