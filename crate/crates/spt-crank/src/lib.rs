//! Exact partition combinatorics around the spt-crank.
//!
//! The crate provides:
//!
//! - partition enumeration, conjugation, rank/crank statistics, rank-set
//!   membership, and the counting families q(m,n) and p(-m,n)
//!   ([`partition`], [`stats`]);
//! - m-Durfee rectangle symbols, the disjoint Q/P classifications, and the
//!   weight-preserving injections Q(m,n) -> P(-m,n) with inverses and
//!   auxiliary-index traces ([`durfee`], [`classify`], [`inject`]);
//! - signed vector partitions, the spt-crank counts N_S(m,n), and spt(n)
//!   ([`spt`]);
//! - exhaustive verification suites for the inequalities, identities,
//!   moments, and congruences the injections imply ([`verify`]).
//!
//! Everything is computed exactly in fixed-width integers with checked
//! arithmetic; nothing here is floating point or probabilistic.

pub mod classify;
pub mod cli;
pub mod durfee;
pub mod inject;
pub mod partition;
pub mod spt;
pub mod stats;
pub mod verify;

pub use classify::{classify_p, classify_q, in_p, in_q, ClassLabel, ClassifyError, Side};
pub use durfee::{durfee_index, to_symbol, DurfeeSymbol, SymbolError};
pub use inject::{phi, InjectError, MapName, MappingTrace};
pub use partition::{
    count_partitions, enumerate_partitions, Part, Partition, PartitionError, PartitionIter,
    SmallestPart,
};
pub use spt::{
    enumerate_s_partitions, n_s, n_s_mod, n_s_row, spt, visit_s_partitions, SPartition, SptError,
};
pub use verify::{
    verify_all, verify_conjecture, verify_identities, verify_injection, verify_injection_sweep,
    verify_moments, verify_spt, Claim, Counterexample, Status, VerificationReport,
};
pub use stats::{
    crank_moment, m_leq, n_leq, p_rank_at_least, positive_crank_moment, positive_rank_moment,
    q_count, q_row, rank_moment, CrankConvention, RankCrankTable,
};
