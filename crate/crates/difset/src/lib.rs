//! Sidon sets, perfect difference sets, and the cyclic projective planes
//! they generate.
//!
//! A *Sidon set* is a set of integers whose pairwise differences of distinct
//! elements are all distinct. A *perfect difference set* modulo `v` is a set
//! of residues whose differences of distinct elements hit every nonzero
//! residue exactly once; this forces `v = q² + q + 1` and the set to have
//! `q + 1` elements, and the translates of such a set are the lines of a
//! cyclic projective plane of order `q`.
//!
//! The crate provides:
//!
//! * exact modular arithmetic, residue sets, and difference tables
//!   ([`modular`]);
//! * Sidon predicates in the difference and sum formulations, the greedy
//!   Mian–Chowla generator, and a greedy extension realizing every small
//!   difference exactly once ([`sidon`]);
//! * arithmetic in GF(p^k) and cubic extensions, plus primitive-element
//!   search ([`field`]);
//! * perfect-difference-set verification, the linear-recurrence (Singer)
//!   construction in deterministic and randomized forms, and a
//!   small-modulus census ([`pds`]);
//! * the cyclic plane, its canonical polarity `x ⇌ B − x`, absolute
//!   points and lines, and exhaustive verifiers for Baer's polarity
//!   propositions ([`plane`]);
//! * a complete backtracking solver for "does this Sidon set extend to a
//!   perfect difference set modulo v", order sweeps, and a machine-checkable
//!   non-extension certificate with an independent checker ([`search`]);
//! * a byte-stable circle-diagram emitter for difference sets ([`diagram`]).
//!
//! Every decision procedure here is exact; there is no floating-point
//! tolerance anywhere in the combinatorial core.
//!
//! See the crate examples for one runnable program per capability, e.g.
//! `cargo run --example extension_search`.

pub mod diagram;
pub mod field;
pub mod modular;
pub mod pds;
pub mod plane;
pub mod rng;
pub mod search;
pub mod sidon;

pub use modular::{
    normalize, reduce_int_set, DifferenceTable, InjectivityError, Modulus, ResidueSet,
};
pub use pds::{check_pds, order_of_modulus, singer_pds, PdsReport, PerfectDifferenceSet};
pub use plane::CyclicPlane;
pub use search::{
    certify_non_extension, check_certificate, extend_to_pds, sweep, NonExtensionCertificate,
    SearchOutcome,
};
pub use sidon::{is_sidon_differences, is_sidon_mod, is_sidon_sums, mian_chowla, IntegerSet};
