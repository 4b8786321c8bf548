//! Computations around nilpotent and polynilpotent multipliers of free
//! nilpotent groups.
//!
//! The crate is split into four layers:
//!
//! - [`hall`]: commutator trees, the basic-commutator order and predicate,
//!   and weight-stratified enumeration of Hall bases.
//! - [`witt`]: the Möbius function, the Witt count of basic commutators and
//!   closed-form multiplier ranks.
//! - [`magnus`]: exact arithmetic in free nilpotent quotients through the
//!   Magnus embedding into truncated noncommutative integer polynomials,
//!   plus exact integer rank of leading terms.
//! - [`multiplier`]: the auxiliary sets `Y`, `Z`, `W`, the explicit basis of
//!   the `(c,1)` polynilpotent multiplier and machine checks of the lemmas
//!   that lead to it.

pub mod error;
pub mod hall;
pub mod magnus;
pub mod multiplier;
pub mod witt;

pub use error::{Error, Result};
pub use hall::{
    basic_commutators_of_weight_range, compare_commutators, enumerate_hall_basis,
    enumerate_hall_basis_capped, is_basic, Commutator, Generator, HallBasis, DEFAULT_MAX_ELEMENTS,
};
pub use magnus::{
    eval_commutator, integer_rank, CommutatorEvaluator, LeadingTermVector, MagnusElement, Valuation,
};
pub use multiplier::{
    build_yzw, check_hall_independence, check_lemma_2_2, check_lemma_2_3, check_lemma_2_4,
    check_lemma_2_5, check_theorem_2_6, multiplier_basis, Status, Target, VerificationReport,
    YZWSets,
};
pub use witt::{chi, mobius, nilpotent_multiplier_rank, polynilpotent_c1_rank, Branch, RankReport};
