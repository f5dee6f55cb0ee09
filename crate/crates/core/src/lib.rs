//! Exact HOMFLYPT skein-module classes of closed singular braids.
//!
//! The pipeline is: braid word → trace functionals on the singular Hecke
//! algebra (via the Ocneanu trace) → coordinates in the Markov module
//! `Q(q,z)[X, Y]` → renormalized class in the skein module `Q(s,u)[X̂, Ŷ]`,
//! where `s² = q` and `u² = y`.
//!
//! ```
//! use singular_skein::{skein_class, SingularBraidWord, SkeinClass};
//!
//! let w = SingularBraidWord::parse("t1", Some(2)).unwrap();
//! assert_eq!(skein_class(&w).unwrap(), SkeinClass::x());
//! ```

pub mod braid;
pub mod class;
pub mod coeff;
pub mod error;
pub mod hecke;
pub mod linalg;
pub mod markov;
mod par;
pub mod perm;
pub mod skein;
pub mod verify;

pub use braid::{shuffle_braid, Generator, GeneratorKind, MarkovMove, MoveConfig, Relation, Sign, SingularBraidWord};
pub use class::{MarkovClass, SkeinClass};
pub use coeff::{RationalFunction, VarSet};
pub use error::{Error, Result};
pub use hecke::HeckeElement;
pub use markov::{markov_class, markov_class_with, pairing_matrix, trace_functional, Limits};
pub use par::is_parallel;
pub use perm::Permutation;
pub use skein::{
    disjoint_union_coefficient, skein_class, skein_class_with, skein_triple_check, split_union,
};
