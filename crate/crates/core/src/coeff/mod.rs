//! Exact scalars.
//!
//! Two coefficient fields are in play: `Q(q, z)` for Hecke algebra traces
//! and `Q(s, u)` with `q = s^2`, `y = u^2` for skein normalization. Both are
//! modelled by [`RationalFunction`] tagged with a [`VarSet`].

mod parse;
mod poly;
mod rational;
mod upoly;

use std::fmt;

use thiserror::Error;

pub use poly::{Monomial, MultivariatePolynomial};
pub use rational::RationalFunction;

/// Which pair of indeterminates a polynomial is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarSet {
    /// `q` (Hecke parameter) and `z` (trace parameter).
    Qz,
    /// `s = sqrt(q)` and `u = sqrt(y)`.
    Su,
}

impl VarSet {
    pub fn names(self) -> [&'static str; 2] {
        match self {
            VarSet::Qz => ["q", "z"],
            VarSet::Su => ["s", "u"],
        }
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = self.names();
        write!(f, "{{{a},{b}}}")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("mixed variable sets {0} and {1}")]
    MixedVariables(VarSet, VarSet),
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("cannot read coefficient at byte {position}: {message}")]
    Syntax { position: usize, message: String },
}

/// Frequently used constants of the skein normalization, all in `Q(s,u)`.
pub mod consts {
    use super::{RationalFunction, VarSet};

    /// `t = s u`.
    pub fn t() -> RationalFunction {
        RationalFunction::s() * RationalFunction::u()
    }

    /// `x = s - 1/s`.
    pub fn x() -> RationalFunction {
        let s = RationalFunction::s();
        &s - &s.inv().unwrap()
    }

    /// Image of `z` under the embedding.
    pub fn z_su() -> RationalFunction {
        RationalFunction::z().embed_qz_to_su().unwrap()
    }

    pub fn one() -> RationalFunction {
        RationalFunction::one(VarSet::Su)
    }
}
