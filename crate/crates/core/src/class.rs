//! Polynomials in two commuting class variables with rational-function
//! coefficients: `Q(q,z)[X, Y]` for Markov classes and `Q(s,u)[X̂, Ŷ]` for
//! skein classes.

use std::collections::BTreeMap;
use std::fmt;
use std::marker::PhantomData;

use crate::coeff::{RationalFunction, VarSet};

pub trait ClassBasis: Clone + fmt::Debug + PartialEq + Eq {
    const NAMES: [&'static str; 2];
    const VARS: VarSet;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkovBasis;

impl ClassBasis for MarkovBasis {
    const NAMES: [&'static str; 2] = ["X", "Y"];
    const VARS: VarSet = VarSet::Qz;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkeinBasis;

impl ClassBasis for SkeinBasis {
    const NAMES: [&'static str; 2] = ["Xhat", "Yhat"];
    const VARS: VarSet = VarSet::Su;
}

/// Sparse map from exponent pairs to nonzero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassPolynomial<B: ClassBasis> {
    terms: BTreeMap<(u32, u32), RationalFunction>,
    basis: PhantomData<B>,
}

/// Element of the Markov module, in the basis `X^a Y^b`.
pub type MarkovClass = ClassPolynomial<MarkovBasis>;
/// Element of the skein module, in the basis `X̂^a Ŷ^b`.
pub type SkeinClass = ClassPolynomial<SkeinBasis>;

impl<B: ClassBasis> ClassPolynomial<B> {
    pub fn zero() -> Self {
        ClassPolynomial {
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one(B::VARS))
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(a: u32, b: u32, c: RationalFunction) -> Self {
        assert_eq!(c.vars(), B::VARS, "coefficient over the wrong field");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        ClassPolynomial {
            terms,
            basis: PhantomData,
        }
    }

    /// The first generator (`X` or `X̂`).
    pub fn x() -> Self {
        Self::monomial(1, 0, RationalFunction::one(B::VARS))
    }

    /// The second generator (`Y` or `Ŷ`).
    pub fn y() -> Self {
        Self::monomial(0, 1, RationalFunction::one(B::VARS))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Option<&RationalFunction> {
        self.terms.get(&(a, b))
    }

    /// Terms sorted by `(a, b)` descending.
    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &RationalFunction)> {
        self.terms.iter().rev().map(|(k, v)| (*k, v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common total degree of all terms, if homogeneous and nonzero.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(|(a, b)| a + b);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub(crate) fn add_term(&mut self, a: u32, b: u32, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b));
        match entry {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, -c);
        }
        out
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        let mut out = Self::zero();
        for (&(a, b), v) in &self.terms {
            out.add_term(a, b, v * c);
        }
        out
    }

    /// Polynomial product; it models stacking of braids.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }
}

impl<B: ClassBasis> fmt::Display for ClassPolynomial<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((a, b), c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            let monomial_one = a == 0 && b == 0;
            if monomial_one {
                parts.push(c.to_string());
            } else if !c.is_one() {
                let simple = c.is_polynomial()
                    && c.numer().len() == 1
                    && !c.to_string().starts_with('-');
                if simple {
                    parts.push(c.to_string());
                } else {
                    parts.push(format!("({c})"));
                }
            }
            for (e, name) in [(a, B::NAMES[0]), (b, B::NAMES[1])] {
                match e {
                    0 => {}
                    1 => parts.push(name.to_string()),
                    _ => parts.push(format!("{name}^{e}")),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}
