//! The Iwahori–Hecke algebra `H_n(q)` in the basis `{T_w}` and the Ocneanu
//! trace.

use std::collections::HashMap;

use thiserror::Error;

use crate::braid::{GeneratorKind, Sign, SingularBraidWord};
use crate::coeff::{Monomial, RationalFunction, VarSet};
use crate::perm::Permutation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HeckeError {
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("singular crossing in an ordinary braid word")]
    TauInOrdinaryContext,
    #[error("strand counts differ ({0} vs {1})")]
    StrandMismatch(usize, usize),
}

/// Finite linear combination of basis elements `T_w`, `w ∈ Sym_n`, with
/// coefficients in `Q(q, z)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    strands: usize,
    terms: HashMap<Permutation, RationalFunction>,
}

fn q_minus_one() -> RationalFunction {
    RationalFunction::q() - RationalFunction::one(VarSet::Qz)
}

const Q: Monomial = Monomial(1, 0);

impl HeckeElement {
    pub fn zero(strands: usize) -> Self {
        HeckeElement {
            strands,
            terms: HashMap::new(),
        }
    }

    pub fn identity(strands: usize) -> Self {
        Self::basis(Permutation::identity(strands))
    }

    pub fn basis(w: Permutation) -> Self {
        let strands = w.len();
        let mut terms = HashMap::new();
        terms.insert(w, RationalFunction::one(VarSet::Qz));
        HeckeElement { strands, terms }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> Option<&RationalFunction> {
        self.terms.get(w)
    }

    /// Terms sorted by permutation, for deterministic iteration.
    pub fn sorted_terms(&self) -> Vec<(&Permutation, &RationalFunction)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| a.0.cmp(b.0));
        v
    }

    fn add_term(terms: &mut HashMap<Permutation, RationalFunction>, w: Permutation, c: RationalFunction) {
        if c.is_zero() {
            return;
        }
        match terms.entry(w) {
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, HeckeError> {
        if self.strands != other.strands {
            return Err(HeckeError::StrandMismatch(self.strands, other.strands));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            Self::add_term(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero(self.strands);
        }
        HeckeElement {
            strands: self.strands,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a * c)).collect(),
        }
    }

    /// Right multiplication by `T_i` (`sign = Pos`) or `T_i⁻¹` (`Neg`).
    ///
    /// `T_w T_i = T_{w s_i}` on an ascent and `(q−1) T_w + q T_{w s_i}` on a
    /// descent. From `T_i⁻¹ = q⁻¹ T_i + (q⁻¹ − 1)` one gets
    /// `T_w T_i⁻¹ = q⁻¹ T_{w s_i} + (q⁻¹ − 1) T_w` on an ascent and
    /// `T_{w s_i}` on a descent.
    pub fn mul_by_generator(&self, i: usize, sign: Sign) -> Result<Self, HeckeError> {
        if i == 0 || i >= self.strands {
            return Err(HeckeError::IndexOutOfRange {
                index: i,
                strands: self.strands,
            });
        }
        let qm1 = q_minus_one();
        let q_inv = RationalFunction::q().inv().unwrap();
        let q_inv_m1 = &q_inv - &RationalFunction::one(VarSet::Qz);
        let mut terms = HashMap::with_capacity(self.terms.len() * 2);
        for (w, c) in &self.terms {
            let ws = w.mul_simple(i);
            match (sign, w.is_ascent(i)) {
                (Sign::Pos, true) | (Sign::Neg, false) => Self::add_term(&mut terms, ws, c.clone()),
                (Sign::Pos, false) => {
                    Self::add_term(&mut terms, w.clone(), c * &qm1);
                    Self::add_term(&mut terms, ws, c.mul_monomial(Q));
                }
                (Sign::Neg, true) => {
                    Self::add_term(&mut terms, ws, c * &q_inv);
                    Self::add_term(&mut terms, w.clone(), c * &q_inv_m1);
                }
            }
        }
        Ok(HeckeElement {
            strands: self.strands,
            terms,
        })
    }

    /// `self · other`, multiplying along a reduced word of each basis
    /// permutation of `other`.
    pub fn mul(&self, other: &Self) -> Result<Self, HeckeError> {
        if self.strands != other.strands {
            return Err(HeckeError::StrandMismatch(self.strands, other.strands));
        }
        let mut out = Self::zero(self.strands);
        for (v, c) in other.sorted_terms() {
            let mut prod = self.clone();
            for i in v.reduced_word() {
                prod = prod.mul_by_generator(i, Sign::Pos)?;
            }
            out = out.add(&prod.scale(c))?;
        }
        Ok(out)
    }

    /// Image of an ordinary braid word.
    pub fn evaluate_word(w: &SingularBraidWord) -> Result<Self, HeckeError> {
        let mut h = Self::identity(w.strands());
        for g in w.letters() {
            let sign = match g.kind {
                GeneratorKind::SigmaPos => Sign::Pos,
                GeneratorKind::SigmaNeg => Sign::Neg,
                GeneratorKind::Tau => return Err(HeckeError::TauInOrdinaryContext),
            };
            h = h.mul_by_generator(g.index, sign)?;
        }
        Ok(h)
    }

    /// The Ocneanu trace: `tr(1) = 1`, `tr(ab) = tr(ba)`, and
    /// `tr(x T_{m−1} y) = z tr(xy)` for `x, y ∈ H_{m−1}`.
    ///
    /// Works one strand at a time from the top. A basis element `T_w` with
    /// `w(m) ≠ m` factors as `T_u T_{m−1} T_{m−2} ⋯ T_j` where `j = w⁻¹(m)`
    /// and `u ∈ Sym_{m−1}`, so it contributes `z · T_u T_{m−2} ⋯ T_j` to the
    /// element of `H_{m−1}` with the same trace.
    pub fn ocneanu_trace(&self) -> RationalFunction {
        let z = RationalFunction::z();
        let mut current = self.terms.clone();
        for m in (2..=self.strands).rev() {
            let mut next: HashMap<Permutation, RationalFunction> =
                HashMap::with_capacity(current.len());
            for (w, c) in current {
                if w.apply(m) == m {
                    Self::add_term(&mut next, w, c);
                    continue;
                }
                let j = w.inverse().apply(m);
                let mut u = w;
                for p in j..m {
                    u.swap_in_place(p);
                }
                let mut piece = HeckeElement::basis(u);
                for i in (j..m - 1).rev() {
                    piece = piece
                        .mul_by_generator(i, Sign::Pos)
                        .expect("peeling stays in range");
                }
                let cz = &c * &z;
                for (x, a) in piece.terms {
                    Self::add_term(&mut next, x, &a * &cz);
                }
            }
            current = next;
        }
        current
            .remove(&Permutation::identity(self.strands))
            .unwrap_or_else(|| RationalFunction::zero(VarSet::Qz))
    }
}
