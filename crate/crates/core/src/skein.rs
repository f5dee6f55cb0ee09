//! Skein-module classes of closed singular braids.
//!
//! A braid `(α, n)` with Markov class `Σ c_{ab} X^a Y^b` maps to the skein
//! class `Σ c_{ab} z^{a+b−n+1} u^{a+ε−n+1} X̂^a Ŷ^b`, where `ε` is the exponent
//! sum, `u = √y`, and `z = (q−1)/(1−qy)` is read in `Q(s, u)`. This inverts
//! the normalization `z^{−n+1} u^{ε−n+1} [α, n]`, under which
//! `X̂ = z⁻¹u⁻¹ X` and `Ŷ = z⁻¹ Y`.

use crate::braid::{Generator, Sign, SingularBraidWord};
use crate::class::{MarkovClass, SkeinClass};
use crate::coeff::{consts, RationalFunction};
use crate::error::{Error, Result};
use crate::markov::{self, Limits};
use crate::par;

pub fn skein_class(w: &SingularBraidWord) -> Result<SkeinClass> {
    skein_class_with(w, &Limits::default())
}

pub fn skein_class_with(w: &SingularBraidWord, limits: &Limits) -> Result<SkeinClass> {
    let class = markov::markov_class_with(w, limits)?;
    skein_from_markov(&class, w.strands(), w.exponent_sum())
}

/// Renormalizes a Markov class of a braid on `strands` strands with
/// exponent sum `writhe`.
pub fn skein_from_markov(class: &MarkovClass, strands: usize, writhe: i64) -> Result<SkeinClass> {
    let z = consts::z_su();
    let u = RationalFunction::u();
    let n = strands as i64;
    let mut out = SkeinClass::zero();
    for ((a, b), c) in class.terms() {
        let z_exp = a as i64 + b as i64 - n + 1;
        let u_exp = a as i64 + writhe - n + 1;
        let factor = z.pow(exp32(z_exp)?)? * u.pow(exp32(u_exp)?)?;
        out.add_term(a, b, c.embed_qz_to_su()? * factor);
    }
    Ok(out)
}

fn exp32(e: i64) -> Result<i32> {
    i32::try_from(e).map_err(|_| Error::InvalidLimits(format!("exponent {e} out of range")))
}

/// `(t⁻¹ − t)/x`: the factor picked up by adding a split unknot.
pub fn disjoint_union_coefficient() -> RationalFunction {
    let t = consts::t();
    (&t.inv().unwrap() - &t) / consts::x()
}

/// Product in the skein algebra, where one link is placed above the other.
///
/// The closure of `stack(a, b)` is the split union of the two closures. The
/// unknot is `1` in these coordinates rather than the unit of the split
/// union, so the product is the polynomial product times the split-unknot
/// factor.
pub fn split_union(a: &SkeinClass, b: &SkeinClass) -> SkeinClass {
    a.mul(b).scale(&disjoint_union_coefficient())
}

/// Outcome of one skein-relation instance `t⁻¹ L₊ − t L₋ = x L₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleCheck {
    pub holds: bool,
    /// Closure of `w σ_i`.
    pub plus: SkeinClass,
    /// Closure of `w σ_i⁻¹`.
    pub minus: SkeinClass,
    /// Closure of `w`.
    pub zero: SkeinClass,
}

pub fn skein_triple_check(w: &SingularBraidWord, i: usize) -> Result<TripleCheck> {
    skein_triple_check_with(w, i, &Limits::default())
}

pub fn skein_triple_check_with(
    w: &SingularBraidWord,
    i: usize,
    limits: &Limits,
) -> Result<TripleCheck> {
    let legs = [
        w.push(Generator::sigma_signed(i, Sign::Pos))?,
        w.push(Generator::sigma_signed(i, Sign::Neg))?,
        w.clone(),
    ];
    let mut classes = par::map(&legs, |v| skein_class_with(v, limits)).into_iter();
    let plus = classes.next().unwrap()?;
    let minus = classes.next().unwrap()?;
    let zero = classes.next().unwrap()?;
    let t = consts::t();
    let lhs = plus.scale(&t.inv().unwrap()).sub(&minus.scale(&t));
    let rhs = zero.scale(&consts::x());
    Ok(TripleCheck {
        holds: lhs == rhs,
        plus,
        minus,
        zero,
    })
}
