//! Degree-graded trace functionals on singular braids and coordinates of a
//! braid's class in the Markov module.
//!
//! The functional `T_{d,k}` is `tr ∘ g₀^{d−k} ∘ g₁^{k}`, where `g₀` deletes
//! a singular crossing and `g₁` resolves it into a positive crossing, summed
//! over crossings. Unwound, it is a sum over `k`-subsets of the singular
//! crossings, each with multiplicity `k!(d−k)!`. Coordinates in the basis
//! `X^a Y^{d−a}` are obtained by solving against the matrix of these
//! functionals evaluated on explicit representatives of the basis.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::braid::{Generator, SingularBraidWord};
use crate::class::MarkovClass;
use crate::coeff::{RationalFunction, VarSet};
use crate::error::{Error, Result};
use crate::hecke::HeckeElement;
use crate::linalg::Matrix;
use crate::par;

/// Hard cap on the number of singular crossings.
pub const MAX_DEGREE: usize = 8;
/// Hard cap on the strand count of an input word.
pub const MAX_STRANDS: usize = 12;

/// Size limits enforced by [`markov_class_with`]; never above the hard caps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    max_degree: usize,
    max_strands: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_degree: MAX_DEGREE,
            max_strands: MAX_STRANDS,
        }
    }
}

impl Limits {
    pub fn new(max_degree: usize, max_strands: usize) -> Result<Self> {
        if max_degree > MAX_DEGREE {
            return Err(Error::InvalidLimits(format!(
                "degree limit {max_degree} above the hard cap {MAX_DEGREE}"
            )));
        }
        if max_strands > MAX_STRANDS {
            return Err(Error::InvalidLimits(format!(
                "strand limit {max_strands} above the hard cap {MAX_STRANDS}"
            )));
        }
        Ok(Limits {
            max_degree,
            max_strands,
        })
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn max_strands(&self) -> usize {
        self.max_strands
    }

    pub fn check(&self, w: &SingularBraidWord) -> Result<()> {
        if w.degree() > self.max_degree {
            return Err(Error::DegreeCapExceeded {
                degree: w.degree(),
                max: self.max_degree,
            });
        }
        if w.strands() > self.max_strands {
            return Err(Error::StrandCapExceeded {
                strands: w.strands(),
                max: self.max_strands,
            });
        }
        Ok(())
    }
}

/// Formal sum of words with positive integer multiplicities. Only
/// syntactically equal words are merged.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalWordSum {
    terms: BTreeMap<SingularBraidWord, u64>,
}

impl FormalWordSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(w: SingularBraidWord) -> Self {
        let mut s = Self::new();
        s.push(w, 1);
        s
    }

    pub fn push(&mut self, w: SingularBraidWord, mult: u64) {
        if mult > 0 {
            *self.terms.entry(w).or_insert(0) += mult;
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SingularBraidWord, u64)> {
        self.terms.iter().map(|(w, &m)| (w, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, w: &SingularBraidWord) -> u64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// Total multiplicity.
    pub fn weight(&self) -> u64 {
        self.terms.values().sum()
    }

    fn map_words(&self, f: impl Fn(&SingularBraidWord) -> Result<FormalWordSum>) -> Result<Self> {
        let mut out = Self::new();
        for (w, m) in self.terms() {
            for (v, k) in f(w)?.terms() {
                out.push(v.clone(), m * k);
            }
        }
        Ok(out)
    }

    /// Linear extension of [`desing_delete`].
    pub fn desing_delete(&self) -> Result<Self> {
        self.map_words(desing_delete)
    }

    /// Linear extension of [`desing_resolve`].
    pub fn desing_resolve(&self) -> Result<Self> {
        self.map_words(desing_resolve)
    }

    /// `Σ mult · tr(word)` for a sum of ordinary words.
    pub fn ordinary_trace(&self) -> Result<RationalFunction> {
        let items: Vec<_> = self.terms().collect();
        let values = par::map(&items, |(w, m)| -> Result<RationalFunction> {
            let t = HeckeElement::evaluate_word(w)?.ocneanu_trace();
            Ok(t.scale_int(*m as i64))
        });
        sum(values)
    }
}

fn sum(values: Vec<Result<RationalFunction>>) -> Result<RationalFunction> {
    values
        .into_iter()
        .try_fold(RationalFunction::zero(VarSet::Qz), |acc, v| Ok(acc + v?))
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Sum over singular crossings of the word with that crossing removed.
pub fn desing_delete(w: &SingularBraidWord) -> Result<FormalWordSum> {
    let positions = w.tau_positions();
    if positions.is_empty() {
        return Err(Error::DegreeZero);
    }
    let mut out = FormalWordSum::new();
    for p in positions {
        out.push(w.without_letter(p), 1);
    }
    Ok(out)
}

/// Sum over singular crossings of the word with that crossing made positive.
pub fn desing_resolve(w: &SingularBraidWord) -> Result<FormalWordSum> {
    let positions = w.tau_positions();
    if positions.is_empty() {
        return Err(Error::DegreeZero);
    }
    let mut out = FormalWordSum::new();
    for p in positions {
        let g = w.letters()[p];
        out.push(w.with_letter(p, Generator::sigma(g.index)), 1);
    }
    Ok(out)
}

fn for_each_subset(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(start: usize, n: usize, k: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if chosen.len() == k {
            f(chosen);
            return;
        }
        for i in start..n {
            if n - i < k - chosen.len() {
                break;
            }
            chosen.push(i);
            rec(i + 1, n, k, chosen, f);
            chosen.pop();
        }
    }
    rec(0, n, k, &mut Vec::with_capacity(k), f);
}

/// `g₀^{d−k} g₁^{k}(w)`: every `k`-subset of the singular crossings resolved,
/// the rest deleted, each with multiplicity `k!(d−k)!`.
pub fn subset_expansion(w: &SingularBraidWord, k: usize) -> Result<FormalWordSum> {
    let taus = w.tau_positions();
    let d = taus.len();
    if k > d {
        return Err(Error::IndexOutOfRange { k, degree: d });
    }
    let mult = factorial(k) * factorial(d - k);
    let mut out = FormalWordSum::new();
    for_each_subset(d, k, &mut |chosen| {
        let mut letters = Vec::with_capacity(w.len());
        let mut next = 0;
        for (pos, g) in w.letters().iter().enumerate() {
            if !g.is_tau() {
                letters.push(*g);
                continue;
            }
            let tau_idx = taus.iter().position(|&p| p == pos).unwrap();
            if next < chosen.len() && chosen[next] == tau_idx {
                letters.push(Generator::sigma(g.index));
                next += 1;
            }
        }
        out.push(SingularBraidWord::from_parts(w.strands(), letters), mult);
    });
    Ok(out)
}

/// `T_{d,k}(w)` for the degree `d` of `w`.
pub fn trace_functional(w: &SingularBraidWord, k: usize) -> Result<RationalFunction> {
    subset_expansion(w, k)?.ordinary_trace()
}

/// Values `T_{d,0}(β), …, T_{d,d}(β)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceVector {
    values: Vec<RationalFunction>,
}

impl TraceVector {
    pub fn degree(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[RationalFunction] {
        &self.values
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        TraceVector {
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }
}

pub fn trace_vector(w: &SingularBraidWord) -> Result<TraceVector> {
    let d = w.degree();
    // Flatten all subset terms so they share one parallel pass.
    let mut jobs: Vec<(usize, SingularBraidWord, u64)> = Vec::new();
    for k in 0..=d {
        for (v, m) in subset_expansion(w, k)?.terms() {
            jobs.push((k, v.clone(), m));
        }
    }
    let traces = par::map(&jobs, |(_, v, m)| -> Result<RationalFunction> {
        Ok(HeckeElement::evaluate_word(v)?
            .ocneanu_trace()
            .scale_int(*m as i64))
    });
    let mut values = vec![RationalFunction::zero(VarSet::Qz); d + 1];
    for ((k, _, _), t) in jobs.iter().zip(traces) {
        values[*k] = &values[*k] + &t?;
    }
    Ok(TraceVector { values })
}

/// `τ₁τ₃⋯τ_{2k−1} (τ_{2k+1}σ_{2k+1}) ⋯ (τ_{2d−1}σ_{2d−1})` on `max(2d, 1)`
/// strands, a representative of `X^k Y^{d−k}`.
pub fn basis_word(d: usize, k: usize) -> SingularBraidWord {
    assert!(k <= d, "basis word index out of range");
    let mut letters = Vec::with_capacity(2 * d - k);
    for j in 0..d {
        let i = 2 * j + 1;
        letters.push(Generator::tau(i));
        if j >= k {
            letters.push(Generator::sigma(i));
        }
    }
    SingularBraidWord::from_parts((2 * d).max(1), letters)
}

/// Pairing of the functionals with the basis words.
///
/// The inverse is held as a polynomial matrix over a common denominator.
#[derive(Debug)]
pub struct Pairing {
    /// `matrix[k][j] = T_{d,k}(X^{d−j} Y^{j})`.
    pub matrix: Matrix,
    numerators: Matrix,
    denominator: RationalFunction,
    determinant: OnceLock<RationalFunction>,
}

impl Pairing {
    pub fn degree(&self) -> usize {
        self.matrix.rows() - 1
    }

    /// Computed on first use by fraction-free elimination.
    pub fn determinant(&self) -> &RationalFunction {
        self.determinant.get_or_init(|| self.matrix.determinant())
    }

    pub fn inverse(&self) -> Matrix {
        let n = self.matrix.rows();
        let mut inv = Matrix::zeros(n, n, VarSet::Qz);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, self.numerators.get(i, j) / &self.denominator);
            }
        }
        inv
    }

    /// `matrix⁻¹ · v`.
    pub fn solve(&self, v: &[RationalFunction]) -> Result<Vec<RationalFunction>> {
        self.numerators
            .mul_vec(v)
            .into_iter()
            .map(|c| Ok(c.checked_div(&self.denominator)?))
            .collect()
    }
}

static PAIRINGS: [OnceLock<Result<Arc<Pairing>>>; MAX_DEGREE + 1] =
    [const { OnceLock::new() }; MAX_DEGREE + 1];

/// A guess `P` for `(r − z²)^d` times the inverse pairing, `r = tr(σ₁²)`.
///
/// Under `X = A + zB`, `Y = zA + rB` the lowering operators become `∂_A` and
/// `∂_B`, so `T_{d,k}` reads off `k!(d−k)!` times the coefficient of
/// `A^{d−k} B^k`. Inverting the substitution gives the guess. The caller
/// checks it against the matrix of actual trace values.
fn candidate_inverse(d: usize) -> (Matrix, RationalFunction) {
    let z = RationalFunction::z();
    let r = resolved_trace();
    let x = MarkovClass::x();
    let y = MarkovClass::y();
    let a = x.scale(&r).sub(&y.scale(&z));
    let b = y.sub(&x.scale(&z));
    let mut p = Matrix::zeros(d + 1, d + 1, VarSet::Qz);
    for k in 0..=d {
        let weight = BigInt::from(factorial(k) * factorial(d - k));
        let scale = RationalFunction::from_rational(VarSet::Qz, BigRational::new(1.into(), weight));
        let f = a.pow((d - k) as u32).mul(&b.pow(k as u32)).scale(&scale);
        for j in 0..=d {
            if let Some(c) = f.coeff((d - j) as u32, j as u32) {
                p.set(j, k, c.clone());
            }
        }
    }
    let den = (&r - &(&z * &z)).pow(d as i32).expect("nonnegative power");
    (p, den)
}

fn compute_pairing(d: usize) -> Result<Pairing> {
    let cols: Vec<SingularBraidWord> = (0..=d).map(|j| basis_word(d, d - j)).collect();
    let vectors = par::map(&cols, trace_vector);
    let mut matrix = Matrix::zeros(d + 1, d + 1, VarSet::Qz);
    for (j, tv) in vectors.into_iter().enumerate() {
        for (k, v) in tv?.values.into_iter().enumerate() {
            matrix.set(k, j, v);
        }
    }
    let (guess, den) = candidate_inverse(d);
    let certified = matrix.mul(&guess).is_scalar(&den);
    let (numerators, denominator) = if certified {
        (guess, den)
    } else {
        let inv = matrix
            .inverse()
            .ok_or(Error::SingularPairingMatrix { degree: d })?;
        (inv, RationalFunction::one(VarSet::Qz))
    };
    Ok(Pairing {
        matrix,
        numerators,
        denominator,
        determinant: OnceLock::new(),
    })
}

/// Cached pairing data for degree `d`; each degree is computed once.
pub fn pairing(d: usize) -> Result<Arc<Pairing>> {
    let slot = PAIRINGS.get(d).ok_or(Error::DegreeCapExceeded {
        degree: d,
        max: MAX_DEGREE,
    })?;
    slot.get_or_init(|| compute_pairing(d).map(Arc::new)).clone()
}

/// Rows are the functionals `T_{d,k}`, columns the basis monomials in the
/// order `X^d, X^{d−1}Y, …, Y^d`.
pub fn pairing_matrix(d: usize) -> Result<Matrix> {
    Ok(pairing(d)?.matrix.clone())
}

pub fn markov_class(w: &SingularBraidWord) -> Result<MarkovClass> {
    markov_class_with(w, &Limits::default())
}

pub fn markov_class_with(w: &SingularBraidWord, limits: &Limits) -> Result<MarkovClass> {
    limits.check(w)?;
    let tv = trace_vector(w)?;
    class_from_traces(&tv)
}

/// Coordinates of the class with the given trace vector.
pub fn class_from_traces(tv: &TraceVector) -> Result<MarkovClass> {
    let d = tv.degree();
    let p = pairing(d)?;
    let coords = p.solve(&tv.values)?;
    let mut class = MarkovClass::zero();
    for (j, c) in coords.into_iter().enumerate() {
        class.add_term((d - j) as u32, j as u32, c);
    }
    Ok(class)
}

/// `Σ mult · [word]`.
pub fn markov_class_of_sum(sum: &FormalWordSum) -> Result<MarkovClass> {
    let items: Vec<_> = sum.terms().collect();
    let classes = par::map(&items, |(w, m)| {
        markov_class(w).map(|c| c.scale(&RationalFunction::from_int(VarSet::Qz, *m as i64)))
    });
    classes
        .into_iter()
        .try_fold(MarkovClass::zero(), |acc, c| Ok(acc.add(&c?)))
}

/// Product in the Markov module (stacking).
pub fn class_product(a: &MarkovClass, b: &MarkovClass) -> MarkovClass {
    a.mul(b)
}

fn resolved_trace() -> RationalFunction {
    // tr(σ₁²) = (q − 1) z + q
    let q = RationalFunction::q();
    let z = RationalFunction::z();
    &(&(&q - &RationalFunction::one(VarSet::Qz)) * &z) + &q
}

impl MarkovClass {
    fn lowering(&self, x_coeff: &RationalFunction, y_coeff: &RationalFunction) -> Result<Self> {
        let d = self.homogeneous_degree().ok_or(Error::NonHomogeneous)?;
        if d == 0 {
            return Err(Error::DegreeZero);
        }
        let mut out = MarkovClass::zero();
        for ((a, b), c) in self.terms() {
            if a > 0 {
                out.add_term(a - 1, b, c.scale_int(a as i64) * x_coeff);
            }
            if b > 0 {
                out.add_term(a, b - 1, c.scale_int(b as i64) * y_coeff);
            }
        }
        Ok(out)
    }

    /// Induced action of deletion:
    /// `g₀(X^k Y^{d−k}) = k X^{k−1}Y^{d−k} + z(d−k) X^k Y^{d−k−1}`.
    pub fn g0_apply(&self) -> Result<Self> {
        self.lowering(&RationalFunction::one(VarSet::Qz), &RationalFunction::z())
    }

    /// Induced action of resolution:
    /// `g₁(X^k Y^{d−k}) = kz X^{k−1}Y^{d−k} + (d−k)((q−1)z+q) X^k Y^{d−k−1}`.
    pub fn g1_apply(&self) -> Result<Self> {
        self.lowering(&RationalFunction::z(), &resolved_trace())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> SingularBraidWord {
        SingularBraidWord::parse(text, Some(n)).unwrap()
    }

    fn sum_of(items: &[(&str, usize, u64)]) -> FormalWordSum {
        let mut s = FormalWordSum::new();
        for &(t, n, m) in items {
            s.push(w(t, n), m);
        }
        s
    }

    fn one() -> RationalFunction {
        RationalFunction::one(VarSet::Qz)
    }

    #[test]
    fn deletion_examples() {
        assert_eq!(desing_delete(&w("t1 s1", 2)).unwrap(), sum_of(&[("s1", 2, 1)]));
        assert_eq!(desing_delete(&w("t1 t1", 2)).unwrap(), sum_of(&[("t1", 2, 2)]));
        assert_eq!(
            desing_delete(&w("t1 s2 t1", 3)).unwrap(),
            sum_of(&[("s2 t1", 3, 1), ("t1 s2", 3, 1)])
        );
        assert_eq!(desing_delete(&w("s1", 2)), Err(Error::DegreeZero));
    }

    #[test]
    fn resolution_examples() {
        assert_eq!(desing_resolve(&w("t1", 2)).unwrap(), sum_of(&[("s1", 2, 1)]));
        assert_eq!(
            desing_resolve(&w("t1 t2", 3)).unwrap(),
            sum_of(&[("s1 t2", 3, 1), ("t1 s2", 3, 1)])
        );
        assert_eq!(desing_resolve(&w("t1 s1", 2)).unwrap(), sum_of(&[("s1 s1", 2, 1)]));
        assert_eq!(desing_resolve(&w("", 2)), Err(Error::DegreeZero));
    }

    #[test]
    fn subset_examples() {
        assert_eq!(subset_expansion(&w("t1", 2), 0).unwrap(), sum_of(&[("", 2, 1)]));
        assert_eq!(subset_expansion(&w("t1", 2), 1).unwrap(), sum_of(&[("s1", 2, 1)]));
        assert_eq!(
            subset_expansion(&w("t1 t2", 3), 1).unwrap(),
            sum_of(&[("s1", 3, 1), ("s2", 3, 1)])
        );
        assert_eq!(
            subset_expansion(&w("t1", 2), 2),
            Err(Error::IndexOutOfRange { k: 2, degree: 1 })
        );
    }

    #[test]
    fn subset_expansion_matches_iterated_one_step_maps() {
        let word = w("t1 s2 t2 S1 t1", 3);
        let d = word.degree();
        for k in 0..=d {
            // resolve k times, then delete d - k times, in both orders
            let mut a = FormalWordSum::single(word.clone());
            for _ in 0..k {
                a = a.desing_resolve().unwrap();
            }
            for _ in 0..d - k {
                a = a.desing_delete().unwrap();
            }
            let mut b = FormalWordSum::single(word.clone());
            for _ in 0..d - k {
                b = b.desing_delete().unwrap();
            }
            for _ in 0..k {
                b = b.desing_resolve().unwrap();
            }
            let expansion = subset_expansion(&word, k).unwrap();
            assert_eq!(a, expansion);
            assert_eq!(b, expansion);
        }
    }

    #[test]
    fn functional_examples() {
        let z = RationalFunction::z();
        assert!(trace_functional(&w("t1", 2), 0).unwrap().is_one());
        assert_eq!(trace_functional(&w("t1", 2), 1).unwrap(), z);
        assert_eq!(trace_functional(&w("t1 s1", 2), 1).unwrap(), resolved_trace());
    }

    #[test]
    fn basis_words() {
        assert_eq!(basis_word(0, 0), SingularBraidWord::empty(1));
        assert_eq!(basis_word(1, 1), w("t1", 2));
        assert_eq!(basis_word(1, 0), w("t1 s1", 2));
        assert_eq!(basis_word(2, 1), w("t1 t3 s3", 4));
    }

    #[test]
    fn pairing_low_degrees() {
        assert_eq!(pairing_matrix(0).unwrap(), Matrix::from_rows(vec![vec![one()]]));
        let z = RationalFunction::z();
        let m1 = pairing_matrix(1).unwrap();
        assert_eq!(
            m1,
            Matrix::from_rows(vec![vec![one(), z.clone()], vec![z.clone(), resolved_trace()]])
        );
        let q = RationalFunction::q();
        let factor = &(&(&z * &z) - &(&(&q - &one()) * &z)) - &q;
        assert_eq!(*pairing(1).unwrap().determinant(), -factor);
        assert!(!pairing(2).unwrap().determinant().is_zero());
        assert!(matches!(pairing(9), Err(Error::DegreeCapExceeded { .. })));
    }

    #[test]
    fn class_examples() {
        assert_eq!(markov_class(&w("t1", 2)).unwrap(), MarkovClass::x());
        assert_eq!(markov_class(&w("t1 s1", 2)).unwrap(), MarkovClass::y());
        assert_eq!(markov_class(&w("t1", 3)).unwrap(), MarkovClass::x());
        let q = RationalFunction::q();
        let z = RationalFunction::z();
        let qm1 = &q - &one();
        let expect = &(&(&(&qm1 * &qm1) + &q) * &z) + &(&q * &qm1);
        assert_eq!(markov_class(&w("s1 s1 s1", 2)).unwrap(), MarkovClass::constant(expect));
        assert_eq!(
            markov_class(&w("t1 t3 s3", 4)).unwrap(),
            MarkovClass::x().mul(&MarkovClass::y())
        );
    }

    #[test]
    fn g_operator_examples() {
        let z = RationalFunction::z();
        let xy = MarkovClass::x().mul(&MarkovClass::y());
        assert_eq!(xy.g0_apply().unwrap(), MarkovClass::y().add(&MarkovClass::x().scale(&z)));
        assert_eq!(MarkovClass::x().g1_apply().unwrap(), MarkovClass::constant(z.clone()));
        assert_eq!(
            MarkovClass::y().pow(2).g0_apply().unwrap(),
            MarkovClass::y().scale(&z.scale_int(2))
        );
        assert_eq!(MarkovClass::one().g0_apply(), Err(Error::DegreeZero));
        assert_eq!(
            MarkovClass::x().add(&MarkovClass::one()).g0_apply(),
            Err(Error::NonHomogeneous)
        );
    }

    #[test]
    fn caps() {
        let big = SingularBraidWord::empty(13);
        assert!(matches!(markov_class(&big), Err(Error::StrandCapExceeded { .. })));
        let limits = Limits::new(1, 12).unwrap();
        assert!(matches!(
            markov_class_with(&w("t1 t1", 2), &limits),
            Err(Error::DegreeCapExceeded { degree: 2, max: 1 })
        ));
        assert!(Limits::new(9, 4).is_err());
    }
}
