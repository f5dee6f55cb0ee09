use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::upoly::{self, UPoly};
use super::VarSet;

/// Exponent pair `(first, second)` ordered graded-lexicographically with the
/// first variable ranking above the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub u32, pub u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0, 0);

    pub fn total_degree(self) -> u32 {
        self.0 + self.1
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.0 <= other.0 && self.1 <= other.1
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in two variables with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultivariatePolynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultivariatePolynomial {
    pub fn zero(vars: VarSet) -> Self {
        MultivariatePolynomial {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: VarSet, c: BigRational) -> Self {
        Self::monomial(vars, Monomial::ONE, c)
    }

    pub fn from_int(vars: VarSet, c: i64) -> Self {
        Self::constant(vars, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn monomial(vars: VarSet, m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultivariatePolynomial { vars, terms }
    }

    /// The coordinate function for variable `index` (0 or 1).
    pub fn var(vars: VarSet, index: usize) -> Self {
        let m = if index == 0 {
            Monomial(1, 0)
        } else {
            Monomial(0, 1)
        };
        Self::monomial(vars, m, BigRational::one())
    }

    /// Builds from `(first_exp, second_exp, integer coefficient)` triples.
    pub fn from_terms<I>(vars: VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, i64)>,
    {
        let mut p = Self::zero(vars);
        for (a, b, c) in terms {
            p.add_term(Monomial(a, b), BigRational::from_integer(BigInt::from(c)));
        }
        p
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| *m == Monomial::ONE)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Option<&BigRational> {
        self.terms.get(&m)
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| if index == 0 { m.0 } else { m.1 })
            .max()
            .unwrap_or(0)
    }

    pub(crate) fn min_exponents(&self) -> Monomial {
        let a = self.terms.keys().map(|m| m.0).min().unwrap_or(0);
        let b = self.terms.keys().map(|m| m.1).min().unwrap_or(0);
        Monomial(a, b)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(
            self.vars, other.vars,
            "polynomials over different variable sets"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same(other);
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        big
    }

    pub fn neg(&self) -> Self {
        MultivariatePolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same(other);
        let mut out = Self::zero(self.vars);
        if self.is_zero() || other.is_zero() {
            return out;
        }
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(Monomial(ma.0 + mb.0, ma.1 + mb.1), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        MultivariatePolynomial {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiply by `x^a y^b`.
    pub fn shift(&self, by: Monomial) -> Self {
        MultivariatePolynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial(m.0 + by.0, m.1 + by.1), c.clone()))
                .collect(),
        }
    }

    /// Divide every term by `x^a y^b`; the caller guarantees divisibility.
    pub(crate) fn unshift(&self, by: Monomial) -> Self {
        MultivariatePolynomial {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial(m.0 - by.0, m.1 - by.1), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    pub fn evaluate(&self, point: (&BigRational, &BigRational)) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            acc += c * num_traits::pow(point.0.clone(), m.0 as usize)
                * num_traits::pow(point.1.clone(), m.1 as usize);
        }
        acc
    }

    /// View as a polynomial in the first variable over `Q[second]`.
    pub(crate) fn to_first_major(&self) -> Vec<UPoly> {
        let deg = self.degree_in(0) as usize;
        let mut rows: Vec<Vec<BigRational>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let row = &mut rows[m.0 as usize];
            let j = m.1 as usize;
            if row.len() <= j {
                row.resize(j + 1, BigRational::zero());
            }
            row[j] = c.clone();
        }
        if self.is_zero() {
            return Vec::new();
        }
        rows.into_iter().map(UPoly::from_coeffs).collect()
    }

    pub(crate) fn from_first_major(vars: VarSet, rows: &[UPoly]) -> Self {
        let mut p = Self::zero(vars);
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.0.iter().enumerate() {
                if !c.is_zero() {
                    p.terms.insert(Monomial(i as u32, j as u32), c.clone());
                }
            }
        }
        p
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        self.assert_same(divisor);
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(self.clone());
        }
        if divisor.is_monomial() {
            let (dm, dc) = divisor.leading().unwrap();
            if !self.terms.keys().all(|m| dm.divides(*m)) {
                return None;
            }
            return Some(self.unshift(*dm).scale(&dc.recip()));
        }
        let dv = divisor.to_first_major();
        let dlead = dv.last().unwrap();
        let ddeg = dv.len() - 1;
        let mut rem = self.to_first_major();
        let mut quot = vec![UPoly::zero(); rem.len().saturating_sub(ddeg)];
        while rem.len() > ddeg {
            let top = rem.len() - 1;
            let (c, r) = rem[top].divrem(dlead);
            if !r.is_zero() {
                return None;
            }
            let shift = top - ddeg;
            for (j, d) in dv.iter().enumerate() {
                rem[shift + j] = rem[shift + j].sub(&c.mul(d));
            }
            quot[shift] = c;
            while rem.last().is_some_and(|r| r.is_zero()) {
                rem.pop();
            }
        }
        if rem.is_empty() {
            Some(Self::from_first_major(self.vars, &quot))
        } else {
            None
        }
    }

    /// Greatest common divisor, defined up to a rational scalar.
    ///
    /// Constant and monomial operands take a shortcut; otherwise the
    /// primitive polynomial remainder sequence in the first variable is run
    /// over `Q[second]`.
    pub fn gcd(&self, other: &Self) -> Self {
        self.assert_same(other);
        let vars = self.vars;
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.is_constant() || other.is_constant() {
            return Self::one(vars);
        }
        if self.is_monomial() || other.is_monomial() {
            let a = self.min_exponents();
            let b = other.min_exponents();
            return Self::monomial(vars, Monomial(a.0.min(b.0), a.1.min(b.1)), BigRational::one());
        }
        // Pull out common monomial factors first; it keeps the PRS small.
        let ma = self.min_exponents();
        let mb = other.min_exponents();
        let mono = Monomial(ma.0.min(mb.0), ma.1.min(mb.1));
        let a = self.unshift(ma).to_first_major();
        let b = other.unshift(mb).to_first_major();
        if gcd_free_of_first(&a, &b) {
            let c = content(&a).gcd(&content(&b));
            return Self::from_first_major(vars, &[c]).shift(mono);
        }
        let g = first_major_gcd(&a, &b);
        Self::from_first_major(vars, &g).shift(mono)
    }

    /// `(lcm of coefficient denominators, gcd of scaled numerators)`.
    pub(crate) fn integer_content(&self) -> (BigInt, BigInt) {
        use num_integer::Integer;
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            let v = c.numer() * (&l / c.denom());
            g = g.gcd(&v);
        }
        (l, g)
    }

    pub(crate) fn fmt_with(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts: Vec<String> = Vec::new();
            if *m == Monomial::ONE || !abs.is_one() {
                parts.push(abs.to_string());
            }
            for (e, name) in [(m.0, names[0]), (m.1, names[1])] {
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

impl fmt::Display for MultivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f)
    }
}

fn content(p: &[UPoly]) -> UPoly {
    let mut g = UPoly::zero();
    for c in p {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive part over `Q[second]`, scaled to integer coefficients with
/// content 1.
fn primitive(p: &[UPoly]) -> Vec<UPoly> {
    let c = content(p);
    let rows: Vec<UPoly> = if c.is_one() || c.is_zero() {
        p.to_vec()
    } else {
        p.iter().map(|a| a.divrem(&c).0).collect()
    };
    match upoly::scale_integer_primitive(rows.iter().flat_map(|r| r.0.iter())) {
        Some(f) => rows.iter().map(|r| r.scale(&f)).collect(),
        None => rows,
    }
}

/// Cheap certificate that `gcd(a, b)` has degree 0 in the first variable.
///
/// If the gcd `G` had positive degree, then at any point where `lc(a)` does
/// not vanish, `G` would specialize to a common factor of the same degree.
/// So one point with a constant univariate gcd settles it. A nonconstant
/// answer at two points is inconclusive and leaves the work to the PRS.
fn gcd_free_of_first(a: &[UPoly], b: &[UPoly]) -> bool {
    let lc = a.last().expect("nonzero polynomial");
    let mut inconclusive = 0;
    for x0 in [3i64, 5, 7, 11, 13, 17, 19, 23] {
        let x0 = BigRational::from_integer(x0.into());
        if lc.eval(&x0).is_zero() {
            continue;
        }
        let at = |p: &[UPoly]| UPoly::from_coeffs(p.iter().map(|c| c.eval(&x0)).collect());
        if at(a).gcd(&at(b)).degree() == Some(0) {
            return true;
        }
        inconclusive += 1;
        if inconclusive == 2 {
            return false;
        }
    }
    false
}

/// `lc(g)^k * f mod g` in the first variable.
fn pseudo_rem(f: &[UPoly], g: &[UPoly]) -> Vec<UPoly> {
    let dg = g.len() - 1;
    let lc = g.last().unwrap();
    let mut r = f.to_vec();
    while r.len() > dg {
        let top = r.len() - 1;
        let lead = r[top].clone();
        let shift = top - dg;
        for c in r.iter_mut() {
            *c = c.mul(lc);
        }
        for (j, b) in g.iter().enumerate() {
            r[shift + j] = r[shift + j].sub(&lead.mul(b));
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn first_major_gcd(a: &[UPoly], b: &[UPoly]) -> Vec<UPoly> {
    let c = content(a).gcd(&content(b));
    let mut f = primitive(a);
    let mut g = primitive(b);
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    while g.len() > 1 {
        let r = pseudo_rem(&f, &g);
        if r.is_empty() {
            break;
        }
        f = g;
        g = primitive(&r);
    }
    // A remainder of x-degree 0 means the primitive parts are coprime.
    let core = if g.len() == 1 {
        vec![UPoly::constant(BigRational::one())]
    } else {
        primitive(&g)
    };
    core.iter().map(|row| row.mul(&c)).collect()
}
