use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::{Monomial, MultivariatePolynomial as Poly};
use super::{CoeffError, VarSet};

/// Reduced quotient of two bivariate polynomials.
///
/// Canonical form: numerator and denominator are coprime, all coefficients
/// are integers with joint content 1, and the leading coefficient of the
/// denominator is positive. Two values are equal iff they are structurally
/// equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self, CoeffError> {
        if num.vars() != den.vars() {
            return Err(CoeffError::MixedVariables(num.vars(), den.vars()));
        }
        if den.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn zero(vars: VarSet) -> Self {
        RationalFunction {
            num: Poly::zero(vars),
            den: Poly::one(vars),
        }
    }

    pub fn one(vars: VarSet) -> Self {
        Self::from_int(vars, 1)
    }

    pub fn from_int(vars: VarSet, c: i64) -> Self {
        Self::from_rational(vars, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn from_rational(vars: VarSet, c: BigRational) -> Self {
        Self::normalize(Poly::constant(vars, c), Poly::one(vars))
    }

    pub fn from_poly(p: Poly) -> Self {
        let vars = p.vars();
        Self::normalize(p, Poly::one(vars))
    }

    /// Coordinate function for variable `index`.
    pub fn var(vars: VarSet, index: usize) -> Self {
        Self::from_poly(Poly::var(vars, index))
    }

    pub fn q() -> Self {
        Self::var(VarSet::Qz, 0)
    }

    pub fn z() -> Self {
        Self::var(VarSet::Qz, 1)
    }

    pub fn s() -> Self {
        Self::var(VarSet::Su, 0)
    }

    pub fn u() -> Self {
        Self::var(VarSet::Su, 1)
    }

    /// Reads an arithmetic expression in the variables of `vars`, such as
    /// the output of `Display`.
    pub fn parse(text: &str, vars: VarSet) -> Result<Self, CoeffError> {
        super::parse::parse(text, vars)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn vars(&self) -> VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn normalize(num: Poly, den: Poly) -> Self {
        let vars = num.vars();
        if num.is_zero() {
            return Self::zero(vars);
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        Self::normalize_scalars(num, den)
    }

    /// Scale so that all coefficients are integers with joint content 1 and
    /// the denominator's leading coefficient is positive.
    fn normalize_scalars(num: Poly, den: Poly) -> Self {
        use num_integer::Integer;
        let (ln, gn) = num.integer_content();
        let (ld, gd) = den.integer_content();
        let l = ln.lcm(&ld);
        // After multiplying by l every coefficient is integral; the joint
        // content is then gcd(gn * l/ln, gd * l/ld).
        let g = (&gn * (&l / &ln)).gcd(&(&gd * (&l / &ld)));
        let mut factor = BigRational::new(l, g);
        if den.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            factor = -factor;
        }
        if factor.is_one() {
            return RationalFunction { num, den };
        }
        RationalFunction {
            num: num.scale(&factor),
            den: den.scale(&factor),
        }
    }

    fn check(&self, other: &Self) -> Result<(), CoeffError> {
        if self.vars() != other.vars() {
            Err(CoeffError::MixedVariables(self.vars(), other.vars()))
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, CoeffError> {
        self.check(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.den == other.den {
            return Ok(Self::normalize(self.num.add(&other.num), self.den.clone()));
        }
        let g = self.den.gcd(&other.den);
        let (a_cof, b_cof) = if g.is_constant() {
            (other.den.clone(), self.den.clone())
        } else {
            (
                other.den.div_exact(&g).unwrap(),
                self.den.div_exact(&g).unwrap(),
            )
        };
        let num = self.num.mul(&a_cof).add(&other.num.mul(&b_cof));
        let den = self.den.mul(&a_cof);
        Ok(Self::normalize(num, den))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, CoeffError> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, CoeffError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.vars()));
        }
        if self.is_one() {
            return Ok(other.clone());
        }
        if other.is_one() {
            return Ok(self.clone());
        }
        let (n1, d2) = cancel(&self.num, &other.den);
        let (n2, d1) = cancel(&other.num, &self.den);
        Ok(Self::normalize_scalars(n1.mul(&n2), d1.mul(&d2)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, CoeffError> {
        self.check(other)?;
        if other.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        // Exact polynomial quotients skip the gcd entirely.
        if self.is_polynomial() && other.is_polynomial() {
            if let Some(q) = self.num.div_exact(&other.num) {
                return Ok(Self::normalize_scalars(q, other.den.clone()));
            }
        }
        self.checked_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Self, CoeffError> {
        if self.is_zero() {
            return Err(CoeffError::DivisionByZero);
        }
        Ok(Self::normalize_scalars(self.den.clone(), self.num.clone()))
    }

    fn neg_ref(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, e: i32) -> Result<Self, CoeffError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(RationalFunction {
            num: base.num.pow(k),
            den: base.den.pow(k),
        }
        .renormalized())
    }

    fn renormalized(self) -> Self {
        Self::normalize_scalars(self.num, self.den)
    }

    /// Multiply by a rational scalar.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars());
        }
        Self::normalize_scalars(self.num.scale(c), self.den.clone())
    }

    pub fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(c)))
    }

    /// Multiply by `v^k` for the monomial `v`, with no gcd work beyond the
    /// monomial part of the denominator.
    pub fn mul_monomial(&self, m: Monomial) -> Self {
        if self.is_zero() || m == Monomial::ONE {
            return self.clone();
        }
        Self::normalize(self.num.shift(m), self.den.clone())
    }

    /// Exact value at `point`.
    pub fn eval(&self, point: (&BigRational, &BigRational)) -> Result<BigRational, CoeffError> {
        let d = self.den.evaluate(point);
        if d.is_zero() {
            return Err(CoeffError::Pole);
        }
        Ok(self.num.evaluate(point) / d)
    }

    /// The ring embedding `Q(q,z) -> Q(s,u)` with `q = s^2` and
    /// `z = (s^2 - 1)/(1 - s^2 u^2)`.
    pub fn embed_qz_to_su(&self) -> Result<Self, CoeffError> {
        if self.vars() != VarSet::Qz {
            return Err(CoeffError::MixedVariables(VarSet::Qz, self.vars()));
        }
        let dn = self.num.degree_in(1);
        let dd = self.den.degree_in(1);
        let zn = embed_homogenized(&self.num, dn);
        let zd = embed_homogenized(&self.den, dd);
        // P(q,z) = P_h(s,u) / (1 - s^2 u^2)^deg_z(P)
        let w = one_minus_s2u2();
        let (num, den) = if dn >= dd {
            (zn, zd.mul(&w.pow(dn - dd)))
        } else {
            (zn.mul(&w.pow(dd - dn)), zd)
        };
        // A reduced fraction stays reduced up to factors whose zero set the
        // substitution collapses to a point (s = 0, s = ±1) or sends to
        // infinity (su = ±1); peeling those off replaces a full gcd.
        let (mut num, mut den) = (num, den);
        let ma = num.min_exponents();
        let mb = den.min_exponents();
        let mono = Monomial(ma.0.min(mb.0), 0);
        num = num.unshift(mono);
        den = den.unshift(mono);
        for f in [
            Poly::from_terms(VarSet::Su, [(1, 0, 1), (0, 0, -1)]),
            Poly::from_terms(VarSet::Su, [(1, 0, 1), (0, 0, 1)]),
            Poly::from_terms(VarSet::Su, [(1, 1, 1), (0, 0, -1)]),
            Poly::from_terms(VarSet::Su, [(1, 1, 1), (0, 0, 1)]),
        ] {
            while let (Some(a), Some(b)) = (num.div_exact(&f), den.div_exact(&f)) {
                num = a;
                den = b;
            }
        }
        Ok(Self::normalize_scalars(num, den))
    }
}

fn cancel(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let g = a.gcd(b);
    if g.is_constant() {
        (a.clone(), b.clone())
    } else {
        (a.div_exact(&g).unwrap(), b.div_exact(&g).unwrap())
    }
}

fn one_minus_s2u2() -> Poly {
    Poly::from_terms(VarSet::Su, [(0, 0, 1), (2, 2, -1)])
}

/// `(1 - s^2 u^2)^deg * P(s^2, (s^2 - 1)/(1 - s^2 u^2))` as a polynomial.
fn embed_homogenized(p: &Poly, deg: u32) -> Poly {
    let w = one_minus_s2u2();
    let zn = Poly::from_terms(VarSet::Su, [(2, 0, 1), (0, 0, -1)]);
    let mut zpow = vec![Poly::one(VarSet::Su)];
    let mut wpow = vec![Poly::one(VarSet::Su)];
    for i in 1..=deg as usize {
        zpow.push(zpow[i - 1].mul(&zn));
        wpow.push(wpow[i - 1].mul(&w));
    }
    let mut out = Poly::zero(VarSet::Su);
    for (m, c) in p.terms() {
        let b = m.1 as usize;
        let t = zpow[b]
            .mul(&wpow[deg as usize - b])
            .shift(Monomial(2 * m.0, 0))
            .scale(c);
        out = out.add(&t);
    }
    out
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            self.num.fmt_with(f)
        } else {
            write!(f, "(")?;
            self.num.fmt_with(f)?;
            write!(f, ")/(")?;
            self.den.fmt_with(f)?;
            write!(f, ")")
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$checked(rhs).expect(concat!("rational function ", stringify!($method)))
            }
        }
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
binop!(Div, div, checked_div);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_ref()
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        self.neg_ref()
    }
}
