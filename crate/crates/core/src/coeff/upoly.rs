//! Dense univariate polynomials over the rationals.
//!
//! Used as the coefficient ring when a bivariate polynomial is viewed as a
//! polynomial in its first variable over `Q[second]`.

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Little-endian coefficient vector with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub(crate) struct UPoly(pub(crate) Vec<BigRational>);

impl UPoly {
    pub(crate) fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub(crate) fn constant(c: BigRational) -> Self {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    pub(crate) fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = UPoly(coeffs);
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub(crate) fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub(crate) fn lc(&self) -> Option<&BigRational> {
        self.0.last()
    }

    pub(crate) fn add(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = other.0.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UPoly::from_coeffs(out)
    }

    pub(crate) fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub(crate) fn sub(&self, other: &UPoly) -> UPoly {
        self.add(&other.neg())
    }

    pub(crate) fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UPoly::from_coeffs(out)
    }

    pub(crate) fn scale(&self, c: &BigRational) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub(crate) fn divrem(&self, divisor: &UPoly) -> (UPoly, UPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.lc().unwrap();
        let mut rem = self.0.clone();
        let mut quot = vec![BigRational::zero(); self.0.len().saturating_sub(dd)];
        while rem.len() > dd {
            let top = rem.len() - 1;
            let c = &rem[top] / lc;
            let shift = top - dd;
            for (j, b) in divisor.0.iter().enumerate() {
                rem[shift + j] -= &c * b;
            }
            quot[shift] = c;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (UPoly::from_coeffs(quot), UPoly::from_coeffs(rem))
    }

    pub(crate) fn monic(&self) -> UPoly {
        match self.lc() {
            None => UPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub(crate) fn gcd(&self, other: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            // rescaling keeps the remainder sequence from swelling
            b = UPoly(integer_primitive(&r.0));
        }
        a.monic()
    }

    pub(crate) fn eval(&self, x: &BigRational) -> BigRational {
        self.0
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub(crate) fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }
}

/// The scalar multiple of `coeffs` with integer entries of content 1 and a
/// positive leading entry. Zero stays zero.
pub(crate) fn integer_primitive(coeffs: &[BigRational]) -> Vec<BigRational> {
    scale_integer_primitive(coeffs.iter()).map_or_else(
        || coeffs.to_vec(),
        |f| coeffs.iter().map(|c| c * &f).collect(),
    )
}

/// Factor that makes a family of rationals integral with content 1 and the
/// last nonzero entry positive, or `None` if all are zero.
pub(crate) fn scale_integer_primitive<'a>(
    coeffs: impl Iterator<Item = &'a BigRational> + Clone,
) -> Option<BigRational> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Signed;
    let mut l = BigInt::one();
    let mut last = None;
    for c in coeffs.clone() {
        if !c.is_zero() {
            l = l.lcm(c.denom());
            last = Some(c);
        }
    }
    let last = last?;
    let mut g = BigInt::zero();
    for c in coeffs {
        if !c.is_zero() {
            g = g.gcd(&(c.numer() * (&l / c.denom())));
        }
    }
    let f = BigRational::new(l, g);
    Some(if last.is_negative() { -f } else { f })
}
