use num_rational::BigRational;
use proptest::prelude::*;
use singular_skein::coeff::MultivariatePolynomial;
use singular_skein::{RationalFunction, VarSet};

fn poly(vars: VarSet) -> impl Strategy<Value = MultivariatePolynomial> {
    prop::collection::vec((0u32..4, 0u32..3, -6i64..=6), 0..5)
        .prop_map(move |terms| MultivariatePolynomial::from_terms(vars, terms))
}

fn nonzero_poly(vars: VarSet) -> impl Strategy<Value = MultivariatePolynomial> {
    poly(vars).prop_filter("nonzero", |p| !p.is_zero())
}

fn rf(vars: VarSet) -> impl Strategy<Value = RationalFunction> {
    (poly(vars), nonzero_poly(vars)).prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn nonzero_rf(vars: VarSet) -> impl Strategy<Value = RationalFunction> {
    rf(vars).prop_filter("nonzero", |r| !r.is_zero())
}

fn point() -> impl Strategy<Value = (BigRational, BigRational)> {
    ((-7i64..=7, 1i64..=4), (-7i64..=7, 1i64..=4)).prop_map(|((a, b), (c, d))| {
        (
            BigRational::new(a.into(), b.into()),
            BigRational::new(c.into(), d.into()),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in rf(VarSet::Qz), b in rf(VarSet::Qz), c in rf(VarSet::Qz)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a / &a).is_one());
            prop_assert_eq!(&(&a * &b) / &a, b.clone());
        }
    }

    #[test]
    fn embedding_is_a_ring_map(a in rf(VarSet::Qz), b in rf(VarSet::Qz)) {
        let e = |x: &RationalFunction| x.embed_qz_to_su().unwrap();
        prop_assert_eq!(e(&(&a + &b)), &e(&a) + &e(&b));
        prop_assert_eq!(e(&(&a * &b)), &e(&a) * &e(&b));
        if !b.is_zero() {
            prop_assert_eq!(e(&(&a / &b)), &e(&a) / &e(&b));
        }
    }

    #[test]
    fn evaluation_commutes_with_arithmetic(a in rf(VarSet::Qz), b in rf(VarSet::Qz), p in point()) {
        let at = (&p.0, &p.1);
        if let (Ok(va), Ok(vb)) = (a.eval(at), b.eval(at)) {
            if let Ok(vs) = (&a + &b).eval(at) {
                prop_assert_eq!(vs, &va + &vb);
            }
            if let Ok(vm) = (&a * &b).eval(at) {
                prop_assert_eq!(vm, &va * &vb);
            }
        }
    }

    #[test]
    fn canonical_form_is_stable(n in poly(VarSet::Su), d in nonzero_poly(VarSet::Su), k in nonzero_poly(VarSet::Su)) {
        let r = RationalFunction::new(n.clone(), d.clone()).unwrap();
        // the same fraction written with a common factor reduces identically
        let scaled = RationalFunction::new(n.mul(&k), d.mul(&k)).unwrap();
        prop_assert_eq!(&r, &scaled);
        let again = RationalFunction::new(r.numer().clone(), r.denom().clone()).unwrap();
        prop_assert_eq!(&again, &r);
        prop_assert!(r.denom().leading().unwrap().1 > &BigRational::from_integer(0.into()));
    }

    #[test]
    fn display_round_trips(a in rf(VarSet::Qz), b in rf(VarSet::Su)) {
        let ra = RationalFunction::parse(&a.to_string(), VarSet::Qz).unwrap();
        prop_assert_eq!(ra.to_string(), a.to_string());
        prop_assert_eq!(ra, a);
        let rb = RationalFunction::parse(&b.to_string(), VarSet::Su).unwrap();
        prop_assert_eq!(rb, b);
    }

    #[test]
    fn integer_powers(a in nonzero_rf(VarSet::Qz), e in -3i32..=3) {
        let p = a.pow(e).unwrap();
        prop_assert!((&p * &a.pow(-e).unwrap()).is_one());
    }
}

#[test]
fn mixing_fields_is_an_error() {
    let q = RationalFunction::q();
    let s = RationalFunction::s();
    assert!(q.checked_add(&s).is_err());
    assert!(s.embed_qz_to_su().is_err());
}
