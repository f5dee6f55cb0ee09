use proptest::prelude::*;
use singular_skein::markov::{class_from_traces, pairing, trace_vector};
use singular_skein::{
    markov_class, pairing_matrix, shuffle_braid, Generator, HeckeElement, MoveConfig,
    RationalFunction, Sign, SingularBraidWord, VarSet,
};

fn singular(max_strands: usize, max_len: usize, max_degree: usize) -> impl Strategy<Value = SingularBraidWord> {
    (2..=max_strands, 1..=max_len, 0..=max_degree, any::<u64>()).prop_map(|(n, len, d, seed)| {
        SingularBraidWord::random(n, len, d.min(len), seed).unwrap()
    })
}

#[test]
fn closed_form_inverse_matches_elimination() {
    for d in 0..=3 {
        let p = pairing(d).unwrap();
        assert_eq!(p.degree(), d);
        let direct = pairing_matrix(d).unwrap().inverse().unwrap();
        assert_eq!(p.inverse(), direct, "d = {d}");
        assert_eq!(*p.determinant(), pairing_matrix(d).unwrap().determinant());
    }
}

#[test]
fn shuffle_conjugates_stacks() {
    let words = [("s1 s1 s1", 2), ("S1 s2 s1", 3), ("", 1), ("s1 S1 s1", 2)];
    for (ta, na) in words {
        for (tb, nb) in words {
            let a = SingularBraidWord::parse(ta, Some(na)).unwrap();
            let b = SingularBraidWord::parse(tb, Some(nb)).unwrap();
            let s = shuffle_braid(na, nb);
            let lhs = s
                .concat(&b.stack(&a))
                .unwrap()
                .concat(&s.inverse().unwrap())
                .unwrap();
            assert_eq!(
                HeckeElement::evaluate_word(&lhs).unwrap(),
                HeckeElement::evaluate_word(&a.stack(&b)).unwrap(),
                "[{a}] and [{b}]"
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn traces_invariant_under_non_stabilizing_moves(w in singular(4, 6, 2), seed in any::<u64>()) {
        let config = MoveConfig { max_strands: 5, max_length: 10 };
        let mut prev = trace_vector(&w).unwrap();
        for (m, v) in w.random_move_sequence(6, seed, &config) {
            let tv = trace_vector(&v).unwrap();
            if !m.is_stabilization() {
                prop_assert_eq!(&tv, &prev, "after {}", m);
            }
            prev = tv;
        }
    }

    #[test]
    fn stabilization_scales_traces(w in singular(3, 5, 2), positive in any::<bool>()) {
        let n = w.strands();
        let (sign, factor) = if positive {
            (Sign::Pos, RationalFunction::z())
        } else {
            let q_inv = RationalFunction::q().inv().unwrap();
            let one = RationalFunction::one(VarSet::Qz);
            (Sign::Neg, &(&q_inv * &RationalFunction::z()) + &(&q_inv - &one))
        };
        let up = w.embed().push(Generator::sigma_signed(n, sign)).unwrap();
        prop_assert_eq!(trace_vector(&up).unwrap(), trace_vector(&w).unwrap().scale(&factor));
    }

    #[test]
    fn class_is_homogeneous_of_word_degree(w in singular(4, 6, 3)) {
        let c = markov_class(&w).unwrap();
        prop_assert!(!c.is_zero());
        prop_assert_eq!(c.homogeneous_degree(), Some(w.degree() as u32));
        prop_assert_eq!(class_from_traces(&trace_vector(&w).unwrap()).unwrap(), c);
    }
}
