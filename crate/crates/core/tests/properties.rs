//! Property tests for the field, piecewise functions, reflections and the polytope.

use halfpipe::catalog::{p_system, symmetry_generators};
use halfpipe::forms::ParamForm;
use halfpipe::isometry::reflection;
use halfpipe::numfield::{BranchFunc, FieldScalar, Poly, RatFunc, TimeParam};
use halfpipe::polytope::{build_face_lattice, enumerate_vertices, lattices_equal, EnumerateOptions};
use halfpipe::projective::Covector;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn scalar() -> impl Strategy<Value = FieldScalar> {
    (rational(), rational(), rational(), rational()).prop_map(|(a, b, c, d)| FieldScalar::new(a, b, c, d))
}

/// Nonzero rationals in the open core interval, away from 0.
fn time() -> impl Strategy<Value = TimeParam> {
    (1i64..=9, 10i64..=20, any::<bool>()).prop_map(|(n, d, neg)| TimeParam::ratio(if neg { -n } else { n }, d))
}

fn small_int() -> impl Strategy<Value = FieldScalar> {
    (-3i64..=3).prop_map(FieldScalar::from_int)
}

proptest! {
    #[test]
    fn field_is_a_commutative_ring(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
    }

    #[test]
    fn nonzero_elements_invert(a in scalar()) {
        prop_assume!(!a.is_zero());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn exact_sign_agrees_with_floats(a in scalar()) {
        let f = a.to_f64();
        prop_assume!(f.abs() > 1e-6);
        prop_assert_eq!(a.signum() as f64, f.signum());
    }

    #[test]
    fn square_roots_of_squares(a in scalar()) {
        prop_assert_eq!((&a * &a).sqrt().unwrap(), Some(a.abs()));
    }

    #[test]
    fn exact_strings_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_exact_string().parse::<FieldScalar>().unwrap(), a.clone());
        let j = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<FieldScalar>(&j).unwrap(), a);
    }

    #[test]
    fn time_expressions_round_trip(t in time()) {
        prop_assert_eq!(t.expr().parse::<TimeParam>().unwrap(), t);
    }

    #[test]
    fn branch_arithmetic_commutes_with_evaluation(p in proptest::collection::vec(-5i64..=5, 1..4), q in proptest::collection::vec(-5i64..=5, 1..4), t in time()) {
        let poly = |v: &[i64]| Poly::new(v.iter().map(|&x| FieldScalar::from_int(x)).collect());
        let f = BranchFunc::from_branches(RatFunc::from_poly(poly(&p)), RatFunc::from_poly(poly(&q)));
        let g = BranchFunc::t_abs_t().add(&BranchFunc::int(2));
        let fe = f.eval(&t).unwrap();
        let ge = g.eval(&t).unwrap();
        prop_assert_eq!(f.add(&g).eval(&t).unwrap(), &fe + &ge);
        prop_assert_eq!(f.mul(&g).eval(&t).unwrap(), &fe * &ge);
        prop_assert_eq!(f.checked_div(&g).unwrap().eval(&t).unwrap(), fe.checked_div(&ge).unwrap());
    }

    #[test]
    fn reflections_are_involutive_isometries(c in proptest::collection::vec(small_int(), 5), t in time()) {
        let h = Covector::new(c);
        prop_assume!(h.is_ok());
        let h = h.unwrap();
        let form = ParamForm::new(4, &t);
        let r = reflection(&h, &form);
        prop_assume!(r.is_ok());
        let r = r.unwrap();
        prop_assert!(r.compose(&r).matrix().is_identity());
        let j = form.matrix();
        prop_assert_eq!(r.matrix().transpose().mul(&j).mul(r.matrix()), j);
        prop_assert_eq!(r.pushforward_halfspace(&h).unwrap(), h.flip());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(4))]

    #[test]
    fn face_lattice_is_constant(t in time()) {
        let sys = p_system(&t, true, false).unwrap();
        let l = build_face_lattice(&sys, &enumerate_vertices(&sys, EnumerateOptions::default()).unwrap());
        let s0 = p_system(&TimeParam::ratio(1, 2), true, false).unwrap();
        let l0 = build_face_lattice(&s0, &enumerate_vertices(&s0, EnumerateOptions::default()).unwrap());
        prop_assert!(lattices_equal(&l, &l0));
    }

    #[test]
    fn symmetries_permute_the_half_spaces(t in time()) {
        let sys = p_system(&t, true, false).unwrap();
        for (_, g) in symmetry_generators() {
            for c in sys.covectors() {
                prop_assert!(sys.covectors().contains(&g.pushforward_halfspace(c).unwrap()));
            }
        }
    }
}
