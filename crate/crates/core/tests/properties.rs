mod common;

use std::collections::BTreeMap;
use std::sync::Arc;

use meadow::finite_meadows::{build_galois_field, build_mdk, build_prime_field};
use meadow::logic::{
    check_conditional, encode_conditional, u_merge, ConditionalEquation, Equation,
};
use meadow::rationals::{eval_rational, RationalSampler};
use meadow::structures::{
    check_equation, eval, find_homomorphisms, product, Assignment, Elem, FiniteStructure, Verdict,
};
use meadow::terms::{parse_term, Term};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn term_strategy() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::One),
        prop_oneof![Just("x"), Just("y"), Just("z")].prop_map(Term::var),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::neg),
            inner.clone().prop_map(Term::inv),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::add(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::mul(a, b)),
        ]
    })
}

fn small_models() -> Vec<Arc<FiniteStructure>> {
    vec![
        Arc::new(build_mdk(6).unwrap()),
        Arc::new(build_prime_field(5).unwrap()),
        Arc::new(build_galois_field(2, 2).unwrap()),
        Arc::new(product(&[build_prime_field(2).unwrap(), build_prime_field(3).unwrap()]).unwrap()),
    ]
}

/// The least failing assignment by plain recursion over all assignments.
fn brute_force(s: &FiniteStructure, eq: &Equation) -> Verdict<Assignment> {
    let vars: Vec<String> = eq.vars().into_iter().collect();
    let n = s.size() as u64;
    let total = n.pow(vars.len() as u32);
    for code in 0..total {
        let mut a = Assignment::new();
        let mut rest = code;
        for v in vars.iter().rev() {
            a = a.with(v, (rest % n) as Elem);
            rest /= n;
        }
        if eval(&eq.lhs, s, &a).unwrap() != eval(&eq.rhs, s, &a).unwrap() {
            return Verdict::Fails(a);
        }
    }
    Verdict::Holds
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn compiled_search_matches_recursion(l in term_strategy(), r in term_strategy()) {
        let eq = Equation::new(l, r);
        for s in small_models() {
            prop_assert_eq!(check_equation(&s, &eq).unwrap(), brute_force(&s, &eq));
        }
    }

    #[test]
    fn homomorphisms_commute_with_eval(t in term_strategy(), xs in proptest::collection::vec(0u32..30, 3)) {
        let src = Arc::new(build_mdk(30).unwrap());
        for tgt in [build_prime_field(2).unwrap(), build_prime_field(5).unwrap(), build_mdk(6).unwrap()] {
            let tgt = Arc::new(tgt);
            for h in find_homomorphisms(&src, &tgt, true).unwrap() {
                let a = Assignment::new().with("x", xs[0]).with("y", xs[1]).with("z", xs[2]);
                let ha = Assignment(a.0.iter().map(|(k, &v)| (k.clone(), h.apply(v))).collect());
                prop_assert_eq!(h.apply(eval(&t, &src, &a).unwrap()), eval(&t, &tgt, &ha).unwrap());
            }
        }
    }

    #[test]
    fn print_parse_round_trip(t in term_strategy()) {
        prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn rational_eval_obeys_ring_laws(t in term_strategy(), seed in any::<u64>()) {
        let mut sampler = RationalSampler::new(seed);
        let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let a = sampler.assignment(&vars);
        let v = eval_rational(&t, &a).unwrap();
        let twice = eval_rational(&Term::add(t.clone(), t.clone()), &a).unwrap();
        prop_assert_eq!(twice.value, v.value.q_add(&v.value));
        let sq = eval_rational(&Term::mul(t.clone(), Term::inv(Term::inv(t.clone()))), &a).unwrap();
        prop_assert_eq!(sq.value, v.value.q_mul(&v.value));
        let unsafe_inner = v.unsafe_division_used;
        prop_assert!(!unsafe_inner || eval_rational(&Term::neg(t), &a).unwrap().unsafe_division_used);
    }
}

#[test]
fn encoding_sound_in_fields() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let fields = [
        build_prime_field(2).unwrap(),
        build_prime_field(3).unwrap(),
        build_galois_field(2, 2).unwrap(),
    ];
    for _ in 0..150 {
        let ce = common::random_conditional(&mut rng, 3);
        let enc = encode_conditional(&ce).unwrap();
        for f in &fields {
            assert_eq!(
                check_conditional(f, &ce).unwrap().holds(),
                check_equation(f, &enc).unwrap().holds(),
                "{ce} in {}",
                f.name()
            );
        }
    }
}

#[test]
fn encoding_valid_implies_conditional_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let models = small_models();
    for _ in 0..150 {
        let ce = common::random_conditional(&mut rng, 3);
        let enc = encode_conditional(&ce).unwrap();
        for m in &models {
            if check_equation(m, &enc).unwrap().holds() {
                assert!(
                    check_conditional(m, &ce).unwrap().holds(),
                    "{ce} in {}",
                    m.name()
                );
            }
        }
    }
}

// Outside fields the converse can fail: the premise never holds in Z_2 x Z_3,
// but it holds in the Z_2 component, where the conclusion does not.
#[test]
fn encoding_is_field_sensitive() {
    let p = product(&[build_prime_field(2).unwrap(), build_prime_field(3).unwrap()]).unwrap();
    let ce = ConditionalEquation::parse("1 + 1 = 0 -> 0 = 1").unwrap();
    assert!(check_conditional(&p, &ce).unwrap().holds());
    assert!(!check_equation(&p, &encode_conditional(&ce).unwrap())
        .unwrap()
        .holds());
    assert!(!check_conditional(&build_prime_field(2).unwrap(), &ce)
        .unwrap()
        .holds());
}

#[test]
fn u_merge_characterizes_joint_zero() {
    let u = u_merge(Term::var("x"), Term::var("y"));
    for s in common::battery() {
        for x in s.elements() {
            for y in s.elements() {
                let a = Assignment::new().with("x", x).with("y", y);
                let zero = eval(&u, &s, &a).unwrap() == s.zero();
                assert_eq!(zero, x == s.zero() && y == s.zero(), "{} at {a}", s.name());
            }
        }
    }
}

#[test]
fn local_units_in_battery() {
    for s in common::battery() {
        for x in s.elements() {
            let ux = s.unit_of(x).unwrap();
            assert_eq!(ux == s.zero(), x == s.zero());
            assert_eq!(ux, s.unit_of(s.inv(x).unwrap()).unwrap());
            for y in s.elements() {
                assert_eq!(
                    s.unit_of(s.mul(x, y)).unwrap(),
                    s.mul(ux, s.unit_of(y).unwrap())
                );
            }
        }
    }
}

#[test]
fn prime_cardinality_meadows_are_prime_fields() {
    for s in common::battery() {
        let n = s.size() as u64;
        if meadow::arith::is_prime(n) {
            let z = Arc::new(build_prime_field(n).unwrap());
            let isos = find_homomorphisms(&s, &z, true).unwrap();
            assert!(isos.iter().any(|h| h.is_isomorphism()), "{}", s.name());
        }
    }
}

#[test]
fn eval_x_plus_zero() {
    let t = parse_term("x+0").unwrap();
    for s in common::battery() {
        for e in s.elements() {
            let a = Assignment(BTreeMap::from([("x".to_string(), e)]));
            assert_eq!(eval(&t, &s, &a).unwrap(), e);
        }
    }
}

#[test]
fn sip_follows_from_md_on_battery() {
    use meadow::logic::AxiomSet;
    use meadow::structures::check_axiom_set;
    for s in common::battery() {
        assert!(check_axiom_set(&s, AxiomSet::Md).unwrap().all_hold());
        assert!(
            check_axiom_set(&s, AxiomSet::SIP).unwrap().all_hold(),
            "{}",
            s.name()
        );
    }
}

#[test]
fn gil_and_sep_separate_fields() {
    use meadow::logic::{gil, iel_witness, sep};
    for s in common::battery() {
        let field = s.is_zero_totalized_field();
        let g = check_conditional(&s, &gil()).unwrap().holds();
        let nontrivial = check_conditional(&s, &sep()).unwrap().holds();
        assert_eq!(g && nontrivial, field, "{}", s.name());
        assert_eq!(
            field,
            nontrivial && iel_witness(&s).is_none(),
            "{}",
            s.name()
        );
        if !field && nontrivial {
            assert!(!g, "{}", s.name());
        }
    }
}

#[test]
fn sampling_is_seeded() {
    let eq = Equation::parse("x*x^-1 = 1").unwrap();
    let a = meadow::rationals::sample_check(&eq, 100, 3).unwrap();
    assert_eq!(a, meadow::rationals::sample_check(&eq, 100, 3).unwrap());
    let w = a.witness().unwrap();
    assert!(w["x"].is_zero());
}
