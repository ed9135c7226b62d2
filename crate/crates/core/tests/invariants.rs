use proptest::prelude::*;

use doubloid::calculus::{lie_differential, schouten_bracket, MultiSection};
use doubloid::doubles::{check_matched, extract_matched, matched_double, random_perturbation};
use doubloid::dvs::DoubleVectorSpace;
use doubloid::foundation::linalg;
use doubloid::io;
use doubloid::sampling::Sampler;
use doubloid::{fixtures, int, CheckConfig, Polynomial};

fn cfg(seed: u64) -> CheckConfig {
    CheckConfig { seed, samples: 3, max_degree: 2 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn polynomial_ring_laws(seed in 0u64..10_000) {
        let mut s = Sampler::new(seed, 2);
        let (f, g, h) = (s.polynomial(2), s.polynomial(2), s.polynomial(2));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&(&f - &f), &Polynomial::zero(2));
        // product rule for the partial derivative
        let lhs = (&f * &g).partial(0).unwrap();
        let rhs = &(&f.partial(0).unwrap() * &g) + &(&f * &g.partial(0).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn double_then_extract_is_identity(idx in 0usize..7, seed in 0u64..1_000, perturb in any::<bool>()) {
        let (_, mp) = fixtures::matched_fixtures().swap_remove(idx);
        let mp = if perturb { mp.perturbed(&random_perturbation(&mp, seed)).unwrap() } else { mp };
        let back = extract_matched(&matched_double(&mp), mp.a().rank()).unwrap();
        prop_assert_eq!(matched_double(&back), matched_double(&mp));
    }

    #[test]
    fn matched_verdict_is_swap_invariant(idx in 0usize..7, seed in 0u64..1_000) {
        let (_, mp) = fixtures::matched_fixtures().swap_remove(idx);
        let mp = mp.perturbed(&random_perturbation(&mp, seed)).unwrap();
        prop_assert_eq!(check_matched(&mp, &cfg(seed)).passed(), check_matched(&mp.swap(), &cfg(seed)).passed());
    }

    #[test]
    fn json_round_trip_of_perturbed_pairs(idx in 0usize..7, seed in 0u64..1_000) {
        let (_, mp) = fixtures::matched_fixtures().swap_remove(idx);
        let mp = mp.perturbed(&random_perturbation(&mp, seed)).unwrap();
        prop_assert_eq!(io::matched_from_json(&io::matched_to_json(&mp)).unwrap(), mp);
    }

    #[test]
    fn differential_is_a_graded_derivation(seed in 0u64..10_000, p in 0usize..3, q in 0usize..2) {
        let a = fixtures::action_aff1_on_line();
        let mut s = Sampler::new(seed, 1);
        let (x, y) = (MultiSection::random(2, 1, p, &mut s), MultiSection::random(2, 1, q, &mut s));
        let lhs = lie_differential(&a, &x.wedge(&y)).unwrap();
        let sign = if p % 2 == 0 { int(1) } else { int(-1) };
        let rhs = lie_differential(&a, &x).unwrap().wedge(&y).add(&x.wedge(&lie_differential(&a, &y).unwrap()).scale(&sign));
        prop_assert!(lhs.sub(&rhs).is_zero());
    }

    #[test]
    fn schouten_of_functions_vanishes(seed in 0u64..10_000) {
        let a = fixtures::action_aff1_on_line();
        let mut s = Sampler::new(seed, 2);
        let (f, g) = (MultiSection::function(2, s.polynomial(1)), MultiSection::function(2, s.polynomial(1)));
        prop_assert!(schouten_bracket(&a, &f, &g).unwrap().is_zero());
    }

    #[test]
    fn dvs_gram_is_invertible(h in 0usize..5, v in 0usize..5, k in 0usize..4, seed in 0u64..1_000) {
        let d = DoubleVectorSpace::new(h, v, k);
        let mut s = Sampler::new(seed, 0);
        let g = d.gram(&s.rationals(k));
        prop_assert!(linalg::inverse(&g).is_some());
    }
}
