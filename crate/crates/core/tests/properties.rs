mod common;

use arrkt::arrangement::{enumerate_chambers, enumerate_chambers_with, is_simple, ExhaustiveSigns};
use arrkt::delres::{build_b_sequence, certify_exactness_p, normalize_for_restriction};
use arrkt::kring::{certify_theorem_pl, KRing};
use arrkt::ormatroid::MatroidData;
use arrkt::subring::b_lattice;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn shape() -> impl Strategy<Value = (u64, usize, usize, bool)> {
    (any::<u64>(), 1usize..=3, 1usize..=6, any::<bool>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn chamber_strategies_agree((seed, d, n, central) in shape()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_rows(&mut rng, d, n, central);
        let incremental: Vec<_> = enumerate_chambers(&a).into_iter().map(|c| c.sign).collect();
        let exhaustive: Vec<_> = enumerate_chambers_with(&a, &ExhaustiveSigns)
            .into_iter()
            .map(|c| c.sign)
            .collect();
        prop_assert_eq!(incremental, exhaustive);
    }

    #[test]
    fn repeated_hyperplanes_are_harmless((seed, d, n, central) in shape()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut a = common::random_rows(&mut rng, d, n, central);
        // duplicate the first hyperplane, with flipped coorientation half the time
        let mut forms = a.forms().to_vec();
        let copy = if seed % 2 == 0 { forms[0].clone() } else { forms[0].negated() };
        forms.push(copy);
        a = arrkt::arrangement::Arrangement::new(d, forms).unwrap();
        prop_assert!(!a.repeated_hyperplanes().is_empty());
        let report = certify_theorem_pl(&a).unwrap();
        prop_assert!(report.passed(), "{}", report);
        let nbc = MatroidData::compute(&a).unwrap().nbc_sets.len();
        prop_assert_eq!(nbc, enumerate_chambers(&a).len());
    }

    #[test]
    fn rank_additivity((seed, d, n, central) in shape()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_arrangement(&mut rng, d, n, central);
        let report = certify_exactness_p(&a).unwrap();
        prop_assert!(report.passed(), "{}", report);
    }

    #[test]
    fn simple_lattices_have_rank_r_plus_one((seed, d, n) in (any::<u64>(), 1usize..=3, 1usize..=5)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_arrangement(&mut rng, d, n, false);
        prop_assume!(is_simple(&a));
        let r = enumerate_chambers(&a).len();
        let b = b_lattice(&a).unwrap();
        let ring = KRing::new(&a).unwrap();
        prop_assert_eq!(b.rank(), r + 1);
        prop_assert_eq!(ring.image_lattice(), &b.lattice);
        let normalized = normalize_for_restriction(&a).unwrap();
        let maps = build_b_sequence(&normalized).unwrap();
        prop_assert_eq!(maps.deleted.rank() + maps.restricted.rank(), maps.full.rank() + 1);
    }

    #[test]
    fn reorienting_everything_keeps_chamber_count((seed, d, n, central) in shape()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = common::random_rows(&mut rng, d, n, central);
        let mut b = a.clone();
        for i in 0..a.len() {
            b = b.reorient(i).unwrap();
        }
        prop_assert_eq!(enumerate_chambers(&a).len(), enumerate_chambers(&b).len());
    }
}
