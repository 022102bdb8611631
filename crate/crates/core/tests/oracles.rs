mod common;

use proptest::prelude::*;
use twistcube::cartier::{compute_m, is_untwisted, witness_sigma_from_walk, SignVector};
use twistcube::harness::{weights_over, words_of_length};
use twistcube::rootdata::all_types_up_to;
use twistcube::twistedcube::{
    contains, contains_pd, density, lattice_points, signed_count, Rational,
};
use twistcube::walks::{
    find_hesitant_lambda_walk, find_hesitant_lambda_walk_naive, is_diagram_walk,
    is_hesitant_lambda_walk, is_minimal, minimize,
};
use twistcube::weightword::derive_twist_data;
use twistcube::{DominantWeight, LieType, RootData, TwistData, Word};

use common::*;

fn rd(s: &str) -> RootData {
    s.parse::<LieType>().unwrap().root_data()
}

fn lam(v: &[i64]) -> DominantWeight {
    DominantWeight::new(v.to_vec()).unwrap()
}

#[test]
fn generated_tables_match_literal_fixture() {
    let fixtures = fixture_tables();
    assert_eq!(fixtures.len(), 9 + 8 + 7 + 6 + 3 + 2);
    for (name, rows) in fixtures {
        let t: LieType = name.parse().unwrap();
        let got: Vec<Vec<i64>> = t.root_data().rows().map(|r| r.to_vec()).collect();
        assert_eq!(got, rows, "{name}");
    }
    let listed: Vec<String> = all_types_up_to(9).iter().map(|t| t.to_string()).collect();
    assert_eq!(listed.len(), 35);
}

#[test]
fn census_matches_brute_force_on_reference_instances() {
    let d = TwistData::from_entries(vec![3, 5], [((1, 2), 1)]).unwrap();
    let brute = brute_force_census(&d);
    assert_eq!(brute.iter().filter(|p| p.1 > 0).count(), 10);
    assert_eq!(brute.iter().filter(|p| p.1 < 0).map(|p| p.0.clone()).collect::<Vec<_>>(), vec![vec![-1, 5]]);

    let a2 = rd("A2");
    let word = Word::new(vec![1, 2, 1]);
    let d = derive_twist_data(&a2, &word, &lam(&[1, 0])).unwrap();
    let census = lattice_points(&d).unwrap();
    let pts: Vec<Vec<i64>> = census.points.iter().map(|p| p.x.clone()).collect();
    assert_eq!(pts, vec![vec![0, 0, 0], vec![0, 1, 1], vec![1, 0, 0]]);
    assert!(census.points.iter().all(|p| p.rho == 1));
}

#[test]
fn signed_counts_equal_weyl_dimensions() {
    let a2 = rd("A2");
    let word = Word::new(vec![1, 2, 1]);
    for a in 0..=3 {
        for b in 0..=3 {
            let d = derive_twist_data(&a2, &word, &lam(&[a, b])).unwrap();
            let brute: i64 = brute_force_census(&d).iter().map(|p| p.1 as i64).sum();
            assert_eq!(brute, weyl_dim_a2(a, b), "({a},{b})");
            assert_eq!(signed_count(&d).unwrap(), brute, "({a},{b})");
        }
    }
}

#[test]
fn zero_weight_cube_is_the_origin() {
    let a3 = rd("A3");
    for word in words_of_length(3, 4) {
        let d = derive_twist_data(&a3, &word, &DominantWeight::zero(3)).unwrap();
        let census = lattice_points(&d).unwrap();
        assert_eq!(census.points.len(), 1);
        assert_eq!(census.points[0].x, vec![0; 4]);
        assert_eq!(census.points[0].rho, 1);
        assert!(is_untwisted(&d).unwrap().untwisted);
    }
}

#[test]
fn detectors_agree_exhaustively_on_small_words() {
    for t in ["A1", "A2", "A3", "B2", "B3", "C3", "G2"] {
        let root = rd(t);
        let r = root.rank();
        for w in weights_over(r, &[0, 1]) {
            for len in 0..=6 {
                for word in words_of_length(r, len) {
                    let fast = find_hesitant_lambda_walk(&root, &word, &w);
                    let slow = find_hesitant_lambda_walk_naive(&root, &word, &w).unwrap();
                    assert_eq!(fast.is_some(), slow.is_some(), "{t} {word:?} {w:?}");
                    if let Some(f) = fast {
                        assert!(f.validate(&root, &word, &w));
                    }
                }
            }
        }
    }
}

fn raw_twist_data(max_n: usize) -> impl Strategy<Value = TwistData> {
    (0..=max_n).prop_flat_map(|n| {
        (
            proptest::collection::vec(-3i64..=4, n),
            proptest::collection::vec(-3i64..=3, n * n),
        )
            .prop_map(move |(ell, c)| {
                let mut entries = Vec::new();
                for j in 1..=n {
                    for k in j + 1..=n {
                        entries.push(((j, k), c[(j - 1) * n + (k - 1)]));
                    }
                }
                TwistData::from_entries(ell, entries).unwrap()
            })
    })
}

fn type_strategy(max_rank: usize) -> impl Strategy<Value = LieType> {
    proptest::sample::select(all_types_up_to(max_rank))
}

fn instance_strategy(max_rank: usize, max_len: usize) -> impl Strategy<Value = (LieType, Word, DominantWeight)> {
    type_strategy(max_rank).prop_flat_map(move |t| {
        let r = t.rank();
        (
            Just(t),
            proptest::collection::vec(1..=r, 0..=max_len).prop_map(Word::new),
            proptest::collection::vec(0i64..=2, r).prop_map(|v| DominantWeight::new(v).unwrap()),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn enumeration_matches_brute_force(d in raw_twist_data(4)) {
        let census = lattice_points(&d).unwrap();
        let got: Vec<(Vec<i64>, i8)> = census.points.iter().map(|p| (p.x.clone(), p.rho)).collect();
        prop_assert_eq!(got, brute_force_census(&d));
        prop_assert_eq!(census.positive + census.negative, census.points.len());
    }

    #[test]
    fn support_identity_and_pd_inclusion(
        d in raw_twist_data(3),
        num in proptest::collection::vec(-12i64..=12, 3),
        den in 1i64..=3,
    ) {
        let x: Vec<Rational> = num.iter().take(d.n()).map(|&v| Rational::new(v, den)).collect();
        let inside = contains(&d, &x).unwrap();
        prop_assert_eq!(density(&d, &x).unwrap() != 0, inside);
        if contains_pd(&d, &x).unwrap() {
            prop_assert!(inside);
        }
        if inside && x.iter().all(|v| *v >= Rational::from_integer(0)) {
            prop_assert_eq!(density(&d, &x).unwrap(), 1);
        }
    }

    #[test]
    fn m_depends_only_on_suffix(d in raw_twist_data(6), mask in 0u64..64, k_pick in 0usize..6, noise in -5i64..=5) {
        let n = d.n();
        prop_assume!(n >= 1);
        let k = k_pick % n + 1;
        let sigma = SignVector::from_mask(n, mask & ((1 << n) - 1));
        let m = compute_m(&d, &sigma).unwrap();
        // perturb every l and c entry that touches an index below k
        let mut ell = d.ells().to_vec();
        let mut entries = Vec::new();
        for j in 1..=n {
            if j < k {
                ell[j - 1] += noise;
            }
            for q in j + 1..=n {
                let bump = if j < k { noise } else { 0 };
                entries.push(((j, q), d.c(j, q) + bump));
            }
        }
        let perturbed = TwistData::from_entries(ell, entries).unwrap();
        let m2 = compute_m(&perturbed, &sigma).unwrap();
        prop_assert_eq!(&m.values()[k - 1..], &m2.values()[k - 1..]);
    }

    #[test]
    fn single_minus_gives_l(d in raw_twist_data(6), k_pick in 0usize..6) {
        let n = d.n();
        prop_assume!(n >= 1);
        let k = k_pick % n + 1;
        let m = compute_m(&d, &SignVector::minus_at(n, &[k])).unwrap();
        prop_assert_eq!(m.get(k), d.ell(k));
    }

    #[test]
    fn constants_follow_root_pairs((t, word, weight) in instance_strategy(8, 8)) {
        let root = t.root_data();
        let d = derive_twist_data(&root, &word, &weight).unwrap();
        let n = word.len();
        for j in 1..=n {
            prop_assert_eq!(d.ell(j), weight.coefficient(word.root(j)));
            for k in j + 1..=n {
                let (a, b) = (word.root(j), word.root(k));
                let c = d.c(j, k);
                prop_assert_eq!(c, root.pairing(b, a).unwrap());
                prop_assert_eq!(c == 2, a == b);
                prop_assert_eq!(c < 0, root.adjacent(a, b).unwrap());
            }
        }
        // inserting a letter keeps the old entries in place
        let mut longer = word.entries().to_vec();
        longer.insert(0, 1);
        let d2 = derive_twist_data(&root, &Word::new(longer), &weight).unwrap();
        for j in 1..=n {
            for k in j + 1..=n {
                prop_assert_eq!(d2.c(j + 1, k + 1), d.c(j, k));
            }
        }
    }

    #[test]
    fn detector_properties((t, word, weight) in instance_strategy(6, 10)) {
        let root = t.root_data();
        let fast = find_hesitant_lambda_walk(&root, &word, &weight);
        let slow = find_hesitant_lambda_walk_naive(&root, &word, &weight).unwrap();
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(w) = &slow {
            prop_assert!(w.validate(&root, &word, &weight));
        }
        if let Some(w) = &fast {
            let sub = w.subword(&word);
            prop_assert!(is_hesitant_lambda_walk(&root, sub.entries(), &weight));
            prop_assert!(!is_diagram_walk(&root, sub.entries()));

            let min = minimize(&root, &word, w, &weight).unwrap();
            prop_assert!(is_minimal(&root, &word, &min, &weight).unwrap());
            prop_assert!(min.positions.iter().all(|p| w.positions.contains(p)));
            prop_assert_eq!(&minimize(&root, &word, &min, &weight).unwrap(), &min);

            let d = derive_twist_data(&root, &word, &weight).unwrap();
            let (_, m) = witness_sigma_from_walk(&d, &min.positions).unwrap();
            prop_assert!(m.get(min.positions[0]) < 0);
        }
        // enlarging the support never removes a walk
        let bigger = DominantWeight::new(weight.coefficients().iter().map(|&v| v.max(1)).collect()).unwrap();
        if fast.is_some() {
            prop_assert!(find_hesitant_lambda_walk(&root, &word, &bigger).is_some());
        }
    }
}
