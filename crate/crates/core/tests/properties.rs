//! Property tests over randomly drawn paths.

use chung_feller::bijections::{
    phi, phi_inv, phi_zero, phi_zero_inv, psi, psi_inv, psi_zero, psi_zero_inv,
};
use chung_feller::enumeration::random_path;
use chung_feller::pointed::{
    canonical_rotation, gamma, gamma_index, gamma_sequence, pointed_class, theta, theta_index,
    theta_sequence,
};
use chung_feller::{LatticePath, PathPoint, PointedLatticePath};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A uniform path over a small random (n, m) box.
fn arb_path() -> impl Strategy<Value = LatticePath> {
    (1usize..=6, 0i64..=4, any::<u64>()).prop_map(|(n, extra, seed)| {
        let m = n as i64 + 1 + extra;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_path(n, m, &mut rng).expect("parameters are in range")
    })
}

proptest! {
    #[test]
    fn npl_is_zero_exactly_when_rml_is_zero(p in arb_path()) {
        prop_assert_eq!(p.npl() == 0, p.rml() == 0);
    }

    #[test]
    fn the_final_step_is_never_non_positive(p in arb_path()) {
        // The full height sum is 1, so index n + 1 never enters NP(P).
        prop_assert!(!p.non_positive_set().contains(&p.len()));
    }

    #[test]
    fn statistics_stay_within_their_bounds(p in arb_path()) {
        let m = p.m();
        prop_assert!((0..=m - p.last_step().x).contains(&p.npl()));
        prop_assert!((0..m).contains(&p.rml()));
    }

    #[test]
    fn prefix_points_run_from_origin_to_m_1(p in arb_path()) {
        let points = p.prefix_points();
        prop_assert_eq!(points.len(), p.n() + 2);
        prop_assert_eq!(points[0], PathPoint::new(0, 0));
        prop_assert_eq!(*points.last().unwrap(), PathPoint::new(p.m(), 1));
        // Horizontal coordinates strictly increase.
        prop_assert!(points.windows(2).all(|w| w[0].b < w[1].b));
    }

    #[test]
    fn path_order_sorts_by_height_with_right_to_left_ties(p in arb_path()) {
        let order = p.path_order();
        let mut sorted = order.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, (1..=p.len()).collect::<Vec<_>>());

        let points = p.prefix_points();
        let height = |i: usize| points[i].a;
        for w in order.windows(2) {
            let (i, j) = (w[0], w[1]);
            prop_assert!(height(i) < height(j) || (height(i) == height(j) && i > j));
        }
    }

    #[test]
    fn repeated_rotation_is_the_identity(p in arb_path(), i in 1usize..=7) {
        let i = (i - 1) % p.len() + 1;
        let mut q = p.clone();
        for _ in 0..p.len() {
            q = q.cyclic_permutation(i).unwrap();
        }
        prop_assert_eq!(q, p);
    }

    #[test]
    fn phi_raises_npl_and_round_trips(p in arb_path()) {
        let (m, npl) = (p.m(), p.npl());
        if (1..=m - 2).contains(&npl) {
            let image = phi(&p).unwrap();
            prop_assert_eq!(image.npl(), npl + 1);
            prop_assert_eq!(phi_inv(&image).unwrap(), p);
        } else {
            prop_assert!(phi(&p).is_err());
        }
    }

    #[test]
    fn psi_raises_rml_and_round_trips(p in arb_path()) {
        let (m, rml) = (p.m(), p.rml());
        if (1..=m - 2).contains(&rml) {
            let image = psi(&p).unwrap();
            prop_assert_eq!(image.rml(), rml + 1);
            prop_assert_eq!(psi_inv(&image).unwrap(), p);
        } else {
            prop_assert!(psi(&p).is_err());
        }
    }

    #[test]
    fn zero_level_maps_round_trip(p in arb_path()) {
        if p.npl() == 0 && p.last_step().x == 1 {
            let via_order = phi_zero(&p).unwrap();
            prop_assert_eq!(via_order.npl(), 1);
            prop_assert_eq!(phi_zero_inv(&via_order).unwrap(), p.clone());

            let via_front = psi_zero(&p).unwrap();
            prop_assert_eq!(via_front.rml(), 1);
            prop_assert_eq!(psi_zero_inv(&via_front).unwrap(), p);
        }
    }

    #[test]
    fn pointed_class_realizes_every_value_once(p in arb_path()) {
        let m = p.m();
        let class = pointed_class(&p);
        prop_assert_eq!(class.len() as i64, m);

        let mut pnpl: Vec<i64> = class.iter().map(|c| c.realized().pnpl()).collect();
        pnpl.sort_unstable();
        prop_assert_eq!(pnpl, (0..m).collect::<Vec<_>>());

        let mut prml: Vec<i64> = class.iter().map(|c| c.realized().prml()).collect();
        prml.sort_unstable();
        prop_assert_eq!(prml, (0..m).collect::<Vec<_>>());
    }

    #[test]
    fn direct_selection_agrees_with_the_materialized_sequence(p in arb_path(), pick in any::<u64>()) {
        let m = p.m();
        let r = (pick % m as u64) as i64 + 1;

        let theta_seq = theta_sequence(&p);
        prop_assert_eq!(theta_seq.len() as i64, m);
        let direct = theta(&p, r).unwrap();
        prop_assert_eq!(&direct, theta_seq[(r - 1) as usize].realized());
        prop_assert_eq!(direct.pnpl(), r - 1);

        let gamma_seq = gamma_sequence(&p);
        let direct = gamma(&p, r).unwrap();
        prop_assert_eq!(&direct, gamma_seq[(r - 1) as usize].realized());
        prop_assert_eq!(direct.prml(), r - 1);
    }

    #[test]
    fn canonical_rotation_is_shared_and_idempotent(p in arb_path()) {
        let canon = canonical_rotation(&p);
        prop_assert_eq!(canonical_rotation(&canon), canon.clone());
        for i in 1..=p.len() {
            prop_assert_eq!(canonical_rotation(&p.cyclic_permutation(i).unwrap()), canon.clone());
        }
    }

    #[test]
    fn index_lookups_invert_the_class_bijections(p in arb_path(), pick in any::<u64>()) {
        let offset = (pick % p.last_step().x as u64) as i64;
        let q = PointedLatticePath::new(p.clone(), offset).unwrap();

        let (base, rank) = theta_index(&q);
        prop_assert_eq!(rank - 1, q.pnpl());
        prop_assert_eq!(theta(&base, rank).unwrap(), q.clone());

        let (base, rank) = gamma_index(&q);
        prop_assert_eq!(rank - 1, q.prml());
        prop_assert_eq!(gamma(&base, rank).unwrap(), q);
    }

    #[test]
    fn text_and_json_round_trips(p in arb_path(), pick in any::<u64>()) {
        let reparsed: LatticePath = p.to_string().parse().unwrap();
        prop_assert_eq!(&reparsed, &p);

        let json = serde_json::to_string(&p).unwrap();
        let back: LatticePath = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &p);

        let offset = (pick % p.last_step().x as u64) as i64;
        let q = PointedLatticePath::new(p.clone(), offset).unwrap();
        let json = serde_json::to_string(&q).unwrap();
        let back: PointedLatticePath = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, q);
    }
}

/// Rotation at a fixed index permutes the whole (n,m) space: checked
/// exhaustively at small sizes.
#[test]
fn fixed_index_rotation_permutes_the_space() {
    use chung_feller::enumeration::enumerate_paths;
    use std::collections::BTreeSet;

    for n in 1..=3usize {
        for m in (n as i64 + 1)..=(n as i64 + 3) {
            let all: BTreeSet<LatticePath> = enumerate_paths(n, m).unwrap().collect();
            for i in 1..=n + 1 {
                let image: BTreeSet<LatticePath> = all
                    .iter()
                    .map(|p| p.cyclic_permutation(i).unwrap())
                    .collect();
                assert_eq!(image, all, "n={n} m={m} i={i}");
            }
        }
    }
}
