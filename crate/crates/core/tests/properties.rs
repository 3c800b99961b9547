use cluster_index::*;
use proptest::prelude::*;

fn small_params() -> impl Strategy<Value = ModelParams> {
    (1usize..=4, 1usize..=3).prop_map(|(n, d)| ModelParams::new(n, d).unwrap())
}

fn params_and_objects(count: usize) -> impl Strategy<Value = (ModelParams, Vec<IndObj>)> {
    small_params().prop_flat_map(move |p| {
        let objs = enumerate_indecomposables(&p);
        (Just(p), prop::collection::vec(prop::sample::select(objs), count))
    })
}

proptest! {
    #[test]
    fn shift_is_invertible((p, v) in params_and_objects(1), steps in -20i64..20) {
        let x = &v[0];
        let y = shift(x, steps, &p);
        prop_assert!(is_admissible(y.elements(), &p));
        prop_assert_eq!(&shift(&y, -steps, &p), x);
    }

    #[test]
    fn rotation_preserves_hom((p, v) in params_and_objects(2), steps in -5i64..5) {
        let (x, y) = (&v[0], &v[1]);
        let (sx, sy) = (shift(x, steps, &p), shift(y, steps, &p));
        prop_assert_eq!(hom_dim(x, y, &p), hom_dim(&sx, &sy, &p));
        prop_assert_eq!(intertwines(x, y, &p), intertwines(&sx, &sy, &p));
    }

    #[test]
    fn intertwining_is_symmetric_and_disjoint((p, v) in params_and_objects(2)) {
        let (x, y) = (&v[0], &v[1]);
        prop_assert_eq!(intertwines(x, y, &p), intertwines(y, x, &p));
        if intertwines(x, y, &p) {
            prop_assert!(x.elements().iter().all(|e| !y.contains(*e)));
        }
    }

    #[test]
    fn serre_duality((p, v) in params_and_objects(2)) {
        let (x, y) = (&v[0], &v[1]);
        prop_assert_eq!(hom_dim(x, y, &p), hom_dim(y, &shift(x, 2, &p), &p));
        prop_assert_eq!(hom_dim(x, y, &p), hom_dim_by_chain(x, y, &p));
    }

    #[test]
    fn quotient_plus_ideal_is_hom((p, v) in params_and_objects(4)) {
        let ideal = &v[2..];
        let h = hom_dim(&v[0], &v[1], &p).value();
        let i = ideal_hom_dim(&v[0], &v[1], ideal, &p).value();
        let q = quotient_hom_dim(&v[0], &v[1], ideal, &p).value();
        prop_assert_eq!(i + q, h);
        prop_assert!(i <= h);
    }

    #[test]
    fn routes_agree_and_sums_are_additive(
        (n, d) in (1usize..=3, 1usize..=2),
        pick in any::<prop::sample::Index>(),
        extra in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
    ) {
        let p = ModelParams::new(n, d).unwrap();
        let table = HomTable::new(p);
        let tilting = enumerate_tilting(&p).tilting;
        let t = pick.get(&tilting);
        let engine = IndexEngine::new(t, &table).unwrap();
        let objs: Vec<IndObj> = extra.iter().map(|i| i.get(table.objects()).clone()).collect();
        let mut total = IndexVector::new(vec![0; t.len()]);
        for c in &objs {
            let a = engine.index_of::<Rational>(c).unwrap();
            prop_assert_eq!(&a, &engine.index_via_system::<Rational>(c).unwrap());
            total = &total + &a;
        }
        prop_assert_eq!(engine.index_of_sum::<Rational>(&objs).unwrap(), total);
    }

    #[test]
    fn shifted_summands_have_signed_unit_index(
        (n, d) in (1usize..=3, 1usize..=3),
        pick in any::<prop::sample::Index>(),
    ) {
        let p = ModelParams::new(n, d).unwrap();
        let table = HomTable::new(p);
        let tilting = enumerate_tilting(&p).tilting;
        let t = pick.get(&tilting);
        let engine = IndexEngine::new(t, &table).unwrap();
        for (j, s) in t.summands().iter().enumerate() {
            let c = shift(s, 1, &p);
            prop_assert_eq!(engine.index_of::<Rational>(&c).unwrap(), IndexVector::unit(t.len(), j, p.sign()));
            prop_assert_eq!(engine.index_via_system::<Rational>(&c).unwrap(), IndexVector::unit(t.len(), j, p.sign()));
        }
    }
}
