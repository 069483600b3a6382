use mr_minors::matroid::{
    closure, contract, delete, flats, flats_of_minor_check, is_flat, is_uniform, minor, tabulate,
};
use mr_minors::{make_mr, Matroid, MrMatroid, MrParams, Subset, TableMatroid};
use proptest::prelude::*;

/// Valid parameters with `n <= max_n` and a random relabelling of the repair sets.
fn shuffled_params(max_n: usize) -> impl Strategy<Value = MrParams> {
    let all = MrParams::all_up_to(max_n);
    (0..all.len())
        .prop_flat_map(move |i| {
            let p = all[i].clone();
            let perm = Just((0..p.n()).collect::<Vec<_>>()).prop_shuffle();
            (Just(p), perm)
        })
        .prop_map(|(p, perm)| {
            let blocks: Vec<Vec<usize>> = p
                .repair_sets()
                .iter()
                .map(|rs| rs.iter().map(|e| perm[e]).collect())
                .collect();
            MrParams::with_partition(p.n(), p.k(), p.r(), &blocks).unwrap()
        })
}

fn with_subsets(max_n: usize) -> impl Strategy<Value = (MrParams, u64, u64)> {
    shuffled_params(max_n).prop_flat_map(|p| {
        let full = Subset::full(p.n()).bits();
        (Just(p), 0..=full, 0..=full)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn closure_is_extensive_monotone_idempotent((p, a, b) in with_subsets(14)) {
        let m = MrMatroid::new(p);
        let (x, y) = (Subset::from_bits(a), Subset::from_bits(b));
        let cx = closure(&m, x);
        prop_assert!(x.is_subset(cx));
        prop_assert!(closure(&m, x & y).is_subset(cx));
        prop_assert_eq!(closure(&m, cx), cx);
        prop_assert!(is_flat(&m, cx));
        prop_assert_eq!(m.rank(cx), m.rank(x));
    }

    #[test]
    fn minor_orders_commute((p, a, b) in with_subsets(10)) {
        let m = MrMatroid::new(p);
        let x = Subset::from_bits(a);
        let y = Subset::from_bits(b) - x;
        let (del, con) = (delete(&m, y).unwrap(), contract(&m, x).unwrap());
        let del_then_con = contract(&del, x).unwrap();
        let con_then_del = delete(&con, y).unwrap();
        let direct = minor(&m, x, y).unwrap();
        let rest = m.ground() - x - y;
        prop_assert_eq!(del_then_con.ground(), rest);
        prop_assert_eq!(con_then_del.ground(), rest);
        for s in rest.submasks() {
            let r = direct.rank(s);
            prop_assert_eq!(del_then_con.rank(s), r);
            prop_assert_eq!(con_then_del.rank(s), r);
        }
    }

    #[test]
    fn flats_of_minors_random_pairs((p, a, b) in with_subsets(12)) {
        let m = MrMatroid::new(p);
        let f = closure(&m, Subset::from_bits(a));
        let x = Subset::from_bits(b);
        prop_assert!(flats_of_minor_check(&m, f, x).unwrap());
    }

    #[test]
    fn mr_flats_match_closure_flats_on_random_partitions(p in shuffled_params(12)) {
        let m = MrMatroid::new(p);
        let table = tabulate(&m).unwrap();
        prop_assert_eq!(m.flats().unwrap(), flats(&table).unwrap());
    }
}

#[test]
fn minor_orders_commute_exhaustively_up_to_eight() {
    for p in MrParams::all_up_to(8) {
        let m = MrMatroid::new(p);
        let n = m.ground_size();
        for xb in 0..1u64 << n {
            let x = Subset::from_bits(xb);
            let rest_x = m.ground() - x;
            for y in rest_x.submasks() {
                let (del, con) = (delete(&m, y).unwrap(), contract(&m, x).unwrap());
                let a = contract(&del, x).unwrap();
                let b = delete(&con, y).unwrap();
                for s in (rest_x - y).submasks() {
                    assert_eq!(
                        a.rank(s),
                        b.rank(s),
                        "{} X={x:?} Y={y:?} A={s:?}",
                        m.params()
                    );
                }
            }
        }
    }
}

#[test]
fn rank_formulas_agree_up_to_fourteen() {
    for p in MrParams::all_up_to(14) {
        let m = MrMatroid::new(p);
        for s in m.ground().submasks() {
            assert_eq!(
                m.rank_closed_form(s),
                m.rank_direct_sum(s),
                "{} {s:?}",
                m.params()
            );
        }
    }
}

#[test]
fn information_sets_up_to_fourteen() {
    for p in MrParams::all_up_to(14) {
        let m = MrMatroid::new(p.clone());
        for s in m.ground().k_subsets(p.k()) {
            if p.full_sets_in(s) == 0 {
                assert_eq!(m.rank(s), p.k(), "{p} {s:?}");
            }
        }
    }
}

#[test]
fn full_rank_and_repair_set_ranks() {
    for p in MrParams::all_up_to(24) {
        let m = MrMatroid::new(p.clone());
        assert_eq!(m.full_rank(), p.k());
        for &rs in p.repair_sets() {
            assert_eq!(m.rank(rs), p.r());
        }
    }
}

fn uniform_by_definition<M: Matroid>(m: &M) -> bool {
    let r = m.full_rank();
    m.ground().submasks().all(|s| m.rank(s) == s.len().min(r))
}

#[test]
fn uniformity_check_agrees_with_definition() {
    for n in 0..=10 {
        for k in 0..=n {
            let u = TableMatroid::uniform(n, k).unwrap();
            assert_eq!(is_uniform(&u).unwrap(), Some((n, k)));
        }
    }
    for p in MrParams::all_up_to(14) {
        let m = make_mr(p.n(), p.k(), p.r()).unwrap();
        assert_eq!(
            is_uniform(&m).unwrap().is_some(),
            uniform_by_definition(&m),
            "{p}"
        );
        // minors: delete one element per repair set, and contract the first repair set
        let x = Subset::from_indices(p.repair_sets().iter().filter_map(|s| s.first()));
        let del = delete(&m, x).unwrap();
        assert_eq!(
            is_uniform(&del).unwrap().is_some(),
            uniform_by_definition(&del),
            "{p}"
        );
        let con = contract(&m, p.repair_sets()[0]).unwrap();
        assert_eq!(
            is_uniform(&con).unwrap().is_some(),
            uniform_by_definition(&con),
            "{p}"
        );
    }
}

#[test]
fn flats_of_minors_exhaustive_small() {
    for p in MrParams::all_up_to(8) {
        let m = MrMatroid::new(p);
        for f in m.flats().unwrap() {
            for x in m.ground().submasks() {
                assert!(
                    flats_of_minor_check(&m, f, x).unwrap(),
                    "{} F={f:?} X={x:?}",
                    m.params()
                );
            }
        }
    }
}

#[test]
fn enumeration_limits_refuse() {
    let m = make_mr(30, 10, 4).unwrap();
    assert!(flats(&m).is_err());
    assert!(m.flats().is_err());
}
