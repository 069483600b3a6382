use mr_minors::bounds::q_lower_unconditional;
use mr_minors::code::{
    code_to_matroid, is_mds_code, is_mr_lrc, minor_code, puncture, search_mr_code, shorten,
    GenMatrix,
};
use mr_minors::field::{FieldSpec, Gf};
use mr_minors::matroid::{check_axioms, contract, delete, tabulate};
use mr_minors::witness::all_witnesses;
use mr_minors::{Matroid, MrMatroid, MrParams, Subset};
use proptest::prelude::*;

fn random_code(
    field: &'static str,
    max_k: usize,
    max_n: usize,
) -> impl Strategy<Value = GenMatrix> {
    let gf = Gf::new(field.parse().unwrap());
    let q = gf.order();
    (1..=max_k, 1..=max_n)
        .prop_flat_map(move |(k, n)| {
            proptest::collection::vec(0..q, k * n).prop_map(move |e| (k, n, e))
        })
        .prop_map(move |(k, n, e)| GenMatrix::new(gf.clone(), k, n, e).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn code_matroids_satisfy_the_axioms(g in random_code("4", 4, 10)) {
        prop_assert!(check_axioms(&code_to_matroid(&g)).unwrap().passed());
    }

    #[test]
    fn puncture_and_shorten_commute_with_minors(g in random_code("7", 5, 9), bits in any::<u64>()) {
        let m = code_to_matroid(&g);
        let x = Subset::from_bits(bits) & Subset::full(g.n());
        let p = code_to_matroid(&puncture(&g, x).unwrap());
        let s = code_to_matroid(&shorten(&g, x).unwrap());
        prop_assert_eq!(tabulate(&p).unwrap(), tabulate(&delete(&m, x).unwrap()).unwrap());
        prop_assert_eq!(tabulate(&s).unwrap(), tabulate(&contract(&m, x).unwrap()).unwrap());
        prop_assert_eq!(s.matrix().k(), g.rank() - m.rank(x));
    }
}

fn found(params: &str, field: &str, seed: u64) -> GenMatrix {
    let p: MrParams = params.parse().unwrap();
    let spec: FieldSpec = field.parse().unwrap();
    search_mr_code(&p, &spec, 20_000, seed)
        .unwrap()
        .unwrap_or_else(|| panic!("no MR code for {params} over GF({field})"))
        .matrix
}

const CASES: &[(&str, &str)] = &[
    ("6,3,2", "7"),
    ("8,4,3", "13"),
    ("8,5,3", "16"),
    ("9,4,2", "11"),
    ("9,5,2", "16"),
    ("10,6,4", "31"),
    ("8,4,3:0,2,4,6;1,3,5,7", "11"),
];

#[test]
fn puncture_and_shorten_commute_exhaustively_on_mr_codes() {
    for &(params, field) in CASES {
        let g = found(params, field, 3);
        let m = code_to_matroid(&g);
        for x in m.ground().submasks() {
            let p = code_to_matroid(&puncture(&g, x).unwrap());
            let s = code_to_matroid(&shorten(&g, x).unwrap());
            assert_eq!(
                tabulate(&p).unwrap(),
                tabulate(&delete(&m, x).unwrap()).unwrap()
            );
            assert_eq!(
                tabulate(&s).unwrap(),
                tabulate(&contract(&m, x).unwrap()).unwrap()
            );
        }
    }
}

#[test]
fn certified_codes_realize_the_mr_matroid() {
    for &(params, field) in CASES {
        let p: MrParams = params.parse().unwrap();
        let g = found(params, field, 11);
        assert!(is_mr_lrc(&g, &p).unwrap());
        let mr = MrMatroid::new(p.clone());
        assert_eq!(
            tabulate(&code_to_matroid(&g)).unwrap(),
            tabulate(&mr).unwrap(),
            "{params}"
        );
        assert!(
            g.field().order() as u64 >= q_lower_unconditional(&p).value,
            "{params}"
        );
    }
}

#[test]
fn witness_minors_of_mr_codes_are_mds() {
    for &(params, field) in CASES {
        let p: MrParams = params.parse().unwrap();
        let g = found(params, field, 5);
        let mr = MrMatroid::new(p.clone());
        for (tag, w) in all_witnesses(&mr).unwrap() {
            assert!(w.verified);
            let c = minor_code(&g, w.contract_flat, w.delete_set).unwrap();
            assert_eq!(
                (c.n(), c.k()),
                (w.claimed_size, w.target_rank),
                "{params} {tag} {w}"
            );
            assert!(is_mds_code(&c).unwrap(), "{params} {tag} {w}");
        }
    }
}

#[test]
fn search_is_reproducible_across_thread_counts() {
    let p: MrParams = "8,4,3".parse().unwrap();
    let spec: FieldSpec = "8".parse().unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| search_mr_code(&p, &spec, 5_000, 42).unwrap().unwrap());
    let many = search_mr_code(&p, &spec, 5_000, 42).unwrap().unwrap();
    assert_eq!(single.trial, many.trial);
    assert_eq!(single.matrix, many.matrix);
    let other = search_mr_code(&p, &spec, 5_000, 43).unwrap().unwrap();
    assert!(other.trial != many.trial || other.matrix != many.matrix);
}

#[test]
fn tiny_fields_yield_nothing() {
    let p: MrParams = "8,4,3".parse().unwrap();
    for field in ["2", "3"] {
        let spec: FieldSpec = field.parse().unwrap();
        assert!(
            search_mr_code(&p, &spec, 5_000, 0).unwrap().is_none(),
            "GF({field})"
        );
    }
}

#[test]
fn mds_code_is_not_mr() {
    // Reed-Solomon style [8,4] code over GF(13): every repair set has rank 4 > r
    let gf = Gf::new("13".parse().unwrap());
    let xs: Vec<u32> = (1..=8).collect();
    let rows: Vec<Vec<u32>> = (0..4)
        .map(|i| {
            xs.iter()
                .map(|&x| (0..i).fold(1, |acc, _| gf.mul(acc, x)))
                .collect()
        })
        .collect();
    let g = GenMatrix::from_rows(gf, 8, &rows).unwrap();
    assert!(is_mds_code(&g).unwrap());
    assert!(!is_mr_lrc(&g, &"8,4,3".parse().unwrap()).unwrap());
}

#[test]
fn certification_refuses_long_codes() {
    let gf = Gf::new("5".parse().unwrap());
    let g = GenMatrix::new(gf, 1, 30, vec![1; 30]).unwrap();
    assert!(is_mds_code(&g).is_err());
}
