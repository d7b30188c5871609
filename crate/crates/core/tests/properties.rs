use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use flagcodes::durfee::{
    analyze, black_dots_in_rectangle, black_dots_in_rectangle_by_cells, check_separability,
};
use flagcodes::ferrers::{
    distance_equivalent_by_cells, distance_equivalent_by_criterion, left_black_count,
    partition_of_staircase, skeleton_of_staircase, staircase_class, staircase_of_partition,
    EmbeddedPartition,
};
use flagcodes::flags::{
    codistance, distance_vector, flag_distance, max_distance, min_distance, Flag,
};
use flagcodes::gfq::{
    dim_intersection, injection_distance, rref, subspace_distance, subspace_from_rows, MatGFq,
    PrimeField, Subspace,
};
use flagcodes::paths::{path_from_flag_pair, realize_path, validate_path, DistancePath};
use flagcodes::random::{
    random_code, random_full_flag, random_invertible, random_path, Strategy as CodeStrategy,
};

fn matrix(q: u32, rows: usize, cols: usize) -> impl Strategy<Value = MatGFq> {
    prop::collection::vec(0..q, rows * cols).prop_map(move |v| {
        let field = PrimeField::new(q).unwrap();
        let rows: Vec<Vec<u32>> = v.chunks(cols).map(<[u32]>::to_vec).collect();
        MatGFq::from_rows(field, cols, &rows).unwrap()
    })
}

fn field_and_matrix() -> impl Strategy<Value = (u32, MatGFq)> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..5, 1usize..6)
        .prop_flat_map(|(q, r, c)| (Just(q), matrix(q, r, c)))
}

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn flag_pair(q: u32, n: usize, seed: u64) -> (Flag, Flag) {
    let mut r = rng(seed);
    (
        random_full_flag(q, n, &mut r).unwrap(),
        random_full_flag(q, n, &mut r).unwrap(),
    )
}

/// Every subspace of `F_2^n` of dimension `k`, from all `k`-row matrices.
fn grassmannian(n: usize, k: usize) -> Vec<Subspace> {
    let field = PrimeField::new(2).unwrap();
    let mut out = BTreeSet::new();
    for bits in 0u32..(1 << (n * k)) {
        let rows: Vec<Vec<u32>> = (0..k)
            .map(|r| (0..n).map(|c| (bits >> (r * n + c)) & 1).collect())
            .collect();
        let m = MatGFq::from_rows(field, n, &rows).unwrap();
        if m.rank() == k {
            out.insert(Subspace::from_rows(n, &m).unwrap());
        }
    }
    out.into_iter().collect()
}

fn embedded_partition(n: usize) -> impl Strategy<Value = EmbeddedPartition> {
    prop::collection::vec(0usize..n, n.saturating_sub(1)).prop_map(move |raw| {
        let mut parts = Vec::new();
        let mut cap = n - 1;
        for (i, x) in raw.into_iter().enumerate() {
            let len = x.min(cap).min(n - 1 - i);
            if len == 0 {
                break;
            }
            parts.push(len);
            cap = len;
        }
        EmbeddedPartition::new(n, parts).unwrap()
    })
}

proptest! {
    #[test]
    fn rref_is_idempotent((_q, m) in field_and_matrix()) {
        let (r, rank) = rref(&m);
        let (rr, rank2) = rref(&r);
        prop_assert_eq!(rr, r);
        prop_assert_eq!(rank, rank2);
        prop_assert_eq!(rank, m.rank());
    }

    #[test]
    fn canonical_form_ignores_basis(q in prop::sample::select(vec![2u32, 3]), n in 2usize..6, seed: u64) {
        let mut r = rng(seed);
        let field = PrimeField::new(q).unwrap();
        let g = random_invertible(field, n, &mut r);
        for k in 1..=n {
            let basis = g.top_rows(k);
            let change = random_invertible(field, k, &mut r);
            let other = change.mul(&basis).unwrap();
            prop_assert_eq!(
                subspace_from_rows(q, n, &basis).unwrap(),
                subspace_from_rows(q, n, &other).unwrap()
            );
        }
    }

    #[test]
    fn equal_dimension_distances(q in prop::sample::select(vec![2u32, 3]), n in 2usize..7, k in 1usize..6, seed: u64) {
        prop_assume!(k < n);
        let (f, g) = flag_pair(q, n, seed);
        let (u, v) = (&f.subspaces()[k - 1], &g.subspaces()[k - 1]);
        prop_assert_eq!(subspace_distance(u, v).unwrap(), 2 * injection_distance(u, v).unwrap());
        prop_assert_eq!(injection_distance(u, v).unwrap(), k - dim_intersection(u, v).unwrap());
    }

    #[test]
    fn distance_and_codistance_add_up(q in prop::sample::select(vec![2u32, 3]), n in 2usize..8, seed: u64) {
        let (f, g) = flag_pair(q, n, seed);
        let d = flag_distance(&f, &g).unwrap();
        prop_assert_eq!(d, flag_distance(&g, &f).unwrap());
        prop_assert!(d <= max_distance(n));
        prop_assert_eq!(d, distance_vector(&f, &g).unwrap().iter().sum::<usize>());
        let p = path_from_flag_pair(&f, &g).unwrap();
        prop_assert!(validate_path(p.deltas(), n));
        prop_assert_eq!(p.distance(), d);
        prop_assert_eq!(p.distance() + p.codistance(), max_distance(n));
        prop_assert_eq!(path_from_flag_pair(&g, &f).unwrap(), p);
    }

    #[test]
    fn random_paths(n in 2usize..14, seed: u64) {
        let p = random_path(n, &mut rng(seed));
        prop_assert_eq!(p.pick_area(), p.distance());
        prop_assert_eq!(p.plateaus().total % 2, n % 2);
        let rev = p.reversed();
        prop_assert!(validate_path(rev.deltas(), n));
        prop_assert_eq!(rev.distance(), p.distance());
        prop_assert_eq!(rev.reversed(), p.clone());
        let class = staircase_class(&p);
        prop_assert_eq!(class.len(), 1usize << p.plateaus().positive);
        for s in &class {
            prop_assert_eq!(&skeleton_of_staircase(s), &p);
            prop_assert_eq!(left_black_count(s), p.distance());
        }
    }

    #[test]
    fn realization_round_trip(n in 2usize..9, q in prop::sample::select(vec![2u32, 3]), seed: u64) {
        let p = random_path(n, &mut rng(seed));
        let (f, g) = realize_path(&p, q).unwrap();
        prop_assert_eq!(path_from_flag_pair(&f, &g).unwrap(), p);
    }

    #[test]
    fn staircase_bijection(p in (2usize..12).prop_flat_map(embedded_partition)) {
        let s = staircase_of_partition(&p);
        prop_assert_eq!(partition_of_staircase(&s), p.clone());
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        let skeleton = skeleton_of_staircase(&s);
        prop_assert_eq!(skeleton_of_staircase(&staircase_of_partition(&p.conjugate())), skeleton.reversed());
    }

    #[test]
    fn equivalence_criterion_is_sound(
        (a, b) in (2usize..9).prop_flat_map(|n| (embedded_partition(n), embedded_partition(n)))
    ) {
        let same_skeleton = skeleton_of_staircase(&staircase_of_partition(&a))
            == skeleton_of_staircase(&staircase_of_partition(&b));
        prop_assert_eq!(distance_equivalent_by_criterion(&a, &b).unwrap(), same_skeleton);
        prop_assert_eq!(distance_equivalent_by_cells(&a, &b).unwrap(), same_skeleton);
    }

    #[test]
    fn code_theorems_hold(
        n in 2usize..8,
        q in prop::sample::select(vec![2u32, 3]),
        size in 2usize..6,
        strategy in prop::sample::select(CodeStrategy::ALL.to_vec()),
        seed: u64,
    ) {
        let c = random_code(q, n, size, strategy, &mut rng(seed)).unwrap();
        let report = analyze(&c).unwrap();
        prop_assert!(report.consistent(), "{:?}", report.failures);
        prop_assert_eq!(report.min_distance, min_distance(&c));
        prop_assert_eq!(report.min_distance + codistance(&c).unwrap(), max_distance(n));
        for i in 1..=n / 2 {
            if check_separability(report.codistance.unwrap(), n, i).unwrap() {
                for j in i..=n - i {
                    prop_assert_eq!(report.projected[j - 1].size, c.len());
                }
            }
        }
    }
}

#[test]
fn metric_axioms_on_small_grassmannians() {
    for n in 2..=4 {
        for k in 1..n {
            let g = grassmannian(n, k);
            for u in &g {
                for v in &g {
                    let d = injection_distance(u, v).unwrap();
                    assert_eq!(d == 0, u == v);
                    assert_eq!(d, injection_distance(v, u).unwrap());
                    assert_eq!(subspace_distance(u, v).unwrap(), 2 * d);
                    for w in &g {
                        assert!(
                            d <= injection_distance(u, w).unwrap()
                                + injection_distance(w, v).unwrap()
                        );
                    }
                }
            }
        }
    }
    // Mixed dimensions in F_2^5 for the injection distance triangle inequality.
    let all: Vec<Subspace> = (1..5).flat_map(|k| grassmannian(5, k)).collect();
    let sample: Vec<&Subspace> = all.iter().step_by(7).collect();
    for u in &sample {
        for v in &sample {
            let d = injection_distance(u, v).unwrap();
            for w in &sample {
                assert!(d <= injection_distance(u, w).unwrap() + injection_distance(w, v).unwrap());
            }
        }
    }
}

#[test]
fn extended_flag_distance_identity() {
    // Adding {0} and F_q^n to both flags changes neither the distance nor the path.
    let mut r = rng(5);
    for n in 2..=7 {
        let f = random_full_flag(2, n, &mut r).unwrap();
        let g = random_full_flag(2, n, &mut r).unwrap();
        let field = PrimeField::new(2).unwrap();
        let ends = [Subspace::zero(field, n), Subspace::whole(field, n)];
        let extra: usize = ends.iter().map(|s| injection_distance(s, s).unwrap()).sum();
        assert_eq!(extra, 0);
        let p = path_from_flag_pair(&f, &g).unwrap();
        assert_eq!((p.deltas()[0], p.deltas()[n]), (0, 0));
        assert_eq!(flag_distance(&f, &g).unwrap() + extra, p.distance());
    }
}

#[test]
fn rectangle_black_dots_match_cells() {
    for n in 2..=12 {
        for a in 0..n {
            for b in 0..=n - a {
                assert_eq!(
                    black_dots_in_rectangle(a, b, n).unwrap(),
                    black_dots_in_rectangle_by_cells(a, b, n)
                );
            }
        }
    }
}

#[test]
fn separability_monotonicity() {
    for n in 2..=20usize {
        for i in 1..=n / 2 {
            for j in i..=n / 2 {
                assert!(j * (n - j) >= i * (n - i));
            }
        }
    }
}

#[test]
fn maximal_path_is_unique_at_top_distance() {
    for n in 2..=10 {
        let top = DistancePath::maximal(n);
        assert_eq!(top.distance(), max_distance(n));
        let all = flagcodes::paths::enumerate_paths(n, Some(max_distance(n)), &Default::default())
            .unwrap();
        assert_eq!(all, vec![top]);
    }
}
