//! Acceptance suite: one test per shipping criterion, each printing a
//! pass line (run with `--nocapture` to see them; the per-test ok/FAILED
//! lines carry the same information). Stated time budgets are asserted.

mod common;

use common::*;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use cwforest::division::{depth_det1, divide_forms, euclid_cf, rational_cf, rational_depth};
use cwforest::exactnum::Rational;
use cwforest::fieldroots::{rational_children, root_viability};
use cwforest::forest::{class_number, enumerate_orphans, verify_partition};
use cwforest::generalized::{gen_locate, gen_vertex_at, GenRule};
use cwforest::plft::Plft;
use cwforest::treenav::{
    bfs_row, factor_sl2, locate, rational_row_iter, rational_successor, row_iter, vertex_at, Step,
};

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn pass(name: &str) {
    println!("acceptance {name}: pass");
}

/// Criterion 1: the class number table for D = 1..=15, in under a second.
#[test]
fn criterion_01_class_number_table() {
    let started = Instant::now();
    let expected: [u64; 15] = [1, 4, 7, 13, 15, 26, 25, 39, 40, 54, 49, 79, 63, 88, 88];
    for (i, want) in expected.iter().enumerate() {
        let d = (i + 1) as i64;
        assert_eq!(class_number(d).unwrap(), *want, "h({d})");
    }
    assert!(
        started.elapsed() < Duration::from_secs(1),
        "h(D) table exceeded one second"
    );
    pass("01 class number table");
}

/// Criterion 2: explicit orphan matrix lists for D = 1, 2, 3, 4.
#[test]
fn criterion_02_orphan_golden_sets() {
    let golden: [(i64, Vec<Plft>); 4] = [
        (1, vec![m(1, 0, 0, 1)]),
        (
            2,
            vec![m(2, 0, 0, 1), m(1, 0, 0, 2), m(2, 0, 1, 1), m(1, 1, 0, 2)],
        ),
        (
            3,
            vec![
                m(1, 0, 0, 3),
                m(3, 0, 0, 1),
                m(3, 0, 1, 1),
                m(3, 0, 2, 1),
                m(1, 1, 0, 3),
                m(2, 1, 1, 2),
                m(1, 2, 0, 3),
            ],
        ),
        (
            4,
            vec![
                m(1, 0, 0, 4),
                m(2, 0, 0, 2),
                m(4, 0, 0, 1),
                m(2, 0, 1, 2),
                m(4, 0, 1, 1),
                m(4, 0, 2, 1),
                m(4, 0, 3, 1),
                m(1, 1, 0, 4),
                m(2, 1, 0, 2),
                m(3, 1, 2, 2),
                m(1, 2, 0, 4),
                m(2, 2, 1, 3),
                m(1, 3, 0, 4),
            ],
        ),
    ];
    for (d, matrices) in golden {
        let got: HashSet<Plft> = enumerate_orphans(d).unwrap().orphans.into_iter().collect();
        let want: HashSet<Plft> = matrices.iter().cloned().collect();
        assert_eq!(want.len(), matrices.len(), "golden list for {d} has dupes");
        assert_eq!(got, want, "orphans of determinant {d}");
    }
    pass("02 orphan golden sets");
}

/// Criterion 3: the two worked continued fractions, exactly.
#[test]
fn criterion_03_worked_continued_fractions() {
    let cf = euclid_cf(&m(21, 46, 5, 11));
    assert_eq!(cf.quotients, vec![BigUint::from(4u32), BigUint::from(5u32)]);
    assert_eq!(cf.root, m(1, 2, 0, 1));

    let cf = euclid_cf(&m(17, 10, 5, 3));
    assert_eq!(
        cf.quotients,
        vec![
            BigUint::from(3u32),
            BigUint::from(2u32),
            BigUint::from(1u32),
            BigUint::from(1u32)
        ]
    );
    assert_eq!(cf.root, Plft::identity());
    pass("03 worked continued fractions");
}

/// Criterion 4: the division example with its determinant preserved.
#[test]
fn criterion_04_division_example() {
    let num = form(21, 16);
    let den = form(8, 5);
    let div = divide_forms(&num, &den).unwrap();
    assert_eq!(div.quotient, BigUint::from(2u32));
    assert_eq!(div.remainder, form(5, 6));
    // rd - sc = ad - bc = -23.
    assert_eq!(
        5i64 * 5 - 6 * 8,
        21 * 5 - 16 * 8,
        "determinant not preserved"
    );
    pass("04 division example");
}

/// Criterion 5: depth, successor, and symmetry around 11/3 on row 5.
#[test]
fn criterion_05_rational_depth_successor_symmetry() {
    let started = Instant::now();
    let x = rat(11, 3);
    assert_eq!(
        rational_cf(&x).unwrap(),
        vec![
            BigUint::from(3u32),
            BigUint::from(1u32),
            BigUint::from(2u32)
        ]
    );
    assert_eq!(rational_depth(&x).unwrap(), BigUint::from(5u32));
    assert_eq!(rational_successor(&x).unwrap(), rat(3, 10));

    let row5: Vec<Rational> = rational_row_iter(5).collect();
    assert_eq!(row5.len(), 32);
    assert_eq!(row5[23], rat(11, 3), "c_{{5,24}}");
    assert_eq!(row5[24], rat(3, 10), "c_{{5,25}}");
    assert_eq!(row5[8], rat(3, 11), "c_{{5,9}}");
    assert!(
        started.elapsed() < Duration::from_secs(1),
        "row 5 work exceeded one second"
    );
    pass("05 rational depth/successor/symmetry");
}

/// Criterion 6: the four-row displays of both trees, and the evaluate-at-1
/// bridge through row 14.
#[test]
fn criterion_06_row_tables_and_bridge() {
    for (n, want) in display_rows_matrix().into_iter().enumerate() {
        let got: Vec<Plft> = row_iter(&Plft::identity(), n as u32).collect();
        assert_eq!(got, want, "matrix row {n}");
    }
    for (n, want) in display_rows_rational().into_iter().enumerate() {
        let got: Vec<Rational> = rational_row_iter(n as u32).collect();
        assert_eq!(got, want, "rational row {n}");
    }
    let one = Rational::one();
    for n in 0..=14u32 {
        let rationals = rational_row_iter(n);
        for (f, x) in row_iter(&Plft::identity(), n).zip(rationals) {
            assert_eq!(f.eval(&one).unwrap(), x, "bridge failed on row {n} at {f}");
        }
    }
    pass("06 row tables and bridge");
}

/// Criterion 7: successor-formula rows equal child-expansion rows for all
/// n <= 14, within 30 seconds.
#[test]
fn criterion_07_successor_equals_expansion() {
    let started = Instant::now();
    let i = Plft::identity();
    for n in 0..=14u32 {
        let expanded = bfs_row(&i, n).unwrap();
        let mut count = 0usize;
        for (streamed, grown) in row_iter(&i, n).zip(expanded.iter()) {
            assert_eq!(&streamed, grown, "row {n} position {count}");
            count += 1;
        }
        assert_eq!(count, 1usize << n, "row {n} has the wrong length");
    }
    assert!(
        started.elapsed() < Duration::from_secs(30),
        "row comparison exceeded 30 seconds"
    );
    pass("07 successor equals expansion");
}

/// Criterion 8: the forest partition verifies for 1 <= |D| <= 6 at height
/// 12, within 60 seconds.
#[test]
fn criterion_08_forest_partition() {
    let started = Instant::now();
    for d in (1..=6i64).flat_map(|d| [d, -d]) {
        let report = verify_partition(d, 12).unwrap();
        assert!(report.pass, "partition check failed for D = {d}");
        assert_eq!(
            report.trees.len() as u64,
            class_number(d).unwrap(),
            "tree count for D = {d}"
        );
    }
    assert!(
        started.elapsed() < Duration::from_secs(60),
        "partition verification exceeded 60 seconds"
    );
    pass("08 forest partition");
}

/// Criterion 9: factorization inverts generator words, 10^4 random words
/// of length <= 20.
#[test]
fn criterion_09_free_monoid_roundtrip() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10_000 {
        let w = random_word(&mut rng, 20);
        let v = vertex_at(&Plft::identity(), &w);
        assert_eq!(factor_sl2(&v).unwrap(), w, "word {w}");
    }
    pass("09 free monoid roundtrip");
}

/// Criterion 10: quotient-sum depth equals word-length depth for every
/// determinant-1 matrix of height <= 60, and across rows <= 14.
#[test]
fn criterion_10_depth_formula() {
    let limit = 60u64;
    let mut checked = 0u64;
    for a in 0..=limit {
        for b in 0..=(limit - a) {
            for c in 0..=limit {
                for dd in 0..=(limit - c) {
                    if (a * dd) as i128 - (b * c) as i128 != 1 {
                        continue;
                    }
                    let f = m(a, b, c, dd);
                    let (root, word) = locate(&f);
                    assert_eq!(root, Plft::identity());
                    assert_eq!(
                        depth_det1(&f).unwrap(),
                        BigUint::from(word.len()),
                        "depth of {f}"
                    );
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 1000, "determinant-1 scan too small: {checked}");
    for n in 0..=14u32 {
        for f in bfs_row(&Plft::identity(), n).unwrap() {
            assert_eq!(depth_det1(&f).unwrap(), BigUint::from(n), "row {n}, {f}");
        }
    }
    pass("10 depth formula");
}

/// Criterion 11: viability verdicts with replayable witnesses, 500 + 500
/// random rationals of height <= 60.
#[test]
fn criterion_11_field_roots() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let minus_one = rat(-1, 1);
    for _ in 0..500 {
        let x = random_positive_rational(&mut rng, 60);
        let x = if rng.gen_bool(0.05) {
            Rational::zero()
        } else {
            x
        };
        let verdict = root_viability(&x);
        assert!(verdict.viable, "{x} should root a tree");
        assert!(verdict.witness.is_none());
    }
    for _ in 0..500 {
        let x = -random_positive_rational(&mut rng, 60);
        let verdict = root_viability(&x);
        assert!(!verdict.viable, "{x} should not root a tree");
        let w = verdict.witness.unwrap();
        let mut cur = x.clone();
        for step in w.steps() {
            let (left, right) = rational_children(&cur);
            cur = match step {
                Step::L => left.expect("descent never steps left from -1"),
                Step::R => right,
            };
        }
        assert_eq!(cur, minus_one, "witness of {x} does not reach -1");
    }
    pass("11 field roots");
}

/// Criterion 12: the (2,2) rule partitions all positive rationals of
/// height <= 40 into trees rooted in [1/2, 2], with exact replay, within
/// 30 seconds.
#[test]
fn criterion_12_generalized_partition() {
    let started = Instant::now();
    let rule = GenRule::new(2, 2).unwrap();
    let low = rat(1, 2);
    let high = rat(2, 1);
    let mut seen = 0u64;
    for (a, b) in reduced_pairs_up_to(40) {
        let x = rat(a as i64, b as i64);
        let (root, word) = gen_locate(rule, &x).unwrap();
        assert!(low <= root && root <= high, "{x} located outside [1/2, 2]");
        assert_eq!(
            gen_vertex_at(rule, &root, &word).unwrap(),
            x,
            "replay of {x}"
        );
        seen += 1;
    }
    assert!(seen > 900, "rational scan too small: {seen}");
    assert!(
        started.elapsed() < Duration::from_secs(30),
        "generalized partition exceeded 30 seconds"
    );
    pass("12 generalized partition");
}
