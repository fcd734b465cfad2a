//! Acceptance suite. Every check is integer-exact; each test prints one
//! PASS line on success (visible with `cargo test -- --nocapture`).

use bruhat_core::descent::chain_formula_sjs;
use bruhat_core::oracle::BruhatOracle;
use bruhat_core::smoothness::reference::{diff_against_reference, reference_smooth_subsets};
use bruhat_core::smoothness::{count_edges_at_base, enumerate_smooth, is_combinatorially_smooth};
use bruhat_core::{
    crosslattice, AscentDescent, DescentSystem, DynkinDiagram, MultiPolynomial, Subset, WeylGroup,
};

const BUDGET: u64 = 1_000_000;

fn diagram(name: &str) -> DynkinDiagram {
    DynkinDiagram::new(name.parse().unwrap())
}

fn group(name: &str) -> WeylGroup {
    WeylGroup::new(diagram(name))
}

fn subset(nodes: &[usize]) -> Subset {
    Subset::from_nodes(nodes.iter().copied())
}

fn proper_subsets(rank: usize) -> impl Iterator<Item = Subset> {
    (0..(1u32 << rank) - 1)
        .map(move |mask| Subset::from_nodes((1..=rank).filter(|&i| mask & (1 << (i - 1)) != 0)))
}

/// a_p b_q = (s_p .. s_1)(s_q .. s_2) as a word.
fn ap_bq_word(p: usize, q: usize) -> Vec<u8> {
    let mut word: Vec<u8> = (1..=p).rev().map(|x| x as u8).collect();
    word.extend((2..=q).rev().map(|x| x as u8));
    word
}

#[test]
fn criterion_1_golden_polynomial_a3() {
    let g = group("A3");
    let ds = DescentSystem::compute(&g, Subset::empty(), BUDGET).unwrap();
    let h = ds.h_polynomial();
    let expected: &[(&[u32], u64)] = &[
        (&[0, 0, 0], 1),
        (&[1, 0, 0], 3),
        (&[0, 1, 0], 5),
        (&[0, 0, 1], 3),
        (&[0, 1, 1], 3),
        (&[1, 0, 1], 5),
        (&[1, 1, 0], 3),
        (&[1, 1, 1], 1),
    ];
    assert_eq!(h.num_terms(), expected.len());
    for (e, c) in expected {
        assert_eq!(h.coefficient(e), *c, "coefficient of {e:?}");
    }
    assert_eq!(h.coefficient_sum(), 24);
    println!("criterion 1 (golden polynomial, A3 with empty J): PASS");
}

#[test]
fn criterion_2_golden_family_two_generators() {
    for n in 3..=6usize {
        let g = group(&format!("A{n}"));
        let j = Subset::from_nodes(3..=n);
        let ds = DescentSystem::compute(&g, j, BUDGET).unwrap();
        assert_eq!(ds.quotient().len(), n * (n + 1));
        for p in 0..=n {
            for q in 1..=n {
                let w = g.element_from_word(&ap_bq_word(p, q)).unwrap();
                let idx = ds.quotient().min_rep_index(&w).unwrap();
                assert!(ds.quotient().is_minimal_rep(&w).unwrap());
                let nu1 = u32::from(p < q);
                assert_eq!(ds.nu(idx, 1), nu1, "nu_1(a_{p} b_{q}), n={n}");
                assert_eq!(ds.nu(idx, 2), (n - q) as u32, "nu_2(a_{p} b_{q}), n={n}");
            }
        }
        let mut expect = MultiPolynomial::new(vec![1, 2]);
        for k in 1..=n as u32 {
            expect.add_term(vec![1, n as u32 - k], k as u64);
            expect.add_term(vec![0, n as u32 - k], (n as u32 + 1 - k) as u64);
        }
        assert_eq!(ds.h_polynomial(), expect, "H(t1,t2) for n={n}");
    }
    println!("criterion 2 (golden family, A_n with J = {{s3..sn}}, n=3..6): PASS");
}

#[test]
fn criterion_3_golden_chain() {
    for n in 3..=6usize {
        let g = group(&format!("A{n}"));
        let j = Subset::from_nodes(2..=n);
        let ds = DescentSystem::compute(&g, j, BUDGET).unwrap();
        let q = ds.quotient();

        // W^J is the chain 1 < s1 < s2 s1 < ... < s_n .. s_1
        assert_eq!(q.len(), n + 1);
        for k in 0..=n {
            let expect: Vec<u8> = (1..=k).rev().map(|x| x as u8).collect();
            assert_eq!(q.word(k as u32), expect.as_slice(), "a_{k} word, n={n}");
            assert_eq!(q.length(k as u32), k as u32);
        }

        // S^J = W^J minus the identity
        let members: Vec<u32> = ds.sj_members().map(|(_, r)| r).collect();
        assert_eq!(members, (1..=n as u32).collect::<Vec<_>>());

        // A^J(a_j) = { r_m : m > j } and the three displayed cases
        for jj in 0..=n as u32 {
            assert_eq!(ds.ascent_set(jj), (jj + 1..=n as u32).collect::<Vec<_>>());
            for i in 1..=n as u32 {
                let target = ds.target(jj, i);
                let expect = if i == 1 && i <= jj {
                    0 // (a_j r_1)_0 = 1
                } else if i <= jj {
                    i - 1 // (a_j r_i)_0 = a_{i-1}
                } else {
                    i // (a_j r_i)_0 = a_i
                };
                assert_eq!(target, expect, "(a_{jj} r_{i})_0, n={n}");
                let expected_kind = if i <= jj {
                    AscentDescent::Descent
                } else {
                    AscentDescent::Ascent
                };
                assert_eq!(ds.ascent_descent(jj, i), expected_kind);
            }
        }
    }
    println!("criterion 3 (golden chain, A_n with J = {{s2..sn}}, n=3..6): PASS");
}

#[test]
fn criterion_4_classification_lists() {
    let exact = [
        "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5",
        "D6", "E6", "F4", "G2",
    ];
    for name in exact {
        let d = diagram(name);
        assert_eq!(
            enumerate_smooth(&d),
            reference_smooth_subsets(d.diagram_type()),
            "{name}"
        );
    }

    let e7 = diagram("E7");
    assert!(
        diff_against_reference(&e7).is_empty(),
        "E7 diff must be empty"
    );

    // The tabulated E8 list deviates from the diagram criterion in exactly
    // two entries; pin the diff precisely and confirm both sides through
    // the independent |S^J| = |S| characterization.
    let e8 = diagram("E8");
    let diff = diff_against_reference(&e8);
    assert_eq!(diff.only_in_reference, vec![subset(&[1, 2, 5, 6])]);
    assert_eq!(diff.only_in_enumeration, vec![subset(&[1, 2, 3, 7, 8])]);
    assert_ne!(
        count_edges_at_base(&e8, subset(&[1, 2, 5, 6]))
            .unwrap()
            .count,
        8,
        "{{s1,s2,s5,s6}} fails |S^J| = |S| in E8"
    );
    assert_eq!(
        count_edges_at_base(&e8, subset(&[1, 2, 3, 7, 8]))
            .unwrap()
            .count,
        8,
        "{{s1,s2,s3,s7,s8}} satisfies |S^J| = |S| in E8"
    );
    println!("criterion 4 (classification lists; E7 exact, E8 diff pinned to the two known entries): PASS");
}

const EXHAUSTIVE_RANGE: &[&str] = &[
    "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "F4", "G2",
];

#[test]
fn criterion_5_edge_count_formula() {
    let a3 = diagram("A3");
    let c3 = diagram("C3");
    for (d, j, expect) in [
        (&a3, subset(&[1, 3]), 4),
        (&c3, subset(&[2, 3]), 4),
        (&a3, subset(&[1, 2]), 3),
    ] {
        let r = count_edges_at_base(d, j).unwrap();
        assert!(r.via_formula);
        assert_eq!(r.count, expect);
    }
    for name in EXHAUSTIVE_RANGE {
        let d = diagram(name);
        let g = WeylGroup::new(d.clone());
        for j in proper_subsets(d.rank()) {
            let ds = DescentSystem::compute(&g, j, BUDGET).unwrap();
            let r = count_edges_at_base(&d, j).unwrap();
            assert_eq!(r.count as usize, ds.sj_size(), "{name} J={j}");
        }
    }
    println!("criterion 5 (edge-count formula = |S^J|, exhaustive): PASS");
}

#[test]
fn criterion_6_smoothness_iff_full_sj() {
    for name in EXHAUSTIVE_RANGE {
        let d = diagram(name);
        let g = WeylGroup::new(d.clone());
        for j in proper_subsets(d.rank()) {
            let ds = DescentSystem::compute(&g, j, BUDGET).unwrap();
            let smooth = is_combinatorially_smooth(&d, j).unwrap().smooth;
            assert_eq!(smooth, ds.sj_size() == d.rank(), "{name} J={j}");
        }
    }
    println!("criterion 6 (combinatorially smooth iff |S^J| = |S|, exhaustive): PASS");
}

#[test]
fn criterion_7_dichotomy() {
    for name in ["A1", "A2", "A3", "A4", "B2", "B3", "G2"] {
        let g = group(name);
        let oracle = BruhatOracle::new(&g, BUDGET).unwrap();
        for j in proper_subsets(g.rank()) {
            let ds = DescentSystem::compute(&g, j, BUDGET).unwrap();
            for w in 0..ds.quotient().len() as u32 {
                let we = ds.quotient().element(w);
                let mut ascents = 0usize;
                let mut descents = 0usize;
                for (_, r) in ds.sj_members() {
                    let m = ds.target(w, r);
                    assert_ne!(m, w, "{name} J={j}: (wr)_0 = w");
                    let me = ds.quotient().element(m);
                    let up = oracle.leq(&we, &me);
                    let down = oracle.leq(&me, &we);
                    assert!(up ^ down, "{name} J={j}: incomparable or equal pair");
                    match ds.ascent_descent(w, r) {
                        AscentDescent::Ascent => ascents += 1,
                        AscentDescent::Descent => descents += 1,
                    }
                }
                assert_eq!(ascents + descents, ds.sj_size(), "{name} J={j}: partition");
            }
        }
    }
    println!("criterion 7 (dichotomy under the cover-BFS comparator): PASS");
}

#[test]
fn criterion_8_polytope_bookkeeping() {
    // golden values for A3
    let a3 = diagram("A3");
    let fv = crosslattice::face_vector(&a3, Subset::empty()).unwrap();
    assert_eq!(fv.f, vec![24, 36, 14]);
    assert_eq!(fv.h, vec![1, 11, 11, 1]);
    let g = group("A3");
    let ds = DescentSystem::compute(&g, Subset::empty(), BUDGET).unwrap();
    let specialized: Vec<i64> = ds
        .h_polynomial()
        .specialize()
        .iter()
        .map(|&x| x as i64)
        .collect();
    assert_eq!(fv.h, specialized, "h agrees with H(t,t,t)");

    for name in EXHAUSTIVE_RANGE {
        let d = diagram(name);
        let g = WeylGroup::new(d.clone());
        let euler = 1 - if d.rank().is_multiple_of(2) {
            1i64
        } else {
            -1i64
        };
        for j in proper_subsets(d.rank()) {
            let fv = crosslattice::face_vector(&d, j).unwrap();
            assert_eq!(fv.euler_sum(), euler, "{name} J={j}: Euler relation");
            let ds = DescentSystem::compute(&g, j, BUDGET).unwrap();
            assert_eq!(fv.f[0] as usize, ds.quotient().len(), "{name} J={j}: f_0");
            if d.rank() >= 2 {
                let pair_count: u64 = (0..ds.quotient().len() as u32)
                    .map(|w| ds.nu_total(w) as u64)
                    .sum();
                assert_eq!(fv.f[1], pair_count, "{name} J={j}: f_1 = sum of nu");
                if is_combinatorially_smooth(&d, j).unwrap().smooth {
                    assert_eq!(
                        2 * fv.f[1],
                        d.rank() as u64 * fv.f[0],
                        "{name} J={j}: simple polytope degree"
                    );
                }
            }
        }
    }
    // the Euler relation alone is closed-form, so sweep it through rank 6
    for name in ["A6", "B6", "C6", "D6", "E6"] {
        let d = diagram(name);
        for j in proper_subsets(d.rank()) {
            let fv = crosslattice::face_vector(&d, j).unwrap();
            assert_eq!(fv.euler_sum(), 0, "{name} J={j}: Euler relation");
        }
    }
    // the degree relation is formula-only, so it extends through E8
    for name in ["D6", "E6", "E7", "E8"] {
        let d = diagram(name);
        for j in enumerate_smooth(&d) {
            let fv = crosslattice::face_vector(&d, j).unwrap();
            assert_eq!(2 * fv.f[1], d.rank() as u64 * fv.f[0], "{name} J={j}");
        }
    }
    println!("criterion 8 (Euler relation, f_0, simple-polytope degrees, A3 goldens): PASS");
}

#[test]
fn criterion_9_oracle_agreement() {
    for name in ["A1", "A2", "A3", "B2", "B3", "G2"] {
        let g = group(name);
        let oracle = BruhatOracle::new(&g, BUDGET).unwrap();
        for u in oracle.elements() {
            for v in oracle.elements() {
                assert_eq!(
                    g.bruhat_leq(u, v).unwrap(),
                    oracle.leq(u, v),
                    "{name}: {u} vs {v}"
                );
            }
        }
    }

    let rank_at_most_6 = [
        "A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5", "C6",
        "D4", "D5", "D6", "E6", "F4", "G2",
    ];
    for name in rank_at_most_6 {
        let d = diagram(name);
        let g = WeylGroup::new(d.clone());
        for j in enumerate_smooth(&d) {
            let ds = DescentSystem::compute(&g, j, BUDGET).unwrap();
            for &s in ds.complement() {
                let chain = chain_formula_sjs(&g, j, s).unwrap();
                let mut got: Vec<u32> = chain
                    .iter()
                    .map(|w| ds.quotient().min_rep_index(w).unwrap())
                    .collect();
                got.sort_unstable();
                assert_eq!(
                    ds.part(s).unwrap(),
                    got.as_slice(),
                    "{name} J={j} s{s}: chain formula"
                );
            }
        }
    }
    println!("criterion 9 (greedy subword vs cover-BFS; chain formula vs enumeration): PASS");
}
