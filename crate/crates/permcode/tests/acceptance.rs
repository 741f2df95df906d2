//! End-to-end acceptance checks.
//!
//! Each test is one headline claim of the library, verified with exact
//! integer arithmetic (tolerance zero): the published distance pairs, the
//! per-class support tables, the M12 inner distributions, the 35 coset-action
//! multiset minima, brute-force/formula agreement, the structural invariants
//! on built-in and randomly assembled codes, the exact audit of the
//! GF(2^f) slope family, the neighbour orbit structure, and the
//! points-versus-hyperplanes support identity.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use permcode::asl2r;
use permcode::builtin::{self, Asl32, A6, DEFAULT_SEED, M12, Psl32, S6, S6Order12};
use permcode::neighbour;
use permcode::repr::Action;
use permcode::tables;
use permcode::{repetition_min_distance, Code, PermGroup};

fn s6() -> &'static S6 {
    static V: OnceLock<S6> = OnceLock::new();
    V.get_or_init(builtin::s6)
}

fn a6() -> &'static A6 {
    static V: OnceLock<A6> = OnceLock::new();
    V.get_or_init(builtin::a6)
}

fn m12() -> &'static M12 {
    static V: OnceLock<M12> = OnceLock::new();
    V.get_or_init(|| builtin::m12(DEFAULT_SEED))
}

fn asl32() -> &'static Asl32 {
    static V: OnceLock<Asl32> = OnceLock::new();
    V.get_or_init(|| builtin::asl32(DEFAULT_SEED))
}

fn psl32() -> &'static Psl32 {
    static V: OnceLock<Psl32> = OnceLock::new();
    V.get_or_init(builtin::psl32)
}

fn order12() -> &'static S6Order12 {
    static V: OnceLock<S6Order12> = OnceLock::new();
    V.get_or_init(builtin::s6_order12)
}

fn asl24() -> &'static asl2r::SlopeActions {
    static V: OnceLock<asl2r::SlopeActions> = OnceLock::new();
    V.get_or_init(|| asl2r::slope_actions(2).expect("f=2 fits comfortably"))
}

/// (group, repetition tuple, twisted tuple, expected distances)
type PairCase<'a> = (&'a PermGroup, Vec<&'a Action>, Vec<&'a Action>, usize, usize);

#[test]
fn distance_pairs_hold_by_formula_and_brute_force() {
    let s = s6();
    let a = a6();
    let v = asl32();
    let cases: [PairCase; 3] = [
        (
            &s.group,
            vec![&s.natural, &s.natural],
            vec![&s.natural, &s.twisted],
            4,
            8,
        ),
        (
            &a.group,
            vec![&a.natural, &a.natural],
            vec![&a.natural, &a.twisted],
            6,
            8,
        ),
        (
            &v.group,
            vec![&v.actions[0], &v.actions[0]],
            vec![&v.actions[0], &v.actions[1]],
            8,
            12,
        ),
    ];
    for (group, repetition, twisted, expect_rep, expect_tw) in cases {
        assert_eq!(repetition_min_distance(group, &repetition), expect_rep);
        let rep_code = Code::new(group, repetition).unwrap();
        assert_eq!(rep_code.min_distance(), expect_rep);
        assert_eq!(rep_code.min_distance_bruteforce(), expect_rep);
        let tw_code = Code::new(group, twisted).unwrap();
        assert_eq!(tw_code.min_distance(), expect_tw);
        assert_eq!(tw_code.min_distance_bruteforce(), expect_tw);
    }
}

#[test]
fn support_tables_match_reference_cell_for_cell() {
    let reference = tables::Reference::builtin();
    let mismatches: Vec<String> = [
        tables::table_mismatches(&tables::s6_supports(s6()), &reference.s6),
        tables::table_mismatches(&tables::a6_supports(a6()), &reference.a6),
        tables::table_mismatches(&tables::m12_supports(m12()), &reference.m12),
        tables::asl32_mismatches(asl32(), &reference.asl32_pairs),
        tables::order12_mismatches(order12(), &reference.order12_labels, &reference.order12_matrix),
    ]
    .into_iter()
    .flatten()
    .collect();
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn m12_inner_distributions_match_reference() {
    let (twisted, repetition) = tables::m12_distributions(m12());
    let expected_twisted: BTreeMap<usize, u64> =
        [(0, 1), (16, 495), (18, 1760), (20, 15_444), (22, 56_880), (24, 20_460)]
            .into_iter()
            .collect();
    let expected_repetition: BTreeMap<usize, u64> =
        [(0, 1), (16, 3465), (18, 1760), (20, 21_384), (22, 33_120), (24, 35_310)]
            .into_iter()
            .collect();
    assert_eq!(twisted, expected_twisted);
    assert_eq!(repetition, expected_repetition);
    assert_eq!(tables::reference_m12_distributions(), (expected_twisted, expected_repetition));
}

#[test]
fn order12_multiset_minima_match_reference_with_unique_maximum() {
    let computed = tables::order12_multiset_minima(order12());
    assert_eq!(computed, tables::reference_order12_minima());
    let max = computed.iter().map(|(_, d)| *d).max().unwrap();
    assert_eq!(max, 224);
    let at_max: Vec<&str> = computed
        .iter()
        .filter(|(_, d)| *d == max)
        .map(|(m, _)| m.as_str())
        .collect();
    assert_eq!(at_max, vec!["1234"]);
}

#[test]
fn brute_force_distance_agrees_with_formula_on_small_groups() {
    let s = s6();
    let a = a6();
    let p = psl32();
    let v = asl32();
    let q = asl24();
    let h = order12();
    let mut cases: Vec<(&PermGroup, Vec<&Action>)> = vec![
        (&s.group, vec![&s.natural, &s.natural]),
        (&s.group, vec![&s.natural, &s.twisted]),
        (&a.group, vec![&a.natural, &a.natural]),
        (&a.group, vec![&a.natural, &a.twisted]),
        (&p.group, vec![&p.points, &p.points]),
        (&p.group, vec![&p.points, &p.hyperplanes]),
        (&v.group, vec![&v.actions[0], &v.actions[0]]),
        (&v.group, vec![&v.actions[0], &v.actions[1]]),
        (&q.group, vec![&q.actions[0]; 4]),
        (&q.group, q.actions.iter().collect()),
    ];
    for i in 0..4 {
        for j in i..4 {
            for k in j..4 {
                for l in k..4 {
                    cases.push((
                        &h.group,
                        vec![&h.actions[i], &h.actions[j], &h.actions[k], &h.actions[l]],
                    ));
                }
            }
        }
    }
    for (group, actions) in cases {
        let code = Code::new(group, actions).unwrap();
        assert_eq!(code.min_distance(), code.min_distance_bruteforce());
    }
}

/// Exact distance invariance is quadratic in the code size; fall back to a
/// seeded spot check once the full scan would pass a few hundred million
/// comparisons.
fn invariance_holds(code: &Code, rng: &mut ChaCha8Rng) -> bool {
    let work = code.group().order() * code.group().order() * code.word_len();
    if work <= 300_000_000 {
        code.is_distance_invariant()
    } else {
        code.is_distance_invariant_sampled(rng, 5)
    }
}

fn check_structural_invariants(code: &Code, rng: &mut ChaCha8Rng) {
    assert!(code.is_frequency_array());
    assert_eq!(code.distinct_codewords().len(), code.size());
    assert_eq!(code.size(), code.group().order() / code.kernel().len());
    assert!(invariance_holds(code, rng));
    assert!(code.min_distance() >= repetition_min_distance(code.group(), code.actions()));
}

#[test]
fn structural_invariants_hold_on_built_in_and_random_codes() {
    let s = s6();
    let a = a6();
    let m = m12();
    let p = psl32();
    let v = asl32();
    let q = asl24();
    let h = order12();
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);

    let named: Vec<(&PermGroup, Vec<&Action>)> = vec![
        (&s.group, vec![&s.natural, &s.natural]),
        (&s.group, vec![&s.natural, &s.twisted]),
        (&a.group, vec![&a.natural, &a.natural]),
        (&a.group, vec![&a.natural, &a.twisted]),
        (&m.group, vec![&m.natural, &m.natural]),
        (&m.group, vec![&m.natural, &m.second]),
        (&p.group, vec![&p.points, &p.hyperplanes]),
        (&v.group, vec![&v.actions[0], &v.actions[0]]),
        (&v.group, vec![&v.actions[0], &v.actions[1]]),
        (&q.group, q.actions.iter().collect()),
        (&h.group, h.actions.iter().collect()),
    ];
    for (group, actions) in named {
        let code = Code::new(group, actions).unwrap();
        check_structural_invariants(&code, &mut rng);
    }

    let pools: Vec<(&PermGroup, Vec<&Action>)> = vec![
        (&s.group, vec![&s.natural, &s.cosets, &s.twisted]),
        (&a.group, vec![&a.natural, &a.twisted]),
        (&m.group, vec![&m.natural, &m.second]),
        (&p.group, vec![&p.points, &p.hyperplanes]),
        (&v.group, vec![&v.natural, &v.actions[0], &v.actions[1]]),
        (&q.group, q.actions.iter().collect()),
        (&h.group, h.actions.iter().collect()),
    ];
    for _ in 0..50 {
        let (group, pool) = &pools[rng.gen_range(0..pools.len())];
        let len = rng.gen_range(2..=4);
        let actions: Vec<&Action> = (0..len)
            .map(|_| pool[rng.gen_range(0..pool.len())])
            .collect();
        let code = Code::new(group, actions).unwrap();
        check_structural_invariants(&code, &mut rng);
    }
}

#[test]
fn slope_family_audit_is_exact_for_small_exponents() {
    for f in [2, 3] {
        let light = asl2r::light_audit(f).unwrap();
        assert!(light.failures.is_empty(), "f={f}: {:?}", light.failures);
        assert!(light.slopes_pairwise_nonconjugate);
        let full = asl2r::full_audit(f, false).unwrap();
        assert!(full.failures.is_empty(), "f={f}: {:?}", full.failures);
        let r = full.r as usize;
        assert_eq!(full.group_order, r * r * r * (r * r - 1));
        assert_eq!(full.min_distance, r * (r * r - r));
    }

    // at f = 2 the permutation form is small enough to double-check that the
    // four coset actions are pairwise inequivalent as actions
    let q = asl24();
    for i in 0..4 {
        for j in i + 1..4 {
            assert!(!q.actions[i].equivalent_to(&q.actions[j], &q.group));
        }
    }
    let audit = asl2r::full_audit(2, false).unwrap();
    let frozen: BTreeMap<usize, u64> = [(0, 1), (48, 60), (60, 704), (64, 195)].into_iter().collect();
    assert_eq!(audit.distribution, frozen);
}

#[test]
fn neighbour_sets_have_frozen_orbit_structure() {
    let bundle = s6();
    let whole = neighbour::neighbour_orbits(bundle, &bundle.group);
    assert_eq!(whole.code_size, 720);
    assert_eq!(whole.neighbour_count, 43_200);
    assert_eq!(whole.orbit_sizes_with_swap, vec![43_200]);
    assert_eq!(whole.orbit_sizes_without_swap, vec![21_600, 21_600]);

    let even = neighbour::neighbour_orbits(bundle, &a6().group);
    assert_eq!(even.code_size, 360);
    assert_eq!(even.neighbour_count, 21_600);
    assert_eq!(even.orbit_sizes_with_swap, vec![21_600]);
    assert_eq!(even.orbit_sizes_without_swap, vec![10_800, 10_800]);
}

#[test]
fn point_and_hyperplane_actions_share_all_supports() {
    let p = psl32();
    assert!((0..p.group.order() as u32).all(|i| p.points.support(i) == p.hyperplanes.support(i)));
    let from_points = Code::new(&p.group, vec![&p.points]).unwrap().inner_distribution();
    let from_hyperplanes = Code::new(&p.group, vec![&p.hyperplanes])
        .unwrap()
        .inner_distribution();
    let frozen: BTreeMap<usize, u64> = [(0, 1), (4, 21), (6, 98), (7, 48)].into_iter().collect();
    assert_eq!(from_points, frozen);
    assert_eq!(from_hyperplanes, frozen);
}
