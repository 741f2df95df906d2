//! Catalogue of the groups and representation tuples behind the reference
//! tables: S6 with its involutory outer twist, A6, M12 with its second
//! 12-point action, the affine group on F₂³ with two complement actions,
//! PSL(3,2) on points and hyperplanes, and the four degree-60 coset actions
//! of S6 on its order-12 subgroups.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::group::PermGroup;
use crate::perm::Perm;
use crate::repr::{Action, Automorphism};

/// Seed used by the catalogue constructors unless the caller picks another.
pub const DEFAULT_SEED: u64 = 20260823;

fn s6_group() -> PermGroup {
    PermGroup::from_generators(
        vec![
            Perm::parse(6, "(1,2)").unwrap(),
            Perm::parse(6, "(1,2,3,4,5,6)").unwrap(),
        ],
        800,
    )
    .expect("symmetric group on six points")
}

/// Representative of the conjugacy class with the given element order, class
/// size, and natural support.
pub fn class_rep(group: &PermGroup, order: u64, size: usize, natural_support: usize) -> u32 {
    group
        .conjugacy_classes()
        .iter()
        .find(|c| {
            c.element_order == order
                && c.size() == size
                && group.element(c.representative).support() == natural_support
        })
        .map(|c| c.representative)
        .expect("conjugacy class with the given signature")
}

/// S6 with its natural action and the twist built from the coset action on a
/// transitive subgroup of order 120.
pub struct S6 {
    pub group: PermGroup,
    pub natural: Action,
    /// element indices of the transitive PGL(2,5)-type subgroup
    pub transitive_120: Vec<u32>,
    /// degree-6 coset action on that subgroup; inequivalent to the natural one
    pub cosets: Action,
    /// involutory outer automorphism
    pub tau: Automorphism,
    /// each element sent to the natural permutation of its `tau`-image
    pub twisted: Action,
}

pub fn s6() -> S6 {
    let group = s6_group();
    assert_eq!(group.order(), 720);
    // x -> x+1, x -> 2x, x -> 1/x on the projective line over F5,
    // with points 0..4 the field and 5 the point at infinity.
    let h_gens = [
        Perm::from_images(vec![1, 2, 3, 4, 0, 5]).unwrap(),
        Perm::from_images(vec![0, 2, 4, 1, 3, 5]).unwrap(),
        Perm::from_images(vec![5, 1, 3, 2, 4, 0]).unwrap(),
    ];
    let mut seen = [false; 6];
    seen[0] = true;
    let mut stack = vec![0u16];
    let mut reached = 1;
    while let Some(p) = stack.pop() {
        for g in &h_gens {
            let q = g.image(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                reached += 1;
                stack.push(q);
            }
        }
    }
    assert_eq!(reached, 6, "the order-120 subgroup must be transitive");
    let h_idx: Vec<u32> = h_gens
        .iter()
        .map(|p| group.index_of(p).expect("generator lies in S6"))
        .collect();
    let transitive_120 = group
        .subgroup_closure(&h_idx, 130)
        .expect("subgroup closure within bound");
    assert_eq!(transitive_120.len(), 120);
    let cosets = Action::from_coset_table(&group, &group.coset_table(&transitive_120));
    let relabelled =
        Automorphism::from_relabelling(&group, &cosets).expect("faithful degree-6 coset action");
    let tau =
        Automorphism::involutory_twist(&group, &relabelled).expect("involutory correction exists");
    let twisted = tau.as_action(&group);
    let natural = Action::natural(&group);
    S6 {
        group,
        natural,
        transitive_120,
        cosets,
        tau,
        twisted,
    }
}

/// A6 with the restriction of the S6 outer twist.
pub struct A6 {
    pub group: PermGroup,
    pub natural: Action,
    pub tau: Automorphism,
    pub twisted: Action,
}

pub fn a6() -> A6 {
    let parent = s6();
    let group = PermGroup::from_generators(
        vec![
            Perm::parse(6, "(1,2,3)").unwrap(),
            Perm::parse(6, "(2,3,4,5,6)").unwrap(),
        ],
        400,
    )
    .expect("alternating group on six points");
    assert_eq!(group.order(), 360);
    let in_parent: Vec<u32> = group
        .elements()
        .iter()
        .map(|p| parent.group.index_of(p).expect("subgroup of S6"))
        .collect();
    debug_assert!(in_parent.windows(2).all(|w| w[0] < w[1]));
    let tau = parent
        .tau
        .restrict(&parent.group, &in_parent, &group)
        .expect("the twist preserves the even subgroup");
    let twisted = tau.as_action(&group);
    let natural = Action::natural(&group);
    A6 {
        group,
        natural,
        tau,
        twisted,
    }
}

/// M12 with its two inequivalent 12-point actions.
pub struct M12 {
    pub group: PermGroup,
    pub natural: Action,
    /// a transitive subgroup of order 7920; its coset action is the second
    /// 12-point representation (point stabilizers are intransitive, so
    /// transitivity pins the other conjugacy class of index-12 subgroups)
    pub second_stabilizer: Vec<u32>,
    pub second: Action,
    /// random pairs tried before the subgroup search succeeded
    pub search_trials: u32,
}

pub fn m12(seed: u64) -> M12 {
    let group = PermGroup::from_generators(
        vec![
            Perm::parse(12, "(1,4)(3,10)(5,11)(6,12)").unwrap(),
            Perm::parse(12, "(1,8,9)(2,3,4)(5,12,11)(6,10,7)").unwrap(),
        ],
        100_000,
    )
    .expect("Mathieu group on twelve points");
    assert_eq!(group.order(), 95_040);
    let n = group.order() as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut search_trials = 0;
    let second_stabilizer = loop {
        search_trials += 1;
        let x = rng.gen_range(0..n);
        let y = rng.gen_range(0..n);
        if let Some(sub) = group.subgroup_closure(&[x, y], 7920) {
            if sub.len() == 7920 && generators_act_transitively(&group, &[x, y]) {
                break sub;
            }
        }
    };
    let table = group.coset_table(&second_stabilizer);
    assert_eq!(table.index(), 12);
    let second = Action::from_coset_table(&group, &table);
    let natural = Action::natural(&group);
    M12 {
        group,
        natural,
        second_stabilizer,
        second,
        search_trials,
    }
}

fn generators_act_transitively(group: &PermGroup, gen_indices: &[u32]) -> bool {
    let degree = group.degree();
    let mut seen = vec![false; degree];
    seen[0] = true;
    let mut stack = vec![0u16];
    let mut reached = 1;
    while let Some(p) = stack.pop() {
        for &g in gen_indices {
            let q = group.element(g).image(p);
            if !seen[q as usize] {
                seen[q as usize] = true;
                reached += 1;
                stack.push(q);
            }
        }
    }
    reached == degree
}

/// The permutation of F₂³ induced by a row vector times an invertible matrix,
/// with points indexed by v₀ + 2v₁ + 4v₂.
fn gf2_row_action(m: [[u8; 3]; 3]) -> Perm {
    let imgs = (0..8u16)
        .map(|i| {
            let v = [i & 1, (i >> 1) & 1, (i >> 2) & 1];
            // v·M is the F₂-combination of the rows of M selected by v
            let mut row = [0u16; 3];
            for (vk, mk) in v.iter().zip(&m) {
                for (w, &e) in row.iter_mut().zip(mk) {
                    *w ^= vk & e as u16;
                }
            }
            row[0] | (row[1] << 1) | (row[2] << 2)
        })
        .collect();
    Perm::from_images(imgs).expect("invertible matrix acts bijectively")
}

fn xor_translation(u: u16) -> Perm {
    Perm::from_images((0..8).map(|i| i ^ u).collect()).expect("translation is a bijection")
}

/// The affine group of F₂³ (order 1344) with coset actions on the two
/// conjugacy classes of linear complements to the translation subgroup.
pub struct Asl32 {
    pub group: PermGroup,
    pub natural: Action,
    /// element indices of the eight translations
    pub translations: Vec<u32>,
    /// the zero-vector stabilizer first, then a representative of the other
    /// complement class found by seeded search
    pub complements: [Vec<u32>; 2],
    pub actions: [Action; 2],
    pub search_trials: u32,
}

pub fn asl32(seed: u64) -> Asl32 {
    let cyclic = gf2_row_action([[0, 1, 0], [0, 0, 1], [1, 0, 0]]);
    let transvection = gf2_row_action([[1, 1, 0], [0, 1, 0], [0, 0, 1]]);
    let group = PermGroup::from_generators(vec![cyclic, transvection, xor_translation(1)], 2000)
        .expect("affine group of the binary cube");
    assert_eq!(group.order(), 1344);
    let mut translations: Vec<u32> = (0..8)
        .map(|u| group.index_of(&xor_translation(u)).expect("translation in group"))
        .collect();
    translations.sort_unstable();
    let linear = group.point_stabilizer(0);
    assert_eq!(linear.len(), 168);

    let translation_set: HashSet<u32> = translations.iter().copied().collect();
    let n = group.order() as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut search_trials = 0;
    let other = loop {
        search_trials += 1;
        let x = rng.gen_range(0..n);
        let y = rng.gen_range(0..n);
        if let Some(sub) = group.subgroup_closure(&[x, y], 168) {
            if sub.len() == 168
                && sub.iter().filter(|i| translation_set.contains(i)).count() == 1
                && !group.subgroups_conjugate(&sub, &linear)
            {
                break sub;
            }
        }
    };
    let actions = [
        Action::from_coset_table(&group, &group.coset_table(&linear)),
        Action::from_coset_table(&group, &group.coset_table(&other)),
    ];
    let natural = Action::natural(&group);
    Asl32 {
        group,
        natural,
        translations,
        complements: [linear, other],
        actions,
        search_trials,
    }
}

type Mat3 = [[u8; 3]; 3];

fn gf2_mat_mul(a: Mat3, b: Mat3) -> Mat3 {
    let mut out = [[0u8; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = 0;
            for k in 0..3 {
                acc ^= a[i][k] & b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

const GF2_ID: Mat3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];

fn gf2_mat_inv(a: Mat3) -> Mat3 {
    // element orders in this group are tiny; walk powers until the identity
    let mut prev = GF2_ID;
    let mut cur = a;
    while cur != GF2_ID {
        prev = cur;
        cur = gf2_mat_mul(cur, a);
    }
    prev
}

/// The simple group of order 168 in its two degree-7 actions: on nonzero
/// vectors of F₂³ and on nonzero functionals.
pub struct Psl32 {
    /// the group as permutations of the seven nonzero vectors
    pub group: PermGroup,
    pub points: Action,
    pub hyperplanes: Action,
}

pub fn psl32() -> Psl32 {
    let mc: Mat3 = [[0, 1, 0], [0, 0, 1], [1, 0, 0]];
    let mt: Mat3 = [[1, 1, 0], [0, 1, 0], [0, 0, 1]];

    // v -> v·M on nonzero row vectors; vector v (1..7) is point v-1
    let point_perm = |m: Mat3| -> Perm {
        let full = gf2_row_action(m);
        Perm::from_images((0..7).map(|i| full.image(i + 1) - 1).collect())
            .expect("nonzero vectors permuted")
    };
    // c -> M⁻¹·c on nonzero column vectors (functionals)
    let hyperplane_perm = |m: Mat3| -> Perm {
        let mi = gf2_mat_inv(m);
        let imgs = (1..8u16)
            .map(|c| {
                let cv = [(c & 1) as u8, ((c >> 1) & 1) as u8, ((c >> 2) & 1) as u8];
                let mut w = 0u16;
                for (i, row) in mi.iter().enumerate() {
                    let bit = row.iter().zip(&cv).fold(0, |b, (e, c)| b ^ (e & c));
                    w |= (bit as u16) << i;
                }
                w - 1
            })
            .collect();
        Perm::from_images(imgs).expect("nonzero functionals permuted")
    };

    let group = PermGroup::from_generators(vec![point_perm(mc), point_perm(mt)], 200)
        .expect("simple group of order 168");
    assert_eq!(group.order(), 168);

    // enumerate the matrices and place each hyperplane image at the element
    // index of its point image (the point action is faithful)
    let mut mats = vec![GF2_ID];
    let mut seen: HashSet<Mat3> = mats.iter().copied().collect();
    let mut qi = 0;
    while qi < mats.len() {
        let a = mats[qi];
        qi += 1;
        for b in [mc, mt] {
            let p = gf2_mat_mul(a, b);
            if seen.insert(p) {
                mats.push(p);
            }
        }
    }
    assert_eq!(mats.len(), 168);
    let mut images: Vec<Option<Perm>> = vec![None; 168];
    for m in mats {
        let i = group
            .index_of(&point_perm(m))
            .expect("point action image in group");
        images[i as usize] = Some(hyperplane_perm(m));
    }
    let hyperplanes = Action::from_images(
        &group,
        images.into_iter().map(|p| p.expect("every element covered")).collect(),
    )
    .expect("degree-7 action");
    let points = Action::natural(&group);
    Psl32 {
        group,
        points,
        hyperplanes,
    }
}

/// S6 with one degree-60 coset action per conjugacy class of order-12
/// subgroups, ordered canonically by where each action's minimal non-identity
/// support lands.
pub struct S6Order12 {
    pub group: PermGroup,
    /// the four coset actions, in slot order 1..4
    pub actions: Vec<Action>,
    /// the chosen subgroup for each slot
    pub subgroups: Vec<Vec<u32>>,
    /// number of conjugates of each chosen subgroup
    pub class_sizes: Vec<usize>,
}

pub fn s6_order12() -> S6Order12 {
    let group = s6_group();
    let subs = group.subgroups_of_order(12);
    assert_eq!(subs.len(), 150);
    let classes = group.subgroup_conjugacy_classes(&subs);
    assert_eq!(classes.len(), 4);
    let mut built: Vec<(usize, Action, Vec<u32>, usize)> = classes
        .iter()
        .map(|class| {
            let rep = subs[class[0]].clone();
            let action = Action::from_coset_table(&group, &group.coset_table(&rep));
            assert_eq!(action.degree(), 60);
            (coset_slot(&group, &action), action, rep, class.len())
        })
        .collect();
    built.sort_by_key(|b| b.0);
    let slots: Vec<usize> = built.iter().map(|b| b.0).collect();
    assert_eq!(slots, vec![1, 2, 3, 4]);
    let mut actions = Vec::new();
    let mut subgroups = Vec::new();
    let mut class_sizes = Vec::new();
    for (_, action, rep, size) in built {
        actions.push(action);
        subgroups.push(rep);
        class_sizes.push(size);
    }
    S6Order12 {
        group,
        actions,
        subgroups,
        class_sizes,
    }
}

/// Which of the four degree-60 representations this is: the minimal
/// non-identity support is 48 on the 3+3 cycles (slot 1) or on the 3-cycles
/// (slot 2), or 44 on the transpositions (slot 3) or on the triple
/// transpositions (slot 4).
fn coset_slot(group: &PermGroup, action: &Action) -> usize {
    let min_support = group
        .conjugacy_classes()
        .iter()
        .map(|c| action.support(c.representative))
        .filter(|&s| s > 0)
        .min()
        .expect("non-trivial action");
    let double_threes = class_rep(group, 3, 40, 6);
    let transpositions = class_rep(group, 2, 15, 2);
    match min_support {
        48 => {
            if action.support(double_threes) == 48 {
                1
            } else {
                2
            }
        }
        44 => {
            if action.support(transpositions) == 44 {
                3
            } else {
                4
            }
        }
        other => panic!("unexpected minimal support {other} for an order-12 coset action"),
    }
}
