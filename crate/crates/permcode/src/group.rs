//! Finite permutation groups by explicit element enumeration.
//!
//! Every group here is small enough to hold all elements in memory (the
//! largest built-in has 95 040 elements of degree 12), so the engine favours
//! simple exhaustive algorithms over stabilizer chains: breadth-first
//! closure, conjugation orbits for classes, and dense coset tables.

use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use thiserror::Error;

use crate::perm::Perm;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("no generators supplied")]
    NoGenerators,
    #[error("generator degree {found} differs from {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("group has more than {0} elements")]
    TooLarge(usize),
}

/// A conjugacy class, stored as sorted indices into the element list.
#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: u32,
    pub members: Vec<u32>,
    pub element_order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A fully enumerated permutation group.
///
/// Elements are sorted lexicographically by image table, so index 0 is
/// always the identity and indices give a canonical element order.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Perm>,
    elements: Vec<Perm>,
    index: HashMap<Perm, u32>,
    classes: OnceLock<Vec<ConjugacyClass>>,
}

impl PermGroup {
    pub fn from_generators(gens: Vec<Perm>, cap: usize) -> Result<PermGroup, GroupError> {
        let degree = gens.first().ok_or(GroupError::NoGenerators)?.degree();
        for g in &gens {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for e in &frontier {
                for g in &gens {
                    let x = e.compose(g);
                    if !seen.contains(&x) {
                        if seen.len() >= cap {
                            return Err(GroupError::TooLarge(cap));
                        }
                        seen.insert(x.clone());
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort_unstable();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        Ok(PermGroup {
            degree,
            gens,
            elements,
            index,
            classes: OnceLock::new(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn generator_indices(&self) -> Vec<u32> {
        self.gens.iter().map(|g| self.index[g]).collect()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn element(&self, i: u32) -> &Perm {
        &self.elements[i as usize]
    }

    /// Index 0 is the identity (the lexicographic minimum).
    pub fn identity_index(&self) -> u32 {
        debug_assert!(self.elements[0].is_identity());
        0
    }

    pub fn index_of(&self, p: &Perm) -> Option<u32> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.index.contains_key(p)
    }

    pub fn compose_idx(&self, a: u32, b: u32) -> u32 {
        let p = self.elements[a as usize].compose(&self.elements[b as usize]);
        self.index[&p]
    }

    pub fn inverse_idx(&self, a: u32) -> u32 {
        self.index[&self.elements[a as usize].inverse()]
    }

    /// Conjugacy classes, sorted by (element order, class size, representative);
    /// computed once and cached.
    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.classes.get_or_init(|| {
            let n = self.elements.len();
            let gen_idx: Vec<u32> = self.generator_indices();
            let gen_inv: Vec<u32> = gen_idx.iter().map(|&g| self.inverse_idx(g)).collect();
            let mut unassigned = vec![true; n];
            let mut classes = Vec::new();
            for start in 0..n as u32 {
                if !unassigned[start as usize] {
                    continue;
                }
                unassigned[start as usize] = false;
                let mut members = vec![start];
                let mut frontier = vec![start];
                while !frontier.is_empty() {
                    let mut next = Vec::new();
                    for &x in &frontier {
                        for (&g, &gi) in gen_idx.iter().zip(&gen_inv) {
                            let y = self.compose_idx(self.compose_idx(gi, x), g);
                            if unassigned[y as usize] {
                                unassigned[y as usize] = false;
                                members.push(y);
                                next.push(y);
                            }
                        }
                    }
                    frontier = next;
                }
                members.sort_unstable();
                classes.push(ConjugacyClass {
                    representative: members[0],
                    element_order: self.elements[members[0] as usize].order(),
                    members,
                });
            }
            classes.sort_by_key(|c| (c.element_order, c.members.len(), c.representative));
            classes
        })
    }

    pub fn orbit(&self, point: u16) -> Vec<u16> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut qi = 0;
        while qi < orbit.len() {
            let p = orbit[qi];
            qi += 1;
            for g in &self.gens {
                let q = g.image(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
        }
        orbit.sort_unstable();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        self.orbit(0).len() == self.degree
    }

    /// Burnside test: transitive with Σ|fix(g)|² = 2|G|.
    pub fn is_two_transitive(&self) -> bool {
        if !self.is_transitive() {
            return false;
        }
        let sum: u64 = self
            .elements
            .iter()
            .map(|p| (p.fixed_points() as u64).pow(2))
            .sum();
        sum == 2 * self.order() as u64
    }

    pub fn point_stabilizer(&self, point: u16) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&i| self.elements[i as usize].image(point) == point)
            .collect()
    }

    /// Closure of the given element indices inside this group; `None` when it
    /// would exceed `cap` elements.
    pub fn subgroup_closure(&self, gen_indices: &[u32], cap: usize) -> Option<Vec<u32>> {
        let mut seen: HashSet<u32> = HashSet::new();
        seen.insert(self.identity_index());
        let mut frontier = vec![self.identity_index()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &e in &frontier {
                for &g in gen_indices {
                    let x = self.compose_idx(e, g);
                    if seen.insert(x) {
                        if seen.len() > cap {
                            return None;
                        }
                        next.push(x);
                    }
                }
            }
            frontier = next;
        }
        let mut v: Vec<u32> = seen.into_iter().collect();
        v.sort_unstable();
        Some(v)
    }

    /// All subgroups of the exact given order, found by closing every pair of
    /// elements whose orders divide it. Complete for 2-generated subgroup
    /// orders (which covers every group of order < 16).
    pub fn subgroups_of_order(&self, target: usize) -> Vec<Vec<u32>> {
        let candidates: Vec<u32> = (0..self.order() as u32)
            .filter(|&i| {
                let o = self.elements[i as usize].order();
                (target as u64).is_multiple_of(o)
            })
            .collect();
        let mut found: HashSet<Vec<u32>> = HashSet::new();
        for (k, &a) in candidates.iter().enumerate() {
            for &b in &candidates[k..] {
                if let Some(sub) = self.subgroup_closure(&[a, b], target) {
                    if sub.len() == target {
                        found.insert(sub);
                    }
                }
            }
        }
        let mut out: Vec<Vec<u32>> = found.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// The subgroup `by⁻¹ · sub · by`, as sorted element indices.
    pub fn conjugate_subgroup(&self, sub: &[u32], by: u32) -> Vec<u32> {
        let byi = self.inverse_idx(by);
        let mut out: Vec<u32> = sub
            .iter()
            .map(|&x| self.compose_idx(self.compose_idx(byi, x), by))
            .collect();
        out.sort_unstable();
        out
    }

    /// Group the given subgroups (each a sorted index list) into conjugacy
    /// classes; returns classes of positions into `subs`, each class sorted,
    /// classes ordered by their smallest subgroup.
    pub fn subgroup_conjugacy_classes(&self, subs: &[Vec<u32>]) -> Vec<Vec<usize>> {
        let pos: HashMap<&[u32], usize> = subs.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let gen_idx = self.generator_indices();
        let mut unassigned = vec![true; subs.len()];
        let mut classes = Vec::new();
        for start in 0..subs.len() {
            if !unassigned[start] {
                continue;
            }
            unassigned[start] = false;
            let mut members = vec![start];
            let mut frontier = vec![start];
            while !frontier.is_empty() {
                let mut next = Vec::new();
                for &s in &frontier {
                    for &g in &gen_idx {
                        let img = self.conjugate_subgroup(&subs[s], g);
                        if let Some(&j) = pos.get(img.as_slice()) {
                            if unassigned[j] {
                                unassigned[j] = false;
                                members.push(j);
                                next.push(j);
                            }
                        }
                    }
                }
                frontier = next;
            }
            members.sort_unstable();
            classes.push(members);
        }
        classes.sort_by_key(|c| subs[c[0]].clone());
        classes
    }

    /// Whether some element of the group conjugates subgroup `a` onto `b`.
    pub fn subgroups_conjugate(&self, a: &[u32], b: &[u32]) -> bool {
        if a.len() != b.len() {
            return false;
        }
        let bset: HashSet<u32> = b.iter().copied().collect();
        for by in 0..self.order() as u32 {
            let byi = self.inverse_idx(by);
            if a.iter().all(|&x| {
                bset.contains(&self.compose_idx(self.compose_idx(byi, x), by))
            }) {
                return true;
            }
        }
        false
    }

    /// Coset table for the right cosets of a subgroup (given as sorted element
    /// indices containing the identity). `coset_of[e]` is the coset index of
    /// element `e`; coset 0 is the subgroup itself.
    pub fn coset_table(&self, subgroup: &[u32]) -> CosetTable {
        debug_assert!(subgroup.contains(&self.identity_index()));
        debug_assert_eq!(self.order() % subgroup.len(), 0);
        let mut coset_of = vec![u32::MAX; self.order()];
        let mut reps = Vec::with_capacity(self.order() / subgroup.len());
        for &h in subgroup {
            coset_of[h as usize] = 0;
        }
        reps.push(self.identity_index());
        let gen_idx = self.generator_indices();
        let mut qi = 0;
        while qi < reps.len() {
            let r = reps[qi];
            qi += 1;
            for &g in &gen_idx {
                let x = self.compose_idx(r, g);
                if coset_of[x as usize] == u32::MAX {
                    let k = reps.len() as u32;
                    reps.push(x);
                    for &h in subgroup {
                        let hx = self.compose_idx(h, x);
                        coset_of[hx as usize] = k;
                    }
                }
            }
        }
        debug_assert!(coset_of.iter().all(|&c| c != u32::MAX));
        CosetTable { reps, coset_of }
    }
}

/// Right-coset decomposition of a group: representative elements plus the
/// coset index of every group element.
pub struct CosetTable {
    pub reps: Vec<u32>,
    pub coset_of: Vec<u32>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.reps.len()
    }

    /// The permutation induced on cosets by right multiplication with `g`.
    pub fn image_of(&self, group: &PermGroup, g: u32) -> Perm {
        let imgs: Vec<u16> = self
            .reps
            .iter()
            .map(|&r| self.coset_of[group.compose_idx(r, g) as usize] as u16)
            .collect();
        Perm::from_images(imgs).expect("coset action is a permutation")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s4() -> PermGroup {
        let gens = vec![
            Perm::parse(4, "(1,2)").unwrap(),
            Perm::parse(4, "(1,2,3,4)").unwrap(),
        ];
        PermGroup::from_generators(gens, 100).unwrap()
    }

    #[test]
    fn closure_of_s4() {
        let g = s4();
        assert_eq!(g.order(), 24);
        assert_eq!(g.degree(), 4);
        assert!(g.element(0).is_identity());
        assert!(g.is_transitive());
        assert!(g.is_two_transitive());
    }

    #[test]
    fn cap_is_enforced() {
        let gens = vec![
            Perm::parse(4, "(1,2)").unwrap(),
            Perm::parse(4, "(1,2,3,4)").unwrap(),
        ];
        match PermGroup::from_generators(gens, 10) {
            Err(GroupError::TooLarge(10)) => {}
            other => panic!("expected TooLarge, got {other:?}", other = other.map(|g| g.order())),
        }
    }

    #[test]
    fn s4_conjugacy_classes() {
        let g = s4();
        let sizes: Vec<(u64, usize)> = g
            .conjugacy_classes()
            .iter()
            .map(|c| (c.element_order, c.size()))
            .collect();
        assert_eq!(sizes, vec![(1, 1), (2, 3), (2, 6), (3, 8), (4, 6)]);
        let total: usize = g.conjugacy_classes().iter().map(|c| c.size()).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn coset_action_on_point_stabilizer_recovers_natural_degree() {
        let g = s4();
        let stab = g.point_stabilizer(0);
        assert_eq!(stab.len(), 6);
        let ct = g.coset_table(&stab);
        assert_eq!(ct.index(), 4);
        // the induced action is faithful and transitive of degree 4
        let imgs: HashSet<Perm> = (0..g.order() as u32).map(|i| ct.image_of(&g, i)).collect();
        assert_eq!(imgs.len(), 24);
    }

    #[test]
    fn subgroup_closure_and_conjugacy() {
        let g = s4();
        let a = g.index_of(&Perm::parse(4, "(1,2)").unwrap()).unwrap();
        let b = g.index_of(&Perm::parse(4, "(3,4)").unwrap()).unwrap();
        let sub = g.subgroup_closure(&[a], 100).unwrap();
        assert_eq!(sub.len(), 2);
        let sub2 = g.subgroup_closure(&[b], 100).unwrap();
        assert!(g.subgroups_conjugate(&sub, &sub2));
        let four = g
            .subgroup_closure(&[a, b], 100)
            .unwrap();
        assert_eq!(four.len(), 4);
        assert!(g.subgroup_closure(&[a, b], 3).is_none());
    }

    #[test]
    fn subgroups_of_order_three_in_s4() {
        let g = s4();
        let subs = g.subgroups_of_order(3);
        assert_eq!(subs.len(), 4);
        let classes = g.subgroup_conjugacy_classes(&subs);
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].len(), 4);
    }

    #[test]
    fn degree_mismatch_rejected() {
        let gens = vec![Perm::identity(3), Perm::identity(4)];
        assert!(matches!(
            PermGroup::from_generators(gens, 10),
            Err(GroupError::DegreeMismatch { .. })
        ));
    }
}
