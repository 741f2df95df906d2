//! Permutation representations of an enumerated group, stored as the full
//! table of image permutations (one per group element), plus group
//! automorphisms as index maps.

use std::collections::HashSet;

use rand::Rng;
use thiserror::Error;

use crate::group::{CosetTable, PermGroup};
use crate::perm::Perm;

#[derive(Debug, Error)]
pub enum ReprError {
    #[error("action degree {found} differs from expected {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("relabelling is not a bijection onto the group")]
    NotBijective,
    #[error("map does not preserve products on a sampled pair")]
    NotAHomomorphism,
    #[error("no inner correction makes this automorphism involutory")]
    NoInvolutoryCorrection,
}

/// A representation of the group on some finite domain: for each element
/// index, the permutation it induces.
#[derive(Clone)]
pub struct Action {
    degree: usize,
    images: Vec<Perm>,
}

impl Action {
    /// The group acting on its own points.
    pub fn natural(group: &PermGroup) -> Action {
        Action {
            degree: group.degree(),
            images: group.elements().to_vec(),
        }
    }

    /// The right-coset action determined by a coset table.
    pub fn from_coset_table(group: &PermGroup, table: &CosetTable) -> Action {
        Action {
            degree: table.index(),
            images: (0..group.order() as u32)
                .map(|i| table.image_of(group, i))
                .collect(),
        }
    }

    /// Build from an arbitrary per-element assignment. The caller promises
    /// the assignment is a homomorphism; a seeded spot check is available via
    /// [`Action::verify_homomorphism`].
    pub fn from_images(group: &PermGroup, images: Vec<Perm>) -> Result<Action, ReprError> {
        if images.len() != group.order() {
            return Err(ReprError::DegreeMismatch {
                expected: group.order(),
                found: images.len(),
            });
        }
        let degree = images[0].degree();
        for p in &images {
            if p.degree() != degree {
                return Err(ReprError::DegreeMismatch {
                    expected: degree,
                    found: p.degree(),
                });
            }
        }
        Ok(Action { degree, images })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn image(&self, element: u32) -> &Perm {
        &self.images[element as usize]
    }

    pub fn support(&self, element: u32) -> usize {
        self.images[element as usize].support()
    }

    pub fn fixed_points(&self, element: u32) -> usize {
        self.images[element as usize].fixed_points()
    }

    /// Elements acting trivially.
    pub fn kernel(&self, group: &PermGroup) -> Vec<u32> {
        (0..group.order() as u32)
            .filter(|&i| self.images[i as usize].is_identity())
            .collect()
    }

    pub fn is_faithful(&self, group: &PermGroup) -> bool {
        self.kernel(group).len() == 1
    }

    /// Minimum support over elements outside the kernel (the minimal degree
    /// of the image group).
    pub fn minimal_degree(&self, group: &PermGroup) -> usize {
        group
            .conjugacy_classes()
            .iter()
            .map(|c| self.support(c.representative))
            .filter(|&s| s > 0)
            .min()
            .expect("action of a non-trivial group")
    }

    pub fn is_transitive(&self, group: &PermGroup) -> bool {
        let gen_images: Vec<&Perm> = group
            .generator_indices()
            .iter()
            .map(|&g| self.image(g))
            .collect();
        let mut seen = vec![false; self.degree];
        seen[0] = true;
        let mut frontier = vec![0u16];
        let mut count = 1;
        while let Some(p) = frontier.pop() {
            for g in &gen_images {
                let q = g.image(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    count += 1;
                    frontier.push(q);
                }
            }
        }
        count == self.degree
    }

    /// Burnside test over all elements: transitive and Σ|fix|² = 2|G|.
    pub fn is_two_transitive(&self, group: &PermGroup) -> bool {
        if !self.is_transitive(group) {
            return false;
        }
        let sum: u64 = self
            .images
            .iter()
            .map(|p| (p.fixed_points() as u64).pow(2))
            .sum();
        sum == 2 * group.order() as u64
    }

    /// Seeded product-preservation spot check.
    pub fn verify_homomorphism(&self, group: &PermGroup, rng: &mut impl Rng, samples: usize) -> bool {
        let n = group.order() as u32;
        (0..samples).all(|_| {
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(0..n);
            let ab = group.compose_idx(a, b);
            self.image(a).compose(self.image(b)) == *self.image(ab)
        })
    }

    /// Whether two transitive actions of the same group are equivalent, i.e.
    /// their point stabilizers are conjugate.
    pub fn equivalent_to(&self, other: &Action, group: &PermGroup) -> bool {
        if self.degree != other.degree {
            return false;
        }
        let stab_a = self.point_stabilizer(group, 0);
        let stab_b = other.point_stabilizer(group, 0);
        group.subgroups_conjugate(&stab_a, &stab_b)
    }

    pub fn point_stabilizer(&self, group: &PermGroup, point: u16) -> Vec<u32> {
        (0..group.order() as u32)
            .filter(|&i| self.images[i as usize].image(point) == point)
            .collect()
    }
}

/// A bijective index map on a group's elements that preserves products.
#[derive(Clone)]
pub struct Automorphism {
    map: Vec<u32>,
}

impl Automorphism {
    /// Relabel a faithful degree-preserving action as a self-map: element `t`
    /// goes to the group element whose image table equals the action of `t`.
    pub fn from_relabelling(group: &PermGroup, action: &Action) -> Result<Automorphism, ReprError> {
        if action.degree() != group.degree() {
            return Err(ReprError::DegreeMismatch {
                expected: group.degree(),
                found: action.degree(),
            });
        }
        let mut map = Vec::with_capacity(group.order());
        let mut hit: HashSet<u32> = HashSet::new();
        for i in 0..group.order() as u32 {
            let target = group
                .index_of(action.image(i))
                .ok_or(ReprError::NotBijective)?;
            if !hit.insert(target) {
                return Err(ReprError::NotBijective);
            }
            map.push(target);
        }
        Ok(Automorphism { map })
    }

    pub fn inner(group: &PermGroup, by: u32) -> Automorphism {
        let by_perm = group.element(by).clone();
        let map = (0..group.order() as u32)
            .map(|i| {
                group
                    .index_of(&group.element(i).conjugate(&by_perm))
                    .expect("conjugation stays in the group")
            })
            .collect();
        Automorphism { map }
    }

    pub fn apply(&self, element: u32) -> u32 {
        self.map[element as usize]
    }

    pub fn apply_perm(&self, group: &PermGroup, p: &Perm) -> Perm {
        let i = group.index_of(p).expect("element of the group");
        group.element(self.map[i as usize]).clone()
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            map: self.map.iter().map(|&v| other.map[v as usize]).collect(),
        }
    }

    pub fn is_involution(&self) -> bool {
        self.map
            .iter()
            .enumerate()
            .all(|(i, &v)| self.map[v as usize] == i as u32)
    }

    /// Exhaustive product-preservation check (quadratic in the group order).
    pub fn is_homomorphism(&self, group: &PermGroup) -> bool {
        let n = group.order() as u32;
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.map[group.compose_idx(a, b) as usize]
                    == group.compose_idx(self.map[a as usize], self.map[b as usize])
            })
        })
    }

    /// Whether the map equals conjugation by some group element.
    pub fn is_inner(&self, group: &PermGroup) -> bool {
        let n = group.order() as u32;
        (0..n).any(|s| {
            let inner = Automorphism::inner(group, s);
            inner.map == self.map
        })
    }

    /// Search for an inner twist making `phi` involutory: the first element
    /// `s` (in canonical order) with `(conj_s ∘ phi)² = id`.
    pub fn involutory_twist(group: &PermGroup, phi: &Automorphism) -> Result<Automorphism, ReprError> {
        let gen_idx = group.generator_indices();
        for s in 0..group.order() as u32 {
            let candidate = phi.compose(&Automorphism::inner(group, s));
            if gen_idx
                .iter()
                .all(|&g| candidate.apply(candidate.apply(g)) == g)
                && candidate.is_involution()
            {
                return Ok(candidate);
            }
        }
        Err(ReprError::NoInvolutoryCorrection)
    }

    /// The action sending each element to the natural permutation of its
    /// image under the automorphism.
    pub fn as_action(&self, group: &PermGroup) -> Action {
        Action {
            degree: group.degree(),
            images: self
                .map
                .iter()
                .map(|&v| group.element(v).clone())
                .collect(),
        }
    }

    /// Restriction to a subgroup (given as sorted element indices of the
    /// parent) that is preserved by the map, re-indexed to the subgroup's own
    /// enumerated group.
    pub fn restrict(
        &self,
        parent: &PermGroup,
        sub_elements: &[u32],
        subgroup: &PermGroup,
    ) -> Result<Automorphism, ReprError> {
        let mut map = Vec::with_capacity(subgroup.order());
        for i in 0..subgroup.order() as u32 {
            let in_parent = parent
                .index_of(subgroup.element(i))
                .ok_or(ReprError::NotBijective)?;
            let image = self.map[in_parent as usize];
            if sub_elements.binary_search(&image).is_err() {
                return Err(ReprError::NotBijective);
            }
            let back = subgroup
                .index_of(parent.element(image))
                .ok_or(ReprError::NotBijective)?;
            map.push(back);
        }
        Ok(Automorphism { map })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    fn s4() -> PermGroup {
        PermGroup::from_generators(
            vec![
                Perm::parse(4, "(1,2)").unwrap(),
                Perm::parse(4, "(1,2,3,4)").unwrap(),
            ],
            100,
        )
        .unwrap()
    }

    #[test]
    fn natural_action_is_faithful_and_transitive() {
        let g = s4();
        let nat = Action::natural(&g);
        assert!(nat.is_faithful(&g));
        assert!(nat.is_transitive(&g));
        assert!(nat.is_two_transitive(&g));
        assert_eq!(nat.minimal_degree(&g), 2);
    }

    #[test]
    fn coset_action_on_stabilizer_is_equivalent_to_natural() {
        let g = s4();
        let nat = Action::natural(&g);
        let stab = g.point_stabilizer(1);
        let act = Action::from_coset_table(&g, &g.coset_table(&stab));
        assert_eq!(act.degree(), 4);
        assert!(act.is_faithful(&g));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        assert!(act.verify_homomorphism(&g, &mut rng, 200));
        assert!(act.equivalent_to(&nat, &g));
    }

    #[test]
    fn coset_action_with_kernel() {
        // V4 inside S4 is normal; the coset action of S4 on A4 has kernel A4.
        let g = s4();
        let a = g.index_of(&Perm::parse(4, "(1,2,3)").unwrap()).unwrap();
        let b = g.index_of(&Perm::parse(4, "(2,3,4)").unwrap()).unwrap();
        let a4 = g.subgroup_closure(&[a, b], 100).unwrap();
        assert_eq!(a4.len(), 12);
        let act = Action::from_coset_table(&g, &g.coset_table(&a4));
        assert_eq!(act.degree(), 2);
        assert_eq!(act.kernel(&g).len(), 12);
    }

    #[test]
    fn inner_automorphisms_are_inner() {
        let g = s4();
        let phi = Automorphism::inner(&g, 5);
        assert!(phi.is_homomorphism(&g));
        assert!(phi.is_inner(&g));
        // S4 has no outer automorphisms, so every relabelling of the natural
        // action composed with inner maps stays inner; spot the identity too.
        let id = Automorphism::from_relabelling(&g, &Action::natural(&g)).unwrap();
        assert!(id.is_involution());
        assert!(id.is_inner(&g));
    }

    #[test]
    fn involutory_twist_finds_identity_for_trivial_map() {
        let g = s4();
        let id = Automorphism::from_relabelling(&g, &Action::natural(&g)).unwrap();
        let fixed = Automorphism::involutory_twist(&g, &id).unwrap();
        assert!(fixed.is_involution());
        assert!(fixed.is_homomorphism(&g));
    }
}
