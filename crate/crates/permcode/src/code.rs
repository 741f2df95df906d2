//! Codes generated by a group and a tuple of its representations.
//!
//! A codeword is the concatenation, over the tuple, of the image tables of
//! one group element. With `r` copies of a single representation this is the
//! repetition construction; with distinct representations it is the twisted
//! construction. All distance computations are exact integer arithmetic.

use std::collections::BTreeMap;

use rand::Rng;
use thiserror::Error;

use crate::group::PermGroup;
use crate::repr::Action;

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("a code needs at least one representation")]
    EmptyTuple,
    #[error("representation degrees differ: {0} vs {1}")]
    MixedDegrees(usize, usize),
}

pub fn hamming(a: &[u16], b: &[u16]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// The code generated by a group and an ordered tuple of equal-degree
/// representations.
pub struct Code<'a> {
    group: &'a PermGroup,
    actions: Vec<&'a Action>,
}

impl<'a> Code<'a> {
    pub fn new(group: &'a PermGroup, actions: Vec<&'a Action>) -> Result<Code<'a>, CodeError> {
        let first = actions.first().ok_or(CodeError::EmptyTuple)?.degree();
        for a in &actions {
            if a.degree() != first {
                return Err(CodeError::MixedDegrees(first, a.degree()));
            }
        }
        Ok(Code { group, actions })
    }

    pub fn group(&self) -> &PermGroup {
        self.group
    }

    pub fn actions(&self) -> &[&'a Action] {
        &self.actions
    }

    /// Symbol count per block.
    pub fn q(&self) -> usize {
        self.actions[0].degree()
    }

    /// Number of blocks.
    pub fn blocks(&self) -> usize {
        self.actions.len()
    }

    pub fn word_len(&self) -> usize {
        self.q() * self.blocks()
    }

    pub fn codeword(&self, element: u32) -> Vec<u16> {
        let mut w = Vec::with_capacity(self.word_len());
        for a in &self.actions {
            w.extend_from_slice(a.image(element).images());
        }
        w
    }

    /// Elements acting trivially in every block; codewords are in bijection
    /// with the cosets of this kernel.
    pub fn kernel(&self) -> Vec<u32> {
        (0..self.group.order() as u32)
            .filter(|&i| self.actions.iter().all(|a| a.support(i) == 0))
            .collect()
    }

    pub fn size(&self) -> usize {
        self.group.order() / self.kernel().len()
    }

    pub fn distinct_codewords(&self) -> Vec<Vec<u16>> {
        let mut words: Vec<Vec<u16>> = (0..self.group.order() as u32)
            .map(|i| self.codeword(i))
            .collect();
        words.sort_unstable();
        words.dedup();
        words
    }

    /// Distance from the base codeword to the codeword of `element`: the sum
    /// of the supports across the tuple.
    pub fn distance_from_base(&self, element: u32) -> usize {
        self.actions.iter().map(|a| a.support(element)).sum()
    }

    /// Minimum distance via the support-sum formula, evaluated on conjugacy
    /// class representatives (supports are constant on classes).
    pub fn min_distance(&self) -> usize {
        self.group
            .conjugacy_classes()
            .iter()
            .map(|c| self.distance_from_base(c.representative))
            .filter(|&d| d > 0)
            .min()
            .expect("code with more than one codeword")
    }

    /// Minimum distance via the support-sum formula over every element,
    /// without using class structure.
    pub fn min_distance_full_scan(&self) -> usize {
        (0..self.group.order() as u32)
            .map(|i| self.distance_from_base(i))
            .filter(|&d| d > 0)
            .min()
            .expect("code with more than one codeword")
    }

    /// Minimum distance by comparing all pairs of distinct codewords.
    pub fn min_distance_bruteforce(&self) -> usize {
        let words = self.distinct_codewords();
        let mut best = usize::MAX;
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let d = hamming(&words[i], &words[j]);
                if d < best {
                    best = d;
                }
            }
        }
        best
    }

    /// Inner distance distribution: `a_d` = ordered codeword pairs at
    /// distance `d`, divided by the code size. For these group codes the
    /// distribution equals the distance histogram from the base codeword.
    pub fn inner_distribution(&self) -> BTreeMap<usize, u64> {
        let kernel_size = self.kernel().len() as u64;
        let mut hist: BTreeMap<usize, u64> = BTreeMap::new();
        for i in 0..self.group.order() as u32 {
            *hist.entry(self.distance_from_base(i)).or_insert(0) += 1;
        }
        for v in hist.values_mut() {
            debug_assert_eq!(*v % kernel_size, 0);
            *v /= kernel_size;
        }
        hist
    }

    /// Inner distance distribution computed from all ordered pairs, as a
    /// cross-check of distance invariance.
    pub fn inner_distribution_allpairs(&self) -> BTreeMap<usize, u64> {
        let words = self.distinct_codewords();
        let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
        for i in 0..words.len() {
            for j in 0..words.len() {
                *counts.entry(hamming(&words[i], &words[j])).or_insert(0) += 1;
            }
        }
        let n = words.len() as u64;
        for v in counts.values_mut() {
            assert_eq!(*v % n, 0, "not distance invariant");
            *v /= n;
        }
        counts
    }

    /// Every symbol appears exactly `blocks` times in every codeword.
    pub fn is_frequency_array(&self) -> bool {
        let q = self.q();
        let r = self.blocks();
        (0..self.group.order() as u32).all(|i| {
            let w = self.codeword(i);
            let mut counts = vec![0usize; q];
            for &s in &w {
                counts[s as usize] += 1;
            }
            counts.iter().all(|&c| c == r)
        })
    }

    /// All codewords see the same multiset of distances to the rest of the
    /// code (checked exhaustively).
    pub fn is_distance_invariant(&self) -> bool {
        let words = self.distinct_codewords();
        let base_profile = Self::profile(&words, 0);
        (1..words.len()).all(|i| Self::profile(&words, i) == base_profile)
    }

    /// Distance invariance checked from `samples` random codewords instead
    /// of all of them, for larger codes.
    pub fn is_distance_invariant_sampled(&self, rng: &mut impl Rng, samples: usize) -> bool {
        let words = self.distinct_codewords();
        let base_profile = Self::profile(&words, 0);
        (0..samples).all(|_| {
            let i = rng.gen_range(0..words.len());
            Self::profile(&words, i) == base_profile
        })
    }

    fn profile(words: &[Vec<u16>], i: usize) -> BTreeMap<usize, u64> {
        let mut hist = BTreeMap::new();
        for w in words {
            *hist.entry(hamming(&words[i], w)).or_insert(0) += 1;
        }
        hist
    }
}

/// Minimum over the tuple of the repetition-code minimum distances:
/// `blocks · minimal_degree` of the best single representation.
pub fn repetition_min_distance(group: &PermGroup, actions: &[&Action]) -> usize {
    let r = actions.len();
    r * actions
        .iter()
        .map(|a| a.minimal_degree(group))
        .min()
        .expect("non-empty tuple")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Perm;
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
    fn natural_s4_code() {
        let g = s4();
        let nat = Action::natural(&g);
        let code = Code::new(&g, vec![&nat]).unwrap();
        assert_eq!(code.size(), 24);
        assert_eq!(code.min_distance(), 2);
        assert_eq!(code.min_distance_bruteforce(), 2);
        assert_eq!(code.min_distance_full_scan(), 2);
        assert!(code.is_frequency_array());
        assert!(code.is_distance_invariant());
        let dist = code.inner_distribution();
        assert_eq!(dist.values().sum::<u64>(), 24);
        assert_eq!(code.inner_distribution_allpairs(), dist);
    }

    #[test]
    fn repetition_doubles_distances() {
        let g = s4();
        let nat = Action::natural(&g);
        let code = Code::new(&g, vec![&nat, &nat]).unwrap();
        assert_eq!(code.min_distance(), 4);
        assert_eq!(code.min_distance_bruteforce(), 4);
        assert_eq!(repetition_min_distance(&g, &[&nat, &nat]), 4);
        assert!(code.is_frequency_array());
        let single = Code::new(&g, vec![&nat]).unwrap();
        let doubled: BTreeMap<usize, u64> = single
            .inner_distribution()
            .into_iter()
            .map(|(d, c)| (2 * d, c))
            .collect();
        assert_eq!(code.inner_distribution(), doubled);
    }

    #[test]
    fn kernel_collapses_codewords() {
        // coset action of S4 on the cosets of a transposition subgroup has
        // degree 12 and is faithful; on A4 it has degree 2 with kernel A4.
        let g = s4();
        let a = g.index_of(&Perm::parse(4, "(1,2,3)").unwrap()).unwrap();
        let b = g.index_of(&Perm::parse(4, "(2,3,4)").unwrap()).unwrap();
        let a4 = g.subgroup_closure(&[a, b], 100).unwrap();
        let act = Action::from_coset_table(&g, &g.coset_table(&a4));
        let code = Code::new(&g, vec![&act, &act]).unwrap();
        assert_eq!(code.kernel().len(), 12);
        assert_eq!(code.size(), 2);
        assert_eq!(code.distinct_codewords().len(), 2);
        assert_eq!(code.min_distance(), 4);
        assert_eq!(code.min_distance_bruteforce(), 4);
    }

    #[test]
    fn mixed_degrees_rejected() {
        let g = s4();
        let nat = Action::natural(&g);
        let stab = g.point_stabilizer(0);
        // coset action on a point stabilizer: degree 4 (fine); on a Sylow-3: degree 8
        let c3 = g
            .subgroup_closure(&[g.index_of(&Perm::parse(4, "(1,2,3)").unwrap()).unwrap()], 100)
            .unwrap();
        let deg8 = Action::from_coset_table(&g, &g.coset_table(&c3));
        assert_eq!(deg8.degree(), 8);
        assert!(Code::new(&g, vec![&nat, &deg8]).is_err());
        let deg4 = Action::from_coset_table(&g, &g.coset_table(&stab));
        assert!(Code::new(&g, vec![&nat, &deg4]).is_ok());
    }

    #[test]
    fn sampled_invariance_agrees() {
        let g = s4();
        let nat = Action::natural(&g);
        let code = Code::new(&g, vec![&nat, &nat]).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        assert!(code.is_distance_invariant_sampled(&mut rng, 10));
    }
}
