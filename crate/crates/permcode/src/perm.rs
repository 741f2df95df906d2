//! Permutations on `{0, 1, …, n-1}` with the right-action convention:
//! `p.compose(q)` means "apply `p`, then `q`", so that composing image
//! tables reads left to right everywhere in the crate.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image list of length {len} is not a permutation: {reason}")]
    NotAPermutation { len: usize, reason: String },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("cannot parse cycle notation near `{0}`")]
    Parse(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

/// A permutation stored as its image table: `imgs[i]` is the image of `i`.
///
/// `Ord` is the lexicographic order on image tables, which makes the
/// identity the minimum among all permutations of a given degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    imgs: Vec<u16>,
}

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm {
            imgs: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(imgs: Vec<u16>) -> Result<Perm, PermError> {
        let n = imgs.len();
        let mut seen = vec![false; n];
        for &v in &imgs {
            let v = v as usize;
            if v >= n {
                return Err(PermError::NotAPermutation {
                    len: n,
                    reason: format!("image {v} out of range"),
                });
            }
            if seen[v] {
                return Err(PermError::NotAPermutation {
                    len: n,
                    reason: format!("image {v} repeated"),
                });
            }
            seen[v] = true;
        }
        Ok(Perm { imgs })
    }

    /// Build from disjoint-or-not cycles of 0-based points; later cycles are
    /// applied after earlier ones.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u16>]) -> Result<Perm, PermError> {
        let mut p = Perm::identity(degree);
        for cycle in cycles {
            for &pt in cycle {
                if pt as usize >= degree {
                    return Err(PermError::PointOutOfRange {
                        point: pt as usize,
                        degree,
                    });
                }
            }
            let mut c = Perm::identity(degree);
            for (k, &pt) in cycle.iter().enumerate() {
                c.imgs[pt as usize] = cycle[(k + 1) % cycle.len()];
            }
            Perm::from_images(c.imgs.clone()).map_err(|_| PermError::Parse(format!("{cycle:?}")))?;
            p = p.compose(&c);
        }
        Ok(p)
    }

    /// Parse 1-based cycle notation such as `(1,2)(3,4,5)`. Whitespace is
    /// ignored; `()` denotes the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Perm, PermError> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<u16>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(PermError::Parse(rest.to_string()));
            }
            let close = rest.find(')').ok_or_else(|| PermError::Parse(rest.to_string()))?;
            let body = &rest[1..close];
            if !body.is_empty() {
                let mut cycle = Vec::new();
                for tok in body.split(',') {
                    let v: usize = tok.parse().map_err(|_| PermError::Parse(tok.to_string()))?;
                    if v == 0 || v > degree {
                        return Err(PermError::PointOutOfRange {
                            point: v,
                            degree,
                        });
                    }
                    cycle.push((v - 1) as u16);
                }
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        Perm::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.imgs.len()
    }

    pub fn image(&self, point: u16) -> u16 {
        self.imgs[point as usize]
    }

    pub fn images(&self) -> &[u16] {
        &self.imgs
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            imgs: self.imgs.iter().map(|&v| other.imgs[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut imgs = vec![0u16; self.imgs.len()];
        for (i, &v) in self.imgs.iter().enumerate() {
            imgs[v as usize] = i as u16;
        }
        Perm { imgs }
    }

    /// `by⁻¹ · self · by` under the right-action convention.
    pub fn conjugate(&self, by: &Perm) -> Perm {
        let mut imgs = vec![0u16; self.imgs.len()];
        for i in 0..self.imgs.len() {
            imgs[by.imgs[i] as usize] = by.imgs[self.imgs[i] as usize];
        }
        Perm { imgs }
    }

    pub fn pow(&self, k: u64) -> Perm {
        let mut acc = Perm::identity(self.degree());
        for _ in 0..k {
            acc = acc.compose(self);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.imgs.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    pub fn support(&self) -> usize {
        self.imgs
            .iter()
            .enumerate()
            .filter(|(i, &v)| *i != v as usize)
            .count()
    }

    pub fn fixed_points(&self) -> usize {
        self.degree() - self.support()
    }

    pub fn order(&self) -> u64 {
        let mut order = 1u64;
        for c in self.cycles() {
            order = lcm(order, c.len() as u64);
        }
        order
    }

    /// Non-trivial cycles, each rotated to start at its smallest point and
    /// sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<u16>> {
        let n = self.imgs.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.imgs[start] as usize == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j as u16);
                j = self.imgs[j] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    /// 1-based cycle notation; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            write!(f, "(")?;
            for (k, pt) in c.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    #[test]
    fn compose_is_left_to_right() {
        let a = Perm::parse(3, "(1,2)").unwrap();
        let b = Perm::parse(3, "(2,3)").unwrap();
        // 1 -> 2 under a, then 2 -> 3 under b
        assert_eq!(a.compose(&b).image(0), 2);
        assert_eq!(a.compose(&b).to_string(), "(1,3,2)");
        assert_eq!(b.compose(&a).to_string(), "(1,2,3)");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Perm::parse(4, "(1,2").is_err());
        assert!(Perm::parse(4, "(0,1)").is_err());
        assert!(Perm::parse(4, "(1,5)").is_err());
        assert!(Perm::parse(4, "1,2").is_err());
        assert_eq!(Perm::parse(4, "()").unwrap(), Perm::identity(4));
    }

    #[test]
    fn display_roundtrip() {
        let p = Perm::parse(6, "(1,2)(3,4,5)").unwrap();
        assert_eq!(Perm::parse(6, &p.to_string()).unwrap(), p);
    }

    #[test]
    fn order_and_support() {
        let p = Perm::parse(6, "(1,2)(3,4,5)").unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.support(), 5);
        assert_eq!(p.fixed_points(), 1);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
    }

    #[test]
    fn from_images_validates() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_images(vec![2, 1]).is_err());
        assert!(Perm::from_images(vec![1, 0]).is_ok());
    }

    #[test]
    fn identity_is_lexicographic_minimum() {
        let id = Perm::identity(4);
        let other = Perm::parse(4, "(3,4)").unwrap();
        assert!(id < other);
    }

    fn random_perm(degree: usize, seed: u64) -> Perm {
        let mut imgs: Vec<u16> = (0..degree as u16).collect();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        imgs.shuffle(&mut rng);
        Perm::from_images(imgs).unwrap()
    }

    proptest! {
        #[test]
        fn composition_is_associative(sa in 0u64..1000, sb in 0u64..1000, sc in 0u64..1000) {
            let (a, b, c) = (random_perm(9, sa), random_perm(9, sb), random_perm(9, sc));
            prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        }

        #[test]
        fn inverse_cancels(s in 0u64..1000) {
            let p = random_perm(11, s);
            prop_assert!(p.compose(&p.inverse()).is_identity());
            prop_assert!(p.inverse().compose(&p).is_identity());
        }

        #[test]
        fn conjugation_preserves_cycle_type(sa in 0u64..1000, sb in 0u64..1000) {
            let (p, by) = (random_perm(10, sa), random_perm(10, sb));
            let c = p.conjugate(&by);
            prop_assert_eq!(c.support(), p.support());
            prop_assert_eq!(c.order(), p.order());
            prop_assert_eq!(c, by.inverse().compose(&p).compose(&by));
        }

        #[test]
        fn pow_matches_order(s in 0u64..1000) {
            let p = random_perm(8, s);
            prop_assert!(p.pow(p.order()).is_identity());
            for k in 1..p.order() {
                prop_assert!(!p.pow(k).is_identity());
            }
        }
    }
}
