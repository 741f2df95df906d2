//! Orbit structure of a twisted code's distance-1 neighbours under its
//! symmetry generators.
//!
//! For the two-block codes over six symbols built from a group `T ≤ S6` and
//! the outer twist, three generator families stabilize the code: the diagonal
//! right-translations, the relabelling symmetries coming from elements of S6
//! (acting on positions and symbols of each block through the twist), and the
//! block swap. The neighbour set is every vector at Hamming distance exactly
//! one from some codeword.

use std::collections::HashSet;

use crate::builtin::S6;
use crate::group::PermGroup;

const BLOCK: usize = 6;
const LEN: usize = 12;

type Word = [u16; LEN];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NeighbourReport {
    pub code_size: usize,
    pub neighbour_count: usize,
    /// orbit sizes under diagonal + relabelling + block swap, descending
    pub orbit_sizes_with_swap: Vec<usize>,
    /// orbit sizes without the block swap, descending
    pub orbit_sizes_without_swap: Vec<usize>,
}

enum Symmetry {
    /// right translation by a code group element `t`: block one composed with
    /// `t`, block two with the twist image of `t`
    Diagonal { t: [u16; BLOCK], tt: [u16; BLOCK] },
    /// symmetry from `y ∈ S6`: position i of block one moves to `y(i)` and
    /// symbols map through `y`; block two uses the twist image of `y`
    Relabel { y: [u16; BLOCK], ty: [u16; BLOCK] },
    Swap,
}

impl Symmetry {
    fn apply(&self, w: &Word) -> Word {
        let mut out = [0u16; LEN];
        match self {
            Symmetry::Diagonal { t, tt } => {
                for i in 0..BLOCK {
                    out[i] = t[w[i] as usize];
                    out[BLOCK + i] = tt[w[BLOCK + i] as usize];
                }
            }
            Symmetry::Relabel { y, ty } => {
                for i in 0..BLOCK {
                    out[y[i] as usize] = y[w[i] as usize];
                    out[BLOCK + ty[i] as usize] = ty[w[BLOCK + i] as usize];
                }
            }
            Symmetry::Swap => {
                out[..BLOCK].copy_from_slice(&w[BLOCK..]);
                out[BLOCK..].copy_from_slice(&w[..BLOCK]);
            }
        }
        out
    }
}

fn block6(images: &[u16]) -> [u16; BLOCK] {
    let mut out = [0u16; BLOCK];
    out.copy_from_slice(images);
    out
}

/// Analyse the twisted code of `code_group` (a subgroup of the S6 bundle's
/// group, or that group itself) inside the length-12 Hamming graph.
pub fn neighbour_orbits(bundle: &S6, code_group: &PermGroup) -> NeighbourReport {
    assert_eq!(code_group.degree(), BLOCK);
    let tau_image = |i: u32| bundle.group.element(bundle.tau.apply(i));

    // codewords: element followed by its twist image
    let mut code: HashSet<Word> = HashSet::with_capacity(code_group.order());
    for p in code_group.elements() {
        let i = bundle
            .group
            .index_of(p)
            .expect("code group lies inside the bundle group");
        let mut w = [0u16; LEN];
        w[..BLOCK].copy_from_slice(p.images());
        w[BLOCK..].copy_from_slice(tau_image(i).images());
        code.insert(w);
    }

    // distance-1 neighbours: flip one coordinate to any wrong symbol
    let mut neighbours: HashSet<Word> = HashSet::new();
    for w in &code {
        for pos in 0..LEN {
            for sym in 0..BLOCK as u16 {
                if sym != w[pos] {
                    let mut v = *w;
                    v[pos] = sym;
                    neighbours.insert(v);
                }
            }
        }
    }
    for w in &code {
        neighbours.remove(w);
    }

    let diagonal: Vec<Symmetry> = code_group
        .generators()
        .iter()
        .map(|t| {
            let i = bundle.group.index_of(t).expect("generator in bundle group");
            Symmetry::Diagonal {
                t: block6(t.images()),
                tt: block6(tau_image(i).images()),
            }
        })
        .collect();
    // the normalizer of the code group in S6 is all of S6 for both built-in
    // code groups, so its generators supply the relabelling family
    let relabel: Vec<Symmetry> = bundle
        .group
        .generators()
        .iter()
        .map(|y| {
            let i = bundle.group.index_of(y).expect("generator index");
            Symmetry::Relabel {
                y: block6(y.images()),
                ty: block6(tau_image(i).images()),
            }
        })
        .collect();

    let mut with_swap: Vec<&Symmetry> = Vec::new();
    with_swap.extend(diagonal.iter());
    with_swap.extend(relabel.iter());
    let without_swap = with_swap.clone();
    let swap = Symmetry::Swap;
    with_swap.push(&swap);

    // every generator must stabilize the code
    for g in &with_swap {
        let image: HashSet<Word> = code.iter().map(|w| g.apply(w)).collect();
        assert_eq!(image, code, "symmetry generator must stabilize the code");
    }

    NeighbourReport {
        code_size: code.len(),
        neighbour_count: neighbours.len(),
        orbit_sizes_with_swap: orbit_sizes(&neighbours, &with_swap),
        orbit_sizes_without_swap: orbit_sizes(&neighbours, &without_swap),
    }
}

fn orbit_sizes(vertices: &HashSet<Word>, gens: &[&Symmetry]) -> Vec<usize> {
    let mut unassigned: HashSet<Word> = vertices.clone();
    let mut sizes = Vec::new();
    while let Some(&start) = unassigned.iter().next() {
        unassigned.remove(&start);
        let mut size = 1;
        let mut frontier = vec![start];
        while let Some(v) = frontier.pop() {
            for g in gens {
                let w = g.apply(&v);
                if unassigned.remove(&w) {
                    size += 1;
                    frontier.push(w);
                }
            }
        }
        sizes.push(size);
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}
