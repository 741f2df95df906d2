//! A family of twisted codes from two-dimensional special linear groups over
//! fields of order r = 2^f.
//!
//! The group `G` of order r²·r(r²−1) is generated inside 3×3 matrices over
//! GF(r): a two-dimensional translation block `E` (matrices `e(n₁,n₂)`)
//! extended by a special linear group, which splits in `r` different ways.
//! The `r` complement subgroups `S_w` (one per slope `w ∈ GF(r)`) are
//! pairwise non-conjugate, so their coset actions give `r` pairwise
//! inequivalent 2-transitive representations of degree r² — the ingredients
//! of a twisted code whose inner distance distribution coincides with the
//! repetition code's.
//!
//! `light_audit` checks the defining relations, the complement orders, and
//! non-conjugacy symbolically for every slope. `full_audit` enumerates the
//! whole group and verifies the fixed-point laws, 2-transitivity, and the
//! distribution identity exactly.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use crate::group::PermGroup;
use crate::perm::Perm;
use crate::repr::Action;

#[derive(Debug)]
pub enum Asl2rError {
    /// only f ∈ {2, 3, 4} have a fixed field modulus here
    UnsupportedExponent(u32),
    /// the requested computation enumerates too many elements to run by
    /// default; opt in explicitly
    EnumerationGuard { f: u32, order: usize },
}

impl fmt::Display for Asl2rError {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Asl2rError::UnsupportedExponent(f) => {
                write!(out, "no field modulus fixed for exponent {f} (supported: 2, 3, 4)")
            }
            Asl2rError::EnumerationGuard { f, order } => write!(
                out,
                "full enumeration at exponent {f} walks {order} elements; pass allow_large to run it"
            ),
        }
    }
}

impl std::error::Error for Asl2rError {}

/// GF(2^f) in a polynomial basis with a fixed primitive modulus per f.
#[derive(Clone, Copy, Debug)]
pub struct Field {
    pub f: u32,
    pub r: u16,
    pub modulus: u16,
}

impl Field {
    pub fn new(f: u32) -> Result<Field, Asl2rError> {
        let modulus = match f {
            2 => 0b111,
            3 => 0b1011,
            4 => 0b10011,
            other => return Err(Asl2rError::UnsupportedExponent(other)),
        };
        Ok(Field {
            f,
            r: 1 << f,
            modulus,
        })
    }

    pub fn mul(&self, mut x: u16, mut y: u16) -> u16 {
        let mut acc = 0;
        while y != 0 {
            if y & 1 == 1 {
                acc ^= x;
            }
            y >>= 1;
            x <<= 1;
            if x & self.r != 0 {
                x ^= self.modulus;
            }
        }
        acc
    }

    pub fn pow(&self, x: u16, k: u32) -> u16 {
        let mut acc = 1;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    pub fn inv(&self, x: u16) -> u16 {
        debug_assert_ne!(x, 0);
        self.pow(x, self.r as u32 - 2)
    }
}

/// Row-major 3×3 matrix over the field, entries < r.
pub type Mat3 = [u8; 9];
type Mat2 = [u8; 4];

pub const MAT3_ID: Mat3 = [1, 0, 0, 0, 1, 0, 0, 0, 1];
const MAT2_ID: Mat2 = [1, 0, 0, 1];

pub fn mat3_rows(m: Mat3) -> [[u8; 3]; 3] {
    [
        [m[0], m[1], m[2]],
        [m[3], m[4], m[5]],
        [m[6], m[7], m[8]],
    ]
}

fn mat3_mul(field: &Field, a: Mat3, b: Mat3) -> Mat3 {
    let mut out = [0u8; 9];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = 0u16;
            for k in 0..3 {
                acc ^= field.mul(a[3 * i + k] as u16, b[3 * k + j] as u16);
            }
            out[3 * i + j] = acc as u8;
        }
    }
    out
}

fn mat3_pow(field: &Field, a: Mat3, k: u32) -> Mat3 {
    let mut acc = MAT3_ID;
    for _ in 0..k {
        acc = mat3_mul(field, acc, a);
    }
    acc
}

fn mat3_inv(field: &Field, a: Mat3) -> Mat3 {
    // element orders here are tiny; walk powers until the identity returns
    let mut prev = MAT3_ID;
    let mut cur = a;
    while cur != MAT3_ID {
        prev = cur;
        cur = mat3_mul(field, cur, a);
    }
    prev
}

fn mat3_order(field: &Field, a: Mat3) -> u32 {
    let mut k = 1;
    let mut cur = a;
    while cur != MAT3_ID {
        cur = mat3_mul(field, cur, a);
        k += 1;
    }
    k
}

fn mat2_mul(field: &Field, a: Mat2, b: Mat2) -> Mat2 {
    [
        field.mul(a[0] as u16, b[0] as u16) as u8 ^ field.mul(a[1] as u16, b[2] as u16) as u8,
        field.mul(a[0] as u16, b[1] as u16) as u8 ^ field.mul(a[1] as u16, b[3] as u16) as u8,
        field.mul(a[2] as u16, b[0] as u16) as u8 ^ field.mul(a[3] as u16, b[2] as u16) as u8,
        field.mul(a[2] as u16, b[1] as u16) as u8 ^ field.mul(a[3] as u16, b[3] as u16) as u8,
    ]
}

fn mat2_pow(field: &Field, a: Mat2, k: u32) -> Mat2 {
    let mut acc = MAT2_ID;
    for _ in 0..k {
        acc = mat2_mul(field, acc, a);
    }
    acc
}

fn mat2_inv(field: &Field, a: Mat2) -> Mat2 {
    let mut prev = MAT2_ID;
    let mut cur = a;
    while cur != MAT2_ID {
        prev = cur;
        cur = mat2_mul(field, cur, a);
    }
    prev
}

/// The construction data for one exponent: the field, the two-dimensional
/// generator triple, and the three-dimensional embeddings per slope.
pub struct Asl2r {
    pub field: Field,
    /// generator of the multiplicative group (the polynomial-basis image of
    /// the indeterminate)
    pub a: u16,
    /// (1 + a²)⁻¹, the constant appearing in the z generators
    pub b: u16,
    x2: Mat2,
    y2: Mat2,
    z2: Mat2,
    x3: Mat3,
}

impl Asl2r {
    pub fn new(f: u32) -> Result<Asl2r, Asl2rError> {
        let field = Field::new(f)?;
        let a = 2;
        let ai = field.inv(a);
        let b = field.inv(1 ^ field.mul(a, a));
        let b2b1 = field.mul(b, b) ^ b ^ 1;
        let x2 = [a as u8, 0, 0, ai as u8];
        let y2 = [1, 1, 0, 1];
        let z2 = [b as u8, b2b1 as u8, 1, (b ^ 1) as u8];
        let x3 = [1, 0, 0, 0, a as u8, 0, 0, 0, ai as u8];
        Ok(Asl2r {
            field,
            a,
            b,
            x2,
            y2,
            z2,
            x3,
        })
    }

    pub fn r(&self) -> u16 {
        self.field.r
    }

    pub fn x(&self) -> Mat3 {
        self.x3
    }

    pub fn y(&self, w: u16) -> Mat3 {
        let v = w ^ self.field.mul(w, self.a);
        [1, 0, v as u8, 0, 1, 1, 0, 0, 1]
    }

    pub fn z(&self, w: u16) -> Mat3 {
        let f = &self.field;
        let u = f.mul(w, self.a) ^ f.mul(w, self.b) ^ w;
        let b2b1 = f.mul(self.b, self.b) ^ self.b ^ 1;
        [
            1,
            w as u8,
            u as u8,
            0,
            self.b as u8,
            b2b1 as u8,
            0,
            1,
            (self.b ^ 1) as u8,
        ]
    }

    pub fn translation(&self, n1: u16, n2: u16) -> Mat3 {
        [1, n1 as u8, n2 as u8, 0, 1, 0, 0, 0, 1]
    }

    fn is_translation(m: Mat3) -> bool {
        m[0] == 1 && m[3] == 0 && m[4] == 1 && m[5] == 0 && m[6] == 0 && m[7] == 0 && m[8] == 1
    }

    /// Generators of the full group: one slope's triple plus the two basis
    /// translations.
    pub fn group_generators(&self) -> [Mat3; 5] {
        [
            self.x3,
            self.y(0),
            self.z(0),
            self.translation(1, 0),
            self.translation(0, 1),
        ]
    }

    /// Coefficients c₀..c_f of the minimal polynomial of a².
    pub fn min_poly(&self) -> Vec<u8> {
        let f = &self.field;
        let beta = f.mul(self.a, self.a);
        let mut conjugates = Vec::new();
        let mut c = beta;
        while !conjugates.contains(&c) {
            conjugates.push(c);
            c = f.mul(c, c);
        }
        let mut poly: Vec<u16> = vec![1];
        for &c in &conjugates {
            let mut next = vec![0u16; poly.len() + 1];
            for (i, &p) in poly.iter().enumerate() {
                next[i + 1] ^= p;
                next[i] ^= f.mul(p, c);
            }
            poly = next;
        }
        assert!(poly.iter().all(|&c| c <= 1), "minimal polynomial over the prime field");
        poly.iter().map(|&c| c as u8).collect()
    }

    fn slope_closure(&self, w: u16) -> HashSet<Mat3> {
        let field = &self.field;
        let r = self.r() as usize;
        let target = r * (r * r - 1);
        let gens = [self.x3, self.y(w), self.z(w)];
        let mut seen: HashSet<Mat3> = HashSet::with_capacity(target);
        seen.insert(MAT3_ID);
        let mut frontier = vec![MAT3_ID];
        while let Some(m) = frontier.pop() {
            for g in gens {
                let x = mat3_mul(field, m, g);
                if seen.insert(x) {
                    assert!(seen.len() <= target, "slope subgroup exceeded its order");
                    frontier.push(x);
                }
            }
        }
        seen
    }
}

/// Symbolic verification report: relations, complement structure,
/// non-conjugacy. Empty `failures` means everything held.
#[derive(Debug)]
pub struct LightAudit {
    pub f: u32,
    pub r: u16,
    pub min_poly: Vec<u8>,
    pub relation_instances: usize,
    pub slope_group_order: usize,
    pub slopes_pairwise_nonconjugate: bool,
    pub failures: Vec<String>,
}

pub fn light_audit(f: u32) -> Result<LightAudit, Asl2rError> {
    let c = Asl2r::new(f)?;
    let field = c.field;
    let r = c.r();
    let mut failures = Vec::new();
    let mut instances = 0;
    let mut check = |name: String, ok: bool, failures: &mut Vec<String>| {
        instances += 1;
        if !ok {
            failures.push(name);
        }
    };

    // field sanity: a generates the multiplicative group; b inverts 1+a²
    check("a^(r-1) = 1".into(), field.pow(c.a, r as u32 - 1) == 1, &mut failures);
    for k in 1..r as u32 - 1 {
        check(format!("a^{k} != 1"), field.pow(c.a, k) != 1, &mut failures);
    }
    check(
        "(1+a²)·b = 1".into(),
        field.mul(1 ^ field.mul(c.a, c.a), c.b) == 1,
        &mut failures,
    );

    // two-dimensional relations
    let m2 = |a, b| mat2_mul(&field, a, b);
    check("x^(r-1)".into(), mat2_pow(&field, c.x2, r as u32 - 1) == MAT2_ID, &mut failures);
    check("y^2".into(), m2(c.y2, c.y2) == MAT2_ID, &mut failures);
    check("z^3".into(), mat2_pow(&field, c.z2, 3) == MAT2_ID, &mut failures);
    check("(xz)^2".into(), mat2_pow(&field, m2(c.x2, c.z2), 2) == MAT2_ID, &mut failures);
    check("(yz)^2".into(), mat2_pow(&field, m2(c.y2, c.z2), 2) == MAT2_ID, &mut failures);
    for i in 0..r as u32 {
        let xi = mat2_pow(&field, c.x2, i);
        let comm = m2(m2(mat2_inv(&field, xi), mat2_inv(&field, c.y2)), m2(xi, c.y2));
        check(format!("[x^{i},y]^2"), m2(comm, comm) == MAT2_ID, &mut failures);
    }
    let coeffs = c.min_poly();
    check(
        "minimal polynomial degree".into(),
        coeffs.len() == f as usize + 1 && coeffs[f as usize] == 1,
        &mut failures,
    );
    let mut word2 = MAT2_ID;
    for (i, &ci) in coeffs.iter().enumerate() {
        if ci == 1 {
            word2 = m2(word2, c.y2);
        }
        if i < f as usize {
            word2 = m2(word2, c.x2);
        }
    }
    check("x^f word".into(), word2 == mat2_pow(&field, c.x2, f), &mut failures);

    // three-dimensional relations for every slope
    let m3 = |a, b| mat3_mul(&field, a, b);
    for w in 0..r {
        let y = c.y(w);
        let z = c.z(w);
        check(format!("X^(r-1) (w={w})"), mat3_pow(&field, c.x3, r as u32 - 1) == MAT3_ID, &mut failures);
        check(format!("Y^2 (w={w})"), m3(y, y) == MAT3_ID, &mut failures);
        check(format!("Z^3 (w={w})"), mat3_pow(&field, z, 3) == MAT3_ID, &mut failures);
        check(format!("(XZ)^2 (w={w})"), mat3_pow(&field, m3(c.x3, z), 2) == MAT3_ID, &mut failures);
        check(format!("(YZ)^2 (w={w})"), mat3_pow(&field, m3(y, z), 2) == MAT3_ID, &mut failures);
        for i in 0..r as u32 {
            let xi = mat3_pow(&field, c.x3, i);
            let comm = m3(m3(mat3_inv(&field, xi), mat3_inv(&field, y)), m3(xi, y));
            check(format!("[X^{i},Y]^2 (w={w})"), m3(comm, comm) == MAT3_ID, &mut failures);
        }
        let mut word3 = MAT3_ID;
        for (i, &ci) in coeffs.iter().enumerate() {
            if ci == 1 {
                word3 = m3(word3, y);
            }
            if i < f as usize {
                word3 = m3(word3, c.x3);
            }
        }
        check(format!("X^f word (w={w})"), word3 == mat3_pow(&field, c.x3, f), &mut failures);

        // conjugating a translation through a generator lands on the
        // translation indexed by the companion 2×2 action
        for (m, companion) in [(c.x3, c.x2), (y, c.y2), (z, c.z2)] {
            let mi = mat3_inv(&field, m);
            for n1 in 0..r {
                for n2 in 0..r {
                    let moved = (
                        field.mul(n1, companion[0] as u16) ^ field.mul(n2, companion[2] as u16),
                        field.mul(n1, companion[1] as u16) ^ field.mul(n2, companion[3] as u16),
                    );
                    let product = m3(m3(m3(mi, c.translation(n1, n2)), m), c.translation(moved.0, moved.1));
                    check(
                        format!("translation relation (w={w}, n=({n1},{n2}))"),
                        product == MAT3_ID,
                        &mut failures,
                    );
                }
            }
        }
    }

    // each slope group is a complement: right order, trivial translation part
    let expected_order = r as usize * (r as usize * r as usize - 1);
    let slope_sets: Vec<HashSet<Mat3>> = (0..r).map(|w| c.slope_closure(w)).collect();
    for (w, s) in slope_sets.iter().enumerate() {
        check(format!("slope {w} order"), s.len() == expected_order, &mut failures);
        let trivial = s.iter().filter(|&&m| Asl2r::is_translation(m)).count();
        check(format!("slope {w} meets translations trivially"), trivial == 1, &mut failures);
    }

    // pairwise non-conjugacy; conjugating by translations suffices because
    // the whole group is translations times any one slope group
    let mut nonconjugate = true;
    for w1 in 0..r {
        let gens = [c.x3, c.y(w1), c.z(w1)];
        for w2 in w1 + 1..r {
            let target = &slope_sets[w2 as usize];
            for n1 in 0..r {
                for n2 in 0..r {
                    let t = c.translation(n1, n2);
                    let ti = mat3_inv(&field, t);
                    if gens
                        .iter()
                        .all(|&g| target.contains(&m3(m3(ti, g), t)))
                    {
                        nonconjugate = false;
                        failures.push(format!(
                            "slope {w1} conjugate to slope {w2} via translation ({n1},{n2})"
                        ));
                    }
                }
            }
        }
    }

    Ok(LightAudit {
        f,
        r,
        min_poly: coeffs,
        relation_instances: instances,
        slope_group_order: expected_order,
        slopes_pairwise_nonconjugate: nonconjugate,
        failures,
    })
}

/// Exact whole-group verification: fixed-point laws, 2-transitivity, and the
/// twisted-equals-repetition distribution identity.
#[derive(Debug)]
pub struct FullAudit {
    pub f: u32,
    pub r: u16,
    pub group_order: usize,
    pub class_count: usize,
    pub distribution: BTreeMap<usize, u64>,
    pub min_distance: usize,
    pub failures: Vec<String>,
}

struct Enumerated {
    field: Field,
    elements: Vec<Mat3>,
    index: HashMap<Mat3, u32>,
}

impl Enumerated {
    fn build(c: &Asl2r) -> Enumerated {
        let field = c.field;
        let r = c.r() as usize;
        let expected = r * r * r * (r * r - 1);
        let gens = c.group_generators();
        let mut elements = vec![MAT3_ID];
        let mut index: HashMap<Mat3, u32> = HashMap::with_capacity(expected);
        index.insert(MAT3_ID, 0);
        let mut qi = 0;
        while qi < elements.len() {
            let m = elements[qi];
            qi += 1;
            for g in gens {
                let x = mat3_mul(&field, m, g);
                if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(x) {
                    slot.insert(elements.len() as u32);
                    elements.push(x);
                }
            }
        }
        assert_eq!(elements.len(), expected, "group order");
        Enumerated {
            field,
            elements,
            index,
        }
    }

    fn conjugacy_classes(&self, gens: &[Mat3]) -> Vec<(u32, usize)> {
        let inverses: Vec<Mat3> = gens.iter().map(|&g| mat3_inv(&self.field, g)).collect();
        let n = self.elements.len();
        let mut assigned = vec![false; n];
        let mut classes = Vec::new();
        for start in 0..n as u32 {
            if assigned[start as usize] {
                continue;
            }
            assigned[start as usize] = true;
            let mut size = 1;
            let mut frontier = vec![start];
            while let Some(e) = frontier.pop() {
                let m = self.elements[e as usize];
                for (g, gi) in gens.iter().zip(&inverses) {
                    let conj = mat3_mul(&self.field, mat3_mul(&self.field, *gi, m), *g);
                    let j = self.index[&conj];
                    if !assigned[j as usize] {
                        assigned[j as usize] = true;
                        size += 1;
                        frontier.push(j);
                    }
                }
            }
            classes.push((start, size));
        }
        classes
    }

    /// Coset table of the subgroup: (representative indices, coset index per
    /// element).
    fn coset_table(&self, members: &[u32], gens: &[Mat3]) -> (Vec<u32>, Vec<u16>) {
        let mut coset_of = vec![u16::MAX; self.elements.len()];
        for &h in members {
            coset_of[h as usize] = 0;
        }
        let mut reps = vec![0u32];
        let mut qi = 0;
        while qi < reps.len() {
            let rmat = self.elements[reps[qi] as usize];
            qi += 1;
            for &g in gens {
                let x = mat3_mul(&self.field, rmat, g);
                let xi = self.index[&x];
                if coset_of[xi as usize] == u16::MAX {
                    let k = reps.len() as u16;
                    reps.push(xi);
                    for &h in members {
                        let hx = mat3_mul(&self.field, self.elements[h as usize], x);
                        coset_of[self.index[&hx] as usize] = k;
                    }
                }
            }
        }
        assert!(coset_of.iter().all(|&c| c != u16::MAX));
        (reps, coset_of)
    }

    fn fixed_points(&self, table: &(Vec<u32>, Vec<u16>), g: Mat3) -> usize {
        let (reps, coset_of) = table;
        reps.iter()
            .enumerate()
            .filter(|(i, &rep)| {
                let x = mat3_mul(&self.field, self.elements[rep as usize], g);
                coset_of[self.index[&x] as usize] == *i as u16
            })
            .count()
    }
}

pub fn full_audit(f: u32, allow_large: bool) -> Result<FullAudit, Asl2rError> {
    let c = Asl2r::new(f)?;
    let r = c.r() as usize;
    let order = r * r * r * (r * r - 1);
    if f >= 4 && !allow_large {
        return Err(Asl2rError::EnumerationGuard { f, order });
    }
    let mut failures = Vec::new();
    let world = Enumerated::build(&c);
    let gens = c.group_generators();
    let classes = world.conjugacy_classes(&gens);

    // per-slope coset tables on the r² cosets
    let tables: Vec<(Vec<u32>, Vec<u16>)> = (0..c.r())
        .map(|w| {
            let mut members: Vec<u32> = c
                .slope_closure(w)
                .into_iter()
                .map(|m| world.index[&m])
                .collect();
            members.sort_unstable();
            let table = world.coset_table(&members, &gens);
            assert_eq!(table.0.len(), r * r, "coset count");
            table
        })
        .collect();

    let mut fix_sums = vec![0u64; r];
    let mut fix_square_sums = vec![0u64; r];
    let mut distribution: BTreeMap<usize, u64> = BTreeMap::new();
    let mut repetition: Vec<BTreeMap<usize, u64>> = vec![BTreeMap::new(); r];

    for &(rep, size) in &classes {
        let g = world.elements[rep as usize];
        let fixes: Vec<usize> = tables.iter().map(|t| world.fixed_points(t, g)).collect();
        let supports: Vec<usize> = fixes.iter().map(|&fx| r * r - fx).collect();
        for w in 0..r {
            fix_sums[w] += fixes[w] as u64 * size as u64;
            fix_square_sums[w] += (fixes[w] as u64).pow(2) * size as u64;
        }
        if g != MAT3_ID {
            let element_order = mat3_order(&c.field, g);
            let even_order = element_order.is_multiple_of(2);
            if !fixes.iter().all(|&fx| fx == 0 || fx == 1 || fx == r) {
                failures.push(format!("fixed counts {fixes:?} outside {{0,1,r}}"));
            }
            if !even_order && !fixes.iter().all(|&fx| fx == 1) {
                failures.push(format!(
                    "odd-order element (order {element_order}) fixes {fixes:?}, expected all 1"
                ));
            }
            if even_order && fixes.windows(2).any(|p| p[0] != p[1]) {
                failures.push(format!(
                    "even-order element (order {element_order}) has unequal fixes {fixes:?}"
                ));
            }
            if supports.windows(2).any(|p| p[0] != p[1]) {
                failures.push(format!("supports differ across slopes: {supports:?}"));
            }
        }
        *distribution.entry(supports.iter().sum()).or_insert(0) += size as u64;
        for w in 0..r {
            *repetition[w].entry(r * supports[w]).or_insert(0) += size as u64;
        }
    }

    for w in 0..r {
        if fix_sums[w] != order as u64 || fix_square_sums[w] != 2 * order as u64 {
            failures.push(format!(
                "slope {w} action not 2-transitive (orbit sums {} and {})",
                fix_sums[w], fix_square_sums[w]
            ));
        }
        if repetition[w] != distribution {
            failures.push(format!(
                "slope {w} repetition distribution differs from the twisted one"
            ));
        }
    }

    let min_distance = *distribution
        .keys()
        .find(|&&d| d > 0)
        .expect("non-trivial group");
    if min_distance != r * (r * r - r) {
        failures.push(format!(
            "minimum distance {min_distance} instead of r(r²−r) = {}",
            r * (r * r - r)
        ));
    }

    Ok(FullAudit {
        f,
        r: c.r(),
        group_order: order,
        class_count: classes.len(),
        distribution,
        min_distance,
        failures,
    })
}

/// The same group re-expressed as a permutation group on the r² cosets of
/// slope 0, with one degree-r² action per slope — ready for the generic code
/// machinery. Feasible for f ∈ {2, 3}.
pub struct SlopeActions {
    pub f: u32,
    pub r: u16,
    pub group: PermGroup,
    pub actions: Vec<Action>,
}

pub fn slope_actions(f: u32) -> Result<SlopeActions, Asl2rError> {
    let c = Asl2r::new(f)?;
    let r = c.r() as usize;
    if f >= 4 {
        return Err(Asl2rError::EnumerationGuard {
            f,
            order: r * r * r * (r * r - 1),
        });
    }
    let world = Enumerated::build(&c);
    let gens = c.group_generators();
    let tables: Vec<(Vec<u32>, Vec<u16>)> = (0..c.r())
        .map(|w| {
            let mut members: Vec<u32> = c
                .slope_closure(w)
                .into_iter()
                .map(|m| world.index[&m])
                .collect();
            members.sort_unstable();
            world.coset_table(&members, &gens)
        })
        .collect();

    let perm_of = |table: &(Vec<u32>, Vec<u16>), g: Mat3| -> Perm {
        let (reps, coset_of) = table;
        let imgs = reps
            .iter()
            .map(|&rep| {
                let x = mat3_mul(&c.field, world.elements[rep as usize], g);
                coset_of[world.index[&x] as usize]
            })
            .collect();
        Perm::from_images(imgs).expect("coset action is a permutation")
    };

    let perm_gens: Vec<Perm> = gens.iter().map(|&g| perm_of(&tables[0], g)).collect();
    let group = PermGroup::from_generators(perm_gens, world.elements.len() + 1)
        .expect("coset permutation group");
    assert_eq!(
        group.order(),
        world.elements.len(),
        "slope-0 coset action must be faithful"
    );

    let mut image_lists: Vec<Vec<Option<Perm>>> = vec![vec![None; group.order()]; r];
    for &m in &world.elements {
        let home = group
            .index_of(&perm_of(&tables[0], m))
            .expect("element lands in its own coset group");
        for (w, table) in tables.iter().enumerate() {
            image_lists[w][home as usize] = Some(perm_of(table, m));
        }
    }
    let actions = image_lists
        .into_iter()
        .map(|images| {
            Action::from_images(
                &group,
                images.into_iter().map(|p| p.expect("all elements covered")).collect(),
            )
            .expect("uniform degree")
        })
        .collect();

    Ok(SlopeActions {
        f,
        r: c.r(),
        group,
        actions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_arithmetic_small_cases() {
        let gf4 = Field::new(2).unwrap();
        // a² = a+1 and a³ = 1 in GF(4)
        assert_eq!(gf4.mul(2, 2), 3);
        assert_eq!(gf4.mul(2, 3), 1);
        assert_eq!(gf4.inv(2), 3);
        assert_eq!(gf4.inv(3), 2);
        let gf8 = Field::new(3).unwrap();
        for x in 1..8 {
            assert_eq!(gf8.mul(x, gf8.inv(x)), 1);
        }
        assert!(Field::new(5).is_err());
    }

    #[test]
    fn minimal_polynomials_match_hand_computation() {
        assert_eq!(Asl2r::new(2).unwrap().min_poly(), vec![1, 1, 1]);
        assert_eq!(Asl2r::new(3).unwrap().min_poly(), vec![1, 1, 0, 1]);
    }

    #[test]
    fn light_audit_passes_for_all_supported_exponents() {
        for f in [2, 3, 4] {
            let audit = light_audit(f).unwrap();
            assert!(audit.failures.is_empty(), "f={f}: {:?}", audit.failures);
            assert!(audit.slopes_pairwise_nonconjugate);
            assert_eq!(
                audit.slope_group_order,
                audit.r as usize * (audit.r as usize * audit.r as usize - 1)
            );
        }
    }

    #[test]
    fn full_audit_f2_matches_frozen_distribution() {
        let audit = full_audit(2, false).unwrap();
        assert!(audit.failures.is_empty(), "{:?}", audit.failures);
        assert_eq!(audit.group_order, 960);
        assert_eq!(audit.min_distance, 48);
        let expected: BTreeMap<usize, u64> =
            [(0, 1), (48, 60), (60, 704), (64, 195)].into_iter().collect();
        assert_eq!(audit.distribution, expected);
    }

    #[test]
    fn full_audit_guards_large_exponent() {
        assert!(matches!(
            full_audit(4, false),
            Err(Asl2rError::EnumerationGuard { .. })
        ));
    }

    #[test]
    fn slope_actions_feed_the_generic_engine() {
        let s = slope_actions(2).unwrap();
        assert_eq!(s.group.order(), 960);
        assert_eq!(s.actions.len(), 4);
        for a in &s.actions {
            assert_eq!(a.degree(), 16);
            assert!(a.is_two_transitive(&s.group));
            assert!(a.is_faithful(&s.group));
        }
        // supports agree across slopes element by element
        assert!((0..960).all(|i| {
            let s0 = s.actions[0].support(i);
            s.actions.iter().all(|a| a.support(i) == s0)
        }));
    }
}
