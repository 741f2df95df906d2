//! Computed support tables, distance tables, and the golden reference files
//! they are checked against.
//!
//! Classes are matched to reference rows by the signature (element order,
//! class size, support vector) as a multiset, so reference row order and
//! class labels never have to line up with the canonical enumeration order.

use std::collections::BTreeMap;
use std::path::Path;

use crate::builtin::{class_rep, Asl32, A6, M12, S6, S6Order12};
use crate::code::{repetition_min_distance, Code};
use crate::group::PermGroup;
use crate::repr::Action;

const S6_SUPPORTS_CSV: &str = include_str!("../data/s6_supports.csv");
const A6_SUPPORTS_CSV: &str = include_str!("../data/a6_supports.csv");
const M12_SUPPORTS_CSV: &str = include_str!("../data/m12_supports.csv");
const ASL32_SUPPORTS_CSV: &str = include_str!("../data/asl32_supports.csv");
const S6H12_SUPPORTS_CSV: &str = include_str!("../data/s6h12_supports.csv");
const S6H12_MULTISETS_CSV: &str = include_str!("../data/s6h12_multisets.csv");
const M12_DISTRIBUTIONS_CSV: &str = include_str!("../data/m12_distributions.csv");
const SUMMARY_CSV: &str = include_str!("../data/summary.csv");

/// Class labels for S6 keyed by (element order, class size, natural support).
pub const S6_CLASS_KEYS: [(&str, u64, usize, usize); 11] = [
    ("1A", 1, 1, 0),
    ("2A", 2, 45, 4),
    ("2B", 2, 15, 2),
    ("2C", 2, 15, 6),
    ("3A", 3, 40, 3),
    ("3B", 3, 40, 6),
    ("4A", 4, 90, 6),
    ("4B", 4, 90, 4),
    ("5AB", 5, 144, 5),
    ("6A", 6, 120, 5),
    ("6B", 6, 120, 6),
];

/// One conjugacy-class row of a support table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassRow {
    pub label: String,
    pub order: u64,
    pub size: usize,
    pub supports: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct SupportTable {
    pub name: &'static str,
    pub columns: Vec<String>,
    pub rows: Vec<ClassRow>,
}

fn class_table(
    name: &'static str,
    group: &PermGroup,
    columns: &[&str],
    actions: &[&Action],
) -> SupportTable {
    let rows = group
        .conjugacy_classes()
        .iter()
        .map(|c| ClassRow {
            label: String::new(),
            order: c.element_order,
            size: c.size(),
            supports: actions.iter().map(|a| a.support(c.representative)).collect(),
        })
        .collect();
    SupportTable {
        name,
        columns: columns.iter().map(|c| c.to_string()).collect(),
        rows,
    }
}

/// Copy labels over from reference rows with the same signature. Rows with
/// identical signatures are matched in order, which is harmless because their
/// labels are then interchangeable.
pub fn attach_labels(table: &mut SupportTable, reference: &SupportTable) {
    let mut used = vec![false; reference.rows.len()];
    for row in &mut table.rows {
        if let Some((i, r)) = reference.rows.iter().enumerate().find(|(i, r)| {
            !used[*i] && r.order == row.order && r.size == row.size && r.supports == row.supports
        }) {
            used[i] = true;
            row.label = r.label.clone();
        }
    }
}

pub fn s6_supports(b: &S6) -> SupportTable {
    class_table("s6", &b.group, &["natural", "twisted"], &[&b.natural, &b.twisted])
}

pub fn a6_supports(b: &A6) -> SupportTable {
    class_table("a6", &b.group, &["natural", "twisted"], &[&b.natural, &b.twisted])
}

pub fn m12_supports(b: &M12) -> SupportTable {
    class_table("m12", &b.group, &["natural", "second"], &[&b.natural, &b.second])
}

pub fn asl32_supports(b: &Asl32) -> SupportTable {
    class_table(
        "asl32",
        &b.group,
        &["complement1", "complement2"],
        &[&b.actions[0], &b.actions[1]],
    )
}

fn try_parse_class_csv(name: &'static str, raw: &str) -> Result<SupportTable, String> {
    let mut reader = csv::Reader::from_reader(raw.as_bytes());
    let headers = reader.headers().map_err(|e| e.to_string())?.clone();
    if headers.len() < 4 {
        return Err("expected class,order,size plus at least one support column".into());
    }
    let columns: Vec<String> = headers.iter().skip(3).map(|h| h.to_string()).collect();
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let mut supports = Vec::new();
        for i in 3..rec.len() {
            supports.push(rec[i].parse().map_err(|_| format!("bad support {:?}", &rec[i]))?);
        }
        rows.push(ClassRow {
            label: rec[0].to_string(),
            order: rec[1].parse().map_err(|_| format!("bad order {:?}", &rec[1]))?,
            size: rec[2].parse().map_err(|_| format!("bad size {:?}", &rec[2]))?,
            supports,
        });
    }
    Ok(SupportTable { name, columns, rows })
}

/// The reference columns for the affine group of F₂³ carry no class labels
/// or sizes, only the support pair per class.
fn try_parse_pair_csv(raw: &str) -> Result<Vec<Vec<usize>>, String> {
    let mut reader = csv::Reader::from_reader(raw.as_bytes());
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        if rec.len() != 3 {
            return Err("expected column,support_a,support_b".into());
        }
        out.push(vec![
            rec[1].parse().map_err(|_| format!("bad support {:?}", &rec[1]))?,
            rec[2].parse().map_err(|_| format!("bad support {:?}", &rec[2]))?,
        ]);
    }
    Ok(out)
}

fn try_parse_matrix_csv(raw: &str) -> Result<(Vec<String>, Vec<Vec<usize>>), String> {
    let mut reader = csv::Reader::from_reader(raw.as_bytes());
    let labels: Vec<String> = reader
        .headers()
        .map_err(|e| e.to_string())?
        .iter()
        .skip(1)
        .map(|h| h.to_string())
        .collect();
    let mut rows = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let mut row = Vec::new();
        for i in 1..rec.len() {
            row.push(rec[i].parse().map_err(|_| format!("bad support {:?}", &rec[i]))?);
        }
        rows.push(row);
    }
    Ok((labels, rows))
}

fn try_parse_minima_csv(raw: &str) -> Result<Vec<(String, usize)>, String> {
    let mut reader = csv::Reader::from_reader(raw.as_bytes());
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        out.push((
            rec[0].to_string(),
            rec[1].parse().map_err(|_| format!("bad distance {:?}", &rec[1]))?,
        ));
    }
    Ok(out)
}

type DistributionPair = (BTreeMap<usize, u64>, BTreeMap<usize, u64>);

fn try_parse_distribution_csv(raw: &str) -> Result<DistributionPair, String> {
    let mut twisted = BTreeMap::new();
    let mut repetition = BTreeMap::new();
    let mut reader = csv::Reader::from_reader(raw.as_bytes());
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        let distance: usize = rec[1].parse().map_err(|_| format!("bad distance {:?}", &rec[1]))?;
        let count: u64 = rec[2].parse().map_err(|_| format!("bad count {:?}", &rec[2]))?;
        match &rec[0] {
            "twisted" => twisted.insert(distance, count),
            "repetition" => repetition.insert(distance, count),
            other => return Err(format!("unknown distribution kind {other:?}")),
        };
    }
    Ok((twisted, repetition))
}

fn try_parse_summary_csv(raw: &str) -> Result<Vec<SummaryRow>, String> {
    let mut reader = csv::Reader::from_reader(raw.as_bytes());
    let mut out = Vec::new();
    for rec in reader.records() {
        let rec = rec.map_err(|e| e.to_string())?;
        out.push(SummaryRow {
            family: rec[0].to_string(),
            blocks: rec[1].parse().map_err(|_| format!("bad blocks {:?}", &rec[1]))?,
            symbols: rec[2].parse().map_err(|_| format!("bad symbols {:?}", &rec[2]))?,
            repetition_distance: rec[3]
                .parse()
                .map_err(|_| format!("bad repetition distance {:?}", &rec[3]))?,
            twisted_distance: rec[4]
                .parse()
                .map_err(|_| format!("bad twisted distance {:?}", &rec[4]))?,
        });
    }
    Ok(out)
}

/// All reference data in one place, either baked in or loaded from a
/// directory of CSV files at run time.
#[derive(Clone, Debug)]
pub struct Reference {
    pub s6: SupportTable,
    pub a6: SupportTable,
    pub m12: SupportTable,
    pub asl32_pairs: Vec<Vec<usize>>,
    pub order12_labels: Vec<String>,
    pub order12_matrix: Vec<Vec<usize>>,
    pub minima: Vec<(String, usize)>,
    pub m12_twisted: BTreeMap<usize, u64>,
    pub m12_repetition: BTreeMap<usize, u64>,
    pub summary: Vec<SummaryRow>,
}

impl Reference {
    pub fn builtin() -> Reference {
        Reference::from_loader(&mut |file| {
            Ok(match file {
                "s6_supports.csv" => S6_SUPPORTS_CSV.to_string(),
                "a6_supports.csv" => A6_SUPPORTS_CSV.to_string(),
                "m12_supports.csv" => M12_SUPPORTS_CSV.to_string(),
                "asl32_supports.csv" => ASL32_SUPPORTS_CSV.to_string(),
                "s6h12_supports.csv" => S6H12_SUPPORTS_CSV.to_string(),
                "s6h12_multisets.csv" => S6H12_MULTISETS_CSV.to_string(),
                "m12_distributions.csv" => M12_DISTRIBUTIONS_CSV.to_string(),
                "summary.csv" => SUMMARY_CSV.to_string(),
                other => unreachable!("unknown reference file {other}"),
            })
        })
        .expect("built-in reference data is well-formed")
    }

    /// Load the same eight files from a directory instead; any unreadable or
    /// malformed file fails with its name.
    pub fn from_dir(dir: &Path) -> Result<Reference, String> {
        Reference::from_loader(&mut |file| {
            std::fs::read_to_string(dir.join(file)).map_err(|e| e.to_string())
        })
    }

    fn from_loader(
        load: &mut dyn FnMut(&str) -> Result<String, String>,
    ) -> Result<Reference, String> {
        let named = |file: &'static str, err: String| format!("{file}: {err}");
        let read = |load: &mut dyn FnMut(&str) -> Result<String, String>,
                    file: &'static str|
         -> Result<String, String> { load(file).map_err(|e| named(file, e)) };
        let s6 = try_parse_class_csv("s6", &read(load, "s6_supports.csv")?)
            .map_err(|e| named("s6_supports.csv", e))?;
        let a6 = try_parse_class_csv("a6", &read(load, "a6_supports.csv")?)
            .map_err(|e| named("a6_supports.csv", e))?;
        let m12 = try_parse_class_csv("m12", &read(load, "m12_supports.csv")?)
            .map_err(|e| named("m12_supports.csv", e))?;
        let asl32_pairs = try_parse_pair_csv(&read(load, "asl32_supports.csv")?)
            .map_err(|e| named("asl32_supports.csv", e))?;
        let (order12_labels, order12_matrix) =
            try_parse_matrix_csv(&read(load, "s6h12_supports.csv")?)
                .map_err(|e| named("s6h12_supports.csv", e))?;
        let minima = try_parse_minima_csv(&read(load, "s6h12_multisets.csv")?)
            .map_err(|e| named("s6h12_multisets.csv", e))?;
        let (m12_twisted, m12_repetition) =
            try_parse_distribution_csv(&read(load, "m12_distributions.csv")?)
                .map_err(|e| named("m12_distributions.csv", e))?;
        let summary = try_parse_summary_csv(&read(load, "summary.csv")?)
            .map_err(|e| named("summary.csv", e))?;
        Ok(Reference {
            s6,
            a6,
            m12,
            asl32_pairs,
            order12_labels,
            order12_matrix,
            minima,
            m12_twisted,
            m12_repetition,
            summary,
        })
    }
}

pub fn reference_s6_supports() -> SupportTable {
    try_parse_class_csv("s6", S6_SUPPORTS_CSV).expect("built-in reference")
}

pub fn reference_a6_supports() -> SupportTable {
    try_parse_class_csv("a6", A6_SUPPORTS_CSV).expect("built-in reference")
}

pub fn reference_m12_supports() -> SupportTable {
    try_parse_class_csv("m12", M12_SUPPORTS_CSV).expect("built-in reference")
}

pub fn reference_asl32_pairs() -> Vec<Vec<usize>> {
    try_parse_pair_csv(ASL32_SUPPORTS_CSV).expect("built-in reference")
}

/// Reference matrix plus its class-label header.
pub fn reference_order12_matrix() -> (Vec<String>, Vec<Vec<usize>>) {
    try_parse_matrix_csv(S6H12_SUPPORTS_CSV).expect("built-in reference")
}

pub fn reference_order12_minima() -> Vec<(String, usize)> {
    try_parse_minima_csv(S6H12_MULTISETS_CSV).expect("built-in reference")
}

pub fn reference_m12_distributions() -> DistributionPair {
    try_parse_distribution_csv(M12_DISTRIBUTIONS_CSV).expect("built-in reference")
}

pub fn reference_summary() -> Vec<SummaryRow> {
    try_parse_summary_csv(SUMMARY_CSV).expect("built-in reference")
}

/// Signature multisets must coincide; reports one line per leftover row on
/// either side.
pub fn table_mismatches(computed: &SupportTable, reference: &SupportTable) -> Vec<String> {
    let key = |r: &ClassRow| (r.order, r.size, r.supports.clone());
    let mut got: Vec<_> = computed.rows.iter().map(key).collect();
    let mut want: Vec<_> = reference.rows.iter().map(key).collect();
    got.sort();
    want.sort();
    if got == want {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut leftover_want = want.clone();
    for g in &got {
        if let Some(i) = leftover_want.iter().position(|w| w == g) {
            leftover_want.remove(i);
        } else {
            out.push(format!(
                "{}: computed class (order {}, size {}) has supports {:?} not in reference",
                computed.name, g.0, g.1, g.2
            ));
        }
    }
    let mut leftover_got = got.clone();
    for w in &want {
        if let Some(i) = leftover_got.iter().position(|g| g == w) {
            leftover_got.remove(i);
        } else {
            out.push(format!(
                "{}: reference class (order {}, size {}) with supports {:?} not produced",
                computed.name, w.0, w.1, w.2
            ));
        }
    }
    out
}

/// Support-pair multiset comparison for the two anonymous complement columns.
pub fn asl32_mismatches(b: &Asl32, reference_pairs: &[Vec<usize>]) -> Vec<String> {
    let computed = asl32_supports(b);
    let mut got: Vec<Vec<usize>> = computed.rows.iter().map(|r| r.supports.clone()).collect();
    let mut want = reference_pairs.to_vec();
    got.sort();
    want.sort();
    if got == want {
        Vec::new()
    } else {
        vec![format!(
            "asl32: support pairs {:?} differ from reference {:?}",
            got, want
        )]
    }
}

/// The four degree-60 support rows, with class columns in the order of
/// [`S6_CLASS_KEYS`].
pub fn order12_support_matrix(b: &S6Order12) -> Vec<Vec<usize>> {
    b.actions
        .iter()
        .map(|action| {
            S6_CLASS_KEYS
                .iter()
                .map(|&(_, order, size, supp)| {
                    action.support(class_rep(&b.group, order, size, supp))
                })
                .collect()
        })
        .collect()
}

pub fn order12_mismatches(
    b: &S6Order12,
    labels: &[String],
    reference: &[Vec<usize>],
) -> Vec<String> {
    let computed = order12_support_matrix(b);
    let expected_labels: Vec<&str> = S6_CLASS_KEYS.iter().map(|k| k.0).collect();
    if labels != expected_labels {
        return vec![format!("s6h12: unexpected reference header {:?}", labels)];
    }
    if computed.len() != reference.len() {
        return vec![format!(
            "s6h12: {} computed rows vs {} reference rows",
            computed.len(),
            reference.len()
        )];
    }
    let mut out = Vec::new();
    for (i, (got, want)) in computed.iter().zip(reference).enumerate() {
        for (j, (g, w)) in got.iter().zip(want).enumerate() {
            if g != w {
                out.push(format!(
                    "s6h12: action {} class {}: computed {} reference {}",
                    i + 1,
                    labels[j],
                    g,
                    w
                ));
            }
        }
    }
    out
}

/// Every size-4 multiset over the four degree-60 representations, with the
/// minimum distance of the resulting length-240 code.
pub fn order12_multiset_minima(b: &S6Order12) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    for i in 1..=4usize {
        for j in i..=4 {
            for k in j..=4 {
                for l in k..=4 {
                    let tuple = vec![
                        &b.actions[i - 1],
                        &b.actions[j - 1],
                        &b.actions[k - 1],
                        &b.actions[l - 1],
                    ];
                    let code = Code::new(&b.group, tuple).expect("equal degrees");
                    out.push((format!("{i}{j}{k}{l}"), code.min_distance()));
                }
            }
        }
    }
    out
}

pub fn order12_minima_mismatches(b: &S6Order12, reference: &[(String, usize)]) -> Vec<String> {
    let computed = order12_multiset_minima(b);
    let want: BTreeMap<&str, usize> = reference.iter().map(|(k, v)| (k.as_str(), *v)).collect();
    let mut out = Vec::new();
    for (key, got) in &computed {
        match want.get(key.as_str()) {
            Some(w) if w == got => {}
            Some(w) => out.push(format!(
                "s6h12 multisets: {{{key}}} computed {got} reference {w}"
            )),
            None => out.push(format!("s6h12 multisets: {{{key}}} missing from reference")),
        }
    }
    if computed.len() != reference.len() {
        out.push(format!(
            "s6h12 multisets: {} computed rows vs {} reference rows",
            computed.len(),
            reference.len()
        ));
    }
    out
}

/// Twisted and repetition inner distributions via the distance-from-base scan
/// over all 95,040 elements.
pub fn m12_distributions(b: &M12) -> DistributionPair {
    let twisted = Code::new(&b.group, vec![&b.natural, &b.second])
        .expect("equal degrees")
        .inner_distribution();
    let repetition = Code::new(&b.group, vec![&b.natural, &b.natural])
        .expect("equal degrees")
        .inner_distribution();
    (twisted, repetition)
}

pub fn m12_distribution_mismatches(
    b: &M12,
    twisted_ref: &BTreeMap<usize, u64>,
    repetition_ref: &BTreeMap<usize, u64>,
) -> Vec<String> {
    let (tw, rep) = m12_distributions(b);
    let mut out = Vec::new();
    if &tw != twisted_ref {
        out.push(format!(
            "m12 distributions: twisted {:?} differs from reference {:?}",
            tw, twisted_ref
        ));
    }
    if &rep != repetition_ref {
        out.push(format!(
            "m12 distributions: repetition {:?} differs from reference {:?}",
            rep, repetition_ref
        ));
    }
    out
}

/// Headline minimum distances for the three two-block families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummaryRow {
    pub family: String,
    pub blocks: usize,
    pub symbols: usize,
    pub repetition_distance: usize,
    pub twisted_distance: usize,
}

pub fn computed_summary(s6b: &S6, a6b: &A6, asl32b: &Asl32) -> Vec<SummaryRow> {
    let row = |family: &str, group: &PermGroup, first: &Action, second: &Action| SummaryRow {
        family: family.to_string(),
        blocks: 2,
        symbols: first.degree(),
        repetition_distance: repetition_min_distance(group, &[first, first]),
        twisted_distance: Code::new(group, vec![first, second])
            .expect("equal degrees")
            .min_distance(),
    };
    vec![
        row("s6", &s6b.group, &s6b.natural, &s6b.twisted),
        row("a6", &a6b.group, &a6b.natural, &a6b.twisted),
        row("asl32", &asl32b.group, &asl32b.actions[0], &asl32b.actions[1]),
    ]
}

pub fn summary_mismatches(
    s6b: &S6,
    a6b: &A6,
    asl32b: &Asl32,
    reference: &[SummaryRow],
) -> Vec<String> {
    let computed = computed_summary(s6b, a6b, asl32b);
    let mut out = Vec::new();
    for want in reference {
        match computed.iter().find(|r| r.family == want.family) {
            Some(got) if got == want => {}
            Some(got) => out.push(format!(
                "summary: {} computed ({}, {}) reference ({}, {})",
                want.family,
                got.repetition_distance,
                got.twisted_distance,
                want.repetition_distance,
                want.twisted_distance
            )),
            None => out.push(format!("summary: family {} not computed", want.family)),
        }
    }
    out
}

/// Outcome of checking one computed table against its reference file.
#[derive(Clone, Debug)]
pub struct TableReport {
    pub name: &'static str,
    pub mismatches: Vec<String>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Check every computed table against the given reference at once.
pub fn verify_all(
    s6b: &S6,
    a6b: &A6,
    m12b: &M12,
    asl32b: &Asl32,
    h12: &S6Order12,
    reference: &Reference,
) -> Vec<TableReport> {
    vec![
        TableReport {
            name: "s6",
            mismatches: table_mismatches(&s6_supports(s6b), &reference.s6),
        },
        TableReport {
            name: "a6",
            mismatches: table_mismatches(&a6_supports(a6b), &reference.a6),
        },
        TableReport {
            name: "m12",
            mismatches: table_mismatches(&m12_supports(m12b), &reference.m12),
        },
        TableReport {
            name: "asl32",
            mismatches: asl32_mismatches(asl32b, &reference.asl32_pairs),
        },
        TableReport {
            name: "s6h12",
            mismatches: order12_mismatches(h12, &reference.order12_labels, &reference.order12_matrix),
        },
        TableReport {
            name: "s6h12-multisets",
            mismatches: order12_minima_mismatches(h12, &reference.minima),
        },
        TableReport {
            name: "m12-distributions",
            mismatches: m12_distribution_mismatches(
                m12b,
                &reference.m12_twisted,
                &reference.m12_repetition,
            ),
        },
        TableReport {
            name: "summary",
            mismatches: summary_mismatches(s6b, a6b, asl32b, &reference.summary),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_files_parse() {
        assert_eq!(reference_s6_supports().rows.len(), 11);
        assert_eq!(reference_a6_supports().rows.len(), 7);
        assert_eq!(reference_m12_supports().rows.len(), 15);
        assert_eq!(reference_asl32_pairs().len(), 11);
        let (labels, matrix) = reference_order12_matrix();
        assert_eq!(labels.len(), 11);
        assert_eq!(matrix.len(), 4);
        assert_eq!(reference_order12_minima().len(), 35);
        let (tw, rep) = reference_m12_distributions();
        assert_eq!(tw.values().sum::<u64>(), 95_040);
        assert_eq!(rep.values().sum::<u64>(), 95_040);
        assert_eq!(reference_summary().len(), 3);
        let bundle = Reference::builtin();
        assert_eq!(bundle.minima.len(), 35);
        assert_eq!(bundle.summary.len(), 3);
    }

    #[test]
    fn malformed_reference_directory_names_the_file() {
        let err = Reference::from_dir(Path::new("/nonexistent-reference-dir")).unwrap_err();
        assert!(err.starts_with("s6_supports.csv:"), "{err}");
    }

    #[test]
    fn multiset_minima_reference_is_symmetric_under_slot_swap() {
        // swapping representation slots 1<->2 and 3<->4 fixes every minimum:
        // the underlying actions differ by an automorphism of the group
        let reference = reference_order12_minima();
        let lookup: BTreeMap<&str, usize> =
            reference.iter().map(|(k, v)| (k.as_str(), *v)).collect();
        for (key, value) in &reference {
            let mut swapped: Vec<u8> = key
                .bytes()
                .map(|b| match b {
                    b'1' => b'2',
                    b'2' => b'1',
                    b'3' => b'4',
                    b'4' => b'3',
                    other => other,
                })
                .collect();
            swapped.sort_unstable();
            let swapped = String::from_utf8(swapped).unwrap();
            assert_eq!(
                lookup.get(swapped.as_str()),
                Some(value),
                "minimum for {key} must equal its twin {swapped}"
            );
        }
    }

    #[test]
    fn s6_class_keys_cover_all_signatures() {
        let mut sizes: Vec<usize> = S6_CLASS_KEYS.iter().map(|k| k.2).collect();
        sizes.sort_unstable();
        assert_eq!(sizes.iter().sum::<usize>(), 720);
    }
}
