//! Command-line front end: recompute the built-in code tables, measure
//! minimum distances and distance distributions for chosen groups and
//! representation tuples, inspect neighbour orbits, audit the GF(2^f) slope
//! family, and verify everything against the stored reference tables.
//!
//! Output is deterministic: the same arguments (including `--seed`) always
//! produce byte-identical output. Exit codes: 0 on success, 1 when a
//! verification or audit finds a mismatch, 2 on usage errors.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use permcode::asl2r;
use permcode::builtin;
use permcode::neighbour;
use permcode::repr::Action;
use permcode::tables::{self, Reference, SupportTable};
use permcode::{repetition_min_distance, Code, Perm, PermGroup};

#[derive(Parser)]
#[command(
    name = "permcode",
    version,
    about = "Permutation codes from finite groups: distances, distributions, and table verification"
)]
struct Cli {
    /// Output format for tabular results
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Seed for the deterministic subgroup searches
    #[arg(long, global = true, default_value_t = builtin::DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    /// Generator matrices per slope
    Reps,
    /// Relation, complement, and whole-group audits
    Audit,
    /// Exact inner distance distribution of the twisted code
    Distributions,
}

#[derive(Subcommand)]
enum Command {
    /// Recompute the built-in tables
    Tables {
        /// Emit a single table: s6, a6, m12, asl32, s6h12, s6h12-multisets,
        /// m12-distributions, or summary
        #[arg(long)]
        only: Option<String>,
    },
    /// Minimum distance of the code built from a group and a tuple of actions
    Mindist {
        /// Built-in group name (s6, a6, m12, psl32, asl32, s6h12, asl2_4) or
        /// path to a generator file
        #[arg(long)]
        group: String,
        /// Action names, slot digits (s6h12), or coset:<generators> items,
        /// separated by `+` (or `,` when no cycle notation is involved)
        #[arg(long)]
        tuple: String,
    },
    /// Exact inner distance distribution of the same codes
    Distribution {
        #[arg(long)]
        group: String,
        #[arg(long)]
        tuple: String,
    },
    /// Neighbour orbit structure of the two-block twisted codes
    Neighbours {
        /// s6 or a6
        #[arg(long)]
        group: String,
    },
    /// The GF(2^f) slope family: generators, audits, distributions
    Asl2r {
        /// Field exponent: 2, 3, or 4
        #[arg(long)]
        f: u32,
        #[arg(long, value_enum, default_value_t = Emit::Audit)]
        emit: Emit,
        /// Allow the whole-group enumeration at f = 4 (about a million
        /// elements)
        #[arg(long)]
        allow_large: bool,
    },
    /// Check every computed table against the stored references; prints a
    /// JSON verdict
    Verify {
        /// Load reference CSV files from this directory instead of the
        /// built-in copies
        #[arg(long)]
        reference: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    // die quietly instead of panicking when stdout closes early (head, etc.)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Tables { ref only } => cmd_tables(cli.format, cli.seed, only.as_deref()),
        Command::Mindist { ref group, ref tuple } => {
            cmd_code(cli.format, cli.seed, group, tuple, false)
        }
        Command::Distribution { ref group, ref tuple } => {
            cmd_code(cli.format, cli.seed, group, tuple, true)
        }
        Command::Neighbours { ref group } => cmd_neighbours(cli.format, group),
        Command::Asl2r { f, emit, allow_large } => cmd_asl2r(cli.format, f, emit, allow_large),
        Command::Verify { ref reference } => cmd_verify(cli.seed, reference.as_deref()),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

// ---------------------------------------------------------------------------
// group and tuple resolution

enum Source {
    S6(builtin::S6),
    A6(builtin::A6),
    M12(builtin::M12),
    Psl32(builtin::Psl32),
    Asl32(builtin::Asl32),
    Order12(builtin::S6Order12),
    Asl24(asl2r::SlopeActions),
    File { group: PermGroup, natural: Action },
}

impl Source {
    fn group(&self) -> &PermGroup {
        match self {
            Source::S6(b) => &b.group,
            Source::A6(b) => &b.group,
            Source::M12(b) => &b.group,
            Source::Psl32(b) => &b.group,
            Source::Asl32(b) => &b.group,
            Source::Order12(b) => &b.group,
            Source::Asl24(b) => &b.group,
            Source::File { group, .. } => group,
        }
    }

    fn action(&self, name: &str) -> Option<&Action> {
        match (self, name) {
            (Source::S6(b), "natural") => Some(&b.natural),
            (Source::S6(b), "twisted") => Some(&b.twisted),
            (Source::S6(b), "cosets") => Some(&b.cosets),
            (Source::A6(b), "natural") => Some(&b.natural),
            (Source::A6(b), "twisted") => Some(&b.twisted),
            (Source::M12(b), "natural") => Some(&b.natural),
            (Source::M12(b), "second") => Some(&b.second),
            (Source::Psl32(b), "points") => Some(&b.points),
            (Source::Psl32(b), "hyperplanes") => Some(&b.hyperplanes),
            (Source::Asl32(b), "natural") => Some(&b.natural),
            (Source::Asl32(b), "complement1") => Some(&b.actions[0]),
            (Source::Asl32(b), "complement2") => Some(&b.actions[1]),
            (Source::Order12(b), "1" | "2" | "3" | "4") => {
                let i: usize = name.parse().unwrap();
                Some(&b.actions[i - 1])
            }
            (Source::Asl24(b), _) => {
                let w: usize = name.strip_prefix("slope")?.parse().ok()?;
                b.actions.get(w)
            }
            (Source::File { natural, .. }, "natural") => Some(natural),
            _ => None,
        }
    }

    fn action_names(&self) -> &'static str {
        match self {
            Source::S6(_) => "natural, twisted, cosets",
            Source::A6(_) => "natural, twisted",
            Source::M12(_) => "natural, second",
            Source::Psl32(_) => "points, hyperplanes",
            Source::Asl32(_) => "natural, complement1, complement2",
            Source::Order12(_) => "1, 2, 3, 4",
            Source::Asl24(_) => "slope0, slope1, slope2, slope3",
            Source::File { .. } => "natural",
        }
    }
}

fn load_source(name: &str, seed: u64) -> Result<Source, String> {
    match name {
        "s6" => Ok(Source::S6(builtin::s6())),
        "a6" => Ok(Source::A6(builtin::a6())),
        "m12" => Ok(Source::M12(builtin::m12(seed))),
        "psl32" => Ok(Source::Psl32(builtin::psl32())),
        "asl32" => Ok(Source::Asl32(builtin::asl32(seed))),
        "s6h12" => Ok(Source::Order12(builtin::s6_order12())),
        "asl2_4" => Ok(Source::Asl24(
            asl2r::slope_actions(2).expect("f=2 enumeration is small"),
        )),
        other => {
            let path = Path::new(other);
            if path.exists() {
                load_group_file(path)
            } else {
                Err(format!(
                    "unknown group {other:?}; use a built-in name (s6, a6, m12, psl32, asl32, \
                     s6h12, asl2_4) or a generator file path"
                ))
            }
        }
    }
}

/// Generator file: optional `#` comment lines, then `degree <n>`, then one
/// permutation in cycle notation per line.
fn load_group_file(path: &Path) -> Result<Source, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| format!("{}: empty file", path.display()))?;
    let degree: usize = header
        .strip_prefix("degree")
        .map(str::trim)
        .and_then(|n| n.parse().ok())
        .ok_or_else(|| format!("{}: first line must be `degree <n>`", path.display()))?;
    let mut gens = Vec::new();
    for line in lines {
        gens.push(
            Perm::parse(degree, line).map_err(|e| format!("{}: {line:?}: {e}", path.display()))?,
        );
    }
    if gens.is_empty() {
        return Err(format!("{}: no generators", path.display()));
    }
    let group = PermGroup::from_generators(gens, 1_000_000)
        .map_err(|e| format!("{}: {e}", path.display()))?;
    let natural = Action::natural(&group);
    Ok(Source::File { group, natural })
}

enum TupleItem {
    Named(String),
    Coset(String),
}

fn parse_tuple(spec: &str) -> Vec<TupleItem> {
    // a bare digit string like 1134 is shorthand for one slot per digit
    if spec.len() > 1 && spec.bytes().all(|b| b.is_ascii_digit()) {
        return spec
            .chars()
            .map(|c| TupleItem::Named(c.to_string()))
            .collect();
    }
    // commas double as separators only while no cycle notation is involved
    let parts: Vec<&str> = if spec.contains('(') {
        spec.split('+').collect()
    } else {
        spec.split(['+', ',']).collect()
    };
    parts
        .into_iter()
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| match s.strip_prefix("coset:") {
            Some(rest) => TupleItem::Coset(rest.to_string()),
            None => TupleItem::Named(s.to_string()),
        })
        .collect()
}

/// Coset action on the subgroup generated by semicolon-separated permutations.
fn coset_action(group: &PermGroup, spec: &str) -> Result<Action, String> {
    let mut indices = Vec::new();
    for part in spec.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let p = Perm::parse(group.degree(), part)
            .map_err(|e| format!("bad permutation {part:?}: {e}"))?;
        let i = group
            .index_of(&p)
            .ok_or_else(|| format!("permutation {part:?} is not a group element"))?;
        indices.push(i);
    }
    let members = group
        .subgroup_closure(&indices, group.order())
        .expect("closure cannot exceed the group order");
    let index = group.order() / members.len();
    if group.order() * index > 100_000_000 {
        return Err(format!(
            "coset action on {} cosets is too large to store",
            index
        ));
    }
    let table = group.coset_table(&members);
    Ok(Action::from_coset_table(group, &table))
}

fn resolve_tuple<'a>(
    source: &'a Source,
    items: &[TupleItem],
    extra: &'a mut Vec<Action>,
) -> Result<Vec<ActionSlot>, String> {
    // indices into either the source's named actions or the extra arena,
    // resolved to references only after the arena stops growing
    let mut slots = Vec::new();
    for item in items {
        match item {
            TupleItem::Named(name) => {
                if source.action(name).is_none() {
                    return Err(format!(
                        "unknown action {name:?} for this group (available: {})",
                        source.action_names()
                    ));
                }
                slots.push(ActionSlot::Named(name.clone()));
            }
            TupleItem::Coset(spec) => {
                extra.push(coset_action(source.group(), spec)?);
                slots.push(ActionSlot::Extra(extra.len() - 1));
            }
        }
    }
    if slots.is_empty() {
        return Err("empty tuple".into());
    }
    Ok(slots)
}

enum ActionSlot {
    Named(String),
    Extra(usize),
}

fn slot_refs<'a>(
    source: &'a Source,
    extra: &'a [Action],
    slots: &[ActionSlot],
) -> Vec<&'a Action> {
    slots
        .iter()
        .map(|s| match s {
            ActionSlot::Named(name) => source.action(name).expect("validated"),
            ActionSlot::Extra(i) => &extra[*i],
        })
        .collect()
}

fn tuple_display(items: &[TupleItem]) -> String {
    items
        .iter()
        .map(|i| match i {
            TupleItem::Named(n) => n.clone(),
            TupleItem::Coset(s) => format!("coset:{s}"),
        })
        .collect::<Vec<_>>()
        .join("+")
}

// ---------------------------------------------------------------------------
// subcommands

fn cmd_code(
    format: Format,
    seed: u64,
    group_name: &str,
    tuple_spec: &str,
    distribution: bool,
) -> Result<ExitCode, String> {
    let source = load_source(group_name, seed)?;
    let items = parse_tuple(tuple_spec);
    let mut extra = Vec::new();
    let slots = resolve_tuple(&source, &items, &mut extra)?;
    let actions = slot_refs(&source, &extra, &slots);
    let code = Code::new(source.group(), actions).map_err(|e| e.to_string())?;
    let tuple_name = tuple_display(&items);

    if distribution {
        let dist = code.inner_distribution();
        match format {
            Format::Csv => {
                let mut out = String::from("distance,count\n");
                for (d, c) in &dist {
                    writeln!(out, "{d},{c}").unwrap();
                }
                print!("{out}");
            }
            Format::Json => print_json(&json!({
                "group": group_name,
                "tuple": tuple_name,
                "distribution": distribution_json(&dist),
            })),
        }
    } else {
        let min = code.min_distance();
        let bound = repetition_min_distance(code.group(), code.actions());
        match format {
            Format::Csv => {
                println!("group,tuple,blocks,symbols,codewords,min_distance,repetition_lower_bound");
                println!(
                    "{group_name},{tuple_name},{},{},{},{min},{bound}",
                    code.blocks(),
                    code.q(),
                    code.size()
                );
            }
            Format::Json => print_json(&json!({
                "group": group_name,
                "tuple": tuple_name,
                "blocks": code.blocks(),
                "symbols": code.q(),
                "codewords": code.size(),
                "min_distance": min,
                "repetition_lower_bound": bound,
            })),
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_neighbours(format: Format, group: &str) -> Result<ExitCode, String> {
    let bundle = builtin::s6();
    let report = match group {
        "s6" => neighbour::neighbour_orbits(&bundle, &bundle.group),
        "a6" => {
            let sub = builtin::a6();
            neighbour::neighbour_orbits(&bundle, &sub.group)
        }
        other => return Err(format!("unknown group {other:?}; expected s6 or a6")),
    };
    let join = |v: &[usize]| {
        v.iter()
            .map(|n| n.to_string())
            .collect::<Vec<_>>()
            .join("+")
    };
    match format {
        Format::Csv => {
            println!("group,code_size,neighbour_count,orbit_sizes_with_swap,orbit_sizes_without_swap");
            println!(
                "{group},{},{},{},{}",
                report.code_size,
                report.neighbour_count,
                join(&report.orbit_sizes_with_swap),
                join(&report.orbit_sizes_without_swap)
            );
        }
        Format::Json => print_json(&json!({
            "group": group,
            "code_size": report.code_size,
            "neighbour_count": report.neighbour_count,
            "orbit_sizes_with_swap": report.orbit_sizes_with_swap,
            "orbit_sizes_without_swap": report.orbit_sizes_without_swap,
        })),
    }
    Ok(ExitCode::SUCCESS)
}

fn matrix_csv(m: asl2r::Mat3) -> String {
    asl2r::mat3_rows(m)
        .iter()
        .map(|row| format!("{} {} {}", row[0], row[1], row[2]))
        .collect::<Vec<_>>()
        .join(" / ")
}

fn matrix_json(m: asl2r::Mat3) -> Value {
    json!(asl2r::mat3_rows(m))
}

fn cmd_asl2r(format: Format, f: u32, emit: Emit, allow_large: bool) -> Result<ExitCode, String> {
    let family = asl2r::Asl2r::new(f).map_err(|e| e.to_string())?;
    match emit {
        Emit::Reps => {
            let mut named: Vec<(String, asl2r::Mat3)> = vec![("x".into(), family.x())];
            for w in 0..family.r() {
                named.push((format!("y{w}"), family.y(w)));
                named.push((format!("z{w}"), family.z(w)));
            }
            named.push(("e10".into(), family.translation(1, 0)));
            named.push(("e01".into(), family.translation(0, 1)));
            match format {
                Format::Csv => {
                    println!("generator,matrix");
                    for (name, m) in &named {
                        println!("{name},{}", matrix_csv(*m));
                    }
                }
                Format::Json => print_json(&json!({
                    "f": f,
                    "r": family.r(),
                    "modulus": family.field.modulus,
                    "min_poly": family.min_poly(),
                    "generators": named
                        .iter()
                        .map(|(name, m)| json!({"name": name, "matrix": matrix_json(*m)}))
                        .collect::<Vec<_>>(),
                })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Emit::Audit => {
            let light = asl2r::light_audit(f).map_err(|e| e.to_string())?;
            let full = match asl2r::full_audit(f, allow_large) {
                Ok(full) => Some(full),
                Err(asl2r::Asl2rError::EnumerationGuard { .. }) => None,
                Err(e) => return Err(e.to_string()),
            };
            let mut failed = !light.failures.is_empty();
            if let Some(full) = &full {
                failed |= !full.failures.is_empty();
            }
            match format {
                Format::Csv => {
                    let mut out = String::from("key,value\n");
                    writeln!(out, "f,{f}").unwrap();
                    writeln!(out, "r,{}", light.r).unwrap();
                    writeln!(out, "min_poly,{}", join_nums(&light.min_poly)).unwrap();
                    writeln!(out, "relation_instances,{}", light.relation_instances).unwrap();
                    writeln!(out, "slope_group_order,{}", light.slope_group_order).unwrap();
                    writeln!(
                        out,
                        "slopes_pairwise_nonconjugate,{}",
                        light.slopes_pairwise_nonconjugate
                    )
                    .unwrap();
                    writeln!(out, "light_failures,{}", light.failures.len()).unwrap();
                    match &full {
                        Some(full) => {
                            writeln!(out, "group_order,{}", full.group_order).unwrap();
                            writeln!(out, "class_count,{}", full.class_count).unwrap();
                            writeln!(out, "min_distance,{}", full.min_distance).unwrap();
                            let dist = full
                                .distribution
                                .iter()
                                .map(|(d, c)| format!("{d}:{c}"))
                                .collect::<Vec<_>>()
                                .join(" ");
                            writeln!(out, "distribution,{dist}").unwrap();
                            writeln!(out, "full_failures,{}", full.failures.len()).unwrap();
                        }
                        None => writeln!(out, "full,skipped (pass --allow-large)").unwrap(),
                    }
                    print!("{out}");
                }
                Format::Json => print_json(&json!({
                    "f": f,
                    "light": {
                        "r": light.r,
                        "min_poly": light.min_poly,
                        "relation_instances": light.relation_instances,
                        "slope_group_order": light.slope_group_order,
                        "slopes_pairwise_nonconjugate": light.slopes_pairwise_nonconjugate,
                        "failures": light.failures,
                    },
                    "full": full.as_ref().map(|full| json!({
                        "group_order": full.group_order,
                        "class_count": full.class_count,
                        "min_distance": full.min_distance,
                        "distribution": distribution_json(&full.distribution),
                        "failures": full.failures,
                    })),
                })),
            }
            if failed {
                eprintln!("audit failed at f = {f}");
                Ok(ExitCode::from(1))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
        Emit::Distributions => {
            let full = asl2r::full_audit(f, allow_large).map_err(|e| e.to_string())?;
            match format {
                Format::Csv => {
                    let mut out = String::from("distance,count\n");
                    for (d, c) in &full.distribution {
                        writeln!(out, "{d},{c}").unwrap();
                    }
                    print!("{out}");
                }
                Format::Json => print_json(&json!({
                    "f": f,
                    "r": full.r,
                    "min_distance": full.min_distance,
                    "distribution": distribution_json(&full.distribution),
                })),
            }
            if full.failures.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                eprintln!("audit failed at f = {f}");
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn cmd_verify(seed: u64, reference_dir: Option<&Path>) -> Result<ExitCode, String> {
    let reference = match reference_dir {
        Some(dir) => match Reference::from_dir(dir) {
            Ok(r) => r,
            Err(message) => {
                print_json(&json!({ "pass": false, "error": message }));
                eprintln!("verification failed: {message}");
                return Ok(ExitCode::from(1));
            }
        },
        None => Reference::builtin(),
    };
    let s6b = builtin::s6();
    let a6b = builtin::a6();
    let m12b = builtin::m12(seed);
    let asl32b = builtin::asl32(seed);
    let h12 = builtin::s6_order12();
    let reports = tables::verify_all(&s6b, &a6b, &m12b, &asl32b, &h12, &reference);
    let pass = reports.iter().all(|r| r.passed());
    print_json(&json!({
        "pass": pass,
        "reports": reports
            .iter()
            .map(|r| json!({
                "name": r.name,
                "pass": r.passed(),
                "mismatches": r.mismatches,
            }))
            .collect::<Vec<_>>(),
    }));
    if pass {
        Ok(ExitCode::SUCCESS)
    } else {
        let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
        eprintln!("verification failed: {}", failed.join(", "));
        Ok(ExitCode::from(1))
    }
}

// ---------------------------------------------------------------------------
// tables subcommand

const TABLE_NAMES: [&str; 8] = [
    "s6",
    "a6",
    "m12",
    "asl32",
    "s6h12",
    "s6h12-multisets",
    "m12-distributions",
    "summary",
];

fn cmd_tables(format: Format, seed: u64, only: Option<&str>) -> Result<ExitCode, String> {
    let selected: Vec<&str> = match only {
        Some(name) => {
            if !TABLE_NAMES.contains(&name) {
                return Err(format!(
                    "unknown table {name:?}; expected one of {}",
                    TABLE_NAMES.join(", ")
                ));
            }
            vec![name]
        }
        None => TABLE_NAMES.to_vec(),
    };
    let reference = Reference::builtin();
    let need = |n: &str| selected.contains(&n);

    let s6b = (need("s6") || need("summary")).then(builtin::s6);
    let a6b = (need("a6") || need("summary")).then(builtin::a6);
    let m12b = (need("m12") || need("m12-distributions")).then(|| builtin::m12(seed));
    let asl32b = (need("asl32") || need("summary")).then(|| builtin::asl32(seed));
    let h12 = (need("s6h12") || need("s6h12-multisets")).then(builtin::s6_order12);

    let mut csv = String::new();
    let mut values: Vec<Value> = Vec::new();
    let single = selected.len() == 1;
    for name in &selected {
        if !single {
            if !csv.is_empty() {
                csv.push('\n');
            }
            writeln!(csv, "# table: {name}").unwrap();
        }
        match *name {
            "s6" => {
                let mut t = tables::s6_supports(s6b.as_ref().unwrap());
                tables::attach_labels(&mut t, &reference.s6);
                emit_support_table(&mut csv, &mut values, &t);
            }
            "a6" => {
                let mut t = tables::a6_supports(a6b.as_ref().unwrap());
                tables::attach_labels(&mut t, &reference.a6);
                emit_support_table(&mut csv, &mut values, &t);
            }
            "m12" => {
                let mut t = tables::m12_supports(m12b.as_ref().unwrap());
                tables::attach_labels(&mut t, &reference.m12);
                emit_support_table(&mut csv, &mut values, &t);
            }
            "asl32" => {
                let mut t = tables::asl32_supports(asl32b.as_ref().unwrap());
                label_by_order(&mut t);
                emit_support_table(&mut csv, &mut values, &t);
            }
            "s6h12" => {
                let matrix = tables::order12_support_matrix(h12.as_ref().unwrap());
                let labels: Vec<&str> = tables::S6_CLASS_KEYS.iter().map(|k| k.0).collect();
                writeln!(csv, "action,{}", labels.join(",")).unwrap();
                for (i, row) in matrix.iter().enumerate() {
                    writeln!(csv, "{},{}", i + 1, join_csv(row)).unwrap();
                }
                values.push(json!({
                    "name": "s6h12",
                    "columns": labels,
                    "rows": matrix
                        .iter()
                        .enumerate()
                        .map(|(i, row)| json!({"action": i + 1, "supports": row}))
                        .collect::<Vec<_>>(),
                }));
            }
            "s6h12-multisets" => {
                let minima = tables::order12_multiset_minima(h12.as_ref().unwrap());
                writeln!(csv, "multiset,min_distance").unwrap();
                for (m, d) in &minima {
                    writeln!(csv, "{m},{d}").unwrap();
                }
                values.push(json!({
                    "name": "s6h12-multisets",
                    "rows": minima
                        .iter()
                        .map(|(m, d)| json!({"multiset": m, "min_distance": d}))
                        .collect::<Vec<_>>(),
                }));
            }
            "m12-distributions" => {
                let (tw, rep) = tables::m12_distributions(m12b.as_ref().unwrap());
                writeln!(csv, "code,distance,count").unwrap();
                for (d, c) in &tw {
                    writeln!(csv, "twisted,{d},{c}").unwrap();
                }
                for (d, c) in &rep {
                    writeln!(csv, "repetition,{d},{c}").unwrap();
                }
                values.push(json!({
                    "name": "m12-distributions",
                    "twisted": distribution_json(&tw),
                    "repetition": distribution_json(&rep),
                }));
            }
            "summary" => {
                let rows = tables::computed_summary(
                    s6b.as_ref().unwrap(),
                    a6b.as_ref().unwrap(),
                    asl32b.as_ref().unwrap(),
                );
                writeln!(csv, "family,blocks,symbols,repetition_distance,twisted_distance")
                    .unwrap();
                for r in &rows {
                    writeln!(
                        csv,
                        "{},{},{},{},{}",
                        r.family, r.blocks, r.symbols, r.repetition_distance, r.twisted_distance
                    )
                    .unwrap();
                }
                values.push(json!({
                    "name": "summary",
                    "rows": rows
                        .iter()
                        .map(|r| json!({
                            "family": r.family,
                            "blocks": r.blocks,
                            "symbols": r.symbols,
                            "repetition_distance": r.repetition_distance,
                            "twisted_distance": r.twisted_distance,
                        }))
                        .collect::<Vec<_>>(),
                }));
            }
            _ => unreachable!(),
        }
    }
    match format {
        Format::Csv => print!("{csv}"),
        Format::Json => print_json(&json!({ "tables": values })),
    }
    Ok(ExitCode::SUCCESS)
}

fn emit_support_table(csv: &mut String, values: &mut Vec<Value>, t: &SupportTable) {
    writeln!(csv, "class,order,size,{}", t.columns.join(",")).unwrap();
    for row in &t.rows {
        writeln!(
            csv,
            "{},{},{},{}",
            row.label,
            row.order,
            row.size,
            join_csv(&row.supports)
        )
        .unwrap();
    }
    values.push(json!({
        "name": t.name,
        "columns": t.columns,
        "rows": t.rows
            .iter()
            .map(|r| json!({
                "class": r.label,
                "order": r.order,
                "size": r.size,
                "supports": r.supports,
            }))
            .collect::<Vec<_>>(),
    }));
}

/// Label rows nA, nB, ... by element order in enumeration order, for tables
/// whose reference carries no labels.
fn label_by_order(t: &mut SupportTable) {
    let mut counts: BTreeMap<u64, u8> = BTreeMap::new();
    for row in &mut t.rows {
        let n = counts.entry(row.order).or_insert(0);
        row.label = format!("{}{}", row.order, (b'A' + *n) as char);
        *n += 1;
    }
}

// ---------------------------------------------------------------------------
// small helpers

fn join_csv(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn join_nums(values: &[u8]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn distribution_json(dist: &BTreeMap<usize, u64>) -> Value {
    json!(dist
        .iter()
        .map(|(d, c)| json!({"distance": d, "count": c}))
        .collect::<Vec<_>>())
}

fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}
