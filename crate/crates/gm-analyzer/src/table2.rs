//! Small multiplicity-free subgroups given by generators, compared with reference rows.

use group_engine::{generate_group, Perm, PermGroup, DEFAULT_GROUP_BUDGET};
use models::Family;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sym_core::{factorial, Partition};

use crate::{gm_check_family, GMReport, GmError, GmOptions};

pub const BUILTIN_PRESETS: &str = include_str!("../data/table2.toml");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub n: usize,
    pub index: u64,
    pub rank: usize,
    pub second: String,
    pub a: bool,
    pub b: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Preset {
    pub name: String,
    pub degree: usize,
    pub order: u64,
    pub generators: Vec<String>,
    pub reference: Option<ReferenceRow>,
    pub suspect: Option<String>,
}

#[derive(Debug, Deserialize)]
struct PresetFile {
    #[serde(default)]
    preset: Vec<Preset>,
}

pub fn parse_presets(text: &str) -> Result<Vec<Preset>, GmError> {
    let file: PresetFile = toml::from_str(text).map_err(|e| GmError::Preset(e.to_string()))?;
    for p in &file.preset {
        if let Some(r) = &p.reference {
            r.second.parse::<Partition>().map_err(|e| GmError::Preset(format!("{}: {e}", p.name)))?;
        }
    }
    Ok(file.preset)
}

pub fn builtin_presets() -> Vec<Preset> {
    parse_presets(BUILTIN_PRESETS).expect("built-in presets parse")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RowStatus {
    Matched,
    Mismatch,
    /// Λ has several dominance-maximal elements.
    Ambiguous,
    /// The preset or the reference row failed validation.
    Unverifiable,
    NoReference,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Computed {
    pub degree: usize,
    pub index: u64,
    pub rank: usize,
    /// The second largest partition, or every maximal candidate when ambiguous.
    pub second: Vec<Partition>,
    pub a: Option<bool>,
    pub b: Option<bool>,
    pub b_some: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table2Row {
    pub name: String,
    pub reference: Option<ReferenceRow>,
    pub computed: Option<Computed>,
    pub status: RowStatus,
    pub notes: Vec<String>,
    pub report: Option<GMReport>,
}

/// Checks order, transitivity and the degree and index of the reference row.
pub fn validate_preset(p: &Preset) -> Result<(Vec<Perm>, Vec<String>), GmError> {
    let gens: Vec<Perm> = p
        .generators
        .iter()
        .map(|s| Perm::parse(p.degree, s))
        .collect::<Result<_, _>>()
        .map_err(|e| GmError::Preset(format!("{}: {e}", p.name)))?;
    let h = generate_group(p.degree, gens.clone(), DEFAULT_GROUP_BUDGET)?;
    if h.order() != p.order {
        return Err(GmError::Preset(format!("{}: generators give order {}, expected {}", p.name, h.order(), p.order)));
    }
    let mut reached = vec![false; p.degree];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(x) = stack.pop() {
        for g in &gens {
            let y = g.apply(x);
            if !reached[y] {
                reached[y] = true;
                stack.push(y);
            }
        }
    }
    if reached.contains(&false) {
        return Err(GmError::Preset(format!("{}: not transitive on {} points", p.name, p.degree)));
    }
    let mut problems = Vec::new();
    if let Some(r) = &p.reference {
        let index = factorial(p.degree) / BigInt::from(p.order);
        if r.n != p.degree {
            problems.push(format!("reference degree {} differs from the group's degree {}", r.n, p.degree));
        }
        if BigInt::from(r.index) != index {
            problems.push(format!("reference index {} differs from the group's index {index}", r.index));
        }
        let second: Partition = r.second.parse().map_err(|e| GmError::Preset(format!("{e}")))?;
        if second.n() != r.n {
            problems.push(format!("reference partition {second} is not a partition of {}", r.n));
        }
    }
    if let Some(s) = &p.suspect {
        problems.push(format!("flagged suspect: {s}"));
    }
    Ok((gens, problems))
}

fn computed(report: &GMReport) -> Computed {
    Computed {
        degree: report.degree,
        index: report.domain_size as u64,
        rank: report.rank,
        second: report.dominance_maximal.clone(),
        a: report.part_a,
        b: report.part_b_every,
        b_some: report.part_b_some,
    }
}

fn compare(r: &ReferenceRow, c: &Computed) -> Vec<String> {
    let mut diffs = Vec::new();
    let second: Partition = r.second.parse().expect("validated");
    if (c.degree, c.index, c.rank) != (r.n, r.index, r.rank) {
        diffs.push(format!("(n, index, rank) = ({}, {}, {}), reference ({}, {}, {})", c.degree, c.index, c.rank, r.n, r.index, r.rank));
    }
    if c.second != [second.clone()] {
        diffs.push(format!("second largest {}, reference {second}", c.second[0]));
    }
    if c.a != Some(r.a) {
        diffs.push(format!("(a) {:?}, reference {}", c.a, r.a));
    }
    if c.b.unwrap_or(false) != r.b {
        diffs.push(format!("(b) {:?}, reference {}", c.b, r.b));
    }
    diffs
}

pub fn run_preset(p: &Preset, opts: &GmOptions) -> Result<Table2Row, GmError> {
    let (gens, problems) = validate_preset(p)?;
    let family = Family::Coset { name: p.name.clone(), degree: p.degree, generators: gens };
    let report = gm_check_family(&family, opts)?;
    let c = computed(&report);
    let mut notes = problems.clone();
    let status = match &p.reference {
        None => RowStatus::NoReference,
        Some(_) if !problems.is_empty() => RowStatus::Unverifiable,
        Some(r) if report.ambiguity.is_some() => {
            notes.push(report.ambiguity.clone().unwrap_or_default());
            for a in &report.analyses {
                let verdict = match (&a.failure, a.part_a, a.part_b_every) {
                    (Some(f), _, _) => format!("unusable: {f}"),
                    (None, pa, pb) => format!("(a) {}, (b) {}", yes_no(pa), yes_no(pb.or(Some(false)))),
                };
                notes.push(format!("under {}: {verdict}", a.lambda));
                let under = Computed {
                    second: vec![a.lambda.clone()],
                    a: a.part_a,
                    b: a.part_b_every,
                    b_some: a.part_b_some,
                    ..c.clone()
                };
                if compare(r, &under).is_empty() {
                    notes.push(format!("the reference row agrees with the reading under {}", a.lambda));
                }
            }
            RowStatus::Ambiguous
        }
        Some(r) => {
            let diffs = compare(r, &c);
            if diffs.is_empty() {
                RowStatus::Matched
            } else {
                notes.extend(diffs);
                RowStatus::Mismatch
            }
        }
    };
    Ok(Table2Row { name: p.name.clone(), reference: p.reference.clone(), computed: Some(c), status, notes, report: Some(report) })
}

pub fn yes_no(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "Yes",
        Some(false) => "No",
        None => "-",
    }
}

/// Runs the presets, optionally only those whose name matches `only`.
pub fn table2_run(presets: &[Preset], only: Option<&str>, opts: &GmOptions) -> Result<Vec<Table2Row>, GmError> {
    let selected: Vec<&Preset> = presets.iter().filter(|p| only.is_none_or(|o| p.name == o)).collect();
    if selected.is_empty() {
        return Err(GmError::Parameter(format!("no preset named {}", only.unwrap_or(""))));
    }
    selected
        .into_iter()
        .map(|p| match run_preset(p, opts) {
            Err(GmError::Preset(msg)) => Ok(Table2Row {
                name: p.name.clone(),
                reference: p.reference.clone(),
                computed: None,
                status: RowStatus::Unverifiable,
                notes: vec![msg],
                report: None,
            }),
            other => other,
        })
        .collect()
}

/// A fixed-width comparison table.
pub fn render_table(rows: &[Table2Row]) -> String {
    let mut out = format!(
        "{:<14} {:>3} {:>6} {:>4} {:<16} {:>3} {:>3}   {:<22} {}\n",
        "group", "n", "index", "rank", "second", "(a)", "(b)", "reference", "status"
    );
    for r in rows {
        let (n, index, rank, second, a, b) = match &r.computed {
            Some(c) => (
                c.degree.to_string(),
                c.index.to_string(),
                c.rank.to_string(),
                c.second.iter().map(ToString::to_string).collect::<Vec<_>>().join("|"),
                yes_no(c.a),
                yes_no(c.b.or(c.a.map(|_| false))),
            ),
            None => ("-".into(), "-".into(), "-".into(), "-".into(), "-", "-"),
        };
        let reference = r
            .reference
            .as_ref()
            .map(|x| format!("{} {} {} {} {}/{}", x.n, x.index, x.rank, x.second, yes_no(Some(x.a)), yes_no(Some(x.b))))
            .unwrap_or_else(|| "-".into());
        out.push_str(&format!(
            "{:<14} {:>3} {:>6} {:>4} {:<16} {:>3} {:>3}   {:<22} {:?}\n",
            r.name, n, index, rank, second, a, b, reference, r.status
        ));
    }
    out
}
