//! Command implementations. Each command returns its report and exit
//! status; argument parsing and printing live in the binary.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::chartab::CharacterTable;
use crate::data::{self, plan_character, DataDir, MANIFEST};
use crate::error::{Error, Result};
use crate::json::{self as js, big_number};
use crate::molien::{self, MolienProfile};
use crate::oracle::{self, MatrixGroupModel};
use crate::rdplan::{self, BoundReport, DegreePlan, Figure, GroupMetadata, Irreducibility, SubquotientTable};

pub const DEFAULT_DEGREE: usize = 20;
/// Degree up to which the two Molien routes are compared on small models.
pub const ORACLE_DEGREE: usize = 12;
pub const DATA_DIR_ENV: &str = "SPORADIC_DATA_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Obj,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Figure2,
    Figure5,
    Figure6,
    Subquotient,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Ingest(Vec<PathBuf>),
    Molien(String),
    Oracle(String),
    Bounds(Option<String>),
    Verify,
    Tables(TableKind),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub data_dir: PathBuf,
    pub command: Command,
    pub degree_limit: usize,
    pub output_format: OutputFormat,
    pub output_path: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(data_dir: impl Into<PathBuf>, command: Command) -> Self {
        RunConfig {
            data_dir: data_dir.into(),
            command,
            degree_limit: DEFAULT_DEGREE,
            output_format: OutputFormat::Text,
            output_path: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree_limit < 1 {
            return Err(Error::InvalidArgument("degree limit must be at least 1".into()));
        }
        // Ingesting loose files does not touch the data directory.
        if !matches!(self.command, Command::Ingest(_)) && !self.data_dir.join(MANIFEST).is_file() {
            return Err(Error::InvalidArgument(format!(
                "{} does not contain {MANIFEST}",
                self.data_dir.display()
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    CheckFailure,
    InputError,
}

impl Status {
    pub fn code(self) -> i32 {
        match self {
            Status::Success => 0,
            Status::CheckFailure => 1,
            Status::InputError => 2,
        }
    }

    fn from_ok(ok: bool) -> Self {
        if ok {
            Status::Success
        } else {
            Status::CheckFailure
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub status: Status,
    /// The report, destined for stdout or the output file.
    pub output: String,
    /// Diagnostics for stderr.
    pub error: Option<String>,
}

pub fn run(config: &RunConfig) -> Outcome {
    match config.validate().and_then(|()| execute(config)) {
        Ok(o) => o,
        Err(e) => Outcome { status: Status::InputError, output: String::new(), error: Some(format!("error: {e}")) },
    }
}

fn execute(config: &RunConfig) -> Result<Outcome> {
    let obj = config.output_format == OutputFormat::Obj;
    match &config.command {
        Command::Ingest(files) => Ok(render_checks(&ingest(files), obj)),
        Command::Molien(group) => {
            let data = DataDir::open(&config.data_dir)?;
            let (label, profile) = molien_for(&data, group, config.degree_limit)?;
            let output = if obj {
                pretty(&json!({
                    "group": label,
                    "table": profile.table,
                    "character": profile.character,
                    "degree": big_number(&profile.char_degree),
                    "max_degree": profile.max_degree(),
                    "coefficients": profile.coefficients.iter().map(big_number).collect::<Vec<_>>(),
                    "series": profile.format_series(),
                }))
            } else {
                let list: Vec<String> = profile.coefficients.iter().map(BigUint::to_string).collect();
                format!("{label}: {}\n{label}: {}\n", profile.format_series(), list.join(", "))
            };
            Ok(Outcome { status: Status::Success, output, error: None })
        }
        Command::Oracle(model) => {
            let data = DataDir::open(&config.data_dir)?;
            let line = oracle_check(&data, model, config.degree_limit)?;
            Ok(render_checks(&[line], obj))
        }
        Command::Bounds(group) => {
            let data = DataDir::open(&config.data_dir)?;
            let meta = data.metadata()?;
            let plans: Vec<&DegreePlan> = match group {
                Some(g) => vec![meta.plan(g)?],
                None => meta.plans.iter().collect(),
            };
            let reports = plans
                .par_iter()
                .map(|p| bound_with_feasibility(&data, p))
                .collect::<Result<Vec<_>>>()?;
            let ok = plans.iter().zip(&reports).all(|(p, r)| {
                r.rd_bound == p.expected_dim_x && r.irreducibility.ok() && r.feasibility_ok() != Some(false)
            });
            let output = if obj {
                pretty(&Value::Array(plans.iter().zip(&reports).map(|(p, r)| report_json(p, r)).collect()))
            } else {
                plans.iter().zip(&reports).map(|(p, r)| render_report(p, r) + "\n").collect()
            };
            Ok(Outcome { status: Status::from_ok(ok), output, error: None })
        }
        Command::Verify => {
            let data = DataDir::open(&config.data_dir)?;
            Ok(render_checks(&verify(&data)?, obj))
        }
        Command::Tables(kind) => {
            let data = DataDir::open(&config.data_dir)?;
            let meta = data.metadata()?;
            let (output, ok) = render_tables(&meta, *kind, obj)?;
            Ok(Outcome { status: Status::from_ok(ok), output, error: None })
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).unwrap_or_default();
    s.push('\n');
    s
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
    Note,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skip => "SKIP",
            CheckStatus::Note => "NOTE",
        })
    }
}

/// One line of a check report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckLine {
    pub status: CheckStatus,
    pub check: String,
    pub detail: String,
}

impl CheckLine {
    fn new(ok: bool, check: &str, detail: impl Into<String>) -> Self {
        let status = if ok { CheckStatus::Pass } else { CheckStatus::Fail };
        CheckLine { status, check: check.to_owned(), detail: detail.into() }
    }

    fn with(status: CheckStatus, check: &str, detail: impl Into<String>) -> Self {
        CheckLine { status, check: check.to_owned(), detail: detail.into() }
    }

    fn failed(check: &str, err: &Error) -> Self {
        Self::new(false, check, err.to_string())
    }
}

impl fmt::Display for CheckLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}] {}", self.status, self.check, self.detail)
    }
}

fn render_checks(lines: &[CheckLine], obj: bool) -> Outcome {
    let failed = lines.iter().filter(|l| l.status == CheckStatus::Fail).count();
    let output = if obj {
        pretty(&json!({
            "checks": lines.iter().map(|l| json!({
                "status": l.status.to_string(),
                "check": l.check,
                "detail": l.detail,
            })).collect::<Vec<_>>(),
            "failed": failed,
        }))
    } else {
        let mut s: String = lines.iter().map(|l| format!("{l}\n")).collect();
        let passed = lines.iter().filter(|l| l.status == CheckStatus::Pass).count();
        s.push_str(&format!("summary: {passed} passed, {failed} failed\n"));
        s
    };
    Outcome { status: Status::from_ok(failed == 0), output, error: None }
}

/// Validates each file according to its kind: character table, matrix
/// model, group metadata or manifest.
pub fn ingest(files: &[PathBuf]) -> Vec<CheckLine> {
    files
        .par_iter()
        .map(|path| {
            let shown = path.display().to_string();
            let result = data::read(path).and_then(|bytes| ingest_bytes(&bytes));
            match result {
                Ok(detail) => CheckLine::new(true, "ingest", detail),
                Err(e) => CheckLine::new(false, "ingest", format!("{shown}: {e}")),
            }
        })
        .collect()
}

fn ingest_bytes(bytes: &[u8]) -> Result<String> {
    let doc = js::parse_document(bytes)?;
    if doc.is_array() {
        let meta = GroupMetadata::from_json_bytes(bytes)?;
        return Ok(format!("metadata: OK ({} plans)", meta.plans.len()));
    }
    let o = js::object(&doc, "document")?;
    if o.contains_key("classes") {
        let t = CharacterTable::from_json_bytes(bytes)?;
        Ok(format!("{}: OK ({} classes, {} characters)", t.name(), t.num_classes(), t.characters().len()))
    } else if o.contains_key("generators") {
        let m = MatrixGroupModel::from_json_bytes(bytes)?;
        Ok(format!("{}: OK (dimension {}, {} generators)", m.name, m.dimension, m.generators.len()))
    } else if o.contains_key("tables") {
        let m = data::Manifest::from_json_bytes(bytes)?;
        Ok(format!("manifest: OK ({} tables, {} models)", m.tables.len(), m.models.len()))
    } else {
        Err(Error::parse("unrecognized document: expected a table, model, metadata or manifest"))
    }
}

/// Resolves a sporadic group name through its plan, or a table name
/// directly (using its first character of least nontrivial degree).
pub fn molien_for(data: &DataDir, name: &str, degree: usize) -> Result<(String, MolienProfile)> {
    let meta = data.metadata()?;
    if let Ok(plan) = meta.plan(name) {
        let (table, index) = plan_character(data, plan)?;
        return Ok((name.to_owned(), molien::molien_coefficients(&table, index, degree)?));
    }
    if !data.has_table(name) {
        return Err(Error::UnknownGroup(name.to_owned()));
    }
    let table = data.table(name)?;
    let index = table
        .minimal_nontrivial_degree()
        .and_then(|d| table.first_character_of_degree(&d))
        .ok_or_else(|| Error::Validation(format!("{name} has no nontrivial character")))?;
    Ok((name.to_owned(), molien::molien_coefficients(&table, index, degree)?))
}

fn first_difference(a: &[BigUint], b: &[BigUint]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

fn list(xs: &[BigUint]) -> String {
    xs.iter().map(BigUint::to_string).collect::<Vec<_>>().join(", ")
}

/// Compares the determinant-average route with the character route.
pub fn oracle_check(data: &DataDir, model_name: &str, degree: usize) -> Result<CheckLine> {
    let entry = data.model_entry(model_name)?.clone();
    let model = data.model(model_name)?;
    let table = data.table(&entry.table)?;
    let by_matrices = oracle::molien_by_enumeration(&model, degree, oracle::DEFAULT_CAP)?;
    let by_table = molien::molien_coefficients(&table, entry.character, degree)?.coefficients;
    Ok(match first_difference(&by_matrices, &by_table) {
        None => CheckLine::new(true, "oracle", format!("{model_name}: m_0..m_{degree} agree: {}", list(&by_table))),
        Some(d) => CheckLine::new(
            false,
            "oracle",
            format!("{model_name}: m_{d} oracle {} vs table {}", by_matrices[d], by_table[d]),
        ),
    })
}

/// Bound report with the feasibility ledger filled in when the plan's table
/// is shipped.
pub fn bound_with_feasibility(data: &DataDir, plan: &DegreePlan) -> Result<BoundReport> {
    let mut report = rdplan::compute_bound(plan);
    if data.has_table(&plan.table_ref) {
        let (table, index) = plan_character(data, plan)?;
        let profile = molien::molien_coefficients(&table, index, plan.max_degree().max(1) as usize)?;
        report.feasibility = Some(rdplan::check_plan_feasibility(plan, &profile)?);
    }
    Ok(report)
}

fn irreducibility_text(i: &Irreducibility) -> String {
    match i {
        Irreducibility::NotApplicable => "not applicable".into(),
        Irreducibility::Checked { bezout_degree, perm_dim, holds } => {
            format!("{bezout_degree} {} {perm_dim}", if *holds { "<" } else { ">=" })
        }
    }
}

fn render_report(plan: &DegreePlan, r: &BoundReport) -> String {
    let feasibility = match &r.feasibility {
        Some(l) => l.verdict().to_owned(),
        None => "no table shipped".into(),
    };
    let mismatch = if r.rd_bound != plan.expected_dim_x {
        format!(" (bound mismatch {}: computed {}, expected {})", plan.group, r.rd_bound, plan.expected_dim_x)
    } else {
        String::new()
    };
    format!(
        "{}: dim X = {}, RD <= {}, Bezout degree {}, Z degree {}, irreducibility {}, {}{}",
        r.group,
        r.dim_x,
        r.rd_bound,
        r.bezout_degree,
        r.z_bezout_degree,
        irreducibility_text(&r.irreducibility),
        feasibility,
        mismatch
    )
}

fn report_json(plan: &DegreePlan, r: &BoundReport) -> Value {
    let irreducibility = match &r.irreducibility {
        Irreducibility::NotApplicable => Value::Null,
        Irreducibility::Checked { bezout_degree, perm_dim, holds } => json!({
            "bezout_degree": big_number(bezout_degree),
            "perm_dim": big_number(perm_dim),
            "holds": holds,
        }),
    };
    let feasibility = r.feasibility.as_ref().map(|l| {
        json!({
            "verdict": l.verdict(),
            "ledger": l.entries.iter().map(|e| json!({
                "degree": e.degree,
                "required": big_number(&e.required),
                "available": big_number(&e.available),
            })).collect::<Vec<_>>(),
        })
    });
    json!({
        "group": r.group,
        "dim_x": r.dim_x,
        "rd_bound": r.rd_bound,
        "expected": plan.expected_dim_x,
        "bezout_degree": big_number(&r.bezout_degree),
        "z_bezout_degree": big_number(&r.z_bezout_degree),
        "irreducibility": irreducibility,
        "feasibility": feasibility,
    })
}

fn render_tables(meta: &GroupMetadata, kind: TableKind, obj: bool) -> Result<(String, bool)> {
    match kind {
        TableKind::Figure2 => {
            if obj {
                let rows: Vec<Value> = meta
                    .plans
                    .iter()
                    .map(|p| {
                        json!({
                            "group": p.group,
                            "projective_dim": p.ambient_dim,
                            "degrees": p.degrees(),
                            "perm_dim": big_number(&p.perm_dim),
                        })
                    })
                    .collect();
                Ok((pretty(&Value::Array(rows)), true))
            } else {
                Ok((rdplan::render_plans(&meta.plans), true))
            }
        }
        TableKind::Figure5 | TableKind::Figure6 => {
            let figure = if kind == TableKind::Figure5 { Figure::Figure5 } else { Figure::Figure6 };
            let rows = rdplan::comparison_table(&meta.plans, &meta.linear_dims(), figure)?;
            let ok = rows.iter().all(|r| r.ok);
            if obj {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|r| {
                        json!({
                            "group": r.group,
                            "linear_dim": r.linear_dim,
                            "projective_dim": r.projective_dim,
                            "dim_x": r.dim_x,
                            "cover": r.cover,
                            "ok": r.ok,
                        })
                    })
                    .collect();
                Ok((pretty(&Value::Array(v)), ok))
            } else {
                Ok((rdplan::render_comparison(&rows, figure), ok))
            }
        }
        TableKind::Subquotient => {
            let table = SubquotientTable::from_metadata(meta)?;
            if obj {
                let v: Vec<Value> = meta
                    .plans
                    .iter()
                    .map(|p| json!({"group": p.group, "subquotients": p.subquotients, "non_subquotients": p.non_subquotients}))
                    .collect();
                Ok((pretty(&Value::Array(v)), true))
            } else {
                Ok((table.render(), true))
            }
        }
    }
}

/// Minimal degree of a nontrivial character that is trivial on every
/// central class, i.e. a nontrivial linear representation of the quotient.
fn minimal_quotient_degree(table: &CharacterTable) -> Option<BigUint> {
    let central: Vec<usize> = (1..table.num_classes()).filter(|&c| table.classes()[c].size == BigUint::from(1u8)).collect();
    table
        .characters()
        .iter()
        .filter(|chi| central.iter().all(|&c| chi.values[c] == chi.values[0]))
        .map(|chi| chi.degree())
        .filter(|d| *d > BigUint::from(1u8))
        .min()
}

/// Golden comparison of one computed profile, plus the central-character
/// vanishing pattern for cover tables.
fn series_lines(data: &DataDir, p: &DegreePlan, profile: &MolienProfile, expected: &[BigUint]) -> Result<Vec<CheckLine>> {
    let got = &profile.coefficients;
    let mut lines = vec![match first_difference(got, expected) {
        None => CheckLine::new(
            true,
            "series",
            format!(
                "{} ({}): computed m_0..m_{} equal expected {}",
                p.group,
                p.table_ref,
                got.len() - 1,
                profile.format_series()
            ),
        ),
        Some(d) => CheckLine::new(false, "series", format!("{}: m_{d} computed {}, expected {}", p.group, got[d], expected[d])),
    }];
    for e in &p.series_errata {
        lines.push(CheckLine::with(
            CheckStatus::Note,
            "series",
            format!(
                "{}: stored row prints m_{} = {}, computed {} (recorded erratum)",
                p.group, e.degree, e.printed, got[e.degree]
            ),
        ));
    }
    let (table, index) = plan_character(data, p)?;
    let period = molien::central_period(&table, index)?;
    if period > 1 {
        let stray = got.iter().enumerate().find(|(d, m)| !(*d as u64).is_multiple_of(period) && !m.is_zero());
        lines.push(match stray {
            None => CheckLine::new(
                true,
                "central",
                format!("{}: center acts with period {period}, m_d = 0 whenever {period} does not divide d", p.group),
            ),
            Some((d, m)) => CheckLine::new(false, "central", format!("{}: m_{d} = {m} but period is {period}", p.group)),
        });
    }
    Ok(lines)
}

/// Every acceptance check over the data directory, in a fixed order.
pub fn verify(data: &DataDir) -> Result<Vec<CheckLine>> {
    let meta = data.metadata()?;
    let mut lines = Vec::new();

    let names: Vec<&String> = data.manifest().tables.keys().collect();
    let loaded: Vec<Result<std::sync::Arc<CharacterTable>>> = names.par_iter().map(|n| data.table(n)).collect();
    for (name, t) in names.iter().zip(&loaded) {
        lines.push(match t {
            Ok(t) => CheckLine::new(
                true,
                "table",
                format!("{name}: {} classes, {} characters, orthogonal, power maps consistent", t.num_classes(), t.characters().len()),
            ),
            Err(e) => CheckLine::new(false, "table", format!("{name}: {e}")),
        });
    }

    let models: Vec<String> = data.manifest().models.iter().map(|m| m.name.clone()).collect();
    let oracle_lines: Vec<CheckLine> = models
        .par_iter()
        .map(|m| oracle_check(data, m, ORACLE_DEGREE).unwrap_or_else(|e| CheckLine::failed("oracle", &e)))
        .collect();
    lines.extend(oracle_lines);

    // Golden series, computed to the precision of each stored row.
    type Computed = Option<(MolienProfile, Vec<BigUint>)>;
    let profiles: Vec<Result<Computed>> = meta
        .plans
        .par_iter()
        .map(|p| {
            let Some(expected) = p.expected_series()? else { return Ok(None) };
            if !data.has_table(&p.table_ref) {
                return Ok(None);
            }
            let (table, index) = plan_character(data, p)?;
            let profile = molien::molien_coefficients(&table, index, expected.len() - 1)?;
            Ok(Some((profile, expected)))
        })
        .collect();
    let mut by_group: BTreeMap<&str, (MolienProfile, Vec<BigUint>)> = BTreeMap::new();
    for (p, r) in meta.plans.iter().zip(profiles) {
        match r {
            Err(e) => lines.push(CheckLine::new(false, "series", format!("{}: {e}", p.group))),
            Ok(None) => lines.push(CheckLine::with(
                CheckStatus::Skip,
                "series",
                format!("{}: bounds only, no table or stored series", p.group),
            )),
            Ok(Some((profile, expected))) => {
                lines.extend(series_lines(data, p, &profile, &expected)?);
                by_group.insert(p.group.as_str(), (profile, expected));
            }
        }
    }

    let mut reports: BTreeMap<String, BoundReport> = BTreeMap::new();
    for p in &meta.plans {
        let r = rdplan::compute_bound(p);
        lines.push(if r.rd_bound == p.expected_dim_x {
            CheckLine::new(true, "bound", format!("{}: computed {}, expected {}", p.group, r.rd_bound, p.expected_dim_x))
        } else {
            CheckLine::new(false, "bound", format!("bound mismatch {}: computed {}, expected {}", p.group, r.rd_bound, p.expected_dim_x))
        });
        reports.insert(p.group.clone(), r);
    }

    for p in &meta.plans {
        let r = &reports[&p.group];
        lines.push(match &r.irreducibility {
            Irreducibility::NotApplicable => {
                CheckLine::with(CheckStatus::Skip, "irreducibility", format!("{}: not applicable", p.group))
            }
            i @ Irreducibility::Checked { holds, .. } => {
                CheckLine::new(*holds, "irreducibility", format!("{}: {}", p.group, irreducibility_text(i)))
            }
        });
    }

    for p in &meta.plans {
        let profile = match by_group.get(p.group.as_str()) {
            Some((profile, _)) => Some(profile.clone()),
            None if data.has_table(&p.table_ref) => {
                let (table, index) = plan_character(data, p)?;
                Some(molien::molien_coefficients(&table, index, p.max_degree().max(1) as usize)?)
            }
            None => None,
        };
        let Some(profile) = profile else {
            lines.push(CheckLine::with(CheckStatus::Skip, "feasibility", format!("{}: no table shipped", p.group)));
            continue;
        };
        let ledger = match rdplan::check_plan_feasibility(p, &profile) {
            Ok(l) => l,
            Err(e) => {
                lines.push(CheckLine::new(false, "feasibility", format!("{}: {e}", p.group)));
                continue;
            }
        };
        let golden = by_group.get(p.group.as_str()).map(|(_, e)| e);
        let off_row = ledger.entries.iter().find(|e| {
            golden.and_then(|g| g.get(e.degree as usize)).is_some_and(|m| *m != e.available)
        });
        lines.push(match off_row {
            Some(e) => CheckLine::new(
                false,
                "feasibility",
                format!("{}: m_{} computed {} differs from expected row", p.group, e.degree, e.available),
            ),
            None => CheckLine::new(ledger.feasible(), "feasibility", ledger.render()),
        });
        if let Some(r) = reports.get_mut(&p.group) {
            r.feasibility = Some(ledger);
        }
    }

    if let Some(m12) = meta.plans.iter().find(|p| p.projective_alternative.is_some()) {
        let alt = m12.projective_alternative.as_ref().expect("checked above");
        if data.has_table(&alt.table_ref) {
            let table = data.table(&alt.table_ref)?;
            let index = table
                .first_character_of_degree(&BigUint::from(alt.char_degree))
                .ok_or_else(|| Error::Validation(format!("{} lacks degree {}", alt.table_ref, alt.char_degree)))?;
            let top = alt.lowest_invariant_degrees.iter().copied().max().unwrap_or(1) as usize;
            let profile = molien::molien_coefficients(&table, index, top)?;
            let mut lowest = Vec::new();
            for (d, m) in profile.coefficients.iter().enumerate().skip(1) {
                let m = usize::try_from(m).unwrap_or(usize::MAX);
                lowest.extend(std::iter::repeat_n(d as u32, m));
            }
            lowest.truncate(alt.lowest_invariant_degrees.len());
            let dim_x = alt.char_degree as i64 - 1 - (alt.y_degrees.len() + alt.z_degrees.len()) as i64;
            let ok = lowest == alt.lowest_invariant_degrees && dim_x == alt.dim_x && dim_x > m12.expected_dim_x;
            lines.push(CheckLine::new(
                ok,
                "cover alternative",
                format!(
                    "{} via {}: lowest invariant degrees {:?} (expected {:?}), dim X {} (expected {}) > {}",
                    m12.group, alt.table_ref, lowest, alt.lowest_invariant_degrees, dim_x, alt.dim_x, m12.expected_dim_x
                ),
            ));
        }
    }

    let table = SubquotientTable::from_metadata(&meta)?;
    let violations = rdplan::check_monotonicity(&table, &reports)?;
    let pairs = table.subquotient_pairs().count();
    lines.push(match violations.first() {
        None => CheckLine::new(true, "monotonicity", format!("{pairs} subquotient pairs, no violations")),
        Some(v) => CheckLine::new(
            false,
            "monotonicity",
            format!(
                "{} violations, first: {} in {} has dim {} > {}",
                violations.len(),
                v.subquotient,
                v.group,
                v.dim_subquotient,
                v.dim_group
            ),
        ),
    });
    let chain = rdplan::check_dimension_chain(rdplan::DIMENSION_CHAIN, &reports)?;
    lines.push(match chain.first() {
        None => CheckLine::new(true, "chain", rdplan::DIMENSION_CHAIN.to_string()),
        Some(p) => CheckLine::new(false, "chain", p.clone()),
    });

    for figure in [Figure::Figure5, Figure::Figure6] {
        for row in rdplan::comparison_table(&meta.plans, &meta.linear_dims(), figure)? {
            let rel = if figure == Figure::Figure5 { "<" } else { "<=" };
            let cover = row.cover.as_ref().map(|c| format!(", cover {c}")).unwrap_or_default();
            lines.push(CheckLine::new(
                row.ok,
                figure.name(),
                format!(
                    "{}: dim X {} {rel} dim P(V) {} < dim W {}{cover}",
                    row.group, row.dim_x, row.projective_dim, row.linear_dim
                ),
            ));
        }
    }

    // Cross-check of the stored linear dimensions against the tables.
    for p in &meta.plans {
        let Some(cover) = &p.cover else { continue };
        if !data.has_table(&cover.name) {
            continue;
        }
        let t = data.table(&cover.name)?;
        if let Some(d) = minimal_quotient_degree(&t) {
            if d != BigUint::from(p.linear_dim) {
                lines.push(CheckLine::with(
                    CheckStatus::Note,
                    "linear dim",
                    format!("{}: stored dim W = {}, least nontrivial degree in {} is {d}", p.group, p.linear_dim, cover.name),
                ));
            }
        }
    }
    Ok(lines)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let mut c = RunConfig::new("/nonexistent", Command::Verify);
        assert!(c.validate().is_err());
        c.command = Command::Ingest(vec![]);
        assert!(c.validate().is_ok());
        c.degree_limit = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(Status::Success.code(), 0);
        assert_eq!(Status::CheckFailure.code(), 1);
        assert_eq!(Status::InputError.code(), 2);
    }
}
