//! Degree plans for the 26 sporadic groups and the arithmetic built on
//! them: `dim X_G`, the Bézout irreducibility count, Molien feasibility,
//! subquotient monotonicity and the comparison figures.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::json;
use crate::molien::MolienProfile;

/// Groups whose irreducibility is not covered by the degree count.
pub const IRREDUCIBILITY_EXEMPT: [&str; 4] = ["M11", "M12", "M23", "M24"];

/// The ordering of `dim X_G` across all 26 groups.
pub const DIMENSION_CHAIN: &str = "J2 < M11 <= M12 < M22 < Suz < J3 < M23 < M24 = HS < McL < Co3 = Co2 < Co1 \
     < Ru < He < J1 < Fi22 < HN < Th < ON < Fi23 < Fi24' < J4 < Ly < B < M";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Figure {
    Figure5,
    Figure6,
}

impl Figure {
    pub fn name(self) -> &'static str {
        match self {
            Figure::Figure5 => "figure5",
            Figure::Figure6 => "figure6",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    pub name: String,
    pub multiplier: u64,
}

/// Y/Z split of an alternative plan that is recorded but never asserted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AltPlan {
    pub y_degrees: Vec<u32>,
    pub z_degrees: Vec<u32>,
    pub unproven: bool,
}

/// A coefficient of the stored series row known to be misprinted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesErratum {
    pub degree: usize,
    pub printed: BigUint,
    pub corrected: BigUint,
}

/// The cover-based construction for M12, kept for reference.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveAlternative {
    pub table_ref: String,
    pub char_degree: u64,
    pub lowest_invariant_degrees: Vec<u32>,
    pub y_degrees: Vec<u32>,
    pub z_degrees: Vec<u32>,
    pub dim_x: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreePlan {
    pub group: String,
    pub order: BigUint,
    pub table_ref: String,
    /// Degree of the realizing character; the character used is the first
    /// one of this degree in `table_ref`.
    pub char_degree: u64,
    pub ambient_dim: u64,
    pub y_degrees: Vec<u32>,
    pub z_degrees: Vec<u32>,
    pub perm_dim: BigUint,
    pub expected_dim_x: i64,
    pub linear_dim: u64,
    pub cover: Option<Cover>,
    pub figure: Figure,
    pub molien_series: Option<String>,
    pub series_errata: Vec<SeriesErratum>,
    pub alt_plan: Option<AltPlan>,
    pub schur_multiplier: Option<u64>,
    pub projective_alternative: Option<ProjectiveAlternative>,
    pub subquotients: Vec<String>,
    pub non_subquotients: Vec<String>,
}

impl DegreePlan {
    /// All plan degrees, sorted.
    pub fn degrees(&self) -> Vec<u32> {
        let mut d: Vec<u32> = self.y_degrees.iter().chain(&self.z_degrees).copied().collect();
        d.sort_unstable();
        d
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees().last().copied().unwrap_or(0)
    }

    /// The stored series row as printed, `m_0..m_{N-1}`.
    pub fn printed_series(&self) -> Result<Option<Vec<BigUint>>> {
        self.molien_series.as_deref().map(crate::molien::parse_series).transpose()
    }

    /// The stored series row with errata applied.
    pub fn expected_series(&self) -> Result<Option<Vec<BigUint>>> {
        let Some(mut row) = self.printed_series()? else { return Ok(None) };
        for e in &self.series_errata {
            row[e.degree] = e.corrected.clone();
        }
        Ok(Some(row))
    }

    fn validate(&self) -> Result<()> {
        if !self.series_errata.is_empty() {
            let row = self.printed_series()?.ok_or_else(|| {
                Error::Validation(format!("{}: errata given without a series row", self.group))
            })?;
            for e in &self.series_errata {
                if row.get(e.degree) != Some(&e.printed) {
                    return Err(Error::Validation(format!(
                        "{}: erratum at degree {} does not match the printed row",
                        self.group, e.degree
                    )));
                }
            }
        }
        let count = (self.y_degrees.len() + self.z_degrees.len()) as u64;
        if count > self.ambient_dim {
            return Err(Error::Validation(format!(
                "{}: {count} plan degrees exceed ambient dimension {}",
                self.group, self.ambient_dim
            )));
        }
        if self.degrees().contains(&0) {
            return Err(Error::Validation(format!("{}: plan degree 0", self.group)));
        }
        if self.char_degree != self.ambient_dim + 1 {
            return Err(Error::Validation(format!(
                "{}: character degree {} does not match ambient dimension {}",
                self.group, self.char_degree, self.ambient_dim
            )));
        }
        Ok(())
    }
}

/// All plans, in the fixed order of the metadata file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMetadata {
    pub plans: Vec<DegreePlan>,
}

impl GroupMetadata {
    pub fn from_json_bytes(bytes: &[u8]) -> Result<Self> {
        let doc = json::parse_document(bytes)?;
        let plans = json::array(&doc, "metadata")?
            .iter()
            .enumerate()
            .map(|(i, v)| parse_plan(v, &format!("metadata[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        for p in &plans {
            p.validate()?;
        }
        let mut seen = std::collections::HashSet::new();
        for p in &plans {
            if !seen.insert(p.group.as_str()) {
                return Err(Error::Validation(format!("group {} listed twice", p.group)));
            }
        }
        for p in &plans {
            for s in p.subquotients.iter().chain(&p.non_subquotients) {
                if !seen.contains(s.as_str()) {
                    return Err(Error::Validation(format!("{}: subquotient entry names unknown group {s}", p.group)));
                }
            }
        }
        Ok(GroupMetadata { plans })
    }

    pub fn plan(&self, group: &str) -> Result<&DegreePlan> {
        self.plans
            .iter()
            .find(|p| p.group == group)
            .ok_or_else(|| Error::UnknownGroup(group.to_owned()))
    }

    pub fn groups(&self) -> impl Iterator<Item = &str> {
        self.plans.iter().map(|p| p.group.as_str())
    }

    pub fn linear_dims(&self) -> BTreeMap<String, u64> {
        self.plans.iter().map(|p| (p.group.clone(), p.linear_dim)).collect()
    }
}

fn degree_list(v: Option<&Value>, path: &str) -> Result<Vec<u32>> {
    match v {
        None => Ok(Vec::new()),
        Some(v) => json::array(v, path)?
            .iter()
            .map(|d| {
                let d = json::u64_of(d, path)?;
                u32::try_from(d).map_err(|_| Error::parse(format!("{path}: degree {d} too large")))
            })
            .collect(),
    }
}

fn name_list(v: Option<&Value>, path: &str) -> Result<Vec<String>> {
    match v {
        None => Ok(Vec::new()),
        Some(v) => json::array(v, path)?.iter().map(|s| json::string(s, path)).collect(),
    }
}

fn parse_plan(v: &Value, path: &str) -> Result<DegreePlan> {
    let o = json::object(v, path)?;
    let get = |k: &str| json::field(o, k, path);
    let sub = |k: &str| format!("{path}.{k}");
    let cover = match o.get("cover") {
        None | Some(Value::Null) => None,
        Some(c) => {
            let c = json::object(c, &sub("cover"))?;
            Some(Cover {
                name: json::string(json::field(c, "name", &sub("cover"))?, &sub("cover.name"))?,
                multiplier: json::u64_of(json::field(c, "multiplier", &sub("cover"))?, &sub("cover.multiplier"))?,
            })
        }
    };
    let figure = match json::string(get("figure")?, &sub("figure"))?.as_str() {
        "figure5" => Figure::Figure5,
        "figure6" => Figure::Figure6,
        other => return Err(Error::parse(format!("{path}.figure: unknown figure `{other}`"))),
    };
    let alt_plan = match o.get("alt_plan") {
        None | Some(Value::Null) => None,
        Some(a) => {
            let a = json::object(a, &sub("alt_plan"))?;
            Some(AltPlan {
                y_degrees: degree_list(a.get("y_degrees"), &sub("alt_plan.y_degrees"))?,
                z_degrees: degree_list(a.get("z_degrees"), &sub("alt_plan.z_degrees"))?,
                unproven: a.get("unproven").and_then(Value::as_bool).unwrap_or(true),
            })
        }
    };
    let projective_alternative = match o.get("minimal_projective_alternative") {
        None | Some(Value::Null) => None,
        Some(a) => {
            let p = sub("minimal_projective_alternative");
            let a = json::object(a, &p)?;
            let plan = json::object(json::field(a, "plan", &p)?, &p)?;
            Some(ProjectiveAlternative {
                table_ref: json::string(json::field(a, "table_ref", &p)?, &p)?,
                char_degree: json::u64_of(json::field(a, "char_degree", &p)?, &p)?,
                lowest_invariant_degrees: degree_list(a.get("lowest_invariant_degrees"), &p)?,
                y_degrees: degree_list(plan.get("y_degrees"), &p)?,
                z_degrees: degree_list(plan.get("z_degrees"), &p)?,
                dim_x: json::u64_of(json::field(a, "dim_x", &p)?, &p)? as i64,
            })
        }
    };
    Ok(DegreePlan {
        group: json::string(get("group")?, &sub("group"))?,
        order: json::biguint(get("order")?, &sub("order"))?,
        table_ref: json::string(get("table_ref")?, &sub("table_ref"))?,
        char_degree: json::u64_of(get("char_degree")?, &sub("char_degree"))?,
        ambient_dim: json::u64_of(get("ambient_dim")?, &sub("ambient_dim"))?,
        y_degrees: degree_list(o.get("y_degrees"), &sub("y_degrees"))?,
        z_degrees: degree_list(o.get("z_degrees"), &sub("z_degrees"))?,
        perm_dim: json::biguint(get("perm_dim")?, &sub("perm_dim"))?,
        expected_dim_x: json::bigint(get("expected_dim_x")?, &sub("expected_dim_x"))?
            .try_into()
            .map_err(|_| Error::parse(format!("{path}.expected_dim_x out of range")))?,
        linear_dim: json::u64_of(get("linear_dim")?, &sub("linear_dim"))?,
        cover,
        figure,
        molien_series: o.get("molien_series").map(|s| json::string(s, &sub("molien_series"))).transpose()?,
        series_errata: match o.get("series_errata") {
            None => Vec::new(),
            Some(v) => json::array(v, &sub("series_errata"))?
                .iter()
                .map(|e| {
                    let p = sub("series_errata");
                    let e = json::object(e, &p)?;
                    Ok(SeriesErratum {
                        degree: json::u64_of(json::field(e, "degree", &p)?, &p)? as usize,
                        printed: json::biguint(json::field(e, "printed", &p)?, &p)?,
                        corrected: json::biguint(json::field(e, "corrected", &p)?, &p)?,
                    })
                })
                .collect::<Result<_>>()?,
        },
        alt_plan,
        schur_multiplier: o.get("schur_multiplier").map(|s| json::u64_of(s, &sub("schur_multiplier"))).transpose()?,
        projective_alternative,
        subquotients: name_list(o.get("subquotients"), &sub("subquotients"))?,
        non_subquotients: name_list(o.get("non_subquotients"), &sub("non_subquotients"))?,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    /// One of the four Mathieu groups the degree argument does not cover.
    NotApplicable,
    Checked { bezout_degree: BigUint, perm_dim: BigUint, holds: bool },
}

impl Irreducibility {
    /// `true` unless the check applies and fails.
    pub fn ok(&self) -> bool {
        !matches!(self, Irreducibility::Checked { holds: false, .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerEntry {
    pub degree: u32,
    /// Number of new generators chosen at this degree.
    pub new_generators: usize,
    /// Invariants of this degree needed, counting monomials in generators
    /// chosen so far as independent.
    pub required: BigUint,
    pub available: BigUint,
}

impl LedgerEntry {
    pub fn holds(&self) -> bool {
        self.required <= self.available
    }
}

/// A necessary condition only: it assumes the chosen generators are
/// algebraically independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FeasibilityLedger {
    pub group: String,
    pub entries: Vec<LedgerEntry>,
}

impl FeasibilityLedger {
    pub fn feasible(&self) -> bool {
        self.entries.iter().all(LedgerEntry::holds)
    }

    pub fn verdict(&self) -> &'static str {
        if self.feasible() {
            "feasible (necessary condition)"
        } else {
            "infeasible"
        }
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .entries
            .iter()
            .map(|e| format!("d={}: N={} m={}", e.degree, e.required, e.available))
            .collect();
        format!("{}: {} [{}]", self.group, self.verdict(), parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub group: String,
    pub dim_x: i64,
    /// Product of all plan degrees.
    pub bezout_degree: BigUint,
    /// Product of the Z-part degrees. `d_G` would be the resolvent degree of
    /// this number, which is left unevaluated.
    pub z_bezout_degree: BigUint,
    pub irreducibility: Irreducibility,
    pub feasibility: Option<FeasibilityLedger>,
    pub rd_bound: i64,
}

impl BoundReport {
    pub fn feasibility_ok(&self) -> Option<bool> {
        self.feasibility.as_ref().map(FeasibilityLedger::feasible)
    }
}

fn product(ds: &[u32]) -> BigUint {
    ds.iter().fold(BigUint::one(), |acc, &d| acc * d)
}

pub fn compute_bound(plan: &DegreePlan) -> BoundReport {
    let dim_x = plan.ambient_dim as i64 - plan.degrees().len() as i64;
    BoundReport {
        group: plan.group.clone(),
        dim_x,
        bezout_degree: product(&plan.degrees()),
        z_bezout_degree: product(&plan.z_degrees),
        irreducibility: check_irreducibility_degree(plan),
        feasibility: None,
        rd_bound: dim_x,
    }
}

pub fn check_irreducibility_degree(plan: &DegreePlan) -> Irreducibility {
    if IRREDUCIBILITY_EXEMPT.contains(&plan.group.as_str()) {
        return Irreducibility::NotApplicable;
    }
    let bezout_degree = product(&plan.degrees());
    let holds = bezout_degree < plan.perm_dim;
    Irreducibility::Checked { bezout_degree, perm_dim: plan.perm_dim.clone(), holds }
}

/// Coefficients of `Π 1/(1 - t^e)` up to `t^max`.
fn monomial_counts(degrees: &[u32], max: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); max + 1];
    c[0] = BigUint::one();
    for &e in degrees {
        let e = e as usize;
        for d in e..=max {
            let prev = c[d - e].clone();
            c[d] += prev;
        }
    }
    c
}

pub fn check_plan_feasibility(plan: &DegreePlan, profile: &MolienProfile) -> Result<FeasibilityLedger> {
    let degrees = plan.degrees();
    let max = plan.max_degree() as usize;
    if max > profile.max_degree() {
        return Err(Error::ProfileTooShort { needed: max, available: profile.max_degree() });
    }
    let mut entries = Vec::new();
    let mut distinct = degrees.clone();
    distinct.dedup();
    for d in distinct {
        let chosen: Vec<u32> = degrees.iter().copied().filter(|&e| e <= d).collect();
        let required = monomial_counts(&chosen, d as usize)[d as usize].clone();
        entries.push(LedgerEntry {
            degree: d,
            new_generators: degrees.iter().filter(|&&e| e == d).count(),
            required,
            available: profile.coefficients[d as usize].clone(),
        });
    }
    Ok(FeasibilityLedger { group: plan.group.clone(), entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Subquotient,
    NotSubquotient,
    Equal,
    /// No entry: `S` is larger than `G`, or the pair is not tabulated.
    Undefined,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubquotientTable {
    pub groups: Vec<String>,
    orders: BTreeMap<String, BigUint>,
    relation: BTreeMap<(String, String), Relation>,
}

impl SubquotientTable {
    pub fn from_metadata(meta: &GroupMetadata) -> Result<Self> {
        let orders: BTreeMap<String, BigUint> = meta.plans.iter().map(|p| (p.group.clone(), p.order.clone())).collect();
        let mut relation = BTreeMap::new();
        for p in &meta.plans {
            for (list, rel) in [(&p.subquotients, Relation::Subquotient), (&p.non_subquotients, Relation::NotSubquotient)] {
                for s in list {
                    if orders[s] > p.order {
                        return Err(Error::Validation(format!(
                            "subquotient entry ({}, {s}) has |{s}| > |{}|",
                            p.group, p.group
                        )));
                    }
                    if relation.insert((p.group.clone(), s.clone()), rel).is_some() {
                        return Err(Error::Validation(format!("subquotient entry ({}, {s}) given twice", p.group)));
                    }
                }
            }
        }
        Ok(SubquotientTable { groups: meta.groups().map(str::to_owned).collect(), orders, relation })
    }

    pub fn relation(&self, g: &str, s: &str) -> Relation {
        if g == s {
            return Relation::Equal;
        }
        self.relation.get(&(g.to_owned(), s.to_owned())).copied().unwrap_or(Relation::Undefined)
    }

    /// Pairs `(G, S)` with `S` a subquotient of `G`.
    pub fn subquotient_pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.relation
            .iter()
            .filter(|(_, r)| **r == Relation::Subquotient)
            .map(|((g, s), _)| (g.as_str(), s.as_str()))
    }

    pub fn order(&self, g: &str) -> Option<&BigUint> {
        self.orders.get(g)
    }

    /// Lower-triangular grid: `+` subquotient, `-` not, `=` diagonal, blank
    /// otherwise. Rows and columns follow increasing group order.
    pub fn render(&self) -> String {
        let mut names: Vec<&String> = self.groups.iter().collect();
        names.sort_by(|a, b| self.orders[*a].cmp(&self.orders[*b]));
        let width = names.iter().map(|n| n.len()).max().unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:width$}", "");
        for s in &names {
            let _ = write!(out, " {s:>width$}");
        }
        out.push('\n');
        for g in &names {
            let _ = write!(out, "{g:width$}");
            for s in &names {
                let mark = match self.relation(g, s) {
                    Relation::Subquotient => "+",
                    Relation::NotSubquotient => "-",
                    Relation::Equal => "=",
                    Relation::Undefined => "",
                };
                let _ = write!(out, " {mark:>width$}");
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub group: String,
    pub subquotient: String,
    pub dim_group: i64,
    pub dim_subquotient: i64,
}

pub fn check_monotonicity(table: &SubquotientTable, reports: &BTreeMap<String, BoundReport>) -> Result<Vec<Violation>> {
    for g in &table.groups {
        if !reports.contains_key(g) {
            return Err(Error::MissingGroup(g.clone()));
        }
    }
    let mut out = Vec::new();
    for (g, s) in table.subquotient_pairs() {
        let (dg, ds) = (reports[g].dim_x, reports[s].dim_x);
        if ds > dg {
            out.push(Violation { group: g.to_owned(), subquotient: s.to_owned(), dim_group: dg, dim_subquotient: ds });
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChainRel {
    Less,
    LessEq,
    Equal,
}

pub fn parse_chain(chain: &str) -> Result<Vec<(String, Option<ChainRel>)>> {
    let tokens: Vec<&str> = chain.split_whitespace().collect();
    if tokens.len().is_multiple_of(2) {
        return Err(Error::parse(format!("chain `{chain}` is malformed")));
    }
    let mut out = Vec::new();
    for (i, name) in tokens.iter().step_by(2).enumerate() {
        let rel = match tokens.get(2 * i + 1) {
            None => None,
            Some(&"<") => Some(ChainRel::Less),
            Some(&"<=") => Some(ChainRel::LessEq),
            Some(&"=") => Some(ChainRel::Equal),
            Some(other) => return Err(Error::parse(format!("unknown relation `{other}` in chain"))),
        };
        out.push((name.to_string(), rel));
    }
    Ok(out)
}

/// Checks each stated relation between neighbours, and that sorting the
/// reports by `dim_x` yields the chain's order up to ties.
pub fn check_dimension_chain(chain: &str, reports: &BTreeMap<String, BoundReport>) -> Result<Vec<String>> {
    let chain = parse_chain(chain)?;
    let dim = |g: &str| reports.get(g).map(|r| r.dim_x).ok_or_else(|| Error::MissingGroup(g.to_owned()));
    let mut problems = Vec::new();
    for w in chain.windows(2) {
        let (a, rel) = (&w[0].0, w[0].1.expect("interior link has a relation"));
        let b = &w[1].0;
        let (da, db) = (dim(a)?, dim(b)?);
        let ok = match rel {
            ChainRel::Less => da < db,
            ChainRel::LessEq => da <= db,
            ChainRel::Equal => da == db,
        };
        if !ok {
            problems.push(format!("{a} ({da}) vs {b} ({db}) breaks {rel:?}"));
        }
    }
    if chain.len() != reports.len() {
        problems.push(format!("chain lists {} groups, reports cover {}", chain.len(), reports.len()));
    }
    let mut sorted: Vec<(&String, i64)> = reports.iter().map(|(g, r)| (g, r.dim_x)).collect();
    sorted.sort_by_key(|(_, d)| *d);
    let chain_dims: Vec<i64> = chain.iter().map(|(g, _)| dim(g)).collect::<Result<_>>()?;
    let sorted_dims: Vec<i64> = sorted.iter().map(|(_, d)| *d).collect();
    if chain_dims != sorted_dims {
        problems.push("sorted dimensions differ from the chain".into());
    }
    Ok(problems)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonRow {
    pub group: String,
    pub linear_dim: u64,
    pub projective_dim: u64,
    pub dim_x: i64,
    pub cover: Option<String>,
    /// The strict or non-strict chain `dim X < dim P(V) < dim W` holds.
    pub ok: bool,
}

pub fn comparison_table(
    plans: &[DegreePlan],
    linear_dims: &BTreeMap<String, u64>,
    figure: Figure,
) -> Result<Vec<ComparisonRow>> {
    plans
        .iter()
        .filter(|p| p.figure == figure)
        .map(|p| {
            let linear_dim = *linear_dims.get(&p.group).ok_or_else(|| Error::MissingGroup(p.group.clone()))?;
            let dim_x = compute_bound(p).dim_x;
            let proj = p.ambient_dim as i64;
            let first = match figure {
                Figure::Figure5 => dim_x < proj,
                Figure::Figure6 => dim_x <= proj,
            };
            Ok(ComparisonRow {
                group: p.group.clone(),
                linear_dim,
                projective_dim: p.ambient_dim,
                dim_x,
                cover: p.cover.as_ref().map(|c| c.name.clone()),
                ok: first && (p.ambient_dim < linear_dim),
            })
        })
        .collect()
}

pub fn render_comparison(rows: &[ComparisonRow], figure: Figure) -> String {
    let mut out = String::new();
    match figure {
        Figure::Figure5 => out.push_str("group | dim W | dim P(V) | dim X\n"),
        Figure::Figure6 => out.push_str("group | dim W | dim P(V) | dim X | cover\n"),
    }
    for r in rows {
        let _ = write!(out, "{} | {} | {} | {}", r.group, r.linear_dim, r.projective_dim, r.dim_x);
        if let Some(c) = &r.cover {
            let _ = write!(out, " | {c}");
        }
        out.push('\n');
    }
    out
}

/// Figure 2 layout: group, dim P(V_G), plan degrees, dim Perm_G.
pub fn render_plans(plans: &[DegreePlan]) -> String {
    let mut out = String::from("group | dim P(V) | degrees | dim Perm\n");
    for p in plans {
        let ds = p.degrees();
        let degrees = if ds.is_empty() {
            "N/A".to_owned()
        } else {
            ds.iter().map(u32::to_string).collect::<Vec<_>>().join(", ")
        };
        let _ = writeln!(out, "{} | {} | {} | {}", p.group, p.ambient_dim, degrees, p.perm_dim);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn plan(group: &str, ambient: u64, y: &[u32], z: &[u32], perm: u64) -> DegreePlan {
        DegreePlan {
            group: group.into(),
            order: BigUint::from(1u8),
            table_ref: group.into(),
            char_degree: ambient + 1,
            ambient_dim: ambient,
            y_degrees: y.to_vec(),
            z_degrees: z.to_vec(),
            perm_dim: perm.into(),
            expected_dim_x: ambient as i64 - (y.len() + z.len()) as i64,
            linear_dim: ambient + 1,
            cover: None,
            figure: Figure::Figure5,
            molien_series: None,
            series_errata: vec![],
            alt_plan: None,
            schur_multiplier: None,
            projective_alternative: None,
            subquotients: vec![],
            non_subquotients: vec![],
        }
    }

    fn profile(coeffs: &[u32]) -> MolienProfile {
        MolienProfile {
            table: "T".into(),
            character: 1,
            char_degree: BigUint::from(2u8),
            coefficients: coeffs.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    #[test]
    fn bounds() {
        let r = compute_bound(&plan("J2", 5, &[], &[], 100));
        assert_eq!((r.dim_x, r.rd_bound), (5, 5));
        assert_eq!(r.bezout_degree, BigUint::one());
        let r = compute_bound(&plan("M", 196882, &[], &[2, 3, 4, 5, 6, 6, 6, 7], 1));
        assert_eq!(r.rd_bound, 196874);
    }

    #[test]
    fn irreducibility() {
        let he = check_irreducibility_degree(&plan("He", 50, &[], &[3, 4], 2058));
        assert_eq!(he, Irreducibility::Checked { bezout_degree: 12u8.into(), perm_dim: 2058u16.into(), holds: true });
        let tight = check_irreducibility_degree(&plan("X", 5, &[2], &[3], 6));
        assert!(!tight.ok());
        assert_eq!(check_irreducibility_degree(&plan("M11", 9, &[2, 3], &[4], 11)), Irreducibility::NotApplicable);
    }

    #[test]
    fn feasibility_counts_monomials() {
        let co3 = plan("Co3", 22, &[2], &[6], 276);
        let ledger = check_plan_feasibility(&co3, &profile(&[1, 0, 1, 0, 1, 0, 2])).unwrap();
        assert!(ledger.feasible());
        assert_eq!(ledger.entries[1].required, BigUint::from(2u8));
        let forced = plan("X", 9, &[2], &[4], 10);
        let ledger = check_plan_feasibility(&forced, &profile(&[1, 0, 1, 0, 1])).unwrap();
        assert!(!ledger.feasible());
        assert!(matches!(
            check_plan_feasibility(&co3, &profile(&[1, 0, 1])),
            Err(Error::ProfileTooShort { needed: 6, available: 2 })
        ));
    }

    #[test]
    fn monster_degree_six_needs_six() {
        let c = monomial_counts(&[2, 3, 4, 5, 6, 6, 6], 6);
        assert_eq!(c[6], BigUint::from(6u8));
    }

    #[test]
    fn chain_parsing() {
        let c = parse_chain("A < B <= C = D").unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[1].1, Some(ChainRel::LessEq));
        assert!(parse_chain("A <").is_err());
        assert!(parse_chain("A ~ B").is_err());
    }
}
