//! The machine-readable corpus: schema, loader, serializer, and the
//! verification driver.
//!
//! One JSON file per summary table, with a versioned `schema` field. Groups
//! are stored as build expressions, embeddings as integer cocharacter
//! matrices, representations as grammar strings plus resolved weight lists
//! (the weights are authoritative; the loader cross-validates the spec
//! string whenever it resolves). Dual representations live in the
//! coordinates of the dual datum `(G/Z_Δ)^∨`, which the loader reconstructs
//! deterministically from the primal data.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::lattice::Vector;
use crate::quadruple::{self, DualSide, Quadruple};
use crate::repcalc::{self, RepSum};
use crate::rootdata::{build_root_datum, TorusMap};
use crate::typelabel::TypeLabel;
use crate::{families, Error, Result};

pub const SCHEMA: &str = "bzsv-corpus/1";

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize, Hash)]
#[serde(rename_all = "lowercase")]
pub enum TableId {
    Red1,
    Red2,
    Nonred1,
    Nonred1x,
    Nonred2,
    Nonred2x,
}

impl TableId {
    pub const ALL: [TableId; 6] = [
        TableId::Red1,
        TableId::Red2,
        TableId::Nonred1,
        TableId::Nonred1x,
        TableId::Nonred2,
        TableId::Nonred2x,
    ];

    pub fn file_name(self) -> &'static str {
        match self {
            TableId::Red1 => "red1.json",
            TableId::Red2 => "red2.json",
            TableId::Nonred1 => "nonred1.json",
            TableId::Nonred1x => "nonred1x.json",
            TableId::Nonred2 => "nonred2.json",
            TableId::Nonred2x => "nonred2x.json",
        }
    }

    pub fn expected_rows(self) -> u32 {
        match self {
            TableId::Red1 => 26,
            TableId::Red2 => 9,
            TableId::Nonred1 => 9,
            TableId::Nonred1x => 13,
            TableId::Nonred2 => 5,
            TableId::Nonred2x => 13,
        }
    }

    pub fn is_reductive(self) -> bool {
        matches!(self, TableId::Red1 | TableId::Red2)
    }

    pub fn parse(s: &str) -> Result<TableId> {
        match s {
            "red1" => Ok(TableId::Red1),
            "red2" => Ok(TableId::Red2),
            "nonred1" => Ok(TableId::Nonred1),
            "nonred1x" => Ok(TableId::Nonred1x),
            "nonred2" => Ok(TableId::Nonred2),
            "nonred2x" => Ok(TableId::Nonred2x),
            _ => Err(Error::Usage(format!("unknown table id {s:?}"))),
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TableId::Red1 => "red1",
            TableId::Red2 => "red2",
            TableId::Nonred1 => "nonred1",
            TableId::Nonred1x => "nonred1x",
            TableId::Nonred2 => "nonred2",
            TableId::Nonred2x => "nonred2x",
        };
        f.write_str(s)
    }
}

pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct KnopData {
    pub number: String,
    pub little_weyl: Vec<String>,
    pub dual_levi: Vec<String>,
    #[serde(default)]
    pub pairing_editorial: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ThetaShift {
    /// component index of the dual datum and representation name
    pub component: usize,
    pub name: String,
    /// evaluation point s as a fraction
    pub s: [i64; 2],
}

/// A fully instantiated corpus row.
#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub table: TableId,
    pub row: u32,
    pub family: String,
    pub params: Params,
    pub display: String,
    pub quad: Quadruple,
    pub dual: DualSide,
    pub rho_hat: RepSum,
    pub rho_h_spec: String,
    pub rho_hat_spec: String,
    pub knop: Option<KnopData>,
    pub reduces_to: Option<(TableId, u32, Params)>,
    pub period: Option<String>,
    pub notes: String,
    pub theta_shifts: Vec<ThetaShift>,
    pub embedding_note: Option<String>,
}

impl CorpusEntry {
    pub fn id(&self) -> String {
        format!("{}:{}", self.table, self.row)
    }
}

// ----------------------------------------------------------------------
// serialization schema
// ----------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct RawFile {
    schema: String,
    table: TableId,
    rows: Vec<RawRow>,
}

#[derive(Serialize, Deserialize)]
struct RawWeights {
    spec: String,
    weights: Vec<RawWeight>,
}

#[derive(Serialize, Deserialize)]
struct RawWeight {
    w: Vector,
    m: i64,
}

#[derive(Serialize, Deserialize)]
struct RawRow {
    row: u32,
    family: String,
    #[serde(default)]
    params: Params,
    display: String,
    group: String,
    subgroup: String,
    embedding: Vec<Vector>,
    rho_h: RawWeights,
    iota: Vec<usize>,
    dual_rho: RawWeights,
    #[serde(default)]
    knop: Option<KnopData>,
    #[serde(default)]
    reduces_to: Option<RawReduces>,
    #[serde(default)]
    period: Option<String>,
    #[serde(default)]
    notes: String,
    #[serde(default)]
    theta_shifts: Vec<ThetaShift>,
    #[serde(default)]
    embedding_note: Option<String>,
}

#[derive(Serialize, Deserialize)]
struct RawReduces {
    table: TableId,
    row: u32,
    #[serde(default)]
    params: Params,
}

fn sum_to_raw(spec: &str, rho: &RepSum) -> RawWeights {
    RawWeights {
        spec: spec.to_string(),
        weights: rho
            .summands
            .iter()
            .map(|(w, m)| RawWeight { w: w.clone(), m: *m })
            .collect(),
    }
}

fn raw_to_sum(raw: &RawWeights) -> RepSum {
    let mut out = RepSum::zero();
    for rw in &raw.weights {
        out.add(rw.w.clone(), rw.m);
    }
    out
}

pub fn entry_to_raw(e: &CorpusEntry) -> serde_json::Value {
    let raw = RawRow {
        row: e.row,
        family: e.family.clone(),
        params: e.params.clone(),
        display: e.display.clone(),
        group: e.quad.g.name.clone(),
        subgroup: e.quad.h.name.clone(),
        embedding: e.quad.emb.cochar_images.clone(),
        rho_h: sum_to_raw(&e.rho_h_spec, &e.quad.rho_h),
        iota: e.quad.iota.clone(),
        dual_rho: sum_to_raw(&e.rho_hat_spec, &e.rho_hat),
        knop: e.knop.clone(),
        reduces_to: e.reduces_to.as_ref().map(|(t, r, p)| RawReduces {
            table: *t,
            row: *r,
            params: p.clone(),
        }),
        period: e.period.clone(),
        notes: e.notes.clone(),
        theta_shifts: e.theta_shifts.clone(),
        embedding_note: e.embedding_note.clone(),
    };
    serde_json::to_value(raw).expect("serializable")
}

fn raw_to_entry(table: TableId, raw: RawRow, file: &str) -> Result<CorpusEntry> {
    let err = |msg: String| Error::Schema {
        file: format!("{file} (row {})", raw.row),
        msg,
    };
    let g = build_root_datum(&raw.group).map_err(|e| err(format!("group: {e}")))?;
    let h = build_root_datum(&raw.subgroup).map_err(|e| err(format!("subgroup: {e}")))?;
    if raw.embedding.len() != h.rank() || raw.embedding.iter().any(|v| v.len() != g.rank()) {
        return Err(err(format!(
            "embedding must be {}x{} (X_*(H) -> X_*(G))",
            h.rank(),
            g.rank()
        )));
    }
    let emb = TorusMap {
        cochar_images: raw.embedding.clone(),
    };
    for &i in &raw.iota {
        if i >= g.semisimple_rank() {
            return Err(err(format!("iota index {i} out of range")));
        }
    }
    let rho_h = raw_to_sum(&raw.rho_h);
    for w in rho_h.summands.keys() {
        if !h.is_dominant(w) {
            return Err(err(format!("rho_h weight {w:?} not dominant")));
        }
    }
    // cross-validate the grammar string when it resolves
    if let Ok(parsed) = repcalc::parse_rep(&h, &raw.rho_h.spec) {
        if parsed != rho_h {
            return Err(err(format!(
                "rho_h spec {:?} disagrees with stored weights",
                raw.rho_h.spec
            )));
        }
    }
    let quad = Quadruple {
        g,
        h,
        emb,
        rho_h,
        iota: raw.iota.clone(),
    };
    let dual = quadruple::dual_side(&quad).map_err(|e| err(format!("dual side: {e}")))?;
    let rho_hat = raw_to_sum(&raw.dual_rho);
    for w in rho_hat.summands.keys() {
        if !dual.datum.is_dominant(w) {
            return Err(err(format!("dual rho weight {w:?} not dominant")));
        }
    }
    if table.is_reductive() != raw.reduces_to.is_none() {
        return Err(err("reduces_to must be present exactly on non-reductive rows".into()));
    }
    Ok(CorpusEntry {
        table,
        row: raw.row,
        family: raw.family,
        params: raw.params,
        display: raw.display,
        quad,
        dual,
        rho_hat,
        rho_h_spec: raw.rho_h.spec,
        rho_hat_spec: raw.dual_rho.spec,
        knop: raw.knop,
        reduces_to: raw.reduces_to.map(|r| (r.table, r.row, r.params)),
        period: raw.period,
        notes: raw.notes,
        theta_shifts: raw.theta_shifts,
        embedding_note: raw.embedding_note,
    })
}

/// Load one table file.
pub fn load_table(path: &Path, table: TableId) -> Result<Vec<CorpusEntry>> {
    let fname = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Schema {
        file: fname.clone(),
        msg: format!("cannot read: {e}"),
    })?;
    let raw: RawFile = serde_json::from_str(&text).map_err(|e| Error::Schema {
        file: format!("{fname}:{}:{}", e.line(), e.column()),
        msg: e.to_string(),
    })?;
    if raw.schema != SCHEMA {
        return Err(Error::Schema {
            file: fname,
            msg: format!("schema {:?}, expected {SCHEMA:?}", raw.schema),
        });
    }
    if raw.table != table {
        return Err(Error::Schema {
            file: fname,
            msg: format!("table id {} does not match file", raw.table),
        });
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut out = vec![];
    for row in raw.rows {
        if !seen.insert(row.row) {
            return Err(Error::Schema {
                file: fname,
                msg: format!("duplicate row {}", row.row),
            });
        }
        out.push(raw_to_entry(table, row, &fname)?);
    }
    if out.len() as u32 != table.expected_rows() {
        return Err(Error::Schema {
            file: fname,
            msg: format!(
                "table {table} has {} rows, expected {}",
                out.len(),
                table.expected_rows()
            ),
        });
    }
    out.sort_by_key(|e| e.row);
    Ok(out)
}

/// Load the whole corpus (75 entries) from a directory.
pub fn load_corpus(dir: &Path) -> Result<Vec<CorpusEntry>> {
    let mut out = vec![];
    for t in TableId::ALL {
        out.extend(load_table(&dir.join(t.file_name()), t)?);
    }
    Ok(out)
}

pub fn serialize_table(entries: &[&CorpusEntry], table: TableId) -> String {
    let rows: Vec<serde_json::Value> = entries.iter().map(|e| entry_to_raw(e)).collect();
    let file = serde_json::json!({
        "schema": SCHEMA,
        "table": table,
        "rows": rows,
    });
    serde_json::to_string_pretty(&file).expect("serializable")
}

/// Instantiate every row at its default parameters and write the table
/// files plus the excluded-cases sidecar.
pub fn generate_corpus_files(dir: &str) -> Result<()> {
    let dir = Path::new(dir);
    std::fs::create_dir_all(dir)?;
    for t in TableId::ALL {
        let mut entries = vec![];
        for row in 1..=t.expected_rows() {
            let params = families::default_params(t, row)?;
            entries.push(families::instantiate(t, row, &params)?);
        }
        let refs: Vec<&CorpusEntry> = entries.iter().collect();
        std::fs::write(dir.join(t.file_name()), serialize_table(&refs, t))?;
    }
    std::fs::write(dir.join("excluded.json"), excluded_json())?;
    Ok(())
}

/// The covering-group cases outside the framework, kept apart from the 75.
pub fn excluded_json() -> String {
    let rows = serde_json::json!([
        {"knop": "(1.6)", "dual_group": "SL(2)", "dual_rho": "sym3(SL2)",
         "reason": "generic stabilizer disconnected; period lives on a cubic cover"},
        {"knop": "(2.3)", "dual_group": "GL(n)", "dual_rho": "T(sym2(GLn))",
         "reason": "generic stabilizer disconnected; covering-group integrals"},
        {"knop": "(2.7) odd", "dual_group": "SO(2k+1)", "dual_rho": "T(std(SO2k+1))",
         "reason": "generic stabilizer disconnected; covering-group integrals"},
        {"knop": "(2.9)", "dual_group": "G(2)", "dual_rho": "T(std(G2))",
         "reason": "generic stabilizer disconnected; covering-group integrals"}
    ]);
    serde_json::to_string_pretty(&serde_json::json!({
        "schema": SCHEMA,
        "excluded": rows,
    }))
    .expect("serializable")
}

// ----------------------------------------------------------------------
// verification driver
// ----------------------------------------------------------------------

pub const ALL_CHECKS: [&str; 6] = [
    "validate",
    "duality",
    "reduction",
    "whittaker",
    "dimensions",
    "fs",
];

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub table: TableId,
    pub row: u32,
    pub display: String,
    pub checks: Vec<CheckResult>,
}

impl EntryReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusReport {
    pub entries: Vec<EntryReport>,
}

impl CorpusReport {
    pub fn failures(&self) -> usize {
        self.entries.iter().filter(|e| !e.pass()).count()
    }

    pub fn failed_checks(&self) -> Vec<(String, String)> {
        let mut out = vec![];
        for e in &self.entries {
            for c in &e.checks {
                if !c.pass {
                    out.push((format!("{}:{}", e.table, e.row), c.check.clone()));
                }
            }
        }
        out
    }
}

fn ok(check: &str, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        check: check.into(),
        pass: true,
        detail: detail.into(),
    }
}

fn fail(check: &str, detail: impl Into<String>) -> CheckResult {
    CheckResult {
        check: check.into(),
        pass: false,
        detail: detail.into(),
    }
}

fn run_check(entry: &CorpusEntry, check: &str) -> CheckResult {
    match check_inner(entry, check) {
        Ok(r) => r,
        Err(e) => fail(check, format!("error: {e}")),
    }
}

fn check_inner(entry: &CorpusEntry, check: &str) -> Result<CheckResult> {
    match check {
        "validate" => {
            let rep = quadruple::validate(&entry.quad)?;
            let dual_symp = repcalc::is_symplectic(&entry.dual.datum, &entry.rho_hat);
            let dual_anom = repcalc::anomaly_proxy(&entry.dual.datum, &entry.rho_hat);
            if rep.pass() && dual_symp && dual_anom {
                Ok(ok(
                    check,
                    "symplectic + anomaly proxy + containment + grading",
                ))
            } else {
                Ok(fail(
                    check,
                    format!("{rep:?}, dual symplectic {dual_symp}, dual anomaly proxy {dual_anom}"),
                ))
            }
        }
        "duality" => {
            let Some(knop) = &entry.knop else {
                return Ok(ok(check, "no Knop excerpt for this row (glued model)"));
            };
            let parse_all = |v: &[String]| -> Result<Vec<TypeLabel>> {
                let mut out = vec![];
                for s in v {
                    out.push(TypeLabel::parse(s)?);
                }
                out.sort();
                Ok(out)
            };
            let wv: Vec<TypeLabel> = parse_all(&knop.little_weyl)?
                .into_iter()
                .map(|t| t.dual())
                .collect();
            let mut wv = wv;
            wv.sort();
            let h_types = entry.quad.h.type_multiset();
            let lv: Vec<TypeLabel> = parse_all(&knop.dual_levi)?
                .into_iter()
                .map(|t| t.dual())
                .collect();
            let mut lv = lv;
            lv.sort();
            let iota_types = entry.quad.g.levi(&entry.quad.iota)?.type_multiset();
            if wv == h_types && lv == iota_types {
                Ok(ok(check, "H ≅ dual little Weyl group, ι ≅ dual Levi"))
            } else {
                Ok(fail(
                    check,
                    format!(
                        "H {h_types:?} vs dual Ŵ_V {wv:?}; ι {iota_types:?} vs dual l̂ {lv:?}"
                    ),
                ))
            }
        }
        "reduction" => {
            let Some((t, row, params)) = &entry.reduces_to else {
                return Ok(ok(check, "reductive row"));
            };
            let target = families::instantiate(*t, *row, params)?;
            let h_coch = entry.quad.grading_cochar()?;
            let m = entry.quad.g.centralizer_levi(&h_coch)?;
            let rho_h_iota = entry.quad.rho_h_iota()?;
            let a = quadruple::ReducedData {
                ambient: &m,
                h: &entry.quad.h,
                emb: &entry.quad.emb,
                rho: &rho_h_iota,
            };
            let b = quadruple::ReducedData {
                ambient: &target.quad.g,
                h: &target.quad.h,
                emb: &target.quad.emb,
                rho: &target.quad.rho_h,
            };
            if quadruple::reduced_matches(&a, &b)? {
                let dropped = m.central_rank() as i64 - target.quad.g.central_rank() as i64;
                Ok(ok(
                    check,
                    format!("reduces to {t}:{row} {params:?} (central rank diff {dropped})"),
                ))
            } else {
                Ok(fail(check, format!("does not match {t}:{row} {params:?}")))
            }
        }
        "whittaker" => {
            let Some((t, row, params)) = &entry.reduces_to else {
                return Ok(ok(check, "reductive row"));
            };
            let target = families::instantiate(*t, *row, params)?;
            let rep = quadruple::check_whittaker_compatibility(
                &entry.quad,
                &entry.dual,
                &entry.rho_hat,
                &target.dual.datum,
                &target.rho_hat,
            )?;
            if rep.pass {
                Ok(ok(check, rep.detail))
            } else {
                Ok(fail(check, rep.detail))
            }
        }
        "dimensions" => {
            let d = &entry.dual.datum;
            let total: i64 = entry.rho_hat.weights(d).values().sum();
            let dim = entry.rho_hat.dim_i64(d);
            let h = &entry.quad.h;
            let total_h: i64 = entry.quad.rho_h.weights(h).values().sum();
            let dim_h = entry.quad.rho_h.dim_i64(h);
            if total == dim && total_h == dim_h {
                Ok(ok(check, format!("dim ρ̂ = {dim}, dim ρ_H = {dim_h}")))
            } else {
                Ok(fail(
                    check,
                    format!("weight counts {total}/{total_h} vs dims {dim}/{dim_h}"),
                ))
            }
        }
        "fs" => {
            let mut tested = 0;
            for (d, rho) in [
                (&entry.quad.h, &entry.quad.rho_h),
                (&entry.dual.datum, &entry.rho_hat),
            ] {
                for hw in rho.summands.keys() {
                    if repcalc::weyl_dim(d, hw) > 100.into() {
                        continue;
                    }
                    tested += 1;
                    let parity = repcalc::fs_indicator(d, hw);
                    let oracle = fs_tensor_square_oracle(d, hw)?;
                    if parity != oracle {
                        return Ok(fail(
                            check,
                            format!("parity {parity} vs tensor oracle {oracle} at {hw:?}"),
                        ));
                    }
                }
            }
            Ok(ok(check, format!("{tested} irreps cross-validated")))
        }
        other => Err(Error::Usage(format!("unknown check {other:?}"))),
    }
}

/// Independent Frobenius–Schur oracle: locate the invariant line of a
/// self-dual irreducible inside Sym² versus ∧² of its weight multiset.
pub fn fs_tensor_square_oracle(d: &RootDatum, hw: &[i64]) -> Result<i64> {
    use crate::repcalc::WeightMultiset;
    let wts: Vec<(Vector, i64)> = repcalc::weight_multiplicities(d, hw).into_iter().collect();
    let mut sym = WeightMultiset::new();
    let mut alt = WeightMultiset::new();
    for i in 0..wts.len() {
        for j in i..wts.len() {
            let sum = crate::lattice::add(&wts[i].0, &wts[j].0);
            if i == j {
                let m = wts[i].1;
                *sym.entry(sum.clone()).or_insert(0) += m * (m + 1) / 2;
                *alt.entry(sum).or_insert(0) += m * (m - 1) / 2;
            } else {
                let m = wts[i].1 * wts[j].1;
                *sym.entry(sum.clone()).or_insert(0) += m;
                *alt.entry(sum).or_insert(0) += m;
            }
        }
    }
    let zero = vec![0i64; d.rank()];
    let sym_triv = repcalc::decompose_weight_multiset(d, &sym)?
        .summands
        .get(&zero)
        .copied()
        .unwrap_or(0);
    let alt_triv = repcalc::decompose_weight_multiset(d, &alt)?
        .summands
        .get(&zero)
        .copied()
        .unwrap_or(0);
    Ok(sym_triv - alt_triv)
}

use crate::rootdata::RootDatum;

/// Run the requested checks (or all of them) on a set of entries.
pub fn verify_corpus(entries: &[CorpusEntry], checks: &[String]) -> CorpusReport {
    let selected: Vec<String> = if checks.is_empty() {
        ALL_CHECKS.iter().map(|s| s.to_string()).collect()
    } else {
        checks.to_vec()
    };
    let entries = entries
        .iter()
        .map(|e| EntryReport {
            table: e.table,
            row: e.row,
            display: e.display.clone(),
            checks: selected.iter().map(|c| run_check(e, c)).collect(),
        })
        .collect();
    CorpusReport { entries }
}
