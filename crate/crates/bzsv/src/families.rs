//!構builders for the corpus rows: every row of the six summary tables is a
//! parametrized family with a default instance. The registry instantiates a
//! family at arbitrary admissible parameters, which is also how reduction
//! targets are re-derived during verification.
//!
//! Each builder records the group and subgroup as build expressions, the
//! embedding as character assignments (G-characters expressed in the
//! subgroup's product coordinates), the symplectic representation in the
//! rep-spec grammar, the Levi label of the nilpotent orbit, the dual
//! representation as labeled components of `(G/Z_Δ)^∨`, and the Knop-side
//! excerpt data.

use std::collections::BTreeMap;

use crate::lattice::{self, Vector};
use crate::quadruple::{self, Quadruple};
use crate::repcalc::{self, RepSum};
use crate::rootdata::{build_root_datum, torus_map_from_chars, RootDatum};
use crate::tables::{CorpusEntry, KnopData, Params, TableId, ThetaShift};
use crate::{Error, Result};

pub fn default_params(table: TableId, row: u32) -> Result<Params> {
    let spec = row_spec(table, row)?;
    Ok(spec.defaults)
}

pub fn instantiate(table: TableId, row: u32, params: &Params) -> Result<CorpusEntry> {
    let spec = row_spec(table, row)?;
    let mut merged = spec.defaults.clone();
    for (k, v) in params {
        if !merged.contains_key(k) {
            return Err(Error::Usage(format!(
                "{table}:{row} takes no parameter {k:?}"
            )));
        }
        merged.insert(k.clone(), *v);
    }
    build_row(table, row, &merged)
}

struct RowMeta {
    defaults: Params,
}

fn pmap(pairs: &[(&str, i64)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

fn row_spec(table: TableId, row: u32) -> Result<RowMeta> {
    use TableId::*;
    let defaults = match (table, row) {
        (Red1, 1) => pmap(&[("m", 3)]),
        (Red1, 2) => pmap(&[("m", 2)]),
        (Red1, 5) => pmap(&[("n", 3)]),
        (Red1, 6) => pmap(&[("n", 2)]),
        (Red1, 12) => pmap(&[("m", 2)]),
        (Red1, 13) => pmap(&[("m", 2)]),
        (Red1, 18) => pmap(&[("n", 2)]),
        (Red1, 19) => pmap(&[("n", 2)]),
        (Red1, 20) => pmap(&[("n", 3)]),
        (Red1, 21) => pmap(&[("n", 4)]),
        (Red1, r) if (1..=26).contains(&r) => pmap(&[]),
        (Red2, 6) => pmap(&[("m", 2)]),
        (Red2, 7) => pmap(&[("m", 2)]),
        (Red2, r) if (1..=9).contains(&r) => pmap(&[]),
        (Nonred1, 1) => pmap(&[("m", 3), ("n", 2)]),
        (Nonred1, 2) => pmap(&[("m", 2), ("n", 4)]),
        (Nonred1, 3) => pmap(&[("m", 5)]),
        (Nonred1, 4) => pmap(&[("m", 2)]),
        (Nonred1, 5) => pmap(&[("m", 3)]),
        (Nonred1, 6) => pmap(&[("m", 4)]),
        (Nonred1, 7) => pmap(&[("m", 3), ("n", 2)]),
        (Nonred1, 8) => pmap(&[("k", 4)]),
        (Nonred1, 9) => pmap(&[("m", 4)]),
        (Nonred1x, 7) => pmap(&[("m", 2)]),
        (Nonred1x, 8) => pmap(&[("m", 2)]),
        (Nonred1x, 9) => pmap(&[("k", 3)]),
        (Nonred1x, 13) => pmap(&[("m", 3)]),
        (Nonred1x, r) if (1..=13).contains(&r) => pmap(&[]),
        (Nonred2, 1) => pmap(&[("m", 5), ("n", 2)]),
        (Nonred2, 2) => pmap(&[("n", 6)]),
        (Nonred2, 3) => pmap(&[("m", 1), ("k", 2)]),
        (Nonred2, 4) => pmap(&[("m", 5), ("n", 2)]),
        (Nonred2, 5) => pmap(&[("m", 2), ("n", 5)]),
        (Nonred2x, 13) => pmap(&[("n", 5)]),
        (Nonred2x, r) if (1..=13).contains(&r) => pmap(&[]),
        _ => {
            return Err(Error::Usage(format!(
                "no row {row} in table {table}"
            )))
        }
    };
    Ok(RowMeta { defaults })
}

fn get(params: &Params, key: &str) -> i64 {
    params.get(key).copied().expect("validated parameter")
}

// ----------------------------------------------------------------------
// assembly helpers
// ----------------------------------------------------------------------

/// Width of the product character lattice underlying a constrained datum.
fn prod_width(h: &RootDatum) -> usize {
    h.atoms().last().map(|a| a.coords.1).unwrap_or(h.rank())
}

/// Character assignment matrix under construction: row per G-coordinate,
/// entries in subgroup product coordinates.
struct Asn {
    rows: Vec<Vector>,
}

impl Asn {
    fn new(g: &RootDatum, h: &RootDatum) -> Asn {
        Asn {
            rows: vec![vec![0; prod_width(h)]; g.rank()],
        }
    }

    fn set(&mut self, g_coord: usize, pairs: &[(usize, i64)]) {
        for &(c, v) in pairs {
            self.rows[g_coord][c] = v;
        }
    }
}

#[derive(Clone)]
enum DualTerm {
    /// Irreducible summand, self-dualized by a central twist.
    P(Vec<(usize, &'static str)>),
    /// A representation plus its dual.
    T(Vec<(usize, &'static str)>),
    /// Like `T`, with an extra central character given as a G-cocharacter.
    Tc(Vec<(usize, &'static str)>, Vector),
}

fn dual_term_weight(
    dual: &quadruple::DualSide,
    factors: &[(usize, &'static str)],
) -> Result<Vector> {
    let d = &dual.datum;
    let mut w = vec![0i64; d.rank()];
    for (comp, name) in factors {
        let labels = repcalc::named_labels(&d.components()[*comp], name)?;
        let part = repcalc::labeled_weight(d, *comp, &labels)?;
        w = lattice::add(&w, &part);
    }
    Ok(w)
}

fn build_dual_rho(dual: &quadruple::DualSide, terms: &[DualTerm]) -> Result<(RepSum, String)> {
    let d = &dual.datum;
    let mut out = RepSum::zero();
    let mut spec_parts = vec![];
    let show = |factors: &[(usize, &'static str)]| -> String {
        factors
            .iter()
            .map(|(c, n)| format!("{n}[{}]", d.components()[*c].label))
            .collect::<Vec<_>>()
            .join(" (x) ")
    };
    for t in terms {
        match t {
            DualTerm::P(factors) => {
                let w = repcalc::self_dualize(d, &dual_term_weight(dual, factors)?)?;
                out.add(w, 1);
                spec_parts.push(show(factors));
            }
            DualTerm::T(factors) => {
                let w = dual_term_weight(dual, factors)?;
                out.add(w.clone(), 1);
                out.add(d.dual_weight(&w), 1);
                spec_parts.push(format!("T({})", show(factors)));
            }
            DualTerm::Tc(factors, extra) => {
                let w = lattice::add(&dual_term_weight(dual, factors)?, &dual.char_of(extra));
                out.add(w.clone(), 1);
                out.add(d.dual_weight(&w), 1);
                spec_parts.push(format!("T({} (x) chi)", show(factors)));
            }
        }
    }
    Ok((out, spec_parts.join(" (+) ")))
}

#[allow(clippy::too_many_arguments)]
struct RowData {
    family: &'static str,
    display: String,
    g: String,
    h: String,
    assign: Vec<Vector>,
    rho_h_spec: String,
    iota: Vec<usize>,
    dual_terms: Vec<DualTerm>,
    knop: Option<KnopData>,
    reduces_to: Option<(TableId, u32, Params)>,
    period: Option<&'static str>,
    notes: String,
    theta_shifts: Vec<ThetaShift>,
    embedding_note: Option<&'static str>,
}

fn knop(number: &str, wv: &[String], lv: &[String], editorial: bool) -> Option<KnopData> {
    Some(KnopData {
        number: number.to_string(),
        little_weyl: wv.to_vec(),
        dual_levi: lv.to_vec(),
        pairing_editorial: editorial,
    })
}

/// Type label strings with degenerate ranks dropped.
fn ts(fam: &str, rank: i64) -> Vec<String> {
    if rank <= 0 || (fam == "D" && rank == 1) {
        return vec![];
    }
    if fam == "D" && rank == 2 {
        return vec!["A1".into(), "A1".into()];
    }
    vec![format!("{fam}{rank}")]
}

fn tss(parts: &[Vec<String>]) -> Vec<String> {
    parts.iter().flatten().cloned().collect()
}

fn finish(table: TableId, row: u32, params: &Params, data: RowData) -> Result<CorpusEntry> {
    let g = build_root_datum(&data.g)?;
    let h = build_root_datum(&data.h)?;
    let emb = torus_map_from_chars(&g, &h, &data.assign)?;
    let rho_h = repcalc::parse_rep(&h, &data.rho_h_spec)?;
    let quad = Quadruple {
        g,
        h,
        emb,
        rho_h,
        iota: data.iota,
    };
    let dual = quadruple::dual_side(&quad)?;
    let (rho_hat, rho_hat_spec) = build_dual_rho(&dual, &data.dual_terms)?;
    Ok(CorpusEntry {
        table,
        row,
        family: data.family.to_string(),
        params: params.clone(),
        display: data.display,
        quad,
        dual,
        rho_hat,
        rho_h_spec: data.rho_h_spec,
        rho_hat_spec,
        knop: data.knop,
        reduces_to: data.reduces_to,
        period: data.period.map(|s| s.to_string()),
        notes: data.notes,
        theta_shifts: data.theta_shifts,
        embedding_note: data.embedding_note.map(|s| s.to_string()),
    })
}

/// Solve for character assignments in hard cases: find cocharacters `u_k`
/// of G (one per subgroup product coordinate) with prescribed pairings
/// against given G-characters, optionally restricted to a span.
fn solve_assign(
    g: &RootDatum,
    h_width: usize,
    conds: &[(Vector, Vector)],
    space: Option<&[Vector]>,
) -> Result<Vec<Vector>> {
    let full_space: Vec<Vector>;
    let space = match space {
        Some(s) => s,
        None => {
            full_space = lattice::identity(g.rank());
            &full_space
        }
    };
    // rows of the system: ⟨char_i, Σ_j x_j space_j⟩ = target_i[k]
    let rows: Vec<Vector> = conds
        .iter()
        .map(|(ch, _)| space.iter().map(|s| lattice::dot(ch, s)).collect())
        .collect();
    let mut us: Vec<Vector> = vec![];
    for k in 0..h_width {
        let b: Vector = conds.iter().map(|(_, t)| t[k]).collect();
        let x = lattice::solve(&rows, &b, space.len())
            .ok_or_else(|| Error::RootDatum(format!("no integral embedding solution (coord {k})")))?;
        let mut u = vec![0i64; g.rank()];
        for (j, s) in space.iter().enumerate() {
            u = lattice::add(&u, &lattice::scale(s, x[j]));
        }
        us.push(u);
    }
    // assignment rows: assign[c][k] = u_k[c]
    Ok((0..g.rank())
        .map(|c| us.iter().map(|u| u[c]).collect())
        .collect())
}

fn unit(width: usize, idx: usize) -> Vec<(usize, i64)> {
    let _ = width;
    vec![(idx, 1)]
}

// ----------------------------------------------------------------------
// the rows
// ----------------------------------------------------------------------

fn build_row(table: TableId, row: u32, params: &Params) -> Result<CorpusEntry> {
    use DualTerm::{P, T};
    use TableId::*;
    let data: RowData = match (table, row) {
        // ============================== red1 ==============================
        (Red1, 1) => {
            let m = get(params, "m");
            let g = format!("SO({}) x SO({})", 2 * m + 1, 2 * m);
            let h = format!("SO({})", 2 * m);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hr = hd.rank();
            for i in 0..hr {
                a.set(i, &unit(hr, i));
                a.set(m as usize + i, &unit(hr, i));
            }
            let dual_terms = if m == 1 {
                // std_{SO2} splits into two characters: T(std_{Sp2} ⊗ χ)
                let mut z = vec![0i64; gd.rank()];
                z[1] = 1;
                vec![DualTerm::Tc(vec![(0, "std")], z)]
            } else {
                vec![P(vec![(0, "std"), (1, "std")])]
            };
            RowData {
                family: "gp.odd-even",
                display: format!("(SO{} x SO{}, SO{}, 0)", 2 * m + 1, 2 * m, 2 * m),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![],
                dual_terms,
                knop: knop("(1.1) p=2m", &ts("D", m), &[], false),
                reduces_to: None,
                period: None,
                notes: "reductive Gross-Prasad model, odd x even".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 2) => {
            let m = get(params, "m");
            let g = format!("SO({}) x SO({})", 2 * m + 2, 2 * m + 1);
            let h = format!("SO({})", 2 * m + 1);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hr = hd.rank();
            for i in 0..hr {
                a.set(i, &unit(hr, i));
                a.set((m + 1) as usize + i, &unit(hr, i));
            }
            let dual_terms = if m == 1 {
                vec![P(vec![(0, "std"), (1, "std"), (2, "std")])]
            } else {
                vec![P(vec![(0, "std"), (1, "std")])]
            };
            RowData {
                family: "gp.even-odd",
                display: format!("(SO{} x SO{}, SO{}, 0)", 2 * m + 2, 2 * m + 1, 2 * m + 1),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![],
                dual_terms,
                knop: knop("(1.1) p=2m+2", &ts("C", m), &[], false),
                reduces_to: None,
                period: None,
                notes: "reductive Gross-Prasad model, even x odd; m=1 is the trilinear model"
                    .into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 3) => {
            let g = "GSp(6) x GSpin(7)".to_string();
            let h = "S(GSp(6) x GSpin(7))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..8 {
                a.set(i, &unit(8, i));
            }
            RowData {
                family: "gsp6-gspin7",
                display: "(GSp6 x GSpin7, S(GSp6 x GSpin7), std (x) Spin7)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSp6) (x) spin(GSpin7)".into(),
                iota: vec![],
                dual_terms: vec![P(vec![(0, "spin"), (1, "std")])],
                knop: knop("(1.3) m=3", &tss(&[ts("C", 3), ts("B", 3)]), &[], false),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 4) => {
            let g = "GSp(6) x GSpin(9)".to_string();
            let h = "S(GSp(6) x GSpin(8))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // GSp6 coords 0..3 -> H coords 0..3; GSpin9 e_i -> GSpin8 e_i, f -> f
            for i in 0..4 {
                a.set(i, &unit(9, i));
            }
            for i in 0..4 {
                a.set(4 + i, &unit(9, 4 + i));
            }
            a.set(8, &unit(9, 8));
            RowData {
                family: "gsp6-gspin9",
                display: "(GSp6 x GSpin9, S(GSp6 x GSpin8), std (x) HSpin8)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSp6) (x) hspin+(GSpin8)".into(),
                iota: vec![],
                dual_terms: vec![P(vec![(0, "spin"), (1, "std")])],
                knop: knop("(1.3) m=4", &tss(&[ts("D", 4), ts("B", 3)]), &[], false),
                reduces_to: None,
                period: None,
                notes: "triality partner of the Spin7 model".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 5) => {
            let n = get(params, "n");
            let g = format!("GL({n}) x GL({n})");
            let h = format!("GL({n})");
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..n as usize {
                a.set(i, &unit(n as usize, i));
                a.set(n as usize + i, &unit(n as usize, i));
            }
            RowData {
                family: "rankin-selberg.equal",
                display: format!("(GL{n} x GL{n}, GL{n}, T(std))"),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("T(std(GL{n}))"),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "std"), (1, "std")])],
                knop: knop("(2.1) m=n", &ts("A", n - 1), &[], false),
                reduces_to: None,
                period: None,
                notes: "Rankin-Selberg for GLn x GLn with a mirabolic theta series".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 6) => {
            let n = get(params, "n");
            let g = format!("GL({}) x GL({n})", n + 1);
            let h = format!("GL({n})");
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..n as usize {
                a.set(i, &unit(n as usize, i));
                a.set((n + 1) as usize + i, &unit(n as usize, i));
            }
            RowData {
                family: "rankin-selberg.next",
                display: format!("(GL{} x GL{n}, GL{n}, 0)", n + 1),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "std"), (1, "std")])],
                knop: knop("(2.1) m=n+1", &ts("A", n - 1), &[], false),
                reduces_to: None,
                period: None,
                notes: "Rankin-Selberg for GL(n+1) x GLn".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 7) => {
            let g = "GSp(4) x GL(2)".to_string();
            let h = "G(GL(2) x GL(2))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]); // e1 -> a1
            a.set(1, &[(2, 1)]); // e2 -> b1
            a.set(2, &[(0, 1), (1, 1)]); // c -> det a
            a.set(3, &[(0, 1)]); // F1 -> a1
            a.set(4, &[(1, 1)]); // F2 -> a2
            RowData {
                family: "gsp4-gl2",
                display: "(GSp4 x GL2, G(GL2 x GL2), T(std#2))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2#2))".into(),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "spin"), (1, "std")])],
                knop: knop("(2.6) m=n=2", &["A1".into(), "A1".into()], &[], false),
                reduces_to: None,
                period: None,
                notes: "Gross-Prasad for SO5 x SO4 with one cusp form replaced by a theta series"
                    .into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 8) => {
            let g = "GSp(4) x GL(3)".to_string();
            let h = g.clone();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..6 {
                a.set(i, &unit(6, i));
            }
            RowData {
                family: "gsp4-gl3",
                display: "(GSp4 x GL3, H = G, T(std (x) std))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GSp4) (x) std(GL3))".into(),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "spin"), (1, "std")])],
                knop: knop("(2.6) m=2 n=3", &tss(&[ts("C", 2), ts("A", 2)]), &[], false),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 9) => {
            let g = "GSp(4) x GL(4)".to_string();
            let h = "S(GSp(4) x GL(4))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..7 {
                a.set(i, &unit(7, i));
            }
            RowData {
                family: "gsp4-gl4",
                display: "(GSp4 x GL4, S(GSp4 x GL4), std (x) wedge2 + T(std))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSp4) (x) wedge2(GL4) (+) T(std(GL4))".into(),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "spin"), (1, "std")])],
                knop: knop("(2.6) m=2 n=4", &tss(&[ts("C", 2), ts("A", 3)]), &[], false),
                reduces_to: None,
                period: None,
                notes: "both sides strongly tempered; dual pair with red1:16".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 10) => {
            let g = "GSp(4) x GL(5)".to_string();
            let h = "S(GSp(4) x GL(4))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &unit(7, i));
            }
            for i in 0..4 {
                a.set(3 + i, &unit(7, 3 + i));
            }
            RowData {
                family: "gsp4-gl5",
                display: "(GSp4 x GL5, S(GSp4 x GL4), std (x) wedge2)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSp4) (x) wedge2(GL4)".into(),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "spin"), (1, "std")])],
                knop: knop("(2.6) m=2 n=5", &tss(&[ts("C", 2), ts("A", 3)]), &[], false),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 11) => {
            let g = "GSpin(7) x GL(3)".to_string();
            let h = "GSpin(6) x GL(3)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &unit(7, i)); // e_i -> E_i
            }
            a.set(3, &unit(7, 3)); // f -> F
            for i in 0..3 {
                a.set(4 + i, &unit(7, 4 + i));
            }
            RowData {
                family: "gspin7-gl3",
                display: "(GSpin7 x GL3, GSpin6 x GL3, T(HSpin6 (x) std))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(hspin+(GSpin6) (x) std(GL3))".into(),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "std"), (1, "std")])],
                knop: knop("(2.6) m=n=3", &tss(&[ts("A", 3), ts("A", 2)]), &[], false),
                reduces_to: None,
                period: None,
                notes: "GSpin6 is GL4 up to central isogeny".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 12) => {
            let m = get(params, "m");
            let g = format!("SO({}) x Sp({})", 2 * m + 1, 2 * m);
            let h = g.clone();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..gd.rank() {
                a.set(i, &unit(gd.rank(), i));
            }
            RowData {
                family: "so-sp.plus",
                display: format!("(SO{} x Sp{}, H = G, std (x) std + std)", 2 * m + 1, 2 * m),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!(
                    "std(SO{}) (x) std(Sp{}) (+) std(Sp{})",
                    2 * m + 1,
                    2 * m,
                    2 * m
                ),
                iota: vec![],
                dual_terms: vec![P(vec![(0, "std"), (1, "std")]), P(vec![(0, "std")])],
                knop: knop(
                    "(11.11) p=2m+1",
                    &tss(&[ts("B", m), ts("C", m)]),
                    &[],
                    false,
                ),
                reduces_to: None,
                period: None,
                notes: "self-dual".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 13) => {
            let m = get(params, "m");
            let g = format!("SO({}) x Sp({})", 2 * m + 1, 2 * m - 2);
            let h = format!("SO({}) x Sp({})", 2 * m, 2 * m - 2);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hw = prod_width(&hd);
            for i in 0..m as usize {
                a.set(i, &unit(hw, i));
            }
            for i in 0..(m - 1) as usize {
                a.set(m as usize + i, &unit(hw, m as usize + i));
            }
            RowData {
                family: "so-sp.minus",
                display: format!(
                    "(SO{} x Sp{}, SO{} x Sp{}, std (x) std)",
                    2 * m + 1,
                    2 * m - 2,
                    2 * m,
                    2 * m - 2
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("std(SO{}) (x) std(Sp{})", 2 * m, 2 * m - 2),
                iota: vec![],
                dual_terms: vec![P(vec![(0, "std"), (1, "std")]), P(vec![(0, "std")])],
                knop: knop(
                    "(11.11) p=2m-1",
                    &tss(&[ts("B", m - 1), ts("D", m)]),
                    &[],
                    false,
                ),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 14) => {
            let g = "GL(4) x GSO(4)".to_string();
            let h = "S(GSp(4) x GSO(4))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // GSp4 in GL4: x -> (E1, E2, d-E2, d-E1)
            a.set(0, &[(0, 1)]);
            a.set(1, &[(1, 1)]);
            a.set(2, &[(2, 1), (1, -1)]);
            a.set(3, &[(2, 1), (0, -1)]);
            a.set(4, &[(3, 1)]);
            a.set(5, &[(4, 1)]);
            a.set(6, &[(5, 1)]);
            RowData {
                family: "gl4-gso4",
                display: "(GL4 x GSO4, S(GSp4 x GSO4), std (x) std)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSO4) (x) std(GSp4)".into(),
                iota: vec![],
                dual_terms: vec![
                    P(vec![(0, "wedge2"), (1, "std")]),
                    P(vec![(0, "wedge2"), (2, "std")]),
                ],
                knop: knop(
                    "(11.10)",
                    &["A1".into(), "A1".into(), "B2".into()],
                    &[],
                    true,
                ),
                reduces_to: None,
                period: None,
                notes: "essentially Gross-Prasad for SO6 x SO5 through the GSO4 theta".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 15) => {
            let g = "GL(4) x GL(2)".to_string();
            let h = "GL(2) x GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]);
            a.set(1, &[(1, 1)]);
            a.set(2, &[(2, 1)]);
            a.set(3, &[(3, 1)]);
            a.set(4, &[(2, 1)]);
            a.set(5, &[(3, 1)]);
            RowData {
                family: "gl4-gl2",
                display: "(GL4 x GL2, GL2 x GL2, 0)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![],
                dual_terms: vec![P(vec![(0, "wedge2"), (1, "std")]), T(vec![(0, "std")])],
                knop: knop("(12.7) m=1", &["A1".into(), "A1".into()], &[], false),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 16) => {
            let g = "GL(4) x GSp(4)".to_string();
            let h = g.clone();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..7 {
                a.set(i, &unit(7, i));
            }
            RowData {
                family: "gl4-gsp4",
                display: "(GL4 x GSp4, H = G, T(std (x) std))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL4) (x) std(GSp4))".into(),
                iota: vec![],
                dual_terms: vec![P(vec![(0, "wedge2"), (1, "spin")]), T(vec![(0, "std")])],
                knop: knop("(12.7) m=2", &tss(&[ts("C", 2), ts("A", 3)]), &[], false),
                reduces_to: None,
                period: None,
                notes: "dual pair with red1:9".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 17) => {
            let g = "GSpin(7) x GSpin(6)".to_string();
            let h = "GSpin(6) x GSpin(6)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &unit(8, i));
            }
            a.set(3, &unit(8, 3));
            for i in 0..4 {
                a.set(4 + i, &unit(8, 4 + i));
            }
            RowData {
                family: "gspin7-gspin6",
                display: "(GSpin7 x GSpin6, GSpin6 x GSpin6, T(HSpin6 (x) HSpin6))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(hspin+(GSpin6#1) (x) hspin+(GSpin6#2))".into(),
                iota: vec![],
                dual_terms: vec![P(vec![(0, "std"), (1, "wedge2")]), T(vec![(1, "std")])],
                knop: knop("(12.7) m=3", &tss(&[ts("A", 3), ts("A", 3)]), &[], false),
                reduces_to: None,
                period: None,
                notes: "Gross-Prasad for GSpin7 x GSpin6 through a GL4 x GL4 theta".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 18) => {
            let n = get(params, "n");
            let g = format!("GL({n}) x GL({n})");
            let h = g.clone();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..gd.rank() {
                a.set(i, &unit(gd.rank(), i));
            }
            RowData {
                family: "rs-theta.equal",
                display: format!("(GL{n} x GL{n}, H = G, T(std (x) std + std#2))"),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!(
                    "T(std(GL{n}#1) (x) std(GL{n}#2) (+) std(GL{n}#2))"
                ),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "std"), (1, "std")]), T(vec![(1, "std")])],
                knop: knop(
                    "(22.3) m=n",
                    &tss(&[ts("A", n - 1), ts("A", n - 1)]),
                    &[],
                    false,
                ),
                reduces_to: None,
                period: None,
                notes: "theta introduces a central value of the standard L-function".into(),
                theta_shifts: vec![ThetaShift {
                    component: 1,
                    name: "std".into(),
                    s: [1, 2],
                }],
                embedding_note: None,
            }
        }
        (Red1, 19) => {
            let n = get(params, "n");
            let g = format!("GL({}) x GL({n})", n + 1);
            let h = format!("GL({n}) x GL({n})");
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hw = prod_width(&hd);
            for i in 0..n as usize {
                a.set(i, &unit(hw, i));
                a.set((n + 1) as usize + i, &unit(hw, n as usize + i));
            }
            RowData {
                family: "rs-theta.next",
                display: format!("(GL{} x GL{n}, GL{n} x GL{n}, T(std (x) std))", n + 1),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("T(std(GL{n}#1) (x) std(GL{n}#2))"),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "std"), (1, "std")]), T(vec![(1, "std")])],
                knop: knop(
                    "(22.3) m=n+1",
                    &tss(&[ts("A", n - 1), ts("A", n - 1)]),
                    &[],
                    false,
                ),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![ThetaShift {
                    component: 1,
                    name: "std".into(),
                    s: [1, 2],
                }],
                embedding_note: None,
            }
        }
        (Red1, 20) => {
            let n = get(params, "n");
            let g = format!("GL({n}) x GL({})", n - 1);
            let h = g.clone();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..gd.rank() {
                a.set(i, &unit(gd.rank(), i));
            }
            RowData {
                family: "rs-theta.prev",
                display: format!("(GL{n} x GL{}, H = G, T(std (x) std + std#1))", n - 1),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!(
                    "T(std(GL{n}) (x) std(GL{}) (+) std(GL{n}))",
                    n - 1
                ),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "std"), (1, "std")]), T(vec![(0, "std")])],
                knop: knop(
                    "(22.3) m=n-1",
                    &tss(&[ts("A", n - 1), ts("A", n - 2)]),
                    &[],
                    false,
                ),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![ThetaShift {
                    component: 0,
                    name: "std".into(),
                    s: [1, 2],
                }],
                embedding_note: None,
            }
        }
        (Red1, 21) => {
            let n = get(params, "n");
            let g = format!("GL({n}) x GL({})", n - 2);
            let h = format!("GL({}) x GL({})", n - 1, n - 2);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hw = prod_width(&hd);
            for i in 0..(n - 1) as usize {
                a.set(i, &unit(hw, i));
            }
            for i in 0..(n - 2) as usize {
                a.set(n as usize + i, &unit(hw, (n - 1) as usize + i));
            }
            RowData {
                family: "rs-theta.prev2",
                display: format!(
                    "(GL{n} x GL{}, GL{} x GL{}, T(std (x) std))",
                    n - 2,
                    n - 1,
                    n - 2
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("T(std(GL{}) (x) std(GL{}))", n - 1, n - 2),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "std"), (1, "std")]), T(vec![(0, "std")])],
                knop: knop(
                    "(22.3) m=n-2",
                    &tss(&[ts("A", n - 2), ts("A", n - 3)]),
                    &[],
                    false,
                ),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![ThetaShift {
                    component: 0,
                    name: "std".into(),
                    s: [1, 1],
                }],
                embedding_note: None,
            }
        }
        (Red1, 22) => {
            let g = "GL(2)^5".to_string();
            let h = "S(GL(2)^3)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // a -> copy 1; b -> copies 2,3 diagonally; c -> copies 4,5
            for i in 0..2 {
                a.set(i, &unit(6, i));
                a.set(2 + i, &unit(6, 2 + i));
                a.set(4 + i, &unit(6, 2 + i));
                a.set(6 + i, &unit(6, 4 + i));
                a.set(8 + i, &unit(6, 4 + i));
            }
            RowData {
                family: "glue.gl2-5",
                display: "((GL2)^5, S(GL2^3), std (x) std (x) std)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GL2#1) (x) std(GL2#2) (x) std(GL2#3)".into(),
                iota: vec![],
                dual_terms: vec![
                    P(vec![(0, "std"), (1, "std"), (2, "std")]),
                    P(vec![(0, "std"), (3, "std"), (4, "std")]),
                ],
                knop: None,
                reduces_to: None,
                period: None,
                notes: "Table S gluing: two copies of (S.3) with n = 4".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 23) => {
            let g = "GL(2)^4".to_string();
            let h = "S(GL(2)^3)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..2 {
                a.set(i, &unit(6, i));
                a.set(2 + i, &unit(6, 2 + i));
                a.set(4 + i, &unit(6, 4 + i));
                a.set(6 + i, &unit(6, 4 + i));
            }
            RowData {
                family: "glue.gl2-4",
                display: "((GL2)^4, S(GL2^3), std (x) std (x) std + T(std#2))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec:
                    "std(GL2#1) (x) std(GL2#2) (x) std(GL2#3) (+) T(std(GL2#2))".into(),
                iota: vec![],
                dual_terms: vec![
                    T(vec![(0, "std"), (1, "std")]),
                    P(vec![(0, "std"), (2, "std"), (3, "std")]),
                ],
                knop: None,
                reduces_to: None,
                period: None,
                notes: "Table S gluing: (S.11) with m = 2 glued to (S.3) with n = 4".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 24) => {
            let g = "GL(2)^3".to_string();
            let h = "GL(2) x GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..2 {
                a.set(i, &unit(4, i));
                a.set(2 + i, &unit(4, 2 + i));
                a.set(4 + i, &unit(4, 2 + i));
            }
            RowData {
                family: "glue.gl2-3",
                display: "((GL2)^3, GL2 x GL2, T(std (x) std))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2#1) (x) std(GL2#2))".into(),
                iota: vec![],
                dual_terms: vec![
                    T(vec![(0, "std")]),
                    P(vec![(0, "std"), (1, "std"), (2, "std")]),
                ],
                knop: None,
                reduces_to: None,
                period: None,
                notes: "Table S gluing: (S.10) glued to (S.3) with n = 4".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 25) => {
            let g = "GL(2)^3".to_string();
            let h = "S(GL(2)^3)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..6 {
                a.set(i, &unit(6, i));
            }
            RowData {
                family: "glue.gl2-31",
                display: "((GL2)^3, S(GL2^3), std (x) std (x) std + T(std#2) + T(std#3))"
                    .into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GL2#1) (x) std(GL2#2) (x) std(GL2#3) (+) T(std(GL2#2)) (+) T(std(GL2#3))"
                    .into(),
                iota: vec![],
                dual_terms: vec![
                    T(vec![(0, "std"), (1, "std")]),
                    T(vec![(0, "std"), (2, "std")]),
                ],
                knop: None,
                reduces_to: None,
                period: None,
                notes: "Table S gluing: two copies of (S.11) with m = 2".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red1, 26) => {
            let g = "GL(2) x GL(1)".to_string();
            let h = g.clone();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &unit(3, i));
            }
            let mut z = vec![0i64; 3];
            z[2] = 1;
            RowData {
                family: "glue.gl2-1",
                display: "(GL2 x GL1, H = G, T(std + std (x) chi))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2) (+) std(GL2) (x) chi1(GL1))".into(),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "std")]), DualTerm::Tc(vec![(0, "std")], z)],
                knop: None,
                reduces_to: None,
                period: None,
                notes: "Table S gluing: (S.10) glued to itself; self-dual".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        // ============================== red2 ==============================
        (Red2, 1) => {
            let g = "GSp(6) x GSp(4)".to_string();
            let h = "G(GSp(4) x GSp(2))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]); // e1 -> A1
            a.set(1, &[(1, 1)]); // e2 -> A2
            a.set(2, &[(3, 1)]); // e3 -> B1
            a.set(3, &[(2, 1)]); // c -> l
            a.set(4, &[(0, 1)]); // F1 -> A1
            a.set(5, &[(1, 1)]); // F2 -> A2
            a.set(6, &[(2, 1)]); // d -> l
            RowData {
                family: "gsp6-gsp4",
                display: "(GSp6 x GSp4, G(Sp4 x Sp2), 0)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![],
                dual_terms: vec![P(vec![(0, "spin"), (1, "spin")])],
                knop: knop("(1.3) m=2", &tss(&[ts("C", 2), ts("A", 1)]), &[], false),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red2, 2) => {
            let g = "GSp(6) x GSO(4)".to_string();
            let h = "S(GSO(4) x G(GSp(4) x GSp(2)))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // H product coords: (F1, F2, L | A1, A2, l1 | B1, l2)
            a.set(0, &[(3, 1)]); // e1 -> A1
            a.set(1, &[(4, 1)]); // e2 -> A2
            a.set(2, &[(6, 1)]); // e3 -> B1
            a.set(3, &[(5, 1)]); // c -> l1
            a.set(4, &[(0, 1)]); // f1 -> F1
            a.set(5, &[(1, 1)]); // f2 -> F2
            a.set(6, &[(2, 1)]); // c_so -> L
            RowData {
                family: "gsp6-gso4",
                display: "(GSp6 x GSO4, S(GSO4 x G(Sp4 x Sp2)), std (x) std)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSO4) (x) std(GSp4)".into(),
                iota: vec![],
                dual_terms: vec![
                    P(vec![(0, "spin"), (1, "std")]),
                    P(vec![(0, "spin"), (2, "std")]),
                ],
                knop: knop(
                    "(11.9)",
                    &["A1".into(), "A1".into(), "A1".into(), "B2".into()],
                    &[],
                    true,
                ),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red2, 3) => {
            let g = "GSp(4) x GSpin(8) x GL(2)".to_string();
            let h = "S(GSpin(8) x G(GSp(4) x GL(2)))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // H product coords: (F1..F4, F0 | A1, A2, l | B1, B2)
            a.set(0, &[(5, 1)]); // e1 -> A1
            a.set(1, &[(6, 1)]); // e2 -> A2
            a.set(2, &[(7, 1)]); // c -> l
            for i in 0..4 {
                a.set(3 + i, &[(i, 1)]);
            }
            a.set(7, &[(4, 1)]); // f0 -> F0
            a.set(8, &[(8, 1)]); // x1 -> B1
            a.set(9, &[(9, 1)]); // x2 -> B2
            RowData {
                family: "gsp4-gspin8-gl2",
                display:
                    "(GSp4 x GSpin8 x GL2, S(GSpin8 x G(Sp4 x SL2)), std (x) std8 + HSpin8 (x) std2)"
                        .into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSp4) (x) std(GSpin8) (+) hspin+(GSpin8) (x) std(GL2)".into(),
                iota: vec![],
                dual_terms: vec![
                    P(vec![(0, "spin"), (1, "std")]),
                    P(vec![(1, "hspin+"), (2, "std")]),
                ],
                knop: knop(
                    "(11.7)",
                    &tss(&[ts("C", 2), ts("D", 4), ts("A", 1)]),
                    &[],
                    true,
                ),
                reduces_to: None,
                period: None,
                notes: "self-dual".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red2, 4) => {
            let g = "GL(6) x GL(2)".to_string();
            let h = "GL(2) x S(GL(4) x GL(2))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // free GL2 on coords 1,2 of GL6; GL4 on coords 3..6; S-partner = GL2 factor
            a.set(0, &[(0, 1)]);
            a.set(1, &[(1, 1)]);
            for i in 0..4 {
                a.set(2 + i, &[(2 + i, 1)]);
            }
            a.set(6, &[(6, 1)]);
            a.set(7, &[(7, 1)]);
            RowData {
                family: "gl6-gl2",
                display: "(GL6 x GL2, GL2 x S(GL4 x GL2), wedge2 (x) std)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "wedge2(GL4) (x) std(GL2#2)".into(),
                iota: vec![],
                dual_terms: vec![P(vec![(0, "wedge3")]), T(vec![(0, "std"), (1, "std")])],
                knop: knop(
                    "(12.5)",
                    &tss(&[ts("A", 1), ts("A", 1), ts("A", 3)]),
                    &[],
                    true,
                ),
                reduces_to: None,
                period: None,
                notes: "no unramified computation known for this row".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red2, 5) => {
            let g = "GL(2) x GL(4) x GL(2)".to_string();
            let h = "S(GL(2) x GL(4)) x GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..8 {
                a.set(i, &unit(8, i));
            }
            RowData {
                family: "gl2-gl4-gl2",
                display:
                    "(GL2 x GL4 x GL2, S(GL2 x GL4) x GL2, std (x) wedge2 + T(std4 (x) std2))"
                        .into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GL2#1) (x) wedge2(GL4) (+) T(std(GL4) (x) std(GL2#2))".into(),
                iota: vec![],
                dual_terms: vec![
                    P(vec![(0, "std"), (1, "wedge2")]),
                    T(vec![(1, "std"), (2, "std")]),
                ],
                knop: knop(
                    "(12.8)",
                    &tss(&[ts("A", 1), ts("A", 1), ts("A", 3)]),
                    &[],
                    true,
                ),
                reduces_to: None,
                period: None,
                notes: "self-dual; multivariable Rankin-Selberg shape".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red2, 6) => {
            let m = get(params, "m");
            let g = format!("GL({})", 2 * m);
            let h = format!("GL({m}) x GL({m})");
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..m as usize {
                a.set(i, &unit(2 * m as usize, i));
                a.set(m as usize + i, &unit(2 * m as usize, m as usize + i));
            }
            RowData {
                family: "bump-friedberg.even",
                display: format!("(GL{}, GL{m} x GL{m}, T(std#1))", 2 * m),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("T(std(GL{m}#1))"),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "wedge2")]), T(vec![(0, "std")])],
                knop: knop(
                    "(22.2) n=2m",
                    &tss(&[ts("A", m - 1), ts("A", m - 1)]),
                    &[],
                    false,
                ),
                reduces_to: None,
                period: None,
                notes: "exterior-square Rankin-Selberg shape".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red2, 7) => {
            let m = get(params, "m");
            let g = format!("GL({})", 2 * m + 1);
            let h = format!("GL({}) x GL({m})", m + 1);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hw = prod_width(&hd);
            for i in 0..(m + 1) as usize {
                a.set(i, &unit(hw, i));
            }
            for i in 0..m as usize {
                a.set((m + 1) as usize + i, &unit(hw, (m + 1) as usize + i));
            }
            RowData {
                family: "bump-friedberg.odd",
                display: format!("(GL{}, GL{} x GL{m}, T(std#1))", 2 * m + 1, m + 1),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("T(std(GL{}#1))", m + 1),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "wedge2")]), T(vec![(0, "std")])],
                knop: knop(
                    "(22.2) n=2m+1",
                    &tss(&[ts("A", m), ts("A", m - 1)]),
                    &[],
                    false,
                ),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red2, 8) => {
            let g = "GL(3)".to_string();
            let h = "GL(2) x GL(1)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]);
            a.set(1, &[(1, 1)]);
            a.set(2, &[(2, 1)]);
            RowData {
                family: "gl3-gl2",
                display: "(GL3, GL2 x GL1, T(std))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2))".into(),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "std")]), T(vec![(0, "std")])],
                knop: knop("(22.4) n=3", &ts("A", 1), &[], false),
                reduces_to: None,
                period: None,
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Red2, 9) => {
            let g = "GSpin(5) x GL(1)".to_string();
            let h = "GSpin(4) x GL(1)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..4 {
                a.set(i, &unit(4, i));
            }
            RowData {
                family: "gspin5-gspin4",
                display: "(GSpin5 x GL1, GSpin4 x GL1, T(HSpin4+ + HSpin4- (x) chi))".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(hspin+(GSpin4) (+) hspin-(GSpin4) (x) chi1(GL1))".into(),
                iota: vec![],
                dual_terms: vec![T(vec![(0, "spin")]), T(vec![(0, "spin")])],
                knop: knop("(22.5) m=2", &["A1".into(), "A1".into()], &[], false),
                reduces_to: None,
                period: None,
                notes: "Gross-Prasad for GSpin5 x GSpin4 with a theta series".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        // ============================ nonred1 =============================
        (Nonred1, 1) => {
            let (m, n) = (get(params, "m"), get(params, "n"));
            let g = format!("SO({}) x SO({})", 2 * m + 1, 2 * n);
            let h = format!("SO({})", 2 * n);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hr = hd.rank();
            for i in 0..hr {
                a.set(i, &unit(hr, i));
                a.set(m as usize + i, &unit(hr, i));
            }
            let iota: Vec<usize> = (n as usize..m as usize).collect();
            let dual_terms = if n == 2 {
                vec![P(vec![(0, "std"), (1, "std"), (2, "std")])]
            } else {
                vec![P(vec![(0, "std"), (1, "std")])]
            };
            RowData {
                family: "gp.bessel",
                display: format!("(SO{} x SO{}, SO{}, 0, B{})", 2 * m + 1, 2 * n, 2 * n, m - n),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota,
                dual_terms,
                knop: knop("(1.1) p=2n<2m", &ts("D", n), &ts("C", m - n), false),
                reduces_to: Some((Red1, 1, pmap(&[("m", n)]))),
                period: Some("Bessel"),
                notes: "Gross-Prasad Bessel period".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1, 2) => {
            let (m, n) = (get(params, "m"), get(params, "n"));
            let g = format!("SO({}) x SO({})", 2 * m + 1, 2 * n);
            let h = format!("SO({})", 2 * m + 1);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hr = hd.rank();
            for i in 0..hr {
                a.set(i, &unit(hr, i));
                a.set(m as usize + i, &unit(hr, i));
            }
            let iota: Vec<usize> = (2 * m as usize..(m + n) as usize).collect();
            RowData {
                family: "gp.dtail",
                display: format!(
                    "(SO{} x SO{}, SO{}, 0, D{})",
                    2 * m + 1,
                    2 * n,
                    2 * m + 1,
                    n - m
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota,
                dual_terms: vec![P(vec![(0, "std"), (1, "std")])],
                knop: knop("(1.1) p=2n>2m+2", &ts("C", m), &ts("D", n - m), false),
                reduces_to: Some((Red1, 2, pmap(&[("m", m)]))),
                period: Some("Bessel"),
                notes: "Gross-Prasad Bessel period, even side larger".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1, 3) => {
            let m = get(params, "m");
            let g = format!("GSpin({}) x GSp(6)", 2 * m + 1);
            let h = "S(GSpin(8) x GSp(6))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // GSpin(2m+1) coords (e_1..e_m, f) -> GSpin8 (E1..E4, F0)
            for i in 0..4 {
                a.set(i, &unit(9, i));
            }
            a.set(m as usize, &unit(9, 4)); // f -> F0
            for i in 0..4 {
                a.set((m + 1) as usize + i, &unit(9, 5 + i));
            }
            let iota: Vec<usize> = (4..m as usize).collect();
            RowData {
                family: "gspin-gsp6.bessel",
                display: format!(
                    "(GSpin{} x GSp6, S(GSpin8 x GSp6), std (x) HSpin8, B{})",
                    2 * m + 1,
                    m - 4
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSp6) (x) hspin+(GSpin8)".into(),
                iota,
                dual_terms: vec![P(vec![(0, "std"), (1, "spin")])],
                knop: knop(
                    "(1.3) m>4",
                    &tss(&[ts("D", 4), ts("B", 3)]),
                    &ts("C", m - 4),
                    false,
                ),
                reduces_to: Some((Red1, 4, pmap(&[]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred1, 4) => {
            let m = get(params, "m");
            let g = format!("SO({})", 2 * m + 1);
            let h = "SO(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]);
            let iota: Vec<usize> = (1..m as usize).collect();
            RowData {
                family: "so-so2",
                display: format!("(SO{}, SO2, 0, B{})", 2 * m + 1, m - 1),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota,
                dual_terms: vec![T(vec![(0, "std")])],
                knop: knop("(2.5)", &[], &ts("C", m - 1), false),
                reduces_to: Some((Red1, 1, pmap(&[("m", 1)]))),
                period: Some("Bessel"),
                notes: "Gross-Prasad for SO(2m+1) x SO2".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1, 5) => {
            let m = get(params, "m");
            let g = format!("GSpin({}) x GL(2)", 2 * m + 1);
            let h = "G(GL(2) x GL(2))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // e1 -> a1 - b2, e2 -> a1 - b1, f -> -a1; GL2 factor <- copy a
            a.set(0, &[(0, 1), (3, -1)]);
            a.set(1, &[(0, 1), (2, -1)]);
            a.set(m as usize, &[(0, -1)]);
            a.set((m + 1) as usize, &[(0, 1)]);
            a.set((m + 2) as usize, &[(1, 1)]);
            let iota: Vec<usize> = (2..m as usize).collect();
            RowData {
                family: "gspin-gl2.bessel",
                display: format!(
                    "(GSpin{} x GL2, G(SL2 x SL2), T(std#2), B{})",
                    2 * m + 1,
                    m - 2
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2#2))".into(),
                iota,
                dual_terms: vec![T(vec![(0, "std"), (1, "std")])],
                knop: knop(
                    "(2.6) m>2 n=2",
                    &["A1".into(), "A1".into()],
                    &ts("C", m - 2),
                    false,
                ),
                reduces_to: Some((Red1, 7, pmap(&[]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1, 6) => {
            let m = get(params, "m");
            let g = format!("GSpin({}) x GL(3)", 2 * m + 1);
            let h = "GSpin(6) x GL(3)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &unit(7, i));
            }
            a.set(m as usize, &unit(7, 3)); // f -> F0
            for i in 0..3 {
                a.set((m + 1) as usize + i, &unit(7, 4 + i));
            }
            let iota: Vec<usize> = (3..m as usize).collect();
            RowData {
                family: "gspin-gl3.bessel",
                display: format!(
                    "(GSpin{} x GL3, GSpin6 x GL3, T(HSpin6 (x) std), B{})",
                    2 * m + 1,
                    m - 3
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(hspin+(GSpin6) (x) std(GL3))".into(),
                iota,
                dual_terms: vec![T(vec![(0, "std"), (1, "std")])],
                knop: knop(
                    "(2.6) m>3 n=3",
                    &tss(&[ts("A", 3), ts("A", 2)]),
                    &ts("C", m - 3),
                    false,
                ),
                reduces_to: Some((Red1, 11, pmap(&[]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1, 7) => {
            let (m, n) = (get(params, "m"), get(params, "n"));
            let g = format!("SO({}) x Sp({})", 2 * m + 1, 2 * n - 2);
            let h = format!("SO({}) x Sp({})", 2 * n, 2 * n - 2);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hw = prod_width(&hd);
            for i in 0..n as usize {
                a.set(i, &unit(hw, i));
            }
            for i in 0..(n - 1) as usize {
                a.set(m as usize + i, &unit(hw, n as usize + i));
            }
            let iota: Vec<usize> = (n as usize..m as usize).collect();
            RowData {
                family: "so-sp.bessel",
                display: format!(
                    "(SO{} x Sp{}, SO{} x Sp{}, std (x) std, B{})",
                    2 * m + 1,
                    2 * n - 2,
                    2 * n,
                    2 * n - 2,
                    m - n
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("std(SO{}) (x) std(Sp{})", 2 * n, 2 * n - 2),
                iota,
                dual_terms: vec![P(vec![(0, "std"), (1, "std")]), P(vec![(0, "std")])],
                knop: knop(
                    "(11.11) p=2n-1<2m-1",
                    &tss(&[ts("B", n - 1), ts("D", n)]),
                    &ts("C", m - n),
                    false,
                ),
                reduces_to: Some((Red1, 13, pmap(&[("m", n)]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1, 8) => {
            let k = get(params, "k");
            let g = format!("GSpin({}) x GSO(4)", 2 * k);
            let h = "S(GSp(4) x GSO(4))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // GSpin5 = GSp4 inside GSpin(2k) on coords 1, 2:
            // e1 -> E1+E2-d, e2 -> E1-E2, f -> -E1
            a.set(0, &[(0, 1), (1, 1), (2, -1)]);
            a.set(1, &[(0, 1), (1, -1)]);
            a.set(k as usize, &[(0, -1)]);
            // GSO4 factor
            a.set((k + 1) as usize, &[(3, 1)]);
            a.set((k + 2) as usize, &[(4, 1)]);
            a.set((k + 3) as usize, &[(5, 1)]);
            let iota: Vec<usize> = (2..k as usize).collect();
            RowData {
                family: "gspin-gso4.bessel",
                display: format!(
                    "(GSpin{} x GSO4, S(GSp4 x GSO4), std (x) std, D{})",
                    2 * k,
                    k - 2
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSO4) (x) std(GSp4)".into(),
                iota,
                dual_terms: vec![
                    P(vec![(0, "std"), (1, "std")]),
                    P(vec![(0, "std"), (2, "std")]),
                ],
                knop: knop(
                    "(11.1) n=2k",
                    &["A1".into(), "A1".into(), "B2".into()],
                    &ts("D", k - 2),
                    true,
                ),
                reduces_to: Some((Red1, 14, pmap(&[]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred1, 9) => {
            let m = get(params, "m");
            let g = format!("GSpin({}) x GSpin(6)", 2 * m + 1);
            let h = "GSpin(6) x GSpin(6)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &unit(8, i));
            }
            a.set(m as usize, &unit(8, 3));
            for i in 0..4 {
                a.set((m + 1) as usize + i, &unit(8, 4 + i));
            }
            let iota: Vec<usize> = (3..m as usize).collect();
            RowData {
                family: "gspin-gspin6.bessel",
                display: format!(
                    "(GSpin{} x GSpin6, GSpin6 x GSpin6, T(HSpin6 (x) HSpin6), B{})",
                    2 * m + 1,
                    m - 3
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(hspin+(GSpin6#1) (x) hspin+(GSpin6#2))".into(),
                iota,
                dual_terms: vec![P(vec![(0, "std"), (1, "wedge2")]), T(vec![(1, "std")])],
                knop: knop(
                    "(12.7) m>3",
                    &tss(&[ts("A", 3), ts("A", 3)]),
                    &ts("C", m - 3),
                    false,
                ),
                reduces_to: Some((Red1, 17, pmap(&[]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        _ => return build_row_nonreductive_extra(table, row, params),
    };
    finish(table, row, params, data)
}

// continued in a second dispatcher to keep match arms manageable
fn build_row_nonreductive_extra(table: TableId, row: u32, params: &Params) -> Result<CorpusEntry> {
    use DualTerm::{P, T};
    use TableId::*;
    let data: RowData = match (table, row) {
        // ============================ nonred1x ============================
        (Nonred1x, 1) => {
            let g = "GSp(6) x GL(2)".to_string();
            let h = "GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &[(0, 1)]);
            }
            a.set(3, &[(0, 1), (1, 1)]); // c -> det
            a.set(4, &[(0, 1)]);
            a.set(5, &[(1, 1)]);
            RowData {
                family: "gsp6-gl2.whittaker",
                display: "(GSp6 x GL2, GL2, 0, A2)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0, 1],
                dual_terms: vec![P(vec![(0, "spin"), (1, "std")])],
                knop: knop("(1.3) m=1", &ts("A", 1), &ts("A", 2), false),
                reduces_to: Some((Red1, 2, pmap(&[("m", 1)]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1x, 2) => {
            let g = "GSp(8) x GL(2)".to_string();
            let h = "G(GL(2) x GL(2))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(2, 1)]); // e1 -> b1
            a.set(1, &[(0, 1)]); // e2 -> a1
            a.set(2, &[(2, 1)]); // e3 -> b1
            a.set(3, &[(2, 1)]); // e4 -> b1
            a.set(4, &[(0, 1), (1, 1)]); // c -> det
            a.set(5, &[(0, 1)]);
            a.set(6, &[(1, 1)]);
            RowData {
                family: "gsp8-gl2.bessel",
                display: "(GSp8 x GL2, G(SL2 x SL2), 0, A2)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0, 1],
                dual_terms: vec![P(vec![(0, "spin"), (1, "std")])],
                knop: knop("(1.4)", &["A1".into(), "A1".into()], &ts("A", 2), false),
                reduces_to: Some((Red1, 1, pmap(&[("m", 2)]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred1x, 3) => {
            let g = "GSp(10)".to_string();
            let h = "GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..5 {
                a.set(i, &[(0, 1)]);
            }
            a.set(5, &[(0, 1), (1, 1)]);
            RowData {
                family: "gsp10.whittaker",
                display: "(GSp10, GL2, 0, A4)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0, 1, 2, 3],
                dual_terms: vec![P(vec![(0, "spin")])],
                knop: knop("(1.5) n=11", &ts("A", 1), &ts("A", 4), false),
                reduces_to: Some((Red1, 2, pmap(&[("m", 1)]))),
                period: Some("Bessel"),
                notes: "dual representation is Spin11".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1x, 4) => {
            let g = "GSO(12)".to_string();
            let h = "GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..6 {
                a.set(i, &[(0, 1)]);
            }
            a.set(6, &[(0, 1), (1, 1)]);
            RowData {
                family: "gso12.whittaker",
                display: "(GSO12, GL2, 0, A5)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0, 1, 2, 3, 4],
                dual_terms: vec![P(vec![(0, "hspin+")])],
                knop: knop("(1.5) n=12", &ts("A", 1), &ts("A", 5), false),
                reduces_to: Some((Red1, 2, pmap(&[("m", 1)]))),
                period: Some("Bessel"),
                notes: "dual representation is HSpin12".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1x, 5) => {
            let g = "GL(6)".to_string();
            let h = "GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &[(0, 1)]);
                a.set(3 + i, &[(1, 1)]);
            }
            RowData {
                family: "gl6.ginzburg-rallis",
                display: "(GL6, GL2, 0, A2 x A2)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0, 1, 3, 4],
                dual_terms: vec![P(vec![(0, "wedge3")])],
                knop: knop(
                    "(1.7)",
                    &ts("A", 1),
                    &tss(&[ts("A", 2), ts("A", 2)]),
                    false,
                ),
                reduces_to: Some((Red1, 2, pmap(&[("m", 1)]))),
                period: Some("Bessel"),
                notes: "Ginzburg-Rallis model".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1x, 6) => {
            let g = "E7ad".to_string();
            let h = "PGL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            // h-cochar of the E6 Levi; the three level-zero positive roots
            let levi = gd.levi(&[0, 1, 2, 3, 4, 5])?;
            let hc = levi.two_rho_cov().clone();
            let mut conds: Vec<(Vector, Vector)> = (0..6)
                .map(|i| (gd.simple_roots()[i].clone(), vec![0]))
                .collect();
            for r in gd.positive_roots() {
                if lattice::dot(&r.root, &hc) == 0 {
                    conds.push((r.root.clone(), vec![1]));
                }
            }
            let assign = solve_assign(&gd, 1, &conds, None)?;
            RowData {
                family: "e7.whittaker",
                display: "(E7, PGL2, 0, E6)".into(),
                g,
                h: h.clone(),
                assign,
                rho_h_spec: "0".into(),
                iota: vec![0, 1, 2, 3, 4, 5],
                dual_terms: vec![P(vec![(0, "std")])],
                knop: knop("(1.11)", &ts("A", 1), &["E6".into()], false),
                reduces_to: Some((Red1, 2, pmap(&[("m", 1)]))),
                period: Some("Bessel"),
                notes: "standard 56-dimensional dual representation".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1x, 7) => {
            let m = get(params, "m");
            let g = format!("GL({})", 2 * m);
            let h = format!("GL({m})");
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..m as usize {
                a.set(2 * i, &unit(m as usize, i));
                a.set(2 * i + 1, &unit(m as usize, i));
            }
            let iota: Vec<usize> = (0..m as usize).map(|i| 2 * i).collect();
            RowData {
                family: "jacquet-shalika.even",
                display: format!("(GL{}, GL{m}, T(std), (A1)^{m})", 2 * m),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("T(std(GL{m}))"),
                iota,
                dual_terms: vec![T(vec![(0, "wedge2")])],
                knop: knop(
                    "(2.2) n=2m",
                    &ts("A", m - 1),
                    &(0..m).flat_map(|_| ts("A", 1)).collect::<Vec<_>>(),
                    false,
                ),
                reduces_to: Some((Red1, 5, pmap(&[("n", m)]))),
                period: Some("Bessel"),
                notes: "exterior-square period".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1x, 8) => {
            let m = get(params, "m");
            let g = format!("GL({})", 2 * m + 1);
            let h = format!("GL({m})");
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..m as usize {
                a.set(2 * i, &unit(m as usize, i));
                a.set(2 * i + 1, &unit(m as usize, i));
            }
            let iota: Vec<usize> = (0..m as usize).map(|i| 2 * i).collect();
            RowData {
                family: "jacquet-shalika.odd",
                display: format!("(GL{}, GL{m}, 0, (A1)^{m})", 2 * m + 1),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota,
                dual_terms: vec![T(vec![(0, "wedge2")])],
                knop: knop(
                    "(2.2) n=2m+1",
                    &ts("A", m - 1),
                    &(0..m).flat_map(|_| ts("A", 1)).collect::<Vec<_>>(),
                    false,
                ),
                reduces_to: Some((Red1, 5, pmap(&[("n", m)]))),
                period: Some("Fourier-Jacobi"),
                notes: "odd exterior-square period".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1x, 9) => {
            let k = get(params, "k");
            let g = format!("GSpin({})", 2 * k);
            let h = "GSpin(3)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]);
            a.set(k as usize, &[(1, 1)]); // f -> F
            let iota: Vec<usize> = (1..k as usize).collect();
            RowData {
                family: "gspin-even-gspin3",
                display: format!("(GSpin{}, GSpin3, T(Spin3), D{})", 2 * k, k - 1),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(spin(GSpin3))".into(),
                iota,
                dual_terms: vec![T(vec![(0, "std")])],
                knop: knop("(2.7) m=2k", &ts("A", 1), &ts("D", k - 1), false),
                reduces_to: Some((Red1, 5, pmap(&[("n", 2)]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1x, 10) => {
            let g = "GSp(6)".to_string();
            let h = "GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &[(0, 1)]);
            }
            a.set(3, &[(0, 1), (1, 1)]);
            RowData {
                family: "gsp6-theta",
                display: "(GSp6, GL2, T(std), A2)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2))".into(),
                iota: vec![0, 1],
                dual_terms: vec![T(vec![(0, "spin")])],
                knop: knop("(2.8) n=7", &ts("A", 1), &ts("A", 2), false),
                reduces_to: Some((Red1, 5, pmap(&[("n", 2)]))),
                period: Some("Bessel"),
                notes: "Spin L-function integral".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred1x, 11) => {
            let g = "GSp(8)".to_string();
            let h = "G(GL(2) x GL(2))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]); // e1 -> a1
            a.set(1, &[(0, 1)]); // e2 -> a1
            a.set(2, &[(0, 1)]); // e3 -> a1
            a.set(3, &[(2, 1)]); // e4 -> b1
            a.set(4, &[(0, 1), (1, 1)]); // c -> det
            RowData {
                family: "gsp8-theta",
                display: "(GSp8, G(SL2 x SL2), T(std#2), A2)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2#2))".into(),
                iota: vec![0, 1],
                dual_terms: vec![T(vec![(0, "spin")])],
                knop: knop("(2.8) n=9", &["A1".into(), "A1".into()], &ts("A", 2), false),
                reduces_to: Some((Red1, 7, pmap(&[]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred1x, 12) => {
            let g = "GE6".to_string();
            let h = "GL(3)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let iota = vec![1usize, 2, 3, 4];
            let levi = gd.levi(&iota)?;
            let hc = levi.two_rho_cov().clone();
            let m = gd.centralizer_levi(&hc)?;
            // space: M-coroots plus the central direction
            let mut space: Vec<Vector> = m.simple_coroots().to_vec();
            space.extend(gd.central_cochars());
            // conditions: the two A2 components carry the standard GL3 chars
            let comps = m.components();
            if comps.len() != 2 {
                return Err(Error::Quadruple("GE6 centralizer is not A2 x A2".into()));
            }
            let mut build = |flip: bool| -> Result<Vec<Vector>> {
                let mut conds: Vec<(Vector, Vector)> = vec![];
                for (ci, comp) in comps.iter().enumerate() {
                    let nodes: Vec<usize> = if flip && ci == 1 {
                        comp.nodes.iter().rev().copied().collect()
                    } else {
                        comp.nodes.clone()
                    };
                    for (pos, &node) in nodes.iter().enumerate() {
                        // α_pos maps to a_pos - a_{pos+1}
                        let mut t = vec![0i64; 3];
                        t[pos] = 1;
                        t[pos + 1] = -1;
                        conds.push((m.simple_roots()[node].clone(), t));
                    }
                }
                // similitude restricts to det
                let sim = gd.atom_sim(0).expect("GE6 has a similitude");
                conds.push((sim, vec![1, 1, 1]));
                solve_assign(&gd, 3, &conds, Some(&space))
            };
            let assign = match build(false) {
                Ok(a) => a,
                Err(_) => build(true)?,
            };
            RowData {
                family: "ge6-gl3",
                display: "(GE6, GL3, T(std), D4)".into(),
                g,
                h,
                assign,
                rho_h_spec: "T(std(GL3))".into(),
                iota,
                dual_terms: vec![T(vec![(0, "std")])],
                knop: knop("(2.10)", &ts("A", 2), &ts("D", 4), false),
                reduces_to: Some((Red1, 5, pmap(&[("n", 3)]))),
                period: Some("Bessel"),
                notes: "standard plus its dual on the 27-dimensional representation".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred1x, 13) => {
            let m = get(params, "m");
            let g = format!("GSpin({}) x GL(1)", 2 * m + 1);
            let h = "GSpin(4) x GL(1)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &unit(4, 0));
            a.set(1, &unit(4, 1));
            a.set(m as usize, &unit(4, 2)); // f -> F
            a.set((m + 1) as usize, &unit(4, 3)); // s -> t
            let iota: Vec<usize> = (2..m as usize).collect();
            RowData {
                family: "gspin-gspin4",
                display: format!(
                    "(GSpin{} x GL1, GSpin4 x GL1, T(HSpin4+ + HSpin4- (x) chi), B{})",
                    2 * m + 1,
                    m - 2
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(hspin+(GSpin4) (+) hspin-(GSpin4) (x) chi1(GL1))".into(),
                iota,
                dual_terms: vec![T(vec![(0, "std")]), T(vec![(0, "std")])],
                knop: knop(
                    "(22.5) m>2",
                    &["A1".into(), "A1".into()],
                    &ts("C", m - 2),
                    false,
                ),
                reduces_to: Some((Red2, 9, pmap(&[]))),
                period: Some("Bessel"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        // ============================ nonred2 =============================
        (Nonred2, 1) => {
            let (m, n) = (get(params, "m"), get(params, "n"));
            let g = format!("GL({m}) x GL({n})");
            let h = format!("GL({n})");
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // zero-level coordinates of the first factor, in order
            let zero = zero_coords(m - n, m);
            for (j, &c) in zero.iter().enumerate().take(n as usize) {
                a.set(c, &unit(n as usize, j));
            }
            for i in 0..n as usize {
                a.set(m as usize + i, &unit(n as usize, i));
            }
            let iota: Vec<usize> = (0..(m - n - 1) as usize).collect();
            RowData {
                family: "rs.whittaker",
                display: format!("(GL{m} x GL{n}, GL{n}, 0, A{})", m - n - 1),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota,
                dual_terms: vec![T(vec![(0, "std"), (1, "std")])],
                knop: knop("(2.1) m>n+1", &ts("A", n - 1), &ts("A", m - n - 1), false),
                reduces_to: Some(if (m - n) % 2 == 1 {
                    (Red1, 6, pmap(&[("n", n)]))
                } else {
                    (Red1, 5, pmap(&[("n", n)]))
                }),
                period: Some(if (m - n) % 2 == 1 {
                    "Bessel"
                } else {
                    "Fourier-Jacobi"
                }),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred2, 2) => {
            let n = get(params, "n");
            let g = format!("GSp(4) x GL({n})");
            let h = "S(GSp(4) x GL(4))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &unit(7, i));
            }
            for i in 0..4 {
                a.set(3 + i, &unit(7, 3 + i));
            }
            let iota: Vec<usize> = (6..(n + 1) as usize).collect();
            RowData {
                family: "gsp4-gln",
                display: format!("(GSp4 x GL{n}, S(GSp4 x GL4), std (x) wedge2, A{})", n - 5),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSp4) (x) wedge2(GL4)".into(),
                iota,
                dual_terms: vec![T(vec![(0, "spin"), (1, "std")])],
                knop: knop(
                    "(2.6) m=2 n>5",
                    &tss(&[ts("C", 2), ts("A", 3)]),
                    &ts("A", n - 5),
                    false,
                ),
                reduces_to: Some(if n % 2 == 0 {
                    (Red1, 9, pmap(&[]))
                } else {
                    (Red1, 10, pmap(&[]))
                }),
                period: Some(if n % 2 == 0 {
                    "Fourier-Jacobi"
                } else {
                    "Bessel"
                }),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred2, 3) => {
            let (m, k) = (get(params, "m"), get(params, "k"));
            let g = format!("SO({}) x Sp({})", 2 * m + 1, 2 * k);
            let h = format!("SO({}) x Sp({})", 2 * m + 1, 2 * m);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hw = prod_width(&hd);
            for i in 0..m as usize {
                a.set(i, &unit(hw, i));
            }
            for i in 0..m as usize {
                a.set(m as usize + i, &unit(hw, m as usize + i));
            }
            let iota: Vec<usize> = ((2 * m) as usize..(m + k) as usize).collect();
            RowData {
                family: "so-sp.fj",
                display: format!(
                    "(SO{} x Sp{}, SO{} x Sp{}, std (x) std, C{})",
                    2 * m + 1,
                    2 * k,
                    2 * m + 1,
                    2 * m,
                    k - m
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("std(SO{}) (x) std(Sp{})", 2 * m + 1, 2 * m),
                iota,
                dual_terms: vec![P(vec![(0, "std"), (1, "std")]), P(vec![(0, "std")])],
                knop: knop(
                    "(11.11) p=2k+1>2m+1",
                    &tss(&[ts("B", m), ts("C", m)]),
                    &ts("B", k - m),
                    false,
                ),
                reduces_to: Some((Red1, 12, pmap(&[("m", m)]))),
                period: Some("Fourier-Jacobi"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred2, 4) => {
            let (m, n) = (get(params, "m"), get(params, "n"));
            let g = format!("GL({m}) x GL({n})");
            let h = format!("GL({n}) x GL({n})");
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hw = prod_width(&hd);
            let zero = zero_coords(m - n, m);
            for (j, &c) in zero.iter().enumerate().take(n as usize) {
                a.set(c, &unit(hw, j));
            }
            for i in 0..n as usize {
                a.set(m as usize + i, &unit(hw, n as usize + i));
            }
            let iota: Vec<usize> = (0..(m - n - 1) as usize).collect();
            RowData {
                family: "rs-theta.whittaker",
                display: format!(
                    "(GL{m} x GL{n}, GL{n} x GL{n}, T(std (x) std), A{})",
                    m - n - 1
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("T(std(GL{n}#1) (x) std(GL{n}#2))"),
                iota,
                dual_terms: vec![T(vec![(0, "std"), (1, "std")]), T(vec![(1, "std")])],
                knop: knop(
                    "(22.3) m>n+1",
                    &tss(&[ts("A", n - 1), ts("A", n - 1)]),
                    &ts("A", m - n - 1),
                    false,
                ),
                reduces_to: Some(if (m - n) % 2 == 1 {
                    (Red1, 19, pmap(&[("n", n)]))
                } else {
                    (Red1, 18, pmap(&[("n", n)]))
                }),
                period: Some(if (m - n) % 2 == 1 {
                    "Bessel"
                } else {
                    "Fourier-Jacobi"
                }),
                notes: "Levi type follows the prose (GL_{m-n} block), not the table misprint"
                    .into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred2, 5) => {
            let (m, n) = (get(params, "m"), get(params, "n"));
            let g = format!("GL({m}) x GL({n})");
            let h = format!("GL({m}) x GL({})", m + 1);
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            let hw = prod_width(&hd);
            for i in 0..m as usize {
                a.set(i, &unit(hw, i));
            }
            for i in 0..(m + 1) as usize {
                a.set(m as usize + i, &unit(hw, m as usize + i));
            }
            let iota: Vec<usize> = ((2 * m) as usize..(m + n - 2) as usize).collect();
            RowData {
                family: "rs-theta.whittaker2",
                display: format!(
                    "(GL{m} x GL{n}, GL{m} x GL{}, T(std (x) std), A{})",
                    m + 1,
                    n - m - 2
                ),
                g,
                h,
                assign: a.rows,
                rho_h_spec: format!("T(std(GL{m}) (x) std(GL{}))", m + 1),
                iota,
                dual_terms: vec![T(vec![(0, "std"), (1, "std")]), T(vec![(1, "std")])],
                knop: knop(
                    "(22.3) m<n-2",
                    &tss(&[ts("A", m), ts("A", m - 1)]),
                    &ts("A", n - m - 2),
                    false,
                ),
                reduces_to: Some(if (n - m - 1) % 2 == 1 {
                    (Red1, 21, pmap(&[("n", m + 2)]))
                } else {
                    (Red1, 20, pmap(&[("n", m + 1)]))
                }),
                period: Some(if (n - m - 1) % 2 == 1 {
                    "Bessel"
                } else {
                    "Fourier-Jacobi"
                }),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        _ => return build_row_nonred2x(table, row, params),
    };
    finish(table, row, params, data)
}

/// Zero-level coordinates of a GL factor whose first `b` coordinates carry
/// the principal grading of a leading GL(b) block (level of coordinate
/// `i < b` is `b - 1 - 2i`) and whose remaining `total - b` coordinates sit
/// at level zero.
fn zero_coords(b: i64, total: i64) -> Vec<usize> {
    let mut out = vec![];
    for i in 0..b {
        if b - 1 - 2 * i == 0 {
            out.push(i as usize);
        }
    }
    out.extend((b as usize)..(total as usize));
    out
}

fn build_row_nonred2x(table: TableId, row: u32, params: &Params) -> Result<CorpusEntry> {
    use DualTerm::{P, T};
    use TableId::*;
    let data: RowData = match (table, row) {
        (Nonred2x, 1) => {
            let g = "GSp(12)".to_string();
            let h = "GSp(4)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            for i in 0..3 {
                a.set(i, &[(0, 1)]);
                a.set(3 + i, &[(1, 1)]);
            }
            a.set(6, &[(2, 1)]);
            RowData {
                family: "gsp12.bessel",
                display: "(GSp12, GSp4, 0, A2 x A2)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0, 1, 3, 4],
                dual_terms: vec![P(vec![(0, "spin")])],
                knop: knop(
                    "(1.5) n=13",
                    &ts("B", 2),
                    &tss(&[ts("A", 2), ts("A", 2)]),
                    false,
                ),
                reduces_to: Some((Red1, 2, pmap(&[("m", 2)]))),
                period: Some("Bessel"),
                notes: "dual representation is Spin13".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred2x, 2) => {
            let g = "PGSO(10)".to_string();
            let h = "GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            // assignment on GSO(10) characters, then restricted to the
            // PGSO sublattice basis (the same kernel computation as the atom)
            let gso_assign: Vec<Vector> = vec![
                vec![1, 0], // e1 -> a1
                vec![1, 0], // e2 -> a1
                vec![1, 0], // e3 -> a1
                vec![1, 0], // e4 -> a1
                vec![1, 1], // e5 -> det
                vec![1, 1], // c -> det
            ];
            let mut z = vec![1i64; 6];
            z[5] = 2;
            let basis = lattice::kernel_basis(&[z], 6);
            let assign: Vec<Vector> = basis
                .iter()
                .map(|b| {
                    let mut v = vec![0i64; 2];
                    for (c, coeff) in b.iter().enumerate() {
                        v = lattice::add(&v, &lattice::scale(&gso_assign[c], *coeff));
                    }
                    v
                })
                .collect();
            RowData {
                family: "pgso10.fj",
                display: "(PGSO10, GL2, 0, A3)".into(),
                g,
                h,
                assign,
                rho_h_spec: "0".into(),
                iota: vec![0, 1, 2],
                dual_terms: vec![T(vec![(0, "hspin+")])],
                knop: knop("(2.8) n=10", &ts("A", 1), &ts("A", 3), false),
                reduces_to: Some((Red1, 5, pmap(&[("n", 2)]))),
                period: Some("Fourier-Jacobi"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred2x, 3) => {
            let g = "GSO(12)".to_string();
            let h = "S(GSp(4) x GSO(4))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // GL4 block chars: (e1, e3, c - e4, c - e2) carry GSp4
            a.set(0, &[(0, 1)]); // e1 -> E1
            a.set(1, &[(0, 1), (2, -1), (5, 1)]); // e2 -> E1 - d + L
            a.set(2, &[(1, 1)]); // e3 -> E2
            a.set(3, &[(1, 1), (2, -1), (5, 1)]); // e4 -> E2 - d + L
            a.set(4, &[(3, 1)]); // e5 -> F1
            a.set(5, &[(4, 1)]); // e6 -> F2
            a.set(6, &[(5, 1)]); // c -> L
            RowData {
                family: "gso12-gsp4gso4.fj",
                display: "(GSO12, S(GSp4 x GSO4), 0, A1 x A1)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0, 2],
                dual_terms: vec![P(vec![(0, "hspin+")]), P(vec![(0, "hspin-")])],
                knop: knop(
                    "(11.2)",
                    &["A1".into(), "A1".into(), "B2".into()],
                    &["A1".into(), "A1".into()],
                    true,
                ),
                reduces_to: Some((Red1, 14, pmap(&[]))),
                period: Some("Fourier-Jacobi"),
                notes: "both half-spin representations".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred2x, 4) => {
            let g = "GSO(12) x PGL(2)".to_string();
            let h = "S(GL(2) x GSO(4))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // H product coords: (x1, x2 | f1, f2, l)
            a.set(0, &[(0, 1)]); // e1 -> x1
            a.set(1, &[(0, 1)]); // e2 -> x1
            a.set(2, &[(4, 1), (1, -1)]); // e3 -> l - x2
            a.set(3, &[(4, 1), (1, -1)]); // e4 -> l - x2
            a.set(4, &[(2, 1)]); // e5 -> f1
            a.set(5, &[(3, 1)]); // e6 -> f2
            a.set(6, &[(4, 1)]); // c -> l
            a.set(7, &[(2, 1), (3, -1)]); // PGL2 root char -> f1 - f2
            RowData {
                family: "gso12-pgl2.fj",
                display: "(GSO12 x PGL2, S(GL2 x GSO4), 0, A3)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0, 1, 2],
                dual_terms: vec![
                    P(vec![(0, "std"), (1, "std")]),
                    P(vec![(0, "hspin+")]),
                ],
                knop: knop(
                    "(11.3)",
                    &["A1".into(), "A1".into(), "A1".into()],
                    &ts("A", 3),
                    false,
                ),
                reduces_to: Some((Red1, 22, pmap(&[]))),
                period: Some("Fourier-Jacobi"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred2x, 5) => {
            let g = "GSp(4) x GSpin(12)".to_string();
            let h = "S(GSpin(8) x G(GSp(4) x GL(2)))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // H product coords: (F1..F4, F0 | A1, A2, l | B1, B2)
            a.set(0, &[(5, 1)]); // E1 -> A1
            a.set(1, &[(6, 1)]); // E2 -> A2
            a.set(2, &[(7, 1)]); // d -> l
            a.set(3, &[(8, 1)]); // e1 -> B1
            a.set(4, &[(9, 1)]); // e2 -> B2
            for i in 0..4 {
                a.set(5 + i, &[(i, 1)]); // e_{2+i} -> F_i
            }
            a.set(9, &[(4, 1)]); // f0 -> F0
            RowData {
                family: "gsp4-gspin12.fj",
                display: "(GSp4 x GSpin12, S(GSpin8 x G(Sp4 x SL2)), std (x) std8, A1)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(GSp4) (x) std(GSpin8)".into(),
                iota: vec![2],
                dual_terms: vec![
                    P(vec![(0, "spin"), (1, "std")]),
                    P(vec![(1, "hspin+")]),
                ],
                knop: knop(
                    "(11.4)",
                    &tss(&[ts("C", 2), ts("A", 1), ts("D", 4)]),
                    &ts("A", 1),
                    true,
                ),
                reduces_to: Some((Red2, 3, pmap(&[]))),
                period: Some("Fourier-Jacobi"),
                notes: "ambient group from the prose (GSp4 factor), not the summary misprint"
                    .into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred2x, 6) => {
            let g = "GSO(8) x GSO(4)".to_string();
            let h = "S(GL(2) x GSO(4))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // H product: (x1, x2 | f1, f2, l)
            a.set(0, &[(0, 1)]); // e1 -> x1
            a.set(1, &[(4, 1), (1, -1)]); // e2 -> l - x2
            a.set(2, &[(2, 1)]); // e3 -> f1
            a.set(3, &[(3, 1)]); // e4 -> f2
            a.set(4, &[(4, 1)]); // c -> l
            a.set(5, &[(2, 1)]); // F1 -> f1
            a.set(6, &[(3, 1)]); // F2 -> f2
            a.set(7, &[(4, 1)]); // C -> l
            RowData {
                family: "gso8-gso4.fj",
                display: "(GSO8 x GSO4, S(GL2 x GSO4), 0, A1)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0],
                dual_terms: vec![
                    P(vec![(0, "std"), (1, "std")]),
                    P(vec![(0, "hspin+"), (2, "std")]),
                ],
                knop: knop(
                    "(11.6)",
                    &["A1".into(), "A1".into(), "A1".into()],
                    &ts("A", 1),
                    false,
                ),
                reduces_to: Some((Red1, 22, pmap(&[]))),
                period: Some("Fourier-Jacobi"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred2x, 7) => {
            let g = "GSpin(7)".to_string();
            let h = "Sp(2) x GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]); // e1 -> w
            a.set(1, &[(0, 1)]); // e2 -> w
            a.set(2, &[(1, 1), (2, -1)]); // e3 -> b1 - b2
            a.set(3, &[(1, -1)]); // f -> -b1
            RowData {
                family: "gspin7.fj",
                display: "(GSpin7, SL2 x GL2, std(SL2), A1)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "std(Sp2)".into(),
                iota: vec![0],
                dual_terms: vec![P(vec![(0, "wedge0_3")]), P(vec![(0, "std")])],
                knop: knop("(11.12)", &["A1".into(), "A1".into()], &ts("A", 1), false),
                reduces_to: Some((Red1, 12, pmap(&[("m", 1)]))),
                period: Some("Fourier-Jacobi"),
                notes: "subgroup realized as SL2 x GSpin3 so the lone std stays symplectic"
                    .into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred2x, 8) => {
            let g = "GSO(12)".to_string();
            let h = "S(GL(2) x GSO(4))".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]); // e1 -> x1
            a.set(1, &[(0, 1)]); // e2 -> x1
            a.set(2, &[(4, 1), (1, -1)]); // e3 -> l - x2
            a.set(3, &[(4, 1), (1, -1)]); // e4 -> l - x2
            a.set(4, &[(2, 1)]); // e5 -> f1
            a.set(5, &[(3, 1)]); // e6 -> f2
            a.set(6, &[(4, 1)]); // c -> l
            RowData {
                family: "gso12-theta.fj",
                display: "(GSO12, S(GL2 x GSO4), T(std), A3)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2))".into(),
                iota: vec![0, 1, 2],
                dual_terms: vec![P(vec![(0, "hspin+")]), T(vec![(0, "std")])],
                knop: knop(
                    "(12.1)",
                    &["A1".into(), "A1".into(), "A1".into()],
                    &ts("A", 3),
                    false,
                ),
                reduces_to: Some((Red1, 23, pmap(&[]))),
                period: Some("Fourier-Jacobi"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred2x, 9) => {
            let g = "GSpin(10) x GL(2)".to_string();
            let h = "S(GL(2) x GSpin(6)) x GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // H product: (x1, x2 | E1, E2, E3, F0 | c1, c2)
            a.set(0, &[(0, 1)]); // e1 -> x1
            a.set(1, &[(1, -1)]); // e2 -> -x2
            for i in 0..3 {
                a.set(2 + i, &[(2 + i, 1)]); // e_{2+i} -> E_i
            }
            a.set(5, &[(5, 1)]); // f0 -> F0
            a.set(6, &[(6, 1)]); // y1 -> c1
            a.set(7, &[(7, 1)]); // y2 -> c2
            RowData {
                family: "gspin10-gl2.fj",
                display: "(GSpin10 x GL2, S(GL2 x GSpin6) x GL2, T(HSpin6 (x) std), A1)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(hspin+(GSpin6) (x) std(GL2#2))".into(),
                iota: vec![0],
                dual_terms: vec![
                    P(vec![(0, "std"), (1, "std")]),
                    T(vec![(0, "std")]),
                ],
                knop: knop(
                    "(12.2)",
                    &tss(&[ts("A", 1), ts("A", 1), ts("A", 3)]),
                    &ts("A", 1),
                    false,
                ),
                reduces_to: Some((Red2, 5, pmap(&[]))),
                period: Some("Fourier-Jacobi"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred2x, 10) => {
            let g = "GSO(8) x GL(2)".to_string();
            let h = "S(GL(2)^3)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // H product: (x | y1 | y2), c -> sum of y-dets = -det x
            let cvec: Vec<(usize, i64)> = vec![(2, 1), (3, 1), (4, 1), (5, 1)];
            a.set(0, &[(0, 1)]); // e1 -> x1
            a.set(1, &[(2, 1), (3, 1), (4, 1), (5, 1), (1, -1)]); // e2 -> c - x2
            a.set(2, &[(2, 1), (4, 1)]); // e3 -> y1_1 + y2_1
            a.set(3, &[(2, 1), (5, 1)]); // e4 -> y1_1 + y2_2
            a.set(4, &cvec); // c -> Σ y
            a.set(5, &[(2, 1)]); // F1 -> y1_1
            a.set(6, &[(3, 1)]); // F2 -> y1_2
            RowData {
                family: "gso8-gl2.fj",
                display: "(GSO8 x GL2, S(GL2 x GSO4), T(std), A1)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2#1))".into(),
                iota: vec![0],
                dual_terms: vec![
                    P(vec![(0, "std"), (1, "std")]),
                    T(vec![(0, "std")]),
                ],
                knop: knop(
                    "(12.3)",
                    &["A1".into(), "A1".into(), "A1".into()],
                    &ts("A", 1),
                    false,
                ),
                reduces_to: Some((Red1, 23, pmap(&[]))),
                period: Some("Fourier-Jacobi"),
                notes: "subgroup realized on the GL2 x GL2 cover of GSO4".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred2x, 11) => {
            let g = "GL(6)".to_string();
            let h = "GL(2) x GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]);
            a.set(1, &[(0, 1)]);
            a.set(2, &[(1, 1)]);
            a.set(3, &[(1, 1)]);
            a.set(4, &[(2, 1)]);
            a.set(5, &[(3, 1)]);
            RowData {
                family: "gl6-gl2gl2.fj",
                display: "(GL6, GL2 x GL2, 0, A1 x A1)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "0".into(),
                iota: vec![0, 2],
                dual_terms: vec![P(vec![(0, "wedge3")]), T(vec![(0, "std")])],
                knop: knop(
                    "(12.6)",
                    &["A1".into(), "A1".into()],
                    &["A1".into(), "A1".into()],
                    false,
                ),
                reduces_to: Some((Red1, 24, pmap(&[]))),
                period: Some("Fourier-Jacobi"),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        (Nonred2x, 12) => {
            let g = "GSO(8)".to_string();
            let h = "S(GL(2)^3)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            a.set(0, &[(0, 1)]); // e1 -> x1
            a.set(1, &[(2, 1), (3, 1), (4, 1), (5, 1), (1, -1)]); // e2 -> c - x2
            a.set(2, &[(2, 1), (4, 1)]); // e3 -> y1_1 + y2_1
            a.set(3, &[(2, 1), (5, 1)]); // e4 -> y1_1 + y2_2
            a.set(4, &[(2, 1), (3, 1), (4, 1), (5, 1)]); // c -> Σ y
            RowData {
                family: "gso8-theta2.fj",
                display: "(GSO8, S(GL2 x GSO4), T(std + std), A1)".into(),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2#2)) (+) T(std(GL2#3))".into(),
                iota: vec![0],
                dual_terms: vec![T(vec![(0, "std")]), T(vec![(0, "hspin+")])],
                knop: knop(
                    "(22.1)",
                    &["A1".into(), "A1".into(), "A1".into()],
                    &ts("A", 1),
                    false,
                ),
                reduces_to: Some((Red1, 25, pmap(&[]))),
                period: Some("Fourier-Jacobi"),
                notes: "subgroup realized on the GL2 x GL2 cover of GSO4".into(),
                theta_shifts: vec![],
                embedding_note: Some("prose-derived"),
            }
        }
        (Nonred2x, 13) => {
            let n = get(params, "n");
            let g = format!("GL({n})");
            let h = "GL(2)".to_string();
            let gd = build_root_datum(&g)?;
            let hd = build_root_datum(&h)?;
            let mut a = Asn::new(&gd, &hd);
            // zero-level coords of the leading GL(n-2) block, then the rest
            let zeros: Vec<usize> = zero_coords(n - 2, n);
            for (j, &c) in zeros.iter().enumerate().take(2) {
                a.set(c, &unit(2, j));
            }
            let iota: Vec<usize> = (0..(n - 3) as usize).collect();
            RowData {
                family: "gln-gl2.theta",
                display: format!("(GL{n}, GL2, T(std), A{})", n - 3),
                g,
                h,
                assign: a.rows,
                rho_h_spec: "T(std(GL2))".into(),
                iota,
                dual_terms: vec![T(vec![(0, "std")]), T(vec![(0, "std")])],
                knop: knop("(22.4) n>3", &ts("A", 1), &ts("A", n - 3), false),
                reduces_to: Some(if n % 2 == 1 {
                    (Red2, 8, pmap(&[]))
                } else {
                    (Red1, 26, pmap(&[]))
                }),
                period: Some(if n % 2 == 1 { "Bessel" } else { "Fourier-Jacobi" }),
                notes: "".into(),
                theta_shifts: vec![],
                embedding_note: None,
            }
        }
        _ => {
            return Err(Error::Usage(format!(
                "no builder for {table}:{row}"
            )))
        }
    };
    finish(table, row, params, data)
}
