//! Highest-weight representation calculus over a [`RootDatum`]: exact Weyl
//! dimensions, duals and Frobenius–Schur indicators, Freudenthal weight
//! multiplicities, Klimyk tensor decomposition, restriction along torus maps,
//! and highest-weight peeling of Weyl-invariant weight multisets.
//!
//! Weight multisets are `BTreeMap<Vector, i64>`, always with positive
//! multiplicities. A [`RepSum`] is a formal nonnegative sum of irreducibles
//! given by dominant highest weights.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

use crate::lattice::{self, dot, Vector};
use crate::rootdata::{RootDatum, TorusMap};
use crate::typelabel::{Component, Family};
use crate::{Error, Result};

pub type WeightMultiset = BTreeMap<Vector, i64>;

/// Formal sum of irreducibles on one datum; keys are dominant weights.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RepSum {
    pub summands: BTreeMap<Vector, i64>,
}

impl RepSum {
    pub fn zero() -> Self {
        RepSum::default()
    }

    pub fn irrep(hw: Vector) -> Self {
        let mut s = BTreeMap::new();
        s.insert(hw, 1);
        RepSum { summands: s }
    }

    pub fn add(&mut self, hw: Vector, mult: i64) {
        if mult != 0 {
            *self.summands.entry(hw).or_insert(0) += mult;
        }
    }

    pub fn extend(&mut self, other: &RepSum) {
        for (w, m) in &other.summands {
            self.add(w.clone(), *m);
        }
    }

    pub fn num_irreps(&self) -> i64 {
        self.summands.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn dim(&self, d: &RootDatum) -> BigInt {
        self.summands
            .iter()
            .map(|(w, m)| weyl_dim(d, w) * BigInt::from(*m))
            .sum()
    }

    pub fn dim_i64(&self, d: &RootDatum) -> i64 {
        self.dim(d).to_i64().expect("dimension fits i64")
    }

    /// Full weight multiset with multiplicities.
    pub fn weights(&self, d: &RootDatum) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (hw, m) in &self.summands {
            for (w, k) in weight_multiplicities(d, hw) {
                *out.entry(w).or_insert(0) += k * m;
            }
        }
        out
    }

    pub fn dual(&self, d: &RootDatum) -> RepSum {
        let mut out = RepSum::zero();
        for (hw, m) in &self.summands {
            out.add(d.dual_weight(hw), *m);
        }
        out
    }
}

// ----------------------------------------------------------------------
// dimensions, duals, indicators
// ----------------------------------------------------------------------

/// Weyl dimension formula, exact.
pub fn weyl_dim(d: &RootDatum, hw: &[i64]) -> BigInt {
    debug_assert!(d.is_dominant(hw), "highest weight must be dominant");
    let mut val = BigRational::one();
    for r in d.positive_roots() {
        let h2 = dot(d.two_rho(), &r.coroot); // ⟨2ρ, α^∨⟩
        let num = 2 * dot(hw, &r.coroot) + h2;
        val *= BigRational::new(BigInt::from(num), BigInt::from(h2));
    }
    assert!(val.is_integer(), "Weyl formula must be integral");
    val.to_integer()
}

/// Highest weight of the dual irreducible, `-w₀(λ)`.
pub fn dual_irrep(d: &RootDatum, hw: &[i64]) -> Vector {
    d.dual_weight(hw)
}

/// Frobenius–Schur indicator: 0 if not self-dual, otherwise
/// `(-1)^{⟨λ, 2ρ^∨⟩}` (−1 symplectic, +1 orthogonal).
pub fn fs_indicator(d: &RootDatum, hw: &[i64]) -> i64 {
    if d.dual_weight(hw) != hw {
        return 0;
    }
    if dot(hw, d.two_rho_cov()) % 2 == 0 {
        1
    } else {
        -1
    }
}

// ----------------------------------------------------------------------
// weight multiplicities (Freudenthal)
// ----------------------------------------------------------------------

/// All dominant weights of `V(λ)` with multiplicities, by Freudenthal's
/// recursion. Inner products use the component symmetrizers; only
/// root-lattice differences ever enter, so everything stays integral.
pub fn dominant_weight_multiplicities(d: &RootDatum, hw: &[i64]) -> Vec<(Vector, i64)> {
    let n = d.semisimple_rank();
    // collect dominant weights below λ by positive-root descent
    let mut dom: BTreeMap<Vector, Vector> = BTreeMap::new();
    dom.insert(hw.to_vec(), vec![0; n]);
    let mut queue = vec![hw.to_vec()];
    while let Some(mu) = queue.pop() {
        let gap = dom.get(&mu).unwrap().clone();
        for r in d.positive_roots() {
            let nu = lattice::sub(&mu, &r.root);
            if d.is_dominant(&nu) && !dom.contains_key(&nu) {
                dom.insert(nu.clone(), lattice::add(&gap, &r.simple_coords));
                queue.push(nu);
            }
        }
    }
    // sort by increasing height gap
    let mut order: Vec<(Vector, Vector)> = dom.into_iter().collect();
    order.sort_by(|a, b| {
        (a.1.iter().sum::<i64>(), &a.0).cmp(&(b.1.iter().sum::<i64>(), &b.0))
    });
    let mut mults: BTreeMap<Vector, i64> = BTreeMap::new();
    let mut out = vec![];
    for (mu, gap) in order {
        if gap.iter().all(|&c| c == 0) {
            mults.insert(mu.clone(), 1);
            out.push((mu, 1));
            continue;
        }
        // numerator: 2 Σ_{α>0} Σ_{k≥1} mult(μ+kα) (μ+kα, α)
        let mut num: i128 = 0;
        for r in d.positive_roots() {
            let mut k = 1i64;
            loop {
                let xi = lattice::add(&mu, &lattice::scale(&r.root, k));
                let (xdom, _) = d.dominantize(&xi);
                let Some(&m) = mults.get(&xdom) else { break };
                let inner = r.d as i128 * dot(&xi, &r.coroot) as i128;
                num += 2 * m as i128 * inner;
                k += 1;
            }
        }
        // denominator: (λ-μ, λ+μ+2ρ)
        let shift = lattice::add(&lattice::add(hw, &mu), d.two_rho());
        let mut den: i128 = 0;
        for i in 0..n {
            den += gap[i] as i128
                * d.d_simple()[i] as i128
                * dot(&shift, &d.simple_coroots()[i]) as i128;
        }
        assert!(den > 0 && num % den == 0, "Freudenthal recursion broke");
        let m = (num / den) as i64;
        if m > 0 {
            mults.insert(mu.clone(), m);
            out.push((mu, m));
        }
    }
    out
}

/// Full weight multiset of the irreducible with highest weight `hw`.
pub fn weight_multiplicities(d: &RootDatum, hw: &[i64]) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (mu, m) in dominant_weight_multiplicities(d, hw) {
        for w in d.orbit(&mu) {
            out.insert(w, m);
        }
    }
    out
}

// ----------------------------------------------------------------------
// tensor products (Klimyk)
// ----------------------------------------------------------------------

/// Dominantize `ξ` under the dot action (`w·ξ = w(ξ+ρ)−ρ`), returning the
/// representative and the sign of `w`, or `None` on a wall.
fn dot_dominantize(d: &RootDatum, xi: &[i64]) -> Option<(Vector, i64)> {
    let mut v = xi.to_vec();
    let mut sign = 1i64;
    'outer: loop {
        for i in 0..d.semisimple_rank() {
            let c = d.pair(&v, i);
            if c == -1 {
                return None;
            }
            if c < -1 {
                // s_i · v = s_i(v) - α_i
                v = lattice::sub(&d.reflect(&v, i), &d.simple_roots()[i]);
                sign = -sign;
                continue 'outer;
            }
        }
        return Some((v, sign));
    }
}

/// Decomposition of `V(λ₁) ⊗ V(λ₂)` by the Klimyk formula.
pub fn tensor_decompose(d: &RootDatum, hw1: &[i64], hw2: &[i64]) -> Result<RepSum> {
    if !d.is_dominant(hw1) || !d.is_dominant(hw2) {
        return Err(Error::Rep("tensor factors must be dominant".into()));
    }
    // iterate over the smaller weight multiset
    let (base, iter) = if weyl_dim(d, hw1) <= weyl_dim(d, hw2) {
        (hw2, hw1)
    } else {
        (hw1, hw2)
    };
    let mut acc: BTreeMap<Vector, i64> = BTreeMap::new();
    for (nu, m) in weight_multiplicities(d, iter) {
        let xi = lattice::add(base, &nu);
        if let Some((dom, sign)) = dot_dominantize(d, &xi) {
            *acc.entry(dom).or_insert(0) += sign * m;
        }
    }
    let mut out = RepSum::zero();
    for (w, m) in acc {
        if m < 0 {
            return Err(Error::Rep("negative multiplicity in Klimyk sum".into()));
        }
        if m > 0 {
            out.add(w, m);
        }
    }
    Ok(out)
}

// ----------------------------------------------------------------------
// restriction and peeling
// ----------------------------------------------------------------------

/// Pull a weight multiset on the target torus back through a torus map.
pub fn restrict_along(map: &TorusMap, weights: &WeightMultiset) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (w, m) in weights {
        *out.entry(map.pullback(w)).or_insert(0) += m;
    }
    out
}

/// Decompose a Weyl-invariant weight multiset into irreducibles by peeling
/// maximal dominant weights. Errors signal that the multiset is not the
/// character of a representation.
pub fn decompose_weight_multiset(d: &RootDatum, weights: &WeightMultiset) -> Result<RepSum> {
    let mut rem: BTreeMap<Vector, i64> = weights.clone();
    rem.retain(|_, m| *m != 0);
    let mut out = RepSum::zero();
    while !rem.is_empty() {
        // maximal height entry
        let (w, &m) = rem
            .iter()
            .max_by_key(|(w, _)| (dot(w, d.two_rho_cov()), (*w).clone()))
            .expect("nonempty");
        let w = w.clone();
        if m < 0 {
            return Err(Error::Rep(format!(
                "negative residual multiplicity at weight {w:?}"
            )));
        }
        if !d.is_dominant(&w) {
            return Err(Error::Rep(format!(
                "maximal residual weight {w:?} is not dominant; not a character"
            )));
        }
        for (v, k) in weight_multiplicities(d, &w) {
            let entry = rem.entry(v.clone()).or_insert(0);
            *entry -= k * m;
            if *entry == 0 {
                rem.remove(&v);
            } else if *entry < 0 {
                return Err(Error::Rep(format!(
                    "negative residual multiplicity at weight {v:?}"
                )));
            }
        }
        out.add(w, m);
    }
    Ok(out)
}

// ----------------------------------------------------------------------
// symplectic predicate and anomaly proxy
// ----------------------------------------------------------------------

/// A formal sum is symplectic when every orthogonal summand has even
/// multiplicity and every non-self-dual summand appears with the same
/// multiplicity as its dual.
pub fn is_symplectic(d: &RootDatum, rho: &RepSum) -> bool {
    for (hw, &m) in &rho.summands {
        match fs_indicator(d, hw) {
            1 => {
                if m % 2 != 0 {
                    return false;
                }
            }
            0 => {
                let dualw = d.dual_weight(hw);
                if rho.summands.get(&dualw).copied().unwrap_or(0) != m {
                    return false;
                }
            }
            _ => {}
        }
    }
    true
}

/// Necessary-condition proxy for the anomaly-free requirement:
/// `Σ_{λ ∈ wt(ρ)} ⟨λ, x⟩² ≡ 0 (mod 4)` for `x` running over the simple
/// coroots and their pairwise sums. This is a proxy, not the full splitting
/// criterion, and is labeled as such in every report.
pub fn anomaly_proxy(d: &RootDatum, rho: &RepSum) -> bool {
    if rho.is_zero() {
        return true;
    }
    let weights = rho.weights(d);
    let cr = d.simple_coroots();
    let mut gens: Vec<Vector> = cr.to_vec();
    for i in 0..cr.len() {
        for j in i + 1..cr.len() {
            gens.push(lattice::add(&cr[i], &cr[j]));
        }
    }
    gens.iter().all(|x| {
        let s: i64 = weights
            .iter()
            .map(|(w, m)| {
                let p = dot(w, x);
                m * p * p
            })
            .sum();
        s % 4 == 0
    })
}

// ----------------------------------------------------------------------
// named representations and Dynkin-label solving
// ----------------------------------------------------------------------

/// Dynkin labels of a named representation on a component with canonical
/// node order.
pub fn named_labels(comp: &Component, name: &str) -> Result<Vector> {
    let label = comp.label.canonical();
    let n = label.rank;
    let mut v = vec![0i64; n];
    match (name, label.family, n) {
        ("std", Family::A, _)
        | ("std", Family::B, _)
        | ("std", Family::C, _)
        | ("std", Family::D, _)
        | ("std", Family::G, 2) => v[0] = 1,
        ("std", Family::E, 6) => v[0] = 1,
        ("std", Family::E, 7) => v[6] = 1,
        ("spin", Family::B, _) => v[n - 1] = 1,
        ("hspin+", Family::D, _) => v[n - 1] = 1,
        ("hspin-", Family::D, _) => v[n - 2] = 1,
        ("wedge0_3", Family::C, 3) => v[2] = 1,
        _ => {
            if let Some(k) = name.strip_prefix("wedge").and_then(|s| s.parse::<usize>().ok())
            {
                if label.family == Family::A && (1..=n).contains(&k) {
                    v[k - 1] = 1;
                    return Ok(v);
                }
            }
            if let Some(k) = name.strip_prefix("sym").and_then(|s| s.parse::<i64>().ok()) {
                if label.family == Family::A {
                    v[0] = k;
                    return Ok(v);
                }
            }
            return Err(Error::Rep(format!(
                "representation {name:?} not defined for type {label}"
            )));
        }
    }
    Ok(v)
}

/// Solve for a weight with prescribed Dynkin labels on one component (zero
/// on all others); the central ambiguity is reduced to a deterministic
/// representative.
pub fn labeled_weight(d: &RootDatum, comp_idx: usize, labels: &[i64]) -> Result<Vector> {
    let comp = d
        .components()
        .get(comp_idx)
        .ok_or_else(|| Error::Rep(format!("no component #{comp_idx} in {}", d.name)))?;
    let mut want = vec![0i64; d.semisimple_rank()];
    for (pos, &node) in comp.nodes.iter().enumerate() {
        want[node] = labels[pos];
    }
    let rows: Vec<Vector> = d.simple_coroots().to_vec();
    let sol = lattice::solve(&rows, &want, d.rank())
        .ok_or_else(|| Error::Rep("labels not realizable on this lattice".into()))?;
    Ok(reduce_central(d, &sol))
}

/// Reduce a weight modulo the central character lattice to a deterministic
/// representative (greedy size reduction against the central basis; only
/// strictly shrinking steps are taken, so the loop terminates).
pub fn reduce_central(d: &RootDatum, w: &[i64]) -> Vector {
    let central = lattice::kernel_basis(d.simple_coroots(), d.rank());
    let mut v = w.to_vec();
    for _ in 0..64 {
        let mut changed = false;
        for z in &central {
            let zz = dot(z, z);
            if zz == 0 {
                continue;
            }
            let num = dot(&v, z);
            if 2 * num.abs() > zz {
                let q = if num > 0 {
                    (2 * num + zz) / (2 * zz)
                } else {
                    -((-2 * num + zz) / (2 * zz))
                };
                if q != 0 {
                    v = lattice::sub(&v, &lattice::scale(z, q));
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    v
}

/// Twist by a central character so the weight becomes exactly self-dual, if
/// possible.
pub fn self_dualize(d: &RootDatum, hw: &[i64]) -> Result<Vector> {
    let dualw = d.dual_weight(hw);
    if dualw == hw {
        return Ok(hw.to_vec());
    }
    let delta = lattice::sub(&dualw, hw);
    if delta.iter().any(|&c| c % 2 != 0) {
        return Err(Error::Rep(format!(
            "no self-dual central twist for weight {hw:?}"
        )));
    }
    let half: Vector = delta.iter().map(|c| c / 2).collect();
    // the twist must be central, otherwise the labels were not symmetric
    if d.labels(&half).iter().any(|&c| c != 0) {
        return Err(Error::Rep(format!(
            "weight {hw:?} has asymmetric labels; cannot self-dualize"
        )));
    }
    let out = lattice::add(hw, &half);
    debug_assert_eq!(d.dual_weight(&out), out);
    Ok(out)
}

// ----------------------------------------------------------------------
// the rep-spec mini-grammar
// ----------------------------------------------------------------------

/// Parse a representation expression against a datum built from atoms.
///
/// ```text
/// repsum := "0" | term { "(+)" term }
/// term   := [INT "*"] factor { "(x)" factor }
/// factor := "T(" repsum ")" | "triv" | NAME "(" ATOM ")"
/// ATOM   := atom display name, with "#k" choosing the k-th occurrence
/// ```
pub fn parse_rep(d: &RootDatum, spec: &str) -> Result<RepSum> {
    let spec = spec.trim();
    if spec == "0" {
        return Ok(RepSum::zero());
    }
    let mut out = RepSum::zero();
    for term in split_top(spec, "(+)") {
        let term = term.trim();
        let (mult, body) = match term.split_once('*') {
            Some((m, b)) if m.trim().chars().all(|c| c.is_ascii_digit()) => {
                (m.trim().parse::<i64>().unwrap(), b.trim())
            }
            _ => (1, term),
        };
        let sum = parse_term(d, body)?;
        for (w, m) in sum.summands {
            out.add(w, m * mult);
        }
    }
    Ok(out)
}

fn parse_term(d: &RootDatum, body: &str) -> Result<RepSum> {
    let factors = split_top(body, "(x)");
    let mut parts: Vec<RepSum> = vec![];
    for f in factors {
        parts.push(parse_factor(d, f.trim())?);
    }
    // tensor across distinct atoms: highest weights add
    let mut acc: Vec<(Vector, i64)> = vec![(vec![0; d.rank()], 1)];
    for p in parts {
        let mut next = vec![];
        for (w, m) in &acc {
            for (v, k) in &p.summands {
                next.push((lattice::add(w, v), m * k));
            }
        }
        acc = next;
    }
    let mut out = RepSum::zero();
    for (w, m) in acc {
        out.add(w, m);
    }
    Ok(out)
}

fn parse_factor(d: &RootDatum, f: &str) -> Result<RepSum> {
    if f == "triv" {
        return Ok(RepSum::irrep(vec![0; d.rank()]));
    }
    if let Some(inner) = f.strip_prefix("T(").and_then(|s| s.strip_suffix(')')) {
        let inner = parse_rep(d, inner)?;
        let mut out = inner.clone();
        out.extend(&inner.dual(d));
        return Ok(out);
    }
    let open = f
        .find('(')
        .ok_or_else(|| Error::RepSpec(format!("expected NAME(ATOM) in {f:?}")))?;
    if !f.ends_with(')') {
        return Err(Error::RepSpec(format!("unbalanced parens in {f:?}")));
    }
    let name = &f[..open];
    let atom_ref = &f[open + 1..f.len() - 1];
    let (atom_name, occurrence) = match atom_ref.split_once('#') {
        Some((a, k)) => (
            a.trim(),
            k.trim()
                .parse::<usize>()
                .map_err(|_| Error::RepSpec(format!("bad occurrence in {atom_ref:?}")))?,
        ),
        None => (atom_ref.trim(), 1),
    };
    let mut seen = 0usize;
    for (idx, a) in d.atoms().iter().enumerate() {
        if a.display.eq_ignore_ascii_case(atom_name) {
            seen += 1;
            if seen == occurrence {
                let w = d.atom_named_weight(idx, name)?;
                return Ok(RepSum::irrep(w));
            }
        }
    }
    Err(Error::RepSpec(format!(
        "no atom {atom_name:?} (occurrence {occurrence}) in {}",
        d.name
    )))
}

/// Split at a top-level separator, respecting parentheses.
fn split_top<'a>(s: &'a str, sep: &str) -> Vec<&'a str> {
    let mut parts = vec![];
    let bytes = s.as_bytes();
    let mut depth = 0i32;
    let mut start = 0usize;
    let mut i = 0usize;
    while i < bytes.len() {
        if depth == 0 && s[i..].starts_with(sep) {
            parts.push(&s[start..i]);
            start = i + sep.len();
            i += sep.len();
            continue;
        }
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            _ => {}
        }
        i += 1;
    }
    parts.push(&s[start..]);
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::build_root_datum;

    #[test]
    fn weyl_dims_regression() {
        let a1 = build_root_datum("SL(2)").unwrap();
        for n in 0..6 {
            assert_eq!(weyl_dim(&a1, &[n]), BigInt::from(n + 1));
        }
        let e7 = build_root_datum("E(7)").unwrap();
        let std = e7.atom_named_weight(0, "std").unwrap();
        assert_eq!(weyl_dim(&e7, &std), BigInt::from(56));
        let e6 = build_root_datum("E(6)").unwrap();
        assert_eq!(
            weyl_dim(&e6, &e6.atom_named_weight(0, "std").unwrap()),
            BigInt::from(27)
        );
        let g2 = build_root_datum("G(2)").unwrap();
        assert_eq!(
            weyl_dim(&g2, &g2.atom_named_weight(0, "std").unwrap()),
            BigInt::from(7)
        );
        let b3 = build_root_datum("Spin(7)").unwrap();
        assert_eq!(
            weyl_dim(&b3, &b3.atom_named_weight(0, "spin").unwrap()),
            BigInt::from(8)
        );
        let d6 = build_root_datum("Spin(12)").unwrap();
        assert_eq!(
            weyl_dim(&d6, &d6.atom_named_weight(0, "hspin+").unwrap()),
            BigInt::from(32)
        );
        let b5 = build_root_datum("Spin(11)").unwrap();
        assert_eq!(
            weyl_dim(&b5, &b5.atom_named_weight(0, "spin").unwrap()),
            BigInt::from(32)
        );
        let c3 = build_root_datum("Sp(6)").unwrap();
        assert_eq!(
            weyl_dim(&c3, &c3.atom_named_weight(0, "wedge0_3").unwrap()),
            BigInt::from(14)
        );
    }

    #[test]
    fn duals() {
        let a2 = build_root_datum("SL(3)").unwrap();
        assert_eq!(dual_irrep(&a2, &[1, 0]), vec![0, 1]);
        let b3 = build_root_datum("SO(7)").unwrap();
        assert_eq!(dual_irrep(&b3, &[1, 0, 0]), vec![1, 0, 0]);
        let a1 = build_root_datum("SL(2)").unwrap();
        assert_eq!(dual_irrep(&a1, &[4]), vec![4]);
    }

    #[test]
    fn fs_indicators() {
        let c2 = build_root_datum("Sp(4)").unwrap();
        assert_eq!(fs_indicator(&c2, &[1, 0]), -1);
        let b3 = build_root_datum("Spin(7)").unwrap();
        let spin = b3.atom_named_weight(0, "spin").unwrap();
        assert_eq!(fs_indicator(&b3, &spin), 1);
        let a2 = build_root_datum("SL(3)").unwrap();
        assert_eq!(fs_indicator(&a2, &[1, 0]), 0);
    }

    #[test]
    fn freudenthal_examples() {
        // A1 Sym^2: weights 2, 0, -2 each with multiplicity 1
        let a1 = build_root_datum("SL(2)").unwrap();
        let wts = weight_multiplicities(&a1, &[2]);
        assert_eq!(wts.len(), 3);
        assert!(wts.values().all(|&m| m == 1));
        // A2 adjoint: zero weight multiplicity 2
        let a2 = build_root_datum("SL(3)").unwrap();
        let ad = weight_multiplicities(&a2, &[1, 1]);
        assert_eq!(ad.get(&vec![0, 0]).copied(), Some(2));
        assert_eq!(ad.values().sum::<i64>(), 8);
        // minuscule: all multiplicities 1
        let d6 = build_root_datum("Spin(12)").unwrap();
        let hs = d6.atom_named_weight(0, "hspin+").unwrap();
        let wts = weight_multiplicities(&d6, &hs);
        assert_eq!(wts.len(), 32);
        assert!(wts.values().all(|&m| m == 1));
        // dimension conservation against the Weyl formula
        let b3 = build_root_datum("SO(7)").unwrap();
        let lam = vec![1, 1, 0];
        let total: i64 = weight_multiplicities(&b3, &lam).values().sum();
        assert_eq!(BigInt::from(total), weyl_dim(&b3, &lam));
    }

    #[test]
    fn tensor_examples() {
        let a1 = build_root_datum("SL(2)").unwrap();
        let t = tensor_decompose(&a1, &[1], &[1]).unwrap();
        assert_eq!(t.summands.get(&vec![2]).copied(), Some(1));
        assert_eq!(t.summands.get(&vec![0]).copied(), Some(1));
        // GL2: std ⊗ std^dual = ad ⊕ trivial
        let gl2 = build_root_datum("GL(2)").unwrap();
        let std = vec![1, 0];
        let stdd = gl2.dual_weight(&std);
        let t = tensor_decompose(&gl2, &std, &stdd).unwrap();
        assert_eq!(t.summands.len(), 2);
        assert_eq!(t.summands.get(&vec![0, 0]).copied(), Some(1));
        assert_eq!(t.summands.get(&vec![1, -1]).copied(), Some(1));
        // B3: Spin7 ⊗ Spin7 has constituent dimensions 1 + 7 + 21 + 35
        let b3 = build_root_datum("Spin(7)").unwrap();
        let spin = b3.atom_named_weight(0, "spin").unwrap();
        let t = tensor_decompose(&b3, &spin, &spin).unwrap();
        let mut dims: Vec<i64> = t
            .summands
            .iter()
            .map(|(w, m)| {
                assert_eq!(*m, 1);
                weyl_dim(&b3, w).to_i64().unwrap()
            })
            .collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 7, 21, 35]);
    }

    #[test]
    fn peeling_roundtrip() {
        let a1 = build_root_datum("SL(2)").unwrap();
        let mut ms = WeightMultiset::new();
        ms.insert(vec![2], 1);
        ms.insert(vec![0], 2);
        ms.insert(vec![-2], 1);
        let dec = decompose_weight_multiset(&a1, &ms).unwrap();
        assert_eq!(dec.summands.get(&vec![2]).copied(), Some(1));
        assert_eq!(dec.summands.get(&vec![0]).copied(), Some(1));
        // non-character: negative residual
        let mut bad = WeightMultiset::new();
        bad.insert(vec![2], 1);
        assert!(decompose_weight_multiset(&a1, &bad).is_err());
    }

    #[test]
    fn restriction_so5_to_so4() {
        let so5 = build_root_datum("SO(5)").unwrap();
        let so4 = build_root_datum("SO(4)").unwrap();
        // identity on e-coordinates
        let assign = vec![vec![1, 0], vec![0, 1]];
        let map = crate::rootdata::torus_map_from_chars(&so5, &so4, &assign).unwrap();
        let std5 = RepSum::irrep(vec![1, 0]).weights(&so5);
        let restricted = restrict_along(&map, &std5);
        // std5 -> std4 ⊕ trivial
        let dec = decompose_weight_multiset(&so4, &restricted).unwrap();
        assert_eq!(dec.summands.len(), 2);
        assert_eq!(dec.summands.get(&vec![0, 0]).copied(), Some(1));
        assert_eq!(dec.summands.get(&vec![1, 0]).copied(), Some(1));
    }

    #[test]
    fn symplectic_and_proxy() {
        let gl2 = build_root_datum("GL(2)").unwrap();
        // T(std) is symplectic and passes the coroot proxy
        let t = parse_rep(&gl2, "T(std(GL2))").unwrap();
        assert!(is_symplectic(&gl2, &t));
        assert!(anomaly_proxy(&gl2, &t));
        // a lone std of GL3 is not even self-dual
        let gl3 = build_root_datum("GL(3)").unwrap();
        let s = parse_rep(&gl3, "std(GL3)").unwrap();
        assert!(!is_symplectic(&gl3, &s));
        // std of SL2 alone is symplectic but anomalous
        let sl2 = build_root_datum("SL(2)").unwrap();
        let s = RepSum::irrep(vec![1]);
        assert!(is_symplectic(&sl2, &s));
        assert!(!anomaly_proxy(&sl2, &s));
    }

    #[test]
    fn rep_spec_grammar() {
        let d = build_root_datum("Sp(6) x Spin(7)").unwrap();
        let r = parse_rep(&d, "std(Sp6) (x) spin(Spin7)").unwrap();
        assert_eq!(r.dim_i64(&d), 48);
        let d5 = build_root_datum("GL(2)^3").unwrap();
        let triple = parse_rep(&d5, "std(GL2#1) (x) std(GL2#2) (x) std(GL2#3)").unwrap();
        assert_eq!(triple.dim_i64(&d5), 8);
        let t = parse_rep(&d5, "T(std(GL2#2))").unwrap();
        assert_eq!(t.dim_i64(&d5), 4);
        assert!(is_symplectic(&d5, &t));
    }
}
