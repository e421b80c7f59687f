//! Root-theoretic sl₂ grading of the adjoint representation for a nilpotent
//! orbit that is principal in a Levi: `g = ⊕_k ρ_k ⊗ Sym^k` as
//! `H × SL₂`-modules, computed purely from the grading cocharacter
//! `h = 2ρ^∨_L`. No matrix Lie algebras are ever constructed; the `ρ_k`
//! characters fall out of level subtraction.

use std::collections::BTreeMap;

use crate::lattice::{dot, Vector};
use crate::repcalc::{self, RepSum, WeightMultiset};
use crate::rootdata::{RootDatum, TorusMap};
use crate::{Error, Result};

/// Level decomposition of the adjoint representation under a grading
/// cocharacter: `k ↦` multiset of `T_G`-weights of `g(k)`.
#[derive(Clone, Debug)]
pub struct AdjointGrading {
    pub levels: BTreeMap<i64, WeightMultiset>,
}

impl AdjointGrading {
    pub fn size(&self, k: i64) -> i64 {
        self.levels.get(&k).map_or(0, |m| m.values().sum::<i64>())
    }

    pub fn total(&self) -> i64 {
        self.levels.keys().map(|&k| self.size(k)).sum()
    }

    pub fn max_level(&self) -> i64 {
        self.levels.keys().copied().max().unwrap_or(0)
    }

    /// `|g(k)| = |g(-k)|` for all k.
    pub fn is_symmetric(&self) -> bool {
        self.levels.keys().all(|&k| self.size(k) == self.size(-k))
    }
}

/// The semisimple element of the principal sl₂-triple of the Levi generated
/// by `levi_label`: the sum of its positive coroots.
pub fn sl2_cocharacter(g: &RootDatum, levi_label: &[usize]) -> Result<Vector> {
    let levi = g.levi(levi_label)?;
    Ok(levi.two_rho_cov().clone())
}

/// Grade the adjoint representation by pairing roots against `h`; the
/// Cartan contributes `rank` zero-level entries.
pub fn adjoint_grading(g: &RootDatum, h: &[i64]) -> AdjointGrading {
    let mut levels: BTreeMap<i64, WeightMultiset> = BTreeMap::new();
    let mut push = |k: i64, w: Vector| {
        *levels.entry(k).or_default().entry(w).or_insert(0) += 1;
    };
    for r in g.positive_roots() {
        let k = dot(&r.root, h);
        push(k, r.root.clone());
        push(-k, crate::lattice::neg(&r.root));
    }
    let zero = levels.entry(0).or_default();
    *zero.entry(vec![0; g.rank()]).or_insert(0) += g.rank() as i64;
    AdjointGrading { levels }
}

/// Decompose `g = ⊕_k ρ_k ⊗ Sym^k` as H-representations: the character of
/// `ρ_k` is `char_H(g(k)) − char_H(g(k+2))` for `k ≥ 0`. Negative residuals
/// signal inconsistent embedding data.
pub fn rho_k_decomposition(
    g: &RootDatum,
    h_grading: &AdjointGrading,
    emb: &TorusMap,
    h_group: &RootDatum,
) -> Result<BTreeMap<i64, RepSum>> {
    if !h_grading.is_symmetric() {
        return Err(Error::Grading("grading levels are not symmetric".into()));
    }
    let restrict = |k: i64| -> WeightMultiset {
        h_grading
            .levels
            .get(&k)
            .map(|m| repcalc::restrict_along(emb, m))
            .unwrap_or_default()
    };
    let mut out = BTreeMap::new();
    let mut k = h_grading.max_level();
    while k >= 0 {
        let mut chi = restrict(k);
        for (w, m) in restrict(k + 2) {
            let e = chi.entry(w.clone()).or_insert(0);
            *e -= m;
            if *e < 0 {
                return Err(Error::Grading(format!(
                    "negative string residual at level {k}, weight {w:?}"
                )));
            }
            if *e == 0 {
                chi.remove(&w);
            }
        }
        if !chi.is_empty() {
            let rho = repcalc::decompose_weight_multiset(h_group, &chi).map_err(|e| {
                Error::Grading(format!("level {k} character does not decompose: {e}"))
            })?;
            out.insert(k, rho);
        }
        k -= 1;
    }
    // conservation: Σ (k+1) dim ρ_k = dim g
    let total: i64 = out
        .iter()
        .map(|(k, rho)| (k + 1) * rho.dim_i64(h_group))
        .sum();
    if total != g.dim_adjoint() {
        return Err(Error::Grading(format!(
            "conservation failed: Σ(k+1)·dim ρ_k = {total} ≠ dim g = {}",
            g.dim_adjoint()
        )));
    }
    Ok(out)
}

/// `ρ_H ⊕ (⊕_{k odd} ρ_k)`, the symplectic datum of the quadruple.
pub fn rho_h_iota(rho_h: &RepSum, rho_k: &BTreeMap<i64, RepSum>) -> RepSum {
    let mut out = rho_h.clone();
    for (k, rho) in rho_k {
        if k % 2 != 0 {
            out.extend(rho);
        }
    }
    out
}

/// Derived period type: Fourier–Jacobi when odd levels occur, Bessel
/// otherwise (for a nontrivial grading).
pub fn period_type(h_grading: &AdjointGrading) -> &'static str {
    if h_grading.levels.keys().any(|&k| k % 2 != 0) {
        "Fourier-Jacobi"
    } else if h_grading.max_level() > 0 {
        "Bessel"
    } else {
        "reductive"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_root_datum, torus_map_from_chars, TorusMap};

    #[test]
    fn sl2_principal_grading() {
        let a1 = build_root_datum("SL(2)").unwrap();
        let h = sl2_cocharacter(&a1, &[0]).unwrap();
        assert_eq!(h, vec![1]); // α^∨ in the cocharacter basis of SL2
        let gr = adjoint_grading(&a1, &h);
        assert_eq!(gr.size(2), 1);
        assert_eq!(gr.size(0), 1);
        assert_eq!(gr.size(-2), 1);
        assert!(gr.is_symmetric());
        assert_eq!(period_type(&gr), "Bessel");
    }

    #[test]
    fn trivial_iota() {
        let g = build_root_datum("Sp(4)").unwrap();
        let h = sl2_cocharacter(&g, &[]).unwrap();
        assert_eq!(h, vec![0, 0]);
        let gr = adjoint_grading(&g, &h);
        assert_eq!(gr.levels.len(), 1);
        assert_eq!(gr.size(0), g.dim_adjoint());
        assert_eq!(period_type(&gr), "reductive");
    }

    #[test]
    fn gl3_principal_a2_levels() {
        // principal sl2 of sl3 inside gl3: ad-eigenvalues {±4, ±2 ×2, 0 ×3}
        let g = build_root_datum("GL(3)").unwrap();
        let h = sl2_cocharacter(&g, &[0, 1]).unwrap();
        assert_eq!(h, vec![2, 0, -2]);
        let gr = adjoint_grading(&g, &h);
        assert_eq!(gr.size(4), 1);
        assert_eq!(gr.size(2), 2);
        assert_eq!(gr.size(0), 3);
        assert!(gr.is_symmetric());
        // string counts: m4 - m6 = 1 (Sym^4), m2 - m4 = 1 (Sym^2)
        assert_eq!(gr.size(4) - gr.size(6), 1);
        assert_eq!(gr.size(2) - gr.size(4), 1);
    }

    #[test]
    fn gsp6_a2_levi_dimension() {
        let g = build_root_datum("GSp(6)").unwrap();
        let h = sl2_cocharacter(&g, &[0, 1]).unwrap();
        let gr = adjoint_grading(&g, &h);
        assert_eq!(gr.total(), 22); // dim gsp6
    }

    #[test]
    fn sl2_whittaker_rho_k() {
        // (SL2, trivial H, ι principal): odd part empty, ρ_2 a trivial line
        let g = build_root_datum("SL(2)").unwrap();
        let h_triv = build_root_datum("T(0)").unwrap();
        let h = sl2_cocharacter(&g, &[0]).unwrap();
        let gr = adjoint_grading(&g, &h);
        let emb = TorusMap {
            cochar_images: vec![],
        };
        let rho = rho_k_decomposition(&g, &gr, &emb, &h_triv).unwrap();
        assert_eq!(rho.len(), 1);
        assert_eq!(rho.get(&2).unwrap().dim_i64(&h_triv), 1);
    }

    #[test]
    fn ginzburg_rallis_conservation() {
        // (GL6, GL2 diagonal, ι = A2 × A2): Σ (k+1) dim ρ_k = 36
        let g = build_root_datum("GL(6)").unwrap();
        let h_grp = build_root_datum("GL(2)").unwrap();
        let h = sl2_cocharacter(&g, &[0, 1, 3, 4]).unwrap();
        assert_eq!(h, vec![2, 0, -2, 2, 0, -2]);
        let gr = adjoint_grading(&g, &h);
        // e_1,e_2,e_3 -> a_1; e_4,e_5,e_6 -> a_2
        let assign = vec![
            vec![1, 0],
            vec![1, 0],
            vec![1, 0],
            vec![0, 1],
            vec![0, 1],
            vec![0, 1],
        ];
        let emb = torus_map_from_chars(&g, &h_grp, &assign).unwrap();
        let rho = rho_k_decomposition(&g, &gr, &emb, &h_grp).unwrap();
        let total: i64 = rho.iter().map(|(k, r)| (k + 1) * r.dim_i64(&h_grp)).sum();
        assert_eq!(total, 36);
        // even grading: Bessel-type, so ρ_{H,ι} = ρ_H
        assert!(rho.keys().all(|k| k % 2 == 0));
    }
}
