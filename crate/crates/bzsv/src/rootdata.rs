//! Root data with explicit character/cocharacter lattices.
//!
//! A [`RootDatum`] is a free abelian group `X* = Z^rank` together with simple
//! roots (vectors) and simple coroots (covectors) whose pairing matrix is the
//! Cartan matrix of the declared Dynkin type. Groups are built from named
//! atoms (`GL(n)`, `GSp(2n)`, `GSpin(n)`, ...) combined by direct products
//! and the similitude constraints `S(·)` (product of similitudes = 1) and
//! `G(·)` (all similitudes equal), exactly the conventions used for the
//! strongly tempered corpus. Constraint lattices are handled by exact Smith
//! reduction, so the pairing stays perfect in the chosen bases.
//!
//! Bourbaki numbering is fixed throughout: classical atoms use the standard
//! `e`-coordinates, simply connected atoms the fundamental-weight basis, and
//! adjoint atoms the root basis.

use std::collections::BTreeSet;
use std::fmt;

use crate::lattice::{self, dot, Matrix, Vector};
use crate::typelabel::{classify_component, Component, Family, TypeLabel};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AtomKind {
    Gl(usize),
    Sl(usize),
    Pgl(usize),
    Sp(usize),
    GSp(usize),
    So(usize),
    Spin(usize),
    GSpin(usize),
    GSo(usize),
    PGSo(usize),
    E6Sc,
    GE6,
    E7Sc,
    E7Ad,
    G2,
    Torus(usize),
}

/// One named factor of a (possibly constrained) product, with its slice of
/// the underlying product character lattice.
#[derive(Clone, Debug)]
pub struct AtomInfo {
    pub kind: AtomKind,
    pub display: String,
    /// Range of product-lattice coordinates belonging to this atom.
    pub coords: (usize, usize),
    /// Named representation highest weights, in product coordinates.
    named: Vec<(String, Vector)>,
    /// Similitude character in product coordinates, when the atom has one.
    pub sim: Option<Vector>,
}

/// A root with cached data: the coroot, coordinates in the simple-root
/// basis, and the symmetrizer value `(α,α)/2` normalized per component.
#[derive(Clone, Debug)]
pub struct RootInfo {
    pub root: Vector,
    pub coroot: Vector,
    pub simple_coords: Vector,
    pub d: i64,
}

#[derive(Clone)]
pub struct RootDatum {
    pub name: String,
    rank: usize,
    simple_roots: Vec<Vector>,
    simple_coroots: Vec<Vector>,
    components: Vec<Component>,
    atoms: Vec<AtomInfo>,
    /// Projection X*(product) -> X*(self) (identity when unconstrained).
    proj: Matrix,
    /// Basis of X_*(self) inside X_*(product).
    incl_cochar: Vec<Vector>,
    /// Central constraint characters, in product coordinates.
    constraints: Vec<Vector>,
    pos_roots: Vec<RootInfo>,
    d_simple: Vec<i64>,
    two_rho: Vector,
    two_rho_cov: Vector,
}

impl fmt::Debug for RootDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootDatum({}, rank {})", self.name, self.rank)
    }
}

/// A reduced word in simple reflections; `apply` composes left to right
/// (the first letter acts first).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
    pub fn sign(&self) -> i64 {
        if self.0.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl RootDatum {
    // ------------------------------------------------------------------
    // construction
    // ------------------------------------------------------------------

    fn from_parts(
        name: String,
        simple_roots: Vec<Vector>,
        simple_coroots: Vec<Vector>,
        atoms: Vec<AtomInfo>,
        proj: Matrix,
        incl_cochar: Vec<Vector>,
        constraints: Vec<Vector>,
    ) -> Result<Self> {
        let rank = if !proj.is_empty() {
            proj.len()
        } else if let Some(r) = simple_roots.first() {
            r.len()
        } else {
            0
        };
        let mut d = RootDatum {
            name,
            rank,
            simple_roots,
            simple_coroots,
            components: vec![],
            atoms,
            proj,
            incl_cochar,
            constraints,
            pos_roots: vec![],
            d_simple: vec![],
            two_rho: vec![],
            two_rho_cov: vec![],
        };
        d.finish()?;
        Ok(d)
    }

    fn finish(&mut self) -> Result<()> {
        let n = self.simple_roots.len();
        for i in 0..n {
            if self.simple_roots[i].len() != self.rank || self.simple_coroots[i].len() != self.rank
            {
                return Err(Error::RootDatum("rank mismatch in simple data".into()));
            }
            if dot(&self.simple_roots[i], &self.simple_coroots[i]) != 2 {
                return Err(Error::RootDatum(format!(
                    "⟨α_{i}, α_{i}^∨⟩ ≠ 2 in {}",
                    self.name
                )));
            }
        }
        // components
        let cart: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| dot(&self.simple_roots[j], &self.simple_coroots[i]))
                    .collect()
            })
            .collect();
        let cartan = move |i: usize, j: usize| cart[i][j];
        let mut seen = vec![false; n];
        let mut comps = vec![];
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            let mut nodes = vec![];
            seen[s] = true;
            while let Some(i) = stack.pop() {
                nodes.push(i);
                for j in 0..n {
                    if !seen[j] && cartan(i, j) != 0 {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            nodes.sort_unstable();
            comps.push(classify_component(&nodes, &cartan)?);
        }
        comps.sort_by_key(|c| c.nodes.first().copied().unwrap_or(0));
        self.components = comps;
        // symmetrizers per component
        let mut dsym = vec![0i64; n];
        for comp in &self.components {
            let mut num = vec![0i64; n];
            let mut den = vec![0i64; n];
            let start = comp.nodes[0];
            num[start] = 1;
            den[start] = 1;
            let mut queue = vec![start];
            while let Some(i) = queue.pop() {
                for &j in &comp.nodes {
                    if den[j] == 0 && cartan(i, j) != 0 {
                        // d_j = d_i * c[i][j] / c[j][i]
                        num[j] = num[i] * cartan(i, j);
                        den[j] = den[i] * cartan(j, i);
                        if den[j] < 0 {
                            num[j] = -num[j];
                            den[j] = -den[j];
                        }
                        debug_assert!(num[j] > 0 && den[j] > 0);
                        queue.push(j);
                    }
                }
            }
            let lcm_den = comp
                .nodes
                .iter()
                .map(|&j| den[j])
                .fold(1i64, |a, b| a / gcd(a, b) * b);
            let mut vals: Vec<i64> = comp.nodes.iter().map(|&j| num[j] * (lcm_den / den[j])).collect();
            let g = vals.iter().fold(0i64, |a, &b| gcd(a, b));
            for v in vals.iter_mut() {
                *v /= g;
            }
            for (k, &j) in comp.nodes.iter().enumerate() {
                dsym[j] = vals[k];
            }
        }
        self.d_simple = dsym;
        // positive roots by reflection closure
        let mut seen_roots: BTreeSet<Vector> = BTreeSet::new();
        let mut queue: Vec<RootInfo> = vec![];
        for i in 0..n {
            let mut coords = vec![0i64; n];
            coords[i] = 1;
            let info = RootInfo {
                root: self.simple_roots[i].clone(),
                coroot: self.simple_coroots[i].clone(),
                simple_coords: coords,
                d: self.d_simple[i],
            };
            seen_roots.insert(info.root.clone());
            queue.push(info);
        }
        let mut all = queue.clone();
        while let Some(r) = queue.pop() {
            for i in 0..n {
                let c = dot(&r.root, &self.simple_coroots[i]);
                if c == 0 && r.simple_coords[i] == 0 {
                    continue;
                }
                let root = lattice::sub(&r.root, &lattice::scale(&self.simple_roots[i], c));
                if seen_roots.contains(&root) {
                    continue;
                }
                let cc = dot(&self.simple_roots[i], &r.coroot);
                let coroot = lattice::sub(&r.coroot, &lattice::scale(&self.simple_coroots[i], cc));
                let mut coords = r.simple_coords.clone();
                coords[i] -= c;
                let info = RootInfo {
                    root: root.clone(),
                    coroot,
                    simple_coords: coords,
                    d: r.d,
                };
                seen_roots.insert(root);
                queue.push(info.clone());
                all.push(info);
            }
        }
        self.pos_roots = all
            .into_iter()
            .filter(|r| r.simple_coords.iter().all(|&c| c >= 0))
            .collect();
        self.pos_roots.sort_by(|a, b| {
            (a.simple_coords.iter().sum::<i64>(), &a.root)
                .cmp(&(b.simple_coords.iter().sum::<i64>(), &b.root))
        });
        self.two_rho = self
            .pos_roots
            .iter()
            .fold(vec![0; self.rank], |acc, r| lattice::add(&acc, &r.root));
        self.two_rho_cov = self
            .pos_roots
            .iter()
            .fold(vec![0; self.rank], |acc, r| lattice::add(&acc, &r.coroot));
        Ok(())
    }

    // ------------------------------------------------------------------
    // accessors
    // ------------------------------------------------------------------

    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn semisimple_rank(&self) -> usize {
        self.simple_roots.len()
    }
    pub fn simple_roots(&self) -> &[Vector] {
        &self.simple_roots
    }
    pub fn simple_coroots(&self) -> &[Vector] {
        &self.simple_coroots
    }
    pub fn components(&self) -> &[Component] {
        &self.components
    }
    pub fn atoms(&self) -> &[AtomInfo] {
        &self.atoms
    }
    pub fn positive_roots(&self) -> &[RootInfo] {
        &self.pos_roots
    }
    pub fn num_positive_roots(&self) -> usize {
        self.pos_roots.len()
    }
    /// dim g = #roots + rank.
    pub fn dim_adjoint(&self) -> i64 {
        2 * self.pos_roots.len() as i64 + self.rank as i64
    }
    pub fn two_rho(&self) -> &Vector {
        &self.two_rho
    }
    pub fn two_rho_cov(&self) -> &Vector {
        &self.two_rho_cov
    }
    pub fn d_simple(&self) -> &[i64] {
        &self.d_simple
    }
    pub fn constraints(&self) -> &[Vector] {
        &self.constraints
    }

    /// Multiset of component type labels (canonical), the "semisimple root
    /// type" used in isogeny-insensitive comparisons.
    pub fn type_multiset(&self) -> Vec<TypeLabel> {
        let mut t: Vec<TypeLabel> = self.components.iter().map(|c| c.label.canonical()).collect();
        t.sort();
        t
    }

    pub fn central_rank(&self) -> usize {
        self.rank - self.semisimple_rank()
    }

    /// Basis of the central cocharacter lattice `{v : ⟨α, v⟩ = 0 ∀α}`.
    pub fn central_cochars(&self) -> Vec<Vector> {
        lattice::kernel_basis(&self.simple_roots, self.rank)
    }

    // ------------------------------------------------------------------
    // Weyl machinery
    // ------------------------------------------------------------------

    pub fn pair(&self, weight: &[i64], i: usize) -> i64 {
        dot(weight, &self.simple_coroots[i])
    }

    pub fn reflect(&self, weight: &[i64], i: usize) -> Vector {
        let c = self.pair(weight, i);
        lattice::sub(weight, &lattice::scale(&self.simple_roots[i], c))
    }

    pub fn coreflect(&self, cochar: &[i64], i: usize) -> Vector {
        let c = dot(&self.simple_roots[i], cochar);
        lattice::sub(cochar, &lattice::scale(&self.simple_coroots[i], c))
    }

    pub fn apply_word(&self, w: &WeylWord, weight: &[i64]) -> Vector {
        let mut v = weight.to_vec();
        for &i in &w.0 {
            v = self.reflect(&v, i);
        }
        v
    }

    pub fn apply_word_cochar(&self, w: &WeylWord, cochar: &[i64]) -> Vector {
        let mut v = cochar.to_vec();
        for &i in &w.0 {
            v = self.coreflect(&v, i);
        }
        v
    }

    pub fn is_dominant(&self, weight: &[i64]) -> bool {
        (0..self.semisimple_rank()).all(|i| self.pair(weight, i) >= 0)
    }

    /// Unique dominant representative plus a word sending the input to it.
    pub fn dominantize(&self, weight: &[i64]) -> (Vector, WeylWord) {
        let mut v = weight.to_vec();
        let mut word = vec![];
        'outer: loop {
            for i in 0..self.semisimple_rank() {
                if self.pair(&v, i) < 0 {
                    v = self.reflect(&v, i);
                    word.push(i);
                    continue 'outer;
                }
            }
            return (v, WeylWord(word));
        }
    }

    pub fn dominantize_cochar(&self, cochar: &[i64]) -> (Vector, WeylWord) {
        let mut v = cochar.to_vec();
        let mut word = vec![];
        'outer: loop {
            for i in 0..self.semisimple_rank() {
                if dot(&self.simple_roots[i], &v) < 0 {
                    v = self.coreflect(&v, i);
                    word.push(i);
                    continue 'outer;
                }
            }
            return (v, WeylWord(word));
        }
    }

    /// The longest element, as the word carrying `-2ρ` to `2ρ`.
    pub fn longest_element(&self) -> WeylWord {
        let (_, w) = self.dominantize(&lattice::neg(&self.two_rho));
        w
    }

    /// `-w₀(λ)`, the highest weight of the dual irreducible.
    pub fn dual_weight(&self, weight: &[i64]) -> Vector {
        let (dom, _) = self.dominantize(&lattice::neg(weight));
        dom
    }

    pub fn orbit(&self, weight: &[i64]) -> Vec<Vector> {
        let mut seen: BTreeSet<Vector> = BTreeSet::new();
        let mut stack = vec![weight.to_vec()];
        seen.insert(weight.to_vec());
        while let Some(v) = stack.pop() {
            for i in 0..self.semisimple_rank() {
                let r = self.reflect(&v, i);
                if seen.insert(r.clone()) {
                    stack.push(r);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Dynkin labels `⟨λ, α_i^∨⟩` over all simple roots.
    pub fn labels(&self, weight: &[i64]) -> Vector {
        (0..self.semisimple_rank())
            .map(|i| self.pair(weight, i))
            .collect()
    }

    // ------------------------------------------------------------------
    // subdata and duals
    // ------------------------------------------------------------------

    /// Levi sub-datum on the same lattice, generated by a subset of simple
    /// roots. The inclusion is the identity on lattices.
    pub fn levi(&self, subset: &[usize]) -> Result<RootDatum> {
        for &i in subset {
            if i >= self.semisimple_rank() {
                return Err(Error::RootDatum(format!(
                    "Levi index {i} out of range in {}",
                    self.name
                )));
            }
        }
        let mut idx: Vec<usize> = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        RootDatum::from_parts(
            format!("{}⟨levi {:?}⟩", self.name, idx),
            idx.iter().map(|&i| self.simple_roots[i].clone()).collect(),
            idx.iter().map(|&i| self.simple_coroots[i].clone()).collect(),
            vec![],
            lattice::identity(self.rank),
            lattice::identity(self.rank),
            vec![],
        )
    }

    /// Sub-root-datum whose roots are the roots of `self` with zero pairing
    /// against the cocharacter `h` (the centralizer Levi of `h`). Simple
    /// roots are the indecomposable positive zero-level roots.
    pub fn centralizer_levi(&self, h: &[i64]) -> Result<RootDatum> {
        let zero: Vec<&RootInfo> = self
            .pos_roots
            .iter()
            .filter(|r| dot(&r.root, h) == 0)
            .collect();
        // indecomposable = not a sum of two positive zero-level roots
        let set: BTreeSet<&Vector> = zero.iter().map(|r| &r.root).collect();
        let base: Vec<&&RootInfo> = zero
            .iter()
            .filter(|r| {
                !zero.iter().any(|a| {
                    let diff = lattice::sub(&r.root, &a.root);
                    !lattice::is_zero(&diff) && set.contains(&diff)
                })
            })
            .collect();
        RootDatum::from_parts(
            format!("{}⟨centralizer⟩", self.name),
            base.iter().map(|r| r.root.clone()).collect(),
            base.iter().map(|r| r.coroot.clone()).collect(),
            vec![],
            lattice::identity(self.rank),
            lattice::identity(self.rank),
            vec![],
        )
    }

    /// A root datum on an ambient lattice of the given rank, from explicit
    /// simple data (used for Levi subdata of dual groups).
    pub fn sub_datum(
        name: String,
        rank: usize,
        simple_roots: Vec<Vector>,
        simple_coroots: Vec<Vector>,
    ) -> Result<RootDatum> {
        RootDatum::from_parts(
            name,
            simple_roots,
            simple_coroots,
            vec![],
            lattice::identity(rank),
            lattice::identity(rank),
            vec![],
        )
    }

    /// Quotient by a set of central cocharacters: X* shrinks to the
    /// annihilator, X_* is divided by the saturation.
    pub fn quotient_by_central(&self, central: &[Vector]) -> Result<RootDatum> {
        if central.is_empty() {
            return Ok(self.clone());
        }
        for z in central {
            for r in &self.pos_roots {
                if dot(&r.root, z) != 0 {
                    return Err(Error::RootDatum("cocharacter is not central".into()));
                }
            }
        }
        let n = self.rank;
        let (proj, k) = lattice::constraint_presentation(central, n)?;
        let kb_rows: Matrix = lattice::transpose(&k);
        let roots: Result<Vec<Vector>> = self
            .simple_roots
            .iter()
            .map(|r| {
                lattice::solve(&kb_rows, r, k.len())
                    .ok_or_else(|| Error::RootDatum("root not orthogonal to center".into()))
            })
            .collect();
        let coroots: Vec<Vector> = self
            .simple_coroots
            .iter()
            .map(|c| lattice::mat_apply(&proj, c))
            .collect();
        RootDatum::from_parts(
            format!("{}/Z", self.name),
            roots?,
            coroots,
            vec![],
            lattice::identity(k.len()),
            lattice::identity(k.len()),
            vec![],
        )
    }

    /// The Langlands dual datum: swaps characters with cocharacters.
    pub fn dual(&self) -> Result<RootDatum> {
        RootDatum::from_parts(
            format!("dual({})", self.name),
            self.simple_coroots.clone(),
            self.simple_roots.clone(),
            vec![],
            lattice::identity(self.rank),
            lattice::identity(self.rank),
            vec![],
        )
    }

    // ------------------------------------------------------------------
    // named weights
    // ------------------------------------------------------------------

    /// Highest weight of a named representation of one atom, in the datum's
    /// own coordinates.
    pub fn atom_named_weight(&self, atom: usize, name: &str) -> Result<Vector> {
        let a = self
            .atoms
            .get(atom)
            .ok_or_else(|| Error::Rep(format!("no atom #{atom} in {}", self.name)))?;
        let w = a
            .named
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, w)| w.clone())
            .or_else(|| atom_extra_named(a, name))
            .ok_or_else(|| {
                Error::Rep(format!("representation {name:?} not defined for {}", a.display))
            })?;
        Ok(lattice::mat_apply(&self.proj, &w))
    }

    pub fn atom_sim(&self, atom: usize) -> Option<Vector> {
        self.atoms
            .get(atom)
            .and_then(|a| a.sim.clone())
            .map(|s| lattice::mat_apply(&self.proj, &s))
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// `wedge(k)`, `sym(k)` and torus character powers are computed on demand
/// from the atom kind rather than stored.
fn atom_extra_named(a: &AtomInfo, name: &str) -> Option<Vector> {
    let (lo, _hi) = a.coords;
    let width = a.product_rank_hint();
    let local = |pairs: &[(usize, i64)]| -> Vector {
        let mut v = vec![0i64; width];
        for &(i, c) in pairs {
            v[lo + i] = c;
        }
        v
    };
    if let Some(k) = name.strip_prefix("wedge").and_then(|s| s.parse::<usize>().ok()) {
        return match a.kind {
            AtomKind::Gl(n) if (1..=n).contains(&k) => {
                Some(local(&(0..k).map(|i| (i, 1)).collect::<Vec<_>>()))
            }
            AtomKind::Sl(n) if (1..n).contains(&k) => Some(local(&[(k - 1, 1)])),
            _ => None,
        };
    }
    if let Some(k) = name.strip_prefix("sym").and_then(|s| s.parse::<i64>().ok()) {
        return match a.kind {
            AtomKind::Gl(_) => Some(local(&[(0, k)])),
            AtomKind::Sl(_) => Some(local(&[(0, k)])),
            _ => None,
        };
    }
    if let Some(k) = name.strip_prefix("chi").and_then(|s| s.parse::<i64>().ok()) {
        return match a.kind {
            AtomKind::Torus(_) => Some(local(&[(0, k)])),
            _ => None,
        };
    }
    None
}

impl AtomInfo {
    fn product_rank_hint(&self) -> usize {
        // named vectors are stored over the full product; recover its width
        self.named
            .first()
            .map(|(_, v)| v.len())
            .or_else(|| self.sim.as_ref().map(|v| v.len()))
            .unwrap_or(self.coords.1)
    }
}

// ----------------------------------------------------------------------
// atom prototypes
// ----------------------------------------------------------------------

struct Proto {
    kind: AtomKind,
    display: String,
    rank: usize,
    roots: Vec<Vector>,
    coroots: Vec<Vector>,
    named: Vec<(&'static str, Vector)>,
    sim: Option<Vector>,
}

fn e(n: usize, i: usize) -> Vector {
    let mut v = vec![0i64; n];
    v[i] = 1;
    v
}

fn diff(n: usize, i: usize, j: usize) -> Vector {
    let mut v = vec![0i64; n];
    v[i] = 1;
    v[j] = -1;
    v
}

fn proto_gl(n: usize) -> Proto {
    Proto {
        kind: AtomKind::Gl(n),
        display: format!("GL{n}"),
        rank: n,
        roots: (0..n.saturating_sub(1)).map(|i| diff(n, i, i + 1)).collect(),
        coroots: (0..n.saturating_sub(1)).map(|i| diff(n, i, i + 1)).collect(),
        named: vec![("std", e(n, 0))],
        sim: Some(vec![1; n]),
    }
}

/// Cartan matrix `c[i][j] = ⟨α_j, α_i^∨⟩` for a Bourbaki type.
pub fn cartan_matrix(label: TypeLabel) -> Matrix {
    let n = label.rank;
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        c[i][j] = -1;
        c[j][i] = -1;
    };
    match label.family {
        Family::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1);
            }
        }
        Family::B => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
            if n >= 2 {
                c[n - 1][n - 2] = -2; // ⟨α_{n-1}, α_n^∨⟩ = -2 (α_n short)
            }
        }
        Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
            if n >= 2 {
                c[n - 2][n - 1] = -2; // ⟨α_n, α_{n-1}^∨⟩ = -2 (α_n long)
            }
        }
        Family::D => {
            for i in 0..n.saturating_sub(2) {
                link(i, i + 1);
            }
            if n >= 3 {
                link(n - 3, n - 1);
            }
        }
        Family::E => {
            // chain 1-3-4-5-6(-7), node 2 on 4 (0-indexed: 0-2-3-4-5(-6), 1 on 3)
            link(0, 2);
            link(2, 3);
            link(3, 4);
            link(4, 5);
            if n == 7 {
                link(5, 6);
            }
            link(1, 3);
        }
        Family::G => {
            // α_1 short: ⟨α_2, α_1^∨⟩ = -3
            c[0][1] = -3;
            c[1][0] = -1;
        }
        Family::F => unimplemented!("F4 atoms are out of scope"),
    }
    c
}

/// Simply connected atom on the fundamental-weight basis.
fn proto_sc(kind: AtomKind, display: String, label: TypeLabel, named: Vec<(&'static str, Vector)>) -> Proto {
    let n = label.rank;
    let c = cartan_matrix(label);
    let roots: Vec<Vector> = (0..n).map(|j| (0..n).map(|i| c[i][j]).collect()).collect();
    let coroots: Vec<Vector> = (0..n).map(|i| e(n, i)).collect();
    Proto {
        kind,
        display,
        rank: n,
        roots,
        coroots,
        named,
        sim: None,
    }
}

/// Adjoint atom on the root basis.
fn proto_adjoint(kind: AtomKind, display: String, label: TypeLabel) -> Proto {
    let n = label.rank;
    let c = cartan_matrix(label);
    let roots: Vec<Vector> = (0..n).map(|j| e(n, j)).collect();
    let coroots: Vec<Vector> = (0..n).map(|i| c[i].clone()).collect();
    Proto {
        kind,
        display,
        rank: n,
        roots,
        coroots,
        named: vec![],
        sim: None,
    }
}

fn proto_atom(kind: AtomKind) -> Result<Proto> {
    use AtomKind::*;
    Ok(match kind {
        Gl(n) => proto_gl(n),
        Torus(k) => Proto {
            kind,
            display: if k == 1 { "GL1".into() } else { format!("GL1^{k}") },
            rank: k,
            roots: vec![],
            coroots: vec![],
            named: if k == 1 { vec![("std", e(1, 0))] } else { vec![] },
            sim: if k == 1 { Some(e(1, 0)) } else { None },
        },
        Sl(n) => proto_sc(
            kind,
            format!("SL{n}"),
            TypeLabel::new(Family::A, n - 1),
            vec![("std", e(n - 1, 0))],
        ),
        Pgl(n) => proto_adjoint(kind, format!("PGL{n}"), TypeLabel::new(Family::A, n - 1)),
        Sp(two_n) => {
            let n = two_n / 2;
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut coroots = roots.clone();
            let mut long = vec![0i64; n];
            long[n - 1] = 2;
            roots.push(long);
            coroots.push(e(n, n - 1));
            let mut named = vec![("std", e(n, 0))];
            if n == 3 {
                named.push(("wedge0_3", vec![1, 1, 1]));
            }
            Proto {
                kind,
                display: format!("Sp{two_n}"),
                rank: n,
                roots,
                coroots,
                named,
                sim: None,
            }
        }
        GSp(two_n) => {
            let n = two_n / 2;
            let r = n + 1; // e_1..e_n, c
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(r, i, i + 1)).collect();
            let mut coroots = roots.clone();
            let mut long = vec![0i64; r];
            long[n - 1] = 2;
            long[n] = -1;
            roots.push(long);
            coroots.push(e(r, n - 1));
            Proto {
                kind,
                display: format!("GSp{two_n}"),
                rank: r,
                roots,
                coroots,
                named: vec![("std", e(r, 0))],
                sim: Some(e(r, n)),
            }
        }
        So(m) if m % 2 == 1 => {
            let n = m / 2;
            if n == 0 {
                return Err(Error::GroupSpec("SO(1) is trivial".into()));
            }
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut coroots = roots.clone();
            roots.push(e(n, n - 1));
            coroots.push(lattice::scale(&e(n, n - 1), 2));
            Proto {
                kind,
                display: format!("SO{m}"),
                rank: n,
                roots,
                coroots,
                named: vec![("std", e(n, 0))],
                sim: None,
            }
        }
        So(m) => {
            let n = m / 2;
            if n == 1 {
                let mut p = proto_atom(Torus(1))?;
                p.display = "SO2".into();
                p.sim = None;
                return Ok(p);
            }
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(n, i, i + 1)).collect();
            let mut v = vec![0i64; n];
            v[n - 2] = 1;
            v[n - 1] = 1;
            roots.push(v);
            let coroots = roots.clone();
            Proto {
                kind,
                display: format!("SO{m}"),
                rank: n,
                roots,
                coroots,
                named: vec![("std", e(n, 0))],
                sim: None,
            }
        }
        Spin(m) if m % 2 == 1 => {
            let n = m / 2;
            proto_sc(
                kind,
                format!("Spin{m}"),
                TypeLabel::new(Family::B, n),
                vec![("std", e(n, 0)), ("spin", e(n, n - 1))],
            )
        }
        Spin(m) => {
            let n = m / 2;
            proto_sc(
                kind,
                format!("Spin{m}"),
                TypeLabel::new(Family::D, n),
                vec![
                    ("std", e(n, 0)),
                    ("hspin+", e(n, n - 1)),
                    ("hspin-", e(n, n - 2)),
                ],
            )
        }
        GSpin(m) if m % 2 == 1 => {
            let n = m / 2;
            let r = n + 1; // e_1..e_n, f
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(r, i, i + 1)).collect();
            let mut coroots = roots.clone();
            roots.push(e(r, n - 1));
            let mut cr = vec![0i64; r];
            cr[n - 1] = 2;
            cr[n] = -1;
            coroots.push(cr);
            let mut spin = vec![0i64; r];
            spin[n] = -1;
            let mut sim = vec![-1i64; r];
            sim[n] = -2;
            Proto {
                kind,
                display: format!("GSpin{m}"),
                rank: r,
                roots,
                coroots,
                named: vec![("std", e(r, 0)), ("spin", spin)],
                sim: Some(sim),
            }
        }
        GSpin(m) => {
            let n = m / 2;
            let r = n + 1;
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(r, i, i + 1)).collect();
            let mut coroots = roots.clone();
            let mut v = vec![0i64; r];
            v[n - 2] = 1;
            v[n - 1] = 1;
            roots.push(v.clone());
            v[n] = -1;
            coroots.push(v);
            let mut hp = vec![0i64; r];
            hp[n] = -1;
            let mut hm = vec![0i64; r];
            hm[n - 1] = -1;
            hm[n] = -1;
            let mut sim = vec![-1i64; r];
            sim[n] = -2;
            Proto {
                kind,
                display: format!("GSpin{m}"),
                rank: r,
                roots,
                coroots,
                named: vec![("std", e(r, 0)), ("hspin+", hp), ("hspin-", hm)],
                sim: Some(sim),
            }
        }
        GSo(m) => {
            let n = m / 2;
            let r = n + 1; // e_1..e_n, c
            let mut roots: Vec<Vector> = (0..n - 1).map(|i| diff(r, i, i + 1)).collect();
            let mut coroots = roots.clone();
            let mut v = vec![0i64; r];
            v[n - 2] = 1;
            v[n - 1] = 1;
            v[n] = -1;
            roots.push(v);
            let mut cr = vec![0i64; r];
            cr[n - 2] = 1;
            cr[n - 1] = 1;
            coroots.push(cr);
            Proto {
                kind,
                display: format!("GSO{m}"),
                rank: r,
                roots,
                coroots,
                named: vec![("std", e(r, 0))],
                sim: Some(e(r, n)),
            }
        }
        PGSo(m) => {
            // quotient of GSO(m) by the central z = Σ e_i^∨ + 2 c^∨
            let gso = proto_atom(GSo(m))?;
            let n = m / 2;
            let mut z = vec![1i64; n + 1];
            z[n] = 2;
            let k = lattice::kernel_basis(&[z.clone()], n + 1);
            let q = lattice::quotient_by(&[z], n + 1)?;
            let kb_rows = lattice::transpose(&k);
            let roots: Vec<Vector> = gso
                .roots
                .iter()
                .map(|r| lattice::solve(&kb_rows, r, k.len()).expect("root in annihilator"))
                .collect();
            let coroots: Vec<Vector> = gso
                .coroots
                .iter()
                .map(|c| lattice::mat_apply(&q.proj, c))
                .collect();
            Proto {
                kind,
                display: format!("PGSO{m}"),
                rank: n,
                roots,
                coroots,
                named: vec![],
                sim: None,
            }
        }
        E6Sc => proto_sc(
            kind,
            "E6".into(),
            TypeLabel::new(Family::E, 6),
            vec![("std", e(6, 0))],
        ),
        E7Sc => proto_sc(
            kind,
            "E7".into(),
            TypeLabel::new(Family::E, 7),
            vec![("std", e(7, 6))],
        ),
        E7Ad => proto_adjoint(kind, "E7ad".into(), TypeLabel::new(Family::E, 7)),
        GE6 => {
            // (E6sc × GL1)/μ3, basis α_1..α_6, (ω_1, 1)
            let c = cartan_matrix(TypeLabel::new(Family::E, 6));
            let roots: Vec<Vector> = (0..6)
                .map(|j| {
                    let mut v = e(7, j);
                    v[6] = 0;
                    v
                })
                .collect();
            let coroots: Vec<Vector> = (0..6)
                .map(|i| {
                    let mut v: Vector = c[i].clone();
                    v.push(i64::from(i == 0));
                    v
                })
                .collect();
            // central character: -(4,3,5,6,4,2 | -3)
            let sim = vec![-4, -3, -5, -6, -4, -2, 3];
            Proto {
                kind,
                display: "GE6".into(),
                rank: 7,
                roots,
                coroots,
                named: vec![("std", e(7, 6))],
                sim: Some(sim),
            }
        }
        G2 => proto_sc(
            kind,
            "G2".into(),
            TypeLabel::new(Family::G, 2),
            vec![("std", e(2, 0))],
        ),
    })
}

// ----------------------------------------------------------------------
// group expressions
// ----------------------------------------------------------------------

/// Parsed group description: atoms combined by products and similitude
/// constraints.
#[derive(Clone, Debug, PartialEq)]
pub enum GroupExpr {
    Atom(AtomKind),
    Product(Vec<GroupExpr>),
    /// Product of similitudes equals 1.
    SProduct(Vec<GroupExpr>),
    /// All similitudes equal.
    GProduct(Vec<GroupExpr>),
}

impl GroupExpr {
    pub fn parse(s: &str) -> Result<GroupExpr> {
        let mut p = Parser { s, pos: 0 };
        let g = p.group()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::GroupSpec(format!(
                "trailing input at {:?}",
                &p.s[p.pos..]
            )));
        }
        Ok(g)
    }

    /// Build the root datum described by this expression.
    pub fn build(&self) -> Result<RootDatum> {
        let mut atoms_protos: Vec<Proto> = vec![];
        let mut constraints: Vec<Vector> = vec![];
        let sim = collect(self, &mut atoms_protos, &mut constraints)?;
        let _ = sim;
        let offsets: Vec<usize> = atoms_protos
            .iter()
            .scan(0usize, |acc, p| {
                let o = *acc;
                *acc += p.rank;
                Some(o)
            })
            .collect();
        let total: usize = atoms_protos.iter().map(|p| p.rank).sum();
        let pad = |v: &Vector, at: usize| -> Vector {
            let mut w = vec![0i64; total];
            w[at..at + v.len()].copy_from_slice(v);
            w
        };
        let padded_constraints: Vec<Vector> = constraints
            .iter()
            .map(|c| {
                let mut c = c.clone();
                c.resize(total, 0);
                c
            })
            .collect();
        let (proj, k) = lattice::constraint_presentation(&padded_constraints, total)?;
        let kb_rows = lattice::transpose(&k);
        let mut simple_roots = vec![];
        let mut simple_coroots = vec![];
        let mut atoms = vec![];
        for (p, &off) in atoms_protos.iter().zip(&offsets) {
            for (r, c) in p.roots.iter().zip(&p.coroots) {
                let root = pad(r, off);
                let coroot = pad(c, off);
                simple_roots.push(lattice::mat_apply(&proj, &root));
                simple_coroots.push(lattice::solve(&kb_rows, &coroot, k.len()).ok_or_else(
                    || Error::GroupSpec(format!("constraint not central for {}", p.display)),
                )?);
            }
            atoms.push(AtomInfo {
                kind: p.kind,
                display: p.display.clone(),
                coords: (off, off + p.rank),
                named: p
                    .named
                    .iter()
                    .map(|(n, v)| (n.to_string(), pad(v, off)))
                    .collect(),
                sim: p.sim.as_ref().map(|v| pad(v, off)),
            });
        }
        let name = self.display();
        RootDatum::from_parts(
            name,
            simple_roots,
            simple_coroots,
            atoms,
            proj,
            k,
            padded_constraints,
        )
    }

    pub fn display(&self) -> String {
        match self {
            GroupExpr::Atom(k) => atom_display(*k),
            GroupExpr::Product(v) => v
                .iter()
                .map(|g| g.display())
                .collect::<Vec<_>>()
                .join(" x "),
            GroupExpr::SProduct(v) => format!(
                "S({})",
                v.iter().map(|g| g.display()).collect::<Vec<_>>().join(" x ")
            ),
            GroupExpr::GProduct(v) => format!(
                "G({})",
                v.iter().map(|g| g.display()).collect::<Vec<_>>().join(" x ")
            ),
        }
    }
}

fn atom_display(k: AtomKind) -> String {
    proto_atom(k).map(|p| p.display).unwrap_or_else(|_| "?".into())
}

/// Walk the expression, pushing atoms and constraints (in final product
/// coordinates); returns the similitude character when the expression has a
/// well-defined one.
fn collect(
    expr: &GroupExpr,
    protos: &mut Vec<Proto>,
    constraints: &mut Vec<Vector>,
) -> Result<Option<Vector>> {
    // helper to pad an atom-local vector after this point is tricky since the
    // total rank is unknown; instead record positions now and pad lazily by
    // growing all recorded vectors whenever atoms are appended.
    fn width(protos: &[Proto]) -> usize {
        protos.iter().map(|p| p.rank).sum()
    }
    match expr {
        GroupExpr::Atom(kind) => {
            let before = width(protos);
            let p = proto_atom(*kind)?;
            let sim = p.sim.as_ref().map(|s| {
                let mut v = vec![0i64; before];
                v.extend_from_slice(s);
                v
            });
            protos.push(p);
            for c in constraints.iter_mut() {
                c.resize(width(protos), 0);
            }
            if let Some(s) = &sim {
                let mut s = s.clone();
                s.resize(width(protos), 0);
                return Ok(Some(s));
            }
            Ok(None)
        }
        GroupExpr::Product(children) => {
            let mut last_sim = None;
            for ch in children {
                last_sim = collect(ch, protos, constraints)?;
            }
            // a bare product has a well-defined similitude only if single child
            if children.len() == 1 {
                Ok(last_sim)
            } else {
                Ok(None)
            }
        }
        GroupExpr::SProduct(children) => {
            let mut sims = vec![];
            for ch in children {
                let s = collect(ch, protos, constraints)?.ok_or_else(|| {
                    Error::GroupSpec(format!(
                        "factor {} has no similitude character for S(·)",
                        ch.display()
                    ))
                })?;
                sims.push(s);
            }
            let total = width(protos);
            let mut sum = vec![0i64; total];
            for mut s in sims {
                s.resize(total, 0);
                sum = lattice::add(&sum, &s);
            }
            for c in constraints.iter_mut() {
                c.resize(total, 0);
            }
            constraints.push(sum);
            Ok(None)
        }
        GroupExpr::GProduct(children) => {
            let mut sims = vec![];
            for ch in children {
                let s = collect(ch, protos, constraints)?.ok_or_else(|| {
                    Error::GroupSpec(format!(
                        "factor {} has no similitude character for G(·)",
                        ch.display()
                    ))
                })?;
                sims.push(s);
            }
            let total = width(protos);
            for s in sims.iter_mut() {
                s.resize(total, 0);
            }
            for c in constraints.iter_mut() {
                c.resize(total, 0);
            }
            for w in sims.windows(2) {
                constraints.push(lattice::sub(&w[0], &w[1]));
            }
            Ok(Some(sims[0].clone()))
        }
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(' ') {
            self.pos += 1;
        }
    }

    fn group(&mut self) -> Result<GroupExpr> {
        let mut factors = vec![self.factor()?];
        loop {
            self.skip_ws();
            if self.s[self.pos..].starts_with("x ") || self.s[self.pos..] == *"x" {
                self.pos += 1;
                factors.push(self.factor()?);
            } else {
                break;
            }
        }
        if factors.len() == 1 {
            Ok(factors.pop().unwrap())
        } else {
            Ok(GroupExpr::Product(factors))
        }
    }

    fn factor(&mut self) -> Result<GroupExpr> {
        self.skip_ws();
        let rest = &self.s[self.pos..];
        // "G(2)" is the exceptional group, "G(...)" a similitude product
        if rest.starts_with("G(2)") {
            self.pos += 4;
            return self.maybe_power(GroupExpr::Atom(AtomKind::G2));
        }
        if rest.starts_with("S(") || rest.starts_with("G(") {
            let is_s = rest.starts_with("S(");
            self.pos += 2;
            let inner = self.group()?;
            self.expect(')')?;
            let children = match inner {
                GroupExpr::Product(v) => v,
                g => vec![g],
            };
            return Ok(if is_s {
                GroupExpr::SProduct(children)
            } else {
                GroupExpr::GProduct(children)
            });
        }
        if rest.starts_with('(') {
            self.pos += 1;
            let inner = self.group()?;
            self.expect(')')?;
            return self.maybe_power(inner);
        }
        // atom name
        let name_len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric()))
            .unwrap_or(rest.len());
        let name = &rest[..name_len];
        self.pos += name_len;
        self.skip_ws();
        let mut arg: Option<usize> = None;
        if self.s[self.pos..].starts_with('(') {
            self.pos += 1;
            let rest = &self.s[self.pos..];
            let dlen = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            arg = Some(
                rest[..dlen]
                    .parse()
                    .map_err(|_| Error::GroupSpec(format!("bad atom argument in {name:?}")))?,
            );
            self.pos += dlen;
            self.expect(')')?;
        }
        let kind = atom_kind(name, arg)?;
        self.maybe_power(GroupExpr::Atom(kind))
    }

    fn maybe_power(&mut self, g: GroupExpr) -> Result<GroupExpr> {
        self.skip_ws();
        if self.s[self.pos..].starts_with('^') {
            self.pos += 1;
            let rest = &self.s[self.pos..];
            let dlen = rest.find(|c: char| !c.is_ascii_digit()).unwrap_or(rest.len());
            let k: usize = rest[..dlen]
                .parse()
                .map_err(|_| Error::GroupSpec("bad power".into()))?;
            self.pos += dlen;
            return Ok(GroupExpr::Product(vec![g; k]));
        }
        Ok(g)
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(Error::GroupSpec(format!(
                "expected {c:?} at {:?}",
                &self.s[self.pos..]
            )))
        }
    }
}

/// Resolve an atom name. Names may carry the argument inline (`GL2`) or in
/// parentheses (`GL(2)`).
fn atom_kind(name: &str, arg: Option<usize>) -> Result<AtomKind> {
    match name {
        "E7ad" => return Ok(AtomKind::E7Ad),
        "GE6" => return Ok(AtomKind::GE6),
        "G2" => return Ok(AtomKind::G2),
        _ => {}
    }
    let split = name.find(|c: char| c.is_ascii_digit()).unwrap_or(name.len());
    let (word, digits) = name.split_at(split);
    let n = if let Some(a) = arg {
        Some(a)
    } else if digits.is_empty() {
        None
    } else {
        Some(
            digits
                .parse()
                .map_err(|_| Error::GroupSpec(format!("bad atom {name:?}")))?,
        )
    };
    use AtomKind::*;
    let need = |n: Option<usize>| n.ok_or_else(|| Error::GroupSpec(format!("{word} needs a rank")));
    Ok(match word {
        "GL" => {
            let n = need(n)?;
            if n == 1 {
                Torus(1)
            } else {
                Gl(n)
            }
        }
        "SL" => Sl(need(n)?),
        "PGL" => Pgl(need(n)?),
        "Sp" => Sp(need(n)?),
        "GSp" => GSp(need(n)?),
        "SO" => So(need(n)?),
        "Spin" => Spin(need(n)?),
        "GSpin" => GSpin(need(n)?),
        "GSO" => GSo(need(n)?),
        "PGSO" => PGSo(need(n)?),
        "T" | "U" => Torus(need(n)?),
        "E" => match need(n)? {
            6 => E6Sc,
            7 => E7Sc,
            k => return Err(Error::GroupSpec(format!("E{k} not supported"))),
        },
        "E7ad" | "Ead" => E7Ad,
        "GE" => match need(n)? {
            6 => GE6,
            k => return Err(Error::GroupSpec(format!("GE{k} not supported"))),
        },
        "G" => match need(n)? {
            2 => G2,
            k => return Err(Error::GroupSpec(format!("G{k} not supported"))),
        },
        _ => return Err(Error::GroupSpec(format!("unknown atom {name:?}"))),
    })
}

/// Build a root datum from a textual description (the `build_root_datum`
/// entry point).
pub fn build_root_datum(spec: &str) -> Result<RootDatum> {
    // special-case: E7ad contains a digit inside the word
    let normalized = spec.trim();
    if normalized == "E7ad" {
        return GroupExpr::Atom(AtomKind::E7Ad).build();
    }
    GroupExpr::parse(normalized)?.build()
}

// ----------------------------------------------------------------------
// torus maps
// ----------------------------------------------------------------------

/// A lattice homomorphism `T_H -> T_G`, stored on cocharacters.
#[derive(Clone, Debug)]
pub struct TorusMap {
    /// Images of the X_*(H) basis vectors inside X_*(G).
    pub cochar_images: Vec<Vector>,
}

impl TorusMap {
    pub fn identity(rank: usize) -> Self {
        TorusMap {
            cochar_images: lattice::identity(rank),
        }
    }

    /// Pull a G-character back to an H-character.
    pub fn pullback(&self, g_char: &[i64]) -> Vector {
        self.cochar_images.iter().map(|v| dot(g_char, v)).collect()
    }

    /// Push an H-cocharacter forward to a G-cocharacter.
    pub fn push(&self, h_cochar: &[i64]) -> Vector {
        let n = self.cochar_images.first().map_or(0, |v| v.len());
        let mut out = vec![0i64; n];
        for (c, img) in h_cochar.iter().zip(&self.cochar_images) {
            out = lattice::add(&out, &lattice::scale(img, *c));
        }
        out
    }

    /// Compose with another map `T_K -> T_H`.
    pub fn after(&self, inner: &TorusMap) -> TorusMap {
        TorusMap {
            cochar_images: inner.cochar_images.iter().map(|v| self.push(v)).collect(),
        }
    }
}

/// Build a torus map from character assignments: `assign[c]` is the image of
/// the `c`-th G-character basis vector inside the character lattice of H's
/// underlying *product* (human-friendly coordinates). The result is the
/// adjoint map on cocharacters through H's constraint presentation.
pub fn torus_map_from_chars(g: &RootDatum, h: &RootDatum, assign: &[Vector]) -> Result<TorusMap> {
    if assign.len() != g.rank() {
        return Err(Error::RootDatum(format!(
            "char assignment length {} ≠ rank {} of {}",
            assign.len(),
            g.rank(),
            g.name
        )));
    }
    let prod_rank = h.incl_cochar.first().map_or(h.rank(), |v| v.len());
    for a in assign {
        if a.len() != prod_rank {
            return Err(Error::RootDatum(
                "char assignment has wrong product rank".into(),
            ));
        }
    }
    // ι_*(e_i^H)[c] = ⟨assign[c], incl_i⟩
    let images: Vec<Vector> = h
        .incl_cochar
        .iter()
        .map(|incl| assign.iter().map(|a| dot(a, incl)).collect())
        .collect();
    Ok(TorusMap {
        cochar_images: images,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_single_root() {
        let d = build_root_datum("SL(2)").unwrap();
        assert_eq!(d.simple_roots(), &[vec![2]]);
        assert_eq!(d.num_positive_roots(), 1);
    }

    #[test]
    fn positive_root_counts_match_classical_tables() {
        for (spec, count) in [
            ("SL(5)", 10),      // A4: n(n+1)/2
            ("SO(7)", 9),       // B3: n^2
            ("Sp(6)", 9),       // C3
            ("SO(8)", 12),      // D4: n(n-1)
            ("G(2)", 6),        // G2
            ("E(6)", 36),
            ("E(7)", 63),
        ] {
            let d = build_root_datum(spec).unwrap();
            assert_eq!(d.num_positive_roots(), count, "{spec}");
        }
    }

    #[test]
    fn longest_element_lengths() {
        let a1 = build_root_datum("SL(2)").unwrap();
        assert_eq!(a1.longest_element().len(), 1);
        let a2 = build_root_datum("SL(3)").unwrap();
        assert_eq!(a2.longest_element().len(), 3);
        let b3 = build_root_datum("SO(7)").unwrap();
        let w0 = b3.longest_element();
        assert_eq!(w0.len(), 9);
        // w0 = -1 in type B: check on a basis of weights
        for i in 0..3 {
            let mut v = vec![0i64; 3];
            v[i] = 1;
            assert_eq!(b3.apply_word(&w0, &v), lattice::neg(&v));
        }
    }

    #[test]
    fn dominantize_examples() {
        let a1 = build_root_datum("SL(2)").unwrap();
        let (dom, w) = a1.dominantize(&[-3]);
        assert_eq!(dom, vec![3]);
        assert_eq!(w.len(), 1);
        // already dominant -> identity word
        let (dom, w) = a1.dominantize(&[5]);
        assert_eq!(dom, vec![5]);
        assert!(w.is_empty());
        // -ρ goes to ρ under w0 (GL3 has integral ρ = (1,0,-1))
        let gl3 = build_root_datum("GL(3)").unwrap();
        let rho: Vector = gl3.two_rho().iter().map(|x| x / 2).collect();
        let (dom, w) = gl3.dominantize(&lattice::neg(&rho));
        assert_eq!(dom, rho);
        assert_eq!(w.len(), gl3.longest_element().len());
    }

    #[test]
    fn reflection_is_involution_and_orbits_close() {
        let d = build_root_datum("Sp(6)").unwrap();
        let lam = vec![3, 1, -2];
        for i in 0..3 {
            assert_eq!(d.reflect(&d.reflect(&lam, i), i), lam);
        }
        let orbit = d.orbit(&[1, 0, 0]);
        assert_eq!(orbit.len(), 6); // ±e_i
        for v in &orbit {
            for i in 0..3 {
                assert!(orbit.contains(&d.reflect(v, i)));
            }
        }
    }

    #[test]
    fn s_product_constraint() {
        // S(GL2^3): det(h1 h2 h3) = 1
        let d = build_root_datum("S(GL(2)^3)").unwrap();
        assert_eq!(d.rank(), 5);
        assert_eq!(d.semisimple_rank(), 3);
        assert_eq!(d.constraints(), &[vec![1i64, 1, 1, 1, 1, 1]]);
        // pairing stays perfect: Cartan integers survive
        for i in 0..3 {
            assert_eq!(dot(&d.simple_roots()[i], &d.simple_coroots()[i]), 2);
        }
        // GSpin4 = G(SL2 x SL2) realized as G(GL2 x GL2)
        let g = build_root_datum("G(GL(2) x GL(2))").unwrap();
        assert_eq!(g.rank(), 3);
        assert_eq!(
            g.type_multiset(),
            vec![TypeLabel::new(Family::A, 1), TypeLabel::new(Family::A, 1)]
        );
    }

    #[test]
    fn gspin_spin_weights() {
        let d = build_root_datum("GSpin(7)").unwrap();
        let spin = d.atom_named_weight(0, "spin").unwrap();
        let orbit = d.orbit(&spin);
        assert_eq!(orbit.len(), 8);
        // std has 6 nonzero weights plus zero handled by mult machinery later
        let std = d.atom_named_weight(0, "std").unwrap();
        assert_eq!(d.orbit(&std).len(), 6);
    }

    #[test]
    fn centralizer_levi_of_gsp10_a4_cochar() {
        // principal cocharacter of the GL5 Levi inside GSp10
        let d = build_root_datum("GSp(10)").unwrap();
        let levi = d.levi(&[0, 1, 2, 3]).unwrap();
        let h = levi.two_rho_cov().clone();
        let m = d.centralizer_levi(&h).unwrap();
        assert_eq!(
            m.type_multiset(),
            vec![
                TypeLabel::new(Family::A, 1),
                TypeLabel::new(Family::A, 1),
                TypeLabel::new(Family::A, 1)
            ]
        );
    }

    #[test]
    fn pgso_and_ge6_build() {
        let d = build_root_datum("PGSO(10)").unwrap();
        assert_eq!(d.rank(), 5);
        assert_eq!(d.central_rank(), 0);
        let g = build_root_datum("GE(6)").unwrap();
        assert_eq!(g.rank(), 7);
        assert_eq!(g.central_rank(), 1);
        let std = g.atom_named_weight(0, "std").unwrap();
        assert!(g.is_dominant(&std));
    }
}
