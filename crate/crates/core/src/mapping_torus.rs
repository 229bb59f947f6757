//! The mapping torus of a surface mapping class: fundamental-group
//! presentation, Fox calculus, abelianization, Alexander invariants, the
//! three-dimensional Seiberg-Witten polynomial, and cup-product pairings
//! on the invariant cohomology.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::intlin::{hnf_rows, snf, AbelianGroupSpec, IntMatrix};
use crate::laurent::{LaurentError, LaurentPoly, PolyMatrix, VarSet};
use crate::surface::{symplectic_form, Letter, MappingClass, Word};

#[derive(Debug, Error)]
pub enum TorusError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

/// Finite group presentation with named generators and freely reduced
/// relator words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    gens: Vec<String>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    pub fn new(gens: Vec<String>, relators: Vec<Word>) -> Result<Self, TorusError> {
        for (i, g) in gens.iter().enumerate() {
            if gens[..i].contains(g) {
                return Err(TorusError::Parse {
                    line: 1,
                    msg: format!("duplicate generator `{g}`"),
                });
            }
        }
        let relators: Vec<Word> = relators
            .into_iter()
            .map(|w| Word::from_letters(w.letters().to_vec()))
            .collect();
        for r in &relators {
            for l in r.letters() {
                if l.gen >= gens.len() {
                    return Err(TorusError::UnknownGenerator(format!("#{}", l.gen)));
                }
            }
        }
        Ok(GroupPresentation { gens, relators })
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    /// Parse one whitespace-separated relator line, tokens `x` or `x^k`.
    pub fn parse_word_in(gens: &[String], text: &str, line: usize) -> Result<Word, TorusError> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let k: i64 = e.parse().map_err(|_| TorusError::Parse {
                        line,
                        msg: format!("bad exponent in `{tok}`"),
                    })?;
                    (n, k)
                }
                None => (tok, 1),
            };
            let idx = gens
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| TorusError::Parse {
                    line,
                    msg: format!("unknown generator `{name}`"),
                })?;
            for _ in 0..exp.unsigned_abs() {
                letters.push(Letter::new(idx, exp < 0));
            }
        }
        Ok(Word::from_letters(letters))
    }

    pub fn parse_word(&self, text: &str) -> Result<Word, TorusError> {
        Self::parse_word_in(&self.gens, text, 0)
    }

    /// Presentation text: `gens: ...` header then one relator per line.
    pub fn parse(text: &str) -> Result<Self, TorusError> {
        let mut gens: Option<Vec<String>> = None;
        let mut relators = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let s = raw.trim();
            if s.is_empty() || s.starts_with('#') {
                continue;
            }
            match &gens {
                None => {
                    let body = s.strip_prefix("gens:").ok_or_else(|| TorusError::Parse {
                        line,
                        msg: "expected `gens:` header".to_string(),
                    })?;
                    let names: Vec<String> =
                        body.split_whitespace().map(|t| t.to_string()).collect();
                    if names.is_empty() {
                        return Err(TorusError::Parse {
                            line,
                            msg: "no generators listed".to_string(),
                        });
                    }
                    gens = Some(names);
                }
                Some(names) => {
                    relators.push(Self::parse_word_in(names, s, line)?);
                }
            }
        }
        let gens = gens.ok_or_else(|| TorusError::Parse {
            line: 1,
            msg: "empty presentation".to_string(),
        })?;
        Self::new(gens, relators)
    }

    pub fn word_string(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let mut parts: Vec<(usize, i64)> = Vec::new();
        for l in w.letters() {
            let e = if l.inv { -1 } else { 1 };
            match parts.last_mut() {
                Some((g, k)) if *g == l.gen && (*k > 0) == (e > 0) => *k += e,
                _ => parts.push((l.gen, e)),
            }
        }
        parts
            .iter()
            .map(|(g, k)| {
                if *k == 1 {
                    self.gens[*g].clone()
                } else {
                    format!("{}^{}", self.gens[*g], k)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("gens: {}\n", self.gens.join(" "));
        for r in &self.relators {
            let _ = writeln!(out, "{}", self.word_string(r));
        }
        out
    }

    /// Exponent-sum matrix, generators x relators.
    pub fn exponent_matrix(&self) -> IntMatrix {
        let n = self.num_gens();
        IntMatrix::from_fn(n, self.relators.len(), |i, j| {
            self.relators[j].abelianized(n)[i].clone()
        })
    }
}

/// Element of the integral group ring of a free group.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElem {
    terms: BTreeMap<Word, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        let mut e = Self::default();
        e.add_term(w, BigInt::one());
        e
    }

    pub fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg_ref(&self) -> Self {
        GroupRingElem {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }

    /// Right multiplication by `(x - 1)` for the fundamental identity.
    pub fn mul_gen_minus_one(&self, x: usize) -> Self {
        let g = Self::word(Word::gen(x)).sub_ref(&Self::one());
        self.mul_ref(&g)
    }

    pub fn display(&self, gens: &GroupPresentation) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    out.push_str("- ");
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if w.is_empty() {
                let _ = write!(out, "{mag}");
            } else if mag.is_one() {
                out.push_str(&gens.word_string(w));
            } else {
                let _ = write!(out, "{mag} {}", gens.word_string(w));
            }
        }
        out
    }
}

/// Fox derivative of a free word with respect to generator `x`:
/// `d(uv)/dx = du/dx + u dv/dx`, `dx/dx = 1`, `d(x^-1)/dx = -x^-1`.
pub fn fox_derivative(w: &Word, x: usize) -> GroupRingElem {
    let mut out = GroupRingElem::zero();
    let mut prefix: Vec<Letter> = Vec::new();
    for &l in w.letters() {
        if l.gen == x {
            if l.inv {
                let mut p = prefix.clone();
                p.push(l);
                out.add_term(Word::from_letters(p), -BigInt::one());
            } else {
                out.add_term(Word::from_letters(prefix.clone()), BigInt::one());
            }
        }
        prefix.push(l);
    }
    out
}

/// Projection of the generators onto the free part of the abelianization,
/// in canonical (Hermite) coordinates; torsion retained for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizationMap {
    vars: VarSet,
    images: Vec<Vec<i64>>,
    torsion: Vec<BigInt>,
}

impl AbelianizationMap {
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn image(&self, gen: usize) -> &[i64] {
        &self.images[gen]
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn word_exps(&self, w: &Word) -> Vec<i64> {
        let mut v = vec![0i64; self.vars.len()];
        for l in w.letters() {
            let s = if l.inv { -1 } else { 1 };
            for (vi, im) in v.iter_mut().zip(&self.images[l.gen]) {
                *vi += s * im;
            }
        }
        v
    }

    pub fn word_monomial(&self, w: &Word) -> LaurentPoly {
        LaurentPoly::monomial(&self.vars, self.word_exps(w), 1)
    }

    pub fn elem_poly(&self, e: &GroupRingElem) -> LaurentPoly {
        let mut out = LaurentPoly::zero(&self.vars);
        for (w, c) in e.terms() {
            out = out.add_ref(&LaurentPoly::monomial(&self.vars, self.word_exps(w), c.clone()));
        }
        out
    }
}

/// Smith-plus-Hermite abelianization of a presentation.  The free-part
/// coordinates are canonical (Hermite form of the projection); each
/// pivot generator names the corresponding Laurent variable.
pub fn abelianization(p: &GroupPresentation) -> (AbelianGroupSpec, AbelianizationMap) {
    let e = p.exponent_matrix();
    let s = snf(&e);
    let diag = s.diagonal();
    let n = p.num_gens();
    let free_rows: Vec<usize> = (0..n)
        .filter(|&k| k >= diag.len() || diag[k].is_zero())
        .collect();
    let torsion: Vec<BigInt> = diag
        .iter()
        .filter(|d| !d.is_zero() && !d.is_one())
        .cloned()
        .collect();
    let a = IntMatrix::from_fn(free_rows.len(), n, |i, j| s.u.get(free_rows[i], j).clone());
    let h = hnf_rows(&a);
    let mut pivots = Vec::new();
    for i in 0..h.rows() {
        let j = (0..n)
            .find(|&j| !h.get(i, j).is_zero())
            .expect("free-part projection is surjective");
        pivots.push(j);
    }
    let names: Vec<String> = pivots.iter().map(|&j| p.gens()[j].clone()).collect();
    let vars = VarSet::new(names).expect("generator names are distinct");
    let images: Vec<Vec<i64>> = (0..n)
        .map(|j| {
            (0..h.rows())
                .map(|i| h.get(i, j).to_i64().expect("exponent fits in i64"))
                .collect()
        })
        .collect();
    (
        AbelianGroupSpec { free_rank: free_rows.len(), torsion: torsion.clone() },
        AbelianizationMap { vars, images, torsion },
    )
}

/// Alexander (Fox Jacobian) matrix of a presentation over the free part
/// of its abelianization: rows = relators, columns = generators.
pub fn alexander_matrix(p: &GroupPresentation, amap: &AbelianizationMap) -> PolyMatrix {
    PolyMatrix::from_fn(amap.vars(), p.relators().len(), p.num_gens(), |i, j| {
        amap.elem_poly(&fox_derivative(&p.relators()[i], j))
    })
}

/// First elementary ideal generator: gcd of the size-(n-1) minors of the
/// Alexander matrix, unit-normalized; zero when the ideal is zero.
pub fn first_elementary_ideal(alex: &PolyMatrix) -> Result<LaurentPoly, LaurentError> {
    let e1 = alex.elementary_ideal_gcd(1)?;
    if e1.is_zero() {
        Ok(e1)
    } else {
        e1.normalize_unit()
    }
}

/// Specialize every variable except `name` to 1.
pub fn specialize_to_var(p: &LaurentPoly, name: &str) -> Result<LaurentPoly, LaurentError> {
    let out_vars = VarSet::new(vec![name])?;
    let images: Vec<LaurentPoly> = p
        .vars()
        .names()
        .iter()
        .map(|n| {
            if n == name {
                LaurentPoly::var(&out_vars, 0)
            } else {
                LaurentPoly::constant(&out_vars, 1)
            }
        })
        .collect();
    p.substitute(&out_vars, &images)
}

/// Wang-sequence first Betti number of the mapping torus.
pub fn betti_wang(mc: &MappingClass) -> usize {
    let c = mc.cohomology_action();
    let n = c.rows();
    1 + c.sub(&IntMatrix::identity(n)).nullity()
}

/// Characteristic polynomial of the homology monodromy; an independent
/// oracle for the torsion computation.
pub fn charpoly_oracle(mc: &MappingClass) -> LaurentPoly {
    mc.h1_action().char_poly().expect("square matrix")
}

/// `t x t^-1 = phi_*^-1(x)` relators plus the surface relator.
pub fn mapping_torus_presentation(genus: usize, mc: &MappingClass) -> GroupPresentation {
    assert_eq!(genus, mc.genus(), "genus mismatch");
    let surface = mc.surface();
    let shift = |w: &Word| -> Word {
        Word::from_letters(
            w.letters()
                .iter()
                .map(|l| Letter::new(l.gen + 1, l.inv))
                .collect(),
        )
    };
    let mut gens = vec!["t".to_string()];
    for i in 0..surface.num_generators() {
        gens.push(surface.generator_name(i));
    }
    let mut relators = vec![shift(&surface.relator())];
    let phi_inv = mc.endo_inverse();
    let t = Letter::new(0, false);
    for i in 0..surface.num_generators() {
        let mut letters = vec![t, Letter::new(i + 1, false), t.inverse()];
        letters.extend_from_slice(shift(&phi_inv.image(i).inverse()).letters());
        relators.push(Word::from_letters(letters));
    }
    GroupPresentation::new(gens, relators).expect("valid by construction")
}

/// Cup-product data on the mapping torus: basis `{theta} ∪ {invariant
/// cocycles}` of `H^1(Y)`, basis `{[S], [c x S^1]}` of `H_2(Y)`, and the
/// full pairing tensor `<z_i ∪ z_j, h_k>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupData {
    pub h1_labels: Vec<String>,
    pub h2_labels: Vec<String>,
    /// invariant cocycles in the dual basis of H^1 of the fiber
    pub cocycles: Vec<Vec<BigInt>>,
    /// invariant cycles in the (a_i, b_i) basis of H_1 of the fiber
    pub cycles: Vec<Vec<BigInt>>,
    pub tensor: Vec<Vec<Vec<BigInt>>>,
}

impl CupData {
    pub fn h1_dim(&self) -> usize {
        self.h1_labels.len()
    }

    pub fn h2_dim(&self) -> usize {
        self.h2_labels.len()
    }

    pub fn pairing(&self, i: usize, j: usize, k: usize) -> &BigInt {
        &self.tensor[i][j][k]
    }

    /// `z ∪ w` as a vector of pairings against the H_2 basis.
    pub fn contract(&self, z: &[BigInt], w: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.h2_dim()];
        for i in 0..self.h1_dim() {
            for j in 0..self.h1_dim() {
                if z[i].is_zero() || w[j].is_zero() {
                    continue;
                }
                for (k, o) in out.iter_mut().enumerate() {
                    *o += &z[i] * &w[j] * &self.tensor[i][j][k];
                }
            }
        }
        out
    }
}

pub fn cup_pairings(mc: &MappingClass) -> CupData {
    let g = mc.genus();
    let n = 2 * g;
    let id = IntMatrix::identity(n);
    let cocycles = mc.cohomology_action().sub(&id).kernel_basis();
    let cycles = mc.h1_action().sub(&id).kernel_basis();
    let j = symplectic_form(g);
    let dim1 = 1 + cocycles.len();
    let dim2 = 1 + cycles.len();
    let mut tensor = vec![vec![vec![BigInt::zero(); dim2]; dim1]; dim1];
    let eval = |u: &[BigInt], c: &[BigInt]| -> BigInt {
        u.iter().zip(c).map(|(a, b)| a * b).sum()
    };
    for (iu, u) in cocycles.iter().enumerate() {
        // <theta ∪ u, [c_k x S^1]> = u(c_k); <u ∪ theta, ·> is its negative
        for (kc, c) in cycles.iter().enumerate() {
            let v = eval(u, c);
            tensor[0][iu + 1][kc + 1] = v.clone();
            tensor[iu + 1][0][kc + 1] = -v;
        }
        // <u ∪ v, [S]> = symplectic pairing on the fiber
        for (iv, v) in cocycles.iter().enumerate() {
            tensor[iu + 1][iv + 1][0] = eval(u, &j.mul_vec(v));
        }
    }
    let mut h1_labels = vec!["theta".to_string()];
    let mut h2_labels = vec!["[S]".to_string()];
    for i in 1..dim1 {
        h1_labels.push(format!("u{i}"));
    }
    for k in 1..dim2 {
        h2_labels.push(format!("[c{k} x S1]"));
    }
    CupData { h1_labels, h2_labels, cocycles, cycles, tensor }
}

/// The mapping torus with its invariants computed once at construction.
#[derive(Clone, Debug)]
pub struct MappingTorusY {
    mc: MappingClass,
    presentation: GroupPresentation,
    b1: usize,
    homology: AbelianGroupSpec,
    amap: AbelianizationMap,
    alex: PolyMatrix,
    e1: LaurentPoly,
}

impl MappingTorusY {
    pub fn new(mc: &MappingClass) -> Result<Self, TorusError> {
        let presentation = mapping_torus_presentation(mc.genus(), mc);
        let (homology, amap) = abelianization(&presentation);
        let b1 = betti_wang(mc);
        debug_assert_eq!(b1, homology.free_rank);
        let alex = alexander_matrix(&presentation, &amap);
        let e1 = first_elementary_ideal(&alex)?;
        Ok(MappingTorusY {
            mc: mc.clone(),
            presentation,
            b1,
            homology,
            amap,
            alex,
            e1,
        })
    }

    pub fn genus(&self) -> usize {
        self.mc.genus()
    }

    pub fn mapping_class(&self) -> &MappingClass {
        &self.mc
    }

    pub fn presentation(&self) -> &GroupPresentation {
        &self.presentation
    }

    pub fn b1(&self) -> usize {
        self.b1
    }

    pub fn homology(&self) -> &AbelianGroupSpec {
        &self.homology
    }

    pub fn abelianization_map(&self) -> &AbelianizationMap {
        &self.amap
    }

    pub fn alexander_matrix(&self) -> &PolyMatrix {
        &self.alex
    }

    /// Multivariable Alexander polynomial (first elementary ideal gcd).
    pub fn alexander_polynomial(&self) -> &LaurentPoly {
        &self.e1
    }

    /// The Alexander polynomial with every variable except t sent to 1.
    pub fn alexander_t(&self) -> Result<LaurentPoly, TorusError> {
        Ok(specialize_to_var(&self.e1, "t")?)
    }

    /// Symmetrized single-variable Alexander polynomial.
    pub fn milnor_torsion(&self) -> Result<LaurentPoly, TorusError> {
        let d = self.alexander_t()?;
        if d.is_zero() {
            return Err(TorusError::Degenerate("zero Alexander polynomial"));
        }
        let (sym, _) = d.symmetrize(0)?;
        Ok(sym)
    }

    /// Three-dimensional SW polynomial: the Milnor torsion with the
    /// variable squared (Spin^c structures double-cover the torsion grid).
    pub fn sw3(&self) -> Result<LaurentPoly, TorusError> {
        let m = self.milnor_torsion()?;
        let pairs: Vec<(Vec<i64>, BigInt)> = m
            .term_pairs()
            .into_iter()
            .map(|(e, c)| (vec![e[0] * 2], c))
            .collect();
        Ok(LaurentPoly::from_term_pairs(m.vars(), &pairs))
    }

    pub fn cup_pairings(&self) -> CupData {
        cup_pairings(&self.mc)
    }
}
