//! The genus-g surface group, Dehn twists at the fundamental-group and
//! homology levels, and mapping classes given as twist words.
//!
//! Twist convention (fixed once, validated by the homology golden test in
//! this module): `T_{a_i}` sends `b_i -> b_i a_i^-1` and `T_{b_i}` sends
//! `a_i -> a_i b_i`, all other generators fixed.  The cohomology action is
//! the inverse-transpose of the homology action, so the standard monodromy
//! word reproduces the block matrix with `alpha_1 -> alpha_1 + beta_1`,
//! `beta_1 -> beta_1` on the first handle.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::intlin::IntMatrix;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SurfaceError {
    #[error("genus must be at least 1")]
    BadGenus,
    #[error("curve index {0} exceeds genus {1}")]
    BadCurveIndex(usize, usize),
    #[error("cannot parse twist token `{0}` (expected e.g. Ta1 or Tb3^-1)")]
    BadTwistToken(String),
}

/// One letter of a free-group word: a generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inv: bool,
}

impl Letter {
    pub fn new(gen: usize, inv: bool) -> Self {
        Letter { gen, inv }
    }

    pub fn inverse(self) -> Self {
        Letter { gen: self.gen, inv: !self.inv }
    }
}

/// Freely reduced word in abstract generators (indices into some generator
/// list owned by the caller).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    /// Builds a word and freely reduces it.
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        let mut w = Word { letters };
        w.reduce();
        w
    }

    pub fn gen(g: usize) -> Self {
        Word { letters: vec![Letter::new(g, false)] }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn reduce(&mut self) {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last().is_some_and(|&last| last == l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        self.letters = out;
    }

    pub fn is_reduced(&self) -> bool {
        self.letters
            .windows(2)
            .all(|w| w[0] != w[1].inverse())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word::from_letters(letters)
    }

    pub fn push(&self, l: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters.push(l);
        Word::from_letters(letters)
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// Exponent sums per generator.
    pub fn abelianized(&self, num_gens: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::from(0); num_gens];
        for l in &self.letters {
            if l.inv {
                v[l.gen] -= 1;
            } else {
                v[l.gen] += 1;
            }
        }
        v
    }

    /// Remove conjugating prefixes: the shortest word in the cyclic class.
    pub fn cyclically_reduced(&self) -> Word {
        let mut w = self.clone();
        while w.letters.len() >= 2
            && *w.letters.first().unwrap() == w.letters.last().unwrap().inverse()
        {
            let letters = w.letters[1..w.letters.len() - 1].to_vec();
            w = Word::from_letters(letters);
        }
        w
    }

    /// Conjugacy test in the free group: cyclic reductions agree up to
    /// rotation.
    pub fn is_conjugate(&self, other: &Word) -> bool {
        let a = self.cyclically_reduced();
        let b = other.cyclically_reduced();
        if a.len() != b.len() {
            return false;
        }
        if a.is_empty() {
            return true;
        }
        (0..a.len()).any(|r| {
            (0..a.len()).all(|i| a.letters[(i + r) % a.len()] == b.letters[i])
        })
    }
}

/// Freely reduce a word; exposed as a standalone operation.
pub fn free_reduce(w: &Word) -> Word {
    Word::from_letters(w.letters().to_vec())
}

/// The genus-g surface: generators `a_1, b_1, ..., a_g, b_g` indexed as
/// `2i` / `2i+1` for handle `i`, with the product-of-commutators relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceData {
    genus: usize,
}

impl SurfaceData {
    pub fn new(genus: usize) -> Result<Self, SurfaceError> {
        if genus < 1 {
            return Err(SurfaceError::BadGenus);
        }
        Ok(SurfaceData { genus })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn num_generators(&self) -> usize {
        2 * self.genus
    }

    /// Index of `a_i` (1-based handle).
    pub fn a(&self, handle: usize) -> usize {
        2 * (handle - 1)
    }

    /// Index of `b_i` (1-based handle).
    pub fn b(&self, handle: usize) -> usize {
        2 * (handle - 1) + 1
    }

    pub fn generator_name(&self, idx: usize) -> String {
        let handle = idx / 2 + 1;
        if idx % 2 == 0 {
            format!("a{handle}")
        } else {
            format!("b{handle}")
        }
    }

    /// The relator `[a_1,b_1] [a_2,b_2] ... [a_g,b_g]`.
    pub fn relator(&self) -> Word {
        let mut letters = Vec::new();
        for h in 1..=self.genus {
            let a = self.a(h);
            let b = self.b(h);
            letters.push(Letter::new(a, false));
            letters.push(Letter::new(b, false));
            letters.push(Letter::new(a, true));
            letters.push(Letter::new(b, true));
        }
        Word::from_letters(letters)
    }
}

/// Generator-substitution endomorphism of the free group on the surface
/// generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeEndo {
    surface: SurfaceData,
    images: Vec<Word>,
}

impl FreeEndo {
    pub fn identity(surface: &SurfaceData) -> Self {
        FreeEndo {
            surface: surface.clone(),
            images: (0..surface.num_generators()).map(Word::gen).collect(),
        }
    }

    pub fn from_images(surface: &SurfaceData, images: Vec<Word>) -> Self {
        assert_eq!(images.len(), surface.num_generators(), "one image per generator");
        FreeEndo { surface: surface.clone(), images }
    }

    pub fn surface(&self) -> &SurfaceData {
        &self.surface
    }

    pub fn image(&self, gen: usize) -> &Word {
        &self.images[gen]
    }

    /// Apply the endomorphism letter by letter; images of inverse letters
    /// are inverse words, and the result is freely reduced.
    pub fn apply(&self, w: &Word) -> Word {
        let mut out = Vec::new();
        for l in w.letters() {
            let img = &self.images[l.gen];
            if l.inv {
                out.extend(img.inverse().letters().iter().copied());
            } else {
                out.extend(img.letters().iter().copied());
            }
        }
        Word::from_letters(out)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &FreeEndo) -> FreeEndo {
        assert_eq!(self.surface, other.surface, "surface mismatch");
        FreeEndo {
            surface: self.surface.clone(),
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// Exponent-sum matrix of the generator images (the induced map on
    /// first homology, columns = images).
    pub fn h1_matrix(&self) -> IntMatrix {
        let n = self.surface.num_generators();
        IntMatrix::from_fn(n, n, |i, j| {
            self.images[j].abelianized(n)[i].clone()
        })
    }
}

/// A standard twisting curve: `a_i` or `b_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curve {
    A(usize),
    B(usize),
}

impl Curve {
    pub fn handle(self) -> usize {
        match self {
            Curve::A(h) | Curve::B(h) => h,
        }
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Curve::A(h) => write!(f, "a{h}"),
            Curve::B(h) => write!(f, "b{h}"),
        }
    }
}

/// Dehn twist about a standard curve at the fundamental-group level.
pub fn dehn_twist_pi1(
    curve: Curve,
    sign: i8,
    surface: &SurfaceData,
) -> Result<FreeEndo, SurfaceError> {
    let g = surface.genus();
    let h = curve.handle();
    if h < 1 || h > g {
        return Err(SurfaceError::BadCurveIndex(h, g));
    }
    let mut endo = FreeEndo::identity(surface);
    let a = surface.a(h);
    let b = surface.b(h);
    match (curve, sign >= 0) {
        // T_{a_i}: b_i -> b_i a_i^-1
        (Curve::A(_), true) => {
            endo.images[b] = Word::from_letters(vec![
                Letter::new(b, false),
                Letter::new(a, true),
            ]);
        }
        (Curve::A(_), false) => {
            endo.images[b] = Word::from_letters(vec![
                Letter::new(b, false),
                Letter::new(a, false),
            ]);
        }
        // T_{b_i}: a_i -> a_i b_i
        (Curve::B(_), true) => {
            endo.images[a] = Word::from_letters(vec![
                Letter::new(a, false),
                Letter::new(b, false),
            ]);
        }
        (Curve::B(_), false) => {
            endo.images[a] = Word::from_letters(vec![
                Letter::new(a, false),
                Letter::new(b, true),
            ]);
        }
    }
    Ok(endo)
}

/// The same twist on first homology: a transvection supported on one
/// handle block, determinant 1.
pub fn dehn_twist_h1(curve: Curve, sign: i8, genus: usize) -> Result<IntMatrix, SurfaceError> {
    let surface = SurfaceData::new(genus)?;
    Ok(dehn_twist_pi1(curve, sign, &surface)?.h1_matrix())
}

/// A mapping class written as a twist word; the rightmost twist acts
/// first, matching the usual composition order of diffeomorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingClass {
    genus: usize,
    twists: Vec<(Curve, i8)>,
}

impl MappingClass {
    pub fn new(genus: usize, twists: Vec<(Curve, i8)>) -> Result<Self, SurfaceError> {
        if genus < 1 {
            return Err(SurfaceError::BadGenus);
        }
        for (c, _) in &twists {
            if c.handle() < 1 || c.handle() > genus {
                return Err(SurfaceError::BadCurveIndex(c.handle(), genus));
            }
        }
        Ok(MappingClass { genus, twists })
    }

    pub fn identity(genus: usize) -> Result<Self, SurfaceError> {
        Self::new(genus, Vec::new())
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn twists(&self) -> &[(Curve, i8)] {
        &self.twists
    }

    pub fn surface(&self) -> SurfaceData {
        SurfaceData::new(self.genus).expect("genus validated")
    }

    /// Composite endomorphism on the fundamental group.
    pub fn endo(&self) -> FreeEndo {
        let surface = self.surface();
        let mut acc = FreeEndo::identity(&surface);
        // rightmost acts first: fold from the right
        for (c, s) in self.twists.iter().rev() {
            let t = dehn_twist_pi1(*c, *s, &surface).expect("validated");
            acc = t.compose(&acc);
        }
        acc
    }

    /// Endomorphism of the inverse mapping class: reversed twist word with
    /// flipped signs.
    pub fn endo_inverse(&self) -> FreeEndo {
        self.inverse().endo()
    }

    pub fn inverse(&self) -> MappingClass {
        MappingClass {
            genus: self.genus,
            twists: self.twists.iter().rev().map(|(c, s)| (*c, -s)).collect(),
        }
    }

    /// Action on `H_1(Sigma)`, basis `(a_1, b_1, ..., a_g, b_g)`.
    pub fn h1_action(&self) -> IntMatrix {
        self.endo().h1_matrix()
    }

    /// Action on `H^1(Sigma)`, dual basis: the inverse-transpose of the
    /// homology action.
    pub fn cohomology_action(&self) -> IntMatrix {
        self.inverse().h1_action().transpose()
    }

    /// Parse whitespace-separated tokens like `Ta1` and `Tb3^-1`; twists
    /// apply right-to-left as written.
    pub fn parse(word: &str, genus: usize) -> Result<Self, SurfaceError> {
        let mut twists = Vec::new();
        for tok in word.split_whitespace() {
            let (body, sign) = match tok.strip_suffix("^-1") {
                Some(b) => (b, -1i8),
                None => match tok.strip_suffix("^1") {
                    Some(b) => (b, 1),
                    None => (tok, 1),
                },
            };
            let rest = body
                .strip_prefix('T')
                .ok_or_else(|| SurfaceError::BadTwistToken(tok.to_string()))?;
            let (kind, idx) = rest
                .split_at_checked(1)
                .ok_or_else(|| SurfaceError::BadTwistToken(tok.to_string()))?;
            let handle: usize = idx
                .parse()
                .map_err(|_| SurfaceError::BadTwistToken(tok.to_string()))?;
            let curve = match kind {
                "a" => Curve::A(handle),
                "b" => Curve::B(handle),
                _ => return Err(SurfaceError::BadTwistToken(tok.to_string())),
            };
            twists.push((curve, sign));
        }
        Self::new(genus, twists)
    }
}

impl fmt::Display for MappingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .twists
            .iter()
            .map(|(c, s)| {
                if *s >= 0 {
                    format!("T{c}")
                } else {
                    format!("T{c}^-1")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The monodromy word `(T_{b_g} T_{a_g}^-1) ... (T_{b_2} T_{a_2}^-1) T_{a_1}`;
/// for genus 1 it degenerates to the single twist `T_{a_1}`.
pub fn standard_monodromy(genus: usize) -> Result<MappingClass, SurfaceError> {
    if genus < 1 {
        return Err(SurfaceError::BadGenus);
    }
    let mut twists = Vec::new();
    for h in (2..=genus).rev() {
        twists.push((Curve::B(h), 1));
        twists.push((Curve::A(h), -1));
    }
    twists.push((Curve::A(1), 1));
    MappingClass::new(genus, twists)
}

/// The standard symplectic form on `H_1(Sigma)` in the `(a_i, b_i)` basis.
pub fn symplectic_form(genus: usize) -> IntMatrix {
    let n = 2 * genus;
    IntMatrix::from_fn(n, n, |i, j| {
        if i % 2 == 0 && j == i + 1 {
            BigInt::from(1)
        } else if i % 2 == 1 && j + 1 == i {
            BigInt::from(-1)
        } else {
            BigInt::from(0)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn s(g: usize) -> SurfaceData {
        SurfaceData::new(g).unwrap()
    }

    #[test]
    fn free_reduce_examples() {
        let a = Letter::new(0, false);
        let w = Word::from_letters(vec![a, a.inverse()]);
        assert!(w.is_empty());
        let b = Letter::new(1, false);
        let w = Word::from_letters(vec![a, b, b.inverse(), a]);
        assert_eq!(w.letters(), &[a, a]);
        let w = Word::from_letters(vec![a, b]);
        assert_eq!(free_reduce(&w), w);
    }

    #[test]
    fn apply_endo_examples() {
        let surface = s(2);
        let id = FreeEndo::identity(&surface);
        let w = surface.relator();
        assert_eq!(id.apply(&w), w);
        // e(x) = x y applied to x^-1 gives y^-1 x^-1
        let mut e = FreeEndo::identity(&surface);
        e.images[0] = Word::from_letters(vec![Letter::new(0, false), Letter::new(1, false)]);
        let got = e.apply(&Word::from_letters(vec![Letter::new(0, true)]));
        assert_eq!(
            got,
            Word::from_letters(vec![Letter::new(1, true), Letter::new(0, true)])
        );
    }

    #[test]
    fn twists_preserve_relator_up_to_conjugacy() {
        for g in 1..=3 {
            let surface = s(g);
            let rel = surface.relator();
            let phi = standard_monodromy(g).unwrap().endo();
            assert!(phi.apply(&rel).is_conjugate(&rel));
            let phi_inv = standard_monodromy(g).unwrap().endo_inverse();
            assert!(phi_inv.apply(&rel).is_conjugate(&rel));
        }
    }

    #[test]
    fn twist_then_opposite_twist_is_identity() {
        let surface = s(2);
        for curve in [Curve::A(1), Curve::B(1), Curve::A(2), Curve::B(2)] {
            let t = dehn_twist_pi1(curve, 1, &surface).unwrap();
            let tinv = dehn_twist_pi1(curve, -1, &surface).unwrap();
            assert_eq!(t.compose(&tinv), FreeEndo::identity(&surface));
            assert_eq!(tinv.compose(&t), FreeEndo::identity(&surface));
        }
    }

    #[test]
    fn disjoint_twists_commute() {
        let surface = s(2);
        let t1 = dehn_twist_pi1(Curve::A(1), 1, &surface).unwrap();
        let t2 = dehn_twist_pi1(Curve::A(2), 1, &surface).unwrap();
        assert_eq!(t1.compose(&t2), t2.compose(&t1));
    }

    #[test]
    fn h1_twist_golden() {
        // cohomology action of T_{a_1} at genus 1 is [[1,0],[1,1]] in the
        // dual (alpha, beta) basis
        let mc = MappingClass::new(1, vec![(Curve::A(1), 1)]).unwrap();
        let c = mc.cohomology_action();
        assert_eq!(c, IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]));
        // twist then opposite twist is the identity matrix
        let m = dehn_twist_h1(Curve::B(2), 1, 3).unwrap();
        let minv = dehn_twist_h1(Curve::B(2), -1, 3).unwrap();
        assert!(m.mul(&minv).is_identity());
    }

    #[test]
    fn h1_abelianizes_pi1() {
        let surface = s(3);
        for curve in [Curve::A(2), Curve::B(3)] {
            for sign in [1, -1] {
                let e = dehn_twist_pi1(curve, sign, &surface).unwrap();
                let m = dehn_twist_h1(curve, sign, 3).unwrap();
                assert_eq!(e.h1_matrix(), m);
            }
        }
    }

    #[test]
    fn twist_matrices_are_symplectic() {
        let j = symplectic_form(2);
        for curve in [Curve::A(1), Curve::B(1), Curve::A(2), Curve::B(2)] {
            for sign in [1, -1] {
                let m = dehn_twist_h1(curve, sign, 2).unwrap();
                assert_eq!(m.det().unwrap(), BigInt::one());
                assert_eq!(m.transpose().mul(&j).mul(&m), j);
            }
        }
    }

    #[test]
    fn standard_monodromy_twist_words() {
        let mc = standard_monodromy(1).unwrap();
        assert_eq!(mc.twists(), &[(Curve::A(1), 1)]);
        let mc = standard_monodromy(2).unwrap();
        assert_eq!(mc.twists(), &[(Curve::B(2), 1), (Curve::A(2), -1), (Curve::A(1), 1)]);
        let mc = standard_monodromy(3).unwrap();
        assert_eq!(mc.twists().len(), 5);
        assert!(standard_monodromy(0).is_err());
    }

    #[test]
    fn cohomology_golden_block_shape() {
        // first handle block alpha_1 -> alpha_1 + beta_1, beta_1 -> beta_1;
        // remaining handle blocks have char poly t^2 - 3t + 1 and
        // det(block - I) = ±1
        for g in 2..=4 {
            let c = standard_monodromy(g).unwrap().cohomology_action();
            assert_eq!(c.get(0, 0), &BigInt::from(1));
            assert_eq!(c.get(0, 1), &BigInt::from(0));
            assert_eq!(c.get(1, 0), &BigInt::from(1));
            assert_eq!(c.get(1, 1), &BigInt::from(1));
            // off-block entries of the first handle vanish
            for j in 2..2 * g {
                assert_eq!(c.get(0, j), &BigInt::from(0));
                assert_eq!(c.get(j, 0), &BigInt::from(0));
            }
            for h in 2..=g {
                let o = 2 * (h - 1);
                let block = IntMatrix::from_fn(2, 2, |i, j| c.get(o + i, o + j).clone());
                let tr = block.get(0, 0) + block.get(1, 1);
                assert_eq!(tr, BigInt::from(3));
                assert_eq!(block.det().unwrap(), BigInt::one());
                let diff = block.sub(&IntMatrix::identity(2));
                assert!(diff.det().unwrap().magnitude().is_one());
            }
        }
    }

    #[test]
    fn monodromy_invariant_subspace_dim_one() {
        for g in 2..=5 {
            let c = standard_monodromy(g).unwrap().cohomology_action();
            let diff = c.sub(&IntMatrix::identity(2 * g));
            assert_eq!(diff.nullity(), 1);
        }
    }

    #[test]
    fn endo_times_inverse_is_identity() {
        for g in 1..=3 {
            let mc = standard_monodromy(g).unwrap();
            let surface = mc.surface();
            assert_eq!(
                mc.endo().compose(&mc.endo_inverse()),
                FreeEndo::identity(&surface)
            );
            // abelianization of the inverse endo is the inverse matrix
            let prod = mc.endo_inverse().h1_matrix().mul(&mc.h1_action());
            assert!(prod.is_identity());
        }
    }

    #[test]
    fn compose_abelianizes_to_matrix_product() {
        let surface = s(2);
        let e1 = dehn_twist_pi1(Curve::B(1), 1, &surface).unwrap();
        let e2 = dehn_twist_pi1(Curve::A(1), -1, &surface).unwrap();
        let m = e1.compose(&e2).h1_matrix();
        assert_eq!(m, e1.h1_matrix().mul(&e2.h1_matrix()));
    }

    #[test]
    fn twist_word_grammar() {
        let mc = MappingClass::parse("Tb2 Ta2^-1 Ta1", 2).unwrap();
        assert_eq!(mc, standard_monodromy(2).unwrap());
        assert_eq!(mc.to_string(), "Tb2 Ta2^-1 Ta1");
        assert_eq!(
            MappingClass::parse("", 3).unwrap(),
            MappingClass::identity(3).unwrap()
        );
        assert!(MappingClass::parse("Tc1", 2).is_err());
        assert!(MappingClass::parse("Ta9", 2).is_err());
    }
}
