//! The circle bundle X over a mapping torus Y with Euler class chi:
//! Gysin Betti numbers, intersection form, the four-dimensional SW
//! polynomial via coset collapse, canonical class, Kodaira dimension,
//! Lefschetz-type test, wall crossing, and the obstruction report.
//!
//! H^2(Y) coordinates throughout are taken in the basis dual to the H_2
//! basis of `CupData`: the fiber class [S] first, then the invariant tori.
//! The Euler class of the standard construction is (0, 1, 0, ...), the
//! class `[alpha ∧ theta]` dual to the first invariant torus.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::intlin::{hnf_rows, IntMatrix};
use crate::laurent::{LaurentPoly, VarSet};
use crate::mapping_torus::{CupData, MappingTorusY, TorusError};

#[derive(Debug, Error)]
pub enum FourManError {
    #[error("euler class has {got} coordinates, H^2(Y) basis has {expected}")]
    EulerLength { expected: usize, got: usize },
    #[error("intersection data requires b_2(X) = 2, got {0}")]
    NotRankTwo(usize),
    #[error("class does not reduce to a fiber-class multiple modulo the euler class")]
    NonFiberClass,
    #[error("xi/2 is not integral on the free part")]
    OddClass,
    #[error("dimension formula numerator {0} is not divisible by 4")]
    NotDivisible(BigInt),
    #[error("K^2 > 0 with K·omega = 0 is not realizable")]
    ForbiddenKodaira,
    #[error("degenerate input: {0}")]
    Degenerate(&'static str),
    #[error(transparent)]
    Torus(#[from] TorusError),
}

/// Symplectic Kodaira dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KodairaClass {
    MinusInfinity,
    Zero,
    One,
    Two,
}

impl fmt::Display for KodairaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaClass::MinusInfinity => write!(f, "-infinity"),
            KodairaClass::Zero => write!(f, "0"),
            KodairaClass::One => write!(f, "1"),
            KodairaClass::Two => write!(f, "2"),
        }
    }
}

/// The sign table on (K^2, K·omega).
pub fn kodaira_dimension(ksq: &BigInt, kdotw: &BigInt) -> Result<KodairaClass, FourManError> {
    if ksq.is_negative() || kdotw.is_negative() {
        return Ok(KodairaClass::MinusInfinity);
    }
    if ksq.is_zero() {
        return Ok(if kdotw.is_zero() {
            KodairaClass::Zero
        } else {
            KodairaClass::One
        });
    }
    if kdotw.is_zero() {
        return Err(FourManError::ForbiddenKodaira);
    }
    Ok(KodairaClass::Two)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GysinBetti {
    pub b1: usize,
    pub b2: usize,
    pub b3: usize,
    pub euler_char: i64,
    pub signature: i64,
}

/// Rank-two intersection form [[0,1],[1,d]] in the basis
/// `([pi*Omega], [pi*theta ∧ eta])`; `d` stays symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionForm {
    pub d: Option<BigInt>,
    pub signature: i64,
    pub b_plus: usize,
    pub b_minus: usize,
    pub determinant: BigInt,
}

/// SW polynomial of X in the variable s = exp of the pulled-back fiber
/// class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SWPolynomial4 {
    pub poly: LaurentPoly,
}

impl SWPolynomial4 {
    pub fn is_conjugation_symmetric(&self) -> bool {
        if self.poly.is_zero() {
            return true;
        }
        self.poly
            .term_pairs()
            .iter()
            .all(|(e, c)| self.poly.coeff(&[-e[0]]) == *c)
    }

    pub fn basic_class_count(&self) -> usize {
        self.poly.num_terms()
    }
}

/// Top power of s: the canonical-class coefficient against the fiber
/// class.
pub fn canonical_class(sw4: &SWPolynomial4) -> Result<BigInt, FourManError> {
    if sw4.poly.is_zero() {
        return Err(FourManError::Degenerate("zero SW polynomial"));
    }
    let top = sw4
        .poly
        .term_pairs()
        .iter()
        .map(|(e, _)| e[0])
        .max()
        .unwrap();
    Ok(BigInt::from(top))
}

/// Collapse a Spin^c polynomial over H^2(Y) coordinates along integer
/// multiples of chi and re-express in powers of the fiber class.
pub fn sw4_from_sw3(sw_y: &LaurentPoly, chi: &[BigInt]) -> Result<SWPolynomial4, FourManError> {
    if sw_y.vars().len() != chi.len() {
        return Err(FourManError::EulerLength {
            expected: sw_y.vars().len(),
            got: chi.len(),
        });
    }
    let svars = VarSet::new(vec!["s"]).expect("valid varset");
    let mut out = LaurentPoly::zero(&svars);
    for (e, c) in sw_y.term_pairs() {
        let v: Vec<BigInt> = e.iter().map(|&x| BigInt::from(x)).collect();
        let rep = coset_representative(&v, chi);
        let m = fiber_multiple(&rep)?;
        out = out.add_ref(&LaurentPoly::monomial(&svars, vec![m], c));
    }
    Ok(SWPolynomial4 { poly: out })
}

/// Canonical representative of `v + Z·chi`: subtract `k·chi` with `k`
/// the floor quotient at the first nonzero coordinate of chi.
fn coset_representative(v: &[BigInt], chi: &[BigInt]) -> Vec<BigInt> {
    match chi.iter().position(|c| !c.is_zero()) {
        None => v.to_vec(),
        Some(i) => {
            let k = v[i].div_floor(&chi[i]);
            v.iter().zip(chi).map(|(a, c)| a - &k * c).collect()
        }
    }
}

/// Expect `(m, 0, ..., 0)` and return `m` as an exponent.
fn fiber_multiple(rep: &[BigInt]) -> Result<i64, FourManError> {
    if rep[1..].iter().any(|x| !x.is_zero()) {
        return Err(FourManError::NonFiberClass);
    }
    rep[0].to_i64().ok_or(FourManError::NonFiberClass)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LefschetzReport {
    /// false means a nonzero cup annihilator exists in H^1(X)
    pub lefschetz_compatible: bool,
    /// Hermite basis of the annihilator lattice, coordinates in the
    /// `{theta, u_i}` basis of H^1
    pub annihilator: Vec<Vec<BigInt>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Excluded,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Excluded => write!(f, "excluded"),
            Verdict::Inconclusive => write!(f, "inconclusive (chamber-dependent)"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub sw_nonzero: bool,
    pub wall_crossing_trivial: bool,
    pub annihilator_dim: usize,
    pub psc: Verdict,
    pub complex_structure: Verdict,
    pub simple_type: bool,
    pub canonical_coeff: BigInt,
    pub k_squared: BigInt,
    pub k_dot_omega: BigInt,
    pub kappa: KodairaClass,
}

#[derive(Clone, Debug)]
pub struct CircleBundleX {
    base: MappingTorusY,
    euler: Vec<BigInt>,
    cup: CupData,
}

impl CircleBundleX {
    pub fn new(base: MappingTorusY, euler: Vec<BigInt>) -> Result<Self, FourManError> {
        let cup = base.cup_pairings();
        if euler.len() != cup.h2_dim() {
            return Err(FourManError::EulerLength {
                expected: cup.h2_dim(),
                got: euler.len(),
            });
        }
        Ok(CircleBundleX { base, euler, cup })
    }

    /// Euler class of the standard construction: dual of the first
    /// invariant torus; for a torus-free H_2 the fiber dual is used.
    pub fn standard(base: MappingTorusY) -> Self {
        let cup = base.cup_pairings();
        let mut euler = vec![BigInt::zero(); cup.h2_dim()];
        if euler.len() >= 2 {
            euler[1] = BigInt::one();
        } else {
            euler[0] = BigInt::one();
        }
        CircleBundleX { base, euler, cup }
    }

    pub fn base(&self) -> &MappingTorusY {
        &self.base
    }

    pub fn euler_class(&self) -> &[BigInt] {
        &self.euler
    }

    pub fn cup(&self) -> &CupData {
        &self.cup
    }

    fn euler_is_zero(&self) -> bool {
        self.euler.iter().all(|x| x.is_zero())
    }

    /// Values of `v ↦ <v ∪ chi, [Y]>` on the `{theta, u_i}` basis,
    /// computed through the Poincare dual of chi (rational on the
    /// surface part, integral in total).
    fn cup_chi_values(&self) -> Vec<BigRational> {
        let mut vals = vec![BigRational::from_integer(self.euler[0].clone())];
        let m = self.cup.cycles.len();
        if m == 0 {
            return vals;
        }
        // gamma_k with omega(gamma_k, c_j) = delta_kj: right inverse of
        // the row matrix (J c_j)^T
        let g = self.base.genus();
        let j = crate::surface::symplectic_form(g);
        let rows: Vec<Vec<BigInt>> = self.cup.cycles.iter().map(|c| j.mul_vec(c)).collect();
        let gamma = right_inverse_rational(&rows, 2 * g);
        for u in &self.cup.cocycles {
            let mut acc = BigRational::zero();
            for (k, y) in self.euler[1..].iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let mut uval = BigRational::zero();
                for (c, coord) in u.iter().enumerate() {
                    if !coord.is_zero() {
                        uval += BigRational::from_integer(coord.clone()) * &gamma[c][k];
                    }
                }
                acc += BigRational::from_integer(y.clone()) * uval;
            }
            vals.push(acc);
        }
        vals
    }

    pub fn gysin_betti(&self) -> GysinBetti {
        let b1y = self.base.b1();
        let b2y = b1y;
        let r0 = usize::from(!self.euler_is_zero());
        let r1 = if r0 == 0 {
            0
        } else {
            usize::from(self.cup_chi_values().iter().any(|v| !v.is_zero()))
        };
        let b1 = b1y + 1 - r0;
        let b2 = (b2y - r0) + (b1y - r1);
        let b3 = (1 - r1) + b2y;
        let euler_char = 2 - (b1 as i64) + (b2 as i64) - (b3 as i64);
        debug_assert_eq!(euler_char, 0);
        GysinBetti { b1, b2, b3, euler_char, signature: 0 }
    }

    pub fn intersection_form(&self) -> Result<IntersectionForm, FourManError> {
        let b2 = self.gysin_betti().b2;
        if b2 != 2 {
            return Err(FourManError::NotRankTwo(b2));
        }
        Ok(IntersectionForm {
            d: None,
            signature: 0,
            b_plus: 1,
            b_minus: 1,
            determinant: BigInt::from(-1),
        })
    }

    /// SW polynomial of X: the 3-dimensional polynomial placed on the
    /// fiber axis of H^2(Y) and collapsed modulo the Euler class.
    pub fn sw4(&self) -> Result<SWPolynomial4, FourManError> {
        let sw_y = self.base.sw3()?;
        let names: Vec<String> = (0..self.cup.h2_dim()).map(|i| format!("c{i}")).collect();
        let vars = VarSet::new(names).expect("distinct names");
        let pairs: Vec<(Vec<i64>, BigInt)> = sw_y
            .term_pairs()
            .into_iter()
            .map(|(e, c)| {
                let mut v = vec![0i64; self.cup.h2_dim()];
                v[0] = e[0];
                (v, c)
            })
            .collect();
        let lifted = LaurentPoly::from_term_pairs(&vars, &pairs);
        sw4_from_sw3(&lifted, &self.euler)
    }

    /// Annihilator of the cup map H^1(X) x H^1(X) -> H^2(X): all z with
    /// z ∪ w in Z·chi inside H^2(Y) for every w.
    pub fn lefschetz_test(&self) -> LefschetzReport {
        let h1 = self.cup.h1_dim();
        let h2 = self.cup.h2_dim();
        // unknowns: z_0..z_{h1-1}, then one multiplier per basis w_j
        let mut m = IntMatrix::zero(h1 * h2, 2 * h1);
        for jw in 0..h1 {
            for k in 0..h2 {
                let row = jw * h2 + k;
                for i in 0..h1 {
                    m.set(row, i, self.cup.pairing(i, jw, k).clone());
                }
                m.set(row, h1 + jw, -self.euler[k].clone());
            }
        }
        let kernel = m.kernel_basis();
        let zs = IntMatrix::from_fn(kernel.len(), h1, |i, j| kernel[i][j].clone());
        let h = hnf_rows(&zs);
        let mut annihilator = Vec::new();
        for i in 0..h.rows() {
            let row: Vec<BigInt> = (0..h1).map(|j| h.get(i, j).clone()).collect();
            if row.iter().any(|x| !x.is_zero()) {
                annihilator.push(row);
            }
        }
        LefschetzReport { lefschetz_compatible: annihilator.is_empty(), annihilator }
    }

    /// Li-Liu wall-crossing term `<y1 ∪ y2 ∪ xi/2, [X]>`, with xi in the
    /// rank-two intersection basis and y_i in the `{theta, u_i}` basis.
    pub fn wall_crossing_term(
        &self,
        xi: &[BigInt; 2],
        y1: &[BigInt],
        y2: &[BigInt],
    ) -> Result<BigInt, FourManError> {
        self.intersection_form()?;
        if !xi[0].is_multiple_of(&BigInt::from(2)) || !xi[1].is_multiple_of(&BigInt::from(2)) {
            return Err(FourManError::OddClass);
        }
        let v = self.cup.contract(y1, y2);
        let rep = coset_representative(&v, &self.euler);
        let m = fiber_multiple(&rep)?;
        // Q(m·pi*Omega, xi/2) = m · xi_2/2, independent of the unknown d
        Ok(BigInt::from(m) * (&xi[1] / BigInt::from(2)))
    }

    /// Expected SW moduli dimension `(xi^2 - 2 chi_top - 3 sigma)/4`.
    pub fn sw_dimension(&self, xisq: &BigInt) -> Result<BigInt, FourManError> {
        let gb = self.gysin_betti();
        let num = xisq - BigInt::from(2 * gb.euler_char) - BigInt::from(3 * gb.signature);
        if !num.is_multiple_of(&BigInt::from(4)) {
            return Err(FourManError::NotDivisible(num));
        }
        Ok(num / BigInt::from(4))
    }

    pub fn obstruction_report(&self) -> Result<ObstructionReport, FourManError> {
        let sw4 = self.sw4()?;
        let sw_nonzero = !sw4.poly.is_zero();
        let lef = self.lefschetz_test();
        let wall_crossing_trivial = !lef.lefschetz_compatible;
        let canonical_coeff = canonical_class(&sw4)?;
        let k_squared = BigInt::zero();
        let k_dot_omega = canonical_coeff.clone();
        let kappa = kodaira_dimension(&k_squared, &k_dot_omega)?;
        let gb = self.gysin_betti();
        let psc = if sw_nonzero && wall_crossing_trivial {
            Verdict::Excluded
        } else {
            Verdict::Inconclusive
        };
        let complex_structure = if gb.b1 % 2 == 0 && !lef.lefschetz_compatible {
            Verdict::Excluded
        } else {
            Verdict::Inconclusive
        };
        let dk = self.sw_dimension(&k_squared)?;
        Ok(ObstructionReport {
            sw_nonzero,
            wall_crossing_trivial,
            annihilator_dim: lef.annihilator.len(),
            psc,
            complex_structure,
            simple_type: dk.is_zero(),
            canonical_coeff,
            k_squared,
            k_dot_omega,
            kappa,
        })
    }
}

/// Right inverse over the rationals of a full-row-rank integer matrix
/// given as rows of length `width`: returns G with M·G = I, as columns
/// indexed `[coordinate][row]`.
fn right_inverse_rational(rows: &[Vec<BigInt>], width: usize) -> Vec<Vec<BigRational>> {
    let m = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r
                .iter()
                .map(|x| BigRational::from_integer(x.clone()))
                .collect();
            row.extend((0..m).map(|k| {
                if k == i {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..width {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].clone();
        for x in a[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..width + m {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    assert_eq!(r, m, "cycle rows are independent");
    let mut g = vec![vec![BigRational::zero(); m]; width];
    for (row, c) in pivots {
        for k in 0..m {
            g[c][k] = a[row][width + k].clone();
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mapping_torus::MappingTorusY;
    use crate::surface::{standard_monodromy, MappingClass};

    fn standard_x(g: usize) -> CircleBundleX {
        let y = MappingTorusY::new(&standard_monodromy(g).unwrap()).unwrap();
        CircleBundleX::standard(y)
    }

    fn identity_x(g: usize) -> CircleBundleX {
        let y = MappingTorusY::new(&MappingClass::identity(g).unwrap()).unwrap();
        CircleBundleX::standard(y)
    }

    fn sw_pattern(g: usize) -> LaurentPoly {
        let vars = VarSet::new(vec!["s"]).unwrap();
        let base = LaurentPoly::from_term_pairs(
            &vars,
            &[
                (vec![-2], BigInt::from(1)),
                (vec![0], BigInt::from(-3)),
                (vec![2], BigInt::from(1)),
            ],
        );
        let mut out = LaurentPoly::constant(&vars, 1);
        for _ in 1..g {
            out = out.mul_ref(&base);
        }
        out
    }

    #[test]
    fn gysin_standard_family() {
        for g in 2..=4 {
            let x = standard_x(g);
            let gb = x.gysin_betti();
            assert_eq!(gb, GysinBetti { b1: 2, b2: 2, b3: 2, euler_char: 0, signature: 0 });
        }
    }

    #[test]
    fn gysin_identity_monodromy() {
        let x = identity_x(1);
        let gb = x.gysin_betti();
        assert_eq!(gb.b1, 3);
        assert_eq!(gb.b2, 4);
        assert_eq!(gb.b3, 3);
        assert_eq!(gb.euler_char, 0);
    }

    #[test]
    fn gysin_zero_euler_class() {
        let y = MappingTorusY::new(&standard_monodromy(2).unwrap()).unwrap();
        let n = y.cup_pairings().h2_dim();
        let x = CircleBundleX::new(y, vec![BigInt::zero(); n]).unwrap();
        let gb = x.gysin_betti();
        // product with the circle
        assert_eq!(gb.b1, 3);
        assert_eq!(gb.euler_char, 0);
    }

    #[test]
    fn intersection_form_standard() {
        let x = standard_x(2);
        let q = x.intersection_form().unwrap();
        assert_eq!(q.signature, 0);
        assert_eq!(q.b_plus, 1);
        assert_eq!(q.b_minus, 1);
        assert_eq!(q.determinant, BigInt::from(-1));
        assert_eq!(q.d, None);
        assert!(matches!(
            identity_x(1).intersection_form(),
            Err(FourManError::NotRankTwo(4))
        ));
    }

    #[test]
    fn sw4_standard_family() {
        for g in 1..=3 {
            let sw = standard_x(g).sw4().unwrap();
            assert_eq!(sw.poly, sw_pattern(g));
            assert!(sw.is_conjugation_symmetric());
        }
        assert_eq!(standard_x(3).sw4().unwrap().basic_class_count(), 5);
    }

    #[test]
    fn sw4_collapse_examples() {
        let vars = VarSet::new(vec!["c0", "c1"]).unwrap();
        let chi = [BigInt::from(1), BigInt::from(2)];
        // support {0, chi, 2chi}, all coefficients 1
        let p = LaurentPoly::from_term_pairs(
            &vars,
            &[
                (vec![0, 0], BigInt::from(1)),
                (vec![1, 2], BigInt::from(1)),
                (vec![2, 4], BigInt::from(1)),
            ],
        );
        let sw = sw4_from_sw3(&p, &chi).unwrap();
        let svars = VarSet::new(vec!["s"]).unwrap();
        assert_eq!(
            sw.poly,
            LaurentPoly::constant(&svars, 3)
        );
        // mass conservation
        assert_eq!(sw.poly.coeff_sum(), p.coeff_sum());
        // a class off the fiber axis mod chi is rejected
        let q = LaurentPoly::from_term_pairs(&vars, &[(vec![0, 1], BigInt::from(1))]);
        assert!(matches!(
            sw4_from_sw3(&q, &chi),
            Err(FourManError::NonFiberClass)
        ));
    }

    #[test]
    fn canonical_class_examples() {
        for (g, want) in [(1usize, 0), (2, 2), (3, 4)] {
            let sw = standard_x(g).sw4().unwrap();
            assert_eq!(canonical_class(&sw).unwrap(), BigInt::from(want));
        }
    }

    #[test]
    fn kodaira_table() {
        let z = BigInt::zero;
        assert_eq!(kodaira_dimension(&z(), &BigInt::from(4)).unwrap(), KodairaClass::One);
        assert_eq!(kodaira_dimension(&z(), &z()).unwrap(), KodairaClass::Zero);
        assert_eq!(
            kodaira_dimension(&BigInt::from(-1), &z()).unwrap(),
            KodairaClass::MinusInfinity
        );
        assert_eq!(
            kodaira_dimension(&z(), &BigInt::from(-2)).unwrap(),
            KodairaClass::MinusInfinity
        );
        assert_eq!(
            kodaira_dimension(&BigInt::from(3), &BigInt::from(1)).unwrap(),
            KodairaClass::Two
        );
        assert!(matches!(
            kodaira_dimension(&BigInt::from(1), &z()),
            Err(FourManError::ForbiddenKodaira)
        ));
    }

    #[test]
    fn kodaira_monotone_bruteforce() {
        for ksq in -10..=10i64 {
            for kw in -10..=10i64 {
                let r = kodaira_dimension(&BigInt::from(ksq), &BigInt::from(kw));
                match r {
                    Err(_) => assert!(ksq > 0 && kw == 0),
                    Ok(k) => {
                        if ksq == 0 && kw == 0 {
                            assert_eq!(k, KodairaClass::Zero);
                        }
                        if ksq == 0 && kw > 0 {
                            assert_eq!(k, KodairaClass::One);
                        }
                        if ksq < 0 || kw < 0 {
                            assert_eq!(k, KodairaClass::MinusInfinity);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lefschetz_standard_family_has_annihilator() {
        for g in 2..=3 {
            let rep = standard_x(g).lefschetz_test();
            assert!(!rep.lefschetz_compatible);
            // theta lies in the annihilator lattice
            let theta: Vec<BigInt> = vec![BigInt::one(), BigInt::zero()];
            assert!(rep.annihilator.contains(&theta));
        }
    }

    #[test]
    fn lefschetz_identity_genus1_compatible() {
        let rep = identity_x(1).lefschetz_test();
        assert!(rep.lefschetz_compatible);
        assert!(rep.annihilator.is_empty());
    }

    #[test]
    fn wall_crossing_standard_family() {
        let x = standard_x(2);
        let theta = [BigInt::one(), BigInt::zero()];
        let beta = [BigInt::zero(), BigInt::one()];
        for a in -2..=2i64 {
            for b in -2..=2i64 {
                let xi = [BigInt::from(2 * a), BigInt::from(2 * b)];
                assert!(x.wall_crossing_term(&xi, &theta, &beta).unwrap().is_zero());
                assert!(x.wall_crossing_term(&xi, &beta, &beta).unwrap().is_zero());
            }
        }
        let odd = [BigInt::one(), BigInt::zero()];
        assert!(matches!(
            x.wall_crossing_term(&odd, &theta, &beta),
            Err(FourManError::OddClass)
        ));
    }

    #[test]
    fn sw_dimension_examples() {
        let x = standard_x(2);
        assert_eq!(x.sw_dimension(&BigInt::zero()).unwrap(), BigInt::zero());
        assert_eq!(x.sw_dimension(&BigInt::from(4)).unwrap(), BigInt::one());
        assert!(matches!(
            x.sw_dimension(&BigInt::one()),
            Err(FourManError::NotDivisible(_))
        ));
    }

    #[test]
    fn obstruction_report_standard_family() {
        for g in 2..=3 {
            let rep = standard_x(g).obstruction_report().unwrap();
            assert!(rep.sw_nonzero);
            assert!(rep.wall_crossing_trivial);
            assert_eq!(rep.psc, Verdict::Excluded);
            assert_eq!(rep.complex_structure, Verdict::Excluded);
            assert!(rep.simple_type);
            assert_eq!(rep.kappa, KodairaClass::One);
            assert_eq!(rep.canonical_coeff, BigInt::from(2 * g as i64 - 2));
        }
        let rep = standard_x(1).obstruction_report().unwrap();
        assert_eq!(rep.psc, Verdict::Excluded);
        assert_eq!(rep.kappa, KodairaClass::Zero);
        let rep = identity_x(1).obstruction_report().unwrap();
        assert_eq!(rep.psc, Verdict::Inconclusive);
    }

    #[test]
    fn right_inverse_small() {
        let rows = vec![vec![BigInt::from(2), BigInt::from(0), BigInt::from(1)]];
        let g = right_inverse_rational(&rows, 3);
        let dot: BigRational = (0..3)
            .map(|c| BigRational::from_integer(rows[0][c].clone()) * &g[c][0])
            .sum();
        assert_eq!(dot, BigRational::one());
    }
}
