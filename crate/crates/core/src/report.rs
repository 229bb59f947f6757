//! Aggregated pipeline report for one mapping class: everything the
//! command-line front end prints, in a serialization-stable shape.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::circle_bundle::{canonical_class, kodaira_dimension, CircleBundleX, FourManError};
use crate::laurent::{LaurentPoly, VarSet};
use crate::mapping_torus::{charpoly_oracle, MappingTorusY};
use crate::surface::MappingClass;

/// A polynomial in both canonical text form and exact term form
/// (`[exponent vector, coefficient-as-string]` pairs, lexicographic).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub text: String,
    pub vars: Vec<String>,
    pub terms: Vec<(Vec<i64>, String)>,
}

impl PolyDoc {
    pub fn from_poly(p: &LaurentPoly) -> Self {
        PolyDoc {
            text: p.to_string(),
            vars: p.vars().names().to_vec(),
            terms: p
                .term_pairs()
                .into_iter()
                .map(|(e, c)| (e, c.to_string()))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub genus: usize,
    pub twist_word: String,
    /// dim ker(phi^* - 1) = 1, the hypothesis of the standard family
    pub monodromy_hypothesis: bool,
    pub b1_y: usize,
    pub h1_y_free_rank: usize,
    pub h1_y_torsion: Vec<String>,
    pub alexander_multivariable: PolyDoc,
    pub alexander_t: PolyDoc,
    pub milnor_torsion: PolyDoc,
    pub sw_y: PolyDoc,
    pub euler_class: Vec<String>,
    pub b1_x: usize,
    pub b2_x: usize,
    pub b3_x: usize,
    pub b_plus: usize,
    pub b_minus: usize,
    pub signature: i64,
    pub chi_top: i64,
    pub sw_x: PolyDoc,
    pub k_coefficient: String,
    pub k_squared: String,
    pub k_dot_omega: String,
    pub kappa: String,
    pub lefschetz_compatible: bool,
    pub annihilator: Vec<Vec<String>>,
    pub wall_crossing_trivial: bool,
    pub psc_verdict: String,
    pub complex_structure_verdict: String,
    pub sw_simple_type: bool,
    pub oracle_charpoly: PolyDoc,
    pub oracle_ratio_ok: bool,
}

/// Full pipeline on one mapping class.
pub fn build_report(mc: &MappingClass, twist_word: &str) -> Result<ReportDocument, FourManError> {
    let y = MappingTorusY::new(mc)?;
    let x = CircleBundleX::standard(y.clone());
    let gb = x.gysin_betti();
    let lef = x.lefschetz_test();
    let obs = x.obstruction_report()?;
    let sw4 = x.sw4()?;
    let milnor = y.milnor_torsion()?;
    let sw_y = y.sw3()?;
    let alex_t = y.alexander_t()?;

    let charpoly = charpoly_oracle(mc);
    let oracle_ratio_ok = charpoly_ratio_ok(&charpoly, &alex_t);

    let (b_plus, b_minus) = match x.intersection_form() {
        Ok(q) => (q.b_plus, q.b_minus),
        Err(_) => (0, 0),
    };

    Ok(ReportDocument {
        genus: mc.genus(),
        twist_word: twist_word.to_string(),
        monodromy_hypothesis: y.b1() == 2,
        b1_y: y.b1(),
        h1_y_free_rank: y.homology().free_rank,
        h1_y_torsion: y.homology().torsion.iter().map(|t| t.to_string()).collect(),
        alexander_multivariable: PolyDoc::from_poly(y.alexander_polynomial()),
        alexander_t: PolyDoc::from_poly(&alex_t),
        milnor_torsion: PolyDoc::from_poly(&milnor),
        sw_y: PolyDoc::from_poly(&sw_y),
        euler_class: x.euler_class().iter().map(|c| c.to_string()).collect(),
        b1_x: gb.b1,
        b2_x: gb.b2,
        b3_x: gb.b3,
        b_plus,
        b_minus,
        signature: gb.signature,
        chi_top: gb.euler_char,
        sw_x: PolyDoc::from_poly(&sw4.poly),
        k_coefficient: obs.canonical_coeff.to_string(),
        k_squared: obs.k_squared.to_string(),
        k_dot_omega: obs.k_dot_omega.to_string(),
        kappa: obs.kappa.to_string(),
        lefschetz_compatible: lef.lefschetz_compatible,
        annihilator: lef
            .annihilator
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect(),
        wall_crossing_trivial: obs.wall_crossing_trivial,
        psc_verdict: obs.psc.to_string(),
        complex_structure_verdict: obs.complex_structure.to_string(),
        sw_simple_type: obs.simple_type,
        oracle_charpoly: PolyDoc::from_poly(&charpoly),
        oracle_ratio_ok,
    })
}

/// Does charpoly / Delta(t) equal (t-1)^2 up to a unit?
fn charpoly_ratio_ok(charpoly: &LaurentPoly, alex_t: &LaurentPoly) -> bool {
    if alex_t.is_zero() {
        return false;
    }
    let aligned = alex_t.rename_vars(charpoly.vars());
    let Ok(ratio) = charpoly.exact_div(&aligned) else {
        return false;
    };
    let vars = charpoly.vars();
    let tm1_sq = LaurentPoly::from_term_pairs(
        vars,
        &[
            (vec![0], BigInt::from(1)),
            (vec![1], BigInt::from(-2)),
            (vec![2], BigInt::from(1)),
        ],
    );
    match (ratio.normalize_unit(), tm1_sq.normalize_unit()) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    }
}

/// Internal coherence of an assembled document; violations are returned
/// as messages (an empty list means consistent).
pub fn consistency_violations(doc: &ReportDocument) -> Vec<String> {
    let mut out = Vec::new();
    if doc.chi_top != 2 - 2 * (doc.b1_x as i64) + doc.b2_x as i64 {
        out.push(format!(
            "chi_top {} != 2 - 2 b1 + b2 = {}",
            doc.chi_top,
            2 - 2 * (doc.b1_x as i64) + doc.b2_x as i64
        ));
    }
    if doc.b3_x != doc.b1_x {
        out.push(format!("b3 {} != b1 {} (duality)", doc.b3_x, doc.b1_x));
    }
    let ksq: BigInt = doc.k_squared.parse().expect("report stores integers");
    let kw: BigInt = doc.k_dot_omega.parse().expect("report stores integers");
    match kodaira_dimension(&ksq, &kw) {
        Ok(k) if k.to_string() == doc.kappa => {}
        _ => out.push(format!(
            "kappa {} inconsistent with K^2 = {}, K·omega = {}",
            doc.kappa, doc.k_squared, doc.k_dot_omega
        )),
    }
    let svars = VarSet::new(vec!["s"]).expect("valid varset");
    let sw_x = LaurentPoly::from_term_pairs(
        &svars,
        &doc.sw_x
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), c.parse().expect("report stores integers")))
            .collect::<Vec<_>>(),
    );
    let sw4 = crate::circle_bundle::SWPolynomial4 { poly: sw_x };
    match canonical_class(&sw4) {
        Ok(top) if top.to_string() == doc.k_coefficient => {}
        _ => out.push("K coefficient disagrees with top power of SW_X".to_string()),
    }
    out
}

/// Human-readable rendering, numerically identical to the JSON content.
pub fn render_text(doc: &ReportDocument) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "genus: {}", doc.genus);
    let _ = writeln!(s, "twist word: {}", if doc.twist_word.is_empty() { "(identity)" } else { &doc.twist_word });
    let _ = writeln!(s, "monodromy hypothesis dim ker(phi*-1)=1: {}", doc.monodromy_hypothesis);
    let torsion = if doc.h1_y_torsion.is_empty() {
        String::new()
    } else {
        format!(" + torsion [{}]", doc.h1_y_torsion.join(", "))
    };
    let _ = writeln!(s, "H1(Y): Z^{}{}", doc.h1_y_free_rank, torsion);
    let _ = writeln!(s, "b1(Y): {}", doc.b1_y);
    let _ = writeln!(s, "Delta_Y (multivariable, vars {}): {}",
        doc.alexander_multivariable.vars.join(","), doc.alexander_multivariable.text);
    let _ = writeln!(s, "Delta_Y(t): {}", doc.alexander_t.text);
    let _ = writeln!(s, "Milnor torsion: {}", doc.milnor_torsion.text);
    let _ = writeln!(s, "SW_Y: {}", doc.sw_y.text);
    let _ = writeln!(s, "euler class chi: ({})", doc.euler_class.join(", "));
    let _ = writeln!(s, "b1(X): {}  b2(X): {}  b3(X): {}", doc.b1_x, doc.b2_x, doc.b3_x);
    let _ = writeln!(s, "b+: {}  b-: {}  signature: {}  chi_top: {}",
        doc.b_plus, doc.b_minus, doc.signature, doc.chi_top);
    let _ = writeln!(s, "SW_X: {}", doc.sw_x.text);
    let _ = writeln!(s, "K: {} * [fiber]  K^2: {}  K.omega: {}  kappa: {}",
        doc.k_coefficient, doc.k_squared, doc.k_dot_omega, doc.kappa);
    let _ = writeln!(s, "Lefschetz compatible: {}", doc.lefschetz_compatible);
    let ann: Vec<String> = doc.annihilator.iter().map(|r| format!("({})", r.join(", "))).collect();
    let _ = writeln!(s, "cup annihilator basis: [{}]", ann.join(", "));
    let _ = writeln!(s, "wall crossing trivial: {}", doc.wall_crossing_trivial);
    let _ = writeln!(s, "PSC metric: {}", doc.psc_verdict);
    let _ = writeln!(s, "complex structure: {}", doc.complex_structure_verdict);
    let _ = writeln!(s, "SW simple type: {}", doc.sw_simple_type);
    let _ = writeln!(s, "oracle char poly: {}", doc.oracle_charpoly.text);
    let _ = writeln!(s, "oracle ratio (t-1)^2 check: {}", doc.oracle_ratio_ok);
    s
}
