//! Acceptance gate: one test per criterion, each emitting a single
//! pass/fail line (visible with `--nocapture`, and always on failure).

use std::panic::{catch_unwind, UnwindSafe};
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use torusinv::circle_bundle::{canonical_class, CircleBundleX};
use torusinv::intlin::{snf, verify_snf, IntMatrix};
use torusinv::laurent::{LaurentPoly, VarSet};
use torusinv::mapping_torus::{
    abelianization, betti_wang, charpoly_oracle, fox_derivative, mapping_torus_presentation,
    GroupPresentation, GroupRingElem, MappingTorusY,
};
use torusinv::surface::{dehn_twist_pi1, standard_monodromy, Curve, MappingClass, SurfaceData, Word};

fn criterion(n: &str, desc: &str, f: impl FnOnce() + UnwindSafe) {
    let result = catch_unwind(f);
    let verdict = if result.is_ok() { "PASS" } else { "FAIL" };
    println!("criterion {n}: {verdict} - {desc}");
    if result.is_err() {
        panic!("criterion {n} failed: {desc}");
    }
}

fn standard_torus(g: usize) -> MappingTorusY {
    MappingTorusY::new(&standard_monodromy(g).unwrap()).unwrap()
}

fn standard_x(g: usize) -> CircleBundleX {
    CircleBundleX::standard(standard_torus(g))
}

/// `(v^2 - 3v + 1)^(g-1)` over a single variable set.
fn golden_power(vars: &VarSet, g: usize) -> LaurentPoly {
    let base = LaurentPoly::from_term_pairs(
        vars,
        &[
            (vec![0], BigInt::from(1)),
            (vec![1], BigInt::from(-3)),
            (vec![2], BigInt::from(1)),
        ],
    );
    let mut out = LaurentPoly::constant(vars, 1);
    for _ in 1..g {
        out = out.mul_ref(&base);
    }
    out
}

#[test]
fn criterion_1_golden_alexander() {
    criterion("1", "golden Alexander polynomials g=1..5 within 60s", || {
        let start = Instant::now();
        for g in 1..=5 {
            let y = standard_torus(g);
            let vars = y.abelianization_map().vars();
            assert_eq!(vars.names(), &["t".to_string(), "b1".to_string()]);
            let expected = {
                let tvars = VarSet::new(vec!["t"]).unwrap();
                let one_var = golden_power(&tvars, g);
                let pairs: Vec<(Vec<i64>, BigInt)> = one_var
                    .term_pairs()
                    .into_iter()
                    .map(|(e, c)| (vec![e[0], 0], c))
                    .collect();
                LaurentPoly::from_term_pairs(vars, &pairs)
            };
            assert_eq!(
                y.alexander_polynomial().normalize_unit().unwrap(),
                expected.normalize_unit().unwrap(),
                "genus {g}"
            );
        }
        assert!(start.elapsed().as_secs() < 60, "runtime budget exceeded");
    });
}

#[test]
fn criterion_2_sw_polynomials() {
    criterion("2", "SW_Y = Delta(t^2) and SW_X = (s^-2 - 3 + s^2)^(g-1), g=1..5", || {
        let tvars = VarSet::new(vec!["t"]).unwrap();
        let svars = VarSet::new(vec!["s"]).unwrap();
        for g in 1..=5 {
            let y = standard_torus(g);
            let milnor = y.milnor_torsion().unwrap();
            let sw_y = y.sw3().unwrap();
            // substitution t -> t^2 applied to the symmetrized Delta
            let doubled: Vec<(Vec<i64>, BigInt)> = milnor
                .term_pairs()
                .into_iter()
                .map(|(e, c)| (vec![2 * e[0]], c))
                .collect();
            assert_eq!(sw_y, LaurentPoly::from_term_pairs(&tvars, &doubled));
            // closed form (t^-2 - 3 + t^2)^(g-1)
            let expected = golden_power(&tvars, g)
                .symmetrize(0)
                .unwrap()
                .0
                .term_pairs()
                .into_iter()
                .map(|(e, c)| (vec![2 * e[0]], c))
                .collect::<Vec<_>>();
            assert_eq!(sw_y, LaurentPoly::from_term_pairs(&tvars, &expected));
            let sw_x = standard_x(g).sw4().unwrap();
            assert_eq!(sw_x.poly, sw_y.rename_vars(&svars));
        }
    });
}

#[test]
fn criterion_3_betti_suite() {
    criterion("3", "b1(Y)=2, b1(X)=b2(X)=2, b+=1, sigma=0, chi_top=0 for g=2..5", || {
        for g in 2..=5 {
            let x = standard_x(g);
            assert_eq!(x.base().b1(), 2, "b1(Y), genus {g}");
            let gb = x.gysin_betti();
            assert_eq!(gb.b1, 2, "b1(X), genus {g}");
            assert_eq!(gb.b2, 2, "b2(X), genus {g}");
            assert_eq!(gb.euler_char, 0, "chi_top, genus {g}");
            assert_eq!(gb.signature, 0, "sigma, genus {g}");
            let q = x.intersection_form().unwrap();
            assert_eq!(q.b_plus, 1, "b+, genus {g}");
        }
    });
}

#[test]
fn criterion_4_canonical_and_kodaira() {
    criterion("4", "K = (2g-2) fiber, K^2=0, K.omega=2g-2, kappa table, Noether identity", || {
        for g in 1..=5usize {
            let x = standard_x(g);
            let obs = x.obstruction_report().unwrap();
            let expected_k = BigInt::from(2 * g as i64 - 2);
            assert_eq!(canonical_class(&x.sw4().unwrap()).unwrap(), expected_k);
            assert_eq!(obs.k_squared, BigInt::from(0));
            assert_eq!(obs.k_dot_omega, expected_k);
            let kappa = obs.kappa.to_string();
            if g == 1 {
                assert_eq!(kappa, "0");
            } else {
                assert_eq!(kappa, "1");
            }
            if g >= 2 {
                let gb = x.gysin_betti();
                let q = x.intersection_form().unwrap();
                let lhs = 2 * gb.euler_char + 3 * gb.signature;
                let rhs = 9 - 4 * gb.b1 as i64 - q.b_minus as i64;
                assert_eq!(lhs, 0);
                assert_eq!(rhs, 0);
            }
        }
    });
}

#[test]
fn criterion_5_oracle_equivalence() {
    criterion("5", "char poly = (t-1)^2 (t^2-3t+1)^(g-1), ratio to Delta(t) is (t-1)^2, g=1..6", || {
        let tvars = VarSet::new(vec!["t"]).unwrap();
        let tm1_sq = LaurentPoly::from_term_pairs(
            &tvars,
            &[
                (vec![0], BigInt::from(1)),
                (vec![1], BigInt::from(-2)),
                (vec![2], BigInt::from(1)),
            ],
        );
        for g in 1..=6 {
            let mc = standard_monodromy(g).unwrap();
            let cp = charpoly_oracle(&mc);
            assert_eq!(cp, golden_power(&tvars, g).mul_ref(&tm1_sq), "genus {g}");
            let y = MappingTorusY::new(&mc).unwrap();
            let delta_t = y.alexander_t().unwrap().rename_vars(&tvars);
            let ratio = cp.exact_div(&delta_t).unwrap();
            assert_eq!(
                ratio.normalize_unit().unwrap(),
                tm1_sq.normalize_unit().unwrap(),
                "genus {g}"
            );
        }
    });
}

fn random_word(rng: &mut ChaCha8Rng, num_gens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters(
        (0..len)
            .map(|_| {
                torusinv::surface::Letter::new(rng.gen_range(0..num_gens), rng.gen_bool(0.5))
            })
            .collect(),
    )
}

fn random_poly(rng: &mut ChaCha8Rng, vars: &VarSet) -> LaurentPoly {
    let mut p = LaurentPoly::zero(vars);
    let terms = rng.gen_range(1..=3);
    for _ in 0..terms {
        let exps: Vec<i64> = (0..vars.len()).map(|_| rng.gen_range(-3..=3)).collect();
        let c = rng.gen_range(-4..=4i64);
        p = p.add_ref(&LaurentPoly::monomial(vars, exps, c));
    }
    if p.is_zero() {
        LaurentPoly::constant(vars, 1)
    } else {
        p
    }
}

#[test]
fn criterion_6_property_suites() {
    criterion("6", "five randomized property suites, 200 fixed-seed cases each", || {
        // Fox fundamental identity
        let mut rng = ChaCha8Rng::seed_from_u64(101);
        for _ in 0..200 {
            let w = random_word(&mut rng, 3, 12);
            let mut sum = GroupRingElem::zero();
            for x in 0..3 {
                sum = sum.add_ref(&fox_derivative(&w, x).mul_gen_minus_one(x));
            }
            let expected = GroupRingElem::word(w).sub_ref(&GroupRingElem::one());
            assert_eq!(sum, expected);
        }

        // SNF reconstruction, divisibility chain, unimodular transforms
        let mut rng = ChaCha8Rng::seed_from_u64(102);
        for _ in 0..200 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let m = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-9..=9)));
            let s = snf(&m);
            assert!(verify_snf(&m, &s));
        }

        // Laurent gcd: divides both, and gcd(rp, rq) ~ r gcd(p, q)
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        let vars = VarSet::new(vec!["x", "y"]).unwrap();
        for _ in 0..200 {
            let p = random_poly(&mut rng, &vars);
            let q = random_poly(&mut rng, &vars);
            let r = random_poly(&mut rng, &vars);
            let g = p.gcd(&q).unwrap();
            assert!(g.divides(&p));
            assert!(g.divides(&q));
            let big = p.mul_ref(&r).gcd(&q.mul_ref(&r)).unwrap();
            assert_eq!(
                big.normalize_unit().unwrap(),
                r.mul_ref(&g).normalize_unit().unwrap()
            );
        }

        // disjoint Dehn twists commute
        let mut rng = ChaCha8Rng::seed_from_u64(104);
        for _ in 0..200 {
            let g = rng.gen_range(2..=4);
            let surface = SurfaceData::new(g).unwrap();
            let h1 = rng.gen_range(1..=g);
            let mut h2 = rng.gen_range(1..=g);
            while h2 == h1 {
                h2 = rng.gen_range(1..=g);
            }
            let curve = |h: usize, pick: bool| if pick { Curve::A(h) } else { Curve::B(h) };
            let c1 = curve(h1, rng.gen_bool(0.5));
            let c2 = curve(h2, rng.gen_bool(0.5));
            let s1 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let s2 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let t1 = dehn_twist_pi1(c1, s1, &surface).unwrap();
            let t2 = dehn_twist_pi1(c2, s2, &surface).unwrap();
            assert_eq!(t1.compose(&t2), t2.compose(&t1));
        }

        // Wang sequence Betti number equals abelianization free rank
        let mut rng = ChaCha8Rng::seed_from_u64(105);
        for _ in 0..200 {
            let genus = rng.gen_range(1..=3);
            let len = rng.gen_range(0..=6);
            let twists: Vec<(Curve, i8)> = (0..len)
                .map(|_| {
                    let h = rng.gen_range(1..=genus);
                    let c = if rng.gen_bool(0.5) { Curve::A(h) } else { Curve::B(h) };
                    (c, if rng.gen_bool(0.5) { 1 } else { -1 })
                })
                .collect();
            let mc = MappingClass::new(genus, twists).unwrap();
            let p = mapping_torus_presentation(genus, &mc);
            let (spec, _) = abelianization(&p);
            assert_eq!(betti_wang(&mc), spec.free_rank);
        }
    });
}

#[test]
fn criterion_7a_annihilator_exactly_theta() {
    criterion("7a", "cup annihilator is exactly the span of the circle class, g=2..5", || {
        for g in 2..=5 {
            let rep = standard_x(g).lefschetz_test();
            assert!(!rep.lefschetz_compatible, "genus {g}");
            let theta = vec![BigInt::from(1), BigInt::from(0)];
            assert_eq!(
                rep.annihilator,
                vec![theta],
                "genus {g}: annihilator is not exactly span(theta)"
            );
        }
    });
}

#[test]
fn criterion_7b_wall_crossing_and_obstructions() {
    criterion("7b", "wall crossing vanishes on the even grid; PSC and complex structure excluded, g=2..5", || {
        for g in 2..=5 {
            let x = standard_x(g);
            let rep = x.lefschetz_test();
            assert!(!rep.lefschetz_compatible, "genus {g}");
            let theta = vec![BigInt::from(1), BigInt::from(0)];
            assert!(rep.annihilator.contains(&theta), "genus {g}");
            let basis = [
                [BigInt::from(1), BigInt::from(0)],
                [BigInt::from(0), BigInt::from(1)],
            ];
            for a in (-4..=4i64).step_by(2) {
                for b in (-4..=4i64).step_by(2) {
                    let xi = [BigInt::from(a), BigInt::from(b)];
                    for y1 in &basis {
                        for y2 in &basis {
                            assert_eq!(
                                x.wall_crossing_term(&xi, y1, y2).unwrap(),
                                BigInt::from(0)
                            );
                        }
                    }
                }
            }
            let obs = x.obstruction_report().unwrap();
            assert!(obs.sw_nonzero);
            assert!(obs.wall_crossing_trivial);
            assert_eq!(obs.psc.to_string(), "excluded");
            assert_eq!(obs.complex_structure.to_string(), "excluded");
        }
    });
}

#[test]
fn criterion_8_distinguishing_manifolds() {
    criterion("8", "SW_X polynomials pairwise distinct for g=2..5", || {
        let polys: Vec<LaurentPoly> = (2..=5)
            .map(|g| standard_x(g).sw4().unwrap().poly)
            .collect();
        for i in 0..polys.len() {
            for j in i + 1..polys.len() {
                assert_ne!(polys[i], polys[j], "g={} vs g={}", i + 2, j + 2);
            }
        }
    });
}

#[test]
fn acceptance_fixture_trefoil_library_level() {
    // complements the end-to-end criterion 9 check in the cli crate
    let p = GroupPresentation::parse("gens: x y\nx y x y^-1 x^-1 y^-1\n").unwrap();
    let (_, amap) = abelianization(&p);
    let alex = torusinv::mapping_torus::alexander_matrix(&p, &amap);
    let e1 = torusinv::mapping_torus::first_elementary_ideal(&alex).unwrap();
    let expected = LaurentPoly::from_term_pairs(
        amap.vars(),
        &[
            (vec![0], BigInt::from(1)),
            (vec![1], BigInt::from(-1)),
            (vec![2], BigInt::from(1)),
        ],
    );
    assert_eq!(e1, expected);
}
