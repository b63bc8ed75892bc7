//! Named verification suites.
//!
//! Each suite draws `trials` random cases from a generator seeded by the
//! caller's seed and the suite name, checks one identity family exactly,
//! and counts passing and failing checks. The suite names follow the
//! statements they check.

use std::fmt::Debug;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::albert::{cross, det_j, jordan_mul, jordan_mul_closed_form, pair, trilinear_d, trilinear_d_expanded, AlbertElem, JBasis, DIM};
use crate::error::{AlbertError, Result};
use crate::gaction::GroupElem;
use crate::isotope::{self, circ_a_springer, circ_a_tform, gram_qa, q_a, t_form, t_form_e_expanded};
use crate::octonion::Oct;
use crate::pvs::{cubic_of, delta, w_point, BinaryCubic, VPoint};
use crate::rat::{self, frac, int, Rat};
use crate::sample;
use crate::smap::{self, circ_x, phi1_at_w_reference, phi2_at_w_reference, s_map, PhiKernel};

/// Suite names with a one-line statement of what each checks.
pub const SUITES: &[(&str, &str)] = &[
    ("octonion-composition", "norm(xy) = norm(x)norm(y), alternativity, x² − tr(x)x + norm(x) = 0"),
    ("freudenthal-anchors", "det(e) = 1, F_w = v₁v₂(v₁−v₂), Δ(w) = 1, D(e,e,X) = Tr(X)/3, two forms of ∘ and D agree"),
    ("cross-duality", "⟨X×Y, Z⟩ = 3D(X,Y,Z), X∘(X×X) = det(X)e"),
    ("prop-phi1", "−18Φ₁,w(X,Y) = X∘Y − ½Tr(Y)X − ½Tr(X)Y"),
    ("prop-phi2", "27Φ₂,w(X,Y) = Tr(Y)X + Tr(X)Y"),
    ("prop-equivariant-s", "S_w(X,Y) = X∘Y and S_gx(gX,gY) = c³det(g₂)⁴ g(S_x(X,Y))"),
    ("lemma-equivariant-1", "Φᵢ,gx(gX,gY) = c³det(g₂)⁴ g(Φᵢ,x(X,Y)), Φᵢ,(b,a) = Φᵢ,(a,b)"),
    ("thm-main-th1", "μ_g(X) ∘_gx μ_g(Y) = μ_g(X ∘_x Y)"),
    ("prop-equiv-from-j", "T_e(X,Y,Z) = Tr((X∘Y)∘Z) = Tr(X∘(Y∘Z)) = coordinate expansion, T_ga(gX,gY,gZ) = c³T_a"),
    ("thm-main-th2", "T-based ∘_a equals Springer's ∘_a, and g(X∘Y) = gX ∘_g(e) gY"),
    ("homogeneity", "S_tx = t⁸S_x, T_ta = t⁶T_a, Q_ta = t⁴Q_a, Δ(tx) = t¹²Δ(x)"),
    ("chi-law", "Δ(gx) = c⁴det(g₂)⁶Δ(x), det(gX) = c·det(X), μ and χ are homomorphisms"),
    ("isotope-jordan", "∘_x and ∘_a are commutative, satisfy the Jordan identity, and have a unit"),
    ("cor-gtilde", "g((X×Y)×(Z×W)) = c⁻¹(gX×gY)×(gZ×gW)"),
    ("lemma-tilde", "⟨gX, g̃Y⟩ = ⟨X,Y⟩, g̃̃ = g, g(X×Y) = g̃X×g̃Y when c = 1"),
    ("error-paths", "NotSemistable, SingularPoint and SingularMatrix are raised where expected"),
];

const MAX_RECORDED_FAILURES: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    /// The first few failure messages.
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

struct Ctx {
    rng: ChaCha8Rng,
    report: SuiteReport,
}

impl Ctx {
    fn new(name: &str, seed: u64) -> Self {
        // FNV-1a over the name keeps suites independent under one seed.
        let tag = name.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3));
        Ctx {
            rng: ChaCha8Rng::seed_from_u64(seed ^ tag),
            report: SuiteReport { name: name.to_string(), passed: 0, failed: 0, failures: Vec::new() },
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.report.passed += 1;
        } else {
            self.report.failed += 1;
            if self.report.failures.len() < MAX_RECORDED_FAILURES {
                self.report.failures.push(what());
            }
        }
    }

    fn eq<T: PartialEq + Debug>(&mut self, lhs: T, rhs: T, what: &str) {
        let ok = lhs == rhs;
        self.check(ok, || format!("{what}: {lhs:?} != {rhs:?}"));
    }

    fn albert(&mut self) -> AlbertElem {
        sample::albert(&mut self.rng)
    }

    fn group(&mut self) -> GroupElem {
        sample::group_elem(&mut self.rng, 3)
    }
}

/// Runs one suite by name.
pub fn run_suite(name: &str, seed: u64, trials: usize) -> Result<SuiteReport> {
    let run: fn(&mut Ctx, usize) = match name {
        "octonion-composition" => octonion_composition,
        "freudenthal-anchors" => freudenthal_anchors,
        "cross-duality" => cross_duality,
        "prop-phi1" => prop_phi1,
        "prop-phi2" => prop_phi2,
        "prop-equivariant-s" => prop_equivariant_s,
        "lemma-equivariant-1" => lemma_equivariant_1,
        "thm-main-th1" => thm_main_th1,
        "prop-equiv-from-j" => prop_equiv_from_j,
        "thm-main-th2" => thm_main_th2,
        "homogeneity" => homogeneity,
        "chi-law" => chi_law,
        "isotope-jordan" => isotope_jordan,
        "cor-gtilde" => cor_gtilde,
        "lemma-tilde" => lemma_tilde,
        "error-paths" => error_paths,
        other => return Err(AlbertError::Parse(format!("unknown suite {other:?}"))),
    };
    let mut ctx = Ctx::new(name, seed);
    run(&mut ctx, trials);
    Ok(ctx.report)
}

/// Runs every suite in [`SUITES`] order.
pub fn run_all(seed: u64, trials: usize) -> Vec<SuiteReport> {
    SUITES.iter().map(|(name, _)| run_suite(name, seed, trials).expect("listed suite exists")).collect()
}

fn octonion_composition(cx: &mut Ctx, trials: usize) {
    for i in 0..8 {
        for j in 0..8 {
            let (x, y) = (Oct::basis(i), Oct::basis(j));
            cx.eq(x.mul(&y).norm(), x.norm() * y.norm(), &format!("basis ({i},{j}) norm"));
        }
    }
    for t in 0..trials {
        let (x, y) = (sample::oct(&mut cx.rng), sample::oct(&mut cx.rng));
        cx.eq(x.mul(&y).norm(), x.norm() * y.norm(), &format!("trial {t} norm"));
        cx.eq(x.mul(&x).mul(&y), x.mul(&x.mul(&y)), &format!("trial {t} left alternative"));
        cx.eq(y.mul(&x).mul(&x), y.mul(&x.mul(&x)), &format!("trial {t} right alternative"));
        cx.eq(x.mul(&y).trace(), y.mul(&x).trace(), &format!("trial {t} tr(xy) = tr(yx)"));
        let quad = &(&x.mul(&x) - &x.scale(&x.trace())) + &Oct::scalar(x.norm());
        cx.check(quad.is_zero(), || format!("trial {t} quadratic relation"));
    }
}

fn freudenthal_anchors(cx: &mut Ctx, trials: usize) {
    let e = AlbertElem::identity();
    let w = w_point();
    cx.eq(det_j(&e), int(1), "det(e)");
    cx.eq(cubic_of(&w), BinaryCubic { c30: int(0), c21: int(1), c12: int(-1), c03: int(0) }, "F_w");
    cx.eq(delta(&w), int(1), "Δ(w)");
    cx.eq(trilinear_d(&e, &e, &e), int(1), "D(e,e,e)");
    cx.eq(trilinear_d(&w.a, &w.a, &w.b), frac(1, 3), "D(w₁,w₁,w₂)");
    for t in 0..trials {
        let (x, y, z) = (cx.albert(), cx.albert(), cx.albert());
        cx.eq(trilinear_d(&e, &e, &x), x.trace() * frac(1, 3), &format!("trial {t} D(e,e,X)"));
        cx.eq(jordan_mul(&x, &y), jordan_mul_closed_form(&x, &y), &format!("trial {t} ∘ closed form"));
        cx.eq(trilinear_d(&x, &y, &z), trilinear_d_expanded(&x, &y, &z), &format!("trial {t} D expansion"));
    }
}

fn cross_duality(cx: &mut Ctx, trials: usize) {
    let e = AlbertElem::identity();
    cx.eq(cross(&e, &e), e.clone(), "e×e");
    for t in 0..trials {
        let (x, y, z) = (cx.albert(), cx.albert(), cx.albert());
        cx.eq(pair(&cross(&x, &y), &z), int(3) * trilinear_d(&x, &y, &z), &format!("trial {t} duality"));
        cx.eq(jordan_mul(&x, &cross(&x, &x)), e.scale(&det_j(&x)), &format!("trial {t} X∘(X×X)"));
    }
}

fn prop_phi1(cx: &mut Ctx, trials: usize) {
    let k = PhiKernel::new(&w_point());
    for t in 0..trials {
        let (x, y) = (cx.albert(), cx.albert());
        cx.eq(k.phi1(&x, &y).scale(&int(-18)), phi1_at_w_reference(&x, &y), &format!("trial {t}"));
    }
}

fn prop_phi2(cx: &mut Ctx, trials: usize) {
    let k = PhiKernel::new(&w_point());
    for t in 0..trials {
        let (x, y) = (cx.albert(), cx.albert());
        cx.eq(k.phi2(&x, &y).scale(&int(27)), phi2_at_w_reference(&x, &y), &format!("trial {t}"));
    }
}

fn prop_equivariant_s(cx: &mut Ctx, trials: usize) {
    let kw = PhiKernel::new(&w_point());
    for t in 0..trials {
        let (x, y) = (cx.albert(), cx.albert());
        cx.eq(kw.s(&x, &y), jordan_mul(&x, &y), &format!("trial {t} S_w"));
        let g = cx.group();
        let p = sample::vpoint(&mut cx.rng);
        let factor = rat::pow(&g.c, 3) * rat::pow(&g.det_g2(), 4);
        let lhs = s_map(&g.act_v(&p), &g.apply(&x), &g.apply(&y));
        cx.eq(lhs, g.apply(&s_map(&p, &x, &y)).scale(&factor), &format!("trial {t} S equivariance"));
    }
}

fn lemma_equivariant_1(cx: &mut Ctx, trials: usize) {
    for t in 0..trials {
        let g = cx.group();
        let p = sample::vpoint(&mut cx.rng);
        let (x, y) = (cx.albert(), cx.albert());
        let factor = rat::pow(&g.c, 3) * rat::pow(&g.det_g2(), 4);
        let (k, kg) = (PhiKernel::new(&p), PhiKernel::new(&g.act_v(&p)));
        let (gx, gy) = (g.apply(&x), g.apply(&y));
        cx.eq(kg.phi1(&gx, &gy), g.apply(&k.phi1(&x, &y)).scale(&factor), &format!("trial {t} Φ₁"));
        cx.eq(kg.phi2(&gx, &gy), g.apply(&k.phi2(&x, &y)).scale(&factor), &format!("trial {t} Φ₂"));
        let swapped = PhiKernel::new(&VPoint::new(p.b.clone(), p.a.clone()));
        cx.eq(swapped, k, &format!("trial {t} (b,a) vs (a,b)"));
    }
}

fn thm_main_th1(cx: &mut Ctx, trials: usize) {
    for t in 0..trials {
        let g = cx.group();
        let p = if t == 0 { w_point() } else { sample::semistable(&mut cx.rng) };
        let (x, y) = (cx.albert(), cx.albert());
        let mu = g.mu();
        let lhs = circ_x(&g.act_v(&p), &mu.apply(&x), &mu.apply(&y));
        let rhs = circ_x(&p, &x, &y).map(|z| mu.apply(&z));
        cx.eq(lhs, rhs, &format!("trial {t}"));
    }
}

fn prop_equiv_from_j(cx: &mut Ctx, trials: usize) {
    let e = AlbertElem::identity();
    for t in 0..trials {
        let (x, y, z) = (cx.albert(), cx.albert(), cx.albert());
        let te = t_form(&e, &x, &y, &z);
        cx.eq(te.clone(), jordan_mul(&jordan_mul(&x, &y), &z).trace(), &format!("trial {t} Tr((X∘Y)∘Z)"));
        cx.eq(te.clone(), jordan_mul(&x, &jordan_mul(&y, &z)).trace(), &format!("trial {t} Tr(X∘(Y∘Z))"));
        cx.eq(te, t_form_e_expanded(&x, &y, &z), &format!("trial {t} expansion"));
        let g = cx.group();
        let a = sample::albert_small(&mut cx.rng);
        let lhs = t_form(&g.apply(&a), &g.apply(&x), &g.apply(&y), &g.apply(&z));
        cx.eq(lhs, rat::pow(&g.c, 3) * t_form(&a, &x, &y, &z), &format!("trial {t} T equivariance"));
    }
}

fn thm_main_th2(cx: &mut Ctx, trials: usize) {
    let e = AlbertElem::identity();
    for t in 0..trials {
        let a = sample::invertible(&mut cx.rng);
        let (x, y) = (cx.albert(), cx.albert());
        cx.eq(circ_a_tform(&a, &x, &y), circ_a_springer(&a, &x, &y), &format!("trial {t} T-based vs Springer"));
        let g = cx.group();
        let ga = g.apply(&e);
        let expected = Ok(g.apply(&jordan_mul(&x, &y)));
        cx.eq(circ_a_tform(&ga, &g.apply(&x), &g.apply(&y)), expected, &format!("trial {t} a = g(e)"));
    }
}

fn homogeneity(cx: &mut Ctx, trials: usize) {
    for (t, s) in (0..trials).zip([int(2), int(3), frac(-1, 2)].into_iter().cycle()) {
        let p = sample::vpoint(&mut cx.rng);
        let a = sample::albert_small(&mut cx.rng);
        let (x, y, z) = (cx.albert(), cx.albert(), cx.albert());
        let sp = p.scale(&s);
        let sa = a.scale(&s);
        cx.eq(s_map(&sp, &x, &y), s_map(&p, &x, &y).scale(&rat::pow(&s, 8)), &format!("trial {t} S"));
        cx.eq(t_form(&sa, &x, &y, &z), t_form(&a, &x, &y, &z) * rat::pow(&s, 6), &format!("trial {t} T"));
        cx.eq(q_a(&sa, &x, &y), q_a(&a, &x, &y) * rat::pow(&s, 4), &format!("trial {t} Q"));
        cx.eq(delta(&sp), delta(&p) * rat::pow(&s, 12), &format!("trial {t} Δ"));
    }
}

fn chi_law(cx: &mut Ctx, trials: usize) {
    let generators = [
        GroupElem::scalar(int(2)),
        GroupElem::scalar(frac(-1, 3)),
        GroupElem::diag_conj(int(2), int(-1), frac(1, 3)),
        GroupElem::perm([1, 0, 2]),
        GroupElem::perm([1, 2, 0]),
        GroupElem::gl2([[int(1), int(2)], [int(0), int(3)]]),
        GroupElem::gl2([[int(0), int(1)], [int(1), int(0)]]),
    ];
    let generators: Vec<GroupElem> = generators.into_iter().map(|g| g.expect("valid generator")).collect();
    for (n, g) in generators.iter().enumerate() {
        let p = sample::vpoint(&mut cx.rng);
        cx.eq(delta(&g.act_v(&p)), g.chi() * delta(&p), &format!("generator {n} χ"));
    }
    for t in 0..trials {
        let (g, h) = (cx.group(), cx.group());
        let p = sample::vpoint(&mut cx.rng);
        let x = cx.albert();
        cx.eq(delta(&g.act_v(&p)), g.chi() * delta(&p), &format!("trial {t} χ"));
        cx.check(g.preserves_det_at(&x), || format!("trial {t} det(gX) = c det(X)"));
        let gh = &g * &h;
        cx.eq(gh.chi(), g.chi() * h.chi(), &format!("trial {t} χ(gh)"));
        cx.eq(gh.mu(), &g.mu() * &h.mu(), &format!("trial {t} μ(gh)"));
    }
}

fn isotope_jordan(cx: &mut Ctx, trials: usize) {
    for t in 0..trials {
        let p = sample::semistable(&mut cx.rng);
        let k = PhiKernel::new(&p);
        let inv = delta(&p).recip();
        let mx = |u: &AlbertElem, v: &AlbertElem| k.s(u, v).scale(&inv);
        jordan_checks(cx, &mx, &format!("trial {t} ∘_x"));

        let a = sample::invertible(&mut cx.rng);
        let scale = rat::pow(&det_j(&a), -4);
        let ma = |u: &AlbertElem, v: &AlbertElem| isotope::phi_a(&a, u, v).scale(&scale);
        jordan_checks(cx, &ma, &format!("trial {t} ∘_a"));
    }
    // Units are found by solving, not assumed.
    let p = sample::semistable(&mut cx.rng);
    let unit = smap::isotope_tensor(&p).ok().and_then(|m| m.unit());
    cx.check(unit.is_some(), || "∘_x has no unit".into());
    let a = sample::invertible(&mut cx.rng);
    let unit = isotope::springer_tensor(&a).ok().and_then(|m| m.unit());
    cx.check(unit.is_some(), || "∘_a has no unit".into());
}

fn jordan_checks(cx: &mut Ctx, m: &dyn Fn(&AlbertElem, &AlbertElem) -> AlbertElem, what: &str) {
    let (u, v) = (cx.albert(), cx.albert());
    cx.eq(m(&u, &v), m(&v, &u), &format!("{what} commutative"));
    let uu = m(&u, &u);
    cx.eq(m(&uu, &m(&u, &v)), m(&u, &m(&uu, &v)), &format!("{what} Jordan identity"));
}

fn cor_gtilde(cx: &mut Ctx, trials: usize) {
    for t in 0..trials {
        let g = cx.group();
        let (x, y, z, w) = (cx.albert(), cx.albert(), cx.albert(), cx.albert());
        let lhs = g.apply(&cross(&cross(&x, &y), &cross(&z, &w)));
        let rhs = cross(&cross(&g.apply(&x), &g.apply(&y)), &cross(&g.apply(&z), &g.apply(&w)));
        cx.eq(lhs, rhs.scale(&g.c.recip()), &format!("trial {t}"));
    }
}

fn lemma_tilde(cx: &mut Ctx, trials: usize) {
    for t in 0..trials {
        let g = cx.group();
        let Ok(gt) = g.tilde() else {
            cx.check(false, || format!("trial {t} tilde failed"));
            continue;
        };
        let (x, y) = (cx.albert(), cx.albert());
        cx.eq(pair(&g.apply(&x), &gt.apply(&y)), pair(&x, &y), &format!("trial {t} adjoint"));
        cx.eq(gt.tilde().ok().as_ref(), Some(&g), &format!("trial {t} order 2"));
        // Normalize to c = 1 when c is a rational cube.
        let h = match rational_cube_root(&g.c) {
            Some(r) => &GroupElem::scalar(r.recip()).expect("nonzero") * &g,
            None => continue,
        };
        let ht = h.tilde().expect("invertible");
        cx.eq(h.apply(&cross(&x, &y)), cross(&ht.apply(&x), &ht.apply(&y)), &format!("trial {t} g(X×Y)"));
        cx.eq(ht.apply(&cross(&x, &y)), cross(&h.apply(&x), &h.apply(&y)), &format!("trial {t} g̃(X×Y)"));
    }
}

fn rational_cube_root(c: &Rat) -> Option<Rat> {
    let root = |n: &num_bigint::BigInt| {
        let r = n.cbrt();
        (&r * &r * &r == *n).then_some(r)
    };
    Some(Rat::new(root(c.numer())?, root(c.denom())?))
}

fn error_paths(cx: &mut Ctx, trials: usize) {
    let e = AlbertElem::identity();
    let degenerate = VPoint::new(e.clone(), AlbertElem::zero());
    cx.eq(circ_x(&degenerate, &e, &e), Err(AlbertError::NotSemistable), "circ_x at (e, 0)");
    cx.eq(smap::isotope_tensor(&degenerate).err(), Some(AlbertError::NotSemistable), "isotope_tensor at (e, 0)");
    let singular = AlbertElem::diag_i(0, 1, 1);
    cx.eq(circ_a_tform(&singular, &e, &e), Err(AlbertError::SingularPoint), "T-based ∘_a at det 0");
    cx.eq(circ_a_springer(&singular, &e, &e), Err(AlbertError::SingularPoint), "Springer ∘_a at det 0");
    let zeros = vec![rat::zero(); DIM];
    let gram_err = isotope::solve_exact(&gram_qa(&singular), &zeros).err();
    cx.check(matches!(gram_err, Some(AlbertError::SingularMatrix { .. })), || format!("Gram at det 0: {gram_err:?}"));
    for t in 0..trials {
        let a = cx.albert();
        let p = VPoint::new(a.clone(), a.scale(&sample::rat(&mut cx.rng)));
        cx.eq(circ_x(&p, &e, &e), Err(AlbertError::NotSemistable), &format!("trial {t} collinear point"));
        // Every basis element has determinant zero.
        let b = JBasis::standard().get(t % DIM);
        cx.eq(circ_a_springer(b, &e, &e), Err(AlbertError::SingularPoint), &format!("trial {t} basis element"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_listed_suite_passes_briefly() {
        for report in run_all(1, 3) {
            assert!(report.ok(), "{report:?}");
            assert!(report.passed > 0, "{} ran no checks", report.name);
        }
    }

    #[test]
    fn unknown_suite_is_a_parse_error() {
        assert!(matches!(run_suite("nope", 0, 1), Err(AlbertError::Parse(_))));
    }

    #[test]
    fn deterministic_for_a_seed() {
        assert_eq!(run_suite("prop-phi1", 5, 4).unwrap(), run_suite("prop-phi1", 5, 4).unwrap());
    }
}
