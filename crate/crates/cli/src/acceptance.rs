//! The acceptance criteria and the recorded-value suite.  Each criterion is a
//! list of named checks; a criterion passes when all of its checks pass.

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Display;
use std::time::Instant;

use a3z_algebra::{expr_eval_numeric, t_closed, ConstantExpression, Factor, Numeric, ShiftedCombination, SUPPORTED_PAIRS};
use a3z_exact::{parse_rational, rat, Gaussian};
use a3z_lattice::{lattice_member, mirror, twist_phase, LatticeLabel, TwistLabel};
use a3z_relations::{
    derive_evaluation, lattice_uniform_value, rhs_part, theorem_rhs, uniform_evaluation, verify_relation, JPart,
    RelationParams, TheoremId, Verdict,
};
use a3z_series::{check_identity, eval_frak_t, eval_zeta3, IdentityId, IdentityParams, LatticeSeriesSpec, NumericValue, Precision, C};
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;

use crate::golden::{self, GoldenKind};

const REL_TOL: f64 = 1e-6;
const TIGHT_TOL: f64 = 1e-8;
const RANDOM_SEED: u64 = 0x00a3_2e7a;

#[derive(Debug, Clone)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
    /// The stated property does not hold; the check is kept and reported as failing.
    pub known_false: bool,
}

#[derive(Debug, Clone)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl Criterion {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn line(&self) -> String {
        let n = self.checks.len();
        let bad: Vec<&str> = self.failures().map(|c| c.label.as_str()).collect();
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        let mut s = format!("criterion {:>2} {status}  {} ({}/{} checks, {:.1} s)", self.id, self.title, n - bad.len(), n, self.seconds);
        if !bad.is_empty() {
            s.push_str(&format!("; failing: {}", bad.join("; ")));
        }
        s
    }

    /// Every check passes except those marked known-false, which fail.
    pub fn as_recorded(&self) -> bool {
        self.checks.iter().all(|c| c.passed != c.known_false)
    }
}

#[derive(Default)]
struct Rec {
    checks: Vec<Check>,
}

impl Rec {
    fn check(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { label: label.into(), passed, detail: detail.into(), known_false: false });
    }

    fn known_false(&mut self, label: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { label: label.into(), passed, detail: detail.into(), known_false: true });
    }

    fn ok<T, E: Display>(&mut self, label: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.check(label, false, format!("error: {e}"));
                None
            }
        }
    }

    fn exact(&mut self, label: &str, got: &ConstantExpression, key: &str) {
        let Some(want) = self.ok(label, golden::entry(key).ok_or("missing golden entry").and_then(|g| g.constant().map_err(|_| "unparsable golden entry"))) else {
            return;
        };
        let same = *got == want && got.to_string() == want.to_string();
        self.check(label, same, format!("got {got}; recorded {want}"));
    }

    fn exact_shifted(&mut self, label: &str, got: &ShiftedCombination, key: &str) {
        let Some(want) = self.ok(label, golden::entry(key).ok_or("missing golden entry").and_then(|g| g.shifted().map_err(|_| "unparsable golden entry"))) else {
            return;
        };
        let same = *got == want && got.to_string() == want.to_string();
        self.check(label, same, format!("got {got}; recorded {want}"));
    }

    /// |got − want| ≤ tol·|want|.
    fn relative(&mut self, label: &str, got: C, want: C, tol: f64) {
        let dev = (got - want).abs();
        let scale = want.abs();
        self.check(label, dev <= tol * scale, format!("deviation {dev:.3e}, relative {:.3e}, tolerance {tol:.0e}", dev / scale));
    }

    fn absolute(&mut self, label: &str, dev: f64, tol: f64) {
        self.check(label, dev <= tol, format!("residual {dev:.3e}, tolerance {tol:.0e}"));
    }
}

fn zeta3(t: [f64; 6], twist: TwistLabel, lattice: LatticeLabel, prec: &Precision) -> Result<NumericValue, a3z_series::SeriesError> {
    eval_zeta3(&LatticeSeriesSpec::new(t, twist, lattice), prec)
}

fn tuple_f64(t: [u32; 6]) -> [f64; 6] {
    t.map(|x| x as f64)
}

fn numeric(e: &ConstantExpression, prec: &Precision) -> Result<C, a3z_algebra::AlgebraError> {
    Ok(expr_eval_numeric(Numeric::Constant(e), prec)?.value)
}

fn real(c: C) -> C {
    C::real(c.re)
}

pub const TITLES: [&str; 12] = [
    "PU(4) value at (2,…,2)",
    "SO(6) value at (2,…,2)",
    "A3 evaluations for k = 1, 2",
    "λ2-twisted evaluation, k = 1",
    "SO(6) evaluation as the average of A3 and λ2",
    "λ1, λ3 and PU(4) evaluations, k = 1",
    "symbolic s-identities at p = q = a = b = c = 2",
    "closed forms of the double series",
    "identity residuals",
    "relation verification grid",
    "structural invariants",
    "parity family at (2,…,2)",
];

pub fn run_criterion(id: u8, prec: &Precision) -> Criterion {
    let start = Instant::now();
    let mut r = Rec::default();
    match id {
        1 => uniform_value(&mut r, TheoremId::PU4, LatticeLabel::Q, "pu4_all2", prec),
        2 => uniform_value(&mut r, TheoremId::SO6, LatticeLabel::L1, "so6_all2", prec),
        3 => criterion_3(&mut r, prec),
        4 => criterion_4(&mut r, prec),
        5 => criterion_5(&mut r, prec),
        6 => criterion_6(&mut r, prec),
        7 => criterion_7(&mut r),
        8 => criterion_8(&mut r, prec),
        9 => criterion_9(&mut r, prec),
        10 => criterion_10(&mut r, prec),
        11 => criterion_11(&mut r, prec),
        12 => criterion_12(&mut r, prec),
        _ => r.check("criterion id", false, format!("no criterion {id}")),
    }
    let title = TITLES.get((id as usize).wrapping_sub(1)).copied().unwrap_or("unknown");
    Criterion { id, title, checks: r.checks, seconds: start.elapsed().as_secs_f64() }
}

pub fn run_all(prec: &Precision, only: &[u8]) -> Vec<Criterion> {
    (1..=12).filter(|id| only.is_empty() || only.contains(id)).map(|id| run_criterion(id, prec)).collect()
}

fn uniform_value(r: &mut Rec, th: TheoremId, lattice: LatticeLabel, key: &str, prec: &Precision) {
    let Some(d) = r.ok("relation at s = 2", uniform_evaluation(1, th)) else { return };
    r.exact(&format!("closed form (merge coefficient {})", d.coefficient), &d.value, key);
    let (Some(v), Some(c)) = (r.ok("series", zeta3([2.0; 6], TwistLabel::Zero, lattice, prec)), r.ok("closed form numeric", numeric(&d.value, prec))) else {
        return;
    };
    r.relative("series against closed form", v.value, c, REL_TOL);
}

fn derived_against_series(r: &mut Rec, k: u32, th: TheoremId, key: &str, prec: &Precision) -> Option<ConstantExpression> {
    let d = r.ok(&format!("derive k={k} {th}"), derive_evaluation(k, th))?;
    r.exact(&format!("k={k} {th} closed form"), &d.value, key);
    let (tw, lat) = th.context();
    let v = r.ok("series", zeta3(tuple_f64(d.tuple), tw, lat, prec))?;
    let c = r.ok("closed form numeric", numeric(&d.value, prec))?;
    r.relative(&format!("k={k} {th} series against closed form"), v.value, c, REL_TOL);
    Some(d.value)
}

fn coefficient_of_zeta(e: &ConstantExpression, arg: u32) -> Option<(Gaussian, u32)> {
    e.terms.iter().find(|(m, _)| m.factors == [Factor::zeta(arg)]).map(|(m, c)| (c.clone(), m.pi_pow))
}

fn criterion_3(r: &mut Rec, prec: &Precision) {
    if let Some(v) = derived_against_series(r, 1, TheoremId::A3, "a3_k1", prec) {
        for (arg, pi, coeff) in [(11, 6, "1/63"), (13, 4, "199/30"), (15, 2, "-365"), (17, 0, "2941")] {
            let want = (Gaussian::real(parse_rational(coeff).expect("literal")), pi);
            let got = coefficient_of_zeta(&v, arg);
            r.check(format!("coefficient of π^{pi}·ζ({arg})"), got.as_ref() == Some(&want), format!("got {got:?}"));
        }
    }
    derived_against_series(r, 2, TheoremId::A3, "a3_k2", prec);
}

fn criterion_4(r: &mut Rec, prec: &Precision) {
    derived_against_series(r, 1, TheoremId::SU4Lam2, "su4_lam2_k1", prec);
}

fn criterion_5(r: &mut Rec, prec: &Precision) {
    let (Some(a), Some(b)) = (r.ok("derive A3", derive_evaluation(1, TheoremId::A3)), r.ok("derive λ2", derive_evaluation(1, TheoremId::SU4Lam2))) else {
        return;
    };
    let avg = a.value.add(&b.value).scale(&Gaussian::real(rat(1, 2)));
    r.exact("½(A3 + λ2)", &avg, "so6_k1");
    let z17 = coefficient_of_zeta(&avg, 17);
    r.check("coefficient of ζ(17)", z17 == Some((Gaussian::real(rat(36995525, 32768)), 0)), format!("got {z17:?}"));
    if let Some(d) = r.ok("derive SO6", derive_evaluation(1, TheoremId::SO6)) {
        r.check("SO6 relation gives the same value", d.value == avg, format!("{}", d.value));
    }
    let (Some(v), Some(c)) = (r.ok("series", zeta3([2.0, 3.0, 3.0, 3.0, 3.0, 3.0], TwistLabel::Zero, LatticeLabel::L1, prec)), r.ok("numeric", numeric(&avg, prec))) else {
        return;
    };
    r.relative("series against closed form", v.value, c, REL_TOL);
}

fn criterion_6(r: &mut Rec, prec: &Precision) {
    let t = [2.0, 3.0, 3.0, 3.0, 3.0, 3.0];
    let mut values = Vec::new();
    for (th, key) in [(TheoremId::SU4Lam1, "su4_lam1_k1"), (TheoremId::SU4Lam3, "su4_lam3_k1"), (TheoremId::PU4, "pu4_k1")] {
        let Some(d) = r.ok(&format!("derive {th}"), derive_evaluation(1, th)) else { return };
        r.exact(&format!("{th} closed form"), &d.value, key);
        values.push(d);
    }
    r.check("λ1 and λ3 closed forms are equal", values[0].value == values[1].value, "");
    let series = |tw, lat| zeta3(t, tw, lat, prec);
    let (Some(z1), Some(z3), Some(zq)) = (
        r.ok("series λ1", series(TwistLabel::Lam1, LatticeLabel::P)),
        r.ok("series λ3", series(TwistLabel::Lam3, LatticeLabel::P)),
        r.ok("series PU(4)", series(TwistLabel::Zero, LatticeLabel::Q)),
    ) else {
        return;
    };
    let closed: Vec<C> = values.iter().filter_map(|d| r.ok("numeric", numeric(&d.value, prec))).collect();
    if closed.len() < 3 {
        return;
    }
    r.relative("Re ζ3(t,λ1) against the closed form", real(z1.value), closed[0], REL_TOL);
    r.relative("Re ζ3(t,λ3) against the closed form", real(z3.value), closed[1], REL_TOL);
    r.relative("ζ3(t;PU(4)) against the closed form", zq.value, closed[2], REL_TOL);
    let why = "the relation pairs ζ3(t,λ) with its mirror image, which is its complex conjugate, so it fixes only the real part";
    let d13 = (z1.value - z3.value).abs();
    r.known_false(
        "numeric λ1 and λ3 values are equal",
        d13 < TIGHT_TOL,
        format!("|ζ3(t,λ1) − ζ3(t,λ3)| = {d13:.3e} (error bound {:.1e}); ζ3(t,λ3) is the conjugate of ζ3(t,λ1); {why}", z1.error_bound() + z3.error_bound()),
    );
    for (name, z) in [("λ1", &z1), ("λ3", &z3)] {
        r.known_false(
            format!("imaginary part of ζ3(t,{name}) below 1e-8"),
            z.im().abs() < TIGHT_TOL,
            format!("Im = {:.6e} (error bound {:.1e}); {why}", z.im(), z.error_bound()),
        );
    }
    r.check("imaginary part of ζ3(t;PU(4)) below 1e-8", zq.im().abs() < TIGHT_TOL, format!("Im = {:.3e}", zq.im()));
}

fn criterion_7(r: &mut Rec) {
    let p = RelationParams::uniform(2);
    let part = |j| rhs_part(j, &p);
    let (Some(j0), Some(j1), Some(j2), Some(j3)) =
        (r.ok("J0", part(JPart::J0)), r.ok("J1", part(JPart::J1)), r.ok("J2", part(JPart::J2)), r.ok("J3", part(JPart::J3)))
    else {
        return;
    };
    let g = |x: i64, y: i64| Gaussian::real(rat(x, y));
    let so6 = j0.add(&j2).scale(&g(1, 2));
    r.exact_shifted("(J0+J2)/2", &so6, "so6_all2_relation");
    r.exact_shifted("J1", &j1, "lam1_all2_relation");
    r.exact_shifted("J3", &j3, "lam3_all2_relation");
    let pu4 = j0.add(&j1.scale(&g(-1, 1))).add(&j2).add(&j3.scale(&g(-1, 1))).scale(&g(1, 4));
    r.exact_shifted("(J0−J1+J2−J3)/4", &pu4, "pu4_all2_relation");
    let has_u2 = pu4.terms.values().any(|c| c.terms.keys().any(|&(_, u)| u == 2));
    r.check("PU(4) combination carries u² terms", has_u2, "");
    for (th, want) in [(TheoremId::SO6, &so6), (TheoremId::SU4Lam1, &j1), (TheoremId::PU4, &pu4)] {
        if let Some(rhs) = r.ok("theorem_rhs", theorem_rhs(th, &p)) {
            r.check(format!("theorem_rhs({th}) agrees"), rhs == *want, "");
        }
    }
}

fn criterion_8(r: &mut Rec, prec: &Precision) {
    for (x, y) in SUPPORTED_PAIRS {
        let mut worst = 0.0f64;
        let mut err = None;
        for p in 1..=3 {
            for q in 1..=3 {
                let Ok(sc) = t_closed(p, 0, q, x, y) else {
                    err = Some(format!("no closed form for p={p} q={q}"));
                    continue;
                };
                for s in [1.5, 2.0, 2.5] {
                    match (expr_eval_numeric(Numeric::Shifted(&sc, s), prec), eval_frak_t(p, s, q, x.to_c(), y.to_c(), prec)) {
                        (Ok(a), Ok(b)) => worst = worst.max((a.value - b.value).abs()),
                        (Err(e), _) => err = Some(e.to_string()),
                        (_, Err(e)) => err = Some(e.to_string()),
                    }
                }
            }
        }
        let label = format!("(x,y) = ({x},{y})");
        match err {
            Some(e) => r.check(label, false, e),
            None => r.absolute(&label, worst, REL_TOL),
        }
    }
}

type Case = (IdentityParams, f64);

fn worst_residual<I: IntoIterator<Item = (IdentityParams, f64)>>(id: IdentityId, cases: I, prec: &Precision) -> Result<(f64, usize), String> {
    let mut worst = 0.0f64;
    let mut n = 0;
    for (params, theta) in cases {
        worst = worst.max(check_identity(id, &params, theta, prec).map_err(|e| e.to_string())?);
        n += 1;
    }
    Ok((worst, n))
}

fn criterion_9(r: &mut Rec, prec: &Precision) {
    let thetas = [0.0, FRAC_PI_2, -FRAC_PI_2, 1.0];
    let base = IdentityParams::default();
    let unit = |k: i64| C::i_pow(k);

    let fp = (1..=3).flat_map(|p| thetas.map(|th| (IdentityParams { p, ..base.clone() }, th)));
    let ber = [rat(1, 4), rat(3, 4)]
        .into_iter()
        .flat_map(|a| (1..=4).map(move |j| (IdentityParams { p: j, alpha: a.clone(), ..IdentityParams::default() }, 0.0)));
    let dr = thetas.into_iter().flat_map(|th| {
        (1..=3).flat_map(move |p| (0..4).map(move |k| (IdentityParams { p, q: 2, s: 2.5, x: unit(k), ..IdentityParams::default() }, th)))
    });
    let points = [(unit(2), unit(2), 0.0), (C::ONE, C::ONE, PI), (unit(3), unit(1), FRAC_PI_2), (unit(1), unit(3), -FRAC_PI_2)];
    let master = [RelationParams::uniform(2), RelationParams { p: 2, q: 3, a: 2, b: 3, c: 2 }]
        .into_iter()
        .flat_map(|rp| {
            points.map(|(x, y, th)| (IdentityParams { p: rp.p, q: rp.q, a: rp.a, b: rp.b, c: rp.c, s: 2.5, x, y, ..IdentityParams::default() }, th))
        });

    let cases: [(&str, IdentityId, Vec<Case>); 4] = [
        ("partial-fraction Fourier series, p = 1..3", IdentityId::FourierPfrac, fp.collect()),
        ("Bernoulli–Fourier series, α = 1/4, 3/4", IdentityId::BernoulliFourier, ber.collect()),
        ("double-series relation, θ × p × x grid", IdentityId::DoubleRelation, dr.collect()),
        ("master identity at the four relation points", IdentityId::Master, master.collect()),
    ];
    for (label, id, list) in cases {
        match worst_residual(id, list, prec) {
            Ok((w, n)) => r.check(label, w < REL_TOL, format!("worst residual {w:.3e} over {n} cases")),
            Err(e) => r.check(label, false, e),
        }
    }
}

pub const GRID_PARAMS: [RelationParams; 3] = [
    RelationParams { p: 2, q: 2, a: 2, b: 2, c: 2 },
    RelationParams { p: 2, q: 3, a: 2, b: 3, c: 2 },
    RelationParams { p: 3, q: 2, a: 3, b: 2, c: 3 },
];

fn criterion_10(r: &mut Rec, prec: &Precision) {
    for th in TheoremId::ALL {
        let mut worst = 0.0f64;
        let mut failed = Vec::new();
        for p in GRID_PARAMS {
            for s0 in [2.0, 3.0] {
                match verify_relation(th, &p, s0, prec, REL_TOL) {
                    Ok(rep) => {
                        worst = worst.max(rep.residual);
                        if !rep.passed {
                            failed.push(format!("{:?} s={s0}: residual {:.3e}", [p.p, p.q, p.a, p.b, p.c], rep.residual));
                        }
                    }
                    Err(e) => failed.push(e.to_string()),
                }
            }
        }
        r.check(format!("{th} over the grid"), failed.is_empty(), format!("worst residual {worst:.3e} {}", failed.join(", ")));
    }
    match verify_relation(TheoremId::A3, &RelationParams::uniform(3), 3.0, prec, REL_TOL) {
        Ok(rep) => r.check(
            "all-odd case (3,3,3,3,3; s = 3) is degenerate",
            rep.verdict == Verdict::Degenerate && rep.passed && rep.lhs.value.abs() < TIGHT_TOL && rep.rhs.value.abs() < TIGHT_TOL,
            format!("verdict {:?}, |lhs| = {:.3e}, |rhs| = {:.3e}", rep.verdict, rep.lhs.value.abs(), rep.rhs.value.abs()),
        ),
        Err(e) => r.check("all-odd case", false, e.to_string()),
    }
}

/// Plain box sum over m ∈ [1, n)³ using lattice membership and phases directly.
pub fn direct_box_sum(t: &[f64; 6], twist: TwistLabel, lattice: LatticeLabel, n: i64) -> (f64, f64) {
    let (mut re, mut im) = (0.0, 0.0);
    for m1 in 1..n {
        for m2 in 1..n {
            for m3 in 1..n {
                let m = [m1, m2, m3];
                if !lattice_member(lattice, m) {
                    continue;
                }
                let [a, b, c] = m.map(|x| x as f64);
                let d = a.powf(t[0]) * b.powf(t[1]) * c.powf(t[2]) * (a + b).powf(t[3]) * (b + c).powf(t[4]) * (a + b + c).powf(t[5]);
                let (pr, pi) = twist_phase(twist, m).to_f64();
                re += pr / d;
                im += pi / d;
            }
        }
    }
    (re, im)
}

const DIRECT_CUTOFF: i64 = 64;

/// Three exponent tuples drawn from a fixed seed among absolutely convergent ones.
pub fn random_tuples() -> Vec<[f64; 6]> {
    let mut rng = StdRng::seed_from_u64(RANDOM_SEED);
    let menu = [2.0, 2.5, 3.0, 3.5, 4.0];
    let mut out = Vec::new();
    while out.len() < 3 {
        let t = [0; 6].map(|_| *menu.choose(&mut rng).expect("nonempty"));
        if a3z_series::triple::check_guard(&t).is_ok() && !out.contains(&t) {
            out.push(t);
        }
    }
    out
}

fn criterion_11(r: &mut Rec, prec: &Precision) {
    let mut bad = Vec::new();
    for lat in LatticeLabel::ALL {
        for m1 in 1..=8 {
            for m2 in 1..=8 {
                for m3 in 1..=8 {
                    let m = [m1, m2, m3];
                    let mut s = Gaussian::zero();
                    for (tw, w) in lat.character_weights() {
                        s += &twist_phase(tw, m).scale(&w);
                    }
                    let want = if lattice_member(lat, m) { Gaussian::one() } else { Gaussian::zero() };
                    if s != want {
                        bad.push(format!("{lat:?} {m:?}"));
                    }
                }
            }
        }
    }
    r.check("lattice indicator as a sum of characters on [1,8]³", bad.is_empty(), bad.join(", "));

    for t in random_tuples() {
        let name = crate::pretty::tuple(&t);
        let v = |t: [f64; 6], tw, lat| zeta3(t, tw, lat, prec).map(|x| x.value);
        let get = |r: &mut Rec, t, tw, lat| r.ok(&format!("series at {name}"), v(t, tw, lat));
        let (Some(p), Some(l1), Some(l2), Some(l3), Some(so6), Some(pu4)) = (
            get(r, t, TwistLabel::Zero, LatticeLabel::P),
            get(r, t, TwistLabel::Lam1, LatticeLabel::P),
            get(r, t, TwistLabel::Lam2, LatticeLabel::P),
            get(r, t, TwistLabel::Lam3, LatticeLabel::P),
            get(r, t, TwistLabel::Zero, LatticeLabel::L1),
            get(r, t, TwistLabel::Zero, LatticeLabel::Q),
        ) else {
            return;
        };
        let half = |c: C| c.scale(a3z_series::dd::dd(0.5));
        r.absolute(&format!("SO(6) = ½(P + λ2) at {name}"), (so6 - half(p + l2)).abs(), TIGHT_TOL);
        r.absolute(&format!("PU(4) = ¼(P − λ1 + λ2 − λ3) at {name}"), (pu4 - half(half(p - l1 + l2 - l3))).abs(), TIGHT_TOL);
        let box_prec = prec.with_cutoff(DIRECT_CUTOFF as usize);
        for (tw, lat) in [(TwistLabel::Zero, LatticeLabel::L1), (TwistLabel::Zero, LatticeLabel::Q), (TwistLabel::Lam1, LatticeLabel::Q)] {
            let (re, im) = direct_box_sum(&t, tw, lat, DIRECT_CUTOFF);
            if let Some(z) = r.ok("class sums", zeta3(t, tw, lat, &box_prec)) {
                let dev = (z.value - C::from_f64(re, im)).abs();
                r.absolute(&format!("{tw} on {} by direct lattice summation at {name}", lat.group_name()), dev, TIGHT_TOL);
            }
        }
        let mt = mirror(&t);
        let (Some(mp), Some(ml3), Some(ml2), Some(mq)) = (
            get(r, mt, TwistLabel::Zero, LatticeLabel::P),
            get(r, mt, TwistLabel::Lam3, LatticeLabel::P),
            get(r, mt, TwistLabel::Lam2, LatticeLabel::P),
            get(r, mt, TwistLabel::Zero, LatticeLabel::Q),
        ) else {
            return;
        };
        r.absolute(&format!("mirror symmetry, untwisted, at {name}"), (p - mp).abs(), TIGHT_TOL);
        r.absolute(&format!("mirror exchanges λ1 and λ3 at {name}"), (l1 - ml3).abs(), TIGHT_TOL);
        r.absolute(&format!("mirror symmetry, λ2, at {name}"), (l2 - ml2).abs(), TIGHT_TOL);
        r.absolute(&format!("mirror symmetry, PU(4), at {name}"), (pu4 - mq).abs(), TIGHT_TOL);
    }
}

fn criterion_12(r: &mut Rec, prec: &Precision) {
    for lat in LatticeLabel::ALL {
        for tw in TwistLabel::ALL {
            let label = format!("ζ3((2)⁶,{tw}; {})", lat.group_name());
            let Some(v) = r.ok(&label, lattice_uniform_value(1, tw, lat)) else { continue };
            let pure = v.terms.len() == 1
                && v.terms.iter().all(|(m, c)| m.factors.is_empty() && m.pi_pow == 12 && c.is_real());
            r.check(format!("{label} is rational·π¹²"), pure, crate::pretty::constant(&v));
            if let (Some(z), Some(c)) = (r.ok(&label, zeta3([2.0; 6], tw, lat, prec)), r.ok(&label, numeric(&v, prec))) {
                r.relative(&format!("{label} against the series"), z.value, c, REL_TOL);
            }
        }
    }
}

/// Every recorded value reproduced exactly from the relations, plus the
/// text round trip of each recorded expression.
pub fn golden_suite() -> Vec<Check> {
    let mut r = Rec::default();
    for (key, e) in golden::golden() {
        match e.kind {
            GoldenKind::Constant => {
                let Some(want) = r.ok(key, e.constant()) else { continue };
                let round = a3z_algebra::parse_constant(&want.to_string()).ok() == Some(want.clone());
                r.check(format!("{key}: text round trip"), round, "");
                let got = match (e.theorem, e.k, e.twist, e.lattice) {
                    (Some(th), Some(k), _, _) => derive_evaluation(k, th).map(|d| d.value),
                    (None, None, Some(tw), Some(lat)) => lattice_uniform_value(1, tw, lat),
                    _ => {
                        r.check(key.as_str(), false, "entry has no recipe");
                        continue;
                    }
                };
                if let Some(got) = r.ok(key, got) {
                    r.exact(&format!("{key}: reproduced"), &got, key);
                }
            }
            GoldenKind::Shifted => {
                let Some(want) = r.ok(key, e.shifted()) else { continue };
                let round = a3z_algebra::parse_shifted(&want.to_string()).ok() == Some(want.clone());
                r.check(format!("{key}: text round trip"), round, "");
                let (Some(th), Some([p, q, a, b, c])) = (e.theorem, e.params) else {
                    r.check(key.as_str(), false, "entry has no recipe");
                    continue;
                };
                if let Some(got) = r.ok(key, theorem_rhs(th, &RelationParams { p, q, a, b, c })) {
                    r.exact_shifted(&format!("{key}: reproduced"), &got, key);
                }
            }
        }
    }
    r.checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn random_tuples_are_fixed_and_admissible() {
        let a = random_tuples();
        assert_eq!(a, random_tuples());
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn recorded_values_reproduce() {
        for c in golden_suite() {
            assert!(c.passed, "{}: {}", c.label, c.detail);
        }
    }

    #[test]
    fn symbolic_criterion() {
        let c = run_criterion(7, &Precision::default());
        assert!(c.passed(), "{}", c.line());
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!run_criterion(13, &Precision::default()).passed());
    }
}
