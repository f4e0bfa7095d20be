//! Residuals of the θ-parameterised identities, both sides summed numerically.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use a3z_exact::{bernoulli_poly, binomial, BigRational};

use crate::complex::C;
use crate::dd::{dd, from_rational, inv_pow, pi, to_f64, Dd};
use crate::double::frak_t_with;
use crate::oned::{eval_phi, polylog, tail_scaled, two_sided, Tail};
use crate::par::{map_range, Schedule};
use crate::value::{Precision, SeriesError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IdentityId {
    FourierPfrac,
    BernoulliFourier,
    DoubleRelation,
    Master,
}

impl IdentityId {
    pub const ALL: [IdentityId; 4] =
        [IdentityId::FourierPfrac, IdentityId::BernoulliFourier, IdentityId::DoubleRelation, IdentityId::Master];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::FourierPfrac => "fourier_pfrac",
            IdentityId::BernoulliFourier => "bernoulli_fourier",
            IdentityId::DoubleRelation => "double_relation",
            IdentityId::Master => "master",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = SeriesError;
    fn from_str(s: &str) -> Result<Self, SeriesError> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| SeriesError::Domain(format!("unknown identity '{s}'")))
    }
}

/// Parameters shared by the four identities; each reads the fields it needs.
/// `p` doubles as the index j of the Bernoulli–Fourier series.
#[derive(Debug, Clone, PartialEq)]
pub struct IdentityParams {
    pub p: u32,
    pub q: u32,
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub s: f64,
    pub x: C,
    pub y: C,
    pub alpha: BigRational,
}

impl Default for IdentityParams {
    fn default() -> Self {
        IdentityParams {
            p: 2,
            q: 2,
            a: 2,
            b: 2,
            c: 2,
            s: 2.5,
            x: C::ONE,
            y: C::ONE,
            alpha: BigRational::new(1.into(), 4.into()),
        }
    }
}

fn phi_const(n: u32, prec: &Precision) -> Result<Dd, SeriesError> {
    match n {
        0 => Ok(dd(-0.5)),
        _ => Ok(eval_phi(n as f64, prec)?.value.re),
    }
}

/// φ(n)ε_n: zero for odd n.
fn phi_eps(n: u32, prec: &Precision) -> Result<Dd, SeriesError> {
    if n % 2 == 1 {
        Ok(dd(0.0))
    } else {
        phi_const(n, prec)
    }
}

/// (iθ)^ξ/ξ! for ξ = 0..=n.
fn theta_powers(theta: Dd, n: u32) -> Vec<C> {
    let it = C::new(dd(0.0), theta);
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut t = C::ONE;
    for k in 0..=n {
        out.push(t);
        t = (t * it).scale(dd(1.0) / (k + 1) as f64);
    }
    out
}

fn binom(n: i64, k: i64) -> Dd {
    dd(a3z_exact::rational_to_f64(&BigRational::from_integer(binomial(n, k))))
}

fn sign(e: i64) -> f64 {
    if e.rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

pub fn check_identity(id: IdentityId, params: &IdentityParams, theta: f64, prec: &Precision) -> Result<f64, SeriesError> {
    if !(-std::f64::consts::PI - 1e-12..=std::f64::consts::PI + 1e-12).contains(&theta) {
        return Err(SeriesError::Domain(format!("theta = {theta} outside [-pi, pi]")));
    }
    match id {
        IdentityId::FourierPfrac => fourier_pfrac(params.p, dd(theta), prec),
        IdentityId::BernoulliFourier => bernoulli_fourier(params.p, &params.alpha, prec),
        IdentityId::DoubleRelation => double_relation(params, dd(theta), prec),
        IdentityId::Master => master(params, dd(theta), prec),
    }
}

/// Λ_p(−e^{iθ}) against 2Σ_j φ(p−j)ε_{p−j}(iθ)^j/j!.
fn fourier_pfrac(p: u32, theta: Dd, prec: &Precision) -> Result<f64, SeriesError> {
    let lhs = two_sided(p as i64, -C::cis(theta), prec)?;
    let tp = theta_powers(theta, p);
    let mut rhs = C::ZERO;
    for j in 0..=p {
        rhs += tp[j as usize].scale(phi_eps(p - j, prec)? * 2.0);
    }
    Ok((lhs.value - rhs).abs())
}

/// Λ_j(e^{2πiα}) against −B_j(α)(2πi)^j/j!.
fn bernoulli_fourier(j: u32, alpha: &BigRational, prec: &Precision) -> Result<f64, SeriesError> {
    let zero = BigRational::from_integer(0.into());
    let one = BigRational::from_integer(1.into());
    if *alpha < zero || *alpha >= one || j == 0 || (j == 1 && *alpha == zero) {
        return Err(SeriesError::Domain(format!("Bernoulli-Fourier needs j >= 1 and alpha in (0,1) (or [0,1) for j >= 2), got j={j}, alpha={alpha}")));
    }
    let a = from_rational(alpha);
    let lhs = two_sided(j as i64, C::cis(pi() * 2.0 * a), prec)?;
    let b = from_rational(&bernoulli_poly(j as usize, alpha));
    let mut f = dd(1.0);
    for k in 1..=j {
        f = f * (pi() * 2.0) / k as f64;
    }
    let rhs = C::i_pow(j as i64).scale(-b * f);
    Ok((lhs.value - rhs).abs())
}

/// Lemma: 𝔗(p,s,q; −e^{iθ}, −xe^{iθ}) − 2Σ… + 2Σ… = 0.
fn double_relation(pr: &IdentityParams, theta: Dd, prec: &Precision) -> Result<f64, SeriesError> {
    let (p, q, s) = (pr.p, pr.q, dd(pr.s));
    let e = C::cis(theta);
    let lhs1 = frak_t_with(p, s, q, -e, -(pr.x * e), prec, Schedule::default())?;
    let tp = theta_powers(theta, p.max(q));
    let mut total = lhs1.value;
    for j in 0..=p {
        let w = phi_eps(p - j, prec)?;
        if w == dd(0.0) {
            continue;
        }
        for xi in 0..=j {
            let k = (j - xi) as i64;
            let c = binom(q as i64 - 1 + k, q as i64 - 1) * sign(k);
            let li = polylog(s + (q as i64 + k) as f64, -(pr.x * e), prec)?;
            total -= (li.value * tp[xi as usize]).scale(w * c * 2.0);
        }
    }
    for j in 0..=q {
        let w = phi_eps(q - j, prec)?;
        if w == dd(0.0) {
            continue;
        }
        for xi in 0..=j {
            let k = (j - xi) as i64;
            let c = binom(p as i64 - 1 + k, p as i64 - 1) * sign(p as i64 - 1);
            let li = polylog(s + (p as i64 + k) as f64, pr.x, prec)?;
            total += (li.value * tp[xi as usize]).scale(w * c * 2.0);
        }
    }
    Ok(total.abs())
}

type TKey = (u32, u64, u32, [u64; 4]);

struct FrakCache<'a> {
    prec: &'a Precision,
    map: HashMap<TKey, C>,
}

impl FrakCache<'_> {
    fn get(&mut self, p: u32, s: Dd, q: u32, x: C, y: C) -> Result<C, SeriesError> {
        let key = (p, to_f64(s).to_bits(), q, [to_f64(x.re), to_f64(x.im), to_f64(y.re), to_f64(y.im)].map(f64::to_bits));
        if let Some(v) = self.map.get(&key) {
            return Ok(*v);
        }
        let v = frak_t_with(p, s, q, x, y, self.prec, Schedule::default())?.value;
        self.map.insert(key, v);
        Ok(v)
    }
}

/// Right-hand side of the master identity: four groups of 𝔗 values.
pub fn master_rhs(pr: &IdentityParams, theta: Dd, prec: &Precision) -> Result<C, SeriesError> {
    let (p, q, a, b, c) = (pr.p as i64, pr.q as i64, pr.a as i64, pr.b as i64, pr.c as i64);
    let s = dd(pr.s);
    let e = C::cis(theta);
    let tp = theta_powers(theta, (p.max(a).max(c)) as u32);
    let mut cache = FrakCache { prec, map: HashMap::new() };
    let mut total = C::ZERO;
    let u = |v: i64| v as u32;

    for k in 0..=p {
        let w = phi_eps(u(p - k), prec)?;
        if w == dd(0.0) {
            continue;
        }
        for xi in 0..=k {
            for om in 0..=k - xi {
                let r = k - xi - om;
                let co = binom(om + a - 1, om) * sign(om) * binom(r + c - 1, r) * sign(r);
                let t = cache.get(u(q + a + om), s, u(b + c + r), -(pr.x * e), pr.y)?;
                total += (t * tp[xi as usize]).scale(w * co * 2.0);
            }
        }
    }
    for k in 0..=c {
        let w = phi_eps(u(c - k), prec)?;
        if w == dd(0.0) {
            continue;
        }
        for xi in 0..=k {
            for om in 0..=k - xi {
                let r = k - xi - om;
                let co = binom(om + a - 1, om) * sign(om) * binom(r + p - 1, p - 1) * sign(p - 1 + a + om);
                let t = cache.get(u(q), s + (a + om) as f64, u(p + b + r), pr.x, -(pr.y * e.conj()))?;
                total -= (t * tp[xi as usize]).scale(w * co * 2.0);
            }
        }
    }
    for k in 0..=a {
        let w = phi_eps(u(a - k), prec)?;
        if w == dd(0.0) {
            continue;
        }
        for xi in 0..=k {
            let kx = k - xi;
            for om in 0..p {
                let co = binom(om + kx, om) * sign(om) * binom(p + c - 2 - om, p - 1 - om) * sign(p - 1 - om);
                let t = cache.get(u(q + kx + om + 1), s, u(p + b + c - 1 - om), pr.x, pr.y)?;
                total -= (t * tp[xi as usize]).scale(w * co * 2.0);
            }
            for om in 0..c {
                let co = binom(om + kx, om) * sign(om) * binom(p + c - 2 - om, p - 1) * sign(p + kx + om);
                let t = cache.get(u(q), s + (kx + om + 1) as f64, u(p + b + c - 1 - om), pr.x, pr.y)?;
                total += (t * tp[xi as usize]).scale(w * co * 2.0);
            }
        }
    }
    Ok(total)
}

/// Series coefficients g_k of (1+αt)^{−b}(1+βt)^{−c}.
fn product_binomials(alpha: Dd, beta: Dd, b: f64, c: f64, len: usize) -> Vec<Dd> {
    let mut g = Vec::with_capacity(len);
    g.push(dd(1.0));
    if len > 1 {
        g.push(-(alpha * b + beta * c));
    }
    let ab = alpha * beta;
    for k in 1..len.saturating_sub(1) {
        let kf = k as f64;
        let next = -((alpha + beta) * kf + alpha * b + beta * c) * g[k] - ab * (kf - 1.0 + b + c) * g[k - 1];
        g.push(next / (kf + 1.0));
    }
    g
}

const MASTER_TAIL_TERMS: usize = 120;

/// Left-hand side of the master identity: box |l|, |m| < N/4 with the n-sum
/// completed by an expansion in 1/n beyond n = M.
pub fn master_lhs(pr: &IdentityParams, theta: Dd, prec: &Precision) -> Result<C, SeriesError> {
    let (p, q, a, b, c) = (pr.p as i32, pr.q as i32, pr.a as i32, pr.b as i32, pr.c as i32);
    let s = dd(pr.s);
    let nb = (prec.cutoff / 4).max(8) as i64;
    let big_m = (4 * nb + 32) as usize;
    let e = C::cis(theta);
    let xl = -e;
    let xm = -(pr.x * e);
    let pow_phase = |z: C, k: i64| if k >= 0 { z.powi(k) } else { z.conj().powi(-k) };
    let ipow = |k: i64, e: i32| -> Dd {
        let v = dd(k.unsigned_abs() as f64).powi(-e);
        if k < 0 && e % 2 == 1 {
            -v
        } else {
            v
        }
    };
    let mut ypow = Vec::with_capacity(big_m);
    let mut t = C::ONE;
    for _ in 0..big_m {
        ypow.push(t);
        t = t * pr.y;
    }
    let ns: Vec<Dd> = (0..big_m).map(|n| if n == 0 { dd(0.0) } else { inv_pow(n as f64, s) }).collect();
    let sigma0 = s + (b + c) as f64;
    let tails: Vec<Tail> = (0..MASTER_TAIL_TERMS).map(|k| tail_scaled(sigma0 + k as f64, pr.y, big_m as u64)).collect();
    let mscale = inv_pow(big_m as f64, sigma0);
    let mf = big_m as f64;

    let row = |li: usize| -> C {
        let l = li as i64 - nb;
        if l == 0 {
            return C::ZERO;
        }
        let mut acc = C::ZERO;
        let lw = pow_phase(xl, l).scale(ipow(l, p));
        for m in -nb..=nb {
            if m == 0 || l + m == 0 {
                continue;
            }
            let w = (lw * pow_phase(xm, m)).scale(ipow(m, q) * ipow(l + m, a));
            let mut inner = C::ZERO;
            for n in 1..big_m as i64 {
                if m + n == 0 || l + m + n == 0 {
                    continue;
                }
                let v = ns[n as usize] * ipow(m + n, b) * ipow(l + m + n, c);
                inner += ypow[n as usize].scale(v);
            }
            let g = product_binomials(dd(m as f64) / mf, dd((l + m) as f64) / mf, b as f64, c as f64, MASTER_TAIL_TERMS);
            let mut tail = C::ZERO;
            for (gk, tk) in g.iter().zip(&tails) {
                tail += tk.value.scale(*gk);
            }
            acc += w * (inner + tail.scale(mscale));
        }
        acc
    };
    let rows = map_range(0, (2 * nb + 1) as usize, Schedule::default(), row);
    Ok(rows.into_iter().fold(C::ZERO, |x, y| x + y))
}

fn master(pr: &IdentityParams, theta: Dd, prec: &Precision) -> Result<f64, SeriesError> {
    if pr.s <= 1.0 || [pr.p, pr.q, pr.a, pr.b, pr.c].contains(&0) {
        return Err(SeriesError::Domain("master identity needs p,q,a,b,c >= 1 and s > 1".into()));
    }
    let lhs = master_lhs(pr, theta, prec)?;
    let rhs = master_rhs(pr, theta, prec)?;
    Ok((lhs - rhs).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use a3z_exact::rat;

    fn p() -> Precision {
        Precision::default()
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert!(matches!("nope".parse::<IdentityId>(), Err(SeriesError::Domain(_))));
    }

    #[test]
    fn fourier_pfrac_at_zero() {
        let pr = IdentityParams { p: 2, ..Default::default() };
        assert!(check_identity(IdentityId::FourierPfrac, &pr, 0.0, &p()).unwrap() < 1e-25);
    }

    #[test]
    fn fourier_pfrac_generic_theta() {
        for pp in 1..=4 {
            let pr = IdentityParams { p: pp, ..Default::default() };
            for th in [0.3, -1.2, 2.5] {
                let r = check_identity(IdentityId::FourierPfrac, &pr, th, &p()).unwrap();
                assert!(r < 1e-12, "p={pp} theta={th} residual {r:e}");
            }
        }
    }

    #[test]
    fn bernoulli_fourier_quarters() {
        for j in 1..=5 {
            for al in [rat(1, 4), rat(3, 4), rat(1, 3)] {
                let pr = IdentityParams { p: j, alpha: al.clone(), ..Default::default() };
                let r = check_identity(IdentityId::BernoulliFourier, &pr, 0.0, &p()).unwrap();
                assert!(r < 1e-12, "j={j} alpha={al} residual {r:e}");
            }
        }
    }

    #[test]
    fn double_relation_example() {
        let pr = IdentityParams { p: 2, q: 2, s: 2.5, x: C::i_pow(1), ..Default::default() };
        let r = check_identity(IdentityId::DoubleRelation, &pr, std::f64::consts::FRAC_PI_2, &p()).unwrap();
        assert!(r < 1e-12, "{r:e}");
    }

    #[test]
    fn product_binomials_match_direct_expansion() {
        let g = product_binomials(dd(0.2), dd(-0.1), 2.0, 3.0, 6);
        // (1+0.2t)^-2 (1-0.1t)^-3 = 1 - 0.1t + (0.12 + 0.06 - 0.12)t² + ...
        assert!((g[1] - (-0.1)).abs().hi() < 1e-15);
        assert!((g[2] - 0.06).abs().hi() < 1e-15);
    }

    #[test]
    fn theta_outside_range_rejected() {
        let pr = IdentityParams::default();
        assert!(check_identity(IdentityId::FourierPfrac, &pr, 4.0, &p()).is_err());
    }

    #[test]
    fn master_identity_small_example() {
        let pr = IdentityParams { p: 1, q: 2, a: 1, b: 1, c: 2, s: 2.5, x: C::from_f64(-1.0, 0.0), y: C::from_f64(-1.0, 0.0), ..Default::default() };
        let prec = Precision::default().with_cutoff(160);
        let l = master_lhs(&pr, dd(0.0), &prec).unwrap();
        let r = master_rhs(&pr, dd(0.0), &prec).unwrap();
        println!("lhs {:?} rhs {:?}", l.to_f64(), r.to_f64());
        assert!((l - r).abs() < 1e-6);
    }
}
