//! Double series: Euler–Zagier ζ₂, Tornheim T and the signed sums 𝔗.

use a3z_exact::binomial;

use crate::complex::C;
use crate::dd::{dd, inv_pow, to_f64, Dd, EPS};
use crate::oned::{em_tail_terms, tail, tail_scaled, two_sided, Tail};
use crate::par::{map_range, Schedule};
use crate::value::{NumericValue, Precision, SeriesError};

const MAX_EXPANSION: usize = 800;
const UNIMODULAR_TOL: f64 = 1e-12;

/// C(−s, k) for k = 0, 1, … while |C(−s,k)| ρᵏ stays above 1e-34 (at least `min_len` entries).
fn neg_binomials(s: Dd, rho: f64, min_len: usize) -> Vec<Dd> {
    let mut out = Vec::new();
    let mut c = dd(1.0);
    let mut r = 1.0;
    for k in 0..MAX_EXPANSION {
        out.push(c);
        if k >= min_len && to_f64(c).abs() * r < 1e-34 {
            break;
        }
        c = c * (-s - k as f64) / ((k + 1) as f64);
        r *= rho;
    }
    out
}

/// Σ_k b_k ρᵏ t_k together with a bound on the omitted part.
fn expansion_sum(binoms: &[Dd], rho: Dd, tails: &[Tail]) -> (C, f64) {
    let mut acc = C::ZERO;
    let mut r = dd(1.0);
    let mut bound = 0.0;
    for (b, t) in binoms.iter().zip(tails) {
        let w = *b * r;
        acc += t.value.scale(w);
        bound += to_f64(w).abs() * t.bound;
        r *= rho;
    }
    // the next coefficient dominates the omitted geometric tail
    let k = binoms.len();
    let last = to_f64(binoms[k - 1]).abs() * to_f64(r).abs();
    let scale = tails.iter().map(|t| t.value.abs()).fold(0.0, f64::max);
    (acc, bound + 2.0 * last * scale.max(1.0))
}

fn check_unimodular(name: &str, z: C) -> Result<(), SeriesError> {
    if (z.abs() - 1.0).abs() > UNIMODULAR_TOL {
        return Err(SeriesError::Domain(format!("{name} must have modulus 1, got {}", z.abs())));
    }
    Ok(())
}

/// ζ₂(s₁, s₂) = Σ_{m,n≥1} m^{−s₁} (m+n)^{−s₂}.
pub fn eval_ez2(s1: f64, s2: f64, prec: &Precision) -> Result<NumericValue, SeriesError> {
    if s2 <= 1.0 || s1 + s2 <= 2.0 {
        return Err(SeriesError::Convergence(format!("zeta_2({s1}, {s2}) needs s2 > 1 and s1 + s2 > 2")));
    }
    let (a, b) = (dd(s1), dd(s2));
    let n = prec.cutoff as u64;
    // R(m) = Σ_{k>m} k^{−s₂}, walked downwards from R(N−1)
    let start = tail(b, C::ONE, n);
    let mut r = start.value.re;
    let mut acc = dd(0.0);
    let mut majorant = 0.0;
    for m in (1..n).rev() {
        let t = inv_pow(m as f64, a) * r;
        acc += t;
        majorant += to_f64(t).abs();
        r += inv_pow(m as f64, b);
    }
    // Σ_{m≥N} m^{−s₁} R(m) with R from its Euler–Maclaurin expansion
    let sigma = a + b;
    let h = |x: Dd| tail(x, C::ONE, n);
    let mut outer = h(sigma - 1.0).value.re / (b - 1.0) - h(sigma).value.re * 0.5;
    let mut bound = start.bound * majorant;
    let (coeffs, em_bound) = em_tail_terms(b, n as f64);
    for (k, c) in coeffs.iter().enumerate() {
        let t = h(sigma + (2 * k + 1) as f64);
        outer += *c * t.value.re;
        bound += to_f64(*c).abs() * t.bound;
    }
    bound += em_bound * to_f64(h(sigma).value.re).abs();
    let value = acc + outer;
    Ok(NumericValue::new(C::real(value), bound, 4.0 * n as f64 * EPS * (majorant + to_f64(outer).abs())))
}

/// Tornheim T(s₁, s₂, s₃) = Σ_{m,n≥1} m^{−s₁} n^{−s₂} (m+n)^{−s₃}.
pub fn eval_tornheim(s1: f64, s2: f64, s3: f64, prec: &Precision) -> Result<NumericValue, SeriesError> {
    tornheim_with(s1, s2, s3, prec, Schedule::default())
}

pub fn tornheim_with(s1: f64, s2: f64, s3: f64, prec: &Precision, schedule: Schedule) -> Result<NumericValue, SeriesError> {
    if s1 + s3 <= 1.0 || s2 + s3 <= 1.0 || s1 + s2 + s3 <= 2.0 {
        return Err(SeriesError::Convergence(format!(
            "Tornheim sum ({s1}, {s2}, {s3}) outside the absolute-convergence region"
        )));
    }
    if s3 < 0.0 {
        return Err(SeriesError::Domain(format!("Tornheim tail bound needs s3 >= 0, got {s3}")));
    }
    // far quadrant m, n ≥ N: (m+n)^{−s₃} ≤ m^{−α} n^{−(s₃−α)}
    let lo = (1.0 - s1).max(0.0);
    let hi = (s2 + s3 - 1.0).min(s3);
    if lo >= hi {
        return Err(SeriesError::Domain(format!("no majorant split for Tornheim ({s1}, {s2}, {s3})")));
    }
    let alpha = 0.5 * (lo + hi);
    let n = prec.cutoff;
    let l = 2 * n;
    let (a, b, c) = (dd(s1), dd(s2), dd(s3));
    let far = crate::oned::hurwitz_tail_f64(s1 + alpha, n as u64) * crate::oned::hurwitz_tail_f64(s2 + s3 - alpha, n as u64);

    let pw = |s: Dd, len: usize| -> Vec<Dd> { (0..len).map(|k| if k == 0 { dd(0.0) } else { inv_pow(k as f64, s) }).collect() };
    let p1 = pw(a, l);
    let p2 = pw(b, l);
    let p3 = pw(c, l + n);
    let rho = (n as f64 - 1.0) / l as f64;
    let binoms = neg_binomials(c, rho, 4);
    let lf = l as f64;
    let tails_b: Vec<Tail> = (0..binoms.len()).map(|k| tail_scaled(b + c + k as f64, C::ONE, l as u64)).collect();
    let tails_a: Vec<Tail> = (0..binoms.len()).map(|k| tail_scaled(a + c + k as f64, C::ONE, l as u64)).collect();
    let scale_b = inv_pow(lf, b + c);
    let scale_a = inv_pow(lf, a + c);

    // m < N, all n; then n < N, m ≥ N
    let rows = |outer: &[Dd], inner: &[Dd], tails: &[Tail], scale: Dd, from: usize, k: usize| -> (Dd, f64, f64) {
        let mut g = dd(0.0);
        for j in from..l {
            g += inner[j] * p3[k + j];
        }
        let (t, bd) = expansion_sum(&binoms, dd(k as f64) / lf, tails);
        let g = g + t.re * scale;
        let w = outer[k];
        (w * g, to_f64(w).abs() * bd * to_f64(scale), to_f64(w * g).abs())
    };
    let part_a = map_range(1, n, schedule, |m| rows(&p1, &p2, &tails_b, scale_b, 1, m));
    let part_b = map_range(1, n, schedule, |k| rows(&p2, &p1, &tails_a, scale_a, n, k));
    let mut value = dd(0.0);
    let mut bound = far;
    let mut majorant = 0.0;
    for (v, bd, mj) in part_a.into_iter().chain(part_b) {
        value += v;
        bound += bd;
        majorant += mj;
    }
    Ok(NumericValue::new(C::real(value), bound, 4.0 * l as f64 * EPS * majorant))
}

/// Partial-fraction weights: 1/(lᵖ(l+m)^q) = Σ_j A_j m^{j−p−q} l^{−j} + Σ_j B_j m^{j−p−q} (l+m)^{−j}.
fn pf_weights(p: u32, q: u32) -> (Vec<Dd>, Vec<Dd>) {
    let (p, q) = (p as i64, q as i64);
    let sgn = |e: i64| if e.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let a = (1..=p).map(|j| dd(sgn(p - j) * to_f64_int(binomial(p + q - j - 1, q - 1)))).collect();
    let b = (1..=q).map(|j| dd(sgn(p) * to_f64_int(binomial(p + q - j - 1, p - 1)))).collect();
    (a, b)
}

fn to_f64_int(v: a3z_exact::BigInt) -> f64 {
    a3z_exact::rational_to_f64(&a3z_exact::BigRational::from_integer(v))
}

/// 𝔗(p, s, q; x, y) = Σ_{l≠0, m≥1, l+m≠0} xˡ yᵐ / (lᵖ mˢ (l+m)^q) for unimodular x, y.
///
/// Window m < N, |l| < 2N summed directly; |l| ≥ 2N through the binomial
/// expansion of (l+m)^{−q}; m ≥ N through the exact partial-fraction
/// reduction of the inner l-sum.
pub fn eval_frak_t(p: u32, s: f64, q: u32, x: C, y: C, prec: &Precision) -> Result<NumericValue, SeriesError> {
    frak_t_with(p, dd(s), q, x, y, prec, Schedule::default())
}

pub fn frak_t_with(p: u32, s: Dd, q: u32, x: C, y: C, prec: &Precision, schedule: Schedule) -> Result<NumericValue, SeriesError> {
    if p == 0 || q == 0 {
        return Err(SeriesError::Domain(format!("frakT needs p, q >= 1, got ({p}, {q})")));
    }
    if s.hi() <= 1.0 {
        return Err(SeriesError::Convergence(format!("frakT needs s > 1, got {}", to_f64(s))));
    }
    check_unimodular("x", x)?;
    check_unimodular("y", y)?;
    let n = prec.cutoff;
    let l = 2 * n;
    let pq = (p + q) as i32;
    let xc = x.conj();

    let mut xpow = Vec::with_capacity(l);
    let mut xnpow = Vec::with_capacity(l);
    let (mut a, mut b) = (C::ONE, C::ONE);
    for _ in 0..l {
        xpow.push(a);
        xnpow.push(b);
        a = a * x;
        b = b * xc;
    }
    let inv_int = |k: usize, e: u32| dd(k as f64).powi(-(e as i32));
    let lp: Vec<Dd> = (0..l).map(|k| if k == 0 { dd(0.0) } else { inv_int(k, p) }).collect();
    let lq: Vec<Dd> = (0..l + n).map(|k| if k == 0 { dd(0.0) } else { inv_int(k, q) }).collect();
    let sign_p = if p.is_multiple_of(2) { 1.0 } else { -1.0 };
    let sign_q = if q.is_multiple_of(2) { 1.0 } else { -1.0 };

    // U_k = TS(p+q+k, x, L) + (−1)^{p+q+k} TS(p+q+k, x̄, L)
    let rho = (n as f64 - 1.0) / l as f64;
    let binoms = neg_binomials(dd(q as f64), rho, 4);
    let real_x = x.im.abs().hi() < UNIMODULAR_TOL;
    let tails: Vec<Tail> = (0..binoms.len())
        .map(|k| {
            let sigma = dd((pq as usize + k) as f64);
            let t1 = tail_scaled(sigma, x, l as u64);
            let t2 = if real_x { t1 } else { tail_scaled(sigma, xc, l as u64) };
            let sg = if (pq as usize + k).is_multiple_of(2) { 1.0 } else { -1.0 };
            Tail { value: t1.value + t2.value * sg, bound: t1.bound + t2.bound }
        })
        .collect();
    let lscale = dd(l as f64).powi(-pq);
    let lf = l as f64;

    let mut ypow = Vec::with_capacity(n);
    let mut c = C::ONE;
    for _ in 0..n {
        ypow.push(c);
        c = c * y;
    }
    let row = |m: usize| -> (C, f64, f64) {
        let mut f = C::ZERO;
        let mut mag = 0.0;
        for k in 1..l {
            // l = +k
            let w = lp[k] * lq[k + m];
            f += xpow[k].scale(w);
            // l = −k
            if k != m {
                let w = if k < m { lp[k] * lq[m - k] * sign_p } else { lp[k] * lq[k - m] * (sign_p * sign_q) };
                f += xnpow[k].scale(w);
                mag += to_f64(w).abs();
            }
            mag += to_f64(lp[k] * lq[k + m]);
        }
        let (t, bd) = expansion_sum(&binoms, dd(m as f64) / lf, &tails);
        let f = f + t.scale(lscale);
        let w = inv_pow(m as f64, s);
        let wf = to_f64(w);
        ((ypow[m] * f).scale(w), wf * bd * to_f64(lscale), wf * mag)
    };
    let rows = map_range(1, n, schedule, row);
    let mut value = C::ZERO;
    let mut bound = 0.0;
    let mut majorant = 0.0;
    for (v, bd, mj) in rows {
        value += v;
        bound += bd;
        majorant += mj;
    }

    // m ≥ N
    let (aw, bw) = pf_weights(p, q);
    let yx = y * xc;
    let big = s + pq as f64;
    let lt = |sigma: Dd, z: C| tail(sigma, z, n as u64);
    let t_y = lt(big, y);
    let t_yx = lt(big, yx);
    let mut outer = C::ZERO;
    let mut obound = 0.0;
    for j in 1..=p.max(q) {
        let lam = two_sided(j as i64, x, prec)?;
        let sigma = big - j as f64;
        if j <= p {
            let aj = aw[j as usize - 1];
            let t = lt(sigma, y);
            let sg = if j % 2 == 0 { 1.0 } else { -1.0 };
            outer += (lam.value * t.value - t_yx.value * sg).scale(aj);
            obound += to_f64(aj).abs() * (lam.value.abs() * t.bound + lam.error_bound() * t.value.abs() + t_yx.bound);
        }
        if j <= q {
            let bj = bw[j as usize - 1];
            let t = lt(sigma, yx);
            outer += (lam.value * t.value - t_y.value).scale(bj);
            obound += to_f64(bj).abs() * (lam.value.abs() * t.bound + lam.error_bound() * t.value.abs() + t_y.bound);
        }
    }
    value += outer;
    Ok(NumericValue::new(value, bound + obound, 8.0 * l as f64 * EPS * (majorant + outer.abs())))
}
