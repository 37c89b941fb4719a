//! Hurwitz zeta and its s-derivatives.
//!
//! The workhorse is an Euler–Maclaurin summation carried out in jet
//! arithmetic, so one pass produces the value together with as many
//! s-derivatives as requested. About the pole at s = 1 the singular term
//! is removed analytically, which turns the jet coefficients directly
//! into the Laurent data of the function: c_p = (-1)^p gamma_p(a) / p!.
//!
//! The module also carries the Hasse double-sum route (an intentionally
//! independent low-accuracy cross-check), the closed reflection
//! differences of first and second s-derivatives at s = 1, the special
//! values at s = 0, and Kummer's Fourier series for log Gamma.

use rug::ops::Pow;
use rug::Float;

use crate::numerics::{
    bernoulli, binomial, factorial, Jet, PrecisionContext, SeriesDiagnostics,
};
use crate::{Error, Result};

/// Euler–Maclaurin evaluation plan: direct-sum cutoff, number of B_{2j}
/// correction terms actually used, and the magnitude of the first omitted
/// correction, which bounds the truncation error of the asymptotic part.
#[derive(Clone, Debug)]
pub struct EulerMaclaurinPlan {
    pub cutoff_n: u32,
    pub em_terms: u32,
    pub tail_estimate: Float,
}

/// Jet of zeta(s, a) about s0 plus evaluation diagnostics. When
/// `pole_extracted` is set (s0 = 1) the jet represents
/// zeta(s, a) - 1/(s - 1), whose coefficients are the generalized
/// Stieltjes constants up to sign and factorial.
#[derive(Clone, Debug)]
pub struct ZetaJetResult {
    pub jet: Jet,
    pub pole_extracted: bool,
    pub plan: EulerMaclaurinPlan,
    pub diagnostics: SeriesDiagnostics,
}

/// Closed special values at s = 0: zeta(0, a) = 1/2 - a and
/// zeta'(0, a) = log Gamma(a) - (1/2) log(2 pi).
#[derive(Clone, Debug)]
pub struct SpecialValues {
    pub zeta0: Float,
    pub zeta_prime0: Float,
}

const MAX_EM_TERMS: u32 = 30;
const MAX_DOUBLINGS: u32 = 3;

fn check_a(a: &Float) -> Result<()> {
    if !a.is_finite() || a.is_sign_negative() || a.is_zero() {
        return Err(Error::Domain(format!(
            "Hurwitz zeta needs a > 0, got a = {}",
            a.to_f64()
        )));
    }
    Ok(())
}

fn initial_cutoff(ctx: &PrecisionContext, s0: &Float, order: usize) -> u32 {
    let base = s0.to_f64().abs().ceil().max(10.0) + order as f64;
    let digits = ctx.working_digits() as f64;
    (base + (1.2 * digits).ceil()) as u32
}

/// One Euler–Maclaurin pass at fixed cutoff. Returns the jet (pole part
/// dropped when `extract_pole`), the number of correction terms used, and
/// the magnitude of the first omitted correction term.
fn em_pass(
    ctx: &PrecisionContext,
    s0: &Float,
    a: &Float,
    order: usize,
    cutoff: u32,
    extract_pole: bool,
) -> Result<(Jet, u32, Float)> {
    let prec = ctx.prec();
    let s = Jet::variable(prec, s0, order);

    // Head: sum_{n=0}^{N-1} (n + a)^{-s} = exp(-s log(n + a)).
    let mut acc = Jet::constant(prec, s0, &ctx.f(0), order);
    for n in 0..cutoff {
        let ln = (ctx.f(n) + a).ln();
        acc = acc.add(&s.scale(&(-ln)).exp());
    }

    let big = ctx.f(cutoff) + a; // N + a
    let ell = big.clone().ln();

    // Integral term (N+a)^{1-s} / (s-1).
    if extract_pole {
        // e^{-eps L} / eps with the 1/eps coefficient dropped:
        // analytic part has c_k = (-L)^{k+1} / (k+1)!.
        let mut c = Vec::with_capacity(order + 1);
        let mut pw = -ell.clone(); // (-L)^{k+1}
        for k in 0..=order {
            c.push(Float::with_val(prec, &pw / ctx.f(&factorial(k as u32 + 1))));
            pw *= -ell.clone();
        }
        acc = acc.add(&Jet::from_coeffs(Float::with_val(prec, s0), c));
    } else {
        let numer = s
            .add_real(&ctx.f(-1))
            .scale(&(-ell.clone()))
            .exp();
        let denom = s.add_real(&ctx.f(-1));
        acc = acc.add(&numer.div(&denom)?);
    }

    // Half term (1/2)(N+a)^{-s}.
    let pow_minus_s = s.scale(&(-ell.clone())).exp();
    acc = acc.add(&pow_minus_s.scale(&(ctx.f(1) / 2u32)));

    // Correction terms B_{2j}/(2j)! * [s]_{2j-1} * (N+a)^{-s-2j+1}.
    let eps_floor = ctx.eps();
    let inv_big2 = big.clone().pow(-2);
    // rising = [s]_{2j-1}, pw = (N+a)^{-s-2j+1}; both maintained incrementally.
    let mut rising = s.clone();
    let mut pw = s
        .add_real(&ctx.f(1))
        .scale(&(-ell.clone()))
        .exp();
    let mut prev_mag: Option<Float> = None;
    let mut used = 0u32;
    let mut omitted = ctx.f(0);
    let scale = {
        let mut m = ctx.f(1);
        let v = acc.value().clone().abs();
        if v > m {
            m = v;
        }
        m
    };
    for j in 1..=MAX_EM_TERMS {
        let b = bernoulli(2 * j)?;
        let coef = ctx.f(&b) / ctx.f(&factorial(2 * j));
        let term = rising.mul(&pw).scale(&coef);
        let mut mag = ctx.f(0);
        for c in term.coeffs() {
            let v = c.clone().abs();
            if v > mag {
                mag = v;
            }
        }
        if let Some(pm) = &prev_mag {
            if j >= 3 && mag > *pm {
                // Asymptotic growth has set in; stop before this term.
                omitted = mag;
                break;
            }
        }
        acc = acc.add(&term);
        used = j;
        if mag < eps_floor.clone() * &scale {
            omitted = mag;
            break;
        }
        prev_mag = Some(mag.clone());
        omitted = mag;
        if j < MAX_EM_TERMS {
            let a0 = s.add_real(&ctx.f(2 * j - 1));
            let a1 = s.add_real(&ctx.f(2 * j));
            rising = rising.mul(&a0).mul(&a1);
            pw = pw.scale(&inv_big2);
        }
    }
    Ok((acc, used, omitted))
}

/// Jet of zeta(s, a) about s0 with `order + 1` coefficients. At s0 = 1 the
/// pole is removed analytically and the result's coefficients satisfy
/// c_p = (-1)^p gamma_p(a) / p!.
pub fn hurwitz_zeta_jet(
    ctx: &PrecisionContext,
    s0: &Float,
    a: &Float,
    order: usize,
) -> Result<ZetaJetResult> {
    check_a(a)?;
    if !s0.is_finite() {
        return Err(Error::Domain("s0 must be finite".into()));
    }
    let one = ctx.f(1);
    let extract = *s0 == one;
    let mut cutoff = initial_cutoff(ctx, s0, order);
    let mut last_err: Option<Float> = None;
    for round in 0..=MAX_DOUBLINGS {
        let (jet, used, omitted) = em_pass(ctx, s0, a, order, cutoff, extract)?;
        let mut scale = ctx.f(1);
        let v = jet.value().clone().abs();
        if v > scale {
            scale = v;
        }
        let target = scale.clone() * ctx.tol() / 1000u32;
        if omitted <= target {
            let tail = omitted.to_f64();
            return Ok(ZetaJetResult {
                jet,
                pole_extracted: extract,
                plan: EulerMaclaurinPlan {
                    cutoff_n: cutoff,
                    em_terms: used,
                    tail_estimate: omitted,
                },
                diagnostics: SeriesDiagnostics {
                    terms_used: cutoff as usize + used as usize,
                    truncation_tail: tail,
                    cancellation_loss_digits: 0.0,
                    converged: true,
                },
            });
        }
        last_err = Some(omitted);
        if round < MAX_DOUBLINGS {
            cutoff *= 2;
        }
    }
    Err(Error::Convergence(format!(
        "Euler-Maclaurin tail {:.3e} did not reach tolerance at cutoff {} \
         (s0 = {}, a = {}, order {order})",
        last_err.map(|e| e.to_f64()).unwrap_or(f64::NAN),
        cutoff,
        s0.to_f64(),
        a.to_f64()
    )))
}

/// Analytically continued zeta(s, a) for s != 1, a > 0.
pub fn hurwitz_zeta(ctx: &PrecisionContext, s: &Float, a: &Float) -> Result<Float> {
    if *s == ctx.f(1) {
        return Err(Error::Pole("zeta(s, a) has its pole at s = 1".into()));
    }
    let r = hurwitz_zeta_jet(ctx, s, a, 0)?;
    Ok(r.jet.value().clone())
}

/// d^k/ds^k zeta(s, a) at a regular point s != 1.
pub fn hurwitz_zeta_deriv(ctx: &PrecisionContext, s: &Float, a: &Float, k: usize) -> Result<Float> {
    if *s == ctx.f(1) {
        return Err(Error::Pole("zeta(s, a) has its pole at s = 1".into()));
    }
    let r = hurwitz_zeta_jet(ctx, s, a, k)?;
    Ok(r.jet.deriv(k))
}

/// Riemann zeta at a regular real point.
pub fn riemann_zeta(ctx: &PrecisionContext, s: &Float) -> Result<Float> {
    hurwitz_zeta(ctx, s, &ctx.f(1))
}

/// Euler's constant from the Laurent jet at (s0, a) = (1, 1).
pub fn euler_gamma(ctx: &PrecisionContext) -> Result<Float> {
    let r = hurwitz_zeta_jet(ctx, &ctx.f(1), &ctx.f(1), 0)?;
    Ok(r.jet.value().clone())
}

/// log Gamma(a) through Lerch's identity zeta'(0, a) = log Gamma(a)
/// - (1/2) log(2 pi), so the whole identity catalog shares one route.
pub fn log_gamma(ctx: &PrecisionContext, a: &Float) -> Result<Float> {
    let r = hurwitz_zeta_jet(ctx, &ctx.f(0), a, 1)?;
    Ok(r.jet.deriv(1) + ctx.ln_2pi() / 2u32)
}

/// digamma(a) = -gamma_0(a), read off the pole-extracted jet.
pub fn digamma(ctx: &PrecisionContext, a: &Float) -> Result<Float> {
    let r = hurwitz_zeta_jet(ctx, &ctx.f(1), a, 0)?;
    Ok(-r.jet.value().clone())
}

/// Truncated Hasse double sum scaled by 1/(s-1):
/// (1/(s-1)) sum_{n=0}^{N} 1/(n+1) sum_{k=0}^{n} C(n,k) (-1)^k (u+k)^{1-s}.
/// An advisory cross-check: binomial cancellation costs about 0.3 digits
/// per row, and the diagnostics report that loss.
pub fn hasse_partial(
    ctx: &PrecisionContext,
    s: &Float,
    u: &Float,
    n_rows: u32,
) -> Result<(Float, SeriesDiagnostics)> {
    check_a(u)?;
    if *s == ctx.f(1) {
        return Err(Error::Pole(
            "the Hasse form is scaled by 1/(s-1); s = 1 is its pole".into(),
        ));
    }
    let digits = ctx.working_digits() as f64;
    let loss = n_rows as f64 * 2f64.log10();
    if loss >= digits - 3.0 {
        return Err(Error::Capability(format!(
            "{n_rows} Hasse rows would cost about {loss:.0} digits of the {digits} available"
        )));
    }
    let prec = ctx.prec();
    let one_minus_s = ctx.f(1) - s;
    // Cache (u+k)^{1-s} once; every inner sum reuses them.
    let powers: Vec<Float> = (0..=n_rows)
        .map(|k| (ctx.f(k) + u).pow(&one_minus_s))
        .collect();
    let mut total = Float::new(prec);
    let mut last_row = Float::new(prec);
    for n in 0..=n_rows {
        let mut inner = Float::new(prec);
        for k in 0..=n {
            let c = ctx.f(&binomial(n, k));
            if k % 2 == 0 {
                inner += c * &powers[k as usize];
            } else {
                inner -= c * &powers[k as usize];
            }
        }
        last_row = inner / (ctx.f(n) + 1u32);
        total += &last_row;
    }
    let value = total / (s.clone() - 1u32);
    // Empirical tail bound for the alternating-row decay.
    let tail = last_row.clone().abs() * ctx.f(n_rows + 1) / u * 3u32;
    let diag = SeriesDiagnostics {
        terms_used: n_rows as usize + 1,
        truncation_tail: tail.to_f64(),
        cancellation_loss_digits: loss,
        converged: tail.to_f64() < ctx.tol().to_f64(),
    };
    Ok((value, diag))
}

/// Finite closed forms for zeta^{(order)}(1, p/q) - zeta^{(order)}(1, 1 - p/q)
/// (the pole parts cancel, so the difference is the Stieltjes difference up
/// to sign). Order 1 uses the cotangent/log-Gamma form; order 2 the
/// three-term form with zeta''(0, j/q) supplied by the jet engine.
pub fn reflection_diff(ctx: &PrecisionContext, order: u8, p: u32, q: u32) -> Result<Float> {
    if p == 0 || p >= q {
        return Err(Error::Precondition(format!(
            "reflection_diff needs 1 <= p < q, got p = {p}, q = {q}"
        )));
    }
    let prec = ctx.prec();
    let pi = ctx.pi();
    let g = euler_gamma(ctx)?;
    let cot = {
        let t = (pi.clone() * p / q).tan();
        ctx.f(1) / t
    };
    match order {
        1 => {
            // pi [log(2 pi q) + gamma] cot(pi p/q) - 2 pi sum_j logGamma(j/q) sin(2 pi j p/q)
            let log2piq = (ctx.f(2) * ctx.pi() * q).ln();
            let mut sum = Float::new(prec);
            for j in 1..q {
                let lg = log_gamma(ctx, &(ctx.f(j) / q))?;
                // Angle reduced mod 2 pi through the integer residue.
                let residue = (j as u64 * p as u64) % q as u64;
                let ang = ctx.pi() * 2u32 * ctx.f(residue) / q;
                sum += lg * ang.sin();
            }
            Ok(pi.clone() * (log2piq + &g) * cot - pi * 2u32 * sum)
        }
        2 => {
            // gamma_2(p/q) - gamma_2(1 - p/q) equals
            //   2 pi sum_j sin(2 pi j p/q) zeta''(0, j/q)
            // - 4 pi [gamma + log(2 pi q)] sum_j sin(2 pi j p/q) logGamma(j/q)
            // + (pi/2)(2 [gamma + log(2 pi q)]^2 + pi^2/6) cot(pi p/q),
            // and zeta''(1, .) differences carry the same value with + sign.
            let log2piq = (ctx.f(2) * ctx.pi() * q).ln();
            let bracket = g.clone() + &log2piq;
            let mut s_zpp = Float::new(prec);
            let mut s_lg = Float::new(prec);
            for j in 1..q {
                let residue = (j as u64 * p as u64) % q as u64;
                let ang = ctx.pi() * 2u32 * ctx.f(residue) / q;
                let sn = ang.sin();
                let aj = ctx.f(j) / q;
                let jet = hurwitz_zeta_jet(ctx, &ctx.f(0), &aj, 2)?;
                s_zpp += jet.jet.deriv(2) * &sn;
                s_lg += log_gamma(ctx, &aj)? * &sn;
            }
            let sq = bracket.clone().square();
            let para = ctx.f(2) * sq + ctx.pi().square() / 6u32;
            Ok(pi.clone() * 2u32 * s_zpp - pi.clone() * 4u32 * bracket * s_lg
                + pi / 2u32 * para * cot)
        }
        _ => Err(Error::Precondition(format!(
            "reflection order must be 1 or 2, got {order}"
        ))),
    }
}

/// Closed special values at s = 0; the derivative comes from the jet so the
/// pair stays consistent with every other route in the crate.
pub fn special_values(ctx: &PrecisionContext, a: &Float) -> Result<SpecialValues> {
    check_a(a)?;
    let zeta0 = ctx.f(1) / 2u32 - a;
    let r = hurwitz_zeta_jet(ctx, &ctx.f(0), a, 1)?;
    Ok(SpecialValues {
        zeta0,
        zeta_prime0: r.jet.deriv(1),
    })
}

/// Partial sum of Kummer's Fourier series for log Gamma(t), 0 < t < 1:
/// (1/2) log(pi / sin(pi t)) + (1/2)(1 - 2t)[gamma + log(2 pi)]
/// + (1/pi) sum_{n=1}^{N} log(n) sin(2 pi n t)/n.
/// The tail decays like log(N)/N, so only loose checks make sense.
pub fn kummer_log_gamma(ctx: &PrecisionContext, t: &Float, n_terms: usize) -> Result<Float> {
    let prec = ctx.prec();
    if !(t.is_finite() && t.is_sign_positive()) || t.is_zero() || *t >= ctx.f(1) {
        return Err(Error::Domain(format!(
            "Kummer series needs 0 < t < 1, got {}",
            t.to_f64()
        )));
    }
    let pi = ctx.pi();
    let g = euler_gamma(ctx)?;
    let lead = (pi.clone() / (pi.clone() * t).sin()).ln() / 2u32;
    let mid = (ctx.f(1) - ctx.f(2) * t) * (g + ctx.ln_2pi()) / 2u32;
    let two_pi_t = pi.clone() * 2u32 * t;
    let mut sum = Float::new(prec);
    for n in 1..=n_terms {
        let nn = ctx.f(n as u64);
        let ang = two_pi_t.clone() * &nn;
        // Reduce the angle into a stable range before sin.
        let turns = (ang.clone() / (pi.clone() * 2u32)).floor();
        let ang = ang - turns * pi.clone() * 2u32;
        sum += nn.clone().ln() * ang.sin() / nn;
    }
    Ok(lead + mid + sum / pi)
}
