//! Tanh-sinh (double-exponential) quadrature and the catalog of integral
//! representations: the log-log family over the unit interval, Clausen
//! integrals, the Hermite and Abel-Plana representations of the zeta
//! functions, and the digamma integral.
//!
//! Integrals over `(0, 1)` with a `log log(1/x)` factor are evaluated
//! after the substitution `x = exp(-t)`, which turns them into integrals
//! of `log t` against smooth exponentially decaying kernels on
//! `(0, inf)`; the node maps below handle the remaining logarithmic
//! endpoint singularity directly.

use std::time::Instant;

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use crate::identities::IdentityResult;
use crate::numerics::{factorial, PrecisionContext};
use crate::zeta;
use crate::{Error, Result};

/// Integration domain. Endpoint singularities of logarithmic or
/// integrable algebraic type are acceptable; interior singularities are
/// not.
#[derive(Clone, Debug)]
pub enum Interval {
    Finite(Float, Float),
    /// `[a, inf)`. The integrand must decay at infinity.
    UpperInfinite(Float),
}

#[derive(Clone, Debug)]
pub struct QuadratureResult {
    pub value: Float,
    /// Estimated error relative to `max(1, |value|)`. Non-negative, and
    /// below the requested tolerance whenever the result converged.
    pub error_estimate: Float,
    pub levels_used: u32,
    pub evaluations: u64,
}

const MAX_LEVELS: u32 = 12;
const T_MAX: f64 = 9.0;

struct NodeMap {
    prec: u32,
    half_pi: Float,
}

impl NodeMap {
    fn new(prec: u32) -> Self {
        let half_pi = Float::with_val(prec, Constant::Pi) / 2u32;
        NodeMap { prec, half_pi }
    }

    /// Abscissa and weight at trapezoid coordinate t, or None when the
    /// abscissa rounds onto a finite endpoint and the direction is
    /// exhausted.
    fn map(&self, interval: &Interval, t: &Float) -> Option<(Float, Float)> {
        let (sh, ch) = Float::with_val(self.prec, t).sinh_cosh(Float::new(self.prec));
        let u = sh * &self.half_pi;
        match interval {
            Interval::Finite(a, b) => {
                let span = Float::with_val(self.prec, b - a);
                // q = exp(-2|u|); the distance to the nearer endpoint is
                // span*q/(1+q) and the weight is span*pi*cosh(t)*q/(1+q)^2,
                // both safe from cancellation.
                let q = (Float::with_val(self.prec, u.clone().abs()) * -2i32).exp();
                let onep = Float::with_val(self.prec, &q + 1u32);
                let off = span.clone() * &q / &onep;
                let x = if u.is_sign_positive() {
                    Float::with_val(self.prec, b - &off)
                } else {
                    Float::with_val(self.prec, a + &off)
                };
                if &x == a || &x == b {
                    return None;
                }
                let w = span * &self.half_pi * 2u32 * ch * &q / onep.square();
                Some((x, w))
            }
            Interval::UpperInfinite(a) => {
                let g = u.exp();
                let x = Float::with_val(self.prec, a + &g);
                if &x == a {
                    return None;
                }
                let w = g * &self.half_pi * ch;
                Some((x, w))
            }
        }
    }
}

fn strip_sum(
    map: &NodeMap,
    f: &dyn Fn(&Float) -> Float,
    interval: &Interval,
    level: u32,
    evaluations: &mut u64,
) -> Result<Float> {
    let prec = map.prec;
    let h = Float::with_val(prec, 1) >> level;
    let cut = Float::with_val(prec, 1) >> (prec - 20);
    let mut acc = Float::new(prec);
    for sign in [1i64, -1] {
        let (start, step) = if level == 0 {
            (if sign > 0 { 0u64 } else { 1 }, 1u64)
        } else {
            (1u64, 2u64)
        };
        let mut j = start;
        let mut small_run = 0u32;
        loop {
            let t = Float::with_val(prec, j as i64 * sign) * &h;
            if t.clone().abs() > T_MAX {
                break;
            }
            let Some((x, w)) = map.map(interval, &t) else {
                break;
            };
            let fx = f(&x);
            *evaluations += 1;
            if !fx.is_finite() {
                // Overflow in the far tail (the scalar exponent range is
                // finite) after the terms have already collapsed just ends
                // the direction; anywhere else it is a genuine failure.
                if small_run >= 1 || t.clone().abs() >= 2u32 {
                    break;
                }
                return Err(Error::Domain(format!(
                    "integrand is not finite at x = {:e}",
                    x.to_f64()
                )));
            }
            // Multiply with the weight on the left so the term carries the
            // integrator's precision even when the integrand returns
            // lower-precision scalars.
            let term = w * fx;
            let mut floor = Float::with_val(prec, acc.clone().abs());
            if floor < 1u32 {
                floor = Float::with_val(prec, 1);
            }
            if term.clone().abs() <= floor * &cut {
                small_run += 1;
                if small_run >= 3 && t.clone().abs() >= 1u32 {
                    break;
                }
            } else {
                small_run = 0;
            }
            acc += term;
            j += step;
        }
    }
    Ok(acc)
}

/// Tanh-sinh integration with level doubling until two successive levels
/// agree within `tol` relative to `max(1, |value|)`.
pub fn integrate(
    ctx: &PrecisionContext,
    f: &dyn Fn(&Float) -> Float,
    interval: &Interval,
    tol: f64,
) -> Result<QuadratureResult> {
    if !(tol > 0.0) {
        return Err(Error::Config(
            "quadrature tolerance must be positive".into(),
        ));
    }
    if let Interval::Finite(a, b) = interval {
        if !a.is_finite() || !b.is_finite() || a >= b {
            return Err(Error::Domain(
                "finite interval requires ordered finite endpoints".into(),
            ));
        }
    }
    let prec = ctx.prec() + 32;
    let map = NodeMap::new(prec);
    let tol_f = Float::with_val(prec, tol);
    let mut evaluations = 0u64;

    let mut estimate = strip_sum(&map, f, interval, 0, &mut evaluations)?;
    let mut prev;
    for level in 1..=MAX_LEVELS {
        let strip = strip_sum(&map, f, interval, level, &mut evaluations)?;
        prev = estimate;
        let h = Float::with_val(prec, 1) >> level;
        estimate = prev.clone() / 2u32 + strip * h;
        let err = Float::with_val(prec, &estimate - &prev).abs();
        let mut scale = Float::with_val(prec, estimate.clone().abs());
        if scale < 1u32 {
            scale = Float::with_val(prec, 1);
        }
        if level >= 2 && err <= scale.clone() * &tol_f {
            return Ok(QuadratureResult {
                value: Float::with_val(ctx.prec(), &estimate),
                error_estimate: err / scale,
                levels_used: level,
                evaluations,
            });
        }
        if level == MAX_LEVELS {
            return Err(Error::Convergence(format!(
                "tanh-sinh stalled above tol {tol:e} after {MAX_LEVELS} levels; \
                 last estimates {:e} and {:e}",
                prev.to_f64(),
                estimate.to_f64()
            )));
        }
    }
    unreachable!("level loop returns or errors at MAX_LEVELS");
}

pub(crate) fn quad_tol(ctx: &PrecisionContext) -> f64 {
    (ctx.tol().to_f64() * 1e-2).max(1e-40)
}

/// gamma_1(x) from the Laurent jet about s = 1.
fn gamma1(ctx: &PrecisionContext, x: &Float) -> Result<Float> {
    let r = zeta::hurwitz_zeta_jet(ctx, &ctx.f(1), x, 1)?;
    Ok(-r.jet.coeff(1).clone())
}

pub(crate) fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

pub(crate) fn quad_note(q: &QuadratureResult) -> String {
    format!(
        "tanh-sinh: levels={}, evaluations={}, err={:.1e}",
        q.levels_used,
        q.evaluations,
        q.error_estimate.to_f64()
    )
}

/// Integral of `x^(p-1) loglog(1/x) / (1 + x^n)` over the unit interval
/// against its closed form in digamma values and a difference of first
/// Stieltjes constants at `p/(2n)` and `(n+p)/(2n)`. Neither `p` nor `n`
/// needs to be an integer.
pub fn adamchik_loglog(ctx: &PrecisionContext, p: &Float, n: &Float) -> Result<IdentityResult> {
    if !p.is_finite() || !n.is_finite() || *p <= 0u32 || *n <= 0u32 {
        return Err(Error::Domain("requires p > 0 and n > 0".into()));
    }
    let start = Instant::now();
    let neg_p = -p.clone();
    let neg_n = -n.clone();
    let f = move |t: &Float| {
        let lt = t.clone().ln();
        let e_pt = (t.clone() * &neg_p).exp();
        let e_nt = (t.clone() * &neg_n).exp();
        e_pt * lt / (e_nt + 1u32)
    };
    let q = integrate(ctx, &f, &Interval::UpperInfinite(ctx.f(0)), quad_tol(ctx))?;

    let two_n = Float::with_val(ctx.prec(), n * 2u32);
    let a = Float::with_val(ctx.prec(), p / &two_n);
    let b = Float::with_val(ctx.prec(), n + p) / &two_n;
    let g = zeta::euler_gamma(ctx)?;
    let psi_diff = zeta::digamma(ctx, &a)? - zeta::digamma(ctx, &b)?;
    let g1_diff = gamma1(ctx, &b)? - gamma1(ctx, &a)?;
    let rhs = ((g + two_n.clone().ln()) * psi_diff + g1_diff) / two_n;

    Ok(IdentityResult::from_sides(
        "EQ_3_9",
        "(3.9)",
        q.value.clone(),
        rhs,
        ctx.tol(),
        ms_since(start),
        quad_note(&q),
    ))
}

/// `sin(2 pi x)` times the log-log integral with kernel
/// `1 - 2u cos(2 pi x) + u^2`, against the closed form
/// `pi/2 log(pi/sin(pi x)) + pi/2 (1-2x) log(2 pi) - pi logGamma(x)`.
pub fn fourier_loglog(ctx: &PrecisionContext, x: &Float) -> Result<IdentityResult> {
    if !x.is_finite() || *x <= 0u32 || *x >= 1u32 {
        return Err(Error::Domain("requires 0 < x < 1".into()));
    }
    let start = Instant::now();
    let theta = ctx.pi() * 2u32 * x;
    let two_cos = theta.clone().cos() * 2u32;
    let sin_t = theta.sin();
    let f = move |t: &Float| {
        let w = (-t.clone()).exp();
        let den = w.clone().square() - w.clone() * &two_cos + 1u32;
        w * t.clone().ln() / den
    };
    let q = integrate(ctx, &f, &Interval::UpperInfinite(ctx.f(0)), quad_tol(ctx))?;
    let lhs = sin_t * &q.value;

    let pi = ctx.pi();
    let sin_px = Float::with_val(ctx.prec(), &pi * x).sin();
    let one_m2x = Float::with_val(ctx.prec(), 1u32 - Float::with_val(ctx.prec(), x * 2u32));
    let rhs = pi.clone() / 2u32 * (pi.clone().ln() - sin_px.ln())
        + pi.clone() / 2u32 * one_m2x * ctx.ln_2pi()
        - pi * zeta::log_gamma(ctx, x)?;

    Ok(IdentityResult::from_sides(
        "EQ_6_6",
        "(6.6)",
        lhs,
        rhs,
        ctx.tol(),
        ms_since(start),
        quad_note(&q),
    ))
}

/// The `x -> x + 1/2` companion of [`fourier_loglog`]: kernel
/// `1 + 2u cos(2 pi x) + u^2`, closed form
/// `pi/2 [2x log(2 pi) + logGamma(1/2 + x) - logGamma(1/2 - x)]`.
pub fn malmsten_loglog(ctx: &PrecisionContext, x: &Float) -> Result<IdentityResult> {
    let half = ctx.parse("1/2")?;
    if !x.is_finite() || *x <= 0u32 || *x >= half {
        return Err(Error::Domain("requires 0 < x < 1/2".into()));
    }
    let start = Instant::now();
    let theta = ctx.pi() * 2u32 * x;
    let two_cos = theta.clone().cos() * 2u32;
    let sin_t = theta.sin();
    let f = move |t: &Float| {
        let w = (-t.clone()).exp();
        let den = w.clone().square() + w.clone() * &two_cos + 1u32;
        w * t.clone().ln() / den
    };
    let q = integrate(ctx, &f, &Interval::UpperInfinite(ctx.f(0)), quad_tol(ctx))?;
    let lhs = sin_t * &q.value;

    let lg_plus = zeta::log_gamma(ctx, &Float::with_val(ctx.prec(), &half + x))?;
    let lg_minus = zeta::log_gamma(ctx, &Float::with_val(ctx.prec(), &half - x))?;
    let rhs = ctx.pi() / 2u32
        * (Float::with_val(ctx.prec(), x * 2u32) * ctx.ln_2pi() + lg_plus - lg_minus);

    Ok(IdentityResult::from_sides(
        "EQ_6_15",
        "(6.15)",
        lhs,
        rhs,
        ctx.tol(),
        ms_since(start),
        quad_note(&q),
    ))
}

/// `sin(2 pi x)` times the integral of `log t / (cosh t - cos(2 pi x))`
/// over `(0, inf)`, against
/// `pi (1-2x) log(2 pi) + pi log[Gamma(1-x)/Gamma(x)]`.
pub fn cosh_log_integral(ctx: &PrecisionContext, x: &Float) -> Result<IdentityResult> {
    if !x.is_finite() || *x <= 0u32 || *x >= 1u32 {
        return Err(Error::Domain("requires 0 < x < 1".into()));
    }
    let start = Instant::now();
    let theta = ctx.pi() * 2u32 * x;
    let cos_t = theta.clone().cos();
    let sin_t = theta.sin();
    let f = move |t: &Float| {
        let den = t.clone().cosh() - &cos_t;
        t.clone().ln() / den
    };
    let q = integrate(ctx, &f, &Interval::UpperInfinite(ctx.f(0)), quad_tol(ctx))?;
    let lhs = sin_t * &q.value;

    let pi = ctx.pi();
    let one_mx = Float::with_val(ctx.prec(), 1u32 - x);
    let one_m2x = Float::with_val(ctx.prec(), 1u32 - Float::with_val(ctx.prec(), x * 2u32));
    let rhs = pi.clone() * one_m2x * ctx.ln_2pi()
        + pi * (zeta::log_gamma(ctx, &one_mx)? - zeta::log_gamma(ctx, x)?);

    Ok(IdentityResult::from_sides(
        "EQ_6_13",
        "(6.13)",
        lhs,
        rhs,
        ctx.tol(),
        ms_since(start),
        quad_note(&q),
    ))
}

/// Clausen function `Cl_m(theta)` for true index `m >= 1` by the
/// log-kernel integral over the unit interval: for even `m` the
/// sine-series value `-sin(theta)/(m-1)! * int log^(m-1)x / k(x) dx`, for
/// odd `m` the cosine-series value
/// `-1/(m-1)! * int (x - cos theta) log^(m-1)x / k(x) dx`, with
/// `k(x) = 1 - 2x cos(theta) + x^2`.
pub fn clausen(ctx: &PrecisionContext, m: u32, theta: &Float) -> Result<QuadratureResult> {
    if m == 0 {
        return Err(Error::Domain("index m must be at least 1".into()));
    }
    let two_pi = ctx.pi() * 2u32;
    if !theta.is_finite() || *theta <= 0u32 || *theta >= two_pi {
        return Err(Error::Domain("requires 0 < theta < 2 pi".into()));
    }
    let cos_t = theta.clone().cos();
    let sin_t = theta.clone().sin();
    let two_cos = cos_t.clone() * 2u32;
    let k = m - 1;
    let even = m % 2 == 0;
    let f = move |x: &Float| {
        let den = x.clone().square() - x.clone() * &two_cos + 1u32;
        let lk = if k == 0 {
            Float::with_val(x.prec(), 1)
        } else {
            x.clone().ln().pow(k)
        };
        let num = if even { lk } else { (x.clone() - &cos_t) * lk };
        num / den
    };
    let q = integrate(
        ctx,
        &f,
        &Interval::Finite(ctx.f(0), ctx.f(1)),
        quad_tol(ctx),
    )?;
    let fac = ctx.f(&factorial(k));
    let value = if even {
        -(sin_t * &q.value) / fac
    } else {
        -(q.value.clone() / fac)
    };
    Ok(QuadratureResult {
        value,
        error_estimate: q.error_estimate,
        levels_used: q.levels_used,
        evaluations: q.evaluations,
    })
}

/// Digamma through its classical integral representation:
/// `psi(u) = log u - 1/(2u) - 2 int_0^inf x/((u^2+x^2)(e^(2 pi x)-1)) dx`.
pub fn digamma_integral(ctx: &PrecisionContext, u: &Float) -> Result<Float> {
    if !u.is_finite() || *u <= 0u32 {
        return Err(Error::Domain("requires u > 0".into()));
    }
    let u2 = u.clone().square();
    let two_pi = ctx.pi() * 2u32;
    let f = move |x: &Float| {
        let den = (x.clone() * &two_pi).exp_m1() * (x.clone().square() + &u2);
        x.clone() / den
    };
    let q = integrate(ctx, &f, &Interval::UpperInfinite(ctx.f(0)), quad_tol(ctx))?;
    let half_inv = Float::with_val(ctx.prec(), u * 2u32).recip();
    Ok(u.clone().ln() - half_inv - q.value * 2u32)
}

/// Hurwitz zeta by Hermite's integral,
/// `zeta(s,t) = t^(-s)/2 + t^(1-s)/(s-1)
///  + 2 int_0^inf sin(s arctan(x/t)) / ((t^2+x^2)^(s/2) (e^(2 pi x)-1)) dx`,
/// an integral route entirely independent of the summation engine.
pub fn hermite_hurwitz(ctx: &PrecisionContext, s: &Float, t: &Float) -> Result<Float> {
    if !t.is_finite() || *t <= 0u32 {
        return Err(Error::Domain("requires t > 0".into()));
    }
    if !s.is_finite() {
        return Err(Error::Domain("requires finite s".into()));
    }
    if *s == 1u32 {
        return Err(Error::Pole("s = 1 is the pole of zeta(s, t)".into()));
    }
    let t2 = t.clone().square();
    let tt = t.clone();
    let ss = s.clone();
    let half_s = Float::with_val(ctx.prec(), s / 2u32);
    let two_pi = ctx.pi() * 2u32;
    let f = move |x: &Float| {
        let r2 = x.clone().square() + &t2;
        let ang = Float::with_val(x.prec(), x / &tt).atan() * &ss;
        let pw = (r2.ln() * &half_s).exp();
        let den = pw * (x.clone() * &two_pi).exp_m1();
        ang.sin() / den
    };
    let q = integrate(ctx, &f, &Interval::UpperInfinite(ctx.f(0)), quad_tol(ctx))?;
    let head = t.clone().pow(-s.clone()) / 2u32;
    let one_ms = Float::with_val(ctx.prec(), 1u32 - s);
    let middle = t.clone().pow(one_ms) / Float::with_val(ctx.prec(), s - 1u32);
    Ok(head + middle + q.value * 2u32)
}

/// Alternating Hurwitz zeta by its Abel-Plana form,
/// `zeta_a(s,t) = t^(-s)/2
///  + 2 int_0^inf sin(s arctan(x/t)) / ((t^2+x^2)^(s/2) 2 sinh(pi x)) dx`.
pub fn abel_plana_alt(ctx: &PrecisionContext, s: &Float, t: &Float) -> Result<Float> {
    if !t.is_finite() || *t <= 0u32 {
        return Err(Error::Domain("requires t > 0".into()));
    }
    if !s.is_finite() {
        return Err(Error::Domain("requires finite s".into()));
    }
    let t2 = t.clone().square();
    let tt = t.clone();
    let ss = s.clone();
    let half_s = Float::with_val(ctx.prec(), s / 2u32);
    let pi = ctx.pi();
    let f = move |x: &Float| {
        let r2 = x.clone().square() + &t2;
        let ang = Float::with_val(x.prec(), x / &tt).atan() * &ss;
        let pw = (r2.ln() * &half_s).exp();
        let den = pw * (x.clone() * &pi).sinh() * 2u32;
        ang.sin() / den
    };
    let q = integrate(ctx, &f, &Interval::UpperInfinite(ctx.f(0)), quad_tol(ctx))?;
    Ok(t.clone().pow(-s.clone()) / 2u32 + q.value * 2u32)
}

/// The log-weighted unit-interval integral
/// `int_0^1 u log(1/u) loglog(1/u) / (1+u^2) du` against its closed form
/// `pi^2/48 [log(2 pi) + g - 1] + pi^2/4 zeta'(-1) + (1-g) zeta(2)/8`,
/// with `zeta'(-1)` taken from the s-derivative jet at -1.
pub fn log_weighted_cos_integral(ctx: &PrecisionContext) -> Result<IdentityResult> {
    let start = Instant::now();
    let f = |t: &Float| {
        let e2 = (t.clone() * -2i32).exp();
        t.clone() * t.clone().ln() * &e2 / (e2.clone() + 1u32)
    };
    let q = integrate(ctx, &f, &Interval::UpperInfinite(ctx.f(0)), quad_tol(ctx))?;

    let g = zeta::euler_gamma(ctx)?;
    let zp_m1 = zeta::hurwitz_zeta_jet(ctx, &ctx.f(-1), &ctx.f(1), 1)?
        .jet
        .deriv(1);
    let pi2 = ctx.pi().square();
    let zeta2 = pi2.clone() / 6u32;
    let rhs = pi2.clone() / 48u32 * (ctx.ln_2pi() + &g - 1u32)
        + pi2 / 4u32 * zp_m1
        + (Float::with_val(ctx.prec(), 1u32 - &g)) * zeta2 / 8u32;

    Ok(IdentityResult::from_sides(
        "EQ_6_9",
        "(6.9)",
        q.value.clone(),
        rhs,
        ctx.tol(),
        ms_since(start),
        quad_note(&q),
    ))
}
