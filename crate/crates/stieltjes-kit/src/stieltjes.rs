//! Generalized Stieltjes constants by three independent routes.
//!
//! `gamma_p(a)` are the expansion coefficients of the Hurwitz zeta
//! function about its pole. The primary route reads them off the
//! pole-extracted jet; a truncated double binomial sum and an integral
//! representation give two structurally unrelated cross-checks. The
//! rest of the module is the algebra the constants satisfy: the unit
//! shift, the derivative in the argument, rational-argument
//! summations, and two-argument differences.

use std::time::Instant;

use rug::ops::Pow;
use rug::{Float, Integer};

use crate::identities::IdentityResult;
use crate::numerics::{bernoulli, binomial, Jet, PrecisionContext, SeriesDiagnostics};
use crate::quadrature::{integrate, ms_since, quad_tol, Interval};
use crate::zeta::hurwitz_zeta_jet;
use crate::{Error, Result};

/// Which computation produced a [`StieltjesValue`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StieltjesRoute {
    /// Coefficients of the pole-extracted Hurwitz zeta jet.
    JetEm,
    /// Truncated double binomial sum over powers of `log(a + k)`.
    Hasse,
    /// Two elementary log terms plus a quadrature against
    /// `1/(e^{2 pi x} - 1)`.
    AbelPlana,
    /// Finite combination of previously computed constants.
    ClosedForm,
}

/// One computed constant `gamma_p(a)` together with its provenance.
#[derive(Clone, Debug)]
pub struct StieltjesValue {
    pub p: u32,
    pub a: Float,
    pub value: Float,
    pub route: StieltjesRoute,
    pub diagnostics: SeriesDiagnostics,
}

fn check_argument(what: &str, a: &Float) -> Result<()> {
    if !a.is_finite() || *a <= 0 {
        return Err(Error::Domain(format!(
            "{what} needs a positive argument, got {}",
            a.to_f64()
        )));
    }
    Ok(())
}

/// `gamma_0(a) .. gamma_p(a)` from a single jet evaluation.
fn gamma_family(ctx: &PrecisionContext, p: u32, a: &Float) -> Result<Vec<Float>> {
    let r = hurwitz_zeta_jet(ctx, &ctx.f(1), a, p as usize)?;
    Ok((0..=p as usize)
        .map(|k| {
            let mut v = r.jet.deriv(k);
            if k % 2 == 1 {
                v = -v;
            }
            v
        })
        .collect())
}

/// `gamma_p(a)` from the pole-extracted Hurwitz jet (the primary route).
pub fn stieltjes_gamma(ctx: &PrecisionContext, p: u32, a: &Float) -> Result<StieltjesValue> {
    check_argument("stieltjes_gamma", a)?;
    let r = hurwitz_zeta_jet(ctx, &ctx.f(1), a, p as usize)?;
    let mut value = r.jet.deriv(p as usize);
    if p % 2 == 1 {
        value = -value;
    }
    Ok(StieltjesValue {
        p,
        a: ctx.f(a),
        value,
        route: StieltjesRoute::JetEm,
        diagnostics: r.diagnostics,
    })
}

/// Shared core of the one- and two-argument binomial sums. Each entry
/// of `args` contributes `sign * log^{p+1}(a + k)` to the inner sums.
fn hasse_log_sum(
    ctx: &PrecisionContext,
    p: u32,
    args: &[(Float, bool)],
    n_rows: u32,
) -> Result<(Float, SeriesDiagnostics)> {
    for (a, _) in args {
        check_argument("the binomial-sum route", a)?;
    }
    let digits = ctx.working_digits() as f64;
    let loss = n_rows as f64 * 2f64.log10();
    if loss >= digits - 3.0 {
        return Err(Error::Capability(format!(
            "{n_rows} binomial rows would cost about {loss:.0} digits of the {digits} available"
        )));
    }
    let prec = ctx.prec();
    // Cache the signed log powers once; every inner sum reuses them.
    let logs: Vec<Float> = (0..=n_rows)
        .map(|k| {
            let mut s = Float::new(prec);
            for (a, negate) in args {
                let l = (ctx.f(k) + a).ln().pow(p + 1);
                if *negate {
                    s -= l;
                } else {
                    s += l;
                }
            }
            s
        })
        .collect();
    let mut total = Float::new(prec);
    let mut last_row = Float::new(prec);
    for n in 0..=n_rows {
        let mut inner = Float::new(prec);
        for k in 0..=n {
            let c = ctx.f(&binomial(n, k));
            if k % 2 == 0 {
                inner += c * &logs[k as usize];
            } else {
                inner -= c * &logs[k as usize];
            }
        }
        last_row = inner / (ctx.f(n) + 1u32);
        total += &last_row;
    }
    let value = -total / (ctx.f(p) + 1u32);
    let mut a_min = args[0].0.clone();
    for (a, _) in &args[1..] {
        if *a < a_min {
            a_min = a.clone();
        }
    }
    // Same empirical row-decay bound as the zeta-side binomial sum; the
    // smallest argument controls the decay.
    let tail = last_row.abs() * ctx.f(n_rows + 1) / a_min * 3u32 / (ctx.f(p) + 1u32);
    let diag = SeriesDiagnostics {
        terms_used: n_rows as usize + 1,
        truncation_tail: tail.to_f64(),
        cancellation_loss_digits: loss,
        converged: tail.to_f64() < ctx.tol().to_f64(),
    };
    Ok((value, diag))
}

/// `gamma_p(a)` from the truncated double binomial sum over log powers.
///
/// The full sum is exact in the limit but its rows decay slowly and
/// alternating cancellation costs about 0.3 digits per row, so the
/// result is advisory: read `diagnostics.truncation_tail` before
/// trusting any digit.
pub fn stieltjes_gamma_hasse(
    ctx: &PrecisionContext,
    p: u32,
    a: &Float,
    n_rows: u32,
) -> Result<StieltjesValue> {
    let (value, diagnostics) = hasse_log_sum(ctx, p, &[(ctx.f(a), false)], n_rows)?;
    Ok(StieltjesValue {
        p,
        a: ctx.f(a),
        value,
        route: StieltjesRoute::Hasse,
        diagnostics,
    })
}

/// `gamma_p(x) - gamma_p(y)` from the two-argument binomial sum, with
/// the same advisory diagnostics as the one-argument form.
pub fn stieltjes_hasse_difference(
    ctx: &PrecisionContext,
    p: u32,
    x: &Float,
    y: &Float,
    n_rows: u32,
) -> Result<(Float, SeriesDiagnostics)> {
    hasse_log_sum(ctx, p, &[(ctx.f(x), false), (ctx.f(y), true)], n_rows)
}

/// `gamma_n(t)` from the integral representation: two elementary log
/// terms plus a quadrature of the complex-log kernel against
/// `1/(e^{2 pi x} - 1)`.
///
/// The kernel is `Im[log^n(t - ix)/(t - ix)]`, expanded into real form
/// with `log(t + ix) = A + iB`, `A = log(t^2 + x^2)/2`, `B = atan(x/t)`,
/// and exact binomial coefficients for `(A + iB)^n`.
pub fn stieltjes_gamma_abel_plana(
    ctx: &PrecisionContext,
    n: u32,
    t: &Float,
) -> Result<StieltjesValue> {
    check_argument("stieltjes_gamma_abel_plana", t)?;
    let n_us = n as usize;
    let coeffs: Vec<Integer> = (0..=n).map(|j| binomial(n, j)).collect();
    let tc = ctx.f(t);
    let t2 = tc.clone().square();
    let two_pi = ctx.pi() * 2u32;
    let integrand = move |x: &Float| -> Float {
        let prec = x.prec();
        let rho2 = x.clone().square() + &t2;
        let a = rho2.clone().ln() / 2u32;
        let b = Float::with_val(prec, x / &tc).atan();
        let mut apow = Vec::with_capacity(n_us + 1);
        apow.push(Float::with_val(prec, 1));
        let mut bpow = apow.clone();
        for j in 1..=n_us {
            apow.push(Float::with_val(prec, &apow[j - 1] * &a));
            bpow.push(Float::with_val(prec, &bpow[j - 1] * &b));
        }
        let mut w_re = Float::new(prec);
        let mut w_im = Float::new(prec);
        for (j, c) in coeffs.iter().enumerate() {
            let mut term = Float::with_val(prec, &apow[n_us - j] * &bpow[j]);
            term *= c;
            match j % 4 {
                0 => w_re += term,
                1 => w_im += term,
                2 => w_re -= term,
                _ => w_im -= term,
            }
        }
        let mut num = w_im;
        num *= &tc;
        let mut xr = w_re;
        xr *= x;
        num -= xr;
        let denom = Float::with_val(prec, &two_pi * x).exp_m1() * &rho2;
        let mut val = num / denom;
        val <<= 1u32;
        -val
    };
    let q = integrate(
        ctx,
        &integrand,
        &Interval::UpperInfinite(Float::new(ctx.prec())),
        quad_tol(ctx),
    )?;
    let lt = ctx.f(t).ln();
    let value =
        lt.clone().pow(n) / (ctx.f(t) * 2u32) - lt.pow(n + 1) / (ctx.f(n) + 1u32) + &q.value;
    let diagnostics = SeriesDiagnostics {
        terms_used: q.evaluations as usize,
        truncation_tail: q.error_estimate.to_f64(),
        cancellation_loss_digits: 0.0,
        converged: true,
    };
    Ok(StieltjesValue {
        p: n,
        a: ctx.f(t),
        value,
        route: StieltjesRoute::AbelPlana,
        diagnostics,
    })
}

/// The unit-shift increment: `gamma_p(1 + x) - gamma_p(x) = -log^p(x)/x`.
///
/// At `x = 1` this is `0` for `p >= 1` (the constants at 2 equal those
/// at 1) but `-1` for `p = 0`, because `log^0 = 1`.
pub fn stieltjes_shift(ctx: &PrecisionContext, p: u32, x: &Float) -> Result<Float> {
    check_argument("stieltjes_shift", x)?;
    let lx = ctx.f(x).ln();
    Ok(-(lx.pow(p) / x))
}

/// `d/dx gamma_p(x)`, expressed through the Hurwitz jet at `s0 = 2`:
/// `(-1)^{p+1} [p zeta^{(p-1)}(2, x) + zeta^{(p)}(2, x)]`.
pub fn stieltjes_derivative(ctx: &PrecisionContext, p: u32, x: &Float) -> Result<Float> {
    if p == 0 {
        return Err(Error::Precondition(
            "p = 0 differentiates to -psi'(x); this form needs p >= 1".into(),
        ));
    }
    check_argument("stieltjes_derivative", x)?;
    let r = hurwitz_zeta_jet(ctx, &ctx.f(2), x, p as usize)?;
    let mut v = r.jet.deriv(p as usize) + ctx.f(p) * r.jet.deriv(p as usize - 1);
    if p % 2 == 0 {
        v = -v;
    }
    Ok(v)
}

/// Rational-argument summation: `sum_{r=1}^{q-1} gamma_p(r/q)` has a
/// finite closed form in `gamma_0 .. gamma_p` and `log q`. The left
/// side sums route-1 values; the right side is the closed form.
pub fn coffey_rational_sum(ctx: &PrecisionContext, p: u32, q: u32) -> Result<IdentityResult> {
    if q < 2 {
        return Err(Error::Precondition(format!(
            "the rational-argument sum needs q >= 2, got q = {q}"
        )));
    }
    let start = Instant::now();
    let prec = ctx.prec();
    let mut lhs = Float::new(prec);
    for r in 1..q {
        let a = ctx.f(r) / ctx.f(q);
        lhs += stieltjes_gamma(ctx, p, &a)?.value;
    }
    let g = gamma_family(ctx, p, &ctx.f(1))?;
    let lq = ctx.f(q).ln();
    let mut rhs = -g[p as usize].clone();
    let mut lead = lq.clone().pow(p + 1) * ctx.f(q) / (ctx.f(p) + 1u32);
    if p % 2 == 1 {
        lead = -lead;
    }
    rhs += lead;
    let mut sum = Float::new(prec);
    for j in 0..=p {
        let mut term = lq.clone().pow(j) * &g[(p - j) as usize];
        term *= binomial(p, j);
        if j % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    rhs += sum * ctx.f(q);
    let note = format!(
        "lhs: {} route-1 values summed; rhs: closed form in gamma_0..gamma_{p} at 1 and log {q}",
        q - 1
    );
    Ok(IdentityResult::from_sides(
        "EQ_2_19",
        "(2.19)",
        lhs,
        rhs,
        ctx.tol(),
        ms_since(start),
        note,
    ))
}

/// Multiplication relation: `sum_{r=0}^{q-1} gamma_p((r + x)/q)` against
/// its closed form in `gamma_0(x) .. gamma_p(x)` and `log q`.
pub fn multiplication_relation(
    ctx: &PrecisionContext,
    p: u32,
    q: u32,
    x: &Float,
) -> Result<IdentityResult> {
    if q < 2 {
        return Err(Error::Precondition(format!(
            "the multiplication relation needs q >= 2, got q = {q}"
        )));
    }
    check_argument("multiplication_relation", x)?;
    let start = Instant::now();
    let prec = ctx.prec();
    let mut lhs = Float::new(prec);
    for r in 0..q {
        let a = (ctx.f(r) + x) / ctx.f(q);
        lhs += stieltjes_gamma(ctx, p, &a)?.value;
    }
    let g = gamma_family(ctx, p, x)?;
    let lq = ctx.f(q).ln();
    let mut rhs = lq.clone().pow(p + 1) * ctx.f(q) / (ctx.f(p) + 1u32);
    if p % 2 == 1 {
        rhs = -rhs;
    }
    let mut sum = Float::new(prec);
    for k in 0..=p {
        let mut term = lq.clone().pow(k) * &g[(p - k) as usize];
        term *= binomial(p, k);
        if k % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    rhs += sum * ctx.f(q);
    let note = format!(
        "lhs: {q} route-1 values summed; rhs: closed form in gamma_0..gamma_{p} at x and log {q}"
    );
    Ok(IdentityResult::from_sides(
        "EQ_2_18_1",
        "(2.18.1)",
        lhs,
        rhs,
        ctx.tol(),
        ms_since(start),
        note,
    ))
}

/// Jet of `log^p(t + shift)/(t + shift)` in `t` about `t0`, used for
/// the tail corrections of the telescoped difference series. Expanding
/// both shifted terms in the same variable keeps their jets
/// subtractable.
fn log_ratio_jet(prec: u32, p: u32, t0: &Float, shift: &Float, order: usize) -> Result<Jet> {
    let mut c = vec![Float::new(prec); order + 1];
    c[0] = Float::with_val(prec, t0 + shift);
    if order >= 1 {
        c[1] = Float::with_val(prec, 1);
    }
    let w = Jet::from_coeffs(Float::with_val(prec, t0), c);
    w.ln()?.powi(p).div(&w)
}

/// `gamma_p(x) - gamma_p(y)` by telescoping the defining limit sums:
/// the partial sums of `log^p(n+x)/(n+x) - log^p(n+y)/(n+y)` converge
/// on their own, and an Euler-Maclaurin tail of the same difference
/// function removes the algebraic remainder. The cut is lengthened
/// until the correction terms settle below working precision.
pub fn stieltjes_difference(
    ctx: &PrecisionContext,
    p: u32,
    x: &Float,
    y: &Float,
) -> Result<Float> {
    check_argument("stieltjes_difference", x)?;
    check_argument("stieltjes_difference", y)?;
    let prec = ctx.prec();
    if x == y {
        return Ok(Float::new(prec));
    }
    let term = |w: Float| -> Float {
        let l = w.clone().ln();
        l.pow(p) / w
    };
    let eps = ctx.eps();
    let max_corrections = ctx.working_digits() as usize + 8;
    let mut n_head = 64u32;
    for _ in 0..4 {
        let mut s = Float::new(prec);
        for k in 0..n_head {
            s += term(ctx.f(k) + x);
            s -= term(ctx.f(k) + y);
        }
        let t0 = ctx.f(n_head);
        let wx = t0.clone() + x;
        let wy = t0.clone() + y;
        // Remainder integral of the difference function, in closed form.
        s += (wy.clone().ln().pow(p + 1) - wx.clone().ln().pow(p + 1)) / (ctx.f(p) + 1u32);
        // Half-weight boundary term.
        s += (term(wx) - term(wy)) / 2u32;
        let g = log_ratio_jet(prec, p, &t0, x, 2 * max_corrections + 1)?
            .sub(&log_ratio_jet(prec, p, &t0, y, 2 * max_corrections + 1)?);
        let mut scale = Float::with_val(prec, 1);
        let sa = s.clone().abs();
        if sa > scale {
            scale = sa;
        }
        scale *= &eps;
        let mut prev = Float::with_val(prec, rug::float::Special::Infinity);
        let mut converged = false;
        for j in 1..=max_corrections as u32 {
            let b = bernoulli(2 * j)?;
            let mut corr = ctx.f(&b) * g.coeff(2 * j as usize - 1);
            corr /= 2 * j;
            let mag = corr.clone().abs();
            if mag > prev {
                // The corrections are asymptotic; growth means the cut
                // is too short for the requested precision.
                break;
            }
            s -= corr;
            if mag <= scale {
                converged = true;
                break;
            }
            prev = mag;
        }
        if converged {
            return Ok(s);
        }
        n_head *= 2;
    }
    Err(Error::Convergence(format!(
        "tail corrections for gamma_{p}({}) - gamma_{p}({}) did not settle below working \
         precision by a cut of {n_head}",
        x.to_f64(),
        y.to_f64()
    )))
}
