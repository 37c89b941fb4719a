//! Precision context, extended-precision scalars, jet (truncated Taylor)
//! arithmetic in one variable, a minimal complex type, and exact
//! combinatorial tables (Bernoulli, harmonic, Stirling, binomial) shared
//! by every other module.

use std::cmp::Ordering;
use std::sync::OnceLock;

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complete, Float, Integer, Rational};

use crate::{Error, Result};

/// Extended-precision real scalar. All arithmetic is deterministic for a
/// fixed precision, so results are reproducible across runs and threads.
pub type Real = Float;

const DEFAULT_MAX_TERMS: usize = 2_000_000;
const BERNOULLI_LIMIT: u32 = 200;
const STIRLING_LIMIT: u32 = 256;

/// Working precision plus the default tolerance and series cap used by
/// the identity suite. Everything downstream creates its scalars through
/// this context so that one run is carried out at one precision.
#[derive(Clone, Debug)]
pub struct PrecisionContext {
    working_digits: u32,
    prec: u32,
    target_rel_tol: Float,
    max_terms: usize,
}

impl PrecisionContext {
    /// Context with the given decimal working digits and the default
    /// relative tolerance of 1e-9.
    pub fn new(working_digits: u32) -> Result<Self> {
        let prec = Self::bits_for(working_digits);
        let tol = Float::with_val(prec, 10).pow(-9);
        Self::with_tol(working_digits, tol)
    }

    /// Context with an explicit target tolerance. Requires enough digits
    /// to leave at least two guard digits beyond the tolerance.
    pub fn with_tol(working_digits: u32, target_rel_tol: Float) -> Result<Self> {
        if !(target_rel_tol.is_finite() && target_rel_tol.is_sign_positive())
            || target_rel_tol.is_zero()
        {
            return Err(Error::Config("tolerance must be positive".into()));
        }
        let tol_digits = -target_rel_tol.to_f64().log10();
        let needed = 2 + tol_digits.ceil().max(0.0) as u32;
        if working_digits < needed {
            return Err(Error::Config(format!(
                "{working_digits} digits leave no guard digits for tolerance {:e} \
                 (need at least {needed})",
                target_rel_tol.to_f64()
            )));
        }
        let prec = Self::bits_for(working_digits);
        Ok(Self {
            working_digits,
            prec,
            target_rel_tol: Float::with_val(prec, &target_rel_tol),
            max_terms: DEFAULT_MAX_TERMS,
        })
    }

    fn bits_for(digits: u32) -> u32 {
        (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 64
    }

    pub fn working_digits(&self) -> u32 {
        self.working_digits
    }

    /// Binary precision of every scalar created through this context.
    pub fn prec(&self) -> u32 {
        self.prec
    }

    pub fn tol(&self) -> &Float {
        &self.target_rel_tol
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn with_max_terms(mut self, max_terms: usize) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::Config("max_terms must be at least 1".into()));
        }
        self.max_terms = max_terms;
        Ok(self)
    }

    /// New scalar at context precision from anything rug can assign.
    pub fn f<T>(&self, v: T) -> Float
    where
        Float: rug::ops::AssignRound<T, Round = rug::float::Round, Ordering = Ordering>,
    {
        Float::with_val(self.prec, v)
    }

    /// Parse "p/q" as an exact rational or a decimal/scientific literal.
    pub fn parse(&self, s: &str) -> Result<Float> {
        let s = s.trim();
        if s.contains('/') {
            let r: Rational = s
                .parse()
                .map_err(|_| Error::Config(format!("cannot parse rational {s:?}")))?;
            Ok(self.f(&r))
        } else {
            let inc = Float::parse(s)
                .map_err(|_| Error::Config(format!("cannot parse number {s:?}")))?;
            Ok(self.f(inc))
        }
    }

    pub fn pi(&self) -> Float {
        self.f(Constant::Pi)
    }

    pub fn ln2(&self) -> Float {
        self.f(Constant::Log2)
    }

    /// log(2 pi), a recurring constant in the closed forms.
    pub fn ln_2pi(&self) -> Float {
        let two_pi = self.f(Constant::Pi) * 2u32;
        two_pi.ln()
    }

    /// Granularity of the context: 2^(10 - prec). Internal iterations aim
    /// for this, well inside the user-facing tolerance.
    pub fn eps(&self) -> Float {
        self.f(1u32) >> (self.prec - 10)
    }

    /// Mixed absolute/relative comparison at the context tolerance:
    /// |a - b| <= tol * max(1, |a|, |b|).
    pub fn near(&self, a: &Float, b: &Float) -> bool {
        near(a, b, &self.target_rel_tol)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self::new(34).expect("34-digit default context is valid")
    }
}

/// |a - b| <= tol * max(1, |a|, |b|). Symmetric in a and b.
pub fn near(a: &Float, b: &Float, tol: &Float) -> bool {
    let prec = a.prec().max(b.prec());
    let diff = Float::with_val(prec, a - b).abs();
    let mut scale = Float::with_val(prec, 1);
    let aa = a.clone().abs();
    let bb = b.clone().abs();
    if aa > scale {
        scale = aa;
    }
    if bb > scale {
        scale = bb;
    }
    diff <= scale * tol.clone()
}

/// Estimated decimal digits separating two quantities; used for
/// cancellation diagnostics.
pub fn rel_err(a: &Float, b: &Float) -> f64 {
    let prec = a.prec().max(b.prec());
    let diff = Float::with_val(prec, a - b).abs();
    let mut scale = a.clone().abs();
    let bb = b.clone().abs();
    if bb > scale {
        scale = bb;
    }
    if scale.is_zero() {
        return diff.to_f64();
    }
    (diff / scale).to_f64()
}

// ---------------------------------------------------------------------------
// Series diagnostics
// ---------------------------------------------------------------------------

/// What a series/summation route reports about its own accuracy.
#[derive(Clone, Debug, Default)]
pub struct SeriesDiagnostics {
    pub terms_used: usize,
    /// Estimated magnitude of the omitted tail.
    pub truncation_tail: f64,
    /// Estimated decimal digits lost to cancellation among intermediates.
    pub cancellation_loss_digits: f64,
    pub converged: bool,
}

// ---------------------------------------------------------------------------
// Jets
// ---------------------------------------------------------------------------

/// Truncated Taylor polynomial c0 + c1 eps + ... + cK eps^K about a base
/// point. Arithmetic on jets carries function values and derivatives
/// through a computation simultaneously; the p-th derivative at the base
/// point is p! * c_p.
#[derive(Clone, Debug)]
pub struct Jet {
    base: Float,
    c: Vec<Float>,
}

impl Jet {
    pub fn from_coeffs(base: Float, c: Vec<Float>) -> Jet {
        assert!(!c.is_empty(), "jet needs at least the constant coefficient");
        Jet { base, c }
    }

    /// Jet of the constant function v.
    pub fn constant(prec: u32, base: &Float, v: &Float, order: usize) -> Jet {
        let mut c = vec![Float::new(prec); order + 1];
        c[0] = Float::with_val(prec, v);
        Jet {
            base: Float::with_val(prec, base),
            c,
        }
    }

    /// Jet of the expansion variable itself: s = base + eps.
    pub fn variable(prec: u32, base: &Float, order: usize) -> Jet {
        let mut c = vec![Float::new(prec); order + 1];
        c[0] = Float::with_val(prec, base);
        if order >= 1 {
            c[1] = Float::with_val(prec, 1);
        }
        Jet {
            base: Float::with_val(prec, base),
            c,
        }
    }

    pub fn prec(&self) -> u32 {
        self.c[0].prec()
    }

    pub fn order(&self) -> usize {
        self.c.len() - 1
    }

    pub fn base(&self) -> &Float {
        &self.base
    }

    pub fn coeff(&self, k: usize) -> &Float {
        &self.c[k]
    }

    pub fn coeffs(&self) -> &[Float] {
        &self.c
    }

    /// Value of the function at the base point (c0).
    pub fn value(&self) -> &Float {
        &self.c[0]
    }

    /// p-th derivative at the base point: p! * c_p.
    pub fn deriv(&self, p: usize) -> Float {
        let prec = self.prec();
        let fac = factorial(p as u32);
        Float::with_val(prec, &self.c[p] * &fac)
    }

    pub fn truncated(&self, order: usize) -> Jet {
        let order = order.min(self.order());
        Jet {
            base: self.base.clone(),
            c: self.c[..=order].to_vec(),
        }
    }

    fn common_order(&self, o: &Jet) -> usize {
        debug_assert_eq!(self.base, o.base, "jets expand about different points");
        self.order().min(o.order())
    }

    pub fn add(&self, o: &Jet) -> Jet {
        let n = self.common_order(o);
        let prec = self.prec();
        let c = (0..=n)
            .map(|k| Float::with_val(prec, &self.c[k] + &o.c[k]))
            .collect();
        Jet {
            base: self.base.clone(),
            c,
        }
    }

    pub fn sub(&self, o: &Jet) -> Jet {
        let n = self.common_order(o);
        let prec = self.prec();
        let c = (0..=n)
            .map(|k| Float::with_val(prec, &self.c[k] - &o.c[k]))
            .collect();
        Jet {
            base: self.base.clone(),
            c,
        }
    }

    pub fn neg(&self) -> Jet {
        let prec = self.prec();
        Jet {
            base: self.base.clone(),
            c: self.c.iter().map(|x| -Float::with_val(prec, x)).collect(),
        }
    }

    pub fn scale(&self, k: &Float) -> Jet {
        let prec = self.prec();
        Jet {
            base: self.base.clone(),
            c: self
                .c
                .iter()
                .map(|x| Float::with_val(prec, x * k))
                .collect(),
        }
    }

    pub fn add_real(&self, v: &Float) -> Jet {
        let mut out = self.clone();
        out.c[0] += v;
        out
    }

    pub fn mul(&self, o: &Jet) -> Jet {
        let n = self.common_order(o);
        let prec = self.prec();
        let mut c = vec![Float::new(prec); n + 1];
        for k in 0..=n {
            for i in 0..=k {
                c[k] += &self.c[i] * &o.c[k - i];
            }
        }
        Jet {
            base: self.base.clone(),
            c,
        }
    }

    /// Forward substitution against the divisor's constant term.
    pub fn div(&self, o: &Jet) -> Result<Jet> {
        if o.c[0].is_zero() {
            return Err(Error::Domain(
                "jet division by a jet with zero constant term".into(),
            ));
        }
        let n = self.common_order(o);
        let prec = self.prec();
        let mut q = vec![Float::new(prec); n + 1];
        for k in 0..=n {
            let mut acc = Float::with_val(prec, &self.c[k]);
            for j in 1..=k {
                acc -= &o.c[j] * &q[k - j];
            }
            q[k] = acc / &o.c[0];
        }
        Ok(Jet {
            base: self.base.clone(),
            c: q,
        })
    }

    pub fn recip(&self) -> Result<Jet> {
        let one = Jet::constant(self.prec(), &self.base, &Float::with_val(self.prec(), 1), self.order());
        one.div(self)
    }

    /// exp via the derivative recurrence y' = a' y, so y_k is built from
    /// lower coefficients in O(K^2) operations.
    pub fn exp(&self) -> Jet {
        let n = self.order();
        let prec = self.prec();
        let mut y = vec![Float::new(prec); n + 1];
        y[0] = Float::with_val(prec, self.c[0].clone().exp());
        for k in 1..=n {
            let mut acc = Float::new(prec);
            for j in 1..=k {
                let ja = Float::with_val(prec, &self.c[j] * (j as u32));
                acc += ja * &y[k - j];
            }
            y[k] = acc / Float::with_val(prec, k as u32);
        }
        Jet {
            base: self.base.clone(),
            c: y,
        }
    }

    /// ln via the inverse recurrence of exp; requires c0 > 0.
    pub fn ln(&self) -> Result<Jet> {
        if self.c[0].cmp0() != Some(Ordering::Greater) {
            return Err(Error::Domain("jet ln needs a positive constant term".into()));
        }
        let n = self.order();
        let prec = self.prec();
        let mut l = vec![Float::new(prec); n + 1];
        l[0] = Float::with_val(prec, self.c[0].clone().ln());
        for k in 1..=n {
            let mut acc = Float::with_val(prec, &self.c[k] * (k as u32));
            for j in 1..k {
                let jl = Float::with_val(prec, &l[j] * (j as u32));
                acc -= jl * &self.c[k - j];
            }
            l[k] = acc / Float::with_val(prec, (k as u32) * &self.c[0]);
        }
        Ok(Jet {
            base: self.base.clone(),
            c: l,
        })
    }

    /// Real power through exp(e ln self); requires c0 > 0.
    pub fn pow_real(&self, e: &Float) -> Result<Jet> {
        Ok(self.ln()?.scale(e).exp())
    }

    /// Small integer power by repeated multiplication.
    pub fn powi(&self, n: u32) -> Jet {
        let prec = self.prec();
        let mut acc = Jet::constant(prec, &self.base, &Float::with_val(prec, 1), self.order());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate the truncated polynomial at an offset eps from the base.
    pub fn eval(&self, eps: &Float) -> Float {
        let prec = self.prec();
        let mut acc = Float::new(prec);
        for k in (0..=self.order()).rev() {
            acc = acc * eps + &self.c[k];
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Complex
// ---------------------------------------------------------------------------

/// Minimal complex scalar over Real: just enough for polar decompositions
/// of (t + ix)^n integrands and principal-branch logs.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: Float,
    pub im: Float,
}

impl Complex {
    pub fn new(re: Float, im: Float) -> Complex {
        Complex { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn add(&self, o: &Complex) -> Complex {
        let prec = self.prec();
        Complex {
            re: Float::with_val(prec, &self.re + &o.re),
            im: Float::with_val(prec, &self.im + &o.im),
        }
    }

    pub fn sub(&self, o: &Complex) -> Complex {
        let prec = self.prec();
        Complex {
            re: Float::with_val(prec, &self.re - &o.re),
            im: Float::with_val(prec, &self.im - &o.im),
        }
    }

    pub fn mul(&self, o: &Complex) -> Complex {
        let prec = self.prec();
        let mut re = Float::with_val(prec, &self.re * &o.re);
        re -= &self.im * &o.im;
        let mut im = Float::with_val(prec, &self.re * &o.im);
        im += &self.im * &o.re;
        Complex { re, im }
    }

    pub fn scale(&self, k: &Float) -> Complex {
        let prec = self.prec();
        Complex {
            re: Float::with_val(prec, &self.re * k),
            im: Float::with_val(prec, &self.im * k),
        }
    }

    pub fn abs(&self) -> Float {
        let prec = self.prec();
        let mut s = Float::with_val(prec, &self.re * &self.re);
        s += &self.im * &self.im;
        s.sqrt()
    }

    /// Principal argument in (-pi, pi].
    pub fn arg(&self) -> Float {
        self.im.clone().atan2(&self.re)
    }

    /// Principal branch logarithm.
    pub fn ln(&self) -> Complex {
        let prec = self.prec();
        let mut sq = Float::with_val(prec, &self.re * &self.re);
        sq += &self.im * &self.im;
        Complex {
            re: sq.ln() >> 1,
            im: self.arg(),
        }
    }

    pub fn powi(&self, n: u32) -> Complex {
        let prec = self.prec();
        let mut acc = Complex {
            re: Float::with_val(prec, 1),
            im: Float::new(prec),
        };
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

// ---------------------------------------------------------------------------
// Exact tables
// ---------------------------------------------------------------------------

fn bernoulli_table() -> &'static Vec<Rational> {
    static TABLE: OnceLock<Vec<Rational>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = BERNOULLI_LIMIT as usize;
        let mut b: Vec<Rational> = Vec::with_capacity(n + 1);
        b.push(Rational::from(1));
        for m in 1..=n {
            // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
            let mut acc = Rational::new();
            for (k, bk) in b.iter().enumerate() {
                let c = binomial((m + 1) as u32, k as u32);
                acc += (bk * &c).complete();
            }
            acc /= -Rational::from((m as u32) + 1);
            b.push(acc);
        }
        b
    })
}

/// Bernoulli number B_n with the B_1 = -1/2 convention of the
/// t/(e^t - 1) generating function. Odd n > 1 give 0.
pub fn bernoulli(n: u32) -> Result<Rational> {
    if n > BERNOULLI_LIMIT {
        return Err(Error::Capability(format!(
            "Bernoulli table holds n <= {BERNOULLI_LIMIT}, asked for {n}"
        )));
    }
    Ok(bernoulli_table()[n as usize].clone())
}

/// Exact binomial coefficient by the multiplicative formula.
pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::new();
    }
    let k = k.min(n - k);
    let mut acc = Integer::from(1);
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

pub fn factorial(n: u32) -> Integer {
    Integer::factorial(n).complete()
}

fn stirling_table() -> &'static Vec<Vec<Integer>> {
    static TABLE: OnceLock<Vec<Vec<Integer>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = STIRLING_LIMIT as usize;
        // Signed first kind: s(m+1, k) = s(m, k-1) - m * s(m, k).
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(n + 1);
        rows.push(vec![Integer::from(1)]);
        for m in 1..=n {
            let prev = &rows[m - 1];
            let mut row = vec![Integer::new(); m + 1];
            for k in 1..=m {
                let carry = prev[k - 1].clone();
                let dropped = if k < prev.len() {
                    prev[k].clone() * (m as u32 - 1)
                } else {
                    Integer::new()
                };
                row[k] = carry - dropped;
            }
            rows.push(row);
        }
        rows
    })
}

/// Signed Stirling number of the first kind s(n, k).
pub fn stirling_first(n: u32, k: u32) -> Result<Integer> {
    if n > STIRLING_LIMIT {
        return Err(Error::Capability(format!(
            "Stirling table holds n <= {STIRLING_LIMIT}, asked for {n}"
        )));
    }
    if k > n {
        return Ok(Integer::new());
    }
    Ok(stirling_table()[n as usize][k as usize].clone())
}

/// Generalized harmonic number H_n^{(m)}(r) = sum_{k=0}^{n-1} (k + r)^{-m}.
pub fn harmonic(ctx: &PrecisionContext, n: u32, m: u32, r: &Float) -> Result<Float> {
    if m == 0 {
        return Err(Error::Precondition("harmonic order m must be positive".into()));
    }
    let mut acc = Float::new(ctx.prec());
    for k in 0..n {
        let t = ctx.f(k) + r;
        if t.is_zero() {
            return Err(Error::Domain(format!(
                "harmonic summand hits a pole at k = {k} for r = {}",
                r.to_f64()
            )));
        }
        acc += t.pow(-(m as i32));
    }
    Ok(acc)
}

/// Exact-rational H_n^{(m)}(r) for rational r (no pole among k + r).
pub fn harmonic_exact(n: u32, m: u32, r: &Rational) -> Result<Rational> {
    if m == 0 {
        return Err(Error::Precondition("harmonic order m must be positive".into()));
    }
    let mut acc = Rational::new();
    for k in 0..n {
        let t = Rational::from(k) + r;
        if t == 0 {
            return Err(Error::Domain(format!("harmonic summand pole at k = {k}")));
        }
        let mut p = Rational::from(1);
        for _ in 0..m {
            p *= &t;
        }
        acc += p.recip();
    }
    Ok(acc)
}

/// The two trigonometric lattice sums over j = 1..q at angle 2 pi j p / q:
/// plain sum of sines (always 0) and the j-weighted sum, which for p < q
/// has the closed form -(q/2) cot(pi p / q).
pub fn sin_sums(ctx: &PrecisionContext, q: u32, p: u32) -> Result<(Float, Float)> {
    if q == 0 || p == 0 || p > q {
        return Err(Error::Precondition(format!(
            "sin_sums needs 1 <= p <= q, got p = {p}, q = {q}"
        )));
    }
    let prec = ctx.prec();
    let two_pi = ctx.pi() * 2u32;
    let mut plain = Float::new(prec);
    let mut weighted = Float::new(prec);
    for j in 1..=q {
        // Reduce the angle mod 2 pi exactly via the integer residue.
        let residue = (j as u64 * p as u64) % q as u64;
        let angle = two_pi.clone() * Float::with_val(prec, residue) / q;
        let s = angle.sin();
        plain += &s;
        weighted += s * j;
    }
    Ok((plain, weighted))
}
