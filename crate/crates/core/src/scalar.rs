//! Field-generic scalars, Pochhammer symbols and terminating `3F2` sums.
//!
//! Two backends implement [`Scalar`]: [`Rational`] (arbitrary precision, always in
//! lowest terms with a positive denominator) and [`Float`], a double that carries a
//! running bound on the magnitudes that went into it. The bound is what float
//! residual checks compare against, so cancellation inside a sum does not make a
//! correct identity look wrong.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// Relative tolerance for residuals on the float backend.
pub const FLOAT_REL_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

/// An element of an ordered field as used by every other module.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    /// `None` when `rhs` is zero.
    fn try_div(self, rhs: &Self) -> Option<Self>;
    fn to_f64(&self) -> f64;
    /// The value as an integer, when it is one exactly.
    fn as_integer(&self) -> Option<i64>;

    /// Whether a residual counts as zero on this backend.
    fn is_negligible(&self) -> bool;
    /// Size of a residual used to rank failures: `|r|` on the exact backend, the
    /// relative residual `|r| / bound` on the float backend.
    fn residual_size(&self) -> f64;
    /// Residual rendered for reports (exact rational string or relative error).
    fn render_residual(&self) -> String;

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }
}

impl Scalar for Rational {
    const BACKEND: Backend = Backend::Exact;

    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_div(self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn as_integer(&self) -> Option<i64> {
        if self.denom().is_one() {
            self.numer().to_i64()
        } else {
            None
        }
    }
    fn is_negligible(&self) -> bool {
        Zero::is_zero(self)
    }
    fn residual_size(&self) -> f64 {
        ToPrimitive::to_f64(&self.abs()).unwrap_or(f64::INFINITY)
    }
    fn render_residual(&self) -> String {
        self.abs().to_string()
    }
}

/// Double-precision value with a magnitude bound.
///
/// `mag` bounds the absolute values that entered the computation (sums add
/// bounds, products multiply them), so `|value| <= FLOAT_REL_TOL * mag` is a
/// scale-aware test for "zero up to rounding".
#[derive(Clone, Copy, Debug)]
pub struct Float {
    value: f64,
    mag: f64,
}

impl Float {
    pub fn new(value: f64) -> Self {
        Float { value, mag: value.abs() }
    }

    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn magnitude(&self) -> f64 {
        self.mag
    }

    pub fn relative_residual(&self) -> f64 {
        if self.mag == 0.0 {
            if self.value == 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            self.value.abs() / self.mag
        }
    }
}

impl PartialEq for Float {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl fmt::Display for Float {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.value)
    }
}

impl Add for Float {
    type Output = Float;
    fn add(self, rhs: Float) -> Float {
        Float { value: self.value + rhs.value, mag: self.mag + rhs.mag }
    }
}

impl Sub for Float {
    type Output = Float;
    fn sub(self, rhs: Float) -> Float {
        Float { value: self.value - rhs.value, mag: self.mag + rhs.mag }
    }
}

impl Mul for Float {
    type Output = Float;
    fn mul(self, rhs: Float) -> Float {
        Float { value: self.value * rhs.value, mag: self.mag * rhs.mag }
    }
}

impl Neg for Float {
    type Output = Float;
    fn neg(self) -> Float {
        Float { value: -self.value, mag: self.mag }
    }
}

impl Scalar for Float {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Float::new(0.0)
    }
    fn one() -> Self {
        Float::new(1.0)
    }
    fn from_i64(v: i64) -> Self {
        Float::new(v as f64)
    }
    fn from_rational(r: &Rational) -> Self {
        Float::new(Scalar::to_f64(r))
    }
    fn is_zero(&self) -> bool {
        self.value == 0.0
    }
    fn try_div(self, rhs: &Self) -> Option<Self> {
        if rhs.value == 0.0 {
            return None;
        }
        let d = rhs.value.abs();
        let value = self.value / rhs.value;
        // first-order bound on the quotient: numerator error plus denominator error
        let mag = self.mag / d + self.value.abs() * rhs.mag / (d * d);
        Some(Float { value, mag })
    }
    fn to_f64(&self) -> f64 {
        self.value
    }
    fn as_integer(&self) -> Option<i64> {
        if self.value.is_finite() && self.value.fract() == 0.0 && self.value.abs() < 9.0e15 {
            Some(self.value as i64)
        } else {
            None
        }
    }
    fn is_negligible(&self) -> bool {
        self.value.abs() <= FLOAT_REL_TOL * self.mag
    }
    fn residual_size(&self) -> f64 {
        self.relative_residual()
    }
    fn render_residual(&self) -> String {
        format!("{:.3e}", self.relative_residual())
    }
}

/// Parses `p/q` or an integer into an exact rational.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (text, "1"),
    };
    let p: BigInt = num.parse().map_err(|_| bad())?;
    let q: BigInt = den.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(p, q))
}

/// `true` when the exact rational is in lowest terms with a positive denominator.
pub fn is_canonical(r: &Rational) -> bool {
    r.denom().is_positive() && r.numer().gcd(r.denom()).is_one()
}

/// `num / den`, failing with [`Error::ZeroDenominator`] naming `factor`.
pub fn quot<S: Scalar>(num: S, den: &S, factor: &str) -> Result<S> {
    num.try_div(den).ok_or_else(|| Error::ZeroDenominator(factor.to_string()))
}

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`; `(a)_0 = 1`.
pub fn poch<S: Scalar>(a: &S, k: usize) -> S {
    let mut acc = S::one();
    for i in 0..k {
        acc = acc * (a.clone() + S::from_usize(i));
    }
    acc
}

/// Pochhammer symbol of signed order; `(a)_{-k} = 1 / ((a-1)(a-2)...(a-k))`.
pub fn poch_signed<S: Scalar>(a: &S, k: i64) -> Result<S> {
    if k >= 0 {
        return Ok(poch(a, k as usize));
    }
    let j = k.unsigned_abs() as usize;
    let shifted = a.clone() - S::from_usize(j);
    quot(S::one(), &poch(&shifted, j), "negative-order Pochhammer")
}

/// `(c)_p / (c)_q` as a product over the index gap, so that a vanishing factor
/// shared by both symbols never produces `0/0`.
pub fn poch_ratio<S: Scalar>(c: &S, p: usize, q: usize) -> Result<S> {
    if p >= q {
        Ok(poch(&(c.clone() + S::from_usize(q)), p - q))
    } else {
        let den = poch(&(c.clone() + S::from_usize(p)), q - p);
        quot(S::one(), &den, "Pochhammer ratio")
    }
}

pub fn factorial<S: Scalar>(n: usize) -> S {
    poch(&S::one(), n)
}

/// A list of bases sharing one Pochhammer order: `(a_1, ..., a_j)_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct PochList<S> {
    pub bases: Vec<S>,
    pub order: usize,
}

impl<S: Scalar> PochList<S> {
    pub fn new(bases: Vec<S>, order: usize) -> Self {
        PochList { bases, order }
    }
}

pub fn multi_poch<S: Scalar>(list: &PochList<S>) -> S {
    list.bases.iter().fold(S::one(), |acc, b| acc * poch(b, list.order))
}

/// Memoized `(base)_k` for `k = 0..=max_order`.
#[derive(Clone, Debug)]
pub struct PochTable<S> {
    base: S,
    values: Vec<S>,
}

impl<S: Scalar> PochTable<S> {
    pub fn new(base: S, max_order: usize) -> Self {
        let mut values = Vec::with_capacity(max_order + 1);
        values.push(S::one());
        for i in 0..max_order {
            let next = values[i].clone() * (base.clone() + S::from_usize(i));
            values.push(next);
        }
        PochTable { base, values }
    }

    pub fn base(&self) -> &S {
        &self.base
    }

    pub fn get(&self, k: usize) -> S {
        match self.values.get(k) {
            Some(v) => v.clone(),
            None => poch(&self.base, k),
        }
    }
}

/// Terminating `3F2(top; bottom; 1)` summed for `k = 0..=kmax`.
///
/// Terms follow the running ratio `t_{k+1} = t_k (t1+k)(t2+k)(t3+k) / ((b1+k)(b2+k)(k+1))`.
/// The sum stops early once a numerator factor vanishes; a bottom factor may only
/// vanish after that point.
pub fn hyp3f2<S: Scalar>(top: &[S; 3], bottom: &[S; 2], kmax: usize) -> Result<S> {
    let mut sum = S::one();
    let mut term = S::one();
    for k in 0..kmax {
        let kk = S::from_usize(k);
        let num = (top[0].clone() + kk.clone()) * (top[1].clone() + kk.clone()) * (top[2].clone() + kk.clone());
        if num.is_zero() {
            break;
        }
        let den = (bottom[0].clone() + kk.clone()) * (bottom[1].clone() + kk) * S::from_usize(k + 1);
        term = quot(term * num, &den, "3F2 lower parameter Pochhammer")?;
        sum = sum + term.clone();
    }
    Ok(sum)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> Rational {
        Rational::new(p.into(), d.into())
    }

    #[test]
    fn poch_examples() {
        assert_eq!(poch(&q(7, 3), 0), q(1, 1));
        assert_eq!(poch(&q(-3, 1), 5), q(0, 1));
        assert_eq!(poch(&q(1, 2), 2), q(3, 4));
    }

    #[test]
    fn multi_poch_examples() {
        let a = q(5, 7);
        assert_eq!(multi_poch(&PochList::new(vec![a.clone()], 3)), poch(&a, 3));
        assert_eq!(multi_poch(&PochList::new(vec![q(2, 1), q(3, 1)], 1)), q(6, 1));
        assert_eq!(multi_poch(&PochList::new(vec![q(-1, 1), q(1, 2)], 2)), q(0, 1));
    }

    #[test]
    fn hyp3f2_examples() {
        let one = q(1, 1);
        let top = [q(0, 1), q(5, 3), q(-2, 1)];
        let bottom = [q(7, 2), q(-9, 4)];
        assert_eq!(hyp3f2(&top, &bottom, 2).unwrap(), one);
        let top = [q(-1, 1), one.clone(), one.clone()];
        assert_eq!(hyp3f2(&top, &[one.clone(), one.clone()], 1).unwrap(), q(0, 1));
        let top = [q(-1, 1), q(2, 1), q(-2, 1)];
        assert_eq!(hyp3f2(&top, &[q(-4, 1), one], 1).unwrap(), q(0, 1));
    }

    #[test]
    fn hyp3f2_zero_denominator() {
        let top = [q(-2, 1), q(1, 3), q(1, 5)];
        let bottom = [q(0, 1), q(1, 1)];
        assert!(matches!(hyp3f2(&top, &bottom, 2), Err(Error::ZeroDenominator(_))));
        // bottom vanishes only after the numerator truncates: fine
        let top = [q(-1, 1), q(1, 3), q(1, 5)];
        let bottom = [q(-1, 1), q(1, 1)];
        assert!(hyp3f2(&top, &bottom, 3).is_ok());
    }

    #[test]
    fn signed_order() {
        // (x)_{-2} = 1/((x-1)(x-2))
        let x = q(7, 2);
        assert_eq!(poch_signed(&x, -2).unwrap(), q(4, 15));
        assert!(poch_signed(&q(2, 1), -2).is_err());
        assert_eq!(poch_signed(&x, 3).unwrap(), poch(&x, 3));
    }

    #[test]
    fn poch_ratio_gap() {
        let c = q(-3, 1);
        // (c)_5 / (c)_4 = c + 4
        assert_eq!(poch_ratio(&c, 5, 4).unwrap(), q(1, 1));
        // (0)_2 / (0)_0: zero numerator, no division
        assert_eq!(poch_ratio(&q(0, 1), 2, 0).unwrap(), q(0, 1));
        assert_eq!(poch_ratio(&q(1, 2), 1, 3).unwrap(), q(4, 15));
    }

    #[test]
    fn parse() {
        assert_eq!(parse_rational("6/-4").unwrap(), q(-3, 2));
        assert_eq!(parse_rational(" 5 ").unwrap(), q(5, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(is_canonical(&parse_rational("6/-4").unwrap()));
    }

    #[test]
    fn float_shadow_tracks_cancellation() {
        let a = Float::new(1.0e8);
        let b = Float::new(1.0e8 + 1.0);
        let r = b - a - Float::one();
        assert_eq!(r.value(), 0.0);
        assert!(r.magnitude() > 2.0e8);
        let big = Float::new(1.0e16) + Float::one() - Float::new(1.0e16);
        assert!(big.is_negligible());
        assert!(!(Float::new(1.0) - Float::new(0.5)).is_negligible());
    }
}
