//! Exact univariate polynomials and rational functions in `t` over the integers.
//!
//! Every series in the crate is a [`RatFun`]: a quotient of two integer
//! polynomials kept in a normal form (coprime, content removed, denominator
//! with positive leading coefficient). [`series_expand`] turns a rational
//! function into a truncated power series with exact integer coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Exact rational scalar.
pub type BigRat = BigRational;

/// Errors raised by exact arithmetic and series expansion.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at t = 0")]
    PoleAtZero,
    #[error("series coefficient of t^{degree} is not an integer ({value})")]
    NonIntegerCoefficient { degree: usize, value: String },
    #[error("cannot parse rational function: {0}")]
    Parse(String),
}

/// Dense polynomial in `t`; `coeffs[i]` is the coefficient of `t^i`.
///
/// The highest stored coefficient is never zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Builds a polynomial from coefficients in increasing degree, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * t^e`.
    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = c;
        Poly { coeffs }
    }

    /// `t^e`.
    pub fn t_pow(e: usize) -> Self {
        Poly::monomial(BigInt::one(), e)
    }

    /// `1 + t^e`.
    pub fn one_plus_t(e: usize) -> Self {
        Poly::one().add(&Poly::t_pow(e))
    }

    /// `1 - t^e`.
    pub fn one_minus_t(e: usize) -> Self {
        Poly::one().sub(&Poly::t_pow(e))
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => BigInt::zero(),
            });
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `t^e`.
    pub fn shift(&self, e: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `self^e` by repeated squaring; `p^0 = 1` for every `p`.
    pub fn pow(&self, mut e: u64) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Gcd of the coefficients (nonnegative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// The polynomial divided by its content, with positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|x| x / c).collect())
    }

    /// Pseudo-remainder of `self` by `d`: `lc(d)^k * self mod d` in `Z[t]`.
    fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("pseudo_rem by zero");
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let rl = r.leading().unwrap().clone();
            let shift = rd - dd;
            r = r.scale(&lc).sub(&d.scale(&rl).shift(shift));
        }
        r
    }

    /// Greatest common divisor in `Z[t]`, primitive with positive leading
    /// coefficient (primitive-part Euclid).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.is_zero() {
            return b;
        }
        if b.is_zero() {
            return a;
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return Poly::one();
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }

    /// Exact quotient `self / d`; `None` when `d` does not divide `self` in `Z[t]`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let dd = d.degree()?;
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let lc = d.leading().unwrap().clone();
        let mut r = self.clone();
        let sd = r.degree().unwrap();
        if sd < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); sd - dd + 1];
        while let Some(rd) = r.degree() {
            if rd < dd {
                return None;
            }
            let (qc, rem) = r.leading().unwrap().div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            let shift = rd - dd;
            r = r.sub(&d.scale(&qc).shift(shift));
            q[shift] = qc;
        }
        Some(Poly::from_coeffs(q))
    }

    /// Value at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Canonical plain-text rendering, monomials in increasing degree,
    /// e.g. `1+4*t+6*t^2-t^3`.
    pub fn to_text(&self) -> String {
        render_terms(
            &self.coeffs,
            |e| match e {
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            },
            "*",
        )
    }

    /// LaTeX rendering, monomials in increasing degree, e.g. `1+4t+6t^{2}`.
    pub fn to_latex(&self) -> String {
        render_terms(
            &self.coeffs,
            |e| match e {
                1 => "t".to_string(),
                _ => format!("t^{{{e}}}"),
            },
            "",
        )
    }

    /// Parses the canonical plain-text form produced by [`Poly::to_text`].
    /// Whitespace is ignored.
    pub fn parse(s: &str) -> Result<Poly, AlgError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(AlgError::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<String> = Vec::new();
        let mut cur = String::new();
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut acc = Poly::zero();
        for term in terms {
            acc = acc.add(&parse_term(&term)?);
        }
        Ok(acc)
    }
}

fn render_terms(coeffs: &[BigInt], var: impl Fn(usize) -> String, times: &str) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if e == 0 {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&var(e));
        } else {
            out.push_str(&format!("{abs}{times}{}", var(e)));
        }
    }
    out
}

fn parse_term(term: &str) -> Result<Poly, AlgError> {
    let err = || AlgError::Parse(format!("bad term `{term}`"));
    let (sign, body) = match term.as_bytes().first() {
        Some(b'-') => (-1, &term[1..]),
        Some(b'+') => (1, &term[1..]),
        _ => (1, term),
    };
    if body.is_empty() {
        return Err(err());
    }
    let (coef_str, var_str) = match body.find('t') {
        None => (body, None),
        Some(pos) => {
            let c = body[..pos].trim_end_matches('*');
            (c, Some(&body[pos + 1..]))
        }
    };
    let coef: BigInt = if coef_str.is_empty() {
        BigInt::one()
    } else {
        coef_str.parse().map_err(|_| err())?
    };
    let exp: usize = match var_str {
        None => 0,
        Some("") => 1,
        Some(rest) => {
            let rest = rest.strip_prefix('^').ok_or_else(err)?;
            let rest = rest.trim_start_matches('{').trim_end_matches('}');
            rest.parse().map_err(|_| err())?
        }
    };
    Ok(Poly::monomial(coef * sign, exp))
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.to_text())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Ring operations selectable at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Exact ring arithmetic on polynomials.
pub fn poly_arith(a: &Poly, b: &Poly, op: PolyOp) -> Poly {
    match op {
        PolyOp::Add => a.add(b),
        PolyOp::Sub => a.sub(b),
        PolyOp::Mul => a.mul(b),
    }
}

/// `base^e`, with `base^0 = 1`.
pub fn poly_pow(base: &Poly, e: u64) -> Poly {
    base.pow(e)
}

/// Normalized quotient of two integer polynomials.
///
/// Invariants: the denominator is nonzero with positive leading coefficient,
/// numerator and denominator have no common factor of positive degree, and
/// the gcd of all their coefficients is one. Zero is stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    /// Normalizes `num/den`.
    pub fn new(num: Poly, den: Poly) -> Result<RatFun, AlgError> {
        if den.is_zero() {
            return Err(AlgError::ZeroDenominator);
        }
        Ok(RatFun::normalize(num, den))
    }

    fn normalize(num: Poly, den: Poly) -> RatFun {
        if num.is_zero() {
            return RatFun::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().unwrap().is_negative() {
            c = -c;
        }
        if !c.is_one() {
            num = num.div_scalar_exact(&c);
            den = den.div_scalar_exact(&c);
        }
        RatFun { num, den }
    }

    pub fn zero() -> RatFun {
        RatFun {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFun {
        RatFun::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> RatFun {
        RatFun::normalize(p, Poly::one())
    }

    pub fn from_int(c: i64) -> RatFun {
        RatFun::from_poly(Poly::constant(BigInt::from(c)))
    }

    /// `t^e`.
    pub fn t_pow(e: usize) -> RatFun {
        RatFun::from_poly(Poly::t_pow(e))
    }

    /// `1/(1 - t^e)`, for `e >= 1`.
    pub fn geometric(e: usize) -> RatFun {
        assert!(e >= 1, "geometric factor needs a positive exponent");
        RatFun::normalize(Poly::one(), Poly::one_minus_t(e))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &RatFun) -> RatFun {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFun::normalize(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.gcd(&other.den);
        let a = other.den.div_exact(&g).expect("gcd divides");
        let b = self.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&a).add(&other.num.mul(&b));
        let den = self.den.mul(&a);
        RatFun::normalize(num, den)
    }

    pub fn neg(&self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &RatFun) -> RatFun {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatFun) -> RatFun {
        if self.is_zero() || other.is_zero() {
            return RatFun::zero();
        }
        // Cross-cancel first to keep intermediate degrees small.
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).expect("gcd divides");
        let d2 = other.den.div_exact(&g1).expect("gcd divides");
        let n2 = other.num.div_exact(&g2).expect("gcd divides");
        let d1 = self.den.div_exact(&g2).expect("gcd divides");
        RatFun::normalize(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn div(&self, other: &RatFun) -> Result<RatFun, AlgError> {
        if other.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        Ok(self.mul(&other.recip_unchecked()))
    }

    fn recip_unchecked(&self) -> RatFun {
        RatFun::normalize(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: u64) -> RatFun {
        RatFun {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
        .renormalize_sign()
    }

    fn renormalize_sign(self) -> RatFun {
        if self.den.leading().is_some_and(|l| l.is_negative()) {
            RatFun {
                num: self.num.neg(),
                den: self.den.neg(),
            }
        } else {
            self
        }
    }

    /// Multiplication by `t^e`.
    pub fn shift(&self, e: usize) -> RatFun {
        self.mul(&RatFun::t_pow(e))
    }

    /// Multiplication by an integer scalar.
    pub fn scale(&self, c: i64) -> RatFun {
        RatFun::normalize(self.num.scale(&BigInt::from(c)), self.den.clone())
    }

    /// Canonical plain text `(num)/(den)`.
    pub fn to_text(&self) -> String {
        format!("({})/({})", self.num.to_text(), self.den.to_text())
    }

    /// LaTeX `\frac{num}{den}`.
    pub fn to_latex(&self) -> String {
        format!(
            "\\frac{{{}}}{{{}}}",
            self.num.to_latex(),
            self.den.to_latex()
        )
    }

    /// Parses `(num)/(den)`, or a bare polynomial.
    pub fn parse(s: &str) -> Result<RatFun, AlgError> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            let close = rest
                .find(')')
                .ok_or_else(|| AlgError::Parse("missing `)`".into()))?;
            let num = Poly::parse(&rest[..close])?;
            let tail = rest[close + 1..].trim();
            if tail.is_empty() {
                return Ok(RatFun::from_poly(num));
            }
            let tail = tail
                .strip_prefix('/')
                .ok_or_else(|| AlgError::Parse("expected `/`".into()))?
                .trim();
            let den_str = tail
                .strip_prefix('(')
                .and_then(|x| x.strip_suffix(')'))
                .ok_or_else(|| AlgError::Parse("denominator must be parenthesized".into()))?;
            let den = Poly::parse(den_str)?;
            RatFun::new(num, den)
        } else {
            Ok(RatFun::from_poly(Poly::parse(s)?))
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFun{}", self.to_text())
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// `ratfun_make(num, den)`: normalized quotient.
pub fn ratfun_make(num: Poly, den: Poly) -> Result<RatFun, AlgError> {
    RatFun::new(num, den)
}

/// Field operations selectable at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Exact field arithmetic on rational functions.
pub fn ratfun_arith(f: &RatFun, g: &RatFun, op: RatOp) -> Result<RatFun, AlgError> {
    match op {
        RatOp::Add => Ok(f.add(g)),
        RatOp::Sub => Ok(f.sub(g)),
        RatOp::Mul => Ok(f.mul(g)),
        RatOp::Div => f.div(g),
    }
}

/// Equality as rational functions: `num(f) * den(g) == num(g) * den(f)`.
pub fn ratfun_eq(f: &RatFun, g: &RatFun) -> bool {
    f.num.mul(&g.den) == g.num.mul(&f.den)
}

/// Truncated power series: `coeffs[i]` is the coefficient of `t^i`, for
/// `i = 0..=order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoeffVector {
    pub order: usize,
    #[serde(with = "bigint_vec_as_strings")]
    pub coeffs: Vec<BigInt>,
}

impl CoeffVector {
    pub fn zeros(order: usize) -> CoeffVector {
        CoeffVector {
            order,
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> CoeffVector {
        CoeffVector {
            order: coeffs.len().saturating_sub(1),
            coeffs: coeffs.iter().map(|&c| BigInt::from(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Index of the first negative coefficient, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| c.is_negative())
    }

    pub fn add_assign(&mut self, other: &CoeffVector) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
    }

    /// Adds `t^shift * other` truncated at this vector's order.
    pub fn add_shifted(&mut self, other: &CoeffVector, shift: usize) {
        for (i, b) in other.coeffs.iter().enumerate() {
            let j = i + shift;
            if j > self.order {
                break;
            }
            self.coeffs[j] += b;
        }
    }

    pub fn sub(&self, other: &CoeffVector) -> CoeffVector {
        CoeffVector {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &CoeffVector) -> CoeffVector {
        let order = self.order.min(other.order);
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += a * b;
            }
        }
        CoeffVector { order, coeffs: out }
    }

    /// Coefficients as `i64` when they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }
}

mod bigint_vec_as_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        let strs: Vec<String> = v.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        strs.iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Coefficients of the power series of `f` up to `t^order`.
///
/// Fails with [`AlgError::PoleAtZero`] when the denominator vanishes at zero
/// and with [`AlgError::NonIntegerCoefficient`] when a coefficient is not an
/// integer.
pub fn series_expand(f: &RatFun, order: usize) -> Result<CoeffVector, AlgError> {
    let d0 = f.den.coeff(0);
    if d0.is_zero() {
        return Err(AlgError::PoleAtZero);
    }
    let den = f.den.coeffs();
    let mut out: Vec<BigInt> = Vec::with_capacity(order + 1);
    for m in 0..=order {
        let mut acc = f.num.coeff(m);
        for (j, dj) in den.iter().enumerate().skip(1).take(m) {
            if !dj.is_zero() {
                acc -= dj * &out[m - j];
            }
        }
        let (q, r) = acc.div_rem(&d0);
        if !r.is_zero() {
            let value = BigRat::new(acc, d0.clone());
            return Err(AlgError::NonIntegerCoefficient {
                degree: m,
                value: value.to_string(),
            });
        }
        out.push(q);
    }
    Ok(CoeffVector { order, coeffs: out })
}

/// Product of factors `(1 + t^a)^e`, used for the odd-degree numerators of
/// gauge-group series.
pub fn one_plus_power(a: usize, e: u64) -> Poly {
    Poly::one_plus_t(a).pow(e)
}

/// A summand `num / ∏_a (1 - t^a)` whose denominator is a product of
/// binomials `1 - t^a` (every closed formula in the crate has this shape).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub num: Poly,
    pub den: Vec<usize>,
}

impl Term {
    pub fn new(num: Poly, den: Vec<usize>) -> Term {
        assert!(
            den.iter().all(|&a| a >= 1),
            "denominator exponents must be positive"
        );
        Term { num, den }
    }

    pub fn one() -> Term {
        Term::new(Poly::one(), Vec::new())
    }

    /// Product of two summands.
    pub fn mul(&self, other: &Term) -> Term {
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        Term::new(self.num.mul(&other.num), den)
    }

    /// Multiplication by `t^e`.
    pub fn shift(&self, e: usize) -> Term {
        Term::new(self.num.shift(e), self.den.clone())
    }

    /// Multiplication by an integer scalar.
    pub fn scale(&self, c: i64) -> Term {
        Term::new(self.num.scale(&BigInt::from(c)), self.den.clone())
    }

    /// The summand as a normalized rational function.
    pub fn to_ratfun(&self) -> RatFun {
        sum_terms(std::slice::from_ref(self))
    }
}

/// Cyclotomic polynomial `Φ_d`, from `t^d - 1 = ∏_{e | d} Φ_e`.
pub fn cyclotomic(d: usize) -> Poly {
    assert!(d >= 1);
    let mut p = Poly::t_pow(d).sub(&Poly::one());
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = p
                .div_exact(&cyclotomic(e))
                .expect("cyclotomic divides t^d - 1");
        }
    }
    p
}

struct CycloTable {
    polys: Vec<Poly>,
}

impl CycloTable {
    fn new(max: usize) -> CycloTable {
        let mut polys = vec![Poly::zero(); max + 1];
        for d in 1..=max {
            let mut p = Poly::t_pow(d).sub(&Poly::one());
            for e in 1..d {
                if d % e == 0 {
                    p = p.div_exact(&polys[e]).expect("cyclotomic divides t^d - 1");
                }
            }
            polys[d] = p;
        }
        CycloTable { polys }
    }
}

/// Exact sum of summands with binomial denominators.
///
/// Each `1 - t^a` equals `-∏_{d | a} Φ_d`, so the least common denominator is
/// a product of cyclotomic polynomials with the maximal multiplicities. The
/// reduced form is then obtained by trial division by those irreducible
/// factors, which avoids a general polynomial gcd.
pub fn sum_terms(terms: &[Term]) -> RatFun {
    let max_a = terms
        .iter()
        .flat_map(|t| t.den.iter().copied())
        .max()
        .unwrap_or(0);
    let table = CycloTable::new(max_a);
    let mults: Vec<Vec<u32>> = terms
        .iter()
        .map(|t| {
            let mut m = vec![0u32; max_a + 1];
            for &a in &t.den {
                for (d, slot) in m.iter_mut().enumerate().skip(1) {
                    if a % d == 0 {
                        *slot += 1;
                    }
                }
            }
            m
        })
        .collect();
    let mut lcm = vec![0u32; max_a + 1];
    for m in &mults {
        for (l, &x) in lcm.iter_mut().zip(m) {
            *l = (*l).max(x);
        }
    }
    let mut num = Poly::zero();
    for (term, m) in terms.iter().zip(&mults) {
        if term.num.is_zero() {
            continue;
        }
        let mut part = if term.den.len() % 2 == 1 {
            term.num.neg()
        } else {
            term.num.clone()
        };
        for d in 1..=max_a {
            let extra = lcm[d] - m[d];
            if extra > 0 {
                part = part.mul(&table.polys[d].pow(extra as u64));
            }
        }
        num = num.add(&part);
    }
    if num.is_zero() {
        return RatFun::zero();
    }
    for d in 1..=max_a {
        while lcm[d] > 0 {
            match num.div_exact(&table.polys[d]) {
                Some(q) => {
                    num = q;
                    lcm[d] -= 1;
                }
                None => break,
            }
        }
    }
    let mut den = Poly::one();
    for d in 1..=max_a {
        if lcm[d] > 0 {
            den = den.mul(&table.polys[d].pow(lcm[d] as u64));
        }
    }
    RatFun { num, den }
}
