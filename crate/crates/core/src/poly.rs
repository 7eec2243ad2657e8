//! Dense univariate polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Coefficients are stored in ascending degree and kept trimmed, so two
//! equal polynomials always compare equal structurally. The zero polynomial
//! has no coefficients and [`IntPolynomial::degree`] returns `None` for it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("interpolation produced a non-integer coefficient at degree {degree}")]
    NonIntegerCoefficient { degree: usize },
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    /// `x - r`.
    pub fn linear_root(r: impl Into<BigInt>) -> Self {
        Self::new(vec![-r.into(), BigInt::one()])
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i`; zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// `x (x - 1) ... (x - n + 1)`; the constant 1 for `n = 0`.
    pub fn falling_factorial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::one()];
        for i in 0..n {
            // multiply by (x - i)
            let mut next = vec![BigInt::zero(); coeffs.len() + 1];
            for (j, c) in coeffs.iter().enumerate() {
                next[j + 1] += c;
                next[j] -= c * BigInt::from(i);
            }
            coeffs = next;
        }
        Self::new(coeffs)
    }

    /// The unique polynomial of degree at most `values.len() - 1` taking
    /// `values[i]` at `x = i`, built from the forward-difference table in the
    /// falling-factorial basis. Fails if the result is not integral.
    pub fn interpolate(values: &[BigInt]) -> Result<Self, PolyError> {
        let mut table = values.to_vec();
        let mut result = Self::zero();
        let mut factorial = BigInt::one();
        for j in 0..values.len() {
            if j > 0 {
                factorial *= j;
                for i in 0..table.len() - j {
                    table[i] = &table[i + 1] - &table[i];
                }
            }
            let (q, r) = table[0].div_rem(&factorial);
            if !r.is_zero() {
                return Err(PolyError::NonIntegerCoefficient { degree: j });
            }
            if !q.is_zero() {
                result = result + Self::falling_factorial(j).scale(&q);
            }
        }
        Ok(result)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// `p(x - s)`.
    pub fn compose_shift(&self, s: i64) -> Self {
        // Horner in the shifted variable: p(x - s) = (...(c_d (x - s) + c_{d-1})(x - s) ...).
        let step = Self::linear_root(s);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * &step + Self::constant(c.clone());
        }
        acc
    }

    pub fn eval_int(&self, k: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * k + c;
        }
        acc
    }

    pub fn eval_i64(&self, k: i64) -> BigInt {
        self.eval_int(&BigInt::from(k))
    }

    /// Horner evaluation in double precision. Coefficients are rounded to
    /// the nearest `f64`, so beyond roughly 2^53 in magnitude the result is
    /// only as good as that rounding.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + big_to_f64(c))
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(big_to_f64).collect()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Divides by `x - r`, returning the quotient if the division is exact.
    pub fn div_linear(&self, r: &BigInt) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let d = self.coeffs.len() - 1;
        let mut quotient = vec![BigInt::zero(); d];
        let mut carry = BigInt::zero();
        for i in (0..=d).rev() {
            let value = &self.coeffs[i] + &carry * r;
            if i == 0 {
                return value.is_zero().then(|| Self::new(quotient));
            }
            quotient[i - 1] = value.clone();
            carry = value;
        }
        unreachable!()
    }

    /// Removes the factor `x^t` where `t` is the index of the lowest
    /// non-zero coefficient; returns `(t, quotient)`.
    pub fn strip_x_power(&self) -> (usize, Self) {
        let t = self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0);
        (t, Self::new(self.coeffs[t..].to_vec()))
    }

    /// Gcd of the coefficients with the sign of the leading coefficient
    /// (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let g = self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        match self.leading() {
            Some(l) if l.is_negative() => -g,
            _ => g,
        }
    }

    /// `self / content`: positive leading coefficient, coprime coefficients.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let c = self.content();
        Self::new(self.coeffs.iter().map(|x| x / &c).collect())
    }

    /// Long division `self = q * divisor` over the integers; `None` unless
    /// the division is exact with an integral quotient.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return self.is_zero().then(Self::zero);
        }
        let mut q = vec![BigInt::zero(); rem.len() - dd];
        for i in (0..q.len()).rev() {
            let (c, r) = rem[i + dd].div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            q[i] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(q))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("pseudo-remainder by zero polynomial");
        let lead = b.leading().unwrap();
        let mut r = self.coeffs.clone();
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1;
            let top = r[k].clone();
            for c in r.iter_mut() {
                *c *= lead;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k - db + j] -= &top * bc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        Self::new(r)
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b).primitive();
            a = b;
            b = r;
        }
        a
    }

    /// Square-free decomposition (Yun): primitive, pairwise coprime,
    /// square-free factors `f_i` with `self = c * prod f_i^i` for an integer
    /// `c`. Factors of degree zero are omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        // With `a` and the gcd both primitive, Gauss's lemma keeps every
        // quotient below integral.
        let a = self.primitive();
        let da = a.derivative();
        let c = a.gcd(&da);
        let mut w = a.div_exact(&c).expect("gcd divides");
        let y = da.div_exact(&c).expect("gcd divides derivative");
        let mut z = &y - &w.derivative();
        let mut i = 1;
        while w.degree().unwrap_or(0) > 0 {
            let g = w.gcd(&z);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            let w_next = w.div_exact(&g).expect("gcd divides w");
            let y_next = z.div_exact(&g).expect("gcd divides z");
            z = &y_next - &w_next.derivative();
            w = w_next;
            i += 1;
        }
        out
    }
}

/// Nearest `f64` (saturating to infinity).
pub fn big_to_f64(c: &BigInt) -> f64 {
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

fn add_coeffs(a: &[BigInt], b: &[BigInt], negate_b: bool) -> IntPolynomial {
    let mut out: Vec<BigInt> = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        if negate_b {
            out[i] -= c;
        } else {
            out[i] += c;
        }
    }
    IntPolynomial::new(out)
}

impl Add<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul<&IntPolynomial> for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $tr<IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $method(self, rhs: IntPolynomial) -> IntPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |a, b| a * b)
    }
}

/// `c_d*x^d + ... + c_1*x + c_0`, descending, zero terms omitted, unit
/// coefficients elided: `x^4 - 2*x^3 - x^2 + 2*x`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            match (first, c.is_negative()) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = magnitude.is_one();
            match i {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !unit {
                        write!(f, "{magnitude}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Coefficients as `/`-separated integers in ascending degree.
pub fn slash_coeffs(p: &IntPolynomial) -> String {
    let parts: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    parts.join("/")
}

/// Inverse of [`slash_coeffs`].
pub fn parse_slash_coeffs(s: &str) -> Option<IntPolynomial> {
    let coeffs: Option<Vec<BigInt>> = s.trim().split('/').map(|t| t.trim().parse().ok()).collect();
    coeffs.map(IntPolynomial::new)
}
