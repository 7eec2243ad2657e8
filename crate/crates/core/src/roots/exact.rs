//! Exact integer arithmetic for roots: integer-root deflation, Sturm
//! sequences, and isolation and refinement of real roots by bisection at
//! dyadic rationals.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::poly::IntPolynomial;

/// `log2 |c|`, or negative infinity for zero.
pub fn log2_abs(c: &BigInt) -> f64 {
    if c.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = c.bits();
    let shift = bits.saturating_sub(64);
    let top = (c.abs() >> shift).to_f64().expect("fits");
    top.log2() + shift as f64
}

/// Fujiwara's bound on the moduli of the roots:
/// `2 max(|c_{d-1}/c_d|, |c_{d-2}/c_d|^(1/2), ..., |c_0/(2 c_d)|^(1/d))`.
pub fn fujiwara_bound(p: &IntPolynomial) -> f64 {
    let Some(d) = p.degree() else { return 0.0 };
    if d == 0 {
        return 0.0;
    }
    let lead = log2_abs(&p.coeffs()[d]);
    let mut best = f64::NEG_INFINITY;
    for i in 1..=d {
        let c = &p.coeffs()[d - i];
        if c.is_zero() {
            continue;
        }
        let mut l = log2_abs(c) - lead;
        if i == d {
            l -= 1.0;
        }
        best = best.max(l / i as f64);
    }
    2.0 * best.exp2()
}

/// Integer roots of `p` with multiplicity, in increasing order, and the
/// exact quotient once they are divided out.
///
/// Candidates are the divisors of the trailing non-zero coefficient that
/// lie within [`fujiwara_bound`]; each is confirmed by exact evaluation.
pub fn integer_roots(p: &IntPolynomial) -> (Vec<i64>, IntPolynomial) {
    if p.is_zero() {
        return (Vec::new(), p.clone());
    }
    let (zeros, mut q) = p.strip_x_power();
    let mut roots = vec![0i64; zeros];
    let bound = fujiwara_bound(&q).ceil().min(i64::MAX as f64 / 2.0) as i64;
    let trailing = q.coeff(0);
    for r in (-bound..=bound).filter(|&r| r != 0) {
        let big_r = BigInt::from(r);
        if !trailing.is_multiple_of(&big_r) {
            continue;
        }
        while q.degree().unwrap_or(0) > 0 {
            match q.div_linear(&big_r) {
                Some(quotient) => {
                    q = quotient;
                    roots.push(r);
                }
                None => break,
            }
        }
    }
    roots.sort_unstable();
    (roots, q)
}

/// `num / 2^exp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dyadic {
    pub num: BigInt,
    pub exp: u32,
}

impl Dyadic {
    pub fn integer(v: BigInt) -> Self {
        Dyadic { num: v, exp: 0 }
    }

    pub fn midpoint(a: &Dyadic, b: &Dyadic) -> Dyadic {
        let exp = a.exp.max(b.exp);
        let na = &a.num << (exp - a.exp);
        let nb = &b.num << (exp - b.exp);
        Dyadic {
            num: na + nb,
            exp: exp + 1,
        }
        .reduced()
    }

    fn reduced(mut self) -> Self {
        while self.exp > 0 && self.num.is_even() {
            self.num >>= 1u32;
            self.exp -= 1;
        }
        self
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.num.bits().saturating_sub(64);
        let top = (&self.num >> shift).to_f64().expect("fits");
        ldexp(top, shift as i64 - self.exp as i64)
    }
}

/// `x * 2^e` without intermediate overflow for moderate `e`.
pub fn ldexp(mut x: f64, mut e: i64) -> f64 {
    while e > 512 {
        x *= 2f64.powi(512);
        e -= 512;
    }
    while e < -512 {
        x *= 2f64.powi(-512);
        e += 512;
    }
    x * 2f64.powi(e as i32)
}

/// Sign of `p(x)` evaluated exactly.
pub fn sign_at(p: &IntPolynomial, x: &Dyadic) -> Sign {
    let Some(d) = p.degree() else {
        return Sign::NoSign;
    };
    // 2^(exp d) p(num / 2^exp) = sum c_i num^i 2^(exp (d - i))
    let mut acc = p.coeffs()[d].clone();
    let mut scale = BigInt::one();
    for i in (0..d).rev() {
        scale <<= x.exp;
        acc = acc * &x.num + &p.coeffs()[i] * &scale;
    }
    acc.sign()
}

/// Remainder of `a` by `b` scaled by a positive factor, so signs survive.
fn positive_prem(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    let db = b.degree().expect("non-zero divisor");
    let lead = b.leading().unwrap();
    let (abs_lead, lead_sign) = (lead.abs(), lead.signum());
    let mut r: Vec<BigInt> = a.coeffs().to_vec();
    while r.len() > db && !r.is_empty() {
        let k = r.len() - 1;
        let top = &r[k] * &lead_sign;
        for c in r.iter_mut() {
            *c *= &abs_lead;
        }
        for (j, bc) in b.coeffs().iter().enumerate() {
            r[k - db + j] -= &top * bc;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    IntPolynomial::new(r)
}

fn divide_positive_content(p: IntPolynomial) -> IntPolynomial {
    let g = p.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if g.is_zero() || g.is_one() {
        return p;
    }
    IntPolynomial::new(p.coeffs().iter().map(|c| c / &g).collect())
}

/// Sturm sequence of a square-free polynomial.
#[derive(Debug, Clone)]
pub struct Sturm {
    seq: Vec<IntPolynomial>,
}

impl Sturm {
    pub fn new(f: &IntPolynomial) -> Sturm {
        let mut seq = vec![divide_positive_content(f.clone())];
        let d = divide_positive_content(f.derivative());
        if !d.is_zero() {
            seq.push(d);
        }
        while seq.len() >= 2 && seq.last().unwrap().degree().unwrap_or(0) > 0 {
            let (a, b) = (&seq[seq.len() - 2], &seq[seq.len() - 1]);
            let r = -positive_prem(a, b);
            if r.is_zero() {
                break;
            }
            seq.push(divide_positive_content(r));
        }
        Sturm { seq }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    fn changes(signs: impl Iterator<Item = Sign>) -> usize {
        let mut last = Sign::NoSign;
        let mut count = 0;
        for s in signs.filter(|&s| s != Sign::NoSign) {
            if last != Sign::NoSign && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn changes_at(&self, x: &Dyadic) -> usize {
        Self::changes(self.seq.iter().map(|p| sign_at(p, x)))
    }

    fn changes_at_infinity(&self, positive: bool) -> usize {
        Self::changes(self.seq.iter().map(|p| {
            let s = p.leading().map_or(Sign::NoSign, |l| l.sign());
            let odd = p.degree().unwrap_or(0) % 2 == 1;
            if !positive && odd {
                -s
            } else {
                s
            }
        }))
    }

    /// Number of distinct real roots.
    pub fn real_root_count(&self) -> usize {
        self.changes_at_infinity(false) - self.changes_at_infinity(true)
    }
}

/// Power of two strictly exceeding every root modulus (Cauchy).
fn cauchy_power_of_two(f: &IntPolynomial) -> Dyadic {
    let lead = f.leading().expect("non-zero").abs();
    let max = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    let bound = max / lead + 2u32;
    Dyadic::integer(BigInt::one() << bound.bits())
}

/// Isolating intervals `(lo, hi]`, one per real root, in increasing order.
pub fn isolate_real_roots(f: &IntPolynomial, sturm: &Sturm) -> Vec<(Dyadic, Dyadic)> {
    let total = sturm.real_root_count();
    let mut out = Vec::with_capacity(total);
    if total == 0 {
        return out;
    }
    let b = cauchy_power_of_two(f);
    let lo = Dyadic::integer(-b.num.clone());
    let mut stack = vec![(lo, b, total)];
    while let Some((lo, hi, count)) = stack.pop() {
        match count {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = Dyadic::midpoint(&lo, &hi);
                let left = sturm.changes_at(&lo) - sturm.changes_at(&mid);
                // push the right half first so the left half is handled first
                stack.push((mid.clone(), hi, count - left));
                stack.push((lo, mid, left));
            }
        }
    }
    out.sort_by(|a, b| a.0.to_f64().total_cmp(&b.0.to_f64()));
    out
}

/// Bisects an isolating interval `(lo, hi]` of a simple root until its ends
/// round to the same `f64`; returns the root as `f64`.
pub fn refine_real_root(f: &IntPolynomial, lo: &Dyadic, hi: &Dyadic) -> f64 {
    let (mut lo, mut hi) = (lo.clone(), hi.clone());
    if sign_at(f, &hi) == Sign::NoSign {
        return hi.to_f64();
    }
    let sign_lo = sign_at(f, &lo);
    for _ in 0..1200 {
        if lo.to_f64() == hi.to_f64() {
            break;
        }
        let mid = Dyadic::midpoint(&lo, &hi);
        let s = sign_at(f, &mid);
        if s == Sign::NoSign {
            return mid.to_f64();
        }
        if s == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Dyadic::midpoint(&lo, &hi).to_f64()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn roots_product(roots: &[i64]) -> IntPolynomial {
        roots
            .iter()
            .map(|&r| IntPolynomial::linear_root(r))
            .product()
    }

    #[test]
    fn integer_roots_with_multiplicity() {
        let f = roots_product(&[0, 1, 2, 3, -2, 2, 0]) * p(&[1, 0, 1]);
        let (roots, q) = integer_roots(&f);
        assert_eq!(roots, vec![-2, 0, 0, 1, 2, 2, 3]);
        assert_eq!(q, p(&[1, 0, 1]));
        assert_eq!(integer_roots(&p(&[-2, -1, 1])).0, vec![-1, 2]);
        assert_eq!(integer_roots(&p(&[-55, 42, -11, 1])).0, Vec::<i64>::new());
    }

    #[test]
    fn fujiwara_bounds_roots() {
        let f = roots_product(&[-7, 3, 5]);
        let b = fujiwara_bound(&f);
        assert!((7.0..=2.0 * 7.0 * 3.0).contains(&b), "{b}");
    }

    #[test]
    fn dyadic_arithmetic() {
        let a = Dyadic::integer(BigInt::from(1));
        let b = Dyadic::integer(BigInt::from(2));
        let m = Dyadic::midpoint(&a, &b);
        assert_eq!(
            m,
            Dyadic {
                num: BigInt::from(3),
                exp: 1
            }
        );
        assert_eq!(m.to_f64(), 1.5);
        assert_eq!(
            Dyadic::midpoint(&a, &Dyadic::integer(BigInt::from(3))).to_f64(),
            2.0
        );
        assert_eq!(sign_at(&p(&[-3, 0, 1]), &m), Sign::Minus);
        assert_eq!(sign_at(&p(&[-2, 0, 1]), &m), Sign::Plus);
    }

    #[test]
    fn sturm_counts_and_isolates() {
        let cubic = p(&[-55, 42, -11, 1]);
        let s = Sturm::new(&cubic);
        assert_eq!(s.real_root_count(), 1);
        let iv = isolate_real_roots(&cubic, &s);
        let r = refine_real_root(&cubic, &iv[0].0, &iv[0].1);
        assert!((r - 3.430_2).abs() < 1e-4, "{r}");
        let f = p(&[-2, 0, 1]) * p(&[-3, 0, 1]); // ±sqrt2, ±sqrt3
        let s = Sturm::new(&f);
        assert_eq!(s.real_root_count(), 4);
        let values: Vec<f64> = isolate_real_roots(&f, &s)
            .iter()
            .map(|(a, b)| refine_real_root(&f, a, b))
            .collect();
        let want = [-(3f64.sqrt()), -(2f64.sqrt()), 2f64.sqrt(), 3f64.sqrt()];
        for (v, w) in values.iter().zip(want) {
            assert!((v - w).abs() <= 4.0 * f64::EPSILON, "{v} vs {w}");
        }
        assert_eq!(Sturm::new(&p(&[1, 0, 1])).real_root_count(), 0);
    }

    #[test]
    fn non_monic_rational_root_is_hit_exactly() {
        let f = p(&[-1, 2]) * p(&[-2, 0, 1]); // 1/2 and ±sqrt2
        let s = Sturm::new(&f);
        let values: Vec<f64> = isolate_real_roots(&f, &s)
            .iter()
            .map(|(a, b)| refine_real_root(&f, a, b))
            .collect();
        assert_eq!(values.len(), 3);
        assert_eq!(values[1], 0.5);
    }

    #[test]
    fn ldexp_extremes() {
        assert_eq!(ldexp(1.0, 1000), 2f64.powi(1000));
        assert_eq!(ldexp(3.0, -2), 0.75);
    }
}
