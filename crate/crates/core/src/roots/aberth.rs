//! Simultaneous approximation of all roots by Aberth iteration.

use num_complex::Complex64;

use crate::poly::IntPolynomial;
use crate::roots::exact::fujiwara_bound;

/// A polynomial that can be evaluated in double precision.
pub trait Analytic {
    fn degree(&self) -> usize;

    /// `(p(z), p'(z), scale)` where `scale` is the sum of the moduli of the
    /// terms that make up `p(z)`; `|p(z)| / scale` is the relative backward
    /// error of `z` as a root.
    fn eval(&self, z: Complex64) -> (Complex64, Complex64, f64);

    /// Upper bound on the root moduli.
    fn root_bound(&self) -> f64;

    fn backward_error(&self, z: Complex64) -> f64 {
        let (v, _, scale) = self.eval(z);
        if scale == 0.0 {
            v.norm()
        } else {
            v.norm() / scale
        }
    }
}

/// Dense coefficients rounded to `f64`.
#[derive(Debug, Clone)]
pub struct Dense {
    coeffs: Vec<f64>,
    bound: f64,
}

impl Dense {
    pub fn new(p: &IntPolynomial) -> Self {
        Dense {
            coeffs: p.to_f64_coeffs(),
            bound: fujiwara_bound(p),
        }
    }
}

impl Analytic for Dense {
    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn eval(&self, z: Complex64) -> (Complex64, Complex64, f64) {
        let r = z.norm();
        let mut v = Complex64::new(0.0, 0.0);
        let mut dv = Complex64::new(0.0, 0.0);
        let mut scale = 0.0;
        for &c in self.coeffs.iter().rev() {
            dv = dv * z + v;
            v = v * z + c;
            scale = scale * r + c.abs();
        }
        (v, dv, scale)
    }

    fn root_bound(&self) -> f64 {
        self.bound
    }
}

/// `g(w) = (w-3)^(l-6) + 3(w-4)^(l-5) + (w-4)(w-5)^(l-5)` at `w = z - shift`,
/// evaluated from its three terms rather than from expanded coefficients,
/// which for large `l` are huge and cancel badly.
#[derive(Debug, Clone)]
pub struct Bracket {
    l: usize,
    shift: f64,
    bound: f64,
}

impl Bracket {
    /// `l >= 6`; `bound` must bound the root moduli of the shifted bracket.
    pub fn new(l: usize, shift: i64, bound: f64) -> Self {
        assert!(l >= 6, "the bracket needs l >= 6");
        Bracket {
            l,
            shift: shift as f64,
            bound,
        }
    }
}

fn powi(z: Complex64, e: usize) -> Complex64 {
    z.powi(e as i32)
}

impl Analytic for Bracket {
    fn degree(&self) -> usize {
        self.l - 4
    }

    fn eval(&self, z: Complex64) -> (Complex64, Complex64, f64) {
        let w = z - self.shift;
        let (a, b, c) = (w - 3.0, w - 4.0, w - 5.0);
        let (e6, e5) = (self.l - 6, self.l - 5);
        let t1 = powi(a, e6);
        let t2 = 3.0 * powi(b, e5);
        let t3 = b * powi(c, e5);
        let v = t1 + t2 + t3;
        let d1 = if e6 == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            e6 as f64 * powi(a, e6 - 1)
        };
        let d2 = 3.0 * e5 as f64 * powi(b, e5 - 1);
        let d3 = powi(c, e5) + b * e5 as f64 * powi(c, e5 - 1);
        (v, d1 + d2 + d3, t1.norm() + t2.norm() + t3.norm())
    }

    fn root_bound(&self) -> f64 {
        self.bound
    }
}

/// Outcome of [`aberth`].
#[derive(Debug, Clone)]
pub struct Approximation {
    pub roots: Vec<Complex64>,
    pub iterations: usize,
    pub converged: bool,
}

pub const MAX_ITERATIONS: usize = 500;

/// Aberth iteration with Gauss-Seidel updates from starting points spread
/// on the circle of radius `f.root_bound()`. Converged when every update is
/// at the rounding level of its iterate or the iterate's backward error is
/// within a few ulps.
pub fn aberth(f: &dyn Analytic, max_iterations: usize) -> Approximation {
    let d = f.degree();
    let radius = f.root_bound().max(1.0);
    // An irrational offset keeps starting points off the real axis.
    let mut z: Vec<Complex64> = (0..d)
        .map(|k| {
            let angle = std::f64::consts::TAU * k as f64 / d as f64 + 0.4;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    let tiny = 8.0 * f64::EPSILON * d.max(1) as f64;
    let mut done = vec![false; d];
    for it in 0..max_iterations {
        let mut all_done = true;
        for i in 0..d {
            if done[i] {
                continue;
            }
            let (v, dv, scale) = f.eval(z[i]);
            if v.norm() <= tiny * scale {
                done[i] = true;
                continue;
            }
            // Near the starting circle p and p' can be ~1e160; the naive
            // quotient squares the divisor and overflows.
            let ratio = v.fdiv(dv);
            let repulsion: Complex64 = (0..d)
                .filter(|&j| j != i)
                .map(|j| (z[i] - z[j]).inv())
                .sum();
            let step = ratio.fdiv(1.0 - ratio * repulsion);
            if !step.re.is_finite() || !step.im.is_finite() {
                // nudge off a degenerate point and retry next sweep
                z[i] *= Complex64::new(1.0 + 1e-8, 1e-8);
                all_done = false;
                continue;
            }
            z[i] -= step;
            if step.norm() <= f64::EPSILON * z[i].norm().max(f64::MIN_POSITIVE) {
                done[i] = true;
            } else {
                all_done = false;
            }
        }
        if all_done {
            return Approximation {
                roots: z,
                iterations: it + 1,
                converged: true,
            };
        }
    }
    Approximation {
        roots: z,
        iterations: max_iterations,
        converged: false,
    }
}

/// A few Newton steps, kept only while they lower the backward error.
pub fn polish(f: &dyn Analytic, mut z: Complex64) -> Complex64 {
    let mut err = f.backward_error(z);
    for _ in 0..8 {
        let (v, dv, _) = f.eval(z);
        if dv.norm() == 0.0 {
            break;
        }
        let next = z - v.fdiv(dv);
        let next_err = f.backward_error(next);
        if next_err >= err || next_err.is_nan() {
            break;
        }
        z = next;
        err = next_err;
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::k2n_bracket;

    #[test]
    fn finds_roots_of_unity() {
        let f = Dense::new(&IntPolynomial::from_i64s(&[-1, 0, 0, 0, 0, 1]));
        let a = aberth(&f, MAX_ITERATIONS);
        assert!(a.converged);
        for z in &a.roots {
            assert!((z.norm() - 1.0).abs() < 1e-12);
            assert!(f.backward_error(*z) < 1e-14);
        }
    }

    #[test]
    fn bracket_evaluator_matches_expanded_form() {
        for l in [6usize, 7, 9, 14] {
            let exact = k2n_bracket(l).unwrap();
            for shift in [0i64, 3] {
                let shifted = exact.compose_shift(shift);
                let b = Bracket::new(l, shift, fujiwara_bound(&shifted));
                let dense = Dense::new(&shifted);
                for z in [
                    Complex64::new(4.2, 1.3),
                    Complex64::new(-1.0, 0.5),
                    Complex64::new(7.0, 0.0),
                ] {
                    let (v1, d1, _) = b.eval(z);
                    let (v2, d2, _) = dense.eval(z);
                    assert!((v1 - v2).norm() <= 1e-9 * v2.norm().max(1.0), "l={l} z={z}");
                    assert!((d1 - d2).norm() <= 1e-9 * d2.norm().max(1.0), "l={l} z={z}");
                }
            }
        }
    }

    #[test]
    fn converges_when_values_on_the_start_circle_are_huge() {
        // |p| reaches ~1e190 on the starting circle here.
        let p = k2n_bracket(70).unwrap().compose_shift(3);
        let b = Bracket::new(70, 3, fujiwara_bound(&p));
        let a = aberth(&b, MAX_ITERATIONS);
        assert!(a.converged);
        assert!(a.roots.iter().all(|&z| b.backward_error(z) < 1e-12));
    }

    #[test]
    fn polish_never_worsens() {
        let f = Dense::new(&IntPolynomial::from_i64s(&[-2, 0, 1]));
        let z = polish(&f, Complex64::new(1.4, 0.0));
        assert!((z.re - 2f64.sqrt()).abs() < 1e-15);
    }
}
