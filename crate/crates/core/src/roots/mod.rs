//! Roots of integer polynomials.
//!
//! [`find_roots`] works in stages:
//!
//! 1. Integer roots are found exactly and divided out.
//! 2. The quotient is split into square-free factors with exact
//!    multiplicities.
//! 3. Real roots of each factor are counted with a Sturm sequence, isolated
//!    and refined by exact bisection.
//! 4. The remaining roots come from Aberth iteration, are paired with their
//!    conjugates and polished.
//!
//! Each approximate root carries its relative backward error
//! `|p(z)| / sum |c_i| |z|^i`, measured on the square-free factor it
//! belongs to.

mod aberth;
pub mod exact;

use std::fmt;

use num_complex::Complex64;
use rayon::prelude::*;
use thiserror::Error;

pub use aberth::{aberth, polish, Analytic, Approximation, Bracket, Dense, MAX_ITERATIONS};

use crate::families::k2n_bracket;
use crate::poly::IntPolynomial;
use exact::{fujiwara_bound, integer_roots, isolate_real_roots, refine_real_root, Sturm};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;
pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("the zero polynomial has no root set")]
    ZeroPolynomial,
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("no convergence: best iterate {best} has residual {residual:e}")]
    ConvergenceFailure { best: Complex64, residual: f64 },
    #[error("the bracket needs size >= 6, got {size}")]
    BracketTooSmall { size: usize },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub residual: f64,
    pub multiplicity: usize,
}

/// A non-real root with positive imaginary part; its conjugate is implied.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexRoot {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct RootSet {
    pub source_degree: usize,
    /// Sorted, repeated by multiplicity.
    pub integer_roots: Vec<i64>,
    pub real_roots: Vec<RealRoot>,
    pub complex_roots: Vec<ComplexRoot>,
}

impl RootSet {
    /// Roots counted with multiplicity, conjugates included.
    pub fn count(&self) -> usize {
        self.integer_roots.len()
            + self
                .real_roots
                .iter()
                .map(|r| r.multiplicity)
                .sum::<usize>()
            + self
                .complex_roots
                .iter()
                .map(|r| 2 * r.multiplicity)
                .sum::<usize>()
    }

    /// Every root with its residual, repeated by multiplicity: integers,
    /// then other reals, then each complex root followed by its conjugate.
    pub fn all_roots(&self) -> Vec<(Complex64, f64)> {
        let mut out = Vec::with_capacity(self.count());
        for &r in &self.integer_roots {
            out.push((Complex64::new(r as f64, 0.0), 0.0));
        }
        for r in &self.real_roots {
            for _ in 0..r.multiplicity {
                out.push((Complex64::new(r.value, 0.0), r.residual));
            }
        }
        for r in &self.complex_roots {
            for _ in 0..r.multiplicity {
                out.push((Complex64::new(r.re, r.im), r.residual));
                out.push((Complex64::new(r.re, -r.im), r.residual));
            }
        }
        out
    }

    pub fn max_residual(&self) -> f64 {
        let reals = self.real_roots.iter().map(|r| r.residual);
        reals
            .chain(self.complex_roots.iter().map(|r| r.residual))
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degree: {}", self.source_degree)?;
        let ints: Vec<String> = self.integer_roots.iter().map(|r| r.to_string()).collect();
        writeln!(
            f,
            "integer roots: {}",
            if ints.is_empty() {
                "none".into()
            } else {
                ints.join(", ")
            }
        )?;
        if self.real_roots.is_empty() {
            writeln!(f, "other real roots: none")?;
        } else {
            writeln!(f, "other real roots:")?;
            for r in &self.real_roots {
                write!(f, "  {:.12} (residual {:.1e}", r.value, r.residual)?;
                if r.multiplicity > 1 {
                    write!(f, ", multiplicity {}", r.multiplicity)?;
                }
                writeln!(f, ")")?;
            }
        }
        if self.complex_roots.is_empty() {
            write!(f, "complex roots: none")?;
        } else {
            write!(f, "complex roots:")?;
            for r in &self.complex_roots {
                write!(
                    f,
                    "\n  {:.12} ± {:.12}i (residual {:.1e}",
                    r.re, r.im, r.residual
                )?;
                if r.multiplicity > 1 {
                    write!(f, ", multiplicity {}", r.multiplicity)?;
                }
                write!(f, ")")?;
            }
        }
        Ok(())
    }
}

fn check_input(p: &IntPolynomial) -> Result<usize, RootError> {
    let degree = p.degree().ok_or(RootError::ZeroPolynomial)?;
    if degree > MAX_DEGREE {
        return Err(RootError::DegreeTooLarge {
            degree,
            max: MAX_DEGREE,
        });
    }
    Ok(degree)
}

pub fn find_roots(p: &IntPolynomial, tol: f64) -> Result<RootSet, RootError> {
    let degree = check_input(p)?;
    let (integer_roots, rest) = integer_roots(p);
    let mut out = RootSet {
        source_degree: degree,
        integer_roots,
        ..RootSet::default()
    };
    for (factor, multiplicity) in rest.squarefree_decomposition() {
        let eval = Dense::new(&factor);
        squarefree_roots(&factor, &eval, multiplicity, tol, &mut out)?;
    }
    finish(out)
}

fn finish(mut out: RootSet) -> Result<RootSet, RootError> {
    out.real_roots.sort_by(|a, b| a.value.total_cmp(&b.value));
    out.complex_roots
        .sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    debug_assert_eq!(out.count(), out.source_degree);
    Ok(out)
}

/// Roots of a square-free factor `f`, evaluated numerically through `eval`.
fn squarefree_roots(
    f: &IntPolynomial,
    eval: &dyn Analytic,
    multiplicity: usize,
    tol: f64,
    out: &mut RootSet,
) -> Result<(), RootError> {
    let d = f.degree().unwrap_or(0);
    if d == 0 {
        return Ok(());
    }
    let sturm = Sturm::new(f);
    let reals: Vec<f64> = isolate_real_roots(f, &sturm)
        .iter()
        .map(|(lo, hi)| refine_real_root(f, lo, hi))
        .collect();
    for &value in &reals {
        let residual = eval.backward_error(Complex64::new(value, 0.0));
        if residual > tol {
            return Err(RootError::ConvergenceFailure {
                best: Complex64::new(value, 0.0),
                residual,
            });
        }
        out.real_roots.push(RealRoot {
            value,
            residual,
            multiplicity,
        });
    }
    if reals.len() == d {
        return Ok(());
    }
    let approx = aberth(eval, MAX_ITERATIONS);
    let mut rest = approx.roots;
    // Drop the approximation nearest each known real root.
    for &value in &reals {
        let target = Complex64::new(value, 0.0);
        let nearest = (0..rest.len())
            .min_by(|&a, &b| {
                (rest[a] - target)
                    .norm()
                    .total_cmp(&(rest[b] - target).norm())
            })
            .expect("more approximations than real roots");
        rest.swap_remove(nearest);
    }
    // Upper half-plane representatives, each averaged with its conjugate
    // partner from the lower half.
    rest.sort_by(|a, b| b.im.total_cmp(&a.im));
    let half = rest.len() / 2;
    let (upper, lower) = rest.split_at(half);
    let mut lower: Vec<Complex64> = lower.to_vec();
    for &u in upper {
        let partner = (0..lower.len())
            .min_by(|&a, &b| {
                (u - lower[a].conj())
                    .norm()
                    .total_cmp(&(u - lower[b].conj()).norm())
            })
            .expect("one partner per upper root");
        let w = lower.swap_remove(partner);
        let mut z = polish(eval, (u + w.conj()) * 0.5);
        if z.im < 0.0 {
            z = z.conj();
        }
        let residual = eval.backward_error(z);
        if z.im <= 0.0 || residual > tol || !residual.is_finite() {
            return Err(RootError::ConvergenceFailure { best: z, residual });
        }
        out.complex_roots.push(ComplexRoot {
            re: z.re,
            im: z.im,
            residual,
            multiplicity,
        });
    }
    Ok(())
}

/// Roots of the `K_{2,l-2}` bracket `g(l, x - shift)`, evaluated from its
/// three-term form when the polynomial is square-free with no integer
/// roots (the case for every `l > 6` checked so far) and densely otherwise.
pub fn bracket_roots(l: usize, shift: i64, tol: f64) -> Result<RootSet, RootError> {
    let exact = k2n_bracket(l)
        .map_err(|_| RootError::BracketTooSmall { size: l })?
        .compose_shift(shift);
    let degree = check_input(&exact)?;
    let (ints, rest) = integer_roots(&exact);
    let factors = rest.squarefree_decomposition();
    let structured = ints.is_empty() && factors.len() == 1 && factors[0].1 == 1;
    if !structured {
        return find_roots(&exact, tol);
    }
    let eval = Bracket::new(l, shift, fujiwara_bound(&exact));
    let mut out = RootSet {
        source_degree: degree,
        ..RootSet::default()
    };
    squarefree_roots(&exact, &eval, 1, tol, &mut out)?;
    finish(out)
}

/// Which bracket family a limit experiment sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitFamily {
    /// `g(l, x)`; roots approach `Re z = 4`.
    K2n,
    /// `g(l, x - n)`; roots approach `Re z = 4 + n`.
    Hshift { n: usize },
}

impl LimitFamily {
    pub fn shift(&self) -> i64 {
        match self {
            LimitFamily::K2n => 0,
            LimitFamily::Hshift { n } => *n as i64,
        }
    }

    pub fn line(&self) -> f64 {
        4.0 + self.shift() as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimitRow {
    pub size: usize,
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    /// `|re - line|`.
    pub distance: f64,
}

#[derive(Debug, Clone)]
pub struct LimitTable {
    pub family: LimitFamily,
    pub rows: Vec<LimitRow>,
    pub failures: Vec<(usize, RootError)>,
}

impl LimitTable {
    pub fn rows_for(&self, size: usize) -> impl Iterator<Item = &LimitRow> {
        self.rows.iter().filter(move |r| r.size == size)
    }

    pub fn max_abs_im(&self, size: usize) -> Option<f64> {
        self.rows_for(size).map(|r| r.im.abs()).reduce(f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("size,re,im,residual,distance\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.size,
                fmt_f64(r.re),
                fmt_f64(r.im),
                fmt_f64(r.residual),
                fmt_f64(r.distance)
            ));
        }
        out
    }
}

/// Shortest round-trip form, with negative zero printed as `0`.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        "0".into()
    } else {
        format!("{x}")
    }
}

/// Roots of the bracket for each size (the `l` of `K_{2,l-2}`), one row per
/// root with conjugates listed separately. Sizes below 6 and sizes whose
/// root finding fails are reported in `failures`.
pub fn limit_curve_experiment(family: LimitFamily, sizes: &[usize], tol: f64) -> LimitTable {
    let line = family.line();
    let results: Vec<(usize, Result<RootSet, RootError>)> = sizes
        .par_iter()
        .map(|&size| (size, bracket_roots(size, family.shift(), tol)))
        .collect();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (size, result) in results {
        match result {
            Ok(set) => rows.extend(set.all_roots().into_iter().map(|(z, residual)| LimitRow {
                size,
                re: z.re,
                im: z.im,
                residual,
                distance: (z.re - line).abs(),
            })),
            Err(e) => failures.push((size, e)),
        }
    }
    LimitTable {
        family,
        rows,
        failures,
    }
}
