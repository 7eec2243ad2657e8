//! Special families with closed-form polynomials.
//!
//! * `K_n^b ∪ K_2^r`, and more generally `G ∪ K_2^r` for a 2-edge-coloured
//!   `G` needing all `n` colours: `x(x-1)...(x-n+1) * (x^2 - x - 2|B|)`.
//! * Joining `G` to a monochromatic `K_n` with all joining edges of one
//!   colour shifts the polynomial: `x(x-1)...(x-n+1) * P(G, x - n)`.
//! * The colouring of `K_{2,n-2}` with three blue edges at one vertex of
//!   the 2-side, whose roots approach the line `Re z = 4`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::chromatic::{chromatic_number, poly_recursive};
use crate::graph::{EdgeKind, MixedGraph};
use crate::poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("chromatic number {chi} is below the vertex count {n}")]
    PreconditionChiNotFull { chi: usize, n: usize },
    #[error("edge {u}-{v} is flexible; a 2-edge-coloured graph is required")]
    HasFlexible { u: usize, v: usize },
    #[error("{family} needs {requirement}, got {got}")]
    TooSmall {
        family: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("{0}")]
    BadParameter(String),
}

/// A member of one of the special families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    /// `K_n^b ∪ K_2^r`.
    MonoCompleteUnion { n: usize },
    /// `K_n` whose first `m` edges in lexicographic order are blue and the
    /// rest red, united with `K_2^r`.
    GK2 { n: usize, m: usize },
    /// The 2-edge-coloured `K_{2,n-2}`.
    K2n { n: usize },
    /// `K_n^r` joined by blue edges to the `K_{2,l-2}` member.
    Hshift { n: usize, l: usize },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<(), FamilyError> {
        let small = |family, requirement, got| {
            Err(FamilyError::TooSmall {
                family,
                requirement,
                got,
            })
        };
        match *self {
            FamilySpec::MonoCompleteUnion { n } if n < 1 => small("cor42", "n >= 1", n),
            FamilySpec::GK2 { n, .. } if n < 1 => small("gk2", "n >= 1", n),
            FamilySpec::GK2 { n, m } if m > n * (n - 1) / 2 => {
                Err(FamilyError::BadParameter(format!(
                    "gk2: K_{n} has {} edges, cannot colour {m} blue",
                    n * (n - 1) / 2
                )))
            }
            FamilySpec::K2n { n } if n < 5 => small("thm45", "n >= 5", n),
            FamilySpec::Hshift { l, .. } if l < 5 => small("hshift", "l >= 5", l),
            FamilySpec::Hshift { n, .. } if n < 1 => small("hshift", "n >= 1", n),
            _ => Ok(()),
        }
    }

    pub fn graph(&self) -> Result<MixedGraph, FamilyError> {
        self.validate()?;
        Ok(match *self {
            FamilySpec::MonoCompleteUnion { n } => disjoint_union(
                &mono_complete(n, EdgeKind::Blue),
                &mono_complete(2, EdgeKind::Red),
            ),
            FamilySpec::GK2 { n, m } => disjoint_union(
                &complete_with_blue_prefix(n, m),
                &mono_complete(2, EdgeKind::Red),
            ),
            FamilySpec::K2n { n } => k2n_graph(n)?,
            FamilySpec::Hshift { n, l } => coloured_join(
                &mono_complete(n, EdgeKind::Red),
                &k2n_graph(l)?,
                EdgeKind::Blue,
            ),
        })
    }

    /// The family's closed form, computed without running an engine on the
    /// whole graph.
    pub fn closed_form(&self) -> Result<IntPolynomial, FamilyError> {
        self.validate()?;
        match *self {
            FamilySpec::MonoCompleteUnion { n } => poly_gk2(&mono_complete(n, EdgeKind::Blue)),
            FamilySpec::GK2 { n, m } => poly_gk2(&complete_with_blue_prefix(n, m)),
            FamilySpec::K2n { n } => k2n_poly(n),
            FamilySpec::Hshift { n, l } => {
                Ok(IntPolynomial::falling_factorial(n) * k2n_poly(l)?.compose_shift(n as i64))
            }
        }
    }

    /// Short name and parameters, e.g. `hshift-3-8`.
    pub fn slug(&self) -> String {
        match *self {
            FamilySpec::MonoCompleteUnion { n } => format!("cor42-{n}"),
            FamilySpec::GK2 { n, m } => format!("gk2-{n}-{m}"),
            FamilySpec::K2n { n } => format!("thm45-{n}"),
            FamilySpec::Hshift { n, l } => format!("hshift-{n}-{l}"),
        }
    }

    /// Parses `kind` and its parameters as given on the command line.
    pub fn parse(kind: &str, params: &[usize]) -> Result<FamilySpec, FamilyError> {
        let want = |count: usize, usage: &str| {
            if params.len() == count {
                Ok(())
            } else {
                Err(FamilyError::BadParameter(format!(
                    "{kind} takes {count} parameter(s): {usage}, got {}",
                    params.len()
                )))
            }
        };
        let spec = match kind {
            "cor42" | "mono-complete-union" => {
                want(1, "<n>")?;
                FamilySpec::MonoCompleteUnion { n: params[0] }
            }
            "gk2" => {
                want(2, "<n> <blue edges>")?;
                FamilySpec::GK2 {
                    n: params[0],
                    m: params[1],
                }
            }
            "thm45" => {
                want(1, "<n>")?;
                FamilySpec::K2n { n: params[0] }
            }
            "hshift" => {
                want(2, "<n> <l>")?;
                FamilySpec::Hshift {
                    n: params[0],
                    l: params[1],
                }
            }
            other => {
                return Err(FamilyError::BadParameter(format!(
                    "unknown family `{other}` (expected cor42, gk2, thm45 or hshift)"
                )))
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.slug())
    }
}

/// `K_n` with every edge of one kind.
pub fn mono_complete(n: usize, kind: EdgeKind) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v, kind).expect("fresh pair");
        }
    }
    g
}

fn complete_with_blue_prefix(n: usize, m: usize) -> MixedGraph {
    let mut g = MixedGraph::new(n);
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    for (i, (u, v)) in pairs.enumerate() {
        let kind = if i < m { EdgeKind::Blue } else { EdgeKind::Red };
        g.add_edge(u, v, kind).expect("fresh pair");
    }
    g
}

/// `h`'s vertices follow `g`'s.
pub fn disjoint_union(g: &MixedGraph, h: &MixedGraph) -> MixedGraph {
    g.disjoint_union(h)
}

/// Disjoint union plus every cross pair as an edge of `kind`.
pub fn coloured_join(g: &MixedGraph, h: &MixedGraph, kind: EdgeKind) -> MixedGraph {
    let mut out = g.disjoint_union(h);
    for u in 0..g.n() {
        for v in 0..h.n() {
            out.add_edge(u, g.n() + v, kind)
                .expect("cross pairs are fresh");
        }
    }
    out
}

/// `P(G ∪ K_2^r)` for a 2-edge-coloured `G` whose chromatic number equals
/// its order.
pub fn poly_gk2(g: &MixedGraph) -> Result<IntPolynomial, FamilyError> {
    if let Some((u, v)) = g.first_flexible() {
        return Err(FamilyError::HasFlexible { u, v });
    }
    let n = g.n();
    let chi = chromatic_number(g);
    if chi != n {
        return Err(FamilyError::PreconditionChiNotFull { chi, n });
    }
    let blue = g.count_kind(EdgeKind::Blue) as i64;
    let quadratic = IntPolynomial::from_i64s(&[-2 * blue, -1, 1]);
    Ok(IntPolynomial::falling_factorial(n) * quadratic)
}

/// `G` joined to `K_n` with every clique edge `clique` and every joining
/// edge `joining`, together with its polynomial
/// `x(x-1)...(x-n+1) * P(G, x - n)`.
///
/// The shift holds for any such pair of kinds: every vertex of `G` sees
/// every clique vertex, so the clique's `n` colours are unavailable to `G`
/// and each colour pair between the two parts carries joining edges only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftedJoin {
    pub graph: MixedGraph,
    pub polynomial: IntPolynomial,
}

pub fn poly_shifted_join(
    g: &MixedGraph,
    n: usize,
    clique: EdgeKind,
    joining: EdgeKind,
) -> ShiftedJoin {
    let graph = coloured_join(&mono_complete(n, clique), g, joining);
    let polynomial =
        IntPolynomial::falling_factorial(n) * poly_recursive(g).compose_shift(n as i64);
    ShiftedJoin { graph, polynomial }
}

/// `K_{2,n-2}` with parts `{0, 1}` and `2..n`; the edges from vertex 1 to
/// vertices 2, 3 and 4 are blue and every other edge is red.
pub fn k2n_graph(n: usize) -> Result<MixedGraph, FamilyError> {
    if n < 5 {
        return Err(FamilyError::TooSmall {
            family: "thm45",
            requirement: "n >= 5",
            got: n,
        });
    }
    let mut g = MixedGraph::new(n);
    for y in 2..n {
        g.add_edge(0, y, EdgeKind::Red).expect("fresh pair");
        let kind = if y <= 4 {
            EdgeKind::Blue
        } else {
            EdgeKind::Red
        };
        g.add_edge(1, y, kind).expect("fresh pair");
    }
    Ok(g)
}

fn linear_power(root: i64, exp: usize) -> IntPolynomial {
    (0..exp).map(|_| IntPolynomial::linear_root(root)).product()
}

/// Counting colourings by how many colours the three blue neighbours use:
/// `x(x-1)(x-2)(x-3)(x-4)(x-5)^(n-5) + 3x(x-1)(x-2)(x-3)(x-4)^(n-5)
///  + x(x-1)(x-2)(x-3)^(n-5)`.
pub fn k2n_poly(n: usize) -> Result<IntPolynomial, FamilyError> {
    if n < 5 {
        return Err(FamilyError::TooSmall {
            family: "thm45",
            requirement: "n >= 5",
            got: n,
        });
    }
    let e = n - 5;
    let three = IntPolynomial::falling_factorial(3);
    let distinct = IntPolynomial::falling_factorial(5) * linear_power(5, e);
    let pair = (IntPolynomial::falling_factorial(4) * linear_power(4, e)).scale(&BigInt::from(3));
    let single = three * linear_power(3, e);
    Ok(distinct + pair + single)
}

/// `(x-3)^(n-6) + 3(x-4)^(n-5) + (x-4)(x-5)^(n-5)`, the factor left after
/// removing `x(x-1)(x-2)(x-3)` from [`k2n_poly`].
pub fn k2n_bracket(n: usize) -> Result<IntPolynomial, FamilyError> {
    if n < 6 {
        return Err(FamilyError::TooSmall {
            family: "thm45 bracket",
            requirement: "n >= 6",
            got: n,
        });
    }
    let three = IntPolynomial::from_i64s(&[3]);
    Ok(linear_power(3, n - 6)
        + linear_power(4, n - 5) * three
        + IntPolynomial::linear_root(4) * linear_power(5, n - 5))
}

/// The negative root `(1 - sqrt(1 + 8m)) / 2` of `x^2 - x - 2m`.
pub fn gk2_negative_root(m: u64) -> f64 {
    (1.0 - ((1 + 8 * m) as f64).sqrt()) / 2.0
}
