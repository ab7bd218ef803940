//! Rota-Baxter, Nijenhuis, Reynolds, centroid and averaging operators, the
//! products they induce, and a brute-force search for examples.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::functors::t_from_leibniz;
use crate::linalg::{add, axpy, int, sub, Matrix, Scalar, Vector};
use crate::report::ViolationReport;
use crate::structure::{basis, check_morphism, check_structure, expect_map_shape, run_identities};
use crate::tensor::{tuples, Tensor};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OperatorKind {
    RotaBaxter(Scalar),
    Nijenhuis,
    Reynolds,
    Averaging,
    Centroid,
}

impl OperatorKind {
    pub fn name(&self) -> &'static str {
        match self {
            OperatorKind::RotaBaxter(_) => "rota-baxter",
            OperatorKind::Nijenhuis => "nijenhuis",
            OperatorKind::Reynolds => "reynolds",
            OperatorKind::Averaging => "averaging",
            OperatorKind::Centroid => "centroid",
        }
    }

    /// Parses an operator name; `weight` is used only for `rota-baxter`.
    pub fn parse(name: &str, weight: Option<Scalar>) -> Result<Self> {
        Ok(match name {
            "rota-baxter" => OperatorKind::RotaBaxter(weight.unwrap_or_else(|| int(0))),
            "nijenhuis" => OperatorKind::Nijenhuis,
            "reynolds" => OperatorKind::Reynolds,
            "averaging" => OperatorKind::Averaging,
            "centroid" => OperatorKind::Centroid,
            _ => return Err(Error::Invalid(format!("unknown operator `{name}`"))),
        })
    }

    fn admissible(&self, kind: Kind) -> Result<()> {
        let ok = match self {
            OperatorKind::RotaBaxter(_) | OperatorKind::Nijenhuis => true,
            _ => kind.is_binary(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::Unsupported {
                what: format!("{} operators", self.name()),
                kind,
            })
        }
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OperatorKind::RotaBaxter(w) => write!(f, "rota-baxter(weight {w})"),
            other => f.write_str(other.name()),
        }
    }
}

impl FromStr for OperatorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OperatorKind::parse(s, None)
    }
}

/// Checks the defining identity of `kind` for `m` in every product slot.
pub fn check_operator(a: &Algebra, m: &Matrix, kind: &OperatorKind) -> Result<ViolationReport> {
    kind.admissible(a.kind())?;
    expect_map_shape(m, a.dim(), a.dim())?;
    let n = a.dim();
    let e = basis(n);
    let name = kind.name();
    if a.kind().is_binary() {
        Ok(run_identities(&[n, n], |w| {
            let (x, y) = (&e[w[0]], &e[w[1]]);
            let (mx, my) = (m.apply(x), m.apply(y));
            let mut out = Vec::new();
            for (s, slot) in a.slots().iter().enumerate() {
                let p = |u: &[Scalar], v: &[Scalar]| a.mul(s, u, v);
                let mxmy = p(&mx, &my);
                match kind {
                    OperatorKind::RotaBaxter(lambda) => {
                        let mut inner = add(&p(&mx, y), &p(x, &my));
                        axpy(&mut inner, lambda, &p(x, y));
                        out.push((format!("{name}:{slot}"), sub(&mxmy, &m.apply(&inner))));
                    }
                    OperatorKind::Nijenhuis => {
                        let inner = sub(&add(&p(&mx, y), &p(x, &my)), &m.apply(&p(x, y)));
                        out.push((format!("{name}:{slot}"), sub(&mxmy, &m.apply(&inner))));
                    }
                    OperatorKind::Reynolds => {
                        let inner = sub(&add(&p(&mx, y), &p(x, &my)), &mxmy);
                        out.push((format!("{name}:{slot}"), sub(&mxmy, &m.apply(&inner))));
                    }
                    OperatorKind::Centroid => {
                        let mxy = m.apply(&p(x, y));
                        out.push((format!("{name}:{slot}:1"), sub(&mxy, &p(&mx, y))));
                        out.push((format!("{name}:{slot}:2"), sub(&mxy, &p(x, &my))));
                    }
                    OperatorKind::Averaging => {
                        out.push((format!("{name}:{slot}:1"), sub(&mxmy, &m.apply(&p(&mx, y)))));
                        out.push((format!("{name}:{slot}:2"), sub(&mxmy, &m.apply(&p(x, &my)))));
                    }
                }
            }
            out
        }))
    } else {
        let slot = a.slots()[0];
        Ok(run_identities(&[n, n, n], |w| {
            let (x, y, z) = (&e[w[0]], &e[w[1]], &e[w[2]]);
            let (mx, my, mz) = (m.apply(x), m.apply(y), m.apply(z));
            let b = |p: &[Scalar], q: &[Scalar], r: &[Scalar]| a.bracket3(p, q, r);
            let lhs = b(&mx, &my, &mz);
            let two = sum(&[b(&mx, &my, z), b(&mx, y, &mz), b(x, &my, &mz)]);
            let one = sum(&[b(&mx, y, z), b(x, &my, z), b(x, y, &mz)]);
            let inner = match kind {
                OperatorKind::RotaBaxter(lambda) => {
                    let mut v = two;
                    axpy(&mut v, lambda, &one);
                    axpy(&mut v, &(lambda * lambda), &b(x, y, z));
                    v
                }
                OperatorKind::Nijenhuis => {
                    let mut v = sub(&two, &m.apply(&one));
                    v = add(&v, &m.apply(&m.apply(&b(x, y, z))));
                    v
                }
                _ => unreachable!("admissibility checked above"),
            };
            vec![(format!("{name}:{slot}"), sub(&lhs, &m.apply(&inner)))]
        }))
    }
}

fn sum(vs: &[Vector]) -> Vector {
    let mut out = vs[0].clone();
    for v in &vs[1..] {
        axpy(&mut out, &int(1), v);
    }
    out
}

/// The induced product tensors, without checking any precondition.
pub fn derived_products(a: &Algebra, m: &Matrix, kind: &OperatorKind) -> Result<Vec<Tensor>> {
    kind.admissible(a.kind())?;
    expect_map_shape(m, a.dim(), a.dim())?;
    let n = a.dim();
    let e = basis(n);
    let arity = a.kind().arity();
    Ok((0..a.slots().len())
        .map(|s| {
            Tensor::from_fn(vec![n; arity], n, |w| {
                if arity == 2 {
                    let (x, y) = (&e[w[0]], &e[w[1]]);
                    let p = |u: &[Scalar], v: &[Scalar]| a.mul(s, u, v);
                    let (mx, my) = (m.apply(x), m.apply(y));
                    match kind {
                        OperatorKind::RotaBaxter(lambda) => {
                            let mut v = add(&p(&mx, y), &p(x, &my));
                            axpy(&mut v, lambda, &p(x, y));
                            v
                        }
                        OperatorKind::Nijenhuis => sub(&add(&p(&mx, y), &p(x, &my)), &m.apply(&p(x, y))),
                        OperatorKind::Reynolds => sub(&add(&p(&mx, y), &p(x, &my)), &p(&mx, &my)),
                        OperatorKind::Centroid | OperatorKind::Averaging => p(&mx, y),
                    }
                } else {
                    let (x, y, z) = (&e[w[0]], &e[w[1]], &e[w[2]]);
                    ternary_derived(a, m, kind, x, y, z)
                }
            })
        })
        .collect())
}

fn ternary_derived(a: &Algebra, m: &Matrix, kind: &OperatorKind, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
    let (mx, my, mz) = (m.apply(x), m.apply(y), m.apply(z));
    let b = |p: &[Scalar], q: &[Scalar], r: &[Scalar]| a.bracket3(p, q, r);
    let two = sum(&[b(&mx, &my, z), b(&mx, y, &mz), b(x, &my, &mz)]);
    match kind {
        OperatorKind::RotaBaxter(lambda) => {
            let mut v = two;
            axpy(&mut v, lambda, &sum(&[b(&mx, y, z), b(x, &my, z), b(x, y, &mz)]));
            axpy(&mut v, &(lambda * lambda), &b(x, y, z));
            v
        }
        OperatorKind::Nijenhuis => {
            let one = sum(&[b(&mx, y, z), b(x, y, &mz), b(x, &my, z)]);
            add(&sub(&two, &m.apply(&one)), &m.apply(&m.apply(&b(x, y, z))))
        }
        _ => unreachable!("ternary kinds only admit rota-baxter and nijenhuis"),
    }
}

/// The algebra built from `m` by the operator's derived-product formula.
///
/// Refuses inputs where the algebra or the operator identity fails, and
/// non-injective averaging maps on triassociative algebras. Averaging on
/// Leibniz algebras has no derived product here.
pub fn derive_from_operator(a: &Algebra, m: &Matrix, kind: &OperatorKind) -> Result<Algebra> {
    if a.kind() == Kind::Leibniz && *kind == OperatorKind::Averaging {
        return Err(Error::Unsupported {
            what: "the averaging derived product".into(),
            kind: a.kind(),
        });
    }
    let report = check_structure(a);
    if !report.is_empty() {
        return Err(Error::InvalidAlgebra(report));
    }
    let report = check_operator(a, m, kind)?;
    if !report.is_empty() {
        return Err(Error::OperatorCheckFailed(report));
    }
    if a.kind() == Kind::Triassociative && *kind == OperatorKind::Averaging {
        let rank = m.rank();
        if rank < a.dim() {
            return Err(Error::NotInjective { rank, dim: a.dim() });
        }
    }
    let products = derived_products(a, m, kind)?;
    Algebra::new(a.kind(), a.dim(), products)?.with_basis(a.basis().to_vec())
}

/// Compares `[x,[y,z]_R]_R` with the ternary Rota-Baxter bracket built on
/// `{x,y,z} = [x,[y,z]]`. Returns whether the two tensors coincide.
pub fn rb_iterated_vs_ternary(l: &Algebra, r: &Matrix, weight: &Scalar) -> Result<bool> {
    l.expect_kind(Kind::Leibniz)?;
    let kind = OperatorKind::RotaBaxter(weight.clone());
    let iterated = t_from_leibniz(&derive_from_operator(l, r, &kind)?)?;
    let t = t_from_leibniz(l)?;
    let ternary = derived_products(&t, r, &kind)?;
    Ok(iterated.products()[0] == ternary[0])
}

fn grid_matrices(n: usize, grid: &[Scalar], diagonal_only: bool) -> Vec<Vec<usize>> {
    let free = if diagonal_only { n } else { n * n };
    tuples(&vec![grid.len(); free]).collect()
}

fn grid_matrix(n: usize, grid: &[Scalar], pick: &[usize], diagonal_only: bool) -> Matrix {
    if diagonal_only {
        Matrix::diagonal(&pick.iter().map(|&g| grid[g].clone()).collect::<Vec<_>>())
    } else {
        Matrix::new(n, n, pick.iter().map(|&g| grid[g].clone()).collect()).expect("n*n entries")
    }
}

/// Every square matrix with entries in `grid` (or every diagonal one) that
/// passes `check_operator`, in lexicographic order of grid positions.
pub fn search_operators(a: &Algebra, kind: &OperatorKind, grid: &[Scalar], diagonal_only: bool) -> Result<Vec<Matrix>> {
    kind.admissible(a.kind())?;
    let n = a.dim();
    let picks = grid_matrices(n, grid, diagonal_only);
    let found: Vec<Option<Matrix>> = picks
        .par_iter()
        .map(|pick| {
            let m = grid_matrix(n, grid, pick, diagonal_only);
            let ok = check_operator(a, &m, kind).map(|r| r.is_empty()).unwrap_or(false);
            ok.then_some(m)
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// Every `dst.dim() x src.dim()` matrix with entries in `grid` that is a morphism.
pub fn search_morphisms(src: &Algebra, dst: &Algebra, grid: &[Scalar]) -> Result<Vec<Matrix>> {
    check_morphism(&Matrix::zeros(dst.dim(), src.dim()), src, dst)?;
    let (rows, cols) = (dst.dim(), src.dim());
    let picks: Vec<Vec<usize>> = tuples(&vec![grid.len(); rows * cols]).collect();
    let found: Vec<Option<Matrix>> = picks
        .par_iter()
        .map(|pick| {
            let f = Matrix::new(rows, cols, pick.iter().map(|&g| grid[g].clone()).collect()).expect("shape");
            check_morphism(&f, src, dst)
                .map(|r| r.is_empty())
                .unwrap_or(false)
                .then_some(f)
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}

/// The grid `{-1, 0, 1}`.
pub fn default_grid() -> Vec<Scalar> {
    vec![int(-1), int(0), int(1)]
}
