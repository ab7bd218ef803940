//! Axiom checking and the basic constructions on a single algebra kind.
//!
//! All defining identities are multilinear, so they are checked on basis
//! tuples only. Work is spread over rayon workers; reports are sorted
//! afterwards, which keeps output independent of scheduling.

use rayon::prelude::*;

use crate::algebra::{Algebra, Kind, Slot};
use crate::error::{Error, Result};
use crate::linalg::{self, axpy, int, is_zero_vector, kernel, sub, unit_vector, Matrix, Subspace, Vector};
use crate::report::{Violation, ViolationReport};
use crate::tensor::{tuples, Tensor};

/// One triassociative axiom `(x ∘a y) ∘b z = x ∘c (y ∘d z)` as slot positions
/// (0 = left, 1 = middle, 2 = right).
#[derive(Clone, Copy, Debug)]
pub struct TriAxiom {
    pub id: &'static str,
    pub lhs_inner: usize,
    pub lhs_outer: usize,
    pub rhs_outer: usize,
    pub rhs_inner: usize,
}

const L: usize = 0;
const M: usize = 1;
const R: usize = 2;

const fn ax(id: &'static str, lhs_inner: usize, lhs_outer: usize, rhs_outer: usize, rhs_inner: usize) -> TriAxiom {
    TriAxiom {
        id,
        lhs_inner,
        lhs_outer,
        rhs_outer,
        rhs_inner,
    }
}

/// The eleven triassociative axioms, numbered as in the usual definition.
pub const TRIASSOCIATIVE_AXIOMS: [TriAxiom; 11] = [
    ax("tri-(1)", L, L, L, L),
    ax("tri-(2)", R, R, R, R),
    ax("tri-(3)", M, M, M, M),
    ax("tri-(4)", L, L, L, R),
    ax("tri-(5)", L, L, L, M),
    ax("tri-(6)", R, L, R, L),
    ax("tri-(7)", L, R, R, R),
    ax("tri-(8)", M, R, R, R),
    ax("tri-(9)", M, L, M, L),
    ax("tri-(10)", L, M, M, R),
    ax("tri-(11)", R, M, R, M),
];

pub(crate) fn basis(n: usize) -> Vec<Vector> {
    (0..n).map(|i| unit_vector(n, i)).collect()
}

/// Evaluates `f` on every index tuple in parallel and collects nonzero discrepancies.
pub(crate) fn run_identities<F>(dims: &[usize], f: F) -> ViolationReport
where
    F: Fn(&[usize]) -> Vec<(String, Vector)> + Sync,
{
    let all: Vec<Vec<usize>> = tuples(dims).collect();
    let violations: Vec<Violation> = all
        .par_iter()
        .flat_map_iter(|idx| {
            f(idx)
                .into_iter()
                .filter(|(_, d)| !is_zero_vector(d))
                .map(move |(axiom, discrepancy)| Violation {
                    axiom,
                    witness: idx.clone(),
                    discrepancy,
                })
        })
        .collect();
    ViolationReport::new(violations)
}

/// Checks every defining identity of the algebra's kind on all basis tuples.
pub fn check_structure(a: &Algebra) -> ViolationReport {
    let n = a.dim();
    let e = basis(n);
    match a.kind() {
        Kind::Associative => run_identities(&[n; 3], |w| {
            let (x, y, z) = (&e[w[0]], &e[w[1]], &e[w[2]]);
            let lhs = a.mul(0, &a.mul(0, x, y), z);
            let rhs = a.mul(0, x, &a.mul(0, y, z));
            vec![("assoc".to_string(), sub(&lhs, &rhs))]
        }),
        Kind::Triassociative => run_identities(&[n; 3], |w| {
            let (x, y, z) = (&e[w[0]], &e[w[1]], &e[w[2]]);
            TRIASSOCIATIVE_AXIOMS
                .iter()
                .map(|t| {
                    let lhs = a.mul(t.lhs_outer, &a.mul(t.lhs_inner, x, y), z);
                    let rhs = a.mul(t.rhs_outer, x, &a.mul(t.rhs_inner, y, z));
                    (t.id.to_string(), sub(&lhs, &rhs))
                })
                .collect()
        }),
        Kind::Leibniz => run_identities(&[n; 3], |w| {
            let (x, y, z) = (&e[w[0]], &e[w[1]], &e[w[2]]);
            vec![("leibniz".to_string(), leibniz_defect(a, x, y, z))]
        }),
        Kind::TernaryLeibniz => run_identities(&[n; 5], |w| {
            let (x, y, z, t, u) = (&e[w[0]], &e[w[1]], &e[w[2]], &e[w[3]], &e[w[4]]);
            vec![("ternary-leibniz".to_string(), ternary_defect(a, x, y, z, t, u))]
        }),
    }
}

/// `[[x,y],z] - [x,[y,z]] - [[x,z],y]`
pub(crate) fn leibniz_defect(a: &Algebra, x: &[linalg::Scalar], y: &[linalg::Scalar], z: &[linalg::Scalar]) -> Vector {
    let lhs = a.mul(0, &a.mul(0, x, y), z);
    let mut d = sub(&lhs, &a.mul(0, x, &a.mul(0, y, z)));
    axpy(&mut d, &int(-1), &a.mul(0, &a.mul(0, x, z), y));
    d
}

/// `[[x,y,z],t,u] - [x,y,[z,t,u]] - [x,[y,t,u],z] - [[x,t,u],y,z]`
pub(crate) fn ternary_defect(
    a: &Algebra,
    x: &[linalg::Scalar],
    y: &[linalg::Scalar],
    z: &[linalg::Scalar],
    t: &[linalg::Scalar],
    u: &[linalg::Scalar],
) -> Vector {
    let b = |p: &[linalg::Scalar], q: &[linalg::Scalar], r: &[linalg::Scalar]| a.bracket3(p, q, r);
    let mut d = b(&b(x, y, z), t, u);
    let m1 = int(-1);
    axpy(&mut d, &m1, &b(x, y, &b(z, t, u)));
    axpy(&mut d, &m1, &b(x, &b(y, t, u), z));
    axpy(&mut d, &m1, &b(&b(x, t, u), y, z));
    d
}

/// Checks the left-oriented ternary identity
/// `{x,y,{z,t,u}} = {{x,y,z},t,u} + {z,{x,y,t},u} + {z,t,{x,y,u}}`.
pub fn check_left_ternary(a: &Algebra) -> Result<ViolationReport> {
    a.expect_kind(Kind::TernaryLeibniz)?;
    let n = a.dim();
    let e = basis(n);
    Ok(run_identities(&[n; 5], |w| {
        let (x, y, z, t, u) = (&e[w[0]], &e[w[1]], &e[w[2]], &e[w[3]], &e[w[4]]);
        let b = |p: &[linalg::Scalar], q: &[linalg::Scalar], r: &[linalg::Scalar]| a.bracket3(p, q, r);
        let mut d = b(x, y, &b(z, t, u));
        let m1 = int(-1);
        axpy(&mut d, &m1, &b(&b(x, y, z), t, u));
        axpy(&mut d, &m1, &b(z, &b(x, y, t), u));
        axpy(&mut d, &m1, &b(z, t, &b(x, y, u)));
        vec![("ternary-leibniz-left".to_string(), d)]
    }))
}

pub(crate) fn expect_map_shape(f: &Matrix, src_dim: usize, dst_dim: usize) -> Result<()> {
    if f.rows() != dst_dim || f.cols() != src_dim {
        return Err(Error::ShapeMismatch {
            expected_rows: dst_dim,
            expected_cols: src_dim,
            rows: f.rows(),
            cols: f.cols(),
        });
    }
    Ok(())
}

pub(crate) fn expect_same_kind(a: &Algebra, b: &Algebra) -> Result<()> {
    if a.kind() != b.kind() {
        return Err(Error::KindMismatch {
            expected: a.kind(),
            found: b.kind(),
        });
    }
    Ok(())
}

/// Checks `f(x * y) = f(x) * f(y)` for every product slot on all basis tuples.
pub fn check_morphism(f: &Matrix, src: &Algebra, dst: &Algebra) -> Result<ViolationReport> {
    expect_same_kind(src, dst)?;
    expect_map_shape(f, src.dim(), dst.dim())?;
    let images: Vec<Vector> = (0..src.dim()).map(|j| f.column(j)).collect();
    let e = basis(src.dim());
    let arity = src.kind().arity();
    Ok(run_identities(&vec![src.dim(); arity], |w| {
        src.slots()
            .iter()
            .enumerate()
            .map(|(s, slot)| {
                let args: Vec<&[linalg::Scalar]> = w.iter().map(|&i| e[i].as_slice()).collect();
                let mapped: Vec<&[linalg::Scalar]> = w.iter().map(|&i| images[i].as_slice()).collect();
                let lhs = f.apply(&src.apply_slot(s, &args));
                let rhs = dst.apply_slot(s, &mapped);
                (format!("morphism:{slot}"), sub(&lhs, &rhs))
            })
            .collect()
    }))
}

/// Block-diagonal structure constants on `a ⊕ b`; mixed products vanish.
pub fn direct_sum(a: &Algebra, b: &Algebra) -> Result<Algebra> {
    expect_same_kind(a, b)?;
    let n = a.dim();
    let dim = n + b.dim();
    let arity = a.kind().arity();
    let products = a
        .products()
        .iter()
        .zip(b.products())
        .map(|(ta, tb)| {
            let mut t = Tensor::square(arity, dim);
            for (k, c) in ta.entries() {
                t.set(k.to_vec(), c.clone()).expect("index in range");
            }
            for (k, c) in tb.entries() {
                t.set(k.iter().map(|i| i + n).collect(), c.clone()).expect("index in range");
            }
            t
        })
        .collect();
    Algebra::new(a.kind(), dim, products)
}

/// Whether `s` is closed under every product of `a`.
pub fn is_subalgebra(a: &Algebra, s: &Subspace) -> Result<bool> {
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: s.ambient_dim(),
        });
    }
    let vs = s.basis_vectors();
    let arity = a.kind().arity();
    for w in tuples(&vec![vs.len(); arity]) {
        let args: Vec<&[linalg::Scalar]> = w.iter().map(|&i| vs[i].as_slice()).collect();
        for s_idx in 0..a.slots().len() {
            if !s.contains(&a.apply_slot(s_idx, &args))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the graph `{(x, f x)}` is a subalgebra of `a ⊕ b`.
pub fn graph_is_subalgebra(f: &Matrix, a: &Algebra, b: &Algebra) -> Result<bool> {
    expect_same_kind(a, b)?;
    expect_map_shape(f, a.dim(), b.dim())?;
    let sum = direct_sum(a, b)?;
    let vectors: Vec<Vector> = (0..a.dim())
        .map(|j| {
            let mut v = unit_vector(a.dim(), j);
            v.extend(f.column(j));
            v
        })
        .collect();
    let graph = Subspace::span(sum.dim(), &vectors)?;
    is_subalgebra(&sum, &graph)
}

/// Linear maps `x -> product(.., x, ..)` for every slot, every argument
/// position and every choice of basis vectors in the other positions.
fn multiplication_maps(a: &Algebra) -> Vec<Matrix> {
    let n = a.dim();
    let e = basis(n);
    let arity = a.kind().arity();
    let mut maps = Vec::new();
    for s in 0..a.slots().len() {
        for pos in 0..arity {
            for others in tuples(&vec![n; arity - 1]) {
                let columns: Vec<Vector> = (0..n)
                    .map(|j| {
                        let mut args: Vec<&[linalg::Scalar]> = others.iter().map(|&i| e[i].as_slice()).collect();
                        args.insert(pos, e[j].as_slice());
                        a.apply_slot(s, &args)
                    })
                    .collect();
                maps.push(Matrix::from_columns(n, &columns).expect("columns have length n"));
            }
        }
    }
    maps
}

/// Elements that multiply to zero with everything, in every slot and position.
pub fn annihilator(a: &Algebra) -> Subspace {
    let n = a.dim();
    let rows: Vec<Vector> = multiplication_maps(a)
        .iter()
        .flat_map(|m| m.row_vectors().map(<[linalg::Scalar]>::to_vec).collect::<Vec<_>>())
        .collect();
    let stacked = Matrix::from_rows(n, rows).expect("rows have length n");
    kernel(&stacked)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    TwoSided,
    ThreeSided,
}

impl Side {
    /// The sidedness used for quotients and crossed modules of a kind.
    pub fn full_for(kind: Kind) -> Side {
        if kind.is_binary() {
            Side::TwoSided
        } else {
            Side::ThreeSided
        }
    }

    fn positions(self, kind: Kind) -> Result<&'static [usize]> {
        match (self, kind.is_binary()) {
            (Side::Left, true) => Ok(&[0]),
            (Side::Right, true) => Ok(&[1]),
            (Side::TwoSided, true) => Ok(&[0, 1]),
            (Side::ThreeSided, false) => Ok(&[0, 1, 2]),
            _ => Err(Error::Unsupported {
                what: format!("{self:?} ideals"),
                kind,
            }),
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
            Side::TwoSided => "two-sided",
            Side::ThreeSided => "three-sided",
        })
    }
}

/// Whether products with a member of `s` in the positions prescribed by
/// `side` (anything elsewhere) stay in `s`.
pub fn ideal_check(s: &Subspace, a: &Algebra, side: Side) -> Result<bool> {
    if s.ambient_dim() != a.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: s.ambient_dim(),
        });
    }
    let positions = side.positions(a.kind())?;
    let n = a.dim();
    let e = basis(n);
    let members = s.basis_vectors();
    let arity = a.kind().arity();
    for &pos in positions {
        for m in &members {
            for others in tuples(&vec![n; arity - 1]) {
                let mut args: Vec<&[linalg::Scalar]> = others.iter().map(|&i| e[i].as_slice()).collect();
                args.insert(pos, m.as_slice());
                for slot in 0..a.slots().len() {
                    if !s.contains(&a.apply_slot(slot, &args))? {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}

/// Structure induced on a subalgebra, in the coordinates of its canonical basis,
/// together with the inclusion map.
pub fn restrict(a: &Algebra, s: &Subspace) -> Result<(Algebra, Matrix)> {
    if !is_subalgebra(a, s)? {
        return Err(Error::Invalid("subspace is not closed under the products".into()));
    }
    let vs = s.basis_vectors();
    let k = vs.len();
    let arity = a.kind().arity();
    let products = (0..a.slots().len())
        .map(|slot| {
            Tensor::from_fn(vec![k; arity], k, |w| {
                let args: Vec<&[linalg::Scalar]> = w.iter().map(|&i| vs[i].as_slice()).collect();
                s.coordinates(&a.apply_slot(slot, &args))
                    .expect("ambient length")
                    .expect("closed under products")
            })
        })
        .collect();
    let inclusion = Matrix::from_columns(a.dim(), &vs)?;
    Ok((Algebra::new(a.kind(), k, products)?, inclusion))
}

/// `a / i` on the complement coordinates, with the projection `a -> a / i`.
pub fn quotient(a: &Algebra, i: &Subspace) -> Result<(Algebra, Matrix)> {
    let side = Side::full_for(a.kind());
    if !ideal_check(i, a, side)? {
        return Err(Error::NotAnIdeal { side: side.to_string() });
    }
    let n = a.dim();
    let pivots = i.pivots();
    let keep: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let q = keep.len();
    let project = |v: &[linalg::Scalar]| -> Vector {
        let r = i.reduce(v).expect("ambient length");
        keep.iter().map(|&c| r[c].clone()).collect()
    };
    let projection = Matrix::from_columns(q, &(0..n).map(|k| project(&unit_vector(n, k))).collect::<Vec<_>>())?;
    let lifts: Vec<Vector> = keep.iter().map(|&c| unit_vector(n, c)).collect();
    let arity = a.kind().arity();
    let products = (0..a.slots().len())
        .map(|slot| {
            Tensor::from_fn(vec![q; arity], q, |w| {
                let args: Vec<&[linalg::Scalar]> = w.iter().map(|&j| lifts[j].as_slice()).collect();
                project(&a.apply_slot(slot, &args))
            })
        })
        .collect();
    Ok((Algebra::new(a.kind(), q, products)?, projection))
}

/// An associative algebra as a triassociative one with all three products equal.
pub fn promote_associative(a: &Algebra) -> Result<Algebra> {
    a.expect_kind(Kind::Associative)?;
    let report = check_structure(a);
    if !report.is_empty() {
        return Err(Error::InvalidAlgebra(report));
    }
    let t = a.products()[0].clone();
    Ok(Algebra::from_parts(
        Kind::Triassociative,
        a.basis().to_vec(),
        vec![t.clone(), t.clone(), t],
    ))
}

/// `x ⊣' y = y ⊢ x`, `x ⊥' y = y ⊥ x`, `x ⊢' y = y ⊣ x`.
pub fn opposite_triassociative(a: &Algebra) -> Result<Algebra> {
    a.expect_kind(Kind::Triassociative)?;
    let swap = |t: &Tensor| t.permute_inputs(&[1, 0]);
    let p = a.products();
    Ok(Algebra::from_parts(
        Kind::Triassociative,
        a.basis().to_vec(),
        vec![swap(&p[2]), swap(&p[1]), swap(&p[0])],
    ))
}

/// `{x, y, z} = [z, y, x]`.
pub fn swap_ternary_orientation(t: &Algebra) -> Result<Algebra> {
    t.expect_kind(Kind::TernaryLeibniz)?;
    Ok(Algebra::from_parts(
        Kind::TernaryLeibniz,
        t.basis().to_vec(),
        vec![t.products()[0].permute_inputs(&[2, 1, 0])],
    ))
}

/// Like [`evaluate`](Algebra::evaluate) with a string selector, as used by the CLI.
pub fn evaluate(a: &Algebra, selector: &str, args: &[&[linalg::Scalar]]) -> Result<Vector> {
    let slot: Slot = selector.parse().map_err(|_| Error::BadSelector {
        selector: selector.to_string(),
        kind: a.kind(),
    })?;
    a.evaluate(slot, args)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn perturbed_leibniz3() -> Algebra {
        Algebra::from_table(
            Kind::Leibniz,
            3,
            &[(&[0, 2, 0], -2), (&[1, 1, 0], 1), (&[1, 1, 1], 1), (&[2, 1, 1], 1), (&[1, 2, 1], -1)],
        )
        .unwrap()
    }

    #[test]
    fn fixtures_pass() {
        assert!(check_structure(&fixtures::leibniz3()).is_empty());
        assert!(check_structure(&fixtures::ternary2()).is_empty());
        assert!(check_structure(&fixtures::assoc2()).is_empty());
        assert!(check_structure(&fixtures::tri2()).is_empty());
    }

    #[test]
    fn zero_algebras_pass() {
        for kind in Kind::ALL {
            for dim in 0..3 {
                assert!(check_structure(&Algebra::zero(kind, dim)).is_empty());
            }
        }
    }

    #[test]
    fn perturbed_leibniz_reports_witness() {
        let report = check_structure(&perturbed_leibniz3());
        assert!(!report.is_empty());
        // (e2, e2, e3), 0-based
        assert!(report.has_witness("leibniz", &[1, 1, 2]));
    }

    #[test]
    fn catalogs_are_valid() {
        for a in fixtures::leibniz_dim2_catalog()
            .into_iter()
            .chain(fixtures::ternary_dim2_catalog())
            .chain(fixtures::associative_catalog())
            .chain(fixtures::triassociative_catalog())
        {
            assert!(check_structure(&a).is_empty(), "{a:?}");
        }
    }

    #[test]
    fn morphism_examples() {
        let l = fixtures::leibniz3();
        assert!(check_morphism(&Matrix::identity(3), &l, &l).unwrap().is_empty());
        let t = fixtures::ternary2();
        assert!(check_morphism(&Matrix::zeros(2, 3), &l, &Algebra::zero(Kind::Leibniz, 2))
            .unwrap()
            .is_empty());
        assert!(check_morphism(&Matrix::zeros(2, 2), &t, &t).unwrap().is_empty());

        let tri = fixtures::tri2();
        let f = Matrix::diagonal(&[int(1), int(2)]);
        let report = check_morphism(&f, &tri, &tri).unwrap();
        // f(e2 e2) = 2 e2 but f(e2) f(e2) = 4 e2
        assert!(report.violations().iter().any(|v| v.witness == [1, 1] && v.discrepancy == [int(0), int(-2)]));

        assert!(matches!(check_morphism(&f, &tri, &l), Err(Error::KindMismatch { .. })));
        assert!(matches!(
            check_morphism(&Matrix::identity(3), &tri, &tri),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn direct_sum_examples() {
        let tri = fixtures::tri2();
        let s = direct_sum(&tri, &Algebra::zero(Kind::Triassociative, 1)).unwrap();
        assert_eq!(s.dim(), 3);
        for t in s.products() {
            assert_eq!(t, &{
                let mut x = Tensor::square(2, 3);
                x.set(vec![0, 1, 0], int(1)).unwrap();
                x.set(vec![1, 1, 1], int(1)).unwrap();
                x
            });
        }
        let l = fixtures::leibniz3();
        let ll = direct_sum(&l, &l).unwrap();
        assert_eq!(ll.dim(), 6);
        assert!(check_structure(&ll).is_empty());
        for i in 0..3 {
            for j in 3..6 {
                let (x, y) = (unit_vector(6, i), unit_vector(6, j));
                assert!(is_zero_vector(&ll.mul(0, &x, &y)));
                assert!(is_zero_vector(&ll.mul(0, &y, &x)));
            }
        }
        assert!(direct_sum(&l, &tri).is_err());
    }

    #[test]
    fn graph_examples() {
        let tri = fixtures::tri2();
        assert!(graph_is_subalgebra(&Matrix::identity(2), &tri, &tri).unwrap());
        assert!(!graph_is_subalgebra(&Matrix::diagonal(&[int(1), int(2)]), &tri, &tri).unwrap());
    }

    #[test]
    fn annihilator_examples() {
        assert_eq!(annihilator(&Algebra::zero(Kind::Leibniz, 3)), Subspace::full(3));
        assert_eq!(annihilator(&fixtures::assoc2()), Subspace::zero(2));
        assert_eq!(annihilator(&fixtures::ternary2()), Subspace::zero(2));
        // [e2,e2,e2] = e1 is annihilated by nothing but e1
        let t = &fixtures::ternary_dim2_catalog()[2];
        assert_eq!(annihilator(t), Subspace::span(2, &[unit_vector(2, 0)]).unwrap());
    }

    #[test]
    fn ideal_examples() {
        let tri = fixtures::tri2();
        let e1 = Subspace::span(2, &[unit_vector(2, 0)]).unwrap();
        let e2 = Subspace::span(2, &[unit_vector(2, 1)]).unwrap();
        assert!(ideal_check(&e1, &tri, Side::TwoSided).unwrap());
        assert!(!ideal_check(&e2, &tri, Side::TwoSided).unwrap());
        // e2 e1 = 0 and e2 e2 = e2 stay in span{e2}, but e1 e2 = e1 does not
        assert!(ideal_check(&e2, &tri, Side::Left).unwrap());
        assert!(!ideal_check(&e2, &tri, Side::Right).unwrap());
        assert!(ideal_check(&Subspace::full(2), &tri, Side::TwoSided).unwrap());
        assert!(ideal_check(&Subspace::zero(2), &tri, Side::TwoSided).unwrap());
        assert!(matches!(
            ideal_check(&e1, &tri, Side::ThreeSided),
            Err(Error::Unsupported { .. })
        ));
        let t = fixtures::ternary2();
        assert!(ideal_check(&e1, &t, Side::ThreeSided).unwrap());
        assert!(ideal_check(&e1, &t, Side::TwoSided).is_err());
    }

    #[test]
    fn quotient_examples() {
        let tri = fixtures::tri2();
        let e1 = Subspace::span(2, &[unit_vector(2, 0)]).unwrap();
        let (q, p) = quotient(&tri, &e1).unwrap();
        assert_eq!(q.dim(), 1);
        for t in q.products() {
            assert_eq!(t.get(&[0, 0, 0]), int(1));
            assert_eq!(t.len(), 1);
        }
        assert!(check_structure(&q).is_empty());
        assert!(check_morphism(&p, &tri, &q).unwrap().is_empty());

        let (same, p0) = quotient(&tri, &Subspace::zero(2)).unwrap();
        assert!(same.same_structure(&tri));
        assert_eq!(p0, Matrix::identity(2));

        let (nothing, _) = quotient(&tri, &Subspace::full(2)).unwrap();
        assert_eq!(nothing.dim(), 0);

        let e2 = Subspace::span(2, &[unit_vector(2, 1)]).unwrap();
        assert!(matches!(quotient(&tri, &e2), Err(Error::NotAnIdeal { .. })));
    }

    #[test]
    fn promote_examples() {
        assert_eq!(promote_associative(&fixtures::assoc2()).unwrap(), fixtures::tri2());
        let z = promote_associative(&Algebra::zero(Kind::Associative, 2)).unwrap();
        assert_eq!(z, Algebra::zero(Kind::Triassociative, 2));
        let idem = Algebra::from_table(Kind::Associative, 1, &[(&[0, 0, 0], 1)]).unwrap();
        assert!(check_structure(&promote_associative(&idem).unwrap()).is_empty());
        let bad = Algebra::from_table(Kind::Associative, 2, &[(&[0, 0, 1], 1), (&[1, 0, 0], 1)]).unwrap();
        assert!(matches!(promote_associative(&bad), Err(Error::InvalidAlgebra(_))));
        assert!(promote_associative(&fixtures::tri2()).is_err());
    }

    #[test]
    fn opposite_examples() {
        let tri = fixtures::tri2();
        let op = opposite_triassociative(&tri).unwrap();
        for t in op.products() {
            assert_eq!(t.get(&[1, 0, 0]), int(1));
            assert_eq!(t.get(&[1, 1, 1]), int(1));
            assert_eq!(t.len(), 2);
        }
        assert!(check_structure(&op).is_empty());
        assert_eq!(opposite_triassociative(&op).unwrap(), tri);
        let z = Algebra::zero(Kind::Triassociative, 2);
        assert_eq!(opposite_triassociative(&z).unwrap(), z);
        assert!(opposite_triassociative(&fixtures::assoc2()).is_err());
    }

    #[test]
    fn swap_examples() {
        let t = fixtures::ternary2();
        let s = swap_ternary_orientation(&t).unwrap();
        assert_eq!(s.products()[0].get(&[1, 1, 0, 0]), int(1));
        assert_eq!(s.products()[0].len(), 1);
        assert_eq!(swap_ternary_orientation(&s).unwrap(), t);
        assert!(check_left_ternary(&s).unwrap().is_empty());
        assert!(swap_ternary_orientation(&fixtures::leibniz3()).is_err());
    }

    #[test]
    fn string_selector() {
        let a = fixtures::assoc2();
        let e1 = unit_vector(2, 0);
        assert!(evaluate(&a, "product", &[&e1, &e1]).is_ok());
        assert!(matches!(evaluate(&a, "nope", &[&e1, &e1]), Err(Error::BadSelector { .. })));
    }
}
