//! Constructions producing ternary Leibniz algebras from binary ones.

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::linalg::{add, sub, Matrix, Scalar, Vector};
use crate::operators::{check_operator, OperatorKind};
use crate::structure::{basis, check_structure};
use crate::tensor::Tensor;

/// Which ternary bracket to build from a triassociative algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    /// `x⊣(y⊥z − z⊥y) − (y⊥z − z⊥y)⊢x`
    Main,
    /// `x⊣(y⊥z) − (y⊥z)⊢x`
    B1,
    /// `(z⊥y)⊢x − x⊣(z⊥y)`
    B2,
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "main" => Ok(Variant::Main),
            "b1" => Ok(Variant::B1),
            "b2" => Ok(Variant::B2),
            _ => Err(Error::Invalid(format!("unknown variant `{s}`"))),
        }
    }
}

fn require_valid(a: &Algebra, kind: Kind) -> Result<()> {
    a.expect_kind(kind)?;
    let report = check_structure(a);
    if !report.is_empty() {
        return Err(Error::InvalidAlgebra(report));
    }
    Ok(())
}

fn ternary(a: &Algebra, f: impl FnMut(&[usize]) -> Vector) -> Result<Algebra> {
    let n = a.dim();
    let t = Tensor::from_fn(vec![n; 3], n, f);
    Algebra::new(Kind::TernaryLeibniz, n, vec![t])?.with_basis(a.basis().to_vec())
}

/// `x⊣w − w⊢x`
pub(crate) fn tri_commutator_action(a: &Algebra, x: &[Scalar], w: &[Scalar]) -> Vector {
    sub(&a.mul(0, x, w), &a.mul(2, w, x))
}

/// The ternary bracket of `variant` on a triassociative algebra, without validation.
pub fn t_tri_tensor(a: &Algebra, variant: Variant) -> Tensor {
    let n = a.dim();
    let e = basis(n);
    Tensor::from_fn(vec![n; 3], n, |w| {
        let (x, y, z) = (&e[w[0]], &e[w[1]], &e[w[2]]);
        match variant {
            Variant::Main => {
                let c = sub(&a.mul(1, y, z), &a.mul(1, z, y));
                tri_commutator_action(a, x, &c)
            }
            Variant::B1 => tri_commutator_action(a, x, &a.mul(1, y, z)),
            Variant::B2 => {
                let c = a.mul(1, z, y);
                sub(&a.mul(2, &c, x), &a.mul(0, x, &c))
            }
        }
    })
}

/// Ternary Leibniz algebra of a valid triassociative algebra.
pub fn t_from_triassoc(a: &Algebra, variant: Variant) -> Result<Algebra> {
    require_valid(a, Kind::Triassociative)?;
    Algebra::new(Kind::TernaryLeibniz, a.dim(), vec![t_tri_tensor(a, variant)])?.with_basis(a.basis().to_vec())
}

/// `{x, y, z} = [x, [y, z]]` on a valid Leibniz algebra.
pub fn t_from_leibniz(l: &Algebra) -> Result<Algebra> {
    require_valid(l, Kind::Leibniz)?;
    let e = basis(l.dim());
    ternary(l, |w| l.mul(0, &e[w[0]], &l.mul(0, &e[w[1]], &e[w[2]])))
}

fn require_averaging(a: &Algebra, beta: &Matrix) -> Result<()> {
    require_valid(a, Kind::Associative)?;
    let report = check_operator(a, beta, &OperatorKind::Averaging)?;
    if !report.is_empty() {
        return Err(Error::OperatorCheckFailed(report));
    }
    Ok(())
}

/// `[a, b, c] = ab β(c) − aβ(c)b − bβ(c)a + β(c)ba` for an averaging map `β`
/// on a valid associative algebra.
///
/// This bracket is not a ternary Leibniz structure for every averaging map
/// (e.g. `β = diag(0, 1)` on [`fixtures::assoc2`](crate::fixtures::assoc2)),
/// so the output is checked and refused with
/// [`Error::OutputCheckFailed`] when the identity fails.
/// [`ternary_from_assoc_averaging_nested`] always succeeds.
pub fn ternary_from_assoc_averaging(a: &Algebra, beta: &Matrix) -> Result<Algebra> {
    let t = averaging_bracket_unchecked(a, beta)?;
    let report = check_structure(&t);
    if !report.is_empty() {
        return Err(Error::OutputCheckFailed {
            what: "the averaging ternary bracket".into(),
            report,
        });
    }
    Ok(t)
}

/// The bracket of [`ternary_from_assoc_averaging`] without checking the output.
pub fn averaging_bracket_unchecked(a: &Algebra, beta: &Matrix) -> Result<Algebra> {
    require_averaging(a, beta)?;
    let e = basis(a.dim());
    ternary(a, |w| {
        let (x, y) = (&e[w[0]], &e[w[1]]);
        let bz = beta.apply(&e[w[2]]);
        let m = |u: &[Scalar], v: &[Scalar]| a.mul(0, u, v);
        let plus = add(&m(&m(x, y), &bz), &m(&m(&bz, y), x));
        let minus = add(&m(&m(x, &bz), y), &m(&m(y, &bz), x));
        sub(&plus, &minus)
    })
}

/// The Leibniz algebra `[x, y] = x β(y) − β(y) x` of an averaging map on a
/// valid associative algebra.
pub fn averaging_leibniz(a: &Algebra, beta: &Matrix) -> Result<Algebra> {
    require_averaging(a, beta)?;
    let n = a.dim();
    let e = basis(n);
    let t = Tensor::from_fn(vec![n; 2], n, |w| {
        let by = beta.apply(&e[w[1]]);
        sub(&a.mul(0, &e[w[0]], &by), &a.mul(0, &by, &e[w[0]]))
    });
    Algebra::new(Kind::Leibniz, n, vec![t])?.with_basis(a.basis().to_vec())
}

/// `[a, b, c] = a β(w) − β(w) a` with `w = b β(c) − β(c) b`, i.e.
/// [`t_from_leibniz`] of [`averaging_leibniz`]. Agrees with
/// [`ternary_from_assoc_averaging`] when `β` is the identity.
pub fn ternary_from_assoc_averaging_nested(a: &Algebra, beta: &Matrix) -> Result<Algebra> {
    t_from_leibniz(&averaging_leibniz(a, beta)?)
}
