//! Small named algebras used throughout the test suites and bundled as JSON
//! files under `fixtures/`.
//!
//! Indices are 0-based: `(0, 2, 0, -2)` reads `[e1, e3] = -2 e1`.

use crate::algebra::{Algebra, Kind};
use crate::linalg::{int, Matrix, Scalar};
use crate::tensor::Tensor;

/// 3-dimensional Leibniz algebra:
/// `[e1,e3] = -2e1`, `[e2,e2] = e1`, `[e3,e2] = e2`, `[e2,e3] = -e2`.
pub fn leibniz3() -> Algebra {
    Algebra::from_table(
        Kind::Leibniz,
        3,
        &[(&[0, 2, 0], -2), (&[1, 1, 0], 1), (&[2, 1, 1], 1), (&[1, 2, 1], -1)],
    )
    .expect("valid table")
}

/// 2-dimensional ternary Leibniz algebra: `[e1,e2,e2] = e1`.
pub fn ternary2() -> Algebra {
    Algebra::from_table(Kind::TernaryLeibniz, 2, &[(&[0, 1, 1, 0], 1)]).expect("valid table")
}

/// 2-dimensional associative algebra: `e1 e2 = e1`, `e2 e2 = e2`.
pub fn assoc2() -> Algebra {
    Algebra::from_table(Kind::Associative, 2, &[(&[0, 1, 0], 1), (&[1, 1, 1], 1)]).expect("valid table")
}

/// [`assoc2`] with all three triassociative products equal to the associative one.
pub fn tri2() -> Algebra {
    Algebra::from_table(Kind::Triassociative, 2, &[(&[0, 1, 0], 1), (&[1, 1, 1], 1)]).expect("valid table")
}

/// The averaging map `e1 -> a e2`, `e2 -> e2` on [`assoc2`] / [`tri2`].
///
/// It only satisfies the averaging identities for `a = 0`:
/// `beta(e1) beta(e1) = a^2 e2` while `beta(beta(e1) e1) = 0`.
pub fn averaging_example_map(a: &Scalar) -> Matrix {
    let mut m = Matrix::zeros(2, 2);
    m.set(1, 0, a.clone());
    m.set(1, 1, int(1));
    m
}

/// Triassociative algebra built from a linear functional `f`:
/// `x ⊣ y = f(y) x`, `x ⊢ y = f(x) y`, and `⊥` equal to `⊣` (`middle_right = false`)
/// or to `⊢` (`middle_right = true`).
pub fn functional_trialgebra(f: &[i64], middle_right: bool) -> Algebra {
    let n = f.len();
    let mut left = Tensor::square(2, n);
    let mut right = Tensor::square(2, n);
    for i in 0..n {
        for j in 0..n {
            if f[j] != 0 {
                left.set(vec![i, j, i], int(f[j])).expect("in range");
            }
            if f[i] != 0 {
                right.set(vec![i, j, j], int(f[i])).expect("in range");
            }
        }
    }
    let middle = if middle_right { right.clone() } else { left.clone() };
    Algebra::new(Kind::Triassociative, n, vec![left, middle, right]).expect("square tensors")
}

/// Hand-picked 2-dimensional Leibniz algebras (all valid).
pub fn leibniz_dim2_catalog() -> Vec<Algebra> {
    let tables: [&[(&[usize], i64)]; 5] = [
        &[],
        &[(&[0, 0, 1], 1)],
        &[(&[0, 1, 0], 1), (&[1, 0, 0], -1)],
        &[(&[0, 1, 0], 1)],
        &[(&[1, 1, 0], 1)],
    ];
    tables
        .iter()
        .map(|t| Algebra::from_table(Kind::Leibniz, 2, t).expect("valid table"))
        .collect()
}

/// Hand-picked 2-dimensional ternary Leibniz algebras.
pub fn ternary_dim2_catalog() -> Vec<Algebra> {
    let tables: [&[(&[usize], i64)]; 3] = [
        &[],
        &[(&[0, 1, 1, 0], 1)],
        &[(&[1, 1, 1, 0], 1)],
    ];
    tables
        .iter()
        .map(|t| Algebra::from_table(Kind::TernaryLeibniz, 2, t).expect("valid table"))
        .collect()
}

/// Hand-picked associative algebras of dimension at most 2.
pub fn associative_catalog() -> Vec<Algebra> {
    let tables: [(usize, &[(&[usize], i64)]); 6] = [
        (1, &[]),
        (1, &[(&[0, 0, 0], 1)]),
        (2, &[(&[0, 1, 0], 1), (&[1, 1, 1], 1)]),
        (2, &[(&[1, 0, 0], 1), (&[1, 1, 1], 1)]),
        (2, &[(&[0, 0, 1], 1)]),
        (2, &[(&[0, 0, 0], 1), (&[1, 1, 1], 1)]),
    ];
    tables
        .iter()
        .map(|(d, t)| Algebra::from_table(Kind::Associative, *d, t).expect("valid table"))
        .collect()
}

/// Triassociative algebras of dimension at most 2 with distinct products among them.
pub fn triassociative_catalog() -> Vec<Algebra> {
    let mut out: Vec<Algebra> = associative_catalog()
        .iter()
        .map(|a| Algebra::from_parts(Kind::Triassociative, a.basis().to_vec(), vec![a.products()[0].clone(); 3]))
        .collect();
    for f in [[1, 0], [0, 1], [1, 1]] {
        out.push(functional_trialgebra(&f, false));
        out.push(functional_trialgebra(&f, true));
    }
    out.push(functional_trialgebra(&[1], false));
    out
}
