//! Exact rational linear algebra.
//!
//! Everything here works over `BigRational`, so row reduction, kernels and
//! membership tests are exact. Subspaces are kept in a canonical form (the
//! reduced row-echelon form of a spanning set), which makes subspace equality
//! plain structural equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// A coordinate vector.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += coeff * v`
pub fn axpy(acc: &mut [Scalar], coeff: &Scalar, v: &[Scalar]) {
    if coeff.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += coeff * x;
        }
    }
}

pub fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

pub fn neg(v: &[Scalar]) -> Vector {
    v.iter().map(|x| -x).collect()
}

/// Dense row-major matrix of exact scalars.
///
/// When used as a linear map, column `j` holds the image of source basis
/// vector `j`, so a map `V -> W` has `rows = dim W` and `cols = dim V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: data.len(),
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Scalar::one())
    }

    pub fn scalar(n: usize, c: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, c.clone());
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, c) in entries.iter().enumerate() {
            m.set(i, i, c.clone());
        }
        m
    }

    /// Builds a matrix from rows. All rows must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vector>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: n,
            cols,
            data,
        })
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self> {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, c) in col.iter().enumerate() {
                m.set(i, j, c.clone());
            }
        }
        Ok(m)
    }

    /// Convenience constructor from small integers, row-major.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&x| int(x))
            })
            .collect();
        Matrix {
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Scalar) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vector(&self.data)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length does not match matrix columns");
        let mut out = zero_vector(self.rows);
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, o) in out.iter_mut().enumerate() {
                let m = self.get(r, c);
                if !m.is_zero() {
                    *o += m * x;
                }
            }
        }
        out
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let columns: Vec<Vector> = (0..other.cols).map(|j| self.apply(&other.column(j))).collect();
        Matrix::from_columns(self.rows, &columns)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scaled(&self, c: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c * x).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        rref_with_pivots(self).1.len()
    }

    /// Block-diagonal sum `[[self, 0], [0, other]]`.
    pub fn block_diagonal(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                m.set(r, c, self.get(r, c).clone());
            }
        }
        for r in 0..other.rows {
            for c in 0..other.cols {
                m.set(self.rows + r, self.cols + c, other.get(r, c).clone());
            }
        }
        m
    }

    /// Iterates over the nonzero entries as `(row, col, value)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols.max(1), k % self.cols.max(1), v))
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Reduced row-echelon form together with its pivot columns.
pub fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut pivot_row = 0;
    for col in 0..a.cols {
        if pivot_row == a.rows {
            break;
        }
        let Some(found) = (pivot_row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if found != pivot_row {
            for c in 0..a.cols {
                a.data.swap(found * a.cols + c, pivot_row * a.cols + c);
            }
        }
        let inv = a.get(pivot_row, col).recip();
        for c in col..a.cols {
            let v = a.get(pivot_row, c) * &inv;
            a.set(pivot_row, c, v);
        }
        let pivot_vals: Vector = a.row(pivot_row).to_vec();
        for r in 0..a.rows {
            if r == pivot_row {
                continue;
            }
            let factor = a.get(r, col).clone();
            if factor.is_zero() {
                continue;
            }
            for c in col..a.cols {
                if pivot_vals[c].is_zero() {
                    continue;
                }
                let v = a.get(r, c) - &factor * &pivot_vals[c];
                a.set(r, c, v);
            }
        }
        pivots.push(col);
        pivot_row += 1;
    }
    (a, pivots)
}

/// The unique reduced row-echelon form of `m`, same shape as `m`.
pub fn rref(m: &Matrix) -> Matrix {
    rref_with_pivots(m).0
}

/// A subspace of `K^n`, stored as the nonzero rows of an RREF matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// The span of arbitrary vectors, canonicalized.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Result<Self> {
        let m = Matrix::from_rows(ambient_dim, vectors.to_vec())?;
        let (r, pivots) = rref_with_pivots(&m);
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace {
            ambient_dim,
            basis: Matrix::from_rows(ambient_dim, rows)?,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.row_vectors().map(<[Scalar]>::to_vec).collect()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        self.basis
            .row_vectors()
            .map(|row| row.iter().position(|x| !x.is_zero()).expect("nonzero basis row"))
            .collect()
    }

    /// Subtracts the basis components of `v`; the result vanishes on pivot columns
    /// and is congruent to `v` modulo the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vector> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: v.len(),
            });
        }
        let mut out = v.to_vec();
        for (row, p) in self.basis.row_vectors().zip(self.pivots()) {
            let c = -v[p].clone();
            axpy(&mut out, &c, row);
        }
        Ok(out)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(is_zero_vector(&self.reduce(v)?))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for row in other.basis.row_vectors() {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Coordinates of `v` with respect to the basis rows; `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vector>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots().into_iter().map(|p| v[p].clone()).collect()))
    }

    /// Standard basis vectors on the non-pivot columns.
    pub fn complement_basis(&self) -> Matrix {
        let pivots = self.pivots();
        let rows: Vec<Vector> = (0..self.ambient_dim)
            .filter(|c| !pivots.contains(c))
            .map(|c| unit_vector(self.ambient_dim, c))
            .collect();
        Matrix::from_rows(self.ambient_dim, rows).expect("unit vectors have ambient length")
    }

    /// Sum of two subspaces of the same ambient space.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::span(self.ambient_dim, &vs)
    }
}

/// Null space of `m` viewed as a map `K^cols -> K^rows`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref_with_pivots(m);
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vector> = free
        .iter()
        .map(|&f| {
            let mut v = unit_vector(n, f);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, f).clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors).expect("kernel vectors have column length")
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    let columns: Vec<Vector> = (0..m.cols()).map(|j| m.column(j)).collect();
    Subspace::span(m.rows(), &columns).expect("columns have row length")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_is_fixed() {
        assert_eq!(rref(&Matrix::identity(2)), Matrix::identity(2));
    }

    #[test]
    fn rref_rank_one() {
        let m = Matrix::from_i64(&[&[2, 4], &[1, 2]]);
        assert_eq!(rref(&m), Matrix::from_i64(&[&[1, 2], &[0, 0]]));
    }

    #[test]
    fn rref_with_fractions() {
        let m = Matrix::from_i64(&[&[2, 1], &[4, 3]]);
        assert_eq!(rref(&m), Matrix::identity(2));
        let m = Matrix::from_i64(&[&[3, 1, 2]]);
        let r = rref(&m);
        assert_eq!(r.row(0), &[int(1), ratio(1, 3), ratio(2, 3)]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&Matrix::zeros(2, 2)), Subspace::full(2));
        assert_eq!(kernel(&Matrix::identity(3)), Subspace::zero(3));
        let k = kernel(&Matrix::from_i64(&[&[1, 1]]));
        assert_eq!(k.dim(), 1);
        assert_eq!(k, Subspace::span(2, &[vec![int(1), int(-1)]]).unwrap());
        assert!(k.contains(&[int(1), int(-1)]).unwrap());
    }

    #[test]
    fn image_examples() {
        assert_eq!(image(&Matrix::identity(3)), Subspace::full(3));
        assert_eq!(image(&Matrix::zeros(3, 2)), Subspace::zero(3));
    }

    #[test]
    fn contains_examples() {
        let s = Subspace::span(2, &[unit_vector(2, 0)]).unwrap();
        assert!(s.contains(&zero_vector(2)).unwrap());
        assert!(s.contains(&unit_vector(2, 0)).unwrap());
        assert!(!s.contains(&unit_vector(2, 1)).unwrap());
        assert!(matches!(
            s.contains(&zero_vector(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn complement_examples() {
        let s = Subspace::span(2, &[unit_vector(2, 0)]).unwrap();
        assert_eq!(s.complement_basis(), Matrix::from_i64(&[&[0, 1]]));
        assert_eq!(Subspace::zero(3).complement_basis(), Matrix::identity(3));
        let s = Subspace::span(2, &[vec![int(1), int(1)]]).unwrap();
        assert_eq!(s.complement_basis(), Matrix::from_i64(&[&[0, 1]]));
    }

    #[test]
    fn span_is_canonical() {
        let a = Subspace::span(3, &[vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)]]).unwrap();
        let b = Subspace::span(3, &[vec![int(1), int(2), int(1)], vec![int(1), int(0), int(-1)]]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn coordinates_in_basis() {
        let s = Subspace::span(3, &[vec![int(1), int(0), int(2)], vec![int(0), int(1), int(1)]]).unwrap();
        let v = vec![int(2), int(3), int(7)];
        assert_eq!(s.coordinates(&v).unwrap(), Some(vec![int(2), int(3)]));
        assert_eq!(s.coordinates(&[int(0), int(0), int(1)]).unwrap(), None);
    }

    #[test]
    fn compose_applies_right_first() {
        let a = Matrix::from_i64(&[&[1, 1], &[0, 1]]);
        let b = Matrix::from_i64(&[&[2, 0], &[0, 3]]);
        let ab = a.compose(&b).unwrap();
        let v = vec![int(1), int(1)];
        assert_eq!(ab.apply(&v), a.apply(&b.apply(&v)));
    }
}
