//! Sparse multilinear maps with exact coefficients.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{axpy, zero_vector, Scalar, Vector};

/// A multilinear map `K^{d_1} x ... x K^{d_n} -> K^{out}` stored by its
/// structure constants.
///
/// Keys are `[i_1, ..., i_n, k]`: the coefficient of output basis vector `k`
/// in the image of `(e_{i_1}, ..., e_{i_n})`. Zero coefficients are never
/// stored, and the map keeps keys sorted, so two tensors are equal exactly
/// when their structure constants agree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    in_dims: Vec<usize>,
    out_dim: usize,
    entries: BTreeMap<Vec<usize>, Scalar>,
}

impl Tensor {
    pub fn zero(in_dims: Vec<usize>, out_dim: usize) -> Self {
        Tensor {
            in_dims,
            out_dim,
            entries: BTreeMap::new(),
        }
    }

    /// Square tensor on a single space of dimension `dim`.
    pub fn square(arity: usize, dim: usize) -> Self {
        Self::zero(vec![dim; arity], dim)
    }

    /// Builds a tensor by evaluating `f` on every tuple of input basis indices.
    pub fn from_fn<F>(in_dims: Vec<usize>, out_dim: usize, mut f: F) -> Self
    where
        F: FnMut(&[usize]) -> Vector,
    {
        let mut t = Self::zero(in_dims.clone(), out_dim);
        for idx in tuples(&in_dims) {
            let v = f(&idx);
            debug_assert_eq!(v.len(), out_dim);
            for (k, c) in v.into_iter().enumerate() {
                if !c.is_zero() {
                    let mut key = idx.clone();
                    key.push(k);
                    t.entries.insert(key, c);
                }
            }
        }
        t
    }

    /// Builds a tensor from `(indices, coefficient)` pairs, where the last index
    /// is the output. Repeated keys are rejected.
    pub fn from_entries<I>(in_dims: Vec<usize>, out_dim: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Scalar)>,
    {
        let mut t = Self::zero(in_dims, out_dim);
        for (key, c) in entries {
            t.check_key(&key)?;
            if t.entries.contains_key(&key) {
                return Err(Error::Invalid(format!("duplicate tensor entry {key:?}")));
            }
            if !c.is_zero() {
                t.entries.insert(key, c);
            }
        }
        Ok(t)
    }

    fn check_key(&self, key: &[usize]) -> Result<()> {
        if key.len() != self.in_dims.len() + 1 {
            return Err(Error::DimensionMismatch {
                expected: self.in_dims.len() + 1,
                found: key.len(),
            });
        }
        for (&i, &d) in key.iter().zip(self.in_dims.iter().chain(std::iter::once(&self.out_dim))) {
            if i >= d {
                return Err(Error::IndexOutOfRange { index: i, dim: d });
            }
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.in_dims.len()
    }

    pub fn in_dims(&self) -> &[usize] {
        &self.in_dims
    }

    pub fn out_dim(&self) -> usize {
        self.out_dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in canonical (sorted) order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Scalar)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn get(&self, key: &[usize]) -> Scalar {
        self.entries.get(key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Sets one structure constant; a zero value removes the entry.
    pub fn set(&mut self, key: Vec<usize>, c: Scalar) -> Result<()> {
        self.check_key(&key)?;
        if c.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, c);
        }
        Ok(())
    }

    /// Image of a tuple of basis vectors.
    pub fn basis_apply(&self, idx: &[usize]) -> Vector {
        debug_assert_eq!(idx.len(), self.arity());
        let mut out = zero_vector(self.out_dim);
        let mut lo = idx.to_vec();
        lo.push(0);
        let mut hi = idx.to_vec();
        hi.push(self.out_dim);
        for (key, c) in self.entries.range(lo..hi) {
            out[key[key.len() - 1]] = c.clone();
        }
        out
    }

    /// Multilinear evaluation on arbitrary coordinate vectors.
    pub fn apply(&self, args: &[&[Scalar]]) -> Vector {
        assert_eq!(args.len(), self.arity(), "wrong number of arguments");
        for (a, &d) in args.iter().zip(&self.in_dims) {
            assert_eq!(a.len(), d, "argument length does not match slot dimension");
        }
        let supports: Vec<Vec<usize>> = args
            .iter()
            .map(|a| (0..a.len()).filter(|&i| !a[i].is_zero()).collect())
            .collect();
        let mut out = zero_vector(self.out_dim);
        if supports.iter().any(Vec::is_empty) {
            return out;
        }
        let lens: Vec<usize> = supports.iter().map(Vec::len).collect();
        for pick in tuples(&lens) {
            let idx: Vec<usize> = pick.iter().enumerate().map(|(s, &p)| supports[s][p]).collect();
            let mut coeff = args[0][idx[0]].clone();
            for s in 1..idx.len() {
                coeff *= &args[s][idx[s]];
            }
            axpy(&mut out, &coeff, &self.basis_apply(&idx));
        }
        out
    }

    /// Entrywise `self + c * other`.
    pub fn add_scaled(&self, c: &Scalar, other: &Tensor) -> Result<Tensor> {
        if self.in_dims != other.in_dims || self.out_dim != other.out_dim {
            return Err(Error::Invalid("tensor shapes differ".into()));
        }
        let mut t = self.clone();
        for (k, v) in &other.entries {
            let sum = t.get(k) + c * v;
            t.set(k.clone(), sum)?;
        }
        Ok(t)
    }

    pub fn scaled(&self, c: &Scalar) -> Tensor {
        let mut t = Tensor::zero(self.in_dims.clone(), self.out_dim);
        if c.is_zero() {
            return t;
        }
        for (k, v) in &self.entries {
            t.entries.insert(k.clone(), c * v);
        }
        t
    }

    /// Reorders the input slots: slot `s` of the result is slot `perm[s]` of `self`.
    pub fn permute_inputs(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.arity());
        let in_dims = perm.iter().map(|&p| self.in_dims[p]).collect();
        let mut t = Tensor::zero(in_dims, self.out_dim);
        for (k, v) in &self.entries {
            let mut key: Vec<usize> = perm.iter().map(|&p| k[p]).collect();
            key.push(k[k.len() - 1]);
            t.entries.insert(key, v.clone());
        }
        t
    }
}

/// All index tuples `(i_1, ..., i_n)` with `i_s < dims[s]`, in lexicographic order.
pub fn tuples(dims: &[usize]) -> impl Iterator<Item = Vec<usize>> + '_ {
    let total: usize = dims.iter().product();
    (0..total).map(move |mut flat| {
        let mut idx = vec![0; dims.len()];
        for s in (0..dims.len()).rev() {
            idx[s] = flat % dims[s];
            flat /= dims[s];
        }
        idx
    })
}
