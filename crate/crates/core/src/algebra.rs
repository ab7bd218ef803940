//! Structure-constant representation of the four algebra kinds.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{Scalar, Vector};
use crate::tensor::Tensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Associative,
    Triassociative,
    Leibniz,
    TernaryLeibniz,
}

impl Kind {
    pub const ALL: [Kind; 4] = [
        Kind::Associative,
        Kind::Triassociative,
        Kind::Leibniz,
        Kind::TernaryLeibniz,
    ];

    /// Product slots carried by algebras of this kind, in storage order.
    pub fn slots(self) -> &'static [Slot] {
        match self {
            Kind::Associative => &[Slot::Product],
            Kind::Triassociative => &[Slot::Left, Slot::Middle, Slot::Right],
            Kind::Leibniz => &[Slot::Bracket],
            Kind::TernaryLeibniz => &[Slot::Bracket3],
        }
    }

    /// Number of arguments of each product.
    pub fn arity(self) -> usize {
        match self {
            Kind::TernaryLeibniz => 3,
            _ => 2,
        }
    }

    pub fn is_binary(self) -> bool {
        self.arity() == 2
    }

    pub fn name(self) -> &'static str {
        match self {
            Kind::Associative => "associative",
            Kind::Triassociative => "triassociative",
            Kind::Leibniz => "leibniz",
            Kind::TernaryLeibniz => "ternary-leibniz",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown algebra kind `{s}`")))
    }
}

/// A named product of an algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Slot {
    Product,
    Left,
    Middle,
    Right,
    Bracket,
    Bracket3,
}

impl Slot {
    pub const ALL: [Slot; 6] = [
        Slot::Product,
        Slot::Left,
        Slot::Middle,
        Slot::Right,
        Slot::Bracket,
        Slot::Bracket3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Slot::Product => "product",
            Slot::Left => "left",
            Slot::Middle => "middle",
            Slot::Right => "right",
            Slot::Bracket => "bracket",
            Slot::Bracket3 => "bracket3",
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Slot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Slot::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown product slot `{s}`")))
    }
}

pub fn default_basis(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

/// A finite-dimensional algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    kind: Kind,
    basis: Vec<String>,
    products: Vec<Tensor>,
}

impl Algebra {
    /// `products` must follow `kind.slots()` order and be square tensors of the kind's arity.
    pub fn new(kind: Kind, dim: usize, products: Vec<Tensor>) -> Result<Self> {
        if products.len() != kind.slots().len() {
            return Err(Error::Invalid(format!(
                "{kind} algebras carry {} products, got {}",
                kind.slots().len(),
                products.len()
            )));
        }
        for t in &products {
            if t.arity() != kind.arity() || t.out_dim() != dim || t.in_dims().iter().any(|&d| d != dim) {
                return Err(Error::Invalid(format!(
                    "product tensor shape {:?} -> {} does not fit a {kind} algebra of dimension {dim}",
                    t.in_dims(),
                    t.out_dim()
                )));
            }
        }
        Ok(Algebra {
            kind,
            basis: default_basis(dim),
            products,
        })
    }

    pub fn zero(kind: Kind, dim: usize) -> Self {
        let products = kind.slots().iter().map(|_| Tensor::square(kind.arity(), dim)).collect();
        Algebra {
            kind,
            basis: default_basis(dim),
            products,
        }
    }

    /// Binary or ternary algebra from integer entries `(indices.., coefficient)`,
    /// the same table used for every slot. Handy for fixtures and tests.
    pub fn from_table(kind: Kind, dim: usize, table: &[(&[usize], i64)]) -> Result<Self> {
        let t = Tensor::from_entries(
            vec![dim; kind.arity()],
            dim,
            table.iter().map(|(k, c)| (k.to_vec(), crate::linalg::int(*c))),
        )?;
        Algebra::new(kind, dim, vec![t; kind.slots().len()])
    }

    pub fn with_basis(mut self, basis: Vec<String>) -> Result<Self> {
        if basis.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: basis.len(),
            });
        }
        self.basis = basis;
        Ok(self)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn products(&self) -> &[Tensor] {
        &self.products
    }

    pub fn slots(&self) -> &'static [Slot] {
        self.kind.slots()
    }

    pub fn slot_index(&self, slot: Slot) -> Result<usize> {
        self.slots()
            .iter()
            .position(|&s| s == slot)
            .ok_or_else(|| Error::BadSelector {
                selector: slot.name().to_string(),
                kind: self.kind,
            })
    }

    pub fn product(&self, slot: Slot) -> Result<&Tensor> {
        Ok(&self.products[self.slot_index(slot)?])
    }

    /// Multilinear evaluation of one product slot.
    pub fn evaluate(&self, slot: Slot, args: &[&[Scalar]]) -> Result<Vector> {
        let t = self.product(slot)?;
        if args.len() != t.arity() {
            return Err(Error::DimensionMismatch {
                expected: t.arity(),
                found: args.len(),
            });
        }
        for a in args {
            if a.len() != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: a.len(),
                });
            }
        }
        Ok(t.apply(args))
    }

    /// Binary product in slot position `s` (index into `slots()`).
    pub fn mul(&self, s: usize, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.products[s].apply(&[x, y])
    }

    /// Ternary bracket of a ternary Leibniz algebra.
    pub fn bracket3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vector {
        debug_assert_eq!(self.kind, Kind::TernaryLeibniz);
        self.products[0].apply(&[x, y, z])
    }

    /// Product in slot position `s` with the kind's arity.
    pub fn apply_slot(&self, s: usize, args: &[&[Scalar]]) -> Vector {
        self.products[s].apply(args)
    }

    /// Same kind and structure constants; basis labels are ignored.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        self.kind == other.kind && self.products == other.products
    }

    pub fn is_zero_product(&self) -> bool {
        self.products.iter().all(Tensor::is_zero)
    }

    pub(crate) fn expect_kind(&self, kind: Kind) -> Result<()> {
        if self.kind != kind {
            return Err(Error::KindMismatch {
                expected: kind,
                found: self.kind,
            });
        }
        Ok(())
    }

    pub(crate) fn from_parts(kind: Kind, basis: Vec<String>, products: Vec<Tensor>) -> Self {
        Algebra { kind, basis, products }
    }
}
