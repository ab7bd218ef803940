//! Actions of one algebra on another and their semidirect products.
//!
//! An action is a list of cross tensors whose output lies in the acted
//! algebra. Its validity is decided on the semidirect sum: the action is
//! valid exactly when every defining identity holds at witness tuples that
//! mix both summands.

use std::fmt;

use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Subspace, Vector};
use crate::report::ViolationReport;
use crate::structure::{basis, check_structure, expect_same_kind, ideal_check, restrict, Side};
use crate::tensor::Tensor;

/// Which summand an argument of a cross tensor lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    Acted,
    Acting,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Space::Acted => "acted",
            Space::Acting => "acting",
        })
    }
}

/// Name, argument spaces and product slot of one cross tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossSlot {
    pub name: &'static str,
    pub pattern: &'static [Space],
    pub slot: usize,
}

use Space::{Acted as A, Acting as P};

const fn cs(name: &'static str, pattern: &'static [Space], slot: usize) -> CrossSlot {
    CrossSlot { name, pattern, slot }
}

const BINARY: [CrossSlot; 2] = [cs("mu1", &[A, P], 0), cs("mu2", &[P, A], 0)];

const TRIASSOCIATIVE: [CrossSlot; 6] = [
    cs("μ1_left", &[A, P], 0),
    cs("μ1_mid", &[A, P], 1),
    cs("μ1_right", &[A, P], 2),
    cs("μ2_left", &[P, A], 0),
    cs("μ2_mid", &[P, A], 1),
    cs("μ2_right", &[P, A], 2),
];

const TERNARY: [CrossSlot; 6] = [
    cs("m1", &[A, P, P], 0),
    cs("m2", &[P, A, P], 0),
    cs("m3", &[P, P, A], 0),
    cs("mp1", &[P, A, A], 0),
    cs("mp2", &[A, P, A], 0),
    cs("mp3", &[A, A, P], 0),
];

/// Cross tensors carried by an action of the given kind, in storage order.
pub fn layout(kind: Kind) -> &'static [CrossSlot] {
    match kind {
        Kind::Associative | Kind::Leibniz => &BINARY,
        Kind::Triassociative => &TRIASSOCIATIVE,
        Kind::TernaryLeibniz => &TERNARY,
    }
}

/// Position in `layout(kind)` of the tensor with this argument pattern and slot.
pub fn cross_index(kind: Kind, pattern: &[Space], slot: usize) -> Option<usize> {
    layout(kind).iter().position(|c| c.pattern == pattern && c.slot == slot)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    kind: Kind,
    acted: Algebra,
    acting: Algebra,
    cross: Vec<Tensor>,
}

impl Action {
    /// Both algebras must be valid and of the same kind; the cross tensors
    /// must follow [`layout`] with matching dimensions.
    pub fn new(acted: Algebra, acting: Algebra, cross: Vec<Tensor>) -> Result<Self> {
        expect_same_kind(&acted, &acting)?;
        for alg in [&acted, &acting] {
            let report = check_structure(alg);
            if !report.is_empty() {
                return Err(Error::InvalidAlgebra(report));
            }
        }
        let kind = acted.kind();
        let lay = layout(kind);
        if cross.len() != lay.len() {
            return Err(Error::Invalid(format!(
                "{kind} actions carry {} cross tensors, got {}",
                lay.len(),
                cross.len()
            )));
        }
        for (c, t) in lay.iter().zip(&cross) {
            let dims = Self::dims_for(acted.dim(), acting.dim(), c.pattern);
            if t.in_dims() != dims.as_slice() || t.out_dim() != acted.dim() {
                return Err(Error::Invalid(format!(
                    "cross tensor {} has shape {:?} -> {}, expected {:?} -> {}",
                    c.name,
                    t.in_dims(),
                    t.out_dim(),
                    dims,
                    acted.dim()
                )));
            }
        }
        Ok(Action {
            kind,
            acted,
            acting,
            cross,
        })
    }

    fn dims_for(acted: usize, acting: usize, pattern: &[Space]) -> Vec<usize> {
        pattern
            .iter()
            .map(|s| match s {
                Space::Acted => acted,
                Space::Acting => acting,
            })
            .collect()
    }

    /// All cross tensors zero.
    pub fn trivial(acted: Algebra, acting: Algebra) -> Result<Self> {
        let cross = layout(acted.kind())
            .iter()
            .map(|c| Tensor::zero(Self::dims_for(acted.dim(), acting.dim(), c.pattern), acted.dim()))
            .collect();
        Action::new(acted, acting, cross)
    }

    /// An algebra acting on one of its ideals through its own products.
    /// Returns the action and the inclusion of the ideal.
    pub fn on_ideal(a: &Algebra, i: &Subspace) -> Result<(Self, Matrix)> {
        let side = Side::full_for(a.kind());
        if !ideal_check(i, a, side)? {
            return Err(Error::NotAnIdeal { side: side.to_string() });
        }
        let (acted, inclusion) = restrict(a, i)?;
        let members = i.basis_vectors();
        let e = basis(a.dim());
        let cross = layout(a.kind())
            .iter()
            .map(|c| {
                let dims = Self::dims_for(acted.dim(), a.dim(), c.pattern);
                Tensor::from_fn(dims, acted.dim(), |w| {
                    let args: Vec<&[Scalar]> = w
                        .iter()
                        .zip(c.pattern)
                        .map(|(&k, s)| match s {
                            Space::Acted => members[k].as_slice(),
                            Space::Acting => e[k].as_slice(),
                        })
                        .collect();
                    i.coordinates(&a.apply_slot(c.slot, &args))
                        .expect("ambient length")
                        .expect("ideal is closed")
                })
            })
            .collect();
        Ok((Action::new(acted, a.clone(), cross)?, inclusion))
    }

    /// An algebra acting on itself through its own products.
    pub fn self_action(a: &Algebra) -> Result<Self> {
        Ok(Self::on_ideal(a, &Subspace::full(a.dim()))?.0)
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn acted(&self) -> &Algebra {
        &self.acted
    }

    pub fn acting(&self) -> &Algebra {
        &self.acting
    }

    pub fn cross(&self) -> &[Tensor] {
        &self.cross
    }

    pub fn layout(&self) -> &'static [CrossSlot] {
        layout(self.kind)
    }

    pub fn cross_by_name(&self, name: &str) -> Option<&Tensor> {
        self.layout().iter().position(|c| c.name == name).map(|i| &self.cross[i])
    }

    /// Evaluates cross tensor `idx` on coordinate vectors.
    pub fn eval(&self, idx: usize, args: &[&[Scalar]]) -> Vector {
        self.cross[idx].apply(args)
    }

    /// Index dimensions of each argument of cross tensor `idx`.
    pub fn dims(&self, idx: usize) -> Vec<usize> {
        Self::dims_for(self.acted.dim(), self.acting.dim(), self.layout()[idx].pattern)
    }

    /// Replaces one cross tensor, keeping the shape checks.
    pub fn with_cross(mut self, idx: usize, t: Tensor) -> Result<Self> {
        if t.in_dims() != self.cross[idx].in_dims() || t.out_dim() != self.cross[idx].out_dim() {
            return Err(Error::Invalid("replacement cross tensor has the wrong shape".into()));
        }
        self.cross[idx] = t;
        Ok(self)
    }
}

/// Structure on `acted ⊕ acting` (acted coordinates first): pure products
/// come from each summand, mixed ones from the cross tensors and land in the
/// acted summand.
pub fn semidirect(act: &Action) -> Algebra {
    let (na, np) = (act.acted.dim(), act.acting.dim());
    let dim = na + np;
    let kind = act.kind;
    let arity = kind.arity();
    let products = (0..kind.slots().len())
        .map(|s| {
            let mut t = Tensor::square(arity, dim);
            for w in crate::tensor::tuples(&vec![dim; arity]) {
                let pattern: Vec<Space> = w.iter().map(|&i| if i < na { Space::Acted } else { Space::Acting }).collect();
                let local: Vec<usize> = w.iter().map(|&i| if i < na { i } else { i - na }).collect();
                let (image, offset) = if pattern.iter().all(|&p| p == Space::Acted) {
                    (act.acted.products()[s].basis_apply(&local), 0)
                } else if pattern.iter().all(|&p| p == Space::Acting) {
                    (act.acting.products()[s].basis_apply(&local), na)
                } else {
                    let idx = cross_index(kind, &pattern, s).expect("every mixed pattern has a cross tensor");
                    (act.cross[idx].basis_apply(&local), 0)
                };
                for (k, c) in image.into_iter().enumerate() {
                    let mut key = w.clone();
                    key.push(k + offset);
                    t.set(key, c).expect("index in range");
                }
            }
            t
        })
        .collect();
    let mut names: Vec<String> = act.acted.basis().to_vec();
    names.extend(act.acting.basis().iter().cloned());
    let names = if has_duplicates(&names) {
        crate::algebra::default_basis(dim)
    } else {
        names
    };
    Algebra::new(kind, dim, products)
        .expect("block shapes are consistent")
        .with_basis(names)
        .expect("basis length")
}

fn has_duplicates(names: &[String]) -> bool {
    let mut sorted: Vec<&String> = names.iter().collect();
    sorted.sort();
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// Violations of the semidirect structure at witnesses mixing both summands.
/// Empty exactly when the cross tensors form an action.
pub fn check_action(act: &Action) -> ViolationReport {
    let na = act.acted.dim();
    check_structure(&semidirect(act)).filter(|v| v.witness.iter().any(|&i| i < na) && v.witness.iter().any(|&i| i >= na))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::{int, unit_vector};
    use crate::structure::direct_sum;

    fn e1_ideal() -> Subspace {
        Subspace::span(2, &[unit_vector(2, 0)]).unwrap()
    }

    #[test]
    fn trivial_action_gives_direct_sum() {
        for (a, b) in [
            (fixtures::tri2(), fixtures::tri2()),
            (fixtures::leibniz3(), Algebra::zero(Kind::Leibniz, 1)),
            (fixtures::ternary2(), fixtures::ternary2()),
        ] {
            let act = Action::trivial(a.clone(), b.clone()).unwrap();
            assert!(semidirect(&act).same_structure(&direct_sum(&a, &b).unwrap()));
            assert!(check_action(&act).is_empty());
        }
    }

    #[test]
    fn tri2_on_ideal() {
        let (act, incl) = Action::on_ideal(&fixtures::tri2(), &e1_ideal()).unwrap();
        assert_eq!(incl, Matrix::from_i64(&[&[1], &[0]]));
        let s = semidirect(&act);
        assert_eq!(s.dim(), 3);
        assert!(check_structure(&s).is_empty());
        assert!(check_action(&act).is_empty());
    }

    #[test]
    fn corrupted_action_reports_mixed_witness() {
        let (act, _) = Action::on_ideal(&fixtures::tri2(), &e1_ideal()).unwrap();
        let idx = act.layout().iter().position(|c| c.name == "μ2_left").unwrap();
        let mut t = act.cross()[idx].clone();
        // e2 ⊣ e1 = 0, so μ2_left(e2, e1) should vanish
        assert_eq!(t.get(&[1, 0, 0]), int(0));
        t.set(vec![1, 0, 0], int(1)).unwrap();
        let bad = act.with_cross(idx, t).unwrap();
        let report = check_action(&bad);
        assert!(!report.is_empty());
        for v in report.violations() {
            assert!(v.witness.iter().any(|&i| i == 0) && v.witness.iter().any(|&i| i > 0));
        }
    }

    #[test]
    fn ternary_acting_on_zero() {
        let t = fixtures::ternary2();
        let act = Action::trivial(Algebra::zero(Kind::TernaryLeibniz, 0), t.clone()).unwrap();
        assert!(semidirect(&act).same_structure(&t));
    }

    #[test]
    fn self_actions_are_valid() {
        for a in [fixtures::tri2(), fixtures::leibniz3(), fixtures::ternary2(), fixtures::assoc2()] {
            assert!(check_action(&Action::self_action(&a).unwrap()).is_empty());
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        let t = fixtures::tri2();
        assert!(Action::new(t.clone(), t.clone(), vec![]).is_err());
        assert!(Action::new(t, fixtures::leibniz3(), vec![]).is_err());
        assert!(Action::on_ideal(&fixtures::tri2(), &Subspace::span(2, &[unit_vector(2, 1)]).unwrap()).is_err());
    }
}
