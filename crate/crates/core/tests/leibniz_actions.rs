//! `check_action` on Leibniz actions against the six explicit action equations.

use trialab::action::{check_action, Action};
use trialab::linalg::{int, sub, unit_vector, Scalar, Vector};
use trialab::tensor::tuples;
use trialab::{fixtures, Algebra, Kind};

fn add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Whether all six equations hold on basis elements, with
/// `μ1 : L × P -> L` and `μ2 : P × L -> L`.
fn equations_hold(act: &Action) -> bool {
    let (l, p) = (act.acted(), act.acting());
    let (nl, np) = (l.dim(), p.dim());
    let el: Vec<Vector> = (0..nl).map(|i| unit_vector(nl, i)).collect();
    let ep: Vec<Vector> = (0..np).map(|i| unit_vector(np, i)).collect();
    let bl = |x: &[Scalar], y: &[Scalar]| l.mul(0, x, y);
    let bp = |x: &[Scalar], y: &[Scalar]| p.mul(0, x, y);
    let mu1 = |x: &[Scalar], q: &[Scalar]| act.eval(0, &[x, q]);
    let mu2 = |q: &[Scalar], x: &[Scalar]| act.eval(1, &[q, x]);
    let zero = |v: Vector| v.iter().all(|c| *c == int(0));
    // (l1, l2, p)
    for w in tuples(&[nl, nl, np]) {
        let (l1, l2, q) = (&el[w[0]], &el[w[1]], &ep[w[2]]);
        if !zero(sub(&mu1(&bl(l1, l2), q), &add(&bl(l1, &mu1(l2, q)), &bl(&mu1(l1, q), l2)))) {
            return false;
        }
    }
    // (l1, p, l2)
    for w in tuples(&[nl, np, nl]) {
        let (l1, q, l2) = (&el[w[0]], &ep[w[1]], &el[w[2]]);
        if !zero(sub(&bl(&mu1(l1, q), l2), &add(&bl(l1, &mu2(q, l2)), &mu1(&bl(l1, l2), q)))) {
            return false;
        }
    }
    // (p, l1, l2)
    for w in tuples(&[np, nl, nl]) {
        let (q, l1, l2) = (&ep[w[0]], &el[w[1]], &el[w[2]]);
        if !zero(sub(&bl(&mu2(q, l1), l2), &add(&mu2(q, &bl(l1, l2)), &bl(&mu2(q, l2), l1)))) {
            return false;
        }
    }
    // (p1, p2, l)
    for w in tuples(&[np, np, nl]) {
        let (p1, p2, x) = (&ep[w[0]], &ep[w[1]], &el[w[2]]);
        if !zero(sub(&mu2(&bp(p1, p2), x), &add(&mu2(p1, &mu2(p2, x)), &mu1(&mu2(p1, x), p2)))) {
            return false;
        }
    }
    // (p1, l, p2)
    for w in tuples(&[np, nl, np]) {
        let (p1, x, p2) = (&ep[w[0]], &el[w[1]], &ep[w[2]]);
        if !zero(sub(&mu1(&mu2(p1, x), p2), &add(&mu2(p1, &mu1(x, p2)), &mu2(&bp(p1, p2), x)))) {
            return false;
        }
    }
    // (l, p1, p2)
    for w in tuples(&[nl, np, np]) {
        let (x, p1, p2) = (&el[w[0]], &ep[w[1]], &ep[w[2]]);
        if !zero(sub(&mu1(&mu1(x, p1), p2), &add(&mu1(x, &bp(p1, p2)), &mu1(&mu1(x, p2), p1)))) {
            return false;
        }
    }
    true
}

/// Every action whose two cross tensors together carry one entry in `{-1, 1}`.
fn single_entry_actions(l: &Algebra, p: &Algebra) -> Vec<Action> {
    let base = Action::trivial(l.clone(), p.clone()).unwrap();
    let mut out = Vec::new();
    for (idx, t) in base.cross().iter().enumerate() {
        for key in tuples(t.in_dims()) {
            for o in 0..l.dim() {
                for c in [-1, 1] {
                    let mut t = t.clone();
                    let mut full = key.clone();
                    full.push(o);
                    t.set(full, int(c)).unwrap();
                    out.push(base.clone().with_cross(idx, t).unwrap());
                }
            }
        }
    }
    out
}

#[test]
fn checker_matches_explicit_equations() {
    let mut algebras = fixtures::leibniz_dim2_catalog();
    algebras.push(Algebra::zero(Kind::Leibniz, 1));
    let (mut valid, mut total) = (0, 0);
    for l in &algebras {
        for p in &algebras {
            for act in single_entry_actions(l, p) {
                let expected = equations_hold(&act);
                assert_eq!(check_action(&act).is_empty(), expected, "{act:?}");
                total += 1;
                valid += usize::from(expected);
            }
        }
    }
    assert!(valid > 0 && valid < total, "{valid} of {total}");
}

#[test]
fn ideal_and_self_actions_satisfy_equations() {
    let l = fixtures::leibniz3();
    let i = trialab::Subspace::span(3, &[unit_vector(3, 0), unit_vector(3, 1)]).unwrap();
    let (act, _) = Action::on_ideal(&l, &i).unwrap();
    assert!(equations_hold(&act) && check_action(&act).is_empty());
    let act = Action::self_action(&l).unwrap();
    assert!(equations_hold(&act) && check_action(&act).is_empty());
}
