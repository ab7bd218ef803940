//! Shared oracles and input generators for the integration and acceptance suites.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trialab::action::{check_action, Action};
use trialab::linalg::{int, Matrix, Subspace};
use trialab::operators::{check_operator, derive_from_operator};
use trialab::structure::{check_morphism, check_structure, direct_sum};
use trialab::tensor::Tensor;
use trialab::{fixtures, Algebra, Error, Kind, OperatorKind};

/// Dense structure constants: `c[s][((i * n + j) * n + k) * n + out]` (ternary) or `c[s][(i * n + j) * n + out]`.
pub struct Dense {
    pub kind: Kind,
    pub n: usize,
    pub c: Vec<Vec<i64>>,
}

pub type Vec64 = Vec<i64>;

impl Dense {
    pub fn random(kind: Kind, n: usize, density: f64, rng: &mut ChaCha8Rng) -> Dense {
        let slots = if kind == Kind::Triassociative { 3 } else { 1 };
        let len = n.pow(kind.arity() as u32 + 1);
        let c = (0..slots)
            .map(|_| {
                (0..len)
                    .map(|_| if rng.gen_bool(density) { [-1, 1][rng.gen_range(0..2)] } else { 0 })
                    .collect()
            })
            .collect();
        Dense { kind, n, c }
    }

    pub fn from_algebra(a: &Algebra) -> Dense {
        let n = a.dim();
        let c = a
            .products()
            .iter()
            .map(|t| {
                let mut d = vec![0; n.pow(a.kind().arity() as u32 + 1)];
                for (k, v) in t.entries() {
                    let flat = k.iter().fold(0, |acc, &i| acc * n + i);
                    d[flat] = v.to_string().parse().unwrap();
                }
                d
            })
            .collect();
        Dense { kind: a.kind(), n, c }
    }

    pub fn to_algebra(&self) -> Algebra {
        let n = self.n;
        let arity = self.kind.arity();
        let tensors = self
            .c
            .iter()
            .map(|d| {
                let mut entries = Vec::new();
                for (flat, &v) in d.iter().enumerate() {
                    if v != 0 {
                        let mut key = vec![0; arity + 1];
                        let mut r = flat;
                        for slot in key.iter_mut().rev() {
                            *slot = r % n;
                            r /= n;
                        }
                        entries.push((key, int(v)));
                    }
                }
                Tensor::from_entries(vec![n; arity], n, entries).unwrap()
            })
            .collect();
        Algebra::new(self.kind, n, tensors).unwrap()
    }

    pub fn mul(&self, s: usize, x: &[i64], y: &[i64]) -> Vec64 {
        let n = self.n;
        let mut out = vec![0; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    out[k] += x[i] * y[j] * self.c[s][(i * n + j) * n + k];
                }
            }
        }
        out
    }

    pub fn br3(&self, x: &[i64], y: &[i64], z: &[i64]) -> Vec64 {
        let n = self.n;
        let mut out = vec![0; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        out[l] += x[i] * y[j] * z[k] * self.c[0][((i * n + j) * n + k) * n + l];
                    }
                }
            }
        }
        out
    }

    pub fn unit(&self, i: usize) -> Vec64 {
        let mut v = vec![0; self.n];
        v[i] = 1;
        v
    }

    /// Every `(axiom, witness, lhs - rhs)` with a nonzero difference.
    pub fn violations(&self) -> Vec<(String, Vec<usize>, Vec64)> {
        let n = self.n;
        let mut out = Vec::new();
        let diff = |a: Vec64, b: Vec64| a.iter().zip(&b).map(|(p, q)| p - q).collect::<Vec64>();
        let mut push = |id: String, w: Vec<usize>, d: Vec64| {
            if d.iter().any(|&x| x != 0) {
                out.push((id, w, d));
            }
        };
        match self.kind {
            Kind::TernaryLeibniz => {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            for t in 0..n {
                                for u in 0..n {
                                    let (ex, ey, ez, et, eu) = (self.unit(x), self.unit(y), self.unit(z), self.unit(t), self.unit(u));
                                    let lhs = self.br3(&self.br3(&ex, &ey, &ez), &et, &eu);
                                    let r1 = self.br3(&ex, &ey, &self.br3(&ez, &et, &eu));
                                    let r2 = self.br3(&ex, &self.br3(&ey, &et, &eu), &ez);
                                    let r3 = self.br3(&self.br3(&ex, &et, &eu), &ey, &ez);
                                    push("ternary-leibniz".into(), vec![x, y, z, t, u], diff(diff(diff(lhs, r1), r2), r3));
                                }
                            }
                        }
                    }
                }
            }
            kind => {
                for x in 0..n {
                    for y in 0..n {
                        for z in 0..n {
                            let (ex, ey, ez) = (self.unit(x), self.unit(y), self.unit(z));
                            let w = vec![x, y, z];
                            match kind {
                                Kind::Associative => push(
                                    "assoc".into(),
                                    w,
                                    diff(self.mul(0, &self.mul(0, &ex, &ey), &ez), self.mul(0, &ex, &self.mul(0, &ey, &ez))),
                                ),
                                Kind::Leibniz => {
                                    let lhs = self.mul(0, &self.mul(0, &ex, &ey), &ez);
                                    let r1 = self.mul(0, &ex, &self.mul(0, &ey, &ez));
                                    let r2 = self.mul(0, &self.mul(0, &ex, &ez), &ey);
                                    push("leibniz".into(), w, diff(diff(lhs, r1), r2));
                                }
                                Kind::Triassociative => {
                                    // (x a y) b z = x c (y d z), with 0 = left, 1 = middle, 2 = right
                                    const AXIOMS: [(usize, usize, usize, usize); 11] = [
                                        (0, 0, 0, 0),
                                        (2, 2, 2, 2),
                                        (1, 1, 1, 1),
                                        (0, 0, 0, 2),
                                        (0, 0, 0, 1),
                                        (2, 0, 2, 0),
                                        (0, 2, 2, 2),
                                        (1, 2, 2, 2),
                                        (1, 0, 1, 0),
                                        (0, 1, 1, 2),
                                        (2, 1, 2, 1),
                                    ];
                                    for (k, &(a, b, c, d)) in AXIOMS.iter().enumerate() {
                                        let lhs = self.mul(b, &self.mul(a, &ex, &ey), &ez);
                                        let rhs = self.mul(c, &ex, &self.mul(d, &ey, &ez));
                                        push(format!("tri-({})", k + 1), w.clone(), diff(lhs, rhs));
                                    }
                                }
                                Kind::TernaryLeibniz => unreachable!(),
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }
}

pub fn checker_violations(a: &Algebra) -> Vec<(String, Vec<usize>, Vec64)> {
    let mut out: Vec<_> = trialab::structure::check_structure(a)
        .violations()
        .iter()
        .map(|v| {
            let d = v.discrepancy.iter().map(|c| c.to_string().parse().unwrap()).collect();
            (v.axiom.clone(), v.witness.clone(), d)
        })
        .collect();
    out.sort();
    out
}

/// Verdict disagreements and full-report mismatches against the oracle.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Agreement {
    pub verdict_disagreements: usize,
    pub report_mismatches: usize,
    pub valid: usize,
}

pub fn compare(instances: &[Dense]) -> Agreement {
    let mut out = Agreement::default();
    for d in instances {
        let expected = d.violations();
        let got = checker_violations(&d.to_algebra());
        out.verdict_disagreements += usize::from(expected.is_empty() != got.is_empty());
        out.report_mismatches += usize::from(expected != got);
        out.valid += usize::from(expected.is_empty());
    }
    out
}

pub fn random_suite(binary: bool, seed: u64) -> Vec<Dense> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let densities = [0.05, 0.1, 0.2, 0.5];
    (0..50)
        .map(|k| {
            let n = 1 + k % 3;
            let kind = if binary {
                [Kind::Associative, Kind::Leibniz, Kind::Triassociative][(k / 3) % 3]
            } else {
                Kind::TernaryLeibniz
            };
            Dense::random(kind, n, densities[k % 4], &mut rng)
        })
        .collect()
}


pub fn small_algebras() -> Vec<Algebra> {
    let mut out = fixtures::associative_catalog();
    out.extend(fixtures::triassociative_catalog());
    out.extend(fixtures::leibniz_dim2_catalog());
    out.extend(fixtures::ternary_dim2_catalog());
    out.push(fixtures::ternary2());
    out
}

/// Operator families to search on an algebra of `kind`; weights -1, 0, 1.
pub fn operator_kinds(kind: Kind) -> Vec<OperatorKind> {
    let mut out: Vec<OperatorKind> = [-1, 0, 1].into_iter().map(|w| OperatorKind::RotaBaxter(int(w))).collect();
    out.push(OperatorKind::Nijenhuis);
    if kind.is_binary() {
        out.push(OperatorKind::Reynolds);
        out.push(OperatorKind::Centroid);
        if kind != Kind::Leibniz {
            out.push(OperatorKind::Averaging);
        }
    }
    out
}

/// `Ok(None)` when the derived algebra is valid, `m` is a morphism from it to
/// `a`, and `m` is again an operator of the same kind on it. `Err` when the
/// construction refuses the operator.
pub fn derived_failures(a: &Algebra, m: &Matrix, kind: &OperatorKind) -> Result<Option<String>, Error> {
    let derived = derive_from_operator(a, m, kind)?;
    let mut problems = Vec::new();
    if !check_structure(&derived).is_empty() {
        problems.push("derived structure");
    }
    if !check_morphism(m, &derived, a).unwrap().is_empty() {
        problems.push("morphism derived -> original");
    }
    if !check_operator(&derived, m, kind).unwrap().is_empty() {
        problems.push("operator on derived");
    }
    Ok((!problems.is_empty()).then(|| problems.join(", ")))
}

/// A random product of elementary matrices `I + c E_ij` and its inverse.
pub fn unimodular(n: usize, steps: usize, rng: &mut ChaCha8Rng) -> (Matrix, Matrix) {
    let (mut p, mut inv) = (Matrix::identity(n), Matrix::identity(n));
    if n < 2 {
        return (p, inv);
    }
    for _ in 0..steps {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i == j {
            continue;
        }
        let c = [-1, 1][rng.gen_range(0..2)];
        let (mut e, mut e_inv) = (Matrix::identity(n), Matrix::identity(n));
        e.set(i, j, int(c));
        e_inv.set(i, j, int(-c));
        p = p.compose(&e).unwrap();
        inv = e_inv.compose(&inv).unwrap();
    }
    (p, inv)
}

/// The structure transported along `x -> P x`: `μ'(x, ..) = P⁻¹ μ(P x, ..)`.
pub fn transport(a: &Algebra, p: &Matrix, p_inv: &Matrix) -> Algebra {
    let n = a.dim();
    let tensors = a
        .products()
        .iter()
        .map(|t| {
            Tensor::from_fn(t.in_dims().to_vec(), n, |w| {
                let cols: Vec<_> = w.iter().map(|&i| p.column(i)).collect();
                let args: Vec<&[_]> = cols.iter().map(Vec::as_slice).collect();
                p_inv.apply(&t.apply(&args))
            })
        })
        .collect();
    Algebra::new(a.kind(), n, tensors).unwrap()
}

/// Valid algebras of `kind` and dimension at most 3: sparse random tensors
/// that pass the checker, and direct sums of those moved by a random
/// change of basis.
pub fn random_valid(kind: Kind, count: usize, seed: u64) -> Vec<Algebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out: Vec<Algebra> = Vec::new();
    for attempt in 0..4000 {
        if out.len() >= count / 2 {
            break;
        }
        let n = 1 + attempt % 3;
        let d = Dense::random(kind, n, [0.3, 0.1, 0.03][n - 1], &mut rng);
        if d.c.iter().all(|t| t.iter().all(|&x| x == 0)) {
            continue;
        }
        let a = d.to_algebra();
        if check_structure(&a).is_empty() && !out.contains(&a) {
            out.push(a);
        }
    }
    let small: Vec<Algebra> = out.iter().filter(|a| a.dim() <= 2).cloned().collect();
    let mut k = 0;
    while out.len() < count && !small.is_empty() && k < 10 * count {
        k += 1;
        let x = &small[rng.gen_range(0..small.len())];
        let y = &small[rng.gen_range(0..small.len())];
        if x.dim() + y.dim() > 3 {
            continue;
        }
        let s = direct_sum(x, y).unwrap();
        let (p, p_inv) = unimodular(s.dim(), 4, &mut rng);
        out.push(transport(&s, &p, &p_inv));
    }
    out
}

/// Valid triassociative actions with `dim(acted) + dim(acting) <= 4`: trivial
/// and self actions, actions on ideals of direct sums, and every action whose
/// cross tensors have a single nonzero entry in `{-1, 1}` (plus sums of two
/// such actions that stay valid), for catalog pairs where one side has dimension 1.
pub fn grid_actions() -> Vec<Action> {
    let cat: Vec<Algebra> = fixtures::triassociative_catalog();
    let mut out = Vec::new();
    for a in &cat {
        for b in &cat {
            if a.dim() + b.dim() <= 4 {
                out.push(Action::trivial(a.clone(), b.clone()).unwrap());
            }
        }
        out.push(Action::self_action(a).unwrap());
    }
    for a in cat.iter().filter(|a| a.dim() == 1) {
        for b in cat.iter().filter(|b| b.dim() <= 2) {
            let s = direct_sum(a, b).unwrap();
            let n = s.dim();
            let first = Subspace::span(n, &[trialab::linalg::unit_vector(n, 0)]).unwrap();
            if let Ok((act, _)) = Action::on_ideal(&s, &first) {
                out.push(act);
            }
        }
    }
    for acted in &cat {
        for acting in &cat {
            if acted.dim().min(acting.dim()) != 1 {
                continue;
            }
            let base = Action::trivial(acted.clone(), acting.clone()).unwrap();
            let mut singles: Vec<Action> = Vec::new();
            for (idx, t) in base.cross().iter().enumerate() {
                let keys: Vec<Vec<usize>> = trialab::tensor::tuples(t.in_dims()).collect();
                for key in keys {
                    for out_i in 0..acted.dim() {
                        for c in [-1, 1] {
                            let mut full = key.clone();
                            full.push(out_i);
                            let mut t = t.clone();
                            t.set(full, int(c)).unwrap();
                            let act = base.clone().with_cross(idx, t).unwrap();
                            if check_action(&act).is_empty() {
                                singles.push(act);
                            }
                        }
                    }
                }
            }
            for i in 0..singles.len() {
                for j in i + 1..singles.len() {
                    let cross: Vec<Tensor> = singles[i]
                        .cross()
                        .iter()
                        .zip(singles[j].cross())
                        .map(|(x, y)| x.add_scaled(&int(1), y).unwrap())
                        .collect();
                    let act = Action::new(acted.clone(), acting.clone(), cross).unwrap();
                    if check_action(&act).is_empty() {
                        out.push(act);
                    }
                }
            }
            out.extend(singles);
        }
    }
    out
}
