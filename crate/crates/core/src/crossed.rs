//! Crossed modules, their morphisms, and the constructions that induce or
//! twist them.
//!
//! Conditions are checked in one form for every kind. Equivariance asks
//! `φ(c(..)) = product(..)` with `φ` applied to the acted arguments of the
//! cross tensor `c`. The Peiffer condition substitutes `φ(l)` for one acting
//! argument and compares with the tensor that takes `l` in that position:
//! another cross tensor, or the acted algebra's own product.

use crate::action::{check_action, cross_index, layout, semidirect, Action, Space};
use crate::algebra::{Algebra, Kind};
use crate::error::{Error, Result};
use crate::functors::{t_from_leibniz, t_from_triassoc, Variant};
use crate::linalg::{add, axpy, image, int, is_zero_vector, kernel, sub, Matrix, Scalar, Subspace, Vector};
use crate::operators::{check_operator, derive_from_operator, OperatorKind};
use crate::report::ViolationReport;
use crate::structure::{annihilator, basis, check_morphism, expect_map_shape, ideal_check, run_identities, Side};
use crate::tensor::{tuples, Tensor};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedModule {
    action: Action,
    phi: Matrix,
}

impl CrossedModule {
    /// `phi` maps the acted algebra to the acting one.
    pub fn new(action: Action, phi: Matrix) -> Result<Self> {
        expect_map_shape(&phi, action.acted().dim(), action.acting().dim())?;
        Ok(CrossedModule { action, phi })
    }

    pub fn action(&self) -> &Action {
        &self.action
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn kind(&self) -> Kind {
        self.action.kind()
    }

    pub fn acted(&self) -> &Algebra {
        self.action.acted()
    }

    pub fn acting(&self) -> &Algebra {
        self.action.acting()
    }
}

fn columns(m: &Matrix) -> Vec<Vector> {
    (0..m.cols()).map(|j| m.column(j)).collect()
}

/// Arguments of a cross tensor at basis indices `w`; acted arguments are
/// taken from `acted` and acting ones from `acting`.
fn pick<'a>(w: &[usize], pattern: &[Space], acted: &'a [Vector], acting: &'a [Vector]) -> Vec<&'a [Scalar]> {
    w.iter()
        .zip(pattern)
        .map(|(&k, s)| match s {
            Space::Acted => acted[k].as_slice(),
            Space::Acting => acting[k].as_slice(),
        })
        .collect()
}

/// Crossed-module conditions without first validating the action.
pub fn crossed_module_report(cm: &CrossedModule) -> ViolationReport {
    let act = &cm.action;
    let (na, np) = (act.acted().dim(), act.acting().dim());
    let (ea, ep) = (basis(na), basis(np));
    let phi_cols = columns(&cm.phi);
    let mut reports = vec![check_morphism(&cm.phi, act.acted(), act.acting())
        .expect("shapes checked on construction")
        .prefixed("cm-")];
    for (idx, c) in act.layout().iter().enumerate() {
        let dims = act.dims(idx);
        reports.push(run_identities(&dims, |w| {
            let args = pick(w, c.pattern, &ea, &ep);
            let mapped = pick(w, c.pattern, &phi_cols, &ep);
            let lhs = cm.phi.apply(&act.eval(idx, &args));
            let rhs = act.acting().apply_slot(c.slot, &mapped);
            vec![(format!("cm-equivariance:{}", c.name), sub(&lhs, &rhs))]
        }));
        for pos in (0..c.pattern.len()).filter(|&p| c.pattern[p] == Space::Acting) {
            let mut pattern = c.pattern.to_vec();
            pattern[pos] = Space::Acted;
            let mut pdims = dims.clone();
            pdims[pos] = na;
            let target = cross_index(act.kind(), &pattern, c.slot);
            reports.push(run_identities(&pdims, |w| {
                let mut lhs_args = pick(w, c.pattern, &ea, &ep);
                lhs_args[pos] = phi_cols[w[pos]].as_slice();
                let rhs_args = pick(w, &pattern, &ea, &ep);
                let lhs = act.eval(idx, &lhs_args);
                let rhs = match target {
                    Some(t) => act.eval(t, &rhs_args),
                    None => act.acted().apply_slot(c.slot, &rhs_args),
                };
                vec![(format!("cm-peiffer:{}@{pos}", c.name), sub(&lhs, &rhs))]
            }));
        }
    }
    ViolationReport::merge(reports)
}

/// Checks `φ` is a morphism, equivariance, and the Peiffer conditions.
/// The action itself must be valid.
pub fn check_crossed_module(cm: &CrossedModule) -> Result<ViolationReport> {
    let report = check_action(&cm.action);
    if !report.is_empty() {
        return Err(Error::InvalidAction(report));
    }
    Ok(crossed_module_report(cm))
}

fn require_crossed_module(cm: &CrossedModule) -> Result<()> {
    let report = check_crossed_module(cm)?;
    if !report.is_empty() {
        return Err(Error::InvalidCrossedModule(report));
    }
    Ok(())
}

/// Checks that `(alpha, beta)` is a morphism of crossed modules `src -> dst`.
pub fn check_crossed_morphism(
    alpha: &Matrix,
    beta: &Matrix,
    src: &CrossedModule,
    dst: &CrossedModule,
) -> Result<ViolationReport> {
    if src.kind() != dst.kind() {
        return Err(Error::KindMismatch {
            expected: src.kind(),
            found: dst.kind(),
        });
    }
    let (na, np) = (src.acted().dim(), src.acting().dim());
    expect_map_shape(alpha, na, dst.acted().dim())?;
    expect_map_shape(beta, np, dst.acting().dim())?;
    let mut reports = vec![
        check_morphism(alpha, src.acted(), dst.acted())?.prefixed("xm-alpha:"),
        check_morphism(beta, src.acting(), dst.acting())?.prefixed("xm-beta:"),
    ];
    let square_l = dst.phi.compose(alpha)?;
    let square_r = beta.compose(&src.phi)?;
    reports.push(run_identities(&[na], |w| {
        vec![("xm-square".to_string(), sub(&square_l.column(w[0]), &square_r.column(w[0])))]
    }));
    let (ea, ep) = (basis(na), basis(np));
    let (alpha_cols, beta_cols) = (columns(alpha), columns(beta));
    for (idx, c) in src.action.layout().iter().enumerate() {
        reports.push(run_identities(&src.action.dims(idx), |w| {
            let lhs = alpha.apply(&src.action.eval(idx, &pick(w, c.pattern, &ea, &ep)));
            let rhs = dst.action.eval(idx, &pick(w, c.pattern, &alpha_cols, &beta_cols));
            vec![(format!("xm-cross:{}", c.name), sub(&lhs, &rhs))]
        }));
    }
    Ok(ViolationReport::merge(reports))
}

/// The inclusion of an ideal, with the ambient algebra acting by its products.
pub fn crossed_from_ideal(a: &Algebra, i: &Subspace) -> Result<CrossedModule> {
    let (action, inclusion) = Action::on_ideal(a, i)?;
    CrossedModule::new(action, inclusion)
}

/// Identity map of an algebra, acting on itself.
pub fn identity_crossed_module(a: &Algebra) -> Result<CrossedModule> {
    crossed_from_ideal(a, &Subspace::full(a.dim()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossedModuleProperties {
    pub ker_in_ann: bool,
    pub image_is_ideal: bool,
    pub image_acts_trivially_on_ann: bool,
}

impl CrossedModuleProperties {
    pub fn all(&self) -> bool {
        self.ker_in_ann && self.image_is_ideal && self.image_acts_trivially_on_ann
    }
}

/// Structural consequences every crossed module should satisfy.
pub fn crossed_module_properties(cm: &CrossedModule) -> Result<CrossedModuleProperties> {
    require_crossed_module(cm)?;
    let act = &cm.action;
    let ann = annihilator(act.acted());
    let im = image(&cm.phi);
    let ker_in_ann = ann.contains_subspace(&kernel(&cm.phi))?;
    let image_is_ideal = ideal_check(&im, act.acting(), Side::full_for(cm.kind()))?;

    // Acting arguments from Im φ, one acted argument from Ann, the rest arbitrary.
    let na = act.acted().dim();
    let ea = basis(na);
    let ann_vs = ann.basis_vectors();
    let im_vs = im.basis_vectors();
    let mut trivial = true;
    'outer: for (idx, c) in act.layout().iter().enumerate() {
        for pos in (0..c.pattern.len()).filter(|&p| c.pattern[p] == Space::Acted) {
            let dims: Vec<usize> = c
                .pattern
                .iter()
                .enumerate()
                .map(|(k, s)| match s {
                    _ if k == pos => ann_vs.len(),
                    Space::Acted => na,
                    Space::Acting => im_vs.len(),
                })
                .collect();
            for w in tuples(&dims) {
                let mut args = pick(&w, c.pattern, &ea, &im_vs);
                args[pos] = ann_vs[w[pos]].as_slice();
                if !is_zero_vector(&act.eval(idx, &args)) {
                    trivial = false;
                    break 'outer;
                }
            }
        }
    }
    Ok(CrossedModuleProperties {
        ker_in_ann,
        image_is_ideal,
        image_acts_trivially_on_ann: trivial,
    })
}

/// `(x, a) -> (-x, φ(x) + a)` on the semidirect sum.
pub fn shift_map(cm: &CrossedModule) -> Matrix {
    let (na, np) = (cm.acted().dim(), cm.acting().dim());
    let mut m = Matrix::zeros(na + np, na + np);
    for i in 0..na {
        m.set(i, i, int(-1));
    }
    for i in 0..np {
        m.set(na + i, na + i, int(1));
    }
    for (r, c, v) in cm.phi.nonzero_entries() {
        m.set(na + r, c, v.clone());
    }
    m
}

/// Morphism report of [`shift_map`] on the semidirect product, with no preconditions.
pub fn shift_morphism_report(cm: &CrossedModule) -> ViolationReport {
    let s = semidirect(&cm.action);
    check_morphism(&shift_map(cm), &s, &s).expect("square map on one algebra")
}

/// [`shift_morphism_report`] for a valid triassociative crossed module.
pub fn shift_morphism_check(cm: &CrossedModule) -> Result<ViolationReport> {
    cm.acted().expect_kind(Kind::Triassociative)?;
    require_crossed_module(cm)?;
    Ok(shift_morphism_report(cm))
}

fn eval2(act: &Action, idx: usize, x: &[Scalar], y: &[Scalar]) -> Vector {
    act.eval(idx, &[x, y])
}

/// Cross tensors of the ternary action induced by a triassociative action.
pub fn induced_tensors_from_triassoc(act: &Action) -> Result<Vec<Tensor>> {
    act.acted().expect_kind(Kind::Triassociative)?;
    let (a, b) = (act.acted(), act.acting());
    let (ea, eb) = (basis(a.dim()), basis(b.dim()));
    // μ1 in slots 0..3, μ2 in slots 3..6
    let mu1 = |s: usize, x: &[Scalar], y: &[Scalar]| eval2(act, s, x, y);
    let mu2 = |s: usize, x: &[Scalar], y: &[Scalar]| eval2(act, 3 + s, x, y);
    let (left, mid, right) = (0, 1, 2);
    let build = |idx: usize, f: &dyn Fn(&[&[Scalar]]) -> Vector| {
        let pattern = layout(Kind::TernaryLeibniz)[idx].pattern;
        let dims: Vec<usize> = pattern
            .iter()
            .map(|s| if *s == Space::Acted { a.dim() } else { b.dim() })
            .collect();
        Tensor::from_fn(dims, a.dim(), |w| f(&pick(w, pattern, &ea, &eb)))
    };
    Ok(vec![
        build(0, &|v| {
            let c = sub(&b.mul(mid, v[1], v[2]), &b.mul(mid, v[2], v[1]));
            sub(&mu1(left, v[0], &c), &mu2(right, &c, v[0]))
        }),
        build(1, &|v| {
            let c = sub(&mu1(mid, v[1], v[2]), &mu2(mid, v[2], v[1]));
            sub(&mu2(left, v[0], &c), &mu1(right, &c, v[0]))
        }),
        build(2, &|v| {
            let c = sub(&mu2(mid, v[1], v[2]), &mu1(mid, v[2], v[1]));
            sub(&mu2(left, v[0], &c), &mu1(right, &c, v[0]))
        }),
        build(3, &|v| {
            let w = sub(&a.mul(mid, v[1], v[2]), &a.mul(mid, v[2], v[1]));
            sub(&mu2(left, v[0], &w), &mu1(right, &w, v[0]))
        }),
        build(4, &|v| {
            let w = sub(&mu2(mid, v[1], v[2]), &mu1(mid, v[2], v[1]));
            sub(&a.mul(left, v[0], &w), &a.mul(right, &w, v[0]))
        }),
        build(5, &|v| {
            let w = sub(&mu1(mid, v[1], v[2]), &mu2(mid, v[2], v[1]));
            sub(&a.mul(left, v[0], &w), &a.mul(right, &w, v[0]))
        }),
    ])
}

/// Cross tensors of the ternary action induced by a Leibniz action.
pub fn induced_tensors_from_leibniz(act: &Action) -> Result<Vec<Tensor>> {
    act.acted().expect_kind(Kind::Leibniz)?;
    let (l, p) = (act.acted(), act.acting());
    let (el, ep) = (basis(l.dim()), basis(p.dim()));
    let mu1 = |x: &[Scalar], y: &[Scalar]| eval2(act, 0, x, y);
    let mu2 = |x: &[Scalar], y: &[Scalar]| eval2(act, 1, x, y);
    let build = |idx: usize, f: &dyn Fn(&[&[Scalar]]) -> Vector| {
        let pattern = layout(Kind::TernaryLeibniz)[idx].pattern;
        let dims: Vec<usize> = pattern
            .iter()
            .map(|s| if *s == Space::Acted { l.dim() } else { p.dim() })
            .collect();
        Tensor::from_fn(dims, l.dim(), |w| f(&pick(w, pattern, &el, &ep)))
    };
    Ok(vec![
        build(0, &|v| mu1(v[0], &p.mul(0, v[1], v[2]))),
        build(1, &|v| mu2(v[0], &mu1(v[1], v[2]))),
        build(2, &|v| mu2(v[0], &mu2(v[1], v[2]))),
        build(3, &|v| mu2(v[0], &l.mul(0, v[1], v[2]))),
        build(4, &|v| l.mul(0, v[0], &mu2(v[1], v[2]))),
        build(5, &|v| l.mul(0, v[0], &mu1(v[1], v[2]))),
    ])
}

fn induced_action_unchecked(act: &Action) -> Result<Action> {
    match act.kind() {
        Kind::Triassociative => Action::new(
            t_from_triassoc(act.acted(), Variant::Main)?,
            t_from_triassoc(act.acting(), Variant::Main)?,
            induced_tensors_from_triassoc(act)?,
        ),
        Kind::Leibniz => Action::new(
            t_from_leibniz(act.acted())?,
            t_from_leibniz(act.acting())?,
            induced_tensors_from_leibniz(act)?,
        ),
        kind => Err(Error::Unsupported {
            what: "inducing a ternary action".into(),
            kind,
        }),
    }
}

/// Ternary action of `T(acting)` on `T(acted)` induced by a valid
/// triassociative or Leibniz action.
pub fn induce_ternary_action(act: &Action) -> Result<Action> {
    let report = check_action(act);
    if !report.is_empty() {
        return Err(Error::InvalidAction(report));
    }
    induced_action_unchecked(act)
}

/// Ternary crossed module induced by a valid triassociative crossed module.
pub fn induce_ternary_cm_from_triassoc(cm: &CrossedModule) -> Result<CrossedModule> {
    cm.acted().expect_kind(Kind::Triassociative)?;
    require_crossed_module(cm)?;
    CrossedModule::new(induced_action_unchecked(&cm.action)?, cm.phi.clone())
}

/// Ternary crossed module induced by a valid Leibniz crossed module.
pub fn induce_ternary_cm_from_leibniz(cm: &CrossedModule) -> Result<CrossedModule> {
    cm.acted().expect_kind(Kind::Leibniz)?;
    require_crossed_module(cm)?;
    CrossedModule::new(induced_action_unchecked(&cm.action)?, cm.phi.clone())
}

fn precondition(name: &str, report: ViolationReport) -> Result<()> {
    if report.is_empty() {
        Ok(())
    } else {
        Err(Error::Precondition {
            name: name.to_string(),
            report,
        })
    }
}

/// Report of `f ∘ g_src = g_dst ∘ f` as maps, one witness per source basis vector.
fn commutes(id: &str, lhs: &Matrix, rhs: &Matrix) -> ViolationReport {
    run_identities(&[lhs.cols()], |w| vec![(id.to_string(), sub(&lhs.column(w[0]), &rhs.column(w[0])))])
}

/// Rota-Baxter twist of a Leibniz crossed module: the crossed module over the
/// derived Leibniz algebras, and the ternary crossed module it induces.
pub fn rb_twist_leibniz_cm(
    cm: &CrossedModule,
    r_acted: &Matrix,
    r_acting: &Matrix,
    weight: &Scalar,
) -> Result<(CrossedModule, CrossedModule)> {
    cm.acted().expect_kind(Kind::Leibniz)?;
    require_crossed_module(cm)?;
    let act = &cm.action;
    let (l, p) = (act.acted(), act.acting());
    let kind = OperatorKind::RotaBaxter(weight.clone());
    precondition("rb:acted", check_operator(l, r_acted, &kind)?)?;
    precondition("rb:acting", check_operator(p, r_acting, &kind)?)?;

    let twisted = rb_twisted_binary_tensors(act, r_acted, r_acting, weight);
    let (el, ep) = (basis(l.dim()), basis(p.dim()));
    precondition(
        "rb-compat:mu1",
        run_identities(&[l.dim(), p.dim()], |w| {
            let (x, y) = (&el[w[0]], &ep[w[1]]);
            let lhs = act.eval(0, &[&r_acted.apply(x), &r_acting.apply(y)]);
            let rhs = r_acted.apply(&twisted[0].apply(&[x, y]));
            vec![("rb-compat:mu1".to_string(), sub(&lhs, &rhs))]
        }),
    )?;
    precondition(
        "rb-compat:mu2",
        run_identities(&[p.dim(), l.dim()], |w| {
            let (y, x) = (&ep[w[0]], &el[w[1]]);
            let lhs = act.eval(1, &[&r_acting.apply(y), &r_acted.apply(x)]);
            let rhs = r_acted.apply(&twisted[1].apply(&[y, x]));
            vec![("rb-compat:mu2".to_string(), sub(&lhs, &rhs))]
        }),
    )?;
    precondition(
        "rb-compat:phi",
        commutes("rb-compat:phi", &cm.phi.compose(r_acted)?, &r_acting.compose(&cm.phi)?),
    )?;

    let action = Action::new(
        derive_from_operator(l, r_acted, &kind)?,
        derive_from_operator(p, r_acting, &kind)?,
        twisted,
    )?;
    let binary = CrossedModule::new(action, cm.phi.clone())?;
    let ternary = induce_ternary_cm_from_leibniz(&binary)?;
    Ok((binary, ternary))
}

/// `μ^R(l, p) = μ(R l, p) + μ(l, R p) + λ μ(l, p)` for both cross tensors of a binary action.
pub fn rb_twisted_binary_tensors(act: &Action, r_acted: &Matrix, r_acting: &Matrix, weight: &Scalar) -> Vec<Tensor> {
    let (ea, ep) = (basis(act.acted().dim()), basis(act.acting().dim()));
    act.layout()
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            Tensor::from_fn(act.dims(idx), act.acted().dim(), |w| {
                let args = pick(w, c.pattern, &ea, &ep);
                let map = |k: usize| if c.pattern[k] == Space::Acted { r_acted } else { r_acting };
                let (x0, x1) = (map(0).apply(args[0]), map(1).apply(args[1]));
                let mut v = add(&act.eval(idx, &[&x0, args[1]]), &act.eval(idx, &[args[0], &x1]));
                axpy(&mut v, weight, &act.eval(idx, &args));
                v
            })
        })
        .collect()
}

/// Averaging twist of a triassociative crossed module: the crossed module
/// between the averaging-derived algebras with
/// `μ1'(x, a) = μ1(β x, a)` and `μ2'(a, x) = μ2(β a, x)`.
pub fn averaging_twist_triassoc_cm(cm: &CrossedModule, beta_acted: &Matrix, beta_acting: &Matrix) -> Result<CrossedModule> {
    cm.acted().expect_kind(Kind::Triassociative)?;
    require_crossed_module(cm)?;
    let act = &cm.action;
    let (a, b) = (act.acted(), act.acting());
    for (beta, dim) in [(beta_acted, a.dim()), (beta_acting, b.dim())] {
        expect_map_shape(beta, dim, dim)?;
        let rank = beta.rank();
        if rank < dim {
            return Err(Error::NotInjective { rank, dim });
        }
    }
    precondition("averaging:acted", check_operator(a, beta_acted, &OperatorKind::Averaging)?)?;
    precondition("averaging:acting", check_operator(b, beta_acting, &OperatorKind::Averaging)?)?;
    precondition(
        "averaging-compat:phi",
        commutes("averaging-compat:phi", &cm.phi.compose(beta_acted)?, &beta_acting.compose(&cm.phi)?),
    )?;
    let (ea, eb) = (basis(a.dim()), basis(b.dim()));
    let cross = act
        .layout()
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            Tensor::from_fn(act.dims(idx), a.dim(), |w| {
                let mut args: Vec<Vector> = pick(w, c.pattern, &ea, &eb).into_iter().map(<[Scalar]>::to_vec).collect();
                args[0] = if c.pattern[0] == Space::Acted {
                    beta_acted.apply(&args[0])
                } else {
                    beta_acting.apply(&args[0])
                };
                let refs: Vec<&[Scalar]> = args.iter().map(Vec::as_slice).collect();
                act.eval(idx, &refs)
            })
        })
        .collect();
    let action = Action::new(
        derive_from_operator(a, beta_acted, &OperatorKind::Averaging)?,
        derive_from_operator(b, beta_acting, &OperatorKind::Averaging)?,
        cross,
    )?;
    CrossedModule::new(action, cm.phi.clone())
}

const PAIRS: [[usize; 2]; 3] = [[0, 1], [0, 2], [1, 2]];

/// Sum of `c` with the maps applied at each pair of argument positions.
fn pair_sum(c: &Tensor, args: &[&[Scalar]], maps: &[&Matrix]) -> Vector {
    let mut out = vec![int(0); c.out_dim()];
    for pair in PAIRS {
        let owned: Vec<Vector> = (0..3)
            .map(|k| if pair.contains(&k) { maps[k].apply(args[k]) } else { args[k].to_vec() })
            .collect();
        let refs: Vec<&[Scalar]> = owned.iter().map(Vec::as_slice).collect();
        axpy(&mut out, &int(1), &c.apply(&refs));
    }
    out
}

/// The three-term twisted cross tensors of a ternary action, without checks.
pub fn rb_action_tensors(act: &Action, r_acted: &Matrix, r_acting: &Matrix) -> Vec<Tensor> {
    let (ea, ep) = (basis(act.acted().dim()), basis(act.acting().dim()));
    act.layout()
        .iter()
        .enumerate()
        .map(|(idx, c)| {
            let maps: Vec<&Matrix> = c
                .pattern
                .iter()
                .map(|s| if *s == Space::Acted { r_acted } else { r_acting })
                .collect();
            Tensor::from_fn(act.dims(idx), act.acted().dim(), |w| {
                pair_sum(&act.cross()[idx], &pick(w, c.pattern, &ea, &ep), &maps)
            })
        })
        .collect()
}

/// Rota-Baxter (weight 0) twist of a ternary action: an action of the derived
/// acting algebra on the derived acted algebra.
pub fn rb_twist_ternary_action(act: &Action, r_acted: &Matrix, r_acting: &Matrix) -> Result<Action> {
    act.acted().expect_kind(Kind::TernaryLeibniz)?;
    let report = check_action(act);
    if !report.is_empty() {
        return Err(Error::InvalidAction(report));
    }
    let (l, p) = (act.acted(), act.acting());
    let kind = OperatorKind::RotaBaxter(int(0));
    precondition("rb:acted", check_operator(l, r_acted, &kind)?)?;
    precondition("rb:acting", check_operator(p, r_acting, &kind)?)?;
    let (ea, ep) = (basis(l.dim()), basis(p.dim()));
    for (idx, c) in act.layout().iter().enumerate() {
        let maps: Vec<&Matrix> = c
            .pattern
            .iter()
            .map(|s| if *s == Space::Acted { r_acted } else { r_acting })
            .collect();
        let id = format!("rb-action:{}", c.name);
        precondition(
            &id,
            run_identities(&act.dims(idx), |w| {
                let args = pick(w, c.pattern, &ea, &ep);
                let mapped: Vec<Vector> = (0..3).map(|k| maps[k].apply(args[k])).collect();
                let refs: Vec<&[Scalar]> = mapped.iter().map(Vec::as_slice).collect();
                let lhs = act.eval(idx, &refs);
                let rhs = r_acted.apply(&pair_sum(&act.cross()[idx], &args, &maps));
                vec![(id.clone(), sub(&lhs, &rhs))]
            }),
        )?;
    }
    Action::new(
        derive_from_operator(l, r_acted, &kind)?,
        derive_from_operator(p, r_acting, &kind)?,
        rb_action_tensors(act, r_acted, r_acting),
    )
}

/// Whether `T(A ⋊ B)` and `T(A) ⋊ T(B)` have identical structure constants.
pub fn functor_semidirect_compat(act: &Action) -> Result<bool> {
    act.acted().expect_kind(Kind::Triassociative)?;
    let induced = induce_ternary_action(act)?;
    let lhs = t_from_triassoc(&semidirect(act), Variant::Main)?;
    let rhs = semidirect(&induced);
    Ok(lhs.products() == rhs.products())
}

fn block(top_left: &Matrix, bottom_right: &Matrix) -> Matrix {
    top_left.block_diagonal(bottom_right)
}

/// Morphism reports of the three maps between induced ternary semidirect
/// products, with no preconditions on the crossed module:
/// `(φ, id)`, `(id, φ)` and the shift `(x, a) -> (-x, φ(x) + a)`.
pub fn semidirect_morphism_report(cm: &CrossedModule) -> Result<ViolationReport> {
    cm.acted().expect_kind(Kind::Triassociative)?;
    let tcm = CrossedModule::new(induced_action_unchecked(&cm.action)?, cm.phi.clone())?;
    let (ta, tb) = (tcm.acted(), tcm.acting());
    let source = semidirect(&tcm.action);
    let map_i = check_morphism(
        &block(&cm.phi, &Matrix::identity(tb.dim())),
        &source,
        &semidirect(&Action::self_action(tb)?),
    )?;
    let map_ii = check_morphism(
        &block(&Matrix::identity(ta.dim()), &cm.phi),
        &semidirect(&Action::self_action(ta)?),
        &source,
    )?;
    let map_iii = shift_morphism_report(&tcm);
    Ok(ViolationReport::merge([
        map_i.prefixed("map-i:"),
        map_ii.prefixed("map-ii:"),
        map_iii.prefixed("map-iii:"),
    ]))
}

/// [`semidirect_morphism_report`] for a valid triassociative crossed module.
pub fn semidirect_morphism_maps(cm: &CrossedModule) -> Result<ViolationReport> {
    cm.acted().expect_kind(Kind::Triassociative)?;
    require_crossed_module(cm)?;
    semidirect_morphism_report(cm)
}
