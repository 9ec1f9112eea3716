//! Formula-vs-engine comparisons: the cellular Bredon homology of a
//! constructed space against the free-module prediction of the
//! corresponding descriptor, degree by degree.
//!
//! A degree passes when an isomorphism is certified by search; if every
//! invariant agrees but the bounded search produced no witness, the degree
//! still passes but carries an explicit `invariants-only` marker.

use thiserror::Error;

use crate::c2sset::{
    bredon_homology_range, build_sphere_table, builtin, cell_budget, check_budget, coinduce,
    disjoint_basepoint, f2_betti, james_stage, norm_space, smash, suspend_sigma, suspend_trivial,
    C2SimplicialSet, FiniteSimplicialSet, SsetError,
};
use crate::expr::{evaluate, ExprError, SpaceExpr};
use crate::grfree::{
    coind_homology_descriptor, evaluate_descriptor, james_homology_descriptor, FreeDescriptor,
    FreeSummand, GradedSet, GrfreeError, RORep, Stage, SummandKind,
};
use crate::mackey::{compare, direct_sum, norm_f2, IsoVerdict, MackeyFunctor};
use crate::report::{CheckReport, CheckRow, MackeyRecord, ReportError};

#[derive(Debug, Error)]
pub enum CheckError {
    #[error("{op} requires a trivial involution on its argument, but `{arg}` carries a nontrivial one")]
    NeedsTrivialAction { op: &'static str, arg: String },
    #[error("{0}")]
    Unsupported(String),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Sset(#[from] SsetError),
    #[error(transparent)]
    Grfree(#[from] GrfreeError),
    #[error(transparent)]
    Report(#[from] ReportError),
}

/// Mod-2 homology basis of a plain simplicial set through `max_degree`,
/// one labeled element per Betti number.
fn mod2_basis(space: &FiniteSimplicialSet, max_degree: usize, prefix: &str) -> GradedSet {
    let betti = f2_betti(space, max_degree);
    let mut elements = Vec::new();
    for (n, &b) in betti.iter().enumerate() {
        for i in 0..b {
            elements.push((format!("{prefix}{n}.{i}"), n as i64));
        }
    }
    GradedSet::new(elements).expect("betti labels are distinct")
}

/// The reduced basis: the unit class in degree zero removed.
fn mod2_reduced_basis(
    space: &FiniteSimplicialSet,
    max_degree: usize,
    prefix: &str,
) -> Result<GradedSet, CheckError> {
    let full = mod2_basis(space, max_degree, prefix);
    let mut elements: Vec<(String, i64)> = full.elements().to_vec();
    let unit = elements
        .iter()
        .position(|(_, d)| *d == 0)
        .ok_or_else(|| CheckError::Unsupported("the space has no degree-zero class".into()))?;
    elements.remove(unit);
    Ok(GradedSet::new(elements).expect("labels stay distinct"))
}

fn fixed_shifts(d: &FreeDescriptor) -> Vec<RORep> {
    d.summands()
        .iter()
        .filter(|s| s.kind == SummandKind::Fixed)
        .map(|s| s.shift)
        .collect()
}

fn check_row(degree: i64, left: &MackeyFunctor, right: &MackeyFunctor) -> Result<CheckRow, CheckError> {
    let report = compare(left, right);
    let (verdict, pass) = match report.verdict {
        IsoVerdict::Isomorphic => ("isomorphic".to_string(), true),
        IsoVerdict::InvariantsAgree => ("invariants-only".to_string(), true),
        IsoVerdict::NotIsomorphic(reason) => (format!("mismatch: {reason}"), false),
    };
    Ok(CheckRow {
        degree,
        left: MackeyRecord::from_functor(left)?,
        right: MackeyRecord::from_functor(right)?,
        verdict,
        pass,
    })
}

fn assemble(
    check: &str,
    space: String,
    max_degree: usize,
    cellular: &[MackeyFunctor],
    predicted: &[MackeyFunctor],
) -> Result<CheckReport, CheckError> {
    let rows = cellular
        .iter()
        .zip(predicted.iter())
        .enumerate()
        .map(|(n, (l, r))| check_row(n as i64, l, r))
        .collect::<Result<Vec<_>, _>>()?;
    let passed = rows.iter().all(|r| r.pass);
    Ok(CheckReport {
        check: check.to_string(),
        space,
        max_degree: max_degree as i64,
        rows,
        passed,
    })
}

fn require_trivial(x: &C2SimplicialSet, op: &'static str, arg: &SpaceExpr) -> Result<(), CheckError> {
    if x.is_trivial_action() {
        Ok(())
    } else {
        Err(CheckError::NeedsTrivialAction {
            op,
            arg: arg.to_string(),
        })
    }
}

/// Homology of a coinduced space against the free module on the norm of
/// the mod-2 basis of the underlying space.
pub fn coind_check(expr: &SpaceExpr, max_degree: usize) -> Result<CheckReport, CheckError> {
    let dim_bound = max_degree + 1;
    let x = evaluate(expr, dim_bound)?;
    require_trivial(&x, "coind-check", expr)?;
    let basis = mod2_basis(&x.space, max_degree, "x");
    let descriptor = coind_homology_descriptor(&basis);

    let coind = coinduce(&x.space, x.basepoint().map(|r| r.idx), dim_bound)?;
    check_budget(&coind.space, cell_budget())?;
    let coefficient = norm_f2();
    let cellular = bredon_homology_range(&coind, &coefficient, max_degree, false)?;

    let table = build_sphere_table(&fixed_shifts(&descriptor), max_degree as i64, &coefficient)?;
    let predicted = (0..=max_degree)
        .map(|n| evaluate_descriptor(&descriptor, n as i64, &table))
        .collect::<Result<Vec<_>, _>>()?;

    assemble(
        "coind-check",
        format!("coind({expr})"),
        max_degree,
        &cellular,
        &predicted,
    )
}

/// Homology of a James filtration stage on the sign circle against the
/// truncated stagewise descriptor.
pub fn james_check(stage: usize, max_degree: usize) -> Result<CheckReport, CheckError> {
    if stage > 3 {
        return Err(CheckError::Unsupported(format!(
            "james-check handles stages up to 3, got {stage}"
        )));
    }
    if max_degree > 4 {
        return Err(CheckError::Unsupported(format!(
            "james-check handles degrees up to 4, got {max_degree}"
        )));
    }
    let dim_bound = max_degree + 1;
    let x = builtin("Ssigma")?;
    let j = james_stage(&x, stage, dim_bound)?;
    check_budget(&j.space, cell_budget())?;
    let coefficient = norm_f2();
    let cellular = bredon_homology_range(&j, &coefficient, max_degree, false)?;

    let underlying = mod2_reduced_basis(&x.space, max_degree, "a")?;
    let hred = FreeDescriptor::new(vec![FreeSummand::fixed(RORep::sigma())]);
    let descriptor = james_homology_descriptor(
        &underlying,
        &hred,
        Stage::Bounded(stage as i64),
        max_degree as i64,
    )?;
    let table = build_sphere_table(&fixed_shifts(&descriptor), max_degree as i64, &coefficient)?;
    let predicted = (0..=max_degree)
        .map(|n| evaluate_descriptor(&descriptor, n as i64, &table))
        .collect::<Result<Vec<_>, _>>()?;

    assemble(
        "james-check",
        format!("james(Ssigma,{stage})"),
        max_degree,
        &cellular,
        &predicted,
    )
}

/// The suspension splitting of a coinduction, at homology level: reduced
/// homology of `suspsigma(coind(x))` against the sum over the reduced
/// homologies of `smash(plus(C2), susp(x))` and `suspsigma(norm(x))`.
pub fn splitting_check(expr: &SpaceExpr, max_degree: usize) -> Result<CheckReport, CheckError> {
    let dim_bound = max_degree + 1;
    let x = evaluate(expr, dim_bound)?;
    require_trivial(&x, "splitting-check", expr)?;
    let bp = x.require_basepoint()?;
    let coefficient = norm_f2();

    let lhs = suspend_sigma(&coinduce(&x.space, Some(bp.idx), dim_bound)?, dim_bound)?;
    let free_part = smash(
        &disjoint_basepoint(&builtin("C2")?)?,
        &suspend_trivial(&x, dim_bound)?,
        dim_bound,
    )?;
    let norm_part = suspend_sigma(&norm_space(&x.space, Some(bp.idx), dim_bound)?, dim_bound)?;
    for space in [&lhs, &free_part, &norm_part] {
        check_budget(&space.space, cell_budget())?;
    }

    let h_lhs = bredon_homology_range(&lhs, &coefficient, max_degree, true)?;
    let h_free = bredon_homology_range(&free_part, &coefficient, max_degree, true)?;
    let h_norm = bredon_homology_range(&norm_part, &coefficient, max_degree, true)?;
    let predicted: Vec<MackeyFunctor> = h_free
        .iter()
        .zip(h_norm.iter())
        .map(|(a, b)| direct_sum(&[a, b]))
        .collect();

    assemble(
        "splitting-check",
        format!("suspsigma(coind({expr}))"),
        max_degree,
        &h_lhs,
        &predicted,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;

    #[test]
    fn mod2_bases_of_the_builtins() {
        let s1 = builtin("S1").unwrap();
        let b = mod2_basis(&s1.space, 2, "x");
        assert_eq!(b.elements(), &[("x0.0".to_string(), 0), ("x1.0".to_string(), 1)]);
        let r = mod2_reduced_basis(&s1.space, 2, "x").unwrap();
        assert_eq!(r.elements(), &[("x1.0".to_string(), 1)]);

        let rp2 = builtin("RP2").unwrap();
        let b = mod2_basis(&rp2.space, 2, "w");
        assert_eq!(
            b.elements(),
            &[
                ("w0.0".to_string(), 0),
                ("w1.0".to_string(), 1),
                ("w2.0".to_string(), 2)
            ]
        );
    }

    #[test]
    fn coind_check_point_passes_trivially() {
        let report = coind_check(&parse("pt").unwrap(), 1).unwrap();
        assert!(report.passed);
        assert_eq!(report.rows.len(), 2);
        assert!(report.rows.iter().all(|r| r.verdict == "isomorphic"));
    }

    #[test]
    fn coind_check_circle_passes() {
        let report = coind_check(&parse("S1").unwrap(), 2).unwrap();
        assert!(report.passed, "{}", report.render_text());
    }

    #[test]
    fn coind_check_rejects_genuine_actions() {
        assert!(matches!(
            coind_check(&parse("C2").unwrap(), 1),
            Err(CheckError::NeedsTrivialAction { .. })
        ));
    }

    #[test]
    fn james_check_stage_one_is_the_sign_circle() {
        let report = james_check(1, 2).unwrap();
        assert!(report.passed, "{}", report.render_text());
    }

    #[test]
    fn james_check_stage_two() {
        let report = james_check(2, 3).unwrap();
        assert!(report.passed, "{}", report.render_text());
    }

    #[test]
    fn james_check_rejects_deep_stages() {
        assert!(matches!(james_check(4, 3), Err(CheckError::Unsupported(_))));
        assert!(matches!(james_check(2, 5), Err(CheckError::Unsupported(_))));
    }

    #[test]
    fn splitting_check_point() {
        let report = splitting_check(&parse("pt").unwrap(), 2).unwrap();
        assert!(report.passed, "{}", report.render_text());
    }

    #[test]
    fn splitting_check_circle() {
        let report = splitting_check(&parse("S1").unwrap(), 3).unwrap();
        assert!(report.passed, "{}", report.render_text());
    }
}
