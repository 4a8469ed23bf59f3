//! Numeric root localization for `K_{a,n}` and `K~_n`.

mod geometry;
mod roots;
mod theta;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::Serialize;

pub use geometry::{CurveFamily, CurveGeometry, CurveLabel};
pub use roots::{complex_roots, find_roots, FermatTarget, HornerTarget, RootTarget};
pub use theta::{
    count_lower_bound, density_audit, f_n_value, theta0, theta_roots, theta_to_point, DensityAudit,
    GapRow,
};

use crate::error::Result;
use crate::kfamily::{trivial_multiplicities, KFamilySpec};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_CTOL: f64 = 1e-6;

#[derive(Clone, Debug, Serialize)]
pub struct ClassifiedRoot {
    pub re: f64,
    pub im: f64,
    pub residual: f64,
    pub label: CurveLabel,
    pub distance: f64,
}

impl ClassifiedRoot {
    pub fn z(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

/// Where the roots are claimed to lie for the given `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Claim {
    /// `|a| <= 1/2`: every root of `K_{a,n}` on `Re z = 1/2`.
    MidLine,
    /// `a = -1`: `d_n / 3` roots of `K~_n` on each of `L`, `A1`, `A2`.
    RaysAndArcs,
    /// No statement; the roots are reported for inspection only.
    Unclaimed,
}

#[derive(Clone, Debug, Serialize)]
pub struct LocalizationReport {
    pub spec: KFamilySpec,
    pub claim: Claim,
    pub degree: usize,
    pub roots: Vec<ClassifiedRoot>,
    pub counts: BTreeMap<CurveLabel, usize>,
    pub lower_bound: i64,
    /// Roots with `Im z > 0` labelled `MidLine` or `RayL`.
    pub upper_line_roots: usize,
    pub verdict: bool,
}

impl LocalizationReport {
    pub fn points(&self) -> Vec<Complex64> {
        self.roots.iter().map(ClassifiedRoot::z).collect()
    }
}

/// Finds and classifies the roots of `K~_n` (for `a = -1`) or of
/// `K_{a,n}` (otherwise).
pub fn localize_report(spec: &KFamilySpec, tol: f64, tol_c: f64) -> Result<LocalizationReport> {
    let n = spec.n;
    let a = spec.a.to_f64();
    let (claim, target, family) = if spec.a.is_minus_one() {
        let l = trivial_multiplicities(n)?;
        let t = FermatTarget {
            n,
            a,
            mult_x: l.mult_x,
            mult_xm1: l.mult_xm1,
            mult_cyc: l.mult_cyc,
        };
        (Claim::RaysAndArcs, t, CurveFamily::RaysAndArcs)
    } else if spec.a.abs_at_most_half() {
        (Claim::MidLine, FermatTarget::full(n, a), CurveFamily::Line)
    } else {
        (Claim::Unclaimed, FermatTarget::full(n, a), CurveFamily::Any)
    };

    let geometry = CurveGeometry::default();
    let degree = target.degree();
    let roots: Vec<ClassifiedRoot> = find_roots(&target, tol)?
        .into_iter()
        .map(|z| {
            let (label, distance) = geometry.classify(z, family, tol_c);
            ClassifiedRoot {
                re: z.re,
                im: z.im,
                residual: target.relative_residual(z),
                label,
                distance,
            }
        })
        .collect();

    let mut counts = BTreeMap::new();
    for r in &roots {
        *counts.entry(r.label).or_insert(0) += 1;
    }
    let count = |l: CurveLabel| counts.get(&l).copied().unwrap_or(0);
    let verdict = roots.len() == degree
        && match claim {
            Claim::MidLine => count(CurveLabel::MidLine) == degree,
            Claim::RaysAndArcs => {
                let third = degree / 3;
                degree % 3 == 0
                    && [CurveLabel::RayL, CurveLabel::ArcA1, CurveLabel::ArcA2]
                        .iter()
                        .all(|&l| count(l) == third)
            }
            Claim::Unclaimed => true,
        };
    let upper_line_roots = roots
        .iter()
        .filter(|r| r.im > 0.0 && matches!(r.label, CurveLabel::MidLine | CurveLabel::RayL))
        .count();

    Ok(LocalizationReport {
        spec: spec.clone(),
        claim,
        degree,
        roots,
        counts,
        lower_bound: count_lower_bound(&spec.a, n),
        upper_line_roots,
        verdict,
    })
}

pub const PLOT_HEADER: &str = "n,a_num,a_den,re,im,label,residual,distance";

/// Comma-separated root table. Curve samples for `L`, `A1`, `A2` follow the
/// roots, labelled `curve:<name>` with empty residual and distance.
pub fn emit_plot_data(report: &LocalizationReport) -> String {
    let mut out = String::new();
    out.push_str(PLOT_HEADER);
    out.push('\n');
    let n = report.spec.n;
    let (num, den) = (report.spec.a.num(), report.spec.a.den());
    for r in &report.roots {
        let _ = writeln!(
            out,
            "{n},{num},{den},{},{},{},{:e},{:e}",
            r.re, r.im, r.label, r.residual, r.distance
        );
    }
    if report.roots.is_empty() {
        return out;
    }
    let height = report.roots.iter().map(|r| r.im.abs()).fold(1.0, f64::max) + 1.0;
    for (label, z) in CurveGeometry::default().samples(33, height) {
        let _ = writeln!(out, "{n},{num},{den},{},{},curve:{label},,", z.re, z.im);
    }
    out
}
