use super::conditions::FailingCondition;
use crate::cone::OrderingCone;
use crate::geometry::VPolyhedron;
use crate::problem::{is_regular, Problem};

/// A cone in both representations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDescription {
    pub cone: OrderingCone,
    pub generators: VPolyhedron,
}

impl ConeDescription {
    pub fn of(cone: &OrderingCone) -> Self {
        let cone = cone.minimal();
        let generators = cone.generators();
        ConeDescription { cone, generators }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inclusion {
    Equal,
    /// left ⊊ right
    StrictSubset,
    /// left ⊋ right
    StrictSuperset,
    Incomparable,
}

impl Inclusion {
    pub fn between(left: &OrderingCone, right: &OrderingCone) -> Self {
        match (right.contains_cone(left), left.contains_cone(right)) {
            (true, true) => Inclusion::Equal,
            (true, false) => Inclusion::StrictSubset,
            (false, true) => Inclusion::StrictSuperset,
            (false, false) => Inclusion::Incomparable,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Inclusion::Equal => "=",
            Inclusion::StrictSubset => "⊊",
            Inclusion::StrictSuperset => "⊋",
            Inclusion::Incomparable => "⋈",
        }
    }
}

#[derive(Clone, Debug)]
pub struct SuggestedCone {
    pub cone: ConeDescription,
    pub regular: bool,
}

/// Everything known about a problem in one place. Cone fields are `None` when
/// the graph is empty.
#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub dim_x: usize,
    pub dim_y: usize,
    pub cone: ConeDescription,
    pub feasible: bool,
    pub regular: bool,
    pub error: Option<String>,
    pub g_zero: Option<ConeDescription>,
    pub natural_cone: Option<ConeDescription>,
    pub image_cone: Option<ConeDescription>,
    pub upper_homog: Option<ConeDescription>,
    /// `C` vs `K`, `G(0)` vs `K`, `K` vs `Q`.
    pub cone_vs_natural: Option<Inclusion>,
    pub g_zero_vs_natural: Option<Inclusion>,
    pub natural_vs_upper: Option<Inclusion>,
    pub cond_line_free: bool,
    pub cond_natural: bool,
    pub solvable: bool,
    pub failing: Option<FailingCondition>,
    pub vr_solvable: bool,
    pub suggested_cone: Option<SuggestedCone>,
}

pub fn analyze(problem: &Problem) -> AnalysisReport {
    let f = problem.mapping();
    let c = problem.cone();
    let mut report = AnalysisReport {
        dim_x: f.n(),
        dim_y: f.q(),
        cone: ConeDescription::of(c),
        feasible: problem.is_feasible(),
        regular: false,
        error: None,
        g_zero: None,
        natural_cone: None,
        image_cone: None,
        upper_homog: None,
        cone_vs_natural: None,
        g_zero_vs_natural: None,
        natural_vs_upper: None,
        cond_line_free: false,
        cond_natural: false,
        solvable: false,
        failing: None,
        vr_solvable: false,
        suggested_cone: None,
    };
    if !report.feasible {
        report.failing = Some(FailingCondition::Infeasible);
        report.error = Some("the graph is empty, so the problem is infeasible".to_string());
        return report;
    }
    // graph nonempty from here on; the cone constructions cannot fail
    let g0 = f.g_zero().expect("nonempty graph");
    let k = f.natural_cone().expect("nonempty graph");
    let image = f.image_cone().expect("nonempty graph");
    let q = problem.upper_image_homog().expect("feasible");
    report.g_zero = Some(ConeDescription::of(&g0));
    report.natural_cone = Some(ConeDescription::of(&k));
    report.image_cone = Some(ConeDescription::of(&image));
    report.upper_homog = Some(ConeDescription::of(&q));
    report.cone_vs_natural = Some(Inclusion::between(c, &k));
    report.g_zero_vs_natural = Some(Inclusion::between(&g0, &k));
    report.natural_vs_upper = Some(Inclusion::between(&k, &q));

    report.regular = is_regular(c, f).expect("dimensions checked by Problem");
    if !report.regular {
        let fix = g0.sum(c);
        report.error = Some(format!(
            "the ordering cone is not regular for F; G(0)+C = {} is",
            fix.minimal()
        ));
        return report;
    }
    report.cond_line_free = c.contains_cone(&c.reflected().intersect(&q));
    report.cond_natural = c.contains_cone(&k);
    report.solvable = report.cond_line_free && report.cond_natural;
    report.vr_solvable = report.cond_line_free;
    report.failing = if !report.cond_line_free {
        Some(FailingCondition::LineFree)
    } else if !report.cond_natural {
        Some(FailingCondition::NaturalCone)
    } else {
        None
    };
    if !report.cond_natural {
        let enlarged = c.sum(&k);
        let regular = is_regular(&enlarged, f).expect("dimensions checked by Problem");
        report.suggested_cone = Some(SuggestedCone {
            cone: ConeDescription::of(&enlarged),
            regular,
        });
    }
    report
}
