//! Solvability verdicts, minimality tests and solution certificates.

pub mod certify;
pub mod conditions;
pub mod minimizer;
pub mod report;
pub mod synth;
mod system;

pub use certify::{
    check_solution, check_solution_modified, is_finite_infimizer, kernel_dominance, ElementCheck,
    SolutionCandidate, Verdict,
};
pub use conditions::{
    condition_line_free, condition_natural, solvable, solvable_oracle, vr_solvable, FailingCondition,
    Solvability,
};
pub use minimizer::{direction_dominator, is_minimizing_direction, is_minimizing_point, point_dominator};
pub use report::{analyze, AnalysisReport, ConeDescription, Inclusion, SuggestedCone};
pub use synth::{solve, synthesize_infimizer, SolutionMode, SolveOutcome};
