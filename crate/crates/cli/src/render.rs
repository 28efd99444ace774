//! Text and JSON renderings. Rationals appear as strings in JSON so that no
//! precision is lost; the order of rows and generators is canonical, which
//! makes every report byte-for-byte reproducible.

use serde_json::{json, Value};
use setopt::analysis::{AnalysisReport, ConeDescription, Inclusion, SolutionCandidate, Verdict};
use setopt::geometry::inequality::variable_names;
use setopt::geometry::rational::format_vector;
use setopt::geometry::{Vector, VPolyhedron};
use setopt::OrderingCone;

pub fn vector(v: &[setopt::geometry::Rational]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

fn vectors(vs: &[Vector]) -> Value {
    Value::Array(vs.iter().map(|v| vector(v)).collect())
}

fn generators(g: &VPolyhedron) -> Value {
    json!({ "points": vectors(g.points()), "rays": vectors(g.rays()), "lines": vectors(g.lines()) })
}

fn inequalities(c: &OrderingCone) -> Vec<String> {
    let names = variable_names("y", c.dim());
    c.rows().iter().map(|r| r.display_with(&names).to_string()).collect()
}

pub fn cone(d: &ConeDescription) -> Value {
    json!({
        "inequalities": inequalities(&d.cone),
        "normals": vectors(&d.cone.normals()),
        "generators": generators(&d.generators),
    })
}

fn optional_cone(d: &Option<ConeDescription>) -> Value {
    d.as_ref().map_or(Value::Null, cone)
}

fn inclusion(i: Option<Inclusion>) -> Value {
    i.map_or(Value::Null, |i| Value::String(i.symbol().to_string()))
}

fn list(vs: &[Vector]) -> String {
    if vs.is_empty() {
        return "∅".to_string();
    }
    let items: Vec<String> = vs.iter().map(|v| format_vector(v)).collect();
    format!("{{{}}}", items.join(", "))
}

fn cone_text(d: &ConeDescription) -> String {
    let g = &d.generators;
    let mut gens = format!("rays {}", list(g.rays()));
    if !g.lines().is_empty() {
        gens.push_str(&format!(", lines {}", list(g.lines())));
    }
    format!("{}  [{}]", d.cone, gens)
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn holds(b: bool) -> &'static str {
    if b {
        "holds"
    } else {
        "fails"
    }
}

pub fn report_json(r: &AnalysisReport, default_cone: bool) -> Value {
    json!({
        "dim_x": r.dim_x,
        "dim_y": r.dim_y,
        "cone": cone(&r.cone),
        "cone_source": if default_cone { "default G(0)" } else { "file" },
        "feasible": r.feasible,
        "regular": r.regular,
        "error": r.error,
        "g_zero": optional_cone(&r.g_zero),
        "natural_cone": optional_cone(&r.natural_cone),
        "image_cone": optional_cone(&r.image_cone),
        "upper_homog": optional_cone(&r.upper_homog),
        "cone_vs_natural": inclusion(r.cone_vs_natural),
        "g_zero_vs_natural": inclusion(r.g_zero_vs_natural),
        "natural_vs_upper": inclusion(r.natural_vs_upper),
        "cond_line_free": r.cond_line_free,
        "cond_natural": r.cond_natural,
        "solvable": r.solvable,
        "failing": r.failing.map(|f| f.as_str()),
        "vr_solvable": r.vr_solvable,
        "suggested_cone": r.suggested_cone.as_ref().map_or(Value::Null, |s| json!({
            "cone": cone(&s.cone),
            "regular": s.regular,
        })),
    })
}

pub fn report_text(r: &AnalysisReport, default_cone: bool) -> String {
    let mut out = Vec::new();
    out.push(format!("problem: F: R^{} => R^{}", r.dim_x, r.dim_y));
    let source = if default_cone { " (default: G(0))" } else { "" };
    out.push(format!("C = {}{}", cone_text(&r.cone), source));
    out.push(format!("feasible: {}", yes(r.feasible)));
    if r.feasible {
        out.push(format!("regular: {}", yes(r.regular)));
    }
    for (name, d) in [("G(0)", &r.g_zero), ("K", &r.natural_cone), ("G(R^n)", &r.image_cone), ("Q", &r.upper_homog)] {
        if let Some(d) = d {
            out.push(format!("{name} = {}", cone_text(d)));
        }
    }
    if let (Some(a), Some(b), Some(c)) = (r.cone_vs_natural, r.g_zero_vs_natural, r.natural_vs_upper) {
        out.push(format!("C {} K, G(0) {} K, K {} Q", a.symbol(), b.symbol(), c.symbol()));
    }
    if let Some(e) = &r.error {
        out.push(format!("error: {e}"));
    }
    if r.feasible && r.regular {
        out.push(format!("line-free condition (-C ∩ Q ⊆ C): {}", holds(r.cond_line_free)));
        out.push(format!("natural-cone condition (C ⊇ K): {}", holds(r.cond_natural)));
    }
    match r.failing {
        Some(f) if r.feasible && r.regular => out.push(format!("solvable: no, {f} fails")),
        Some(_) => out.push("solvable: no".to_string()),
        None => out.push("solvable: yes".to_string()),
    }
    if r.feasible && r.regular {
        out.push(format!("vectorial relaxation solvable: {}", yes(r.vr_solvable)));
    }
    if let Some(s) = &r.suggested_cone {
        let status = if s.regular { "regular for F" } else { "not regular for F: lin(C+K) ⊄ G(0)" };
        out.push(format!("suggested cone C+K = {} ({status})", cone_text(&s.cone)));
    }
    out.join("\n") + "\n"
}

fn checks_json(list: &[setopt::analysis::ElementCheck]) -> Value {
    Value::Array(
        list.iter()
            .map(|e| json!({ "vector": vector(&e.vector), "minimizing": e.minimizing }))
            .collect(),
    )
}

pub fn verdict_json(v: &Verdict, mode: &str) -> Value {
    json!({
        "mode": mode,
        "passed": v.passed(),
        "infimizer": v.infimizer,
        "relative_to": cone(&ConeDescription::of(&v.relative_to)),
        "points": checks_json(&v.points),
        "directions": checks_json(&v.directions),
        "kernel_directions": checks_json(&v.kernel_directions),
        "failures": v.failures(),
    })
}

pub fn verdict_text(v: &Verdict, mode: &str) -> String {
    let mut out = vec![format!("mode: {mode}, minimality relative to {}", v.relative_to.minimal())];
    out.push(format!("finite infimizer: {}", yes(v.infimizer)));
    for (label, list) in [("point", &v.points), ("direction", &v.directions), ("kernel direction", &v.kernel_directions)] {
        for e in list.iter() {
            let status = if e.minimizing { "minimizer" } else { "NOT a minimizer" };
            out.push(format!("{label} {}: {status}", format_vector(&e.vector)));
        }
    }
    out.push(format!("verdict: {}", if v.passed() { "PASS" } else { "FAIL" }));
    for f in v.failures() {
        out.push(format!("  - {f}"));
    }
    out.join("\n") + "\n"
}

pub fn candidate_json(c: &SolutionCandidate) -> Value {
    json!({
        "points": vectors(c.points()),
        "directions": vectors(c.directions()),
        "kernel_directions": vectors(c.kernel_directions()),
    })
}
