//! The full computation for one metric: subdivision, face vectors of the
//! ball, its boundary and interior, tight-span face numbers and every check
//! that applies, collected into a canonical report.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::bounds::{verify_metric_against_bounds, BoundReport};
use crate::dual::{all_faces, genericity_of, strategies, FaceSet, GenericityVerdict, Subdivision, SubdivisionOptions};
use crate::error::{Error, Result};
use crate::fvec::{
    ball_json, check_asff, check_ball_relations, check_dehn_sommerville, check_inductive_step_on, g_from_h, h_from_f,
    split_interior_boundary, tightspan_from_interior, AsffReport, BallVectors, TightSpanVectors,
};
use crate::metric::Metric;
use crate::primal::{crosscheck, CrosscheckReport};
use crate::verdict::Verdict;

#[derive(Clone, Debug)]
pub struct ComputeOptions {
    /// Subdivision strategy name; `None` picks by size.
    pub strategy: Option<String>,
    pub threshold: usize,
    pub oracle: bool,
    /// Compute face numbers even when the metric is not generic, as long as
    /// the subdivision is a triangulation.
    pub allow_degenerate: bool,
}

impl Default for ComputeOptions {
    fn default() -> Self {
        ComputeOptions {
            strategy: None,
            threshold: crate::dual::ENUMERATION_THRESHOLD,
            oracle: false,
            allow_degenerate: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Ran(Verdict),
    Skipped(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub outcome: CheckOutcome,
}

impl Check {
    fn ran(name: &'static str, v: Verdict) -> Self {
        Check { name, outcome: CheckOutcome::Ran(v) }
    }

    fn skipped(name: &'static str, why: impl Into<String>) -> Self {
        Check { name, outcome: CheckOutcome::Skipped(why.into()) }
    }

    pub fn failed(&self) -> bool {
        matches!(&self.outcome, CheckOutcome::Ran(v) if !v.pass)
    }

    fn to_json(&self) -> Value {
        match &self.outcome {
            CheckOutcome::Ran(v) => json!({ "pass": v.pass, "witness": v.witness }),
            CheckOutcome::Skipped(why) => json!({ "skipped": why }),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Computation {
    pub n: usize,
    pub strategy: &'static str,
    pub subdivision: Subdivision,
    pub genericity: GenericityVerdict,
    pub faces: Option<FaceSet>,
    pub ball: Option<BallVectors>,
    pub asff: Option<AsffReport>,
    pub tight_span: Option<TightSpanVectors>,
    pub bounds: Option<BoundReport>,
    pub oracle: Option<CrosscheckReport>,
    pub checks: Vec<Check>,
}

impl Computation {
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(Check::failed)
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        m.insert("n".into(), json!(self.n));
        m.insert("strategy".into(), json!(self.strategy));
        m.insert("generic".into(), json!(self.genericity.generic));
        m.insert("genericity_witness".into(), json!(self.genericity.witness));
        m.insert("triangulation".into(), json!(self.subdivision.generic));
        m.insert("cells".into(), json!(self.subdivision.cells.len()));
        m.insert("volume_sum".into(), json!(self.subdivision.volume_sum()));
        if let Some(b) = &self.ball {
            if let Value::Object(bj) = ball_json(b) {
                m.extend(bj);
            }
        }
        if let Some(a) = &self.asff {
            m.insert(
                "asff".into(),
                json!({
                    "top_interior": a.top_interior,
                    "top_cap": a.top_cap,
                    "cap_attained": a.cap_attained(),
                    "min_interior_dim": a.min_interior_dim,
                }),
            );
        }
        if let Some(t) = &self.tight_span {
            m.insert("fT".into(), json!(t.ft));
            m.insert("hT".into(), json!(t.ht));
            m.insert("ideal_fT".into(), json!(t.ideal_ft));
            m.insert("ideal_hT".into(), json!(t.ideal_ht));
            m.insert("glued".into(), json!(t.glued.iter().collect::<Vec<_>>()));
            m.insert("dim_T".into(), json!(t.dim()));
        }
        if let Some(b) = &self.bounds {
            m.insert("bounds".into(), serde_json::to_value(b).expect("plain data"));
        }
        if let Some(o) = &self.oracle {
            m.insert("oracle".into(), serde_json::to_value(o).expect("plain data"));
        }
        let checks: Map<String, Value> = self.checks.iter().map(|c| (c.name.to_string(), c.to_json())).collect();
        m.insert("checks".into(), Value::Object(checks));
        Value::Object(m)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let list = |v: &[i64]| format!("({})", v.iter().map(i64::to_string).collect::<Vec<_>>().join(","));
        let _ = writeln!(out, "n = {}, strategy {}", self.n, self.strategy);
        let _ = writeln!(
            out,
            "generic: {}{}",
            self.genericity.generic,
            self.genericity.witness.as_ref().map_or(String::new(), |w| format!(" ({w})"))
        );
        let _ = writeln!(out, "cells: {}, volume sum {}", self.subdivision.cells.len(), self.subdivision.volume_sum());
        if let Some(b) = &self.ball {
            let h = h_from_f(&b.total);
            let hb = h_from_f(&b.boundary);
            let _ = writeln!(out, "f = {}  h = {}  g = {}", list(&b.total.counts), list(&h.0), list(&g_from_h(&h).0));
            let _ = writeln!(
                out,
                "boundary: f = {}  h = {}  g = {}",
                list(&b.boundary.counts),
                list(&hb.0),
                list(&g_from_h(&hb).0)
            );
            let _ = writeln!(out, "interior: f = {}  h = {}", list(&b.interior.counts), list(&h_from_f(&b.interior).0));
        }
        if let Some(t) = &self.tight_span {
            let _ = writeln!(out, "fT = {}  hT = {}  glued = {}", list(&t.ft), list(&t.ht), t.glued);
            let _ = writeln!(out, "ideal fT = {}  ideal hT = {}", list(&t.ideal_ft), list(&t.ideal_ht));
        }
        for c in &self.checks {
            let line = match &c.outcome {
                CheckOutcome::Ran(v) if v.pass => "pass".to_string(),
                CheckOutcome::Ran(v) => format!("FAIL: {}", v.witness.as_deref().unwrap_or("")),
                CheckOutcome::Skipped(why) => format!("skipped ({why})"),
            };
            let _ = writeln!(out, "check {}: {line}", c.name);
        }
        out
    }
}

fn subdivide(d: &Metric, opts: &ComputeOptions) -> Result<(&'static str, Subdivision)> {
    let so = SubdivisionOptions { threshold: opts.threshold };
    let registry = strategies();
    let name = opts.strategy.as_deref().unwrap_or_else(|| crate::dual::subdivision::auto_strategy(d.n(), &so));
    let strategy = registry.get(name)?;
    Ok((strategy.name(), strategy.compute(d, &so)?))
}

/// Runs the pipeline. A metric that is not generic yields `NotGeneric`
/// unless `allow_degenerate` is set, in which case the face numbers are
/// still computed when the subdivision is a triangulation.
pub fn compute(d: &Metric, opts: &ComputeOptions) -> Result<Computation> {
    let n = d.n();
    let (strategy, subdivision) = subdivide(d, opts)?;
    let genericity = genericity_of(d, &subdivision);
    if !genericity.generic && !opts.allow_degenerate {
        return Err(Error::NotGeneric(genericity.witness.unwrap_or_default()));
    }
    let mut c = Computation {
        n,
        strategy,
        subdivision,
        genericity,
        faces: None,
        ball: None,
        asff: None,
        tight_span: None,
        bounds: None,
        oracle: None,
        checks: Vec::new(),
    };
    c.checks.push(Check::ran(
        "volume",
        Verdict::check(c.genericity.volume_sum == crate::dual::hypersimplex_volume(n), || {
            format!("cell volumes sum to {}", c.genericity.volume_sum)
        }),
    ));
    if !c.subdivision.generic {
        return Ok(c);
    }
    let faces = all_faces(&c.subdivision)?;
    let ball = split_interior_boundary(&faces);
    c.checks.push(Check::ran("dehn_sommerville", check_dehn_sommerville(&ball.boundary)));
    c.checks.push(Check::ran("ball_relations", check_ball_relations(&ball)));
    let asff = check_asff(&ball);
    c.checks.push(Check::ran("asff", asff.verdict()));
    c.checks.push(match check_inductive_step_on(&faces) {
        Ok(v) => Check::ran("inductive_step", v),
        Err(Error::InapplicablePremise(w)) => Check::skipped("inductive_step", format!("premise fails: {w}")),
        Err(Error::PreconditionViolated(w)) => Check::skipped("inductive_step", w),
        Err(e) => return Err(e),
    });
    let tv = tightspan_from_interior(d, &ball.interior);
    if c.genericity.generic {
        match verify_metric_against_bounds(d, &tv) {
            Ok(b) => {
                c.checks.push(Check::ran("bounds", Verdict::pass()));
                c.bounds = Some(b);
            }
            Err(Error::BoundViolated(w)) => c.checks.push(Check::ran("bounds", Verdict::fail(w))),
            Err(e) => return Err(e),
        }
    } else {
        c.checks.push(Check::skipped("bounds", "metric is not generic"));
    }
    if opts.oracle {
        c.checks.push(if !c.genericity.generic {
            Check::skipped("oracle", "metric is not generic")
        } else {
            match crosscheck(d) {
                Ok(r) => {
                    c.oracle = Some(r);
                    Check::ran("oracle", Verdict::pass())
                }
                Err(Error::Mismatch(w)) => Check::ran("oracle", Verdict::fail(w)),
                Err(Error::ScaleExceeded(m)) => Check::skipped("oracle", format!("n = {m} is above 6")),
                Err(e) => return Err(e),
            }
        });
    }
    c.faces = Some(faces);
    c.ball = Some(ball);
    c.asff = Some(asff);
    c.tight_span = Some(tv);
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::fixtures::{four_points, four_points_ideal};

    #[test]
    fn four_point_report() {
        let opts = ComputeOptions { oracle: true, ..Default::default() };
        let c = compute(&four_points(), &opts).unwrap();
        assert!(!c.any_failed(), "{}", c.to_text());
        let j = c.to_json();
        assert_eq!(j["fT"], json!([8, 8, 1]));
        assert_eq!(j["f"], json!([6, 13, 12, 4]));
        assert_eq!(j["glued"], json!([1, 2, 3, 4]));
        assert_eq!(j["checks"]["oracle"]["pass"], json!(true));
        assert_eq!(j["checks"]["inductive_step"]["skipped"], json!("needs n >= 5, got 4"));
    }

    #[test]
    fn degenerate_metrics_need_permission() {
        let d = four_points_ideal();
        assert!(matches!(compute(&d, &ComputeOptions::default()), Err(Error::NotGeneric(_))));
        let c = compute(&d, &ComputeOptions { allow_degenerate: true, ..Default::default() }).unwrap();
        assert_eq!(c.tight_span.unwrap().ft, vec![4, 4, 1]);
    }

    #[test]
    fn reports_are_canonical() {
        let a = compute(&four_points(), &ComputeOptions::default()).unwrap().to_json().to_string();
        let b = compute(&four_points(), &ComputeOptions { strategy: Some("traverse".into()), ..Default::default() })
            .unwrap()
            .to_json();
        let mut b = b;
        b["strategy"] = json!("enumerate");
        assert_eq!(a, b.to_string());
    }
}
