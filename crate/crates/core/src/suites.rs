//! Named batches of checks, each reporting one pass/fail line per item.

use crate::bounds::{
    f_bound, h_bound, identity_checks, lower_bound_top, recursion_checks, verify_metric_against_bounds,
};
use crate::dual::is_generic;
use crate::error::Result;
use crate::fvec::binom;
use crate::metric::fixtures::{four_points, four_points_ideal};
use crate::metric::generators::{default_resolution, gen_dmax, gen_dmin, gen_random};
use crate::metric::Metric;
use crate::primal::{crosscheck, h_by_outdegree, OrientationSpec};
use crate::rational::int;
use crate::registry::{Named, Registry};
use crate::report::{compute, ComputeOptions};
use crate::verdict::Verdict;

#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub n_max: Option<usize>,
    pub n: Option<usize>,
    pub count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteItem {
    pub name: String,
    pub verdict: Verdict,
}

impl SuiteItem {
    fn new(name: impl Into<String>, verdict: Verdict) -> Self {
        SuiteItem { name: name.into(), verdict }
    }

    fn from_result(name: impl Into<String>, r: Result<Verdict>) -> Self {
        Self::new(name, r.unwrap_or_else(|e| Verdict::fail(e.to_string())))
    }

    pub fn line(&self) -> String {
        match (&self.verdict.pass, &self.verdict.witness) {
            (true, None) => format!("pass  {}", self.name),
            (true, Some(w)) => format!("pass  {} ({w})", self.name),
            (false, w) => format!("FAIL  {}: {}", self.name, w.as_deref().unwrap_or("")),
        }
    }
}

pub trait Suite: Named + Send + Sync {
    fn run(&self, p: &SuiteParams) -> Vec<SuiteItem>;
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Verdict {
    Verdict::check(got == want, || format!("got {got:?}, expected {want:?}"))
}

fn tight_span(d: &Metric) -> Result<crate::fvec::TightSpanVectors> {
    Ok(compute(d, &ComputeOptions::default())?.tight_span.expect("generic metrics triangulate"))
}

fn even_binomials(n: usize) -> Vec<i64> {
    (0..=n / 2).map(|k| binom(n as i64, 2 * k as i64)).collect()
}

struct ReferenceExamples;
struct Bounds;
struct Identities;
struct OracleRandom;

impl Named for ReferenceExamples {
    fn name(&self) -> &'static str {
        "paper-examples"
    }
}
impl Suite for ReferenceExamples {
    fn run(&self, _: &SuiteParams) -> Vec<SuiteItem> {
        let mut items = Vec::new();
        let opts = ComputeOptions { oracle: true, ..Default::default() };
        items.push(SuiteItem::from_result(
            "four points: cells, ball vectors and tight span",
            compute(&four_points(), &opts).map(|c| {
                let b = c.ball.as_ref().expect("triangulation");
                let h = crate::fvec::h_from_f(&b.total).0;
                let hb = crate::fvec::h_from_f(&b.boundary).0;
                let hi = crate::fvec::h_from_f(&b.interior).0;
                let t = c.tight_span.as_ref().expect("generic");
                expect_eq(c.subdivision.cells.len(), 4)
                    .and(expect_eq(b.total.counts.clone(), vec![6, 13, 12, 4]))
                    .and(expect_eq(b.boundary.counts.clone(), vec![6, 12, 8]))
                    .and(expect_eq(b.interior.counts.clone(), vec![0, 1, 4, 4]))
                    .and(expect_eq(h, vec![1, 2, 1, 0, 0]))
                    .and(expect_eq(hb, vec![1, 3, 3, 1]))
                    .and(expect_eq(hi, vec![0, 0, 1, 2, 1]))
                    .and(expect_eq(t.ft.clone(), vec![8, 8, 1]))
                    .and(Verdict::check(!c.any_failed(), || "a check failed".into()))
            }),
        ));
        items.push(SuiteItem::from_result(
            "ideal four points is not generic",
            is_generic(&four_points_ideal())
                .map(|v| Verdict::check(!v.generic && v.witness.is_some(), || "reported generic".into())),
        ));
        for (name, d, want) in [
            ("dmax n=5", gen_dmax(5), vec![16, 20, 5]),
            ("dmax n=6", gen_dmax(6), vec![32, 48, 18, 1]),
            ("dmin n=5", gen_dmin(5), vec![16, 20, 5]),
            ("dmin n=6", gen_dmin(6), vec![31, 45, 15]),
        ] {
            items.push(SuiteItem::from_result(
                format!("{name}: tight-span f-vector"),
                d.and_then(|d| tight_span(&d)).map(|t| expect_eq(t.ft, want)),
            ));
        }
        for n in 4..=6 {
            items.push(SuiteItem::from_result(
                format!("dmax n={n}: tight-span h-vector is C(n,2k)"),
                gen_dmax(n).and_then(|d| tight_span(&d)).map(|t| expect_eq(t.ht, even_binomials(n))),
            ));
        }
        items.push(SuiteItem::new(
            "maximal ideal h-vector on four points",
            expect_eq((0..=2).map(|k| h_bound(4, k, true).unwrap_or(0)).collect::<Vec<_>>(), vec![1, 2, 1]),
        ));
        items
    }
}

impl Named for Bounds {
    fn name(&self) -> &'static str {
        "bounds"
    }
}
impl Suite for Bounds {
    fn run(&self, p: &SuiteParams) -> Vec<SuiteItem> {
        let n_max = p.n_max.unwrap_or(16);
        let mut items = vec![SuiteItem::new(format!("recursion and h-sum, n <= {n_max}"), recursion_checks(n_max))];
        for n in 4..=n_max.min(7) {
            items.push(SuiteItem::from_result(
                format!("dmax n={n} attains every upper bound"),
                gen_dmax(n).and_then(|d| {
                    let r = verify_metric_against_bounds(&d, &tight_span(&d)?)?;
                    Ok(Verdict::check(r.all_attained(), || format!("{r:?}")))
                }),
            ));
        }
        for n in 5..=n_max.min(7) {
            items.push(SuiteItem::from_result(
                format!("dmin n={n} attains the top-dimension lower bound"),
                gen_dmin(n).and_then(|d| {
                    let t = tight_span(&d)?;
                    let r = verify_metric_against_bounds(&d, &t)?;
                    Ok(expect_eq(r.lower_bound_top, Some((lower_bound_top(n)?, lower_bound_top(n)?))))
                }),
            ));
        }
        let count = p.count.unwrap_or(20) as u64;
        for n in [5, 6] {
            let mut v = Verdict::pass();
            let mut skipped = 0;
            for seed in 0..count {
                let r = gen_random(n, seed, default_resolution(n)).and_then(|d| {
                    if !is_generic(&d)?.generic {
                        skipped += 1;
                        return Ok(Verdict::pass());
                    }
                    verify_metric_against_bounds(&d, &tight_span(&d)?)?;
                    Ok(Verdict::pass())
                });
                v = v.and(r.unwrap_or_else(|e| Verdict::fail(format!("seed {seed}: {e}"))));
            }
            if v.pass && skipped > 0 {
                v = Verdict { pass: true, witness: Some(format!("{skipped} non-generic seeds skipped")) };
            }
            items.push(SuiteItem::new(format!("{count} random metrics at n={n} within bounds"), v));
        }
        items.push(SuiteItem::from_result(
            "F(7,k) closed form",
            (0..=3).map(|k| f_bound(7, k)).collect::<Result<Vec<_>>>().map(|f| expect_eq(f, vec![64, 112, 56, 7])),
        ));
        items
    }
}

impl Named for Identities {
    fn name(&self) -> &'static str {
        "identities"
    }
}
impl Suite for Identities {
    fn run(&self, p: &SuiteParams) -> Vec<SuiteItem> {
        let n_max = p.n_max.unwrap_or(12);
        vec![
            SuiteItem::new(format!("binomial identities, n <= {n_max}"), identity_checks(n_max)),
            SuiteItem::new(format!("bound recursions, n <= {}", n_max.max(4)), recursion_checks(n_max.max(4))),
        ]
    }
}

impl Named for OracleRandom {
    fn name(&self) -> &'static str {
        "oracle-random"
    }
}
impl Suite for OracleRandom {
    fn run(&self, p: &SuiteParams) -> Vec<SuiteItem> {
        let n = p.n.unwrap_or(5);
        let count = p.count.unwrap_or(20) as u64;
        let mut items = Vec::new();
        let mut first_generic = None;
        for seed in 0..count {
            let d = match gen_random(n, seed, default_resolution(n)) {
                Ok(d) => d,
                Err(e) => {
                    items.push(SuiteItem::new(format!("seed {seed}"), Verdict::fail(e.to_string())));
                    continue;
                }
            };
            let item = match is_generic(&d) {
                Ok(v) if !v.generic => SuiteItem::new(
                    format!("seed {seed}"),
                    Verdict { pass: true, witness: Some("non-generic, skipped".into()) },
                ),
                Ok(_) => {
                    first_generic.get_or_insert(d.clone());
                    SuiteItem::from_result(
                        format!("seed {seed}: dual and primal agree"),
                        crosscheck(&d).map(|_| Verdict::pass()),
                    )
                }
                Err(e) => SuiteItem::new(format!("seed {seed}"), Verdict::fail(e.to_string())),
            };
            items.push(item);
        }
        if let Some(d) = first_generic {
            let specs =
                [vec![int(1); n], (1..=n as i64).map(int).collect(), (1..=n as i64).map(|i| int(i * i + 1)).collect()];
            let hs: Result<Vec<Vec<i64>>> =
                specs.into_iter().map(|a| h_by_outdegree(&d, &OrientationSpec::new(a)?)).collect();
            items.push(SuiteItem::from_result(
                "out-degree h-vector is independent of the objective",
                hs.map(|hs| Verdict::check(hs.windows(2).all(|w| w[0] == w[1]), || format!("{hs:?}"))),
            ));
        }
        items
    }
}

pub fn suites() -> Registry<dyn Suite> {
    let mut r: Registry<dyn Suite> = Registry::new("suite");
    r.register(Box::new(ReferenceExamples))
        .register(Box::new(Bounds))
        .register(Box::new(Identities))
        .register(Box::new(OracleRandom));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identities_suite_passes() {
        let items = suites().get("identities").unwrap().run(&SuiteParams { n_max: Some(8), ..Default::default() });
        assert!(items.iter().all(|i| i.verdict.pass));
    }

    #[test]
    fn lines_name_the_item() {
        let i = SuiteItem::new("x", Verdict::fail("boom"));
        assert_eq!(i.line(), "FAIL  x: boom");
    }
}
