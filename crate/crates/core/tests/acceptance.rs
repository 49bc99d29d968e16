//! End-to-end acceptance run: one line per criterion, nonzero exit if any fails.

use std::time::{Duration, Instant};

use tightspan::bounds::{f_bound, identity_checks, lower_bound_top, recursion_checks, verify_metric_against_bounds};
use tightspan::dual::{
    all_faces, cycle_opt_graph, enumerate_cells, hypersimplex_volume, is_generic, lambda_certificate, seed_cell,
    traverse_cells, Certificate, Subdivision,
};
use tightspan::fvec::{
    binom, check_asff, check_ball_relations, check_dehn_sommerville, check_inductive_step, check_symmetric, h_from_f,
    split_interior_boundary, tightspan_vectors, FVector, HVector,
};
use tightspan::graph::{components, edge_count, is_odd_unicyclic_spanning};
use tightspan::lp::{b11_classify, is_cell_lp, is_cell_oddpath};
use tightspan::metric::fixtures::{four_points, four_points_ideal};
use tightspan::metric::generators::{default_resolution, gen_dmax, gen_dmin, gen_random};
use tightspan::primal::{bounded_faces, crosscheck, h_by_outdegree_on, OrientationSpec};
use tightspan::rational::int;
use tightspan::{EdgeGraph, Error, Metric};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    ensure(got == want, || format!("{what}: got {got:?}, expected {want:?}"))
}

fn e(err: Error) -> String {
    err.to_string()
}

fn subdivision(d: &Metric) -> Result<Subdivision, String> {
    enumerate_cells(d, d.n().max(8)).map_err(e)
}

/// The first `count` generic metrics among the seeds `0, 1, ...`.
fn generic_randoms(n: usize, count: usize) -> Result<Vec<(u64, Metric)>, String> {
    let mut out = Vec::new();
    for seed in 0..50 * count as u64 {
        let d = gen_random(n, seed, default_resolution(n)).map_err(e)?;
        if is_generic(&d).map_err(e)?.generic {
            out.push((seed, d));
            if out.len() == count {
                return Ok(out);
            }
        }
    }
    Err(format!("fewer than {count} generic seeds at n = {n}"))
}

fn fixtures() -> Vec<(String, Metric)> {
    let mut v = vec![("four points".to_string(), four_points())];
    for n in 4..=7 {
        v.push((format!("dmax{n}"), gen_dmax(n).unwrap()));
    }
    for n in 5..=7 {
        v.push((format!("dmin{n}"), gen_dmin(n).unwrap()));
    }
    v
}

/// All spanning `n`-edge graphs whose components are odd-unicyclic.
fn candidates(n: usize) -> Vec<EdgeGraph> {
    let m = edge_count(n);
    let mut out = Vec::new();
    let mut bits: u64 = (1 << n) - 1;
    while bits < 1 << m {
        let g = EdgeGraph::from_bits(n, bits);
        if is_odd_unicyclic_spanning(&g) {
            out.push(g);
        }
        let c = bits & bits.wrapping_neg();
        let r = bits + c;
        bits = (((r ^ bits) >> 2) / c) | r;
    }
    out
}

fn even_binomials(n: usize) -> Vec<i64> {
    (0..=n / 2).map(|k| binom(n as i64, 2 * k as i64)).collect()
}

fn reference_examples() -> Outcome {
    let d = four_points();
    let s = subdivision(&d)?;
    eq("cells", s.cells.len(), 4)?;
    let b = split_interior_boundary(&all_faces(&s).map_err(e)?);
    eq("f", b.total.counts.clone(), vec![6, 13, 12, 4])?;
    eq("f boundary", b.boundary.counts.clone(), vec![6, 12, 8])?;
    eq("f interior", b.interior.counts.clone(), vec![0, 1, 4, 4])?;
    eq("h", h_from_f(&b.total).0, vec![1, 2, 1, 0, 0])?;
    eq("h boundary", h_from_f(&b.boundary).0, vec![1, 3, 3, 1])?;
    eq("h interior", h_from_f(&b.interior).0, vec![0, 0, 1, 2, 1])?;
    let tv = tightspan_vectors(&d, &s).map_err(e)?;
    eq("fT", tv.ft.clone(), vec![8, 8, 1])?;
    let x = crosscheck(&d).map_err(e)?;
    eq("primal f", x.primal_f, vec![8, 8, 1])?;
    Ok("4 cells, ball vectors and fT = (8,8,1) confirmed by the primal oracle".into())
}

fn dmax_attainment() -> Outcome {
    eq(
        "fT dmax5",
        tightspan_vectors(&gen_dmax(5).unwrap(), &subdivision(&gen_dmax(5).unwrap())?).map_err(e)?.ft,
        vec![16, 20, 5],
    )?;
    let mut timing = Duration::ZERO;
    for n in 4..=7 {
        let d = gen_dmax(n).unwrap();
        let t = Instant::now();
        let s = subdivision(&d)?;
        let tv = tightspan_vectors(&d, &s).map_err(e)?;
        if n == 7 {
            timing = t.elapsed();
        }
        eq(&format!("hT dmax{n}"), tv.ht.clone(), even_binomials(n))?;
        if n == 6 {
            eq("fT dmax6", tv.ft.clone(), vec![32, 48, 18, 1])?;
        }
        if n == 7 {
            let f: Vec<i64> = (0..=3).map(|k| f_bound(7, k).unwrap() as i64).collect();
            eq("fT dmax7", tv.ft.clone(), vec![64, 112, 56, 7])?;
            eq("F(7,k)", tv.ft.clone(), f)?;
        }
    }
    ensure(timing < Duration::from_secs(60), || format!("n = 7 took {timing:?}"))?;
    Ok(format!("fT and hT as expected for n = 4..7; n = 7 enumerated in {:.2}s", timing.as_secs_f64()))
}

fn dmin_attainment() -> Outcome {
    for (n, want) in [(5, vec![16, 20, 5]), (6, vec![31, 45, 15])] {
        let d = gen_dmin(n).unwrap();
        eq(&format!("fT dmin{n}"), tightspan_vectors(&d, &subdivision(&d)?).map_err(e)?.ft, want)?;
    }
    let mut tops = Vec::new();
    for n in 5..=7 {
        let d = gen_dmin(n).unwrap();
        let tv = tightspan_vectors(&d, &subdivision(&d)?).map_err(e)?;
        eq(&format!("dim T dmin{n}"), tv.dim(), n.div_ceil(3))?;
        eq(&format!("top faces dmin{n}"), tv.ft[tv.dim()] as u64, lower_bound_top(n).unwrap())?;
        tops.push(tv.ft[tv.dim()]);
    }
    Ok(format!("top-dimension counts {tops:?} equal the lower bound for n = 5,6,7"))
}

fn volume_identity() -> Outcome {
    let mut checked = 0;
    for n in 4..=8 {
        for d in [gen_dmax(n).unwrap(), gen_dmin(n).unwrap()] {
            let s = subdivision(&d)?;
            eq(&format!("volume n={n}"), s.volume_sum(), hypersimplex_volume(n))?;
            checked += 1;
        }
    }
    for n in [5, 6] {
        for (seed, d) in generic_randoms(n, 20)? {
            eq(&format!("volume n={n} seed {seed}"), subdivision(&d)?.volume_sum(), hypersimplex_volume(n))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} subdivisions have volume 2^(n-1) - n"))
}

fn ball_checks() -> Outcome {
    let mut metrics: Vec<(String, Metric)> = Vec::new();
    for n in 4..=8 {
        metrics.push((format!("dmax{n}"), gen_dmax(n).unwrap()));
        metrics.push((format!("dmin{n}"), gen_dmin(n).unwrap()));
    }
    for n in [5, 6] {
        for (seed, d) in generic_randoms(n, 20)? {
            metrics.push((format!("random n={n} seed {seed}"), d));
        }
    }
    for (name, d) in &metrics {
        let b = split_interior_boundary(&all_faces(&subdivision(d)?).map_err(e)?);
        let fail = |what: &str, w: Option<String>| format!("{name}: {what}: {}", w.unwrap_or_default());
        let v = check_dehn_sommerville(&b.boundary);
        ensure(v.pass, || fail("Dehn-Sommerville", v.witness.clone()))?;
        let v = check_ball_relations(&b);
        ensure(v.pass, || fail("ball relations", v.witness.clone()))?;
        let asff = check_asff(&b);
        let v = asff.verdict();
        ensure(v.pass, || fail("asff", v.witness.clone()))?;
        if name.starts_with("dmax") {
            ensure(asff.cap_attained(), || {
                format!("{name}: {} top interior faces, cap {}", asff.top_interior, asff.top_cap)
            })?;
        }
    }
    for n in 5..=7 {
        let v = check_inductive_step(&gen_dmax(n).unwrap()).map_err(e)?;
        ensure(v.pass, || format!("inductive step dmax{n}: {}", v.witness.clone().unwrap_or_default()))?;
    }
    Ok(format!("{} balls pass; the cap is attained by dmax; inductive step holds for dmax5..7", metrics.len()))
}

fn cell_structure() -> Outcome {
    for n in 5..=9 {
        let c = lambda_certificate(&gen_dmax(n).unwrap(), &cycle_opt_graph(n)).map_err(e)?;
        ensure(matches!(c, Certificate::Cell(_)), || format!("cycle graph is not a cell of dmax{n}: {c:?}"))?;
    }
    let mut metrics: Vec<(String, Metric)> = Vec::new();
    for n in 5..=7 {
        metrics.push((format!("dmax{n}"), gen_dmax(n).unwrap()));
        metrics.push((format!("dmin{n}"), gen_dmin(n).unwrap()));
    }
    for (seed, d) in generic_randoms(6, 20)? {
        metrics.push((format!("random n=6 seed {seed}"), d));
    }
    for (name, d) in &metrics {
        for b in 1..=3 {
            b11_classify(d, b).map_err(|err| format!("{name}, b = {b}: {err}"))?;
        }
    }
    Ok(format!("cycle graphs are cells for n = 5..9; structure holds on {} metrics for b = 1,2,3", metrics.len()))
}

fn oracle_equivalence() -> Outcome {
    let mut metrics = vec![("four points".to_string(), four_points())];
    for n in 4..=6 {
        metrics.push((format!("dmax{n}"), gen_dmax(n).unwrap()));
    }
    for n in 5..=6 {
        metrics.push((format!("dmin{n}"), gen_dmin(n).unwrap()));
    }
    for (seed, d) in generic_randoms(5, 20)? {
        metrics.push((format!("random n=5 seed {seed}"), d));
    }
    for (name, d) in &metrics {
        crosscheck(d).map_err(|err| format!("{name}: {err}"))?;
    }
    for (name, d) in &metrics[..4] {
        let n = d.n();
        let poset = bounded_faces(d).map_err(e)?;
        let alphas: [Vec<_>; 3] =
            [vec![int(1); n], (1..=n as i64).map(int).collect(), (1..=n as i64).map(|i| int(i * i + 1)).collect()];
        let hs = alphas
            .into_iter()
            .map(|a| h_by_outdegree_on(&poset, &OrientationSpec::new(a).map_err(e)?).map_err(e))
            .collect::<Result<Vec<_>, String>>()?;
        ensure(hs.windows(2).all(|w| w[0] == w[1]), || format!("{name}: objectives disagree: {hs:?}"))?;
    }
    Ok(format!("{} metrics agree face by face; out-degree h-vector is objective-independent", metrics.len()))
}

fn identities() -> Outcome {
    let v = identity_checks(12);
    ensure(v.pass, || v.witness.clone().unwrap_or_default())?;
    let v = recursion_checks(16);
    ensure(v.pass, || v.witness.clone().unwrap_or_default())?;
    for n in 2..=16 {
        eq(&format!("F({n},0)"), f_bound(n, 0).unwrap(), 1 << (n - 1))?;
    }
    Ok("binomial identities for n <= 12, recursions and h-sums for n <= 16".into())
}

fn method_agreement() -> Outcome {
    let mut metrics: Vec<(String, Metric)> = fixtures().into_iter().filter(|(_, d)| d.n() <= 6).collect();
    for n in [5, 6] {
        for (seed, d) in generic_randoms(n, 3)? {
            metrics.push((format!("random n={n} seed {seed}"), d));
        }
    }
    let mut compared = 0;
    for (name, d) in &metrics {
        for g in candidates(d.n()) {
            let lp = is_cell_lp(d, &g).map_err(|err| format!("{name} {g}: {err}"))?;
            let lambda = matches!(lambda_certificate(d, &g).map_err(e)?, Certificate::Cell(_));
            ensure(lp == lambda, || format!("{name} {g}: lp {lp}, lambda {lambda}"))?;
            if components(&g).components.len() == 1 {
                let odd = is_cell_oddpath(d, &g).map_err(e)?;
                ensure(lp == odd, || format!("{name} {g}: lp {lp}, odd path {odd}"))?;
            }
            compared += 1;
        }
    }
    let mut traversed = 0;
    for (name, d) in fixtures() {
        let s = subdivision(&d)?;
        let t = traverse_cells(&d, &seed_cell(&d).map_err(e)?.graph).map_err(e)?;
        ensure(s == t, || format!("{name}: traversal differs from enumeration"))?;
        traversed += 1;
    }
    Ok(format!("{compared} candidate graphs agree across cell tests; traversal matches on {traversed} fixtures"))
}

fn negative_controls() -> Outcome {
    let v = is_generic(&four_points_ideal()).map_err(e)?;
    ensure(!v.generic, || "ideal four points reported generic".into())?;
    let witness = v.witness.ok_or("no witness")?;
    let b = split_interior_boundary(&all_faces(&subdivision(&four_points())?).map_err(e)?);
    let mut f = b.boundary.counts.clone();
    f[1] += 1;
    ensure(!check_dehn_sommerville(&FVector::new(b.boundary.dim, &f)).pass, || "perturbed f passed".into())?;
    let mut h = h_from_f(&b.boundary).0;
    h[0] += 1;
    ensure(!check_symmetric(&HVector(h)).pass, || "perturbed h passed".into())?;
    let mut premise = None;
    for seed in 0..100 {
        let d = gen_random(7, seed, default_resolution(7)).map_err(e)?;
        match check_inductive_step(&d) {
            Err(Error::InapplicablePremise(_)) => {
                premise = Some(seed);
                break;
            }
            Ok(_) | Err(Error::NotATriangulation) => {}
            Err(err) => return Err(format!("seed {seed}: {err}")),
        }
    }
    let seed = premise.ok_or("no premise violation among 100 random metrics at n = 7")?;
    Ok(format!("witness `{witness}`; perturbed vectors rejected; premise fails for n = 7 seed {seed}"))
}

fn bounds_on_randoms() -> Result<(), String> {
    for n in [5, 6] {
        for (seed, d) in generic_randoms(n, 20)? {
            let tv = tightspan_vectors(&d, &subdivision(&d)?).map_err(e)?;
            verify_metric_against_bounds(&d, &tv).map_err(|err| format!("n={n} seed {seed}: {err}"))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("reference example reproduction", reference_examples),
        ("dmax attainment", dmax_attainment),
        ("dmin attainment", dmin_attainment),
        ("volume identity", volume_identity),
        ("ball-check suite", ball_checks),
        ("cell structure", cell_structure),
        ("oracle equivalence", oracle_equivalence),
        ("identities and recursions", identities),
        ("method agreement", method_agreement),
        ("negative controls", negative_controls),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS  {name} ({secs:.1}s): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    if let Err(why) = bounds_on_randoms() {
        failed += 1;
        println!("bounds on random metrics FAIL: {why}");
    }
    println!("{} of {} criteria passed", criteria.len() - failed.min(criteria.len()), criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
