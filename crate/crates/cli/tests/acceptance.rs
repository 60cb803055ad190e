// SPDX-License-Identifier: Apache-2.0

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p coarse --test acceptance`.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use coarse::config::{Preset, DEFAULT_SEED};
use coarse::experiments::{kanai_dichotomy, verify};
use coarse_core::boundary::{boundary_approx, uniform_perfectness_scan};
use coarse_core::cheeger::{
    cheeger_exact_window, cheeger_profile, dirichlet_lambda1, regular_tree_cheeger, ProfileMethod, Window,
};
use coarse_core::graph::{apsp, bfs, gen_family, DistMatrix, Family, Graph};
use coarse_core::hyperbolicity::{delta_four_point, delta_thin, gromov_table, ThinOptions};
use coarse_core::nets::{epsilon_net, qi_constants, sample_space, SpaceKind};
use coarse_core::pole::{default_buffer, pole_margin, pole_series, pole_verdict, ray_hull, theorem_bound};
use coarse_core::rng::XorShift64Star;
use coarse_core::{HalfInt, Rational};

/// Numerical tolerance of the Dirichlet eigenvalue solver.
const LAMBDA_TOL: f64 = 1e-10;
/// Slack allowed when comparing eigenvalues of nested windows.
const MONOTONE_SLACK: f64 = 1e-9;
/// Pair sample size of the quasi-isometry fit.
const QI_PAIRS: usize = 2000;

type Outcome = Result<String, String>;

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn family(spec: &str) -> Graph {
    gen_family(&spec.parse::<Family>().expect("family spec")).expect("family graph")
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

/// C1: trees have four-point and thin δ exactly 0.
fn tree_exactness() -> Outcome {
    let limit = Duration::from_secs(10);
    let mut slowest = Duration::ZERO;
    let mut cases = 0;
    for k in [3, 4] {
        for d in 1..=6 {
            let start = Instant::now();
            let g = family(&format!("tree:{k},{d}"));
            let dist = apsp(&g);
            let four = delta_four_point(&dist);
            let thin = delta_thin(&g, &dist, ThinOptions::default());
            let took = start.elapsed();
            check!(four.value == HalfInt::ZERO && four.exact, "tree:{k},{d}: four-point {:?}", four);
            check!(thin.value == 0 && thin.exact, "tree:{k},{d}: thin {} exact={}", thin.value, thin.exact);
            check!(took < limit, "tree:{k},{d} took {}", secs(took));
            slowest = slowest.max(took);
            cases += 1;
        }
    }
    Ok(format!("{cases} trees, slowest {}", secs(slowest)))
}

/// C2: δ of grid(n, n) strictly increases for n = 2..6.
fn grid_control() -> Outcome {
    let mut values = Vec::new();
    for n in 2..=6 {
        let w = delta_four_point(&apsp(&family(&format!("grid:{n},{n}"))));
        check!(w.exact, "grid:{n},{n} not exact");
        values.push(w.value);
    }
    check!(values.windows(2).all(|p| p[0] < p[1]), "not strictly increasing: {values:?}");
    Ok(format!("δ = {}", values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")))
}

/// Every nonempty subset; ties to the lexicographically smallest set.
fn naive_cheeger(g: &Graph, window: &[usize]) -> (Rational, Vec<usize>) {
    let m = window.len();
    let mut best: Option<(Rational, Vec<usize>)> = None;
    for mask in 1u32..(1 << m) {
        let set: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| window[i]).collect();
        let mut boundary: Vec<usize> = set
            .iter()
            .flat_map(|&v| g.neighbors(v).iter().copied())
            .filter(|w| !set.contains(w))
            .collect();
        boundary.sort_unstable();
        boundary.dedup();
        let ratio = Rational::new(boundary.len() as u64, set.len() as u64);
        if best.as_ref().is_none_or(|(r, s)| ratio < *r || (ratio == *r && set < *s)) {
            best = Some((ratio, set));
        }
    }
    best.expect("nonempty window")
}

/// Half the windows are arbitrary subsets, half are grown connected sets.
fn random_window(g: &Graph, size: usize, connected: bool, rng: &mut XorShift64Star) -> Vec<usize> {
    let interior: Vec<usize> = (0..g.n()).filter(|&v| !g.is_frontier(v)).collect();
    let size = size.min(interior.len());
    let mut members = vec![interior[rng.below(interior.len())]];
    while members.len() < size {
        let pick = if connected {
            let reach: Vec<usize> = members
                .iter()
                .flat_map(|&v| g.neighbors(v).iter().copied())
                .filter(|w| !g.is_frontier(*w) && !members.contains(w))
                .collect();
            if reach.is_empty() {
                break;
            }
            reach[rng.below(reach.len())]
        } else {
            interior[rng.below(interior.len())]
        };
        if !members.contains(&pick) {
            members.push(pick);
        }
    }
    members.sort_unstable();
    members
}

/// C3: exact window search agrees with all-subsets enumeration.
fn cheeger_oracle() -> Outcome {
    let specs = ["path:24", "cycle:18", "tree:3,4", "tree:4,3", "grid:6,6", "ladder:12", "comb:20,0.5"];
    let graphs: Vec<Graph> = specs.iter().map(|s| family(s)).collect();
    let mut rng = XorShift64Star::new(0xACCE_0003);
    let mut largest = 0;
    for i in 0..50 {
        let gi = i % graphs.len();
        let g = &graphs[gi];
        let members = random_window(g, 1 + rng.below(14), i % 2 == 0, &mut rng);
        largest = largest.max(members.len());
        let got = cheeger_exact_window(&Window::new(g, members.clone()).map_err(|e| e.to_string())?, members.len())
            .map_err(|e| e.to_string())?;
        let (ratio, set) = naive_cheeger(g, &members);
        check!(got.exact, "{} {members:?}: not flagged exact", specs[gi]);
        check!(got.ratio == ratio, "{} {members:?}: {} vs oracle {}", specs[gi], got.ratio, ratio);
        check!(got.set == set, "{} {members:?}: witness {:?} vs oracle {:?}", specs[gi], got.set, set);
    }
    Ok(format!("50 windows over {} families, largest |W| = {largest}", specs.len()))
}

/// C4: path profile is 2/|B(v, r)|; the ternary tree profile stays ≥ 1.
fn cheeger_profiles() -> Outcome {
    let g = family("path:60");
    let radii: Vec<u32> = (1..=25).collect();
    for p in cheeger_profile(&g, 30, &radii, ProfileMethod::Auto).map_err(|e| e.to_string())? {
        let k = p.window_size as u64;
        check!(k == 2 * u64::from(p.radius) + 1, "path r={}: window {k}", p.radius);
        check!(p.witness.ratio == Rational::new(2, k), "path r={}: {} ≠ 2/{k}", p.radius, p.witness.ratio);
    }
    let t = family("tree:3,6");
    let radii: Vec<u32> = (1..=5).collect();
    let mut least = None::<Rational>;
    for p in cheeger_profile(&t, 0, &radii, ProfileMethod::Auto).map_err(|e| e.to_string())? {
        check!(p.witness.ratio >= Rational::from_integer(1), "tree r={}: {}", p.radius, p.witness.ratio);
        least = Some(least.map_or(p.witness.ratio, |l| l.min(p.witness.ratio)));
    }
    Ok(format!("path:60 r=1..25 all 2/(2r+1); tree:3,6 min ratio {}", least.expect("radii")))
}

/// C5: two-point boundary has no finite S*; ternary tree boundaries give S* = 2.
fn boundary_scanner() -> Outcome {
    let p = family("path:20");
    let b = boundary_approx(&apsp(&p), 10, 6, 2.0).map_err(|e| e.to_string())?;
    check!(b.representatives.len() == 2, "path boundary has {} points", b.representatives.len());
    let scan = uniform_perfectness_scan(&b.visual, None).map_err(|e| e.to_string())?;
    check!(scan.s_star.is_infinite() && !scan.uniformly_perfect, "path S* = {}", scan.s_star);
    for r in 4..=6 {
        let t = family(&format!("tree:3,{r}"));
        let b = boundary_approx(&apsp(&t), 0, r, 2.0).map_err(|e| e.to_string())?;
        let scan = uniform_perfectness_scan(&b.visual, None).map_err(|e| e.to_string())?;
        check!(scan.s_star == 2.0 && scan.uniformly_perfect, "tree:3,{r}: S* = {}", scan.s_star);
    }
    Ok("path S* = inf (flagged); tree:3,{4,5,6} S* = 2".into())
}

/// Random spanning tree plus `extra` chords.
fn random_graph(n: usize, extra: usize, rng: &mut XorShift64Star) -> Graph {
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.below(v), v)).collect();
    while edges.len() < n - 1 + extra {
        let (a, b) = (rng.below(n), rng.below(n));
        let e = (a.min(b), a.max(b));
        if a != b && !edges.contains(&e) {
            edges.push(e);
        }
    }
    Graph::from_edges(n, &edges).expect("connected by construction")
}

/// C6: |(x|x′)_o − (x|x′)_{o′}| ≤ d(o, o′) for every x, x′, o, o′.
fn base_point_stability() -> Outcome {
    let mut rng = XorShift64Star::new(0xACCE_0006);
    let mut checked = 0u64;
    for _ in 0..10 {
        let n = 20 + rng.below(41);
        let g = random_graph(n, rng.below(n), &mut rng);
        let dist = apsp(&g);
        let tables: Vec<_> = (0..n).map(|o| gromov_table(&dist, o)).collect();
        for o in 0..n {
            for p in o + 1..n {
                let bound = 2 * i64::from(dist.get(o, p));
                for x in 0..n {
                    for y in x..n {
                        let a = i64::from(tables[o].get(x, y).doubled());
                        let b = i64::from(tables[p].get(x, y).doubled());
                        check!((a - b).abs() <= bound, "n={n} x={x} x'={y} o={o} o'={p}: {a}/2 vs {b}/2");
                        checked += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{checked} (x, x′, o, o′) cases on 10 graphs"))
}

/// Recomputes a hull and its margin from the distance matrix alone.
fn certify_hull(g: &Graph, dist: &DistMatrix, v: usize, r: u32) -> Result<u32, String> {
    let hull = ray_hull(g, v, r).map_err(|e| e.to_string())?;
    let sphere = dist.sphere(v, r);
    for w in 0..g.n() {
        let dv = dist.get(v, w);
        let on_ray = dv <= r && sphere.iter().any(|&s| dv + dist.get(w, s) == r);
        check!(hull.contains(w) == on_ray, "hull membership of {w} at v={v} r={r}");
    }
    let buffer = default_buffer(r);
    let margin = pole_margin(g, &hull, buffer).map_err(|e| e.to_string())?;
    let oracle = (0..g.n())
        .filter(|&w| dist.get(v, w) <= r - buffer)
        .map(|w| hull.hull.iter().map(|&k| dist.get(w, k)).min().expect("nonempty hull"))
        .max()
        .unwrap_or(0);
    check!(margin == oracle, "margin {margin} vs oracle {oracle} at v={v} r={r}");
    Ok(margin)
}

fn certified_margins(spec: &str, v: usize, radii: &[u32]) -> Result<Vec<u32>, String> {
    let g = family(spec);
    let dist = apsp(&g);
    let series = pole_series(&g, v, radii, None).map_err(|e| e.to_string())?;
    let mut margins = Vec::new();
    for &(r, m) in &series {
        check!(certify_hull(&g, &dist, v, r)? == m, "{spec}: series disagrees at r={r}");
        margins.push(m);
    }
    Ok(margins)
}

/// C7: tree margin ≡ 0, ladder stabilizes at ≤ 1, comb strictly increases.
fn pole_margins() -> Outcome {
    let tree = certified_margins("tree:3,6", 0, &[2, 3, 4, 5, 6])?;
    check!(tree.iter().all(|&m| m == 0), "tree margins {tree:?}");
    let radii = [4, 5, 6, 7, 8, 9, 10];
    let ladder = certified_margins("ladder:30", 15, &radii)?;
    let series: Vec<(u32, u32)> = radii.iter().copied().zip(ladder.iter().copied()).collect();
    let verdict = pole_verdict(&series).map_err(|e| e.to_string())?;
    check!(verdict.pole_like && verdict.m_estimate.is_some_and(|m| m <= 1), "ladder margins {ladder:?}");
    let comb = certified_margins("comb:40,0.5", 0, &[12, 16, 20, 24])?;
    check!(comb.windows(2).all(|w| w[0] < w[1]), "comb margins {comb:?}");
    Ok(format!("tree {tree:?}, ladder {ladder:?}, comb {comb:?}; hulls certified"))
}

/// C8: the tree's pole constant 0 sits below M_bound = 1.
fn theorem_bound_check() -> Outcome {
    let unit = theorem_bound(HalfInt::ZERO, Rational::from_integer(1), 3).map_err(|e| e.to_string())?;
    check!(unit.m_bound == Rational::from_integer(1), "theorem_bound(0, 1, 3) = {}", unit.m_bound);
    let g = family("tree:3,6");
    let dist = apsp(&g);
    let thin = delta_thin(&g, &dist, ThinOptions::default());
    check!(thin.exact, "tree δ_th not exact");
    let h = regular_tree_cheeger(&g).ok_or("tree:3,6 not recognized as regular")?;
    let mu = g.max_degree() as u64;
    check!(h == Rational::from_integer(1) && mu == 3, "h = {h}, μ = {mu}");
    let bound = theorem_bound(HalfInt::from_int(thin.value), h, mu).map_err(|e| e.to_string())?;
    let series = pole_series(&g, 0, &[3, 4, 5, 6], None).map_err(|e| e.to_string())?;
    let m = pole_verdict(&series).map_err(|e| e.to_string())?.m_estimate.ok_or("tree not pole-like")?;
    check!(bound.m_bound == Rational::from_integer(1), "M_bound = {}", bound.m_bound);
    check!(Rational::from_integer(u64::from(m)) <= bound.m_bound, "M = {m} > {}", bound.m_bound);
    Ok(format!("δ_th = {}, h = {h}, μ = {mu}: M = {m} ≤ M_bound = {}", thin.value, bound.m_bound))
}

/// C9: equivalence column all true, through the library and the binary.
fn main_equivalence() -> Outcome {
    let report = verify(Preset::Equivalence, DEFAULT_SEED).map_err(|e| e.to_string())?;
    check!(report.rows.len() == 5, "{} rows", report.rows.len());
    for row in &report.rows {
        check!(row.equivalence, "{}: equivalence false", row.family);
        check!(row.bound_holds != Some(false), "{}: M exceeds M_bound", row.family);
    }
    let out = Command::new(env!("CARGO_BIN_EXE_coarse"))
        .args(["verify-theorem", "--preset", "equivalence"])
        .output()
        .map_err(|e| e.to_string())?;
    check!(out.status.success(), "binary exit {:?}", out.status.code());
    let cells: Vec<String> = report
        .rows
        .iter()
        .map(|r| {
            let b = |x: bool| if x { '+' } else { '-' };
            format!("{}[{}{}|{}{}]", r.family, b(r.hyperbolic), b(r.cheeger_positive), b(r.uniformly_perfect), b(r.pole_like))
        })
        .collect();
    Ok(cells.join(" "))
}

/// C10: hyperbolic nets keep their ratio, Euclidean ones lose it.
fn kanai() -> Outcome {
    let k = kanai_dichotomy().map_err(|e| e.to_string())?;
    check!(k.rows.len() == 12, "{} rows", k.rows.len());
    for row in &k.rows {
        check!(row.factor_ok, "seed {} R={}: {} vs {}", row.seed, row.radius, row.hyperbolic_ratio, row.euclidean_ratio);
    }
    check!(k.euclidean_monotone, "Euclidean ratios not decreasing");
    check!(k.passed, "report not passed");
    Ok(format!("12 rows, ε = {}, factor ≥ 2, Euclidean decreasing", k.epsilon))
}

/// C11: λ1 > 0, domain monotonicity on nested balls, 2×2 closed form.
fn dirichlet() -> Outcome {
    let cases: [(&str, usize, u32); 10] = [
        ("path:30", 15, 2),
        ("path:30", 15, 6),
        ("cycle:24", 0, 4),
        ("tree:3,5", 0, 1),
        ("tree:3,5", 0, 3),
        ("grid:9,9", 40, 1),
        ("grid:9,9", 40, 2),
        ("ladder:20", 10, 3),
        ("comb:30,0.5", 0, 4),
        ("comb:30,0.5", 0, 8),
    ];
    let mut windows = 0;
    for (spec, v, r) in cases {
        let g = family(spec);
        let outer = dirichlet_lambda1(&Window::ball(&g, v, r + 1).map_err(|e| e.to_string())?, LAMBDA_TOL)
            .map_err(|e| e.to_string())?;
        let inner = dirichlet_lambda1(&Window::ball(&g, v, r).map_err(|e| e.to_string())?, LAMBDA_TOL)
            .map_err(|e| e.to_string())?;
        windows += 2;
        check!(inner.lambda1 > 0.0 && outer.lambda1 > 0.0, "{spec} v={v} r={r}: λ1 not positive");
        check!(
            inner.lambda1 >= outer.lambda1 - MONOTONE_SLACK,
            "{spec} v={v}: λ1(B_{r}) = {} < λ1(B_{}) = {}",
            inner.lambda1,
            r + 1,
            outer.lambda1
        );
    }
    let g = family("path:4");
    let l = dirichlet_lambda1(&Window::new(&g, vec![1, 2]).map_err(|e| e.to_string())?, LAMBDA_TOL)
        .map_err(|e| e.to_string())?;
    check!((l.lambda1 - 1.0).abs() <= 1e-10, "2×2 case λ1 = {}", l.lambda1);
    Ok(format!("{windows} windows positive, 10 nested pairs monotone, 2×2 λ1 = {:.12}", l.lambda1))
}

/// C12: every sampled pair satisfies the reported (α, β); ε_full ≤ ε.
fn qi_certificate() -> Outcome {
    let eps = 0.3;
    let cloud = sample_space(SpaceKind::Poincare, 4.0, 6000, 12).map_err(|e| e.to_string())?;
    let net = epsilon_net(&cloud, eps).map_err(|e| e.to_string())?;
    let qi = qi_constants(&cloud, &net, QI_PAIRS, 12).map_err(|e| e.to_string())?;
    check!(qi.holds(), "holds() false");
    check!(qi.epsilon_full <= eps && net.covering_radius <= eps, "ε_full = {}", qi.epsilon_full);
    for p in &qi.pairs {
        let d_x = cloud.distance(net.selected[p.u], net.selected[p.v]);
        let d_y = eps * f64::from(bfs(&net.graph, p.u)[p.v]);
        check!(d_x == p.d_x && d_y == p.d_y, "pair ({}, {}) distances differ", p.u, p.v);
        check!(
            d_x / qi.alpha - qi.beta <= d_y && d_y <= qi.alpha * d_x + qi.beta,
            "pair ({}, {}) violates the bounds",
            p.u,
            p.v
        );
    }
    Ok(format!(
        "{} pairs, {} net vertices, α = {:.3}, β = {:.3}, ε_full = {:.3}",
        qi.pairs.len(),
        net.selected.len(),
        qi.alpha,
        qi.beta,
        qi.epsilon_full
    ))
}

struct Criterion {
    id: u8,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let min = |m: u64| Duration::from_secs(60 * m);
    let s = Duration::from_secs;
    let criteria = [
        Criterion { id: 1, name: "tree exactness", limit: s(120), run: tree_exactness },
        Criterion { id: 2, name: "non-hyperbolic control", limit: s(60), run: grid_control },
        Criterion { id: 3, name: "cheeger oracle equivalence", limit: s(60), run: cheeger_oracle },
        Criterion { id: 4, name: "cheeger profiles", limit: s(30), run: cheeger_profiles },
        Criterion { id: 5, name: "boundary scanner", limit: s(10), run: boundary_scanner },
        Criterion { id: 6, name: "base-point stability", limit: s(10), run: base_point_stability },
        Criterion { id: 7, name: "pole margins", limit: s(30), run: pole_margins },
        Criterion { id: 8, name: "theorem-bound corroboration", limit: s(10), run: theorem_bound_check },
        Criterion { id: 9, name: "main equivalence", limit: min(5), run: main_equivalence },
        Criterion { id: 10, name: "kanai dichotomy", limit: min(5), run: kanai },
        Criterion { id: 11, name: "dirichlet spectral checks", limit: s(10), run: dirichlet },
        Criterion { id: 12, name: "qi certificate", limit: s(60), run: qi_certificate },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(_) if took > c.limit => Err(format!("over the {} limit", secs(c.limit))),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(e) => ("FAIL", e),
        };
        println!("{tag} C{:<2} {:<28} {:>8} / {:<8} {detail}", c.id, c.name, secs(took), secs(c.limit));
        failed += usize::from(outcome.is_err());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
