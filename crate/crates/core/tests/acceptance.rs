//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p equilex --test acceptance`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use equilex::bounds::{self, BoundSource};
use equilex::certify::{self, DEFAULT_SVD_TOL};
use equilex::construct;
use equilex::hadamard::{normalize_first_column, reduced_rows, sylvester, HadamardMatrix};
use equilex::lp_core::{kronecker, lp_dist, lp_norm, scale_set};
use equilex::quadsolve;
use equilex::search::{self, SearchConfig};
use equilex::verify::check_equilateral;
use equilex::{LpSpace, Point, PointSet};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($fmt)+));
        }
    };
}

fn log2_3() -> f64 {
    3f64.ln() / 2f64.ln()
}

fn log2_5_2() -> f64 {
    2.5f64.ln() / 2f64.ln()
}

/// Reference `||x||_p` with `powf`, independent of the library kernel.
fn norm_ref(x: &[f64], p: f64) -> f64 {
    x.iter().map(|t| t.abs().powf(p)).sum::<f64>().powf(1.0 / p)
}

fn dist_ref(x: &[f64], y: &[f64], p: f64) -> f64 {
    let diff: Vec<f64> = x.iter().zip(y).map(|(a, b)| a - b).collect();
    norm_ref(&diff, p)
}

/// Block parameter by scanning the admissible intervals.
fn k_ref(p: f64) -> u32 {
    (1..60)
        .find(|&k| p <= 2.0 + (1.0 - 2f64.powi(-(k as i32) - 1)).log2() + 1e-12)
        .unwrap()
}

fn theorem2_count_ref(k: u32, d: usize) -> usize {
    let two = 1usize << (k + 1);
    (two * d) / (two - 1)
}

// ---------------------------------------------------------------------------

fn c1_theorem2_reproduction() -> Outcome {
    let p = log2_3();
    let set = construct::theorem2(p, 6).map_err(|e| e.to_string())?;
    ensure!(set.len() == 8 && set.dim() == 6, "got {} points in dim {}", set.len(), set.dim());
    let target = 2f64.powf(1.0 / p);
    let mut worst_norm = 0.0f64;
    let mut worst_dist = 0.0f64;
    for (i, x) in set.points().iter().enumerate() {
        worst_norm = worst_norm.max((norm_ref(x, p) - 1.0).abs());
        for y in &set.points()[i + 1..] {
            worst_dist = worst_dist.max((dist_ref(x, y, p) - target).abs() / target);
        }
    }
    ensure!(worst_norm <= 1e-9, "unit-norm error {worst_norm:e}");
    ensure!(worst_dist <= 1e-9, "distance error {worst_dist:e}");
    Ok(format!("8 points in l_p^6, norm err {worst_norm:.1e}, dist rel err {worst_dist:.1e}"))
}

fn c2_theorem2_cardinality() -> Outcome {
    let ps = [1.1, 1.3, 1.5, log2_3(), 1.7, 1.9];
    let mut checked = 0;
    for &p in &ps {
        let k = k_ref(p);
        let block = (1usize << (k + 1)) - 1;
        for d in 3..=64usize {
            if d < block {
                ensure!(construct::theorem2(p, d).is_err(), "p={p} d={d} should need d >= {block}");
                continue;
            }
            let set = construct::theorem2(p, d).map_err(|e| format!("p={p} d={d}: {e}"))?;
            let expected = theorem2_count_ref(k, d);
            ensure!(set.len() == expected, "p={p} d={d}: {} points, expected {expected}", set.len());
            let r = check_equilateral(&set, 1e-9, true).map_err(|e| e.to_string())?;
            ensure!(r.pass, "p={p} d={d}: verifier failed {r:?}");
            checked += 1;
        }
    }
    Ok(format!("{checked} (p, d) pairs"))
}

fn c3_theorem3_reproduction() -> Outcome {
    let mut worst = 0.0f64;
    for &p in &[1.05, 1.2, log2_5_2()] {
        let set = construct::theorem3(p).map_err(|e| e.to_string())?;
        ensure!(set.len() == 6 && set.dim() == 4, "p={p}: wrong shape");
        for (i, x) in set.points().iter().enumerate() {
            for y in &set.points()[i + 1..] {
                worst = worst.max((dist_ref(x, y, p) - 2.0).abs() / 2.0);
            }
        }
    }
    ensure!(worst <= 1e-10, "distance rel err {worst:e}");
    Ok(format!("max distance rel err {worst:.1e}"))
}

fn c4_planar_solver() -> Outcome {
    let mut worst_unit = 0.0f64;
    let mut worst_side = 0.0f64;
    for i in 1..=9 {
        let p = 1.0 + i as f64 / 10.0;
        let (lo, hi) = quadsolve::lambda_interval(p);
        for j in 0..9 {
            let lambda = lo + (hi - lo) * j as f64 / 8.0;
            let sol = quadsolve::solve(p, lambda).map_err(|e| format!("p={p} lambda={lambda}: {e}"))?;
            let (u, v) = (&sol.u, &sol.v);
            worst_unit = worst_unit.max((norm_ref(u, p) - 1.0).abs()).max((norm_ref(v, p) - 1.0).abs());
            let plus = norm_ref(&[u[0] + v[0], u[1] + v[1]], p);
            let minus = norm_ref(&[u[0] - v[0], u[1] - v[1]], p);
            worst_side = worst_side.max((plus - lambda).abs()).max((minus - lambda).abs());
            if j == 8 {
                ensure!(u.coords() == [1.0, 0.0] && v.coords() == [0.0, 1.0], "p={p}: top endpoint not closed form");
            }
            if j == 0 {
                let c = 0.5f64.powf(1.0 / p);
                ensure!(u.coords() == [c, c] && v.coords() == [-c, c], "p={p}: bottom endpoint not closed form");
            }
        }
    }
    ensure!(worst_unit < 1e-12, "unit-norm error {worst_unit:e}");
    ensure!(worst_side < 1e-10, "side error {worst_side:e}");
    Ok(format!("81 cases, unit err {worst_unit:.1e}, side err {worst_side:.1e}"))
}

fn c5_hadamard_exactness() -> Outcome {
    for n in 0..=10u32 {
        let h = sylvester(n).map_err(|e| e.to_string())?;
        let k = h.order();
        // schoolbook product H Hᵀ in i32
        let rows: Vec<&[i8]> = h.rows().collect();
        for i in 0..k {
            for j in 0..k {
                let dot: i32 = rows[i].iter().zip(rows[j]).map(|(&a, &b)| i32::from(a) * i32::from(b)).sum();
                let expected = if i == j { k as i32 } else { 0 };
                ensure!(dot == expected, "n={n}: (H Hᵀ)[{i}][{j}] = {dot}");
            }
        }
    }
    let mut pairs = 0usize;
    for n in 1..=8u32 {
        let w = reduced_rows(&sylvester(n).unwrap()).map_err(|e| e.to_string())?;
        let half = 1usize << (n - 1);
        for i in 0..w.rows().len() {
            for j in (i + 1)..w.rows().len() {
                let differ = w.rows()[i].iter().zip(&w.rows()[j]).filter(|(a, b)| a != b).count();
                ensure!(differ == half, "n={n}: rows {i},{j} differ in {differ}");
                pairs += 1;
            }
        }
    }
    Ok(format!("n <= 10 exact; {pairs} reduced-row pairs"))
}

fn c6_rank_certificate() -> Outcome {
    let mut summary = Vec::new();
    for &p in &[4.0, 6.0, 8.0] {
        let k_expected = match p as u32 {
            4 => 2,
            6 => 2,
            8 => 4,
            _ => unreachable!(),
        };
        let mut min_ratio = f64::INFINITY;
        for d in 1..=8usize {
            let simplex = construct::standard_simplex(p, d).map_err(|e| e.to_string())?;
            let unit = scale_set(&simplex, 1.0 / simplex.claimed_scale().unwrap()).unwrap();
            let cert = certify::certify_rank(&unit, p, DEFAULT_SVD_TOL).map_err(|e| e.to_string())?;
            let family = d + 1 + 1 + k_expected * d;
            ensure!(cert.k_used as usize == k_expected, "p={p}: k = {}", cert.k_used);
            ensure!(cert.family_size == family, "p={p} d={d}: family {}", cert.family_size);
            ensure!(cert.certified && cert.numerical_rank == family, "p={p} d={d}: rank {} of {family}", cert.numerical_rank);
            ensure!(cert.singular_value_gap > 1e6, "p={p} d={d}: gap {}", cert.singular_value_gap);
            let bound = bounds::report(p, d).map_err(|e| e.to_string())?;
            let theorem1 = bound.upper(BoundSource::Theorem1).ok_or("missing theorem1 bound")?;
            ensure!(cert.implied_bound as u64 == theorem1, "p={p} d={d}: implied {} vs bound {theorem1}", cert.implied_bound);
            if p == 4.0 {
                ensure!(cert.numerical_rank == 3 * d + 2, "p=4 d={d}: rank {}", cert.numerical_rank);
                ensure!(cert.implied_bound == d + 1 && bound.exact && bound.value == Some(d as u64 + 1), "p=4 d={d}: not exact d+1");
            }
            let sv = &cert.singular_values;
            min_ratio = min_ratio.min(sv[sv.len() - 1] / sv[0]);
        }
        summary.push(format!("p={p}: min sigma ratio {min_ratio:.1e}"));
    }
    Ok(summary.join(", "))
}

fn c7_bounds_coherence() -> Outcome {
    let mut ps: Vec<f64> = vec![1.1, 1.3, 1.5, log2_3(), 1.7, 1.9];
    ps.extend([4.0, 6.0, 8.0, 10.0]);
    let mut count = 0;
    for &p in &ps {
        for d in 1..=64usize {
            let r = bounds::report(p, d).map_err(|e| e.to_string())?;
            ensure!(r.best_lower <= r.best_upper, "p={p} d={d}: {} > {}", r.best_lower, r.best_upper);
            if p == 4.0 {
                ensure!(r.exact && r.value == Some(d as u64 + 1), "p=4 d={d} not exact d+1");
            }
            if d == 2 {
                ensure!(r.exact && r.value == Some(3), "p={p} d=2 not exact 3");
            }
            if p < 2.0 {
                let k = k_ref(p);
                let beats = r.lower(BoundSource::Theorem2).is_some_and(|v| v > d as u64 + 1);
                let threshold = (1usize << (k + 2)) - 2;
                ensure!(beats == (d >= threshold), "p={p} d={d}: theorem2 beats simplex = {beats}");
            }
            count += 1;
        }
    }
    Ok(format!("{count} reports"))
}

fn random_config(rng: &mut ChaCha8Rng, p: f64, n: usize, d: usize) -> PointSet {
    let pts = (0..n)
        .map(|_| Point::new((0..d).map(|_| rng.gen_range(-1.0..1.0)).collect()))
        .collect();
    PointSet::new(LpSpace::new(p, d).unwrap(), pts, None).unwrap()
}

fn c8_gradient() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let h = 1e-6;
    let mut worst = 0.0f64;
    for &p in &[1.3, 1.7, 4.0] {
        for _ in 0..10 {
            let (n, d) = (rng.gen_range(3..7), rng.gen_range(2..5));
            let set = random_config(&mut rng, p, n, d);
            let grad = search::energy_gradient(&set);
            let mut fd = Vec::with_capacity(grad.len());
            for i in 0..n {
                for c in 0..d {
                    let shifted = |delta: f64| {
                        let mut pts = set.points().to_vec();
                        let mut x = pts[i].to_vec();
                        x[c] += delta;
                        pts[i] = Point::new(x);
                        search::energy(&PointSet::new(set.space(), pts, None).unwrap()).unwrap()
                    };
                    fd.push((shifted(h) - shifted(-h)) / (2.0 * h));
                }
            }
            let diff: f64 = fd.iter().zip(&grad).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
            let scale: f64 = grad.iter().map(|g| g * g).sum::<f64>().sqrt();
            let rel = diff / scale;
            worst = worst.max(rel);
            ensure!(rel < 1e-5, "p={p} n={n} d={d}: relative error {rel:e}");
        }
    }
    Ok(format!("30 configurations, worst relative error {worst:.1e}"))
}

fn c9_search() -> Outcome {
    let cfg = SearchConfig::new(LpSpace::new(1.5, 3).unwrap(), 4, 50, 20240601);
    let a = search::run_search(&cfg).map_err(|e| e.to_string())?;
    ensure!(a.best_energy < 1e-12, "p=1.5 d=3 n=4: energy {:e}", a.best_energy);
    let report = a.verifier_report.as_ref().ok_or("degenerate best configuration")?;
    ensure!(report.pass && report.tolerance == 1e-6, "p=1.5 d=3 n=4: verifier failed {report:?}");

    let cfg = SearchConfig::new(LpSpace::new(1.2, 4).unwrap(), 6, 200, 20240601);
    let b = search::run_search(&cfg).map_err(|e| e.to_string())?;
    ensure!(b.best_energy < 1e-10, "p=1.2 d=4 n=6: energy {:e}", b.best_energy);

    // open cases, reported only
    let mut explore = Vec::new();
    for &(p, d) in &[(1.3, 3usize), (1.3, 5usize)] {
        let mut cfg = SearchConfig::new(LpSpace::new(p, d).unwrap(), d + 2, 20, 7);
        cfg.max_iters = 5000;
        let r = search::run_search(&cfg).map_err(|e| e.to_string())?;
        explore.push(format!("[open p={p} d={d} n={}: best energy {:.3e}]", d + 2, r.best_energy));
    }
    Ok(format!(
        "energies {:.1e} and {:.1e}; {}",
        a.best_energy,
        b.best_energy,
        explore.join(" ")
    ))
}

fn c10_properties() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut checks = 0usize;

    // lp_core
    for _ in 0..500 {
        let p = rng.gen_range(1.01..9.0);
        let d = rng.gen_range(1..8);
        let space = LpSpace::new(p, d).unwrap();
        let v = |rng: &mut ChaCha8Rng| (0..d).map(|_| rng.gen_range(-5.0..5.0)).collect::<Vec<f64>>();
        let (x, y, z) = (v(&mut rng), v(&mut rng), v(&mut rng));
        let c: f64 = rng.gen_range(-20.0..20.0);
        let cx: Vec<f64> = x.iter().map(|t| c * t).collect();
        let nx = lp_norm(&x, &space).unwrap();
        ensure!((lp_norm(&cx, &space).unwrap() - c.abs() * nx).abs() <= 1e-12 * c.abs() * nx, "homogeneity");
        let (xz, xy, yz) = (lp_dist(&x, &z, &space).unwrap(), lp_dist(&x, &y, &space).unwrap(), lp_dist(&y, &z, &space).unwrap());
        ensure!(xz <= (xy + yz) * (1.0 + 1e-14), "triangle inequality");
        let kr = kronecker(&x, &y);
        let lhs: f64 = kr.iter().map(|t| t.abs().powf(p)).sum();
        let rhs = x.iter().map(|t| t.abs().powf(p)).sum::<f64>() * y.iter().map(|t| t.abs().powf(p)).sum::<f64>();
        ensure!((lhs - rhs).abs() <= 1e-12 * rhs, "kronecker multiplicativity");
        let p2 = p + rng.gen_range(0.0..5.0);
        ensure!(lp_norm(&x, &LpSpace::new(p2, d).unwrap()).unwrap() <= nx * (1.0 + 1e-14), "monotone in p");
        checks += 4;
    }

    // hadamard
    for n in 0..=8 {
        let mut h = sylvester(n).unwrap();
        for i in 0..h.order() {
            if rng.gen_bool(0.5) {
                h.negate_row(i);
            }
        }
        let once = normalize_first_column(&h).unwrap();
        ensure!(normalize_first_column(&once).unwrap() == once, "normalization idempotent");
        ensure!(HadamardMatrix::parse(&once.to_text()).unwrap() == once, "text format");
        checks += 2;
    }

    // quadsolve
    for _ in 0..50 {
        let p = rng.gen_range(1.01..1.99);
        let (s_lo, s_hi) = quadsolve::s_interval(p);
        let s = rng.gen_range(s_lo..=s_hi);
        let lambda = quadsolve::lambda_of(s, p).unwrap();
        let sol = quadsolve::solve(p, lambda).unwrap();
        let err = (quadsolve::lambda_of(sol.s, p).unwrap() - lambda).abs();
        ensure!(err < 1e-11, "solve round trip {err:e}");
        let (lam_lo, lam_hi) = quadsolve::lambda_interval(p);
        ensure!((quadsolve::lambda_of(s_lo, p).unwrap() - lam_lo).abs() < 1e-12, "lower endpoint");
        ensure!((quadsolve::lambda_of(1.0, p).unwrap() - lam_hi).abs() < 1e-12, "upper endpoint");
        let theta: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let raw = [theta.cos(), theta.sin()];
        let nr = norm_ref(&raw, p);
        let u = [raw[0] / nr, raw[1] / nr];
        let v = [-u[1], u[0]];
        let plus = norm_ref(&[u[0] + v[0], u[1] + v[1]], p);
        let minus = norm_ref(&[u[0] - v[0], u[1] - v[1]], p);
        ensure!((plus - minus).abs() <= 1e-14 * plus, "rotation identity");
        checks += 4;
    }

    // construct
    for &p in &[1.1, 1.3, 1.5, 1.7, 1.9] {
        let k = k_ref(p);
        for d in ((1usize << (k + 1)) - 1)..=64 {
            let set = construct::theorem2(p, d).unwrap();
            ensure!(set.len() == theorem2_count_ref(k, d), "theorem2 size p={p} d={d}");
            let base_dim = (1usize << (k + 1)) - 1;
            ensure!(set.len() == d + d / base_dim, "compose size p={p} d={d}");
            checks += 2;
        }
        let h = sylvester(k).unwrap();
        let (params, raw) = construct::prop2_raw(p, &h).unwrap();
        let target = 2f64.powf(p - 1.0) * params.k as f64;
        for (i, x) in raw.iter().enumerate() {
            for y in &raw[i + 1..] {
                let dp: f64 = x.iter().zip(y.iter()).map(|(a, b)| (a - b).abs().powf(p)).sum();
                ensure!((dp - target).abs() <= 1e-9 * target, "raw p-th power distance p={p}");
                checks += 1;
            }
        }
    }

    // verify
    let simplex = construct::standard_simplex(1.7, 6).unwrap();
    let base = check_equilateral(&simplex, 1e-9, false).unwrap();
    for _ in 0..20 {
        let mut pts = simplex.clone().into_points();
        for i in (1..pts.len()).rev() {
            pts.swap(i, rng.gen_range(0..=i));
        }
        let c = rng.gen_range(0.1..10.0);
        let moved = scale_set(&PointSet::new(simplex.space(), pts, None).unwrap(), c).unwrap();
        let r = check_equilateral(&moved, 1e-9, false).unwrap();
        ensure!((r.max_rel_dev - base.max_rel_dev).abs() < 1e-12, "scale/permutation invariance");
        ensure!((r.scale_estimate - c * base.scale_estimate).abs() < 1e-12 * c, "scale estimate linear");
        checks += 2;
    }

    // certify
    for &(p, d) in &[(4.0, 3usize), (6.0, 2), (8.0, 2)] {
        let fam = certify::family(&construct::standard_simplex(p, d).unwrap(), p).unwrap();
        let pe = p as u32;
        for _ in 0..20 {
            let x: Vec<f64> = (0..d).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let basis = certify::monomial_values(&x, pe);
            for (row, a) in fam.matrix.row_iter().zip(&fam.points) {
                let via: f64 = row.iter().zip(&basis).map(|(c, b)| c * b).sum();
                let direct = -1.0 + x.iter().zip(a.iter()).map(|(xi, ai)| (xi - ai).powi(pe as i32)).sum::<f64>();
                ensure!((via - direct).abs() <= 1e-9 * direct.abs().max(1.0), "polynomial evaluation p={p}");
                checks += 1;
            }
        }
        for (i, a) in fam.points.iter().enumerate() {
            for (j, b) in fam.points.iter().enumerate() {
                let v = -1.0 + a.iter().zip(b.iter()).map(|(x, y)| (x - y).powi(pe as i32)).sum::<f64>();
                let expected = if i == j { -1.0 } else { 0.0 };
                ensure!((v - expected).abs() < 1e-9, "P_a(b) p={p}");
                checks += 1;
            }
        }
    }

    // bounds
    for &p in &[1.1, 1.2, 1.3, 1.4, 1.5, 1.6, 1.7, 1.8, 1.9] {
        for d in 1..64 {
            ensure!(
                bounds::report(p, d).unwrap().best_lower <= bounds::report(p, d + 1).unwrap().best_lower,
                "best_lower monotone p={p} d={d}"
            );
            checks += 1;
        }
    }
    for p in (4..=20).step_by(2) {
        for d in 1..64 {
            let r = bounds::report(p as f64, d).unwrap();
            ensure!(r.upper(BoundSource::Theorem1).unwrap() <= r.upper(BoundSource::Galvin).unwrap(), "theorem1 <= galvin");
            checks += 1;
        }
    }

    // search
    for _ in 0..30 {
        let p = rng.gen_range(1.1..5.0);
        let set = random_config(&mut rng, p, 6, 3);
        let e = search::energy(&set).unwrap();
        let g = search::energy_gradient(&set);
        for c in 0..3 {
            let total: f64 = (0..6).map(|i| g[i * 3 + c]).sum();
            ensure!(total.abs() < 1e-10, "gradient sums to zero");
        }
        let shift: Vec<f64> = (0..3).map(|_| rng.gen_range(-2.0..2.0)).collect();
        let moved: Vec<Point> = set
            .points()
            .iter()
            .map(|x| Point::new(x.iter().zip(&shift).map(|(a, b)| a + b).collect()))
            .collect();
        let e_moved = search::energy(&PointSet::new(set.space(), moved, None).unwrap()).unwrap();
        ensure!((e - e_moved).abs() <= 1e-10 * e.max(1.0), "translation invariance");
        let mut rev = set.clone().into_points();
        rev.reverse();
        let e_rev = search::energy(&PointSet::new(set.space(), rev, None).unwrap()).unwrap();
        ensure!((e - e_rev).abs() <= 1e-12 * e.max(1.0), "permutation invariance");
        checks += 3;
    }
    let mut prev = f64::INFINITY;
    for iters in [0, 1, 2, 5, 10, 20, 50, 100, 200] {
        let mut cfg = SearchConfig::new(LpSpace::new(1.5, 3).unwrap(), 5, 1, 99);
        cfg.max_iters = iters;
        cfg.stall_window = 0;
        let r = search::run_search(&cfg).unwrap();
        ensure!(r.best_energy <= prev, "descent monotone at {iters} iterations");
        prev = r.best_energy;
        checks += 1;
    }
    let cfg = SearchConfig::new(LpSpace::new(1.5, 3).unwrap(), 5, 8, 4);
    ensure!(search::run_search(&cfg).unwrap() == search::run_search(&cfg).unwrap(), "determinism");
    checks += 1;

    Ok(format!("{checks} property checks"))
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: "C1", name: "theorem2 reproduction (p=log2 3, d=6)", budget: Duration::from_secs(1), run: c1_theorem2_reproduction },
        Criterion { id: "C2", name: "theorem2 cardinality formula", budget: Duration::from_secs(10), run: c2_theorem2_cardinality },
        Criterion { id: "C3", name: "theorem3 reproduction", budget: Duration::from_secs(1), run: c3_theorem3_reproduction },
        Criterion { id: "C4", name: "planar quadrilateral solver", budget: Duration::from_secs(1), run: c4_planar_solver },
        Criterion { id: "C5", name: "Hadamard exactness", budget: Duration::from_secs(5), run: c5_hadamard_exactness },
        Criterion { id: "C6", name: "even-p rank certificate", budget: Duration::from_secs(5), run: c6_rank_certificate },
        Criterion { id: "C7", name: "bounds coherence", budget: Duration::from_secs(1), run: c7_bounds_coherence },
        Criterion { id: "C8", name: "energy gradient vs finite differences", budget: Duration::from_secs(5), run: c8_gradient },
        Criterion { id: "C9", name: "search attains known witnesses", budget: Duration::from_secs(120), run: c9_search },
        Criterion { id: "C10", name: "property suites", budget: Duration::from_secs(60), run: c10_properties },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}; runtime {elapsed:.2?} exceeds {:?}", c.budget)),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:<4} {} ({elapsed:.2?}): {detail}", c.id, c.name),
            Err(why) => {
                failed += 1;
                println!("FAIL {:<4} {} ({elapsed:.2?}): {why}", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
