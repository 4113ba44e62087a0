//! Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

mod common;

use std::time::{Duration, Instant};

use common::*;
use num_rational::BigRational;
use rand::Rng;
use sumrank::bounds::{
    concat_preset, gamma_q, gv_asymptotic_rate, gv_exact_rate, ratio, sample_curve, singleton_like_max_dim,
    tvz_like_sr_line, BoundSpec, Grid, Line, Preset,
};
use sumrank::codes::{explicit_family, gabidulin, reed_solomon, sum_zero_code, concatenate};
use sumrank::metrics::{min_distance_exhaustive, min_distance_exhaustive_with, BlockProfile, OracleConfig};
use sumrank::FieldCtx;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Check {
    let el = start.elapsed();
    ensure(el < limit, || format!("took {el:?}, limit {limit:?}"))
}

fn table(q: u64, n: usize, d1s: std::ops::RangeInclusive<usize>, dims: &[usize], singleton: &[usize]) -> Check {
    let start = Instant::now();
    let base = FieldCtx::prime(q).map_err(|e| e.to_string())?;
    let profile = BlockProfile::uniform(2, 2, n).unwrap();
    for (i, d1) in d1s.enumerate() {
        let code = explicit_family(&base, n, 2, 1, d1).map_err(|e| e.to_string())?;
        ensure(code.k() == 2 * dims[i], || format!("d1={d1}: dimension {} != 2*{}", code.k(), dims[i]))?;
        ensure(code.d_design() == Some(d1), || format!("d1={d1}: designed {:?}", code.d_design()))?;
        let s = singleton_like_max_dim(&profile, d1).map_err(|e| e.to_string())?;
        ensure(s == 2 * singleton[i], || format!("d1={d1}: Singleton {s} != 2*{}", singleton[i]))?;
    }
    within(start, Duration::from_secs(1))
}

fn criterion_1() -> Check {
    let dims: Vec<usize> = (1..=12).rev().map(|i| 2 * i).collect();
    let singleton: Vec<usize> = (16..=27).rev().collect();
    table(2, 15, 4..=15, &dims, &singleton)
}

fn criterion_2() -> Check {
    let dims: Vec<usize> = (2..=28).rev().map(|i| 2 * i).collect();
    let singleton: Vec<usize> = (33..=59).rev().collect();
    table(3, 31, 4..=30, &dims, &singleton)
}

fn criterion_3() -> Check {
    let start = Instant::now();
    let f2 = FieldCtx::prime(2).unwrap();
    let err = |e: sumrank::Error| e.to_string();

    let sz = sum_zero_code(&f2, 2, 3).map_err(err)?;
    let d = min_distance_exhaustive(&sz, 24).map_err(err)?;
    ensure(d == 2, || format!("(a) sum-zero distance {d}"))?;

    let gab = gabidulin(&f2, 3, 1).map_err(err)?;
    let d = min_distance_exhaustive(&gab, 24).map_err(err)?;
    ensure(d == 2 && gab.k() == 6, || format!("(b) Gabidulin distance {d}, dimension {}", gab.k()))?;

    let f16 = FieldCtx::extension(&f2, 4).map_err(err)?;
    let outer = reed_solomon(&f16, 3, 2).map_err(err)?;
    let inner = gabidulin(&f2, 2, 1).map_err(err)?;
    let c = concatenate(&outer, &inner).map_err(err)?;
    let d = min_distance_exhaustive(&c, 24).map_err(err)?;
    ensure(c.d_design() == Some(2) && d >= 2, || format!("(c) designed {:?}, exact {d}", c.d_design()))?;

    let cases = sweep_cases();
    ensure(cases.len() >= 20, || format!("(d) only {} cases", cases.len()))?;
    let cfg = OracleConfig { cap_bits: 20, threads: 4 };
    for case in &cases {
        let code = case.build();
        let exact = min_distance_exhaustive_with(&code, &cfg).map_err(err)?;
        ensure(exact >= case.designed(), || format!("(d) {case:?}: exact {exact} < {}", case.designed()))?;
    }
    within(start, Duration::from_secs(300))
}

fn criterion_4() -> Check {
    let d2 = concat_preset(Preset::D2, 2, 2, 3).map_err(|e| e.to_string())?;
    ensure(d2.r == 4, || format!("r = {}", d2.r))?;
    let want = Line { a: ratio(3, 2), b: ratio(3, 1), c: ratio(14, 15) };
    ensure(d2.line == want, || format!("d2 line {}", d2.line))?;
    let p4 = concat_preset(Preset::D2, 4, 2, 3).map_err(|e| e.to_string())?;
    ensure(p4.r == 4 && p4.line.c == ratio(254, 255), || format!("p=4 line {}", p4.line))?;
    let tvz = tvz_like_sr_line(9, 2).map_err(|e| e.to_string())?;
    for delta in Grid::default().points() {
        let r = tvz.rate_at(&delta);
        ensure(r + &delta == ratio(1, 4), || format!("R + delta != 1/4 at {delta}"))?;
    }
    Ok(())
}

fn criterion_5() -> Check {
    let start = Instant::now();
    for &delta in &[0.1, 0.3, 0.5] {
        let t = 10_000;
        let d = (delta * (2 * t) as f64).round() as usize;
        let exact = gv_exact_rate(2, 2, 2, t, d).map_err(|e| e.to_string())?;
        let asym = gv_asymptotic_rate(2, 2, delta).map_err(|e| e.to_string())?;
        ensure((exact - asym).abs() < 1e-2, || format!("delta={delta}: {exact} vs {asym}"))?;
    }
    let (g50, g80) = (gamma_q(2, 2f64.powi(-50)), gamma_q(2, 2f64.powi(-80)));
    ensure((g50 - g80).abs() < 1e-12, || format!("gamma_2: {g50} vs {g80}"))?;
    within(start, Duration::from_secs(10))
}

fn criterion_6() -> Check {
    let start = Instant::now();
    let grid: Grid = "0.005:0.25:0.005".parse().unwrap();
    let line = concat_preset(Preset::D2, 2, 2, 3).map_err(|e| e.to_string())?;
    let curve = sample_curve(&BoundSpec::Concat(line), &grid).map_err(|e| e.to_string())?;
    let mut positive = 0;
    for (delta, r) in &curve.samples {
        if *r > 0.0 {
            positive += 1;
            let gv = gv_asymptotic_rate(2, 2, delta_f64(delta)).map_err(|e| e.to_string())?;
            ensure(*r > gv, || format!("line {r} <= GV {gv} at {delta}"))?;
        }
    }
    ensure(positive > 0, || "line never positive".into())?;
    within(start, Duration::from_secs(1))
}

fn delta_f64(x: &BigRational) -> f64 {
    sumrank::bounds::to_f64(x)
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut r = rng(77);
    for i in 0..50 {
        let p = if i % 2 == 0 { 2 } else { 3 };
        let k = r.gen_range(1..=8);
        let n = r.gen_range(k..=k + 4);
        let g = random_full_rank(p, k, n, &mut r);
        let code = sum_rank_code(p, &vec![(1, 1); n], &g, k);
        let got = min_distance_exhaustive(&code, 24).map_err(|e| e.to_string())?;
        let want = brute_hamming_distance(&g, k, n, p);
        ensure(got == want, || format!("1x1 case {i}: {got} != {want}"))?;
    }
    for i in 0..20 {
        let p = if i % 2 == 0 { 2 } else { 3 };
        let rows = r.gen_range(1..=3);
        let cols = r.gen_range(rows..=4);
        let k = r.gen_range(1..=(rows * cols).min(8));
        let g = random_full_rank(p, k, rows * cols, &mut r);
        let code = sum_rank_code(p, &[(rows, cols)], &g, k);
        let got = min_distance_exhaustive(&code, 24).map_err(|e| e.to_string())?;
        let want = codewords(&g, k, rows * cols, p)
            .iter()
            .skip(1)
            .map(|w| rank_by_kernel_count(w, rows, cols, p))
            .min()
            .unwrap();
        ensure(got == want, || format!("t=1 case {i}: {got} != {want}"))?;
    }
    within(start, Duration::from_secs(60))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("table for block length 15", criterion_1),
        ("table for block length 31", criterion_2),
        ("exhaustive distance verification", criterion_3),
        ("bound anchors", criterion_4),
        ("GV consistency", criterion_5),
        ("d2 line above GV-like bound", criterion_6),
        ("metric degeneration", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name} ({:.2?})", i + 1, start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
