//! Acceptance suite: one PASS/FAIL line per criterion; exits nonzero if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::Command;
use std::result::Result;
use std::time::{Duration, Instant};

use num_traits::ToPrimitive;
use parasig::grid::ParamGrid;
use parasig::qpoly::{gaussian_binomial, q_factorial, QPoly};
use parasig::signatures::{sample_points, FaceEnumeration};
use parasig::*;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}

fn datum(d: PairDescriptor) -> RootDatum {
    build_root_datum(d).expect("grid descriptor builds")
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, budget: Duration) -> Result<(), String> {
    ensure(elapsed <= budget, || format!("took {elapsed:.2?}, budget {budget:?}"))
}

fn table_2() -> Outcome {
    let start = Instant::now();
    let expected = [
        (
            PairDescriptor::EIII,
            set(&[8, 11, 12, 13, 14, 15, 16]),
            set(&[5, 9, 11, 12, 13, 14, 15]),
        ),
        (
            PairDescriptor::EVII,
            set(&[17, 21, 22, 23, 24, 25, 26, 27]),
            set(&[10, 18, 21, 22, 23, 24, 25, 26]),
        ),
    ];
    for (d, r0, r1) in expected {
        let s = attainable_signatures(&datum(d), Some(&[0, 1])).map_err(|e| e.to_string())?;
        ensure(s.row(0) == r0, || format!("{d} R+=0: got {:?}", s.row(0)))?;
        ensure(s.row(1) == r1, || format!("{d} R+=1: got {:?}", s.row(1)))?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(10))?;
    Ok(format!("EIII and EVII sets exact in {elapsed:.2?}"))
}

fn rows_for(descs: &[PairDescriptor], r_plus: usize) -> Result<Vec<CellReport>, String> {
    descs
        .iter()
        .map(|&d| {
            let s = attainable_signatures(&datum(d), Some(&[r_plus])).map_err(|e| e.to_string())?;
            Ok(compare_cell(d, r_plus, &s.row(r_plus)))
        })
        .collect()
}

fn table_3() -> Outcome {
    let start = Instant::now();
    let descs = ParamGrid::default().rplus_zero_rows();
    let rows = rows_for(&descs, 0)?;
    let mut provisional = Vec::new();
    for (d, r) in descs.iter().zip(&rows) {
        match r.status {
            CellStatus::Agree => {}
            CellStatus::Provisional => {
                let allowed = match d {
                    PairDescriptor::BdiEven { m: 3 } => true,
                    PairDescriptor::DIII { .. } => {
                        let closed = &r.closed_forms[0].values;
                        let mut without_zero = closed.clone();
                        without_zero.remove(&0);
                        closed.contains(&0) && r.enumerated == without_zero
                    }
                    _ => false,
                };
                ensure(allowed, || format!("{d}: unexpected provisional cell ({})", r.note))?;
                provisional.push(d.to_string());
            }
            _ => return Err(format!("{d}: {} ({})", r.status, r.note)),
        }
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    Ok(format!(
        "{} rows; provisional with enumerator as arbiter: {}; {elapsed:.2?}",
        rows.len(),
        provisional.join(", ")
    ))
}

fn table_4() -> Outcome {
    let start = Instant::now();
    let descs = ParamGrid::default().rplus_one_rows();
    let rows = rows_for(&descs, 1)?;
    let mut unmatched = Vec::new();
    let mut matched = Vec::new();
    for (d, r) in descs.iter().zip(&rows) {
        if let PairDescriptor::AIII { m, .. } = d {
            if *m >= 2 {
                if r.matched.is_empty() {
                    let variants: Vec<String> = r
                        .closed_forms
                        .iter()
                        .map(|v| format!("{}={:?}", v.formula, v.values))
                        .collect();
                    unmatched.push(format!("{d} enumerated {:?} vs {}", r.enumerated, variants.join(" ")));
                } else {
                    matched.push(format!("{d}: {}", r.matched.join("/")));
                }
                continue;
            }
        }
        ensure(r.status == CellStatus::Agree, || {
            format!("{d}: {} ({})", r.status, r.note)
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, Duration::from_secs(60))?;
    if !unmatched.is_empty() {
        return Err(format!(
            "{} AIII rows match neither variant: {}",
            unmatched.len(),
            unmatched.join("; ")
        ));
    }
    Ok(format!(
        "{} rows; AIII variants matched: {}; {elapsed:.2?}",
        rows.len(),
        matched.join(", ")
    ))
}

fn symmetry() -> Outcome {
    let mut checked = 0usize;
    for (k, desc) in ParamGrid::default().all().into_iter().enumerate() {
        let d = datum(desc);
        for x in sample_points(&d, 1000, 1000 + k as u64) {
            let s = r_signature(&d, &x).map_err(|e| e.to_string())?;
            let neg = r_signature(&d, &-&x).map_err(|e| e.to_string())?;
            ensure(neg == s.swapped(), || format!("{desc}: antipodal failure at {x}"))?;
            for &i in d.compact_simple_indices() {
                let y = reflect(&d.simple_roots()[i], &x).map_err(|e| e.to_string())?;
                let t = r_signature(&d, &y).map_err(|e| e.to_string())?;
                ensure(t == s, || format!("{desc}: s{} changes signature at {x}", i + 1))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} points, zero violations"))
}

/// `dim_C G/K` from the classification.
fn listed_dimension(d: PairDescriptor) -> usize {
    match d {
        PairDescriptor::AIII { m, n } => m * n,
        PairDescriptor::BdiEven { m } => 2 * m - 2,
        PairDescriptor::BdiOdd { m } => 2 * m - 1,
        PairDescriptor::CI { n } => n * (n + 1) / 2,
        PairDescriptor::DIII { n } => n * (n - 1) / 2,
        PairDescriptor::EIII => 16,
        PairDescriptor::EVII => 27,
    }
}

fn dimensions() -> Outcome {
    let all = ParamGrid::default().all();
    for &desc in &all {
        let got = datum(desc).pos_noncompact().len();
        ensure(got == listed_dimension(desc), || {
            format!("{desc}: |noncompact+| = {got}")
        })?;
    }
    let e6 = FaceEnumeration::new(&datum(PairDescriptor::EIII)).map_err(|e| e.to_string())?;
    let e7 = FaceEnumeration::new(&datum(PairDescriptor::EVII)).map_err(|e| e.to_string())?;
    let (c6, c7) = (e6.coset_words().len(), e7.coset_words().len());
    ensure(c6 == 27 && c7 == 56, || format!("coset counts {c6}, {c7}"))?;
    Ok(format!("{} descriptors; cosets 27 and 56", all.len()))
}

/// Order of the Weyl group on the given simple roots, as the product of
/// `(ht + 1) / ht` over its positive roots.
fn weyl_order(d: &RootDatum, support: &[usize]) -> u64 {
    let mut num = 1u128;
    let mut den = 1u128;
    for a in d.pos_compact() {
        let coeffs: Vec<i64> = (0..d.rank())
            .map(|i| d.simple_coefficient(a, i).to_i64().unwrap())
            .collect();
        if coeffs.iter().enumerate().any(|(i, &c)| c != 0 && !support.contains(&i)) {
            continue;
        }
        let ht: i64 = coeffs.iter().sum();
        num *= ht as u128 + 1;
        den *= ht as u128;
    }
    assert_eq!(num % den, 0);
    (num / den) as u64
}

fn flag_poincare_checks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let all = ParamGrid::default().all();
    for _ in 0..20 {
        let desc = *all.choose(&mut rng).unwrap();
        let d = datum(desc);
        let parabolic: Vec<usize> = d
            .compact_simple_indices()
            .iter()
            .copied()
            .filter(|_| rng.random_bool(0.5))
            .collect();
        let b = flag_poincare(&d, &parabolic).map_err(|e| e.to_string())?;
        let quotient = weyl_order(&d, d.compact_simple_indices()) / weyl_order(&d, &parabolic);
        ensure(b[0] == 1, || format!("{desc} {parabolic:?}: b0 = {}", b[0]))?;
        ensure(QPoly::from_coeffs(b.clone()).is_palindromic(), || {
            format!("{desc} {parabolic:?}: {b:?}")
        })?;
        ensure(b.iter().sum::<u64>() == quotient, || {
            format!(
                "{desc} {parabolic:?}: sum {} vs |W_K/W_H| {quotient}",
                b.iter().sum::<u64>()
            )
        })?;
    }
    // Full flags of U(m) x U(n) and Grassmannians Gr(k, n).
    for (m, n) in [(1, 4), (2, 3), (3, 3), (2, 5), (3, 4)] {
        let d = datum(PairDescriptor::AIII { m, n });
        let full = flag_poincare(&d, &[]).map_err(|e| e.to_string())?;
        let expected = q_factorial(m).mul(&q_factorial(n));
        ensure(full == expected.coeffs(), || {
            format!("AIII({m},{n}) full flag {full:?}")
        })?;
        let first: Vec<usize> = (0..m - 1).collect();
        for k in 1..n {
            let second = (m..m + n - 1).filter(|&i| i != m + k - 1);
            let parabolic: Vec<usize> = first.iter().copied().chain(second).collect();
            let b = flag_poincare(&d, &parabolic).map_err(|e| e.to_string())?;
            let g = gaussian_binomial(n, k);
            ensure(b == g.coeffs(), || {
                format!("AIII({m},{n}) Gr({k},{n}): {b:?} vs {:?}", g.coeffs())
            })?;
        }
    }
    Ok("20 seeded pairs plus AIII full flags and Grassmannians".into())
}

fn vanishing() -> Outcome {
    let all = ParamGrid::default().all();
    for &desc in &all {
        let v = VanishingAnalyzer::new(desc).map_err(|e| e.to_string())?;
        for q in 1..desc.real_rank() {
            let verdict = v.h0q(q).map_err(|e| e.to_string())?;
            ensure(verdict.value == Verdict::Zero, || {
                format!("{desc}: H^{{0,{q}}} not zero below real rank")
            })?;
        }
        let expected = match desc {
            PairDescriptor::AIII { m, n } => m >= 2 && (m, n) != (2, 2),
            PairDescriptor::CI { n } => n >= 3,
            PairDescriptor::DIII { n } => n >= 5,
            PairDescriptor::EIII | PairDescriptor::EVII => true,
            _ => false,
        };
        let got = v.h11().value == Verdict::IsomorphicToC;
        ensure(got == expected, || {
            format!("{desc}: H^{{1,1}} = C is {got}, expected {expected}")
        })?;
    }
    let bdi = h11_structure(PairDescriptor::BdiOdd { m: 2 }).map_err(|e| e.to_string())?;
    ensure(bdi.value == Verdict::Unconstrained, || {
        "BDI-odd(2) H^{1,1} not unconstrained".into()
    })?;
    Ok(format!("{} descriptors", all.len()))
}

fn leray_hirsch_checks() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for trial in 0..50 {
        let dim = rng.random_range(0..5usize);
        let rows: Vec<Vec<u64>> = (0..=dim)
            .map(|_| (0..=dim).map(|_| rng.random_range(0..10)).collect())
            .collect();
        let x = HodgeDiamond::from_rows(&rows).map_err(|e| e.to_string())?;
        let len = rng.random_range(1..6usize);
        let betti: Vec<u64> = (0..len).map(|_| rng.random_range(0..6)).collect();
        let out = leray_hirsch(&x, &betti).map_err(|e| e.to_string())?;
        let total: u64 = betti.iter().sum();
        let (cx, cy) = (x.euler_characteristic().unwrap(), out.euler_characteristic().unwrap());
        ensure(cy == cx * total as i64, || {
            format!("trial {trial}: chi {cy} != {cx} * {total}")
        })?;
        let id = leray_hirsch(&x, &[1]).map_err(|e| e.to_string())?;
        ensure(id == x, || format!("trial {trial}: point fiber is not the identity"))?;
    }
    Ok("50 seeded diamonds".into())
}

fn run_suite(bin: &str) -> Result<Vec<(String, Vec<u8>)>, String> {
    let mut out = Vec::new();
    for which in ["2", "3", "4"] {
        for format in ["markdown", "csv", "json"] {
            let o = Command::new(bin)
                .args(["--threads", "4", "tables", "--which", which, "--format", format])
                .output()
                .map_err(|e| e.to_string())?;
            ensure(o.status.code() == Some(0), || {
                format!("tables --which {which} --format {format} exited {:?}", o.status.code())
            })?;
            out.push((format!("table{which}.{format}"), o.stdout));
        }
    }
    Ok(out)
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_parasig");
    let a = run_suite(bin)?;
    let b = run_suite(bin)?;
    for ((name, x), (_, y)) in a.iter().zip(&b) {
        ensure(x == y, || format!("{name} differs between runs"))?;
        ensure(!x.is_empty(), || format!("{name} is empty"))?;
    }
    let bytes: usize = a.iter().map(|(_, x)| x.len()).sum();
    Ok(format!("{} artifacts, {bytes} bytes, identical", a.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("exceptional signature sets", table_2),
        ("R+=0 closed forms", table_3),
        ("R+=1 closed forms", table_4),
        ("signature symmetry", symmetry),
        ("dimensions and coset counts", dimensions),
        ("flag Poincare polynomials", flag_poincare_checks),
        ("vanishing consistency", vanishing),
        ("Leray-Hirsch", leray_hirsch_checks),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({detail})", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
