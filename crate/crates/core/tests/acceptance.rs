//! Acceptance checks. Each criterion prints one line; the process exits
//! nonzero if any fails. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use quatgrad::commvar::{
    build_homogeneous, local_check, lower_bound_kernel_construction, restricted_roots,
    standard_component_dim, CommutatorMap,
};
use quatgrad::gradings::catalog::{Entry, RootCase};
use quatgrad::gradings::{Piece, Quaternionic, Z2Grading};
use quatgrad::jordan::{fiber_bound_report, JordanTriad, ShortGrading, ShortKind};
use quatgrad::lie::Family;
use quatgrad::linalg::Subspace;
use quatgrad::partitions::{
    admissible_data, dim_cent_gl, dim_cent_sl, dim_cent_so, dim_cent_sp, f_function, oracle,
    partitions_of, sweep, NilpotentData, PairKind, Partition,
};
use quatgrad::rng::{seeded, SeededRng};
use quatgrad::{QMatrix, Rational, Result};

struct Outcome {
    pass: bool,
    detail: String,
}

impl Outcome {
    fn new(failures: Vec<String>, summary: String) -> Self {
        if failures.is_empty() {
            Outcome { pass: true, detail: summary }
        } else {
            let shown: Vec<&String> = failures.iter().take(5).collect();
            Outcome {
                pass: false,
                detail: format!("{} failure(s): {shown:?}", failures.len()),
            }
        }
    }
}

fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

fn hook(head: usize, n: usize) -> String {
    Partition::hook(head, n).to_string()
}

// 1. closed formulas against kernels of explicit nilpotents
fn formula_vs_oracle() -> Result<Outcome> {
    let mut cases: Vec<(Family, Partition, i64)> = Vec::new();
    for n in 1..=6 {
        for l in partitions_of(n) {
            cases.push((Family::Gl, l.clone(), dim_cent_gl(&l)));
            if n >= 2 {
                cases.push((Family::Sl, l.clone(), dim_cent_sl(&l)));
            }
        }
    }
    for n in 3..=10 {
        for l in partitions_of(n).into_iter().filter(Partition::is_orthogonal) {
            let d = dim_cent_so(&l)?;
            cases.push((Family::So, l, d));
        }
    }
    for n in (2..=10).step_by(2) {
        for l in partitions_of(n).into_iter().filter(Partition::is_symplectic) {
            let d = dim_cent_sp(&l)?;
            cases.push((Family::Sp, l, d));
        }
    }
    let mut failures: Vec<String> = cases
        .par_iter()
        .map(|(family, l, formula)| -> Result<Option<String>> {
            let kernel = oracle::centralizer_dim(*family, l)? as i64;
            Ok((kernel != *formula).then(|| format!("{family} {l}: formula {formula}, kernel {kernel}")))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let pairs = [(PairKind::SlSo, 10), (PairKind::SpGl, 5), (PairKind::SoGl, 5)];
    let mut graded = 0;
    for (pair, bound) in pairs {
        let report = oracle::sweep(pair, bound)?;
        graded += report.instances_checked;
        failures.extend(
            report
                .violations
                .into_iter()
                .filter(|v| v.reason.contains("differ"))
                .map(|v| format!("{pair} {}: {}", v.instance, v.reason)),
        );
    }
    Ok(Outcome::new(
        failures,
        format!("{} centralizers, {graded} graded pairs agree", cases.len()),
    ))
}

fn size_min(report: &quatgrad::partitions::SweepReport, size: usize) -> (Option<i64>, Vec<String>) {
    let s = report.per_size.iter().find(|s| s.size == size);
    s.map(|s| (s.min_defect, s.argmin.clone())).unwrap_or((None, Vec::new()))
}

// 2. inequality sweeps
fn sweeps() -> Result<Outcome> {
    let mut failures = Vec::new();
    let sl_so = sweep(PairKind::SlSo, 10)?;
    for n in 3..=10 {
        let (min, arg) = size_min(&sl_so, n);
        if min != Some(2) || !arg.contains(&hook(3, n)) {
            failures.push(format!("sl-so n={n}: min {min:?} at {arg:?}"));
        }
    }
    let sp_gl = sweep(PairKind::SpGl, 8)?;
    for n in 2..=8 {
        let (min, arg) = size_min(&sp_gl, n);
        let hit = arg.contains(&hook(2, n)) || (n >= 3 && arg.contains(&hook(3, n)));
        if min != Some(2) || !hit {
            failures.push(format!("sp-gl n={n}: min {min:?} at {arg:?}"));
        }
    }
    let so_gl = sweep(PairKind::SoGl, 6)?;
    let sl_sl = sweep(PairKind::SlSl, 10)?;
    for r in [&sl_so, &sp_gl, &so_gl, &sl_sl] {
        for v in &r.violations {
            failures.push(format!("{} {}: {}", r.pair, v.instance, v.reason));
        }
    }
    let mut f_checked = 0;
    for size in 2..=10 {
        for d in admissible_data(PairKind::SlSl, size) {
            if let NilpotentData::Two(l, m) = d {
                f_checked += 1;
                let f = f_function(&l, &m);
                if size >= 3 && f <= 0 {
                    failures.push(format!("F{l};{m} = {f}"));
                }
            }
        }
    }
    let f11 = f_function(&p(&[1]), &p(&[1]));
    if f11 != 0 {
        failures.push(format!("F((1);(1)) = {f11}"));
    }
    Ok(Outcome::new(
        failures,
        format!(
            "sl-so/sp-gl minima 2 at the hooks, so-gl {} and F {} instances clean, F((1);(1)) = 0",
            so_gl.instances_checked, f_checked
        ),
    ))
}

// 3. so16 data points
fn so16_points() -> Result<Outcome> {
    let expected = [(vec![11, 2, 2, 1], 16), (vec![7, 5, 2, 2], 22), (vec![7, 4, 4, 1], 22)];
    let mut failures = Vec::new();
    for (parts, want) in &expected {
        let got = dim_cent_so(&p(parts))?;
        if got != *want {
            failures.push(format!("{parts:?}: {got} != {want}"));
        }
    }
    Ok(Outcome::new(failures, "16, 22, 22".into()))
}

// 4. restricted root profiles
fn roots() -> Result<Outcome> {
    let cases = [
        (RootCase::SlSp(2), "A1", Some(4), Some(4)),
        (RootCase::SlSp(3), "A2", Some(4), Some(4)),
        (RootCase::SpGl(2), "C2", Some(1), Some(1)),
        (RootCase::SpGl(3), "C3", Some(1), Some(1)),
        (RootCase::SlSl(2), "C2", Some(2), Some(1)),
        (RootCase::SlSl(3), "C3", Some(2), Some(1)),
    ];
    let results = cases
        .par_iter()
        .map(|(case, label, ms, ml)| -> Result<Option<String>> {
            let (g, css) = case.build::<Rational>()?;
            let (sys, _) = restricted_roots(g.algebra(), &css, None)?;
            let prof = sys.profile();
            let uniform = prof.classes.iter().all(|c| c.multiplicities.windows(2).all(|w| w[0] == w[1]));
            let ok = prof.label == *label
                && prof.m_short() == *ms
                && prof.m_long() == *ml
                && uniform
                && sys.is_complete();
            Ok((!ok).then(|| {
                format!(
                    "{}: {} m_short {:?} m_long {:?} complete {}",
                    case.id(),
                    prof.label,
                    prof.m_short(),
                    prof.m_long(),
                    sys.is_complete()
                )
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome::new(
        results.into_iter().flatten().collect(),
        "A1(4), A2(4), C2/C3(1), C2/C3(2,1), complete".into(),
    ))
}

// 5. homogeneous Cartan subspaces and standard components
fn commuting_varieties() -> Result<Outcome> {
    let mut failures = Vec::new();
    for n in 5..=7 {
        let qd = Entry::SoChain.build::<Rational>(n, None)?;
        let cm = CommutatorMap::standard(&qd);
        let mut rng = seeded(500 + n as u64);
        for (first, vector, dim) in [(Piece::G10, (1, 0), n - 2), (Piece::G11, (0, 1), 1)] {
            let h = build_homogeneous(&cm, first, &mut rng, 64)?;
            let got = (h.dimension_vector(), standard_component_dim(&cm, &h));
            if got != (vector, dim) {
                failures.push(format!("so{n} from {first}: {got:?}"));
            }
        }
    }
    for n in [2, 3] {
        let qd = Entry::SpTriad.build::<Rational>(n, None)?;
        let alg = qd.algebra();
        let mut rng = seeded(510 + n as u64);
        let cm = CommutatorMap::standard(&qd);
        for first in [Piece::G10, Piece::G11] {
            let h = build_homogeneous(&cm, first, &mut rng, 64)?;
            let z01 = alg.centralizer(&h.combined(), qd.piece(Piece::G01)).dim();
            let comp = standard_component_dim(&cm, &h);
            let local = local_check(&cm, &h, &mut rng, 4)?;
            if z01 != 0 || comp != qd.dim(Piece::G11) || !local.passes() {
                failures.push(format!(
                    "sp{} from {first}: z01 {z01}, component {comp}, g11 {}, {local:?}",
                    2 * n,
                    qd.dim(Piece::G11)
                ));
            }
        }
        if cm.dominance_witness(&mut rng, 64).is_none() {
            failures.push(format!("sp{}: no dominance witness", 2 * n));
        }
    }
    Ok(Outcome::new(failures, "so5-7 chain (1,0)/(0,1), sp4/sp6 triads are CSAs with witness".into()))
}

fn jordan_dim(kind: ShortKind, n: usize) -> usize {
    match kind {
        ShortKind::Sl => n * n,
        ShortKind::Sp => n * (n + 1) / 2,
        ShortKind::SoSkew => n * (2 * n - 1),
        ShortKind::SoSpin => (n - 3) + 1,
    }
}

/// A nonzero element of the Jordan algebra supported on one or two basis
/// vectors, which usually has a nonzero annihilator.
fn sparse_element(t: &JordanTriad<Rational>, rng: &mut SeededRng) -> Vec<Rational> {
    let d = t.jordan().dim();
    let mut v = vec![Rational::from_integer(0.into()); d];
    for _ in 0..rng.gen_range(1..=2) {
        let i = rng.gen_range(0..d);
        v[i] = Rational::from_integer(rng.gen_range(1i64..=3).into());
    }
    v
}

// 6. transport identity and Jordan dimensions
fn jordan_suite() -> Result<Outcome> {
    let gradings = [
        (ShortKind::Sl, 2),
        (ShortKind::Sl, 3),
        (ShortKind::Sp, 2),
        (ShortKind::Sp, 3),
        (ShortKind::SoSpin, 6),
        (ShortKind::SoSpin, 8),
        (ShortKind::SoSkew, 2),
    ];
    const PAIRS: usize = 100;
    let results = gradings
        .par_iter()
        .map(|&(kind, n)| -> Result<(Vec<String>, usize)> {
            let sg = ShortGrading::<Rational>::new(kind, n)?;
            let t = sg.jordan_triad()?;
            let j = t.jordan();
            let mut failures = Vec::new();
            let label = format!("{}{}", kind.id(), n);
            if j.dim() != jordan_dim(kind, n) {
                failures.push(format!("{label}: dim J {} != {}", j.dim(), jordan_dim(kind, n)));
            }
            let mut rng = seeded(600 + 10 * n as u64 + kind as u64);
            let mut zero_products = 0;
            for i in 0..PAIRS {
                let (x, y) = if i % 2 == 0 {
                    (j.random_element(&mut rng, 3), j.random_element(&mut rng, 3))
                } else {
                    let x = sparse_element(&t, &mut rng);
                    let ann = j.centralizer(&x);
                    let y = if ann.is_zero() {
                        j.random_element(&mut rng, 3)
                    } else {
                        let c = quatgrad::rng::small_vector::<Rational>(&mut rng, ann.dim(), 3);
                        ann.element(&c)
                    };
                    (x, y)
                };
                let xm = j.to_matrix(&x).expect("matrix realization");
                let ym = j.to_matrix(&y).expect("matrix realization");
                if !t.tkk_identity_holds(&xm, &ym) {
                    failures.push(format!("{label}: identity fails at sample {i}"));
                }
                for (a, b, am, bm) in [(&x, &y, &xm, &ym), (&y, &x, &ym, &xm)] {
                    let product_zero = j.mul(a, b).iter().all(|v| *v == Rational::from_integer(0.into()));
                    if product_zero {
                        zero_products += 1;
                    }
                    if t.transported_pair_commutes(am, bm) != product_zero {
                        failures.push(format!("{label}: commuting and x o y = 0 disagree at sample {i}"));
                    }
                }
            }
            if zero_products == 0 {
                failures.push(format!("{label}: no sample with x o y = 0"));
            }
            Ok((failures, zero_products))
        })
        .collect::<Result<Vec<_>>>()?;
    let zeros: usize = results.iter().map(|r| r.1).sum();
    let failures = results.into_iter().flat_map(|r| r.0).collect();
    Ok(Outcome::new(
        failures,
        format!(
            "{} gradings x {PAIRS} pairs, constant 4, {zeros} zero products, dims match",
            gradings.len()
        ),
    ))
}

// 7. fibre bound on matrices similar to their negatives
fn fibre_bound() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut rng = seeded(700);
    for (n, want) in [(2, 5), (3, 10), (4, 18)] {
        let r = fiber_bound_report::<Rational>(n, &mut rng)?;
        let ok = r.passes()
            && r.jordan_centralizer_dim == n
            && r.constraint_count == n.div_ceil(2)
            && r.component_dim == n * n + n / 2
            && r.component_dim == want;
        if !ok {
            failures.push(format!("n={n}: {r:?}"));
        }
    }
    Ok(Outcome::new(failures, "z^J dims 2,3,4; bounds 5, 10, 18".into()))
}

// 8. kernel construction bounds
fn kernel_bounds() -> Result<Outcome> {
    let cases = [(ShortKind::Sl, 2), (ShortKind::Sl, 3), (ShortKind::Sp, 2), (ShortKind::Sp, 3)];
    let results = cases
        .par_iter()
        .map(|&(kind, n)| -> Result<(Option<String>, String)> {
            let t = ShortGrading::<Rational>::new(kind, n)?.jordan_triad()?;
            let b = lower_bound_kernel_construction(&t, &mut seeded(800 + n as u64))?;
            let r = b.rank;
            let z10 = if r % 2 == 0 { b.m_short * r / 2 } else { b.m_short * (r / 2) + 1 };
            let formula = b.dim_j + (b.m_short - 1) * (r / 2);
            let mut ok = b.passes() && b.z10_dim == z10 && b.bound == formula;
            if kind == ShortKind::Sp {
                ok &= b.bound == b.dim_j;
            }
            let label = format!("{}({n})", if kind == ShortKind::Sl { "full" } else { "sym" });
            let summary = format!("{label} bound {}", b.bound);
            Ok(((!ok).then(|| format!("{label}: {b:?}")), summary))
        })
        .collect::<Result<Vec<_>>>()?;
    let summary = results.iter().map(|r| r.1.clone()).collect::<Vec<_>>().join(", ");
    Ok(Outcome::new(results.into_iter().filter_map(|r| r.0).collect(), summary))
}

fn catalog() -> Result<Vec<(String, Quaternionic<Rational>)>> {
    let entries: [(Entry, usize, Option<usize>); 14] = [
        (Entry::SoChain, 5, None),
        (Entry::SoChain, 6, None),
        (Entry::SoChain, 7, None),
        (Entry::SlSp, 2, Some(1)),
        (Entry::SlSp, 3, Some(1)),
        (Entry::SlDyad, 3, None),
        (Entry::SlDyad, 4, None),
        (Entry::SpTriad, 2, None),
        (Entry::SpTriad, 3, None),
        (Entry::SlTriad, 2, None),
        (Entry::SlTriad, 3, None),
        (Entry::SoSkewTriad, 2, None),
        (Entry::SoSpinTriad, 6, None),
        (Entry::SoSpinTriad, 8, None),
    ];
    entries
        .par_iter()
        .map(|&(e, n, m)| Ok((format!("{e}({n})"), e.build(n, m)?)))
        .collect()
}

/// Random element of `g1`, sometimes restricted to a random coordinate
/// subspace so that degenerate elements are sampled as well.
fn homogeneous_sample(g: &Z2Grading<Rational>, rng: &mut SeededRng) -> QMatrix {
    let alg = g.algebra();
    if rng.gen_bool(0.5) {
        return alg.random_in(g.g1(), rng, 3);
    }
    let keep: Vec<Vec<Rational>> = g
        .g1()
        .basis()
        .iter()
        .filter(|_| rng.gen_bool(0.4))
        .cloned()
        .collect();
    let sub = Subspace::span(alg.dim(), &keep).expect("same ambient");
    alg.random_in(&sub, rng, 3)
}

// 9. centralizer identity, maximal-rank identity, bracket inclusions
fn grading_identities(catalog: &[(String, Quaternionic<Rational>)]) -> Result<Outcome> {
    const SAMPLES: usize = 50;
    let jobs: Vec<(usize, usize)> = (0..catalog.len()).flat_map(|i| (0..3).map(move |s| (i, s))).collect();
    let results = jobs
        .par_iter()
        .map(|&(i, s)| -> Result<(Vec<String>, bool)> {
            let (name, qd) = &catalog[i];
            let theta = [qd.sigma1(), qd.sigma2(), qd.sigma3()][s].clone();
            let g = Z2Grading::new(qd.algebra().clone(), theta)?;
            let max_rank = g.is_maximal_rank();
            let rank = g.algebra().lie_rank() as i64;
            let (d0, d1) = (g.g0().dim() as i64, g.g1().dim() as i64);
            let mut rng = seeded(900 + 3 * i as u64 + s as u64);
            let mut failures = Vec::new();
            for k in 0..SAMPLES {
                let x = homogeneous_sample(&g, &mut rng);
                let c = g.centralizer_dims(&x)?;
                let (e, o) = (c.even as i64, c.odd as i64);
                if d0 - e != d1 - o {
                    failures.push(format!("{name} sigma{}: sample {k} gives {d0}-{e} vs {d1}-{o}", s + 1));
                }
                if max_rank && o != e + rank {
                    failures.push(format!("{name} sigma{}: sample {k} misses the rank identity", s + 1));
                }
            }
            if s == 0 {
                if let Some((a, b)) = qd.bracket_failure() {
                    failures.push(format!("{name}: [{a}, {b}] lands in the wrong piece"));
                }
            }
            Ok((failures, max_rank))
        })
        .collect::<Result<Vec<_>>>()?;
    let max_rank = results.iter().filter(|r| r.1).count();
    let failures = results.into_iter().flat_map(|r| r.0).collect();
    Ok(Outcome::new(
        failures,
        format!(
            "{} gradings x {SAMPLES} samples ({max_rank} of maximal rank), {} decompositions closed",
            jobs.len(),
            catalog.len()
        ),
    ))
}

fn run(name: &str, f: impl FnOnce() -> Result<Outcome>) -> (bool, String, Duration) {
    let start = Instant::now();
    let (pass, detail) = match f() {
        Ok(o) => (o.pass, o.detail),
        Err(e) => (false, format!("error: {e}")),
    };
    (pass, format!("{name}: {detail}"), start.elapsed())
}

fn main() -> ExitCode {
    let results = vec![
        run("formula vs oracle (exact)", formula_vs_oracle),
        run("inequality sweeps (exact)", sweeps),
        run("so16 data points (exact)", so16_points),
        run("restricted roots (exact)", roots),
        run("commuting varieties (exact, seeded)", commuting_varieties),
        run("jordan suite (exact, seeded)", jordan_suite),
        run("fibre bound (exact, seeded)", fibre_bound),
        run("kernel bounds (exact, seeded)", kernel_bounds),
        run("grading identities (exact, seeded)", || grading_identities(&catalog()?)),
    ];
    let limits = [
        (1, Duration::from_secs(120)),
        (3, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (pass, line, elapsed)) in results.iter().enumerate() {
        let n = i + 1;
        let over = limits.iter().find(|(k, _)| *k == n).filter(|(_, l)| elapsed > l);
        let pass = *pass && over.is_none();
        if !pass {
            failed += 1;
        }
        let verdict = if pass { "PASS" } else { "FAIL" };
        let time = match over {
            Some((_, l)) => format!("{:.2}s over the {:.0}s limit", elapsed.as_secs_f64(), l.as_secs_f64()),
            None => format!("{:.2}s", elapsed.as_secs_f64()),
        };
        println!("criterion {n} {verdict} {line} [{time}]");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
