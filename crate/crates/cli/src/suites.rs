use rayon::prelude::*;
use serde_json::{json, Value};

use quatgrad::commvar::{
    build_css, build_homogeneous, conjugacy_criterion, lower_bound_kernel_construction,
    lower_bound_single_root, restricted_roots, standard_component_dim, CommutatorMap,
    DEFAULT_BUDGET,
};
use quatgrad::gradings::catalog::{Entry, RootCase};
use quatgrad::gradings::{Piece, Quaternionic, Z2Grading};
use quatgrad::jordan::{fiber_bound_report, ShortGrading, ShortKind, TKK_CONSTANT};
use quatgrad::linalg::Subspace;
use quatgrad::partitions::{f_function, min_size, oracle, sweep, PairKind, Partition, SweepReport};
use quatgrad::rng::{seeded, small_vector, SeededRng};
use quatgrad::{QMatrix, Rational};

use crate::{Check, Config, Report};

type Usage<T> = std::result::Result<T, String>;

/// Runs the suite named in `config`, filling in defaults. `Err` is a usage
/// error (unknown suite, bad parameter).
pub fn run(mut config: Config) -> Usage<Report> {
    let checks = match config.suite.as_str() {
        "partitions" => partitions(&mut config)?,
        "inequality" => inequality(&mut config)?,
        "css" => css(&mut config)?,
        "roots" => roots(&mut config)?,
        "bounds" => bounds(&mut config)?,
        "jordan" => jordan(&mut config)?,
        "triad" => triad(&mut config)?,
        other => return Err(format!("unknown suite `{other}`; known: {}", crate::list_suites().join(", "))),
    };
    Ok(Report::new(config, checks))
}

fn in_range(name: &str, v: usize, lo: usize, hi: usize) -> Usage<usize> {
    if (lo..=hi).contains(&v) {
        Ok(v)
    } else {
        Err(format!("{name} = {v} is outside {lo}..={hi}"))
    }
}

fn reject(config: &Config, fields: &[&str]) -> Usage<()> {
    let set = [
        ("pair", config.pair.is_some()),
        ("max-n", config.max_n.is_some()),
        ("n", config.n.is_some()),
        ("family", config.family.is_some()),
        ("catalog", config.catalog.is_some()),
        ("trials", config.trials.is_some()),
    ];
    for (name, present) in set {
        if present && fields.contains(&name) {
            return Err(format!("--{name} does not apply to suite {}", config.suite));
        }
    }
    Ok(())
}

fn parse_pair(s: &str) -> Usage<PairKind> {
    s.parse().map_err(|_| {
        let ids: Vec<&str> = PairKind::ALL.iter().map(|p| p.id()).collect();
        format!("unknown pair `{s}`; known: {}", ids.join(", "))
    })
}

fn hook(head: usize, n: usize) -> String {
    Partition::hook(head, n).to_string()
}

/// Largest size a sweep accepts: closed formulas scale further than the
/// matrix oracle.
fn sweep_cap(pair: PairKind) -> usize {
    match pair {
        PairKind::SlSo | PairKind::SpGl | PairKind::SoGl => 24,
        PairKind::SlSl => 16,
        _ => 10,
    }
}

/// Size up to which a formula sweep is cross-checked against matrices.
fn oracle_cap(pair: PairKind) -> usize {
    match pair {
        PairKind::SlSo => 8,
        PairKind::SlSl => 6,
        _ => 4,
    }
}

/// The inequality says the minimum is positive and even; for these two
/// pairs it is exactly 2.
fn exact_minimum(pair: PairKind) -> Option<i64> {
    matches!(pair, PairKind::SlSo | PairKind::SpGl).then_some(2)
}

fn minimum_ok(pair: PairKind, min: i64) -> bool {
    match exact_minimum(pair) {
        Some(m) => min == m,
        None => min > 0 && min % 2 == 0,
    }
}

fn expected_minimum(pair: PairKind) -> Value {
    match exact_minimum(pair) {
        Some(m) => json!(m),
        None => json!("positive even"),
    }
}

fn sweep_checks(prefix: &str, pair: PairKind, report: &SweepReport, per_size: bool) -> Vec<Check> {
    let mut checks = Vec::new();
    let shown: Vec<Value> = report
        .violations
        .iter()
        .take(10)
        .map(|v| json!({ "instance": v.instance, "reason": v.reason }))
        .collect();
    checks.push(Check::equal(
        format!("{prefix}violations"),
        json!(0),
        json!(report.violations.len()),
        json!({ "instances": report.instances_checked, "first": shown }),
    ));
    if per_size {
        for s in &report.per_size {
            let id = format!("{prefix}size-{:02}/min-defect", s.size);
            match s.min_defect {
                Some(min) => {
                    let mut pass = minimum_ok(pair, min);
                    let mut expected = expected_minimum(pair);
                    // the hooks attaining the minimum
                    let hooks: Vec<String> = match pair {
                        PairKind::SlSo => vec![hook(3, s.size)],
                        PairKind::SpGl if s.size >= 3 => vec![hook(2, s.size), hook(3, s.size)],
                        PairKind::SpGl => vec![hook(2, s.size)],
                        _ => vec![],
                    };
                    if !hooks.is_empty() {
                        pass &= hooks.iter().any(|h| s.argmin.contains(h));
                        expected = json!({ "min": expected, "attained_at_one_of": hooks });
                    }
                    checks.push(Check::new(
                        id,
                        pass,
                        expected,
                        json!(min),
                        json!({ "argmin": s.argmin, "instances": s.instances }),
                    ));
                }
                None if s.instances == 0 => checks.push(Check::skip(id, "no admissible data at this size")),
                None => checks.push(Check::skip(id, "no nonzero nilpotent at this size")),
            }
        }
    }
    let id = format!("{prefix}min-defect");
    match report.min_defect {
        Some(min) => checks.push(Check::new(
            id,
            minimum_ok(pair, min),
            expected_minimum(pair),
            json!(min),
            json!({ "argmin": report.argmin }),
        )),
        None => checks.push(Check::skip(id, "no nonzero nilpotent in range")),
    }
    checks
}

fn partitions(config: &mut Config) -> Usage<Vec<Check>> {
    reject(config, &["n", "family", "catalog", "trials"])?;
    let pair = parse_pair(config.pair.get_or_insert_with(|| "sl-so".into()))?;
    let max_n = in_range("max-n", *config.max_n.get_or_insert(10), min_size(pair), sweep_cap(pair))?;
    let mut checks = match sweep(pair, max_n) {
        Ok(r) => sweep_checks("", pair, &r, true),
        Err(e) => vec![Check::error("sweep", e)],
    };
    if pair.has_formula() {
        let cap = max_n.min(oracle_cap(pair));
        let check = match oracle::sweep(pair, cap) {
            Ok(r) => {
                let differ: Vec<&str> = r
                    .violations
                    .iter()
                    .filter(|v| v.reason.contains("differ"))
                    .map(|v| v.instance.as_str())
                    .collect();
                Check::equal(
                    "oracle/disagreements",
                    json!(0),
                    json!(differ.len()),
                    json!({ "bound": cap, "instances": r.instances_checked, "first": &differ[..differ.len().min(10)] }),
                )
            }
            Err(e) => Check::error("oracle/disagreements", e),
        };
        checks.push(check);
    }
    Ok(checks)
}

fn default_sweep_bound(pair: PairKind) -> usize {
    match pair {
        PairKind::SlSo | PairKind::SlSl => 10,
        PairKind::SoGl => 6,
        _ => 8,
    }
}

fn inequality(config: &mut Config) -> Usage<Vec<Check>> {
    reject(config, &["pair", "n", "family", "catalog", "trials"])?;
    if let Some(m) = config.max_n {
        in_range("max-n", m, 2, 10)?;
    }
    let override_bound = config.max_n;
    let per_pair: Vec<Vec<Check>> = PairKind::ALL
        .par_iter()
        .map(|&pair| {
            let bound = override_bound.unwrap_or_else(|| default_sweep_bound(pair));
            let prefix = format!("{pair}/");
            if bound < min_size(pair) {
                return vec![Check::skip(format!("{prefix}violations"), "bound below the smallest size")];
            }
            let mut checks = match sweep(pair, bound) {
                Ok(r) => sweep_checks(&prefix, pair, &r, false),
                Err(e) => vec![Check::error(format!("{prefix}sweep"), e)],
            };
            for c in &mut checks {
                if let Value::Object(w) = &mut c.witness {
                    w.insert("bound".into(), json!(bound));
                }
            }
            checks
        })
        .collect();
    let mut checks: Vec<Check> = per_pair.into_iter().flatten().collect();
    let one = Partition::new(vec![1]).expect("partition");
    checks.push(Check::equal("sl-sl/F((1);(1))", json!(0), json!(f_function(&one, &one)), Value::Null));
    Ok(checks)
}

fn default_entry_size(e: Entry) -> usize {
    match e {
        Entry::SoChain | Entry::SoSpinTriad => 6,
        Entry::SlDyad => 4,
        _ => 2,
    }
}

fn entry_range(e: Entry) -> (usize, usize) {
    match e {
        Entry::SoChain => (4, 10),
        Entry::SlSp => (2, 4),
        Entry::SlDyad => (2, 8),
        Entry::SpTriad | Entry::SlTriad => (1, 4),
        Entry::SoSkewTriad => (1, 3),
        Entry::SoSpinTriad => (5, 10),
    }
}

fn parse_entry(config: &mut Config, default: Entry) -> Usage<(Entry, usize)> {
    let name = config.catalog.get_or_insert_with(|| default.id().into()).clone();
    let entry: Entry = name.parse().map_err(|_| {
        let ids: Vec<&str> = Entry::ALL.iter().map(|e| e.id()).collect();
        format!("unknown catalog entry `{name}`; known: {}", ids.join(", "))
    })?;
    let (lo, hi) = entry_range(entry);
    let n = in_range("n", *config.n.get_or_insert(default_entry_size(entry)), lo, hi)?;
    Ok((entry, n))
}

fn piece_id(p: Piece) -> String {
    let (i, j) = p.bits();
    format!("{i}{j}")
}

const MAPS: [(Piece, Piece); 3] = [(Piece::G10, Piece::G11), (Piece::G01, Piece::G10), (Piece::G01, Piece::G11)];

fn css(config: &mut Config) -> Usage<Vec<Check>> {
    reject(config, &["pair", "max-n", "family"])?;
    let (entry, n) = parse_entry(config, Entry::SoChain)?;
    let budget = in_range("trials", *config.trials.get_or_insert(DEFAULT_BUDGET), 1, 10_000)?;
    let qd = match entry.build::<Rational>(n, None) {
        Ok(q) => q,
        Err(e) => return Ok(vec![Check::error("build", e)]),
    };
    let mut checks = Vec::new();
    for (k, &(a, b)) in MAPS.iter().enumerate() {
        let cm = CommutatorMap::new(&qd, a, b).expect("distinct odd pieces");
        let label = format!("{}x{}", piece_id(a), piece_id(b));
        let mut rng = seeded(config.seed.wrapping_add(k as u64));
        match conjugacy_criterion(&cm, &mut rng, budget) {
            Ok(rep) => {
                for h in &rep.homogeneous {
                    checks.push(Check::new(
                        format!("{label}/from-{}", piece_id(h.first)),
                        h.bounds_hold && h.local.passes(),
                        json!({ "tangent_dim": h.component_dim, "within_little_cartan_dims": true }),
                        json!({ "tangent_dim": h.local.tangent_dim, "within_little_cartan_dims": h.bounds_hold }),
                        json!({ "dimension_vector": [h.dimension_vector.0, h.dimension_vector.1], "component_dim": h.component_dim }),
                    ));
                }
                let comps: Vec<usize> = rep.homogeneous.iter().map(|h| h.component_dim).collect();
                let consistent = !rep.unique_standard || comps.windows(2).all(|w| w[0] == w[1]);
                checks.push(Check::new(
                    format!("{label}/uniqueness"),
                    consistent,
                    json!("one standard component when dim c = dim c_alpha + dim c_beta"),
                    json!({ "unique_standard": rep.unique_standard, "component_dims": comps }),
                    json!({ "cartan_dims": [rep.dims.0, rep.dims.1, rep.dims.2] }),
                ));
                if entry == Entry::SoChain && (a, b) == (Piece::G10, Piece::G11) {
                    let got: Vec<Value> = rep
                        .homogeneous
                        .iter()
                        .map(|h| json!([[h.dimension_vector.0, h.dimension_vector.1], h.component_dim]))
                        .collect();
                    checks.push(Check::equal(
                        format!("{label}/chain-components"),
                        json!([[[1, 0], n - 2], [[0, 1], 1]]),
                        Value::Array(got),
                        Value::Null,
                    ));
                }
            }
            Err(e) => checks.push(Check::error(format!("{label}/conjugacy"), e)),
        }
        let id = format!("{label}/dominance");
        match cm.dominance_witness(&mut rng, budget) {
            Some(_) => checks.push(Check::new(id, true, json!(true), json!(true), Value::Null)),
            None => checks.push(Check::skip(id, format!("no witness in {budget} draws"))),
        }
        if entry == Entry::SpTriad && (a, b) == (Piece::G10, Piece::G11) {
            for first in [a, b] {
                let id = format!("{label}/cartan-subalgebra-from-{}", piece_id(first));
                match build_homogeneous(&cm, first, &mut rng, budget) {
                    Ok(h) => {
                        let z01 = qd.algebra().centralizer(&h.combined(), qd.piece(Piece::G01)).dim();
                        checks.push(Check::equal(
                            id,
                            json!({ "z01": 0, "component_dim": qd.dim(Piece::G11) }),
                            json!({ "z01": z01, "component_dim": standard_component_dim(&cm, &h) }),
                            Value::Null,
                        ));
                    }
                    Err(e) => checks.push(Check::error(id, e)),
                }
            }
        }
    }
    Ok(checks)
}

fn roots(config: &mut Config) -> Usage<Vec<Check>> {
    reject(config, &["pair", "max-n", "n", "family", "trials"])?;
    let name = config.catalog.get_or_insert_with(|| "sp4-gl2".into()).clone();
    let case: RootCase = name
        .parse()
        .map_err(|_| format!("unknown root case `{name}`; expected sl<2n>-sp<2n>, sp<2n>-gl<n> or sl<2n>-sl<n>sl<n>"))?;
    let (label, short, long) = match case {
        RootCase::SlSp(n) => {
            in_range("n", n, 2, 4)?;
            (format!("A{}", n - 1), 4, 4)
        }
        RootCase::SpGl(n) => {
            in_range("n", n, 2, 4)?;
            (format!("C{n}"), 1, 1)
        }
        RootCase::SlSl(n) => {
            in_range("n", n, 2, 4)?;
            (format!("C{n}"), 2, 1)
        }
    };
    let result = case
        .build::<Rational>()
        .and_then(|(g, css)| Ok((g.algebra().dim(), restricted_roots(g.algebra(), &css, None)?.0)));
    let (dim, sys) = match result {
        Ok(v) => v,
        Err(e) => return Ok(vec![Check::error("roots", e)]),
    };
    let prof = sys.profile();
    let weights: Vec<Value> = sys
        .integer_roots()
        .into_iter()
        .map(|(w, m)| {
            let w: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            json!({ "weight": format!("({})", w.join(",")), "multiplicity": m })
        })
        .collect();
    let classes: Vec<Value> = prof
        .classes
        .iter()
        .map(|c| json!({ "length_ratio": c.ratio.to_string(), "count": c.count, "multiplicities": c.multiplicities }))
        .collect();
    let total: usize = sys.zero_weight_dim + sys.pairs.iter().map(|p| 2 * p.multiplicity).sum::<usize>();
    Ok(vec![
        Check::equal(
            "profile",
            json!(label),
            json!(prof.label),
            json!({ "rank": prof.rank, "roots": prof.root_count }),
        ),
        Check::equal(
            "multiplicities",
            json!({ "short": short, "long": long }),
            json!({ "short": prof.m_short(), "long": prof.m_long() }),
            Value::Array(classes),
        ),
        Check::equal(
            "completeness",
            json!(dim),
            json!(total),
            json!({ "zero_weight_dim": sys.zero_weight_dim, "roots": weights }),
        ),
    ])
}

/// Short grading behind a Jordan family name and size.
fn short_for(family: &str, n: usize) -> Usage<(ShortKind, usize, usize)> {
    match family {
        "full" => Ok((ShortKind::Sl, in_range("n", n, 1, 4)?, n * n)),
        "sym" => Ok((ShortKind::Sp, in_range("n", n, 1, 4)?, n * (n + 1) / 2)),
        "skew" => Ok((ShortKind::SoSkew, in_range("n", n, 2, 3)?, n * (2 * n - 1))),
        "spin" => Ok((ShortKind::SoSpin, in_range("n", n, 2, 7)? + 3, n + 1)),
        other => Err(format!("unknown family `{other}`; known: full, sym, skew, spin")),
    }
}

fn kernel_checks(prefix: &str, family: &str, kind: ShortKind, size: usize, rng: &mut SeededRng) -> Vec<Check> {
    let expected_to_apply = matches!(family, "full" | "sym");
    let built = ShortGrading::<Rational>::new(kind, size)
        .and_then(|sg| sg.jordan_triad())
        .and_then(|t| lower_bound_kernel_construction(&t, rng));
    let b = match built {
        Ok(b) => b,
        Err(e) if expected_to_apply => return vec![Check::error(format!("{prefix}construction"), e)],
        Err(e) => return vec![Check::skip(format!("{prefix}construction"), e)],
    };
    let witness = json!({
        "rank": b.rank,
        "profile": b.profile,
        "subsystem": b.subsystem_profile,
        "m_short": b.m_short,
        "m_long": b.m_long,
        "dim_j": b.dim_j,
        "stabilizer_dims": [b.stabilizer_dims.0, b.stabilizer_dims.1],
    });
    let mut checks = vec![
        Check::equal(format!("{prefix}c-tilde-dim"), json!(b.rank / 2), json!(b.c_tilde_dim), Value::Null),
        Check::equal(format!("{prefix}centralizer-dim"), json!(b.z10_expected), json!(b.z10_dim), witness),
        Check::equal(format!("{prefix}bound"), json!(b.formula), json!(b.bound), Value::Null),
    ];
    if family == "sym" {
        checks.push(Check::equal(format!("{prefix}bound-is-dim-j"), json!(b.dim_j), json!(b.bound), Value::Null));
    }
    checks
}

fn bounds(config: &mut Config) -> Usage<Vec<Check>> {
    reject(config, &["pair", "max-n"])?;
    let mut rng = seeded(config.seed);
    if let Some(cat) = config.catalog.clone() {
        if cat != Entry::SlSp.id() || config.family.is_some() {
            return Err("bounds takes either --family (kernel construction) or --catalog sl-sp (single root)".into());
        }
        let n = in_range("n", *config.n.get_or_insert(2), 2, 3)?;
        let budget = *config.trials.get_or_insert(DEFAULT_BUDGET);
        let result = Entry::SlSp.build::<Rational>(n, Some(1)).and_then(|qd| {
            let c11 = build_css(qd.algebra(), qd.piece(Piece::G11), &mut rng, budget)?;
            lower_bound_single_root(&qd, c11.basis())
        });
        return Ok(match result {
            Ok(b) => vec![
                Check::equal(
                    "single-root/centralizer-dim",
                    json!(b.multiplicity),
                    json!(b.z10_dim),
                    json!({
                        "root": b.root.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                        "c11_dim": b.c11_dim,
                        "dim_g11": b.dim_g11,
                        "bound": b.bound,
                    }),
                ),
                Check::equal("single-root/c-tilde-codim", json!(1), json!(b.c11_dim - b.c_tilde_dim), Value::Null),
            ],
            Err(e) => vec![Check::error("single-root", e)],
        });
    }
    reject(config, &["trials"])?;
    let family = config.family.get_or_insert_with(|| "full".into()).clone();
    let n = *config.n.get_or_insert(2);
    let (kind, size, _) = short_for(&family, n)?;
    Ok(kernel_checks("kernel/", &family, kind, size, &mut rng))
}

fn jordan(config: &mut Config) -> Usage<Vec<Check>> {
    reject(config, &["pair", "max-n", "catalog"])?;
    let family = config.family.get_or_insert_with(|| "full".into()).clone();
    let n = *config.n.get_or_insert(3);
    let trials = in_range("trials", *config.trials.get_or_insert(100), 1, 10_000)?;
    let (kind, size, dim) = short_for(&family, n)?;
    let mut rng = seeded(config.seed);
    let triad = match ShortGrading::<Rational>::new(kind, size).and_then(|sg| sg.jordan_triad()) {
        Ok(t) => t,
        Err(e) => return Ok(vec![Check::error("short-grading", e)]),
    };
    let j = triad.jordan();
    let sg = triad.grading();
    let mut checks = vec![Check::equal("dim", json!(dim), json!(j.dim()), json!({ "grading": kind.id(), "matrix_size": kind.matrix_size(size) }))];
    let axioms = j.check_axioms(Some(&mut rng));
    checks.push(Check::new(
        "axioms",
        axioms.is_ok(),
        json!(true),
        json!(axioms.is_ok()),
        axioms.err().map_or(Value::Null, |e| json!({ "error": e.to_string() })),
    ));
    let half_f = sg.f().scale(&Rational::new(1.into(), 2.into()));
    let unit_is_half_f = j.unit().and_then(|u| j.to_matrix(&u)).is_some_and(|u| u == half_f);
    checks.push(Check::equal("unit", json!("f/2"), json!(if unit_is_half_f { "f/2" } else { "other" }), Value::Null));

    let zero = Rational::from_integer(0.into());
    let (mut identity_ok, mut agree, mut zero_products) = (0, 0, 0);
    for i in 0..trials {
        let x = j.random_element(&mut rng, 3);
        let y = if i % 2 == 0 {
            j.random_element(&mut rng, 3)
        } else {
            // an element of the annihilator of x when there is one
            let ann = j.centralizer(&x);
            if ann.is_zero() {
                j.random_element(&mut rng, 3)
            } else {
                ann.element(&small_vector::<Rational>(&mut rng, ann.dim(), 3))
            }
        };
        let (xm, ym) = (j.to_matrix(&x).expect("realized"), j.to_matrix(&y).expect("realized"));
        if triad.tkk_identity_holds(&xm, &ym) {
            identity_ok += 1;
        }
        for (a, b, am, bm) in [(&x, &y, &xm, &ym), (&y, &x, &ym, &xm)] {
            let is_zero = j.mul(a, b).iter().all(|v| *v == zero);
            zero_products += usize::from(is_zero);
            if triad.transported_pair_commutes(am, bm) == is_zero {
                agree += 1;
            }
        }
    }
    checks.push(Check::equal(
        "transport-identity",
        json!(trials),
        json!(identity_ok),
        json!({ "constant": TKK_CONSTANT }),
    ));
    checks.push(Check::equal(
        "transport-commutes-iff-zero-product",
        json!(2 * trials),
        json!(agree),
        json!({ "zero_products": zero_products }),
    ));
    checks.extend(kernel_checks("kernel/", &family, kind, size, &mut rng));
    if family == "full" {
        match fiber_bound_report::<Rational>(n, &mut rng) {
            Ok(r) => {
                let witness = json!({
                    "constraint_count": r.constraint_count,
                    "lie_centralizer_dim": r.lie_centralizer_dim,
                    "witness_invertible": r.witness_invertible,
                    "isomorphism_ok": r.isomorphism_ok,
                });
                checks.push(Check::new(
                    "fibre/centralizer-dim",
                    r.passes() && r.jordan_centralizer_dim == n,
                    json!(n),
                    json!(r.jordan_centralizer_dim),
                    witness,
                ));
                checks.push(Check::equal(
                    "fibre/constraint-count",
                    json!(n.div_ceil(2)),
                    json!(r.constraint_count),
                    Value::Null,
                ));
                checks.push(Check::equal("fibre/bound", json!(n * n + n / 2), json!(r.component_dim), Value::Null));
            }
            Err(e) => checks.push(Check::error("fibre", e)),
        }
    }
    Ok(checks)
}

/// Random element of `g1`; half the time restricted to a random coordinate
/// subspace so that degenerate elements appear.
fn homogeneous_sample(g: &Z2Grading<Rational>, rng: &mut SeededRng) -> QMatrix {
    use rand::Rng;
    let alg = g.algebra();
    if rng.gen_bool(0.5) {
        return alg.random_in(g.g1(), rng, 3);
    }
    let keep: Vec<Vec<Rational>> = g.g1().basis().iter().filter(|_| rng.gen_bool(0.4)).cloned().collect();
    let sub = Subspace::span(alg.dim(), &keep).expect("same ambient");
    alg.random_in(&sub, rng, 3)
}

fn grading_checks(qd: &Quaternionic<Rational>, trials: usize, seed: u64) -> Vec<Check> {
    let sigmas = [qd.sigma1(), qd.sigma2(), qd.sigma3()];
    let per_sigma: Vec<Vec<Check>> = sigmas
        .par_iter()
        .enumerate()
        .map(|(i, theta)| {
            let prefix = format!("sigma{}", i + 1);
            let g = match Z2Grading::new(qd.algebra().clone(), (*theta).clone()) {
                Ok(g) => g,
                Err(e) => return vec![Check::error(format!("{prefix}/grading"), e)],
            };
            let mut rng = seeded(seed.wrapping_add(i as u64));
            let (d0, d1) = (g.g0().dim() as i64, g.g1().dim() as i64);
            let rank = g.algebra().lie_rank() as i64;
            let max_rank = g.is_maximal_rank();
            let (mut identity, mut rank_identity, mut errors) = (0, 0, Vec::new());
            for _ in 0..trials {
                let x = homogeneous_sample(&g, &mut rng);
                match g.centralizer_dims(&x) {
                    Ok(c) => {
                        let (e, o) = (c.even as i64, c.odd as i64);
                        identity += usize::from(d0 - e == d1 - o);
                        rank_identity += usize::from(o == e + rank);
                    }
                    Err(e) => errors.push(e.to_string()),
                }
            }
            let witness = json!({ "dim_g0": d0, "dim_g1": d1, "rank": rank, "maximal_rank": max_rank, "errors": errors });
            let mut checks = vec![Check::equal(
                format!("{prefix}/centralizer-identity"),
                json!(trials),
                json!(identity),
                witness,
            )];
            let id = format!("{prefix}/rank-identity");
            if max_rank {
                checks.push(Check::equal(id, json!(trials), json!(rank_identity), Value::Null));
            } else {
                checks.push(Check::skip(id, "involution is not of maximal rank"));
            }
            checks
        })
        .collect();
    per_sigma.into_iter().flatten().collect()
}

fn triad(config: &mut Config) -> Usage<Vec<Check>> {
    reject(config, &["pair", "max-n", "family"])?;
    let (entry, n) = parse_entry(config, Entry::SpTriad)?;
    let trials = in_range("trials", *config.trials.get_or_insert(50), 1, 10_000)?;
    let qd = match entry.build::<Rational>(n, None) {
        Ok(q) => q,
        Err(e) => return Ok(vec![Check::error("build", e)]),
    };
    let dims = qd.dims();
    let mut checks = vec![Check::equal(
        "pieces",
        json!(qd.algebra().dim()),
        json!(dims.iter().sum::<usize>()),
        json!({ "g00": dims[0], "g01": dims[1], "g10": dims[2], "g11": dims[3] }),
    )];
    let failure = qd.bracket_failure().map(|(a, b)| format!("[{a}, {b}]"));
    checks.push(Check::equal("brackets", Value::Null, json!(failure), Value::Null));
    if let Some(kind) = entry.short_kind() {
        checks.push(Check::equal(
            "odd-pieces-equal",
            json!([dims[3], dims[3], dims[3]]),
            json!([dims[1], dims[2], dims[3]]),
            Value::Null,
        ));
        let matched = ShortGrading::<Rational>::new(kind, n)
            .and_then(|sg| sg.jordan_triad())
            .and_then(|t| t.pieces_match());
        match matched {
            Ok(m) => checks.push(Check::equal("pieces-from-short-grading", json!(true), json!(m), Value::Null)),
            Err(e) => checks.push(Check::error("pieces-from-short-grading", e)),
        }
    }
    checks.extend(grading_checks(&qd, trials, config.seed));
    Ok(checks)
}
