//! Centralizer dimensions of nilpotent elements from their partitions, and
//! exhaustive checks of the inequality `dim g0^e + rk g - dim g1^e > 0` for
//! classical symmetric pairs.

pub mod oracle;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self { parts })
    }

    /// `(head, 1^(n - head))`.
    pub fn hook(head: usize, n: usize) -> Self {
        assert!(head >= 1 && head <= n);
        let mut parts = vec![head];
        parts.extend(std::iter::repeat_n(1, n - head));
        Self { parts }
    }

    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn odd_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// The partition of the zero nilpotent.
    pub fn is_trivial(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Every even part has even multiplicity (orthogonal Jordan types).
    pub fn is_orthogonal(&self) -> bool {
        self.multiplicities().all(|(p, m)| p % 2 == 1 || m % 2 == 0)
    }

    /// Every odd part has even multiplicity (symplectic Jordan types).
    pub fn is_symplectic(&self) -> bool {
        self.multiplicities().all(|(p, m)| p % 2 == 0 || m % 2 == 0)
    }

    fn multiplicities(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out.into_iter()
    }

    /// Each part repeated twice.
    pub fn doubled(&self) -> Self {
        Self {
            parts: self.parts.iter().flat_map(|&p| [p, p]).collect(),
        }
    }

    /// The partition without its first part.
    pub fn tail(&self) -> Self {
        Self {
            parts: self.parts[1..].to_vec(),
        }
    }

    fn pair_min_sum(&self) -> i64 {
        let mut s = 0;
        for i in 0..self.parts.len() {
            for j in i + 1..self.parts.len() {
                s += self.parts[i].min(self.parts[j]) as i64;
            }
        }
        s
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// All partitions of `n`, in decreasing lexicographic order starting at `(n)`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// `dim gl_n^e = n + 2 sum_{i<j} min(l_i, l_j)`.
pub fn dim_cent_gl(l: &Partition) -> i64 {
    l.n() as i64 + 2 * l.pair_min_sum()
}

pub fn dim_cent_sl(l: &Partition) -> i64 {
    dim_cent_gl(l) - 1
}

/// `(dim gl^e + #odd) / 2` for symplectic Jordan types.
pub fn dim_cent_sp(l: &Partition) -> Result<i64> {
    if !l.is_symplectic() || l.n() % 2 == 1 {
        return Err(Error::InvalidPartition(format!("{l} is not a symplectic type")));
    }
    Ok((dim_cent_gl(l) + l.odd_count() as i64) / 2)
}

/// `(dim gl^e - #odd) / 2` for orthogonal Jordan types.
pub fn dim_cent_so(l: &Partition) -> Result<i64> {
    if !l.is_orthogonal() {
        return Err(Error::InvalidPartition(format!("{l} is not an orthogonal type")));
    }
    Ok((dim_cent_gl(l) - l.odd_count() as i64) / 2)
}

/// `F(l; m) = sum i l_i + sum j m_j - 1 - sum_{i,j} min(l_i, m_j)`.
pub fn f_function(l: &Partition, m: &Partition) -> i64 {
    let a: i64 = l.parts.iter().enumerate().map(|(i, &p)| ((i + 1) * p) as i64).sum();
    let b: i64 = m.parts.iter().enumerate().map(|(j, &p)| ((j + 1) * p) as i64).sum();
    let c: i64 = l
        .parts
        .iter()
        .flat_map(|&x| m.parts.iter().map(move |&y| x.min(y) as i64))
        .sum();
    a + b - 1 - c
}

/// Symmetric pairs `(g, g0)` with a nilpotent of `g0` described by partitions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PairKind {
    /// `(sl_n, so_n)`
    SlSo,
    /// `(sp_2n, gl_n)`
    SpGl,
    /// `(so_2n, gl_n)`
    SoGl,
    /// `(sl_{n+m}, sl_n + sl_m + t_1)`
    SlSl,
    /// `(sl_2n, sp_2n)`
    SlSp,
    /// `(sp_{2n+2m}, sp_2n + sp_2m)`
    SpSp,
    /// `(so_{n+m}, so_n + so_m)`
    SoSo,
}

impl PairKind {
    pub const ALL: [PairKind; 7] = [
        PairKind::SlSo,
        PairKind::SpGl,
        PairKind::SoGl,
        PairKind::SlSl,
        PairKind::SlSp,
        PairKind::SpSp,
        PairKind::SoSo,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            PairKind::SlSo => "sl-so",
            PairKind::SpGl => "sp-gl",
            PairKind::SoGl => "so-gl",
            PairKind::SlSl => "sl-sl",
            PairKind::SlSp => "sl-sp",
            PairKind::SpSp => "sp-sp",
            PairKind::SoSo => "so-so",
        }
    }

    /// Whether closed formulas exist; the other pairs go through the matrix
    /// oracle only.
    pub fn has_formula(&self) -> bool {
        matches!(
            self,
            PairKind::SlSo | PairKind::SpGl | PairKind::SoGl | PairKind::SlSl
        )
    }

    /// Whether the nilpotent of `g0` is described by two partitions.
    pub fn is_two_sided(&self) -> bool {
        matches!(self, PairKind::SlSl | PairKind::SpSp | PairKind::SoSo)
    }
}

impl fmt::Display for PairKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for PairKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PairKind::ALL
            .into_iter()
            .find(|p| p.id() == s)
            .ok_or_else(|| Error::Unsupported(format!("pair {s}")))
    }
}

/// Nilpotent data for a pair: one partition, or two for the block pairs.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NilpotentData {
    One(Partition),
    Two(Partition, Partition),
}

impl NilpotentData {
    pub fn is_zero(&self) -> bool {
        match self {
            NilpotentData::One(l) => l.is_trivial(),
            NilpotentData::Two(l, m) => l.is_trivial() && m.is_trivial(),
        }
    }
}

impl fmt::Display for NilpotentData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NilpotentData::One(l) => write!(f, "{l}"),
            NilpotentData::Two(l, m) => write!(f, "{l};{m}"),
        }
    }
}

/// Graded centralizer dimensions of a nilpotent `e` in `g0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDims {
    pub g0e: i64,
    pub g1e: i64,
    pub rank: i64,
}

impl GradedDims {
    /// `dim g0^e + rk g - dim g1^e`.
    pub fn defect(&self) -> i64 {
        self.g0e + self.rank - self.g1e
    }
}

/// Closed-form graded centralizer dimensions for the pairs with formulas.
pub fn graded_dims(pair: PairKind, data: &NilpotentData) -> Result<GradedDims> {
    match (pair, data) {
        (PairKind::SlSo, NilpotentData::One(l)) => {
            let g0e = dim_cent_so(l)?;
            let g1e = (dim_cent_gl(l) + l.odd_count() as i64) / 2 - 1;
            Ok(GradedDims {
                g0e,
                g1e,
                rank: l.n() as i64 - 1,
            })
        }
        (PairKind::SpGl, NilpotentData::One(l)) => {
            let s = l.pair_min_sum();
            let ceil: i64 = l.parts.iter().map(|&p| p.div_ceil(2) as i64).sum();
            Ok(GradedDims {
                g0e: dim_cent_gl(l),
                g1e: 2 * ceil + 2 * s,
                rank: l.n() as i64,
            })
        }
        (PairKind::SoGl, NilpotentData::One(l)) => {
            let s = l.pair_min_sum();
            let floor: i64 = l.parts.iter().map(|&p| (p / 2) as i64).sum();
            Ok(GradedDims {
                g0e: dim_cent_gl(l),
                g1e: 2 * floor + 2 * s,
                rank: l.n() as i64,
            })
        }
        (PairKind::SlSl, NilpotentData::Two(l, m)) => {
            let (n, mm) = (l.n() as i64, m.n() as i64);
            let cross: i64 = l
                .parts
                .iter()
                .flat_map(|&x| m.parts.iter().map(move |&y| x.min(y) as i64))
                .sum();
            Ok(GradedDims {
                g0e: n + mm - 1 + 2 * l.pair_min_sum() + 2 * m.pair_min_sum(),
                g1e: 2 * cross,
                rank: n + mm - 1,
            })
        }
        (p, d) => Err(Error::Unsupported(format!("no closed formula for {p} at {d}"))),
    }
}

/// The closed per-pair defect expressions, independent of [`graded_dims`].
pub fn defect(pair: PairKind, data: &NilpotentData) -> Result<i64> {
    match (pair, data) {
        (PairKind::SlSo, NilpotentData::One(l)) => {
            if !l.is_orthogonal() {
                return Err(Error::InvalidPartition(format!("{l} is not orthogonal")));
            }
            Ok(l.n() as i64 - l.odd_count() as i64)
        }
        (PairKind::SpGl, NilpotentData::One(l)) => Ok(l.n() as i64 - l.odd_count() as i64),
        (PairKind::SoGl, NilpotentData::One(l)) => Ok(l.n() as i64 + l.odd_count() as i64),
        (PairKind::SlSl, NilpotentData::Two(l, m)) => Ok(2 * f_function(l, m)),
        (p, d) => Err(Error::Unsupported(format!("no closed formula for {p} at {d}"))),
    }
}

/// Admissible nilpotent data of `g0` at size `size`. For one-partition pairs
/// `size` is `n`; for two-sided pairs it is `n + m` (ambient matrix size for
/// `sp-sp` and `so-so`, with `n`, `m` the block sizes).
pub fn admissible_data(pair: PairKind, size: usize) -> Vec<NilpotentData> {
    match pair {
        PairKind::SlSo => partitions_of(size)
            .into_iter()
            .filter(Partition::is_orthogonal)
            .map(NilpotentData::One)
            .collect(),
        PairKind::SpGl | PairKind::SoGl => {
            partitions_of(size).into_iter().map(NilpotentData::One).collect()
        }
        PairKind::SlSp => {
            if size % 2 == 1 {
                return Vec::new();
            }
            partitions_of(size)
                .into_iter()
                .filter(Partition::is_symplectic)
                .map(NilpotentData::One)
                .collect()
        }
        PairKind::SlSl | PairKind::SpSp | PairKind::SoSo => {
            let mut out = Vec::new();
            for n in 1..size {
                let m = size - n;
                if pair == PairKind::SpSp && (n % 2 == 1 || m % 2 == 1) {
                    continue;
                }
                if pair == PairKind::SoSo && n < m {
                    // so_n + so_m and so_m + so_n are the same pair
                    continue;
                }
                let keep = |p: &Partition| match pair {
                    PairKind::SpSp => p.is_symplectic(),
                    PairKind::SoSo => p.is_orthogonal(),
                    _ => true,
                };
                for l in partitions_of(n).into_iter().filter(keep) {
                    for mu in partitions_of(m).into_iter().filter(keep) {
                        out.push(NilpotentData::Two(l.clone(), mu));
                    }
                }
            }
            out
        }
    }
}

/// Slack in the tail recursion `F(l; m) >= F(l'; m') + max(l_1, m_1)` where
/// primes drop the first part. Only defined when both have two or more parts.
pub fn recursion_slack(l: &Partition, m: &Partition) -> Option<i64> {
    if l.len() < 2 || m.len() < 2 {
        return None;
    }
    let lhs = f_function(l, m);
    let rhs = f_function(&l.tail(), &m.tail()) + l.parts[0].max(m.parts[0]) as i64;
    Some(lhs - rhs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub instance: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeSummary {
    pub size: usize,
    pub instances: usize,
    pub min_defect: Option<i64>,
    pub argmin: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub pair: String,
    pub bound: usize,
    pub min_defect: Option<i64>,
    pub argmin: Vec<String>,
    pub violations: Vec<Violation>,
    pub instances_checked: usize,
    pub per_size: Vec<SizeSummary>,
}

/// Smallest size at which a pair has a nonzero nilpotent in `g0`.
pub fn min_size(pair: PairKind) -> usize {
    match pair {
        PairKind::SlSo => 3,
        PairKind::SpGl | PairKind::SoGl | PairKind::SlSl | PairKind::SoSo => 2,
        PairKind::SlSp => 4,
        PairKind::SpSp => 4,
    }
}

struct Evaluated {
    data: NilpotentData,
    defect: i64,
    violations: Vec<String>,
}

fn evaluate_formula(pair: PairKind, data: NilpotentData) -> Result<Evaluated> {
    let dims = graded_dims(pair, &data)?;
    let closed = defect(pair, &data)?;
    let mut violations = Vec::new();
    if dims.defect() != closed {
        violations.push(format!(
            "graded dims give {} but closed form gives {closed}",
            dims.defect()
        ));
    }
    if closed % 2 != 0 {
        violations.push(format!("defect {closed} is odd"));
    }
    match (&pair, &data) {
        (PairKind::SoGl, _) if dims.g0e < dims.g1e => {
            violations.push(format!("dim g0^e - dim g1^e = {} < 0", dims.g0e - dims.g1e));
        }
        (PairKind::SlSl, NilpotentData::Two(l, m)) => {
            let f = f_function(l, m);
            if f < 0 || (l.n() + m.n() >= 3 && f == 0) {
                violations.push(format!("F = {f}"));
            }
            if let Some(s) = recursion_slack(l, m) {
                if s < 0 {
                    violations.push(format!("tail recursion fails by {}", -s));
                }
            }
        }
        _ => {}
    }
    if !data.is_zero() && closed <= 0 {
        violations.push(format!("defect {closed} is not positive"));
    }
    Ok(Evaluated {
        data,
        defect: closed,
        violations,
    })
}

fn assemble(
    pair: PairKind,
    bound: usize,
    per_size: Vec<(usize, Vec<Evaluated>)>,
) -> SweepReport {
    let mut report = SweepReport {
        pair: pair.id().to_string(),
        bound,
        min_defect: None,
        argmin: Vec::new(),
        violations: Vec::new(),
        instances_checked: 0,
        per_size: Vec::new(),
    };
    for (size, evals) in per_size {
        let mut summary = SizeSummary {
            size,
            instances: evals.len(),
            min_defect: None,
            argmin: Vec::new(),
        };
        for ev in evals {
            report.instances_checked += 1;
            for reason in ev.violations {
                report.violations.push(Violation {
                    instance: format!("{size}:{}", ev.data),
                    reason,
                });
            }
            if ev.data.is_zero() {
                continue;
            }
            for (min, arg) in [
                (&mut summary.min_defect, &mut summary.argmin),
                (&mut report.min_defect, &mut report.argmin),
            ] {
                match *min {
                    Some(v) if v < ev.defect => {}
                    Some(v) if v == ev.defect => arg.push(ev.data.to_string()),
                    _ => {
                        *min = Some(ev.defect);
                        arg.clear();
                        arg.push(ev.data.to_string());
                    }
                }
            }
        }
        report.per_size.push(summary);
    }
    report
}

/// Exhaustive check of the inequality over all admissible nilpotent data of
/// sizes `min_size(pair)..=bound`. Formula pairs use the closed expressions;
/// the others fall back to [`oracle::sweep`].
pub fn sweep(pair: PairKind, bound: usize) -> Result<SweepReport> {
    if bound < 2 {
        return Err(Error::InvalidSize(format!("sweep bound {bound} < 2")));
    }
    if !pair.has_formula() {
        return oracle::sweep(pair, bound);
    }
    let sizes: Vec<usize> = (min_size(pair)..=bound).collect();
    let per_size = sizes
        .par_iter()
        .map(|&size| {
            let evals = admissible_data(pair, size)
                .into_iter()
                .map(|d| evaluate_formula(pair, d))
                .collect::<Result<Vec<_>>>()?;
            Ok((size, evals))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(assemble(pair, bound, per_size))
}

/// Oracle rows of one size: data, measured dims, violations found so far.
pub(crate) type OracleRows = (usize, Vec<(NilpotentData, GradedDims, Vec<String>)>);

pub(crate) fn assemble_oracle(pair: PairKind, bound: usize, per_size: Vec<OracleRows>) -> SweepReport {
    let per_size = per_size
        .into_iter()
        .map(|(size, rows)| {
            let evals = rows
                .into_iter()
                .map(|(data, dims, mut violations)| {
                    let d = dims.defect();
                    if d % 2 != 0 {
                        violations.push(format!("defect {d} is odd"));
                    }
                    if !data.is_zero() && d <= 0 {
                        violations.push(format!("defect {d} is not positive"));
                    }
                    Evaluated {
                        data,
                        defect: d,
                        violations,
                    }
                })
                .collect();
            (size, evals)
        })
        .collect();
    assemble(pair, bound, per_size)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn parsing_and_validation() {
        assert_eq!("(3,1,1)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "(3,1,1)");
    }

    #[test]
    fn gl_formula_examples() {
        assert_eq!(dim_cent_gl(&Partition::ones(4)), 16);
        assert_eq!(dim_cent_gl(&p(&[2, 1])), 5);
        assert_eq!(dim_cent_gl(&p(&[11, 2, 2, 1])), 34);
        assert_eq!(dim_cent_sl(&p(&[2, 1])), 4);
    }

    #[test]
    fn so16_data_points() {
        assert_eq!(dim_cent_so(&p(&[11, 2, 2, 1])).unwrap(), 16);
        assert_eq!(dim_cent_so(&p(&[7, 5, 2, 2])).unwrap(), 22);
        assert_eq!(dim_cent_so(&p(&[7, 4, 4, 1])).unwrap(), 22);
        assert!(dim_cent_so(&p(&[2, 1])).is_err());
        assert!(dim_cent_sp(&p(&[3, 1])).is_err());
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_function(&p(&[1]), &p(&[1])), 0);
        assert_eq!(f_function(&p(&[1, 1]), &p(&[1])), 1);
        assert_eq!(f_function(&p(&[2]), &p(&[1, 1])), 2);
        for n in 1..6 {
            for m in 1..6 {
                let v = f_function(&Partition::ones(n), &Partition::ones(m));
                let (n, m) = (n as i64, m as i64);
                assert_eq!(2 * v, (n - m) * (n - m) + (n + m) - 2);
            }
        }
    }

    #[test]
    fn defect_examples() {
        for n in 3..10 {
            let d = defect(PairKind::SlSo, &NilpotentData::One(Partition::hook(3, n))).unwrap();
            assert_eq!(d, 2);
        }
        let d = defect(PairKind::SpGl, &NilpotentData::One(Partition::hook(2, 5))).unwrap();
        assert_eq!(d, 2);
        let d = defect(PairKind::SlSl, &NilpotentData::Two(p(&[1]), p(&[1]))).unwrap();
        assert_eq!(d, 0);
    }

    #[test]
    fn sweep_sl_so() {
        let r = sweep(PairKind::SlSo, 10).unwrap();
        assert!(r.violations.is_empty(), "{:?}", r.violations);
        assert_eq!(r.min_defect, Some(2));
        for s in &r.per_size {
            assert_eq!(s.min_defect, Some(2));
            assert!(s.argmin.contains(&Partition::hook(3, s.size).to_string()));
        }
    }
}
