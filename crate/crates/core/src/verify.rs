//! Brute-force oracles and cross-check suites.
//!
//! Each oracle here counts objects directly and shares no code path with
//! what it checks: partitions are enumerated one by one, the Gaussian
//! binomial recurrence runs on its own coefficient vectors, permutations are
//! listed exhaustively, and product cells are paired explicitly.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cellular::FibreSpec;
use crate::error::{Error, Result};
use crate::tate::{TateMotive, Twist};
use crate::tower::{BaseSpec, TowerSpec};
use crate::weyl::{self, Family, OrbitCap, ParabolicSpec, RootSystem};

pub const DEFAULT_SEED: u64 = 0x006d_6f74_6361_6c63;

/// Largest `n` accepted by [`permutation_length_profile`].
pub const MAX_PERMUTATION_LETTERS: u32 = 9;

/// Affine-cell dimensions of an explicit cellular variety.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellModel {
    cells: Vec<Twist>,
}

impl CellModel {
    pub fn new(cells: Vec<Twist>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidArgument(
                "a cell model needs at least one cell".into(),
            ));
        }
        Ok(Self { cells })
    }

    pub fn cells(&self) -> &[Twist] {
        &self.cells
    }

    /// Motive with one `1(-d)` per cell of dimension `d`.
    pub fn motive(&self) -> TateMotive {
        TateMotive::from_cells(&self.cells)
    }
}

fn histogram(values: impl IntoIterator<Item = Twist>) -> TateMotive {
    let mut counts: BTreeMap<Twist, u64> = BTreeMap::new();
    for v in values {
        *counts.entry(v).or_default() += 1;
    }
    TateMotive::from_multiplicities(counts.into_iter().map(|(k, c)| (i64::from(k), c)))
        .expect("nonnegative")
}

/// Weights of all partitions fitting in a `rows × cols` box, enumerated
/// exhaustively as nonincreasing sequences `cols ≥ λ_1 ≥ ... ≥ λ_rows ≥ 0`.
pub fn partitions_in_box(rows: u32, cols: u32) -> TateMotive {
    fn walk(rows_left: u32, max_part: u32, weight: Twist, out: &mut Vec<Twist>) {
        if rows_left == 0 {
            out.push(weight);
            return;
        }
        for part in 0..=max_part {
            walk(rows_left - 1, part, weight + part, out);
        }
    }
    let mut weights = Vec::new();
    walk(rows, cols, 0, &mut weights);
    histogram(weights)
}

/// Coefficients of the Gaussian binomial `[n choose d]_q` from
/// `G(n, d) = G(n-1, d-1) + q^d G(n-1, d)`, `G(n, 0) = G(n, n) = 1`.
pub fn gaussian_binomial(n: u32, d: u32) -> Result<TateMotive> {
    if d > n {
        return Err(Error::InvalidArgument(format!(
            "Gaussian binomial [{n} choose {d}] needs d <= n"
        )));
    }
    fn rec(n: u32, d: u32, memo: &mut BTreeMap<(u32, u32), Vec<BigUint>>) -> Vec<BigUint> {
        if d == 0 || d == n {
            return vec![BigUint::from(1u32)];
        }
        if let Some(v) = memo.get(&(n, d)) {
            return v.clone();
        }
        let left = rec(n - 1, d - 1, memo);
        let right = rec(n - 1, d, memo);
        let len = (d * (n - d) + 1) as usize;
        let mut out = vec![BigUint::zero(); len];
        for (i, c) in left.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in right.iter().enumerate() {
            out[i + d as usize] += c;
        }
        memo.insert((n, d), out.clone());
        out
    }
    Ok(TateMotive::from_coefficients(rec(
        n,
        d,
        &mut BTreeMap::new(),
    )))
}

/// Inversion-count profile of all permutations of `n` letters.
pub fn permutation_length_profile(n: u32) -> Result<TateMotive> {
    if n == 0 || n > MAX_PERMUTATION_LETTERS {
        return Err(Error::InvalidArgument(format!(
            "permutation profile needs 1 <= n <= {MAX_PERMUTATION_LETTERS}, got {n}"
        )));
    }
    let inversions = (0..n).permutations(n as usize).map(|perm| {
        perm.iter()
            .tuple_combinations()
            .filter(|(a, b)| a > b)
            .count() as Twist
    });
    Ok(histogram(inversions))
}

/// Cells of `A × B`: one of dimension `a_i + b_j` per pair of cells.
pub fn kunneth_cells(a: &CellModel, b: &CellModel) -> TateMotive {
    histogram(
        a.cells
            .iter()
            .cartesian_product(b.cells.iter())
            .map(|(x, y)| x + y),
    )
}

/// A random fibre: `P^n` with `n ≤ 4`, `Gr(d, n)` with `n ≤ 6`, or a list of
/// at most 8 cells of dimension at most 6.
pub fn random_fibre<R: Rng>(rng: &mut R) -> FibreSpec {
    match rng.gen_range(0..3) {
        0 => FibreSpec::ProjectiveSpace(rng.gen_range(0..=4)),
        1 => {
            let n = rng.gen_range(1..=6);
            FibreSpec::Grassmannian {
                d: rng.gen_range(0..=n),
                n,
            }
        }
        _ => FibreSpec::ExplicitCellular(random_cells(rng, 8, 6).expect("nonempty").cells),
    }
}

/// A random cell model with 1 to `max_cells` cells of dimension `≤ max_dim`.
pub fn random_cells<R: Rng>(rng: &mut R, max_cells: usize, max_dim: Twist) -> Result<CellModel> {
    let len = rng.gen_range(1..=max_cells);
    CellModel::new((0..len).map(|_| rng.gen_range(0..=max_dim)).collect())
}

/// The named cross-check suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Grassmannian constructor vs. partitions vs. Gaussian binomials vs.
    /// type-A cosets, for all `2 ≤ n ≤ bound`.
    Grassmann,
    /// Palindromic coset profiles for every parabolic of every type of rank
    /// `≤ bound`.
    Duality,
    /// Type-A full flags vs. inversion counts, `n ≤ bound`.
    Flags,
    /// `bound` random pairs of cell models: tensor vs. paired cells.
    Kunneth,
    /// Enumerated vs. closed-form Weyl group orders, rank `≤ bound`.
    WeylOrders,
    /// `bound` random towers: associativity and rank multiplicativity.
    Tower,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Grassmann,
        Suite::Duality,
        Suite::Flags,
        Suite::Kunneth,
        Suite::WeylOrders,
        Suite::Tower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Grassmann => "grassmann",
            Suite::Duality => "duality",
            Suite::Flags => "flags",
            Suite::Kunneth => "kunneth",
            Suite::WeylOrders => "weyl-orders",
            Suite::Tower => "tower",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub bound: u32,
    pub seed: u64,
    pub cases: Vec<CaseResult>,
}

/// Machine-readable digest of a [`SuiteReport`].
#[derive(Debug, Clone, Serialize)]
pub struct SuiteSummary<'a> {
    pub suite: Suite,
    pub bound: u32,
    pub seed: u64,
    pub status: &'static str,
    pub cases: usize,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<&'a CaseResult>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.passed)
    }

    pub fn summary(&self) -> SuiteSummary<'_> {
        let failures: Vec<&CaseResult> = self.failures().collect();
        SuiteSummary {
            suite: self.suite,
            bound: self.bound,
            seed: self.seed,
            status: if failures.is_empty() { "pass" } else { "fail" },
            cases: self.cases.len(),
            passed: self.cases.len() - failures.len(),
            failed: failures.len(),
            failures,
        }
    }
}

/// One line per case: `suite case-id PASS|FAIL detail`.
impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.cases {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{} {} {} {}", self.suite, c.id, status, c.detail)?;
        }
        Ok(())
    }
}

struct Cases(Vec<CaseResult>);

impl Cases {
    fn push(&mut self, id: String, passed: bool, detail: String) {
        self.0.push(CaseResult { id, passed, detail });
    }

    /// Records a case comparing several named routes that must agree.
    fn agree(&mut self, id: String, routes: &[(&str, TateMotive)]) {
        let first = &routes[0].1;
        if routes.iter().all(|(_, m)| m == first) {
            self.push(id, true, first.to_string());
        } else {
            let detail = routes
                .iter()
                .map(|(name, m)| format!("{name}=[{}]", m.multiplicity_line()))
                .join(" ");
            self.push(id, false, detail);
        }
    }

    fn error(&mut self, id: String, err: Error) {
        self.push(id, false, format!("error: {err}"));
    }

    fn finish(mut self) -> Vec<CaseResult> {
        self.0.sort_by(|a, b| a.id.cmp(&b.id));
        self.0
    }
}

fn root_systems_up_to(rank: u32) -> Vec<RootSystem> {
    Family::ALL
        .iter()
        .flat_map(|&f| (1..=rank as usize).filter_map(move |r| RootSystem::new(f, r).ok()))
        .collect()
}

fn system_id(rs: &RootSystem) -> String {
    format!("{}{}", rs.family(), rs.rank())
}

fn levi_id(p: &ParabolicSpec) -> String {
    if p.levi().is_empty() {
        "levi-none".to_string()
    } else {
        format!("levi-{}", p.levi().iter().join("."))
    }
}

/// Runs a suite. `bound` is the size parameter described on [`Suite`]; the
/// seed only affects the randomized suites.
pub fn run_suite(suite: Suite, bound: u32, seed: u64, cap: OrbitCap) -> Result<SuiteReport> {
    if bound == 0 {
        return Err(Error::InvalidArgument(
            "suite bound must be positive".into(),
        ));
    }
    let mut cases = Cases(Vec::new());
    match suite {
        Suite::Grassmann => grassmann_cases(&mut cases, bound, cap),
        Suite::Duality => duality_cases(&mut cases, bound, cap),
        Suite::Flags => flags_cases(&mut cases, bound, cap)?,
        Suite::Kunneth => kunneth_cases(&mut cases, bound, seed),
        Suite::WeylOrders => weyl_order_cases(&mut cases, bound, cap),
        Suite::Tower => tower_cases(&mut cases, bound, seed, cap),
    }
    Ok(SuiteReport {
        suite,
        bound,
        seed,
        cases: cases.finish(),
    })
}

fn grassmann_cases(cases: &mut Cases, bound: u32, cap: OrbitCap) {
    for n in 2..=bound {
        for d in 1..n {
            let id = format!("n{n:02}-d{d:02}");
            let constructor = FibreSpec::Grassmannian { d, n }.motive(cap);
            let gaussian = gaussian_binomial(n, d);
            let rank = (n - 1) as usize;
            let cosets = RootSystem::new(Family::A, rank).and_then(|rs| {
                weyl::gp_motive(&rs, &ParabolicSpec::maximal(rank, d as usize), cap)
            });
            match (constructor, gaussian, cosets) {
                (Ok(c), Ok(g), Ok(w)) => cases.agree(
                    id,
                    &[
                        ("constructor", c),
                        ("partitions", partitions_in_box(d, n - d)),
                        ("gaussian", g),
                        ("cosets", w),
                    ],
                ),
                (Err(e), _, _) | (_, Err(e), _) | (_, _, Err(e)) => cases.error(id, e),
            }
        }
    }
}

/// Case for a system whose orbit exceeds the cap: passes iff the cap is
/// reported with the exact estimated orbit size.
fn expect_cap(cases: &mut Cases, id: String, result: Result<u64>, estimated: u128, cap: OrbitCap) {
    match result {
        Err(Error::OrbitCapExceeded { estimated: e, .. }) if e == estimated => cases.push(
            id,
            true,
            format!("rejected by orbit cap ({estimated} > {})", cap.0),
        ),
        Err(e) => cases.error(id, e),
        Ok(n) => cases.push(id, false, format!("enumerated {n} points beyond the cap")),
    }
}

fn duality_cases(cases: &mut Cases, bound: u32, cap: OrbitCap) {
    for rs in root_systems_up_to(bound) {
        for p in ParabolicSpec::all(rs.rank()) {
            let id = format!("{}-{}", system_id(&rs), levi_id(&p));
            let (estimated, dim) = match (rs.coset_count_closed_form(&p), rs.flag_dimension(&p)) {
                (Ok(e), Ok(d)) => (e, d as Twist),
                (Err(e), _) | (_, Err(e)) => {
                    cases.error(id, e);
                    continue;
                }
            };
            let profile = weyl::coset_lengths(&rs, &p, cap);
            if estimated > cap.0 as u128 {
                expect_cap(
                    cases,
                    format!("{id}-cap"),
                    profile.map(|p| p.total),
                    estimated,
                    cap,
                );
                continue;
            }
            match profile {
                Ok(prof) => {
                    let motive = prof.to_motive();
                    let ok = motive.is_self_dual(dim) && prof.max_length() == dim;
                    cases.push(
                        id,
                        ok,
                        format!("dim {dim} [{}]", motive.multiplicity_line()),
                    );
                }
                Err(e) => cases.error(id, e),
            }
        }
    }
}

fn flags_cases(cases: &mut Cases, bound: u32, cap: OrbitCap) -> Result<()> {
    if bound > MAX_PERMUTATION_LETTERS {
        return Err(Error::InvalidArgument(format!(
            "flags suite bound must be at most {MAX_PERMUTATION_LETTERS}"
        )));
    }
    for n in 1..=bound {
        let id = format!("n{n:02}");
        let perms = permutation_length_profile(n)?;
        // Type A_{n-1}; for n = 1 the group is trivial.
        let cosets = if n == 1 {
            Ok(TateMotive::unit())
        } else {
            RootSystem::new(Family::A, (n - 1) as usize)
                .and_then(|rs| weyl::gp_motive(&rs, &ParabolicSpec::borel(), cap))
        };
        match cosets {
            Ok(w) => cases.agree(id, &[("permutations", perms), ("cosets", w)]),
            Err(e) => cases.error(id, e),
        }
    }
    Ok(())
}

fn kunneth_cases(cases: &mut Cases, bound: u32, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..bound {
        let a = random_cells(&mut rng, 10, 6).expect("nonempty");
        let b = random_cells(&mut rng, 10, 6).expect("nonempty");
        let id = format!("case{i:04}");
        cases.agree(
            id,
            &[
                ("tensor", a.motive().tensor(&b.motive())),
                ("cells", kunneth_cells(&a, &b)),
            ],
        );
    }
}

fn weyl_order_cases(cases: &mut Cases, bound: u32, cap: OrbitCap) {
    for rs in root_systems_up_to(bound) {
        let id = system_id(&rs);
        let expected = rs.weyl_order_closed_form();
        let enumerated = weyl::weyl_order(&rs, cap);
        if expected > cap.0 as u128 {
            expect_cap(cases, format!("{id}-cap"), enumerated, expected, cap);
            continue;
        }
        match enumerated {
            Ok(n) => cases.push(
                id,
                u128::from(n) == expected,
                format!("enumerated {n} closed-form {expected}"),
            ),
            Err(e) => cases.error(id, e),
        }
    }
}

fn tower_cases(cases: &mut Cases, bound: u32, seed: u64, cap: OrbitCap) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..bound {
        let id = format!("case{i:04}");
        let base = if rng.gen_bool(0.5) {
            BaseSpec::Point
        } else {
            BaseSpec::TateBase(random_cells(&mut rng, 4, 3).expect("nonempty").motive())
        };
        let count = rng.gen_range(1..=3);
        let fibres: Vec<FibreSpec> = (0..count).map(|_| random_fibre(&mut rng)).collect();
        match check_tower(&base, &fibres, cap) {
            Ok(None) => {
                let desc = fibres.iter().join(" | ");
                cases.push(id, true, desc);
            }
            Ok(Some(failure)) => cases.push(id, false, failure),
            Err(e) => cases.error(id, e),
        }
    }
}

/// Checks one tower; returns a description of the first violated identity.
fn check_tower(base: &BaseSpec, fibres: &[FibreSpec], cap: OrbitCap) -> Result<Option<String>> {
    let base_motive = base.motive().expect("motive-valued base");
    let full = TowerSpec::new(base.clone(), fibres.to_vec()).motive(cap)?;
    let (last, init) = fibres.split_last().expect("at least one fibre");
    let left = TowerSpec::new(base.clone(), init.to_vec())
        .motive(cap)?
        .tensor(&last.motive(cap)?);
    let fibre_product = fibres
        .iter()
        .map(|f| f.motive(cap))
        .collect::<Result<Vec<_>>>()?;
    let right = base_motive.tensor(&fibre_product.iter().cloned().product());
    if full != left || full != right {
        return Ok(Some(format!(
            "associativity: [{}] vs [{}] vs [{}]",
            full.multiplicity_line(),
            left.multiplicity_line(),
            right.multiplicity_line()
        )));
    }
    let expected: BigUint = base_motive.rank()
        * fibre_product
            .iter()
            .map(TateMotive::rank)
            .product::<BigUint>();
    if full.rank() != expected {
        return Ok(Some(format!("rank {} != {expected}", full.rank())));
    }
    let ranks = TowerSpec::new(base.clone(), fibres.to_vec()).chow_ranks(cap)?;
    let dim = TowerSpec::new(base.clone(), fibres.to_vec()).dimension()?;
    let dense: Vec<BigUint> = (0..=dim).map(|p| full.chow_rank(p)).collect();
    if ranks != dense {
        return Ok(Some(format!(
            "chow ranks {ranks:?} vs motive [{}]",
            full.multiplicity_line()
        )));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeffs(v: &[u32]) -> TateMotive {
        TateMotive::from_coefficients(v.iter().copied())
    }

    #[test]
    fn partition_examples() {
        assert_eq!(partitions_in_box(2, 2), coeffs(&[1, 1, 2, 1, 1]));
        assert_eq!(partitions_in_box(0, 5), TateMotive::unit());
        assert_eq!(partitions_in_box(1, 4), coeffs(&[1, 1, 1, 1, 1]));
        assert_eq!(partitions_in_box(3, 0), TateMotive::unit());
    }

    #[test]
    fn gaussian_examples() {
        assert_eq!(gaussian_binomial(4, 2).unwrap(), coeffs(&[1, 1, 2, 1, 1]));
        assert_eq!(gaussian_binomial(7, 0).unwrap(), TateMotive::unit());
        assert_eq!(gaussian_binomial(5, 1).unwrap(), coeffs(&[1, 1, 1, 1, 1]));
        assert!(gaussian_binomial(2, 3).is_err());
    }

    #[test]
    fn partitions_match_gaussian_and_transpose() {
        for total in 0..=12u32 {
            for d in 0..=total {
                let w = total - d;
                let parts = partitions_in_box(d, w);
                assert_eq!(parts, gaussian_binomial(d + w, d).unwrap(), "box {d}x{w}");
                assert_eq!(parts, partitions_in_box(w, d));
            }
        }
    }

    #[test]
    fn permutation_examples() {
        assert_eq!(
            permutation_length_profile(3).unwrap(),
            coeffs(&[1, 2, 2, 1])
        );
        assert_eq!(permutation_length_profile(1).unwrap(), TateMotive::unit());
        let p4 = permutation_length_profile(4).unwrap();
        assert_eq!(p4, coeffs(&[1, 3, 5, 6, 5, 3, 1]));
        assert_eq!(p4.rank(), 24u32.into());
        assert!(permutation_length_profile(10).is_err());
        assert!(permutation_length_profile(0).is_err());
    }

    #[test]
    fn permutations_match_type_a_cosets() {
        for n in 2..=7u32 {
            let rs = RootSystem::new(Family::A, (n - 1) as usize).unwrap();
            let cosets = weyl::gp_motive(&rs, &ParabolicSpec::borel(), OrbitCap::DEFAULT).unwrap();
            assert_eq!(permutation_length_profile(n).unwrap(), cosets);
        }
    }

    #[test]
    fn kunneth_examples() {
        let p1 = CellModel::new(vec![0, 1]).unwrap();
        let p2 = CellModel::new(vec![0, 1, 2]).unwrap();
        let pt = CellModel::new(vec![0]).unwrap();
        assert_eq!(kunneth_cells(&p1, &p1), coeffs(&[1, 2, 1]));
        assert_eq!(kunneth_cells(&pt, &p2), p2.motive());
        assert_eq!(kunneth_cells(&p2, &p1), coeffs(&[1, 2, 2, 1]));
        assert!(CellModel::new(vec![]).is_err());
    }

    #[test]
    fn suite_examples() {
        let cap = OrbitCap::DEFAULT;
        let g = run_suite(Suite::Grassmann, 8, DEFAULT_SEED, cap).unwrap();
        assert!(g.passed());
        assert_eq!(g.cases.len(), 28);
        let f = run_suite(Suite::Flags, 1, DEFAULT_SEED, cap).unwrap();
        assert!(f.passed());
        assert_eq!(f.cases.len(), 1);
        assert!(run_suite(Suite::Duality, 4, DEFAULT_SEED, cap)
            .unwrap()
            .passed());
        assert!(run_suite(Suite::Flags, 10, DEFAULT_SEED, cap).is_err());
        assert!(run_suite(Suite::Grassmann, 0, DEFAULT_SEED, cap).is_err());
    }

    #[test]
    fn random_suites_are_deterministic() {
        let cap = OrbitCap::DEFAULT;
        for suite in [Suite::Kunneth, Suite::Tower] {
            let a = run_suite(suite, 40, 7, cap).unwrap();
            let b = run_suite(suite, 40, 7, cap).unwrap();
            assert!(a.passed());
            assert_eq!(a, b);
            assert_eq!(a.to_string(), b.to_string());
            assert_eq!(a.cases.len(), 40);
        }
    }

    #[test]
    fn weyl_orders_report_cap() {
        let report = run_suite(Suite::WeylOrders, 4, DEFAULT_SEED, OrbitCap(100)).unwrap();
        assert!(report.passed(), "{report}");
        let capped: Vec<&str> = report
            .cases
            .iter()
            .filter(|c| c.id.ends_with("-cap"))
            .map(|c| c.id.as_str())
            .collect();
        assert_eq!(
            capped,
            vec!["A4-cap", "B4-cap", "C4-cap", "D4-cap", "F4-cap"]
        );
    }

    #[test]
    fn report_lines_and_summary() {
        let report = run_suite(Suite::Flags, 3, DEFAULT_SEED, OrbitCap::DEFAULT).unwrap();
        let text = report.to_string();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "flags n01 PASS 1");
        assert_eq!(lines[2], "flags n03 PASS 1 + 2·L + 2·L^2 + L^3");
        let summary = serde_json::to_value(report.summary()).unwrap();
        assert_eq!(summary["suite"], "flags");
        assert_eq!(summary["status"], "pass");
        assert_eq!(summary["cases"], 3);
    }

    #[test]
    fn failing_case_reports_counterexample() {
        let mut cases = Cases(Vec::new());
        cases.agree(
            "x".into(),
            &[("a", coeffs(&[1, 1])), ("b", coeffs(&[1, 2]))],
        );
        let out = cases.finish();
        assert!(!out[0].passed);
        assert_eq!(out[0].detail, "a=[0:1 1:1] b=[0:1 1:2]");
    }

    #[test]
    fn suite_names_parse() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(
            "bogus".parse::<Suite>(),
            Err(Error::UnknownSuite("bogus".into()))
        );
    }
}
