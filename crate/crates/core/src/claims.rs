//! A catalogue of checkable statements with a deterministic runner.
//!
//! Each claim is an executable comparison over a parameter grid. Its expectation
//! says how to read the outcome:
//!
//! * `expected-exact`: an identity the library relies on. A refutation is a bug.
//! * `hypothesis`: a stated formula under adjudication. Either outcome is a result.
//! * `negative-witness`: the claim is that a counterexample exists.
//!
//! Refutations are shrunk greedily and stored with the full case, so
//! [`replay`] reproduces them from the payload alone.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::clifford::{Blade, CliffordElement, MultiIndex};
use crate::decompose::{self, Strategy};
use crate::error::{Error, Result};
use crate::factorial::{self, FamilySign, Sign, StirlingKind};
use crate::fischer;
use crate::io::print_polynomial;
use crate::linalg::Matrix;
use crate::operators as op;
use crate::polynomial::{GradedComponentBasis, LatticePolynomial};
use crate::quaternion::{self, Quaternion};
use crate::quaternion_dirac::{
    self as qd, MixedVariant, QuaternionLatticePolynomial, Transcription, QUATERNION_BLADES,
};
use crate::random::{self, PolySpec, TestRng};
use crate::rational::{self, int, rat, Rational};
use crate::stencil::{self, Field};

pub const SCHEMA: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Expectation {
    ExpectedExact,
    Hypothesis,
    NegativeWitness,
}

impl fmt::Display for Expectation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expectation::ExpectedExact => "expected-exact",
            Expectation::Hypothesis => "hypothesis",
            Expectation::NegativeWitness => "negative-witness",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Topic {
    Preliminaries,
    FactorialPowers,
    Fischer,
    EulerGamma,
    Calculus,
    HomogeneousPowers,
    Quaternionic,
}

/// One point of the parameter grid.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell {
    pub n: usize,
    pub k: usize,
    #[serde(with = "rational::serde_str")]
    pub h: Rational,
    pub sign: Sign,
}

impl Cell {
    pub fn family(&self) -> FamilySign {
        self.sign.matched_family()
    }

    fn label(&self) -> String {
        format!("n={} k={} h={} sign={}", self.n, self.k, self.h, self.sign)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Grid {
    pub dims: Vec<usize>,
    pub degrees: Vec<usize>,
    #[serde(with = "rational::serde_str_vec")]
    pub meshes: Vec<Rational>,
    pub signs: Vec<Sign>,
    /// Random inputs per cell.
    pub cases: usize,
}

impl Default for Grid {
    fn default() -> Self {
        Grid {
            dims: vec![1, 2, 3],
            degrees: (0..=4).collect(),
            meshes: vec![int(1), rat(1, 2), rat(1, 4)],
            signs: vec![Sign::Plus, Sign::Minus],
            cases: 25,
        }
    }
}

impl Grid {
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for &n in &self.dims {
            for &k in &self.degrees {
                for h in &self.meshes {
                    for &sign in &self.signs {
                        out.push(Cell { n, k, h: h.clone(), sign });
                    }
                }
            }
        }
        out
    }
}

/// A concrete input: the cell, input polynomials, a lattice point and scalar parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Case {
    pub cell: Cell,
    pub inputs: Vec<LatticePolynomial>,
    pub point: Vec<i64>,
    #[serde(with = "rational::serde_str_vec")]
    pub params: Vec<Rational>,
}

/// Both sides of a checked statement, printed canonically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl Comparison {
    pub fn new(lhs: impl ToString, rhs: impl ToString, holds: bool) -> Self {
        Comparison { lhs: lhs.to_string(), rhs: rhs.to_string(), holds }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum CellSet {
    Grid,
    /// `n = 3` cells of the grid.
    Quaternion,
    /// Degrees up to 6 and meshes 1, 1/2, 1/3.
    Stirling,
    /// The Stirling cells with `h = 1`.
    UnitMesh,
    /// The grid degrees at a single coarse mesh; the check itself refines `h`.
    Limit,
}

type Generate = fn(&Cell, &mut TestRng, usize) -> Result<Vec<Case>>;
type Evaluate = fn(&Case) -> Result<Comparison>;

#[derive(Clone, Copy)]
pub struct Claim {
    pub id: &'static str,
    pub anchor: &'static str,
    pub topic: Topic,
    pub expectation: Expectation,
    pub statement: &'static str,
    cells: CellSet,
    generate: Generate,
    evaluate: Evaluate,
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim")
            .field("id", &self.id)
            .field("anchor", &self.anchor)
            .field("expectation", &self.expectation)
            .finish()
    }
}

impl Claim {
    pub fn cells(&self, grid: &Grid) -> Vec<Cell> {
        match self.cells {
            CellSet::Grid => grid.cells(),
            CellSet::Quaternion => grid.cells().into_iter().filter(|c| c.n == 3).collect(),
            CellSet::Stirling | CellSet::UnitMesh => {
                let meshes =
                    if self.cells == CellSet::UnitMesh { vec![int(1)] } else { vec![int(1), rat(1, 2), rat(1, 3)] };
                Grid { degrees: (0..=6).collect(), meshes, ..grid.clone() }.cells()
            }
            CellSet::Limit => Grid { meshes: vec![rat(1, 2)], ..grid.clone() }.cells(),
        }
    }

    /// The cases of one cell; the stream depends only on the seed, the claim and the cell.
    pub fn generate(&self, cell: &Cell, cases: usize, seed: u64) -> Result<Vec<Case>> {
        let mut rng = random::rng(random::derive_seed(seed, &format!("{}/{}", self.id, cell.label())));
        (self.generate)(cell, &mut rng, cases)
    }

    pub fn evaluate(&self, case: &Case) -> Result<Comparison> {
        (self.evaluate)(case)
    }

    pub fn info(&self) -> ClaimInfo {
        ClaimInfo {
            id: self.id.to_string(),
            anchor: self.anchor.to_string(),
            topic: self.topic,
            expectation: self.expectation,
            statement: self.statement.to_string(),
        }
    }
}

/// Catalogue entry without the executable parts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimInfo {
    pub id: String,
    pub anchor: String,
    pub topic: Topic,
    pub expectation: Expectation,
    pub statement: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Confirmed,
    Refuted,
    Infeasible,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "confirmed",
            Status::Refuted => "refuted",
            Status::Infeasible => "infeasible",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub case: Case,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellCoverage {
    #[serde(flatten)]
    pub cell: Cell,
    pub cases: usize,
    pub failures: usize,
    pub infeasible: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimOutcome {
    pub id: String,
    pub anchor: String,
    pub topic: Topic,
    pub expectation: Expectation,
    pub status: Status,
    pub meets_expectation: bool,
    pub cases: usize,
    pub witness: Option<Witness>,
    pub diagnostic: Option<String>,
    pub coverage: Vec<CellCoverage>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub claims: usize,
    pub confirmed: usize,
    pub refuted: usize,
    pub infeasible: usize,
    pub expected_exact_failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub schema: String,
    pub version: String,
    pub seed: u64,
    pub filter: String,
    pub grid: Grid,
    pub claims: Vec<ClaimOutcome>,
    pub summary: Summary,
}

impl ClaimReport {
    /// True iff every expected-exact claim in the run confirmed.
    pub fn success(&self) -> bool {
        self.summary.expected_exact_failures.is_empty()
    }

    pub fn outcome(&self, id: &str) -> Option<&ClaimOutcome> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }

    pub fn to_table(&self) -> String {
        let width = self.claims.iter().map(|c| c.id.len()).max().unwrap_or(2).max(5);
        let mut out = format!("{:<width$}  {:<16}  {:<10}  {:>6}  note\n", "claim", "expectation", "status", "cases");
        for c in &self.claims {
            let note = match (&c.witness, &c.diagnostic) {
                (Some(w), _) => clip(&format!("{} != {}", w.lhs, w.rhs), 90),
                (None, Some(d)) => clip(d, 90),
                _ => String::new(),
            };
            out += &format!(
                "{:<width$}  {:<16}  {:<10}  {:>6}  {}\n",
                c.id,
                c.expectation.to_string(),
                c.status.to_string(),
                c.cases,
                note
            );
        }
        let s = &self.summary;
        out += &format!(
            "\n{} claims: {} confirmed, {} refuted, {} infeasible; expected-exact failures: {}\n",
            s.claims,
            s.confirmed,
            s.refuted,
            s.infeasible,
            if s.expected_exact_failures.is_empty() {
                "none".to_string()
            } else {
                s.expected_exact_failures.join(", ")
            }
        );
        out
    }
}

fn clip(text: &str, max: usize) -> String {
    if text.chars().count() <= max {
        text.to_string()
    } else {
        let cut: String = text.chars().take(max).collect();
        format!("{cut}...")
    }
}

/// Glob patterns (`*`, `?`), comma separated, matched against whole ids.
pub fn filter_regex(pattern: &str) -> Result<Regex> {
    let alternatives: Vec<String> = pattern
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            let mut re = String::new();
            for ch in p.chars() {
                match ch {
                    '*' => re.push_str(".*"),
                    '?' => re.push('.'),
                    c => re.push_str(&regex::escape(&c.to_string())),
                }
            }
            re
        })
        .collect();
    if alternatives.is_empty() {
        return Err(Error::InvalidArgument("empty claim filter".into()));
    }
    Regex::new(&format!("^(?:{})$", alternatives.join("|")))
        .map_err(|e| Error::InvalidArgument(format!("bad claim filter `{pattern}`: {e}")))
}

pub fn list_claims(filter: &str) -> Result<Vec<Claim>> {
    let re = filter_regex(filter)?;
    Ok(catalogue().into_iter().filter(|c| re.is_match(c.id)).collect())
}

pub fn find(id: &str) -> Result<Claim> {
    catalogue().into_iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownClaim(id.to_string()))
}

/// Re-evaluates a stored case.
pub fn replay(id: &str, case: &Case) -> Result<Comparison> {
    find(id)?.evaluate(case)
}

pub fn run_registry(filter: &str, grid: &Grid, seed: u64) -> Result<ClaimReport> {
    let claims = list_claims(filter)?;
    if claims.is_empty() {
        return Err(Error::UnknownClaim(filter.to_string()));
    }
    let outcomes: Vec<ClaimOutcome> = claims.par_iter().map(|c| run_claim(c, grid, seed)).collect();
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    let summary = Summary {
        claims: outcomes.len(),
        confirmed: count(Status::Confirmed),
        refuted: count(Status::Refuted),
        infeasible: count(Status::Infeasible),
        expected_exact_failures: outcomes
            .iter()
            .filter(|o| o.expectation == Expectation::ExpectedExact && o.status != Status::Confirmed)
            .map(|o| o.id.clone())
            .collect(),
    };
    Ok(ClaimReport {
        schema: SCHEMA.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed,
        filter: filter.to_string(),
        grid: grid.clone(),
        claims: outcomes,
        summary,
    })
}

pub fn run_claim(claim: &Claim, grid: &Grid, seed: u64) -> ClaimOutcome {
    let mut coverage = Vec::new();
    let mut failure: Option<(Case, Comparison)> = None;
    let mut errors: Vec<String> = Vec::new();
    let mut total = 0;
    for cell in claim.cells(grid) {
        let mut cov = CellCoverage { cell: cell.clone(), cases: 0, failures: 0, infeasible: 0 };
        match claim.generate(&cell, grid.cases, seed) {
            Err(e) => {
                cov.infeasible += 1;
                errors.push(format!("{}: {e}", cell.label()));
            }
            Ok(cases) => {
                for case in cases {
                    cov.cases += 1;
                    match claim.evaluate(&case) {
                        Ok(c) if c.holds => {}
                        Ok(c) => {
                            cov.failures += 1;
                            if failure.is_none() {
                                failure = Some((case, c));
                            }
                        }
                        Err(e) => {
                            cov.infeasible += 1;
                            errors.push(format!("{}: {e}", cell.label()));
                        }
                    }
                }
            }
        }
        total += cov.cases;
        coverage.push(cov);
    }
    let witness = failure.map(|(case, c)| {
        let (case, c) = shrink(claim, case, c);
        Witness { case, lhs: c.lhs, rhs: c.rhs }
    });
    let first_error =
        errors.first().map(
            |e| {
                if errors.len() > 1 {
                    format!("{e} (and {} more)", errors.len() - 1)
                } else {
                    e.clone()
                }
            },
        );
    let (status, diagnostic) = match (&witness, claim.expectation) {
        (Some(_), Expectation::NegativeWitness) => (Status::Confirmed, None),
        (None, Expectation::NegativeWitness) => {
            (Status::Infeasible, Some(first_error.unwrap_or_else(|| "no counterexample found on the grid".to_string())))
        }
        (Some(_), _) => (Status::Refuted, None),
        (None, _) if total == 0 => (Status::Infeasible, Some("no cases on the grid".to_string())),
        (None, _) if first_error.is_some() => (Status::Infeasible, first_error),
        (None, _) => (Status::Confirmed, None),
    };
    let meets_expectation = match claim.expectation {
        Expectation::Hypothesis => true,
        _ => status == Status::Confirmed,
    };
    ClaimOutcome {
        id: claim.id.to_string(),
        anchor: claim.anchor.to_string(),
        topic: claim.topic,
        expectation: claim.expectation,
        status,
        meets_expectation,
        cases: total,
        witness,
        diagnostic,
        coverage,
    }
}

fn without_term(p: &LatticePolynomial, skip: &MultiIndex) -> LatticePolynomial {
    let mut out = p.zero_like();
    for (alpha, c) in p.terms().filter(|(a, _)| *a != skip) {
        out.add_term(alpha.clone(), c.clone());
    }
    out
}

fn with_coefficient(p: &LatticePolynomial, at: &MultiIndex, value: CliffordElement) -> LatticePolynomial {
    let mut out = without_term(p, at);
    out.add_term(at.clone(), value);
    out
}

/// Simpler variants of a case: fewer terms, single-blade unit coefficients, a point nearer the origin.
fn shrink_candidates(case: &Case) -> Vec<Case> {
    let mut out = Vec::new();
    for (i, p) in case.inputs.iter().enumerate() {
        let terms: Vec<(MultiIndex, CliffordElement)> = p.terms().map(|(a, c)| (a.clone(), c.clone())).collect();
        for (alpha, c) in &terms {
            if terms.len() > 1 {
                let mut next = case.clone();
                next.inputs[i] = without_term(p, alpha);
                out.push(next);
            }
            let blades: Vec<(Blade, Rational)> = c.terms().map(|(b, v)| (*b, v.clone())).collect();
            for (b, v) in &blades {
                let unit = if v.is_negative() { -Rational::one() } else { Rational::one() };
                for value in [v.clone(), unit] {
                    let single = CliffordElement::blade(p.n(), *b, value);
                    if single != *c {
                        let mut next = case.clone();
                        next.inputs[i] = with_coefficient(p, alpha, single);
                        out.push(next);
                    }
                }
            }
        }
    }
    for j in 0..case.point.len() {
        if case.point[j] != 0 {
            let mut next = case.clone();
            next.point[j] -= case.point[j].signum();
            out.push(next);
        }
    }
    out
}

fn shrink(claim: &Claim, case: Case, cmp: Comparison) -> (Case, Comparison) {
    let mut best = (case, cmp);
    // Every accepted step strictly reduces terms, blades or |point|, so this terminates.
    'outer: loop {
        for candidate in shrink_candidates(&best.0) {
            if let Ok(c) = claim.evaluate(&candidate) {
                if !c.holds {
                    best = (candidate, c);
                    continue 'outer;
                }
            }
        }
        return best;
    }
}

// ---------------------------------------------------------------------------
// Shared helpers for evaluators.

fn input(case: &Case, i: usize) -> Result<&LatticePolynomial> {
    case.inputs
        .get(i)
        .ok_or_else(|| Error::InvalidArgument(format!("case has {} inputs, needs {}", case.inputs.len(), i + 1)))
}

fn param(case: &Case, i: usize) -> Result<Rational> {
    case.params
        .get(i)
        .cloned()
        .ok_or_else(|| Error::InvalidArgument(format!("case has {} parameters, needs {}", case.params.len(), i + 1)))
}

fn at(case: &Case) -> Vec<Rational> {
    case.point.iter().map(|&m| int(m) * &case.cell.h).collect()
}

fn signed(sign: Sign) -> Rational {
    int(sign.value())
}

/// `1^± = ±Σ e_i`.
fn ones(n: usize, sign: Sign) -> CliffordElement {
    CliffordElement::ones_vector(n, sign == Sign::Minus)
}

/// `1 ± h`, which several stated formulas divide by.
fn one_pm_h(case: &Case) -> Result<Rational> {
    let d = Rational::one() + signed(case.cell.sign) * &case.cell.h;
    if d.is_zero() {
        Err(Error::InvalidArgument(format!("1 {} h vanishes at h = {}", case.cell.sign, case.cell.h)))
    } else {
        Ok(d)
    }
}

fn mh(p: &LatticePolynomial) -> LatticePolynomial {
    p.multiply_by_vector_variable()
}

fn mh_pow(p: &LatticePolynomial, s: usize) -> LatticePolynomial {
    (0..s).fold(p.clone(), |acc, _| mh(&acc))
}

fn left(p: &LatticePolynomial, a: &CliffordElement) -> Result<LatticePolynomial> {
    p.left_multiply(a)
}

fn half_n(n: usize) -> Rational {
    rat(n as i64, 2)
}

fn require_monogenic(p: &LatticePolynomial, sign: Sign) -> Result<()> {
    if op::dirac(p, sign).is_zero() {
        Ok(())
    } else {
        Err(Error::InvalidArgument("input is not monogenic".into()))
    }
}

fn require_degree(p: &LatticePolynomial, k: usize) -> Result<()> {
    if !p.is_zero() && p.homogeneous_degree() == Some(k) {
        Ok(())
    } else {
        Err(Error::NotHomogeneous(k))
    }
}

fn polys(lhs: &LatticePolynomial, rhs: &LatticePolynomial) -> Comparison {
    Comparison::new(print_polynomial(lhs), print_polynomial(rhs), lhs == rhs)
}

fn quats(lhs: &QuaternionLatticePolynomial, rhs: &QuaternionLatticePolynomial) -> Comparison {
    polys(lhs.as_polynomial(), rhs.as_polynomial())
}

fn values<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T) -> Comparison {
    Comparison::new(lhs, rhs, lhs == rhs)
}

/// The first failing comparison, or the last one if all hold.
fn all(parts: impl IntoIterator<Item = Comparison>) -> Comparison {
    let mut last = Comparison::new("", "", true);
    for c in parts {
        if !c.holds {
            return c;
        }
        last = c;
    }
    last
}

fn labelled(label: impl fmt::Display, c: Comparison) -> Comparison {
    Comparison { lhs: format!("{label}: {}", c.lhs), ..c }
}

fn variant_of(sign: Sign) -> MixedVariant {
    match sign {
        Sign::Minus => MixedVariant::MinusPlus,
        Sign::Plus => MixedVariant::PlusMinus,
    }
}

fn quat_input(case: &Case, i: usize) -> Result<QuaternionLatticePolynomial> {
    QuaternionLatticePolynomial::new(input(case, i)?.clone())
}

fn product_field(f: &Field, g: &Field) -> Field {
    let (f, g) = (f.clone(), g.clone());
    Arc::new(move |x| &f(x) * &g(x))
}

fn rvalue(x: &Rational) -> String {
    x.to_string()
}

// ---------------------------------------------------------------------------
// Generators.

const R_CHOICES: [(i64, i64); 4] = [(1, 2), (1, 1), (3, 2), (2, 1)];

fn spec(cell: &Cell) -> PolySpec {
    PolySpec::new(cell.n, cell.h.clone(), cell.family())
}

fn quat_spec(cell: &Cell) -> PolySpec {
    PolySpec::new(3, cell.h.clone(), variant_of(cell.sign).family()).blades(QUATERNION_BLADES.to_vec())
}

fn make(cell: &Cell, rng: &mut TestRng, inputs: Vec<LatticePolynomial>, params: Vec<Rational>) -> Case {
    Case { cell: cell.clone(), inputs, point: random::lattice_point(rng, cell.n, 3), params }
}

fn pick_r(rng: &mut TestRng) -> Rational {
    use rand::Rng;
    let (p, q) = R_CHOICES[rng.gen_range(0..R_CHOICES.len())];
    rat(p, q)
}

fn gen_general(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    Ok((0..count)
        .map(|_| {
            let p = random::polynomial(rng, &spec(cell), cell.k);
            let r = pick_r(rng);
            make(cell, rng, vec![p], vec![r])
        })
        .collect())
}

fn gen_pair(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    Ok((0..count)
        .map(|_| {
            let f = random::polynomial(rng, &spec(cell), cell.k);
            let g = random::polynomial(rng, &spec(cell), cell.k);
            make(cell, rng, vec![f, g], vec![])
        })
        .collect())
}

fn gen_homogeneous(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    Ok((0..count)
        .map(|_| {
            let p = random::homogeneous(rng, &spec(cell), cell.k);
            let r = pick_r(rng);
            make(cell, rng, vec![p], vec![r])
        })
        .collect())
}

/// Two homogeneous inputs of degrees `k − gap` and `k`.
fn gen_graded_pair(cell: &Cell, rng: &mut TestRng, count: usize, gap: usize) -> Vec<Case> {
    if cell.k < gap {
        return Vec::new();
    }
    (0..count)
        .map(|_| {
            let p = random::homogeneous(rng, &spec(cell), cell.k - gap);
            let q = random::homogeneous(rng, &spec(cell), cell.k);
            make(cell, rng, vec![p, q], vec![])
        })
        .collect()
}

fn gen_same_degree(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    Ok(gen_graded_pair(cell, rng, count, 0))
}

fn gen_adjacent_degrees(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    Ok(gen_graded_pair(cell, rng, count, 1))
}

fn gen_two_apart(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    Ok(gen_graded_pair(cell, rng, count, 2))
}

/// A random combination of 1–3 basis elements, or `None` for an empty basis.
fn combination(rng: &mut TestRng, basis: &[LatticePolynomial]) -> Option<LatticePolynomial> {
    use rand::Rng;
    if basis.is_empty() {
        return None;
    }
    loop {
        let mut acc = basis[0].zero_like();
        for _ in 0..rng.gen_range(1..=3usize.min(basis.len())) {
            let e = &basis[rng.gen_range(0..basis.len())];
            acc = &acc + &e.scale(&random::nonzero_rational(rng));
        }
        if !acc.is_zero() {
            return Some(acc);
        }
    }
}

fn from_basis(
    cell: &Cell,
    rng: &mut TestRng,
    count: usize,
    basis: &[LatticePolynomial],
    params: Vec<Rational>,
) -> Vec<Case> {
    (0..count).filter_map(|_| combination(rng, basis).map(|m| make(cell, rng, vec![m], params.clone()))).collect()
}

fn gen_monogenic(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    let basis = fischer::monogenic_kernel(cell.k, cell.n, &cell.h, cell.family(), cell.sign)?;
    Ok(from_basis(cell, rng, count, &basis.elements, vec![]))
}

/// Monogenic inputs with a power `s ∈ {2, 3, 4}` as parameter.
fn gen_monogenic_power(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    use rand::Rng;
    let basis = fischer::monogenic_kernel(cell.k, cell.n, &cell.h, cell.family(), cell.sign)?;
    Ok((0..count)
        .filter_map(|_| {
            let s = rng.gen_range(2..=4i64);
            combination(rng, &basis.elements).map(|m| make(cell, rng, vec![m], vec![int(s)]))
        })
        .collect())
}

/// Every `(mh)^{(α)} e_0` with `|α| = k`.
fn gen_factorial_powers(cell: &Cell, rng: &mut TestRng, _count: usize) -> Result<Vec<Case>> {
    MultiIndex::all_of_degree(cell.n, cell.k)
        .into_iter()
        .map(|alpha| {
            let p = LatticePolynomial::monomial(
                cell.n,
                cell.h.clone(),
                cell.family(),
                alpha,
                CliffordElement::one(cell.n),
            )?;
            Ok(make(cell, rng, vec![p], vec![]))
        })
        .collect()
}

/// `(m_ih)^{(k)} e_0` for each axis `i`, with `i` as parameter.
fn gen_axis_powers(cell: &Cell, rng: &mut TestRng, _count: usize) -> Result<Vec<Case>> {
    (1..=cell.n)
        .map(|i| {
            let alpha = MultiIndex::unit(cell.n, i).scaled(cell.k as u32);
            let p = LatticePolynomial::monomial(
                cell.n,
                cell.h.clone(),
                cell.family(),
                alpha,
                CliffordElement::one(cell.n),
            )?;
            Ok(make(cell, rng, vec![p], vec![int(i as i64)]))
        })
        .collect()
}

fn gen_single(cell: &Cell, rng: &mut TestRng, _count: usize) -> Result<Vec<Case>> {
    Ok(vec![make(cell, rng, vec![], vec![])])
}

fn gen_single_1d(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    if cell.n != 1 {
        return Ok(Vec::new());
    }
    gen_single(cell, rng, count)
}

/// Summation formulas need `h = 1/N` and an integer `r ≥ 1`.
fn gen_summation(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    use rand::Rng;
    if rational::reciprocal_integer(&cell.h).is_none() {
        return Ok(Vec::new());
    }
    Ok((0..count)
        .map(|_| {
            let p = random::polynomial(rng, &spec(cell).terms(2), cell.k);
            let r = int(rng.gen_range(1..=2));
            let mut case = make(cell, rng, vec![p], vec![r]);
            case.point = random::lattice_point(rng, cell.n, 2);
            case
        })
        .collect())
}

fn gen_homogeneous_power(cell: &Cell, rng: &mut TestRng, _count: usize) -> Result<Vec<Case>> {
    let hs = factorial::homogeneous_power(cell.k, cell.n, cell.family(), &cell.h)?;
    Ok(vec![make(cell, rng, vec![hs], vec![])])
}

fn gen_quaternion(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    Ok((0..count)
        .map(|_| {
            let p = random::polynomial(rng, &quat_spec(cell), cell.k);
            make(cell, rng, vec![p], vec![])
        })
        .collect())
}

fn gen_quaternion_homogeneous(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    Ok((0..count)
        .map(|_| {
            let p = random::homogeneous(rng, &quat_spec(cell), cell.k);
            make(cell, rng, vec![p], vec![])
        })
        .collect())
}

fn gen_quaternion_minus_plus(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    if cell.sign != Sign::Minus {
        return Ok(Vec::new());
    }
    gen_quaternion(cell, rng, count)
}

fn gen_quaternion_plus_minus(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    if cell.sign != Sign::Plus {
        return Ok(Vec::new());
    }
    gen_quaternion(cell, rng, count)
}

fn gen_mixed_monogenic(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    let basis = qd::mixed_monogenic_kernel(cell.k, &cell.h, variant_of(cell.sign))?;
    let elements: Vec<LatticePolynomial> = basis.elements.iter().map(|e| e.as_polynomial().clone()).collect();
    Ok(from_basis(cell, rng, count, &elements, vec![]))
}

fn gen_quaternion_harmonic(cell: &Cell, rng: &mut TestRng, count: usize) -> Result<Vec<Case>> {
    let family = variant_of(cell.sign).family();
    let (basis, _) = qd::harmonic_kernel(cell.k, 3, &cell.h, family, QUATERNION_BLADES.to_vec())?;
    Ok(from_basis(cell, rng, count, &basis, vec![]))
}

// ---------------------------------------------------------------------------
// Preliminaries.

fn clifford_square(case: &Case) -> Result<Comparison> {
    let x = at(case);
    let v = CliffordElement::vector(&x);
    let norm = x.iter().fold(Rational::zero(), |acc, t| acc + t * t);
    Ok(values(&(&v * &v), &CliffordElement::scalar(case.cell.n, -norm)))
}

fn clifford_anticommute(case: &Case) -> Result<Comparison> {
    let n = case.cell.n;
    let mut parts = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            let (ei, ej) = (CliffordElement::generator(n, i), CliffordElement::generator(n, j));
            let lhs = &(&ei * &ej) + &(&ej * &ei);
            let rhs = CliffordElement::scalar(n, if i == j { int(-2) } else { Rational::zero() });
            parts.push(labelled(format!("e{i}e{j} + e{j}e{i}"), values(&lhs, &rhs)));
        }
    }
    Ok(all(parts))
}

fn difference_stencil(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    let (x, h) = (at(case), &case.cell.h);
    let f = stencil::from_polynomial(p);
    let mut parts = Vec::new();
    for axis in 1..=p.n() {
        for sign in [Sign::Plus, Sign::Minus] {
            let lhs = op::partial(p, axis, sign).evaluate(&x)?;
            let rhs = stencil::partial(&f, axis, sign, h)(&x);
            parts.push(labelled(format!("d{sign}{axis}"), values(&lhs, &rhs)));
        }
    }
    Ok(all(parts))
}

fn product_rule(case: &Case, shift_first: bool) -> Result<Comparison> {
    let (f, g) = (stencil::from_polynomial(input(case, 0)?), stencil::from_polynomial(input(case, 1)?));
    let (x, h, sign) = (at(case), &case.cell.h, case.cell.sign);
    let fg = product_field(&f, &g);
    let mut parts = Vec::new();
    for axis in 1..=case.cell.n {
        let lhs = stencil::partial(&fg, axis, sign, h)(&x);
        let (df, dg) = (stencil::partial(&f, axis, sign, h)(&x), stencil::partial(&g, axis, sign, h)(&x));
        let rhs = if shift_first {
            &(&stencil::shift(&f, axis, sign, h)(&x) * &dg) + &(&df * &g(&x))
        } else {
            &(&f(&x) * &dg) + &(&df * &stencil::shift(&g, axis, sign, h)(&x))
        };
        parts.push(labelled(format!("axis {axis}"), values(&lhs, &rhs)));
    }
    Ok(all(parts))
}

fn eq2(case: &Case) -> Result<Comparison> {
    product_rule(case, false)
}

fn eq3(case: &Case) -> Result<Comparison> {
    product_rule(case, true)
}

fn dirac_stencil(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    let x = at(case);
    let f = stencil::from_polynomial(p);
    Ok(all([Sign::Plus, Sign::Minus].map(|s| {
        let lhs = op::dirac(p, s).evaluate(&x).expect("dimension checked");
        labelled(format!("D{s}"), values(&lhs, &stencil::dirac(&f, p.n(), s, &case.cell.h)(&x)))
    })))
}

// ---------------------------------------------------------------------------
// Factorial powers.

fn p1(case: &Case) -> Result<Comparison> {
    let (s, h, fam) = (case.cell.k, &case.cell.h, case.cell.family());
    let step = int(fam.step()) * int(s as i64) * h;
    Ok(all((-4..=4).map(|m| {
        let x = int(m) * h;
        let lhs = factorial::factorial_power_eval(s + 1, fam, h, &x);
        let rhs = (&x + &step) * factorial::factorial_power_eval(s, fam, h, &x);
        labelled(format!("m={m}"), values(&lhs, &rhs))
    })))
}

fn axis_difference(case: &Case, matched: bool) -> Result<Comparison> {
    let p = input(case, 0)?;
    let i = param(case, 0)?.to_integer();
    let (s, h, fam) = (case.cell.k, &case.cell.h, case.cell.family());
    let sign = if matched { case.cell.sign } else { case.cell.sign.opposite() };
    let f = stencil::from_polynomial(p);
    let x = at(case);
    let mut parts = Vec::new();
    for j in 1..=case.cell.n {
        let lhs = stencil::partial(&f, j, sign, h)(&x).scalar_part();
        let rhs = if BigInt::from(j) != i || s == 0 {
            Rational::zero()
        } else {
            let xi = &x[j - 1];
            let base = if matched { xi.clone() } else { xi + int(fam.step()) * h };
            int(s as i64) * factorial::factorial_power_eval(s - 1, fam, h, &base)
        };
        parts.push(labelled(format!("d{sign}{j}"), values(&lhs, &rhs)));
    }
    Ok(all(parts))
}

fn p2(case: &Case) -> Result<Comparison> {
    axis_difference(case, true)
}

fn p3(case: &Case) -> Result<Comparison> {
    axis_difference(case, false)
}

/// `|x^{(α)} − 1|` at `x = (1, …, 1)` for `h = 2^{-1}, …, 2^{-6}`.
fn deviations(alpha: &[u32], fam: FamilySign) -> Vec<Rational> {
    (1..=6)
        .map(|j| {
            let h = rat(1, 1 << j);
            let v = alpha.iter().fold(Rational::one(), |acc, &a| {
                acc * factorial::factorial_power_eval(a as usize, fam, &h, &Rational::one())
            });
            (v - Rational::one()).abs()
        })
        .collect()
}

fn converges(d: &[Rational]) -> bool {
    d.windows(2).all(|w| w[1] <= w[0]) && (d[0].is_zero() || d[d.len() - 1] < d[0])
}

fn show(d: &[Rational]) -> String {
    d.iter().map(rvalue).collect::<Vec<_>>().join(", ")
}

fn p4(case: &Case) -> Result<Comparison> {
    let d = deviations(&[case.cell.k as u32], case.cell.family());
    Ok(Comparison::new(show(&d), "nonincreasing towards 0", converges(&d)))
}

fn p4_rate(case: &Case) -> Result<Comparison> {
    let d = deviations(&[case.cell.k as u32], case.cell.family());
    let (lo, hi) = (rat(9, 5), rat(11, 5));
    let ratios: Vec<Rational> = d.windows(2).filter(|w| !w[1].is_zero()).map(|w| &w[0] / &w[1]).collect();
    let holds =
        d.iter().all(Zero::is_zero) || (ratios.len() == d.len() - 1 && ratios.iter().all(|r| *r >= lo && *r <= hi));
    Ok(Comparison::new(format!("ratios {}", show(&ratios)), "each in [9/5, 11/5]", holds))
}

fn lemma3_3(case: &Case) -> Result<Comparison> {
    Ok(all(MultiIndex::all_of_degree(case.cell.n, case.cell.k).into_iter().map(|alpha| {
        let d = deviations(alpha.entries(), case.cell.family());
        labelled(alpha, Comparison::new(show(&d), "nonincreasing towards 0", converges(&d)))
    })))
}

fn single_alpha(p: &LatticePolynomial) -> Result<MultiIndex> {
    p.terms()
        .next()
        .map(|(a, _)| a.clone())
        .ok_or_else(|| Error::InvalidArgument("expected a single factorial power".into()))
}

fn lemma3_1(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    let alpha = single_alpha(p)?;
    let (h, sign, x) = (&case.cell.h, case.cell.sign, at(case));
    let f = stencil::from_polynomial(p);
    let mut lhs = CliffordElement::zero(p.n());
    for i in 1..=p.n() {
        let g = stencil::coordinate(&stencil::shift(&stencil::partial(&f, i, sign, h), i, sign.opposite(), h), i);
        lhs = &lhs + &g(&x);
    }
    Ok(values(&lhs, &f(&x).scale(&int(alpha.degree() as i64))))
}

fn lemma3_2(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    let alpha = single_alpha(p)?;
    let (h, sign, x) = (&case.cell.h, case.cell.sign, at(case));
    let f = stencil::from_polynomial(p);
    Ok(all(MultiIndex::all_of_degree(p.n(), alpha.degree()).into_iter().map(|beta| {
        let mut g = f.clone();
        for axis in 1..=p.n() {
            for _ in 0..beta.get(axis) {
                g = stencil::partial(&g, axis, sign, h);
            }
        }
        let expected = if beta == alpha { Rational::from_integer(alpha.factorial()) } else { Rational::zero() };
        labelled(&beta, values(&g(&x), &CliffordElement::scalar(p.n(), expected)))
    })))
}

fn poly_eval(coeffs: &[Rational], basis: impl Fn(usize) -> Rational) -> Rational {
    coeffs.iter().enumerate().fold(Rational::zero(), |acc, (k, c)| acc + c * basis(k))
}

/// Both one-dimensional conversions, evaluated at `x = mh` for `|m| ≤ 4`.
fn stirling_check(case: &Case, scaled: bool) -> Result<Comparison> {
    let (s, h, fam) = (case.cell.k, &case.cell.h, case.cell.family());
    let (first, second) = if scaled {
        (factorial::factorial_to_monomial_1d(s, fam, h)?, factorial::monomial_to_factorial_1d(s, fam, h)?)
    } else {
        (
            factorial::unscaled_stirling_1d(s, fam, StirlingKind::First)?,
            factorial::unscaled_stirling_1d(s, fam, StirlingKind::Second)?,
        )
    };
    let mut parts = Vec::new();
    for m in -4..=4 {
        let x = int(m) * h;
        let fp = |k: usize| factorial::factorial_power_eval(k, fam, h, &x);
        let lhs = fp(s);
        let rhs = poly_eval(&first, |k| rational::pow(&x, k));
        parts.push(labelled(format!("x^({s}) at m={m}"), values(&lhs, &rhs)));
        let lhs = rational::pow(&x, s);
        let rhs = poly_eval(&second, fp);
        parts.push(labelled(format!("x^{s} at m={m}"), values(&lhs, &rhs)));
    }
    Ok(all(parts))
}

fn thm3_1(case: &Case) -> Result<Comparison> {
    if case.cell.n != 1 {
        return Ok(Comparison::new("", "", true));
    }
    stirling_check(case, false)
}

fn thm3_1_scaled(case: &Case) -> Result<Comparison> {
    stirling_check(case, true)
}

fn monomial_value(beta: &MultiIndex, x: &[Rational]) -> Rational {
    beta.entries().iter().zip(x).fold(Rational::one(), |acc, (&b, xi)| acc * rational::pow(xi, b as usize))
}

fn factorial_value(beta: &MultiIndex, fam: FamilySign, h: &Rational, x: &[Rational]) -> Rational {
    beta.entries()
        .iter()
        .zip(x)
        .fold(Rational::one(), |acc, (&b, xi)| acc * factorial::factorial_power_eval(b as usize, fam, h, xi))
}

fn thm3_2(case: &Case) -> Result<Comparison> {
    let alpha = single_alpha(input(case, 0)?)?;
    let (h, fam, x) = (&case.cell.h, case.cell.family(), at(case));
    let down = factorial::factorial_to_monomial(&alpha, fam, h)?;
    let up = factorial::monomial_to_factorial(&alpha, fam, h)?;
    let lhs1 = factorial_value(&alpha, fam, h, &x);
    let rhs1 = down.iter().fold(Rational::zero(), |acc, (b, c)| acc + c * monomial_value(b, &x));
    let lhs2 = monomial_value(&alpha, &x);
    let rhs2 = up.iter().fold(Rational::zero(), |acc, (b, c)| acc + c * factorial_value(b, fam, h, &x));
    Ok(all([labelled("factorial", values(&lhs1, &rhs1)), labelled("monomial", values(&lhs2, &rhs2))]))
}

fn thm3_2_roundtrip(case: &Case) -> Result<Comparison> {
    let alpha = single_alpha(input(case, 0)?)?;
    let (h, fam) = (&case.cell.h, case.cell.family());
    let compose =
        |outer: fn(&MultiIndex, FamilySign, &Rational) -> Result<std::collections::BTreeMap<MultiIndex, Rational>>,
         inner: fn(&MultiIndex, FamilySign, &Rational) -> Result<std::collections::BTreeMap<MultiIndex, Rational>>|
         -> Result<Vec<(MultiIndex, Rational)>> {
            let mut acc: std::collections::BTreeMap<MultiIndex, Rational> = Default::default();
            for (beta, c) in inner(&alpha, fam, h)? {
                for (gamma, d) in outer(&beta, fam, h)? {
                    *acc.entry(gamma).or_insert_with(Rational::zero) += &c * d;
                }
            }
            Ok(acc.into_iter().filter(|(_, v)| !v.is_zero()).collect())
        };
    let identity = vec![(alpha.clone(), Rational::one())];
    let show_map =
        |m: &[(MultiIndex, Rational)]| m.iter().map(|(a, c)| format!("{c}*{a}")).collect::<Vec<_>>().join(" + ");
    let a = compose(factorial::factorial_to_monomial, factorial::monomial_to_factorial)?;
    let b = compose(factorial::monomial_to_factorial, factorial::factorial_to_monomial)?;
    Ok(all([
        Comparison::new(show_map(&a), show_map(&identity), a == identity),
        Comparison::new(show_map(&b), show_map(&identity), b == identity),
    ]))
}

fn thm3_2_k(case: &Case) -> Result<Comparison> {
    let alpha = single_alpha(input(case, 0)?)?;
    let fam = case.cell.family();
    let actual = factorial::factorial_to_monomial(&alpha, fam, &Rational::one())?;
    let mut parts = Vec::new();
    for d in 0..=alpha.degree() {
        let k = factorial::nested_sum_coefficient(&alpha, d, fam, StirlingKind::First)?;
        for beta in MultiIndex::all_of_degree(alpha.dim(), d) {
            let c = actual.get(&beta).cloned().unwrap_or_else(Rational::zero);
            parts.push(labelled(format!("coefficient of x^{beta} in x^({alpha})"), values(&c, &k)));
        }
    }
    Ok(all(parts))
}

// ---------------------------------------------------------------------------
// Fischer inner product and decompositions.

fn eq6(case: &Case) -> Result<Comparison> {
    let (p, q) = (input(case, 0)?, input(case, 1)?);
    let pq = fischer::inner_product(p, q)?;
    let qp = fischer::inner_product(q, p)?;
    let pp = fischer::inner_product(p, p)?;
    Ok(all([labelled("symmetry", values(&pq, &qp)), Comparison::new(format!("[P,P] = {pp}"), "> 0", pp.is_positive())]))
}

fn eq8(case: &Case) -> Result<Comparison> {
    let (p, q) = (input(case, 0)?, input(case, 1)?);
    Ok(values(&fischer::inner_product(p, q)?, &fischer::operator_inner_product(p, q)?))
}

fn eq10(case: &Case) -> Result<Comparison> {
    let (p, q) = (input(case, 0)?, input(case, 1)?);
    let lhs = fischer::inner_product(&mh(p), q)?;
    let rhs = -fischer::inner_product(p, &op::dirac(q, case.cell.sign))?;
    Ok(values(&lhs, &rhs))
}

fn lemma3_4(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    let d = op::dirac(p, case.cell.sign);
    let ok = d.is_zero() || (case.cell.k > 0 && d.homogeneous_degree() == Some(case.cell.k - 1));
    Ok(Comparison::new(print_polynomial(&d), format!("homogeneous of degree {}", case.cell.k as i64 - 1), ok))
}

fn kernel_accounting(case: &Case) -> Result<Comparison> {
    let c = &case.cell;
    let m = fischer::monogenic_kernel(c.k, c.n, &c.h, c.family(), c.sign)?;
    let dim = fischer::homogeneous_dimension(c.n, c.k);
    let annihilated = m.elements.iter().all(|e| op::dirac(e, c.sign).is_zero());
    Ok(all([
        Comparison::new(
            format!("dim M_k + rank D = {} + {}", m.dim(), m.matrix.rank()),
            dim,
            m.dim() + m.matrix.rank() == dim,
        ),
        Comparison::new("D applied to every kernel element", "0", annihilated),
    ]))
}

fn thm3_3(case: &Case) -> Result<Comparison> {
    let c = &case.cell;
    let cert = fischer::orthogonality_certificate(c.k, c.n, &c.h, c.family())?;
    let dim = fischer::homogeneous_dimension(c.n, c.k);
    let rank = if c.k == 0 {
        0
    } else {
        let lower = GradedComponentBasis::homogeneous(c.n, &c.h, c.family(), c.k - 1);
        let target = GradedComponentBasis::homogeneous(c.n, &c.h, c.family(), c.k);
        let cols = (0..lower.len())
            .map(|i| target.coordinates(&mh(&lower.element(i)).graded_component(c.k)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(target.len(), &cols).rank()
    };
    Ok(all([
        Comparison::new("top-degree Gram block", "0", cert.top_gram_zero),
        Comparison::new(
            format!("dim M_k + rank top((mh) Pi_(k-1)) = {} + {rank}", cert.kernel_dim),
            dim,
            cert.kernel_dim + rank == dim,
        ),
    ]))
}

fn thm3_3_literal(case: &Case) -> Result<Comparison> {
    let c = &case.cell;
    let p = input(case, 0)?;
    require_degree(p, c.k)?;
    let kernel = fischer::monogenic_kernel(c.k, c.n, &c.h, c.family(), c.sign)?;
    let mut columns = kernel.elements.clone();
    if c.k > 0 {
        let lower = GradedComponentBasis::homogeneous(c.n, &c.h, c.family(), c.k - 1);
        columns.extend((0..lower.len()).map(|i| mh(&lower.element(i))));
    }
    let target = GradedComponentBasis::up_to(c.n, &c.h, c.family(), c.k);
    let cols = columns.iter().map(|e| target.coordinates(e)).collect::<Result<Vec<_>>>()?;
    let solvable = Matrix::from_columns(target.len(), &cols).solve(&target.coordinates(p)?).is_some();
    Ok(Comparison::new(print_polynomial(p), "M_k + (mh) Q_(k-1)", solvable))
}

fn decomposition(case: &Case, strategy: Strategy, max_power: Option<usize>) -> Result<Comparison> {
    let c = &case.cell;
    let p = input(case, 0)?;
    require_degree(p, c.k)?;
    let problem = fischer::dirac_problem(c.n, &c.h, c.family(), c.sign, max_power);
    let r = decompose::decompose(&problem, p, strategy)?;
    let ok = r.feasible && r.annihilated && r.residual.is_zero();
    Ok(Comparison::new(print_polynomial(p), format!("residual {}", print_polynomial(&r.residual)), ok))
}

fn thm3_4_graded(case: &Case) -> Result<Comparison> {
    decomposition(case, Strategy::Graded, None)
}

fn thm3_4_exact(case: &Case) -> Result<Comparison> {
    decomposition(case, Strategy::Exact, None)
}

fn thm3_4_literal_range(case: &Case) -> Result<Comparison> {
    if case.cell.k == 0 {
        return Ok(Comparison::new("", "", true));
    }
    decomposition(case, Strategy::Exact, Some(case.cell.k - 1))
}

// ---------------------------------------------------------------------------
// Euler and Gamma operators, stencils and identities.

fn stencil_match(
    case: &Case,
    poly: impl Fn(&LatticePolynomial, Sign, &Rational) -> LatticePolynomial,
    field: impl Fn(&Field, usize, Sign, &Rational, &Rational) -> Field,
) -> Result<Comparison> {
    let p = input(case, 0)?;
    let r = param(case, 0).unwrap_or_else(|_| Rational::one());
    let x = at(case);
    let f = stencil::from_polynomial(p);
    let mut parts = Vec::new();
    for s in [Sign::Plus, Sign::Minus] {
        let lhs = poly(p, s, &r).evaluate(&x)?;
        let rhs = field(&f, p.n(), s, &r, &case.cell.h)(&x);
        parts.push(labelled(format!("sign {s}"), values(&lhs, &rhs)));
    }
    Ok(all(parts))
}

fn eq9(case: &Case) -> Result<Comparison> {
    stencil_match(case, |p, s, _| op::op_a(p, s), |f, n, s, _, h| stencil::op_a(f, n, s, h))
}

fn euler_stencil(case: &Case) -> Result<Comparison> {
    stencil_match(case, |p, s, _| op::euler(p, s), |f, n, s, _, h| stencil::euler(f, n, s, h))
}

fn gamma_stencil(case: &Case) -> Result<Comparison> {
    stencil_match(case, |p, s, _| op::gamma(p, s), |f, n, s, _, h| stencil::gamma(f, n, s, h))
}

fn eq13(case: &Case) -> Result<Comparison> {
    stencil_match(case, |p, s, _| op::op_b(p, s), |f, n, s, _, h| stencil::op_b(f, n, s, h))
}

fn eq14(case: &Case) -> Result<Comparison> {
    stencil_match(case, |p, s, _| op::op_c(p, s), |f, n, s, _, h| stencil::op_c(f, n, s, h))
}

fn eq15(case: &Case) -> Result<Comparison> {
    stencil_match(case, op::op_r, |f, n, s, r, h| stencil::op_r(f, n, s, r, h))
}

fn eq16(case: &Case) -> Result<Comparison> {
    stencil_match(case, op::op_v, |f, n, s, r, h| stencil::op_v(f, n, s, r, h))
}

fn bivector(n: usize, j: usize, k: usize) -> CliffordElement {
    let (sign, blade) = Blade::generator(j).product(Blade::generator(k));
    CliffordElement::blade(n, blade, if sign { -Rational::one() } else { Rational::one() })
}

fn eq11(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let (n, s) = (f.n(), case.cell.sign);
    let lhs = mh(&op::dirac(f, s));
    let mut rhs = f.zero_like();
    for i in 1..=n {
        rhs = &rhs - &op::coordinate(&op::partial(f, i, s), i);
    }
    for j in 1..=n {
        for k in j + 1..=n {
            rhs = &rhs + &left(&op::l_jk(f, s, j, k), &bivector(n, j, k))?;
        }
    }
    Ok(polys(&lhs, &rhs))
}

fn eq12(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let s = case.cell.sign;
    Ok(polys(&mh(&op::dirac(f, s)), &-&(&op::euler(f, s) + &op::gamma(f, s))))
}

fn euler_eigen(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    require_degree(p, case.cell.k)?;
    Ok(polys(&op::euler(p, case.cell.sign), &p.scale(&int(case.cell.k as i64))))
}

fn gamma_eigen(case: &Case) -> Result<Comparison> {
    let m = input(case, 0)?;
    require_monogenic(m, case.cell.sign)?;
    Ok(polys(&op::gamma(m, case.cell.sign), &m.scale(&-int(case.cell.k as i64))))
}

fn eq17(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let (s, n) = (case.cell.sign, f.n());
    let lhs = op::dirac(&mh(f), s);
    let rhs = &(&op::op_r(f, s, &half_n(n)).scale(&int(-2)) + &op::euler(f, s)) + &op::gamma(f, s);
    Ok(polys(&lhs, &rhs))
}

fn prop3_1(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let s = case.cell.sign;
    let lhs = op::dirac(&op::euler(f, s), s);
    let rhs = &op::dirac(f, s) + &op::euler(&op::dirac(f, s), s);
    Ok(polys(&lhs, &rhs))
}

fn prop3_2(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let (s, n) = (case.cell.sign, f.n());
    let lhs = op::dirac(&mh(f), s);
    let rhs = &op::op_v(f, s, &half_n(n)).scale(&int(-2)) - &mh(&op::dirac(f, s));
    Ok(polys(&lhs, &rhs))
}

fn eq18(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let (s, r) = (case.cell.sign, param(case, 0)?);
    let lhs = op::dirac(&op::op_r(f, s, &r), s);
    let rhs = op::op_r(&op::dirac(f, s), s, &(&r + Rational::one()));
    Ok(polys(&lhs, &rhs))
}

fn eq19(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let (s, r) = (case.cell.sign, param(case, 0)?);
    let lhs = op::dirac(&op::op_v(f, s, &r), s);
    let rhs = op::op_v(&op::dirac(f, s), s, &(&r + Rational::one()));
    Ok(polys(&lhs, &rhs))
}

fn commute_a(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let s = case.cell.sign;
    Ok(polys(&op::dirac(&op::op_a(f, s), s), &op::op_a(&op::dirac(f, s), s)))
}

fn commute_b(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let s = case.cell.sign;
    Ok(polys(&op::dirac(&op::op_b(f, s), s), &op::op_b(&op::dirac(f, s), s)))
}

fn dirac_pow(p: &LatticePolynomial, sign: Sign, s: usize) -> LatticePolynomial {
    (0..s).fold(p.clone(), |acc, _| op::dirac(&acc, sign))
}

/// `(−2)^s V_{n/2+s−2} ⋯ V_{n/2} M`, applying `V_{n/2}` first.
fn iterated_v(m: &LatticePolynomial, sign: Sign, s: usize) -> LatticePolynomial {
    let n = m.n();
    let v = (0..s.saturating_sub(1)).fold(m.clone(), |acc, j| op::op_v(&acc, sign, &(half_n(n) + int(j as i64))));
    v.scale(&rational::pow(&int(-2), s))
}

fn iterated(case: &Case, s: usize) -> Result<Comparison> {
    let m = input(case, 0)?;
    require_monogenic(m, case.cell.sign)?;
    let lhs = dirac_pow(&mh_pow(m, s), case.cell.sign, s);
    Ok(polys(&lhs, &iterated_v(m, case.cell.sign, s)))
}

fn eq20(case: &Case) -> Result<Comparison> {
    iterated(case, 2)
}

fn eq21(case: &Case) -> Result<Comparison> {
    iterated(case, 3)
}

fn power_param(case: &Case) -> Result<usize> {
    let s = param(case, 0)?;
    if !s.is_integer() || s < int(2) {
        return Err(Error::InvalidArgument(format!("power must be an integer ≥ 2, got {s}")));
    }
    Ok(s.to_integer().try_into().unwrap_or(2))
}

fn eq22(case: &Case) -> Result<Comparison> {
    iterated(case, power_param(case)?)
}

fn eq22_kernel(case: &Case) -> Result<Comparison> {
    let m = input(case, 0)?;
    require_monogenic(m, case.cell.sign)?;
    let s = power_param(case)?;
    let d = dirac_pow(&mh_pow(m, s), case.cell.sign, s + 1);
    Ok(Comparison::new(print_polynomial(&d), "0", d.is_zero()))
}

fn thm3_5(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let (s, r) = (case.cell.sign, param(case, 0)?);
    let rj = op::op_r(&op::invert_r(f, s, &r)?, s, &r);
    let jr = op::invert_r(&op::op_r(f, s, &r), s, &r)?;
    Ok(all([labelled("R J f", polys(&rj, f)), labelled("J R f", polys(&jr, f))]))
}

fn thm3_5_summation(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?;
    let (s, r) = (case.cell.sign, param(case, 0)?);
    let lhs = op::eval_j_summation(f, s, &r, &case.point)?;
    let rhs = op::invert_r(f, s, &r)?.evaluate_lattice(&case.point)?;
    Ok(values(&lhs, &rhs))
}

fn w_noninverse(case: &Case) -> Result<Comparison> {
    let f = input(case, 0)?.clone();
    let (s, r, h) = (case.cell.sign, param(case, 0)?, case.cell.h.clone());
    // Validate once so the field below cannot fail.
    op::eval_w_summation(&f, s, &r, &case.point)?;
    let (g, rr, hh) = (f.clone(), r.clone(), h.clone());
    let w: Field = Arc::new(move |x| {
        let m: Vec<i64> = x
            .iter()
            .map(|xi| {
                let q = xi / &hh;
                i64::try_from(q.to_integer()).expect("lattice coordinate fits in i64")
            })
            .collect();
        op::eval_w_summation(&g, s, &rr, &m).expect("validated summation")
    });
    let lhs = stencil::op_v(&w, f.n(), s, &r, &h)(&at(case));
    Ok(values(&lhs, &f.evaluate_lattice(&case.point)?))
}

// ---------------------------------------------------------------------------
// Eigen-claims and commutation formulas.

fn eigen(case: &Case, apply: impl Fn(&LatticePolynomial) -> LatticePolynomial, factor: Rational) -> Result<Comparison> {
    let p = input(case, 0)?;
    require_degree(p, case.cell.k)?;
    Ok(polys(&apply(p), &p.scale(&factor)))
}

fn eq23(case: &Case) -> Result<Comparison> {
    let c = &case.cell;
    eigen(case, |p| op::op_b(p, c.sign), signed(c.sign) * int(c.k as i64) * &c.h)
}

fn ah_factor(case: &Case) -> Result<Rational> {
    let c = &case.cell;
    Ok(int(c.k as i64) * &c.h * &c.h / one_pm_h(case)?)
}

fn eq24(case: &Case) -> Result<Comparison> {
    eigen(case, |p| op::op_a(p, case.cell.sign), ah_factor(case)?)
}

fn eq25(case: &Case) -> Result<Comparison> {
    let r = param(case, 0)?;
    let factor = &r + int(case.cell.k as i64) - ah_factor(case)?;
    eigen(case, |p| op::op_r(p, case.cell.sign, &r), factor)
}

fn eq26(case: &Case) -> Result<Comparison> {
    let c = &case.cell;
    let r = param(case, 0)?;
    let factor = &r + (Rational::one() + signed(c.sign) * &c.h / int(2)) * int(c.k as i64) - ah_factor(case)?;
    eigen(case, |p| op::op_v(p, c.sign, &r), factor)
}

/// `h 1^± f + h² D f`.
fn b_defect(f: &LatticePolynomial, sign: Sign) -> Result<LatticePolynomial> {
    let h = f.h().clone();
    Ok(&left(f, &ones(f.n(), sign).scale(&h))? + &op::dirac(f, sign).scale(&(&h * &h)))
}

fn commutation(
    case: &Case,
    apply: impl Fn(&LatticePolynomial) -> LatticePolynomial,
    extra: impl Fn(&LatticePolynomial) -> Result<LatticePolynomial>,
) -> Result<Comparison> {
    let f = input(case, 0)?;
    let lhs = apply(&mh(f));
    let rhs = &mh(&apply(f)) + &extra(f)?;
    Ok(polys(&lhs, &rhs))
}

fn eq27(case: &Case) -> Result<Comparison> {
    let s = case.cell.sign;
    commutation(case, |p| op::op_b(p, s), |f| b_defect(f, s))
}

fn eq28(case: &Case) -> Result<Comparison> {
    let s = case.cell.sign;
    commutation(case, |p| op::op_c(p, s), |f| Ok(-&op::euler(f, s)))
}

fn eq29(case: &Case) -> Result<Comparison> {
    let s = case.cell.sign;
    let factor = -signed(s) * &case.cell.h;
    commutation(case, |p| op::op_a(p, s), |f| Ok(op::op_c(f, s).scale(&factor)))
}

fn eq30(case: &Case) -> Result<Comparison> {
    let s = case.cell.sign;
    commutation(case, |p| op::euler(p, s), |f| Ok(op::op_c(f, s)))
}

fn eq31(case: &Case) -> Result<Comparison> {
    let (s, r) = (case.cell.sign, param(case, 0)?);
    let factor = Rational::one() + signed(s) * &case.cell.h;
    commutation(case, |p| op::op_r(p, s, &r), |f| Ok(op::op_c(f, s).scale(&factor)))
}

fn eq32(case: &Case) -> Result<Comparison> {
    let (s, r) = (case.cell.sign, param(case, 0)?);
    let factor = Rational::one() + signed(s) * &case.cell.h;
    commutation(
        case,
        |p| op::op_v(p, s, &r),
        |f| Ok(&op::op_c(f, s).scale(&factor) + &b_defect(f, s)?.scale(&rat(1, 2))),
    )
}

/// Shared setup for the formulas on monogenic inputs: `(M, k, sign, h, 2 ± 2h)`.
fn monogenic_input(case: &Case) -> Result<(&LatticePolynomial, Rational, Sign, Rational, Rational)> {
    let m = input(case, 0)?;
    let s = case.cell.sign;
    require_monogenic(m, s)?;
    require_degree(m, case.cell.k)?;
    let h = case.cell.h.clone();
    let two_pm = int(2) + int(2) * signed(s) * &h;
    Ok((m, int(case.cell.k as i64), s, h, two_pm))
}

fn eq33(case: &Case) -> Result<Comparison> {
    let (m, k, s, h, _) = monogenic_input(case)?;
    let n = int(m.n() as i64);
    let factor = n + &k - int(2) * &k * &h * &h / one_pm_h(case)? + signed(s) * &h * &k;
    let lhs = op::gamma(&mh(m), s);
    let rhs = &mh(m).scale(&factor) - &op::op_c(m, s);
    Ok(polys(&lhs, &rhs))
}

fn eq34(case: &Case) -> Result<Comparison> {
    let (m, k, s, h, two_pm) = monogenic_input(case)?;
    let lhs = op::dirac(&mh(&mh(m)), s);
    let rhs = &mh(m).scale(&(signed(s) * &h * &k)) - &op::op_c(m, s).scale(&two_pm);
    Ok(polys(&lhs, &rhs))
}

fn eq35(case: &Case) -> Result<Comparison> {
    let (m, k, s, _, _) = monogenic_input(case)?;
    let m2 = mh(&mh(m));
    let lhs = op::euler(&m2, s);
    let rhs = &(&m2.scale(&k) + &mh(&op::op_c(m, s)).scale(&int(2))) - &m.scale(&k);
    Ok(polys(&lhs, &rhs))
}

fn eq36(case: &Case) -> Result<Comparison> {
    let (m, _, s, h, two_pm) = monogenic_input(case)?;
    let lhs = op::dirac(&mh(&mh(m)), s);
    let rhs = &-&op::op_c(m, s).scale(&two_pm) + &left(m, &ones(m.n(), s).scale(&h))?;
    Ok(polys(&lhs, &rhs))
}

fn eq36_gamma(case: &Case) -> Result<Comparison> {
    let (m, k, s, h, _) = monogenic_input(case)?;
    let m2 = mh(&mh(m));
    let lhs = op::gamma(&m2, s);
    let rhs = &(&(&m2.scale(&-&k) + &mh(&op::op_c(m, s)).scale(&(int(2) * signed(s)))) + &m.scale(&k))
        - &left(&mh(m), &ones(m.n(), s).scale(&h))?;
    Ok(polys(&lhs, &rhs))
}

// ---------------------------------------------------------------------------
// Homogeneous powers.

fn hs(case: &Case, s: usize) -> Result<LatticePolynomial> {
    factorial::homogeneous_power(s, case.cell.n, case.cell.family(), &case.cell.h)
}

fn hs_homogeneous(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    let k = case.cell.k;
    Ok(Comparison::new(
        print_polynomial(p),
        format!("nonzero, homogeneous of degree {k}"),
        require_degree(p, k).is_ok(),
    ))
}

fn hs_c(case: &Case) -> Result<Comparison> {
    Ok(polys(&op::op_c(input(case, 0)?, case.cell.sign), &hs(case, case.cell.k + 1)?))
}

fn hs_d(case: &Case) -> Result<Comparison> {
    let k = case.cell.k;
    let rhs = if k == 0 { input(case, 0)?.zero_like() } else { hs(case, k - 1)?.scale(&-int(k as i64)) };
    Ok(polys(&op::dirac(input(case, 0)?, case.cell.sign), &rhs))
}

fn hs_e(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    Ok(polys(&op::euler(p, case.cell.sign), &p.scale(&int(case.cell.k as i64))))
}

// ---------------------------------------------------------------------------
// Laplacian and the quaternionic operators.

fn eq38(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    let mut fb = p.zero_like();
    let mut bf = p.zero_like();
    for i in 1..=p.n() {
        fb = &fb + &op::partial(&op::partial(p, i, Sign::Plus), i, Sign::Minus);
        bf = &bf + &op::partial(&op::partial(p, i, Sign::Minus), i, Sign::Plus);
    }
    let lap = op::laplacian(p);
    let x = at(case);
    let pointwise = stencil::laplacian(&stencil::from_polynomial(p), p.n(), &case.cell.h)(&x);
    Ok(all([
        labelled("sum d-d+", polys(&lap, &fb)),
        labelled("sum d+d-", polys(&lap, &bf)),
        labelled("stencil", values(&lap.evaluate(&x)?, &pointwise)),
    ]))
}

fn laplace_nonfactorization(case: &Case) -> Result<Comparison> {
    let p = input(case, 0)?;
    let s = case.cell.sign;
    Ok(polys(&op::dirac(&op::dirac(p, s), s.opposite()), &-&op::laplacian(p)))
}

fn matrix_form(case: &Case, variant: MixedVariant) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    Ok(quats(&qd::mixed_dirac(variant, &f), &qd::mixed_dirac_blocks(variant, &f)))
}

fn eq39(case: &Case) -> Result<Comparison> {
    matrix_form(case, MixedVariant::MinusPlus)
}

fn eq40(case: &Case) -> Result<Comparison> {
    matrix_form(case, MixedVariant::PlusMinus)
}

fn div_curl(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let d = qd::div(case.cell.sign, &qd::curl(case.cell.sign, &f));
    Ok(Comparison::new(print_polynomial(&d), "0", d.is_zero()))
}

fn curl_grad(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let c = qd::curl(case.cell.sign, &qd::grad(case.cell.sign, &f.scalar_part())?);
    Ok(Comparison::new(&c, "0", c.is_zero()))
}

fn curl_curl(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?.vector_part();
    let s = case.cell.sign;
    let lhs = qd::curl(s, &qd::curl(s.opposite(), &f));
    let rhs = &(-&qd::laplacian(&f)) + &qd::grad(s.opposite(), &qd::div(s, &f))?;
    Ok(quats(&lhs, &rhs))
}

fn eq41(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let r = qd::verify_laplacian_factorization(&f);
    Ok(all([
        labelled("D+- D-+", quats(&r.plus_minus_after_minus_plus, &r.negative_laplacian)),
        labelled("D-+ D+-", quats(&r.minus_plus_after_plus_minus, &r.negative_laplacian)),
    ]))
}

fn point3(case: &Case) -> Result<[Rational; 3]> {
    at(case).try_into().map_err(|_| Error::DimensionMismatch { left: 3, right: case.point.len() })
}

fn quaternion_matrix(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let x = point3(case)?;
    let q = f.evaluate(&x)?;
    let lhs = quaternion::mat_vec(&quaternion::instantiate(&quaternion::PRINTED_VARIABLE_MATRIX, &x), &q);
    Ok(values(&lhs, &(&Quaternion::vector(&x) * &q)))
}

fn quaternion_lift(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let x = point3(case)?;
    let lhs = f.multiply_by_variable().evaluate(&x)?;
    Ok(values(&lhs, &(&Quaternion::vector(&x) * &f.evaluate(&x)?)))
}

fn thm4_1_inclusion(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    require_degree(f.as_polynomial(), case.cell.k)?;
    let d = qd::mixed_dirac(variant_of(case.cell.sign), &f);
    let ok = d.is_zero() || (case.cell.k > 0 && d.homogeneous_degree() == Some(case.cell.k - 1));
    Ok(Comparison::new(&d, format!("homogeneous of degree {}", case.cell.k as i64 - 1), ok))
}

fn quaternion_decomposition(case: &Case, strategy: Strategy) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    require_degree(f.as_polynomial(), case.cell.k)?;
    let r = qd::quaternionic_fischer_decompose(&f, variant_of(case.cell.sign), strategy)?;
    let ok = r.feasible && r.annihilated && r.residual.is_zero();
    Ok(Comparison::new(&f, format!("residual {}", print_polynomial(&r.residual)), ok))
}

fn thm4_1_graded(case: &Case) -> Result<Comparison> {
    quaternion_decomposition(case, Strategy::Graded)
}

fn thm4_1_exact(case: &Case) -> Result<Comparison> {
    quaternion_decomposition(case, Strategy::Exact)
}

fn thm4_2_pairing(case: &Case) -> Result<Comparison> {
    let (p, q) = (input(case, 0)?, input(case, 1)?);
    let lhs = fischer::inner_product(&mh(&mh(p)), q)?;
    let rhs = -fischer::inner_product(p, &op::laplacian(q))?;
    Ok(values(&lhs, &rhs))
}

fn harmonic_decomposition(case: &Case, strategy: Strategy) -> Result<Comparison> {
    let p = input(case, 0)?;
    require_degree(p, case.cell.k)?;
    let r = qd::harmonic_fischer_decompose(p, strategy)?;
    let ok = r.feasible && r.annihilated && r.residual.is_zero();
    Ok(Comparison::new(print_polynomial(p), format!("residual {}", print_polynomial(&r.residual)), ok))
}

fn thm4_2_graded(case: &Case) -> Result<Comparison> {
    harmonic_decomposition(case, Strategy::Graded)
}

fn thm4_2_exact(case: &Case) -> Result<Comparison> {
    harmonic_decomposition(case, Strategy::Exact)
}

fn cor4_1(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let c = &case.cell;
    if !qd::laplacian(&f).is_zero() {
        return Err(Error::InvalidArgument("input is not harmonic".into()));
    }
    let variant = variant_of(c.sign);
    let mut columns: Vec<LatticePolynomial> =
        qd::mixed_monogenic_kernel(c.k, &c.h, variant)?.elements.iter().map(|e| e.as_polynomial().clone()).collect();
    if c.k > 0 {
        columns.extend(
            qd::mixed_monogenic_kernel(c.k - 1, &c.h, variant)?
                .elements
                .iter()
                .map(|e| e.multiply_by_variable().into_polynomial()),
        );
    }
    let basis = qd::quaternion_basis(&c.h, variant.family(), (0..=c.k).collect());
    let cols = columns.iter().map(|e| basis.coordinates(e)).collect::<Result<Vec<_>>>()?;
    let ok = Matrix::from_columns(basis.len(), &cols).solve(&basis.coordinates(f.as_polynomial())?).is_some();
    Ok(Comparison::new(&f, format!("M_k + (mh) M_(k-1) for D{variant}"), ok))
}

fn expansion(case: &Case, t: Transcription) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let v = variant_of(case.cell.sign);
    Ok(quats(&qd::product_expansion(v, t, &f), &qd::variable_times_dirac(v, &f)))
}

fn eq42(case: &Case) -> Result<Comparison> {
    expansion(case, Transcription::Printed)
}

fn eq43(case: &Case) -> Result<Comparison> {
    expansion(case, Transcription::Printed)
}

fn euler_gamma(case: &Case, t: Transcription) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let d = qd::euler_gamma_defect(variant_of(case.cell.sign), t, &f);
    Ok(Comparison::new(&d, "0", d.is_zero()))
}

fn quaternion_euler_gamma(case: &Case) -> Result<Comparison> {
    euler_gamma(case, Transcription::Corrected)
}

fn quaternion_euler_gamma_printed(case: &Case) -> Result<Comparison> {
    euler_gamma(case, Transcription::Printed)
}

fn quaternion_transcription(case: &Case) -> Result<Comparison> {
    let v = variant_of(case.cell.sign);
    let spec = quat_spec(&case.cell).terms(4);
    let mut rng = random::rng(random::derive_seed(0, "transcription samples"));
    let samples = (0..4)
        .map(|_| QuaternionLatticePolynomial::new(random::polynomial(&mut rng, &spec, 3)))
        .collect::<Result<Vec<_>>>()?;
    let chosen = qd::select_transcription(v, &samples);
    let show = |t: Option<Transcription>| t.map_or("none".to_string(), |t| format!("{t:?}").to_lowercase());
    Ok(Comparison::new(show(chosen), show(Some(Transcription::Corrected)), chosen == Some(Transcription::Corrected)))
}

fn quaternion_euler_eigen(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    require_degree(f.as_polynomial(), case.cell.k)?;
    Ok(quats(&qd::euler(variant_of(case.cell.sign), &f), &f.scale(&int(case.cell.k as i64))))
}

fn quaternion_gamma_eigen(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let v = variant_of(case.cell.sign);
    if !qd::mixed_dirac(v, &f).is_zero() {
        return Err(Error::InvalidArgument("input is not monogenic".into()));
    }
    Ok(quats(&qd::gamma(v, Transcription::Corrected, &f), &f.scale(&-int(case.cell.k as i64))))
}

fn quaternion_de(case: &Case) -> Result<Comparison> {
    let f = quat_input(case, 0)?;
    let v = variant_of(case.cell.sign);
    let lhs = qd::mixed_dirac(v, &qd::euler(v, &f));
    let df = qd::mixed_dirac(v, &f);
    let rhs = &df + &qd::euler(v, &df);
    Ok(quats(&lhs, &rhs))
}

// ---------------------------------------------------------------------------
// The catalogue.

macro_rules! claim {
    ($id:expr, $anchor:expr, $topic:ident, $exp:ident, $cells:ident, $gen:expr, $eval:expr, $statement:expr) => {
        Claim {
            id: $id,
            anchor: $anchor,
            topic: Topic::$topic,
            expectation: Expectation::$exp,
            statement: $statement,
            cells: CellSet::$cells,
            generate: $gen,
            evaluate: $eval,
        }
    };
}

/// Every claim, in report order.
pub fn catalogue() -> Vec<Claim> {
    vec![
        // Preliminaries.
        claim!(
            "Clifford-square",
            "x^2 = -|x|^2 e0",
            Preliminaries,
            ExpectedExact,
            Grid,
            gen_general,
            clifford_square,
            "a vector squares to minus its squared norm"
        ),
        claim!(
            "Clifford-anticommute",
            "e_i e_j + e_j e_i = -2 delta_ij",
            Preliminaries,
            ExpectedExact,
            Grid,
            gen_single,
            clifford_anticommute,
            "generators anticommute and square to -1"
        ),
        claim!(
            "Difference-stencil",
            "forward/backward differences",
            Preliminaries,
            ExpectedExact,
            Grid,
            gen_general,
            difference_stencil,
            "polynomial-level differences agree with the two-point stencil"
        ),
        claim!(
            "Eq2",
            "difRule1",
            Preliminaries,
            ExpectedExact,
            Grid,
            gen_pair,
            eq2,
            "d(fg) = f dg + (df) g(x ± h e_i)"
        ),
        claim!(
            "Eq3",
            "difRule2",
            Preliminaries,
            ExpectedExact,
            Grid,
            gen_pair,
            eq3,
            "d(fg) = f(x ± h e_i) dg + (df) g"
        ),
        claim!(
            "Dirac-stencil",
            "difD",
            Preliminaries,
            ExpectedExact,
            Grid,
            gen_general,
            dirac_stencil,
            "D = sum e_i d_i agrees with the stencil"
        ),
        // Factorial powers.
        claim!("P1", "P1", FactorialPowers, ExpectedExact, Stirling, gen_single_1d, p1, "(x)^(s+1) = (x ∓ sh)(x)^(s)"),
        claim!(
            "P2",
            "P2",
            FactorialPowers,
            ExpectedExact,
            Grid,
            gen_axis_powers,
            p2,
            "matched difference: d_j (m_i h)^(s) = s (m_i h)^(s-1) delta_ij"
        ),
        claim!(
            "P3",
            "P3",
            FactorialPowers,
            ExpectedExact,
            Grid,
            gen_axis_powers,
            p3,
            "mismatched difference: d_j (m_i h)^(s) = s (m_i h ∓ h)^(s-1) delta_ij"
        ),
        claim!(
            "P4",
            "P4",
            FactorialPowers,
            ExpectedExact,
            Limit,
            gen_single_1d,
            p4,
            "(x)^(s) -> x^s at x = 1 as h -> 0: deviations decrease over h = 2^-1..2^-6"
        ),
        claim!(
            "P4-rate",
            "P4",
            FactorialPowers,
            Hypothesis,
            Limit,
            gen_single_1d,
            p4_rate,
            "the deviation at x = 1 contracts by a factor in [1.8, 2.2] per halving of h"
        ),
        claim!(
            "Lemma3.1",
            "prop1",
            FactorialPowers,
            ExpectedExact,
            Grid,
            gen_factorial_powers,
            lemma3_1,
            "sum (m_i h) d_i (mh ∓ h e_i)^(alpha) = |alpha| (mh)^(alpha)"
        ),
        claim!(
            "Lemma3.2",
            "prop2",
            FactorialPowers,
            ExpectedExact,
            Grid,
            gen_factorial_powers,
            lemma3_2,
            "d^beta (mh)^(alpha) = alpha! delta_alpha,beta for |beta| = |alpha|"
        ),
        claim!(
            "Lemma3.3",
            "prop3",
            FactorialPowers,
            ExpectedExact,
            Limit,
            gen_single,
            lemma3_3,
            "multi-index factorial powers approach x^alpha at x = (1..1) as h -> 0"
        ),
        claim!(
            "Thm3.1",
            "comb1",
            FactorialPowers,
            ExpectedExact,
            UnitMesh,
            gen_single_1d,
            thm3_1,
            "one-dimensional Stirling relations with plain Stirling numbers (unit mesh)"
        ),
        claim!(
            "Thm3.1-all-h",
            "comb1",
            FactorialPowers,
            Hypothesis,
            Stirling,
            gen_single_1d,
            thm3_1,
            "the same unscaled Stirling relations at every mesh width"
        ),
        claim!(
            "Thm3.1-scaled",
            "comb1",
            FactorialPowers,
            ExpectedExact,
            Stirling,
            gen_single_1d,
            thm3_1_scaled,
            "Stirling relations with the coefficient of x^k scaled by h^(s-k)"
        ),
        claim!(
            "Thm3.2",
            "Stirl1",
            FactorialPowers,
            ExpectedExact,
            Stirling,
            gen_factorial_powers,
            thm3_2,
            "multi-index conversions between (mh)^(alpha) and the factorial basis, pointwise"
        ),
        claim!(
            "Thm3.2-roundtrip",
            "Stirl2",
            FactorialPowers,
            ExpectedExact,
            Stirling,
            gen_factorial_powers,
            thm3_2_roundtrip,
            "monomial -> factorial -> monomial is the identity, and conversely"
        ),
        claim!(
            "Thm3.2-K",
            "multiexp",
            FactorialPowers,
            Hypothesis,
            UnitMesh,
            gen_factorial_powers,
            thm3_2_k,
            "the nested Stirling sum K gives each coefficient of the multi-index expansion"
        ),
        // Fischer inner product and decomposition.
        claim!(
            "Eq6",
            "fischer",
            Fischer,
            ExpectedExact,
            Grid,
            gen_same_degree,
            eq6,
            "the Fischer inner product is symmetric and positive definite"
        ),
        claim!("Eq8", "innerfischer", Fischer, ExpectedExact, Grid, gen_same_degree, eq8, "[P,Q] = Sc(P(D)^bar Q)(0)"),
        claim!(
            "Eq10",
            "fischer3",
            Fischer,
            ExpectedExact,
            Grid,
            gen_adjacent_degrees,
            eq10,
            "[(mh) P_(k-1), Q_k] = -[P_(k-1), D Q_k]"
        ),
        claim!(
            "Lemma3.4",
            "prop5",
            Fischer,
            ExpectedExact,
            Grid,
            gen_homogeneous,
            lemma3_4,
            "D maps Pi_k into Pi_(k-1)"
        ),
        claim!(
            "Kernel-accounting",
            "fisher2",
            Fischer,
            ExpectedExact,
            Grid,
            gen_single,
            kernel_accounting,
            "dim M_k + rank D|Pi_k = dim Pi_k, kernel annihilated"
        ),
        claim!(
            "Thm3.3",
            "fisher2",
            Fischer,
            ExpectedExact,
            Grid,
            gen_single,
            thm3_3,
            "Pi_k = M_k (+) top-degree part of (mh) Pi_(k-1), orthogonal for the Fischer product"
        ),
        claim!(
            "Thm3.3-literal",
            "fisher2",
            Fischer,
            Hypothesis,
            Grid,
            gen_homogeneous,
            thm3_3_literal,
            "every P_k equals M_k + (mh) Q_(k-1) exactly"
        ),
        claim!(
            "Thm3.4-graded",
            "Fischer decomposition",
            Fischer,
            ExpectedExact,
            Grid,
            gen_homogeneous,
            thm3_4_graded,
            "graded Fischer decomposition with monogenic components and zero residual"
        ),
        claim!(
            "Thm3.4-exact",
            "Fischer decomposition",
            Fischer,
            Hypothesis,
            Grid,
            gen_homogeneous,
            thm3_4_exact,
            "P_k = sum_(s=0..k) (mh)^s M_(k-s) exactly"
        ),
        claim!(
            "Thm3.4-literal-range",
            "Fischer decomposition",
            Fischer,
            Hypothesis,
            Grid,
            gen_homogeneous,
            thm3_4_literal_range,
            "P_k = sum_(s=0..k-1) (mh)^s M_(k-s) exactly"
        ),
        // Euler and Gamma operators.
        claim!("Eq9", "Ah", EulerGamma, ExpectedExact, Grid, gen_general, eq9, "A agrees with its stencil"),
        claim!(
            "Euler-stencil",
            "EulerGamma",
            EulerGamma,
            ExpectedExact,
            Grid,
            gen_general,
            euler_stencil,
            "E agrees with its stencil"
        ),
        claim!(
            "Gamma-stencil",
            "EulerGamma",
            EulerGamma,
            ExpectedExact,
            Grid,
            gen_general,
            gamma_stencil,
            "Gamma agrees with its stencil"
        ),
        claim!(
            "Eq11",
            "id1",
            EulerGamma,
            ExpectedExact,
            Grid,
            gen_general,
            eq11,
            "(mh) D f = -sum (m_i h) d_i f + sum_(j<k) e_j e_k L_jk f"
        ),
        claim!("Eq12", "id2", EulerGamma, ExpectedExact, Grid, gen_general, eq12, "(mh) D = -(E + Gamma)"),
        claim!("Eq13", "Bh", EulerGamma, ExpectedExact, Grid, gen_general, eq13, "B agrees with its stencil"),
        claim!("Eq14", "Ch", EulerGamma, ExpectedExact, Grid, gen_general, eq14, "C agrees with its stencil"),
        claim!("Eq15", "Rh", EulerGamma, ExpectedExact, Grid, gen_general, eq15, "R_r agrees with its stencil"),
        claim!("Eq16", "Vh", EulerGamma, ExpectedExact, Grid, gen_general, eq16, "V_r agrees with its stencil"),
        claim!(
            "Euler-eigen",
            "EulerGamma",
            EulerGamma,
            ExpectedExact,
            Grid,
            gen_homogeneous,
            euler_eigen,
            "E P_k = k P_k"
        ),
        claim!(
            "Gamma-eigen",
            "EulerGamma",
            EulerGamma,
            ExpectedExact,
            Grid,
            gen_monogenic,
            gamma_eigen,
            "Gamma M_k = -k M_k"
        ),
        claim!("Eq17", "Dmh", EulerGamma, Hypothesis, Grid, gen_general, eq17, "D (mh) f = (-2 R_(n/2) + E + Gamma) f"),
        claim!("Prop3.1", "diracE", EulerGamma, ExpectedExact, Grid, gen_general, prop3_1, "D E = D + E D"),
        claim!(
            "Prop3.2",
            "diracmh",
            EulerGamma,
            ExpectedExact,
            Grid,
            gen_general,
            prop3_2,
            "D((mh) f) = -2 V_(n/2) f - (mh) D f"
        ),
        claim!("Eq18", "DR", EulerGamma, Hypothesis, Grid, gen_general, eq18, "D R_r = R_(r+1) D"),
        claim!("Eq19", "DV", EulerGamma, Hypothesis, Grid, gen_general, eq19, "D V_r = V_(r+1) D"),
        claim!("Commute-A", "DR", EulerGamma, Hypothesis, Grid, gen_general, commute_a, "D A = A D"),
        claim!("Commute-B", "DR", EulerGamma, Hypothesis, Grid, gen_general, commute_b, "D B = B D"),
        claim!("Eq20", "DDf", EulerGamma, Hypothesis, Grid, gen_monogenic, eq20, "D^2 ((mh)^2 M) = 4 V_(n/2) M"),
        claim!(
            "Eq21",
            "DDDf",
            EulerGamma,
            Hypothesis,
            Grid,
            gen_monogenic,
            eq21,
            "D^3 ((mh)^3 M) = -8 V_(n/2+1) V_(n/2) M"
        ),
        claim!(
            "Eq22",
            "Dsf",
            EulerGamma,
            Hypothesis,
            Grid,
            gen_monogenic_power,
            eq22,
            "D^s ((mh)^s M) = (-2)^s V_(n/2+s-2) ... V_(n/2) M"
        ),
        claim!(
            "Eq22-kernel",
            "Dsf",
            EulerGamma,
            Hypothesis,
            Grid,
            gen_monogenic_power,
            eq22_kernel,
            "(mh)^s M lies in the kernel of D^(s+1)"
        ),
        claim!(
            "Thm3.5",
            "J_{h,r}",
            EulerGamma,
            ExpectedExact,
            Grid,
            gen_general,
            thm3_5,
            "J_r R_r = R_r J_r = I with J_r computed by graded inversion"
        ),
        claim!(
            "Thm3.5-summation",
            "J_{h,r}",
            EulerGamma,
            Hypothesis,
            Grid,
            gen_summation,
            thm3_5_summation,
            "the dilation summation formula for J_r equals the inverse of R_r"
        ),
        claim!(
            "W-noninverse",
            "W_{h,r}",
            EulerGamma,
            NegativeWitness,
            Grid,
            gen_summation,
            w_noninverse,
            "there is an f with V_r(W_r f) != f"
        ),
        // Eigen-claims and commutation formulas.
        claim!("Eq23", "BP", Calculus, Hypothesis, Grid, gen_homogeneous, eq23, "B P_k = ± k h P_k"),
        claim!("Eq24", "AP", Calculus, Hypothesis, Grid, gen_homogeneous, eq24, "A P_k = k h^2/(1 ± h) P_k"),
        claim!(
            "Eq25",
            "RP",
            Calculus,
            Hypothesis,
            Grid,
            gen_homogeneous,
            eq25,
            "R_r P_k = (r + k - k h^2/(1 ± h)) P_k"
        ),
        claim!(
            "Eq26",
            "VP",
            Calculus,
            Hypothesis,
            Grid,
            gen_homogeneous,
            eq26,
            "V_r P_k = (r + (1 ± h/2) k - k h^2/(1 ± h)) P_k"
        ),
        claim!("Eq27", "Bmh", Calculus, Hypothesis, Grid, gen_general, eq27, "B((mh) f) = (mh) B f + h 1 f + h^2 D f"),
        claim!("Eq28", "Cmh", Calculus, Hypothesis, Grid, gen_general, eq28, "C((mh) f) = (mh) C f - E f"),
        claim!("Eq29", "Amh", Calculus, Hypothesis, Grid, gen_general, eq29, "A((mh) f) = (mh) A f ∓ h C f"),
        claim!("Eq30", "Emh", Calculus, Hypothesis, Grid, gen_general, eq30, "E((mh) f) = (mh) E f + C f"),
        claim!("Eq31", "Rmh", Calculus, Hypothesis, Grid, gen_general, eq31, "R_r((mh) f) = (mh) R_r f + (1 ± h) C f"),
        claim!(
            "Eq32",
            "Vmh",
            Calculus,
            Hypothesis,
            Grid,
            gen_general,
            eq32,
            "V_r((mh) f) = (mh) V_r f + (1 ± h) C f + (h 1 f + h^2 D f)/2"
        ),
        claim!(
            "Eq33",
            "Gamh",
            Calculus,
            Hypothesis,
            Grid,
            gen_monogenic,
            eq33,
            "Gamma((mh) M_k) = (n + k - 2k h^2/(1 ± h) ± hk)(mh) M_k - C M_k"
        ),
        claim!(
            "Eq34",
            "Dhmh",
            Calculus,
            Hypothesis,
            Grid,
            gen_monogenic,
            eq34,
            "(D (mh))((mh) M_k) = ± hk (mh) M_k - (2 ± 2h) C M_k"
        ),
        claim!(
            "Eq35",
            "eulermhmh",
            Calculus,
            Hypothesis,
            Grid,
            gen_monogenic,
            eq35,
            "E((mh)^2 M_k) = k (mh)^2 M_k + 2 (mh) C M_k - k M_k"
        ),
        claim!(
            "Eq36",
            "Dirmhmh",
            Calculus,
            Hypothesis,
            Grid,
            gen_monogenic,
            eq36,
            "D((mh)^2 M_k) = -(2 ± 2h) C M_k + h 1 M_k"
        ),
        claim!(
            "Eq36-Gamma",
            "gammhmh",
            Calculus,
            Hypothesis,
            Grid,
            gen_monogenic,
            eq36_gamma,
            "Gamma((mh)^2 M_k) = -k (mh)^2 M_k ± 2 (mh) C M_k + k M_k - h 1 (mh) M_k"
        ),
        // Homogeneous powers.
        claim!(
            "Hs-homogeneous",
            "Homo",
            HomogeneousPowers,
            ExpectedExact,
            Grid,
            gen_homogeneous_power,
            hs_homogeneous,
            "H_s is homogeneous of degree s"
        ),
        claim!("Hs-C", "Homo", HomogeneousPowers, ExpectedExact, Grid, gen_homogeneous_power, hs_c, "C H_s = H_(s+1)"),
        claim!("Hs-D", "Homo", HomogeneousPowers, Hypothesis, Grid, gen_homogeneous_power, hs_d, "D H_s = -s H_(s-1)"),
        claim!("Hs-E", "Homo", HomogeneousPowers, ExpectedExact, Grid, gen_homogeneous_power, hs_e, "E H_s = s H_s"),
        // Laplacian and quaternionic operators.
        claim!(
            "Eq38",
            "difLap",
            Quaternionic,
            ExpectedExact,
            Grid,
            gen_general,
            eq38,
            "Delta = sum d-_i d+_i = sum d+_i d-_i, equal to the five-point stencil"
        ),
        claim!(
            "Laplace-nonfactorization",
            "difLap",
            Quaternionic,
            NegativeWitness,
            Grid,
            gen_general,
            laplace_nonfactorization,
            "D∓ D± != -e0 Delta"
        ),
        claim!(
            "Eq39",
            "dimp",
            Quaternionic,
            ExpectedExact,
            Quaternion,
            gen_quaternion,
            eq39,
            "matrix form of D-+ equals (-div, grad + curl)"
        ),
        claim!(
            "Eq40",
            "dipm",
            Quaternionic,
            ExpectedExact,
            Quaternion,
            gen_quaternion,
            eq40,
            "matrix form of D+- equals (-div, grad + curl)"
        ),
        claim!(
            "DivCurl",
            "factlapl",
            Quaternionic,
            ExpectedExact,
            Quaternion,
            gen_quaternion,
            div_curl,
            "div curl = 0"
        ),
        claim!(
            "CurlGrad",
            "factlapl",
            Quaternionic,
            ExpectedExact,
            Quaternion,
            gen_quaternion,
            curl_grad,
            "curl grad = 0"
        ),
        claim!(
            "CurlCurl",
            "factlapl",
            Quaternionic,
            ExpectedExact,
            Quaternion,
            gen_quaternion,
            curl_curl,
            "curl± curl∓ = -Delta + grad∓ div±"
        ),
        claim!(
            "Eq41",
            "factlapl",
            Quaternionic,
            ExpectedExact,
            Quaternion,
            gen_quaternion,
            eq41,
            "D+- D-+ = D-+ D+- = -Delta"
        ),
        claim!(
            "Quaternion-matrix",
            "mh matrix",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion,
            quaternion_matrix,
            "the printed 4x4 matrix of mh reproduces the quaternion product"
        ),
        claim!(
            "Quaternion-lift",
            "mh matrix",
            Quaternionic,
            ExpectedExact,
            Quaternion,
            gen_quaternion,
            quaternion_lift,
            "the lifted (mh) f evaluates to the quaternion product x f(x)"
        ),
        claim!(
            "Thm4.1-inclusion",
            "fisherD",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion_homogeneous,
            thm4_1_inclusion,
            "the mixed Dirac operator maps Pi_k into Pi_(k-1)"
        ),
        claim!(
            "Thm4.1-graded",
            "fisherD",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion_homogeneous,
            thm4_1_graded,
            "graded Fischer decomposition for the mixed Dirac operator"
        ),
        claim!(
            "Thm4.1-exact",
            "fisherD",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion_homogeneous,
            thm4_1_exact,
            "exact Fischer decomposition for the mixed Dirac operator"
        ),
        claim!(
            "Thm4.2-pairing",
            "fischerlapl",
            Quaternionic,
            Hypothesis,
            Grid,
            gen_two_apart,
            thm4_2_pairing,
            "[(mh)^2 P_(k-2), Q_k] = -[P_(k-2), Delta Q_k]"
        ),
        claim!(
            "Thm4.2-graded",
            "fischerlapl",
            Quaternionic,
            Hypothesis,
            Grid,
            gen_homogeneous,
            thm4_2_graded,
            "graded harmonic Fischer decomposition"
        ),
        claim!(
            "Thm4.2-exact",
            "fischerlapl",
            Quaternionic,
            Hypothesis,
            Grid,
            gen_homogeneous,
            thm4_2_exact,
            "P_k = sum |mh|^(2s) H_(k-2s) exactly"
        ),
        claim!(
            "Cor4.1",
            "Fischer decomposition for harmonics",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion_harmonic,
            cor4_1,
            "every harmonic H_k equals M_k + (mh) M_(k-1) for the mixed operator"
        ),
        claim!(
            "Eq42",
            "idD-+",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion_minus_plus,
            eq42,
            "the printed expansion of (mh) D-+ f"
        ),
        claim!(
            "Eq43",
            "idD+-",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion_plus_minus,
            eq43,
            "the printed expansion of (mh) D+- f"
        ),
        claim!(
            "Quaternion-Euler-Gamma",
            "idD-+",
            Quaternionic,
            ExpectedExact,
            Quaternion,
            gen_quaternion,
            quaternion_euler_gamma,
            "(mh) D + E + Gamma = 0 under the surviving transcription"
        ),
        claim!(
            "Quaternion-Euler-Gamma-printed",
            "idD-+",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion,
            quaternion_euler_gamma_printed,
            "(mh) D + E + Gamma = 0 with the tables as printed"
        ),
        claim!(
            "Quaternion-transcription",
            "idD-+",
            Quaternionic,
            ExpectedExact,
            Quaternion,
            gen_single,
            quaternion_transcription,
            "the consistency test selects exactly one transcription"
        ),
        claim!(
            "Quaternion-Euler-eigen",
            "idD-+",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion_homogeneous,
            quaternion_euler_eigen,
            "E P_k = k P_k for the mixed Euler operator"
        ),
        claim!(
            "Quaternion-Gamma-eigen",
            "idD-+",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_mixed_monogenic,
            quaternion_gamma_eigen,
            "Gamma M_k = -k M_k for the mixed Gamma operator"
        ),
        claim!(
            "Quaternion-DE",
            "idD-+",
            Quaternionic,
            Hypothesis,
            Quaternion,
            gen_quaternion,
            quaternion_de,
            "D E = I + E D for the mixed operators"
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small_grid() -> Grid {
        Grid { dims: vec![1, 2], degrees: vec![0, 1, 2], meshes: vec![int(1), rat(1, 2)], cases: 3, ..Grid::default() }
    }

    #[test]
    fn catalogue_shape() {
        let all = catalogue();
        assert!(all.len() >= 45);
        let mut ids: Vec<&str> = all.iter().map(|c| c.id).collect();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(ids.len(), all.len());
        let sec4 = list_claims("Eq4*").unwrap();
        assert!(!sec4.is_empty());
        assert!(sec4.iter().all(|c| c.topic == Topic::Quaternionic));
    }

    #[test]
    fn filters() {
        let re = filter_regex("P?,Eq2").unwrap();
        assert!(re.is_match("P1") && re.is_match("Eq2"));
        assert!(!re.is_match("P4-rate") && !re.is_match("Eq23"));
        assert!(filter_regex(" , ").is_err());
    }

    #[test]
    fn eq24_refutes_and_replays() {
        let report = run_registry("Eq24", &small_grid(), 0).unwrap();
        let o = &report.claims[0];
        assert_eq!(o.status, Status::Refuted);
        let w = o.witness.as_ref().unwrap();
        let again = replay("Eq24", &w.case).unwrap();
        assert!(!again.holds);
        assert_eq!((again.lhs, again.rhs), (w.lhs.clone(), w.rhs.clone()));
        assert!(report.success());
    }

    #[test]
    fn deterministic_reports() {
        let a = run_registry("Eq1?,Lemma3.*", &small_grid(), 3).unwrap();
        let b = run_registry("Eq1?,Lemma3.*", &small_grid(), 3).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.success(), "{}", a.to_table());
    }
}
