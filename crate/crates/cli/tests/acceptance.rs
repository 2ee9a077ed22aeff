//! Acceptance criteria. Prints one PASS/FAIL line per criterion.
//!
//! Criteria in `KNOWN_BLOCKED` are implemented as stated and currently fail for
//! mathematical reasons; the run checks that they still fail, so a change in
//! their status is noticed.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::{Command, ExitCode};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use dcliff::claims::{self, ClaimReport, Grid, Status};
use dcliff::io::{self, print_polynomial};
use dcliff::operators as op;
use dcliff::quaternion_dirac::{self as qd, MixedVariant, Transcription, QUATERNION_BLADES};
use dcliff::random::{self, PolySpec};
use dcliff::rational::{int, rat, Rational};
use dcliff::{factorial, fischer, FamilySign, GradedComponentBasis, LatticePolynomial, Matrix, Sign, Strategy};
use num_traits::{One, Signed, Zero};
use rand::Rng;

/// 1: D R_r = R_(r+1) D, D V_r = V_(r+1) D and D H_s = -s H_(s-1) (odd s, n > 1) are false.
/// 3: the contraction ratio at the coarsest halving leaves [1.8, 2.2] for s = 3, 4.
const KNOWN_BLOCKED: [usize; 2] = [1, 3];

struct Verdict {
    pass: bool,
    notes: Vec<String>,
}

impl Verdict {
    fn new() -> Self {
        Verdict { pass: true, notes: Vec::new() }
    }

    fn check(&mut self, ok: bool, note: impl Into<String>) {
        if !ok {
            self.pass = false;
            self.notes.push(note.into());
        }
    }

    fn info(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }
}

fn full_run() -> &'static (ClaimReport, Duration) {
    static RUN: OnceLock<(ClaimReport, Duration)> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let report = claims::run_registry("*", &Grid::default(), 0).expect("registry runs");
        (report, start.elapsed())
    })
}

fn status(report: &ClaimReport, id: &str) -> Status {
    report.outcome(id).unwrap_or_else(|| panic!("claim {id} missing")).status
}

fn require_confirmed(v: &mut Verdict, report: &ClaimReport, ids: &[&str]) {
    for id in ids {
        let o = report.outcome(id).unwrap_or_else(|| panic!("claim {id} missing"));
        let detail = match (&o.witness, &o.diagnostic) {
            (Some(w), _) => format!(": {} != {}", w.lhs, w.rhs),
            (None, Some(d)) => format!(": {d}"),
            _ => String::new(),
        };
        v.check(o.status == Status::Confirmed, format!("{id} {}{detail}", o.status));
    }
}

fn exact_core() -> Verdict {
    let (report, elapsed) = full_run();
    let mut v = Verdict::new();
    require_confirmed(
        &mut v,
        report,
        &[
            "Eq2", "Eq3", "P1", "P2", "P3", "Lemma3.1", "Lemma3.2", "Eq8", "Eq10", "Prop3.1", "Prop3.2", "Eq18",
            "Eq19", "Thm3.5", "Hs-C", "Hs-D", "Hs-E", "Eq38", "DivCurl", "CurlGrad", "CurlCurl", "Eq41",
        ],
    );
    v.check(elapsed.as_secs() < 300, format!("full registry took {elapsed:?}"));
    v.info(format!("full registry ({} claims) ran in {:.1}s", report.claims.len(), elapsed.as_secs_f64()));
    v
}

fn stirling() -> Verdict {
    let (report, _) = full_run();
    let mut v = Verdict::new();
    require_confirmed(&mut v, report, &["Thm3.2-roundtrip", "Thm3.2", "Thm3.1", "Thm3.1-scaled"]);
    v.info(format!("unscaled relations at every h: {}", status(report, "Thm3.1-all-h")));
    v
}

fn limit_rate() -> Verdict {
    let (report, _) = full_run();
    let mut v = Verdict::new();
    require_confirmed(&mut v, report, &["P4", "Lemma3.3", "P4-rate"]);
    for family in [FamilySign::Minus, FamilySign::Plus] {
        for s in 0..=4usize {
            let d: Vec<Rational> = (1..=6)
                .map(|j| {
                    (factorial::factorial_power_eval(s, family, &rat(1, 1 << j), &Rational::one()) - Rational::one())
                        .abs()
                })
                .collect();
            if d.iter().all(Zero::is_zero) {
                continue;
            }
            let ratios: Vec<Rational> = d.windows(2).map(|w| &w[0] / &w[1]).collect();
            let bad: Vec<String> = ratios
                .iter()
                .enumerate()
                .filter(|(_, r)| **r < rat(9, 5) || **r > rat(11, 5))
                .map(|(j, r)| format!("h=2^-{}→2^-{}: {r}", j + 1, j + 2))
                .collect();
            v.check(bad.is_empty(), format!("family {family}, s={s}: {}", bad.join(", ")));
        }
    }
    v
}

fn span_contains(elements: &[LatticePolynomial], target: &LatticePolynomial, basis: &GradedComponentBasis) -> bool {
    let cols: Vec<Vec<Rational>> = elements.iter().map(|e| basis.coordinates(e).expect("in basis")).collect();
    Matrix::from_columns(basis.len(), &cols).solve(&basis.coordinates(target).expect("in basis")).is_some()
}

fn example_monogenic(h: &Rational, family: FamilySign) -> LatticePolynomial {
    let text = "1/2 X1^(1) e0 + 1/2 X2^(1) e21";
    io::parse_polynomial(text, 2, h, family).expect("example parses")
}

fn kernel_accounting() -> Verdict {
    let (report, _) = full_run();
    let mut v = Verdict::new();
    require_confirmed(&mut v, report, &["Kernel-accounting"]);
    for h in Grid::default().meshes {
        for sign in [Sign::Plus, Sign::Minus] {
            let family = sign.matched_family();
            let m = fischer::monogenic_kernel(1, 2, &h, family, sign).expect("kernel");
            v.check(m.dim() == 4, format!("n=2 k=1 h={h} sign {sign}: dimension {}", m.dim()));
            let basis = GradedComponentBasis::homogeneous(2, &h, family, 1);
            let target = example_monogenic(&h, family);
            v.check(
                span_contains(&m.elements, &target, &basis),
                format!("h={h} sign {sign}: example not in the kernel"),
            );
        }
    }
    v
}

fn decomposition_contract() -> Verdict {
    let (report, _) = full_run();
    let mut v = Verdict::new();
    let mut rng = random::rng(random::derive_seed(0, "acceptance/decompose"));
    let meshes = Grid::default().meshes;
    for i in 0..100 {
        let n = rng.gen_range(1..=3);
        let k = rng.gen_range(0..=4);
        let h = meshes[rng.gen_range(0..meshes.len())].clone();
        let family = if rng.gen_bool(0.5) { FamilySign::Minus } else { FamilySign::Plus };
        let p = random::homogeneous(&mut rng, &PolySpec::new(n, h.clone(), family), k);
        let d = fischer::fischer_decompose(&p, Strategy::Auto).expect("decomposition runs");
        let annihilated = d.components.iter().all(|c| op::dirac(&c.polynomial, family.matched_sign()).is_zero());
        v.check(
            d.feasible && annihilated && d.residual.is_zero(),
            format!("case {i}: {} (n={n}, h={h}, family {family})", print_polynomial(&p)),
        );
    }
    let p = io::parse_polynomial("X1^(1) e0", 2, &int(1), FamilySign::Minus).unwrap();
    let d = fischer::fischer_decompose(&p, Strategy::Auto).unwrap();
    let m1 = example_monogenic(&int(1), FamilySign::Minus);
    let m0 = io::parse_polynomial("-1/2 e1", 2, &int(1), FamilySign::Minus).unwrap();
    v.check(d.component(0) == Some(&m1), format!("M_1 = {:?}", d.component(0).map(print_polynomial)));
    v.check(d.component(1) == Some(&m0), format!("M_0 = {:?}", d.component(1).map(print_polynomial)));
    v.check(d.residual.is_zero(), "hand-checked case leaves a residual");

    let exact = report.outcome("Thm3.4-exact").expect("claim present");
    let feasible = exact.coverage.iter().filter(|c| c.cases > 0 && c.failures == 0 && c.infeasible == 0).count();
    v.info(format!("exact strategy feasible on {feasible} of {} cells", exact.coverage.len()));
    let mut by_degree: BTreeMap<(usize, usize), (usize, usize, usize)> = BTreeMap::new();
    for c in &exact.coverage {
        let e = by_degree.entry((c.cell.n, c.cell.k)).or_default();
        e.0 += usize::from(c.failures > 0 || c.infeasible > 0);
        e.1 += 1;
        e.2 += c.failures + c.infeasible;
    }
    for ((n, k), (bad, cells, inputs)) in by_degree.into_iter().filter(|(_, e)| e.0 > 0) {
        v.info(format!("  n={n} k={k}: {bad} of {cells} cells infeasible, {inputs} inputs not exactly decomposable"));
    }
    v
}

fn quaternion_spec(h: &Rational, variant: MixedVariant) -> PolySpec {
    PolySpec::new(3, h.clone(), variant.family()).blades(QUATERNION_BLADES.to_vec())
}

fn quaternionic() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = random::rng(random::derive_seed(0, "acceptance/quaternion"));
    let meshes = Grid::default().meshes;
    for i in 0..100 {
        let h = meshes[i % meshes.len()].clone();
        let variant = MixedVariant::ALL[i % 2];
        let f = qd::QuaternionLatticePolynomial::new(random::polynomial(&mut rng, &quaternion_spec(&h, variant), 4))
            .unwrap();
        v.check(qd::verify_laplacian_factorization(&f).holds, format!("factorization fails on {f}"));
    }

    // Stored counterexample to the one-sided factorization.
    let p = io::parse_polynomial("X1^(2) X2^(1) e0", 2, &int(1), FamilySign::Minus).unwrap();
    let lhs = op::dirac(&op::dirac(&p, Sign::Plus), Sign::Minus);
    let rhs = -&op::laplacian(&p);
    v.check(lhs != rhs, "stored non-factorization witness no longer separates");
    v.info(format!("D-D+ f = {}, -Δ f = {}", print_polynomial(&lhs), print_polynomial(&rhs)));

    let samples: Vec<_> = (0..4)
        .map(|_| {
            qd::QuaternionLatticePolynomial::new(random::polynomial(
                &mut rng,
                &quaternion_spec(&rat(1, 2), MixedVariant::MinusPlus),
                3,
            ))
            .unwrap()
        })
        .collect();
    let surviving: Vec<Transcription> = Transcription::ALL
        .into_iter()
        .filter(|t| samples.iter().all(|f| qd::euler_gamma_defect(MixedVariant::MinusPlus, *t, f).is_zero()))
        .collect();
    v.check(surviving.len() == 1, format!("surviving transcriptions: {surviving:?}"));
    let chosen = qd::select_transcription(MixedVariant::MinusPlus, &samples);
    v.check(chosen == Some(Transcription::Corrected), format!("selected {chosen:?}"));
    if let Some(t) = chosen {
        for i in 0..50 {
            let h = meshes[i % meshes.len()].clone();
            let f = qd::QuaternionLatticePolynomial::new(random::polynomial(
                &mut rng,
                &quaternion_spec(&h, MixedVariant::MinusPlus),
                4,
            ))
            .unwrap();
            let defect = qd::euler_gamma_defect(MixedVariant::MinusPlus, t, &f);
            v.check(defect.is_zero(), format!("(mh)D + E + Gamma = {defect} on {f}"));
        }
    }
    v
}

const REQUIRED: &[&str] = &[
    "Eq2",
    "Eq3",
    "P1",
    "P2",
    "P3",
    "P4",
    "Lemma3.1",
    "Lemma3.2",
    "Lemma3.3",
    "Lemma3.4",
    "Thm3.1",
    "Thm3.2",
    "Thm3.3",
    "Thm3.4-exact",
    "Thm3.4-graded",
    "Thm3.5",
    "Eq6",
    "Eq8",
    "Eq10",
    "Eq11",
    "Eq12",
    "Eq13",
    "Eq14",
    "Eq15",
    "Eq16",
    "Eq17",
    "Eq18",
    "Eq19",
    "Eq20",
    "Eq21",
    "Eq22",
    "Eq23",
    "Eq24",
    "Eq25",
    "Eq26",
    "Eq27",
    "Eq28",
    "Eq29",
    "Eq30",
    "Eq31",
    "Eq32",
    "Eq33",
    "Eq34",
    "Eq35",
    "Eq36",
    "Hs-C",
    "Hs-D",
    "Hs-E",
    "Eq38",
    "Eq39",
    "Eq40",
    "Eq41",
    "Eq42",
    "Eq43",
    "DivCurl",
    "CurlGrad",
    "CurlCurl",
    "Thm4.1-exact",
    "Thm4.2-exact",
    "Cor4.1",
    "Quaternion-Euler-Gamma",
    "Quaternion-Gamma-eigen",
    "Laplace-nonfactorization",
    "W-noninverse",
];

fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_dcliff"))
}

fn registry() -> Verdict {
    let (report, _) = full_run();
    let mut v = Verdict::new();
    let catalogue = claims::catalogue();
    v.check(catalogue.len() >= 45, format!("catalogue has {} claims", catalogue.len()));
    for id in REQUIRED {
        v.check(catalogue.iter().any(|c| c.id == *id), format!("no claim {id}"));
    }
    v.check(catalogue.iter().all(|c| !c.anchor.is_empty()), "claim without an anchor");

    let grid = Grid { cases: 5, ..Grid::default() };
    let a = claims::run_registry("Eq2?,P?", &grid, 11).unwrap().to_json();
    let b = claims::run_registry("Eq2?,P?", &grid, 11).unwrap().to_json();
    v.check(a == b, "reports differ between identical runs");

    let mut refuted = 0;
    for o in report.claims.iter().filter(|o| o.status == Status::Refuted) {
        refuted += 1;
        let Some(w) = &o.witness else {
            v.check(false, format!("{} refuted without a witness", o.id));
            continue;
        };
        // Witnesses must reproduce from the serialized payload alone.
        let case = serde_json::from_str(&serde_json::to_string(&w.case).unwrap()).unwrap();
        match claims::replay(&o.id, &case) {
            Ok(c) => v.check(!c.holds && c.lhs == w.lhs && c.rhs == w.rhs, format!("{} witness does not replay", o.id)),
            Err(e) => v.check(false, format!("{} witness replay errors: {e}", o.id)),
        }
    }
    v.info(format!("{refuted} refuted claims replayed from their payloads"));

    v.check(status(report, "Eq24") == Status::Refuted, "Eq24 not refuted");
    for h in Grid::default().meshes {
        let p = io::parse_polynomial("X1^(2) e0", 1, &h, FamilySign::Minus).unwrap();
        let expected = io::parse_polynomial("X1^(1) e0", 1, &h, FamilySign::Minus).unwrap().scale(&(int(-2) * &h));
        v.check(op::op_a(&p, Sign::Plus) == expected, format!("A+ (m1h)^(2) != -2h (m1h)^(1) at h={h}"));
    }
    let eq24 = report.outcome("Eq24").unwrap();
    if let Some(w) = &eq24.witness {
        v.info(format!("Eq24 witness {}: A P = {}, stated {}", print_polynomial(&w.case.inputs[0]), w.lhs, w.rhs));
    }

    let out = Command::new(binary()).args(["verify", "--filter", "Eq24,Eq41", "--cases", "3"]).output().unwrap();
    v.check(out.status.code() == Some(0), format!("verify with a refuted hypothesis exited {:?}", out.status.code()));
    let ee_failures = report
        .claims
        .iter()
        .filter(|o| o.expectation == claims::Expectation::ExpectedExact && o.status != Status::Confirmed)
        .count();
    v.check(report.success() == (ee_failures == 0), "success flag disagrees with expected-exact outcomes");
    v
}

fn random_polynomial(rng: &mut random::TestRng) -> LatticePolynomial {
    let n = rng.gen_range(1..=3);
    let meshes = [int(1), rat(1, 2), rat(1, 3), rat(2, 5)];
    let h = meshes[rng.gen_range(0..meshes.len())].clone();
    let family = if rng.gen_bool(0.5) { FamilySign::Minus } else { FamilySign::Plus };
    let terms = rng.gen_range(1..=5);
    random::polynomial(rng, &PolySpec::new(n, h, family).terms(terms), 4)
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Drops the version header so transcripts survive version bumps.
fn without_version(text: &str) -> String {
    text.lines().filter(|l| !l.trim_start().starts_with("\"version\"")).collect::<Vec<_>>().join("\n")
}

const GOLDEN: &[(&str, &[&str])] = &[
    (
        "decompose.json",
        &["decompose", "--n", "2", "--h", "1", "--family", "-", "--expr", "X1^(1) e0", "--format", "json"],
    ),
    ("verify_eq41.json", &["verify", "--filter", "Eq41", "--format", "json"]),
    ("eval.txt", &["eval", "--expr", "X1^(2) e0", "--at", "3", "--h", "1", "--n", "1", "--family", "-"]),
];

fn cli_io() -> Verdict {
    let mut v = Verdict::new();
    let mut rng = random::rng(random::derive_seed(0, "acceptance/io"));
    for _ in 0..500 {
        let p = random_polynomial(&mut rng);
        let text = print_polynomial(&p);
        match io::parse_polynomial(&text, p.n(), p.h(), p.family()) {
            Ok(q) => v.check(q == p, format!("text round trip changed {text}")),
            Err(e) => v.check(false, format!("cannot reparse {text}: {e}")),
        }
        let json = serde_json::to_string(&p).unwrap();
        v.check(io::polynomial_from_json(&json).ok().as_ref() == Some(&p), format!("JSON round trip changed {json}"));
    }
    for (name, args) in GOLDEN {
        let first = Command::new(binary()).args(*args).output().unwrap();
        let second = Command::new(binary()).args(*args).output().unwrap();
        let stdout = String::from_utf8(first.stdout).unwrap();
        v.check(first.status.success(), format!("{name}: exit {:?}", first.status.code()));
        v.check(stdout.as_bytes() == second.stdout.as_slice(), format!("{name}: output differs between runs"));
        v.check(
            without_version(&stdout) == without_version(&golden(name)),
            format!("{name}: differs from the transcript"),
        );
    }
    v
}

type Criterion = (&'static str, fn() -> Verdict);

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("exact core suite", exact_core),
        ("Stirling conversions", stirling),
        ("limit contraction rate", limit_rate),
        ("kernel accounting", kernel_accounting),
        ("decomposition contract", decomposition_contract),
        ("quaternionic suite", quaternionic),
        ("claim registry", registry),
        ("CLI and IO round trips", cli_io),
    ];
    let mut unexpected = Vec::new();
    for (i, (title, run)) in criteria.iter().enumerate() {
        let number = i + 1;
        let verdict = run();
        println!("{} criterion {number}: {title}", if verdict.pass { "PASS" } else { "FAIL" });
        for note in &verdict.notes {
            println!("    {note}");
        }
        let blocked = KNOWN_BLOCKED.contains(&number);
        if verdict.pass == blocked {
            unexpected.push(number);
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: status matches, known-blocked criteria {KNOWN_BLOCKED:?}");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: criteria {unexpected:?} changed status; known-blocked criteria are {KNOWN_BLOCKED:?}");
        ExitCode::FAILURE
    }
}
