use std::collections::BTreeSet;

use dcliff::claims::{self, Expectation, Grid, Status};

#[test]
fn ids_are_unique_and_filterable() {
    let all = claims::catalogue();
    let ids: BTreeSet<_> = all.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), all.len());
    assert!(all.len() >= 45);

    let eq2x = claims::list_claims("Eq2?").unwrap();
    assert!(eq2x.iter().all(|c| c.id.len() == 4 && c.id.starts_with("Eq2")));
    assert_eq!(claims::list_claims("Eq41,Eq24").unwrap().len(), 2);
    assert!(claims::find("no-such-claim").is_err());
}

#[test]
fn every_expectation_is_represented() {
    let all = claims::catalogue();
    for e in [Expectation::ExpectedExact, Expectation::Hypothesis, Expectation::NegativeWitness] {
        assert!(all.iter().any(|c| c.expectation == e), "{e} missing");
    }
}

#[test]
fn small_grid_run_is_reproducible_and_replayable() {
    let grid = Grid { dims: vec![1, 2, 3], degrees: vec![0, 1, 2], cases: 3, ..Grid::default() };
    let a = claims::run_registry("Eq24,Eq41,Hs-C,W-noninverse", &grid, 7).unwrap();
    let b = claims::run_registry("Eq24,Eq41,Hs-C,W-noninverse", &grid, 7).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert!(a.success(), "{}", a.to_table());

    let eq24 = a.outcome("Eq24").unwrap();
    assert_eq!(eq24.status, Status::Refuted);
    let w = eq24.witness.as_ref().unwrap();
    let replayed = claims::replay("Eq24", &w.case).unwrap();
    assert!(!replayed.holds);
    assert_eq!(replayed.lhs, w.lhs);
    assert_eq!(a.outcome("Hs-C").unwrap().status, Status::Confirmed);
}
