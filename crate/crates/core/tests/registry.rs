//! Every bundled entry builds and meets its declared parameters.

use qecc::codes::LinearCode;
use qecc::cssplus::{CodeParams, PlusCode};
use qecc::error::Error;
use qecc::qstate::{verify_orthogonal, Budget, SignedCode};
use qecc::registry::{Built, Kind, Provenance, Registry};

fn distance(c: &LinearCode) -> usize {
    match c.min_distance() {
        Err(Error::DimensionTooLarge { .. }) => c.min_distance_via_checks(16).expect("small distance"),
        other => other.unwrap(),
    }
}

fn plus_params(p: &PlusCode) -> CodeParams {
    match p.verify_plus() {
        Err(Error::DimensionTooLarge { .. }) => p.verify_plus_bounded(8).unwrap(),
        other => other.unwrap(),
    }
}

#[test]
fn every_entry_meets_declared_parameters() {
    let reg = Registry::bundled();
    assert!(reg.len() >= 20);
    for r in reg.records() {
        match reg.build(&r.name).unwrap_or_else(|e| panic!("{}: {e}", r.name)) {
            Built::Params => assert_eq!(r.kind, Kind::Params),
            Built::Classical(c) => {
                if let Some(d) = r.declared("d") {
                    assert_eq!(distance(&c), d, "{}", r.name);
                }
                if let Some(dp) = r.declared("dperp") {
                    assert_eq!(distance(&c.dual()), dp, "{} dual", r.name);
                }
            }
            Built::Plus(p) => {
                let params = plus_params(&p);
                assert_eq!(Some(params.d1), r.declared("d1"), "{}", r.name);
                assert_eq!(Some(params.d2), r.declared("d2"), "{}", r.name);
            }
            Built::Signed(s) => {
                let t = (r.declared("d").unwrap() - 1) / 2;
                let report = verify_orthogonal(&s, Budget::Joint { t }).unwrap();
                assert!(report.pass, "{}: {} conflicts", r.name, report.conflict_count);
            }
        }
    }
}

#[test]
fn derived_entries_carry_their_origin() {
    for r in Registry::bundled().records() {
        if r.provenance == Provenance::Derived && r.kind != Kind::Classical {
            assert!(r.command.is_some() || r.construct.is_some(), "{}", r.name);
        }
    }
}

#[test]
fn classical_and_quantum_verifiers_agree_on_small_plus_codes() {
    let reg = Registry::bundled();
    let mut checked = 0;
    let mut raised_failure = false;
    for r in reg.records().iter().filter(|r| r.kind == Kind::Plus && r.n <= 14) {
        let p = reg.plus(&r.name).unwrap();
        let params = p.verify_plus().unwrap();
        let code = SignedCode::from_plus(&p).unwrap();
        let budget = Budget::Pair { tx: params.t1, tz: params.t2 };
        let report = verify_orthogonal(&code, budget).unwrap();
        assert!(report.pass, "{} at {budget}: {} conflicts", r.name, report.conflict_count);
        checked += 1;
        for raised in [
            Budget::Pair { tx: params.t1 + 1, tz: params.t2 },
            Budget::Pair { tx: params.t1, tz: params.t2 + 1 },
        ] {
            if !verify_orthogonal(&code, raised).unwrap().pass {
                raised_failure = true;
            }
        }
    }
    assert!(checked >= 7, "only {checked} plus codes checked");
    assert!(raised_failure, "raising a budget never failed");
}

#[test]
fn printed_blocks_match_their_constructions() {
    let reg = Registry::bundled();
    // The 27-qubit base coset is the check matrix of the cyclic [27,22,3] code.
    let p27 = reg.plus("plus-27-16-3").unwrap();
    let cyc = reg.classical("cyclic5-27").unwrap();
    assert!(p27.h2().same_rowspan(cyc.check()));

    let g5 = reg.signed("g5").unwrap();
    assert_eq!(g5.sign_offset().to_binary(), "00010100");
    assert_eq!(g5.sign_vector(1).unwrap().to_binary(), "01110010");
}

#[test]
fn aliases_and_unknown_names() {
    let reg = Registry::bundled();
    assert_eq!(reg.get("g8").unwrap().name, "steane-8-3-3");
    assert!(matches!(reg.get("nope"), Err(Error::UnknownCode(_))));
}
