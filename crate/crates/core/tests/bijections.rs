use shapewilf_core::bijection::{
    verify_bijection, BijectionOracle, DirectSumTransfer, Figure3Bijection, FnOracle, RightColumnBijection,
    RightColumnRule, TopRowBijection, ViolationKind, WedgeValleyVariant,
};
use shapewilf_core::ferrers::{enumerate_boards, enumerate_fillings};
use shapewilf_core::{FanPop, Filling, PatternSet};

const N: usize = 6;

fn fan(k: usize, a: usize) -> FanPop {
    FanPop::new(k, a).unwrap()
}

fn set(s: &str) -> PatternSet {
    s.parse().unwrap()
}

fn assert_passes(b: &dyn BijectionOracle, n: usize) {
    let r = verify_bijection(b, n);
    assert!(r.passed(), "{r}");
}

fn assert_inverts(b: &dyn BijectionOracle, inv: &dyn BijectionOracle, n: usize) {
    for m in 1..=n {
        for board in enumerate_boards(m) {
            for f in enumerate_fillings(&board, b.source_set()) {
                let g = b.map(&f).unwrap();
                assert_eq!(inv.map(&g).unwrap(), f, "{} on {f}", b.name());
            }
        }
    }
}

#[test]
fn fan_bijections_between_all_apexes() {
    for k in 2..=4 {
        for a in 1..=k {
            for b in 1..=k {
                if a != b {
                    assert_passes(&TopRowBijection::fan(fan(k, a), fan(k, b)).unwrap(), N);
                }
            }
        }
    }
}

#[test]
fn fan_bijection_round_trips() {
    let b = TopRowBijection::fan(fan(4, 1), fan(4, 3)).unwrap();
    assert_inverts(&b, &b.inverse(), N);
}

#[test]
fn wedge_valley_variants() {
    for v in WedgeValleyVariant::ALL {
        let b = v.bijection();
        assert_passes(&b, N);
        assert_inverts(&b, &b.inverse(), 5);
    }
}

#[test]
fn rightmost_column_maps() {
    for k in 1..=4 {
        let b = RightColumnBijection::new(RightColumnRule::BottomRows(k), RightColumnRule::TopRows(k)).unwrap();
        assert_passes(&b, N);
        assert_inverts(&b, &b.inverse(), 5);
    }
}

#[test]
fn fan_to_figure3_for_every_apex() {
    for k in 2..=4 {
        for a in 1..=k {
            let b = Figure3Bijection::new(fan(k, a));
            assert_passes(&b, N);
            assert_inverts(&b, &b.inverse(), 5);
        }
    }
}

#[test]
fn direct_sum_transfer_lifts_inner_bijections() {
    let inner = || Box::new(TopRowBijection::fan(fan(3, 1), fan(3, 3)).unwrap());
    for t in ["1", "12", "21", "12,21"] {
        let b = DirectSumTransfer::new(set(t), inner()).unwrap();
        assert_passes(&b, N);
    }
    let b = DirectSumTransfer::new(set("1"), Box::new(WedgeValleyVariant::WedgeToValley.bijection())).unwrap();
    assert_passes(&b, N);
}

#[test]
fn corrupted_oracle_is_rejected() {
    let good = TopRowBijection::fan(fan(3, 1), fan(3, 2)).unwrap();
    // every filling of the 3x3 square goes to the image of 123
    let corrupted = FnOracle {
        name: "corrupted".into(),
        source: good.source_set().clone(),
        target: good.target_set().clone(),
        map: move |f: &Filling| {
            if f.board().to_string() == "[3,3,3]" {
                good.map(&"[3,3,3]/123".parse().unwrap())
            } else {
                good.map(f)
            }
        },
    };
    let r = verify_bijection(&corrupted, 4);
    let v = r.violation.expect("collision must be found");
    assert_eq!(v.kind, ViolationKind::Injectivity);
    assert_eq!(v.board.to_string(), "[3,3,3]");
}
