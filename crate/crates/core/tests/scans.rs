use std::collections::BTreeMap;

use quotring::arith::{int, square_class};
use quotring::harness::{scan, scan_t1, scan_t2, scan_t3, Family, ScanMode, ScanReport};

fn golden_counts() -> BTreeMap<String, BTreeMap<i64, usize>> {
    let text = include_str!("golden/scan_counts.json");
    let v: serde_json::Value = serde_json::from_str(text).unwrap();
    ["t1", "t2", "t3"]
        .into_iter()
        .map(|f| {
            let counts = v[f]
                .as_object()
                .unwrap()
                .iter()
                .map(|(r, c)| (r.parse().unwrap(), c.as_u64().unwrap() as usize))
                .collect();
            (f.to_string(), counts)
        })
        .collect()
}

#[test]
fn counts_match_frozen_values() {
    for (family, counts) in golden_counts() {
        let family: Family = family.parse().unwrap();
        for (radius, expected) in counts {
            let r = scan(family, radius, ScanMode::ClosedForm).unwrap();
            assert_eq!(r.distinct_count, expected, "{family} radius {radius}");
            assert_eq!(r.distinct_count, r.distinct_invariants().len());
        }
    }
}

#[test]
fn t1_csv_is_byte_stable() {
    let csv = scan_t1(5).unwrap().to_csv().unwrap();
    assert_eq!(csv, include_str!("golden/t1_radius5.csv"));
}

#[test]
fn reports_are_deterministic() {
    for f in [Family::T1, Family::T2, Family::T3] {
        let a = scan(f, 6, ScanMode::ClosedForm).unwrap();
        let b = scan(f, 6, ScanMode::ClosedForm).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
        assert_eq!(ScanReport::from_json(&a.to_json()).unwrap(), a);
        a.check_round_trip().unwrap();
    }
}

#[test]
fn counts_grow_with_radius() {
    for f in [Family::T1, Family::T2, Family::T3] {
        let counts: Vec<usize> = (1..=8).map(|r| scan(f, r, ScanMode::ClosedForm).unwrap().distinct_count).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]), "{f}: {counts:?}");
    }
    assert!(scan_t2(20).unwrap().distinct_count > scan_t2(5).unwrap().distinct_count);
    assert!(scan_t3(12).unwrap().distinct_count > scan_t3(4).unwrap().distinct_count);
}

#[test]
fn pipeline_scans_agree_with_closed_form() {
    for f in [Family::T1, Family::T2, Family::T3] {
        assert_eq!(scan(f, 4, ScanMode::Pipeline).unwrap(), scan(f, 4, ScanMode::ClosedForm).unwrap(), "{f}");
    }
}

#[test]
fn t2_prime_classes_and_square_scaling() {
    let r = scan_t2(10).unwrap();
    let classes = r.distinct_invariants();
    for p in [2, 3, 5, 7] {
        assert!(classes.contains(format!("-{p}").as_str()));
    }
    let r = scan_t2(20).unwrap();
    for (a0, a1, k) in [(1, 1, 2), (-2, 1, 3), (1, -1, 4), (2, 5, 3)] {
        let x = r.row(&[a0, a1]).unwrap().invariant.clone();
        let y = r.row(&[a0 * k * k, a1]).unwrap().invariant.clone();
        assert_eq!(x, y, "({a0}, {a1}) scaled by {k}^2");
    }
}

#[test]
fn t3_rows() {
    let r = scan_t3(12).unwrap();
    for p in [3i64, 5, 7] {
        let row = r.row(&[1, p + 2, 1]).unwrap();
        let expected = square_class(&int(p * (p + 2))).unwrap().to_string();
        assert_eq!(row.invariant.as_deref(), Some(expected.as_str()));
    }
    for row in r.flagged() {
        let [a, b, c] = [row.parameters[0], row.parameters[1], row.parameters[2]];
        let lhs = 2 * a * b - c * c - 1;
        assert_eq!(lhs * lhs, 4 * c * c, "{:?}", row.parameters);
    }
    assert!(r.flagged().count() > 0);
    assert!(r.distinct_count >= 10);
}
