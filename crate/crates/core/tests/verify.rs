use std::collections::VecDeque;

use badc::badc::{DoubleCycle, Kind};
use badc::dynamics::TransitionGraph;
use badc::verify::{
    irreversible_count_minus, irreversible_count_sum, quadratic_distance, verify_copy, verify_cycle_theorems,
    verify_mixed, verify_negative, verify_positive, Case, VerificationReport, VerifyOptions,
};

/// Plain BFS over the local functions, independent of the transition graph.
fn bfs_distance(d: &DoubleCycle, from: u64, to: u64) -> Option<u32> {
    let net = d.network();
    let mut dist = vec![u32::MAX; 1 << net.count()];
    dist[from as usize] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            return Some(dist[x as usize]);
        }
        for i in 0..net.count() {
            let y = net.step_raw(x, i);
            if dist[y as usize] == u32::MAX {
                dist[y as usize] = dist[x as usize] + 1;
                queue.push_back(y);
            }
        }
    }
    None
}

#[test]
fn positive_and_mixed_suites_pass() {
    let opts = VerifyOptions::default();
    let report = verify_positive(&[(2, 2), (5, 4)], &opts);
    assert!(report.all_pass(), "{}", report.to_text());
    let report = verify_mixed(&[(3, 3), (2, 5)], &opts);
    assert!(report.all_pass(), "{}", report.to_text());
}

#[test]
fn corrupted_bound_is_detected() {
    let opts = VerifyOptions::default();
    let report = verify_positive(&[(2, 2)], &opts);
    let case = report.cases_with_id("positive.convergence").next().unwrap();
    let time = case.measured_i64("networkTime").unwrap();
    assert!(case.pass && time <= 2 * 4 - 5);
    // 2(n+m)-6 still holds at (2,2): the measured time is max(n,m)-1
    assert_eq!(time, 1);
    let corrupted_bound = time - 1;
    let corrupted = Case::new("positive.convergence", 2, 2, Some(Kind::Positive))
        .measure("networkTime", time)
        .expect("atMost", corrupted_bound)
        .verdict(time <= corrupted_bound);
    let report = VerificationReport::from_cases(vec![corrupted]);
    assert!(!report.all_pass());
    assert!(report.to_text().starts_with("FAIL"));
}

#[test]
fn negative_attractor_sizes() {
    let opts = VerifyOptions::default();
    let report = verify_negative(&[(2, 2), (3, 2), (3, 3)], &opts);
    let sizes: Vec<i64> = report
        .cases_with_id("negative.attractors")
        .map(|c| c.measured["attractorSizes"][0].as_i64().unwrap())
        .collect();
    assert_eq!(sizes, vec![8, 14, 24]);
    for (n, m, size) in [(2, 2, 8), (3, 2, 14), (3, 3, 24)] {
        assert_eq!(size, (1 << (n + m - 1)) - irreversible_count_sum(n, m));
    }
    assert!(report.cases_with_id("negative.attractors").all(|c| c.pass));
}

#[test]
fn the_two_irreversible_count_forms() {
    for n in 1..=5 {
        for m in 1..=5 {
            let d = DoubleCycle::canonical(Kind::Negative, n, m).unwrap();
            let transient = TransitionGraph::build(d.network()).unwrap().transient().len() as i64;
            assert_eq!(transient, irreversible_count_sum(n, m), "({n},{m})");
            // the subtracted term is nonzero exactly when m is odd and above 1
            let minus_holds = m % 2 == 0 || m == 1;
            assert_eq!(transient == irreversible_count_minus(n, m), minus_holds, "({n},{m})");
        }
    }
}

#[test]
fn quadratic_distances_match_plain_bfs() {
    let opts = VerifyOptions::default();
    for n in [2usize, 4, 6] {
        let d = DoubleCycle::canonical(Kind::Negative, n, n).unwrap();
        let alt: String = (0..n).map(|i| if i % 2 == 0 { '1' } else { '0' }).collect();
        let target = d.parse(&format!("({alt},{alt})")).unwrap();
        let expected = bfs_distance(&d, 0, target.bits());
        assert_eq!(quadratic_distance(n, &opts), expected, "n = {n}");
    }
}

#[test]
fn copy_landing_at_four() {
    let report = verify_copy(4, 4);
    let case = &report.cases[0];
    assert_eq!(case.measured_i64("wrongLanding"), Some(0));
    assert!(case.measured_i64("pairs").unwrap() > 0);
}

#[test]
fn cycle_theorem_suite_passes() {
    let report = verify_cycle_theorems(60, 6, 7);
    assert!(report.all_pass(), "{}", report.to_text());
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["schemaVersion"], 1);
    assert_eq!(json["summary"]["failed"], 0);
}
