use freeset::arith::binomial;
use freeset::search::{bounds, exact_max, greedy_t_free, SearchBudget, Status};
use freeset::zn::{is_t_free, CyclicContext};
use proptest::prelude::*;

fn certified(n: u64, t: u32, s: &freeset::zn::ResidueSet) -> bool {
    is_t_free(&CyclicContext::new(n, t).unwrap(), s).unwrap().is_t_free()
}

/// Largest t-free subset of the candidate range by plain subset enumeration.
fn subset_max(n: u64, t: u32) -> usize {
    let top = if t == 1 { n.saturating_sub(1) } else { n.saturating_sub(1) / 2 };
    let mut best = 0;
    for mask in 0u64..(1 << top) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let elems: Vec<u64> = (1..=top).filter(|x| mask >> (x - 1) & 1 == 1).collect();
        let set = freeset::zn::ResidueSet::new(n, elems).unwrap();
        if certified(n, t, &set) {
            best = size;
        }
    }
    best
}

#[test]
fn matches_candidate_enumeration() {
    for n in 1..=24u64 {
        for t in 1..=4u32 {
            // 2^(n-1) masks for t = 1
            if t == 1 && n > 16 {
                continue;
            }
            let r = exact_max(n, t, &SearchBudget::default()).unwrap();
            assert_eq!(r.status, Status::Exact);
            assert_eq!(r.size, subset_max(n, t), "n={n} t={t}");
        }
    }
}

#[test]
fn exact_results_respect_bounds_and_counting() {
    for n in 1..=40u64 {
        for t in 1..=5u32 {
            let r = exact_max(n, t, &SearchBudget::default()).unwrap();
            let b = bounds(n, t).unwrap();
            assert!(b.lower <= r.size as u64 && r.size as u64 <= b.upper, "n={n} t={t}");
            assert!(certified(n, t, &r.witness));
            assert_eq!(r.witness.len(), r.size);
            let h = u64::from(t / 2);
            assert!(u128::from(n) >= binomial(r.size as u64 + h, h).unwrap());
        }
    }
}

#[test]
fn deterministic_across_worker_counts() {
    for (n, t) in [(40, 3), (45, 3), (36, 4), (50, 5), (31, 2)] {
        let base = exact_max(n, t, &SearchBudget::with_workers(1)).unwrap();
        for w in [2, 8] {
            let r = exact_max(n, t, &SearchBudget::with_workers(w)).unwrap();
            assert_eq!((r.size, &r.witness), (base.size, &base.witness), "n={n} t={t} workers={w}");
        }
    }
}

#[test]
fn unit_canonical_keeps_size() {
    for (n, t) in [(30, 3), (41, 4), (48, 3), (60, 5)] {
        let plain = exact_max(n, t, &SearchBudget::default()).unwrap();
        let budget = SearchBudget { unit_canonical: true, ..SearchBudget::default() };
        let canon = exact_max(n, t, &budget).unwrap();
        assert_eq!(plain.size, canon.size);
        assert!(certified(n, t, &canon.witness));
    }
}

#[test]
fn exhausted_budget_reports_lower_bound() {
    let budget = SearchBudget { node_limit: Some(5), ..SearchBudget::default() };
    let r = exact_max(150, 4, &budget).unwrap();
    assert_eq!(r.status, Status::LowerBoundOnly);
    assert!(certified(150, 4, &r.witness));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bounds_are_ordered(n in 1u64..100_000, t in 1u32..=8) {
        let b = bounds(n, t).unwrap();
        prop_assert!(b.lower <= b.upper);
        prop_assert!(b.lower_bounds.iter().all(|e| e.value <= b.upper));
        prop_assert!(b.upper_bounds.iter().all(|e| e.value >= b.lower));
    }

    #[test]
    fn greedy_meets_its_guarantee(t in 1u32..=4, m in 0u64..=3, extra in 0u64..50) {
        let n = (u64::from(t) * 3u64.pow(t) * m.pow(t)).max(u64::from(t) + 1) + extra;
        let s = greedy_t_free(n, t, m).unwrap();
        prop_assert_eq!(s.len() as u64, m);
        prop_assert!(certified(n, t, &s));
    }
}
