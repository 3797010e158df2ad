use std::collections::{LinkedList, VecDeque};

use proptest::prelude::*;
use typext::rangealg::{sort, sort_by, sort_forward, sort_forward_by, SortPath};
use typext::sort_dispatch;

fn counts(v: &[i32]) -> Vec<i32> {
    let mut c = v.to_vec();
    c.sort();
    c
}

fn arb_range() -> impl Strategy<Value = Vec<i32>> {
    prop_oneof![
        prop::collection::vec(any::<i32>(), 0..300),
        prop::collection::vec(0i32..4, 0..300),
        (0usize..300).prop_map(|n| (0..n as i32).collect()),
        (0usize..300).prop_map(|n| (0..n as i32).rev().collect()),
    ]
}

proptest! {
    #[test]
    fn random_access_sorts(v in arb_range()) {
        let mut a = v.clone();
        let report = sort_dispatch!(a);
        prop_assert_eq!(report.path, SortPath::RandomAccess);
        prop_assert_eq!(report.element_count, v.len());
        prop_assert!(a.windows(2).all(|w| w[0] <= w[1]));
        prop_assert_eq!(counts(&a), counts(&v));
    }

    #[test]
    fn forward_sorts(v in arb_range()) {
        let mut l: LinkedList<i32> = v.iter().copied().collect();
        let report = sort_dispatch!(l, |a, b| a > b);
        prop_assert_eq!(report.path, SortPath::ForwardCopy);
        let out: Vec<i32> = l.into_iter().collect();
        prop_assert!(out.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(counts(&out), counts(&v));
    }

    #[test]
    fn deque_is_random_access(v in arb_range(), rot in 0usize..300) {
        let mut d: VecDeque<i32> = v.iter().copied().collect();
        if !d.is_empty() {
            d.rotate_left(rot % d.len());
        }
        prop_assert_eq!(sort_dispatch!(d).path, SortPath::RandomAccess);
        let out: Vec<i32> = d.into_iter().collect();
        prop_assert_eq!(out, counts(&v));
    }

    #[test]
    fn paths_agree(v in arb_range()) {
        let mut a = v.clone();
        let mut b = v;
        sort_by(&mut a, |x, y| x % 7 < y % 7);
        sort_forward_by(&mut b, |x, y| x % 7 < y % 7);
        prop_assert!(a.iter().zip(&b).all(|(x, y)| x % 7 == y % 7));
    }
}

#[test]
fn strings_and_floats() {
    let mut names = vec!["pear", "apple", "fig"];
    sort(&mut names);
    assert_eq!(names, ["apple", "fig", "pear"]);
    let mut l: LinkedList<f64> = [2.5, -1.0, 0.0].into_iter().collect();
    sort_forward(&mut l);
    assert!(l.iter().eq([-1.0, 0.0, 2.5].iter()));
}
