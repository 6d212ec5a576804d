use std::collections::BTreeSet;

use proptest::prelude::*;
use transgen_core::partitions::{compositions, unordered_partitions, Partition, MAX_COMPOSITION_TOTAL};

/// `p(n)` by Euler's pentagonal recurrence.
fn partition_counts(n: usize) -> Vec<u64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p.into_iter().map(|v| v as u64).collect()
}

#[test]
fn counts_match_pentagonal_recurrence() {
    let want = partition_counts(40);
    for n in 1..=40u32 {
        let got = unordered_partitions(n).unwrap();
        assert_eq!(got.len() as u64, want[n as usize], "p({n})");
        let distinct: BTreeSet<&Partition> = got.iter().collect();
        assert_eq!(distinct.len(), got.len());
        assert!(got.iter().all(|p| p.total() == n && p.parts().windows(2).all(|w| w[0] >= w[1])));
    }
    assert_eq!(unordered_partitions(2).unwrap().len(), 2);
    assert_eq!(unordered_partitions(4).unwrap().len(), 5);
    assert_eq!(unordered_partitions(12).unwrap().len(), 77);
}

#[test]
fn composition_counts() {
    for n in 1..=16u32 {
        let c = compositions(n).unwrap();
        assert_eq!(c.len(), 1 << (n - 1), "{n}");
        assert!(c.iter().all(|t| t.iter().sum::<u32>() == n && t.iter().all(|&x| x > 0)));
        let distinct: BTreeSet<&Vec<u32>> = c.iter().collect();
        assert_eq!(distinct.len(), c.len());
    }
    assert_eq!(compositions(2).unwrap(), vec![vec![2], vec![1, 1]]);
    assert!(compositions(MAX_COMPOSITION_TOTAL + 1).is_err());
    assert!(compositions(0).is_err());
    assert!(unordered_partitions(0).is_err());
}

proptest! {
    #[test]
    fn partitions_are_sorted_compositions(n in 1u32..=12) {
        let from_compositions: BTreeSet<Vec<u32>> = compositions(n)
            .unwrap()
            .into_iter()
            .map(|mut c| {
                c.sort_unstable_by(|a, b| b.cmp(a));
                c
            })
            .collect();
        let direct: BTreeSet<Vec<u32>> = unordered_partitions(n).unwrap().iter().map(|p| p.parts().to_vec()).collect();
        prop_assert_eq!(from_compositions, direct);
    }
}
