use std::collections::BTreeSet;

use ferrers_core::campaign::{check_conjecture2_instance, scan_conjecture2, Conjecture2Verdict};

type Triple = (Vec<u32>, Vec<u32>, Vec<u32>);

/// Nonincreasing sequences of `len` positive integers summing to `total`.
fn decreasing(total: u32, len: usize, cap: u32) -> Vec<Vec<u32>> {
    if len == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 1..=cap.min(total) {
        for mut rest in decreasing(total - first, len - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn prefix_le(u: &[u32], v: &[u32]) -> bool {
    let len = u.len().max(v.len());
    let (mut su, mut sv) = (0u32, 0u32);
    for i in 0..len {
        su += u.get(i).copied().unwrap_or(0);
        sv += v.get(i).copied().unwrap_or(0);
        if su > sv {
            return false;
        }
    }
    su == sv
}

fn conjugate(d: &[u32]) -> Vec<u32> {
    let top = d.iter().copied().max().unwrap_or(0);
    (1..=top).map(|k| d.iter().filter(|&&x| x >= k).count() as u32).collect()
}

/// Direct reading of the statement, with products compared by cross
/// multiplication.
fn brute_violations(sum_max: u32, n_max: usize) -> BTreeSet<Triple> {
    let mut out = BTreeSet::new();
    for n in 2..=n_max {
        for p in 1..n {
            let q = n - p;
            for m in 1..=sum_max {
                for a in decreasing(m, p, m) {
                    for b in decreasing(m, q, m) {
                        if !prefix_le(&a, &conjugate(&b)) {
                            continue;
                        }
                        let mut d: Vec<u32> = a.iter().chain(&b).copied().collect();
                        d.sort_unstable_by(|x, y| y.cmp(x));
                        for lam in decreasing(2 * m, n - 1, 2 * m) {
                            if !prefix_le(&d, &lam) || !prefix_le(&lam, &conjugate(&d)) {
                                continue;
                            }
                            let lam_prod: u128 = lam.iter().map(|&x| x as u128).product();
                            let d_prod: u128 = d.iter().map(|&x| x as u128).product();
                            if lam_prod * (p * q) as u128 > d_prod * n as u128 {
                                // fold the a/b swap onto p <= q, a >= b
                                let key = if p < q || (p == q && a >= b) {
                                    (a.clone(), b.clone(), lam)
                                } else {
                                    (b.clone(), a.clone(), lam)
                                };
                                out.insert(key);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn parts(v: &ferrers_core::Partition) -> Vec<u32> {
    v.parts().to_vec()
}

#[test]
fn scanner_matches_direct_enumeration() {
    for (sum_max, n_max) in [(1, 6), (4, 5), (5, 6), (6, 5)] {
        let found = scan_conjecture2(sum_max, n_max);
        let scanned: BTreeSet<Triple> = found
            .iter()
            .map(|(i, _)| {
                let lam = i.lam.values().iter().map(|x| x.to_integer().try_into().unwrap()).collect();
                (parts(&i.a), parts(&i.b), lam)
            })
            .collect();
        assert_eq!(scanned.len(), found.len(), "duplicates at {sum_max}/{n_max}");
        assert_eq!(scanned, brute_violations(sum_max, n_max), "{sum_max}/{n_max}");
    }
}

#[test]
fn violations_revalidate_and_are_deterministic() {
    let first = scan_conjecture2(5, 6);
    assert_eq!(first, scan_conjecture2(5, 6));
    for (inst, verdict) in &first {
        let Conjecture2Verdict::Violated { lhs, rhs } = verdict else { panic!("{verdict:?}") };
        assert!(lhs > rhs);
        assert_eq!(check_conjecture2_instance(inst), *verdict);
    }
}
