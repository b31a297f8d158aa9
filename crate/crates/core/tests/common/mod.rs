#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use k3cr3::abelian::oracle::subgroup_quotient_pairs;
use k3cr3::partitions::{extension_exists, lr_coefficient, Partition};
use k3cr3::AbelianGroup;

pub fn g(s: &str) -> AbelianGroup {
    s.parse().unwrap()
}

/// Abelian p-groups of order ≤ max.
pub fn p_groups_up_to(p: u64, max: u64) -> Vec<AbelianGroup> {
    let mut out = Vec::new();
    let mut n = 0u32;
    while p.pow(n) <= max {
        for part in Partition::all_of_size(n) {
            out.push(AbelianGroup::from_prime_parts([(p, part)].into_iter().filter(|(_, q)| !q.is_empty()).collect()).unwrap());
        }
        n += 1;
    }
    out
}

/// (total, sub, quot) where the partition criterion and the exhaustive
/// subgroup search disagree, over p-groups of order ≤ max.
pub fn extension_disagreements(p: u64, max: u64) -> (usize, Vec<String>) {
    let groups = p_groups_up_to(p, max);
    let mut checked = 0;
    let mut bad = Vec::new();
    for total in &groups {
        let found = subgroup_quotient_pairs(total, max).unwrap();
        for sub in &groups {
            for quot in &groups {
                if sub.order() * quot.order() != total.order() {
                    continue;
                }
                checked += 1;
                let lr = extension_exists(sub, quot, total);
                let brute = found.contains(&(sub.clone(), quot.clone()));
                if lr != brute {
                    bad.push(format!("{sub} -> {total} -> {quot}: criterion {lr}, search {brute}"));
                }
            }
        }
    }
    (checked, bad)
}

/// Pairs (a, b), |b| ≤ max, where `embeds_in` disagrees with the subgroups found by search.
pub fn embedding_disagreements(max: u64) -> (usize, Vec<String>) {
    let all = AbelianGroup::all_up_to_order(max);
    let mut checked = 0;
    let mut bad = Vec::new();
    for b in &all {
        let subs: BTreeSet<AbelianGroup> = subgroup_quotient_pairs(b, max).unwrap().into_iter().map(|(s, _)| s).collect();
        for a in all.iter().filter(|a| a.order() <= b.order()) {
            checked += 1;
            if a.embeds_in(b) != subs.contains(a) {
                bad.push(format!("{a} in {b}"));
            }
        }
    }
    (checked, bad)
}

fn horizontal_strips(lambda: &[u32], k: u32) -> Vec<Vec<u32>> {
    // μ ⊇ λ with μ/λ a horizontal strip of size k: λ_i ≤ μ_i ≤ λ_{i-1}.
    let mut out = Vec::new();
    let len = lambda.len() + 1;
    let mut cur = vec![0u32; len];
    fn rec(i: usize, left: u32, lambda: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let li = lambda.get(i).copied().unwrap_or(0);
        if i == cur.len() {
            if left == 0 {
                out.push(cur.iter().copied().filter(|&x| x > 0).collect());
            }
            return;
        }
        let cap = if i == 0 { li + left } else { lambda[i - 1].min(li + left) };
        for v in li..=cap {
            cur[i] = v;
            rec(i + 1, left - (v - li), lambda, cur, out);
        }
    }
    rec(0, k, lambda, &mut cur, &mut out);
    out
}

/// s_λ · s_ν expanded by Jacobi–Trudi (s_ν = det h_{ν_i − i + j}) and
/// repeated Pieri multiplication.
pub fn pieri_product(lambda: &Partition, nu: &Partition) -> BTreeMap<Vec<u32>, i64> {
    let n = nu.len();
    let mut total: BTreeMap<Vec<u32>, i64> = BTreeMap::new();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut perms = Vec::new();
    permutations(&mut perm, 0, &mut perms);
    for (p, sign) in perms {
        let mut hs = Vec::new();
        let mut ok = true;
        for i in 0..n {
            let k = nu.part(i) as i64 - i as i64 + p[i] as i64;
            if k < 0 {
                ok = false;
                break;
            }
            hs.push(k as u32);
        }
        if !ok {
            continue;
        }
        let mut cur: BTreeMap<Vec<u32>, i64> = [(lambda.parts().to_vec(), 1)].into_iter().collect();
        for &k in &hs {
            let mut next = BTreeMap::new();
            for (shape, c) in &cur {
                for s in horizontal_strips(shape, k) {
                    *next.entry(s).or_insert(0) += c;
                }
            }
            cur = next;
        }
        for (shape, c) in cur {
            *total.entry(shape).or_insert(0) += sign * c;
        }
    }
    total.retain(|_, c| *c != 0);
    total
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<(Vec<usize>, i64)>) {
    if k == v.len() {
        let mut sign = 1;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    sign = -sign;
                }
            }
        }
        out.push((v.clone(), sign));
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Triples (λ, ν, μ) with |μ| ≤ max where the two LR algorithms disagree.
pub fn lr_disagreements(max: u32) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for a in 0..=max {
        for b in 0..=max - a {
            for lambda in Partition::all_of_size(a) {
                for nu in Partition::all_of_size(b) {
                    let expansion = pieri_product(&lambda, &nu);
                    for mu in Partition::all_of_size(a + b) {
                        checked += 1;
                        let want = expansion.get(mu.parts()).copied().unwrap_or(0);
                        let got = lr_coefficient(&lambda, &nu, &mu) as i64;
                        if got != want {
                            bad.push(format!("c^{mu}_{{{lambda},{nu}}}: skew tableaux {got}, Pieri {want}"));
                        }
                    }
                }
            }
        }
    }
    (checked, bad)
}

/// Symmetry c^μ_{λν} = c^μ_{νλ} and the Pieri rule for ν = (k), |μ| ≤ max.
pub fn lr_symmetry_and_pieri_failures(max: u32) -> Vec<String> {
    let mut bad = Vec::new();
    for a in 0..=max {
        for b in 0..=max - a {
            for lambda in Partition::all_of_size(a) {
                for nu in Partition::all_of_size(b) {
                    for mu in Partition::all_of_size(a + b) {
                        let c = lr_coefficient(&lambda, &nu, &mu);
                        if c != lr_coefficient(&nu, &lambda, &mu) {
                            bad.push(format!("asymmetric at {lambda},{nu},{mu}"));
                        }
                        if nu.len() <= 1 {
                            let strip = lambda.is_contained_in(&mu)
                                && (0..mu.len()).all(|i| i == 0 || mu.part(i) <= lambda.part(i - 1));
                            if c != u64::from(strip) {
                                bad.push(format!("Pieri fails at {lambda},{nu},{mu}"));
                            }
                        }
                    }
                }
            }
        }
    }
    bad
}
