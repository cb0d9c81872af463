//! Partitions, Littlewood–Richardson coefficients and Murnaghan–Nakayama
//! characters for symmetric and hyperoctahedral groups.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

pub type Partition = Vec<usize>;

pub fn is_partition(p: &[usize]) -> bool {
    p.iter().all(|&x| x > 0) && p.windows(2).all(|w| w[0] >= w[1])
}

/// Sorts decreasingly and drops zeros.
pub fn normalize(p: &[usize]) -> Partition {
    let mut v: Vec<usize> = p.iter().copied().filter(|&x| x > 0).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

pub fn size(p: &[usize]) -> usize {
    p.iter().sum()
}

pub fn transpose(p: &[usize]) -> Partition {
    let Some(&first) = p.first() else { return Vec::new() };
    (1..=first).map(|k| p.iter().filter(|&&x| x >= k).count()).collect()
}

/// `n(λ) = Σ (i−1) λ_i`.
pub fn n_of(p: &[usize]) -> usize {
    p.iter().enumerate().map(|(i, &x)| i * x).sum()
}

/// `[k^m]`.
pub fn rect(k: usize, m: usize) -> Partition {
    vec![k; if k == 0 { 0 } else { m }]
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Partition, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Parts with multiplicities: `[(part, mult)]`, largest part first.
pub fn multiplicities(p: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in p {
        match out.last_mut() {
            Some((y, m)) if *y == x => *m += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Ordered pairs of partitions `(α, β)` with `|α| + |β| = n`.
pub fn bipartitions(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        for a in partitions(k) {
            for b in partitions(n - k) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

/// Horizontal strips of size `k` added to `shape`; each result lists the new
/// shape and how many boxes each row received.
fn horizontal_strips(shape: &[usize], k: usize) -> Vec<(Partition, Vec<usize>)> {
    let rows = shape.len() + 1;
    let mut out = Vec::new();
    let mut add = vec![0usize; rows];
    fn go(shape: &[usize], row: usize, left: usize, add: &mut Vec<usize>, out: &mut Vec<(Partition, Vec<usize>)>) {
        if row == add.len() {
            if left == 0 {
                let new: Partition = (0..add.len())
                    .map(|i| shape.get(i).copied().unwrap_or(0) + add[i])
                    .filter(|&x| x > 0)
                    .collect();
                out.push((new, add.clone()));
            }
            return;
        }
        let cur = shape.get(row).copied().unwrap_or(0);
        // a row may grow only up to the old length of the row above
        let cap = if row == 0 { left } else { shape[row - 1] - cur };
        for a in 0..=cap.min(left) {
            add[row] = a;
            go(shape, row + 1, left - a, add, out);
        }
        add[row] = 0;
    }
    go(shape, 0, k, &mut add, &mut out);
    out
}

/// Littlewood–Richardson product `s_μ · s_ν = Σ c^λ_{μν} s_λ`.
pub fn lr_product(mu: &[usize], nu: &[usize]) -> BTreeMap<Partition, u64> {
    // row fillings: labels added to each row, in order of label
    fn go(shape: Partition, fill: Vec<Vec<usize>>, nu: &[usize], label: usize, out: &mut BTreeMap<Partition, u64>) {
        if label == nu.len() {
            // reverse reading word: rows top to bottom, right to left
            let mut counts = vec![0usize; nu.len()];
            for row in &fill {
                for &l in row.iter().rev() {
                    counts[l] += 1;
                    if l > 0 && counts[l] > counts[l - 1] {
                        return;
                    }
                }
            }
            *out.entry(shape).or_insert(0) += 1;
            return;
        }
        for (new, add) in horizontal_strips(&shape, nu[label]) {
            let mut f = fill.clone();
            f.resize(new.len().max(f.len()), Vec::new());
            for (r, &a) in add.iter().enumerate() {
                for _ in 0..a {
                    f[r].push(label);
                }
            }
            go(new, f, nu, label + 1, out);
        }
    }
    let mut out = BTreeMap::new();
    go(normalize(mu), vec![Vec::new(); mu.len()], nu, 0, &mut out);
    out
}

fn beta_set(p: &[usize]) -> Vec<usize> {
    let k = p.len();
    p.iter().enumerate().map(|(i, &x)| x + k - 1 - i).collect()
}

fn from_beta(beta: &[usize]) -> Partition {
    let mut b = beta.to_vec();
    b.sort_unstable_by(|x, y| y.cmp(x));
    let k = b.len();
    normalize(&b.iter().enumerate().map(|(i, &x)| x - (k - 1 - i)).collect::<Vec<_>>())
}

/// Rim hooks of length `r`: the remaining partition and the leg-length sign.
pub fn remove_rim_hooks(p: &[usize], r: usize) -> Vec<(Partition, i64)> {
    let beta = beta_set(p);
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut nb = beta.clone();
        nb[i] = b - r;
        out.push((from_beta(&nb), if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// Irreducible character `χ^λ` of `S_n` at cycle type `cycles`.
pub fn sn_character(lambda: &[usize], cycles: &[usize]) -> i64 {
    match cycles.split_first() {
        None => i64::from(lambda.is_empty()),
        Some((&r, rest)) => remove_rim_hooks(lambda, r)
            .into_iter()
            .map(|(p, s)| s * sn_character(&p, rest))
            .sum(),
    }
}

/// Character `χ^{(α;β)}` of the hyperoctahedral group at a signed cycle type.
/// Cycles are `(length, negative)`. `([n];∅)` is trivial and `(∅;[1^n])` is
/// the determinant.
pub fn bn_character(alpha: &[usize], beta: &[usize], cycles: &[(usize, bool)]) -> i64 {
    match cycles.split_first() {
        None => i64::from(alpha.is_empty() && beta.is_empty()),
        Some((&(r, neg), rest)) => {
            let mut s = 0;
            for (p, sg) in remove_rim_hooks(alpha, r) {
                s += sg * bn_character(&p, beta, rest);
            }
            let e = if neg { -1 } else { 1 };
            for (p, sg) in remove_rim_hooks(beta, r) {
                s += e * sg * bn_character(alpha, &p, rest);
            }
            s
        }
    }
}

/// Degree of `χ^λ` by the hook length formula.
pub fn sn_degree(lambda: &[usize]) -> u64 {
    let n = size(lambda) as u64;
    let t = transpose(lambda);
    let mut hooks: u64 = 1;
    for (i, &row) in lambda.iter().enumerate() {
        for (j, &col) in t.iter().enumerate().take(row) {
            hooks *= (row - j + col - i - 1) as u64;
        }
    }
    (1..=n).product::<u64>() / hooks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(8).len(), 22);
        assert_eq!(bipartitions(2).len(), 5);
        assert_eq!(transpose(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(n_of(&[2, 2]), 2);
        assert_eq!(sn_degree(&[2, 2]), 2);
        assert_eq!(sn_degree(&[3, 2, 1]), 16);
    }

    #[test]
    fn lr() {
        let p = lr_product(&[1], &[1]);
        assert_eq!(p.get(&vec![2]), Some(&1));
        assert_eq!(p.get(&vec![1, 1]), Some(&1));
        let p = lr_product(&[2, 1], &[2, 1]);
        assert_eq!(p.get(&vec![3, 2, 1]), Some(&2));
        assert_eq!(p.values().sum::<u64>(), 8);
        let p = lr_product(&[1, 1], &[1, 1]);
        assert_eq!(p.len(), 3);
        assert!(p.contains_key(&vec![2, 2]));
    }

    #[test]
    fn murnaghan_nakayama() {
        // S3: χ^{[2,1]} at (3) is -1, at (2,1) is 0
        assert_eq!(sn_character(&[2, 1], &[3]), -1);
        assert_eq!(sn_character(&[2, 1], &[2, 1]), 0);
        assert_eq!(sn_character(&[1, 1, 1], &[2, 1]), -1);
        assert_eq!(sn_character(&[2, 2], &[1, 1, 1, 1]), 2);
        // B1: (∅;[1]) is the sign
        assert_eq!(bn_character(&[], &[1], &[(1, true)]), -1);
        assert_eq!(bn_character(&[1], &[], &[(1, true)]), 1);
        assert_eq!(bn_character(&[1], &[1], &[(1, false), (1, false)]), 2);
    }
}
