//! Brute-force Weyl group oracle: element enumeration as root permutations,
//! conjugacy classes, character table by the Burnside class-algebra method,
//! and fake degrees from the Molien series of the coinvariant algebra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::linalg::char_poly_int;
use crate::rootsys::{reflect, CartanType, RootSystem, Weight};
use crate::{Error, Result};

pub const ORACLE_BOUND: u64 = 2_000_000;

const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addmod(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn submod(a: u64, b: u64) -> u64 {
    addmod(a, P - b)
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    r
}

fn invmod(a: u64) -> u64 {
    powmod(a, P - 2)
}

fn tomod(x: i64) -> u64 {
    if x >= 0 {
        x as u64 % P
    } else {
        P - ((-x) as u64 % P)
    }
}

fn frommod(x: u64) -> i64 {
    if x > P / 2 {
        -((P - x) as i64)
    } else {
        x as i64
    }
}

/// Enumerated Weyl group. Element `g` is stored as the permutation it
/// induces on root indices.
pub struct WeylGroup {
    pub rs: RootSystem,
    nroots: usize,
    perms: Vec<u8>,
    keys: Vec<(u64, u32)>,
    simple: Vec<usize>,
    gens: Vec<Vec<u8>>,
}

impl WeylGroup {
    pub fn new(t: CartanType) -> Result<Self> {
        let order = t.weyl_order();
        if order > ORACLE_BOUND {
            return Err(Error::TooLarge(order));
        }
        let rs = RootSystem::from_type(t)?;
        let nroots = rs.roots.len();
        let simple: Vec<usize> = (0..rs.rank()).map(|i| rs.simple_root_index(i)).collect();
        let gens: Vec<Vec<u8>> = rs.simple_roots.iter().map(|a| Self::reflection_perm_in(&rs, a)).collect();
        let mut g = WeylGroup { rs, nroots, perms: Vec::new(), keys: Vec::new(), simple, gens };
        g.enumerate();
        if g.order() as u64 != order {
            return Err(Error::Oracle(format!("enumerated {} elements, expected {order}", g.order())));
        }
        Ok(g)
    }

    fn reflection_perm_in(rs: &RootSystem, a: &Weight) -> Vec<u8> {
        rs.roots.iter().map(|r| rs.root_index(&reflect(r, a)).unwrap() as u8).collect()
    }

    /// Root permutation of the reflection in a root.
    pub fn reflection_perm(&self, a: &Weight) -> Vec<u8> {
        Self::reflection_perm_in(&self.rs, a)
    }

    fn key_of(&self, p: &[u8]) -> u64 {
        self.simple.iter().fold(0u64, |k, &s| (k << 8) | p[s] as u64)
    }

    fn enumerate(&mut self) {
        let id: Vec<u8> = (0..self.nroots as u8).collect();
        let mut seen = BTreeMap::new();
        seen.insert(self.key_of(&id), 0u32);
        let mut perms = id;
        let mut head = 0;
        while head * self.nroots < perms.len() {
            for s in 0..self.gens.len() {
                let g = &perms[head * self.nroots..(head + 1) * self.nroots];
                let h: Vec<u8> = self.gens[s].iter().map(|&r| g[r as usize]).collect();
                let k = self.key_of(&h);
                if let alloc::collections::btree_map::Entry::Vacant(e) = seen.entry(k) {
                    e.insert((perms.len() / self.nroots) as u32);
                    perms.extend_from_slice(&h);
                }
            }
            head += 1;
        }
        self.perms = perms;
        self.keys = seen.into_iter().collect();
    }

    pub fn order(&self) -> usize {
        self.perms.len() / self.nroots
    }

    pub fn element(&self, i: usize) -> &[u8] {
        &self.perms[i * self.nroots..(i + 1) * self.nroots]
    }

    pub fn index_of(&self, p: &[u8]) -> Option<usize> {
        self.index_of_key(self.key_of(p))
    }

    fn index_of_key(&self, k: u64) -> Option<usize> {
        self.keys.binary_search_by_key(&k, |e| e.0).ok().map(|i| self.keys[i].1 as usize)
    }

    /// Index of `a ∘ b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let (x, y) = (self.element(a), self.element(b));
        let k = self.simple.iter().fold(0u64, |k, &s| (k << 8) | x[y[s] as usize] as u64);
        self.index_of_key(k).unwrap()
    }

    pub fn inverse(&self, a: usize) -> usize {
        let x = self.element(a);
        let mut inv = vec![0u8; self.nroots];
        for (i, &y) in x.iter().enumerate() {
            inv[y as usize] = i as u8;
        }
        self.index_of(&inv).unwrap()
    }

    /// `(−1)^{#positive roots sent to negative roots}`.
    pub fn det(&self, a: usize) -> i64 {
        let np = self.rs.num_positive();
        let neg = self.element(a)[..np].iter().filter(|&&r| r as usize >= np).count();
        if neg % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Integer matrix of an element in the basis of simple roots; column `i`
    /// holds the image of the i-th simple root.
    pub fn simple_matrix(&self, a: usize) -> Vec<Vec<i64>> {
        let x = self.element(a);
        let n = self.simple.len();
        let mut m = vec![vec![0i64; n]; n];
        for (i, &s) in self.simple.iter().enumerate() {
            let c = self.rs.simple_coords(x[s] as usize);
            for j in 0..n {
                m[j][i] = c[j];
            }
        }
        m
    }

    /// Closure of a set of generating root permutations.
    pub fn subgroup(&self, gens: &[Vec<u8>]) -> Vec<usize> {
        let gi: Vec<usize> = gens.iter().map(|g| self.index_of(g).unwrap()).collect();
        let mut seen = alloc::collections::BTreeSet::new();
        let id = self.index_of(&(0..self.nroots as u8).collect::<Vec<_>>()).unwrap();
        seen.insert(id);
        let mut out = vec![id];
        let mut head = 0;
        while head < out.len() {
            for &g in &gi {
                let h = self.mul(out[head], g);
                if seen.insert(h) {
                    out.push(h);
                }
            }
            head += 1;
        }
        out
    }

    /// Partition into conjugacy classes. Classes are ordered by their first
    /// element in enumeration order.
    pub fn classes(&self) -> (Vec<Vec<usize>>, Vec<u32>) {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut classes = Vec::new();
        let gi: Vec<usize> = self.gens.iter().map(|g| self.index_of(g).unwrap()).collect();
        for start in 0..n {
            if class_of[start] != u32::MAX {
                continue;
            }
            let c = classes.len() as u32;
            class_of[start] = c;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                for &s in &gi {
                    let h = self.mul(s, self.mul(members[head], s));
                    if class_of[h] == u32::MAX {
                        class_of[h] = c;
                        members.push(h);
                    }
                }
                head += 1;
            }
            classes.push(members);
        }
        (classes, class_of)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassInfo {
    pub size: u64,
    /// Root permutation of a representative.
    pub rep: Vec<u8>,
    pub det: i64,
    /// `det(1 − q g)` on the reflection representation, lowest degree first.
    pub det_poly: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Irrep {
    pub degree: u64,
    pub b: u32,
    pub values: Vec<i64>,
    /// Fake degree, lowest degree first, up to `|Δ⁺|`.
    pub fake_degree: Vec<i64>,
}

/// Character table of a Weyl group together with fake degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharTable {
    pub cartan_type: CartanType,
    pub order: u64,
    pub classes: Vec<ClassInfo>,
    pub irreps: Vec<Irrep>,
    pub invariant_degrees: Vec<u32>,
}

/// Characteristic polynomial mod P by Faddeev–LeVerrier, coefficients of
/// `t^0..t^n`.
fn char_poly_mod(a: &[Vec<u64>]) -> Vec<u64> {
    let n = a.len();
    let mut c = vec![0u64; n + 1];
    c[n] = 1;
    let mut m = vec![vec![0u64; n]; n];
    for k in 1..=n {
        // M_k = A·M_{k−1} + c_{n−k+1} I
        let mut next = vec![vec![0u64; n]; n];
        for i in 0..n {
            for l in 0..n {
                if a[i][l] == 0 {
                    continue;
                }
                for j in 0..n {
                    next[i][j] = addmod(next[i][j], mulmod(a[i][l], m[l][j]));
                }
            }
            next[i][i] = addmod(next[i][i], c[n - k + 1]);
        }
        m = next;
        let mut tr = 0;
        for i in 0..n {
            for l in 0..n {
                tr = addmod(tr, mulmod(a[i][l], m[l][i]));
            }
        }
        c[n - k] = submod(0, mulmod(tr, invmod(k as u64)));
    }
    c
}

fn eval_mod(c: &[u64], x: u64) -> u64 {
    c.iter().rev().fold(0, |acc, &k| addmod(mulmod(acc, x), k))
}

/// Nullspace of a square matrix mod P.
fn nullspace_mod(mut a: Vec<Vec<u64>>) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut pivcols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        let inv = invmod(a[r][c]);
        for j in 0..n {
            a[r][j] = mulmod(a[r][j], inv);
        }
        for i in 0..n {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for j in 0..n {
                    let t = mulmod(f, a[r][j]);
                    a[i][j] = submod(a[i][j], t);
                }
            }
        }
        pivcols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivcols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (row, &pc) in pivcols.iter().enumerate() {
                v[pc] = submod(0, a[row][f]);
            }
            v
        })
        .collect()
}

fn inverse_mod(m: &[Vec<u64>]) -> Option<Vec<Vec<u64>>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|k| u64::from(i == k)));
            r
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&i| a[i][c] != 0)?;
        a.swap(c, p);
        let inv = invmod(a[c][c]);
        for x in a[c].iter_mut() {
            *x = mulmod(*x, inv);
        }
        for i in 0..n {
            if i != c && a[i][c] != 0 {
                let f = a[i][c];
                for k in 0..2 * n {
                    let t = mulmod(f, a[c][k]);
                    a[i][k] = submod(a[i][k], t);
                }
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Splits an `m`-invariant subspace (given by basis vectors) into the
/// eigenspaces of `m` for integer eigenvalues in `[−bound, bound]`.
fn split_space(m: &[Vec<u64>], basis: &[Vec<u64>], bound: i64) -> Result<Vec<Vec<Vec<u64>>>> {
    let r = m.len();
    let k = basis.len();
    // k coordinates on which the basis is independent
    let mut rows: Vec<Vec<u64>> = basis.to_vec();
    let mut piv = Vec::new();
    let mut used = 0;
    for c in 0..r {
        let Some(p) = (used..k).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(used, p);
        let inv = invmod(rows[used][c]);
        for i in used + 1..k {
            if rows[i][c] != 0 {
                let f = mulmod(rows[i][c], inv);
                for x in 0..r {
                    let t = mulmod(f, rows[used][x]);
                    rows[i][x] = submod(rows[i][x], t);
                }
            }
        }
        piv.push(c);
        used += 1;
        if used == k {
            break;
        }
    }
    let image: Vec<Vec<u64>> = basis
        .iter()
        .map(|v| (0..r).map(|i| (0..r).fold(0, |s, l| addmod(s, mulmod(m[i][l], v[l])))).collect())
        .collect();
    let bp: Vec<Vec<u64>> = piv.iter().map(|&p| (0..k).map(|b| basis[b][p]).collect()).collect();
    let mp: Vec<Vec<u64>> = piv.iter().map(|&p| (0..k).map(|b| image[b][p]).collect()).collect();
    let binv = inverse_mod(&bp).ok_or_else(|| Error::Oracle("dependent basis".into()))?;
    let restricted: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| (0..k).fold(0, |s, l| addmod(s, mulmod(binv[i][l], mp[l][j])))).collect())
        .collect();
    let poly = char_poly_mod(&restricted);
    let mut out = Vec::new();
    let mut dim = 0;
    for e in -bound..=bound {
        if eval_mod(&poly, tomod(e)) != 0 {
            continue;
        }
        let mut shifted = restricted.clone();
        for i in 0..k {
            shifted[i][i] = submod(shifted[i][i], tomod(e));
        }
        let ns = nullspace_mod(shifted);
        dim += ns.len();
        out.push(
            ns.iter()
                .map(|x| (0..r).map(|i| (0..k).fold(0, |s, b| addmod(s, mulmod(x[b], basis[b][i])))).collect())
                .collect(),
        );
    }
    if dim != k {
        return Err(Error::Oracle("class matrix is not diagonalizable over the integers".into()));
    }
    Ok(out)
}

fn isqrt(n: u128) -> Option<u128> {
    let x = n.isqrt();
    (x * x == n).then_some(x)
}

fn series_inverse(d: &[i64], prec: usize) -> Vec<i128> {
    let mut out = vec![0i128; prec];
    out[0] = 1;
    for k in 1..prec {
        let mut s = 0i128;
        for j in 1..d.len().min(k + 1) {
            s -= d[j] as i128 * out[k - j];
        }
        out[k] = s;
    }
    out
}

impl CharTable {
    pub fn compute(t: CartanType) -> Result<Self> {
        let g = WeylGroup::new(t)?;
        Self::from_group(&g)
    }

    pub fn from_group(g: &WeylGroup) -> Result<Self> {
        let order = g.order() as u64;
        let (classes, class_of) = g.classes();
        let r = classes.len();
        let sizes: Vec<u64> = classes.iter().map(|c| c.len() as u64).collect();
        let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();

        // a[j][k][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}
        let mut a = vec![vec![vec![0i64; r]; r]; r];
        for x in 0..g.order() {
            let xi = g.inverse(x);
            let j = class_of[x] as usize;
            for (l, &z) in reps.iter().enumerate() {
                let k = class_of[g.mul(xi, z)] as usize;
                a[j][k][l] += 1;
            }
        }

        let omegas = Self::class_algebra_eigenvectors(&a, &sizes)?;

        let mut irreps = Vec::new();
        for w in omegas {
            // χ(1)² = |G| / Σ ω_l² / |C_l|, computed over the common denominator |G|
            let s: i128 = (0..r)
                .map(|l| w[l] as i128 * w[l] as i128 * (order / sizes[l]) as i128)
                .sum();
            let g2 = order as i128 * order as i128;
            if s <= 0 || g2 % s != 0 {
                return Err(Error::Oracle(format!("bad degree norm {s}")));
            }
            let d = isqrt((g2 / s) as u128).ok_or_else(|| Error::Oracle(format!("degree² = {} not square", g2 / s)))?;
            let d = d as i64;
            let mut values = Vec::with_capacity(r);
            for l in 0..r {
                let num = w[l] * d;
                if num % sizes[l] as i64 != 0 {
                    return Err(Error::Oracle("non-integral character value".into()));
                }
                values.push(num / sizes[l] as i64);
            }
            irreps.push(Irrep { degree: d as u64, b: 0, values, fake_degree: Vec::new() });
        }

        let class_infos: Vec<ClassInfo> = reps
            .iter()
            .zip(&sizes)
            .map(|(&rep, &size)| {
                let mut det_poly = char_poly_int(&g.simple_matrix(rep));
                det_poly.reverse();
                ClassInfo { size, rep: g.element(rep).to_vec(), det: g.det(rep), det_poly }
            })
            .collect();

        let mut table = CharTable {
            cartan_type: g.rs.cartan_type,
            order,
            classes: class_infos,
            irreps,
            invariant_degrees: Vec::new(),
        };
        table.check_orthogonality()?;
        table.fill_fake_degrees()?;
        table.irreps.sort_by(|x, y| (x.degree, x.b, &x.values).cmp(&(y.degree, y.b, &y.values)));
        Ok(table)
    }

    /// Common eigenvectors of the class multiplication matrices
    /// `(M_j)_{kl} = a_{jkl}`, found by splitting eigenspaces one class at a
    /// time. The eigenvalue of `M_j` lies in `[−|C_j|, |C_j|]`.
    fn class_algebra_eigenvectors(a: &[Vec<Vec<i64>>], sizes: &[u64]) -> Result<Vec<Vec<i64>>> {
        let r = sizes.len();
        let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
            .map(|i| (0..r).map(|k| u64::from(i == k)).collect())
            .collect()];
        let mut order: Vec<usize> = (0..r).collect();
        order.sort_by_key(|&j| core::cmp::Reverse(sizes[j]));
        for &j in &order {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let mj: Vec<Vec<u64>> = (0..r).map(|k| (0..r).map(|l| tomod(a[j][k][l])).collect()).collect();
            let mut next = Vec::new();
            for basis in spaces {
                if basis.len() == 1 {
                    next.push(basis);
                    continue;
                }
                next.extend(split_space(&mj, &basis, sizes[j] as i64)?);
            }
            spaces = next;
        }
        if spaces.len() != r {
            return Err(Error::Oracle("class sums do not separate the characters".into()));
        }
        let vecs: Vec<Vec<i64>> = spaces
            .into_iter()
            .map(|s| {
                let v = &s[0];
                let inv = invmod(v[0]);
                v.iter().map(|&x| frommod(mulmod(x, inv))).collect()
            })
            .collect();
        // exact check of ω_j ω_k = Σ_l a_jkl ω_l
        for w in &vecs {
            for j in 0..r {
                for k in 0..r {
                    let rhs: i128 = (0..r).map(|l| a[j][k][l] as i128 * w[l] as i128).sum();
                    if w[j] as i128 * w[k] as i128 != rhs {
                        return Err(Error::Oracle("class algebra relation fails".into()));
                    }
                }
            }
        }
        Ok(vecs)
    }

    fn check_orthogonality(&self) -> Result<()> {
        let n = self.irreps.len();
        if n != self.classes.len() {
            return Err(Error::Oracle("number of irreducibles differs from number of classes".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let s: i128 = self
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(l, c)| c.size as i128 * self.irreps[i].values[l] as i128 * self.irreps[j].values[l] as i128)
                    .sum();
                let want = if i == j { self.order as i128 } else { 0 };
                if s != want {
                    return Err(Error::Oracle(format!("orthogonality fails for ({i},{j})")));
                }
            }
        }
        let sq: u64 = self.irreps.iter().map(|x| x.degree * x.degree).sum();
        if sq != self.order {
            return Err(Error::Oracle("Σ d² ≠ |W|".into()));
        }
        Ok(())
    }

    /// `(1/|W|) Σ_C |C| f(g_C) / det(1 − q g_C)` up to degree `prec − 1`.
    fn molien(&self, f: impl Fn(usize) -> i64, prec: usize) -> Result<Vec<i128>> {
        let mut acc = vec![0i128; prec];
        for (l, c) in self.classes.iter().enumerate() {
            let w = c.size as i128 * f(l) as i128;
            if w == 0 {
                continue;
            }
            for (k, x) in series_inverse(&c.det_poly, prec).into_iter().enumerate() {
                acc[k] += w * x;
            }
        }
        for x in acc.iter_mut() {
            if *x % self.order as i128 != 0 {
                return Err(Error::Oracle("Molien series not integral".into()));
            }
            *x /= self.order as i128;
        }
        Ok(acc)
    }

    fn fill_fake_degrees(&mut self) -> Result<()> {
        let npos = self.cartan_type.num_positive();
        let prec = npos + 2;
        let rank = self.cartan_type.rank;
        // peel invariant degrees off the Molien series of the trivial character
        let mut s = self.molien(|_| 1, prec)?;
        let mut degrees = Vec::new();
        while degrees.len() < rank {
            let Some(k) = (1..prec).find(|&k| s[k] != 0) else {
                return Err(Error::Oracle("too few invariant degrees".into()));
            };
            for i in (k..prec).rev() {
                s[i] -= s[i - k];
            }
            degrees.push(k as u32);
        }
        if s[1..].iter().any(|&x| x != 0) {
            return Err(Error::Oracle("Molien series is not a product of degrees".into()));
        }
        let dsum: u32 = degrees.iter().map(|d| d - 1).sum();
        if dsum as usize != npos {
            return Err(Error::Oracle("Σ(d_i − 1) ≠ |Δ⁺|".into()));
        }
        self.invariant_degrees = degrees.clone();
        for i in 0..self.irreps.len() {
            let vals = self.irreps[i].values.clone();
            let mut s = self.molien(|l| vals[l], prec)?;
            for &d in &degrees {
                let d = d as usize;
                for k in (d..prec).rev() {
                    s[k] -= s[k - d];
                }
            }
            s.truncate(npos + 1);
            let fd: Vec<i64> = s.iter().map(|&x| x as i64).collect();
            let sum: i64 = fd.iter().sum();
            if fd.iter().any(|&x| x < 0) || sum as u64 != self.irreps[i].degree {
                return Err(Error::Oracle("fake degree inconsistent with degree".into()));
            }
            self.irreps[i].b = fd.iter().position(|&x| x != 0).unwrap() as u32;
            self.irreps[i].fake_degree = fd;
        }
        Ok(())
    }

    pub fn trivial_index(&self) -> usize {
        self.irreps.iter().position(|x| x.values.iter().all(|&v| v == 1)).unwrap()
    }

    pub fn sign_index(&self) -> usize {
        self.irreps
            .iter()
            .position(|x| x.values.iter().zip(&self.classes).all(|(&v, c)| v == c.det))
            .unwrap()
    }

    /// Multiplicities of the irreducibles in `Ind_H^W(sgn_H)` for the
    /// reflection subgroup `H` generated by the given roots.
    pub fn induce_sign(&self, g: &WeylGroup, class_of: &[u32], roots: &[Weight]) -> Result<Vec<u64>> {
        let gens: Vec<Vec<u8>> = roots.iter().map(|a| g.reflection_perm(a)).collect();
        let h = g.subgroup(&gens);
        // class sums of sgn over H: map table class index by representative
        let rep_class: BTreeMap<u32, usize> = self
            .classes
            .iter()
            .enumerate()
            .map(|(i, c)| (class_of[g.index_of(&c.rep).unwrap()], i))
            .collect();
        let mut sums = vec![0i128; self.classes.len()];
        for &x in &h {
            sums[rep_class[&class_of[x]]] += g.det(x) as i128;
        }
        self.irreps
            .iter()
            .map(|irr| {
                let s: i128 = irr.values.iter().zip(&sums).map(|(&v, &c)| v as i128 * c).sum();
                if s % h.len() as i128 != 0 || s < 0 {
                    return Err(Error::Oracle("non-integral multiplicity".into()));
                }
                Ok((s / h.len() as i128) as u64)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(s: &str) -> CharTable {
        CharTable::compute(CartanType::parse(s).unwrap()).unwrap()
    }

    #[test]
    fn small_tables() {
        let t = table("A2");
        assert_eq!(t.irreps.iter().map(|x| x.degree).collect::<Vec<_>>(), vec![1, 1, 2]);
        let t = table("B2");
        assert_eq!(t.irreps.len(), 5);
        assert_eq!(t.invariant_degrees, vec![2, 4]);
        let t = table("G2");
        assert_eq!(t.irreps.len(), 6);
        assert_eq!(t.irreps.iter().filter(|x| (x.degree, x.b) == (2, 2)).count(), 1);
        let s = &t.irreps[t.sign_index()];
        assert_eq!(s.fake_degree.iter().position(|&x| x != 0), Some(6));
    }

    #[test]
    fn d4_table() {
        let t = table("D4");
        assert_eq!(t.order, 192);
        assert_eq!(t.irreps.len(), 13);
        assert_eq!(t.invariant_degrees, vec![2, 4, 4, 6]);
    }
}
