//! Irreducible Weyl group representations: labels, b-invariants, induction
//! of sign characters from reflection subgroups and truncated induction.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::linalg::{inverse, mat_mul, Mat};
use crate::oracle::{CharTable, WeylGroup};
use crate::partition::{bipartitions, bn_character, lr_product, n_of, partitions, rect, size, sn_character, Partition};
use crate::rootsys::{integral_subsystem, CartanKind, CartanType, RootSystem, Weight};
use crate::{q, Error, Result, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DMark {
    I,
    II,
}

/// Label of an irreducible Weyl group representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrepLabel {
    /// Type A.
    Partition(Partition),
    /// Types B and C, `(α;β)`.
    Bipartition(Partition, Partition),
    /// Type D, unordered `{α;β}`. Stored with the smaller side first.
    DBipartition { alpha: Partition, beta: Partition, mark: Option<DMark> },
    /// Exceptional types, `φ_{d,b}`. `ambiguous` is set when another
    /// irreducible shares the pair.
    DegreeB { degree: u64, b: u32, ambiguous: bool },
}

impl IrrepLabel {
    pub fn d(a: Partition, b: Partition, mark: Option<DMark>) -> Self {
        let (alpha, beta) = if (size(&a), &a) <= (size(&b), &b) { (a, b) } else { (b, a) };
        IrrepLabel::DBipartition { alpha, beta, mark }
    }
}

fn fmt_part(p: &[usize]) -> String {
    if p.is_empty() {
        return "∅".into();
    }
    let mut s = String::from("[");
    for (i, x) in p.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push_str(&format!("{x}"));
    }
    s.push(']');
    s
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Partition(p) => write!(f, "{}", fmt_part(p)),
            IrrepLabel::Bipartition(a, b) => write!(f, "({};{})", fmt_part(a), fmt_part(b)),
            IrrepLabel::DBipartition { alpha, beta, mark } => {
                write!(f, "{{{};{}}}", fmt_part(alpha), fmt_part(beta))?;
                match mark {
                    Some(DMark::I) => write!(f, "I"),
                    Some(DMark::II) => write!(f, "II"),
                    None => Ok(()),
                }
            }
            IrrepLabel::DegreeB { degree, b, ambiguous } => {
                write!(f, "φ_{{{degree},{b}}}")?;
                if *ambiguous {
                    write!(f, "?")?;
                }
                Ok(())
            }
        }
    }
}

/// Lowest degree of the label in the coinvariant algebra.
pub fn b_invariant(label: &IrrepLabel) -> u32 {
    (match label {
        IrrepLabel::Partition(p) => n_of(p),
        IrrepLabel::Bipartition(a, b) => 2 * n_of(a) + 2 * n_of(b) + size(b),
        IrrepLabel::DBipartition { alpha, beta, .. } => 2 * n_of(alpha) + 2 * n_of(beta) + size(alpha).min(size(beta)),
        IrrepLabel::DegreeB { b, .. } => *b as usize,
    }) as u32
}

/// Reflection subgroups with a closed-form induction rule.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupShape {
    /// `S_{k_1} × ⋯ × S_{k_r}` in `S_n`.
    AProduct { n: usize, blocks: Vec<usize> },
    /// `W(B_a) × W(B_b)` in `W(B_n)`.
    BProduct { n: usize, a: usize, b: usize },
    /// `W(D_n)` in `W(B_n)` or `W(C_n)`.
    DInB { n: usize, kind: CartanKind },
    /// `W(D_a) × W(D_b)` in `W(D_n)`.
    DProduct { n: usize, a: usize, b: usize },
}

fn chain(dim: usize, start: usize, len: usize, out: &mut Vec<Weight>) {
    for i in start..start + len.saturating_sub(1) {
        out.push(Weight::e_pm(dim, i + 1, i + 2, -1));
    }
}

impl SubgroupShape {
    pub fn ambient(&self) -> CartanType {
        let (kind, rank) = match self {
            SubgroupShape::AProduct { n, .. } => (CartanKind::A, n - 1),
            SubgroupShape::BProduct { n, .. } => (CartanKind::B, *n),
            SubgroupShape::DInB { n, kind } => (*kind, *n),
            SubgroupShape::DProduct { n, .. } => (CartanKind::D, *n),
        };
        CartanType { kind, rank }
    }

    /// `|Δ'⁺|` of the subgroup.
    pub fn num_positive(&self) -> usize {
        let d = |k: usize| k * k.saturating_sub(1);
        match self {
            SubgroupShape::AProduct { blocks, .. } => blocks.iter().map(|&k| d(k) / 2).sum(),
            SubgroupShape::BProduct { a, b, .. } => a * a + b * b,
            SubgroupShape::DInB { n, .. } => d(*n),
            SubgroupShape::DProduct { a, b, .. } => d(*a) + d(*b),
        }
    }

    /// Simple roots of a standard copy of the subgroup.
    pub fn generators(&self) -> Vec<Weight> {
        let mut out = Vec::new();
        match self {
            SubgroupShape::AProduct { n, blocks } => {
                let mut s = 0;
                for &k in blocks {
                    chain(*n, s, k, &mut out);
                    s += k;
                }
            }
            SubgroupShape::BProduct { n, a, b } => {
                for (s, k) in [(0, *a), (*a, *b)] {
                    chain(*n, s, k, &mut out);
                    if k > 0 {
                        out.push(Weight::unit(*n, s + k));
                    }
                }
            }
            SubgroupShape::DInB { n, .. } => {
                chain(*n, 0, *n, &mut out);
                out.push(Weight::e_pm(*n, n - 1, *n, 1));
            }
            SubgroupShape::DProduct { n, a, b } => {
                for (s, k) in [(0, *a), (*a, *b)] {
                    chain(*n, s, k, &mut out);
                    if k >= 2 {
                        out.push(Weight::e_pm(*n, s + k - 1, s + k, 1));
                    }
                }
            }
        }
        out
    }
}

/// Shape of the integral reflection subgroup `W(λ)` of a classical system.
pub fn shape_from_lambda(rs: &RootSystem, lambda: &Weight) -> Result<SubgroupShape> {
    let t = rs.cartan_type;
    let n = rs.ambient_dim;
    let is_int = |x: Q| x.is_integer();
    match t.kind {
        CartanKind::A => {
            // coordinates linked when their difference is integral
            let mut blocks: Vec<Vec<Q>> = Vec::new();
            for &c in &lambda.coords {
                match blocks.iter_mut().find(|b| is_int(b[0] - c)) {
                    Some(b) => b.push(c),
                    None => blocks.push(vec![c]),
                }
            }
            let mut sizes: Vec<usize> = blocks.iter().map(|b| b.len()).collect();
            sizes.sort_unstable_by(|a, b| b.cmp(a));
            Ok(SubgroupShape::AProduct { n, blocks: sizes })
        }
        CartanKind::B | CartanKind::D => {
            if lambda.coords.iter().any(|&c| !is_int(c * q(2))) {
                return Err(Error::Unsupported("weight is not half-integral".into()));
            }
            let a = lambda.coords.iter().filter(|&&c| is_int(c)).count();
            let (a, b) = (a.max(n - a), a.min(n - a));
            Ok(if t.kind == CartanKind::B {
                SubgroupShape::BProduct { n, a, b }
            } else {
                SubgroupShape::DProduct { n, a, b }
            })
        }
        CartanKind::C => {
            let sub = integral_subsystem(rs, lambda)?;
            let ok = lambda.coords.iter().all(|&c| !is_int(c) && is_int(c * q(2)));
            if !ok || sub.roots.len() != 2 * n * (n - 1) {
                return Err(Error::Unsupported("integral subsystem is not D_n".into()));
            }
            Ok(SubgroupShape::DInB { n, kind: CartanKind::C })
        }
        _ => Err(Error::Unsupported(format!("no closed form for {t}"))),
    }
}

fn columns_product(cols: &[usize]) -> BTreeMap<Partition, u64> {
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    acc.insert(Vec::new(), 1);
    for &k in cols {
        let mut next = BTreeMap::new();
        for (p, m) in acc {
            for (r, c) in lr_product(&p, &rect(1, k)) {
                *next.entry(r).or_insert(0) += m * c;
            }
        }
        acc = next;
    }
    acc
}

type BiMult = BTreeMap<(Partition, Partition), u64>;

/// `Ind` from `B_a × B_b` to `B_{a+b}` of an outer tensor product.
fn bi_induce(x: &BiMult, y: &BiMult) -> BiMult {
    let mut out = BTreeMap::new();
    for ((a1, b1), m1) in x {
        for ((a2, b2), m2) in y {
            let pa = lr_product(a1, a2);
            let pb = lr_product(b1, b2);
            for (a, ca) in &pa {
                for (b, cb) in &pb {
                    *out.entry((a.clone(), b.clone())).or_insert(0) += m1 * m2 * ca * cb;
                }
            }
        }
    }
    out
}

/// `Ind_{D_k}^{B_k} sgn`.
fn d_sign_in_b(k: usize) -> BiMult {
    let mut m = BTreeMap::new();
    if k == 0 {
        m.insert((Vec::new(), Vec::new()), 1);
    } else {
        m.insert((Vec::new(), rect(1, k)), 1);
        m.insert((rect(1, k), Vec::new()), 1);
    }
    m
}

/// Decomposition of `Ind(sgn)` by the closed-form rules.
pub fn induce_sign_decompose(shape: &SubgroupShape) -> Result<Vec<(IrrepLabel, u64)>> {
    let out: Vec<(IrrepLabel, u64)> = match shape {
        SubgroupShape::AProduct { blocks, .. } => columns_product(blocks)
            .into_iter()
            .map(|(p, m)| (IrrepLabel::Partition(p), m))
            .collect(),
        SubgroupShape::BProduct { a, b, .. } => lr_product(&rect(1, *a), &rect(1, *b))
            .into_iter()
            .map(|(p, m)| (IrrepLabel::Bipartition(Vec::new(), p), m))
            .collect(),
        SubgroupShape::DInB { n, .. } => vec![
            (IrrepLabel::Bipartition(rect(1, *n), Vec::new()), 1),
            (IrrepLabel::Bipartition(Vec::new(), rect(1, *n)), 1),
        ],
        SubgroupShape::DProduct { a, b, .. } => {
            let ind = bi_induce(&d_sign_in_b(*a), &d_sign_in_b(*b));
            let mut out = BTreeMap::new();
            for ((al, be), m) in ind {
                if al == be {
                    if m % 2 != 0 {
                        return Err(Error::NotUnique("odd multiplicity on a split pair".into()));
                    }
                    out.insert(IrrepLabel::d(al.clone(), be.clone(), Some(DMark::I)), m / 2);
                    out.insert(IrrepLabel::d(al, be, Some(DMark::II)), m / 2);
                } else if (size(&al), &al) <= (size(&be), &be) {
                    out.insert(IrrepLabel::d(al, be, None), m);
                }
            }
            out.into_iter().collect()
        }
    };
    let mut out: Vec<(IrrepLabel, u64)> = out.into_iter().filter(|(_, m)| *m > 0).collect();
    out.sort();
    Ok(out)
}

/// The constituent of `Ind(sgn)` whose b-invariant equals `|Δ'⁺|`.
pub fn j_from_decomposition(parts: &[(IrrepLabel, u64)], b_of: impl Fn(&IrrepLabel) -> u32, npos: usize) -> Result<IrrepLabel> {
    let npos = npos as u32;
    let hits: Vec<&(IrrepLabel, u64)> = parts.iter().filter(|(l, _)| b_of(l) == npos).collect();
    if hits.len() != 1 || hits[0].1 != 1 {
        return Err(Error::NotUnique(format!("{} constituents with b = {npos}", hits.len())));
    }
    if let Some((l, _)) = parts.iter().find(|(l, _)| b_of(l) < npos) {
        return Err(Error::NotUnique(format!("{l} has b below {npos}")));
    }
    Ok(hits[0].0.clone())
}

pub fn j_induce_sign(shape: &SubgroupShape) -> Result<IrrepLabel> {
    let parts = induce_sign_decompose(shape)?;
    j_from_decomposition(&parts, b_invariant, shape.num_positive())
}

/// Signed cycle type of a class representative of a classical group,
/// read off from its action on the ambient coordinates.
fn signed_cycles(g: &WeylGroup, perm: &[u8]) -> Result<Vec<(usize, bool)>> {
    let rs = &g.rs;
    let n = rs.ambient_dim;
    let mut basis: Vec<Weight> = rs.simple_roots.clone();
    let mut images: Vec<Weight> = rs
        .simple_roots
        .iter()
        .map(|a| rs.roots[perm[rs.root_index(a).unwrap()] as usize].clone())
        .collect();
    if rs.cartan_type.kind == CartanKind::A {
        let ones = Weight::new(vec![Q::one(); n]);
        basis.push(ones.clone());
        images.push(ones);
    }
    let cols = |ws: &[Weight]| -> Mat { (0..n).map(|i| ws.iter().map(|w| w.coords[i]).collect()).collect() };
    let inv = inverse(&cols(&basis)).ok_or(Error::Degenerate("basis".into()))?;
    let m = mat_mul(&cols(&images), &inv);
    // column j has a single ±1 at row target[j]
    let mut target = vec![(0usize, false); n];
    for j in 0..n {
        let nz: Vec<usize> = (0..n).filter(|&i| !m[i][j].is_zero()).collect();
        if nz.len() != 1 || (m[nz[0]][j] != Q::one() && m[nz[0]][j] != -Q::one()) {
            return Err(Error::Oracle("not a signed permutation".into()));
        }
        target[j] = (nz[0], m[nz[0]][j] < Q::zero());
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let (mut j, mut len, mut neg) = (s, 0, false);
        while !seen[j] {
            seen[j] = true;
            len += 1;
            neg ^= target[j].1;
            j = target[j].0;
        }
        out.push((len, neg));
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

/// Classical labels for the irreducibles of an oracle table, matched by
/// Murnaghan–Nakayama character values.
pub fn classical_labels(g: &WeylGroup, table: &CharTable) -> Result<Vec<IrrepLabel>> {
    let t = table.cartan_type;
    let cycles: Vec<Vec<(usize, bool)>> = table
        .classes
        .iter()
        .map(|c| signed_cycles(g, &c.rep))
        .collect::<Result<_>>()?;
    let n = g.rs.ambient_dim;
    let mut labels: Vec<Option<IrrepLabel>> = vec![None; table.irreps.len()];
    let assign = |labels: &mut Vec<Option<IrrepLabel>>, vals: &[i64], l: IrrepLabel| -> Result<()> {
        let i = table
            .irreps
            .iter()
            .enumerate()
            .position(|(i, x)| labels[i].is_none() && x.values == vals)
            .ok_or_else(|| Error::Oracle(format!("no irreducible matches {l}")))?;
        labels[i] = Some(l);
        Ok(())
    };
    match t.kind {
        CartanKind::A => {
            for p in partitions(n) {
                let vals: Vec<i64> = cycles
                    .iter()
                    .map(|c| sn_character(&p, &c.iter().map(|x| x.0).collect::<Vec<_>>()))
                    .collect();
                assign(&mut labels, &vals, IrrepLabel::Partition(p))?;
            }
        }
        CartanKind::B | CartanKind::C => {
            for (a, b) in bipartitions(n) {
                let vals: Vec<i64> = cycles.iter().map(|c| bn_character(&a, &b, c)).collect();
                assign(&mut labels, &vals, IrrepLabel::Bipartition(a, b))?;
            }
        }
        CartanKind::D => {
            let mut split = Vec::new();
            for (a, b) in bipartitions(n) {
                let vals: Vec<i64> = cycles.iter().map(|c| bn_character(&a, &b, c)).collect();
                if a == b {
                    split.push((a, vals));
                } else if (size(&a), &a) < (size(&b), &b) {
                    assign(&mut labels, &vals, IrrepLabel::d(a, b, None))?;
                }
            }
            for (a, vals) in split {
                let free: Vec<usize> = (0..labels.len()).filter(|&i| labels[i].is_none()).collect();
                let pair = free.iter().enumerate().find_map(|(x, &i)| {
                    free[x + 1..].iter().find_map(|&j| {
                        let sum: Vec<i64> = (0..vals.len())
                            .map(|l| table.irreps[i].values[l] + table.irreps[j].values[l])
                            .collect();
                        (sum == vals).then_some((i, j))
                    })
                });
                let (i, j) = pair.ok_or_else(|| Error::Oracle("split pair not found".into()))?;
                labels[i] = Some(IrrepLabel::d(a.clone(), a.clone(), Some(DMark::I)));
                labels[j] = Some(IrrepLabel::d(a.clone(), a, Some(DMark::II)));
            }
        }
        _ => return Err(Error::Unsupported(format!("{t} is not classical"))),
    }
    labels
        .into_iter()
        .map(|l| l.ok_or_else(|| Error::Oracle("unlabelled irreducible".into())))
        .collect()
}

/// `φ_{d,b}` labels for every irreducible of a table.
pub fn degree_b_labels(table: &CharTable) -> Vec<IrrepLabel> {
    table
        .irreps
        .iter()
        .map(|x| IrrepLabel::DegreeB {
            degree: x.degree,
            b: x.b,
            ambiguous: table.irreps.iter().filter(|y| (y.degree, y.b) == (x.degree, x.b)).count() > 1,
        })
        .collect()
}

/// Oracle decomposition of `Ind(sgn)` from the reflection subgroup generated
/// by `roots`, labelled with `labels`.
pub fn oracle_decompose(
    g: &WeylGroup,
    class_of: &[u32],
    table: &CharTable,
    labels: &[IrrepLabel],
    roots: &[Weight],
) -> Result<Vec<(IrrepLabel, u64)>> {
    let mult = table.induce_sign(g, class_of, roots)?;
    let mut out: Vec<(IrrepLabel, u64)> = mult
        .into_iter()
        .zip(labels)
        .filter(|(m, _)| *m > 0)
        .map(|(m, l)| (l.clone(), m))
        .collect();
    out.sort();
    Ok(out)
}

/// Oracle truncated induction: `roots` generate the subgroup, `npos` is its
/// number of positive roots.
pub fn oracle_j_induce(
    g: &WeylGroup,
    class_of: &[u32],
    table: &CharTable,
    labels: &[IrrepLabel],
    roots: &[Weight],
    npos: usize,
) -> Result<IrrepLabel> {
    let parts = oracle_decompose(g, class_of, table, labels, roots)?;
    let b: BTreeMap<&IrrepLabel, u32> = labels.iter().zip(&table.irreps).map(|(l, x)| (l, x.b)).collect();
    j_from_decomposition(&parts, |l| b[l], npos)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::rect;

    #[test]
    fn b_values() {
        assert_eq!(b_invariant(&IrrepLabel::Partition(vec![4])), 0);
        assert_eq!(b_invariant(&IrrepLabel::Partition(rect(1, 4))), 6);
        assert_eq!(b_invariant(&IrrepLabel::Bipartition(vec![], vec![2, 2])), 8);
        assert_eq!(b_invariant(&IrrepLabel::d(vec![2, 2], vec![], None)), 4);
    }

    #[test]
    fn closed_forms() {
        let s = SubgroupShape::AProduct { n: 4, blocks: vec![2, 2] };
        let parts = induce_sign_decompose(&s).unwrap();
        let dim: u64 = parts
            .iter()
            .map(|(l, m)| match l {
                IrrepLabel::Partition(p) => m * crate::partition::sn_degree(p),
                _ => unreachable!(),
            })
            .sum();
        assert_eq!(dim, 6);
        assert!(parts.contains(&(IrrepLabel::Partition(vec![2, 2]), 1)));
        assert_eq!(j_induce_sign(&s).unwrap(), IrrepLabel::Partition(vec![2, 2]));
        let s = SubgroupShape::DProduct { n: 4, a: 2, b: 2 };
        assert_eq!(j_induce_sign(&s).unwrap(), IrrepLabel::d(vec![], vec![2, 2], None));
        let s = SubgroupShape::DInB { n: 3, kind: CartanKind::C };
        assert_eq!(j_induce_sign(&s).unwrap(), IrrepLabel::Bipartition(rect(1, 3), vec![]));
    }

    #[test]
    fn labels_match_oracle_b() {
        for t in ["A3", "B3", "D4", "C3"] {
            let g = WeylGroup::new(CartanType::parse(t).unwrap()).unwrap();
            let table = CharTable::from_group(&g).unwrap();
            let labels = classical_labels(&g, &table).unwrap();
            for (l, x) in labels.iter().zip(&table.irreps) {
                assert_eq!(b_invariant(l), x.b, "{t} {l}");
            }
        }
    }
}
