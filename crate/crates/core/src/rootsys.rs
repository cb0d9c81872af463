//! Root systems in Bourbaki coordinates, canonical infinitesimal characters
//! and integral subsystems.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::linalg::{inverse, solve_combination, Mat};
use crate::{q, qf, Error, Result, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CartanKind {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl CartanKind {
    pub fn from_char(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Self::A,
            'B' => Self::B,
            'C' => Self::C,
            'D' => Self::D,
            'E' => Self::E,
            'F' => Self::F,
            'G' => Self::G,
            _ => return Err(Error::InvalidType(format!("{c}"))),
        })
    }

    pub fn letter(self) -> char {
        match self {
            Self::A => 'A',
            Self::B => 'B',
            Self::C => 'C',
            Self::D => 'D',
            Self::E => 'E',
            Self::F => 'F',
            Self::G => 'G',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Self::A | Self::B | Self::C | Self::D)
    }
}

/// Cartan type label plus rank, e.g. `D4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    pub kind: CartanKind,
    pub rank: usize,
}

impl CartanType {
    /// Validates the combination. `D2` is accepted as the reducible
    /// realization `A1×A1`; `D3` is the usual copy of `A3`.
    pub fn new(kind: CartanKind, rank: usize) -> Result<Self> {
        let ok = match kind {
            CartanKind::A => rank >= 1,
            CartanKind::B | CartanKind::C => rank >= 1,
            CartanKind::D => rank >= 2,
            CartanKind::E => (6..=8).contains(&rank),
            CartanKind::F => rank == 4,
            CartanKind::G => rank == 2,
        };
        if ok {
            Ok(Self { kind, rank })
        } else {
            Err(Error::InvalidType(format!("{}{}", kind.letter(), rank)))
        }
    }

    /// Parses labels such as `E8` or `d4`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let c = chars.next().ok_or_else(|| Error::InvalidType(String::from(s)))?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::InvalidType(String::from(s)))?;
        Self::new(CartanKind::from_char(c)?, rank)
    }

    pub fn ambient_dim(&self) -> usize {
        match self.kind {
            CartanKind::A => self.rank + 1,
            CartanKind::B | CartanKind::C | CartanKind::D => self.rank,
            CartanKind::E => 8,
            CartanKind::F => 4,
            CartanKind::G => 3,
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.kind, CartanKind::A | CartanKind::D | CartanKind::E)
    }

    /// Standard |Δ⁺| for the type.
    pub fn num_positive(&self) -> usize {
        let n = self.rank;
        match self.kind {
            CartanKind::A => n * (n + 1) / 2,
            CartanKind::B | CartanKind::C => n * n,
            CartanKind::D => n * (n - 1),
            CartanKind::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            CartanKind::F => 24,
            CartanKind::G => 6,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.kind {
            CartanKind::A => fact(n + 1),
            CartanKind::B | CartanKind::C => (1u64 << n) * fact(n),
            CartanKind::D => (1u64 << (n - 1)) * fact(n),
            CartanKind::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            CartanKind::F => 1152,
            CartanKind::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

/// Exact weight in the ambient space.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Self { coords }
    }

    pub fn zero(dim: usize) -> Self {
        Self { coords: vec![Q::zero(); dim] }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self { coords: v.iter().map(|&x| q(x)).collect() }
    }

    /// Coordinates given in halves: `from_halves(&[3, 2])` is (3/2, 1).
    pub fn from_halves(v: &[i64]) -> Self {
        Self { coords: v.iter().map(|&x| qf(x, 2)).collect() }
    }

    /// `e_i + s e_j` with 1-based indices.
    pub fn e_pm(dim: usize, i: usize, j: usize, s: i64) -> Self {
        let mut w = Self::zero(dim);
        w.coords[i - 1] += Q::one();
        w.coords[j - 1] += q(s);
        w
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim);
        w.coords[i - 1] = Q::one();
        w
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn dot(&self, other: &Weight) -> Q {
        self.coords
            .iter()
            .zip(&other.coords)
            .fold(Q::zero(), |s, (a, b)| s + *a * *b)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| *a + *b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| *a - *b).collect())
    }

    pub fn scale(&self, c: Q) -> Weight {
        Weight::new(self.coords.iter().map(|a| *a * c).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `⟨v, α∨⟩ = 2(v,α)/(α,α)`.
pub fn pairing(v: &Weight, alpha: &Weight) -> Q {
    q(2) * v.dot(alpha) / alpha.dot(alpha)
}

/// `s_α(v) = v − ⟨v,α∨⟩α`.
pub fn reflect(v: &Weight, alpha: &Weight) -> Weight {
    v.sub(&alpha.scale(pairing(v, alpha)))
}

/// Simple roots in Bourbaki order.
pub fn simple_roots_for(t: CartanType) -> Vec<Weight> {
    let n = t.rank;
    let d = t.ambient_dim();
    let chain = |k: usize| -> Vec<Weight> { (1..=k).map(|i| Weight::e_pm(d, i, i + 1, -1)).collect() };
    match t.kind {
        CartanKind::A => chain(n),
        CartanKind::B => {
            let mut s = chain(n - 1);
            s.push(Weight::unit(d, n));
            s
        }
        CartanKind::C => {
            let mut s = chain(n - 1);
            s.push(Weight::unit(d, n).scale(q(2)));
            s
        }
        CartanKind::D => {
            let mut s = chain(n - 1);
            s.push(Weight::e_pm(d, n - 1, n, 1));
            s
        }
        CartanKind::E => {
            let mut s = vec![Weight::from_halves(&[1, -1, -1, -1, -1, -1, -1, 1])];
            s.push(Weight::e_pm(8, 1, 2, 1));
            s.push(Weight::e_pm(8, 2, 1, -1));
            for i in 3..=7 {
                s.push(Weight::e_pm(8, i, i - 1, -1));
            }
            s.truncate(n);
            s
        }
        CartanKind::F => vec![
            Weight::from_ints(&[0, 1, -1, 0]),
            Weight::from_ints(&[0, 0, 1, -1]),
            Weight::from_ints(&[0, 0, 0, 1]),
            Weight::from_halves(&[1, -1, -1, -1]),
        ],
        CartanKind::G => vec![Weight::from_ints(&[1, -1, 0]), Weight::from_ints(&[-2, 1, 1])],
    }
}

/// Cartan matrix `c[i][j] = ⟨α_i, α_j∨⟩` of a list of roots.
pub fn cartan_matrix_of(simple: &[Weight]) -> Vec<Vec<i64>> {
    simple
        .iter()
        .map(|a| simple.iter().map(|b| pairing(a, b).to_integer()).collect())
        .collect()
}

/// Full root system with its lattices.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub cartan_type: CartanType,
    pub ambient_dim: usize,
    /// Positive roots first (by height, then simple coordinates), then their
    /// negatives in the same order.
    pub roots: Vec<Weight>,
    pub simple_roots: Vec<Weight>,
    pub fundamental_weights: Vec<Weight>,
    simple_coords: Vec<Vec<i64>>,
    simple_index: Vec<usize>,
    lookup: BTreeMap<Vec<Q>, usize>,
}

impl RootSystem {
    pub fn build(kind: CartanKind, rank: usize) -> Result<Self> {
        Self::from_type(CartanType::new(kind, rank)?)
    }

    /// Builds from a label such as `"E8"`.
    pub fn parse(label: &str) -> Result<Self> {
        Self::from_type(CartanType::parse(label)?)
    }

    pub fn from_type(t: CartanType) -> Result<Self> {
        let simple = simple_roots_for(t);
        let d = t.ambient_dim();
        // closure of the simple roots under the simple reflections
        let mut seen: BTreeSet<Vec<Q>> = simple.iter().map(|w| w.coords.clone()).collect();
        let mut queue: Vec<Weight> = simple.clone();
        while let Some(v) = queue.pop() {
            for a in &simple {
                let r = reflect(&v, a);
                if seen.insert(r.coords.clone()) {
                    queue.push(r);
                }
            }
        }
        let mut pos: Vec<(Vec<i64>, Weight)> = Vec::new();
        for c in &seen {
            let w = Weight::new(c.clone());
            let x = solve_combination(
                &simple.iter().map(|s| s.coords.clone()).collect::<Vec<_>>(),
                &w.coords,
            )
            .ok_or_else(|| Error::InvalidType(format!("{t}: root outside span")))?;
            let xi: Vec<i64> = x.iter().map(|c| c.to_integer()).collect();
            if xi.iter().all(|&c| c >= 0) {
                pos.push((xi, w));
            }
        }
        pos.sort_by(|a, b| {
            let ha: i64 = a.0.iter().sum();
            let hb: i64 = b.0.iter().sum();
            ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
        });
        if pos.len() != t.num_positive() {
            return Err(Error::InvalidType(format!("{t}: wrong root count {}", pos.len())));
        }
        let npos = pos.len();
        let mut roots: Vec<Weight> = pos.iter().map(|p| p.1.clone()).collect();
        roots.extend(pos.iter().map(|p| p.1.neg()));
        let mut simple_coords: Vec<Vec<i64>> = pos.iter().map(|p| p.0.clone()).collect();
        simple_coords.extend(pos.iter().map(|p| p.0.iter().map(|c| -c).collect::<Vec<_>>()));
        let lookup: BTreeMap<Vec<Q>, usize> =
            roots.iter().enumerate().map(|(i, r)| (r.coords.clone(), i)).collect();
        let simple_index = simple.iter().map(|s| lookup[&s.coords]).collect();
        let cm = cartan_matrix_of(&simple);
        let cmq: Mat = cm.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let minv = inverse(&cmq).ok_or_else(|| Error::InvalidType(format!("{t}: singular")))?;
        let fundamental_weights = minv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&simple)
                    .fold(Weight::zero(d), |acc, (c, a)| acc.add(&a.scale(*c)))
            })
            .collect();
        debug_assert_eq!(roots.len(), 2 * npos);
        Ok(Self {
            cartan_type: t,
            ambient_dim: d,
            roots,
            simple_roots: simple,
            fundamental_weights,
            simple_coords,
            simple_index,
            lookup,
        })
    }

    pub fn rank(&self) -> usize {
        self.cartan_type.rank
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.roots[..self.num_positive()]
    }

    pub fn root_index(&self, v: &Weight) -> Option<usize> {
        self.lookup.get(&v.coords).copied()
    }

    pub fn is_root(&self, v: &Weight) -> bool {
        self.lookup.contains_key(&v.coords)
    }

    /// Index in `roots` of the i-th simple root.
    pub fn simple_root_index(&self, i: usize) -> usize {
        self.simple_index[i]
    }

    /// Coordinates of a root in the basis of simple roots.
    pub fn simple_coords(&self, root: usize) -> &[i64] {
        &self.simple_coords[root]
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        cartan_matrix_of(&self.simple_roots)
    }

    pub fn rho(&self) -> Weight {
        self.positive_roots()
            .iter()
            .fold(Weight::zero(self.ambient_dim), |a, r| a.add(r))
            .scale(qf(1, 2))
    }

    /// Half the sum of the positive coroots `2α/(α,α)`.
    pub fn rho_check(&self) -> Weight {
        self.positive_roots()
            .iter()
            .fold(Weight::zero(self.ambient_dim), |a, r| a.add(&r.scale(q(2) / r.dot(r))))
            .scale(qf(1, 2))
    }

    /// Membership in the weight lattice P, for weights in the span of the
    /// roots.
    pub fn in_weight_lattice(&self, v: &Weight) -> bool {
        self.simple_roots.iter().all(|a| pairing(v, a).is_integer())
    }

    /// True when `v` lies in the real span of the roots.
    pub fn in_root_span(&self, v: &Weight) -> bool {
        let rows: Vec<Vec<Q>> = self.simple_roots.iter().map(|s| s.coords.clone()).collect();
        solve_combination(&rows, &v.coords).is_some()
    }
}

/// ρ/2 for simply-laced types and G2; ρ(C_n)/2 for B_n; ρ(B_n) for C_n;
/// ρ^∨/2 for F4. At ρ/2 itself F4 would have Δ(λ) = A1×B3.
pub fn canonical_lambda(rs: &RootSystem) -> Weight {
    let n = rs.rank() as i64;
    match rs.cartan_type.kind {
        CartanKind::B => Weight::from_halves(&(1..=n).rev().collect::<Vec<_>>()),
        CartanKind::C => Weight::from_halves(&(1..=n).rev().map(|k| 2 * k - 1).collect::<Vec<_>>()),
        CartanKind::F => rs.rho_check().scale(qf(1, 2)),
        _ => rs.rho().scale(qf(1, 2)),
    }
}

/// Multiset of simple Cartan types, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TypeId {
    pub components: Vec<CartanType>,
}

impl TypeId {
    pub fn new(mut components: Vec<CartanType>) -> Self {
        components.sort();
        Self { components }
    }

    /// Applies the low-rank coincidences B1=C1=A1, C2=B2, D2=A1×A1, D3=A3 and
    /// drops empty factors such as D1.
    pub fn normalized(&self) -> Self {
        let mut out = Vec::new();
        for c in &self.components {
            let a = |r| CartanType { kind: CartanKind::A, rank: r };
            match (c.kind, c.rank) {
                (_, 0) => {}
                (CartanKind::D, 1) => {}
                (CartanKind::D, 2) => {
                    out.push(a(1));
                    out.push(a(1));
                }
                (CartanKind::B | CartanKind::C, 1) => out.push(a(1)),
                (CartanKind::C, 2) => out.push(CartanType { kind: CartanKind::B, rank: 2 }),
                (CartanKind::D, 3) => out.push(a(3)),
                _ => out.push(*c),
            }
        }
        Self::new(out)
    }

    /// Parses `"A1×A5"`, `"A1xA5"` or `"∅"`; components may be any rank.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Self::default());
        }
        let mut comps = Vec::new();
        for part in s.split(['×', 'x', '*']) {
            let part = part.trim();
            let mut ch = part.chars();
            let k = CartanKind::from_char(ch.next().ok_or_else(|| Error::InvalidType(String::from(s)))?)?;
            let r: usize = ch.as_str().parse().map_err(|_| Error::InvalidType(String::from(s)))?;
            comps.push(CartanType { kind: k, rank: r });
        }
        Ok(Self::new(comps))
    }

    pub fn num_positive(&self) -> usize {
        self.components.iter().map(|c| c.num_positive()).sum()
    }

    /// Type of the coroot system: B and C swap.
    pub fn dual(&self) -> Self {
        let swap = |c: &CartanType| {
            let kind = match c.kind {
                CartanKind::B => CartanKind::C,
                CartanKind::C => CartanKind::B,
                k => k,
            };
            CartanType { kind, rank: c.rank }
        };
        Self::new(self.components.iter().map(swap).collect()).normalized()
    }
}

impl fmt::Display for TypeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "×")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

fn classify_component(cm: &[Vec<i64>], nodes: &[usize], sq: &[Q]) -> Result<CartanType> {
    let k = nodes.len();
    let mk = |kind| Ok(CartanType { kind, rank: k });
    if k == 1 {
        return mk(CartanKind::A);
    }
    let bond = |i: usize, j: usize| cm[nodes[i]][nodes[j]] * cm[nodes[j]][nodes[i]];
    let deg: Vec<usize> = (0..k).map(|i| (0..k).filter(|&j| j != i && bond(i, j) != 0).count()).collect();
    let mut multi = None;
    for i in 0..k {
        for j in i + 1..k {
            let b = bond(i, j);
            if b > 1 {
                if multi.is_some() {
                    return Err(Error::InvalidType(String::from("two multiple bonds")));
                }
                multi = Some((i, j, b));
            }
        }
    }
    if let Some((i, j, b)) = multi {
        if b == 3 {
            return mk(CartanKind::G);
        }
        if k == 2 {
            return mk(CartanKind::B);
        }
        let leaf = if deg[i] == 1 {
            Some((i, j))
        } else if deg[j] == 1 {
            Some((j, i))
        } else {
            None
        };
        return match leaf {
            None if k == 4 => mk(CartanKind::F),
            None => Err(Error::InvalidType(String::from("unknown non-simply-laced diagram"))),
            Some((l, other)) => {
                if sq[nodes[l]] < sq[nodes[other]] {
                    mk(CartanKind::B)
                } else {
                    mk(CartanKind::C)
                }
            }
        };
    }
    let branch: Vec<usize> = (0..k).filter(|&i| deg[i] == 3).collect();
    if branch.is_empty() {
        return mk(CartanKind::A);
    }
    let b = branch[0];
    // arm lengths from the branch node
    let mut arms = Vec::new();
    for start in (0..k).filter(|&j| j != b && bond(b, j) != 0) {
        let mut len = 1;
        let (mut prev, mut cur) = (b, start);
        loop {
            let next = (0..k).find(|&j| j != prev && j != cur && bond(cur, j) != 0);
            match next {
                Some(nx) => {
                    prev = cur;
                    cur = nx;
                    len += 1;
                }
                None => break,
            }
        }
        arms.push(len);
    }
    arms.sort();
    match arms.as_slice() {
        [1, 1, _] => mk(CartanKind::D),
        [1, 2, 2] | [1, 2, 3] | [1, 2, 4] => mk(CartanKind::E),
        _ => Err(Error::InvalidType(String::from("unknown simply-laced diagram"))),
    }
}

/// Backtracking isomorphism test for Cartan matrices.
pub fn cartan_isomorphic(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    fn go(a: &[Vec<i64>], b: &[Vec<i64>], map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.len() {
            return true;
        }
        for j in 0..b.len() {
            if used[j] {
                continue;
            }
            if (0..i).all(|p| a[i][p] == b[j][map[p]] && a[p][i] == b[map[p]][j]) && a[i][i] == b[j][j] {
                used[j] = true;
                map.push(j);
                if go(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[j] = false;
            }
        }
        false
    }
    go(a, b, &mut Vec::new(), &mut vec![false; n])
}

/// Identifies the Cartan type of a set of simple roots, component by
/// component, and confirms each component by diagram isomorphism.
pub fn identify_type(simple: &[Weight]) -> Result<TypeId> {
    let cm = cartan_matrix_of(simple);
    let sq: Vec<Q> = simple.iter().map(|a| a.dot(a)).collect();
    let n = simple.len();
    let mut comp = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        let mut nodes = vec![s];
        comp[s] = s;
        let mut i = 0;
        while i < nodes.len() {
            let u = nodes[i];
            for v in 0..n {
                if comp[v] == usize::MAX && cm[u][v] != 0 {
                    comp[v] = s;
                    nodes.push(v);
                }
            }
            i += 1;
        }
        nodes.sort();
        let t = classify_component(&cm, &nodes, &sq)?;
        let sub: Vec<Vec<i64>> = nodes.iter().map(|&i| nodes.iter().map(|&j| cm[i][j]).collect()).collect();
        let canon = cartan_matrix_of(&simple_roots_for(t));
        if !cartan_isomorphic(&sub, &canon) {
            return Err(Error::InvalidType(format!("{t}: diagram mismatch")));
        }
        out.push(t);
    }
    Ok(TypeId::new(out))
}

/// Integral root subsystem Δ(λ) with positive system ⟨λ,α∨⟩ > 0.
#[derive(Debug, Clone)]
pub struct IntegralSubsystem {
    pub roots: Vec<Weight>,
    pub positive: Vec<Weight>,
    pub simple: Vec<Weight>,
    pub type_id: TypeId,
}

pub fn integral_subsystem(rs: &RootSystem, lambda: &Weight) -> Result<IntegralSubsystem> {
    let mut roots = Vec::new();
    let mut positive = Vec::new();
    for r in &rs.roots {
        let p = pairing(lambda, r);
        if p.is_integer() {
            if p.is_zero() {
                return Err(Error::Degenerate(format!("{lambda} is orthogonal to {r}")));
            }
            if p.is_positive() {
                positive.push(r.clone());
            }
            roots.push(r.clone());
        }
    }
    let posset: BTreeSet<&Vec<Q>> = positive.iter().map(|r| &r.coords).collect();
    let mut simple = Vec::new();
    for r in &positive {
        let decomposable = positive
            .iter()
            .any(|a| a != r && posset.contains(&r.sub(a).coords));
        if !decomposable {
            simple.push(r.clone());
        }
    }
    let type_id = identify_type(&simple)?;
    Ok(IntegralSubsystem { roots, positive, simple, type_id })
}

/// `2(|Δ⁺| − |Δ⁺(λ)|)`.
pub fn gk_dimension(rs: &RootSystem, lambda: &Weight) -> Result<usize> {
    let sub = integral_subsystem(rs, lambda)?;
    Ok(2 * (rs.num_positive() - sub.positive.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn positive_counts() {
        for (k, r, n) in [('A', 3, 6), ('D', 4, 12), ('E', 8, 120), ('E', 6, 36), ('F', 4, 24), ('G', 2, 6), ('C', 3, 9)] {
            let rs = RootSystem::build(CartanKind::from_char(k).unwrap(), r).unwrap();
            assert_eq!(rs.num_positive(), n, "{k}{r}");
        }
    }

    #[test]
    fn fundamental_weights_dual() {
        for label in ["A4", "B3", "C3", "D5", "E6", "E7", "F4", "G2"] {
            let rs = RootSystem::parse(label).unwrap();
            for (i, w) in rs.fundamental_weights.iter().enumerate() {
                for (j, a) in rs.simple_roots.iter().enumerate() {
                    let p = pairing(w, a);
                    assert_eq!(p, if i == j { Q::one() } else { Q::zero() });
                }
            }
        }
    }

    #[test]
    fn lambda_examples() {
        let d4 = RootSystem::parse("D4").unwrap();
        assert_eq!(canonical_lambda(&d4), Weight::from_halves(&[3, 2, 1, 0]));
        let a1 = RootSystem::parse("A1").unwrap();
        assert_eq!(canonical_lambda(&a1), Weight::new(vec![qf(1, 4), qf(-1, 4)]));
        let b2 = RootSystem::parse("B2").unwrap();
        assert_eq!(canonical_lambda(&b2), Weight::from_halves(&[2, 1]));
        let f4 = RootSystem::parse("F4").unwrap();
        assert_eq!(canonical_lambda(&f4), Weight::new(vec![q(4), qf(3, 2), q(1), qf(1, 2)]));
        let sub = integral_subsystem(&f4, &canonical_lambda(&f4)).unwrap();
        assert_eq!(sub.type_id.to_string(), "C4");
        assert_eq!(sub.type_id.dual().to_string(), "B4");
        let at_half_rho = integral_subsystem(&f4, &f4.rho().scale(qf(1, 2))).unwrap();
        assert_eq!(at_half_rho.type_id.to_string(), "A1×B3");
        // for G2 it is the other way round
        let g2 = RootSystem::parse("G2").unwrap();
        let sub = integral_subsystem(&g2, &canonical_lambda(&g2)).unwrap();
        assert_eq!(sub.type_id.to_string(), "A1×A1");
        let dual = integral_subsystem(&g2, &g2.rho_check().scale(qf(1, 2))).unwrap();
        assert_eq!(dual.type_id.to_string(), "A1");
    }

    #[test]
    fn d4_integral_simple_roots() {
        let rs = RootSystem::parse("D4").unwrap();
        let sub = integral_subsystem(&rs, &canonical_lambda(&rs)).unwrap();
        let mut got: Vec<Weight> = sub.simple.clone();
        got.sort();
        let mut want = vec![
            Weight::e_pm(4, 1, 3, 1),
            Weight::e_pm(4, 1, 3, -1),
            Weight::e_pm(4, 2, 4, 1),
            Weight::e_pm(4, 2, 4, -1),
        ];
        want.sort();
        assert_eq!(got, want);
        assert_eq!(sub.type_id.to_string(), "A1×A1×A1×A1");
    }

    #[test]
    fn rho_is_fully_integral() {
        for label in ["A3", "B3", "C4", "D5", "G2", "F4", "E6"] {
            let rs = RootSystem::parse(label).unwrap();
            let sub = integral_subsystem(&rs, &rs.rho()).unwrap();
            assert_eq!(sub.roots.len(), rs.roots.len());
            assert_eq!(sub.type_id, TypeId::new(vec![rs.cartan_type]));
        }
    }

    #[test]
    fn normalization() {
        let t = TypeId::parse("D2×D1×B1×C2×D3").unwrap().normalized();
        assert_eq!(t.to_string(), "A1×A1×A1×A3×B2");
    }
}
