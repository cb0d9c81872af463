//! K-types of the small genuine representations: interlacing branching,
//! the row descriptors of the K-type tables for split Spin(n,n), the type A
//! families, outer automorphisms, lowest K-types and the (χ, O) grid.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::orbits::{orbit_from_table1, real_forms, RealForm, Table1Orbit};
use crate::params::count_star;
use crate::rd::{enumerate_rd, DynkinDiagram};
use crate::rootsys::{CartanKind, RootSystem};
use crate::{q, qf, Error, Result, Q};
use num_traits::Signed;

/// Highest weight of a K-type: one factor for type A, two for Spin(n)×Spin(n).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct KTypeVec {
    pub factors: Vec<Vec<Q>>,
}

impl KTypeVec {
    pub fn single(v: Vec<Q>) -> Self {
        KTypeVec { factors: vec![v] }
    }

    pub fn pair(a: Vec<Q>, b: Vec<Q>) -> Self {
        KTypeVec { factors: vec![a, b] }
    }

    fn doubled(&self) -> Vec<i64> {
        self.factors.iter().flatten().map(|x| (x * q(2)).to_integer()).collect()
    }

    /// Entries weakly decreasing, except possibly the sign of the last one,
    /// with uniform half-integrality inside each factor.
    pub fn is_dominant(&self) -> bool {
        self.factors.iter().all(|f| {
            let half = f.first().map(|x| !x.is_integer());
            let uniform = f.iter().all(|x| Some(!x.is_integer()) == half && (x * q(2)).is_integer());
            let n = f.len();
            let dec = (0..n.saturating_sub(1)).all(|i| {
                let next = if i + 1 == n - 1 { f[i + 1].abs() } else { f[i + 1] };
                f[i] >= next
            });
            uniform && dec
        })
    }

    pub fn norm_shifted(&self, rho_c: &[Q]) -> Q {
        self.factors.iter().flat_map(|f| f.iter().zip(rho_c).map(|(x, r)| (x + r * q(2)) * (x + r * q(2)))).sum()
    }
}

fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        format!("{}", x.to_integer())
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for KTypeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.factors.iter().map(|v| v.iter().map(fmt_q).collect::<Vec<_>>().join(",")).collect();
        write!(f, "({})", parts.join(";"))
    }
}

/// `λ₁ ≥ γ₁ ≥ ⋯ ≥ λ_n ≥ γ_n ≥ −λ_n`.
pub fn interlace(gamma: &[i64], lambda: &[i64]) -> Result<bool> {
    chain(gamma, lambda, false)
}

/// The chain against `λ' = (λ, 0)`: `λ₁ ≥ γ₁ ≥ ⋯ ≥ λ_n ≥ γ_n ≥ 0`.
pub fn interlace_prime(gamma: &[i64], lambda: &[i64]) -> Result<bool> {
    chain(gamma, lambda, true)
}

fn chain(gamma: &[i64], lambda: &[i64], prime: bool) -> Result<bool> {
    if gamma.len() != lambda.len() {
        return Err(Error::LengthMismatch(format!("{} vs {}", gamma.len(), lambda.len())));
    }
    let n = gamma.len();
    if n == 0 {
        return Ok(true);
    }
    let ok = (0..n).all(|i| lambda[i] >= gamma[i] && (i + 1 == n || gamma[i] >= lambda[i + 1]));
    let floor = if prime { 0 } else { -lambda[n - 1] };
    Ok(ok && gamma[n - 1] >= floor)
}

/// Weakly decreasing nonnegative integer vectors of length `m` with sum at
/// most `bound`.
pub fn dominant_integral(m: usize, bound: usize) -> Vec<Vec<i64>> {
    fn go(m: usize, left: i64, cap: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in 0..=cap.min(left) {
            cur.push(x);
            go(m, left - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, bound as i64, bound as i64, &mut Vec::new(), &mut out);
    out
}

/// All `γ` interlacing `λ` (or `λ'` when `prime`).
pub fn interlacing(lambda: &[i64], prime: bool) -> Vec<Vec<i64>> {
    let m = lambda.len();
    let mut out = vec![Vec::new()];
    for i in 0..m {
        let lo = if i + 1 < m {
            lambda[i + 1]
        } else if prime {
            0
        } else {
            -lambda[i]
        };
        out = out
            .into_iter()
            .flat_map(|g: Vec<i64>| {
                (lo..=lambda[i]).map(move |x| {
                    let mut h = g.clone();
                    h.push(x);
                    h
                })
            })
            .collect();
    }
    out
}

/// Outer automorphisms: `σ` flips the sign of the last entry of each
/// factor, `γ` swaps the two factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outer {
    Sigma,
    Gamma,
}

pub fn outer_act(g: Outer, k: &KTypeVec) -> Result<KTypeVec> {
    match g {
        Outer::Sigma => Ok(KTypeVec { factors: k.factors.iter().map(|f| sigma(f)).collect() }),
        Outer::Gamma if k.factors.len() == 2 => Ok(KTypeVec::pair(k.factors[1].clone(), k.factors[0].clone())),
        Outer::Gamma => Err(Error::LengthMismatch("γ acts on pairs".into())),
    }
}

fn sigma(v: &[Q]) -> Vec<Q> {
    let mut w = v.to_vec();
    if let Some(x) = w.last_mut() {
        *x = -*x;
    }
    w
}

/// One side of a summand: the free weight `λ` or the branched weight `γ`,
/// shifted by a constant vector and possibly twisted by `σ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Slot {
    Lam { shift_halves: i64, sigma: bool },
    Gam { shift_halves: i64, sigma: bool },
}

pub const fn lam(h: i64) -> Slot {
    Slot::Lam { shift_halves: h, sigma: false }
}
pub const fn slam(h: i64) -> Slot {
    Slot::Lam { shift_halves: h, sigma: true }
}
pub const fn gam(h: i64) -> Slot {
    Slot::Gam { shift_halves: h, sigma: false }
}
pub const fn sgam(h: i64) -> Slot {
    Slot::Gam { shift_halves: h, sigma: true }
}

impl Slot {
    fn eval(&self, lambda: &[i64], gamma: &[i64]) -> Vec<Q> {
        let (src, h, s) = match *self {
            Slot::Lam { shift_halves, sigma } => (lambda, shift_halves, sigma),
            Slot::Gam { shift_halves, sigma } => (gamma, shift_halves, sigma),
        };
        let v: Vec<Q> = src.iter().map(|&x| q(x) + qf(h, 2)).collect();
        if s {
            sigma(&v)
        } else {
            v
        }
    }
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (c, h, s) = match *self {
            Slot::Lam { shift_halves, sigma } => ('λ', shift_halves, sigma),
            Slot::Gam { shift_halves, sigma } => ('γ', shift_halves, sigma),
        };
        let inner = match h {
            0 => format!("{c}"),
            1 => format!("{c}+1/2"),
            _ => format!("{c}+{}", fmt_q(&qf(h, 2))),
        };
        if s {
            write!(f, "σ({inner})")
        } else {
            write!(f, "{inner}")
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn holds(self, lambda: &[i64], gamma: &[i64]) -> bool {
        let s: i64 = lambda.iter().chain(gamma).sum();
        (s.rem_euclid(2) == 0) == (self == Parity::Even)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Summand {
    pub left: Slot,
    pub right: Slot,
    pub parity: Parity,
}

const fn sm(left: Slot, right: Slot, parity: Parity) -> Summand {
    Summand { left, right, parity }
}

/// A printed vector shape per factor: first entry, remaining entries, and
/// whether the last one is negated. Entries in halves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pat {
    pub lead: i64,
    pub rest: i64,
    pub neg: bool,
}

const fn pat(lead: i64, rest: i64, neg: bool) -> Pat {
    Pat { lead, rest, neg }
}

impl Pat {
    pub fn vector(&self, m: usize) -> Vec<Q> {
        let mut v: Vec<Q> = (0..m).map(|i| qf(if i == 0 { self.lead } else { self.rest }, 2)).collect();
        if self.neg {
            v = sigma(&v);
        }
        v
    }
}

fn pair_vec(p: (Pat, Pat), m: usize) -> KTypeVec {
    KTypeVec::pair(p.0.vector(m), p.1.vector(m))
}

/// One representation of a K-type table: its names for `m` even and odd,
/// its summands and the printed lowest K-type.
#[derive(Debug, Clone)]
pub struct RepRow {
    pub source: &'static str,
    pub names: (&'static str, &'static str),
    pub summands: Vec<Summand>,
    pub printed_lkt: (Pat, Pat),
}

impl RepRow {
    pub fn name(&self, m: usize) -> &'static str {
        if m % 2 == 0 {
            self.names.0
        } else {
            self.names.1
        }
    }
}

/// Shift `½` in halves.
pub const H: i64 = 1;
const ZERO: Pat = pat(0, 0, false);
const HALF: Pat = pat(1, 1, false);
const HALF_S: Pat = pat(1, 1, true);
const ONE: Pat = pat(2, 2, false);
const ONE_S: Pat = pat(2, 2, true);
const LEAD: Pat = pat(3, 1, false);
const LEAD_S: Pat = pat(3, 1, true);

/// Row descriptors of the K-type tables of Spin(n,n).
pub fn d_rows(n: usize) -> Result<Vec<RepRow>> {
    use Parity::*;
    if n < 4 {
        return Err(Error::OutOfRange(format!("D{n}")));
    }
    let r = |source, names, summands: Vec<Summand>, printed_lkt| RepRow { source, names, summands, printed_lkt };
    if n % 2 == 1 {
        return Ok(vec![
            r("Γ", ("Sh2", "Sh2"), vec![sm(gam(0), lam(H), Even)], (ZERO, HALF)),
            r("Γ", ("π1", "π1"), vec![sm(gam(0), lam(H), Odd)], (ZERO, LEAD)),
            r("Γ", ("Sh1", "Sh1"), vec![sm(lam(H), gam(0), Even)], (HALF, ZERO)),
            r("Γ", ("π2", "π2"), vec![sm(lam(H), gam(0), Odd)], (LEAD, ZERO)),
        ]);
    }
    Ok(vec![
        r("Γ1", ("Sh3", "Sh3"), vec![sm(gam(0), lam(H), Even)], (ZERO, HALF)),
        r("Γ1", ("π4", "π4"), vec![sm(gam(0), lam(H), Odd)], (ZERO, LEAD)),
        r("Γ1", ("Sh1", "Sh1"), vec![sm(lam(H), gam(0), Even)], (HALF, ZERO)),
        r("Γ1", ("π2", "π2"), vec![sm(lam(H), gam(0), Odd)], (LEAD, ZERO)),
        r("Γ2", ("Sh4", "Sh4"), vec![sm(gam(0), slam(H), Even)], (ZERO, HALF_S)),
        r("Γ2", ("π3", "π3"), vec![sm(gam(0), slam(H), Odd)], (ZERO, LEAD_S)),
        r("Γ2", ("Sh2", "Sh2"), vec![sm(slam(H), gam(0), Even)], (HALF_S, ZERO)),
        r("Γ2", ("π1", "π1"), vec![sm(slam(H), gam(0), Odd)], (LEAD_S, ZERO)),
        r("Γ3", ("δ1", "δ2"), vec![sm(gam(H), lam(2), Even), sm(sgam(H), lam(2), Odd)], (HALF, ONE)),
        r("Γ3", ("τ2", "τ1"), vec![sm(gam(H), lam(2), Odd), sm(sgam(H), lam(2), Even)], (HALF_S, ONE)),
        r("Γ3", ("δ3", "δ4"), vec![sm(lam(2), gam(H), Even), sm(lam(2), sgam(H), Odd)], (ONE, HALF)),
        r("Γ3", ("τ4", "τ3"), vec![sm(lam(2), gam(H), Odd), sm(lam(2), sgam(H), Even)], (ONE, HALF_S)),
        r("Γ4", ("τ1", "τ2"), vec![sm(gam(H), slam(2), Even), sm(sgam(H), slam(2), Odd)], (HALF, ONE_S)),
        r("Γ4", ("δ2", "δ1"), vec![sm(gam(H), slam(2), Odd), sm(sgam(H), slam(2), Even)], (HALF_S, ONE_S)),
        r("Γ4", ("τ3", "τ4"), vec![sm(slam(2), gam(H), Even), sm(slam(2), sgam(H), Odd)], (ONE_S, HALF)),
        r("Γ4", ("δ4", "δ3"), vec![sm(slam(2), gam(H), Odd), sm(slam(2), sgam(H), Even)], (ONE_S, HALF_S)),
    ])
}

/// The printed (χ, O) grids: names and vectors by cell.
pub fn printed_grid(n: usize) -> Vec<Vec<(&'static str, (Pat, Pat))>> {
    if n % 2 == 1 {
        return vec![
            vec![("Sh1", (HALF, ZERO)), ("π1", (LEAD, ZERO))],
            vec![("π2", (ZERO, LEAD)), ("Sh2", (ZERO, HALF))],
        ];
    }
    vec![
        vec![("Sh1", (HALF, ZERO)), ("π1", (LEAD_S, ZERO)), ("δ1", (HALF, ONE)), ("τ1", (HALF, ONE_S))],
        vec![("π2", (LEAD, ZERO)), ("Sh2", (HALF_S, ZERO)), ("τ2", (HALF_S, ONE)), ("δ2", (HALF_S, ONE_S))],
        vec![("δ3", (ONE, HALF)), ("τ3", (ONE_S, HALF)), ("Sh3", (ZERO, HALF)), ("π3", (ZERO, LEAD_S))],
        vec![("τ4", (ONE, HALF_S)), ("δ4", (ONE_S, HALF_S)), ("π4", (ZERO, LEAD)), ("Sh4", (ZERO, HALF_S))],
    ]
}

/// K-types of one row up to `Σλ_i ≤ bound`.
pub fn family(row: &RepRow, n: usize, bound: usize) -> BTreeSet<KTypeVec> {
    let m = n / 2;
    let prime = n % 2 == 1;
    let mut out = BTreeSet::new();
    for lambda in dominant_integral(m, bound) {
        for gamma in interlacing(&lambda, prime) {
            for s in &row.summands {
                if s.parity.holds(&lambda, &gamma) {
                    out.insert(KTypeVec::pair(s.left.eval(&lambda, &gamma), s.right.eval(&lambda, &gamma)));
                }
            }
        }
    }
    out
}

/// All `(left; right)` K-types of one restriction pattern, split by the
/// parity of `Σ(λ_i + γ_i)`.
pub fn restrict_split(left: Slot, right: Slot, n: usize, bound: usize) -> (Vec<KTypeVec>, Vec<KTypeVec>) {
    let m = n / 2;
    let prime = n % 2 == 1;
    let mut even = BTreeSet::new();
    let mut odd = BTreeSet::new();
    for lambda in dominant_integral(m, bound) {
        for gamma in interlacing(&lambda, prime) {
            let k = KTypeVec::pair(left.eval(&lambda, &gamma), right.eval(&lambda, &gamma));
            if Parity::Even.holds(&lambda, &gamma) {
                even.insert(k);
            } else {
                odd.insert(k);
            }
        }
    }
    (even.into_iter().collect(), odd.into_iter().collect())
}

/// `ρ_c` of one Spin factor: `(m−1, …, 0)` for Spin(2m), `(m−½, …, ½)` for
/// Spin(2m+1).
pub fn rho_c(n: usize) -> Vec<Q> {
    let m = n / 2;
    (0..m).map(|i| if n % 2 == 0 { q((m - 1 - i) as i64) } else { qf(2 * (m - i) as i64 - 1, 2) }).collect()
}

/// The K-type minimizing `|μ + 2ρ_c|²`.
pub fn lowest(set: &BTreeSet<KTypeVec>, rho: &[Q]) -> Result<KTypeVec> {
    let best = set.iter().map(|k| k.norm_shifted(rho)).min().ok_or(Error::Degenerate("empty family".into()))?;
    let mut it = set.iter().filter(|k| k.norm_shifted(rho) == best);
    let k = it.next().cloned().unwrap();
    if it.next().is_some() {
        return Err(Error::NotUnique(format!("lowest K-type near {k}")));
    }
    Ok(k)
}

/// Type A representations at `ρ/2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ARep {
    Sh1,
    Sh2,
    Pi1,
    Pi2,
}

impl ARep {
    pub fn name(self) -> &'static str {
        match self {
            ARep::Sh1 => "Sh1",
            ARep::Sh2 => "Sh2",
            ARep::Pi1 => "π1",
            ARep::Pi2 => "π2",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "Sh1" => ARep::Sh1,
            "Sh2" => ARep::Sh2,
            "π1" | "pi1" => ARep::Pi1,
            "π2" | "pi2" => ARep::Pi2,
            _ => return Err(Error::InvalidType(s.into())),
        })
    }

    pub fn all() -> [ARep; 4] {
        [ARep::Sh1, ARep::Sh2, ARep::Pi1, ARep::Pi2]
    }
}

/// K-types `(c + 2a_1, …, ±(c + 2a_m))` with `Σa_i ≤ bound`. For the π's the
/// sign of the last entry depends on the parity of `m` as listed.
pub fn ktypes_a(rep: ARep, n: usize, bound: usize) -> Result<Vec<KTypeVec>> {
    if n % 2 == 1 && rep != ARep::Sh1 {
        return Err(Error::Unsupported(format!("{} needs even n", rep.name())));
    }
    let m = n / 2;
    let (c, neg) = match rep {
        ARep::Sh1 => (1, false),
        ARep::Sh2 => (1, true),
        ARep::Pi1 => (3, m % 2 == 1),
        ARep::Pi2 => (3, m % 2 == 0),
    };
    Ok(dominant_integral(m, bound)
        .into_iter()
        .map(|a| {
            let v: Vec<Q> = a.iter().map(|&x| qf(c, 2) + q(2 * x)).collect();
            KTypeVec::single(if neg { sigma(&v) } else { v })
        })
        .collect())
}

/// The printed lowest K-types of the type A tables, `m` odd (first entries
/// then last).
pub fn printed_a_lowest(rep: ARep, m: usize) -> KTypeVec {
    let (c, neg) = match rep {
        ARep::Sh1 => (1, false),
        ARep::Sh2 => (1, true),
        ARep::Pi1 => (3, m % 2 == 1),
        ARep::Pi2 => (3, m % 2 == 0),
    };
    let v = vec![qf(c, 2); m];
    KTypeVec::single(if neg { sigma(&v) } else { v })
}

/// Every point of `a` lies within `tol_halves/2` (sup norm) of `b`.
fn near(a: &[Vec<i64>], b: &[Vec<i64>], tol_halves: i64) -> bool {
    a.iter().all(|x| b.iter().any(|y| x.iter().zip(y).all(|(u, v)| (u - v).abs() <= tol_halves)))
}

/// Two families have the same asymptotic K-types when each lies within a
/// bounded distance of the other. The larger family is truncated at a
/// slightly larger bound to avoid edge effects.
fn same_asymptotics(
    a: &dyn Fn(usize) -> Vec<KTypeVec>,
    b: &dyn Fn(usize) -> Vec<KTypeVec>,
    bound: usize,
) -> bool {
    let d = |f: &dyn Fn(usize) -> Vec<KTypeVec>, k| f(k).iter().map(KTypeVec::doubled).collect::<Vec<_>>();
    let (a0, b0) = (d(a, bound), d(b, bound));
    let (a1, b1) = (d(a, bound + 2), d(b, bound + 2));
    near(&a0, &b1, 3) && near(&b0, &a1, 3)
}

/// One cell entry of the (χ, O) grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEntry {
    pub name: String,
    pub chi: usize,
    pub orbit: usize,
    pub lowest: KTypeVec,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairsGrid {
    pub kind: CartanKind,
    pub n: usize,
    pub chars: usize,
    pub orbits: usize,
    pub entries: Vec<PairEntry>,
}

impl PairsGrid {
    pub fn cell(&self, chi: usize, orbit: usize) -> Vec<&str> {
        self.entries.iter().filter(|e| e.chi == chi && e.orbit == orbit).map(|e| e.name.as_str()).collect()
    }

    pub fn is_bijective(&self) -> bool {
        (1..=self.chars).all(|c| (1..=self.orbits).all(|o| self.cell(c, o).len() == 1))
    }

    pub fn lowest_of(&self, name: &str) -> Option<&KTypeVec> {
        self.entries.iter().find(|e| e.name == name).map(|e| &e.lowest)
    }
}

fn subscript(name: &str) -> usize {
    name.chars().last().and_then(|c| c.to_digit(10)).unwrap_or(1) as usize
}

/// Place every representation: `χ` from its subscript, `O_j` from the
/// Shimura representation `Sh_j` with the same asymptotic K-types.
pub fn pairs(kind: CartanKind, n: usize, bound: usize) -> Result<PairsGrid> {
    match kind {
        CartanKind::A => pairs_a(n, bound),
        CartanKind::D => pairs_d(n, bound),
        _ => Err(Error::Unsupported("pairs exist for types A and D".into())),
    }
}

fn pairs_a(n: usize, bound: usize) -> Result<PairsGrid> {
    if n < 2 {
        return Err(Error::OutOfRange(format!("A{}", n as i64 - 1)));
    }
    let m = n / 2;
    let bound = bound.max(m);
    let rho = rho_c(2 * m);
    let reps: Vec<ARep> = if n % 2 == 1 { vec![ARep::Sh1] } else { ARep::all().to_vec() };
    let shimura: Vec<ARep> = if n % 2 == 1 { vec![ARep::Sh1] } else { vec![ARep::Sh1, ARep::Sh2] };
    let mut entries = Vec::new();
    for &r in &reps {
        let fam = |b: usize| ktypes_a(r, n, b).unwrap_or_default();
        let orbit = locate(&shimura, |s| {
            let g = |b: usize| ktypes_a(*s, n, b).unwrap_or_default();
            same_asymptotics(&fam, &g, bound)
        })?;
        let set: BTreeSet<KTypeVec> = fam(bound).into_iter().collect();
        entries.push(PairEntry { name: r.name().to_string(), chi: subscript(r.name()), orbit, lowest: lowest(&set, &rho)? });
    }
    Ok(PairsGrid { kind: CartanKind::A, n, chars: shimura.len(), orbits: shimura.len(), entries })
}

fn locate<T>(candidates: &[T], mut matches: impl FnMut(&T) -> bool) -> Result<usize> {
    let hits: Vec<usize> = (0..candidates.len()).filter(|&i| matches(&candidates[i])).collect();
    match hits.as_slice() {
        [i] => Ok(i + 1),
        _ => Err(Error::NotUnique(format!("{} asymptotic matches", hits.len()))),
    }
}

fn pairs_d(n: usize, bound: usize) -> Result<PairsGrid> {
    let rows = d_rows(n)?;
    let m = n / 2;
    let bound = bound.max(m);
    let rho = rho_c(n);
    let cols = if n % 2 == 0 { 4 } else { 2 };
    let mut shimura: Vec<&RepRow> = Vec::new();
    for j in 1..=cols {
        let want = format!("Sh{j}");
        shimura.push(rows.iter().find(|r| r.name(m) == want).ok_or(Error::Degenerate(want))?);
    }
    let mut entries = Vec::new();
    for row in &rows {
        let fam = |b: usize| family(row, n, b).into_iter().collect::<Vec<_>>();
        let orbit = locate(&shimura, |s| {
            let g = |b: usize| family(s, n, b).into_iter().collect::<Vec<_>>();
            same_asymptotics(&fam, &g, bound)
        })?;
        let name = row.name(m);
        entries.push(PairEntry {
            name: name.to_string(),
            chi: subscript(name),
            orbit,
            lowest: lowest(&family(row, n, bound), &rho)?,
        });
    }
    entries.sort_by_key(|e| (e.chi, e.orbit));
    Ok(PairsGrid { kind: CartanKind::D, n, chars: cols, orbits: cols, entries })
}

/// Comparison of a computed lowest K-type with the two printed sources.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LowestCheck {
    pub name: String,
    pub computed: KTypeVec,
    pub row: KTypeVec,
    pub grid: KTypeVec,
    pub grid_cell: (usize, usize),
    pub computed_cell: (usize, usize),
}

impl LowestCheck {
    pub fn matches_row(&self) -> bool {
        self.computed == self.row
    }

    pub fn matches_grid(&self) -> bool {
        self.computed == self.grid && self.grid_cell == self.computed_cell
    }
}

pub fn lowest_checks(n: usize, bound: usize) -> Result<Vec<LowestCheck>> {
    let m = n / 2;
    let grid = pairs_d(n, bound)?;
    let printed = printed_grid(n);
    let rows = d_rows(n)?;
    let mut out = Vec::new();
    for (ci, line) in printed.iter().enumerate() {
        for (oj, (name, pv)) in line.iter().enumerate() {
            let e = grid.entries.iter().find(|e| e.name == *name).ok_or(Error::Degenerate((*name).into()))?;
            let row = rows.iter().find(|r| r.name(m) == *name).unwrap();
            out.push(LowestCheck {
                name: (*name).into(),
                computed: e.lowest.clone(),
                row: pair_vec(row.printed_lkt, m),
                grid: pair_vec(*pv, m),
                grid_cell: (ci + 1, oj + 1),
                computed_cell: (e.chi, e.orbit),
            });
        }
    }
    Ok(out)
}

/// `σ` and `γ` map every lowest K-type of Spin(2m,2m) to another one.
pub fn outer_permutes(grid: &PairsGrid) -> Result<bool> {
    if grid.kind != CartanKind::D || grid.n % 2 == 1 {
        return Err(Error::Unsupported("σ and γ are checked on Spin(2m)×Spin(2m)".into()));
    }
    let all: BTreeSet<&KTypeVec> = grid.entries.iter().map(|e| &e.lowest).collect();
    for g in [Outer::Sigma, Outer::Gamma] {
        for e in &grid.entries {
            if !all.contains(&outer_act(g, &e.lowest)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Class of a Spin(2m)×Spin(2m) K-type seen by the center: half-integrality
/// of each factor and the total sum mod 2.
pub fn central_signature(k: &KTypeVec) -> (Vec<bool>, Q) {
    let halves = k.factors.iter().map(|f| f.first().is_some_and(|x| !x.is_integer())).collect();
    let s: Q = k.factors.iter().flatten().sum();
    let r = s - (s / q(2)).floor() * q(2);
    (halves, r)
}

/// Representations sharing a subscript share the central signature of
/// their lowest K-types, and distinct subscripts have distinct ones.
pub fn central_consistent(grid: &PairsGrid) -> Result<bool> {
    if grid.kind != CartanKind::D || grid.n % 2 == 1 {
        return Err(Error::Unsupported("central signature is defined for Spin(2m)×Spin(2m)".into()));
    }
    let mut by_chi: BTreeMap<usize, BTreeSet<(Vec<bool>, Q)>> = BTreeMap::new();
    for e in &grid.entries {
        by_chi.entry(e.chi).or_default().insert(central_signature(&e.lowest));
    }
    let distinct: BTreeSet<_> = by_chi.values().flatten().collect();
    Ok(by_chi.values().all(|s| s.len() == 1) && distinct.len() == by_chi.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct XiCounts {
    pub pi_s: usize,
    pub p_o: usize,
    pub bijective: bool,
}

/// `|Π^s| = count_star·|R_D|`, `|P_O| = |R_D|·#real forms of O`, and whether
/// the K-type placement fills every cell exactly once.
pub fn xi_counts(kind: CartanKind, n: usize) -> Result<XiCounts> {
    let (rs, rf) = match kind {
        CartanKind::A if n >= 2 => (RootSystem::build(kind, n - 1)?, RealForm::SlR(n)),
        CartanKind::D if n >= 4 => (RootSystem::build(kind, n)?, RealForm::So(n, n)),
        _ => return Err(Error::OutOfRange(format!("{}{n}", kind.letter()))),
    };
    let rd = enumerate_rd(&DynkinDiagram::of(&rs)?).len();
    let star = count_star(kind, n)?;
    let Table1Orbit::Classical(o) = orbit_from_table1(rs.cartan_type)? else {
        return Err(Error::Degenerate("exceptional orbit".into()));
    };
    let forms = real_forms(&o, rf)?.len();
    let grid = pairs(kind, n, 6)?;
    Ok(XiCounts { pi_s: star * rd, p_o: rd * forms, bijective: grid.is_bijective() && grid.entries.len() == rd * forms })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interlacing_examples() {
        assert!(interlace(&[1, 0, 0, 0], &[1, 0, 0, 0]).unwrap());
        assert!(interlace(&[1, 0, 0, 0], &[1, 1, 0, 0]).unwrap());
        assert!(!interlace(&[1, 1, 0, 0], &[1, 0, 0, 0]).unwrap());
        assert!(interlace(&[2, -1], &[2, 1]).unwrap());
        assert!(!interlace_prime(&[2, -1], &[2, 1]).unwrap());
        assert!(interlace(&[1], &[1, 0]).is_err());
        assert_eq!(interlacing(&[1, 1], false).len(), 3);
        assert_eq!(interlacing(&[1, 1], true).len(), 2);
    }

    #[test]
    fn outer() {
        let k = KTypeVec::pair(vec![qf(1, 2), qf(1, 2)], vec![q(0), q(0)]);
        let s = outer_act(Outer::Sigma, &k).unwrap();
        assert_eq!(s, KTypeVec::pair(vec![qf(1, 2), qf(-1, 2)], vec![q(0), q(0)]));
        assert_eq!(outer_act(Outer::Sigma, &s).unwrap(), k);
        let g = outer_act(Outer::Gamma, &k).unwrap();
        assert_eq!(g.factors, vec![vec![q(0), q(0)], vec![qf(1, 2), qf(1, 2)]]);
    }

    #[test]
    fn type_a() {
        let sh = ktypes_a(ARep::Sh1, 4, 0).unwrap();
        assert_eq!(sh, vec![KTypeVec::single(vec![qf(1, 2), qf(1, 2)])]);
        let p2 = ktypes_a(ARep::Pi2, 6, 0).unwrap();
        assert_eq!(p2[0], KTypeVec::single(vec![qf(3, 2); 3]));
        let p1 = ktypes_a(ARep::Pi1, 8, 0).unwrap();
        assert_eq!(p1[0], KTypeVec::single(vec![qf(3, 2); 4]));
        assert!(ktypes_a(ARep::Pi1, 5, 2).is_err());
        assert!(ktypes_a(ARep::Sh1, 5, 2).unwrap().iter().all(KTypeVec::is_dominant));
    }

    #[test]
    fn split_of_first_row() {
        let (even, odd) = restrict_split(gam(0), lam(H), 4, 4);
        let lkt = KTypeVec::pair(vec![q(0), q(0)], vec![qf(1, 2), qf(1, 2)]);
        assert!(even.contains(&lkt));
        let rho = rho_c(4);
        let odd_set: BTreeSet<KTypeVec> = odd.iter().cloned().collect();
        assert_eq!(lowest(&odd_set, &rho).unwrap(), KTypeVec::pair(vec![q(0), q(0)], vec![qf(3, 2), qf(1, 2)]));
        assert!(even.iter().all(|k| !odd.contains(k)));
    }

    #[test]
    fn spin44_grid() {
        let g = pairs(CartanKind::D, 4, 6).unwrap();
        assert_eq!(g.entries.len(), 16);
        assert!(g.is_bijective());
        for c in lowest_checks(4, 6).unwrap() {
            assert!(c.matches_row() && c.matches_grid(), "{c:?}");
        }
        assert!(outer_permutes(&g).unwrap());
        assert!(central_consistent(&g).unwrap());
    }

    #[test]
    fn xi() {
        assert_eq!(xi_counts(CartanKind::D, 4).unwrap(), XiCounts { pi_s: 16, p_o: 16, bijective: true });
        assert_eq!(xi_counts(CartanKind::A, 8).unwrap(), XiCounts { pi_s: 4, p_o: 4, bijective: false });
        assert_eq!(xi_counts(CartanKind::A, 5).unwrap(), XiCounts { pi_s: 1, p_o: 1, bijective: true });
        assert!(xi_counts(CartanKind::A, 6).unwrap().bijective);
    }
}

