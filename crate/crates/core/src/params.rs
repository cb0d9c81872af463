//! Parameter skeletons for split groups of type A and D: Cayley-transformed
//! subsets of a fixed orthogonal set of nonintegral roots, the induced
//! involution, root typing, conditions (R) and (C), the s_α decomposition
//! and the survivor counts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::{identity, mat_mul, Mat};
use crate::rootsys::{pairing, CartanKind, RootSystem, Weight};
use crate::weyl::{product_of_set, reflection, WeylElement};
use crate::{qf, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootType {
    Real,
    Imaginary,
    Complex,
}

#[derive(Debug, Clone)]
pub struct ParamScheme {
    pub rs: RootSystem,
    pub base: Vec<Weight>,
    /// Indices into `base` of the Cayley-transformed roots.
    pub transformed: Vec<usize>,
    pub theta: WeylElement,
}

/// `α_k = e_{2k−1} − e_{2k}` (and `β_k = e_{2k−1} + e_{2k}` for type D).
pub fn base_set(kind: CartanKind, n: usize) -> Result<Vec<Weight>> {
    let mut out = Vec::new();
    for k in 1..=n / 2 {
        out.push(Weight::e_pm(n, 2 * k - 1, 2 * k, -1));
        if kind == CartanKind::D {
            out.push(Weight::e_pm(n, 2 * k - 1, 2 * k, 1));
        }
    }
    match kind {
        CartanKind::A | CartanKind::D => Ok(out),
        _ => Err(Error::Unsupported("parameter schemes exist for types A and D".into())),
    }
}

/// Name of a base root, `α2` or `β1`.
pub fn base_name(kind: CartanKind, i: usize) -> String {
    if kind == CartanKind::A {
        format!("α{}", i + 1)
    } else {
        format!("{}{}", if i % 2 == 0 { 'α' } else { 'β' }, i / 2 + 1)
    }
}

fn system(kind: CartanKind, n: usize) -> Result<RootSystem> {
    match kind {
        CartanKind::A => RootSystem::build(kind, n - 1),
        _ => RootSystem::build(kind, n),
    }
}

impl ParamScheme {
    /// `n` counts coordinates: `A_{n−1}` or `D_n`.
    pub fn new(kind: CartanKind, n: usize, transformed: &[usize]) -> Result<Self> {
        let rs = system(kind, n)?;
        let base = base_set(kind, n)?;
        let mut c: Vec<usize> = transformed.to_vec();
        c.sort_unstable();
        c.dedup();
        if c.iter().any(|&i| i >= base.len()) {
            return Err(Error::OutOfRange(format!("base index in {transformed:?}")));
        }
        let roots: Vec<Weight> = c.iter().map(|&i| base[i].clone()).collect();
        let w = product_of_set(&rs, &roots)?;
        let neg: Mat = identity(n).into_iter().map(|r| r.into_iter().map(|x| -x).collect()).collect();
        let theta = WeylElement { matrix: mat_mul(&w.matrix, &neg), word: None };
        Ok(ParamScheme { rs, base, transformed: c, theta })
    }

    pub fn kind(&self) -> CartanKind {
        self.rs.cartan_type.kind
    }

    pub fn n(&self) -> usize {
        self.rs.ambient_dim
    }

    /// Cayley transform through a real root: `θ ↦ s_β ∘ θ`.
    pub fn cayley(&self, beta: &Weight) -> Result<ParamScheme> {
        if root_type(self, beta) != RootType::Real {
            return Err(Error::Unsupported(format!("{beta} is not real")));
        }
        let s = reflection(&self.rs, beta)?;
        let mut out = self.clone();
        out.theta = s.compose(&self.theta);
        out.theta.word = None;
        if let Some(i) = self.base.iter().position(|b| b == beta) {
            out.transformed.push(i);
            out.transformed.sort_unstable();
        }
        Ok(out)
    }

    pub fn label(&self) -> String {
        let names: Vec<String> = self.transformed.iter().map(|&i| base_name(self.kind(), i)).collect();
        format!("{{{}}}", names.join(","))
    }
}

pub fn root_type(p: &ParamScheme, a: &Weight) -> RootType {
    let t = p.theta.apply(a);
    if t == *a {
        RootType::Imaginary
    } else if t == a.neg() {
        RootType::Real
    } else {
        RootType::Complex
    }
}

/// Integral roots at `ρ/2`.
pub fn integral_roots(rs: &RootSystem) -> Vec<Weight> {
    let half = rs.rho().scale(qf(1, 2));
    rs.roots.iter().filter(|a| pairing(&half, a).is_integer()).cloned().collect()
}

pub fn condition_r(p: &ParamScheme, integral: &[Weight]) -> bool {
    integral.iter().any(|a| root_type(p, a) == RootType::Real)
}

/// Indices `(p, q, r, s)` (0-based) of a quadruple witnessing (C), if any:
/// `e_p ± e_q` both real or both imaginary, one of `e_r ± e_s` real and the
/// other imaginary, all four nonintegral at `ρ/2`.
pub fn condition_c_witness(p: &ParamScheme) -> Result<Option<(usize, usize, usize, usize)>> {
    if p.kind() != CartanKind::D {
        return Err(Error::Unsupported("condition (C) is defined for type D".into()));
    }
    let n = p.n();
    let half = p.rs.rho().scale(qf(1, 2));
    let pair = |i: usize, j: usize| -> Option<(RootType, RootType)> {
        let plus = Weight::e_pm(n, i + 1, j + 1, 1);
        let minus = Weight::e_pm(n, i + 1, j + 1, -1);
        if pairing(&half, &plus).is_integer() || pairing(&half, &minus).is_integer() {
            return None;
        }
        Some((root_type(p, &plus), root_type(p, &minus)))
    };
    use RootType::*;
    for r in 0..n {
        for s in r + 1..n {
            let Some(rs_types) = pair(r, s) else { continue };
            if !matches!(rs_types, (Real, Imaginary) | (Imaginary, Real)) {
                continue;
            }
            for a in 0..n {
                for b in a + 1..n {
                    if [a, b].iter().any(|x| *x == r || *x == s) {
                        continue;
                    }
                    if let Some(t) = pair(a, b) {
                        if matches!(t, (Real, Real) | (Imaginary, Imaginary)) {
                            return Ok(Some((a, b, r, s)));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

pub fn condition_c(p: &ParamScheme) -> Result<bool> {
    Ok(condition_c_witness(p)?.is_some())
}

/// Target root of the decomposition: `e_{n−3}+e_{n−1}` for even `n`,
/// `e_{n−2}+e_n` for odd `n`.
pub fn salpha_target(n: usize) -> Result<Weight> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("n = {n} < 4")));
    }
    Ok(if n % 2 == 0 { Weight::e_pm(n, n - 3, n - 1, 1) } else { Weight::e_pm(n, n - 2, n, 1) })
}

fn root_ij(n: usize, i: usize, j: usize, s: i64) -> Weight {
    Weight::e_pm(n, i, j, s)
}

/// The roots `φ_j(α_j)` met along the decomposition of `s_α`.
pub fn salpha_word(n: usize) -> Result<Vec<Weight>> {
    salpha_target(n)?;
    let r = |i: usize, j: usize, s: i64| root_ij(n, i, j, s);
    Ok(if n % 2 == 0 {
        alloc::vec![
            r(n - 3, n - 2, 1),
            r(n - 3, n, 1),
            r(n - 3, n, -1),
            r(n - 2, n - 1, 1),
            r(n - 3, n - 1, 1),
            r(n - 3, n - 2, -1),
            r(n - 1, n, 1),
            r(n - 1, n, -1),
            r(n - 1, n - 2, -1),
        ]
    } else {
        alloc::vec![
            r(n, n - 2, -1),
            r(n - 3, n, 1),
            r(n - 3, n - 2, 1),
            r(n - 1, n, 1),
            r(n, n - 1, -1),
            r(n - 2, n, 1),
            r(n - 2, n - 1, 1),
            r(n - 2, n - 1, -1),
            r(n, n - 3, -1),
            r(n - 2, n - 3, -1),
            r(n - 2, n, -1),
        ]
    })
}

/// The reflections of the decomposition of `s_α` into reflections in
/// integral roots, in the order they are written.
pub fn salpha_reflections(n: usize) -> Result<Vec<Weight>> {
    salpha_target(n)?;
    let s = |i: usize, j: usize| root_ij(n, i, j, -1);
    let sb = |i: usize, j: usize| root_ij(n, i, j, 1);
    Ok(if n % 2 == 0 {
        alloc::vec![
            s(n - 1, n - 2),
            s(n - 2, n),
            sb(n - 2, n),
            s(n - 1, n - 3),
            s(n - 1, n - 2),
            s(n - 1, n - 3),
            sb(n - 2, n),
            s(n - 2, n),
            s(n - 1, n - 2),
        ]
    } else {
        alloc::vec![
            s(n - 2, n),
            s(n, n - 3),
            s(n - 2, n),
            s(n - 1, n - 3),
            sb(n - 1, n - 3),
            s(n, n - 3),
            sb(n - 3, n - 1),
            s(n - 1, n - 3),
            s(n - 2, n),
            s(n, n - 3),
            s(n - 2, n),
        ]
    })
}

/// Product of reflections in the listed roots, leftmost outermost.
pub fn reflection_product(rs: &RootSystem, roots: &[Weight]) -> Result<WeylElement> {
    let mut w = WeylElement::identity(rs.ambient_dim);
    for a in roots {
        w = w.compose(&reflection(rs, a)?);
    }
    Ok(w)
}

/// Both lists multiply to `s_α`, in either order.
pub fn check_salpha(n: usize) -> Result<bool> {
    let rs = RootSystem::build(CartanKind::D, n)?;
    let target = reflection(&rs, &salpha_target(n)?)?;
    let mut ok = true;
    for list in [salpha_word(n)?, salpha_reflections(n)?] {
        let rev: Vec<Weight> = list.iter().rev().cloned().collect();
        ok &= reflection_product(&rs, &list)? == target && reflection_product(&rs, &rev)? == target;
    }
    Ok(ok)
}

pub fn t_gamma(p: &ParamScheme) -> Result<usize> {
    if p.kind() != CartanKind::D {
        return Err(Error::Unsupported("t_γ is defined for type D".into()));
    }
    Ok(salpha_word(p.n())?.iter().filter(|a| root_type(p, a) == RootType::Imaginary).count())
}

pub fn epsilon_salpha(p: &ParamScheme) -> Result<i64> {
    Ok(if t_gamma(p)? % 2 == 0 { 1 } else { -1 })
}

/// Conjugacy class of a type D scheme: pairs with both roots transformed,
/// pairs with one, and the parity of transformed β's when every pair
/// contributes exactly one root (the split class of W(D_n)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassKey {
    pub both: usize,
    pub single: usize,
    pub beta_parity: Option<usize>,
}

pub fn class_key(n: usize, transformed: &[usize]) -> ClassKey {
    let pairs = n / 2;
    let mut both = 0;
    let mut single = 0;
    let mut betas = 0;
    for k in 0..pairs {
        let a = transformed.contains(&(2 * k));
        let b = transformed.contains(&(2 * k + 1));
        if a && b {
            both += 1;
        } else if a || b {
            single += 1;
        }
        if b && !a {
            betas += 1;
        }
    }
    let beta_parity = (both == 0 && 2 * single == n).then_some(betas % 2);
    ClassKey { both, single, beta_parity }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    /// A real integral root exists.
    R,
    /// A quadruple as in condition (C) exists.
    C,
    Survivor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeTrace {
    pub transformed: Vec<usize>,
    pub label: String,
    pub class: Option<ClassKey>,
    pub verdict: Verdict,
}

fn verdict(p: &ParamScheme, integral: &[Weight]) -> Result<Verdict> {
    if condition_r(p, integral) {
        return Ok(Verdict::R);
    }
    if p.kind() == CartanKind::D && condition_c(p)? {
        return Ok(Verdict::C);
    }
    Ok(Verdict::Survivor)
}

/// Every scheme examined, with its own verdict.
pub fn star_trace(kind: CartanKind, n: usize) -> Result<Vec<SchemeTrace>> {
    match kind {
        CartanKind::A if n >= 2 => {}
        CartanKind::D if n >= 4 => {}
        _ => return Err(Error::OutOfRange(format!("{}{n}", kind.letter()))),
    }
    let base = base_set(kind, n)?;
    let rs = system(kind, n)?;
    let integral = integral_roots(&rs);
    let subsets: Vec<Vec<usize>> = match kind {
        // the Cayley chain c_{α_k} ⋯ c_{α_1}
        CartanKind::A => (0..=base.len()).map(|k| (0..k).collect()).collect(),
        _ => (0u32..1 << base.len())
            .map(|m| (0..base.len()).filter(|&i| m >> i & 1 == 1).collect())
            .collect(),
    };
    subsets
        .into_iter()
        .map(|c| {
            let p = ParamScheme::new(kind, n, &c)?;
            Ok(SchemeTrace {
                label: p.label(),
                class: (kind == CartanKind::D).then(|| class_key(n, &c)),
                verdict: verdict(&p, &integral)?,
                transformed: c,
            })
        })
        .collect()
}

/// Surviving classes, with a representative subset each. A class is
/// eliminated as soon as one member satisfies (R) or (C).
pub fn survivors(kind: CartanKind, n: usize) -> Result<Vec<Vec<usize>>> {
    let trace = star_trace(kind, n)?;
    if kind == CartanKind::A {
        return Ok(trace.into_iter().filter(|t| t.verdict == Verdict::Survivor).map(|t| t.transformed).collect());
    }
    let mut classes: BTreeMap<ClassKey, (bool, Vec<usize>)> = BTreeMap::new();
    for t in trace {
        let e = classes.entry(t.class.unwrap()).or_insert((true, t.transformed.clone()));
        e.0 &= t.verdict == Verdict::Survivor;
    }
    Ok(classes.into_values().filter(|(alive, _)| *alive).map(|(_, rep)| rep).collect())
}

pub fn count_star(kind: CartanKind, n: usize) -> Result<usize> {
    Ok(survivors(kind, n)?.len())
}

/// The four surviving schemes for `D_{2m}`, by transformed base indices:
/// the compact one, the one missing the last pair, all α's, and all α's
/// but the last replaced by β.
pub fn named_d_survivors(n: usize) -> Result<Vec<(&'static str, Vec<usize>)>> {
    if n % 2 == 1 || n < 4 {
        return Err(Error::OutOfRange(format!("D{n}")));
    }
    let m = n / 2;
    let all: Vec<usize> = (0..n).collect();
    let no_last: Vec<usize> = (0..n - 2).collect();
    let alphas: Vec<usize> = (0..m).map(|k| 2 * k).collect();
    let mut mixed: Vec<usize> = (0..m - 1).map(|k| 2 * k).collect();
    mixed.push(2 * m - 1);
    Ok(alloc::vec![("γ0", all), ("γ2^1", no_last), ("γ^2", alphas), ("γ^3", mixed)])
}

pub fn theta_is_involution(p: &ParamScheme) -> bool {
    p.theta.compose(&p.theta).is_identity() && p.theta.preserves_roots(&p.rs)
}

/// True when every root has exactly one type and Cayley transforms through
/// real roots produce imaginary roots.
pub fn typing_is_consistent(p: &ParamScheme) -> Result<bool> {
    for a in p.rs.positive_roots() {
        if root_type(p, a) == RootType::Real {
            let q = p.cayley(a)?;
            if root_type(&q, a) != RootType::Imaginary {
                return Ok(false);
            }
        }
        if root_type(p, a) != root_type(p, &a.neg()) {
            return Ok(false);
        }
    }
    Ok(p.base.iter().enumerate().all(|(i, b)| {
        let t = root_type(p, b);
        if p.transformed.contains(&i) {
            t == RootType::Imaginary
        } else {
            t == RootType::Real
        }
    }))
}

/// `⟨ρ/2, β∨⟩` is a half-integer for every base root.
pub fn base_is_nonintegral(kind: CartanKind, n: usize) -> Result<bool> {
    let rs = system(kind, n)?;
    let half = rs.rho().scale(qf(1, 2));
    Ok(base_set(kind, n)?.iter().all(|b| {
        let x = pairing(&half, b);
        !x.is_integer() && (x * qf(2, 1)).is_integer() && !x.is_zero()
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn example_scheme() {
        let p = ParamScheme::new(CartanKind::D, 4, &[0]).unwrap();
        assert_eq!(root_type(&p, &Weight::e_pm(4, 1, 2, -1)), RootType::Imaginary);
        assert_eq!(root_type(&p, &Weight::e_pm(4, 1, 2, 1)), RootType::Real);
        assert_eq!(root_type(&p, &Weight::e_pm(4, 3, 4, 1)), RootType::Real);
        assert_eq!(root_type(&p, &Weight::e_pm(4, 1, 3, -1)), RootType::Complex);
        assert_eq!(condition_c_witness(&p).unwrap(), Some((2, 3, 0, 1)));
        assert_eq!(t_gamma(&p).unwrap(), 1);
        assert_eq!(epsilon_salpha(&p).unwrap(), -1);
    }

    #[test]
    fn simple_cases() {
        let split = ParamScheme::new(CartanKind::D, 4, &[]).unwrap();
        assert_eq!(t_gamma(&split).unwrap(), 0);
        assert!(!condition_c(&split).unwrap());
        let compact = ParamScheme::new(CartanKind::D, 4, &[0, 1, 2, 3]).unwrap();
        assert!(!condition_r(&compact, &integral_roots(&compact.rs)));
        assert!(!condition_c(&compact).unwrap());
        let a = ParamScheme::new(CartanKind::A, 4, &[0, 1]).unwrap();
        assert!(!condition_r(&a, &integral_roots(&a.rs)));
        assert!(condition_c(&a).is_err());
    }

    #[test]
    fn counts() {
        assert_eq!(count_star(CartanKind::A, 3).unwrap(), 1);
        assert_eq!(count_star(CartanKind::A, 4).unwrap(), 2);
        assert_eq!(count_star(CartanKind::A, 5).unwrap(), 1);
        assert_eq!(count_star(CartanKind::D, 4).unwrap(), 4);
        assert_eq!(count_star(CartanKind::D, 5).unwrap(), 2);
    }

    #[test]
    fn salpha() {
        assert_eq!(salpha_word(4).unwrap().len(), 9);
        assert_eq!(salpha_word(4).unwrap()[0], Weight::e_pm(4, 1, 2, 1));
        assert_eq!(salpha_word(5).unwrap().len(), 11);
        assert!(check_salpha(4).unwrap());
        assert!(check_salpha(5).unwrap());
        assert!(salpha_word(3).is_err());
        assert_eq!(class_key(4, &vec![0, 2]).beta_parity, Some(0));
    }

    #[test]
    fn named_survivors_and_parity() {
        for n in [4usize, 6, 8] {
            let alive: Vec<ClassKey> = survivors(CartanKind::D, n).unwrap().iter().map(|c| class_key(n, c)).collect();
            let named: Vec<ClassKey> = named_d_survivors(n).unwrap().iter().map(|(_, c)| class_key(n, c)).collect();
            let mut a = alive.clone();
            let mut b = named.clone();
            a.sort();
            b.sort();
            assert_eq!(a, b, "D{n}");
            for t in star_trace(CartanKind::D, n).unwrap() {
                let p = ParamScheme::new(CartanKind::D, n, &t.transformed).unwrap();
                let tg = t_gamma(&p).unwrap();
                if t.verdict == Verdict::R && t.transformed.iter().all(|&i| i / 2 + 2 < n / 2) {
                    assert_eq!(tg, 0);
                }
                if let Some((a, b, r, s)) = condition_c_witness(&p).unwrap() {
                    if [a, b, r, s].iter().all(|&x| x + 4 >= n) && t.verdict == Verdict::C {
                        assert_eq!(tg % 2, 1);
                    }
                }
            }
        }
        assert_eq!(count_star(CartanKind::D, 7).unwrap(), 2);
        assert_eq!(count_star(CartanKind::A, 8).unwrap(), 2);
    }

    #[test]
    fn typing() {
        for c in [vec![], vec![0], vec![1, 2], vec![0, 1, 3]] {
            let p = ParamScheme::new(CartanKind::D, 4, &c).unwrap();
            assert!(theta_is_involution(&p));
            assert!(typing_is_consistent(&p).unwrap());
        }
        assert!(base_is_nonintegral(CartanKind::D, 6).unwrap());
        assert!(base_is_nonintegral(CartanKind::A, 5).unwrap());
    }
}
