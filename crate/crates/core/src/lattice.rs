//! Lattice quotients such as P/R and P/(2P+R), via integer normal forms.
//!
//! Weights are mapped to coweight coordinates `(⟨v, α_i∨⟩)_i`, in which P is
//! the standard lattice. Half-integral generators are scaled to integers by
//! a recorded common denominator.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::Zero;

use crate::rootsys::{pairing, RootSystem, Weight};
use crate::{q, Error, Result};

/// Lattice given by generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LatticeSpec {
    /// Weight lattice.
    P,
    /// Root lattice.
    R,
    TwoP,
    TwoPPlusR,
    Gens(Vec<Weight>),
}

impl LatticeSpec {
    pub fn generators(&self, rs: &RootSystem) -> Vec<Weight> {
        match self {
            LatticeSpec::P => rs.fundamental_weights.clone(),
            LatticeSpec::R => rs.simple_roots.clone(),
            LatticeSpec::TwoP => rs.fundamental_weights.iter().map(|w| w.scale(q(2))).collect(),
            LatticeSpec::TwoPPlusR => {
                let mut g: Vec<Weight> = rs.fundamental_weights.iter().map(|w| w.scale(q(2))).collect();
                g.extend(rs.simple_roots.iter().cloned());
                g
            }
            LatticeSpec::Gens(g) => g.clone(),
        }
    }
}

/// Coset label: residues modulo the nontrivial invariant factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coset(pub Vec<i64>);

impl Coset {
    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

#[derive(Debug, Clone)]
pub struct LatticeQuotient {
    /// Elementary divisors greater than one.
    pub invariant_factors: Vec<i64>,
    /// Common denominator used to make generator coordinates integral.
    pub denominator: i64,
    simple_roots: Vec<Weight>,
    basis: Vec<Vec<i128>>,
    pivots: Vec<usize>,
    transform: Vec<Vec<i128>>,
    factor_offset: usize,
}

impl LatticeQuotient {
    pub fn order(&self) -> i64 {
        self.invariant_factors.iter().product()
    }

    fn coords(&self, v: &Weight) -> Result<Vec<i128>> {
        let d = q(self.denominator);
        let mut out = Vec::with_capacity(self.simple_roots.len());
        for a in &self.simple_roots {
            let c = pairing(v, a) * d;
            if !c.is_integer() {
                return Err(Error::NotContained);
            }
            out.push(c.to_integer() as i128);
        }
        Ok(out)
    }

    /// Coset of a weight of the numerator lattice.
    pub fn coset_of(&self, v: &Weight) -> Result<Coset> {
        let x = express_in_basis(&self.basis, &self.pivots, &self.coords(v)?).ok_or(Error::NotContained)?;
        let k = self.transform.len();
        let y: Vec<i128> = (0..k)
            .map(|j| (0..k).map(|i| x[i] * self.transform[i][j]).sum())
            .collect();
        Ok(Coset(
            self.invariant_factors
                .iter()
                .enumerate()
                .map(|(i, &d)| y[self.factor_offset + i].rem_euclid(d as i128) as i64)
                .collect(),
        ))
    }
}

/// Row echelon basis of the integer row span.
fn row_echelon(mut rows: Vec<Vec<i128>>) -> (Vec<Vec<i128>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut basis = Vec::new();
    let mut pivots = Vec::new();
    let mut r0 = 0;
    for c in 0..ncols {
        loop {
            let Some(m) = (r0..rows.len()).filter(|&i| rows[i][c] != 0).min_by_key(|&i| rows[i][c].abs()) else {
                break;
            };
            rows.swap(r0, m);
            let mut clean = true;
            for i in r0 + 1..rows.len() {
                if rows[i][c] != 0 {
                    let f = rows[i][c].div_euclid(rows[r0][c]);
                    for j in 0..ncols {
                        let t = rows[r0][j];
                        rows[i][j] -= f * t;
                    }
                    clean &= rows[i][c] == 0;
                }
            }
            if clean {
                if rows[r0][c] < 0 {
                    for x in rows[r0].iter_mut() {
                        *x = -*x;
                    }
                }
                basis.push(rows[r0].clone());
                pivots.push(c);
                r0 += 1;
                break;
            }
        }
    }
    (basis, pivots)
}

fn express_in_basis(basis: &[Vec<i128>], pivots: &[usize], v: &[i128]) -> Option<Vec<i128>> {
    let mut rem = v.to_vec();
    let mut x = vec![0i128; basis.len()];
    for (i, (b, &p)) in basis.iter().zip(pivots).enumerate() {
        if rem[p] % b[p] != 0 {
            return None;
        }
        let f = rem[p] / b[p];
        x[i] = f;
        for j in 0..rem.len() {
            rem[j] -= f * b[j];
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return None;
    }
    Some(x)
}

/// Smith normal form of an integer matrix `m` (rows × cols). Returns the
/// diagonal and a unimodular column transform `v` with `u·m·v = diag`.
pub fn smith_normal_form(m: &[Vec<i128>]) -> (Vec<i128>, Vec<Vec<i128>>) {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut a: Vec<Vec<i128>> = m.to_vec();
    let mut v: Vec<Vec<i128>> = (0..cols).map(|i| (0..cols).map(|j| i128::from(i == j)).collect()).collect();
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero entry of the remaining block
        let mut best = None;
        for i in t..rows {
            for j in t..cols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj): (usize, usize)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        for row in v.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..rows {
                let f = a[i][t].div_euclid(a[t][t]);
                if f != 0 {
                    for j in t..cols {
                        let x = a[t][j];
                        a[i][j] -= f * x;
                    }
                }
            }
            for j in t + 1..cols {
                let f = a[t][j].div_euclid(a[t][t]);
                if f != 0 {
                    for i in t..rows {
                        let x = a[i][t];
                        a[i][j] -= f * x;
                    }
                    for row in v.iter_mut() {
                        let x = row[t];
                        row[j] -= f * x;
                    }
                }
            }
            // a smaller remainder becomes the new pivot
            let mut best = (t, t);
            for i in t..rows {
                for j in t..cols {
                    if (i == t || j == t) && a[i][j] != 0 && a[i][j].abs() < a[best.0][best.1].abs() {
                        best = (i, j);
                    }
                }
            }
            if best != (t, t) {
                done = false;
                a.swap(t, best.0);
                for row in a.iter_mut() {
                    row.swap(t, best.1);
                }
                for row in v.iter_mut() {
                    row.swap(t, best.1);
                }
            }
            let clean = (t + 1..rows).all(|i| a[i][t] == 0) && (t + 1..cols).all(|j| a[t][j] == 0);
            if done && clean {
                // divisibility: fold a non-divisible entry into the pivot row
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % a[t][t] != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            let x = a[i][j];
                            a[t][j] += x;
                        }
                    }
                }
            }
        }
        if a[t][t] < 0 {
            for j in t..cols {
                a[t][j] = -a[t][j];
            }
        }
        diag.push(a[t][t]);
    }
    (diag, v)
}

/// Quotient `num / den` for lattices in the span of the roots.
pub fn quotient(rs: &RootSystem, num: &LatticeSpec, den: &LatticeSpec) -> Result<LatticeQuotient> {
    let ng = num.generators(rs);
    let dg = den.generators(rs);
    let mut denominator: i64 = 1;
    for w in ng.iter().chain(&dg) {
        for a in &rs.simple_roots {
            denominator = denominator.lcm(pairing(w, a).denom());
        }
    }
    let proto = LatticeQuotient {
        invariant_factors: Vec::new(),
        denominator,
        simple_roots: rs.simple_roots.clone(),
        basis: Vec::new(),
        pivots: Vec::new(),
        transform: Vec::new(),
        factor_offset: 0,
    };
    let nrows = ng.iter().map(|w| proto.coords(w)).collect::<Result<Vec<_>>>()?;
    let (basis, pivots) = row_echelon(nrows);
    let k = basis.len();
    let mut m = Vec::new();
    for w in &dg {
        let c = proto.coords(w)?;
        m.push(express_in_basis(&basis, &pivots, &c).ok_or(Error::NotContained)?);
    }
    if m.is_empty() {
        return Err(Error::InfiniteQuotient);
    }
    let (diag, v) = smith_normal_form(&m);
    if diag.len() < k || diag.iter().any(|d| d.is_zero()) {
        return Err(Error::InfiniteQuotient);
    }
    let factor_offset = diag.iter().take_while(|&&d| d == 1).count();
    let invariant_factors = diag[factor_offset..].iter().map(|&d| d as i64).collect();
    Ok(LatticeQuotient { invariant_factors, basis, pivots, transform: v, factor_offset, ..proto })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factors(label: &str, num: LatticeSpec, den: LatticeSpec) -> Vec<i64> {
        let rs = RootSystem::parse(label).unwrap();
        quotient(&rs, &num, &den).unwrap().invariant_factors
    }

    #[test]
    fn fundamental_groups() {
        assert_eq!(factors("A3", LatticeSpec::P, LatticeSpec::R), vec![4]);
        assert_eq!(factors("A5", LatticeSpec::P, LatticeSpec::R), vec![6]);
        assert_eq!(factors("D4", LatticeSpec::P, LatticeSpec::R), vec![2, 2]);
        assert_eq!(factors("D5", LatticeSpec::P, LatticeSpec::R), vec![4]);
        assert_eq!(factors("E6", LatticeSpec::P, LatticeSpec::R), vec![3]);
        assert_eq!(factors("E7", LatticeSpec::P, LatticeSpec::R), vec![2]);
        assert!(factors("E8", LatticeSpec::P, LatticeSpec::R).is_empty());
    }

    #[test]
    fn two_p_plus_r() {
        assert_eq!(factors("A3", LatticeSpec::P, LatticeSpec::TwoPPlusR), vec![2]);
        assert!(factors("A2", LatticeSpec::P, LatticeSpec::TwoPPlusR).is_empty());
        assert_eq!(factors("D4", LatticeSpec::P, LatticeSpec::TwoPPlusR), vec![2, 2]);
        assert_eq!(factors("D5", LatticeSpec::P, LatticeSpec::TwoPPlusR), vec![2]);
        assert!(factors("E8", LatticeSpec::P, LatticeSpec::TwoPPlusR).is_empty());
    }

    #[test]
    fn snf_small() {
        let (d, _) = smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(d, vec![2, 6, 12]);
    }

    #[test]
    fn containment_and_cosets() {
        let rs = RootSystem::parse("A3").unwrap();
        assert_eq!(quotient(&rs, &LatticeSpec::R, &LatticeSpec::P).unwrap_err(), Error::NotContained);
        let lq = quotient(&rs, &LatticeSpec::P, &LatticeSpec::R).unwrap();
        assert!(lq.coset_of(&Weight::zero(4)).unwrap().is_identity());
        let w1 = lq.coset_of(&rs.fundamental_weights[0]).unwrap();
        assert!(!w1.is_identity());
        // ω1 generates P/R ≅ Z4
        let mut seen = alloc::collections::BTreeSet::new();
        let mut w = Weight::zero(4);
        for _ in 0..4 {
            seen.insert(lq.coset_of(&w).unwrap());
            w = w.add(&rs.fundamental_weights[0]);
        }
        assert_eq!(seen.len(), 4);
        assert!(lq.coset_of(&w).unwrap().is_identity());
    }
}
