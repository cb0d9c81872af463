//! The group R_D of strongly orthogonal simple-root subsets with an even
//! adjacency condition, and its map to P/(2P+R).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::lattice::{quotient, Coset, LatticeQuotient, LatticeSpec};
use crate::rootsys::{RootSystem, Weight};
use crate::weyl::{product_of_set, WeylElement};
use crate::{qf, Error, Result};

/// Simply-laced Dynkin diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub label: String,
    pub adjacency: Vec<Vec<bool>>,
}

impl DynkinDiagram {
    pub fn of(rs: &RootSystem) -> Result<Self> {
        if !rs.cartan_type.is_simply_laced() {
            return Err(Error::Unsupported(format!("{} is not simply laced", rs.cartan_type)));
        }
        let c = rs.cartan_matrix();
        let n = c.len();
        let adjacency = (0..n).map(|i| (0..n).map(|j| i != j && c[i][j] != 0).collect()).collect();
        Ok(DynkinDiagram { label: format!("{}", rs.cartan_type), adjacency })
    }

    pub fn len(&self) -> usize {
        self.adjacency.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.adjacency[i][j]).collect()
    }

    /// Membership test for R_D.
    pub fn admits(&self, s: &[usize]) -> bool {
        let n = self.len();
        if s.iter().any(|&i| i >= n) {
            return false;
        }
        for (x, &i) in s.iter().enumerate() {
            for &j in &s[x + 1..] {
                if i == j || self.adjacency[i][j] {
                    return false;
                }
            }
        }
        (0..n)
            .filter(|i| !s.contains(i))
            .all(|i| s.iter().filter(|&&j| self.adjacency[i][j]).count() % 2 == 0)
    }
}

/// Subset of simple-root indices, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RDSubset(pub Vec<usize>);

/// Neither `α+β` nor `α−β` is a root; a root is not strongly orthogonal to
/// itself.
pub fn strongly_orthogonal(rs: &RootSystem, a: &Weight, b: &Weight) -> bool {
    a != b && !rs.is_root(&a.add(b)) && !rs.is_root(&a.sub(b))
}

pub fn enumerate_rd(d: &DynkinDiagram) -> Vec<RDSubset> {
    let n = d.len();
    let mut out: Vec<RDSubset> = (0u32..1 << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| d.admits(s))
        .map(RDSubset)
        .collect();
    out.sort();
    out
}

/// `w_S`.
pub fn w_s(rs: &RootSystem, s: &RDSubset) -> Result<WeylElement> {
    let roots: Vec<Weight> = s.0.iter().map(|&i| rs.simple_roots[i].clone()).collect();
    product_of_set(rs, &roots)
}

/// `w_S(ρ/2) − ρ/2`.
pub fn rd_shift(rs: &RootSystem, s: &RDSubset) -> Result<Weight> {
    let half = rs.rho().scale(qf(1, 2));
    Ok(w_s(rs, s)?.apply(&half).sub(&half))
}

pub fn two_p_plus_r(rs: &RootSystem) -> Result<LatticeQuotient> {
    quotient(rs, &LatticeSpec::P, &LatticeSpec::TwoPPlusR)
}

/// Coset of `w_S(ρ/2) − ρ/2` in P/(2P+R).
pub fn rd_class(rs: &RootSystem, s: &RDSubset) -> Result<Coset> {
    if !DynkinDiagram::of(rs)?.admits(&s.0) {
        return Err(Error::NotInRd);
    }
    two_p_plus_r(rs)?.coset_of(&rd_shift(rs, s)?)
}

/// `|Π_{R_D}| = p²` with `p = |R_D|`.
pub fn pi_rd_count(d: &DynkinDiagram) -> usize {
    let p = enumerate_rd(d).len();
    p * p
}

/// Text picture of an element of R_D: `●` for roots in S, `○` otherwise,
/// followed by the edge list.
pub fn render(d: &DynkinDiagram, s: &RDSubset) -> String {
    let mut out = String::new();
    for i in 0..d.len() {
        if i > 0 {
            out.push(' ');
        }
        out.push(if s.0.contains(&i) { '●' } else { '○' });
        out.push_str(&format!("{}", i + 1));
    }
    out.push_str("  edges:");
    for (i, j) in d.edges() {
        out.push_str(&format!(" {}-{}", i + 1, j + 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::in_wp;
    use alloc::vec;

    fn rd(label: &str) -> (RootSystem, Vec<RDSubset>) {
        let rs = RootSystem::parse(label).unwrap();
        let d = DynkinDiagram::of(&rs).unwrap();
        let e = enumerate_rd(&d);
        (rs, e)
    }

    #[test]
    fn small_counts() {
        assert_eq!(rd("A2").1, vec![RDSubset(vec![])]);
        assert_eq!(rd("A3").1, vec![RDSubset(vec![]), RDSubset(vec![0, 2])]);
        assert_eq!(rd("D4").1.len(), 4);
        assert_eq!(rd("E8").1.len(), 1);
    }

    #[test]
    fn classes() {
        let (rs, e) = rd("A3");
        assert!(rd_class(&rs, &e[0]).unwrap().is_identity());
        // −(α1+α3)/2 = 2ω1 − (2,−1,0,−1) lies in 2P+R
        assert!(rd_class(&rs, &e[1]).unwrap().is_identity());
        let pr = quotient(&rs, &LatticeSpec::P, &LatticeSpec::R).unwrap();
        assert!(!pr.coset_of(&rd_shift(&rs, &e[1]).unwrap()).unwrap().is_identity());
        assert_eq!(rd_class(&rs, &RDSubset(vec![0])), Err(Error::NotInRd));
        for s in &e {
            assert!(in_wp(&rs, &w_s(&rs, s).unwrap(), &rs.rho().scale(qf(1, 2))));
        }
    }

    #[test]
    fn strong_orthogonality() {
        let rs = RootSystem::parse("A3").unwrap();
        let a = &rs.simple_roots;
        assert!(strongly_orthogonal(&rs, &a[0], &a[2]));
        assert!(!strongly_orthogonal(&rs, &a[0], &a[1]));
        assert!(!strongly_orthogonal(&rs, &a[0], &a[0]));
    }
}
