//! Weyl group elements as exact matrices acting on the ambient space.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::{identity, mat_mul, mat_vec, Mat};
use crate::rootsys::{RootSystem, Weight};
use crate::{q, Error, Result};

/// A Weyl group element. Equality compares matrices only.
#[derive(Debug, Clone)]
pub struct WeylElement {
    pub matrix: Mat,
    /// Simple reflection indices, leftmost applied last.
    pub word: Option<Vec<usize>>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for WeylElement {}

impl WeylElement {
    pub fn identity(dim: usize) -> Self {
        WeylElement { matrix: identity(dim), word: Some(Vec::new()) }
    }

    fn reflection_matrix(alpha: &Weight) -> Mat {
        let n = alpha.dim();
        let f = q(2) / alpha.dot(alpha);
        let mut m = identity(n);
        for i in 0..n {
            for j in 0..n {
                m[i][j] -= f * alpha.coords[i] * alpha.coords[j];
            }
        }
        m
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Self {
        WeylElement { matrix: Self::reflection_matrix(&rs.simple_roots[i]), word: Some(alloc::vec![i]) }
    }

    /// Product `s_{w[0]} s_{w[1]} ⋯`.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Self {
        let mut m = identity(rs.ambient_dim);
        for &i in word {
            m = mat_mul(&m, &Self::reflection_matrix(&rs.simple_roots[i]));
        }
        WeylElement { matrix: m, word: Some(word.to_vec()) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        WeylElement { matrix: mat_mul(&self.matrix, &other.matrix), word }
    }

    pub fn apply(&self, v: &Weight) -> Weight {
        Weight::new(mat_vec(&self.matrix, &v.coords))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity(self.matrix.len())
    }

    pub fn preserves_roots(&self, rs: &RootSystem) -> bool {
        rs.roots.iter().all(|r| rs.is_root(&self.apply(r)))
    }
}

pub fn reflection(rs: &RootSystem, alpha: &Weight) -> Result<WeylElement> {
    if !rs.is_root(alpha) {
        return Err(Error::NotARoot(alloc::format!("{alpha}")));
    }
    Ok(WeylElement { matrix: WeylElement::reflection_matrix(alpha), word: None })
}

/// True iff `wλ − λ` lies in the weight lattice.
pub fn in_wp(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> bool {
    rs.in_weight_lattice(&w.apply(lambda).sub(lambda))
}

/// Product of the reflections in a set of mutually orthogonal roots.
pub fn product_of_set(rs: &RootSystem, set: &[Weight]) -> Result<WeylElement> {
    for (i, a) in set.iter().enumerate() {
        for b in &set[i + 1..] {
            if !a.dot(b).is_zero() || a == b {
                return Err(Error::NotOrthogonal);
            }
        }
    }
    let mut w = WeylElement::identity(rs.ambient_dim);
    w.word = None;
    for a in set {
        w = w.compose(&reflection(rs, a)?);
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qf;

    #[test]
    fn reflections() {
        let rs = RootSystem::parse("D4").unwrap();
        let l = Weight::from_halves(&[3, 2, 1, 0]);
        let s = reflection(&rs, &Weight::e_pm(4, 1, 2, -1)).unwrap();
        assert_eq!(s.apply(&l), Weight::from_halves(&[2, 3, 1, 0]));
        let s = reflection(&rs, &Weight::e_pm(4, 1, 3, 1)).unwrap();
        assert_eq!(s.apply(&Weight::from_halves(&[5, 2, 3, 0])), Weight::from_halves(&[-3, 2, -5, 0]));
        assert!(s.compose(&s).is_identity());
        assert!(s.preserves_roots(&rs));
        assert!(reflection(&rs, &Weight::unit(4, 1)).is_err());
    }

    #[test]
    fn wp_membership() {
        let rs = RootSystem::parse("A3").unwrap();
        let l = rs.rho().scale(qf(1, 2));
        assert!(in_wp(&rs, &WeylElement::identity(4), &l));
        assert!(in_wp(&rs, &WeylElement::from_word(&rs, &[0, 2]), &l));
        assert!(!in_wp(&rs, &WeylElement::from_word(&rs, &[0]), &l));
    }

    #[test]
    fn orthogonal_products() {
        let rs = RootSystem::parse("A3").unwrap();
        let a1 = rs.simple_roots[0].clone();
        let a3 = rs.simple_roots[2].clone();
        let w = product_of_set(&rs, &[a1.clone(), a3.clone()]).unwrap();
        assert_eq!(w, product_of_set(&rs, &[a3, a1.clone()]).unwrap());
        assert_eq!(w.apply(&Weight::from_ints(&[1, 2, 3, 4])), Weight::from_ints(&[2, 1, 4, 3]));
        assert!(product_of_set(&rs, &[]).unwrap().is_identity());
        assert!(product_of_set(&rs, &[a1.clone(), rs.simple_roots[1].clone()]).is_err());
        assert_eq!(product_of_set(&rs, &[a1.clone()]).unwrap(), reflection(&rs, &a1).unwrap());
    }
}
