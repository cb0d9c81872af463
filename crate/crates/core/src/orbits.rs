//! Complex nilpotent orbits of classical algebras by partitions, their
//! dimensions, the Springer correspondence by symbols, and real forms by
//! signed Young diagrams.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::partition::{multiplicities, normalize, rect, size, transpose, Partition};
use crate::rootsys::{CartanKind, CartanType};
use crate::weylrep::{DMark, IrrepLabel};
use crate::{Error, Result};

/// Nilpotent orbit of a classical algebra, given by its Jordan type.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitPartition {
    pub cartan_type: CartanType,
    pub parts: Partition,
    /// Present exactly for very even orbits of type D.
    pub very_even_marker: Option<DMark>,
}

/// Size of the natural representation.
pub fn natural_dim(t: CartanType) -> Result<usize> {
    Ok(match t.kind {
        CartanKind::A => t.rank + 1,
        CartanKind::B => 2 * t.rank + 1,
        CartanKind::C | CartanKind::D => 2 * t.rank,
        _ => return Err(Error::Unsupported(format!("{t} is not classical"))),
    })
}

fn very_even(parts: &[usize]) -> bool {
    !parts.is_empty() && parts.iter().all(|&x| x % 2 == 0)
}

impl OrbitPartition {
    pub fn new(t: CartanType, parts: &[usize], marker: Option<DMark>) -> Result<Self> {
        let bad = |why: &str| Err(Error::InvalidPartition(format!("{parts:?} for {t}: {why}")));
        if !crate::partition::is_partition(parts) {
            return bad("not a partition");
        }
        if size(parts) != natural_dim(t)? {
            return bad("wrong size");
        }
        let mults = multiplicities(parts);
        match t.kind {
            CartanKind::B | CartanKind::D => {
                if mults.iter().any(|&(p, m)| p % 2 == 0 && m % 2 == 1) {
                    return bad("even part with odd multiplicity");
                }
            }
            CartanKind::C => {
                if mults.iter().any(|&(p, m)| p % 2 == 1 && m % 2 == 1) {
                    return bad("odd part with odd multiplicity");
                }
            }
            _ => {}
        }
        let needs = t.kind == CartanKind::D && very_even(parts);
        if needs != marker.is_some() {
            return bad("very even marker mismatch");
        }
        Ok(OrbitPartition { cartan_type: t, parts: parts.to_vec(), very_even_marker: marker })
    }

    /// Complex dimension.
    pub fn dim(&self) -> usize {
        let t = transpose(&self.parts);
        let sq: usize = t.iter().map(|x| x * x).sum();
        let odd = self.parts.iter().filter(|&&x| x % 2 == 1).count();
        let n = self.cartan_type.rank;
        match self.cartan_type.kind {
            CartanKind::A => (n + 1) * (n + 1) - sq,
            CartanKind::B => 2 * n * n + n - sq / 2 + odd / 2,
            CartanKind::C => 2 * n * n + n - sq / 2 - odd / 2,
            _ => 2 * n * n - n - sq / 2 + odd / 2,
        }
    }
}

impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", partition_exp(&self.parts))?;
        match self.very_even_marker {
            Some(DMark::I) => write!(f, "I"),
            Some(DMark::II) => write!(f, "II"),
            None => Ok(()),
        }
    }
}

/// Exponential notation, `[3 2^2 1]`.
pub fn partition_exp(p: &[usize]) -> String {
    let mut s = String::from("[");
    for (i, (x, m)) in multiplicities(p).into_iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        if m == 1 {
            s.push_str(&format!("{x}"));
        } else {
            s.push_str(&format!("{x}^{m}"));
        }
    }
    s.push(']');
    s
}

pub fn dim_complex_orbit(o: &OrbitPartition) -> usize {
    o.dim()
}

/// Splits the symbol entries `x_i = λ_i + i − 1` of a padded increasing
/// partition into entries of the given parity, halved and reduced.
fn symbol_side(entries: &[usize], parity: usize) -> Partition {
    let halves: Vec<usize> = entries.iter().filter(|&&x| x % 2 == parity).map(|&x| x / 2).collect();
    normalize(&halves.iter().enumerate().map(|(i, &h)| h - i).collect::<Vec<_>>())
}

fn padded_entries(parts: &[usize], parity_of_count: usize) -> Vec<usize> {
    let mut inc: Vec<usize> = parts.iter().rev().copied().collect();
    if inc.len() % 2 != parity_of_count {
        inc.insert(0, 0);
    }
    inc.iter().enumerate().map(|(i, &x)| x + i).collect()
}

/// Springer representation attached to the orbit (trivial local system).
pub fn springer_label(o: &OrbitPartition) -> Result<IrrepLabel> {
    let p = &o.parts;
    Ok(match o.cartan_type.kind {
        CartanKind::A => IrrepLabel::Partition(p.clone()),
        CartanKind::B => {
            let e = padded_entries(p, 1);
            IrrepLabel::Bipartition(symbol_side(&e, 1), symbol_side(&e, 0))
        }
        CartanKind::C => {
            let e = padded_entries(p, 1);
            IrrepLabel::Bipartition(symbol_side(&e, 0), symbol_side(&e, 1))
        }
        CartanKind::D => {
            let e = padded_entries(p, 0);
            IrrepLabel::d(symbol_side(&e, 0), symbol_side(&e, 1), o.very_even_marker)
        }
        _ => return Err(Error::Unsupported("exceptional orbit".into())),
    })
}

/// Orbit recorded in the table of small orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Table1Orbit {
    Classical(OrbitPartition),
    Exceptional { name: &'static str, dim: usize },
}

impl fmt::Display for Table1Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Table1Orbit::Classical(o) => write!(f, "{o}"),
            Table1Orbit::Exceptional { name, .. } => write!(f, "{name}"),
        }
    }
}

impl Table1Orbit {
    pub fn dim(&self) -> usize {
        match self {
            Table1Orbit::Classical(o) => o.dim(),
            Table1Orbit::Exceptional { dim, .. } => *dim,
        }
    }
}

pub fn orbit_from_table1(t: CartanType) -> Result<Table1Orbit> {
    let n = t.rank;
    let parts: Partition = match t.kind {
        CartanKind::A => {
            let n = n + 1;
            let mut p = rect(2, n / 2);
            if n % 2 == 1 {
                p.push(1);
            }
            p
        }
        CartanKind::B if n % 2 == 0 => [rect(2, n), vec![1]].concat(),
        CartanKind::B => [rect(2, n - 1), rect(1, 3)].concat(),
        CartanKind::C => [vec![2], rect(1, 2 * n - 2)].concat(),
        CartanKind::D if n % 2 == 0 => [vec![3], rect(2, n - 2), vec![1]].concat(),
        CartanKind::D => [vec![3], rect(2, n - 3), rect(1, 3)].concat(),
        CartanKind::E => {
            let (name, dim) = match n {
                6 => ("3A1", 40),
                7 => ("4A1", 70),
                _ => ("4A1", 128),
            };
            return Ok(Table1Orbit::Exceptional { name, dim });
        }
        CartanKind::F => return Ok(Table1Orbit::Exceptional { name: "A1", dim: 16 }),
        CartanKind::G => return Ok(Table1Orbit::Exceptional { name: "Ã1", dim: 8 }),
    };
    let marker = (t.kind == CartanKind::D && very_even(&parts)).then_some(DMark::I);
    Ok(Table1Orbit::Classical(OrbitPartition::new(t, &parts, marker)?))
}

/// Real forms of classical algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RealForm {
    /// `sl(n,R)`.
    SlR(usize),
    /// `su(p,q)`.
    Su(usize, usize),
    /// `so(p,q)`.
    So(usize, usize),
    /// `sp(2n,R)`.
    SpR(usize),
    /// `sp(p,q)`.
    Sp(usize, usize),
}

impl RealForm {
    /// Complexification.
    pub fn complex_type(&self) -> Result<CartanType> {
        let (kind, rank) = match *self {
            RealForm::SlR(n) => (CartanKind::A, n - 1),
            RealForm::Su(p, q) => (CartanKind::A, p + q - 1),
            RealForm::So(p, q) if (p + q) % 2 == 1 => (CartanKind::B, (p + q) / 2),
            RealForm::So(p, q) => (CartanKind::D, (p + q) / 2),
            RealForm::SpR(n) => (CartanKind::C, n),
            RealForm::Sp(p, q) => (CartanKind::C, p + q),
        };
        CartanType::new(kind, rank)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let err = || Error::InvalidType(s.into());
        let (name, args) = s.split_once('(').ok_or_else(err)?;
        let args = args.strip_suffix(')').ok_or_else(err)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|x| x.trim().trim_end_matches(",R").parse::<usize>())
            .filter_map(|r| r.ok())
            .collect();
        let has_r = args.contains('R');
        Ok(match (name, nums.as_slice(), has_r) {
            ("sl", [n], true) => RealForm::SlR(*n),
            ("su", [p, q], false) => RealForm::Su(*p, *q),
            ("so", [p, q], false) => RealForm::So(*p, *q),
            ("sp", [n], true) if n % 2 == 0 => RealForm::SpR(n / 2),
            ("sp", [p, q], false) => RealForm::Sp(*p, *q),
            _ => return Err(err()),
        })
    }
}

impl fmt::Display for RealForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RealForm::SlR(n) => write!(f, "sl({n},R)"),
            RealForm::Su(p, q) => write!(f, "su({p},{q})"),
            RealForm::So(p, q) => write!(f, "so({p},{q})"),
            RealForm::SpR(n) => write!(f, "sp({},R)", 2 * n),
            RealForm::Sp(p, q) => write!(f, "sp({p},{q})"),
        }
    }
}

/// Signed Young diagram. `signs[i]` is the sign of the first box of row `i`
/// (`0` for real forms without signs). `numeral` separates orbits that
/// share a diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPartition {
    pub real_form: RealForm,
    pub rows: Partition,
    pub signs: Vec<i8>,
    pub signature: (usize, usize),
    pub numeral: Option<u8>,
}

impl SignedPartition {
    /// Jordan type of the complexified orbit.
    pub fn complex_parts(&self) -> Partition {
        match self.real_form {
            RealForm::Sp(..) => normalize(&self.rows.iter().flat_map(|&r| [r, r]).collect::<Vec<_>>()),
            _ => self.rows.clone(),
        }
    }

    /// Real dimension, from `Σ_{i,j} min(λ_i, λ_j)` on the complex Jordan type.
    pub fn real_dim(&self) -> Result<usize> {
        let t = self.real_form.complex_type()?;
        let p = self.complex_parts();
        let mins: usize = p.iter().flat_map(|&a| p.iter().map(move |&b| a.min(b))).sum();
        let odd = p.iter().filter(|&&x| x % 2 == 1).count();
        let nat = natural_dim(t)?;
        Ok(match t.kind {
            CartanKind::A => nat * nat - mins,
            CartanKind::C => (nat * (nat + 1) - mins - odd) / 2,
            _ => (nat * (nat - 1) - mins + odd) / 2,
        })
    }
}

impl fmt::Display for SignedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.real_form)?;
        for (i, (&r, &s)) in self.rows.iter().zip(&self.signs).enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if s == 0 {
                write!(f, "{r}")?;
            } else {
                let mut c = s;
                for _ in 0..r {
                    write!(f, "{}", if c > 0 { '+' } else { '-' })?;
                    c = -c;
                }
            }
        }
        if let Some(k) = self.numeral {
            write!(f, " ({})", ["I", "II", "III", "IV"][k as usize - 1])?;
        }
        Ok(())
    }
}

/// `(+ boxes, − boxes)` of a row of length `len` starting with `sign`.
fn row_signature(len: usize, sign: i8) -> (usize, usize) {
    let big = len.div_ceil(2);
    if sign > 0 {
        (big, len - big)
    } else {
        (len - big, big)
    }
}

/// All assignments of first-box signs to the rows, one per multiset of
/// signs among rows of equal length, filtered by `allowed(len, plus, minus)`
/// on the number of rows of each length starting with + and −.
fn sign_choices(rows: &[usize], allowed: impl Fn(usize, usize, usize) -> bool) -> Vec<Vec<i8>> {
    let mults = multiplicities(rows);
    let mut out = vec![Vec::new()];
    for (len, m) in mults {
        let mut next = Vec::new();
        for plus in (0..=m).rev() {
            if !allowed(len, plus, m - plus) {
                continue;
            }
            for prefix in &out {
                let mut v = prefix.clone();
                v.extend(core::iter::repeat(1i8).take(plus));
                v.extend(core::iter::repeat(-1i8).take(m - plus));
                next.push(v);
            }
        }
        out = next;
    }
    out
}

fn signature_of(rows: &[usize], signs: &[i8]) -> (usize, usize) {
    rows.iter().zip(signs).fold((0, 0), |(p, q), (&r, &s)| {
        let (a, b) = row_signature(r, s);
        (p + a, q + b)
    })
}

/// Number of identity-component orbits carried by an `so(p,q)` diagram.
fn so_multiplicity(rows: &[usize], signs: &[i8]) -> u8 {
    let (mut e1, mut e2) = (false, false);
    for (&r, &s) in rows.iter().zip(signs) {
        if r % 2 == 0 {
            continue;
        }
        let first = (r % 4 == 1) == (s > 0);
        if first {
            e1 = true;
        } else {
            e2 = true;
        }
    }
    match (e1, e2) {
        (false, false) => 4,
        (true, true) => 1,
        _ => 2,
    }
}

/// Real forms of a complex orbit inside a real form of its algebra.
pub fn real_forms(o: &OrbitPartition, rf: RealForm) -> Result<Vec<SignedPartition>> {
    if rf.complex_type()? != o.cartan_type {
        return Err(Error::Unsupported(format!("{rf} is not a real form of {}", o.cartan_type)));
    }
    let parts = &o.parts;
    let mut out = Vec::new();
    let mk = |rows: Partition, signs: Vec<i8>, signature, numeral| SignedPartition {
        real_form: rf,
        rows,
        signs,
        signature,
        numeral,
    };
    match rf {
        RealForm::SlR(n) => {
            let unsigned = vec![0i8; parts.len()];
            if very_even(parts) {
                for k in 1..=2 {
                    out.push(mk(parts.clone(), unsigned.clone(), (n, n), Some(k)));
                }
            } else {
                out.push(mk(parts.clone(), unsigned, (n, n), None));
            }
        }
        RealForm::Su(p, q) => {
            for s in sign_choices(parts, |_, _, _| true) {
                if signature_of(parts, &s) == (p, q) {
                    out.push(mk(parts.clone(), s, (p, q), None));
                }
            }
        }
        RealForm::SpR(n) => {
            for s in sign_choices(parts, |len, a, b| len % 2 == 0 || a == b) {
                if signature_of(parts, &s) == (n, n) {
                    out.push(mk(parts.clone(), s, (n, n), None));
                }
            }
        }
        RealForm::So(p, q) => {
            if o.very_even_marker.is_some() {
                return Err(Error::Unsupported("very even orbits in so(p,q)".into()));
            }
            for s in sign_choices(parts, |len, a, b| len % 2 == 1 || a == b) {
                if signature_of(parts, &s) != (p, q) {
                    continue;
                }
                let k = if p == 0 || q == 0 { 1 } else { so_multiplicity(parts, &s) };
                if k == 1 {
                    out.push(mk(parts.clone(), s, (p, q), None));
                } else {
                    for i in 1..=k {
                        out.push(mk(parts.clone(), s.clone(), (p, q), Some(i)));
                    }
                }
            }
        }
        RealForm::Sp(p, q) => {
            // quaternionic diagram: each row appears twice in the complex type
            let mults = multiplicities(parts);
            if mults.iter().any(|&(_, m)| m % 2 == 1) {
                return Ok(out);
            }
            let rows: Partition = mults.iter().flat_map(|&(x, m)| core::iter::repeat(x).take(m / 2)).collect();
            for s in sign_choices(&rows, |len, _, b| len % 2 == 1 || b == 0) {
                if signature_of(&rows, &s) == (p, q) {
                    out.push(mk(rows.clone(), s, (p, q), None));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit(t: &str, p: &[usize]) -> OrbitPartition {
        OrbitPartition::new(CartanType::parse(t).unwrap(), p, None).unwrap()
    }

    #[test]
    fn dims() {
        assert_eq!(orbit("A3", &[2, 2]).dim(), 8);
        assert_eq!(orbit("D4", &[3, 2, 2, 1]).dim(), 16);
        assert_eq!(orbit("C3", &[1; 6]).dim(), 0);
        assert_eq!(orbit("B2", &[2, 2, 1]).dim(), 4);
        assert_eq!(orbit("C2", &[4]).dim(), 8);
    }

    #[test]
    fn validity() {
        let b1 = CartanType::parse("B1").unwrap();
        assert!(OrbitPartition::new(b1, &[2, 1], None).is_err());
        assert!(OrbitPartition::new(CartanType::parse("C2").unwrap(), &[3, 1], None).is_err());
        let d4 = CartanType::parse("D4").unwrap();
        assert!(OrbitPartition::new(d4, &[2, 2, 2, 2], None).is_err());
        assert!(OrbitPartition::new(d4, &[2, 2, 2, 2], Some(DMark::II)).is_ok());
    }

    #[test]
    fn springer() {
        assert_eq!(springer_label(&orbit("B2", &[2, 2, 1])).unwrap(), IrrepLabel::Bipartition(vec![], vec![2]));
        assert_eq!(springer_label(&orbit("D4", &[3, 2, 2, 1])).unwrap(), IrrepLabel::d(vec![], vec![2, 2], None));
        assert_eq!(springer_label(&orbit("C3", &[2, 1, 1, 1, 1])).unwrap(), IrrepLabel::Bipartition(vec![1, 1, 1], vec![]));
        assert_eq!(springer_label(&orbit("C3", &[1; 6])).unwrap(), IrrepLabel::Bipartition(vec![], vec![1, 1, 1]));
        assert_eq!(springer_label(&orbit("B3", &[7])).unwrap(), IrrepLabel::Bipartition(vec![3], vec![]));
        assert_eq!(springer_label(&orbit("D4", &[1; 8])).unwrap(), IrrepLabel::d(vec![1, 1, 1, 1], vec![], None));
    }

    #[test]
    fn real_counts() {
        let count = |t: &str, p: &[usize], rf: &str| real_forms(&orbit(t, p), RealForm::parse(rf).unwrap()).unwrap().len();
        assert_eq!(count("A3", &[2, 2], "sl(4,R)"), 2);
        assert_eq!(count("A3", &[2, 2], "su(2,2)"), 3);
        assert_eq!(count("D4", &[3, 2, 2, 1], "so(4,4)"), 4);
        assert_eq!(count("A1", &[2], "sl(2,R)"), 2);
        assert_eq!(count("B1", &[3], "so(2,1)"), 2);
        assert_eq!(count("C2", &[2, 1, 1], "sp(1,1)"), 0);
        assert_eq!(count("C1", &[2], "sp(2,R)"), 2);
    }
}
