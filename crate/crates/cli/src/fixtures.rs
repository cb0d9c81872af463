//! Entries of the printed tables, transcribed as data. Nothing here is
//! computed; checks compare these against the core crate.

use genuine_smalls_core::orbits::RealForm;
use genuine_smalls_core::partition::{rect, Partition};
use genuine_smalls_core::weylrep::IrrepLabel;
use genuine_smalls_core::{CartanKind, CartanType, TypeId};

fn ct(kind: CartanKind, rank: usize) -> CartanType {
    CartanType { kind, rank }
}

/// The `n` of a classical row: `n` of `sl_n` for type A, the rank otherwise.
pub fn row_n(kind: CartanKind, rank: usize) -> usize {
    if kind == CartanKind::A {
        rank + 1
    } else {
        rank
    }
}

pub fn lambda_text(kind: CartanKind) -> &'static str {
    match kind {
        CartanKind::B => "ρ(C_n)/2",
        CartanKind::C => "ρ(B_n)",
        _ => "ρ/2",
    }
}

/// Δ(λ) exactly as printed. The odd type A row reads A_{m−1}×A_{m−1}.
pub fn printed_delta(kind: CartanKind, rank: usize) -> TypeId {
    let n = row_n(kind, rank);
    let m = n / 2;
    let parts = match kind {
        CartanKind::A => vec![ct(CartanKind::A, m - 1), ct(CartanKind::A, m - 1)],
        CartanKind::B => vec![ct(CartanKind::B, n.div_ceil(2)), ct(CartanKind::B, m)],
        CartanKind::C => vec![ct(CartanKind::D, n)],
        CartanKind::D => vec![ct(CartanKind::D, n.div_ceil(2)), ct(CartanKind::D, m)],
        _ => vec![],
    };
    TypeId::new(parts).normalized()
}

/// The odd type A row with the rank forced by the printed dimension,
/// A_m×A_{m−1}.
pub fn corrected_delta(kind: CartanKind, rank: usize) -> TypeId {
    let n = row_n(kind, rank);
    if kind == CartanKind::A && n % 2 == 1 {
        let m = n / 2;
        return TypeId::new(vec![ct(CartanKind::A, m), ct(CartanKind::A, m - 1)]).normalized();
    }
    printed_delta(kind, rank)
}

pub fn printed_dim(kind: CartanKind, rank: usize) -> usize {
    let n = row_n(kind, rank);
    match kind {
        CartanKind::A => (n * n - n % 2) / 2,
        CartanKind::B | CartanKind::D => n * n - n % 2,
        _ => 2 * n,
    }
}

pub fn printed_orbit(kind: CartanKind, rank: usize) -> Partition {
    let n = row_n(kind, rank);
    let m = n / 2;
    let odd = n % 2 == 1;
    match kind {
        CartanKind::A if odd => [rect(2, m), vec![1]].concat(),
        CartanKind::A => rect(2, m),
        CartanKind::B if odd => [rect(2, n - 1), rect(1, 3)].concat(),
        CartanKind::B => [rect(2, n), vec![1]].concat(),
        CartanKind::C => [vec![2], rect(1, 2 * n - 2)].concat(),
        CartanKind::D if odd => [vec![3], rect(2, n - 3), rect(1, 3)].concat(),
        _ => [vec![3], rect(2, n - 2), vec![1]].concat(),
    }
}

pub fn printed_j(kind: CartanKind, rank: usize) -> IrrepLabel {
    let n = row_n(kind, rank);
    let mut p = rect(2, n / 2);
    if n % 2 == 1 {
        p.push(1);
    }
    match kind {
        CartanKind::A => IrrepLabel::Partition(p),
        CartanKind::B => IrrepLabel::Bipartition(vec![], p),
        CartanKind::C => IrrepLabel::Bipartition(rect(1, n), vec![]),
        _ => IrrepLabel::d(vec![], p, None),
    }
}

pub struct ExceptionalRow {
    pub label: &'static str,
    pub delta: &'static str,
    pub dim: usize,
    pub orbit: &'static str,
    pub j_degree: u64,
    pub j_b: u32,
    /// `"'"`, `"''"` or empty.
    pub j_prime: &'static str,
}

pub const EXCEPTIONAL: [ExceptionalRow; 5] = [
    ExceptionalRow { label: "E6", delta: "A1×A5", dim: 40, orbit: "3A1", j_degree: 15, j_b: 16, j_prime: "" },
    ExceptionalRow { label: "E7", delta: "A7", dim: 70, orbit: "4A1", j_degree: 15, j_b: 28, j_prime: "" },
    ExceptionalRow { label: "E8", delta: "D8", dim: 128, orbit: "4A1", j_degree: 50, j_b: 56, j_prime: "" },
    ExceptionalRow { label: "F4", delta: "B4", dim: 16, orbit: "A1", j_degree: 2, j_b: 16, j_prime: "''" },
    ExceptionalRow { label: "G2", delta: "A1×A1", dim: 8, orbit: "Ã1", j_degree: 2, j_b: 2, j_prime: "" },
];

pub fn exceptional(label: &str) -> Option<&'static ExceptionalRow> {
    EXCEPTIONAL.iter().find(|r| r.label == label)
}

/// One column of the real-forms table.
#[derive(Debug, Clone, Copy)]
pub struct Table2Column {
    pub id: &'static str,
    pub kind: CartanKind,
    pub group: &'static str,
    /// `Some(p)` when the column is for `n ≡ p (mod 2)`.
    pub parity: Option<usize>,
    pub printed: usize,
}

pub const TABLE2: [Table2Column; 14] = [
    Table2Column { id: "sl", kind: CartanKind::A, group: "SL(n,R)", parity: Some(0), printed: 2 },
    Table2Column { id: "sl", kind: CartanKind::A, group: "SL(n,R)", parity: Some(1), printed: 1 },
    Table2Column { id: "su", kind: CartanKind::A, group: "SU(m,m)", parity: Some(0), printed: 1 },
    Table2Column { id: "su", kind: CartanKind::A, group: "SU(m+1,m)", parity: Some(1), printed: 2 },
    Table2Column { id: "split-b", kind: CartanKind::B, group: "Spin(n+1,n)", parity: Some(0), printed: 2 },
    Table2Column { id: "split-b", kind: CartanKind::B, group: "Spin(n+1,n)", parity: Some(1), printed: 1 },
    Table2Column { id: "b-nonsplit", kind: CartanKind::B, group: "Spin(n+2,n-1)", parity: Some(1), printed: 1 },
    Table2Column { id: "sp-real", kind: CartanKind::C, group: "Sp(2n,R)", parity: None, printed: 2 },
    Table2Column { id: "sp-pq", kind: CartanKind::C, group: "Sp(2p,2q)", parity: None, printed: 1 },
    Table2Column { id: "split-d", kind: CartanKind::D, group: "Spin(n,n)", parity: Some(0), printed: 1 },
    Table2Column { id: "split-d", kind: CartanKind::D, group: "Spin(n,n)", parity: Some(1), printed: 2 },
    Table2Column { id: "d-near-split", kind: CartanKind::D, group: "Spin(n+1,n-1)", parity: Some(0), printed: 2 },
    Table2Column { id: "d-near-split", kind: CartanKind::D, group: "Spin(n+1,n-1)", parity: Some(1), printed: 1 },
    Table2Column { id: "d-quasi", kind: CartanKind::D, group: "Spin(n+2,n-2)", parity: Some(1), printed: 1 },
];

impl Table2Column {
    pub fn applies(&self, n: usize) -> bool {
        self.parity.is_none_or(|p| n % 2 == p)
    }

    /// Real forms of the Lie algebra covered by the column at this `n`.
    pub fn real_forms(&self, n: usize) -> Vec<RealForm> {
        let m = n / 2;
        match (self.id, n % 2) {
            ("sl", _) => vec![RealForm::SlR(n)],
            ("su", 0) => vec![RealForm::Su(m, m)],
            ("su", _) => vec![RealForm::Su(m + 1, m)],
            ("split-b", _) => vec![RealForm::So(n + 1, n)],
            ("b-nonsplit", _) => vec![RealForm::So(n + 2, n - 1)],
            ("sp-real", _) => vec![RealForm::SpR(n)],
            ("sp-pq", _) => (1..n).map(|p| RealForm::Sp(p, n - p)).collect(),
            ("split-d", _) => vec![RealForm::So(n, n)],
            ("d-near-split", _) => vec![RealForm::So(n + 1, n - 1)],
            _ => vec![RealForm::So(n + 2, n - 2)],
        }
    }

    pub fn cartan(&self, n: usize) -> CartanType {
        ct(self.kind, if self.kind == CartanKind::A { n - 1 } else { n })
    }
}

/// Exceptional columns, kept for display only.
pub const TABLE2_EXCEPTIONAL: [(&str, usize); 6] =
    [("E6(A1×A5)", 2), ("E6(C4)", 1), ("E7(A7)", 2), ("E8(D8)", 1), ("F4(B4)", 1), ("G2(A1×A1)", 1)];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_a_row_differs_only_in_delta() {
        let (k, r) = (CartanKind::A, 6);
        assert_eq!(printed_delta(k, r).to_string(), "A2×A2");
        assert_eq!(corrected_delta(k, r).to_string(), "A2×A3");
        assert_eq!(printed_dim(k, r), 24);
    }

    #[test]
    fn table2_columns_cover_each_n_once() {
        for id in ["sl", "su", "split-b", "split-d", "d-near-split"] {
            for n in 4..=9 {
                assert_eq!(TABLE2.iter().filter(|c| c.id == id && c.applies(n)).count(), 1, "{id} {n}");
            }
        }
    }
}
