//! Golden values: printed table entries and exhaustively derived counts.

use genuine_smalls_core::ktypes::{lowest_checks, pairs, xi_counts};
use genuine_smalls_core::lattice::{quotient, LatticeSpec};
use genuine_smalls_core::orbits::{orbit_from_table1, real_forms, springer_label, RealForm, Table1Orbit};
use genuine_smalls_core::params::{check_salpha, count_star};
use genuine_smalls_core::partition::rect;
use genuine_smalls_core::rd::{enumerate_rd, DynkinDiagram};
use genuine_smalls_core::rootsys::{canonical_lambda, integral_subsystem};
use genuine_smalls_core::weylrep::{j_induce_sign, shape_from_lambda, IrrepLabel};
use genuine_smalls_core::{CartanKind, CartanType, RootSystem, TypeId};

fn ct(kind: CartanKind, rank: usize) -> CartanType {
    CartanType::new(kind, rank).unwrap()
}

/// Δ(λ) with the odd type A row read as A_m×A_{m−1}.
fn expected_delta(kind: CartanKind, r: usize) -> TypeId {
    use CartanKind::*;
    let parts: Vec<CartanType> = match kind {
        A => {
            let n = r + 1;
            let m = n / 2;
            let big = if n % 2 == 0 { m - 1 } else { m };
            [big, m - 1].iter().filter(|&&k| k > 0).map(|&k| ct(A, k)).collect()
        }
        B => vec![CartanType { kind: B, rank: r.div_ceil(2) }, CartanType { kind: B, rank: r / 2 }],
        C => vec![CartanType { kind: D, rank: r }],
        D => vec![CartanType { kind: D, rank: r.div_ceil(2) }, CartanType { kind: D, rank: r / 2 }],
        _ => unreachable!(),
    };
    TypeId::new(parts).normalized()
}

fn printed_dim(kind: CartanKind, r: usize) -> usize {
    match kind {
        CartanKind::A => {
            let n = r + 1;
            (n * n - n % 2) / 2
        }
        CartanKind::B | CartanKind::D => r * r - r % 2,
        CartanKind::C => 2 * r,
        _ => unreachable!(),
    }
}

fn printed_j(kind: CartanKind, r: usize) -> IrrepLabel {
    let m = (if kind == CartanKind::A { r + 1 } else { r }) / 2;
    let odd = (if kind == CartanKind::A { r + 1 } else { r }) % 2 == 1;
    let mut p = rect(2, m);
    if odd {
        p.push(1);
    }
    match kind {
        CartanKind::A => IrrepLabel::Partition(p),
        CartanKind::B => IrrepLabel::Bipartition(vec![], p),
        CartanKind::C => IrrepLabel::Bipartition(rect(1, r), vec![]),
        CartanKind::D => IrrepLabel::d(vec![], p, None),
        _ => unreachable!(),
    }
}

#[test]
fn table1_classical_rows() {
    for kind in [CartanKind::A, CartanKind::B, CartanKind::C, CartanKind::D] {
        let lo = if kind == CartanKind::D { 4 } else { 2 };
        for r in lo..=12 {
            let rs = RootSystem::build(kind, r).unwrap();
            let lambda = canonical_lambda(&rs);
            let sub = integral_subsystem(&rs, &lambda).unwrap();
            assert_eq!(sub.type_id.normalized(), expected_delta(kind, r), "{kind:?}{r}");
            let dim = 2 * (rs.num_positive() - sub.positive.len());
            assert_eq!(dim, printed_dim(kind, r), "{kind:?}{r}");
            let Table1Orbit::Classical(o) = orbit_from_table1(rs.cartan_type).unwrap() else { panic!() };
            assert_eq!(o.dim(), dim, "{kind:?}{r}");
            let j = j_induce_sign(&shape_from_lambda(&rs, &lambda).unwrap()).unwrap();
            assert_eq!(j, springer_label(&o).unwrap(), "{kind:?}{r}");
            assert_eq!(j, printed_j(kind, r), "{kind:?}{r}");
        }
    }
}

#[test]
fn table1_exceptional_rows() {
    for (t, delta, dim, b) in [
        ("E6", "A1×A5", 40, 16),
        ("E7", "A7", 70, 28),
        ("E8", "D8", 128, 56),
        // the integral coroots of F4 form the printed B4
        ("F4", "C4", 16, 16),
        ("G2", "A1×A1", 8, 2),
    ] {
        let rs = RootSystem::parse(t).unwrap();
        let sub = integral_subsystem(&rs, &canonical_lambda(&rs)).unwrap();
        assert_eq!(sub.type_id.normalized(), TypeId::parse(delta).unwrap(), "{t}");
        assert_eq!(2 * (rs.num_positive() - sub.positive.len()), dim, "{t}");
        assert_eq!(orbit_from_table1(rs.cartan_type).unwrap().dim(), dim);
        assert_eq!(sub.positive.len(), b, "{t}");
    }
}

#[test]
fn rd_matches_two_p_plus_r() {
    let expect = [
        ("A2", 1),
        ("A3", 2),
        ("A4", 1),
        ("A5", 2),
        ("A6", 1),
        ("A7", 2),
        ("A8", 1),
        ("D4", 4),
        ("D5", 2),
        ("D6", 4),
        ("D7", 2),
        ("D8", 4),
        ("E6", 1),
        ("E7", 2),
        ("E8", 1),
    ];
    for (t, k) in expect {
        let rs = RootSystem::parse(t).unwrap();
        let rd = enumerate_rd(&DynkinDiagram::of(&rs).unwrap());
        assert_eq!(rd.len(), k, "{t}");
        let qt = quotient(&rs, &LatticeSpec::P, &LatticeSpec::TwoPPlusR).unwrap();
        assert_eq!(qt.order() as usize, k, "{t}");
    }
}

#[test]
fn params_grid() {
    for n in 4..=12 {
        assert!(check_salpha(n).unwrap(), "n = {n}");
    }
    for n in 3..=10 {
        assert_eq!(count_star(CartanKind::A, n).unwrap(), if n % 2 == 0 { 2 } else { 1 }, "A n = {n}");
    }
    for n in 4..=9 {
        assert_eq!(count_star(CartanKind::D, n).unwrap(), if n % 2 == 0 { 4 } else { 2 }, "D{n}");
    }
}

#[test]
fn real_form_counts() {
    for n in 2..=10usize {
        let o = match orbit_from_table1(ct(CartanKind::A, n - 1)).unwrap() {
            Table1Orbit::Classical(o) => o,
            _ => unreachable!(),
        };
        assert_eq!(real_forms(&o, RealForm::SlR(n)).unwrap().len(), if n % 2 == 0 { 2 } else { 1 });
    }
    for n in 4..=9usize {
        let o = match orbit_from_table1(ct(CartanKind::D, n)).unwrap() {
            Table1Orbit::Classical(o) => o,
            _ => unreachable!(),
        };
        assert_eq!(real_forms(&o, RealForm::So(n, n)).unwrap().len(), if n % 2 == 0 { 4 } else { 2 });
    }
}

#[test]
fn spin44_table() {
    let checks = lowest_checks(4, 6).unwrap();
    assert_eq!(checks.len(), 16);
    for c in &checks {
        assert!(c.matches_row() && c.matches_grid(), "{}: {}", c.name, c.computed);
    }
    let g = pairs(CartanKind::D, 4, 8).unwrap();
    assert!(g.is_bijective());
    let x = xi_counts(CartanKind::D, 4).unwrap();
    assert_eq!((x.pi_s, x.p_o, x.bijective), (16, 16, true));
    let x = xi_counts(CartanKind::A, 8).unwrap();
    assert_eq!((x.pi_s, x.p_o, x.bijective), (4, 4, false));
}
