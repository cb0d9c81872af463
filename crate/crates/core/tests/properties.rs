use std::collections::HashMap;
use std::sync::OnceLock;

use genuine_smalls_core::ktypes::{interlace, interlace_prime};
use genuine_smalls_core::oracle::CharTable;
use genuine_smalls_core::orbits::OrbitPartition;
use genuine_smalls_core::params::{root_type, ParamScheme, RootType};
use genuine_smalls_core::partition::{multiplicities, normalize};
use genuine_smalls_core::weylrep::DMark;
use genuine_smalls_core::{CartanKind, CartanType};
use proptest::prelude::*;

const SMALL: [&str; 13] = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4"];

fn tables() -> &'static HashMap<&'static str, CharTable> {
    static T: OnceLock<HashMap<&'static str, CharTable>> = OnceLock::new();
    T.get_or_init(|| {
        SMALL
            .iter()
            .map(|t| (*t, CharTable::compute(CartanType::parse(t).unwrap()).unwrap()))
            .collect()
    })
}

fn cfg() -> ProptestConfig {
    ProptestConfig { cases: 1000, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn orbit_partition_rules(kind in 0usize..4, rank in 1usize..6, raw in prop::collection::vec(1usize..7, 0..10)) {
        let kind = [CartanKind::A, CartanKind::B, CartanKind::C, CartanKind::D][kind];
        let rank = if kind == CartanKind::D { rank + 1 } else { rank };
        let t = CartanType::new(kind, rank).unwrap();
        let p = normalize(&raw);
        let size: usize = p.iter().sum();
        let natural = match kind {
            CartanKind::A => rank + 1,
            CartanKind::B => 2 * rank + 1,
            _ => 2 * rank,
        };
        let m = multiplicities(&p);
        let parity_ok = match kind {
            CartanKind::B | CartanKind::D => m.iter().all(|&(x, k)| x % 2 == 1 || k % 2 == 0),
            CartanKind::C => m.iter().all(|&(x, k)| x % 2 == 0 || k % 2 == 0),
            _ => true,
        };
        let very_even = kind == CartanKind::D && !p.is_empty() && p.iter().all(|x| x % 2 == 0);
        let marker = very_even.then_some(DMark::II);
        let expect = size == natural && parity_ok;
        prop_assert_eq!(OrbitPartition::new(t, &p, marker).is_ok(), expect);
        if very_even && expect {
            prop_assert!(OrbitPartition::new(t, &p, None).is_err());
        }
        if !very_even {
            prop_assert!(OrbitPartition::new(t, &p, Some(DMark::I)).is_err());
        }
        // unsorted input is never a partition
        if raw.len() >= 2 && raw.windows(2).any(|w| w[0] < w[1]) {
            prop_assert!(OrbitPartition::new(t, &raw, marker).is_err());
        }
    }

    #[test]
    fn theta_typing(n in 4usize..8, mask in 0u32..256, root in 0usize..200) {
        let base = 2 * (n / 2);
        let c: Vec<usize> = (0..base).filter(|i| mask >> i & 1 == 1).collect();
        let p = ParamScheme::new(CartanKind::D, n, &c).unwrap();
        let a = &p.rs.roots[root % p.rs.roots.len()];
        let t = root_type(&p, a);
        prop_assert_eq!(t, root_type(&p, &a.neg()));
        let image = p.theta.apply(a);
        let count = [image == *a, image == a.neg(), image != *a && image != a.neg()].iter().filter(|x| **x).count();
        prop_assert_eq!(count, 1);
        if t == RootType::Real {
            let q = p.cayley(a).unwrap();
            prop_assert_eq!(root_type(&q, a), RootType::Imaginary);
        } else {
            prop_assert!(p.cayley(a).is_err());
        }
    }

    #[test]
    fn interlacing_antisymmetric(g in prop::collection::vec(-3i64..6, 1..5), l in prop::collection::vec(0i64..6, 1..5)) {
        let k = g.len().min(l.len());
        let (g, l) = (&g[..k], &l[..k]);
        if g != l {
            let both = interlace(g, l).unwrap() && interlace(l, g).unwrap();
            prop_assert!(!both);
        }
        prop_assert!(!interlace_prime(g, l).unwrap() || interlace(g, l).unwrap());
        let mut sorted = l.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert!(interlace(&sorted, &sorted).unwrap());
    }

    #[test]
    fn sign_b_and_degree_sum(i in 0usize..13) {
        let name = SMALL[i];
        let table = &tables()[name];
        let t = CartanType::parse(name).unwrap();
        let sgn = &table.irreps[table.sign_index()];
        prop_assert_eq!(sgn.b as usize, t.num_positive());
        let triv = &table.irreps[table.trivial_index()];
        prop_assert_eq!(triv.b, 0);
        let sum: u64 = table.irreps.iter().map(|x| x.degree * x.degree).sum();
        prop_assert_eq!(sum, table.order);
        prop_assert_eq!(table.order, t.weyl_order());
    }
}
