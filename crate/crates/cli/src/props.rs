//! Randomized invariants, 1000 seeded cases each, reported as claims.

use anyhow::Result;
use genuine_smalls_core::ktypes::{interlace, interlace_prime};
use genuine_smalls_core::orbits::OrbitPartition;
use genuine_smalls_core::params::{root_type, theta_is_involution, ParamScheme, RootType};
use genuine_smalls_core::partition::{multiplicities, normalize};
use genuine_smalls_core::weylrep::DMark;
use genuine_smalls_core::{CartanKind, CartanType};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cache::Ctx;
use crate::checks::{outcome, Claim, Outcome};

pub const CASES: usize = 1000;

/// Groups whose tables are cheap enough for every run.
pub const SMALL: [&str; 13] = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "D4", "D5", "G2", "F4"];

fn run_cases(seed: u64, mut case: impl FnMut(&mut StdRng) -> Result<Option<String>>) -> Result<Outcome> {
    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..CASES {
        if let Some(why) = case(&mut rng)? {
            return Ok(outcome(false, format!("case {i} (seed {seed}): {why}")));
        }
    }
    Ok(outcome(true, format!("{CASES} cases, seed {seed}")))
}

fn partition_validity(_: &Ctx) -> Result<Outcome> {
    run_cases(1, |rng| {
        let kind = [CartanKind::A, CartanKind::B, CartanKind::C, CartanKind::D][rng.gen_range(0..4)];
        let rank = rng.gen_range(1..6) + usize::from(kind == CartanKind::D);
        let t = CartanType::new(kind, rank)?;
        let raw: Vec<usize> = (0..rng.gen_range(0..10)).map(|_| rng.gen_range(1..7)).collect();
        let p = normalize(&raw);
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
        let expect = p.iter().sum::<usize>() == natural && parity_ok;
        if OrbitPartition::new(t, &p, marker).is_ok() != expect {
            return Ok(Some(format!("{t} {p:?}: accepted = {}", !expect)));
        }
        if very_even && expect && OrbitPartition::new(t, &p, None).is_ok() {
            return Ok(Some(format!("{t} {p:?} accepted without a marker")));
        }
        Ok(None)
    })
}

fn theta_typing(_: &Ctx) -> Result<Outcome> {
    run_cases(2, |rng| {
        let n = rng.gen_range(4..8);
        let base = 2 * (n / 2);
        let c: Vec<usize> = (0..base).filter(|_| rng.gen_bool(0.5)).collect();
        let p = ParamScheme::new(CartanKind::D, n, &c)?;
        let a = &p.rs.roots[rng.gen_range(0..p.rs.roots.len())];
        let image = p.theta.apply(a);
        let kinds = [image == *a, image == a.neg(), image != *a && image != a.neg()];
        if !theta_is_involution(&p) || kinds.iter().filter(|x| **x).count() != 1 {
            return Ok(Some(format!("{} at {a}", p.label())));
        }
        if root_type(&p, a) != root_type(&p, &a.neg()) {
            return Ok(Some(format!("{a} and its negative typed differently")));
        }
        Ok(None)
    })
}

fn cayley_imaginary(_: &Ctx) -> Result<Outcome> {
    run_cases(3, |rng| {
        let n = rng.gen_range(4..8);
        let c: Vec<usize> = (0..2 * (n / 2)).filter(|_| rng.gen_bool(0.5)).collect();
        let p = ParamScheme::new(CartanKind::D, n, &c)?;
        let a = &p.rs.roots[rng.gen_range(0..p.rs.roots.len())];
        let real = root_type(&p, a) == RootType::Real;
        match p.cayley(a) {
            Ok(q) if real && root_type(&q, a) == RootType::Imaginary => Ok(None),
            Err(_) if !real => Ok(None),
            _ => Ok(Some(format!("Cayley transform of {} through {a}", p.label()))),
        }
    })
}

fn interlacing_antisymmetry(_: &Ctx) -> Result<Outcome> {
    run_cases(4, |rng| {
        let k = rng.gen_range(1..5);
        let g: Vec<i64> = (0..k).map(|_| rng.gen_range(-3..6)).collect();
        let l: Vec<i64> = (0..k).map(|_| rng.gen_range(0..6)).collect();
        if g != l && interlace(&g, &l)? && interlace(&l, &g)? {
            return Ok(Some(format!("{g:?} and {l:?} interlace both ways")));
        }
        if interlace_prime(&g, &l)? && !interlace(&g, &l)? {
            return Ok(Some(format!("{g:?} ≺′ {l:?} without ≺")));
        }
        Ok(None)
    })
}

fn sign_b(ctx: &Ctx) -> Result<Outcome> {
    run_cases(5, |rng| {
        let t = CartanType::parse(SMALL[rng.gen_range(0..SMALL.len())])?;
        let o = ctx.oracle(t)?;
        let tab = &o.table;
        let (s, e) = (&tab.irreps[tab.sign_index()], &tab.irreps[tab.trivial_index()]);
        if s.b as usize != t.num_positive() || e.b != 0 {
            return Ok(Some(format!("{t}: b(sgn) = {}, b(triv) = {}", s.b, e.b)));
        }
        Ok(None)
    })
}

fn degree_sum(ctx: &Ctx) -> Result<Outcome> {
    run_cases(6, |rng| {
        let t = CartanType::parse(SMALL[rng.gen_range(0..SMALL.len())])?;
        let tab = &ctx.oracle(t)?.table;
        let sum: u64 = tab.irreps.iter().map(|x| x.degree * x.degree).sum();
        if sum != tab.order || tab.order != t.weyl_order() {
            return Ok(Some(format!("{t}: Σ deg² = {sum}, |W| = {}", t.weyl_order())));
        }
        Ok(None)
    })
}

fn fake_degree(ctx: &Ctx) -> Result<Outcome> {
    run_cases(7, |rng| {
        let t = CartanType::parse(SMALL[rng.gen_range(0..SMALL.len())])?;
        let tab = &ctx.oracle(t)?.table;
        let x = &tab.irreps[rng.gen_range(0..tab.irreps.len())];
        let at_one: i64 = x.fake_degree.iter().sum();
        let lowest = x.fake_degree.iter().position(|&c| c != 0);
        if at_one != x.degree as i64 || lowest != Some(x.b as usize) || x.fake_degree.iter().any(|&c| c < 0) {
            return Ok(Some(format!("{t}: fake degree {:?} for degree {} and b {}", x.fake_degree, x.degree, x.b)));
        }
        Ok(None)
    })
}

pub fn claims() -> Vec<Claim> {
    type F = fn(&Ctx) -> Result<Outcome>;
    let list: [(&str, &str, &'static str, F); 7] = [
        ("partition-validity", "partition rules for nilpotent orbits", "orbits", partition_validity),
        ("theta-typing", "θ is an involution typing each root once", "params", theta_typing),
        ("cayley-imaginary", "Cayley transforms make real roots imaginary", "params", cayley_imaginary),
        ("interlacing-antisymmetry", "interlacing is antisymmetric", "ktypes", interlacing_antisymmetry),
        ("sign-b", "b(sgn) = |Δ⁺| and b(triv) = 0", "weylrep", sign_b),
        ("degree-sum", "Σ deg² = |W|", "weylrep", degree_sum),
        ("fake-degree", "fake degrees at q = 1 and their lowest term", "weylrep", fake_degree),
    ];
    list.into_iter()
        .map(|(id, anchor, module, f)| crate::checks::new_claim(format!("props.{id}"), anchor, module, Some(7), f))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::checks::Status;

    #[test]
    fn seeded_runs_repeat() {
        let ctx = Ctx::default();
        let a = interlacing_antisymmetry(&ctx).unwrap();
        let b = interlacing_antisymmetry(&ctx).unwrap();
        assert_eq!(a.status, Status::Pass);
        assert_eq!(a.detail, b.detail);
    }
}
