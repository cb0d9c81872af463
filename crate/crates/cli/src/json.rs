//! JSON renderings of core values. Rationals are `[num, den]` string pairs.

use genuine_smalls_core::ktypes::{KTypeVec, PairsGrid};
use genuine_smalls_core::orbits::{OrbitPartition, SignedPartition};
use genuine_smalls_core::params::{SchemeTrace, Verdict};
use genuine_smalls_core::weylrep::{DMark, IrrepLabel};
use genuine_smalls_core::{RootSystem, Weight, Q};
use serde_json::{json, Value};

pub fn rational(x: &Q) -> Value {
    json!([x.numer().to_string(), x.denom().to_string()])
}

pub fn weight(w: &Weight) -> Value {
    Value::Array(w.coords.iter().map(rational).collect())
}

pub fn weights(ws: &[Weight]) -> Value {
    Value::Array(ws.iter().map(weight).collect())
}

/// `coords` is the canonical infinitesimal character.
pub fn root_system(rs: &RootSystem, lambda: &Weight) -> Value {
    json!({
        "type": rs.cartan_type.kind.letter().to_string(),
        "rank": rs.rank(),
        "coords": weight(lambda),
        "ambient_dim": rs.ambient_dim,
        "simple_roots": weights(&rs.simple_roots),
        "positive_roots": weights(rs.positive_roots()),
        "rho": weight(&rs.rho()),
        "cartan_matrix": rs.cartan_matrix(),
    })
}

fn mark(m: &Option<DMark>) -> Value {
    match m {
        Some(DMark::I) => json!("I"),
        Some(DMark::II) => json!("II"),
        None => Value::Null,
    }
}

pub fn label(l: &IrrepLabel) -> Value {
    match l {
        IrrepLabel::Partition(p) => json!({ "partition": p }),
        IrrepLabel::Bipartition(a, b) => json!({ "bipartition": [a, b] }),
        IrrepLabel::DBipartition { alpha, beta, mark: m } => {
            let mut v = json!({ "bipartition": [alpha, beta] });
            if m.is_some() {
                v["mark"] = mark(m);
            }
            v
        }
        IrrepLabel::DegreeB { degree, b, ambiguous } => json!({ "degree": degree, "b": b, "ambiguous": ambiguous }),
    }
}

pub fn orbit(o: &OrbitPartition, springer: &IrrepLabel) -> Value {
    let mut v = json!({
        "type": o.cartan_type.to_string(),
        "partition": o.parts,
        "dim": o.dim(),
        "springer": label(springer),
    });
    if o.very_even_marker.is_some() {
        v["very_even_marker"] = mark(&o.very_even_marker);
    }
    v
}

pub fn signed_partition(s: &SignedPartition) -> Value {
    json!({
        "real_form": s.real_form.to_string(),
        "diagram": s.to_string(),
        "rows": s.rows,
        "signs": s.signs,
        "signature": [s.signature.0, s.signature.1],
        "numeral": s.numeral,
    })
}

pub fn ktype(k: &KTypeVec) -> Value {
    json!({
        "text": k.to_string(),
        "factors": k.factors.iter().map(|f| f.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn pairs_grid(g: &PairsGrid) -> Value {
    let mut cells = Vec::new();
    for chi in 1..=g.chars {
        for orbit in 1..=g.orbits {
            let reps: Vec<Value> = g
                .entries
                .iter()
                .filter(|e| e.chi == chi && e.orbit == orbit)
                .map(|e| json!({ "name": e.name, "lowest_k_type": ktype(&e.lowest) }))
                .collect();
            cells.push(json!({ "chi": chi, "orbit": orbit, "representations": reps }));
        }
    }
    json!({
        "type": g.kind.letter().to_string(),
        "n": g.n,
        "central_characters": g.chars,
        "real_orbits": g.orbits,
        "bijective": g.is_bijective(),
        "cells": cells,
    })
}

pub fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::R => "R",
        Verdict::C => "C",
        Verdict::Survivor => "survivor",
    }
}

pub fn scheme_trace(t: &SchemeTrace) -> Value {
    let mut v = json!({
        "transformed": t.transformed,
        "label": t.label,
        "verdict": verdict(t.verdict),
    });
    if let Some(c) = &t.class {
        v["class"] = json!({ "both": c.both, "single": c.single, "beta_parity": c.beta_parity });
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use genuine_smalls_core::qf;

    #[test]
    fn rationals_are_string_pairs() {
        assert_eq!(rational(&qf(-3, 6)), json!(["-1", "2"]));
        assert_eq!(weight(&Weight::from_halves(&[3, 2])), json!([["3", "2"], ["1", "1"]]));
    }
}
