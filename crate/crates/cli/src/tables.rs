//! Recomputed tables: small orbits, real-form counts, and R_D diagrams.

use anyhow::Result;
use genuine_smalls_core::orbits::{partition_exp, Table1Orbit};
use genuine_smalls_core::rd::{enumerate_rd, rd_class, render, DynkinDiagram};
use genuine_smalls_core::{CartanKind, CartanType, RootSystem};
use serde_json::{json, Value};

use crate::checks::{table1_compute, table2_cells};
use crate::fixtures::{self, EXCEPTIONAL, TABLE2, TABLE2_EXCEPTIONAL};
use crate::json;

pub struct Rendered {
    pub text: String,
    pub json: Value,
}

fn ct(kind: CartanKind, rank: usize) -> CartanType {
    CartanType { kind, rank }
}

fn table_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (i, c) in r.iter().enumerate() {
            w[i] = w[i].max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> =
            cells.iter().enumerate().map(|(i, c)| format!("{c}{}", " ".repeat(w[i] - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut s = line(header.to_vec());
    s +=&(w.iter().map(|&x| "-".repeat(x)).collect::<Vec<_>>().join("  ") + "\n");
    for r in rows {
        s += &line(r.iter().map(String::as_str).collect());
    }
    s
}

/// Classical rows up to `max_rank`, then the exceptional rows.
pub fn table1(max_rank: usize) -> Result<Rendered> {
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for kind in [CartanKind::A, CartanKind::B, CartanKind::C, CartanKind::D] {
        let lo = if kind == CartanKind::D { 4 } else { 2 };
        for r in lo..=max_rank {
            let t = ct(kind, r);
            let c = table1_compute(t)?;
            let Table1Orbit::Classical(o) = &c.orbit else { unreachable!() };
            let j = c.j.clone().unwrap();
            rows.push(vec![
                t.to_string(),
                fixtures::lambda_text(kind).into(),
                c.lambda.to_string(),
                c.delta.to_string(),
                c.dim.to_string(),
                partition_exp(&o.parts),
                j.to_string(),
            ]);
            out.push(json!({
                "type": t.to_string(),
                "lambda": json::weight(&c.lambda),
                "delta": c.delta.to_string(),
                "dim": c.dim,
                "orbit": json::orbit(o, c.springer.as_ref().unwrap()),
                "j_sign": json::label(&j),
            }));
        }
    }
    for row in &EXCEPTIONAL {
        let t = CartanType::parse(row.label)?;
        let c = table1_compute(t)?;
        let lam = if t.kind == CartanKind::F { "ρ^∨/2" } else { "ρ/2" };
        let j = format!("φ_{{{},{}}}{}", row.j_degree, row.j_b, row.j_prime);
        rows.push(vec![
            t.to_string(),
            lam.into(),
            c.lambda.to_string(),
            c.delta.to_string(),
            c.dim.to_string(),
            row.orbit.into(),
            j.clone(),
        ]);
        out.push(json!({
            "type": t.to_string(),
            "lambda": json::weight(&c.lambda),
            "delta": c.delta.to_string(),
            "dim": c.dim,
            "orbit": { "label": row.orbit, "dim": c.orbit.dim() },
            "j_sign": { "degree": row.j_degree, "b": row.j_b, "printed": j },
        }));
    }
    Ok(Rendered {
        text: table_text(&["type", "λ", "coordinates", "Δ(λ)", "dim O", "O", "j(sgn)"], &rows),
        json: json!({ "table": "table1", "rows": out }),
    })
}

/// Computed real-form counts next to the printed ones.
pub fn table2(max_n: usize) -> Result<Rendered> {
    let mut rows = Vec::new();
    let mut out = Vec::new();
    for col in &TABLE2 {
        let lo = match col.kind {
            CartanKind::A | CartanKind::B | CartanKind::C => 2,
            _ => 4,
        };
        for cell in table2_cells(col, lo..=max_n)? {
            rows.push(vec![
                col.kind.letter().to_string(),
                cell.n.to_string(),
                cell.group.clone(),
                cell.computed.to_string(),
                cell.printed.to_string(),
            ]);
            out.push(json!({
                "type": col.kind.letter().to_string(),
                "n": cell.n,
                "column": col.group,
                "real_forms": cell.group,
                "computed": cell.computed,
                "printed": cell.printed,
            }));
        }
    }
    let mut text = table_text(&["type", "n", "real form", "computed", "printed"], &rows);
    text += "\nexceptional columns (printed, not recomputed): ";
    text += &TABLE2_EXCEPTIONAL.iter().map(|(c, k)| format!("{c}: {k}")).collect::<Vec<_>>().join(", ");
    text += "\n";
    let exc: Vec<Value> = TABLE2_EXCEPTIONAL.iter().map(|(c, k)| json!({ "column": c, "printed": k })).collect();
    Ok(Rendered { text, json: json!({ "table": "table2", "rows": out, "exceptional": exc }) })
}

pub const TABLE3_TYPES: [&str; 13] = ["A2", "A3", "A4", "A5", "A6", "A7", "A8", "D4", "D5", "D6", "D7", "D8", "E6"];

/// Every element of R_D with its class in P/(2P+R).
pub fn table3() -> Result<Rendered> {
    let mut text = String::new();
    let mut out = Vec::new();
    for t in TABLE3_TYPES.iter().copied().chain(["E7", "E8"]) {
        let rs = RootSystem::parse(t)?;
        let d = DynkinDiagram::of(&rs)?;
        let mut elems = Vec::new();
        text += &format!("{t}\n");
        for s in enumerate_rd(&d) {
            let class = rd_class(&rs, &s)?;
            text += &format!("  {}  class {:?}\n", render(&d, &s), class.0);
            elems.push(json!({ "subset": s.0, "diagram": render(&d, &s), "class": class.0 }));
        }
        out.push(json!({ "type": t, "rd": elems }));
    }
    Ok(Rendered { text, json: json!({ "table": "table3", "types": out }) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table3_counts() {
        let v = table3().unwrap().json;
        let counts: Vec<usize> = v["types"].as_array().unwrap().iter().map(|t| t["rd"].as_array().unwrap().len()).collect();
        assert_eq!(counts, [1, 2, 1, 2, 1, 2, 1, 4, 2, 4, 2, 4, 1, 2, 1]);
    }

    #[test]
    fn table1_text_has_a_row_per_type() {
        let r = table1(4).unwrap();
        assert_eq!(r.text.lines().count(), 2 + 3 * 3 + 1 + 5);
        assert!(r.text.contains("A1×A1×A1×A1"));
    }
}
