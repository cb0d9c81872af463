//! Character tables shared between checks, with an optional on-disk JSON
//! cache in `$GENUINE_SMALLS_CACHE`.

use std::collections::HashMap;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use anyhow::{anyhow, bail, Context, Result};
use genuine_smalls_core::oracle::{CharTable, ClassInfo, Irrep, WeylGroup};
use genuine_smalls_core::CartanType;
use serde_json::{json, Value};

pub const CACHE_ENV: &str = "GENUINE_SMALLS_CACHE";

/// An enumerated Weyl group with its class map and character table.
pub struct Oracle {
    pub group: WeylGroup,
    pub class_of: Vec<u32>,
    pub table: CharTable,
}

type Slot = Arc<OnceLock<std::result::Result<Arc<Oracle>, String>>>;

#[derive(Default)]
pub struct Ctx {
    pub cache_dir: Option<PathBuf>,
    /// Print a line to stderr before each table computation.
    pub progress: bool,
    oracles: Mutex<HashMap<CartanType, Slot>>,
}

impl Ctx {
    pub fn new(cache_dir: Option<PathBuf>) -> Self {
        Ctx { cache_dir, ..Ctx::default() }
    }

    pub fn from_env() -> Self {
        Self::new(std::env::var_os(CACHE_ENV).map(PathBuf::from))
    }

    /// Computed once per type, concurrent callers wait for the first.
    pub fn oracle(&self, t: CartanType) -> Result<Arc<Oracle>> {
        let slot = self.oracles.lock().unwrap().entry(t).or_default().clone();
        slot.get_or_init(|| self.build(t).map(Arc::new).map_err(|e| format!("{e:#}")))
            .clone()
            .map_err(|e| anyhow!(e))
    }

    fn build(&self, t: CartanType) -> Result<Oracle> {
        if self.progress {
            eprintln!("building W({t}), order {}", t.weyl_order());
        }
        let group = WeylGroup::new(t)?;
        let (_, class_of) = group.classes();
        let cached = match &self.cache_dir {
            Some(dir) => load(dir, t)?,
            None => None,
        };
        let table = match cached {
            Some(table) if same_classes(&table, &group, &class_of) => table,
            _ => {
                if self.progress {
                    eprintln!("computing the character table of W({t})");
                }
                let table = CharTable::from_group(&group)?;
                if let Some(dir) = &self.cache_dir {
                    store(dir, &table)?;
                }
                table
            }
        };
        Ok(Oracle { group, class_of, table })
    }
}

/// A cached table is only trusted when its class representatives sit in
/// the classes the group assigns them.
fn same_classes(table: &CharTable, g: &WeylGroup, class_of: &[u32]) -> bool {
    table.classes.iter().enumerate().all(|(i, c)| g.index_of(&c.rep).is_some_and(|x| class_of[x] as usize == i))
}

pub fn cache_path(dir: &Path, t: CartanType) -> PathBuf {
    dir.join(format!("chartable-{t}.json"))
}

pub fn load(dir: &Path, t: CartanType) -> Result<Option<CharTable>> {
    let p = cache_path(dir, t);
    if !p.exists() {
        return Ok(None);
    }
    let text = std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display()))?;
    let v: Value = serde_json::from_str(&text).with_context(|| format!("parsing {}", p.display()))?;
    let table = table_from_json(&v)?;
    if table.cartan_type != t {
        bail!("{} holds {}", p.display(), table.cartan_type);
    }
    Ok(Some(table))
}

pub fn store(dir: &Path, table: &CharTable) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    let p = cache_path(dir, table.cartan_type);
    let text = serde_json::to_string_pretty(&table_to_json(table))? + "\n";
    std::fs::write(&p, text).with_context(|| format!("writing {}", p.display()))
}

pub fn table_to_json(t: &CharTable) -> Value {
    json!({
        "type": t.cartan_type.to_string(),
        "order": t.order,
        "invariant_degrees": t.invariant_degrees,
        "classes": t.classes.iter().map(|c| json!({
            "size": c.size,
            "rep": c.rep,
            "det": c.det,
            "det_poly": c.det_poly,
        })).collect::<Vec<_>>(),
        "irreps": t.irreps.iter().map(|x| json!({
            "degree": x.degree,
            "b": x.b,
            "values": x.values,
            "fake_degree": x.fake_degree,
        })).collect::<Vec<_>>(),
    })
}

fn field<'a>(v: &'a Value, k: &str) -> Result<&'a Value> {
    v.get(k).ok_or_else(|| anyhow!("missing field {k}"))
}

fn u64s(v: &Value) -> Result<Vec<u64>> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected an array"))?
        .iter()
        .map(|x| x.as_u64().ok_or_else(|| anyhow!("expected an unsigned integer")))
        .collect()
}

fn i64s(v: &Value) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| anyhow!("expected an array"))?
        .iter()
        .map(|x| x.as_i64().ok_or_else(|| anyhow!("expected an integer")))
        .collect()
}

pub fn table_from_json(v: &Value) -> Result<CharTable> {
    let t = CartanType::parse(field(v, "type")?.as_str().ok_or_else(|| anyhow!("type"))?)?;
    let classes = field(v, "classes")?
        .as_array()
        .ok_or_else(|| anyhow!("classes"))?
        .iter()
        .map(|c| {
            Ok(ClassInfo {
                size: field(c, "size")?.as_u64().ok_or_else(|| anyhow!("size"))?,
                rep: u64s(field(c, "rep")?)?.into_iter().map(|x| x as u8).collect(),
                det: field(c, "det")?.as_i64().ok_or_else(|| anyhow!("det"))?,
                det_poly: i64s(field(c, "det_poly")?)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let irreps = field(v, "irreps")?
        .as_array()
        .ok_or_else(|| anyhow!("irreps"))?
        .iter()
        .map(|x| {
            Ok(Irrep {
                degree: field(x, "degree")?.as_u64().ok_or_else(|| anyhow!("degree"))?,
                b: field(x, "b")?.as_u64().ok_or_else(|| anyhow!("b"))? as u32,
                values: i64s(field(x, "values")?)?,
                fake_degree: i64s(field(x, "fake_degree")?)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CharTable {
        cartan_type: t,
        order: field(v, "order")?.as_u64().ok_or_else(|| anyhow!("order"))?,
        classes,
        irreps,
        invariant_degrees: u64s(field(v, "invariant_degrees")?)?.into_iter().map(|x| x as u32).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_round_trip() {
        let t = CharTable::compute(CartanType::parse("B3").unwrap()).unwrap();
        assert_eq!(table_from_json(&table_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn oracle_is_shared() {
        let ctx = Ctx::default();
        let t = CartanType::parse("A3").unwrap();
        assert!(Arc::ptr_eq(&ctx.oracle(t).unwrap(), &ctx.oracle(t).unwrap()));
    }
}
