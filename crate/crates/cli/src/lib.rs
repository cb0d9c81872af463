//! Tables, dumps and the verification registry behind the `genuine-smalls`
//! binary.

pub mod cache;
pub mod checks;
pub mod fixtures;
pub mod json;
pub mod props;
pub mod tables;

use anyhow::{anyhow, Result};
use genuine_smalls_core::{CartanKind, CartanType};

/// `"D"` + rank 4, or `"D4"` with no rank.
pub fn cartan(letter: &str, rank: Option<usize>) -> Result<CartanType> {
    let t = match rank {
        Some(r) => {
            let mut ch = letter.trim().chars();
            let k = ch.next().ok_or_else(|| anyhow!("empty type"))?;
            if ch.next().is_some() {
                return Err(anyhow!("give the type as a single letter when --rank is set"));
            }
            CartanType::new(CartanKind::from_char(k.to_ascii_uppercase())?, r)?
        }
        None => CartanType::parse(letter.trim())?,
    };
    Ok(t)
}
