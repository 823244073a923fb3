//! Loader for the reference data file. Every block is instantiated through
//! the case constructors and compared field by field; the file and the code
//! validate each other, catching transcription drift in either place.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::rootsys::{format_types, parse_types, CartanType, Weight};

use super::cases::{instantiate_case, DictOrientation};

const DATA: &str = include_str!("cases.sphdb");

struct Block {
    id: String,
    params: BTreeMap<String, i64>,
    ambient: String,
    gens: Vec<String>,
    roots: Vec<String>,
    normalized: Option<Vec<String>>,
    rxtype: String,
    mult: Option<i64>,
}

fn parse_blocks() -> Result<Vec<Block>> {
    let mut blocks = Vec::new();
    let mut current: Option<Block> = None;
    for (lineno, raw) in DATA.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |msg: &str| {
            Error::DataValidation(format!("cases.sphdb line {}: {}", lineno + 1, msg))
        };
        let (key, rest) = match line.split_once(' ') {
            Some((k, r)) => (k, r.trim()),
            None => (line, ""),
        };
        match key {
            "case" => {
                if current.is_some() {
                    return Err(bad("nested case block"));
                }
                let mut parts = rest.split_whitespace();
                let id = parts.next().ok_or_else(|| bad("missing case id"))?;
                let mut params = BTreeMap::new();
                for kv in parts {
                    let (k, v) = kv
                        .split_once('=')
                        .ok_or_else(|| bad("malformed parameter"))?;
                    params.insert(
                        k.to_string(),
                        v.parse::<i64>().map_err(|_| bad("non-integer parameter"))?,
                    );
                }
                current = Some(Block {
                    id: id.to_string(),
                    params,
                    ambient: String::new(),
                    gens: Vec::new(),
                    roots: Vec::new(),
                    normalized: None,
                    rxtype: String::new(),
                    mult: None,
                });
            }
            "end" => {
                blocks.push(current.take().ok_or_else(|| bad("end without case"))?);
            }
            _ => {
                let block = current.as_mut().ok_or_else(|| bad("field outside case"))?;
                let items = |s: &str| -> Vec<String> {
                    s.split(';').map(|x| x.trim().to_string()).collect()
                };
                match key {
                    "ambient" => block.ambient = rest.to_string(),
                    "gens" => block.gens = items(rest),
                    "roots" => block.roots = items(rest),
                    "normalized" => block.normalized = Some(items(rest)),
                    "rxtype" => block.rxtype = rest.to_string(),
                    "mult" => {
                        block.mult =
                            Some(rest.parse::<i64>().map_err(|_| bad("non-integer mult"))?)
                    }
                    _ => return Err(bad(&format!("unknown field {}", key))),
                }
            }
        }
    }
    if current.is_some() {
        return Err(Error::DataValidation("unterminated case block".into()));
    }
    Ok(blocks)
}

/// Parse a linear combination like `2a1+a3` or `w4+w5` into a coordinate
/// vector of the given length.
fn parse_combo(s: &str, letter: char, rank: usize, context: &str) -> Result<Vec<i64>> {
    let mut out = vec![0i64; rank];
    for term in s.split('+') {
        let term = term.trim();
        let pos = term.find(letter).ok_or_else(|| {
            Error::DataValidation(format!("{}: bad term '{}' in '{}'", context, term, s))
        })?;
        let coeff: i64 = if pos == 0 {
            1
        } else {
            term[..pos]
                .parse()
                .map_err(|_| Error::DataValidation(format!("{}: bad coefficient in {}", context, term)))?
        };
        let idx: usize = term[pos + 1..]
            .parse()
            .map_err(|_| Error::DataValidation(format!("{}: bad index in {}", context, term)))?;
        if idx == 0 || idx > rank {
            return Err(Error::DataValidation(format!(
                "{}: index {} out of range {}",
                context, idx, rank
            )));
        }
        out[idx - 1] += coeff;
    }
    Ok(out)
}

fn sorted_types(s: &str) -> Result<Vec<CartanType>> {
    let mut t = parse_types(s)?;
    t.sort();
    Ok(t)
}

/// Instantiate every reference block and compare against the constructors.
/// Returns the number of validated blocks.
pub fn validate_database() -> Result<usize> {
    let blocks = parse_blocks()?;
    for b in &blocks {
        let ctx = format!("{} {:?}", b.id, b.params);
        let case = instantiate_case(&b.id, &b.params, DictOrientation::Default)
            .map_err(|e| Error::DataValidation(format!("{}: {}", ctx, e)))?;
        let fail = |what: &str| -> Error {
            Error::DataValidation(format!("{}: {} disagrees with the data file", ctx, what))
        };

        if format_types(case.ambient.types()) != b.ambient {
            return Err(fail("ambient type"));
        }
        let rank = case.ambient.rank();
        let gens: Vec<Weight> = b
            .gens
            .iter()
            .map(|s| parse_combo(s, 'w', rank, &ctx).map(Weight))
            .collect::<Result<_>>()?;
        if gens != case.gens {
            return Err(fail("generators"));
        }
        let roots: Vec<Vec<i64>> = b
            .roots
            .iter()
            .map(|s| parse_combo(s, 'a', rank, &ctx))
            .collect::<Result<_>>()?;
        if roots != case.delta_n {
            return Err(fail("spherical roots"));
        }
        let normalized: Vec<Vec<i64>> = match &b.normalized {
            Some(lines) => lines
                .iter()
                .map(|s| parse_combo(s, 'a', rank, &ctx))
                .collect::<Result<_>>()?,
            None => roots.clone(),
        };
        if normalized != case.delta_x {
            return Err(fail("normalized spherical roots"));
        }
        let mut got = case.rx_types();
        got.sort();
        if got != sorted_types(&b.rxtype)? {
            return Err(fail("root datum type"));
        }
        if b.mult != case.mult_m {
            return Err(fail("multiplicity"));
        }
    }
    Ok(blocks.len())
}
