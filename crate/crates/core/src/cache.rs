//! On-disk cache of the degree polynomials.
//!
//! The file is a JSON object keyed by genus. Each entry stores the
//! polynomial with denominators cleared:
//!
//! ```json
//! { "2": { "coeffs": { "1": -1, "3": 1 }, "den": 24, "g": 2, "indeterminate": "p" } }
//! ```
//!
//! Keys are sorted and integers are written in full, so the same content
//! always produces the same bytes.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{Map, Number, Value};

use crate::exact::{Indeterminate, Polynomial};
use crate::formulas::degree_polynomial;

#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("cache I/O failure at {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("cache file is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed cache entry: {0}")]
    Format(String),
}

fn integer(n: &BigInt) -> Value {
    Value::Number(n.to_string().parse::<Number>().expect("integer literal"))
}

fn entry_json(g: i64, poly: &Polynomial) -> Value {
    let (den, nums) = poly.cleared();
    let coeffs: Map<String, Value> = nums
        .iter()
        .enumerate()
        .filter(|(_, c)| c.sign() != num_bigint::Sign::NoSign)
        .map(|(e, c)| (e.to_string(), integer(c)))
        .collect();
    let mut entry = Map::new();
    entry.insert("coeffs".into(), Value::Object(coeffs));
    entry.insert("den".into(), integer(&den));
    entry.insert("g".into(), Value::from(g));
    entry.insert(
        "indeterminate".into(),
        Value::String(poly.indeterminate().symbol().to_string()),
    );
    Value::Object(entry)
}

/// Serialises a genus → polynomial map to the canonical text.
pub fn render_cache(polys: &BTreeMap<i64, Polynomial>) -> String {
    let doc: Map<String, Value> = polys
        .iter()
        .map(|(g, p)| (g.to_string(), entry_json(*g, p)))
        .collect();
    let mut text = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
    text.push('\n');
    text
}

fn parse_integer(v: &Value, what: &str) -> Result<BigInt, CacheError> {
    match v {
        Value::Number(n) => n
            .to_string()
            .parse::<BigInt>()
            .map_err(|_| CacheError::Format(format!("{what} is not an integer: {n}"))),
        other => Err(CacheError::Format(format!("{what} is not a number: {other}"))),
    }
}

pub fn parse_cache(text: &str) -> Result<BTreeMap<i64, Polynomial>, CacheError> {
    let doc: Value = serde_json::from_str(text)?;
    let obj = doc
        .as_object()
        .ok_or_else(|| CacheError::Format("top level is not an object".into()))?;
    let mut out = BTreeMap::new();
    for (key, entry) in obj {
        let g: i64 = key
            .parse()
            .map_err(|_| CacheError::Format(format!("genus key `{key}`")))?;
        let fields = entry
            .as_object()
            .ok_or_else(|| CacheError::Format(format!("entry {key} is not an object")))?;
        let get = |name: &str| {
            fields
                .get(name)
                .ok_or_else(|| CacheError::Format(format!("entry {key} lacks `{name}`")))
        };
        if parse_integer(get("g")?, "g")? != BigInt::from(g) {
            return Err(CacheError::Format(format!("entry {key} has a mismatched `g`")));
        }
        let var = get("indeterminate")?
            .as_str()
            .and_then(|s| {
                let mut chars = s.chars();
                match (chars.next(), chars.next()) {
                    (Some(c), None) => Indeterminate::from_symbol(c),
                    _ => None,
                }
            })
            .ok_or_else(|| CacheError::Format(format!("entry {key} has a bad indeterminate")))?;
        let den = parse_integer(get("den")?, "den")?;
        if den.sign() != num_bigint::Sign::Plus {
            return Err(CacheError::Format(format!("entry {key} has a non-positive den")));
        }
        let coeffs = get("coeffs")?
            .as_object()
            .ok_or_else(|| CacheError::Format(format!("entry {key} coeffs is not an object")))?;
        let mut nums: Vec<BigInt> = Vec::new();
        for (exp, c) in coeffs {
            let e: usize = exp
                .parse()
                .map_err(|_| CacheError::Format(format!("exponent `{exp}`")))?;
            if nums.len() <= e {
                nums.resize(e + 1, BigInt::default());
            }
            nums[e] = parse_integer(c, "coefficient")?;
        }
        out.insert(g, Polynomial::from_cleared(var, &den, &nums));
    }
    Ok(out)
}

pub fn load_cache(path: &Path) -> Result<BTreeMap<i64, Polynomial>, CacheError> {
    let text = fs::read_to_string(path).map_err(|source| CacheError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_cache(&text)
}

/// Writes `degree_polynomial(g)` for `g = 2..=max_genus`; returns the
/// number of entries written.
pub fn cache_polynomials(path: &Path, max_genus: i64) -> Result<usize, CacheError> {
    let polys: BTreeMap<i64, Polynomial> = (2..=max_genus)
        .map(|g| (g, degree_polynomial(g).expect("g >= 2")))
        .collect();
    fs::write(path, render_cache(&polys)).map_err(|source| CacheError::Io {
        path: path.display().to_string(),
        source,
    })?;
    Ok(polys.len())
}
