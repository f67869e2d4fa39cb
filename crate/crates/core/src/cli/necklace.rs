use num_bigint::BigUint;

use super::table::Table;
use super::Format;
use crate::cyclic_language::{cycrep_counts, primitive_counts};
use crate::{Error, Result};

/// Reads `a(1), a(2), ...` from a bare column or from `n,value` rows.
///
/// Explicit indices must run consecutively from 1; a leading `n = 0` row is
/// skipped so that the sequence tables written by `growth` can be fed back.
pub fn parse_counts(text: &str) -> Result<Vec<BigUint>> {
    let mut values = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with('n') {
            continue;
        }
        let err = |what: &str| Error::Config(format!("line {}: {what}: {line:?}", i + 1));
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let value = match fields.as_slice() {
            [v] => v,
            [n, v] => {
                let n: usize = n.parse().map_err(|_| err("bad index"))?;
                if n == 0 && values.is_empty() {
                    continue;
                }
                if n != values.len() + 1 {
                    return Err(err("indices must run 1, 2, 3, ..."));
                }
                v
            }
            _ => return Err(err("expected one or two fields")),
        };
        values.push(value.parse().map_err(|_| err("not a nonnegative integer"))?);
    }
    if values.is_empty() {
        return Err(Error::Config("no values".into()));
    }
    Ok(values)
}

pub fn render(a: &[BigUint], format: Format) -> Result<String> {
    let p = primitive_counts(a)?;
    let c = cycrep_counts(a)?;
    let ints = |v: &[BigUint]| v.iter().map(|x| x.to_string()).collect();
    let mut t = Table::default();
    t.column("n", (1..=a.len()).map(|n| n.to_string()).collect());
    t.column("a", ints(a));
    t.column("primitive", ints(&p));
    t.column("cycrep", ints(&c));
    Ok(t.render(format))
}
