//! Text formats: comma-separated integer lists such as `4,5,11` or `-4, -1`.
//!
//! Both semigroup generators and ideal generators use this format. Spaces
//! around entries are tolerated; empty entries are not.

use std::fmt;

use crate::error::{Error, Result};
use crate::semigroup::VALUE_LIMIT;

/// Longest accepted input, in bytes.
pub const MAX_INPUT_LEN: usize = 1 << 16;

pub fn parse_int_list(text: &str) -> Result<Vec<i64>> {
    if text.len() > MAX_INPUT_LEN {
        return Err(Error::Parse(format!(
            "input longer than {MAX_INPUT_LEN} bytes"
        )));
    }
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    trimmed
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::Parse(format!("empty entry in {trimmed:?}")));
            }
            let v: i64 = tok
                .parse()
                .map_err(|e| Error::Parse(format!("{tok:?}: {e}")))?;
            if v.abs() > VALUE_LIMIT {
                return Err(Error::Overflow { limit: VALUE_LIMIT });
            }
            Ok(v)
        })
        .collect()
}

/// Parse raw bytes; non-UTF-8 input is a parse error.
pub fn parse_int_list_bytes(data: &[u8]) -> Result<Vec<i64>> {
    let text = std::str::from_utf8(data).map_err(|e| Error::Parse(e.to_string()))?;
    parse_int_list(text)
}

pub(crate) fn write_int_list(f: &mut fmt::Formatter<'_>, values: &[i64]) -> fmt::Result {
    for (i, v) in values.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

pub fn format_int_list(values: &[i64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(",")
}
