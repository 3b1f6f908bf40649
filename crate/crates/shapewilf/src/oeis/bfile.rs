//! The OEIS b-file format: one `index value` pair per line, `#` comments.

use std::fmt::Write as _;

use num_bigint::BigUint;

use super::OeisError;

/// One published term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub index: i64,
    pub value: BigUint,
}

/// Parses b-file text. Blank lines and lines starting with `#` are skipped;
/// errors carry the 1-based line number.
pub fn parse_bfile(text: &str) -> Result<Vec<Entry>, OeisError> {
    let mut entries: Vec<Entry> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| OeisError::Parse { line: line_no, message };
        let mut parts = line.split_whitespace();
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(format!("expected `index value`, got {line:?}")));
        };
        let index: i64 = idx.parse().map_err(|_| err(format!("bad index {idx:?}")))?;
        let value: BigUint = val.parse().map_err(|_| err(format!("bad value {val:?}")))?;
        if let Some(prev) = entries.last() {
            if index <= prev.index {
                return Err(err(format!("index {index} does not exceed {}", prev.index)));
            }
        }
        entries.push(Entry { index, value });
    }
    Ok(entries)
}

/// Writes entries back as `index value` lines.
pub fn serialize_bfile(entries: &[Entry]) -> String {
    let mut out = String::new();
    for e in entries {
        writeln!(out, "{} {}", e.index, e.value).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let text = "# A000001\n\n0 1\n1 1\n2 2\n  3   6 \n";
        let e = parse_bfile(text).unwrap();
        assert_eq!(e.len(), 4);
        assert_eq!(e[3], Entry { index: 3, value: 6u32.into() });
        assert_eq!(serialize_bfile(&e), "0 1\n1 1\n2 2\n3 6\n");
    }

    #[test]
    fn reports_the_bad_line() {
        let err = parse_bfile("1 1\n2 2\n3 x\n").unwrap_err();
        assert!(matches!(err, OeisError::Parse { line: 3, .. }), "{err}");
        assert!(matches!(parse_bfile("1 1\n1 2\n"), Err(OeisError::Parse { line: 2, .. })));
        assert!(matches!(parse_bfile("1 -5\n"), Err(OeisError::Parse { line: 1, .. })));
        assert!(matches!(parse_bfile("1 5 7\n"), Err(OeisError::Parse { line: 1, .. })));
    }

    #[test]
    fn big_values() {
        let e = parse_bfile("790 123456789012345678901234567890\n").unwrap();
        assert_eq!(serialize_bfile(&e), "790 123456789012345678901234567890\n");
    }
}
