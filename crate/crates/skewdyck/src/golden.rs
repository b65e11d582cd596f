//! Vendored reference tables. Lines starting with `#` are comments; every
//! other line is whitespace-separated integers.

use num_bigint::BigInt;

const A128729: &str = include_str!("../golden/a128729.txt");
const A128728: &str = include_str!("../golden/a128728.txt");
const LEVEL0_FORBID: &str = include_str!("../golden/level0_forbid.txt");
const LEVEL0_TRACK: &str = include_str!("../golden/level0_track.txt");
const KERNEL_ROOT: &str = include_str!("../golden/kernel_root.txt");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub token: String,
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "line {}: not an integer: {:?}", self.line, self.token)
    }
}

impl std::error::Error for ParseError {}

/// One vector per data line.
pub fn parse_rows(text: &str) -> Result<Vec<Vec<BigInt>>, ParseError> {
    let mut rows = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<BigInt>().map_err(|_| ParseError {
                    line: i + 1,
                    token: tok.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(rows)
}

/// All data lines joined into one sequence.
pub fn parse_flat(text: &str) -> Result<Vec<BigInt>, ParseError> {
    Ok(parse_rows(text)?.into_iter().flatten().collect())
}

fn flat(text: &str) -> Vec<BigInt> {
    parse_flat(text).expect("vendored table is well formed")
}

fn rows(text: &str) -> Vec<Vec<BigInt>> {
    parse_rows(text).expect("vendored table is well formed")
}

/// Avoidance sequence by half-length, 20 terms.
pub fn avoidance_sequence() -> Vec<BigInt> {
    flat(A128729)
}

/// Counting triangle by half-length, 20 rows of `t` coefficients.
pub fn counting_triangle() -> Vec<Vec<BigInt>> {
    rows(A128728)
}

/// Level-0 avoidance series in full-length `z`.
pub fn level0_forbid() -> Vec<BigInt> {
    flat(LEVEL0_FORBID)
}

/// Level-0 counting series, one row per even power of `z`.
pub fn level0_track() -> Vec<Vec<BigInt>> {
    rows(LEVEL0_TRACK)
}

/// Normalized kernel root with the factor forbidden.
pub fn kernel_root() -> Vec<BigInt> {
    flat(KERNEL_ROOT)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_parse() {
        assert_eq!(avoidance_sequence().len(), 20);
        assert_eq!(counting_triangle().len(), 20);
        assert_eq!(level0_forbid().len(), 17);
        assert_eq!(level0_track().len(), 7);
        assert_eq!(kernel_root().len(), 15);
    }

    #[test]
    fn bad_token_reports_line() {
        let err = parse_rows("# c\n1 2\n3 x\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert_eq!(err.token, "x");
    }
}
