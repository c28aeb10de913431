//! The text format for matrices: a `rows cols` header, then one line of
//! `0`/`1` characters per row.  `#` starts a comment line; blank lines and
//! spaces inside data lines are ignored.  Parse errors carry 1-based line
//! numbers.

use std::path::Path;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;

/// Parsed matrices may not exceed this many bits (desk-scale guard against
/// absurd headers).
const MAX_BITS: u128 = 1 << 30;

fn format_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Format {
        line,
        msg: msg.into(),
    }
}

/// Parses the text format. See the module docs for the grammar.
pub fn parse_matrix(text: &str) -> Result<BitMatrix> {
    let mut header: Option<(usize, usize)> = None;
    let mut matrix: Option<BitMatrix> = None;
    let mut filled = 0usize;
    let mut last_line = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match header {
            None => {
                let mut parts = line.split_whitespace();
                let rows = parse_dim(parts.next(), lineno, "rows")?;
                let cols = parse_dim(parts.next(), lineno, "cols")?;
                if parts.next().is_some() {
                    return Err(format_err(lineno, "header must be exactly `rows cols`"));
                }
                if (rows as u128) * (cols as u128) > MAX_BITS {
                    return Err(Error::SizeOverflow(format!(
                        "{rows} x {cols} matrix exceeds the {MAX_BITS}-bit cap"
                    )));
                }
                header = Some((rows, cols));
                matrix = Some(BitMatrix::zeros(rows, cols));
            }
            Some((rows, cols)) => {
                if filled == rows {
                    return Err(format_err(
                        lineno,
                        format!("expected {rows} data lines, found more"),
                    ));
                }
                let m = matrix.as_mut().expect("set together with header");
                let mut col = 0usize;
                for ch in raw.chars() {
                    match ch {
                        ' ' | '\t' => continue,
                        '0' | '1' => {
                            if col == cols {
                                return Err(format_err(
                                    lineno,
                                    format!("row has more than {cols} entries"),
                                ));
                            }
                            if ch == '1' {
                                m.set(filled, col, true);
                            }
                            col += 1;
                        }
                        _ => {
                            return Err(format_err(
                                lineno,
                                format!("invalid character {ch:?}; expected '0' or '1'"),
                            ));
                        }
                    }
                }
                if col != cols {
                    return Err(format_err(
                        lineno,
                        format!("row has {col} entries, expected {cols}"),
                    ));
                }
                filled += 1;
            }
        }
    }
    let Some((rows, _)) = header else {
        return Err(format_err(last_line.max(1), "missing `rows cols` header"));
    };
    if filled != rows {
        return Err(format_err(
            last_line.max(1),
            format!("expected {rows} data lines, found {filled}"),
        ));
    }
    Ok(matrix.expect("set together with header"))
}

fn parse_dim(token: Option<&str>, lineno: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| format_err(lineno, format!("header is missing {what}")))?;
    token.parse::<usize>().map_err(|_| {
        format_err(
            lineno,
            format!("{what} must be a non-negative integer, got {token:?}"),
        )
    })
}

/// Renders a matrix in the text format (inverse of [`parse_matrix`]).
#[must_use]
pub fn format_matrix(m: &BitMatrix) -> String {
    let mut out = String::with_capacity(8 + m.rows() * (m.cols() + 1));
    out.push_str(&format!("{} {}\n", m.rows(), m.cols()));
    for i in 0..m.rows() {
        out.push_str(&m.row(i).to_string());
        out.push('\n');
    }
    out
}

/// Reads and parses a matrix file.
pub fn read_matrix(path: impl AsRef<Path>) -> Result<BitMatrix> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_matrix(&text)
}

/// Writes a matrix in the text format.
pub fn write_matrix(m: &BitMatrix, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, format_matrix(m)).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sweep::{random_matrix, seeded_rng};

    #[test]
    fn parses_the_plain_form() {
        let m = parse_matrix("2 3\n101\n010\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 3));
        assert!(m.get(0, 0) && !m.get(0, 1) && m.get(0, 2));
        assert!(!m.get(1, 0) && m.get(1, 1) && !m.get(1, 2));
    }

    #[test]
    fn tolerates_comments_blanks_and_spaces() {
        let text = "# parity check\n\n  2 3\n1 0 1\n\n# middle\n0\t1 0\n# trailing\n";
        let m = parse_matrix(text).unwrap();
        assert_eq!(m, parse_matrix("2 3\n101\n010").unwrap());
    }

    #[test]
    fn missing_final_newline_is_fine() {
        assert_eq!(
            parse_matrix("1 2\n10").unwrap(),
            parse_matrix("1 2\n10\n").unwrap()
        );
    }

    #[test]
    fn ragged_row_errors_with_its_line_number() {
        let err = parse_matrix("3 3\n101\n010\n01\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 4, .. }), "{err}");
        let err = parse_matrix("2 2\n101\n01\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }), "{err}");
    }

    #[test]
    fn wrong_row_counts_error() {
        let err = parse_matrix("3 3\n101\n010\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 3, .. }), "{err}");
        let err = parse_matrix("1 3\n101\n010\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 3, .. }), "{err}");
    }

    #[test]
    fn bad_characters_error() {
        let err = parse_matrix("1 3\n102\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 2, .. }), "{err}");
        let err = parse_matrix("x 3\n101\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 1, .. }), "{err}");
        let err = parse_matrix("").unwrap_err();
        assert!(matches!(err, Error::Format { line: 1, .. }), "{err}");
        let err = parse_matrix("2\n10\n01\n").unwrap_err();
        assert!(matches!(err, Error::Format { line: 1, .. }), "{err}");
    }

    #[test]
    fn oversized_headers_are_rejected_before_allocating() {
        let err = parse_matrix("99999999 99999999\n").unwrap_err();
        assert!(matches!(err, Error::SizeOverflow(_)), "{err}");
    }

    #[test]
    fn zero_row_and_zero_col_matrices() {
        let m = parse_matrix("0 5\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 5));
        let m = parse_matrix("0 0\n# nothing\n").unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
        assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(100))]
        #[test]
        fn emit_parse_is_a_fixed_point(rows in 1usize..10, cols in 1usize..81, seed: u64) {
            let m = random_matrix(&mut seeded_rng(seed), rows, cols);
            let text = format_matrix(&m);
            proptest::prop_assert_eq!(&parse_matrix(&text).unwrap(), &m);
            // Emitting the reparse reproduces the text too.
            proptest::prop_assert_eq!(format_matrix(&parse_matrix(&text).unwrap()), text);
        }
    }

    #[test]
    fn file_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.txt");
        let m = parse_matrix("2 3\n101\n010\n").unwrap();
        write_matrix(&m, &path).unwrap();
        assert_eq!(read_matrix(&path).unwrap(), m);
        let missing = read_matrix(dir.path().join("absent.txt")).unwrap_err();
        assert!(matches!(missing, Error::Io { .. }), "{missing}");
    }
}
