//! Text formats for matrices, erasure words and repair-group lists.
//!
//! A matrix file is a header line `gf4 <rows> <cols>` followed by one line
//! per row with space-separated symbols from `{0, 1, a, b}`; `α`/`β` are
//! accepted on input as aliases. Lines starting with `#` and blank lines are
//! ignored. The format is diff-able and easy to check by eye against
//! published matrices.
//!
//! Erasure words use the same symbols plus `?` for an erased position.
//! Group files hold one repair group per line as 1-based coordinates.

use crate::galois::F4;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Serializes a matrix in the `gf4` text format; [`import_matrix`] is the
/// exact inverse.
pub fn export_matrix(m: &Matrix) -> String {
    let mut out = format!("gf4 {} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.symbol().to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses the `gf4` matrix text format.
pub fn import_matrix(text: &str) -> Result<Matrix> {
    let mut lines = content_lines(text);

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, 1, "missing `gf4 <rows> <cols>` header"))?;
    let mut toks = tokens(header);
    match toks.next() {
        Some((_, "gf4")) => {}
        Some((col, tok)) => {
            return Err(parse_err(
                header_no,
                col,
                format!("expected header `gf4`, found `{tok}`"),
            ))
        }
        None => return Err(parse_err(header_no, 1, "empty header line")),
    }
    let rows = parse_count(&mut toks, header_no, "row count")?;
    let cols = parse_count(&mut toks, header_no, "column count")?;
    if let Some((col, tok)) = toks.next() {
        return Err(parse_err(
            header_no,
            col,
            format!("unexpected trailing token `{tok}` in header"),
        ));
    }

    let mut data = Vec::with_capacity(rows * cols);
    for _ in 0..rows {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| parse_err(header_no, 1, format!("expected {rows} matrix rows")))?;
        let mut n = 0;
        for (col, tok) in tokens(line) {
            let sym = F4::from_symbol(tok).ok_or_else(|| {
                parse_err(line_no, col, format!("invalid GF(4) symbol `{tok}`"))
            })?;
            if n == cols {
                return Err(parse_err(
                    line_no,
                    col,
                    format!("row has more than {cols} entries"),
                ));
            }
            data.push(sym);
            n += 1;
        }
        if n < cols {
            return Err(parse_err(
                line_no,
                1,
                format!("row has {n} entries, expected {cols}"),
            ));
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_err(line_no, 1, "trailing content after matrix rows"));
    }
    Ok(Matrix::new(rows, cols, data))
}

/// Formats a word with erasures: `None` prints as `?`.
pub fn export_word(word: &[Option<F4>]) -> String {
    word.iter()
        .map(|x| match x {
            Some(v) => v.symbol().to_string(),
            None => "?".to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Parses a space-separated word over `{0,1,a,b,?}`.
pub fn import_word(text: &str) -> Result<Vec<Option<F4>>> {
    let mut word = Vec::new();
    for (col, tok) in tokens(text) {
        if tok == "?" {
            word.push(None);
        } else {
            let sym = F4::from_symbol(tok)
                .ok_or_else(|| parse_err(1, col, format!("invalid word symbol `{tok}`")))?;
            word.push(Some(sym));
        }
    }
    if word.is_empty() {
        return Err(parse_err(1, 1, "empty word"));
    }
    Ok(word)
}

/// Serializes repair groups, one line per group, 1-based coordinates.
pub fn export_groups(groups: &[Vec<usize>]) -> String {
    let mut out = String::new();
    for g in groups {
        let line: Vec<String> = g.iter().map(|&i| (i + 1).to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a group file into 0-based coordinate sets.
pub fn import_groups(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut groups = Vec::new();
    for (line_no, line) in content_lines(text) {
        let mut group = Vec::new();
        for (col, tok) in tokens(line) {
            let idx: usize = tok
                .parse()
                .map_err(|_| parse_err(line_no, col, format!("invalid coordinate `{tok}`")))?;
            if idx == 0 {
                return Err(parse_err(line_no, col, "coordinates are 1-based"));
            }
            group.push(idx - 1);
        }
        if !group.is_empty() {
            group.sort_unstable();
            group.dedup();
            groups.push(group);
        }
    }
    if groups.is_empty() {
        return Err(parse_err(1, 1, "no groups found"));
    }
    Ok(groups)
}

/// FNV-1a 64-bit hash, used to pin embedded matrix data against accidental
/// edits.
pub fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

/// Whitespace-separated tokens with 1-based character columns.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed
            .find(char::is_whitespace)
            .unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let col = offset + 1;
        rest = &trimmed[end..];
        offset += end;
        Some((col, tok))
    })
}

fn parse_count<'a>(
    toks: &mut impl Iterator<Item = (usize, &'a str)>,
    line: usize,
    what: &str,
) -> Result<usize> {
    let (col, tok) = toks
        .next()
        .ok_or_else(|| parse_err(line, 1, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, col, format!("invalid {what} `{tok}`")))
}

fn parse_err(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        col,
        msg: msg.into(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn repetition_parity_renders_as_expected() {
        let h = Matrix::parse("1 0 1; 0 1 1");
        assert_eq!(export_matrix(&h), "gf4 2 3\n1 0 1\n0 1 1\n");
    }

    #[test]
    fn import_accepts_comments_and_aliases() {
        let text = "# repetition code\ngf4 2 3\n1 0 1\n0 α β\n";
        let m = import_matrix(text).unwrap();
        assert_eq!(m, Matrix::parse("1 0 1; 0 a b"));
    }

    #[test]
    fn bad_symbol_reports_position() {
        let text = "gf4 1 3\n0 c 1\n";
        match import_matrix(text) {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn word_round_trip_with_erasures() {
        let word = import_word("0 1 a b ?").unwrap();
        assert_eq!(word.len(), 5);
        assert!(word[4].is_none());
        assert_eq!(export_word(&word), "0 1 a b ?");
    }

    #[test]
    fn groups_round_trip_one_based() {
        let groups = import_groups("1 2 3\n# comment\n4 5 6\n").unwrap();
        assert_eq!(groups, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(export_groups(&groups), "1 2 3\n4 5 6\n");
    }

    proptest! {
        #[test]
        fn matrix_round_trip(rows in 1usize..6, cols in 1usize..8,
                             bits in proptest::collection::vec(0u8..4, 48)) {
            let data: Vec<F4> = bits.iter().take(rows * cols).map(|&b| F4::from_bits(b)).collect();
            prop_assume!(data.len() == rows * cols);
            let m = Matrix::new(rows, cols, data);
            prop_assert_eq!(import_matrix(&export_matrix(&m)).unwrap(), m);
        }
    }
}
