//! Text and JSON serialization of Cayley tables.
//!
//! Text format: `#` comment lines and blank lines are ignored; the first data
//! line holds `n`, followed by `n` rows of `n` whitespace-separated entries.
//! JSON format: `{"n": 3, "table": [[..], ..]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::semigroup::{Semigroup, SemigroupError};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("malformed JSON table: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(#[from] SemigroupError),
}

#[derive(Serialize, Deserialize)]
pub struct TableDoc {
    pub n: usize,
    pub table: Vec<Vec<usize>>,
}

impl From<&Semigroup> for TableDoc {
    fn from(s: &Semigroup) -> Self {
        TableDoc {
            n: s.order(),
            table: s.rows(),
        }
    }
}

/// Parses either format, chosen by the first non-blank character.
pub fn parse_table(text: &str) -> Result<Semigroup, ParseError> {
    if text.trim_start().starts_with('{') {
        return parse_json(text);
    }
    parse_text(text)
}

pub fn parse_json(text: &str) -> Result<Semigroup, ParseError> {
    let doc: TableDoc = serde_json::from_str(text)?;
    if doc.table.len() != doc.n {
        return Err(SemigroupError::RowCount {
            rows: doc.table.len(),
            n: doc.n,
        }
        .into());
    }
    Ok(Semigroup::from_rows(&doc.table)?)
}

pub fn parse_text(text: &str) -> Result<Semigroup, ParseError> {
    let syntax = |line: usize, column: usize, message: String| ParseError::Syntax {
        line,
        column,
        message,
    };
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        });

    let (line_no, first) = data
        .next()
        .ok_or_else(|| syntax(1, 1, "missing element count".into()))?;
    let mut head = tokens(first);
    let (col, tok) = head
        .next()
        .ok_or_else(|| syntax(line_no, 1, "missing element count".into()))?;
    let n: usize = tok
        .parse()
        .map_err(|_| syntax(line_no, col, format!("expected element count, found {tok:?}")))?;
    if let Some((c, extra)) = head.next() {
        return Err(syntax(line_no, c, format!("unexpected {extra:?} after element count")));
    }
    if n == 0 {
        return Err(syntax(line_no, col, "element count must be positive".into()));
    }

    let mut flat = Vec::with_capacity(n * n);
    let mut last_line = line_no;
    for row in 0..n {
        let (ln, l) = data.next().ok_or_else(|| {
            syntax(last_line + 1, 1, format!("expected {n} rows, found {row}"))
        })?;
        last_line = ln;
        let mut count = 0;
        for (c, tok) in tokens(l) {
            let v: usize = tok
                .parse()
                .map_err(|_| syntax(ln, c, format!("expected an element index, found {tok:?}")))?;
            if v >= n {
                return Err(syntax(ln, c, format!("entry {v} out of range 0..{}", n - 1)));
            }
            count += 1;
            if count > n {
                return Err(syntax(ln, c, format!("row {row} has more than {n} entries")));
            }
            flat.push(v as u32);
        }
        if count < n {
            return Err(syntax(ln, l.len() + 1, format!("row {row} has {count} entries, expected {n}")));
        }
    }
    if let Some((ln, _)) = data.next() {
        return Err(syntax(ln, 1, "trailing data after table".into()));
    }
    Ok(Semigroup::from_flat(n, flat)?)
}

/// Whitespace-separated tokens with 1-based column numbers.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line;
    let mut offset = 0;
    std::iter::from_fn(move || {
        let skip = rest.len() - rest.trim_start().len();
        rest = &rest[skip..];
        offset += skip;
        if rest.is_empty() {
            return None;
        }
        let end = rest.find(char::is_whitespace).unwrap_or(rest.len());
        let tok = &rest[..end];
        let col = offset + 1;
        rest = &rest[end..];
        offset += end;
        Some((col, tok))
    })
}

/// Text form, column-aligned.
pub fn serialize(s: &Semigroup) -> String {
    let n = s.order();
    let width = (n - 1).to_string().len();
    let mut out = format!("{n}\n");
    for i in 0..n {
        let row: Vec<String> = s.row(i).iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_json(s: &Semigroup) -> String {
    serde_json::to_string(&TableDoc::from(s)).expect("tables always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_semigroup() {
        let s = parse_table("1\n0\n").unwrap();
        assert_eq!(s.order(), 1);
        assert_eq!(serialize(&s), "1\n0\n");
    }

    #[test]
    fn comments_and_json() {
        let text = "# left zero\n2\n0 0\n\n1 1\n";
        let s = parse_table(text).unwrap();
        let j = to_json(&s);
        assert_eq!(j, r#"{"n":2,"table":[[0,0],[1,1]]}"#);
        assert_eq!(parse_table(&j).unwrap(), s);
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse_table("2\n0 0\n1\n") {
            Err(ParseError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        match parse_table("2\n0 x\n1 1\n") {
            Err(ParseError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_table("2\n0 0\n1 0\n"),
            Err(ParseError::Invalid(SemigroupError::Associativity(..)))
        ));
    }
}
