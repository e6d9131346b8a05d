//! The text format: a header `d n`, then `n` lines `a_1 … a_d c` of integers
//! or fractions `p/q`. `#` starts a comment; blank lines are skipped.

use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arrangement::{AffineForm, Arrangement};
use crate::error::{Error, Result};
use crate::exactla::Rational;

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let content = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (k, ch) in content.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(k),
            (true, Some(s)) => {
                out.push(Token {
                    text: &content[s..k],
                    column: content[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &content[s..],
            column: content[..s].chars().count() + 1,
        });
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_rational(token: &Token<'_>, line: usize) -> Result<Rational> {
    let bad = || parse_error(line, token.column, format!("malformed rational '{}'", token.text));
    let (p, q) = match token.text.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token.text, "1"),
    };
    let p: BigInt = p.parse().map_err(|_| bad())?;
    let q: BigInt = q.parse().map_err(|_| bad())?;
    if q.is_zero() {
        return Err(parse_error(line, token.column, "zero denominator"));
    }
    Ok(Rational::new(p, q))
}

fn parse_count(token: &Token<'_>, line: usize, what: &str) -> Result<usize> {
    token
        .text
        .parse()
        .map_err(|_| parse_error(line, token.column, format!("{what} must be a nonnegative integer")))
}

pub fn parse(text: &str) -> Result<Arrangement> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty());
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "missing header 'd n'"))?;
    if header.len() != 2 {
        let column = header.get(2).map_or(1, |t| t.column);
        return Err(parse_error(header_line, column, "header must be 'd n'"));
    }
    let d = parse_count(&header[0], header_line, "dimension")?;
    let n = parse_count(&header[1], header_line, "hyperplane count")?;

    let mut forms = Vec::with_capacity(n);
    let mut last_line = header_line;
    for (line, row) in lines {
        last_line = line;
        if forms.len() == n {
            return Err(parse_error(
                line,
                row[0].column,
                format!("header announces {n} hyperplanes but more lines follow"),
            ));
        }
        if row.len() != d + 1 {
            let column = row.get(d + 1).map_or(row.last().map_or(1, |t| t.column), |t| t.column);
            return Err(parse_error(
                line,
                column,
                format!("expected {} numbers, found {}", d + 1, row.len()),
            ));
        }
        let values = row
            .iter()
            .map(|t| parse_rational(t, line))
            .collect::<Result<Vec<_>>>()?;
        if values[..d].iter().all(Zero::is_zero) {
            return Err(parse_error(line, row[0].column, "zero normal vector"));
        }
        let constant = values[d].clone();
        forms.push(AffineForm::new(values[..d].to_vec(), constant));
    }
    if forms.len() != n {
        return Err(parse_error(
            last_line + 1,
            1,
            format!("header announces {n} hyperplanes, found {}", forms.len()),
        ));
    }
    Arrangement::new(d, forms)
}

pub fn render(arrangement: &Arrangement) -> String {
    let mut out = format!("{} {}\n", arrangement.dim(), arrangement.len());
    for form in arrangement.forms() {
        let fields: Vec<String> = form
            .normal
            .iter()
            .chain(std::iter::once(&form.constant))
            .map(ToString::to_string)
            .collect();
        let _ = writeln!(out, "{}", fields.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use proptest::prelude::*;

    #[test]
    fn parse_examples() {
        assert_eq!(parse("1 1\n1 0").unwrap(), catalog::point());
        assert_eq!(
            parse("2 3\n0 1 0\n1 0 0\n1 1 0").unwrap(),
            catalog::concurrent_three_lines()
        );
        assert_eq!(
            parse("# two points\n1 2\n\n2/2 0  # t\n 1 -1\n").unwrap(),
            catalog::two_points()
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        let err = |text: &str| match parse(text) {
            Err(Error::Parse { line, column, .. }) => (line, column),
            other => panic!("expected a parse error, got {other:?}"),
        };
        assert_eq!(err("1 1\n0 5"), (2, 1));
        assert_eq!(err("1 1\n1 x"), (2, 3));
        assert_eq!(err("1 1\n1 1/0"), (2, 3));
        assert_eq!(err("2 1\n1 0"), (2, 3));
        assert_eq!(err("1 2\n1 0"), (3, 1));
        assert_eq!(err("1 1\n1 0\n1 1"), (3, 1));
        assert_eq!(err(""), (1, 1));
        assert_eq!(err("1 1 1"), (1, 5));
    }

    #[test]
    fn fractions_are_reduced() {
        let a = parse("1 1\n2/4 -3/6").unwrap();
        assert_eq!(render(&a), "1 1\n1/2 -1/2\n");
    }

    proptest! {
        #[test]
        fn round_trip(
            d in 1usize..4,
            rows in proptest::collection::vec(proptest::collection::vec((-9i64..10, 1i64..5), 4), 0..6),
        ) {
            let forms: Vec<AffineForm> = rows
                .iter()
                .map(|row| {
                    let mut normal: Vec<Rational> = row[..d]
                        .iter()
                        .map(|&(p, q)| Rational::new(p.into(), q.into()))
                        .collect();
                    if normal.iter().all(Zero::is_zero) {
                        normal[0] = Rational::from_integer(1.into());
                    }
                    AffineForm::new(normal, Rational::new(row[3].0.into(), row[3].1.into()))
                })
                .collect();
            let a = Arrangement::new(d, forms).unwrap();
            prop_assert_eq!(parse(&render(&a)).unwrap(), a);
        }
    }
}
