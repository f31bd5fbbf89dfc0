//! Polytope files and partition specs.
//!
//! A polytope file is a header line `d n` followed by `n` lines of `d`
//! coordinates (integers, or `p/q` fractions). Lines starting with `#` and
//! blank lines are ignored. Writers emit the header and the rows with single
//! spaces and a trailing newline, nothing else.

use std::fmt::Write;

use thiserror::Error;

use crate::point::{Point, Space};
use crate::rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("expected {expected} points, found {found}")]
    PointCount { expected: usize, found: usize },
    #[error("partition spec: {0}")]
    Partition(String),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

/// Parses a polytope file into its points, in file order.
pub fn parse_points(text: &str, space: Space) -> Result<Vec<Point>, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let head: Vec<usize> = header
        .split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| syntax(hline, format!("bad header token {t:?}")))
        })
        .collect::<Result<_, _>>()?;
    let [d, n] = head[..] else {
        return Err(syntax(hline, "header must be `d n`"));
    };
    if d == 0 || n == 0 {
        return Err(syntax(hline, "dimension and point count must be positive"));
    }

    let mut points = Vec::with_capacity(n);
    for (line, row) in lines {
        if points.len() == n {
            return Err(syntax(line, "more rows than announced in the header"));
        }
        let coords: Vec<_> = row
            .split_whitespace()
            .map(|t| {
                rational::parse(t).ok_or_else(|| syntax(line, format!("bad coordinate {t:?}")))
            })
            .collect::<Result<_, _>>()?;
        if coords.len() != d {
            return Err(syntax(
                line,
                format!("expected {d} coordinates, found {}", coords.len()),
            ));
        }
        points.push(Point::new(coords, space));
    }
    if points.len() != n {
        return Err(ParseError::PointCount {
            expected: n,
            found: points.len(),
        });
    }
    Ok(points)
}

pub fn write_points(points: &[Point]) -> String {
    let d = points.first().map_or(0, Point::dim);
    let mut out = format!("{d} {}\n", points.len());
    for p in points {
        let row: Vec<String> = p.coords().iter().map(rational::format).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

/// Canonical vertex list in file format.
pub fn write_polytope(p: &crate::polytope::Polytope) -> String {
    write_points(p.vertices())
}

/// Parses `i1,i2;j1,...` into parts of indices below `n`.
///
/// An empty part is accepted here (the validator reports it); repeated or
/// out-of-range indices are input errors.
pub fn parse_partition_spec(text: &str, n: usize) -> Result<Vec<Vec<usize>>, ParseError> {
    let err = |m: String| ParseError::Partition(m);
    let text = text.trim();
    if text.is_empty() {
        return Err(err("empty spec".into()));
    }
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for chunk in text.split(';') {
        let chunk = chunk.trim();
        let mut part = Vec::new();
        if !chunk.is_empty() {
            for tok in chunk.split(',') {
                let tok = tok.trim();
                let i: usize = tok.parse().map_err(|_| err(format!("bad index {tok:?}")))?;
                if i >= n {
                    return Err(err(format!("index {i} out of range for {n} vertices")));
                }
                if seen[i] {
                    return Err(err(format!("index {i} appears more than once")));
                }
                seen[i] = true;
                part.push(i);
            }
        }
        parts.push(part);
    }
    Ok(parts)
}

pub fn format_partition_spec(parts: &[Vec<usize>]) -> String {
    parts
        .iter()
        .map(|p| {
            p.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join(";")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn parse_with_comments_and_fractions() {
        let text = "# a triangle\n2 3\n1 0\n\n0 1/2\n# trailing\n-1 -1\n";
        let pts = parse_points(text, Space::M).unwrap();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[1].coords()[1], Rational::new(1.into(), 2.into()));
        assert_eq!(pts[2].coords()[0], int(-1));
    }

    use crate::rational::Rational;

    #[test]
    fn malformed_files() {
        assert!(matches!(
            parse_points("", Space::M),
            Err(ParseError::Syntax { line: 1, .. })
        ));
        assert!(matches!(
            parse_points("2\n1 0\n", Space::M),
            Err(ParseError::Syntax { .. })
        ));
        assert!(matches!(
            parse_points("2 2\n1 0\n", Space::M),
            Err(ParseError::PointCount { .. })
        ));
        assert!(matches!(
            parse_points("2 1\n1 0 3\n", Space::M),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_points("2 1\n1 x\n", Space::M),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_points("2 1\n1 0\n0 1\n", Space::M),
            Err(ParseError::Syntax { line: 3, .. })
        ));
    }

    #[test]
    fn write_format_is_exact() {
        let pts = vec![
            Point::from_ints(&[-1, 0], Space::N),
            Point::new(vec![Rational::new(1.into(), 3.into()), int(2)], Space::N),
        ];
        assert_eq!(write_points(&pts), "2 2\n-1 0\n1/3 2\n");
    }

    #[test]
    fn partition_specs() {
        assert_eq!(
            parse_partition_spec("0,2;1,3", 4).unwrap(),
            vec![vec![0, 2], vec![1, 3]]
        );
        assert_eq!(
            parse_partition_spec(" 0 ; 1,2,3 ", 4).unwrap(),
            vec![vec![0], vec![1, 2, 3]]
        );
        assert_eq!(
            parse_partition_spec("0,1,2,3;", 4).unwrap(),
            vec![vec![0, 1, 2, 3], vec![]]
        );
        assert!(parse_partition_spec("0,1;1,2", 4).is_err());
        assert!(parse_partition_spec("0,9", 4).is_err());
        assert!(parse_partition_spec("0,a", 4).is_err());
        assert!(parse_partition_spec("", 4).is_err());
        assert_eq!(format_partition_spec(&[vec![0, 2], vec![1, 3]]), "0,2;1,3");
    }
}
