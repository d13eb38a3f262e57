//! Plain edge lists: a header line `n m`, then `m` lines `u v` with 0-based
//! vertices. The file order of the edges is the edge order of the graph.
//! Blank lines and `#` comments are ignored.

use std::collections::BTreeSet;
use std::fmt::Write;

use chromabij::Graph;

use crate::ParseError;

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::EdgeList {
        line,
        msg: msg.into(),
    }
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(err(line, format!("expected two integers, found {:?}", text.trim())));
    }
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| err(line, format!("{s:?} is not a nonnegative integer")))
    };
    Ok((parse(fields[0])?, parse(fields[1])?))
}

pub fn parse_edgelist(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("")))
        .filter(|(_, l)| !l.trim().is_empty());

    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing `n m` header"))?;
    let (n, m) = two_numbers(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = BTreeSet::new();
    let mut last_line = header_line;
    for (line, body) in lines {
        last_line = line;
        if edges.len() == m {
            return Err(err(line, format!("more than the declared {m} edges")));
        }
        let (u, v) = two_numbers(line, body)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {{{u},{v}}}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::new(n, edges).map_err(|e| err(header_line, e.to_string()))
}

/// The edge list of `g` in its own edge order.
pub fn to_edgelist(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_order_is_file_order() {
        let g = parse_edgelist("4 4\n0 2\n0 1\n1 2\n1 3").unwrap();
        assert_eq!(g.edges(), &[(0, 2), (0, 1), (1, 2), (1, 3)]);
        assert_eq!(parse_edgelist(&to_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn trivial_and_comments() {
        assert_eq!(parse_edgelist("1 0").unwrap(), Graph::edgeless(1));
        let g = parse_edgelist("# triangle\n3 3\n\n1 0 # reversed\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (0, 2)]);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let line = |text: &str| match parse_edgelist(text) {
            Err(ParseError::EdgeList { line, .. }) => line,
            other => panic!("{other:?}"),
        };
        assert_eq!(line("2 1\n0 0"), 2);
        assert_eq!(line("3 2\n0 1\n1 0"), 3);
        assert_eq!(line("3 1\n0 5"), 2);
        assert_eq!(line("3 2\n0 1"), 2);
        assert_eq!(line("3 1\n0 1\n1 2"), 3);
        assert_eq!(line("3\n"), 1);
        assert_eq!(line("3 1\n0 x"), 2);
        assert_eq!(line(""), 1);
    }
}
