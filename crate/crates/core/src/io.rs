//! Text formats: graph6, DIMACS, plain edge lists, DOT export and
//! certificate JSON.
//!
//! graph6 and DIMACS can only name vertices `0..n` and `1..=n`, so emitting
//! them relabels the graph in increasing vertex order; [`relabeling`] reports
//! the map used. Edge lists keep the original ids.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::error::GraphError;
use crate::graph::{Graph, Vertex};
use crate::named;
use crate::pipeline::WpgtCertificate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFormat {
    Graph6,
    Dimacs,
    EdgeList,
}

impl GraphFormat {
    pub const ALL: [GraphFormat; 3] = [
        GraphFormat::Graph6,
        GraphFormat::Dimacs,
        GraphFormat::EdgeList,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GraphFormat::Graph6 => "graph6",
            GraphFormat::Dimacs => "dimacs",
            GraphFormat::EdgeList => "edgelist",
        }
    }

    /// Guess from a file extension: `.g6`, `.col`/`.dimacs`, `.el`/`.txt`.
    pub fn from_path(path: &Path) -> Option<GraphFormat> {
        match path.extension()?.to_str()? {
            "g6" | "graph6" => Some(GraphFormat::Graph6),
            "col" | "dimacs" => Some(GraphFormat::Dimacs),
            "el" | "edges" | "txt" => Some(GraphFormat::EdgeList),
            _ => None,
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "dimacs" | "dimacs-col" | "col" => Ok(GraphFormat::Dimacs),
            "edgelist" | "edge-list" | "el" => Ok(GraphFormat::EdgeList),
            _ => Err(format!(
                "unknown format `{s}` (expected graph6, dimacs or edgelist)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphDocument {
    pub format: GraphFormat,
    pub payload: String,
}

impl GraphDocument {
    pub fn new(format: GraphFormat, payload: impl Into<String>) -> Self {
        GraphDocument {
            format,
            payload: payload.into(),
        }
    }
}

/// Syntax error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ReadError {
    #[error(transparent)]
    Syntax(#[from] ParseError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ReadError {
    ReadError::Syntax(ParseError {
        line,
        column,
        message: message.into(),
    })
}

pub fn parse_graph(doc: &GraphDocument) -> Result<Graph, ReadError> {
    match doc.format {
        GraphFormat::Graph6 => parse_graph6(&doc.payload),
        GraphFormat::Dimacs => parse_dimacs(&doc.payload),
        GraphFormat::EdgeList => parse_edge_list(&doc.payload),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> GraphDocument {
    let payload = match format {
        GraphFormat::Graph6 => emit_graph6(g),
        GraphFormat::Dimacs => emit_dimacs(g),
        GraphFormat::EdgeList => emit_edge_list(g),
    };
    GraphDocument { format, payload }
}

/// The map from `g`'s vertices to the ids used by `format`, or `None` when
/// the format keeps them.
pub fn relabeling(g: &Graph, format: GraphFormat) -> Option<BTreeMap<Vertex, Vertex>> {
    let base = match format {
        GraphFormat::Graph6 => 0,
        GraphFormat::Dimacs => 1,
        GraphFormat::EdgeList => return None,
    };
    Some(g.nodes().iter().zip(base..).collect())
}

/// Columns and lines of tokens, skipping blank lines and comment lines.
fn tokens<'a>(text: &'a str, comment: &str) -> Vec<(usize, Vec<(usize, &'a str)>)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let trimmed = line.trim_start();
            if trimmed.is_empty() || trimmed.starts_with(comment) {
                return None;
            }
            let mut toks = Vec::new();
            let mut rest = line;
            let mut offset = 0;
            while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
                let len = rest[start..]
                    .find(char::is_whitespace)
                    .unwrap_or(rest.len() - start);
                toks.push((offset + start + 1, &rest[start..start + len]));
                offset += start + len;
                rest = &rest[start + len..];
            }
            Some((i + 1, toks))
        })
        .collect()
}

fn number(line: usize, (column, tok): (usize, &str)) -> Result<Vertex, ReadError> {
    tok.parse().map_err(|_| {
        syntax(
            line,
            column,
            format!("expected a vertex number, found `{tok}`"),
        )
    })
}

// graph6

fn graph6_size(n: usize) -> Vec<u8> {
    let six = |shift: u32| ((n >> shift) & 63) as u8 + 63;
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        vec![126, six(12), six(6), six(0)]
    } else {
        vec![126, 126, six(30), six(24), six(18), six(12), six(6), six(0)]
    }
}

fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut bytes = graph6_size(n);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(g.vertex_at(i), g.vertex_at(j)));
        }
    }
    for chunk in bits.chunks(6) {
        let mut b = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                b |= 1 << (5 - k);
            }
        }
        bytes.push(b + 63);
    }
    let mut s = String::from_utf8(bytes).expect("graph6 bytes are printable ASCII");
    s.push('\n');
    s
}

fn parse_graph6(text: &str) -> Result<Graph, ReadError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let &[(line, body)] = lines.as_slice() else {
        let line = lines.get(1).map_or(1, |l| l.0);
        return Err(syntax(line, 1, "expected exactly one graph6 line"));
    };
    let (col0, body) = match body.strip_prefix(">>graph6<<") {
        Some(rest) => (11, rest),
        None => (1, body),
    };
    let bytes = body.as_bytes();
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(syntax(
            line,
            col0 + pos,
            "byte outside the graph6 range 63..=126",
        ));
    }
    let at = |k: usize| -> Result<usize, ReadError> {
        bytes
            .get(k)
            .map(|&b| (b - 63) as usize)
            .ok_or_else(|| syntax(line, col0 + k, "truncated size field"))
    };
    let (n, header) = match bytes.first() {
        None => return Err(syntax(line, col0, "empty graph6 string")),
        Some(126) if bytes.get(1) == Some(&126) => {
            let mut n = 0;
            for k in 2..8 {
                n = n << 6 | at(k)?;
            }
            (n, 8)
        }
        Some(126) => ((at(1)? << 12) | (at(2)? << 6) | at(3)?, 4),
        Some(&b) => ((b - 63) as usize, 1),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    let data = &bytes[header..];
    if data.len() != expected {
        return Err(syntax(
            line,
            col0 + header,
            format!(
                "expected {expected} data bytes for {n} vertices, found {}",
                data.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i as Vertex, j as Vertex));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (data[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(syntax(line, col0 + header + k / 6, "nonzero padding bits"));
    }
    Ok(Graph::new(0..n as Vertex, edges)?)
}

// DIMACS

fn emit_dimacs(g: &Graph) -> String {
    let map = relabeling(g, GraphFormat::Dimacs).expect("DIMACS relabels");
    let mut s = format!("p edge {} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        s.push_str(&format!("e {} {}\n", map[&u], map[&v]));
    }
    s
}

fn parse_dimacs(text: &str) -> Result<Graph, ReadError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (line, toks) in tokens(text, "c") {
        match toks[0].1 {
            "p" => {
                if n.is_some() {
                    return Err(syntax(line, toks[0].0, "second problem line"));
                }
                if toks.len() != 4 || !matches!(toks[1].1, "edge" | "col") {
                    return Err(syntax(line, toks[0].0, "expected `p edge <n> <m>`"));
                }
                n = Some(number(line, toks[2])?);
                number(line, toks[3])?;
            }
            "e" => {
                if n.is_none() {
                    return Err(syntax(line, toks[0].0, "edge before the problem line"));
                }
                if toks.len() != 3 {
                    return Err(syntax(line, toks[0].0, "expected `e <u> <v>`"));
                }
                edges.push((number(line, toks[1])?, number(line, toks[2])?));
            }
            other => {
                return Err(syntax(
                    line,
                    toks[0].0,
                    format!("unknown line type `{other}`"),
                ))
            }
        }
    }
    let n = n.ok_or_else(|| syntax(1, 1, "missing problem line"))?;
    Ok(Graph::new(1..=n, edges)?)
}

// edge list

fn emit_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    for v in g.nodes().iter().filter(|&v| g.degree(v) == 0) {
        s.push_str(&format!("{v}\n"));
    }
    s
}

/// One `u v` pair per line; a line with a single vertex declares it, and an
/// optional first line `n <count>` declares vertices `1..=count`.
fn parse_edge_list(text: &str) -> Result<Graph, ReadError> {
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    let mut declared = false;
    for (k, (line, toks)) in tokens(text, "#").into_iter().enumerate() {
        if toks[0].1 == "n" {
            if k != 0 || toks.len() != 2 {
                return Err(syntax(
                    line,
                    toks[0].0,
                    "`n <count>` must be the first line",
                ));
            }
            nodes.extend(1..=number(line, toks[1])?);
            declared = true;
            continue;
        }
        match *toks.as_slice() {
            [v] => nodes.push(number(line, v)?),
            [u, v] => {
                let e = (number(line, u)?, number(line, v)?);
                if !declared {
                    nodes.extend([e.0, e.1]);
                }
                edges.push(e);
            }
            _ => return Err(syntax(line, toks[2].0, "expected one or two vertices")),
        }
    }
    Ok(Graph::new(nodes, edges)?)
}

// DOT

pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in g.nodes().iter() {
        s.push_str(&format!("  {v};\n"));
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {u} -- {v};\n"));
    }
    s.push_str("}\n");
    s
}

/// Graph relabeled as `format` would name its vertices.
pub fn relabeled_for(g: &Graph, format: GraphFormat) -> Graph {
    match relabeling(g, format) {
        Some(map) => named::relabeled(g, &map),
        None => g.clone(),
    }
}

// certificates

pub fn certificate_to_json(cert: &WpgtCertificate) -> String {
    let mut s = serde_json::to_string_pretty(cert).expect("certificates serialize");
    s.push('\n');
    s
}

pub fn certificate_from_json(text: &str) -> serde_json::Result<WpgtCertificate> {
    serde_json::from_str(text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{verify_certificate, wpgt_certificate};

    fn doc(format: GraphFormat, s: &str) -> GraphDocument {
        GraphDocument::new(format, s)
    }

    #[test]
    fn graph6_known_strings() {
        let p5 = parse_graph(&doc(GraphFormat::Graph6, "DQc")).unwrap();
        assert_eq!(p5.order(), 5);
        assert_eq!(
            p5.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 4), (1, 3), (3, 4)]
        );
        assert_eq!(emit_graph(&p5, GraphFormat::Graph6).payload, "DQc\n");

        let c5 = named::cycle(5);
        assert_eq!(emit_graph(&c5, GraphFormat::Graph6).payload, "Dhc\n");
        let back = parse_graph(&doc(GraphFormat::Graph6, "Dhc\n")).unwrap();
        assert_eq!(back, relabeled_for(&c5, GraphFormat::Graph6));

        assert_eq!(
            emit_graph(&Graph::empty(), GraphFormat::Graph6).payload,
            "?\n"
        );
        assert_eq!(
            parse_graph(&doc(GraphFormat::Graph6, "?")).unwrap(),
            Graph::empty()
        );
        assert_eq!(
            emit_graph(&named::complete(2), GraphFormat::Graph6).payload,
            "A_\n"
        );
        assert!(parse_graph(&doc(GraphFormat::Graph6, ">>graph6<<A_")).is_ok());
    }

    #[test]
    fn graph6_large_sizes() {
        let g = named::path(70);
        let text = emit_graph(&g, GraphFormat::Graph6).payload;
        assert!(text.starts_with('~'));
        assert_eq!(
            parse_graph(&doc(GraphFormat::Graph6, &text)).unwrap(),
            relabeled_for(&g, GraphFormat::Graph6)
        );
    }

    #[test]
    fn graph6_errors() {
        let err = parse_graph(&doc(GraphFormat::Graph6, "D Qc")).unwrap_err();
        assert!(matches!(
            err,
            ReadError::Syntax(ParseError {
                line: 1,
                column: 2,
                ..
            })
        ));
        assert!(parse_graph(&doc(GraphFormat::Graph6, "DQ")).is_err());
        assert!(parse_graph(&doc(GraphFormat::Graph6, "DQcc")).is_err());
        // 'A' + '`' sets a padding bit
        assert!(parse_graph(&doc(GraphFormat::Graph6, "A`")).is_err());
        assert!(parse_graph(&doc(GraphFormat::Graph6, "A_\nA_")).is_err());
    }

    #[test]
    fn edge_lists() {
        let g = parse_graph(&doc(GraphFormat::EdgeList, "1 2\n2 3")).unwrap();
        assert_eq!(g, named::path(3));
        let g = parse_graph(&doc(GraphFormat::EdgeList, "n 4\n# comment\n1 2\n\n2 3\n")).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.degree(4), 0);
        let g = parse_graph(&doc(GraphFormat::EdgeList, "7\n1 2")).unwrap();
        assert_eq!(g.nodes().as_slice(), &[1, 2, 7]);
        assert_eq!(emit_graph(&g, GraphFormat::EdgeList).payload, "1 2\n7\n");
        assert_eq!(
            parse_graph(&doc(GraphFormat::EdgeList, "n 2\n1 3")),
            Err(ReadError::Graph(GraphError::DanglingEdge(1, 3)))
        );
        assert!(matches!(
            parse_graph(&doc(GraphFormat::EdgeList, "1 x")),
            Err(ReadError::Syntax(ParseError {
                line: 1,
                column: 3,
                ..
            }))
        ));
        assert!(parse_graph(&doc(GraphFormat::EdgeList, "1 2\nn 3")).is_err());
    }

    #[test]
    fn dimacs() {
        assert_eq!(
            parse_graph(&doc(GraphFormat::Dimacs, "p edge 2 1\ne 1 1")),
            Err(ReadError::Graph(GraphError::SelfLoop(1)))
        );
        let text = "c pentagon\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        let g = parse_graph(&doc(GraphFormat::Dimacs, text)).unwrap();
        assert_eq!(g, named::cycle(5));
        assert_eq!(
            emit_graph(&g, GraphFormat::Dimacs).payload,
            "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n"
        );
        assert!(matches!(
            parse_graph(&doc(GraphFormat::Dimacs, "e 1 2")),
            Err(ReadError::Syntax(ParseError {
                line: 1,
                column: 1,
                ..
            }))
        ));
        assert!(parse_graph(&doc(GraphFormat::Dimacs, "p edge 3 0\nx")).is_err());
        assert!(parse_graph(&doc(GraphFormat::Dimacs, "p edge 2 1\ne 1 3")).is_err());
        // ids 10, 20 become 1, 2
        let moved = Graph::new([10, 20], [(10, 20)]).unwrap();
        assert_eq!(
            emit_graph(&moved, GraphFormat::Dimacs).payload,
            "p edge 2 1\ne 1 2\n"
        );
    }

    #[test]
    fn round_trips() {
        let graphs = [
            named::house(),
            named::cycle(5),
            Graph::empty(),
            named::edgeless(3),
        ];
        for g in &graphs {
            for f in GraphFormat::ALL {
                let parsed = parse_graph(&emit_graph(g, f)).unwrap();
                assert_eq!(parsed, relabeled_for(g, f), "{f} on {g}");
                assert_eq!(emit_graph(&parsed, f), emit_graph(g, f));
            }
        }
    }

    #[test]
    fn dot_export() {
        let dot = to_dot(&named::cycle(5));
        assert_eq!(dot.matches(" -- ").count(), 5);
        assert_eq!(
            dot.lines()
                .filter(|l| l.trim_end().ends_with(';') && !l.contains("--"))
                .count(),
            5
        );
    }

    #[test]
    fn certificate_json() {
        let house = named::house();
        let cert = wpgt_certificate(&house).unwrap();
        let text = certificate_to_json(&cert);
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(value["alpha"], 2);
        assert!(value["clique_cover"].is_array());
        assert!(value["complement_coloring"].is_object());
        let back = certificate_from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert!(verify_certificate(&house, &back));
    }

    #[test]
    fn format_names() {
        for f in GraphFormat::ALL {
            assert_eq!(f.name().parse::<GraphFormat>(), Ok(f));
        }
        assert_eq!(
            GraphFormat::from_path(Path::new("x.g6")),
            Some(GraphFormat::Graph6)
        );
        assert_eq!(
            GraphFormat::from_path(Path::new("x.el")),
            Some(GraphFormat::EdgeList)
        );
        assert_eq!(GraphFormat::from_path(Path::new("x")), None);
    }
}
