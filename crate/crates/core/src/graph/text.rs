//! Line format:
//!
//! ```text
//! vertices: a b c
//! edge e1: a b
//! rotation a: e1.0 e3.1
//! ```

use super::{EmbeddedGraph, GraphError};
use crate::text::{column_of, content_lines, ParseError};

impl EmbeddedGraph {
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let lines = content_lines(text);
        let mut vertices: Option<Vec<String>> = None;
        let mut edges: Vec<(String, usize, usize)> = Vec::new();
        let mut rotations: Vec<Option<Vec<usize>>> = Vec::new();
        // Half-edge tokens wait until every edge is known.
        let mut pending: Vec<(usize, &str, usize, Vec<&str>)> = Vec::new();

        for &(line_no, line) in &lines {
            let body = line.trim();
            let err = |tok: &str, msg: String| ParseError::new(line_no, column_of(line, tok), msg);
            let Some((head, rest)) = body.split_once(':') else {
                return Err(err(body, "expected `keyword: ...`".into()).into());
            };
            let head_words: Vec<&str> = head.split_whitespace().collect();
            match head_words.as_slice() {
                ["vertices"] => {
                    if vertices.is_some() {
                        return Err(err(body, "repeated `vertices:` line".into()).into());
                    }
                    let mut vs: Vec<String> = Vec::new();
                    for tok in rest.split_whitespace() {
                        if vs.iter().any(|v| v == tok) {
                            return Err(err(tok, format!("duplicate vertex `{tok}`")).into());
                        }
                        vs.push(tok.to_string());
                    }
                    rotations = vec![None; vs.len()];
                    vertices = Some(vs);
                }
                ["edge", label] => {
                    let Some(vs) = &vertices else {
                        return Err(err(body, "`vertices:` must come first".into()).into());
                    };
                    if label.contains('.') {
                        return Err(err(label, "edge labels may not contain `.`".into()).into());
                    }
                    if edges.iter().any(|(l, _, _)| l == label) {
                        return Err(err(label, format!("duplicate edge `{label}`")).into());
                    }
                    let toks: Vec<&str> = rest.split_whitespace().collect();
                    if toks.len() != 2 {
                        return Err(
                            err(body, "an edge needs exactly two end vertices".into()).into()
                        );
                    }
                    let mut endpoints = [0; 2];
                    for (k, tok) in toks.iter().enumerate() {
                        endpoints[k] = vs
                            .iter()
                            .position(|v| v == tok)
                            .ok_or_else(|| err(tok, format!("unknown vertex `{tok}`")))?;
                    }
                    edges.push((label.to_string(), endpoints[0], endpoints[1]));
                }
                ["rotation", v] => {
                    let Some(vs) = &vertices else {
                        return Err(err(body, "`vertices:` must come first".into()).into());
                    };
                    let idx = vs
                        .iter()
                        .position(|x| x == v)
                        .ok_or_else(|| err(v, format!("unknown vertex `{v}`")))?;
                    pending.push((line_no, line, idx, rest.split_whitespace().collect()));
                }
                _ => return Err(err(body, format!("unknown keyword `{}`", head.trim())).into()),
            }
        }

        let vertices = vertices.ok_or_else(|| ParseError::new(1, 1, "missing `vertices:` line"))?;
        let mut seen: Vec<Option<usize>> = vec![None; 2 * edges.len()];
        for (line_no, line, v, toks) in pending {
            let err = |tok: &str, msg: String| ParseError::new(line_no, column_of(line, tok), msg);
            if rotations[v].is_some() {
                return Err(err(
                    line.trim(),
                    format!("second rotation for `{}`", vertices[v]),
                )
                .into());
            }
            let mut rot = Vec::new();
            for tok in toks {
                let (label, side) = tok.rsplit_once('.').ok_or_else(|| {
                    err(
                        tok,
                        "half-edges are written `<edge>.0` or `<edge>.1`".into(),
                    )
                })?;
                let side = match side {
                    "0" => 0,
                    "1" => 1,
                    _ => return Err(err(tok, "half-edge side must be 0 or 1".into()).into()),
                };
                let e = edges
                    .iter()
                    .position(|(l, _, _)| l == label)
                    .ok_or_else(|| err(tok, format!("unknown edge `{label}`")))?;
                let h = 2 * e + side;
                if let Some(prev) = seen[h] {
                    return Err(err(
                        tok,
                        format!("half-edge `{tok}` already used on line {prev}"),
                    )
                    .into());
                }
                let at = if side == 0 { edges[e].1 } else { edges[e].2 };
                if at != v {
                    return Err(err(
                        tok,
                        format!("half-edge `{tok}` belongs to vertex `{}`", vertices[at]),
                    )
                    .into());
                }
                seen[h] = Some(line_no);
                rot.push(h);
            }
            rotations[v] = Some(rot);
        }
        if let Some(h) = seen.iter().position(Option::is_none) {
            let last = lines.last().map_or(1, |l| l.0);
            return Err(ParseError::new(
                last,
                1,
                format!(
                    "half-edge `{}.{}` does not appear in any rotation",
                    edges[h / 2].0,
                    h % 2
                ),
            )
            .into());
        }
        let rotation = rotations
            .into_iter()
            .map(Option::unwrap_or_default)
            .collect();
        Self::new(vertices, edges, rotation)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("vertices: {}\n", self.vertices.join(" "));
        for (e, label) in self.edges.iter().enumerate() {
            let (u, v) = self.ends(e);
            out.push_str(&format!(
                "edge {label}: {} {}\n",
                self.vertices[u], self.vertices[v]
            ));
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            if rot.is_empty() {
                continue;
            }
            let darts: Vec<String> = rot
                .iter()
                .map(|h| format!("{}.{}", self.edges[h / 2], h % 2))
                .collect();
            out.push_str(&format!(
                "rotation {}: {}\n",
                self.vertices[v],
                darts.join(" ")
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::super::{toric_grid, triangle};
    use super::*;

    #[test]
    fn round_trip() {
        for g in [triangle(), toric_grid(3, 3)] {
            let back = EmbeddedGraph::parse(&g.to_text()).unwrap();
            assert_eq!(back.to_text(), g.to_text());
            assert_eq!(back.num_faces(), g.num_faces());
        }
    }

    #[test]
    fn parse_example() {
        let g = EmbeddedGraph::parse(
            "# theta\nvertices: a b\nedge x: a b\nedge y: a b\nedge z: a b\nrotation a: x.0 y.0 z.0\nrotation b: x.1 z.1 y.1\n",
        )
        .unwrap();
        assert_eq!(g.num_faces(), 3);
    }

    fn parse_err(text: &str) -> ParseError {
        match EmbeddedGraph::parse(text) {
            Err(GraphError::Parse(e)) => e,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn errors_point_at_tokens() {
        let e = parse_err("vertices: a b\nedge x: a c\n");
        assert_eq!((e.line, e.column), (2, 11));
        let e = parse_err("vertices: a b\nedge x: a b\nrotation a: x.0\nrotation b: x.0\n");
        assert_eq!((e.line, e.column), (4, 13));
        let e = parse_err("vertices: a b\nedge x: a b\nrotation a: x.0\n");
        assert!(e.message.contains("x.1"));
        let e = parse_err("vertices: a b\nedge x: a b\nrotation a: x.1\nrotation b: x.0\n");
        assert!(e.message.contains("belongs to vertex `b`"));
    }
}
