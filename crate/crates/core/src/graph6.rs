//! graph6 encoding and DOT export.
//!
//! graph6 packs the upper triangle of the adjacency matrix column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`) six bits per byte, each byte offset
//! by 63. The order is prefixed as one byte for `n < 63`, `~` plus three
//! bytes for `n < 258048`, and `~~` plus six bytes beyond that.

use crate::error::Graph6Error;
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn err(offset: usize, message: impl Into<String>) -> Graph6Error {
    Graph6Error {
        offset,
        message: message.into(),
    }
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    let trimmed = s.trim_end_matches(['\n', '\r']);
    let mut base = 0;
    let bytes = if let Some(rest) = trimmed.strip_prefix(HEADER) {
        base = HEADER.len();
        rest.as_bytes()
    } else {
        trimmed.as_bytes()
    };
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(
                base + i,
                format!("byte {b:#04x} outside the graph6 range 63..=126"),
            ));
        }
    }
    let (n, mut pos) = match bytes {
        [] => return Err(err(base, "empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(err(base + 2 + rest.len(), "truncated order field"));
            }
            let n = rest[..6].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 8)
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(err(base + 1 + rest.len(), "truncated order field"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let need = nbits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < need {
        return Err(err(
            base + bytes.len(),
            format!("expected {need} data bytes, found {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(err(base + pos + need, "trailing bytes after adjacency data"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if need > 0 {
        let pad = need * 6 - nbits;
        let last = body[need - 1] - 63;
        if pad > 0 && last & ((1 << pad) - 1) != 0 {
            return Err(err(base + pos + need - 1, "nonzero padding bits"));
        }
    }
    pos += need;
    debug_assert_eq!(pos, bytes.len());
    Ok(Graph::from_edges(n, &edges).expect("decoded edges are valid"))
}

fn dot_id(s: &str) -> String {
    if !s.is_empty()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !s.starts_with(|c: char| c.is_ascii_digit())
    {
        s.to_string()
    } else {
        format!("\"{}\"", s.replace('"', "\\\""))
    }
}

/// DOT text with one node per vertex (labelled when the graph carries
/// labels) and one `--` line per edge.
pub fn dot_export(g: &Graph, name: &str) -> String {
    let mut out = format!("graph {} {{\n", dot_id(name));
    for v in 0..g.order() {
        match g.label(v) {
            Some(l) => out.push_str(&format!("  {v} [label={}];\n", dot_id(l))),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_vectors() {
        assert_eq!(encode(&Graph::cycle(3)), "Bw");
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::empty(0)), "?");
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn decode_vectors() {
        assert_eq!(decode("Bw").unwrap(), Graph::cycle(3));
        assert_eq!(decode(">>graph6<<Bw\n").unwrap(), Graph::cycle(3));
        assert_eq!(decode("@").unwrap(), Graph::empty(1));
    }

    #[test]
    fn large_order_prefix() {
        let g = Graph::path(70);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert_eq!(decode("").unwrap_err().offset, 0);
        assert_eq!(decode("B").unwrap_err().offset, 1);
        assert_eq!(decode("Bw?").unwrap_err().offset, 2);
        assert_eq!(decode("B x").unwrap_err().offset, 1);
        // "Bx" sets a padding bit.
        assert_eq!(decode("Bx").unwrap_err().offset, 1);
    }

    #[test]
    fn dot_uses_labels() {
        let g = Graph::from_named_edges(&["u", "v"], &[("u", "v")]).unwrap();
        let dot = dot_export(&g, "G");
        assert!(dot.contains("0 [label=u];"));
        assert!(dot.contains("0 -- 1;"));
    }
}
