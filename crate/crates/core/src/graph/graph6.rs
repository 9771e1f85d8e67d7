//! graph6 encoding (McKay's format): a size header `N(n)` followed by the upper
//! triangle of the adjacency matrix, column by column, packed six bits per byte
//! with an offset of 63.

use super::{FormatError, Graph};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut String, n: usize) {
    let push6 = |out: &mut String, v: usize| out.push((v as u8 + 63) as char);
    if n <= 62 {
        push6(out, n);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push6(out, (n >> shift) & 0x3f);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push6(out, (n >> shift) & 0x3f);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = String::with_capacity(8 + bits.div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

fn sextet(b: u8) -> Result<u8, FormatError> {
    if (63..=126).contains(&b) {
        Ok(b - 63)
    } else {
        Err(FormatError::Graph6(format!(
            "byte {b:#04x} outside 63..=126"
        )))
    }
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and trailing whitespace
/// are accepted; padding bits must be zero.
pub fn decode(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim_end();
    let bytes = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Graph6("empty input".into()));
    }
    let (n, body) = if bytes[0] != b'~' {
        (sextet(bytes[0])? as usize, &bytes[1..])
    } else if bytes.get(1) != Some(&b'~') {
        if bytes.len() < 4 {
            return Err(FormatError::Graph6("truncated size header".into()));
        }
        let n = bytes[1..4].iter().try_fold(0usize, |acc, &b| {
            Ok::<_, FormatError>((acc << 6) | sextet(b)? as usize)
        })?;
        (n, &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(FormatError::Graph6("truncated size header".into()));
        }
        let n = bytes[2..8].iter().try_fold(0usize, |acc, &b| {
            Ok::<_, FormatError>((acc << 6) | sextet(b)? as usize)
        })?;
        (n, &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(FormatError::Graph6(format!(
            "expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let body: Vec<u8> = body.iter().map(|&b| sextet(b)).collect::<Result<_, _>>()?;
    let bit = |k: usize| (body[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if (k..body.len() * 6).any(bit) {
        return Err(FormatError::Graph6("nonzero padding bits".into()));
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

/// Decodes every non-blank line.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(decode)
        .collect()
}
