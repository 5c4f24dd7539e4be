//! graph6 codec.
//!
//! A record is a size header followed by the upper triangle of the adjacency
//! matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`), packed six bits
//! per byte, each byte offset by 63. The parser accepts the one-byte header
//! (`n <= 62`) and the `~`-prefixed three-byte header (`n <= 258047`); the
//! writer only emits the one-byte form.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order [`write_graph6`] supports.
pub const MAX_WRITE_ORDER: usize = 62;

fn data_value(byte: u8) -> Result<u8> {
    if (63..=126).contains(&byte) {
        Ok(byte - 63)
    } else {
        Err(Error::MalformedGraph6(format!(
            "byte {byte:#04x} outside 63..=126"
        )))
    }
}

/// Parses a single graph6 record. A trailing `\n`/`\r\n` and an optional
/// `>>graph6<<` prefix are tolerated.
pub fn parse_graph6(text: &[u8]) -> Result<Graph> {
    let mut bytes = text;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
    }
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    let (n, body) = match bytes {
        [] => return Err(Error::MalformedGraph6("empty record".into())),
        [126, 126, ..] => {
            return Err(Error::MalformedGraph6(
                "eight-byte size header not supported".into(),
            ))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::MalformedGraph6("truncated size header".into()));
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                n = (n << 6) | data_value(b)? as usize;
            }
            if n < 63 {
                return Err(Error::MalformedGraph6(format!(
                    "order {n} must use the one-byte header"
                )));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => (data_value(*first)? as usize, rest),
    };

    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::MalformedGraph6(format!(
            "expected {expected} data bytes for n = {n}, found {}",
            body.len()
        )));
    }

    let mut matrix = vec![false; n * n];
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data_value(body[pos / 6])?;
            if (byte >> (5 - pos % 6)) & 1 == 1 {
                matrix[i * n + j] = true;
                matrix[j * n + i] = true;
            }
            pos += 1;
        }
    }
    // padding bits must be zero
    if bits % 6 != 0 {
        let last = data_value(body[body.len() - 1])?;
        if last & ((1u8 << (6 - bits % 6)) - 1) != 0 {
            return Err(Error::MalformedGraph6("nonzero padding bits".into()));
        }
    }
    for &b in body {
        data_value(b)?;
    }
    Ok(Graph::from_matrix(n, matrix))
}

/// Encodes `g` as a graph6 record without a trailing newline.
pub fn write_graph6(g: &Graph) -> Result<Vec<u8>> {
    let n = g.order();
    if n > MAX_WRITE_ORDER {
        return Err(Error::Unsupported {
            n,
            max: MAX_WRITE_ORDER,
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(out)
}

/// [`write_graph6`] as a `String`; graph6 is always ASCII.
pub fn to_graph6_string(g: &Graph) -> Result<alloc::string::String> {
    write_graph6(g).map(|bytes| bytes.into_iter().map(char::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_records() {
        // Values produced by networkx's graph6 writer.
        assert_eq!(parse_graph6(b"Bw").unwrap(), Graph::complete(3));
        assert_eq!(parse_graph6(b"B?").unwrap(), Graph::empty(3));
        assert_eq!(parse_graph6(b"A_").unwrap(), Graph::complete(2));
        assert_eq!(write_graph6(&Graph::complete(3)).unwrap(), b"Bw");
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), b"@");
        assert_eq!(write_graph6(&Graph::complete(2)).unwrap(), b"A_");
        assert_eq!(parse_graph6(b">>graph6<<Bw\n").unwrap(), Graph::complete(3));
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_graph6(b""), Err(Error::MalformedGraph6(_))));
        assert!(matches!(parse_graph6(b"B"), Err(Error::MalformedGraph6(_))));
        assert!(matches!(
            parse_graph6(b"Bww"),
            Err(Error::MalformedGraph6(_))
        ));
        assert!(matches!(
            parse_graph6(b"B\x20"),
            Err(Error::MalformedGraph6(_))
        ));
        assert!(matches!(
            parse_graph6(b"~?"),
            Err(Error::MalformedGraph6(_))
        ));
        // n = 3 uses three bits; the low three bits of the data byte must be 0
        assert!(matches!(
            parse_graph6(b"Bx"),
            Err(Error::MalformedGraph6(_))
        ));
    }

    #[test]
    fn long_header() {
        let g = Graph::cycle(70);
        let mut record = vec![126, 63, 64, 70 - 64 + 63];
        let short = {
            // body from a manual encoding
            let bits: usize = 70 * 69 / 2;
            let mut body = vec![0u8; bits.div_ceil(6)];
            let mut pos = 0;
            for j in 1..70 {
                for i in 0..j {
                    if g.has_edge(i, j) {
                        body[pos / 6] |= 1 << (5 - pos % 6);
                    }
                    pos += 1;
                }
            }
            body.into_iter().map(|b| b + 63).collect::<Vec<_>>()
        };
        record.extend(short);
        assert_eq!(parse_graph6(&record).unwrap(), g);
        assert_eq!(write_graph6(&g), Err(Error::Unsupported { n: 70, max: 62 }));
    }
}
