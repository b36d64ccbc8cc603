//! Line-oriented Gauss code text format.
//!
//! ```text
//! n=<int>
//! <i>: O <id> <+|-> U <id> <+|-> ...   # one line per strand, `#` comments
//! ```
//!
//! Both mentions of a chord must carry equal signs. Canonical emission
//! orders strands ascending and names chords `a, b, c, ...` in first-mention
//! order (then `aa, ab, ...`).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::diagram::{Chord, ChordId, EndpointId, GaussDiagram, Role, Sign};
use crate::error::{Error, Result};

/// Spreadsheet-style chord names: a..z, aa, ab, ...
fn chord_name(mut k: u32) -> String {
    let mut out = Vec::new();
    loop {
        out.push(b'a' + (k % 26) as u8);
        k /= 26;
        if k == 0 {
            break;
        }
        k -= 1;
    }
    out.reverse();
    String::from_utf8(out).unwrap()
}

pub fn emit_gauss(d: &GaussDiagram) -> String {
    let info = d.endpoint_info();
    let mut names: BTreeMap<ChordId, String> = BTreeMap::new();
    let mut out = format!("n={}\n", d.strand_count());
    for i in 1..=d.strand_count() {
        out.push_str(&i.to_string());
        out.push(':');
        for e in d.strand(i).unwrap() {
            let (cid, role) = info[e];
            let next = chord_name(names.len() as u32);
            let name = names.entry(cid).or_insert(next);
            let sign = match d.chord(cid).unwrap().sign {
                Sign::Pos => '+',
                Sign::Neg => '-',
            };
            let tag = match role {
                Role::Over => 'O',
                Role::Under => 'U',
            };
            out.push_str(&format!(" {tag} {name} {sign}"));
        }
        out.push('\n');
    }
    out
}

pub fn parse_gauss(text: &str) -> Result<GaussDiagram> {
    let mut n: Option<usize> = None;
    let mut strands: Vec<Vec<EndpointId>> = Vec::new();
    // token -> (sign, over endpoint, under endpoint)
    let mut mentions: BTreeMap<String, (Sign, Option<EndpointId>, Option<EndpointId>)> =
        BTreeMap::new();
    let mut next_ep = 0u32;

    for raw in text.lines() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("n=") {
            if n.is_some() {
                return Err(Error::Parse("duplicate header".into()));
            }
            let count: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad strand count `{rest}`")))?;
            if count == 0 {
                return Err(Error::Parse("strand count must be positive".into()));
            }
            n = Some(count);
            strands = alloc::vec![Vec::new(); count];
            continue;
        }
        let Some(count) = n else {
            return Err(Error::Parse("missing `n=<int>` header".into()));
        };
        let (idx, rest) = line
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("bad strand header in `{line}`")))?;
        let i: usize = idx
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand index `{idx}`")))?;
        if i == 0 || i > count {
            return Err(Error::Parse(format!(
                "strand index {i} out of range 1..={count}"
            )));
        }
        let toks: Vec<&str> = rest.split_whitespace().collect();
        if !toks.len().is_multiple_of(3) {
            return Err(Error::Parse(format!(
                "tokens of strand {i} not in `O <id> <+|->` triples"
            )));
        }
        for t in toks.chunks(3) {
            let role = match t[0] {
                "O" => Role::Over,
                "U" => Role::Under,
                other => return Err(Error::Parse(format!("bad role `{other}`"))),
            };
            let sign = match t[2] {
                "+" => Sign::Pos,
                "-" => Sign::Neg,
                other => return Err(Error::Parse(format!("bad sign `{other}`"))),
            };
            let ep = EndpointId(next_ep);
            next_ep += 1;
            strands[i - 1].push(ep);
            let entry = mentions
                .entry(t[1].to_string())
                .or_insert((sign, None, None));
            if entry.0 != sign {
                return Err(Error::Parse(format!(
                    "chord `{}` mentioned with inconsistent signs",
                    t[1]
                )));
            }
            let slot = match role {
                Role::Over => &mut entry.1,
                Role::Under => &mut entry.2,
            };
            if slot.is_some() {
                return Err(Error::Parse(format!(
                    "chord `{}` has two {:?} endpoints",
                    t[1], role
                )));
            }
            *slot = Some(ep);
        }
    }
    if n.is_none() {
        return Err(Error::Parse("missing `n=<int>` header".into()));
    }
    let mut chords = BTreeMap::new();
    for (k, (tok, (sign, over, under))) in mentions.into_iter().enumerate() {
        let (Some(over), Some(under)) = (over, under) else {
            return Err(Error::Parse(format!("dangling chord token `{tok}`")));
        };
        chords.insert(ChordId(k as u32), Chord { over, under, sign });
    }
    GaussDiagram::new(strands, chords)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn z12_round_trip() {
        let d = parse_gauss("n=2\n1: O a +\n2: U a +\n").unwrap();
        assert!(d.same_diagram(&catalog::z_surgery(1, 2, 2, false)));
        assert_eq!(crate::invariants::linking(&d, 1, 2).unwrap(), 1);
        assert_eq!(emit_gauss(&d), "n=2\n1: O a +\n2: U a +\n");
    }

    #[test]
    fn trivial_long_knot() {
        let d = parse_gauss("n=1\n").unwrap();
        assert_eq!(d.strand_count(), 1);
        assert_eq!(d.chord_count(), 0);
    }

    #[test]
    fn comments_and_blank_lines() {
        let d = parse_gauss("# a comment\nn=2\n1: O a + # trailing\n2: U a +\n\n").unwrap();
        assert_eq!(d.chord_count(), 1);
    }

    #[test]
    fn inconsistent_sign_rejected() {
        assert!(parse_gauss("n=2\n1: O a +\n2: U a -\n").is_err());
    }

    #[test]
    fn dangling_chord_rejected() {
        assert!(parse_gauss("n=2\n1: O a +\n2:\n").is_err());
        assert!(parse_gauss("n=1\n1: O a + U a + O a +\n").is_err());
    }

    #[test]
    fn bad_headers_rejected() {
        assert!(parse_gauss("1: O a +\n").is_err());
        assert!(parse_gauss("n=x\n").is_err());
        assert!(parse_gauss("n=1\n5: O a +\n").is_err());
        assert!(parse_gauss("n=0\n").is_err());
    }

    #[test]
    fn emit_parse_identity_on_catalog() {
        for d in catalog::small_corpus() {
            let text = emit_gauss(&d);
            let back = parse_gauss(&text).unwrap();
            assert!(back.same_diagram(&d), "round trip failed for:\n{text}");
            assert_eq!(emit_gauss(&back), text);
        }
    }

    #[test]
    fn chord_names_extend() {
        assert_eq!(chord_name(0), "a");
        assert_eq!(chord_name(25), "z");
        assert_eq!(chord_name(26), "aa");
        assert_eq!(chord_name(27), "ab");
    }
}
