use std::collections::{HashMap, HashSet};

use super::{Arc, Digraph, VertexId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ParseMode {
    /// Duplicate arcs are errors.
    #[default]
    Strict,
    /// Duplicate arcs are dropped and counted.
    Lenient,
}

#[derive(Debug, Clone)]
pub struct Parsed {
    pub graph: Digraph,
    pub dropped_duplicates: usize,
}

/// Parses the edge-list format: one `SOURCE TARGET` pair per line, `#` starts
/// a comment, blank lines are skipped. Labels are interned in order of first
/// appearance. Self-loops are rejected in both modes.
pub fn parse_edge_list(text: &str, mode: ParseMode) -> Result<Parsed> {
    let mut labels: Vec<String> = Vec::new();
    let mut index: HashMap<&str, VertexId> = HashMap::new();
    let mut arcs = Vec::new();
    let mut seen = HashSet::new();
    let mut dropped_duplicates = 0;

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or_default();
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        let [s, t] = tokens[..] else {
            return Err(Error::MalformedLine {
                line,
                tokens: tokens.len(),
            });
        };
        if s == t {
            return Err(Error::SelfLoop {
                line,
                label: s.to_owned(),
            });
        }
        let mut intern = |tok| {
            *index.entry(tok).or_insert_with(|| {
                labels.push(String::from(tok));
                labels.len() - 1
            })
        };
        let (source, target) = (intern(s), intern(t));
        if !seen.insert((source, target)) {
            match mode {
                ParseMode::Strict => {
                    return Err(Error::DuplicateArc {
                        line,
                        source_label: s.to_owned(),
                        target_label: t.to_owned(),
                    })
                }
                ParseMode::Lenient => {
                    dropped_duplicates += 1;
                    continue;
                }
            }
        }
        arcs.push(Arc { source, target });
    }

    Ok(Parsed {
        graph: Digraph::from_parts(labels, arcs)?,
        dropped_duplicates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_c3() {
        let g: Digraph = "1 2\n2 3\n3 1".parse().unwrap();
        assert_eq!((g.n(), g.m()), (3, 3));
        assert_eq!(g.labels(), ["1", "2", "3"]);
    }

    #[test]
    fn parses_g_fig1() {
        let g = parse_edge_list(fixtures::G_FIG1_EDGE_LIST, ParseMode::Strict)
            .unwrap()
            .graph;
        assert_eq!((g.n(), g.m()), (19, 27));
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\n\n a  b # trailing\n\t\nb a\n";
        let g: Digraph = text.parse().unwrap();
        assert_eq!((g.n(), g.m()), (2, 2));
    }

    #[test]
    fn rejects_self_loop_in_both_modes() {
        for mode in [ParseMode::Strict, ParseMode::Lenient] {
            let err = parse_edge_list("1 2\n1 1", mode).unwrap_err();
            assert_eq!(
                err,
                Error::SelfLoop {
                    line: 2,
                    label: "1".into()
                }
            );
        }
    }

    #[test]
    fn malformed_lines() {
        assert_eq!(
            parse_edge_list("1 2 3", ParseMode::Strict).unwrap_err(),
            Error::MalformedLine { line: 1, tokens: 3 }
        );
        assert_eq!(
            parse_edge_list("1 2\n7", ParseMode::Lenient).unwrap_err(),
            Error::MalformedLine { line: 2, tokens: 1 }
        );
    }

    #[test]
    fn duplicates_strict_vs_lenient() {
        let text = "1 2\n2 1\n1 2\n1 2";
        assert!(matches!(
            parse_edge_list(text, ParseMode::Strict),
            Err(Error::DuplicateArc { line: 3, .. })
        ));
        let parsed = parse_edge_list(text, ParseMode::Lenient).unwrap();
        assert_eq!(parsed.dropped_duplicates, 2);
        assert_eq!(parsed.graph.m(), 2);
    }

    #[test]
    fn serialize_is_canonical() {
        assert_eq!(fixtures::c3().serialize(), "1 2\n2 3\n3 1");
        assert_eq!(fixtures::p2().serialize(), "1 2\n2 1");
        let shuffled: Digraph = "3 1\n1 2\n2 3".parse().unwrap();
        assert_eq!(shuffled.serialize(), "1 2\n2 3\n3 1");
    }

    #[test]
    fn g_fig1_round_trip() {
        let g = fixtures::g_fig1();
        let h: Digraph = g.serialize().parse().unwrap();
        assert_eq!(h.labeled_arc_set(), g.labeled_arc_set());
        assert_eq!(h.label_set(), g.label_set());
    }
}
