//! Small named graphs used throughout the tests, the CLI self-test and the docs.

use crate::graph::{parse_edge_list, Digraph, ParseMode};

/// 19 vertices, 27 arcs. Twinless strongly connected, with 2-edge blocks
/// `{2,5,7}` and `{12,18}` and 2-edge-twinless blocks `{2,5}` and `{12,18}`.
/// Removing `(3,8)` separates 2 from 7 in the twinless sense.
pub const G_FIG1_EDGE_LIST: &str = include_str!("../fixtures/g_fig1.txt");
/// Directed triangle.
pub const C3_EDGE_LIST: &str = include_str!("../fixtures/c3.txt");
/// One twin pair.
pub const P2_EDGE_LIST: &str = include_str!("../fixtures/p2.txt");
/// All six arcs on `{a, b, c}`.
pub const K3B_EDGE_LIST: &str = include_str!("../fixtures/k3b.txt");
/// Twinless strongly connected graph whose strong bridge `(p, q)` is also the
/// only arc separating `x` from `y` in the twinless sense.
pub const G_GADGET_EDGE_LIST: &str = include_str!("../fixtures/g_gadget.txt");

fn load(text: &str) -> Digraph {
    parse_edge_list(text, ParseMode::Strict)
        .expect("bundled fixture parses")
        .graph
}

pub fn g_fig1() -> Digraph {
    load(G_FIG1_EDGE_LIST)
}

pub fn c3() -> Digraph {
    load(C3_EDGE_LIST)
}

pub fn p2() -> Digraph {
    load(P2_EDGE_LIST)
}

pub fn k3b() -> Digraph {
    load(K3B_EDGE_LIST)
}

pub fn g_gadget() -> Digraph {
    load(G_GADGET_EDGE_LIST)
}

/// Every fixture with its conventional name.
pub fn all() -> Vec<(&'static str, Digraph)> {
    vec![
        ("g_fig1", g_fig1()),
        ("c3", c3()),
        ("p2", p2()),
        ("k3b", k3b()),
        ("g_gadget", g_gadget()),
    ]
}
