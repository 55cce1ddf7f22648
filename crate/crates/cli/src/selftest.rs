use std::io::Write;

use twinless_core::blocks::{
    tetb_alg1_matrix, tetb_alg2_refine, two_edge_blocks, two_edge_twinless_blocks, RefineMode,
};
use twinless_core::connectivity::twinless_strongly_connected_components;
use twinless_core::cuts::{strong_bridges, twinless_bridges};
use twinless_core::fixtures;
use twinless_core::testkit::{
    oracle_strong_bridges, oracle_tscc, oracle_twinless_bridges, oracle_two_edge_twinless_blocks,
    random_digraph, GeneratorConfig, Shape,
};
use twinless_core::Digraph;

fn labeled(sets: &[&[&str]]) -> Vec<Vec<String>> {
    sets.iter()
        .map(|s| s.iter().map(|l| l.to_string()).collect())
        .collect()
}

fn fixture_checks() -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let g = fixtures::g_fig1();
    out.push((
        "g_fig1 2-edge blocks".into(),
        two_edge_blocks(&g).map(|b| b.labeled(&g)).ok() == Some(labeled(&[&["2", "5", "7"], &["12", "18"]])),
    ));
    out.push((
        "g_fig1 2-edge-twinless blocks".into(),
        two_edge_twinless_blocks(&g).labeled(&g) == labeled(&[&["2", "5"], &["12", "18"]]),
    ));

    let c3 = fixtures::c3();
    out.push((
        "c3 is one tscc".into(),
        twinless_strongly_connected_components(&c3).len() == 1,
    ));

    let p2 = fixtures::p2();
    out.push((
        "p2 tscc are singletons".into(),
        twinless_strongly_connected_components(&p2).len() == 2,
    ));

    let k3 = fixtures::k3b();
    out.push((
        "k3b has no twinless bridges".into(),
        twinless_bridges(&k3).map(|b| b.is_empty()).unwrap_or(false),
    ));

    let gadget = fixtures::g_gadget();
    let x = gadget.vertex("x").expect("x");
    let y = gadget.vertex("y").expect("y");
    let pq = gadget.find_labeled_arc("p", "q");
    out.push((
        "g_gadget strong bridges".into(),
        strong_bridges(&gadget).ok() == pq.map(|a| vec![a]),
    ));
    out.push((
        "g_gadget safe refinement separates x and y".into(),
        tetb_alg2_refine(&gadget, RefineMode::Safe).map(|b| !b.together(x, y)).unwrap_or(false),
    ));
    out.push((
        "g_gadget matrix separates x and y".into(),
        tetb_alg1_matrix(&gadget).map(|b| !b.together(x, y)).unwrap_or(false),
    ));
    out
}

fn random_check(g: &Digraph) -> bool {
    let Ok(oracle) = oracle_two_edge_twinless_blocks(g) else {
        return false;
    };
    let tscc_ok = oracle_tscc(g).map(|p| p == twinless_strongly_connected_components(g)).unwrap_or(false);
    tscc_ok
        && tetb_alg1_matrix(g).ok().as_ref() == Some(&oracle)
        && tetb_alg2_refine(g, RefineMode::Safe).ok().as_ref() == Some(&oracle)
        && strong_bridges(g).ok() == oracle_strong_bridges(g).ok()
        && twinless_bridges(g).ok() == oracle_twinless_bridges(g).ok()
}

pub(crate) fn run(cases: u64, seed: u64, out: &mut dyn Write) -> bool {
    let mut all = true;
    for (name, ok) in fixture_checks() {
        all &= ok;
        let _ = writeln!(out, "{} {name}", if ok { "ok  " } else { "FAIL" });
    }
    let mut failures = Vec::new();
    for i in 0..cases {
        let cfg = GeneratorConfig::ranges(3..=8, 3..=18, seed.wrapping_add(i))
            .shape(Shape::TwinlessStronglyConnected)
            .twin_density(0.4)
            .max_twin_pairs(8);
        match random_digraph(&cfg) {
            Ok(g) if random_check(&g) => {}
            _ => failures.push(seed.wrapping_add(i)),
        }
    }
    let ok = failures.is_empty();
    all &= ok;
    let _ = writeln!(
        out,
        "{} {cases} random twinless strongly connected graphs against oracles",
        if ok { "ok  " } else { "FAIL" }
    );
    for s in failures.iter().take(5) {
        let _ = writeln!(out, "     failing seed {s}");
    }
    all
}
