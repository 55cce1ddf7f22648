//! Brute-force oracles and seeded random instance generators.

mod generate;
mod oracle;

pub use generate::{random_digraph, GeneratorConfig, Shape};
pub use oracle::{
    oracle_scc, oracle_strong_bridges, oracle_tscc, oracle_tscc_with, oracle_twinless_bridges,
    oracle_twinless_related, oracle_twinless_related_with, oracle_two_edge_blocks,
    oracle_two_edge_twinless_blocks, oracle_two_edge_twinless_blocks_with, ORACLE_WORK_LIMIT,
    TWIN_PAIR_LIMIT,
};
