//! File formats, threaded search and the `dtgraphs` command line on top of `dtgraph-core`.

pub mod app;
pub mod format;
pub mod search;
