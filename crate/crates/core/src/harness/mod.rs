//! Input format, corpus enumeration, the theorem suite and the command line.

mod cli;
mod corpus;
mod format;
mod suite;

pub use cli::{cli_dispatch, parse_element, CliOutput, EXIT_ERROR};
pub use corpus::{enumerate_corpus, ring_multsets, Corpus, CorpusModule, CorpusSpec, Family, Instance};
pub use format::{parse_spec, parse_spec_with_bound, StructureSpec, FORMAT_VERSION};
pub use suite::{
    run_theorem_suite, LoggedInstance, Property, PropertyCounts, PropertyTable, SuiteCounterexample, SuiteReport,
};
