//! Verification campaigns over enumerated and constructed regular graphs.

mod campaign;
mod corpus;
mod report;
mod search;
mod trees;
mod walks;

pub use campaign::{
    c5_poly, paper_campaign, verify_paper_examples, Check, ExampleRow, PaperReport, EXAMPLES, FIGURE_NINE,
    FIGURE_TEN,
};
pub use corpus::{constructed_corpus, standard_corpus, CONSTRUCTED};
pub use report::{density, known_name, render_json};
pub use search::{search_corpus, search_max_density, CorpusSource, SearchReport, SearchRow, SPOT_CHECK_SEED};
pub use trees::{tree_extremal_check, TreeReport, TreeRow};
pub use walks::{vertexwise_walk_check, WalkReport};
