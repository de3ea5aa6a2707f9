//! File formats, the verification harness and the command-line front end
//! for [`ucat_core`].

pub mod cli;
pub mod edgelist;
pub mod json;
pub mod verify;

pub use edgelist::{parse_tree, render_edge_list, EdgeListError};
pub use json::{
    graph_polynomial_to_json, parse_polynomial_json, polynomial_to_json, PolynomialJson,
};
pub use verify::{run_check, Check, VerificationReport, VerifyConfig, VerifyError};
