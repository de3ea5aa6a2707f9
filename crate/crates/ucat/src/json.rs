//! JSON form of partition polynomials.
//!
//! ```text
//! {"n":4,"terms":[{"lambda":[4],"coeff":1},{"lambda":[2,2],"coeff":1}]}
//! ```
//!
//! Terms are sorted by `lambda` descending, then by `ypow` ascending;
//! `ypow` is omitted when it is zero. The zero polynomial is
//! `{"n":0,"terms":[]}`.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use ucat_core::{GraphUPolynomial, Partition, PartitionPolynomial};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct PolynomialJson {
    pub n: u32,
    pub terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TermJson {
    pub lambda: Vec<u32>,
    pub coeff: i64,
    #[serde(default, skip_serializing_if = "is_zero")]
    pub ypow: u32,
}

fn is_zero(x: &u32) -> bool {
    *x == 0
}

#[derive(Error, Debug)]
pub enum JsonError {
    #[error("malformed polynomial JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("term {index}: lambda is not a partition (empty, zero part or not weakly decreasing)")]
    BadLambda { index: usize },
    #[error("term {index}: lambda sums to {found}, expected n = {n}")]
    WrongSize { index: usize, found: u32, n: u32 },
    #[error("term {index}: zero coefficient")]
    ZeroCoefficient { index: usize },
    #[error("term {index}: terms are not in canonical order or repeat a monomial")]
    Order { index: usize },
}

impl PolynomialJson {
    pub fn from_graph_polynomial(poly: &GraphUPolynomial) -> Self {
        let terms: Vec<TermJson> = poly
            .terms()
            .map(|(lambda, ypow, coeff)| TermJson {
                lambda: lambda.parts().to_vec(),
                coeff,
                ypow,
            })
            .collect();
        let n = terms.first().map_or(0, |t| t.lambda.iter().sum());
        PolynomialJson { n, terms }
    }

    pub fn from_polynomial(poly: &PartitionPolynomial) -> Self {
        let mut graph = GraphUPolynomial::new();
        for (lambda, coeff) in poly.terms() {
            graph.add_term(lambda.clone(), 0, coeff);
        }
        Self::from_graph_polynomial(&graph)
    }

    /// Validates the term list and builds the polynomial.
    pub fn to_graph_polynomial(&self) -> Result<GraphUPolynomial, JsonError> {
        let mut poly = GraphUPolynomial::new();
        let mut previous: Option<(&Partition, u32)> = None;
        let lambdas: Vec<Partition> = self
            .terms
            .iter()
            .enumerate()
            .map(|(index, t)| {
                Partition::new(t.lambda.clone()).map_err(|_| JsonError::BadLambda { index })
            })
            .collect::<Result<_, _>>()?;
        for (index, (term, lambda)) in self.terms.iter().zip(&lambdas).enumerate() {
            if lambda.size() != self.n {
                return Err(JsonError::WrongSize {
                    index,
                    found: lambda.size(),
                    n: self.n,
                });
            }
            if term.coeff == 0 {
                return Err(JsonError::ZeroCoefficient { index });
            }
            if let Some((p, y)) = previous {
                let ordered = lambda < p || (lambda == p && term.ypow > y);
                if !ordered {
                    return Err(JsonError::Order { index });
                }
            }
            previous = Some((lambda, term.ypow));
            poly.add_term(lambda.clone(), term.ypow, term.coeff);
        }
        Ok(poly)
    }
}

pub fn polynomial_to_json(poly: &PartitionPolynomial) -> String {
    serde_json::to_string(&PolynomialJson::from_polynomial(poly)).expect("plain data serializes")
}

pub fn graph_polynomial_to_json(poly: &GraphUPolynomial) -> String {
    serde_json::to_string(&PolynomialJson::from_graph_polynomial(poly))
        .expect("plain data serializes")
}

pub fn parse_polynomial_json(text: &str) -> Result<GraphUPolynomial, JsonError> {
    let raw: PolynomialJson = serde_json::from_str(text)?;
    raw.to_graph_polynomial()
}
