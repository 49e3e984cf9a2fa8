//! Polygon input files: `{"vertices": [[x, y], ...], "f": [{"i", "j", "c"}, ...]}`
//! with `f` optional.

use std::fmt;

use serde::{Deserialize, Deserializer};
use syzlab::curve::{LaurentPolynomial, Term};
use syzlab::lattice::{LatticePoint, LatticePolygon};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Input {
    pub polygon: LatticePolygon,
    pub f: Option<LaurentPolynomial>,
}

/// Diagnostic with a 1-based position in the input text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

impl std::error::Error for InputError {}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let text = e.to_string();
        let message = text.strip_suffix(&suffix).unwrap_or(&text).to_string();
        InputError {
            line: e.line().max(1),
            column: e.column().max(1),
            message,
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawInput {
    #[serde(deserialize_with = "polygon_from_vertices")]
    vertices: LatticePolygon,
    #[serde(default)]
    f: Option<Vec<Term>>,
}

fn polygon_from_vertices<'de, D: Deserializer<'de>>(d: D) -> Result<LatticePolygon, D::Error> {
    let vertices = Vec::<LatticePoint>::deserialize(d)?;
    LatticePolygon::new(vertices).map_err(serde::de::Error::custom)
}

/// Parses and validates a polygon file. Vertices may come in any order.
pub fn parse_input(text: &str) -> Result<Input, InputError> {
    let raw: RawInput = serde_json::from_str(text)?;
    let f = raw.f.map(|terms| {
        LaurentPolynomial::from_terms(
            terms
                .into_iter()
                .map(|t| (LatticePoint::new(t.i, t.j), t.c)),
        )
    });
    Ok(Input {
        polygon: raw.vertices,
        f,
    })
}

pub fn parse_polygon(text: &str) -> Result<LatticePolygon, InputError> {
    parse_input(text).map(|i| i.polygon)
}

/// Parses a `--f` expression; positions refer to the expression itself.
pub fn parse_f(expr: &str) -> Result<LaurentPolynomial, InputError> {
    LaurentPolynomial::parse(expr).map_err(|e| InputError {
        line: 1,
        column: e.column,
        message: e.message,
    })
}
