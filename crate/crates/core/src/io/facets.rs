use std::path::Path;

use crate::complex::{SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// One facet per line as whitespace-separated vertex ids; `#` starts a
/// comment and blank lines are skipped.
pub fn parse_facets_str(text: &str) -> Result<SimplicialComplex> {
    let mut facets: Vec<Vec<Vertex>> = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let facet = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Vertex>().map_err(|_| Error::Parse {
                    line: k + 1,
                    message: format!("{tok:?} is not a non-negative vertex id"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut sorted = facet.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse {
                line: k + 1,
                message: "repeated vertex".into(),
            });
        }
        facets.push(facet);
    }
    if facets.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no facets found".into(),
        });
    }
    SimplicialComplex::from_facets(facets)
}

pub fn parse_facets(path: &Path) -> Result<SimplicialComplex> {
    parse_facets_str(&read(path)?)
}

pub(crate) fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// The facets of `x`, one per line.
pub fn write_facets(x: &SimplicialComplex) -> String {
    let mut out = String::new();
    for f in x.facets() {
        let line: Vec<String> = f.vertices().iter().map(u32::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}
