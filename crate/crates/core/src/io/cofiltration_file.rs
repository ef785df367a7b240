use std::path::Path;

use serde::{Deserialize, Serialize};

use super::facets::read;
use crate::attack::Cofiltration;
use crate::complex::{Simplex, SimplicialComplex, Vertex};
use crate::error::{Error, Result};

/// One entry of a cofiltration file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StepSpec {
    /// The complete facet list of this step.
    Facets(Vec<Vec<Vertex>>),
    /// Simplices whose stars are removed from the previous step.
    Remove(Vec<Vec<Vertex>>),
}

/// `{"steps": [{"facets": [[..]]} | {"remove": [[..]]}, ...], "seed": s}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CofiltrationFile {
    pub steps: Vec<StepSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl CofiltrationFile {
    /// Every step written out as a full facet list.
    pub fn from_cofiltration(c: &Cofiltration) -> Self {
        let steps = c
            .steps()
            .iter()
            .map(|x| StepSpec::Facets(x.facets().iter().map(|f| f.vertices().to_vec()).collect()))
            .collect();
        CofiltrationFile {
            steps,
            seed: c.seed(),
        }
    }

    /// Builds and audits the chain.
    pub fn build(&self) -> Result<Cofiltration> {
        let mut chain: Vec<SimplicialComplex> = Vec::with_capacity(self.steps.len());
        for (i, step) in self.steps.iter().enumerate() {
            let audit = |e: Error| Error::Audit {
                step: i,
                message: e.to_string(),
            };
            let next = match (step, chain.last()) {
                (StepSpec::Facets(f), _) => {
                    SimplicialComplex::from_facets(f.clone()).map_err(audit)?
                }
                (StepSpec::Remove(_), None) => {
                    return Err(Error::Audit {
                        step: 0,
                        message: "the first step must list facets".into(),
                    })
                }
                (StepSpec::Remove(list), Some(prev)) => {
                    let mut x = prev.clone();
                    for s in list {
                        let s = Simplex::new(s.clone()).map_err(audit)?;
                        if !x.contains(&s) {
                            return Err(Error::Audit {
                                step: i,
                                message: format!("cannot remove {s}: not in the previous step"),
                            });
                        }
                        x = x.remove_star(&s);
                    }
                    x
                }
            };
            chain.push(next);
        }
        if chain.is_empty() {
            return Err(Error::Audit {
                step: 0,
                message: "no steps".into(),
            });
        }
        let c = Cofiltration::new(chain)?;
        Ok(match self.seed {
            Some(s) => c.with_seed(s),
            None => c,
        })
    }
}

pub fn parse_cofiltration_str(text: &str) -> Result<Cofiltration> {
    let file: CofiltrationFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    file.build()
}

pub fn parse_cofiltration(path: &Path) -> Result<Cofiltration> {
    parse_cofiltration_str(&read(path)?)
}
