use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A decreasing chain `X^0 ⊇ X^1 ⊇ ... ⊇ X^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofiltration {
    steps: Vec<SimplicialComplex>,
    seed: Option<u64>,
}

impl Cofiltration {
    /// Audits that every step is a subcomplex of the one before.
    pub fn new(steps: Vec<SimplicialComplex>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Audit {
                step: 0,
                message: "a cofiltration needs at least one step".into(),
            });
        }
        for (i, w) in steps.windows(2).enumerate() {
            if let Some(f) = w[1].facets().iter().find(|f| !w[0].contains(f)) {
                return Err(Error::Audit {
                    step: i + 1,
                    message: format!("simplex {f} is not in step {i}; not a subcomplex"),
                });
            }
        }
        Ok(Cofiltration { steps, seed: None })
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }

    /// The seed of the random attack that produced this chain, if any.
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn steps(&self) -> &[SimplicialComplex] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn first(&self) -> &SimplicialComplex {
        &self.steps[0]
    }
}

/// Removes `steps` uniformly chosen simplices (restricted to `target_dims`
/// when given) one after the other, each together with its star. Stops
/// early once no candidate is left. Deterministic for a given seed.
pub fn attack_random(
    x: &SimplicialComplex,
    steps: usize,
    seed: u64,
    target_dims: Option<&[usize]>,
) -> Result<Cofiltration> {
    if steps == 0 {
        return Err(Error::invalid("an attack needs at least one step"));
    }
    if x.is_empty() {
        return Err(Error::invalid("cannot attack an empty complex"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut chain = vec![x.clone()];
    for k in 0..steps {
        let current = chain.last().expect("chain starts with X");
        let candidates: Vec<&Simplex> = current
            .all_simplices()
            .filter(|s| target_dims.is_none_or(|d| d.contains(&s.dim())))
            .collect();
        if candidates.is_empty() {
            if k == 0 {
                return Err(Error::invalid(
                    "no simplex of the requested dimensions to remove",
                ));
            }
            break;
        }
        let victim = candidates[rng.gen_range(0..candidates.len())].clone();
        let next = current.remove_star(&victim);
        chain.push(next);
    }
    Ok(Cofiltration::new(chain)?.with_seed(seed))
}

/// Greedy score for [`attack_targeted`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TargetScore {
    /// Highest dimension first.
    MaxDim,
    /// Largest star first.
    MaxCofaces,
}

impl std::str::FromStr for TargetScore {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max_dim" => Ok(TargetScore::MaxDim),
            "max_cofaces" => Ok(TargetScore::MaxCofaces),
            other => Err(Error::invalid(format!(
                "unknown score {other:?}, expected max_dim or max_cofaces"
            ))),
        }
    }
}

/// Removes, `steps` times, the highest-scoring simplex and its star. Ties go
/// to the lexicographically smallest vertex list. Stops early once empty.
pub fn attack_targeted(
    x: &SimplicialComplex,
    steps: usize,
    score: TargetScore,
) -> Result<Cofiltration> {
    if steps == 0 {
        return Err(Error::invalid("an attack needs at least one step"));
    }
    if x.is_empty() {
        return Err(Error::invalid("cannot attack an empty complex"));
    }
    let mut chain = vec![x.clone()];
    for _ in 0..steps {
        let current = chain.last().expect("chain starts with X");
        if current.is_empty() {
            break;
        }
        let scores = match score {
            TargetScore::MaxDim => current
                .all_simplices()
                .map(|s| (s, s.dim()))
                .collect::<Vec<_>>(),
            TargetScore::MaxCofaces => {
                let mut count: HashMap<&Simplex, usize> = HashMap::new();
                let all: Vec<&Simplex> = current.all_simplices().collect();
                for t in &all {
                    for f in t.all_faces() {
                        *count
                            .entry(all[all.binary_search(&&f).expect("faces are simplices")])
                            .or_default() += 1;
                    }
                }
                all.iter().map(|s| (*s, count[s])).collect()
            }
        };
        let victim = scores
            .iter()
            .max_by(|a, b| {
                a.1.cmp(&b.1)
                    .then_with(|| b.0.vertices().cmp(a.0.vertices()))
            })
            .map(|(s, _)| (*s).clone())
            .expect("non-empty complex");
        let next = current.remove_star(&victim);
        chain.push(next);
    }
    Cofiltration::new(chain)
}
