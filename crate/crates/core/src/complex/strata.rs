use std::fmt;

use crate::error::{Error, Result};

/// A strictly increasing, non-empty set of dimensions `h_0 < h_1 < ... < h_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StrataSet(Vec<usize>);

impl StrataSet {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::invalid("strata set is empty"));
        }
        if dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::invalid(format!(
                "strata {dims:?} are not strictly increasing"
            )));
        }
        Ok(StrataSet(dims))
    }

    /// `{0, 1, ..., top}`.
    pub fn full(top: usize) -> Self {
        StrataSet((0..=top).collect())
    }

    /// Parses a comma-separated ascending list such as `0,2`.
    pub fn parse(text: &str) -> Result<Self> {
        let dims = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::invalid(format!("bad stratum {:?} in {text:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(dims)
    }

    pub fn dims(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, d: usize) -> bool {
        self.0.binary_search(&d).is_ok()
    }

    pub fn first(&self) -> usize {
        self.0[0]
    }

    /// Strata at or below `top` (strata above the complex dimension are empty).
    pub fn up_to(&self, top: isize) -> Vec<usize> {
        self.0
            .iter()
            .copied()
            .filter(|&d| (d as isize) <= top)
            .collect()
    }

    /// Whether the strata cover every dimension `0..=top`.
    pub fn covers(&self, top: isize) -> bool {
        (0..=top).all(|d| self.contains(d as usize))
    }
}

impl fmt::Display for StrataSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "}}")
    }
}
