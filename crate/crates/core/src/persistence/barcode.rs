use std::fmt;

use serde::{Deserialize, Serialize};

use super::Tower;
use crate::error::{Error, Result};

/// The interval `[birth, death)` with its multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Bar {
    pub birth: usize,
    pub death: usize,
    pub mult: usize,
}

/// Interval decomposition of a tower over `0..=N`; deaths lie in `1..=N+1`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Barcode {
    len: usize,
    bars: Vec<Bar>,
}

impl Barcode {
    /// Sorts by `(birth, death)`, merges repeated intervals and drops zero
    /// multiplicities.
    pub fn new(len: usize, bars: impl IntoIterator<Item = Bar>) -> Result<Self> {
        let mut v: Vec<Bar> = Vec::new();
        for b in bars {
            if b.birth >= b.death || b.death > len {
                return Err(Error::invalid(format!(
                    "bar [{},{}) outside 0 <= b < d <= {len}",
                    b.birth, b.death
                )));
            }
            if b.mult > 0 {
                v.push(b);
            }
        }
        v.sort_unstable_by_key(|b| (b.birth, b.death));
        let mut bars: Vec<Bar> = Vec::with_capacity(v.len());
        for b in v {
            match bars.last_mut() {
                Some(last) if (last.birth, last.death) == (b.birth, b.death) => last.mult += b.mult,
                _ => bars.push(b),
            }
        }
        Ok(Barcode { len, bars })
    }

    /// Number of indices `N + 1` of the underlying tower.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn multiplicity(&self, birth: usize, death: usize) -> usize {
        self.bars
            .iter()
            .find(|b| b.birth == birth && b.death == death)
            .map_or(0, |b| b.mult)
    }

    /// Pointwise dimensions recovered from the bars.
    pub fn dims(&self) -> Vec<usize> {
        let mut d = vec![0; self.len];
        for b in &self.bars {
            for x in &mut d[b.birth..b.death] {
                *x += b.mult;
            }
        }
        d
    }

    /// Rank of `M_i -> M_j` recovered from the bars.
    pub fn rank_between(&self, i: usize, j: usize) -> usize {
        self.bars
            .iter()
            .filter(|b| b.birth <= i && j < b.death)
            .map(|b| b.mult)
            .sum()
    }

    pub fn total_multiplicity(&self) -> usize {
        self.bars.iter().map(|b| b.mult).sum()
    }
}

impl fmt::Display for Barcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bars.is_empty() {
            return write!(f, "(empty)");
        }
        for (k, b) in self.bars.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "[{},{}) ×{}", b.birth, b.death, b.mult)?;
        }
        Ok(())
    }
}

/// Barcode of `t` from its rank invariant:
/// `m[b,d) = r(b,d-1) - r(b-1,d-1) - r(b,d) + r(b-1,d)` with `r(-1, .) = 0`
/// and `r(., N+1) = 0`. A negative multiplicity is reported as an error.
pub fn barcode(t: &Tower) -> Result<Barcode> {
    let len = t.len();
    let table = t.rank_table();
    let r = |i: isize, j: usize| -> i64 {
        if i < 0 || j >= len {
            0
        } else {
            table[i as usize][j - i as usize] as i64
        }
    };
    let mut bars = Vec::new();
    for b in 0..len {
        for d in b + 1..=len {
            let bi = b as isize;
            let m = r(bi, d - 1) - r(bi - 1, d - 1) - r(bi, d) + r(bi - 1, d);
            if m < 0 {
                return Err(Error::consistency(format!(
                    "negative multiplicity {m} for bar [{b},{d})"
                )));
            }
            if m > 0 {
                bars.push(Bar {
                    birth: b,
                    death: d,
                    mult: m as usize,
                });
            }
        }
    }
    let code = Barcode::new(len, bars)?;
    for i in 0..len {
        for j in i..len {
            if code.rank_between(i, j) != table[i][j - i] {
                return Err(Error::consistency(format!(
                    "bars do not reproduce the rank of M_{i} -> M_{j}"
                )));
            }
        }
    }
    Ok(code)
}
