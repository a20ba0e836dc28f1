use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{LieError, Result};
use crate::lie::LieAlgebra;

/// The ambient variety: all Lie brackets, at most `k`-step nilpotent ones,
/// or at most `k`-step solvable ones.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variety {
    Lie,
    Nil(usize),
    Sol(usize),
}

impl fmt::Display for Variety {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variety::Lie => write!(f, "lie"),
            Variety::Nil(k) => write!(f, "nil:{k}"),
            Variety::Sol(k) => write!(f, "sol:{k}"),
        }
    }
}

impl Serialize for Variety {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for Variety {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || LieError::invalid(format!("unknown variety {s:?} (expected lie, nil:K or sol:K)"));
        if s == "lie" {
            return Ok(Variety::Lie);
        }
        let (kind, k) = s.split_once(':').ok_or_else(bad)?;
        let k: usize = k.parse().map_err(|_| bad())?;
        if k == 0 {
            return Err(bad());
        }
        match kind {
            "nil" => Ok(Variety::Nil(k)),
            "sol" => Ok(Variety::Sol(k)),
            _ => Err(bad()),
        }
    }
}

impl Variety {
    /// Whether `l` lies in the variety.
    pub fn contains(&self, l: &LieAlgebra) -> bool {
        self.witness(l).is_none()
    }

    /// A basis tuple on which the defining identity fails, if any.
    pub fn witness(&self, l: &LieAlgebra) -> Option<Vec<usize>> {
        if let Some(t) = l.validate().violation {
            return Some(t.to_vec());
        }
        match *self {
            Variety::Lie => None,
            Variety::Nil(k) => l.nil_witness(k),
            Variety::Sol(k) => l.sol_witness(k),
        }
    }

    pub fn check(&self, l: &LieAlgebra) -> Result<()> {
        match self.witness(l) {
            None => Ok(()),
            Some(witness) => Err(LieError::NotInVariety {
                variety: self.to_string(),
                witness,
            }),
        }
    }
}
