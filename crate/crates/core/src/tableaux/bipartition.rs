use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::partition::Partition;
use crate::diagram::Shape;
use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Bipartition { left, right }
    }

    pub fn empty() -> Self {
        Self::default()
    }
}

/// All `Λ` with `|λ_L| = r − f`, `|λ_R| = s − f`, paired with `f`, for
/// `f = 0, …, min(r,s)`.
pub fn enumerate_bipartitions(shape: Shape) -> Vec<(usize, Bipartition)> {
    let mut out = Vec::new();
    for f in 0..=shape.r.min(shape.s) {
        for left in Partition::all_of(shape.r - f) {
            for right in Partition::all_of(shape.s - f) {
                out.push((f, Bipartition::new(left.clone(), right)));
            }
        }
    }
    out
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.left, self.right)
    }
}

impl fmt::Debug for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Bipartition {
    type Err = Error;
    /// Parses `[2,1]|[1]`.
    fn from_str(s: &str) -> Result<Self> {
        let (l, r) = s
            .split_once('|')
            .ok_or_else(|| Error::parse(0, format!("expected left|right, got '{s}'")))?;
        let left = l.parse().map_err(|e| match e {
            Error::Parse { msg, .. } => Error::parse(0, msg),
            other => other,
        })?;
        let right = r.parse().map_err(|e| match e {
            Error::Parse { msg, .. } => Error::parse(l.len() + 1, msg),
            other => other,
        })?;
        Ok(Bipartition::new(left, right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_bipartitions(Shape::new(1, 1)).len(), 2);
        assert_eq!(enumerate_bipartitions(Shape::new(2, 2)).len(), 6);
        let b12 = enumerate_bipartitions(Shape::new(1, 2));
        assert_eq!(b12.len(), 3);
        assert_eq!(b12[2], (1, "[]|[1]".parse().unwrap()));
    }

    #[test]
    fn text_form() {
        let b: Bipartition = "[2,1]|[1]".parse().unwrap();
        assert_eq!(b.to_string(), "[2,1]|[1]");
        assert_eq!(Bipartition::empty().to_string(), "[]|[]");
        assert!("[2,1]".parse::<Bipartition>().is_err());
    }
}
