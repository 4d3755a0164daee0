use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell `(row, column)`, both 1-based.
pub type Cell = (usize, usize);

/// A partition, identified with its Young diagram.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::IndexOutOfRange(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(Error::IndexOutOfRange(
                "zero part inside a partition".into(),
            ));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn row_len(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, (i, j): Cell) -> bool {
        i >= 1 && j >= 1 && j <= self.row_len(i)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| (i + 1, j)))
            .collect()
    }

    /// Cells whose addition gives a Young diagram, top row first.
    pub fn addable(&self) -> Vec<Cell> {
        let rows = self.parts.len();
        (1..=rows + 1)
            .filter(|&i| i == 1 || self.row_len(i) < self.row_len(i - 1))
            .map(|i| (i, self.row_len(i) + 1))
            .collect()
    }

    /// Cells whose removal gives a Young diagram, top row first.
    pub fn removable(&self) -> Vec<Cell> {
        (1..=self.parts.len())
            .filter(|&i| self.row_len(i) > self.row_len(i + 1))
            .map(|i| (i, self.row_len(i)))
            .collect()
    }

    pub fn with_cell(&self, cell: Cell) -> Option<Partition> {
        if !self.addable().contains(&cell) {
            return None;
        }
        let mut parts = self.parts.clone();
        if cell.0 > parts.len() {
            parts.push(1);
        } else {
            parts[cell.0 - 1] += 1;
        }
        Some(Partition { parts })
    }

    pub fn without_cell(&self, cell: Cell) -> Option<Partition> {
        if !self.removable().contains(&cell) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[cell.0 - 1] -= 1;
        if parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition { parts })
    }

    pub fn is_subset_of(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order (`[n]` first).
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Accepts `[2,1]`, `[]` or `(2,1)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .or_else(|| t.strip_prefix('(').and_then(|x| x.strip_suffix(')')))
            .ok_or_else(|| Error::parse(0, format!("expected [parts], got '{s}'")))?;
        let mut parts = Vec::new();
        for piece in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let v: usize = piece
                .parse()
                .map_err(|_| Error::parse(0, format!("bad part '{piece}'")))?;
            parts.push(v);
        }
        Partition::new(parts).map_err(|e| Error::parse(0, e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn corners() {
        assert_eq!(Partition::empty().addable(), vec![(1, 1)]);
        assert_eq!(p(&[2, 1]).removable(), vec![(1, 2), (2, 1)]);
        assert_eq!(p(&[2, 1]).addable(), vec![(1, 3), (2, 2), (3, 1)]);
        assert_eq!(p(&[2, 2]).removable(), vec![(2, 2)]);
    }

    #[test]
    fn counts_and_parsing() {
        let counts: Vec<usize> = (0..8).map(|n| Partition::all_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        assert_eq!("[2,1]".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1]).to_string(), "[3,1]");
    }
}
