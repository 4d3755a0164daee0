use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::bipartition::Bipartition;
use super::tableau::Move;
use crate::diagram::Shape;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BratteliEdge {
    /// Level of the target node; the source sits on `level - 1`.
    pub level: usize,
    pub from: usize,
    pub to: usize,
    pub content: String,
}

/// The branching graph truncated at level `r+s`. Nodes are bipartitions,
/// edges carry the content of the corresponding step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BratteliGraph {
    pub r: usize,
    pub s: usize,
    pub levels: Vec<Vec<Bipartition>>,
    pub edges: Vec<BratteliEdge>,
}

impl BratteliGraph {
    pub fn build(shape: Shape) -> Self {
        let mut levels = vec![vec![Bipartition::empty()]];
        let mut edges = Vec::new();
        for t in 1..=shape.n() {
            let mut next: BTreeMap<Bipartition, usize> = BTreeMap::new();
            let mut raw = Vec::new();
            for (from, b) in levels[t - 1].iter().enumerate() {
                for mv in Move::legal_moves(shape, t, b) {
                    let target = mv.apply(b).expect("legal move");
                    next.insert(target.clone(), 0);
                    raw.push((from, target, mv.content().to_string()));
                }
            }
            for (k, v) in next.values_mut().enumerate() {
                *v = k;
            }
            for (from, target, content) in raw {
                edges.push(BratteliEdge {
                    level: t,
                    from,
                    to: next[&target],
                    content,
                });
            }
            levels.push(next.into_keys().collect());
        }
        BratteliGraph {
            r: shape.r,
            s: shape.s,
            levels,
            edges,
        }
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn node_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Number of root-to-node paths for every node on the last level.
    pub fn leaf_path_counts(&self) -> Vec<(Bipartition, u64)> {
        let mut counts = vec![1u64];
        for t in 1..self.levels.len() {
            let mut next = vec![0u64; self.levels[t].len()];
            for e in self.edges.iter().filter(|e| e.level == t) {
                next[e.to] += counts[e.from];
            }
            counts = next;
        }
        let last = self.levels.last().expect("level 0 exists");
        last.iter().cloned().zip(counts).collect()
    }

    pub fn path_count(&self) -> u64 {
        self.leaf_path_counts().iter().map(|(_, c)| c).sum()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    /// DOT text. Node `n{t}_{k}` is the `k`-th node of level `t`.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph bratteli_{}_{} {{", self.r, self.s);
        let _ = writeln!(out, "  rankdir=LR;");
        for (t, level) in self.levels.iter().enumerate() {
            for (k, b) in level.iter().enumerate() {
                let _ = writeln!(out, "  n{t}_{k} [label=\"{b}\"];");
            }
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{}_{} -> n{}_{} [label=\"{}\"];",
                e.level - 1,
                e.from,
                e.level,
                e.to,
                e.content
            );
        }
        out.push_str("}\n");
        out
    }

    /// Reads back the DOT text produced by [`BratteliGraph::to_dot`].
    pub fn from_dot(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim);
        let header = lines.next().unwrap_or_default();
        let dims = header
            .strip_prefix("digraph bratteli_")
            .and_then(|h| h.strip_suffix(" {"))
            .ok_or_else(|| Error::parse(0, "missing digraph header"))?;
        let (r, s) = dims
            .split_once('_')
            .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
            .ok_or_else(|| Error::parse(0, "bad graph name"))?;
        let mut levels: Vec<Vec<Bipartition>> = Vec::new();
        let mut edges = Vec::new();
        let node_id = |id: &str| -> Result<(usize, usize)> {
            id.strip_prefix('n')
                .and_then(|x| x.split_once('_'))
                .and_then(|(t, k)| Some((t.parse().ok()?, k.parse().ok()?)))
                .ok_or_else(|| Error::parse(0, format!("bad node id '{id}'")))
        };
        let label = |line: &str| -> Result<String> {
            line.split_once("[label=\"")
                .and_then(|(_, rest)| rest.split_once("\"]"))
                .map(|(l, _)| l.to_string())
                .ok_or_else(|| Error::parse(0, format!("missing label in '{line}'")))
        };
        for line in lines {
            if line == "}" || line.starts_with("rankdir") || line.is_empty() {
                continue;
            }
            let head = line.split(" [").next().unwrap_or_default();
            if let Some((a, b)) = head.split_once(" -> ") {
                let (ta, ka) = node_id(a)?;
                let (tb, kb) = node_id(b)?;
                if tb != ta + 1 {
                    return Err(Error::parse(0, format!("edge skips a level: '{line}'")));
                }
                edges.push(BratteliEdge {
                    level: tb,
                    from: ka,
                    to: kb,
                    content: label(line)?,
                });
            } else {
                let (t, k) = node_id(head)?;
                if levels.len() <= t {
                    levels.resize(t + 1, Vec::new());
                }
                if levels[t].len() != k {
                    return Err(Error::parse(0, format!("nodes out of order at '{line}'")));
                }
                levels[t].push(label(line)?.parse()?);
            }
        }
        Ok(BratteliGraph {
            r,
            s,
            levels,
            edges,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn level_sizes() {
        let g = BratteliGraph::build(Shape::new(2, 2));
        assert_eq!(g.level_sizes(), vec![1, 1, 2, 3, 6]);
        assert_eq!(g.node_count(), 13);
        assert_eq!(g.path_count(), 10);
        let g = BratteliGraph::build(Shape::new(1, 1));
        assert_eq!(g.level_sizes(), vec![1, 1, 2]);
        assert_eq!(g.path_count(), 2);
    }

    #[test]
    fn dot_round_trip() {
        let g = BratteliGraph::build(Shape::new(2, 2));
        let back = BratteliGraph::from_dot(&g.to_dot()).unwrap();
        assert_eq!(back, g);
        let json: BratteliGraph = serde_json::from_str(&g.to_json_string()).unwrap();
        assert_eq!(json, back);
    }
}
