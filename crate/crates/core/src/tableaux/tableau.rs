use std::fmt;

use serde::{Deserialize, Serialize};

use super::bipartition::Bipartition;
use super::cells::theta;
use super::partition::{Cell, Partition};
use crate::arith::DeltaScalar;
use crate::diagram::Shape;
use crate::error::{Error, Result};

/// One step of a walled tableau; cells are 1-based `(row, column)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    AddLeft(usize, usize),
    AddRight(usize, usize),
    RemoveLeft(usize, usize),
}

impl Move {
    pub fn cell(&self) -> Cell {
        match *self {
            Move::AddLeft(i, j) | Move::AddRight(i, j) | Move::RemoveLeft(i, j) => (i, j),
        }
    }

    /// `j−i` for left additions, `−(j−i)` for left removals and `(j−i)+δ`
    /// for right additions.
    pub fn content(&self) -> DeltaScalar {
        let (i, j) = self.cell();
        let d = j as i64 - i as i64;
        match self {
            Move::AddLeft(..) => DeltaScalar::from_int(d),
            Move::RemoveLeft(..) => DeltaScalar::from_int(-d),
            Move::AddRight(..) => DeltaScalar::linear(d, 1),
        }
    }

    /// Applies the move, or explains why it is not legal.
    pub fn apply(&self, b: &Bipartition) -> std::result::Result<Bipartition, String> {
        let cell = self.cell();
        match self {
            Move::AddLeft(..) => b
                .left
                .with_cell(cell)
                .map(|left| Bipartition::new(left, b.right.clone()))
                .ok_or_else(|| format!("{cell:?} is not addable to the left diagram {}", b.left)),
            Move::RemoveLeft(..) => b
                .left
                .without_cell(cell)
                .map(|left| Bipartition::new(left, b.right.clone()))
                .ok_or_else(|| {
                    format!("{cell:?} is not removable from the left diagram {}", b.left)
                }),
            Move::AddRight(..) => b
                .right
                .with_cell(cell)
                .map(|right| Bipartition::new(b.left.clone(), right))
                .ok_or_else(|| format!("{cell:?} is not addable to the right diagram {}", b.right)),
        }
    }

    /// Legal moves at 1-based step `t`, in a fixed order.
    pub fn legal_moves(shape: Shape, t: usize, b: &Bipartition) -> Vec<Move> {
        if t <= shape.r {
            b.left
                .addable()
                .into_iter()
                .map(|(i, j)| Move::AddLeft(i, j))
                .collect()
        } else {
            let removals = b
                .left
                .removable()
                .into_iter()
                .map(|(i, j)| Move::RemoveLeft(i, j));
            let additions = b
                .right
                .addable()
                .into_iter()
                .map(|(i, j)| Move::AddRight(i, j));
            removals.chain(additions).collect()
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (tag, (i, j)) = match self {
            Move::AddLeft(..) => ("L+", self.cell()),
            Move::RemoveLeft(..) => ("L-", self.cell()),
            Move::AddRight(..) => ("R+", self.cell()),
        };
        write!(f, "{tag}{i},{j}")
    }
}

impl fmt::Debug for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A standard walled tableau: a path in the Bratteli diagram starting at
/// `(∅,∅)`. Prefixes (paths shorter than `r+s`) are representable so that
/// the recursive constructions can refer to `U ↗ T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WalledTableau {
    shape: Shape,
    moves: Vec<Move>,
    steps: Vec<Bipartition>,
}

impl WalledTableau {
    /// Validates a (possibly partial) move sequence.
    pub fn from_moves_partial(shape: Shape, moves: &[Move]) -> Result<Self> {
        if moves.len() > shape.n() {
            return Err(Error::IllegalMove {
                step: shape.n() + 1,
                reason: format!("path longer than r+s = {}", shape.n()),
            });
        }
        let mut steps = vec![Bipartition::empty()];
        for (k, mv) in moves.iter().enumerate() {
            let t = k + 1;
            let wrong_side = match mv {
                Move::AddLeft(..) => t > shape.r,
                Move::AddRight(..) | Move::RemoveLeft(..) => t <= shape.r,
            };
            if wrong_side {
                let reason = if t <= shape.r {
                    "steps before the wall must add a box to the left diagram".to_string()
                } else {
                    "steps after the wall must add a right box or remove a left box".to_string()
                };
                return Err(Error::IllegalMove { step: t, reason });
            }
            let next = mv
                .apply(steps.last().expect("nonempty"))
                .map_err(|reason| Error::IllegalMove { step: t, reason })?;
            steps.push(next);
        }
        Ok(WalledTableau {
            shape,
            moves: moves.to_vec(),
            steps,
        })
    }

    /// Validates a complete path of length `r+s`.
    pub fn from_moves(shape: Shape, moves: &[Move]) -> Result<Self> {
        let t = Self::from_moves_partial(shape, moves)?;
        if !t.is_complete() {
            return Err(Error::IllegalMove {
                step: moves.len() + 1,
                reason: format!(
                    "path has {} steps, shape {shape} needs {}",
                    moves.len(),
                    shape.n()
                ),
            });
        }
        Ok(t)
    }

    /// Parses `L+1,1;L+2,1;L-2,1;L-1,1` into a complete tableau.
    pub fn parse(spec: &str, shape: Shape) -> Result<Self> {
        let moves = parse_moves(spec)?;
        Self::from_moves(shape, &moves)
    }

    /// Rebuilds the unique path whose content sequence is `contents`.
    pub fn from_contents(shape: Shape, contents: &[DeltaScalar]) -> Result<Self> {
        let mut moves = Vec::with_capacity(contents.len());
        let mut cur = Bipartition::empty();
        for (k, c) in contents.iter().enumerate() {
            let t = k + 1;
            if t > shape.n() {
                return Err(Error::IllegalMove {
                    step: t,
                    reason: "more contents than steps".into(),
                });
            }
            let mut found = Move::legal_moves(shape, t, &cur)
                .into_iter()
                .filter(|m| &m.content() == c);
            let mv = found.next().ok_or_else(|| Error::IllegalMove {
                step: t,
                reason: format!("no legal step has content {c}"),
            })?;
            debug_assert!(found.next().is_none(), "contents separate moves");
            cur = mv.apply(&cur).expect("legal move");
            moves.push(mv);
        }
        Self::from_moves_partial(shape, &moves)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    pub fn is_complete(&self) -> bool {
        self.moves.len() == self.shape.n()
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    /// `Λ^{(0)}, …, Λ^{(len)}`.
    pub fn steps(&self) -> &[Bipartition] {
        &self.steps
    }

    pub fn final_bipartition(&self) -> &Bipartition {
        self.steps.last().expect("nonempty")
    }

    /// The path truncated to its first `k` steps.
    pub fn prefix(&self, k: usize) -> WalledTableau {
        WalledTableau {
            shape: self.shape,
            moves: self.moves[..k].to_vec(),
            steps: self.steps[..=k].to_vec(),
        }
    }

    pub fn contents(&self) -> Vec<DeltaScalar> {
        self.moves.iter().map(Move::content).collect()
    }

    /// Content of the 1-based step `t`.
    pub fn content(&self, t: usize) -> DeltaScalar {
        self.moves[t - 1].content()
    }

    /// `λ′ = λ_L^{(r)}`, defined once the wall has been reached.
    pub fn lambda_prime(&self) -> Option<&Partition> {
        self.steps.get(self.shape.r).map(|b| &b.left)
    }

    /// `ν`: the left diagram at the end of the path.
    pub fn nu(&self) -> &Partition {
        &self.final_bipartition().left
    }

    /// `λ″`: the right diagram at the end of the path.
    pub fn lambda_second(&self) -> &Partition {
        &self.final_bipartition().right
    }

    /// Exponents `p_t`: `ϑ_{λ′}(i−j)` at a left removal of `(i,j)`, else 0.
    pub fn exponents(&self) -> Vec<i32> {
        self.moves
            .iter()
            .map(|mv| match (*mv, self.lambda_prime()) {
                (Move::RemoveLeft(i, j), Some(lp)) => theta(lp, i as i64 - j as i64) as i32,
                _ => 0,
            })
            .collect()
    }

    /// Move list in the textual `L+i,j;…` form.
    pub fn spec(&self) -> String {
        self.moves
            .iter()
            .map(Move::to_string)
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            r: self.shape.r,
            s: self.shape.s,
            moves: self.moves.iter().map(Move::to_string).collect(),
            contents: self.contents().iter().map(ToString::to_string).collect(),
            exponents: self.exponents(),
            final_shape: self.final_bipartition().to_string(),
        }
    }
}

impl fmt::Debug for WalledTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WalledTableau{}[{}]", self.shape, self.spec())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub r: usize,
    pub s: usize,
    pub moves: Vec<String>,
    pub contents: Vec<String>,
    pub exponents: Vec<i32>,
    #[serde(rename = "final")]
    pub final_shape: String,
}

/// Parses a `;`-separated move list; positions in errors are byte offsets.
pub fn parse_moves(spec: &str) -> Result<Vec<Move>> {
    let mut moves = Vec::new();
    if spec.trim().is_empty() {
        return Ok(moves);
    }
    let mut offset = 0;
    for token in spec.split(';') {
        let start = offset + (token.len() - token.trim_start().len());
        offset += token.len() + 1;
        let tok = token.trim();
        let kind = tok
            .get(..2)
            .ok_or_else(|| Error::parse(start, "expected L+, L- or R+"))?;
        let ctor: fn(usize, usize) -> Move = match kind {
            "L+" => Move::AddLeft,
            "L-" => Move::RemoveLeft,
            "R+" => Move::AddRight,
            _ => return Err(Error::parse(start, format!("unknown move '{kind}'"))),
        };
        let (i, j) = tok[2..]
            .split_once(',')
            .ok_or_else(|| Error::parse(start + 2, "expected row,column"))?;
        let num = |s: &str, at: usize| -> Result<usize> {
            match s.trim().parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v),
                _ => Err(Error::parse(at, format!("bad index '{s}'"))),
            }
        };
        let row = num(i, start + 2)?;
        let col = num(j, start + 3 + i.len())?;
        moves.push(ctor(row, col));
    }
    Ok(moves)
}

/// All complete tableaux of the shape, optionally restricted to a final
/// bipartition. The order is deterministic.
pub fn enumerate_tableaux(shape: Shape, final_shape: Option<&Bipartition>) -> Vec<WalledTableau> {
    fn rec(
        shape: Shape,
        moves: &mut Vec<Move>,
        steps: &mut Vec<Bipartition>,
        final_shape: Option<&Bipartition>,
        out: &mut Vec<WalledTableau>,
    ) {
        let t = moves.len() + 1;
        if t > shape.n() {
            let last = steps.last().expect("nonempty");
            if final_shape.is_none_or(|f| f == last) {
                out.push(WalledTableau {
                    shape,
                    moves: moves.clone(),
                    steps: steps.clone(),
                });
            }
            return;
        }
        let cur = steps.last().expect("nonempty").clone();
        for mv in Move::legal_moves(shape, t, &cur) {
            let next = mv.apply(&cur).expect("legal move");
            moves.push(mv);
            steps.push(next);
            rec(shape, moves, steps, final_shape, out);
            moves.pop();
            steps.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        shape,
        &mut Vec::new(),
        &mut vec![Bipartition::empty()],
        final_shape,
        &mut out,
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(text: &str) -> DeltaScalar {
        text.parse().unwrap()
    }

    #[test]
    fn golden_path_contents() {
        let t = WalledTableau::parse("L+1,1;L+2,1;L-2,1;L-1,1", Shape::new(2, 2)).unwrap();
        assert_eq!(t.contents(), vec![sc("0"), sc("-1"), sc("1"), sc("0")]);
        assert_eq!(t.exponents(), vec![0, 0, 1, 0]);
        assert_eq!(t.spec(), "L+1,1;L+2,1;L-2,1;L-1,1");
    }

    #[test]
    fn small_path_contents() {
        let t = WalledTableau::parse("L+1,1;L+1,2;R+1,1;R+1,2", Shape::new(2, 2)).unwrap();
        assert_eq!(t.contents(), vec![sc("0"), sc("1"), sc("d"), sc("d+1")]);
    }

    #[test]
    fn validation() {
        let s11 = Shape::new(1, 1);
        let t = WalledTableau::parse("L+1,1;L-1,1", s11).unwrap();
        assert_eq!(t.final_bipartition(), &Bipartition::empty());
        let err = WalledTableau::parse("L+1,1;R+1,1", Shape::new(1, 2)).unwrap_err();
        assert!(matches!(err, Error::IllegalMove { step: 3, .. }), "{err:?}");
        let err = WalledTableau::parse("L+1,1;L+1,2", s11).unwrap_err();
        assert!(matches!(err, Error::IllegalMove { step: 2, .. }));
        let err = WalledTableau::parse("L+2,1;L-1,1", s11).unwrap_err();
        assert!(matches!(err, Error::IllegalMove { step: 1, .. }));
        assert_eq!(
            WalledTableau::parse("X+1,1", s11).unwrap_err().kind(),
            "ParseError"
        );
        match WalledTableau::parse("L+1,1;L-1,x", s11).unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 10),
            e => panic!("{e:?}"),
        }
    }

    #[test]
    fn enumeration_two_two() {
        let shape = Shape::new(2, 2);
        assert_eq!(enumerate_tableaux(shape, None).len(), 10);
        let one_one: Bipartition = "[1]|[1]".parse().unwrap();
        assert_eq!(enumerate_tableaux(shape, Some(&one_one)).len(), 4);
        assert_eq!(
            enumerate_tableaux(shape, Some(&Bipartition::empty())).len(),
            2
        );
    }

    #[test]
    fn contents_reconstruct_paths() {
        for t in enumerate_tableaux(Shape::new(2, 3), None) {
            assert_eq!(
                WalledTableau::from_contents(t.shape(), &t.contents()).unwrap(),
                t
            );
        }
    }
}
