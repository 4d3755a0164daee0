use std::collections::BTreeMap;

use super::partition::{Cell, Partition};
use super::tableau::{Move, WalledTableau};
use crate::diagram::Shape;
use crate::error::{Error, Result};

/// The triple diagram `[λ′, ν, λ″]` of a complete path with its fillings:
/// `fill_prime` numbers the cells of `λ′` by addition order (1..=r),
/// `fill_removed` the cells of `λ′ \ ν` and `fill_added` the cells of `λ″`
/// by the step (r+1..=n) at which they were removed or added.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TripleTableau {
    pub shape: Shape,
    pub lambda_prime: Partition,
    pub nu: Partition,
    pub lambda_second: Partition,
    pub fill_prime: BTreeMap<Cell, usize>,
    pub fill_removed: BTreeMap<Cell, usize>,
    pub fill_added: BTreeMap<Cell, usize>,
}

impl TripleTableau {
    pub fn of(t: &WalledTableau) -> Result<Self> {
        if !t.is_complete() {
            return Err(Error::IllegalMove {
                step: t.len() + 1,
                reason: "triple tableaux need a complete path".into(),
            });
        }
        let mut fill_prime = BTreeMap::new();
        let mut fill_removed = BTreeMap::new();
        let mut fill_added = BTreeMap::new();
        for (k, mv) in t.moves().iter().enumerate() {
            let step = k + 1;
            match *mv {
                Move::AddLeft(i, j) => fill_prime.insert((i, j), step),
                Move::RemoveLeft(i, j) => fill_removed.insert((i, j), step),
                Move::AddRight(i, j) => fill_added.insert((i, j), step),
            };
        }
        Ok(TripleTableau {
            shape: t.shape(),
            lambda_prime: t.lambda_prime().expect("complete path").clone(),
            nu: t.nu().clone(),
            lambda_second: t.lambda_second().clone(),
            fill_prime,
            fill_removed,
            fill_added,
        })
    }

    /// Inverse of [`TripleTableau::of`].
    pub fn to_tableau(&self) -> Result<WalledTableau> {
        let n = self.shape.n();
        let mut moves: Vec<Option<Move>> = vec![None; n];
        let place = |moves: &mut Vec<Option<Move>>, step: usize, mv: Move| -> Result<()> {
            match moves.get_mut(step.wrapping_sub(1)) {
                Some(slot @ None) => {
                    *slot = Some(mv);
                    Ok(())
                }
                _ => Err(Error::IllegalMove {
                    step,
                    reason: "filling numbers must be distinct and within 1..=n".into(),
                }),
            }
        };
        for (&(i, j), &k) in &self.fill_prime {
            place(&mut moves, k, Move::AddLeft(i, j))?;
        }
        for (&(i, j), &k) in &self.fill_removed {
            place(&mut moves, k, Move::RemoveLeft(i, j))?;
        }
        for (&(i, j), &k) in &self.fill_added {
            place(&mut moves, k, Move::AddRight(i, j))?;
        }
        let moves: Vec<Move> = moves
            .into_iter()
            .enumerate()
            .map(|(k, m)| {
                m.ok_or_else(|| Error::IllegalMove {
                    step: k + 1,
                    reason: "no cell carries this number".into(),
                })
            })
            .collect::<Result<_>>()?;
        WalledTableau::from_moves(self.shape, &moves)
    }

    /// `[λ′, ν, λ″]` as text, e.g. `[[2,1],[1],[2,1]]`.
    pub fn diagram_string(&self) -> String {
        format!("[{},{},{}]", self.lambda_prime, self.nu, self.lambda_second)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::enumerate_tableaux;
    use std::collections::HashSet;

    #[test]
    fn example_path_three_five() {
        let t = WalledTableau::parse(
            "L+1,1;L+1,2;L+2,1;R+1,1;R+1,2;L-1,2;L-2,1;R+2,1",
            Shape::new(3, 5),
        )
        .unwrap();
        let tt = TripleTableau::of(&t).unwrap();
        assert_eq!(tt.diagram_string(), "[[2,1],[1],[2,1]]");
        let m = |v: &[((usize, usize), usize)]| v.iter().copied().collect::<BTreeMap<_, _>>();
        assert_eq!(tt.fill_prime, m(&[((1, 1), 1), ((1, 2), 2), ((2, 1), 3)]));
        assert_eq!(tt.fill_removed, m(&[((1, 2), 6), ((2, 1), 7)]));
        assert_eq!(tt.fill_added, m(&[((1, 1), 4), ((1, 2), 5), ((2, 1), 8)]));
        assert_eq!(tt.to_tableau().unwrap(), t);
    }

    #[test]
    fn leaf_of_one_one() {
        let t = WalledTableau::parse("L+1,1;L-1,1", Shape::new(1, 1)).unwrap();
        assert_eq!(
            TripleTableau::of(&t).unwrap().diagram_string(),
            "[[1],[],[]]"
        );
    }

    #[test]
    fn bijective_on_two_two() {
        let all = enumerate_tableaux(Shape::new(2, 2), None);
        let triples: HashSet<_> = all.iter().map(|t| TripleTableau::of(t).unwrap()).collect();
        assert_eq!(triples.len(), all.len());
        for t in &all {
            assert_eq!(&TripleTableau::of(t).unwrap().to_tableau().unwrap(), t);
        }
    }
}
