use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use super::{rank_perm, unrank_perm, Shape, WalledDiagram};

/// Largest `r + s` whose full multiplication table is precomputed
/// (`720 × 720` entries at the top end).
const TABLE_LIMIT: usize = 6;

/// Ranked diagram basis of one shape, with a cached multiplication table for
/// small shapes. Products are returned as `(rank, loops)`.
pub struct DiagramBasis {
    shape: Shape,
    count: u32,
    // entry a*count+b packs rank(a∘b) << 4 | loops
    table: Option<Box<[u32]>>,
}

fn cache() -> &'static Mutex<HashMap<Shape, Arc<DiagramBasis>>> {
    static CACHE: OnceLock<Mutex<HashMap<Shape, Arc<DiagramBasis>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

impl DiagramBasis {
    /// Shared basis for `shape`; the multiplication table is built once per
    /// process and reused.
    pub fn get(shape: Shape) -> Arc<DiagramBasis> {
        assert!(
            shape.n() <= super::MAX_POINTS,
            "shape {shape} too large to rank"
        );
        if let Some(b) = cache().lock().expect("basis cache").get(&shape) {
            return Arc::clone(b);
        }
        // built outside the lock; a racing builder produces an identical value
        let built = Arc::new(Self::build(shape));
        let mut guard = cache().lock().expect("basis cache");
        Arc::clone(guard.entry(shape).or_insert(built))
    }

    fn build(shape: Shape) -> Self {
        let count = shape.diagram_count() as u32;
        let table = (shape.n() <= TABLE_LIMIT).then(|| {
            let all: Vec<WalledDiagram> = (0..count)
                .map(|k| WalledDiagram::from_rank(shape, k))
                .collect();
            let mut t = Vec::with_capacity((count as usize).pow(2));
            for a in &all {
                for b in &all {
                    let res = a.compose_unchecked(b);
                    t.push(res.diagram.rank() << 4 | res.loops as u32);
                }
            }
            t.into_boxed_slice()
        });
        DiagramBasis {
            shape,
            count,
            table,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn len(&self) -> u32 {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity_rank(&self) -> u32 {
        0
    }

    pub fn diagram(&self, rank: u32) -> WalledDiagram {
        WalledDiagram::from_img_unchecked(self.shape, unrank_perm(self.shape.n(), rank))
    }

    pub fn rank_of(&self, img: &[u8]) -> u32 {
        rank_perm(img)
    }

    /// `(rank(a∘b), loops)`
    #[inline]
    pub fn product(&self, a: u32, b: u32) -> (u32, u32) {
        match &self.table {
            Some(t) => {
                let e = t[(a * self.count + b) as usize];
                (e >> 4, e & 0xf)
            }
            None => {
                let res = self.diagram(a).compose_unchecked(&self.diagram(b));
                (res.diagram.rank(), res.loops as u32)
            }
        }
    }

    /// Rank of the vertical flip of the diagram with rank `a`.
    pub fn flip(&self, a: u32) -> u32 {
        self.diagram(a).vertical_flip().rank()
    }

    pub fn has_table(&self) -> bool {
        self.table.is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_matches_direct_composition() {
        let shape = Shape::new(2, 2);
        let basis = DiagramBasis::get(shape);
        assert!(basis.has_table());
        for a in 0..basis.len() {
            for b in 0..basis.len() {
                let direct = basis.diagram(a).compose(&basis.diagram(b)).unwrap();
                assert_eq!(
                    basis.product(a, b),
                    (direct.diagram.rank(), direct.loops as u32)
                );
            }
        }
    }

    #[test]
    fn cache_is_shared() {
        let a = DiagramBasis::get(Shape::new(1, 2));
        let b = DiagramBasis::get(Shape::new(1, 2));
        assert!(Arc::ptr_eq(&a, &b));
    }
}
