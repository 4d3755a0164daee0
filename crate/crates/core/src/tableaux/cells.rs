//! Diagonal statistics of cell sets. Diagonals are indexed by `i − j`
//! (contents use the opposite sign `j − i`).

use std::collections::BTreeSet;

use super::partition::{Cell, Partition};

pub fn diagonal_index((i, j): Cell) -> i64 {
    i as i64 - j as i64
}

/// `g(k)`: number of cells with `i − j = k`.
pub fn diag_len_cells(cells: &[Cell], k: i64) -> usize {
    cells.iter().filter(|&&c| diagonal_index(c) == k).count()
}

pub fn diag_len(gamma: &Partition, k: i64) -> usize {
    diag_len_cells(&gamma.cells(), k)
}

/// `Δ(k) = 2g(k) − g(k+1) − g(k−1)`.
pub fn laplacian_cells(cells: &[Cell], k: i64) -> i64 {
    let g = |k| diag_len_cells(cells, k) as i64;
    2 * g(k) - g(k + 1) - g(k - 1)
}

pub fn laplacian(gamma: &Partition, k: i64) -> i64 {
    laplacian_cells(&gamma.cells(), k)
}

/// Cells of `outer` not in `inner`.
pub fn skew_cells(outer: &Partition, inner: &Partition) -> Vec<Cell> {
    outer
        .cells()
        .into_iter()
        .filter(|&c| !inner.contains(c))
        .collect()
}

/// Whether the cells form a Young diagram in English notation.
pub fn is_young(cells: &[Cell]) -> bool {
    let set: BTreeSet<Cell> = cells.iter().copied().collect();
    set.iter().all(|&(i, j)| {
        i >= 1
            && j >= 1
            && (i == 1 || set.contains(&(i - 1, j)))
            && (j == 1 || set.contains(&(i, j - 1)))
    })
}

// the m-th cell (1-based) along diagonal k, counted from the top-left
fn diagonal_cell(k: i64, m: usize) -> Cell {
    if k >= 0 {
        (k as usize + m, m)
    } else {
        (m, m + k.unsigned_abs() as usize)
    }
}

/// `ϑ_γ(k) ∈ {−1, 0, 1}`: −1 if the next cell on diagonal `k` can be
/// added, +1 if the last one can be removed, 0 otherwise.
pub fn theta(gamma: &Partition, k: i64) -> i8 {
    let g = diag_len(gamma, k);
    let can_add = gamma.with_cell(diagonal_cell(k, g + 1)).is_some();
    let can_remove = g > 0 && gamma.without_cell(diagonal_cell(k, g)).is_some();
    assert!(
        !(can_add && can_remove),
        "theta cases overlap for {gamma} on diagonal {k}"
    );
    if can_add {
        -1
    } else if can_remove {
        1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn diagonal_lengths() {
        assert_eq!(diag_len(&p(&[2, 1]), 0), 1);
        assert_eq!(diag_len(&p(&[2, 1]), 1), 1);
        assert_eq!(diag_len(&p(&[2, 1]), -1), 1);
        assert_eq!(diag_len(&p(&[2, 2]), 0), 2);
        assert_eq!(diag_len(&Partition::empty(), 3), 0);
    }

    #[test]
    fn theta_values() {
        assert_eq!(theta(&Partition::empty(), 0), -1);
        assert_eq!(theta(&p(&[1]), 0), 1);
        assert_eq!(theta(&p(&[2, 1]), 0), -1);
        assert_eq!(theta(&p(&[1, 1]), 1), 1);
        assert_eq!(theta(&p(&[1, 1]), -1), -1);
        assert_eq!(theta(&p(&[3]), 1), -1);
        assert_eq!(theta(&p(&[3]), -1), 0);
    }

    #[test]
    fn laplacians() {
        assert_eq!(laplacian(&p(&[1]), 0), 2);
        assert_eq!(laplacian(&p(&[1]), 1), -1);
        assert_eq!(laplacian(&p(&[1]), -1), -1);
        assert!((-5..5).all(|k| laplacian(&Partition::empty(), k) == 0));
        // skew regions λ′ \ ν with the removed cell on diagonal 0
        assert_eq!(laplacian_cells(&skew_cells(&p(&[2, 1]), &p(&[1])), 0), -2);
        assert_eq!(laplacian_cells(&skew_cells(&p(&[2, 2]), &p(&[1])), 0), 0);
        assert_eq!(laplacian_cells(&skew_cells(&p(&[1, 1]), &p(&[1])), 0), -1);
        assert_eq!(laplacian_cells(&skew_cells(&p(&[2]), &p(&[1])), 0), -1);
    }

    #[test]
    fn young_check() {
        assert!(is_young(&p(&[3, 1]).cells()));
        assert!(!is_young(&[(1, 1), (2, 2)]));
        assert!(is_young(&[]));
    }
}
