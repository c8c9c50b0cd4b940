//! Latin squares, partial Latin squares, greedy completion and a seeded
//! random generator.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// A cell `(row, col; entry)` of a Latin square, everything 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
    pub entry: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize, entry: usize) -> Self {
        Cell { row, col, entry }
    }
}

impl std::fmt::Display for Cell {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{};{})", self.row, self.col, self.entry)
    }
}

/// An order-`n` Latin square: every row and column is a permutation of
/// `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    n: usize,
    grid: Vec<Vec<usize>>,
    /// `row_pos[i][e]` = 1-based column of entry `e + 1` in row `i + 1`.
    row_pos: Vec<Vec<usize>>,
    /// `col_pos[j][e]` = 1-based row of entry `e + 1` in column `j + 1`.
    col_pos: Vec<Vec<usize>>,
}

impl LatinSquare {
    pub fn new(grid: Vec<Vec<usize>>) -> Result<Self> {
        let n = grid.len();
        if n == 0 {
            return Err(Error::invalid("a Latin square has order at least 1"));
        }
        let mut row_pos = vec![vec![0usize; n]; n];
        let mut col_pos = vec![vec![0usize; n]; n];
        for (i, row) in grid.iter().enumerate() {
            if row.len() != n {
                return Err(Error::invalid(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            for (j, &e) in row.iter().enumerate() {
                if e == 0 || e > n {
                    return Err(Error::invalid(format!(
                        "cell ({},{}) holds {e}, outside 1..={n}",
                        i + 1,
                        j + 1
                    )));
                }
                if row_pos[i][e - 1] != 0 {
                    return Err(Error::invalid(format!("entry {e} repeats in row {}", i + 1)));
                }
                if col_pos[j][e - 1] != 0 {
                    return Err(Error::invalid(format!("entry {e} repeats in column {}", j + 1)));
                }
                row_pos[i][e - 1] = j + 1;
                col_pos[j][e - 1] = i + 1;
            }
        }
        Ok(LatinSquare { n, grid, row_pos, col_pos })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(row, col)`.
    pub fn entry(&self, row: usize, col: usize) -> usize {
        self.grid[row - 1][col - 1]
    }

    pub fn cell(&self, row: usize, col: usize) -> Cell {
        Cell::new(row, col, self.entry(row, col))
    }

    /// Column of `entry` within `row`.
    pub fn column_of(&self, row: usize, entry: usize) -> usize {
        self.row_pos[row - 1][entry - 1]
    }

    /// Row of `entry` within `col`.
    pub fn row_of(&self, col: usize, entry: usize) -> usize {
        self.col_pos[col - 1][entry - 1]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.grid
    }
}

/// A conflict-free partial filling of an order-`n` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialLatinSquare {
    n: usize,
    cells: BTreeMap<(usize, usize), usize>,
}

impl PartialLatinSquare {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("a partial Latin square has order at least 1"));
        }
        Ok(PartialLatinSquare { n, cells: BTreeMap::new() })
    }

    pub fn from_cells(n: usize, cells: impl IntoIterator<Item = Cell>) -> Result<Self> {
        let mut p = PartialLatinSquare::new(n)?;
        for c in cells {
            p.insert(c.row, c.col, c.entry)?;
        }
        Ok(p)
    }

    pub fn insert(&mut self, row: usize, col: usize, entry: usize) -> Result<()> {
        let n = self.n;
        if row == 0 || row > n || col == 0 || col > n || entry == 0 || entry > n {
            return Err(Error::invalid(format!(
                "cell ({row},{col};{entry}) is outside the order-{n} grid"
            )));
        }
        if let Some(&old) = self.cells.get(&(row, col)) {
            if old != entry {
                return Err(Error::invalid(format!(
                    "cell ({row},{col}) holds both {old} and {entry}"
                )));
            }
            return Ok(());
        }
        for (&(r, c), &e) in &self.cells {
            if e == entry && (r == row || c == col) {
                return Err(Error::invalid(format!(
                    "entry {entry} at ({row},{col}) conflicts with ({r},{c})"
                )));
            }
        }
        self.cells.insert((row, col), entry);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<usize> {
        self.cells.get(&(row, col)).copied()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().map(|(&(r, c), &e)| Cell::new(r, c, e))
    }

    /// True when every cell matches the square's entry at that position.
    pub fn agrees_with(&self, square: &LatinSquare) -> bool {
        self.n == square.n() && self.cells().all(|c| square.entry(c.row, c.col) == c.entry)
    }
}

/// Outcome of a greedy completion run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Completion {
    Complete(LatinSquare),
    /// No value `<= n` fits at this cell; a normal outcome, not an error.
    Stuck { row: usize, col: usize },
}

impl Completion {
    pub fn is_complete(&self) -> bool {
        matches!(self, Completion::Complete(_))
    }

    pub fn square(&self) -> Option<&LatinSquare> {
        match self {
            Completion::Complete(sq) => Some(sq),
            Completion::Stuck { .. } => None,
        }
    }
}

/// Scans the grid in row-major order, skipping pre-filled cells and placing
/// the smallest value absent from the cell's row and column. Every filled
/// cell counts, including pre-filled cells that come later in the scan.
pub fn greedy_complete(p: &PartialLatinSquare) -> Completion {
    let n = p.n();
    let mut grid = vec![vec![0usize; n]; n];
    let mut row_used = vec![vec![false; n + 1]; n];
    let mut col_used = vec![vec![false; n + 1]; n];
    for cell in p.cells() {
        grid[cell.row - 1][cell.col - 1] = cell.entry;
        row_used[cell.row - 1][cell.entry] = true;
        col_used[cell.col - 1][cell.entry] = true;
    }
    for i in 0..n {
        for j in 0..n {
            if grid[i][j] != 0 {
                continue;
            }
            match (1..=n).find(|&v| !row_used[i][v] && !col_used[j][v]) {
                Some(v) => {
                    grid[i][j] = v;
                    row_used[i][v] = true;
                    col_used[j][v] = true;
                }
                None => return Completion::Stuck { row: i + 1, col: j + 1 },
            }
        }
    }
    Completion::Complete(LatinSquare::new(grid).expect("greedy fill respects both constraints"))
}

/// Greedy completion of the empty order-`n` grid. Succeeding is equivalent
/// to the existence of a descent-free square of that order.
pub fn greedy_square(n: usize) -> Result<Completion> {
    Ok(greedy_complete(&PartialLatinSquare::new(n)?))
}

/// A random order-`n` Latin square via cell-wise backtracking with seeded
/// candidate shuffles. Deterministic for a given `(n, seed)`; the sampled
/// distribution is not uniform.
pub fn random_latin(n: usize, seed: u64) -> Result<LatinSquare> {
    if n == 0 {
        return Err(Error::invalid("a Latin square has order at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grid = vec![vec![0usize; n]; n];
    let mut row_used = vec![vec![false; n + 1]; n];
    let mut col_used = vec![vec![false; n + 1]; n];

    fn fill(
        idx: usize,
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        row_used: &mut Vec<Vec<bool>>,
        col_used: &mut Vec<Vec<bool>>,
        rng: &mut ChaCha8Rng,
    ) -> bool {
        if idx == n * n {
            return true;
        }
        let (i, j) = (idx / n, idx % n);
        let mut candidates: Vec<usize> =
            (1..=n).filter(|&v| !row_used[i][v] && !col_used[j][v]).collect();
        // Fisher-Yates with the shared stream keeps the run reproducible.
        for k in (1..candidates.len()).rev() {
            let r = rng.random_range(0..=k);
            candidates.swap(k, r);
        }
        for v in candidates {
            grid[i][j] = v;
            row_used[i][v] = true;
            col_used[j][v] = true;
            if fill(idx + 1, n, grid, row_used, col_used, rng) {
                return true;
            }
            grid[i][j] = 0;
            row_used[i][v] = false;
            col_used[j][v] = false;
        }
        false
    }

    let ok = fill(0, n, &mut grid, &mut row_used, &mut col_used, &mut rng);
    debug_assert!(ok, "backtracking always completes a Latin square");
    LatinSquare::new(grid)
}

/// Enumerates every order-`n` Latin square in row-major lexicographic order,
/// invoking `visit` on each.
pub fn for_each_latin_square(n: usize, mut visit: impl FnMut(&LatinSquare)) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("a Latin square has order at least 1"));
    }
    let mut grid = vec![vec![0usize; n]; n];
    let mut row_used = vec![vec![false; n + 1]; n];
    let mut col_used = vec![vec![false; n + 1]; n];

    fn rec(
        idx: usize,
        n: usize,
        grid: &mut Vec<Vec<usize>>,
        row_used: &mut Vec<Vec<bool>>,
        col_used: &mut Vec<Vec<bool>>,
        visit: &mut dyn FnMut(&LatinSquare),
    ) {
        if idx == n * n {
            let square = LatinSquare::new(grid.clone()).expect("backtracking fill is valid");
            visit(&square);
            return;
        }
        let (i, j) = (idx / n, idx % n);
        for v in 1..=n {
            if row_used[i][v] || col_used[j][v] {
                continue;
            }
            grid[i][j] = v;
            row_used[i][v] = true;
            col_used[j][v] = true;
            rec(idx + 1, n, grid, row_used, col_used, visit);
            grid[i][j] = 0;
            row_used[i][v] = false;
            col_used[j][v] = false;
        }
    }

    rec(0, n, &mut grid, &mut row_used, &mut col_used, &mut visit);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic3() -> LatinSquare {
        LatinSquare::new(vec![vec![1, 2, 3], vec![2, 3, 1], vec![3, 1, 2]]).unwrap()
    }

    #[test]
    fn validation() {
        assert!(LatinSquare::new(vec![vec![1, 2], vec![1, 2]]).is_err());
        assert!(LatinSquare::new(vec![vec![1, 1], vec![2, 2]]).is_err());
        assert!(LatinSquare::new(vec![vec![3, 2], vec![2, 3]]).is_err());
        let l = cyclic3();
        assert_eq!(l.column_of(2, 1), 3);
        assert_eq!(l.row_of(2, 1), 3);
    }

    #[test]
    fn partial_rejects_conflicts() {
        let mut p = PartialLatinSquare::new(3).unwrap();
        p.insert(1, 1, 1).unwrap();
        assert!(p.insert(1, 3, 1).is_err());
        assert!(p.insert(3, 1, 1).is_err());
        assert!(p.insert(1, 1, 2).is_err());
        p.insert(2, 2, 1).unwrap();
    }

    #[test]
    fn completion_examples() {
        let p = PartialLatinSquare::from_cells(3, [Cell::new(2, 2, 3)]).unwrap();
        assert_eq!(greedy_complete(&p), Completion::Complete(cyclic3()));

        let empty2 = PartialLatinSquare::new(2).unwrap();
        let l2 = LatinSquare::new(vec![vec![1, 2], vec![2, 1]]).unwrap();
        assert_eq!(greedy_complete(&empty2), Completion::Complete(l2));

        let empty3 = PartialLatinSquare::new(3).unwrap();
        assert_eq!(greedy_complete(&empty3), Completion::Stuck { row: 2, col: 3 });
    }

    #[test]
    fn greedy_square_order_four_is_the_xor_table() {
        let expected = LatinSquare::new(vec![
            vec![1, 2, 3, 4],
            vec![2, 1, 4, 3],
            vec![3, 4, 1, 2],
            vec![4, 3, 2, 1],
        ])
        .unwrap();
        assert_eq!(greedy_square(4).unwrap(), Completion::Complete(expected));
    }

    #[test]
    fn random_latin_is_valid_and_deterministic() {
        assert_eq!(random_latin(1, 99).unwrap().rows(), &[vec![1]]);
        assert_eq!(random_latin(4, 7).unwrap(), random_latin(4, 7).unwrap());
        let l = random_latin(6, 1).unwrap();
        assert_eq!(l.n(), 6);
    }

    #[test]
    fn enumeration_counts() {
        let mut count = 0usize;
        for_each_latin_square(3, |_| count += 1).unwrap();
        assert_eq!(count, 12);
        count = 0;
        for_each_latin_square(4, |_| count += 1).unwrap();
        assert_eq!(count, 576);
    }
}
