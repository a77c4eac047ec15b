//! Kostka numbers by direct enumeration of semistandard tableaux.

use ola_core::{Composition, Error, Partition, Result};

/// Largest tableau size the oracle will enumerate.
pub const MAX_CELLS: u32 = 12;

/// Number of semistandard tableaux of shape `shape` and content `content`.
pub fn kostka_oracle(shape: &Partition, content: &Composition) -> Result<u64> {
    let n = shape.size();
    if n > MAX_CELLS {
        return Err(Error::ResourceBound(format!("|shape| = {n} exceeds the oracle bound {MAX_CELLS}")));
    }
    if content.total() != n {
        return Ok(0);
    }
    let rows: Vec<usize> = shape.parts().iter().map(|&r| r as usize).collect();
    let cells: Vec<(usize, usize)> = rows.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len]).collect();
    let mut left: Vec<u32> = content.0.clone();
    Ok(fill(&cells, 0, &mut grid, &mut left))
}

/// Fills `cells[i..]` in row-major order with letters `1..=left.len()`.
fn fill(cells: &[(usize, usize)], i: usize, grid: &mut [Vec<usize>], left: &mut [u32]) -> u64 {
    let Some(&(r, c)) = cells.get(i) else {
        return 1;
    };
    let min_row = if c > 0 { grid[r][c - 1] } else { 1 };
    let min_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
    let mut count = 0;
    for letter in min_row.max(min_col)..=left.len() {
        if left[letter - 1] == 0 {
            continue;
        }
        left[letter - 1] -= 1;
        grid[r][c] = letter;
        count += fill(cells, i + 1, grid, left);
        left[letter - 1] += 1;
    }
    grid[r][c] = 0;
    count
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(shape: &str, content: &str) -> u64 {
        kostka_oracle(&shape.parse().unwrap(), &content.parse().unwrap()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(k("[2,1]", "1,1,1"), 2);
        assert_eq!(k("[2,1]", "2,1"), 1);
        assert_eq!(k("[1,1]", "2"), 0);
        assert_eq!(k("[3,2]", "3,2"), 1);
        assert_eq!(k("[2,2]", "1,1,1,1"), 2);
        assert_eq!(k("[3,2,1]", "1,1,1,1,1,1"), 16);
        assert_eq!(k("[]", ""), 1);
        assert_eq!(k("[2]", "1"), 0);
    }

    #[test]
    fn resource_bound() {
        let big = Partition::new(vec![13]).unwrap();
        assert!(matches!(kostka_oracle(&big, &Composition(vec![13])), Err(Error::ResourceBound(_))));
    }
}
