//! Exact affine rank and small linear solves over the rationals.

use crate::rational::Rational;

/// Row-reduces `rows` in place and returns the rank. No pivoting tolerance:
/// a pivot is any exactly non-zero entry.
pub(crate) fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] / &pivot_row[col];
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x - &factor * p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Dimension of the affine hull of `points` (0 for a single point).
pub(crate) fn affine_rank(points: &[&[Rational]]) -> usize {
    let Some((base, rest)) = points.split_first() else {
        return 0;
    };
    let diffs = rest
        .iter()
        .map(|p| p.iter().zip(base.iter()).map(|(x, b)| x - b).collect())
        .collect();
    rank(diffs)
}

/// Solves `m · x = rhs` exactly for a system with at least as many rows as
/// columns. Returns `None` when the columns are dependent or the system has no
/// exact solution.
pub(crate) fn solve(m: &[Vec<Rational>], rhs: &[Rational]) -> Option<Vec<Rational>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rational>> =
        m.iter().zip(rhs).map(|(row, b)| row.iter().cloned().chain([b.clone()]).collect()).collect();
    for col in 0..cols {
        let pivot = (col..rows).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].recip();
        for x in aug[col].iter_mut().skip(col) {
            *x = &*x * &inv;
        }
        let pivot_row = aug[col].clone();
        for (r, row) in aug.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x - &factor * p;
            }
        }
    }
    if aug[cols..].iter().any(|row| !row[cols].is_zero()) {
        return None;
    }
    Some(aug[..cols].iter().map(|row| row[cols].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    #[test]
    fn ranks() {
        let a = q(&[1, 0, 0]);
        let b = q(&[0, 1, 0]);
        let c = q(&[0, 0, 1]);
        let mid = q(&[2, -1, 0]);
        assert_eq!(affine_rank(&[&a]), 0);
        assert_eq!(affine_rank(&[&a, &a]), 0);
        assert_eq!(affine_rank(&[&a, &b, &mid]), 1);
        assert_eq!(affine_rank(&[&a, &b, &c]), 2);
        assert_eq!(rank(vec![q(&[1, 2]), q(&[2, 4])]), 1);
    }

    #[test]
    fn solves() {
        let m = vec![q(&[2, 1]), q(&[1, 3])];
        assert_eq!(solve(&m, &q(&[3, 5])).unwrap(), vec![Rational::new(4, 5), Rational::new(7, 5)]);
        assert!(solve(&[q(&[1, 2]), q(&[2, 4])], &q(&[1, 1])).is_none());
        let tall = vec![q(&[1, 0]), q(&[0, 1]), q(&[1, 1])];
        assert_eq!(solve(&tall, &q(&[1, 2, 3])).unwrap(), q(&[1, 2]));
        assert!(solve(&tall, &q(&[1, 2, 4])).is_none());
    }
}
