//! Small exact linear algebra over the rationals.
//!
//! Root coordinates are integers, so every question the combinatorial layers
//! ask (span membership, simple-root expansions) is answered without a
//! tolerance.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Rational = Ratio<i64>;

/// Solves `sum_k c_k * columns[k] = target` exactly.
///
/// The columns must be linearly independent. Returns `None` when `target`
/// does not lie in their span. The system may be overdetermined.
pub fn solve_in_span(columns: &[&[i32]], target: &[i32]) -> Option<Vec<Rational>> {
    let k = columns.len();
    let rows = target.len();
    if columns.iter().any(|c| c.len() != rows) {
        return None;
    }
    if k == 0 {
        return target.iter().all(|&t| t == 0).then(Vec::new);
    }

    // augmented matrix, one row per ambient coordinate
    let mut m: Vec<Vec<Rational>> = (0..rows)
        .map(|i| {
            let mut row: Vec<Rational> = columns
                .iter()
                .map(|c| Rational::from_integer(i64::from(c[i])))
                .collect();
            row.push(Rational::from_integer(i64::from(target[i])));
            row
        })
        .collect();

    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(k);
    for col in 0..k {
        let Some(p) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            // dependent columns: not supported
            return None;
        };
        m.swap(pivot_row, p);
        let inv = Rational::one() / m[pivot_row][col];
        for v in m[pivot_row].iter_mut() {
            *v *= inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let f = m[r][col];
                for c in col..=k {
                    let delta = f * m[pivot_row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }

    // leftover rows must be consistent
    if m[pivot_row..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| m[r][k]).collect())
}

/// Like [`solve_in_span`] but only succeeds when every coefficient is an integer.
pub fn integer_coefficients(columns: &[&[i32]], target: &[i32]) -> Option<Vec<i64>> {
    let sol = solve_in_span(columns, target)?;
    sol.iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// Rank of an integer matrix given by rows.
pub fn rank(rows: &[Vec<i32>]) -> usize {
    let Some(width) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| Rational::from_integer(i64::from(x)))
                .collect()
        })
        .collect();
    let mut rank = 0;
    for col in 0..width {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in (rank + 1)..m.len() {
            if !m[r][col].is_zero() {
                let f = m[r][col] / m[rank][col];
                for c in col..width {
                    let delta = f * m[rank][c];
                    m[r][c] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}
