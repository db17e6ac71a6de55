//! Exact integer linear algebra: fraction-free row reduction, null spaces
//! and Hermite normal forms over `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type IntRow = Vec<BigInt>;

pub fn to_row(values: &[i64]) -> IntRow {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

/// Divides a row by the gcd of its entries. Zero rows are left alone.
pub fn make_primitive(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// `target := pivot_val * target - target[col] * row`, the fraction-free step
/// that clears `target[col]` against a row with pivot `row[col]`.
fn eliminate(target: &mut [BigInt], row: &[BigInt], col: usize) {
    if target[col].is_zero() {
        return;
    }
    let factor = target[col].clone();
    let pivot = &row[col];
    for (t, r) in target.iter_mut().zip(row) {
        *t = &*t * pivot - &factor * r;
    }
    make_primitive(target);
}

/// Incrementally built echelon basis of a subspace of `Q^width`.
///
/// Row `k` has zeros in the pivot columns of every earlier row, so reducing a
/// vector against the rows in insertion order clears every pivot column.
#[derive(Clone, Debug)]
pub struct RowSpace {
    width: usize,
    rows: Vec<(usize, IntRow)>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        Self { width, rows: Vec::new() }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut IntRow) {
        for (pivot, row) in &self.rows {
            eliminate(v, row, *pivot);
        }
    }

    /// Adds `v` to the spanning set; returns whether the rank grew.
    pub fn insert(&mut self, mut v: IntRow) -> bool {
        assert_eq!(v.len(), self.width, "row width");
        self.reduce(&mut v);
        match v.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                make_primitive(&mut v);
                self.rows.push((pivot, v));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.width, "row width");
        let mut v = v.to_vec();
        self.reduce(&mut v);
        v.iter().all(Zero::is_zero)
    }
}

/// Fraction-free reduced row echelon form. Returns the nonzero rows and the
/// pivot column of each.
pub fn reduced_echelon(rows: &[IntRow], width: usize) -> (Vec<IntRow>, Vec<usize>) {
    let mut m: Vec<IntRow> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        if m[r][col].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        make_primitive(&mut m[r]);
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r {
                eliminate(row, &pivot_row, col);
            }
        }
        pivots.push(col);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

/// Integer basis of the right null space `{x : rows · x = 0}`, one primitive
/// vector per free column.
pub fn nullspace(rows: &[IntRow], width: usize) -> Vec<IntRow> {
    let (echelon, pivots) = reduced_echelon(rows, width);
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    let lcm = echelon
        .iter()
        .zip(&pivots)
        .fold(BigInt::one(), |acc, (row, &p)| acc.lcm(&row[p]));
    free.iter()
        .map(|&f| {
            let mut x = vec![BigInt::zero(); width];
            x[f] = lcm.clone();
            for (row, &p) in echelon.iter().zip(&pivots) {
                x[p] = -(&lcm * &row[f]) / &row[p];
            }
            make_primitive(&mut x);
            x
        })
        .collect()
}

pub fn rank(rows: &[IntRow], width: usize) -> usize {
    reduced_echelon(rows, width).1.len()
}

/// Row-style Hermite normal form of the lattice spanned by `rows`: echelon
/// rows with positive pivots and entries above each pivot reduced into
/// `[0, pivot)`. Zero rows are dropped.
pub fn hermite_normal_form(rows: &[IntRow], width: usize) -> Vec<IntRow> {
    let mut m: Vec<IntRow> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut r = 0;
    for col in 0..width {
        if r == m.len() {
            break;
        }
        // Euclid on column `col` among rows r.. until one nonzero entry remains
        loop {
            let nonzero: Vec<usize> = (r..m.len()).filter(|&i| !m[i][col].is_zero()).collect();
            if nonzero.is_empty() {
                break;
            }
            let best = *nonzero.iter().min_by_key(|&&i| m[i][col].abs()).unwrap();
            m.swap(r, best);
            if nonzero.len() == 1 && nonzero[0] == best {
                break;
            }
            let pivot_row = m[r].clone();
            let mut done = true;
            for row in m.iter_mut().skip(r + 1) {
                if row[col].is_zero() {
                    continue;
                }
                let q = row[col].div_floor(&pivot_row[col]);
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
                if !row[col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if m[r][col].is_zero() {
            continue;
        }
        if m[r][col].is_negative() {
            for x in m[r].iter_mut() {
                *x = -&*x;
            }
        }
        let pivot_row = m[r].clone();
        for row in m.iter_mut().take(r) {
            let q = row[col].div_floor(&pivot_row[col]);
            if !q.is_zero() {
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= &q * p;
                }
            }
        }
        r += 1;
    }
    m.truncate(r);
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(v: &[&[i64]]) -> Vec<IntRow> {
        v.iter().map(|r| to_row(r)).collect()
    }

    fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }

    #[test]
    fn hnf_of_five_four_generators() {
        let h = hermite_normal_form(&rows(&[&[5, 0], &[1, 4], &[0, 5]]), 2);
        assert_eq!(h, rows(&[&[1, 4], &[0, 5]]));
        assert_eq!(hermite_normal_form(&rows(&[&[2]]), 1), rows(&[&[2]]));
        assert_eq!(hermite_normal_form(&rows(&[&[1, 0], &[0, 1]]), 2), rows(&[&[1, 0], &[0, 1]]));
    }

    #[test]
    fn hnf_rank_deficient_and_reduced_above_pivot() {
        let h = hermite_normal_form(&rows(&[&[2, 2], &[3, 3]]), 2);
        assert_eq!(h, rows(&[&[1, 1]]));
        let h = hermite_normal_form(&rows(&[&[4, 7, 0], &[0, 3, 0], &[0, 0, 2]]), 3);
        assert_eq!(h, rows(&[&[4, 1, 0], &[0, 3, 0], &[0, 0, 2]]));
    }

    #[test]
    fn nullspace_is_orthogonal_and_sized() {
        let m = rows(&[&[1, 2, 3], &[2, 4, 7]]);
        let ns = nullspace(&m, 3);
        assert_eq!(ns.len(), 1);
        for r in &m {
            assert!(dot(r, &ns[0]).is_zero());
        }
        assert_eq!(nullspace(&[], 2).len(), 2);
    }

    #[test]
    fn row_space_membership() {
        let mut s = RowSpace::new(4);
        assert!(s.insert(to_row(&[1, -1, 0, 0])));
        assert!(s.insert(to_row(&[0, 1, -1, 0])));
        assert!(!s.insert(to_row(&[1, 0, -1, 0])));
        assert!(s.contains(&to_row(&[2, 0, -2, 0])));
        assert!(!s.contains(&to_row(&[1, 0, 0, -1])));
        assert_eq!(s.rank(), 2);
    }
}
