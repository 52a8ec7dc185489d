//! Exact linear algebra over Q(n).
//!
//! Systems are solved by fraction-free row reduction: every row is first
//! cleared of denominators, elimination steps are cross-multiplications, and
//! after each step the row is divided by the gcd of its entries so that
//! degrees stay small. Only the final back-substitution leaves Q[n].

use super::ratfunc::RationalFunction;
use super::upoly::UPoly;
use super::RingError;

#[derive(Clone, Debug, PartialEq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<RationalFunction>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![RationalFunction::zero(); rows * cols] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, RationalFunction::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RationalFunction>>) -> Result<Self, RingError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(RingError::Shape(format!("ragged rows, expected {c} columns")));
        }
        Ok(ExactMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RationalFunction {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RationalFunction) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn mul_vec(&self, x: &[RationalFunction]) -> Result<Vec<RationalFunction>, RingError> {
        if x.len() != self.cols {
            return Err(RingError::Shape(format!("vector of length {} for {} columns", x.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| {
                (0..self.cols).fold(RationalFunction::zero(), |acc, c| {
                    let a = self.get(r, c);
                    if a.is_zero() || x[c].is_zero() {
                        acc
                    } else {
                        &acc + &(a * &x[c])
                    }
                })
            })
            .collect())
    }

    /// Exact check that `A x = b`.
    pub fn verify_solution(&self, x: &[RationalFunction], b: &[RationalFunction]) -> bool {
        match self.mul_vec(x) {
            Ok(ax) => ax.len() == b.len() && ax.iter().zip(b).all(|(l, r)| l == r),
            Err(_) => false,
        }
    }
}

/// One exact solution of `A x = b`, or `Ok(None)` if the system is inconsistent.
/// Free variables are set to zero. The result is re-verified against the
/// original system before it is returned.
pub fn solve_exact(
    a: &ExactMatrix,
    b: &[RationalFunction],
) -> Result<Option<Vec<RationalFunction>>, RingError> {
    if b.len() != a.rows {
        return Err(RingError::Shape(format!("right-hand side of length {} for {} rows", b.len(), a.rows)));
    }
    let cols = a.cols;
    let mut rows: Vec<Vec<UPoly>> = (0..a.rows)
        .map(|r| {
            let mut row: Vec<RationalFunction> = (0..cols).map(|c| a.get(r, c).clone()).collect();
            row.push(b[r].clone());
            clear_denominators(&row)
        })
        .collect();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut next_row = 0;
    for col in 0..cols {
        if next_row == rows.len() {
            break;
        }
        let pick = (next_row..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| {
                let deg = rows[r][col].degree().unwrap_or(0);
                let fill = rows[r].iter().filter(|e| !e.is_zero()).count();
                (deg, fill)
            });
        let Some(pr) = pick else { continue };
        rows.swap(next_row, pr);
        let pivot_row = rows[next_row].clone();
        let p = pivot_row[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next_row || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (e, pe) in row.iter_mut().zip(&pivot_row) {
                let scaled = &*e * &p;
                *e = if pe.is_zero() { scaled } else { &scaled - &(&f * pe) };
            }
            make_primitive(row);
        }
        pivots.push((next_row, col));
        next_row += 1;
    }

    if rows[next_row..].iter().any(|row| !row[cols].is_zero()) {
        return Ok(None);
    }

    // Fully reduced: each pivot row has a single nonzero among pivot columns.
    let mut x = vec![RationalFunction::zero(); cols];
    for &(r, c) in &pivots {
        let num = RationalFunction::from_poly(rows[r][cols].clone());
        let den = RationalFunction::from_poly(rows[r][c].clone());
        x[c] = num.checked_div(&den)?;
    }
    if !a.verify_solution(&x, b) {
        return Err(RingError::VerificationFailed);
    }
    Ok(Some(x))
}

fn clear_denominators(row: &[RationalFunction]) -> Vec<UPoly> {
    let mut l = UPoly::one();
    for e in row.iter().filter(|e| !e.is_zero()) {
        let g = UPoly::gcd(&l, e.denom());
        l = (&l * e.denom()).exact_div(&g).unwrap();
    }
    let mut out: Vec<UPoly> = row
        .iter()
        .map(|e| {
            if e.is_zero() {
                UPoly::zero()
            } else {
                &l.exact_div(e.denom()).unwrap() * e.numer()
            }
        })
        .collect();
    make_primitive(&mut out);
    out
}

fn make_primitive(row: &mut [UPoly]) {
    let mut g = UPoly::zero();
    for e in row.iter().filter(|e| !e.is_zero()) {
        g = UPoly::gcd(&g, e);
        if g.is_constant() {
            break;
        }
    }
    if !g.is_zero() && !g.is_constant() {
        for e in row.iter_mut() {
            *e = e.exact_div(&g).unwrap();
        }
    }
    let content = row
        .iter()
        .filter(|e| !e.is_zero())
        .fold(None, |acc: Option<num_rational::BigRational>, e| {
            let c = e.content();
            Some(match acc {
                None => c,
                Some(a) => {
                    use num_integer::Integer;
                    num_rational::BigRational::new(
                        a.numer().gcd(c.numer()),
                        a.denom().lcm(c.denom()),
                    )
                }
            })
        });
    if let Some(c) = content {
        let inv = c.recip();
        for e in row.iter_mut() {
            *e = e.scale(&inv);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n() -> RationalFunction {
        RationalFunction::n()
    }
    fn c(k: i64) -> RationalFunction {
        RationalFunction::int(k)
    }

    #[test]
    fn identity_system() {
        let a = ExactMatrix::identity(2);
        let x = solve_exact(&a, &[c(1), n()]).unwrap().unwrap();
        assert_eq!(x, vec![c(1), n()]);
    }

    #[test]
    fn single_symbolic_equation() {
        let a = ExactMatrix::from_rows(vec![vec![n() - c(4)]]).unwrap();
        let b = vec![n() * n() - c(8) * n() + c(16)];
        let x = solve_exact(&a, &b).unwrap().unwrap();
        assert_eq!(x, vec![n() - c(4)]);
    }

    #[test]
    fn inconsistent_system_has_no_solution() {
        let a = ExactMatrix::from_rows(vec![vec![c(1)], vec![c(1)]]).unwrap();
        assert_eq!(solve_exact(&a, &[c(0), c(1)]).unwrap(), None);
    }

    #[test]
    fn rank_deficient_consistent_system() {
        // x + y = n, 2x + 2y = 2n, y - x/n = 1
        let a = ExactMatrix::from_rows(vec![
            vec![c(1), c(1)],
            vec![c(2), c(2)],
            vec![-(c(1) / n()), c(1)],
        ])
        .unwrap();
        let b = vec![n(), c(2) * n(), c(1)];
        let x = solve_exact(&a, &b).unwrap().unwrap();
        assert!(a.verify_solution(&x, &b));
    }

    #[test]
    fn verify_rejects_wrong_solution() {
        let a = ExactMatrix::identity(2);
        assert!(!a.verify_solution(&[c(1), c(2)], &[c(1), n()]));
    }
}
