//! Dense linear maps over exact rationals and exact linear solving.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{Element, Idx, Tensor2};

/// A linear map between finite free modules, stored as a dense matrix.
/// Entry `(r, c)` is the coefficient of basis vector `r` in the image of
/// basis vector `c`.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl LinearMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, entries: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim, dim);
        for i in 0..dim {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Builds the map sending basis vector `j` to `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Element]) -> Self {
        let mut m = Self::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, c) in col.iter() {
                m.set(i as usize, j, c.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Element {
        (0..self.rows)
            .map(|r| (r as Idx, self.get(r, c).clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn apply(&self, x: &Element) -> Element {
        let mut out = Element::new();
        for (&j, c) in x.iter() {
            let j = j as usize;
            assert!(j < self.cols, "index {j} out of domain");
            for r in 0..self.rows {
                let m = self.get(r, j);
                if !m.is_zero() {
                    out.add_to(r as Idx, m * c);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        assert_eq!(self.cols, other.rows, "composition dimension mismatch");
        let mut out = LinearMap::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let mut v = out.get(r, c).clone();
                        v += a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a += b.clone();
        }
        out
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> LinearMap {
        LinearMap {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| c * v).collect(),
        }
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Applies `f⊗g` to a rank-2 tensor coefficientwise: `contract` respects
/// composition, `contract(t, f₂f₁, g₂g₁) = contract(contract(t, f₁, g₁), f₂, g₂)`.
pub fn contract(t: &Tensor2, f: &LinearMap, g: &LinearMap) -> Result<Tensor2> {
    let mut out = Tensor2::new();
    for (&(i, j), c) in t.iter() {
        if i < 0 || i as usize >= f.cols() || j < 0 || j as usize >= g.cols() {
            return Err(Error::DimensionMismatch(format!(
                "tensor entry ({i},{j}) outside {}x{} domains",
                f.cols(),
                g.cols()
            )));
        }
        let fi = f.column(i as usize);
        let gj = g.column(j as usize);
        for (&p, a) in fi.iter() {
            for (&q, b) in gj.iter() {
                out.add_to((p, q), &(a * b) * c);
            }
        }
    }
    Ok(out)
}

/// Outcome of exact linear solving.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// One solution of `Ax = b` together with the dimension of the nullspace
    /// (zero means the solution is unique).
    Solved { x: Element, nullity: usize },
    /// No solution; `certificate` is a row vector `y` with `yᵀA = 0` and
    /// `yᵀb = 1`, witnessing infeasibility.
    Infeasible { certificate: Vec<Scalar> },
}

impl LinearSolution {
    pub fn is_infeasible(&self) -> bool {
        matches!(self, LinearSolution::Infeasible { .. })
    }
}

/// Solves `Ax = b` exactly over the rationals by Gauss–Jordan elimination.
pub fn linear_solve(a: &LinearMap, b: &Element) -> LinearSolution {
    let rows = a.rows();
    let cols = a.cols();
    // Augmented system [A | b | I]; the identity block tracks row operations
    // so an inconsistent row yields a certificate.
    let width = cols + 1 + rows;
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|r| {
            let mut row = Vec::with_capacity(width);
            for c in 0..cols {
                row.push(a.get(r, c).clone());
            }
            row.push(b.coeff(&(r as Idx)));
            for k in 0..rows {
                row.push(if k == r { Scalar::one() } else { Scalar::zero() });
            }
            row
        })
        .collect();

    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut pivot_row = 0usize;
    for col in 0..cols {
        let Some(sel) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, sel);
        let inv = m[pivot_row][col].recip();
        for v in m[pivot_row].iter_mut() {
            *v = &*v * &inv;
        }
        for r in 0..rows {
            if r != pivot_row && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for c in 0..width {
                    let delta = &factor * &m[pivot_row][c];
                    m[r][c] -= delta;
                }
            }
        }
        pivot_of_col[col] = Some(pivot_row);
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    let rank = pivot_row;

    // Any zero row of A with a nonzero b entry certifies infeasibility.
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            let scale = m[r][cols].recip();
            let certificate = (0..rows).map(|k| &m[r][cols + 1 + k] * &scale).collect();
            return LinearSolution::Infeasible { certificate };
        }
    }

    let mut x = Element::new();
    for (col, pivot) in pivot_of_col.iter().enumerate() {
        if let Some(r) = pivot {
            x.add_to(col as Idx, m[*r][cols].clone());
        }
    }
    LinearSolution::Solved { x, nullity: cols - rank }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contract_identity_and_zero() {
        let t = Tensor2::basis(0, 1);
        let id = LinearMap::identity(2);
        assert_eq!(contract(&t, &id, &id).unwrap(), t);
        let z = LinearMap::zero(2, 2);
        assert!(contract(&t, &z, &id).unwrap().is_zero());
        let swap = LinearMap::from_columns(2, &[Element::basis(1), Element::basis(0)]);
        assert_eq!(contract(&t, &swap, &swap).unwrap(), Tensor2::basis(1, 0));
    }

    #[test]
    fn solve_identity_and_zero() {
        let v = Element::from_iter([(0, Scalar::from_int(3)), (1, Scalar::ratio(1, 2))]);
        match linear_solve(&LinearMap::identity(2), &v) {
            LinearSolution::Solved { x, nullity } => {
                assert_eq!(x, v);
                assert_eq!(nullity, 0);
            }
            _ => panic!("identity must be solvable"),
        }
        let sol = linear_solve(&LinearMap::zero(2, 2), &Element::basis(0));
        assert!(sol.is_infeasible());
    }

    #[test]
    fn solve_symmetric_two_by_two() {
        // x + y = 1, x - y = 0 has the unique solution (1/2, 1/2).
        let mut a = LinearMap::zero(2, 2);
        a.set(0, 0, Scalar::one());
        a.set(0, 1, Scalar::one());
        a.set(1, 0, Scalar::one());
        a.set(1, 1, Scalar::from_int(-1));
        match linear_solve(&a, &Element::basis(0)) {
            LinearSolution::Solved { x, nullity } => {
                assert_eq!(x.coeff(&0), Scalar::ratio(1, 2));
                assert_eq!(x.coeff(&1), Scalar::ratio(1, 2));
                assert_eq!(nullity, 0);
            }
            _ => panic!("system is solvable"),
        }
    }

    #[test]
    fn infeasibility_certificate_annihilates() {
        // x + y = 1 duplicated inconsistently.
        let mut a = LinearMap::zero(2, 2);
        a.set(0, 0, Scalar::one());
        a.set(0, 1, Scalar::one());
        a.set(1, 0, Scalar::one());
        a.set(1, 1, Scalar::one());
        let b = Element::from_iter([(0, Scalar::one()), (1, Scalar::from_int(2))]);
        match linear_solve(&a, &b) {
            LinearSolution::Infeasible { certificate } => {
                for c in 0..2 {
                    let dot: Scalar = (0..2).map(|r| &certificate[r] * a.get(r, c)).sum();
                    assert!(dot.is_zero());
                }
                let dot: Scalar = (0..2).map(|r| &certificate[r] * &b.coeff(&(r as Idx))).sum();
                assert_eq!(dot, Scalar::one());
            }
            _ => panic!("system is inconsistent"),
        }
    }
}
