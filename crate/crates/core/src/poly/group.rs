//! Linear changes of coordinates acting on forms.
//!
//! For `g` in `GL_n`, forms on the source space transform by
//! `(g f)(x) = f(x g^{-t})`, forms on the dual space by `(g F)(y) = F(y g)`,
//! and tuples of forms carry the two-sided action
//! `((g1, g2) f)(x) = f(x g1^{-t}) g2^{-1}`.
//! Each of these is a left action.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::num::Rational;
use crate::poly::form::{Form, FormTuple};

/// An invertible `n x n` rational matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupElement {
    matrix: Matrix,
    inverse: Matrix,
}

impl GroupElement {
    pub fn new(matrix: Matrix) -> Result<GroupElement> {
        if !matrix.is_square() {
            return Err(Error::SizeMismatch {
                expected: matrix.rows(),
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        let inverse = matrix.inverse().ok_or(Error::SingularMatrix)?;
        Ok(GroupElement { matrix, inverse })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<GroupElement> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                rows: n,
                cols: rows.iter().map(Vec::len).max().unwrap_or(0),
            });
        }
        GroupElement::new(Matrix::from_rows(n, rows))
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<GroupElement> {
        GroupElement::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::num::int(x)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> GroupElement {
        GroupElement {
            matrix: Matrix::identity(n),
            inverse: Matrix::identity(n),
        }
    }

    pub fn diagonal(entries: &[Rational]) -> Result<GroupElement> {
        let n = entries.len();
        GroupElement::new(Matrix::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Rational::zero()
            }
        }))
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn inverse_matrix(&self) -> &Matrix {
        &self.inverse
    }

    pub fn det(&self) -> Rational {
        self.matrix.determinant()
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            matrix: &self.matrix * &other.matrix,
            inverse: &other.inverse * &self.inverse,
        }
    }

    fn check(&self, num_vars: usize) -> Result<()> {
        if self.dim() != num_vars {
            return Err(Error::SizeMismatch {
                expected: num_vars,
                rows: self.dim(),
                cols: self.dim(),
            });
        }
        Ok(())
    }

    /// `(g f)(x) = f(x g^{-t})`: variable `x_i` goes to row `i` of `g^{-1}`.
    pub fn act_source(&self, f: &Form) -> Result<Form> {
        self.check(f.num_vars())?;
        Ok(f.substitute(&self.inverse.row_vecs()))
    }

    /// `(g F)(y) = F(y g)`: variable `y_i` goes to column `i` of `g`.
    pub fn act_dual(&self, f: &Form) -> Result<Form> {
        self.check(f.num_vars())?;
        Ok(f.substitute(&self.matrix.transpose().row_vecs()))
    }

    /// Source action applied entrywise.
    pub fn act_tuple(&self, t: &FormTuple) -> Result<FormTuple> {
        let entries = t
            .entries()
            .iter()
            .map(|f| self.act_source(f))
            .collect::<Result<Vec<_>>>()?;
        FormTuple::new(entries)
    }
}

/// `((g1, g2) f)(x) = f(x g1^{-t}) g2^{-1}`, with the tuple as a row vector.
pub fn act_double(g1: &GroupElement, g2: &GroupElement, t: &FormTuple) -> Result<FormTuple> {
    if g2.dim() != t.len() {
        return Err(Error::SizeMismatch {
            expected: t.len(),
            rows: g2.dim(),
            cols: g2.dim(),
        });
    }
    let moved = g1.act_tuple(t)?;
    let inv = g2.inverse_matrix();
    let entries = (0..t.len())
        .map(|k| {
            let mut acc = Form::zero(t.num_vars(), t.degree());
            for (i, f) in moved.entries().iter().enumerate() {
                let c = &inv[(i, k)];
                if !c.is_zero() {
                    acc = &acc + &f.scale(c);
                }
            }
            acc
        })
        .collect();
    FormTuple::new(entries)
}
