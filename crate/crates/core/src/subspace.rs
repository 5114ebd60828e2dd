//! Finite-dimensional spaces of forms kept in a canonical reduced basis.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::num::Rational;
use crate::poly::{monomials, space_dim, Exponent, Form, FormTuple};

/// A subspace of the degree-`degree` forms in `num_vars` variables.
///
/// The basis is the reduced row echelon form of any spanning set over the
/// descending monomial coordinates: pivot coefficients are 1, pivot
/// monomials strictly decrease, and each pivot column is cleared in the
/// other rows. Two subspaces are equal iff their bases are.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    num_vars: usize,
    degree: u32,
    basis: Vec<Form>,
}

impl Subspace {
    /// Span of `forms`, which must all live in degree `degree` forms in
    /// `num_vars` variables.
    pub fn span(num_vars: usize, degree: u32, forms: &[Form]) -> Result<Subspace> {
        for f in forms {
            if f.num_vars() != num_vars {
                return Err(Error::VarCountMismatch {
                    left: num_vars,
                    right: f.num_vars(),
                });
            }
            if f.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: f.degree(),
                });
            }
        }
        let cols = space_dim(num_vars, degree);
        let rows = forms.iter().map(Form::coords).collect();
        Ok(Subspace::from_matrix(num_vars, degree, &Matrix::from_rows(cols, rows)))
    }

    /// Span of the rows of a coordinate matrix.
    pub fn from_matrix(num_vars: usize, degree: u32, m: &Matrix) -> Subspace {
        let (r, _) = m.rref();
        let basis = r
            .row_vecs()
            .iter()
            .map(|row| Form::from_coords(num_vars, degree, row))
            .collect();
        Subspace {
            num_vars,
            degree,
            basis,
        }
    }

    /// Span of the entries of a tuple.
    pub fn of_tuple(t: &FormTuple) -> Subspace {
        Subspace::span(t.num_vars(), t.degree(), t.entries()).expect("tuple entries agree")
    }

    pub fn zero(num_vars: usize, degree: u32) -> Subspace {
        Subspace {
            num_vars,
            degree,
            basis: Vec::new(),
        }
    }

    pub fn full(num_vars: usize, degree: u32) -> Subspace {
        let basis = monomials(num_vars, degree)
            .into_iter()
            .map(|e| Form::monomial(e, Rational::from_integer(1.into())))
            .collect();
        Subspace {
            num_vars,
            degree,
            basis,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Form] {
        &self.basis
    }

    /// The basis as a tuple; `None` for the zero subspace.
    pub fn basis_tuple(&self) -> Option<FormTuple> {
        FormTuple::new(self.basis.clone()).ok()
    }

    /// Leading monomial of each basis row.
    pub fn pivots(&self) -> Vec<Exponent> {
        self.basis
            .iter()
            .map(|f| f.leading_term().expect("nonzero row").0.clone())
            .collect()
    }

    /// Basis coordinates stacked as a matrix.
    pub fn matrix(&self) -> Matrix {
        let cols = space_dim(self.num_vars, self.degree);
        Matrix::from_rows(cols, self.basis.iter().map(Form::coords).collect())
    }

    pub fn contains(&self, f: &Form) -> bool {
        if f.num_vars() != self.num_vars || f.degree() != self.degree {
            return false;
        }
        if f.is_zero() {
            return true;
        }
        let mut v = f.coords();
        let cols: Vec<usize> = self
            .pivots()
            .iter()
            .map(|e| crate::poly::monomial_rank(e))
            .collect();
        for (row, &p) in self.basis.iter().zip(&cols) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, x) in row.coords().iter().enumerate() {
                v[j] -= &c * x;
            }
        }
        v.iter().all(Zero::is_zero)
    }

    /// Image under a linear map applied to each basis element.
    pub fn map(&self, f: impl Fn(&Form) -> Form) -> Subspace {
        let images: Vec<Form> = self.basis.iter().map(f).collect();
        match images.first() {
            None => self.clone(),
            Some(first) => {
                let (n, d) = (first.num_vars(), first.degree());
                Subspace::span(n, d, &images).expect("images share a space")
            }
        }
    }
}

/// Exact equality of canonical bases.
pub fn subspace_equal(a: &Subspace, b: &Subspace) -> bool {
    a == b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_form;

    fn p(s: &str) -> Form {
        parse_form(s, 2).unwrap()
    }

    #[test]
    fn canonical_basis() {
        let a = Subspace::span(2, 3, &[p("x^3"), p("y^3")]).unwrap();
        let b = Subspace::span(2, 3, &[p("y^3"), p("2*x^3")]).unwrap();
        assert!(subspace_equal(&a, &b));
        let c = Subspace::span(2, 3, &[p("x^3"), p("x^2*y")]).unwrap();
        assert!(!subspace_equal(&a, &c));
        let f1 = p("x^3 + 2*x*y^2");
        let f2 = p("x^2*y - y^3");
        let s = Subspace::span(2, 3, &[f1.clone(), f2.clone()]).unwrap();
        let t = Subspace::span(2, 3, &[&f1 + &f2, &f1 - &f2]).unwrap();
        assert_eq!(s, t);
        assert_eq!(s.pivots(), vec![vec![3, 0], vec![2, 1]]);
    }

    #[test]
    fn membership_and_dimension() {
        let s = Subspace::span(2, 3, &[p("x^3 + y^3"), p("x^3 - y^3"), p("x^3")]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&p("3*y^3")));
        assert!(!s.contains(&p("x*y^2")));
        assert!(Subspace::span(2, 3, &[p("x^2")]).is_err());
        assert_eq!(Subspace::full(2, 2).dim(), 3);
        assert_eq!(Subspace::span(2, 2, &[]).unwrap(), Subspace::zero(2, 2));
    }
}
