//! The graded quotient `O(V) / (f_1, ..., f_n)` built degree by degree with
//! exact row reduction.
//!
//! In each degree `j` the products `monomial * f_i` are row reduced over the
//! descending monomial basis. Pivot columns are leading monomials of the
//! ideal; the remaining columns are standard monomials and form a basis of
//! the quotient in that degree.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::num::Rational;
use crate::poly::{monomials, Exponent, Form, FormTuple};

/// Per-degree quotient dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    pub dims: Vec<usize>,
}

impl HilbertFunction {
    /// Coefficients of `(1 + t + ... + t^(e-1))^n`, the Hilbert function of
    /// `n` generic forms of degree `e` in `n` variables.
    pub fn complete_intersection(num_vars: usize, gen_degree: u32) -> HilbertFunction {
        let mut dims = vec![1usize];
        for _ in 0..num_vars {
            let mut next = vec![0usize; dims.len() + gen_degree as usize - 1];
            for (i, &c) in dims.iter().enumerate() {
                for k in 0..gen_degree as usize {
                    next[i + k] += c;
                }
            }
            dims = next;
        }
        HilbertFunction { dims }
    }

    pub fn is_symmetric(&self) -> bool {
        self.dims.iter().eq(self.dims.iter().rev())
    }

    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }
}

#[derive(Clone, Debug)]
struct Piece {
    monomials: Vec<Exponent>,
    /// Nonzero rows of the reduced ideal piece.
    rref: Matrix,
    pivots: Vec<usize>,
    standard: Vec<usize>,
}

impl Piece {
    fn full(num_vars: usize, degree: u32) -> Piece {
        let monomials = monomials(num_vars, degree);
        let cols = monomials.len();
        Piece {
            standard: (0..cols).collect(),
            monomials,
            rref: Matrix::zeros(0, cols),
            pivots: Vec::new(),
        }
    }

    /// Reduces a coordinate vector modulo the ideal piece and returns the
    /// coordinates on the standard monomials.
    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (r, &p) in self.pivots.iter().enumerate() {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (j, entry) in self.rref.row(r).iter().enumerate() {
                if !entry.is_zero() {
                    v[j] -= &c * entry;
                }
            }
        }
        self.standard.iter().map(|&j| v[j].clone()).collect()
    }
}

/// The quotient algebra of a tuple of `n` forms of degree `e` in `n`
/// variables, known through degree `n(e-1) + 1`.
#[derive(Clone, Debug)]
pub struct GradedQuotient {
    generators: FormTuple,
    top_degree: u32,
    pieces: Vec<Piece>,
    jac_socle: Rational,
}

impl GradedQuotient {
    /// Fails with [`Error::NotHsop`] at the first degree whose quotient is
    /// larger than the complete-intersection prediction, or if the quotient
    /// does not vanish one degree above the socle.
    pub fn build(generators: &FormTuple) -> Result<GradedQuotient> {
        let n = generators.num_vars();
        if generators.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: generators.len(),
            });
        }
        let e = generators.degree();
        if e < 2 {
            return Err(Error::DegreeTooLow {
                minimum: 2,
                found: e,
            });
        }
        if let Some(i) = generators.entries().iter().position(Form::is_zero) {
            return Err(Error::DegenerateTuple(i));
        }
        let top = n as u32 * (e - 1);
        let target = HilbertFunction::complete_intersection(n, e);
        let mut pieces = Vec::with_capacity(top as usize + 2);
        for j in 0..=top + 1 {
            let piece = if j < e {
                Piece::full(n, j)
            } else {
                build_piece(generators, j)
            };
            let expected = target.dims.get(j as usize).copied().unwrap_or(0);
            let found = piece.standard.len();
            if found > expected || (j == top + 1 && found != 0) {
                return Err(Error::NotHsop {
                    degree: j,
                    expected,
                    found,
                });
            }
            pieces.push(piece);
        }
        let mut q = GradedQuotient {
            generators: generators.clone(),
            top_degree: top,
            pieces,
            jac_socle: Rational::zero(),
        };
        let jac = generators.jacobian_det()?;
        q.jac_socle = q.socle_coordinate(&jac)?;
        if q.jac_socle.is_zero() {
            return Err(Error::SocleVanishes);
        }
        Ok(q)
    }

    pub fn generators(&self) -> &FormTuple {
        &self.generators
    }

    pub fn num_vars(&self) -> usize {
        self.generators.num_vars()
    }

    /// `n(e - 1)`, the degree of the socle.
    pub fn top_degree(&self) -> u32 {
        self.top_degree
    }

    pub fn hilbert_function(&self) -> HilbertFunction {
        HilbertFunction {
            dims: self.pieces[..=self.top_degree as usize]
                .iter()
                .map(|p| p.standard.len())
                .collect(),
        }
    }

    /// Dimension of the ideal in degree `j`.
    pub fn ideal_dimension(&self, j: u32) -> Result<usize> {
        Ok(self.piece(j)?.pivots.len())
    }

    pub fn standard_monomials(&self, j: u32) -> Result<Vec<Exponent>> {
        let p = self.piece(j)?;
        Ok(p.standard.iter().map(|&c| p.monomials[c].clone()).collect())
    }

    fn piece(&self, j: u32) -> Result<&Piece> {
        self.pieces.get(j as usize).ok_or(Error::DegreeOutOfRange {
            degree: j,
            max: self.top_degree + 1,
        })
    }

    /// Coordinates of the image of `h` on the standard monomials of its
    /// degree.
    pub fn normal_form(&self, h: &Form) -> Result<Vec<Rational>> {
        if h.num_vars() != self.num_vars() {
            return Err(Error::VarCountMismatch {
                left: self.num_vars(),
                right: h.num_vars(),
            });
        }
        Ok(self.piece(h.degree())?.reduce(h.coords()))
    }

    /// True when `h` lies in the ideal.
    pub fn contains(&self, h: &Form) -> Result<bool> {
        Ok(self.normal_form(h)?.iter().all(Zero::is_zero))
    }

    /// The linear functional `h -> socle coordinate of h` on the monomials of
    /// the top degree, in descending monomial order.
    pub fn socle_functional(&self) -> Vec<Rational> {
        let piece = &self.pieces[self.top_degree as usize];
        let std = piece.standard[0];
        let mut out = vec![Rational::zero(); piece.monomials.len()];
        out[std] = Rational::from_integer(1.into());
        for (r, &p) in piece.pivots.iter().enumerate() {
            out[p] = -piece.rref[(r, std)].clone();
        }
        out
    }

    /// The single coordinate of `h` on the socle.
    pub fn socle_coordinate(&self, h: &Form) -> Result<Rational> {
        if h.degree() != self.top_degree {
            return Err(Error::DegreeMismatch {
                expected: self.top_degree,
                found: h.degree(),
            });
        }
        Ok(self.normal_form(h)?.remove(0))
    }

    /// Socle coordinate of the Jacobian determinant of the generators.
    pub fn jac_socle(&self) -> &Rational {
        &self.jac_socle
    }
}

fn build_piece(generators: &FormTuple, j: u32) -> Piece {
    let n = generators.num_vars();
    let e = generators.degree();
    let basis = monomials(n, j);
    let cols = basis.len();
    let mut rows = Vec::new();
    for m in monomials(n, j - e) {
        let mono = Form::monomial(m, Rational::from_integer(1.into()));
        for f in generators.entries() {
            rows.push((&mono * f).coords());
        }
    }
    let (rref, pivots) = Matrix::from_rows(cols, rows).rref();
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    Piece {
        monomials: basis,
        rref,
        standard: (0..cols).filter(|&c| !is_pivot[c]).collect(),
        pivots,
    }
}
