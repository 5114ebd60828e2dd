use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::num::Rational;

/// Exponent vector of a monomial, one entry per variable.
pub type Exponent = Vec<u32>;

/// All exponent vectors of total degree `degree` in `num_vars` variables, in
/// descending lexicographic order (`x1^d` first, `xn^d` last). For
/// homogeneous forms this is graded-lex with `x1 > ... > xn`.
pub fn monomials(num_vars: usize, degree: u32) -> Vec<Exponent> {
    fn go(rest: usize, degree: u32, prefix: &mut Exponent, out: &mut Vec<Exponent>) {
        if rest == 1 {
            prefix.push(degree);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=degree).rev() {
            prefix.push(e);
            go(rest - 1, degree - e, prefix, out);
            prefix.pop();
        }
    }
    assert!(num_vars >= 1);
    let mut out = Vec::new();
    go(num_vars, degree, &mut Vec::with_capacity(num_vars), &mut out);
    out
}

fn count_monomials(num_vars: usize, degree: u32) -> usize {
    if num_vars == 0 {
        return usize::from(degree == 0);
    }
    // C(degree + n - 1, n - 1)
    let (n, k) = (degree as usize + num_vars - 1, num_vars - 1);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dimension of the space of degree-`degree` forms in `num_vars` variables.
pub fn space_dim(num_vars: usize, degree: u32) -> usize {
    count_monomials(num_vars, degree)
}

/// Position of `exps` in [`monomials`].
pub fn monomial_rank(exps: &[u32]) -> usize {
    let mut rank = 0;
    let mut remaining: u32 = exps.iter().sum();
    for (i, &e) in exps.iter().enumerate().take(exps.len().saturating_sub(1)) {
        let rest_vars = exps.len() - i - 1;
        for higher in e + 1..=remaining {
            rank += count_monomials(rest_vars, remaining - higher);
        }
        remaining -= e;
    }
    rank
}

/// A homogeneous polynomial with exact rational coefficients.
///
/// Zero coefficients are never stored, so the zero form is an empty term
/// table that still remembers its degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Exponent, Rational>,
}

impl Form {
    pub fn zero(num_vars: usize, degree: u32) -> Form {
        assert!(num_vars >= 1, "a form needs at least one variable");
        Form {
            num_vars,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(num_vars: usize, c: Rational) -> Form {
        Form::monomial(vec![0; num_vars], c)
    }

    pub fn one(num_vars: usize) -> Form {
        Form::constant(num_vars, Rational::one())
    }

    /// `c * x^exps`.
    pub fn monomial(exps: Exponent, c: Rational) -> Form {
        let mut f = Form::zero(exps.len(), exps.iter().sum());
        if !c.is_zero() {
            f.terms.insert(exps, c);
        }
        f
    }

    /// The coordinate function `x_index`.
    pub fn var(num_vars: usize, index: usize) -> Form {
        let mut e = vec![0; num_vars];
        e[index] = 1;
        Form::monomial(e, Rational::one())
    }

    /// Linear form `sum coeffs[i] * x_i`.
    pub fn linear(coeffs: &[Rational]) -> Form {
        let n = coeffs.len();
        let mut f = Form::zero(n, 1);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0; n];
                e[i] = 1;
                f.terms.insert(e, c.clone());
            }
        }
        f
    }

    /// Builds a form from `(exponent, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        num_vars: usize,
        degree: u32,
        terms: impl IntoIterator<Item = (Exponent, Rational)>,
    ) -> Result<Form> {
        let mut f = Form::zero(num_vars, degree);
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::LengthMismatch {
                    expected: num_vars,
                    found: e.len(),
                });
            }
            let d: u32 = e.iter().sum();
            if d != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: d,
                });
            }
            f.add_term(e, c);
        }
        Ok(f)
    }

    /// Binary form from coefficients `c[i]` of `x^(m-i) y^i`.
    pub fn binary(coeffs: &[Rational]) -> Form {
        assert!(!coeffs.is_empty());
        let m = (coeffs.len() - 1) as u32;
        let mut f = Form::zero(2, m);
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                f.terms.insert(vec![m - i as u32, i as u32], c.clone());
            }
        }
        f
    }

    /// Binary form from small integer coefficients of `x^(m-i) y^i`.
    pub fn binary_ints(coeffs: &[i64]) -> Form {
        Form::binary(&coeffs.iter().map(|&c| crate::num::int(c)).collect::<Vec<_>>())
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms.get(exps).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient vector over [`monomials`] of this degree.
    pub fn coords(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); space_dim(self.num_vars, self.degree)];
        for (e, c) in &self.terms {
            v[monomial_rank(e)] = c.clone();
        }
        v
    }

    pub fn from_coords(num_vars: usize, degree: u32, coords: &[Rational]) -> Form {
        let basis = monomials(num_vars, degree);
        assert_eq!(basis.len(), coords.len(), "coordinate vector length");
        let mut f = Form::zero(num_vars, degree);
        for (e, c) in basis.into_iter().zip(coords) {
            if !c.is_zero() {
                f.terms.insert(e, c.clone());
            }
        }
        f
    }

    /// Largest monomial with nonzero coefficient, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Scales so the leading coefficient is 1. The zero form is returned
    /// unchanged.
    pub fn monic(&self) -> Form {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    pub fn scale(&self, c: &Rational) -> Form {
        if c.is_zero() {
            return Form::zero(self.num_vars, self.degree);
        }
        Form {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Form {
        let mut acc = Form::one(self.num_vars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Exact partial derivative with respect to `x_index`.
    pub fn differentiate(&self, index: usize) -> Result<Form> {
        if index >= self.num_vars {
            return Err(Error::IndexOutOfRange {
                index,
                num_vars: self.num_vars,
            });
        }
        let mut out = Form::zero(self.num_vars, self.degree.saturating_sub(1));
        for (e, c) in &self.terms {
            if e[index] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[index] -= 1;
            out.terms.insert(e2, c * Rational::from_integer(BigInt::from(e[index])));
        }
        Ok(out)
    }

    /// All first partials, in variable order.
    pub fn gradient(&self) -> FormTuple {
        let entries = (0..self.num_vars)
            .map(|i| self.differentiate(i).expect("index in range"))
            .collect();
        FormTuple { entries }
    }

    /// Linear substitution `x_i -> sum_j images[i][j] * x_j`.
    pub fn substitute(&self, images: &[Vec<Rational>]) -> Form {
        assert_eq!(images.len(), self.num_vars, "one image per variable");
        let linear: Vec<Form> = images.iter().map(|row| Form::linear(row)).collect();
        // powers[i][k] = linear[i]^k
        let mut powers: Vec<Vec<Form>> = Vec::with_capacity(self.num_vars);
        for (i, l) in linear.iter().enumerate() {
            let max = self.terms.keys().map(|e| e[i]).max().unwrap_or(0);
            let mut p = vec![Form::one(self.num_vars)];
            for k in 1..=max as usize {
                let next = &p[k - 1] * l;
                p.push(next);
            }
            powers.push(p);
        }
        let mut out = Form::zero(self.num_vars, self.degree);
        for (e, c) in &self.terms {
            let mut term = Form::constant(self.num_vars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            out.add_assign_form(&term);
        }
        out
    }

    fn add_assign_form(&mut self, other: &Form) {
        self.check_compatible(other);
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    fn check_compatible(&self, other: &Form) {
        assert_eq!(self.num_vars, other.num_vars, "forms in different rings");
        assert_eq!(self.degree, other.degree, "adding forms of different degrees");
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        let mut out = self.clone();
        out.add_assign_form(rhs);
        out
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self + &(-rhs)
    }
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form {
            num_vars: self.num_vars,
            degree: self.degree,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Form {
    type Output = Form;
    fn mul(self, rhs: &Form) -> Form {
        assert_eq!(self.num_vars, rhs.num_vars, "forms in different rings");
        let mut out = Form::zero(self.num_vars, self.degree + rhs.degree);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Exponent = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Form {
            type Output = Form;
            fn $m(self, rhs: Form) -> Form { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Form {
    type Output = Form;
    fn neg(self) -> Form {
        -&self
    }
}

impl std::fmt::Debug for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Form[{}; deg {}]({})", self.num_vars, self.degree, crate::poly::format_form(self, crate::poly::Style::Text))
    }
}

impl std::fmt::Display for Form {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::poly::format_form(self, crate::poly::Style::Text))
    }
}

/// Ordered tuple of forms sharing a ring and a degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FormTuple {
    entries: Vec<Form>,
}

impl FormTuple {
    pub fn new(entries: Vec<Form>) -> Result<FormTuple> {
        let Some(first) = entries.first() else {
            return Err(Error::LengthMismatch {
                expected: 1,
                found: 0,
            });
        };
        for f in &entries[1..] {
            if f.num_vars != first.num_vars {
                return Err(Error::VarCountMismatch {
                    left: first.num_vars,
                    right: f.num_vars,
                });
            }
            if f.degree != first.degree {
                return Err(Error::DegreeMismatch {
                    expected: first.degree,
                    found: f.degree,
                });
            }
        }
        Ok(FormTuple { entries })
    }

    pub fn entries(&self) -> &[Form] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Form> {
        self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn num_vars(&self) -> usize {
        self.entries[0].num_vars
    }

    pub fn degree(&self) -> u32 {
        self.entries[0].degree
    }

    /// Determinant of the Jacobian matrix `(d f_i / d x_j)`.
    pub fn jacobian_det(&self) -> Result<Form> {
        let n = self.num_vars();
        if self.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                found: self.len(),
            });
        }
        let jac: Vec<Vec<Form>> = self
            .entries
            .iter()
            .map(|f| (0..n).map(|j| f.differentiate(j).expect("in range")).collect())
            .collect();
        let degree = n as u32 * self.degree().saturating_sub(1);
        Ok(det_of_forms(&jac, n, degree))
    }
}

/// Cofactor expansion along the first row; `n` is tiny here.
fn det_of_forms(m: &[Vec<Form>], num_vars: usize, degree: u32) -> Form {
    let size = m.len();
    if size == 1 {
        return m[0][0].clone();
    }
    let mut acc = Form::zero(num_vars, degree);
    for col in 0..size {
        if m[0][col].is_zero() {
            continue;
        }
        let sub: Vec<Vec<Form>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != col)
                    .map(|(_, f)| f.clone())
                    .collect()
            })
            .collect();
        let sub_det = det_of_forms(&sub, num_vars, degree - m[0][col].degree());
        let term = &m[0][col] * &sub_det;
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}
