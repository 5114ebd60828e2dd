//! Polar pairing, catalecticants, apolar ideals and associated forms.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::num::{binomial, factorial, multinomial, Rational};
use crate::poly::{format_form_with, monomials, space_dim, Alphabet, Form, FormTuple, Style};
use crate::quotient::GradedQuotient;
use crate::subspace::Subspace;

/// A form in the dual variables `y1..yn`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DualForm {
    form: Form,
}

impl DualForm {
    pub fn new(form: Form) -> DualForm {
        DualForm { form }
    }

    pub fn form(&self) -> &Form {
        &self.form
    }

    pub fn into_form(self) -> Form {
        self.form
    }

    pub fn num_vars(&self) -> usize {
        self.form.num_vars()
    }

    pub fn degree(&self) -> u32 {
        self.form.degree()
    }

    pub fn format(&self, style: Style) -> String {
        format_form_with(&self.form, style, Alphabet::Dual)
    }

    /// True when one is a nonzero rational multiple of the other.
    pub fn is_proportional(&self, other: &DualForm) -> bool {
        is_proportional(&self.form, &other.form)
    }
}

impl fmt::Display for DualForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Style::Text))
    }
}

impl fmt::Debug for DualForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DualForm({})", self.format(Style::Text))
    }
}

/// Nonzero forms `f`, `g` with `f = c g` for some rational `c`, checked by
/// cross-multiplying coordinates against a common nonzero entry.
pub fn is_proportional(f: &Form, g: &Form) -> bool {
    if f.num_vars() != g.num_vars() || f.degree() != g.degree() || f.is_zero() || g.is_zero() {
        return false;
    }
    let (a, b) = (f.coords(), g.coords());
    let Some(k) = a.iter().position(|c| !c.is_zero()) else {
        return false;
    };
    if b[k].is_zero() {
        return false;
    }
    a.iter().zip(&b).all(|(x, y)| x * &b[k] == y * &a[k])
}

/// `h(d/dy_1, ..., d/dy_n)` applied to `F`.
pub fn polar_apply(h: &Form, big_f: &DualForm) -> Result<DualForm> {
    let f = big_f.form();
    if h.num_vars() != f.num_vars() {
        return Err(Error::VarCountMismatch {
            left: h.num_vars(),
            right: f.num_vars(),
        });
    }
    if h.degree() > f.degree() {
        return Err(Error::DegreeExcess {
            operator: h.degree(),
            target: f.degree(),
        });
    }
    let terms = h.terms().flat_map(|(beta, c)| {
        f.terms().filter_map(move |(alpha, a)| {
            if alpha.iter().zip(beta).any(|(x, y)| x < y) {
                return None;
            }
            let mut weight = BigInt::one();
            for (&x, &y) in alpha.iter().zip(beta) {
                weight *= factorial(x) / factorial(x - y);
            }
            let e: Vec<u32> = alpha.iter().zip(beta).map(|(x, y)| x - y).collect();
            Some((e, c * a * Rational::from_integer(weight)))
        })
    });
    Ok(DualForm::new(Form::from_terms(
        f.num_vars(),
        f.degree() - h.degree(),
        terms,
    )?))
}

/// Matrix of `h -> h o F` from degree-`j` forms to degree `deg F - j` dual
/// forms. Row `r` holds the coordinates of `m_r o F` for the `r`-th
/// monomial of degree `j`.
pub fn catalecticant_matrix(big_f: &DualForm, j: u32) -> Result<Matrix> {
    let n = big_f.num_vars();
    let top = big_f.degree();
    if j > top {
        return Err(Error::DegreeOutOfRange {
            degree: j,
            max: top,
        });
    }
    let rows = monomials(n, j)
        .into_iter()
        .map(|m| {
            let h = Form::monomial(m, Rational::one());
            polar_apply(&h, big_f).map(|g| g.form().coords())
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(space_dim(n, top - j), rows))
}

/// Binomially normalised coefficients `a_i` of a binary form written as
/// `sum C(m, i) a_i x^(m-i) y^i`.
pub fn normalized_coefficients(f: &Form) -> Vec<Rational> {
    let m = f.degree();
    f.coords()
        .into_iter()
        .enumerate()
        .map(|(i, c)| c / Rational::from_integer(binomial(m, i as u32)))
        .collect()
}

/// Determinant of the middle Hankel matrix `(a_(i+j))` of a binary form of
/// even degree `2N`.
pub fn catalecticant(big_f: &DualForm) -> Result<Rational> {
    let f = big_f.form();
    if f.num_vars() != 2 {
        return Err(Error::NotBinary {
            num_vars: f.num_vars(),
        });
    }
    if f.degree() % 2 == 1 {
        return Err(Error::OddDegree(f.degree()));
    }
    let half = f.degree() as usize / 2;
    let a = normalized_coefficients(f);
    Ok(Matrix::from_fn(half + 1, half + 1, |i, j| a[i + j].clone()).determinant())
}

/// Degree-`j` piece of the apolar ideal `{h : h o F = 0}`.
pub fn apolar_component(big_f: &DualForm, j: u32) -> Result<Subspace> {
    let n = big_f.num_vars();
    let top = big_f.degree();
    if j == top + 1 {
        return Ok(Subspace::full(n, j));
    }
    if j > top + 1 {
        return Err(Error::DegreeOutOfRange {
            degree: j,
            max: top + 1,
        });
    }
    let cat = catalecticant_matrix(big_f, j)?;
    let kernel = cat.transpose().kernel();
    let cols = space_dim(n, j);
    Ok(Subspace::from_matrix(n, j, &Matrix::from_rows(cols, kernel)))
}

/// Associated form of a tuple that is a system of parameters: the dual form
/// of degree `n(e-1)` whose `y^a` coefficient is
/// `multinomial(a) * socle(x^a) / socle(jac)`.
pub fn associated_form_tuple(t: &FormTuple) -> Result<DualForm> {
    let q = GradedQuotient::build(t)?;
    Ok(associated_form_of_quotient(&q))
}

/// Associated form computed from an already built quotient.
pub fn associated_form_of_quotient(q: &GradedQuotient) -> DualForm {
    let n = q.num_vars();
    let top = q.top_degree();
    let socle = q.socle_functional();
    let scale = q.jac_socle().recip();
    let terms = monomials(n, top)
        .into_iter()
        .zip(socle)
        .filter(|(_, s)| !s.is_zero())
        .map(|(alpha, s)| {
            let c = Rational::from_integer(multinomial(&alpha)) * s * &scale;
            (alpha, c)
        });
    DualForm::new(Form::from_terms(n, top, terms).expect("exponents of the top degree"))
}

/// Associated form of a form whose gradient is a system of parameters.
pub fn associated_form(f: &Form) -> Result<DualForm> {
    if f.degree() < 3 {
        return Err(Error::DegreeTooLow {
            minimum: 3,
            found: f.degree(),
        });
    }
    associated_form_tuple(&f.gradient()).map_err(|e| match e {
        Error::NotHsop { .. } | Error::DegenerateTuple(_) => Error::Degenerate,
        other => other,
    })
}

/// The degree `d - 1` apolar piece of a dual form of degree `n(d-2)`, with
/// its membership status in the locus where the inverse map is defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BMapResult {
    pub subspace: Subspace,
    /// The basis generates a quotient with the complete-intersection
    /// Hilbert function.
    pub hsop: bool,
    /// `dim == n` and `hsop`.
    pub u_res_member: bool,
}

pub fn b_map(big_f: &DualForm, d: u32) -> Result<BMapResult> {
    let n = big_f.num_vars() as u32;
    if d < 3 || big_f.degree() != n * (d - 2) {
        return Err(Error::DegreeMismatch {
            expected: n * d.saturating_sub(2),
            found: big_f.degree(),
        });
    }
    let subspace = apolar_component(big_f, d - 1)?;
    let hsop = subspace.dim() == n as usize
        && subspace
            .basis_tuple()
            .is_some_and(|t| GradedQuotient::build(&t).is_ok());
    Ok(BMapResult {
        u_res_member: hsop,
        hsop,
        subspace,
    })
}

/// Comparison of an ideal with the apolar ideal of its associated form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InverseSystemReport {
    pub associated_form: DualForm,
    /// Every generator is annihilated by the associated form.
    pub generators_annihilate: bool,
    pub ideal_dims: Vec<usize>,
    pub apolar_dims: Vec<usize>,
}

impl InverseSystemReport {
    pub fn holds(&self) -> bool {
        self.generators_annihilate && self.ideal_dims == self.apolar_dims
    }
}

/// Checks that the ideal of `t` equals the apolar ideal of its associated
/// form in every degree up to one past the socle.
pub fn verify_inverse_system(t: &FormTuple) -> Result<InverseSystemReport> {
    let q = GradedQuotient::build(t)?;
    let a = associated_form_of_quotient(&q);
    let mut generators_annihilate = true;
    for f in t.entries() {
        if !polar_apply(f, &a)?.form().is_zero() {
            generators_annihilate = false;
        }
    }
    let mut ideal_dims = Vec::new();
    let mut apolar_dims = Vec::new();
    for j in 0..=q.top_degree() + 1 {
        ideal_dims.push(q.ideal_dimension(j)?);
        apolar_dims.push(apolar_component(&a, j)?.dim());
    }
    Ok(InverseSystemReport {
        associated_form: a,
        generators_annihilate,
        ideal_dims,
        apolar_dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::{frac, int};
    use crate::poly::parse_form;

    fn p(s: &str) -> Form {
        parse_form(s, 2).unwrap()
    }

    fn dual(s: &str) -> DualForm {
        DualForm::new(p(s))
    }

    fn tuple(srcs: &[&str]) -> FormTuple {
        FormTuple::new(srcs.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn polar_examples() {
        let f = dual("y1^2*y2^2");
        assert_eq!(polar_apply(&p("x*y"), &f).unwrap(), dual("4*y1*y2"));
        let z = polar_apply(&p("x^3"), &f).unwrap();
        assert!(z.form().is_zero());
        assert_eq!(z.degree(), 1);
        assert_eq!(polar_apply(&p("x^2"), &f).unwrap(), dual("2*y2^2"));
        assert!(matches!(polar_apply(&p("x^5"), &f), Err(Error::DegreeExcess { .. })));
    }

    #[test]
    fn catalecticant_matrix_rows_are_polar_images() {
        let f = dual("y1^2*y2^2");
        let m = catalecticant_matrix(&f, 2).unwrap();
        // x^2 o F = 2 y2^2, xy o F = 4 y1 y2, y^2 o F = 2 y1^2
        let expect = Matrix::from_rows(
            3,
            vec![
                vec![int(0), int(0), int(2)],
                vec![int(0), int(4), int(0)],
                vec![int(2), int(0), int(0)],
            ],
        );
        assert_eq!(m, expect);
        let g = dual("y1^4");
        let m = catalecticant_matrix(&g, 2).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m[(0, 0)], int(12));
        let m0 = catalecticant_matrix(&g, 0).unwrap();
        assert_eq!(m0.row(0), g.form().coords().as_slice());
        assert!(catalecticant_matrix(&g, 5).is_err());
    }

    #[test]
    fn catalecticant_values() {
        assert_eq!(catalecticant(&dual("y1^2*y2^2")).unwrap(), frac(-1, 216));
        assert_eq!(catalecticant(&dual("y1^4")).unwrap(), int(0));
        assert_eq!(catalecticant(&dual("y1^4 + y2^4")).unwrap(), int(0));
        assert_eq!(catalecticant(&dual("y1^3")), Err(Error::OddDegree(3)));
    }

    #[test]
    fn apolar_components() {
        let f = dual("y1^2*y2^2");
        let s = apolar_component(&f, 3).unwrap();
        assert_eq!(s, Subspace::span(2, 3, &[p("x^3"), p("y^3")]).unwrap());
        assert_eq!(apolar_component(&f, 2).unwrap().dim(), 0);
        assert_eq!(apolar_component(&f, 5).unwrap().dim(), 6);
        let g = dual("y1^4");
        assert_eq!(apolar_component(&g, 1).unwrap(), Subspace::span(2, 1, &[p("y")]).unwrap());
    }

    #[test]
    fn associated_forms() {
        assert_eq!(associated_form_tuple(&tuple(&["x^3", "y^3"])).unwrap(), DualForm::new(Form::binary(&[int(0), int(0), frac(2, 3), int(0), int(0)])));
        assert_eq!(associated_form_tuple(&tuple(&["4*x^3", "4*y^3"])).unwrap(), DualForm::new(Form::binary(&[int(0), int(0), frac(1, 24), int(0), int(0)])));
        assert_eq!(associated_form_tuple(&tuple(&["x^2", "y^2"])).unwrap(), DualForm::new(Form::binary(&[int(0), frac(1, 2), int(0)])));
        assert_eq!(associated_form(&p("x^4 + y^4")).unwrap(), dual("1/24*y1^2*y2^2"));
        assert_eq!(associated_form(&p("x^3*y")), Err(Error::Degenerate));
        assert!(matches!(associated_form_tuple(&tuple(&["x^2*y", "x*y^2"])), Err(Error::NotHsop { .. })));
    }

    #[test]
    fn b_map_examples() {
        let r = b_map(&dual("1/24*y1^2*y2^2"), 4).unwrap();
        assert_eq!(r.subspace, Subspace::span(2, 3, &[p("x^3"), p("y^3")]).unwrap());
        assert!(r.u_res_member);
        let r = b_map(&dual("y1^4"), 4).unwrap();
        assert_eq!(r.subspace.dim(), 3);
        assert!(!r.u_res_member);
        assert!(b_map(&dual("y1^4"), 5).is_err());
    }

    #[test]
    fn inverse_system_of_cubes() {
        let r = verify_inverse_system(&tuple(&["x^3", "y^3"])).unwrap();
        assert!(r.holds());
        assert_eq!(r.ideal_dims, vec![0, 0, 0, 2, 4, 6]);
    }

    #[test]
    fn proportionality() {
        assert!(is_proportional(&p("x^2 + 2*y^2"), &p("-3*x^2 - 6*y^2")));
        assert!(!is_proportional(&p("x^2 + 2*y^2"), &p("x^2 + y^2")));
        assert!(!is_proportional(&p("x^2"), &Form::zero(2, 2)));
    }
}
