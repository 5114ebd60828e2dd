//! Binary-form primitives: gcd, squarefree decomposition, Sylvester
//! resultant and the discriminant test.
//!
//! Binary forms are handled through their affine chart `y = 1` after the
//! power of `y` (the root at `[1:0]`) has been split off and tracked
//! separately, so no projective root is ever lost.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::num::Rational;
use crate::poly::form::Form;

/// Dense univariate polynomial, `coeffs[k]` multiplying `t^k`; no trailing
/// zeros, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> UniPoly {
        UniPoly {
            coeffs: vec![Rational::one()],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => UniPoly::zero(),
            Some(lc) => {
                let inv = lc.recip();
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rational::from_integer(k.into()))
                .collect(),
        )
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|k| {
                    let a = self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero);
                    match other.coeffs.get(k) {
                        Some(b) => a - b,
                        None => a,
                    }
                })
                .collect(),
        )
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (UniPoly::zero(), UniPoly::zero());
        };
        if sd < dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for k in (dd..=sd).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = &rem[k] * &lc_inv;
            for (j, c) in divisor.coeffs.iter().enumerate() {
                let v = &rem[k - dd + j] - &q * c;
                rem[k - dd + j] = v;
            }
            quot[k - dd] = q;
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, t: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * t + c)
    }

    /// Squarefree factorisation by Yun's algorithm: `self = lc * prod P_e^e`
    /// with each `P_e` monic, squarefree and pairwise coprime. Only
    /// nonconstant factors are returned, ordered by multiplicity.
    pub fn squarefree(&self) -> Vec<(UniPoly, u32)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut e = 1u32;
        while !b.is_constant() {
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), e));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            e += 1;
        }
        out
    }
}

/// Largest power of `y` dividing a nonzero binary form.
pub fn y_valuation(f: &Form) -> u32 {
    f.terms().map(|(e, _)| e[1]).min().unwrap_or(0)
}

/// Splits `f = y^a * g` and returns `(a, g(x, 1))`; the univariate part has
/// degree exactly `deg f - a`.
pub fn dehomogenize(f: &Form) -> (u32, UniPoly) {
    let a = y_valuation(f);
    let mut coeffs = vec![Rational::zero(); (f.degree() - a) as usize + 1];
    for (e, c) in f.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    (a, UniPoly::new(coeffs))
}

/// Dehomogenisation at `y = 1` without splitting off `y`.
pub fn affine_part(f: &Form) -> UniPoly {
    let mut coeffs = vec![Rational::zero(); f.degree() as usize + 1];
    for (e, c) in f.terms() {
        coeffs[e[0] as usize] = c.clone();
    }
    UniPoly::new(coeffs)
}

/// `x^k -> x^k y^(degree - k)`.
pub fn homogenize(p: &UniPoly, degree: u32) -> Form {
    let mut f = Form::zero(2, degree);
    for (k, c) in p.coeffs().iter().enumerate() {
        assert!(k as u32 <= degree, "homogenizing above the target degree");
        if !c.is_zero() {
            f.add_term(vec![k as u32, degree - k as u32], c.clone());
        }
    }
    f
}

/// The form `y^k`.
pub fn y_power(k: u32) -> Form {
    Form::monomial(vec![0, k], Rational::one())
}

fn require_binary(f: &Form) -> Result<()> {
    if f.num_vars() != 2 {
        return Err(Error::NotBinary {
            num_vars: f.num_vars(),
        });
    }
    Ok(())
}

/// Monic homogeneous gcd of two binary forms, including the shared power of
/// `y`. Coprime inputs give the constant form 1.
pub fn gcd_binary(f: &Form, g: &Form) -> Result<Form> {
    require_binary(f)?;
    require_binary(g)?;
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::ZeroInput),
        (true, false) => return Ok(g.monic()),
        (false, true) => return Ok(f.monic()),
        _ => {}
    }
    let (a, p) = dehomogenize(f);
    let (b, q) = dehomogenize(g);
    let h = p.gcd(&q);
    let k = h.degree().expect("nonzero gcd") as u32;
    let ya = a.min(b);
    Ok(&homogenize(&h, k) * &y_power(ya))
}

/// Exact quotient `f / g` of binary forms, or `None` if `g` does not divide
/// `f`.
pub fn div_exact(f: &Form, g: &Form) -> Option<Form> {
    assert!(!g.is_zero(), "division by the zero form");
    if g.degree() > f.degree() {
        return None;
    }
    let degree = f.degree() - g.degree();
    if f.is_zero() {
        return Some(Form::zero(2, degree));
    }
    let (a, p) = dehomogenize(f);
    let (b, q) = dehomogenize(g);
    if b > a {
        return None;
    }
    let (quot, rem) = p.div_rem(&q);
    if !rem.is_zero() {
        return None;
    }
    let qd = quot.degree().expect("nonzero quotient") as u32;
    Some(&homogenize(&quot, qd) * &y_power(a - b))
}

/// Squarefree decomposition `f = c * prod S_e^e` of a nonzero binary form.
///
/// Each `S_e` is monic in graded-lex order, squarefree, and the `S_e` are
/// pairwise coprime; the factor `y` (root `[1:0]`) is folded into the
/// stratum of its multiplicity. Entries are ordered by multiplicity.
pub fn squarefree_decomposition(f: &Form) -> Result<Vec<(Form, u32)>> {
    require_binary(f)?;
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let (a, p) = dehomogenize(f);
    let mut strata: Vec<(Form, u32)> = p
        .squarefree()
        .into_iter()
        .map(|(s, e)| {
            let d = s.degree().expect("nonconstant") as u32;
            (homogenize(&s, d), e)
        })
        .collect();
    if a > 0 {
        match strata.iter_mut().find(|(_, e)| *e == a) {
            Some(entry) => entry.0 = &entry.0 * &y_power(1),
            None => {
                strata.push((y_power(1), a));
                strata.sort_by_key(|(_, e)| *e);
            }
        }
    }
    Ok(strata)
}

/// The constant `c` with `f = c * prod S_e^e`.
pub fn squarefree_content(f: &Form) -> Result<Rational> {
    let (_, p) = dehomogenize(f);
    p.leading().cloned().ok_or(Error::ZeroInput)
}

/// Largest root multiplicity over the algebraic closure.
pub fn max_root_multiplicity(f: &Form) -> Result<u32> {
    Ok(squarefree_decomposition(f)?
        .iter()
        .map(|(_, e)| *e)
        .max()
        .unwrap_or(0))
}

/// Sylvester matrix of two binary forms of equal degree `m`, using the full
/// coefficient lists `x^m, x^(m-1) y, ..., y^m`: `m` shifted rows of `f`
/// above `m` shifted rows of `g`. A common root at `[1:0]` shows up as a
/// zero first column.
pub fn sylvester_matrix(f: &Form, g: &Form) -> Matrix {
    let m = f.degree() as usize;
    let (cf, cg) = (f.coords(), g.coords());
    let size = 2 * m;
    Matrix::from_fn(size, size, |i, j| {
        let (coeffs, shift) = if i < m { (&cf, i) } else { (&cg, i - m) };
        if j >= shift && j - shift <= m {
            coeffs[j - shift].clone()
        } else {
            Rational::zero()
        }
    })
}

fn resultant_unchecked(f: &Form, g: &Form) -> Rational {
    sylvester_matrix(f, g).determinant()
}

/// Resultant of two nonzero binary forms of equal degree. Vanishes exactly
/// when the forms share a projective root.
pub fn sylvester_resultant(f: &Form, g: &Form) -> Result<Rational> {
    require_binary(f)?;
    require_binary(g)?;
    if f.degree() != g.degree() {
        return Err(Error::DegreeMismatch {
            expected: f.degree(),
            found: g.degree(),
        });
    }
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok(resultant_unchecked(f, g))
}

/// Outcome of the discriminant test with its witness value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscriminantTest {
    pub nonzero: bool,
    /// `Res(f_x, f_y)`.
    pub resultant: Rational,
}

/// A binary form of degree at least 3 is nondegenerate iff its two partials
/// have no common root.
pub fn discriminant_nonzero(f: &Form) -> Result<DiscriminantTest> {
    require_binary(f)?;
    if f.degree() < 3 {
        return Err(Error::DegreeTooLow {
            minimum: 3,
            found: f.degree(),
        });
    }
    let fx = f.differentiate(0)?;
    let fy = f.differentiate(1)?;
    let resultant = resultant_unchecked(&fx, &fy);
    Ok(DiscriminantTest {
        nonzero: !resultant.is_zero(),
        resultant,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::int;
    use crate::poly::parse_form;

    fn p(s: &str) -> Form {
        parse_form(s, 2).unwrap()
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_binary(&p("x^3"), &p("y^3")).unwrap(), Form::one(2));
        assert_eq!(gcd_binary(&p("x^2*y"), &p("x*y^2")).unwrap(), p("x*y"));
        assert_eq!(gcd_binary(&p("x*y^2 + y^3"), &p("x^2*y")).unwrap(), p("y"));
        assert_eq!(gcd_binary(&p("2*x^2 - 2*y^2"), &p("3*x^2 + 3*x*y")).unwrap(), p("x + y"));
        assert_eq!(gcd_binary(&Form::zero(2, 2), &p("2*x*y")).unwrap(), p("x*y"));
        assert_eq!(gcd_binary(&Form::zero(2, 2), &Form::zero(2, 2)), Err(Error::ZeroInput));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_decomposition(&p("x^2*y^2")).unwrap(), vec![(p("x*y"), 2)]);
        assert_eq!(squarefree_decomposition(&p("x^3*y")).unwrap(), vec![(p("y"), 1), (p("x"), 3)]);
        assert_eq!(squarefree_decomposition(&p("x^4 + y^4")).unwrap(), vec![(p("x^4 + y^4"), 1)]);
        assert_eq!(squarefree_decomposition(&p("y^3")).unwrap(), vec![(p("y"), 3)]);
        assert_eq!(squarefree_decomposition(&Form::zero(2, 3)), Err(Error::ZeroInput));
        // 3 (x - y)^2 (x^2 + y^2) y^2: y joins the multiplicity-2 stratum
        let f = &(&p("3*x^2 - 6*x*y + 3*y^2") * &p("x^2 + y^2")) * &p("y^2");
        let sf = squarefree_decomposition(&f).unwrap();
        assert_eq!(sf, vec![(p("x^2 + y^2"), 1), (p("x*y - y^2"), 2)]);
        assert_eq!(squarefree_content(&f).unwrap(), int(3));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(sylvester_resultant(&p("x^3"), &p("y^3")).unwrap(), int(1));
        assert_eq!(sylvester_resultant(&p("x^2"), &p("x*y")).unwrap(), int(0));
        assert_eq!(sylvester_resultant(&p("x*y^2"), &p("x^2*y")).unwrap(), int(0));
        // shared root at [1:0] only
        assert_eq!(sylvester_resultant(&p("x*y + y^2"), &p("x*y - y^2")).unwrap(), int(0));
        assert!(sylvester_resultant(&p("x"), &p("x^2")).is_err());
        assert_eq!(sylvester_resultant(&Form::zero(2, 1), &p("x")), Err(Error::ZeroInput));
    }

    #[test]
    fn discriminant_examples() {
        assert!(discriminant_nonzero(&p("x^4 + y^4")).unwrap().nonzero);
        assert!(!discriminant_nonzero(&p("x^3*y")).unwrap().nonzero);
        assert!(!discriminant_nonzero(&p("x^2*y^2")).unwrap().nonzero);
        assert!(!discriminant_nonzero(&p("x^5")).unwrap().nonzero);
        assert!(discriminant_nonzero(&p("x^2 + y^2")).is_err());
    }

    #[test]
    fn exact_division() {
        assert_eq!(div_exact(&p("x^3*y - x*y^3"), &p("x*y")).unwrap(), p("x^2 - y^2"));
        assert_eq!(div_exact(&p("x^3"), &p("y")), None);
        assert_eq!(div_exact(&p("x^2 + y^2"), &p("x + y")), None);
    }

    #[test]
    fn yun_on_univariate() {
        // (t - 1)^3 (t + 2)
        let f = UniPoly::new(vec![int(-2), int(5), int(-3), int(-1), int(1)]);
        let sf = f.squarefree();
        assert_eq!(sf.len(), 2);
        assert_eq!(sf[0], (UniPoly::new(vec![int(2), int(1)]), 1));
        assert_eq!(sf[1], (UniPoly::new(vec![int(-1), int(1)]), 3));
    }
}
