//! Seeded random constructions for the verification suites.
//!
//! Coefficients are integers in `[-9, 9]`. Draws that land outside the
//! requested locus are redrawn and counted in [`Sampler::rejections`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::num::{int, Rational};
use crate::poly::binary::{discriminant_nonzero, sylvester_resultant};
use crate::poly::{Form, FormTuple, GroupElement};
use crate::quotient::GradedQuotient;
use crate::stability::Frame;
use crate::subspace::Subspace;

pub const COEFF_BOUND: i64 = 9;

pub struct Sampler {
    rng: ChaCha8Rng,
    rejections: u64,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            rejections: 0,
        }
    }

    pub fn rejections(&self) -> u64 {
        self.rejections
    }

    fn reject(&mut self) {
        self.rejections += 1;
    }

    pub fn coeff(&mut self) -> i64 {
        self.rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)
    }

    pub fn nonzero_coeff(&mut self) -> i64 {
        loop {
            let c = self.coeff();
            if c != 0 {
                return c;
            }
        }
    }

    pub fn range(&mut self, lo: u32, hi: u32) -> u32 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// `p / q` with `p` a nonzero coefficient and `1 <= q <= 9`.
    pub fn nonzero_rational(&mut self) -> Rational {
        let p = self.nonzero_coeff();
        let q = self.rng.gen_range(1..=COEFF_BOUND);
        crate::num::frac(p, q)
    }

    /// Nonzero form with independent coefficients.
    pub fn form(&mut self, num_vars: usize, degree: u32) -> Form {
        loop {
            let basis = crate::poly::monomials(num_vars, degree);
            let coords: Vec<Rational> = basis.iter().map(|_| int(self.coeff())).collect();
            let f = Form::from_coords(num_vars, degree, &coords);
            if !f.is_zero() {
                return f;
            }
            self.reject();
        }
    }

    pub fn linear_form(&mut self) -> Form {
        self.form(2, 1)
    }

    pub fn group_element(&mut self, n: usize) -> GroupElement {
        loop {
            let rows: Vec<Vec<Rational>> = (0..n)
                .map(|_| (0..n).map(|_| int(self.coeff())).collect())
                .collect();
            match GroupElement::from_rows(rows) {
                Ok(g) => return g,
                Err(_) => self.reject(),
            }
        }
    }

    pub fn frame(&mut self) -> Frame {
        Frame::new(self.group_element(2)).expect("2x2")
    }

    /// Tuple of `n` forms of degree `degree` whose quotient is finite.
    pub fn hsop_tuple(&mut self, n: usize, degree: u32) -> FormTuple {
        loop {
            let t = FormTuple::new((0..n).map(|_| self.form(n, degree)).collect())
                .expect("uniform tuple");
            let ok = if n == 2 {
                let e = t.entries();
                sylvester_resultant(&e[0], &e[1]).is_ok_and(|r| r != int(0))
            } else {
                GradedQuotient::build(&t).is_ok()
            };
            if ok {
                return t;
            }
            self.reject();
        }
    }

    /// Binary pair with a forced common linear factor.
    pub fn degenerate_pair(&mut self, degree: u32) -> FormTuple {
        let l = self.linear_form();
        let a = &l * &self.form(2, degree - 1);
        let b = &l * &self.form(2, degree - 1);
        FormTuple::new(vec![a, b]).expect("uniform tuple")
    }

    /// Form whose gradient is a system of parameters.
    pub fn nondegenerate_form(&mut self, n: usize, degree: u32) -> Form {
        loop {
            let f = self.form(n, degree);
            let ok = if n == 2 {
                discriminant_nonzero(&f).is_ok_and(|t| t.nonzero)
            } else {
                GradedQuotient::build(&f.gradient()).is_ok()
            };
            if ok {
                return f;
            }
            self.reject();
        }
    }

    /// `k` pairwise non-proportional linear forms.
    pub fn distinct_linear_forms(&mut self, k: usize) -> Vec<Form> {
        let mut out: Vec<Form> = Vec::with_capacity(k);
        while out.len() < k {
            let l = self.linear_form();
            if out.iter().any(|m| crate::apolarity::is_proportional(m, &l)) {
                self.reject();
                continue;
            }
            out.push(l);
        }
        out
    }

    /// `x^2 + a x y + b y^2` with negative discriminant.
    pub fn irreducible_quadratic(&mut self) -> Form {
        loop {
            let (a, b) = (self.coeff(), self.coeff());
            if a * a - 4 * b < 0 {
                return Form::binary_ints(&[1, a, b]);
            }
            self.reject();
        }
    }

    /// Random multiplicities summing to `total`, each at most `cap`.
    fn multiplicities(&mut self, total: u32, cap: u32) -> Vec<u32> {
        let mut parts = Vec::new();
        let mut left = total;
        while left > 0 {
            let p = self.range(1, cap.min(left));
            parts.push(p);
            left -= p;
        }
        parts
    }

    /// Product of powers of distinct factors with every root multiplicity at
    /// most `cap`.
    fn with_root_data(&mut self, d: u32, cap: u32) -> Form {
        let mut f = Form::constant(2, int(self.nonzero_coeff()));
        let mut left = d;
        if d >= 2 && self.coin() {
            let e = self.range(1, cap.min(d / 2));
            f = &f * &self.irreducible_quadratic().pow(e);
            left -= 2 * e;
        }
        let parts = self.multiplicities(left, cap);
        let lines = self.distinct_linear_forms(parts.len());
        for (l, e) in lines.iter().zip(parts) {
            f = &f * &l.pow(e);
        }
        f
    }

    /// Binary form with no root of multiplicity above `d / 2`.
    pub fn semistable_form(&mut self, d: u32) -> Form {
        if self.range(0, 2) == 0 {
            return self.nondegenerate_form(2, d);
        }
        self.with_root_data(d, d / 2)
    }

    /// Binary form with every root multiplicity below `d / 2`.
    pub fn stable_form(&mut self, d: u32) -> Form {
        if self.coin() {
            return self.nondegenerate_form(2, d);
        }
        self.with_root_data(d, (d - 1) / 2)
    }

    /// `c (L1 L2)^(d/2)` for distinct linear forms, a translate of
    /// `x^(d/2) y^(d/2)`.
    pub fn balanced_form(&mut self, d: u32) -> Form {
        let ls = self.distinct_linear_forms(2);
        let c = Form::constant(2, int(self.nonzero_coeff()));
        &c * &(&ls[0] * &ls[1]).pow(d / 2)
    }

    /// Stable forms, and balanced forms when `d` is even.
    pub fn polystable_form(&mut self, d: u32) -> Form {
        if d.is_multiple_of(2) && self.coin() {
            self.balanced_form(d)
        } else {
            self.stable_form(d)
        }
    }

    fn pencil_of(&mut self, a: Form, b: Form) -> Option<Subspace> {
        let w = Subspace::span(2, a.degree(), &[a, b]).expect("same degree");
        if w.dim() == 2 {
            Some(w)
        } else {
            self.reject();
            None
        }
    }

    /// Pencil spanned by two independent random forms.
    pub fn pencil(&mut self, m: u32) -> Subspace {
        loop {
            let (a, b) = (self.form(2, m), self.form(2, m));
            if let Some(w) = self.pencil_of(a, b) {
                return w;
            }
        }
    }

    /// `<L^i r1, L^j r2>` with `i < j <= m`.
    fn flagged_pencil(&mut self, m: u32, i: u32, j: u32) -> Subspace {
        loop {
            let l = self.linear_form();
            let a = &l.pow(i) * &self.form(2, m - i);
            let b = &l.pow(j) * &self.form(2, m - j);
            if let Some(w) = self.pencil_of(a, b) {
                return w;
            }
        }
    }

    /// Pencil with a point where `i + j > m`.
    pub fn unstable_pencil(&mut self, m: u32) -> Subspace {
        let j = self.range((m + 2).div_ceil(2), m);
        let i = self.range(m + 1 - j, j - 1);
        self.flagged_pencil(m, i, j)
    }

    /// Pencil with a point where `i + j = m`.
    pub fn boundary_pencil(&mut self, m: u32) -> Subspace {
        let j = self.range(m / 2 + 1, m);
        self.flagged_pencil(m, m - j, j)
    }

    /// A translate of `<x^i y^(m-i), x^(m-i) y^i>`.
    pub fn polystable_pencil(&mut self, m: u32) -> Subspace {
        let i = self.range(0, (m - 1) / 2);
        loop {
            let ls = self.distinct_linear_forms(2);
            let a = &ls[0].pow(i) * &ls[1].pow(m - i);
            let b = &ls[0].pow(m - i) * &ls[1].pow(i);
            if let Some(w) = self.pencil_of(a, b) {
                return w;
            }
        }
    }

    /// Generic, unstable, boundary or polystable pencil, chosen at random.
    pub fn mixed_pencil(&mut self, m: u32) -> Subspace {
        let kinds = [0, 1, 2, 3];
        match kinds.choose(&mut self.rng).copied().expect("nonempty") {
            0 => self.pencil(m),
            1 => self.unstable_pencil(m),
            2 => self.boundary_pencil(m),
            _ => self.polystable_pencil(m),
        }
    }
}
