//! Hilbert-Mumford indices and (semi/poly)stability of binary forms and of
//! pencils of binary forms, under the action of `SL_2`.
//!
//! A [`Frame`] is a change of coordinates `p(x) -> p(x M)` after which the
//! one-parameter subgroup is the diagonal one. In frame coordinates a
//! monomial `x^(m-i) y^i` has weight `m - 2i` up to sign, so lower `y`
//! exponents are the stable direction.
//!
//! The verdict for a pencil `W` never searches frames. For every point `a`
//! of the projective line let `e(a)` be the order of vanishing of a generic
//! member of `W` at `a` and `j(a)` the largest order reached by some nonzero
//! member. `W` is unstable iff `e + j > m` somewhere, stable iff `e + j < m`
//! everywhere. The points with `j(a) >= t` are cut out by the 2x2 minors of
//! the jet matrix of a basis, so everything reduces to gcds over the
//! rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::apolarity::normalized_coefficients;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::num::{rational_sqrt, Rational};
use crate::poly::binary::{
    affine_part, div_exact, gcd_binary, homogenize, squarefree_decomposition, UniPoly,
};
use crate::poly::{Form, GroupElement};
use crate::subspace::Subspace;

/// Coordinates in which the one-parameter subgroup is diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Frame {
    g: GroupElement,
}

impl Frame {
    pub fn new(g: GroupElement) -> Result<Frame> {
        if g.dim() != 2 {
            return Err(Error::SizeMismatch {
                expected: 2,
                rows: g.dim(),
                cols: g.dim(),
            });
        }
        Ok(Frame { g })
    }

    pub fn identity() -> Frame {
        Frame {
            g: GroupElement::identity(2),
        }
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Frame> {
        Frame::new(GroupElement::from_ints(&[&[a, b], &[c, d]])?)
    }

    pub fn from_matrix(m: Matrix) -> Result<Frame> {
        Frame::new(GroupElement::new(m)?)
    }

    /// Frame that swaps `x` and `y`.
    pub fn swap() -> Frame {
        Frame::from_ints(0, 1, 1, 0).expect("invertible")
    }

    pub fn matrix(&self) -> &Matrix {
        self.g.matrix()
    }

    pub fn group_element(&self) -> &GroupElement {
        &self.g
    }

    /// `p(x M)`.
    pub fn apply(&self, p: &Form) -> Form {
        self.g.act_dual(p).expect("binary form")
    }

    pub fn apply_subspace(&self, w: &Subspace) -> Subspace {
        w.map(|p| self.apply(p))
    }

    /// A frame in which the linear form `l` becomes a multiple of `y`, so
    /// its root moves to `[1:0]`.
    pub fn sending_to_y(l: &Form) -> Result<Frame> {
        let (l0, l1) = linear_coeffs(l)?;
        let (a, b) = if l1.is_zero() {
            (Rational::zero(), Rational::one())
        } else {
            (Rational::one(), Rational::zero())
        };
        let basis = Matrix::from_rows(2, vec![vec![a, l0], vec![b, l1]]);
        Frame::from_matrix(basis.inverse().ok_or(Error::ZeroInput)?)
    }

    /// A frame in which `to_x` becomes a multiple of `x` and `to_y` a
    /// multiple of `y`.
    pub fn sending_pair(to_x: &Form, to_y: &Form) -> Result<Frame> {
        let (a0, a1) = linear_coeffs(to_x)?;
        let (b0, b1) = linear_coeffs(to_y)?;
        let basis = Matrix::from_rows(2, vec![vec![a0, b0], vec![a1, b1]]);
        Frame::from_matrix(basis.inverse().ok_or(Error::SingularMatrix)?)
    }
}

fn linear_coeffs(l: &Form) -> Result<(Rational, Rational)> {
    if l.num_vars() != 2 {
        return Err(Error::NotBinary {
            num_vars: l.num_vars(),
        });
    }
    if l.degree() != 1 {
        return Err(Error::DegreeMismatch {
            expected: 1,
            found: l.degree(),
        });
    }
    if l.is_zero() {
        return Err(Error::ZeroInput);
    }
    Ok((l.coeff(&[1, 0]), l.coeff(&[0, 1])))
}

fn require_binary(num_vars: usize) -> Result<()> {
    if num_vars != 2 {
        return Err(Error::NotBinary { num_vars });
    }
    Ok(())
}

fn require_pencil(w: &Subspace) -> Result<()> {
    require_binary(w.num_vars())?;
    if w.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            found: w.dim(),
        });
    }
    Ok(())
}

/// Hilbert-Mumford data of a pencil in a frame: `k` is the first nonzero
/// coefficient column, `l` the first column independent of it, and
/// `mu = 2(m - k - l)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HmIndex {
    pub mu: i64,
    pub k: u32,
    pub l: u32,
}

impl HmIndex {
    pub fn semistable(&self) -> bool {
        self.mu >= 0
    }

    pub fn stable(&self) -> bool {
        self.mu > 0
    }
}

/// Integer coefficients (by `y` exponent) proportional to those of `f`.
fn integral_coeffs(f: &Form) -> Vec<BigInt> {
    let c = f.coords();
    let lcm = c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    c.iter().map(|q| q.numer() * (&lcm / q.denom())).collect()
}

fn integral_frame(frame: &Frame) -> [[BigInt; 2]; 2] {
    let m = frame.matrix();
    let lcm = (0..4).fold(BigInt::one(), |acc, k| acc.lcm(m[(k / 2, k % 2)].denom()));
    let e = |i: usize, j: usize| m[(i, j)].numer() * (&lcm / m[(i, j)].denom());
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// `p(x M)` on integer coefficient vectors indexed by `y` exponent, up to a
/// positive scalar.
fn transform_dense(c: &[BigInt], m: &[[BigInt; 2]; 2]) -> Vec<BigInt> {
    let deg = c.len() - 1;
    // x -> m00 x + m10 y, y -> m01 x + m11 y
    let u = [m[0][0].clone(), m[1][0].clone()];
    let v = [m[0][1].clone(), m[1][1].clone()];
    let powers = |l: &[BigInt; 2]| {
        let mut p = vec![vec![BigInt::one()]];
        for k in 1..=deg {
            let next = poly_mul(&p[k - 1], l);
            p.push(next);
        }
        p
    };
    let (up, vp) = (powers(&u), powers(&v));
    let mut out = vec![BigInt::zero(); deg + 1];
    for (i, ci) in c.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for (k, t) in poly_mul(&up[deg - i], &vp[i]).into_iter().enumerate() {
            out[k] += ci * t;
        }
    }
    out
}

/// Index of a pencil in a frame.
pub fn hm_index(w: &Subspace, frame: &Frame) -> Result<HmIndex> {
    require_pencil(w)?;
    let m = integral_frame(frame);
    let rows: Vec<Vec<BigInt>> = w
        .basis()
        .iter()
        .map(|f| transform_dense(&integral_coeffs(f), &m))
        .collect();
    let deg = w.degree();
    let k = (0..=deg as usize)
        .find(|&c| !rows[0][c].is_zero() || !rows[1][c].is_zero())
        .expect("nonzero pencil");
    let l = (k + 1..=deg as usize)
        .find(|&c| &rows[0][k] * &rows[1][c] != &rows[0][c] * &rows[1][k])
        .expect("independent pencil");
    Ok(HmIndex {
        mu: 2 * (deg as i64 - k as i64 - l as i64),
        k: k as u32,
        l: l as u32,
    })
}

/// Index of a single form in a frame: `d - 2 i` for the lowest `y` exponent
/// `i` present after the change of coordinates.
pub fn form_hm_index(f: &Form, frame: &Frame) -> Result<i64> {
    require_binary(f.num_vars())?;
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let c = transform_dense(&integral_coeffs(f), &integral_frame(frame));
    let i = c.iter().position(|x| !x.is_zero()).expect("nonzero form");
    Ok(f.degree() as i64 - 2 * i as i64)
}

/// The pencil spanned by the two partial derivatives.
pub fn nabla(f: &Form) -> Result<Subspace> {
    require_binary(f.num_vars())?;
    if f.degree() < 2 {
        return Err(Error::DegreeTooLow {
            minimum: 2,
            found: f.degree(),
        });
    }
    let g = f.gradient();
    let w = Subspace::of_tuple(&g);
    if w.dim() < 2 {
        return Err(Error::DependentPartials);
    }
    Ok(w)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Unstable,
    StrictlySemistable,
    Stable,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Unstable => "unstable",
            Verdict::StrictlySemistable => "strictly_semistable",
            Verdict::Stable => "stable",
        }
    }

    pub fn is_semistable(&self) -> bool {
        *self != Verdict::Unstable
    }

    fn from_excess(sum: u32, m: u32) -> Verdict {
        match sum.cmp(&m) {
            std::cmp::Ordering::Greater => Verdict::Unstable,
            std::cmp::Ordering::Equal => Verdict::StrictlySemistable,
            std::cmp::Ordering::Less => Verdict::Stable,
        }
    }
}

/// A pair `(i, j)` and the points where it is attained: every member of
/// the pencil vanishes to order `i` there and some member to order `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Destabilizer {
    pub i: u32,
    pub j: u32,
    /// Squarefree binary form whose roots are those points.
    pub locus: Form,
}

impl Destabilizer {
    /// The linear form of the point when the locus is a single rational
    /// point.
    pub fn linear_form(&self) -> Option<Form> {
        (self.locus.degree() == 1).then(|| self.locus.clone())
    }
}

/// Stability verdict for a pencil with its witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityCertificate {
    pub verdict: Verdict,
    pub polystable: bool,
    pub degree: u32,
    /// Monic gcd of the pencil.
    pub gcd: Form,
    /// A pair with the largest `i + j`.
    pub witness: Destabilizer,
    /// Frame sending a witness point to `[1:0]`, when that point is
    /// rational; its index is `2(m - i - j)`.
    pub frame: Option<Frame>,
    pub mu: Option<i64>,
    /// `<x^i y^(m-i), x^(m-i) y^i>` for strictly semistable pencils.
    pub closed_orbit: Option<Subspace>,
    /// For polystable strictly semistable pencils with rational roots: a
    /// frame in which the pencil is exactly `closed_orbit`.
    pub polystable_frame: Option<Frame>,
}

fn radical(p: &UniPoly) -> UniPoly {
    if p.is_constant() {
        return UniPoly::one();
    }
    p.div_rem(&p.gcd(&p.derivative())).0.monic()
}

/// Successive gcds of the jet minors of a pencil: `loci[t]` vanishes at
/// the affine points where some member vanishes to order at least `t`.
struct JetLoci {
    loci: Vec<UniPoly>,
}

impl JetLoci {
    fn new(p1: &UniPoly, p2: &UniPoly, m: u32) -> JetLoci {
        let mut d1 = vec![p1.clone()];
        let mut d2 = vec![p2.clone()];
        for k in 1..m as usize {
            d1.push(d1[k - 1].derivative());
            d2.push(d2[k - 1].derivative());
        }
        let minor = |k: usize, l: usize| d1[k].mul(&d2[l]).sub(&d1[l].mul(&d2[k]));
        // t = 0 and t = 1 impose no condition
        let mut loci = vec![UniPoly::zero(), UniPoly::zero()];
        let mut acc = UniPoly::zero();
        for t in 2..=m as usize {
            for k in 0..t - 1 {
                acc = acc.gcd(&minor(k, t - 1));
            }
            loci.push(acc.clone());
        }
        JetLoci { loci }
    }

    fn at(&self, t: u32) -> &UniPoly {
        &self.loci[t as usize]
    }
}

fn rational_roots_of_quadratic(q: &Form) -> Option<(Form, Form)> {
    if q.degree() != 2 {
        return None;
    }
    let (a, b, c) = (q.coeff(&[2, 0]), q.coeff(&[1, 1]), q.coeff(&[0, 2]));
    let linear = |l0: Rational, l1: Rational| Form::linear(&[l0, l1]);
    if a.is_zero() {
        // y (b x + c y)
        return Some((linear(Rational::zero(), Rational::one()), linear(b, c)));
    }
    let disc = &b * &b - Rational::from_integer(4.into()) * &a * &c;
    if disc.is_zero() {
        return None;
    }
    let r = rational_sqrt(&disc)?;
    let two_a = Rational::from_integer(2.into()) * &a;
    // roots x/y = (-b +- r) / 2a; linear form x - root*y
    let root1 = (-&b + &r) / &two_a;
    let root2 = (-&b - &r) / &two_a;
    Some((linear(Rational::one(), -root1), linear(Rational::one(), -root2)))
}

/// A rational linear form vanishing at one of the points of `locus`.
fn rational_point(locus: &Form) -> Option<Form> {
    match locus.degree() {
        1 => Some(locus.clone()),
        2 => rational_roots_of_quadratic(locus).map(|(l, _)| l),
        _ => None,
    }
}

/// Points where a pencil of degree `k` with no base points contains a
/// `k`-th power, as a squarefree form.
fn power_locus(w: &Subspace) -> Form {
    let k = w.degree();
    let basis = w.basis();
    let (p1, p2) = (affine_part(&basis[0]), affine_part(&basis[1]));
    let finite = if k >= 2 {
        radical(JetLoci::new(&p1, &p2, k).at(k))
    } else {
        UniPoly::one()
    };
    let fd = finite.degree().unwrap_or(0) as u32;
    let mut locus = homogenize(&finite, fd);
    let pivots = w.pivots();
    if pivots[1][1] == k {
        locus = &locus * &Form::var(2, 1);
    }
    locus
}

/// Decides stability of a pencil of binary forms.
pub fn subspace_stability(w: &Subspace) -> Result<StabilityCertificate> {
    require_pencil(w)?;
    let m = w.degree();
    let basis = w.basis();
    let pivots = w.pivots();
    let mut candidates = Vec::new();

    // the point [1:0]: orders of vanishing there are y-valuations
    candidates.push(Destabilizer {
        i: pivots[0][1],
        j: pivots[1][1],
        locus: Form::var(2, 1),
    });

    let (p1, p2) = (affine_part(&basis[0]), affine_part(&basis[1]));
    let g = p1.gcd(&p2);
    let jets = JetLoci::new(&p1, &p2, m);
    for (s, e) in g.squarefree() {
        let mut j = e + 1;
        while j < m && !s.gcd(jets.at(j + 1)).is_constant() {
            j += 1;
        }
        let locus = s.gcd(jets.at(j));
        let deg = locus.degree().expect("nonzero") as u32;
        candidates.push(Destabilizer {
            i: e,
            j,
            locus: homogenize(&locus, deg),
        });
    }
    let outside_base = |t: u32| {
        let r = radical(jets.at(t));
        r.div_rem(&r.gcd(&g)).0
    };
    if m >= 2 && !outside_base(2).is_constant() {
        let mut j = 2;
        while j < m && !outside_base(j + 1).is_constant() {
            j += 1;
        }
        let locus = outside_base(j).monic();
        let deg = locus.degree().expect("nonzero") as u32;
        candidates.push(Destabilizer {
            i: 0,
            j,
            locus: homogenize(&locus, deg),
        });
    }

    let best = candidates.iter().map(|c| c.i + c.j).max().expect("candidate");
    let witness = candidates
        .iter()
        .filter(|c| c.i + c.j == best)
        .find(|c| rational_point(&c.locus).is_some())
        .or_else(|| candidates.iter().find(|c| c.i + c.j == best))
        .expect("candidate")
        .clone();
    let verdict = Verdict::from_excess(best, m);

    let (frame, mu) = match rational_point(&witness.locus) {
        Some(l) => {
            let frame = Frame::sending_to_y(&l)?;
            let mu = hm_index(w, &frame)?.mu;
            (Some(frame), Some(mu))
        }
        None => (None, None),
    };

    let gcd = gcd_binary(&basis[0], &basis[1])?;
    let mut closed_orbit = None;
    let mut polystable = verdict == Verdict::Stable;
    let mut polystable_frame = None;
    if verdict == Verdict::StrictlySemistable {
        let i = witness.i;
        closed_orbit = Some(monomial_pencil(m, i));
        if let Some(roots) = polystable_roots(w, &gcd)? {
            polystable = true;
            if let Some((l1, l2)) = rational_roots_of_quadratic(&roots) {
                polystable_frame = Some(Frame::sending_pair(&l1, &l2)?);
            }
        }
    }

    Ok(StabilityCertificate {
        verdict,
        polystable,
        degree: m,
        gcd,
        witness,
        frame,
        mu,
        closed_orbit,
        polystable_frame,
    })
}

/// `<x^i y^(m-i), x^(m-i) y^i>`.
pub fn monomial_pencil(m: u32, i: u32) -> Subspace {
    let one = Rational::one();
    Subspace::span(
        2,
        m,
        &[
            Form::monomial(vec![i, m - i], one.clone()),
            Form::monomial(vec![m - i, i], one),
        ],
    )
    .expect("binary monomials")
}

/// For a strictly semistable pencil, the quadratic form whose two roots
/// `L1, L2` exhibit it as `(L1 L2)^i <L1^k, L2^k>`; `None` when the pencil
/// has no such shape.
fn polystable_roots(w: &Subspace, gcd: &Form) -> Result<Option<Form>> {
    let m = w.degree();
    let (i, s) = if gcd.degree() == 0 {
        (0, None)
    } else {
        match squarefree_decomposition(gcd)?.as_slice() {
            [(s, i)] if s.degree() == 2 => (*i, Some(s.clone())),
            _ => return Ok(None),
        }
    };
    if 2 * i >= m {
        return Ok(None);
    }
    let k = m - 2 * i;
    let quotient: Vec<Form> = w
        .basis()
        .iter()
        .map(|p| div_exact(p, gcd).expect("gcd divides"))
        .collect();
    let reduced = Subspace::span(2, k, &quotient)?;
    if k == 1 {
        return Ok(s);
    }
    let locus = power_locus(&reduced);
    if locus.degree() != 2 {
        return Ok(None);
    }
    match s {
        Some(s) if !crate::apolarity::is_proportional(&s, &locus) => Ok(None),
        _ => Ok(Some(locus.monic())),
    }
}

/// Re-derives the witness pair in the certificate's frame: after moving the
/// witness point to `[1:0]` the reduced basis must have pivot `y`
/// exponents `(i, j)` and index `2(m - i - j)`.
pub fn recheck_certificate(w: &Subspace, cert: &StabilityCertificate) -> Result<bool> {
    let m = w.degree();
    let (i, j) = (cert.witness.i, cert.witness.j);
    if Verdict::from_excess(i + j, m) != cert.verdict {
        return Ok(false);
    }
    let Some(frame) = &cert.frame else {
        let power = cert.witness.locus.pow(i);
        return Ok(div_exact(&cert.gcd, &power).is_some());
    };
    let moved = frame.apply_subspace(w);
    let pivots = moved.pivots();
    let hm = hm_index(w, frame)?;
    Ok(pivots[0][1] == i
        && pivots[1][1] == j
        && Some(hm.mu) == cert.mu
        && hm.mu == 2 * (m as i64 - i as i64 - j as i64))
}

/// Limit of the pencil under the frame's one-parameter subgroup, in frame
/// coordinates: the span of the two lowest-weight monomials that survive.
pub fn one_ps_limit(w: &Subspace, frame: &Frame) -> Result<Subspace> {
    let hm = hm_index(w, frame)?;
    if hm.mu < 0 {
        return Err(Error::LimitNotSemistable { mu: hm.mu });
    }
    let m = w.degree();
    let one = Rational::one();
    Subspace::span(
        2,
        m,
        &[
            Form::monomial(vec![m - hm.k, hm.k], one.clone()),
            Form::monomial(vec![m - hm.l, hm.l], one),
        ],
    )
}

/// Stability verdict for a single binary form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormCertificate {
    pub verdict: Verdict,
    pub polystable: bool,
    pub degree: u32,
    pub max_multiplicity: u32,
    pub strata: Vec<(Form, u32)>,
    /// Squarefree form vanishing at the roots of largest multiplicity.
    pub witness: Form,
    /// Frame sending a witness root to `[1:0]` when one is rational; its
    /// index is `d - 2 * max_multiplicity`.
    pub frame: Option<Frame>,
    pub mu: Option<i64>,
}

pub fn form_stability(f: &Form) -> Result<FormCertificate> {
    require_binary(f.num_vars())?;
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let d = f.degree();
    let strata = squarefree_decomposition(f)?;
    let (witness, mult) = strata
        .iter()
        .max_by_key(|(_, e)| *e)
        .map(|(s, e)| (s.clone(), *e))
        .unwrap_or_else(|| (Form::one(2), 0));
    let verdict = Verdict::from_excess(2 * mult, d);
    let polystable = match verdict {
        Verdict::Stable => true,
        Verdict::StrictlySemistable => matches!(strata.as_slice(), [(s, _)] if s.degree() == 2),
        Verdict::Unstable => false,
    };
    let (frame, mu) = match rational_point(&witness) {
        Some(l) => {
            let frame = Frame::sending_to_y(&l)?;
            let mu = form_hm_index(f, &frame)?;
            (Some(frame), Some(mu))
        }
        None => (None, None),
    };
    Ok(FormCertificate {
        verdict,
        polystable,
        degree: d,
        max_multiplicity: mult,
        strata,
        witness,
        frame,
        mu,
    })
}

/// An ordered pair of binary forms of the same degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairPoint {
    pub f1: Form,
    pub f2: Form,
}

impl PairPoint {
    pub fn new(f1: Form, f2: Form) -> Result<PairPoint> {
        require_binary(f1.num_vars())?;
        require_binary(f2.num_vars())?;
        if f1.degree() != f2.degree() {
            return Err(Error::DegreeMismatch {
                expected: f1.degree(),
                found: f2.degree(),
            });
        }
        Ok(PairPoint { f1, f2 })
    }
}

/// Outcome of the determinantal membership test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WPrimeResult {
    pub member: bool,
    /// Rank of the stacked 4 x (d-1) matrix.
    pub rank: usize,
    /// `d = 4`: the matrix has no 4x4 minors and every pair is a member.
    pub trivial: bool,
    /// The single 4x4 minor when `d = 5`.
    pub determinant: Option<Rational>,
}

/// Whether the four first partials of the pair span at most three
/// dimensions, read from the stacked shifted coefficient rows.
pub fn wprime_membership(p: &PairPoint) -> Result<WPrimeResult> {
    let m = p.f1.degree();
    if m < 3 {
        return Err(Error::DegreeTooLow {
            minimum: 3,
            found: m,
        });
    }
    let a = normalized_coefficients(&p.f1);
    let b = normalized_coefficients(&p.f2);
    let m = m as usize;
    let rows = vec![
        a[..m].to_vec(),
        a[1..].to_vec(),
        b[..m].to_vec(),
        b[1..].to_vec(),
    ];
    let mat = Matrix::from_rows(m, rows);
    let rank = mat.rank();
    Ok(WPrimeResult {
        member: rank <= 3,
        rank,
        trivial: m == 3,
        determinant: (m == 4).then(|| mat.determinant()),
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

    fn span(srcs: &[&str]) -> Subspace {
        let forms: Vec<Form> = srcs.iter().map(|s| p(s)).collect();
        Subspace::span(2, forms[0].degree(), &forms).unwrap()
    }

    #[test]
    fn nabla_examples() {
        assert_eq!(nabla(&p("x^4 + y^4")).unwrap(), span(&["x^3", "y^3"]));
        assert_eq!(nabla(&p("x^2*y^2")).unwrap(), span(&["x*y^2", "x^2*y"]));
        assert_eq!(nabla(&p("x^4")), Err(Error::DependentPartials));
        assert_eq!(nabla(&p("x^2 + 2*x*y + y^2")), Err(Error::DependentPartials));
    }

    #[test]
    fn hm_index_examples() {
        let w = span(&["x^3", "y^3"]);
        assert_eq!(hm_index(&w, &Frame::identity()).unwrap(), HmIndex { mu: 0, k: 0, l: 3 });
        let w = span(&["x^3", "x^2*y"]);
        assert_eq!(hm_index(&w, &Frame::swap()).unwrap(), HmIndex { mu: -4, k: 2, l: 3 });
        assert_eq!(hm_index(&w, &Frame::identity()).unwrap(), HmIndex { mu: 4, k: 0, l: 1 });
        assert!(hm_index(&span(&["x^3"]), &Frame::identity()).is_err());
    }

    #[test]
    fn rational_frames_scale_out() {
        let w = span(&["x^3 + x*y^2", "x^2*y - 2*y^3"]);
        let f1 = Frame::from_ints(1, 2, 3, 4).unwrap();
        let f2 = Frame::from_matrix(Matrix::from_rows(2, vec![vec![frac(1, 3), frac(2, 3)], vec![int(1), frac(4, 3)]])).unwrap();
        assert_eq!(hm_index(&w, &f1).unwrap(), hm_index(&w, &f2).unwrap());
    }

    #[test]
    fn frame_sends_linear_form_to_y() {
        for l in ["x - 2*y", "y", "x", "3*x + 5*y"] {
            let l = p(l);
            let f = Frame::sending_to_y(&l).unwrap();
            let image = f.apply(&l);
            assert_eq!(image.coeff(&[1, 0]), int(0), "{l}");
        }
        let f = Frame::sending_pair(&p("x - y"), &p("x + y")).unwrap();
        assert_eq!(f.apply(&p("x - y")).coeff(&[0, 1]), int(0));
        assert_eq!(f.apply(&p("x + y")).coeff(&[1, 0]), int(0));
    }

    #[test]
    fn stability_examples() {
        let c = subspace_stability(&span(&["x^3", "y^3"])).unwrap();
        assert_eq!(c.verdict, Verdict::StrictlySemistable);
        assert!(c.polystable);
        assert_eq!((c.witness.i, c.witness.j), (0, 3));
        assert_eq!(c.closed_orbit, Some(span(&["y^3", "x^3"])));

        let c = subspace_stability(&span(&["x^3", "x^2*y"])).unwrap();
        assert_eq!(c.verdict, Verdict::Unstable);
        assert_eq!((c.witness.i, c.witness.j), (2, 3));
        assert_eq!(c.witness.locus, p("x"));
        assert_eq!(c.mu, Some(-4));
        assert!(!c.polystable);

        let c = subspace_stability(&span(&["x*y^2", "x^2*y"])).unwrap();
        assert_eq!(c.verdict, Verdict::StrictlySemistable);
        assert!(c.polystable);
        assert_eq!(c.witness.i + c.witness.j, 3);
    }

    #[test]
    fn strictly_semistable_not_polystable() {
        // gcd y, and the quotient pencil <y(x+y), x^2> has one square only
        let w = span(&["x*y^2 + y^3", "x^2*y"]);
        let c = subspace_stability(&w).unwrap();
        assert_eq!(c.verdict, Verdict::StrictlySemistable);
        assert!(!c.polystable);
        assert!(recheck_certificate(&w, &c).unwrap());
    }

    #[test]
    fn stable_pencil() {
        let w = nabla(&p("x^5 + x*y^4 + y^5")).unwrap();
        let c = subspace_stability(&w).unwrap();
        assert_eq!(c.verdict, Verdict::Stable);
        assert!(c.polystable);
        assert!(c.closed_orbit.is_none());
    }

    #[test]
    fn irrational_witness_reports_stratum() {
        // (x^2 + y^2) divides the pencil with multiplicity 2, m = 5
        let q = p("x^2 + y^2");
        let w = Subspace::span(2, 5, &[&q.pow(2) * &p("x"), &q.pow(2) * &p("y")]).unwrap();
        let c = subspace_stability(&w).unwrap();
        assert_eq!(c.witness.i, 2);
        assert_eq!(c.witness.j, 3);
        assert_eq!(c.witness.locus, q);
        assert_eq!(c.verdict, Verdict::StrictlySemistable);
        assert!(c.polystable);
        assert!(c.frame.is_none());
        assert!(recheck_certificate(&w, &c).unwrap());
    }

    #[test]
    fn limits() {
        let w = span(&["x*y^2 + y^3", "x^2*y"]);
        assert_eq!(one_ps_limit(&w, &Frame::identity()).unwrap(), span(&["x*y^2", "x^2*y"]));
        let w0 = span(&["x*y^2", "x^2*y"]);
        assert_eq!(one_ps_limit(&w0, &Frame::identity()).unwrap(), w0);
        let w1 = span(&["x^3", "y^3"]);
        assert_eq!(one_ps_limit(&w1, &Frame::identity()).unwrap(), w1);
        let bad = span(&["x^3", "x^2*y"]);
        assert_eq!(one_ps_limit(&bad, &Frame::swap()), Err(Error::LimitNotSemistable { mu: -4 }));
    }

    #[test]
    fn form_examples() {
        let c = form_stability(&p("x^2*y^2")).unwrap();
        assert_eq!(c.verdict, Verdict::StrictlySemistable);
        assert!(c.polystable);
        let c = form_stability(&p("x^3*y")).unwrap();
        assert_eq!(c.verdict, Verdict::Unstable);
        assert_eq!(c.max_multiplicity, 3);
        assert_eq!(c.mu, Some(-2));
        let c = form_stability(&p("x^4 + y^4")).unwrap();
        assert_eq!(c.verdict, Verdict::Stable);
        assert!(c.polystable);
        let c = form_stability(&p("x^3*y + x^2*y^2")).unwrap();
        assert_eq!(c.verdict, Verdict::StrictlySemistable);
        assert!(!c.polystable);
        assert!(form_stability(&Form::zero(2, 4)).is_err());
    }

    #[test]
    fn wprime_examples() {
        let pp = PairPoint::new(p("4*x^3*y"), p("y^4")).unwrap();
        assert!(wprime_membership(&pp).unwrap().member);
        let pp = PairPoint::new(p("x^4"), p("y^4")).unwrap();
        assert!(wprime_membership(&pp).unwrap().member);
        let pp = PairPoint::new(p("x^4 + x^3*y"), p("y^4 + x*y^3")).unwrap();
        let r = wprime_membership(&pp).unwrap();
        assert!(!r.member);
        assert_eq!(r.determinant, Some(frac(1, 256)));
        let pp = PairPoint::new(p("x^3 + y^3"), p("x*y^2")).unwrap();
        let r = wprime_membership(&pp).unwrap();
        assert!(r.member && r.trivial);
        assert!(PairPoint::new(p("x^3"), p("y^4")).is_err());
    }
}
