//! Randomized verification suites.
//!
//! Each suite draws seeded samples per degree, checks an identity exactly,
//! and reports pass counts with the first counterexample. Library errors
//! inside a trial count as failures.

use std::fmt;

use num_traits::Zero;

use crate::apolarity::{
    associated_form, associated_form_tuple, b_map, catalecticant, is_proportional,
    verify_inverse_system, DualForm,
};
use crate::error::Error;
use crate::linalg::Matrix;
use crate::num::{factorial, Rational};
use crate::poly::binary::sylvester_resultant;
use crate::poly::{act_double, Form, FormTuple};
use crate::quotient::{GradedQuotient, HilbertFunction};
use crate::sample::Sampler;
use crate::stability::{
    form_hm_index, form_stability, hm_index, monomial_pencil, nabla, one_ps_limit,
    recheck_certificate, subspace_stability, wprime_membership, PairPoint, Verdict,
};
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Diagonal,
    Hilbert,
    InverseSystem,
    Equivariance,
    Catalecticant,
    Roundtrip,
    Stability,
    NablaStability,
    WPrime,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Diagonal,
        Suite::Hilbert,
        Suite::InverseSystem,
        Suite::Equivariance,
        Suite::Catalecticant,
        Suite::Roundtrip,
        Suite::Stability,
        Suite::NablaStability,
        Suite::WPrime,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Diagonal => "diagonal",
            Suite::Hilbert => "hilbert",
            Suite::InverseSystem => "inverse-system",
            Suite::Equivariance => "equivariance",
            Suite::Catalecticant => "catalecticant",
            Suite::Roundtrip => "roundtrip",
            Suite::Stability => "stability",
            Suite::NablaStability => "nabla-stability",
            Suite::WPrime => "wprime",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }

    pub fn default_degrees(&self) -> Vec<u32> {
        match self {
            Suite::Equivariance | Suite::Roundtrip => (4..=6).collect(),
            Suite::WPrime => (5..=7).collect(),
            _ => (4..=8).collect(),
        }
    }

    pub fn default_trials(&self) -> usize {
        match self {
            Suite::Diagonal => 20,
            Suite::Equivariance | Suite::Stability => 100,
            Suite::NablaStability => 200,
            _ => 50,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Trials per degree.
    pub trials: usize,
    pub degrees: Vec<u32>,
    pub num_vars: usize,
    /// Random frames tried against each semistable pencil.
    pub frames: usize,
}

impl VerifyConfig {
    pub fn defaults(suite: Suite, seed: u64) -> VerifyConfig {
        VerifyConfig {
            seed,
            trials: suite.default_trials(),
            degrees: suite.default_degrees(),
            num_vars: 2,
            frames: 500,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub degrees: Vec<u32>,
    pub checks: usize,
    pub passed: usize,
    pub rejections: u64,
    pub first_counterexample: Option<String>,
}

impl SuiteReport {
    pub fn failed(&self) -> usize {
        self.checks - self.passed
    }

    pub fn all_passed(&self) -> bool {
        self.checks == self.passed
    }
}

struct Tally {
    checks: usize,
    passed: usize,
    first: Option<String>,
}

impl Tally {
    fn record(&mut self, d: u32, outcome: Result<(), String>) {
        self.checks += 1;
        match outcome {
            Ok(()) => self.passed += 1,
            Err(msg) => {
                if self.first.is_none() {
                    self.first = Some(format!("d={d}: {msg}"));
                }
            }
        }
    }
}

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: Result<T, Error>) -> Result<T, String> {
    r.map_err(|e| format!("unexpected error: {e}"))
}

/// Seed of the sampler for one trial. Suites drawing the same kind of
/// sample at the same `(d, index)` see the same sample.
fn trial_seed(seed: u64, d: u32, index: usize) -> u64 {
    let mut z = seed ^ (u64::from(d) << 40) ^ index as u64;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Offset separating the extra sample streams from the main trials.
const EXTRA: usize = 1 << 24;

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    let mut t = Tally {
        checks: 0,
        passed: 0,
        first: None,
    };
    let mut rejections = 0;
    let n = cfg.num_vars;
    for &d in &cfg.degrees {
        let mut trial = |index: usize, run: &mut dyn FnMut(&mut Sampler) -> Vec<Check>| {
            let mut s = Sampler::new(trial_seed(cfg.seed, d, index));
            for outcome in run(&mut s) {
                t.record(d, outcome);
            }
            rejections += s.rejections();
        };
        for i in 0..cfg.trials {
            trial(i, &mut |s| match suite {
                Suite::Diagonal => vec![diagonal_trial(s, n, d)],
                Suite::Hilbert if n == 2 => vec![hilbert_trial(s, n, d), degenerate_trial(s, d)],
                Suite::Hilbert => vec![hilbert_trial(s, n, d)],
                Suite::InverseSystem => vec![inverse_system_trial(s, n, d)],
                Suite::Equivariance => vec![
                    form_equivariance_trial(s, n, d),
                    tuple_equivariance_trial(s, n, d),
                    gradient_equivariance_trial(s, n, d),
                ],
                Suite::Catalecticant => vec![catalecticant_trial(s, d)],
                Suite::Roundtrip => vec![roundtrip_trial(s, n, d)],
                Suite::Stability => vec![stability_trial(s, d, cfg.frames)],
                Suite::NablaStability => vec![nabla_semistable_trial(s, d), nabla_frame_trial(s, d)],
                Suite::WPrime => vec![wprime_gradient_trial(s, d), wprime_oracle_trial(s, d)],
            });
        }
        match suite {
            Suite::Roundtrip if n == 2 => {
                for i in 0..cfg.trials.div_ceil(2) {
                    trial(EXTRA + i, &mut |s| vec![cat_roundtrip_trial(s, d)]);
                }
            }
            Suite::NablaStability => {
                for i in 0..cfg.trials.div_ceil(4) {
                    trial(EXTRA + i, &mut |s| vec![nabla_polystable_trial(s, d)]);
                    if d % 2 == 0 {
                        trial(2 * EXTRA + i, &mut |s| vec![balanced_limit_trial(s, d)]);
                    }
                }
            }
            _ => {}
        }
    }
    SuiteReport {
        suite,
        degrees: cfg.degrees.clone(),
        checks: t.checks,
        passed: t.passed,
        rejections,
        first_counterexample: t.first,
    }
}

/// `(n(d-2))! / (d!)^n / prod a_i * (y1 ... yn)^(d-2)`.
pub fn diagonal_prediction(coeffs: &[Rational], d: u32) -> DualForm {
    let n = coeffs.len();
    let top = n as u32 * (d - 2);
    let mut c = Rational::from_integer(factorial(top))
        / Rational::from_integer(factorial(d).pow(n as u32));
    for a in coeffs {
        c /= a;
    }
    DualForm::new(Form::monomial(vec![d - 2; n], c))
}

fn diagonal_trial(s: &mut Sampler, n: usize, d: u32) -> Check {
    let coeffs: Vec<Rational> = (0..n).map(|_| s.nonzero_rational()).collect();
    let f = coeffs.iter().enumerate().fold(Form::zero(n, d), |acc, (i, a)| {
        &acc + &Form::var(n, i).pow(d).scale(a)
    });
    let a = lib(associated_form(&f))?;
    let expected = diagonal_prediction(&coeffs, d);
    ensure(a == expected, || format!("A({f}) = {a}, expected {expected}"))
}

fn hilbert_trial(s: &mut Sampler, n: usize, d: u32) -> Check {
    let t = s.hsop_tuple(n, d - 1);
    let q = lib(GradedQuotient::build(&t))?;
    let h = q.hilbert_function();
    let target = HilbertFunction::complete_intersection(n, d - 1);
    ensure(h == target && h.is_symmetric(), || format!("{t:?}: dims {:?}", h.dims))?;
    ensure(!q.jac_socle().is_zero(), || format!("{t:?}: jac in ideal"))?;
    // ideal membership: h1 f_i + h2 reduces like h2
    let k = s.range(0, q.top_degree() + 1 - t.degree());
    let i = s.range(0, n as u32 - 1) as usize;
    let h1 = s.form(n, k);
    let h2 = s.form(n, k + t.degree());
    let lhs = lib(q.normal_form(&(&(&h1 * &t.entries()[i]) + &h2)))?;
    let rhs = lib(q.normal_form(&h2))?;
    ensure(lhs == rhs, || format!("{t:?}: reduction not modulo the ideal"))
}

fn degenerate_trial(s: &mut Sampler, d: u32) -> Check {
    let t = if s.coin() {
        s.degenerate_pair(d - 1)
    } else {
        let e = s.hsop_tuple(2, d - 1).into_entries();
        FormTuple::new(e).expect("pair")
    };
    let e = t.entries();
    let res = lib(sylvester_resultant(&e[0], &e[1]))?;
    let built = GradedQuotient::build(&t);
    let not_hsop = matches!(built, Err(Error::NotHsop { .. }));
    ensure(not_hsop == res.is_zero() && (not_hsop || built.is_ok()), || {
        format!("{t:?}: resultant {res}, build {:?}", built.err())
    })
}

fn inverse_system_trial(s: &mut Sampler, n: usize, d: u32) -> Check {
    let t = s.hsop_tuple(n, d - 1);
    let r = lib(verify_inverse_system(&t))?;
    ensure(r.holds(), || {
        format!("{t:?}: ideal {:?} vs apolar {:?}", r.ideal_dims, r.apolar_dims)
    })
}

fn form_equivariance_trial(s: &mut Sampler, n: usize, d: u32) -> Check {
    let g = s.group_element(n);
    let f = s.nondegenerate_form(n, d);
    let lhs = lib(associated_form(&lib(g.act_source(&f))?))?;
    let det = g.det();
    let rhs = lib(g.act_dual(associated_form(&f).map_err(|e| e.to_string())?.form()))?
        .scale(&(&det * &det));
    ensure(lhs.form() == &rhs, || format!("g={:?}, f={f}", g.matrix()))
}

fn tuple_equivariance_trial(s: &mut Sampler, n: usize, d: u32) -> Check {
    let g1 = s.group_element(n);
    let g2 = s.group_element(n);
    let t = s.hsop_tuple(n, d - 1);
    let moved = lib(act_double(&g1, &g2, &t))?;
    let lhs = lib(associated_form_tuple(&moved))?;
    let scale = g1.det() * g2.det();
    let rhs = lib(g1.act_dual(lib(associated_form_tuple(&t))?.form()))?.scale(&scale);
    ensure(lhs.form() == &rhs, || {
        format!("g1={:?}, g2={:?}, t={t:?}", g1.matrix(), g2.matrix())
    })
}

fn gradient_equivariance_trial(s: &mut Sampler, n: usize, d: u32) -> Check {
    let g = s.group_element(n);
    let f = s.form(n, d);
    let lhs = lib(g.act_source(&f))?.gradient();
    let rhs = lib(act_double(&g, &g, &f.gradient()))?;
    ensure(lhs == rhs, || format!("g={:?}, f={f}", g.matrix()))
}

fn catalecticant_trial(s: &mut Sampler, d: u32) -> Check {
    let t = s.hsop_tuple(2, d - 1);
    let a = lib(associated_form_tuple(&t))?;
    let c = lib(catalecticant(&a))?;
    ensure(!c.is_zero(), || format!("{t:?}: Cat(A) = 0"))
}

fn roundtrip_trial(s: &mut Sampler, n: usize, d: u32) -> Check {
    let t = s.hsop_tuple(n, d - 1);
    let w = Subspace::of_tuple(&t);
    let basis = w.basis_tuple().expect("nonzero");
    let a = lib(associated_form_tuple(&basis))?;
    let b = lib(b_map(&a, d))?;
    ensure(b.subspace == w && b.u_res_member, || format!("{t:?}: B(A(W)) differs"))
}

/// Perturbs an associated form until its catalecticant is nonzero, then
/// checks that `A(B(F))` is proportional to `F`.
fn cat_roundtrip_trial(s: &mut Sampler, d: u32) -> Check {
    let base = lib(associated_form_tuple(&s.hsop_tuple(2, d - 1)))?;
    let f = loop {
        let eps = s.nonzero_rational();
        let noise = s.form(2, base.degree());
        let f = DualForm::new(base.form() + &noise.scale(&eps));
        if !lib(catalecticant(&f))?.is_zero() {
            break f;
        }
    };
    let b = lib(b_map(&f, d))?;
    ensure(b.u_res_member && b.subspace.dim() == 2, || {
        format!("{f}: B(F) has dimension {}", b.subspace.dim())
    })?;
    let back = lib(associated_form_tuple(&b.subspace.basis_tuple().expect("pencil")))?;
    ensure(is_proportional(back.form(), f.form()), || format!("A(B({f})) = {back}"))
}

fn stability_trial(s: &mut Sampler, d: u32, frames: usize) -> Check {
    let m = d - 1;
    let w = s.mixed_pencil(m);
    let cert = lib(subspace_stability(&w))?;
    let show = || format!("{:?}", w.basis());
    ensure(lib(recheck_certificate(&w, &cert))?, || format!("{}: witness recheck", show()))?;
    match cert.verdict {
        Verdict::Unstable => {
            let mu = cert.mu.ok_or_else(|| format!("{}: unstable without frame", show()))?;
            ensure(mu < 0, || format!("{}: witness frame mu = {mu}", show()))
        }
        _ => {
            for _ in 0..frames {
                let frame = s.frame();
                let hm = lib(hm_index(&w, &frame))?;
                ensure(hm.mu >= 0, || format!("{}: frame {:?} gives mu = {}", show(), frame.matrix(), hm.mu))?;
            }
            if let Some(frame) = &cert.polystable_frame {
                let lim = lib(one_ps_limit(&w, frame))?;
                ensure(Some(&lim) == cert.closed_orbit.as_ref(), || format!("{}: limit {lim:?}", show()))?;
            }
            Ok(())
        }
    }
}

fn nabla_semistable_trial(s: &mut Sampler, d: u32) -> Check {
    let f = s.semistable_form(d);
    let fc = lib(form_stability(&f))?;
    ensure(fc.verdict.is_semistable(), || format!("{f}: sample not semistable"))?;
    let c = lib(subspace_stability(&lib(nabla(&f))?))?;
    ensure(c.verdict.is_semistable(), || format!("nabla({f}) is {}", c.verdict.as_str()))
}

fn nabla_polystable_trial(s: &mut Sampler, d: u32) -> Check {
    let f = s.polystable_form(d);
    ensure(lib(form_stability(&f))?.polystable, || format!("{f}: sample not polystable"))?;
    let c = lib(subspace_stability(&lib(nabla(&f))?))?;
    ensure(c.polystable, || format!("nabla({f}) is not polystable"))
}

/// Gradient pencils of translates of `x^(d/2) y^(d/2)` degenerate to the
/// monomial pencil with `i = d/2 - 1`.
fn balanced_limit_trial(s: &mut Sampler, d: u32) -> Check {
    let f = s.balanced_form(d);
    let w = lib(nabla(&f))?;
    let c = lib(subspace_stability(&w))?;
    let target = monomial_pencil(d - 1, d / 2 - 1);
    let frame = c.polystable_frame.ok_or_else(|| format!("nabla({f}): no rational frame"))?;
    let lim = lib(one_ps_limit(&w, &frame))?;
    ensure(c.polystable && lim == target, || format!("nabla({f}): limit {lim:?}"))
}

/// Per-frame: `f` is semistable for the subgroup iff its gradient pencil is.
fn nabla_frame_trial(s: &mut Sampler, d: u32) -> Check {
    let f = s.form(2, d);
    let Ok(w) = nabla(&f) else {
        return Ok(());
    };
    let frame = s.frame();
    let a = lib(form_hm_index(&f, &frame))? >= 0;
    let b = lib(hm_index(&w, &frame))?.mu >= 0;
    ensure(a == b, || format!("{f}, frame {:?}: form {a}, pencil {b}", frame.matrix()))
}

fn wprime_gradient_trial(s: &mut Sampler, d: u32) -> Check {
    let f = s.form(2, d);
    let g = f.gradient();
    let moved = lib(act_double(&s.group_element(2), &s.group_element(2), &g))?;
    for t in [g, moved] {
        let e = t.into_entries();
        let p = lib(PairPoint::new(e[0].clone(), e[1].clone()))?;
        ensure(lib(wprime_membership(&p))?.member, || format!("{p:?} not a member"))?;
    }
    Ok(())
}

/// Compares with the rank of the four partials computed directly.
fn wprime_oracle_trial(s: &mut Sampler, d: u32) -> Check {
    let (f1, f2) = (s.form(2, d - 1), s.form(2, d - 1));
    let partials: Vec<Vec<Rational>> = [&f1, &f2]
        .iter()
        .flat_map(|f| (0..2).map(move |i| f.differentiate(i).expect("binary").coords()))
        .collect();
    let rank = Matrix::from_rows(d as usize - 1, partials).rank();
    let p = lib(PairPoint::new(f1, f2))?;
    let r = lib(wprime_membership(&p))?;
    ensure(r.member == (rank <= 3) && r.rank == rank, || format!("{p:?}: rank {} vs {rank}", r.rank))
}

/// Runs one suite by name, or all of them for `"all"`.
pub fn run_named(name: &str, seed: u64, trials: Option<usize>, degrees: Option<Vec<u32>>, num_vars: usize) -> Option<Vec<SuiteReport>> {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![Suite::from_name(name)?]
    };
    Some(
        suites
            .into_iter()
            .map(|suite| {
                let mut cfg = VerifyConfig::defaults(suite, seed);
                if let Some(t) = trials {
                    cfg.trials = t;
                }
                if let Some(ds) = &degrees {
                    cfg.degrees = ds.clone();
                }
                cfg.num_vars = num_vars;
                run_suite(suite, &cfg)
            })
            .collect(),
    )
}
