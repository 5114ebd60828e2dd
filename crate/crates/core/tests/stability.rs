mod common;

use assocform::num::{frac, int};
use assocform::poly::{act_double, Form, FormTuple, GroupElement};
use assocform::stability::{
    form_hm_index, monomial_pencil, recheck_certificate, PairPoint,
};
use assocform::{
    form_stability, hm_index, nabla, one_ps_limit, subspace_stability, wprime_membership, Frame,
    Matrix, Rational, Subspace, Verdict,
};
use common::*;
use proptest::prelude::*;

fn pencil(m: u32) -> impl Strategy<Value = Subspace> {
    (nonzero_form(2, m), nonzero_form(2, m))
        .prop_map(move |(a, b)| Subspace::span(2, m, &[a, b]).unwrap())
        .prop_filter("dependent", |w| w.dim() == 2)
}

/// Pencils through a common point of high order, so unstable ones are common.
fn flagged(m: u32) -> impl Strategy<Value = Subspace> {
    (1..m, nonzero_form(2, 1), form(2, m), form(2, m)).prop_flat_map(move |(i, l, a, b)| {
        (Just(i), Just(l), Just(a), Just(b), i + 1..=m)
    })
    .prop_filter_map("dependent", move |(i, l, a, b, j)| {
        let ra = Form::from_coords(2, m - i, &a.coords()[..(m - i + 1) as usize]);
        let rb = Form::from_coords(2, m - j, &b.coords()[..(m - j + 1) as usize]);
        let w = Subspace::span(2, m, &[&l.pow(i) * &ra, &l.pow(j) * &rb]).ok()?;
        (w.dim() == 2).then_some(w)
    })
}

fn any_pencil(m: u32) -> impl Strategy<Value = Subspace> {
    prop_oneof![pencil(m), flagged(m)]
}

fn transform(w: &Subspace, h: &GroupElement) -> Subspace {
    w.map(|p| h.act_dual(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// Moving the pencil by `h` and the frame by `h^-1` leaves the index fixed.
    #[test]
    fn frame_covariance(w in any_pencil(4), h in group(2), f in group(2)) {
        let frame = Frame::new(f.clone()).unwrap();
        let moved = transform(&w, &h);
        let m2 = f.matrix() * h.inverse_matrix();
        let frame2 = Frame::from_matrix(m2).unwrap();
        prop_assert_eq!(hm_index(&w, &frame).unwrap(), hm_index(&moved, &frame2).unwrap());
    }

    #[test]
    fn certificate_is_consistent(w in any_pencil(5)) {
        let c = subspace_stability(&w).unwrap();
        prop_assert!(recheck_certificate(&w, &c).unwrap());
        let m = 5i64;
        let score = i64::from(c.witness.i + c.witness.j);
        match c.verdict {
            Verdict::Unstable => {
                prop_assert!(score > m);
                prop_assert_eq!(c.mu, Some(2 * (m - score)));
            }
            Verdict::StrictlySemistable => prop_assert_eq!(score, m),
            Verdict::Stable => prop_assert!(score < m),
        }
        if let Some(frame) = &c.frame {
            prop_assert_eq!(Some(hm_index(&w, frame).unwrap().mu), c.mu);
        }
    }

    #[test]
    fn verdict_is_invariant(w in any_pencil(4), h in group(2)) {
        let a = subspace_stability(&w).unwrap();
        let b = subspace_stability(&transform(&w, &h)).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.polystable, b.polystable);
    }

    #[test]
    fn semistable_pencils_pass_random_frames(w in any_pencil(5), f in group(2)) {
        let c = subspace_stability(&w).unwrap();
        let mu = hm_index(&w, &Frame::new(f).unwrap()).unwrap().mu;
        if c.verdict.is_semistable() {
            prop_assert!(mu >= 0);
        }
        if c.verdict == Verdict::Stable {
            prop_assert!(mu > 0);
        }
    }

    /// The limit is spanned by monomials, so the diagonal torus fixes it, and
    /// it agrees with the dominant Plücker coordinate of the pencil flowed to
    /// a small parameter value.
    #[test]
    fn limit_matches_small_parameter(w in any_pencil(4), f in group(2)) {
        let frame = Frame::new(f).unwrap();
        let Ok(lim) = one_ps_limit(&w, &frame) else {
            prop_assert!(hm_index(&w, &frame).unwrap().mu < 0);
            return Ok(());
        };
        let torus = GroupElement::diagonal(&[int(3), frac(1, 3)]).unwrap();
        prop_assert_eq!(&transform(&lim, &torus), &lim);

        let moved = frame.apply_subspace(&w);
        let rows = moved.matrix();
        let m = 4usize;
        let t = frac(1, 1_000_000_000);
        let scaled: Vec<Vec<Rational>> = (0..2)
            .map(|r| (0..=m).map(|a| &rows[(r, a)] * num_traits::pow(t.clone(), a)).collect())
            .collect();
        let mut best = (int(0), 0, 0);
        for a in 0..=m {
            for b in a + 1..=m {
                let p = &scaled[0][a] * &scaled[1][b] - &scaled[0][b] * &scaled[1][a];
                let p = if p < int(0) { -p } else { p };
                if p > best.0 {
                    best = (p, a, b);
                }
            }
        }
        let (_, a, b) = best;
        let mono = |k: usize| Form::monomial(vec![(m - k) as u32, k as u32], int(1));
        prop_assert_eq!(lim, Subspace::span(2, m as u32, &[mono(a), mono(b)]).unwrap());
    }

    /// A form is semistable in a frame exactly when its gradient pencil is.
    #[test]
    fn gradient_frames_agree(f in form_in(4, 7), g in group(2)) {
        let Ok(w) = nabla(&f) else { return Ok(()) };
        let frame = Frame::new(g).unwrap();
        let a = form_hm_index(&f, &frame).unwrap() >= 0;
        let b = hm_index(&w, &frame).unwrap().mu >= 0;
        prop_assert_eq!(a, b);
    }

    #[test]
    fn form_verdict_matches_gradient(f in form_in(4, 7)) {
        let Ok(w) = nabla(&f) else { return Ok(()) };
        let a = form_stability(&f).unwrap();
        let b = subspace_stability(&w).unwrap();
        prop_assert_eq!(a.verdict.is_semistable(), b.verdict.is_semistable());
        if a.polystable {
            prop_assert!(b.polystable);
        }
    }

    #[test]
    fn wprime_is_invariant(a in form(2, 5), b in form(2, 5), g1 in group(2), g2 in group(2)) {
        let t = FormTuple::new(vec![a, b]).unwrap();
        let moved = act_double(&g1, &g2, &t).unwrap().into_entries();
        let (a, b) = (t.entries()[0].clone(), t.entries()[1].clone());
        let r1 = wprime_membership(&PairPoint::new(a, b).unwrap()).unwrap();
        let r2 = wprime_membership(&PairPoint::new(moved[0].clone(), moved[1].clone()).unwrap()).unwrap();
        prop_assert_eq!(r1.member, r2.member);
        prop_assert_eq!(r1.rank, r2.rank);
    }

    #[test]
    fn gradients_lie_in_wprime(f in form_in(5, 7)) {
        let g = f.gradient().into_entries();
        let r = wprime_membership(&PairPoint::new(g[0].clone(), g[1].clone()).unwrap()).unwrap();
        prop_assert!(r.member);
    }
}

#[test]
fn monomial_pencils() {
    for m in 3..=7u32 {
        for i in 0..m.div_ceil(2) {
            let w = monomial_pencil(m, i);
            let c = subspace_stability(&w).unwrap();
            assert_eq!(c.verdict, Verdict::StrictlySemistable, "m={m} i={i}");
            assert!(c.polystable);
            assert_eq!(hm_index(&w, &Frame::identity()).unwrap().mu, 0);
        }
    }
    let swap = Matrix::from_rows(2, vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
    assert_eq!(Frame::from_matrix(swap).unwrap(), Frame::swap());
}
