#![allow(dead_code)]

use assocform::num::int;
use assocform::poly::binary::sylvester_resultant;
use assocform::poly::{space_dim, Form, FormTuple, GroupElement};
use assocform::Rational;
use proptest::prelude::*;

pub fn coeffs(len: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(-9i64..=9, len).prop_map(|v| v.into_iter().map(int).collect())
}

pub fn form(n: usize, d: u32) -> impl Strategy<Value = Form> {
    coeffs(space_dim(n, d)).prop_map(move |c| Form::from_coords(n, d, &c))
}

pub fn nonzero_form(n: usize, d: u32) -> impl Strategy<Value = Form> {
    form(n, d).prop_filter("nonzero", |f| !f.is_zero())
}

pub fn group(n: usize) -> impl Strategy<Value = GroupElement> {
    prop::collection::vec(-9i64..=9, n * n).prop_filter_map("singular", move |v| {
        let rows = v.chunks(n).map(|r| r.iter().copied().map(int).collect()).collect();
        GroupElement::from_rows(rows).ok()
    })
}

pub fn binary_pair(d: u32) -> impl Strategy<Value = FormTuple> {
    (nonzero_form(2, d), nonzero_form(2, d)).prop_map(|(a, b)| FormTuple::new(vec![a, b]).unwrap())
}

pub fn hsop_pair(d: u32) -> impl Strategy<Value = FormTuple> {
    binary_pair(d).prop_filter("resultant vanishes", |t| {
        let e = t.entries();
        sylvester_resultant(&e[0], &e[1]).unwrap() != int(0)
    })
}

/// Binary forms of every degree in the range.
pub fn form_in(lo: u32, hi: u32) -> impl Strategy<Value = Form> {
    (lo..=hi).prop_flat_map(|d| nonzero_form(2, d))
}
