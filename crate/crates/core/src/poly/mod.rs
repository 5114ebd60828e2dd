//! Homogeneous forms over the rationals and the operations on them.

pub mod binary;
mod form;
mod group;
mod text;

pub use form::{monomial_rank, monomials, space_dim, Exponent, Form, FormTuple};
pub use group::{act_double, GroupElement};
pub use text::{format_form, format_form_with, parse_form, parse_form_of_degree, Alphabet, Style};
