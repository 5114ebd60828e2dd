pub mod apolarity;
pub mod error;
pub mod linalg;
pub mod num;
pub mod poly;
pub mod quotient;
pub mod sample;
pub mod stability;
pub mod subspace;
pub mod verify;

pub use apolarity::{associated_form, associated_form_tuple, b_map, DualForm};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use num::Rational;
pub use poly::{Form, FormTuple, GroupElement};
pub use quotient::{GradedQuotient, HilbertFunction};
pub use stability::{
    form_stability, hm_index, nabla, one_ps_limit, subspace_stability, wprime_membership,
    FormCertificate, Frame, HmIndex, StabilityCertificate, Verdict,
};
pub use subspace::{subspace_equal, Subspace};
pub use verify::{run_suite, Suite, SuiteReport, VerifyConfig};
