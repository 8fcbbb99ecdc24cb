use jones::KnotSpec;
use laurent::{LQuotient, Poly2};

use crate::{QTorusError, QTorusOp};

/// `q = 1` specialization of an operator.
pub fn epsilon(op: &QTorusOp) -> Poly2 {
    op.epsilon()
}

/// Divides `epsilon(op)` by the knot's A-polynomial in `Q(M)[L^{+-1}]`.
pub fn aj_divisibility(op: &QTorusOp, knot: KnotSpec) -> Result<LQuotient, QTorusError> {
    Ok(op.epsilon().div_in_l(&knot.a_polynomial())?)
}

/// Same as [`aj_divisibility`] against the A-polynomial with its `L - 1` factor removed.
pub fn aj_divisibility_nonabelian(op: &QTorusOp, knot: KnotSpec) -> Result<LQuotient, QTorusError> {
    Ok(op.epsilon().div_in_l(&knot.a_polynomial_nonabelian())?)
}

/// For `Q f = D s(M)` with `s` a multiplication operator, returns the
/// homogeneous annihilator `(s(M) L - s(qM)) Q`.
pub fn homogenize(q: &QTorusOp, s: &QTorusOp) -> QTorusOp {
    assert!(s.is_multiplication(), "inhomogeneous part must be a multiplication operator");
    let lead = s * &QTorusOp::l();
    &(&lead - &s.rescale_m(1)) * q
}
