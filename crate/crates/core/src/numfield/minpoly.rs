use crate::error::{ensure_sound, Result};
use crate::exact_poly::{Field, Polynomial, Rationals};
use crate::linalg::EchelonBasis;

use super::field::FieldElement;

/// Minimal polynomial over ℚ by linear algebra on `1, a, a², …`: the first
/// power that falls into the span of the earlier ones gives the relation.
pub fn minimal_polynomial(a: &FieldElement) -> Result<Polynomial<Rationals>> {
    let n = a.field().degree();
    let mut basis = EchelonBasis::tracking(n);
    let mut power = a.field().one();
    for _ in 0..=n {
        if let Some(relation) = basis.insert(&power.coeffs()) {
            let p = Polynomial::new(Rationals, relation);
            ensure_sound!(p.is_monic(), "minimal polynomial relation is not monic");
            return Ok(p);
        }
        power = &power * a;
    }
    Err(crate::error::Error::soundness("no linear relation among n + 1 powers"))
}
