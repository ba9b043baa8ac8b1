//! Dimension invariant `n_{lambda,mu}`, volume polynomials, and prediction
//! records for the expected geometry attached to each weight pair.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::affine_weyl::{finite_walk, longest_element, lower_set, orbit_data};
use crate::demazure::{demazure_character, weight_multiplicity};
use crate::error::{Error, Result};
use crate::exact::LaurentT;
use crate::macdonald::e_limit_q;
use crate::root_data::{rat, RootSystem};
use crate::weight::Weight;

/// Sample points for exact volume evaluation: small prime powers.
pub const SAMPLE_PRIME_POWERS: [i64; 7] = [2, 3, 4, 5, 7, 8, 9];

/// One row of the prediction table. `m` is the predicted number of
/// top-dimensional irreducible components, `n` the predicted dimension, and
/// `vol_poly` the predicted coset count as a polynomial in `t` (ascending
/// powers). Fields are rendered to strings so the row serializes
/// byte-deterministically.
#[derive(Clone, Debug, Serialize)]
pub struct PredictionRecord {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub lambda: String,
    pub mu: String,
    pub m: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vol_poly: Option<String>,
    pub checks: BTreeMap<String, bool>,
}

impl PredictionRecord {
    pub fn checks_passed(&self) -> bool {
        self.checks.values().all(|&v| v)
    }
}

/// Twice the value of Eq.-style dimension formula; callers halve it.
fn n_dim_doubled(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> i64 {
    let od = orbit_data(rs, lambda);
    let w0 = longest_element(rs);
    od.len_w() - od.len_ring() + 2 * (w0.length() as i64) - rs.two_rho_pairing(mu)
}

/// `n_{lambda,mu} = l(w_lambda)/2 - l(w_ring_lambda)/2 + l(w_o) - <mu, rho>`,
/// an exact nonnegative integer whenever `mu <= lambda`. The comparability
/// precondition is enforced through the lower set.
pub fn n_dim(rs: &RootSystem, lambda: &Weight, mu: &Weight, budget: usize) -> Result<i64> {
    let ls = lower_set(rs, lambda, budget)?;
    if !ls.contains(mu) {
        return Err(Error::Domain(format!(
            "{mu} is not below {lambda} in the Bruhat order"
        )));
    }
    n_dim_unchecked(rs, lambda, mu)
}

pub(crate) fn n_dim_unchecked(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<i64> {
    let n2 = n_dim_doubled(rs, lambda, mu);
    if n2 % 2 != 0 {
        return Err(Error::Internal(format!(
            "n_{{{lambda},{mu}}} is not an integer"
        )));
    }
    if n2 < 0 {
        return Err(Error::Internal(format!("n_{{{lambda},{mu}}} is negative")));
    }
    Ok(n2 / 2)
}

/// Exponent of the modular function on `x^mu`: `2 <mu, rho>`.
pub fn modular_exponent(rs: &RootSystem, mu: &Weight) -> i64 {
    rs.two_rho_pairing(mu)
}

/// Checks symbolically that
/// `(l(w_lambda) - l(w_ring))/2 + l(w_o) + <w_o(mu), rho> = n_{lambda,mu}`,
/// applying the longest element to `mu` for real rather than assuming
/// `w_o(rho) = -rho`.
pub fn denominator_identity_check(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> bool {
    let od = orbit_data(rs, lambda);
    let w0 = longest_element(rs);
    let lhs2 =
        od.len_w() - od.len_ring() + 2 * (w0.length() as i64) + rs.two_rho_pairing(&w0.apply(mu));
    lhs2 == n_dim_doubled(rs, lambda, mu)
}

/// `vol_poly = c_{lambda,mu}(t) * t^{n_{lambda,mu}}` where `c(t)` is the
/// `q -> oo` limit coefficient of `E_lambda`.
pub fn volume_poly(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    budget: usize,
) -> Result<LaurentT> {
    let n = n_dim(rs, lambda, mu, budget)?;
    let limited = e_limit_q(rs, lambda, budget)?;
    Ok(limited.coeff(mu).shift(2 * n))
}

/// Assemble a record from already-computed ingredients: the Demazure
/// multiplicity `m` and the `q -> oo` limit coefficient at `mu`.
pub(crate) fn build_record(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    m: i64,
    climit: &LaurentT,
) -> Result<PredictionRecord> {
    let n = n_dim_unchecked(rs, lambda, mu)?;
    let vol = climit.shift(2 * n);
    let mut checks = BTreeMap::new();
    checks.insert(
        "degree_le_n".to_string(),
        vol.max_exp().map(|e| e <= 2 * n).unwrap_or(true),
    );
    checks.insert("leading_coeff_is_m".to_string(), vol.coeff(2 * n) == rat(m));
    let evals_ok = SAMPLE_PRIME_POWERS
        .iter()
        .all(|&p| match vol.evaluate(&rat(p)) {
            Ok(v) => v.is_integer() && v >= rat(0),
            Err(_) => false,
        });
    checks.insert("eval_nonneg_integer".to_string(), evals_ok);
    checks.insert(
        "denominator_identity".to_string(),
        denominator_identity_check(rs, lambda, mu),
    );
    Ok(PredictionRecord {
        cartan_type: rs.cartan_type.to_string(),
        lambda: lambda.to_string(),
        mu: mu.to_string(),
        m,
        n: Some(n),
        vol_poly: Some(vol.to_string()),
        checks,
    })
}

/// Prediction for the pair `(lambda, mu)`; failed checks are recorded in the
/// record, not raised.
pub fn predict(
    rs: &RootSystem,
    lambda: &Weight,
    mu: &Weight,
    budget: usize,
) -> Result<PredictionRecord> {
    let ls = lower_set(rs, lambda, budget)?;
    if !ls.contains(mu) {
        return Err(Error::Domain(format!(
            "{mu} is not below {lambda} in the Bruhat order"
        )));
    }
    let m = weight_multiplicity(rs, lambda, mu);
    let limited = e_limit_q(rs, lambda, budget)?;
    build_record(rs, lambda, mu, m, &limited.coeff(mu))
}

/// Prediction for the irreducible module `V(lambda_plus)`: the multiplicity
/// comes from the antidominant Demazure module, which is all of `V`. The
/// dimension and volume fields are populated only when `mu` is comparable to
/// the antidominant weight.
pub fn predict_irreducible(
    rs: &RootSystem,
    lambda_plus: &Weight,
    mu: &Weight,
    budget: usize,
) -> Result<PredictionRecord> {
    if lambda_plus.0.iter().any(|&c| c < 0) {
        return Err(Error::Domain(format!("{lambda_plus} is not dominant")));
    }
    let (lambda_minus, _) = finite_walk(rs, lambda_plus, false);
    let m = demazure_character(rs, &lambda_minus).coeff(mu);
    let comparable = lower_set(rs, &lambda_minus, budget)?.contains(mu);
    if comparable {
        let limited = e_limit_q(rs, &lambda_minus, budget)?;
        let mut rec = build_record(rs, &lambda_minus, mu, m, &limited.coeff(mu))?;
        rec.lambda = lambda_plus.to_string();
        Ok(rec)
    } else {
        Ok(PredictionRecord {
            cartan_type: rs.cartan_type.to_string(),
            lambda: lambda_plus.to_string(),
            mu: mu.to_string(),
            m,
            n: None,
            vol_poly: None,
            checks: BTreeMap::new(),
        })
    }
}
