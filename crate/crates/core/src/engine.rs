//! Shared computation context: one root system plus memoized characters and
//! Macdonald polynomials, safe to use from parallel batch jobs.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::affine_weyl::{lower_set, orbit_data};
use crate::batch::{self, VerifyReport};
use crate::demazure::{demazure_character, weyl_character};
use crate::error::{Error, Result};
use crate::exact::{LaurentT, WeightSeries};
use crate::geometry::{self, PredictionRecord};
use crate::macdonald::{e_char_limit_of, macdonald_e, MacdonaldE};
use crate::root_data::{CartanType, Dominance, RootSystem};
use crate::weight::Weight;

/// Default bound on `ell(w_lambda)` for lower-set enumeration.
pub const DEFAULT_LOWER_SET_BUDGET: usize = 16;
/// Default verification/ball radius.
pub const DEFAULT_RADIUS: i64 = 8;

pub struct Engine {
    rs: RootSystem,
    pub lower_set_budget: usize,
    chars: RwLock<HashMap<Weight, Arc<WeightSeries<i64>>>>,
    epolys: RwLock<HashMap<Weight, Arc<MacdonaldE>>>,
}

impl Engine {
    pub fn new(ct: CartanType) -> Result<Self> {
        Ok(Engine {
            rs: RootSystem::build(ct)?,
            lower_set_budget: DEFAULT_LOWER_SET_BUDGET,
            chars: RwLock::new(HashMap::new()),
            epolys: RwLock::new(HashMap::new()),
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Largest radius accepted by `verify` and batch jobs.
    pub fn radius_ceiling(&self) -> i64 {
        if self.rs.rank <= 2 {
            12
        } else {
            8
        }
    }

    fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rs.rank {
            return Err(Error::Parse(format!(
                "weight {w} has {} coordinates, {} expects {}",
                w.rank(),
                self.rs.cartan_type,
                self.rs.rank
            )));
        }
        Ok(())
    }

    pub fn character(&self, lambda: &Weight) -> Result<Arc<WeightSeries<i64>>> {
        self.check_weight(lambda)?;
        if let Some(c) = self.chars.read().unwrap().get(lambda) {
            return Ok(c.clone());
        }
        let c = Arc::new(demazure_character(&self.rs, lambda));
        self.chars
            .write()
            .unwrap()
            .entry(lambda.clone())
            .or_insert(c.clone());
        Ok(c)
    }

    pub fn weight_multiplicity(&self, lambda: &Weight, mu: &Weight) -> Result<i64> {
        self.check_weight(mu)?;
        Ok(self.character(lambda)?.coeff(mu))
    }

    pub fn macdonald(&self, lambda: &Weight) -> Result<Arc<MacdonaldE>> {
        self.check_weight(lambda)?;
        if let Some(e) = self.epolys.read().unwrap().get(lambda) {
            return Ok(e.clone());
        }
        let e = Arc::new(macdonald_e(&self.rs, lambda, self.lower_set_budget)?);
        self.epolys
            .write()
            .unwrap()
            .entry(lambda.clone())
            .or_insert(e.clone());
        Ok(e)
    }

    /// `lim_{q -> oo} E_lambda`.
    pub fn e_limit(&self, lambda: &Weight) -> Result<WeightSeries<LaurentT>> {
        self.macdonald(lambda)?
            .coeffs
            .try_map_coeffs(|c| c.limit_q_infinity())
    }

    /// The double limit: first `q -> oo`, then `t -> oo`.
    pub fn e_char(&self, lambda: &Weight) -> Result<WeightSeries<i64>> {
        e_char_limit_of(&self.e_limit(lambda)?)
    }

    pub fn predict(&self, lambda: &Weight, mu: &Weight) -> Result<PredictionRecord> {
        self.check_weight(mu)?;
        let e = self.macdonald(lambda)?;
        if !e.basis.contains(mu) {
            return Err(Error::Domain(format!(
                "{mu} is not below {lambda} in the Bruhat order"
            )));
        }
        let m = self.weight_multiplicity(lambda, mu)?;
        let climit = e.coeffs.coeff(mu).limit_q_infinity()?;
        geometry::build_record(&self.rs, lambda, mu, m, &climit)
    }

    /// Prediction rows for every `mu` in the lower set of `lambda`, in the
    /// Bruhat-sorted order.
    pub fn predict_all(&self, lambda: &Weight) -> Result<Vec<PredictionRecord>> {
        let e = self.macdonald(lambda)?;
        e.basis.iter().map(|mu| self.predict(lambda, mu)).collect()
    }

    pub fn predict_irreducible(
        &self,
        lambda_plus: &Weight,
        mu: &Weight,
    ) -> Result<PredictionRecord> {
        self.check_weight(lambda_plus)?;
        self.check_weight(mu)?;
        geometry::predict_irreducible(&self.rs, lambda_plus, mu, self.lower_set_budget)
    }

    pub fn ball(&self, radius: i64) -> Result<Vec<Weight>> {
        if radius < 0 || radius > self.radius_ceiling() {
            return Err(Error::Budget(format!(
                "radius {radius} outside 0..={}",
                self.radius_ceiling()
            )));
        }
        Ok(batch::ball(&self.rs, radius))
    }

    /// Run the full invariant suite over the ball of the given radius.
    pub fn verify(&self, radius: i64) -> Result<VerifyReport> {
        let ball = self.ball(radius)?;
        let per_lambda = batch::map_items(&ball, |lam| self.verify_lambda(lam));
        let mut report = VerifyReport {
            cartan_type: self.rs.cartan_type.to_string(),
            radius,
            lambdas: ball.len(),
            pairs: 0,
            checks: Default::default(),
            notes: Vec::new(),
            failures: Vec::new(),
            pass: true,
        };
        for lo in per_lambda {
            report.pairs += lo.pairs;
            for (name, pass, msg) in lo.outcomes {
                report.record(&name, pass);
                if !pass {
                    report.failures.push(msg);
                }
            }
            report.notes.extend(lo.notes);
        }
        Ok(report)
    }

    fn verify_lambda(&self, lam: &Weight) -> LambdaOutcome {
        let rs = &self.rs;
        let mut o = LambdaOutcome::default();
        let od = orbit_data(rs, lam);

        let tau = rs.translation_length(lam);
        o.push(
            "length_identity",
            tau == od.len_w() + od.len_ring() && od.w_elt.length(rs) == od.len_w(),
            format!("length identity fails at {lam}"),
        );
        o.push(
            "lemma1_inequality",
            rs.two_rho_pairing(lam) <= od.len_w() + od.len_ring(),
            format!("Lemma 1 inequality fails at {lam}"),
        );

        let chi = match self.character(lam) {
            Ok(c) => c,
            Err(e) => {
                o.push("character", false, format!("character({lam}): {e}"));
                return o;
            }
        };

        // Oracle agreement on antidominant weights: the Demazure module is
        // the full irreducible module.
        if matches!(rs.dominance(lam), Dominance::Antidominant | Dominance::Both) {
            match weyl_character(rs, &od.lambda_plus) {
                Ok(oracle) => o.push(
                    "oracle_agreement",
                    *chi == oracle,
                    format!("Demazure character differs from Freudenthal at {lam}"),
                ),
                Err(e) => o.push("oracle_agreement", false, format!("oracle({lam}): {e}")),
            }
        }

        match self.macdonald(lam) {
            Err(e) => {
                for name in ["triangularity", "finite_limits", "char_limit_identity"] {
                    o.push(name, false, format!("E_{lam}: {e}"));
                }
            }
            Ok(epoly) => {
                let lset = lower_set(rs, lam, self.lower_set_budget).unwrap_or_default();
                let triangular = epoly.coeffs.support().all(|mu| lset.contains(mu))
                    && epoly.coeffs.coeff(lam) == crate::exact::RatQT::one();
                o.push(
                    "triangularity",
                    triangular,
                    format!("support(E_{lam}) escapes its lower set"),
                );

                match self.e_limit(lam) {
                    Err(e) => {
                        o.push("finite_limits", false, format!("lim_q E_{lam}: {e}"));
                        o.push("char_limit_identity", false, format!("E_{lam}: {e}"));
                    }
                    Ok(elim) => {
                        o.push(
                            "finite_limits",
                            elim.iter().all(|(_, c)| c.is_poly_in_t_inverse()),
                            format!("a coefficient of E_{lam}(t) is not a polynomial in 1/t"),
                        );
                        match e_char_limit_of(&elim) {
                            Err(e) => o.push(
                                "char_limit_identity",
                                false,
                                format!("lim_t E_{lam}(t): {e}"),
                            ),
                            Ok(echar) => o.push(
                                "char_limit_identity",
                                echar == *chi,
                                format!("lim E_{lam} differs from the Demazure character"),
                            ),
                        }

                        // Pairwise checks over the lower set.
                        for mu in &epoly.basis {
                            o.pairs += 1;
                            match geometry::n_dim_unchecked(rs, lam, mu) {
                                Err(e) => o.push(
                                    "n_integral_nonneg",
                                    false,
                                    format!("n_{{{lam},{mu}}}: {e}"),
                                ),
                                Ok(n) => {
                                    o.push("n_integral_nonneg", true, String::new());
                                    if n == 0 {
                                        o.notes.push(format!("n = 0 at ({lam}, {mu})"));
                                    }
                                }
                            }
                            o.push(
                                "denominator_identity",
                                geometry::denominator_identity_check(rs, lam, mu),
                                format!("denominator identity fails at ({lam}, {mu})"),
                            );
                            let m = chi.coeff(mu);
                            let rec = epoly
                                .coeffs
                                .coeff(mu)
                                .limit_q_infinity()
                                .map_err(Error::from)
                                .and_then(|cl| geometry::build_record(rs, lam, mu, m, &cl));
                            match rec {
                                Err(e) => o.push(
                                    "eq9_leading_coeff",
                                    false,
                                    format!("vol({lam}, {mu}): {e}"),
                                ),
                                Ok(rec) => o.push(
                                    "eq9_leading_coeff",
                                    rec.checks_passed(),
                                    format!("volume checks fail at ({lam}, {mu})"),
                                ),
                            }
                        }
                    }
                }
            }
        }
        o
    }
}

#[derive(Default)]
struct LambdaOutcome {
    pairs: usize,
    outcomes: Vec<(String, bool, String)>,
    notes: Vec<String>,
}

impl LambdaOutcome {
    fn push(&mut self, name: &str, pass: bool, msg: String) {
        self.outcomes.push((name.to_string(), pass, msg));
    }
}
