//! Demazure operators, Demazure characters, weight multiplicities, and an
//! independent Weyl character oracle via the Freudenthal recursion.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num::{ToPrimitive, Zero};

use crate::affine_weyl::orbit_data;
use crate::error::{Error, Result};
use crate::exact::WeightSeries;
use crate::root_data::{rat, Rat, RootSystem};
use crate::weight::Weight;

/// Demazure operator `D_i f = (f - X^{-alpha_i} s_i f) / (1 - X^{-alpha_i})`,
/// evaluated monomial by monomial via the closed geometric-series form.
pub fn demazure_op(rs: &RootSystem, i: usize, f: &WeightSeries<i64>) -> WeightSeries<i64> {
    let alpha = rs.simple_root_weight(i);
    let mut out = WeightSeries::zero();
    for (mu, &c) in f.iter() {
        let pair = mu.0[i];
        if pair >= 0 {
            // e^mu + e^{mu - alpha} + ... + e^{s_i mu}
            for k in 0..=pair {
                out.add_term(mu.sub(&alpha.scaled(k)), c);
            }
        } else if pair <= -2 {
            // -(e^{mu + alpha} + ... + e^{s_i mu - alpha})
            for k in 1..=(-pair - 1) {
                out.add_term(mu.add(&alpha.scaled(k)), -c);
            }
        }
        // pair == -1 contributes nothing.
    }
    out
}

/// Character of the Demazure module indexed by `lambda`: apply the Demazure
/// operators along the minimal finite word carrying `lambda_+` to `lambda`.
pub fn demazure_character(rs: &RootSystem, lambda: &Weight) -> WeightSeries<i64> {
    let od = orbit_data(rs, lambda);
    let mut f = WeightSeries::monomial(od.lambda_plus.clone(), 1);
    for &j in od.v_word.iter().rev() {
        f = demazure_op(rs, j, &f);
    }
    f
}

/// Multiplicity of `e^mu` in the Demazure character of `lambda`.
pub fn weight_multiplicity(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> i64 {
    demazure_character(rs, lambda).coeff(mu)
}

/// Root coordinates of `x` when they are nonnegative integers, else `None`.
fn nonneg_root_coords(rs: &RootSystem, x: &Weight) -> Option<Vec<i64>> {
    let coords = rs.to_root_coords(x);
    let mut out = Vec::with_capacity(coords.len());
    for c in &coords {
        if !c.is_integer() || c < &Rat::zero() {
            return None;
        }
        out.push(c.to_integer().to_i64()?);
    }
    Some(out)
}

/// Character of the irreducible module `V(lambda_plus)` by the Freudenthal
/// multiplicity recursion. Independent of the Demazure operator machinery.
pub fn weyl_character(rs: &RootSystem, lambda_plus: &Weight) -> Result<WeightSeries<i64>> {
    if lambda_plus.0.iter().any(|&c| c < 0) {
        return Err(Error::Domain(format!(
            "weyl_character expects a dominant weight, got {lambda_plus}"
        )));
    }
    let n = rs.rank;
    let rho = Weight(vec![1; n]);

    // Dominant weights of V(lambda_plus): dominant mu with lambda_plus - mu a
    // nonnegative integer combination of simple roots. The 2<mu, rho> bound
    // keeps the search box finite.
    let t_max = rs.two_rho_pairing(lambda_plus);
    let mut dominant: Vec<(i64, Weight)> = Vec::new();
    let mut coords = vec![0i64; n];
    'outer: loop {
        let mu = Weight(coords.clone());
        if let Some(rc) = nonneg_root_coords(rs, &lambda_plus.sub(&mu)) {
            dominant.push((rc.iter().sum(), mu));
        }
        let mut i = 0;
        loop {
            if i == n {
                break 'outer;
            }
            coords[i] += 1;
            if rs.two_rho_pairing(&Weight(coords.clone())) <= t_max {
                break;
            }
            coords[i] = 0;
            i += 1;
        }
    }
    // Increasing distance from lambda_plus; the recursion only consults
    // strictly smaller levels.
    dominant.sort();

    let lam_rho = lambda_plus.add(&rho);
    let norm_top = rs.weight_pairing(&lam_rho, &lam_rho);
    let mut mult: BTreeMap<Weight, i64> = BTreeMap::new();
    for (level, mu) in &dominant {
        if *level == 0 {
            mult.insert(mu.clone(), 1);
            continue;
        }
        let mut num = Rat::zero();
        for root in &rs.positive_roots {
            let alpha = Weight(root.weight_coords.clone());
            let mut k = 1i64;
            loop {
                let nu = mu.add(&alpha.scaled(k));
                let (nu_plus, _) = crate::affine_weyl::finite_walk(rs, &nu, true);
                match mult.get(&nu_plus) {
                    Some(&m) => {
                        num += rat(2 * m) * rs.weight_pairing(&nu, &alpha);
                    }
                    // Weights along a root string are contiguous.
                    None => break,
                }
                k += 1;
            }
        }
        let mu_rho = mu.add(&rho);
        let den = &norm_top - rs.weight_pairing(&mu_rho, &mu_rho);
        if den.is_zero() {
            return Err(Error::Internal(format!(
                "Freudenthal denominator vanished at {mu}"
            )));
        }
        let m = num / den;
        if !m.is_integer() {
            return Err(Error::Internal(format!(
                "Freudenthal gave non-integer multiplicity at {mu}"
            )));
        }
        let m = m
            .to_integer()
            .to_i64()
            .ok_or_else(|| Error::Internal("Freudenthal multiplicity overflows i64".into()))?;
        mult.insert(mu.clone(), m);
    }

    // Spread each dominant multiplicity over its Weyl orbit.
    let mut character = WeightSeries::zero();
    for (mu, &m) in &mult {
        let mut seen: BTreeSet<Weight> = BTreeSet::new();
        let mut queue = VecDeque::from([mu.clone()]);
        seen.insert(mu.clone());
        while let Some(x) = queue.pop_front() {
            for i in 0..n {
                let y = rs.simple_reflect(i, &x);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        for x in seen {
            character.add_term(x, m);
        }
    }
    Ok(character)
}
