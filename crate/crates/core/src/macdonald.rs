//! Nonsymmetric Macdonald polynomials through the double affine Hecke
//! algebra: Demazure-Lusztig operators in the polynomial representation,
//! Cherednik operators built from antidominant translation elements, and the
//! triangular joint eigenproblem.
//!
//! Monomials live on the finite weight lattice; the `delta` bookkeeping of
//! the affine action is folded into the coefficients through `X^delta =
//! q^{-1}`, with `q`-exponents tracked in units of `1/m`.

use std::collections::BTreeMap;

use num::ToPrimitive;

use crate::affine_weyl::{bruhat_sorted, lower_set_from, orbit_data, AffineWeylElt};
use crate::error::{Error, Result};
use crate::exact::{qt_div_exact, qt_gcd, LaurentT, QtPoly, RatQT, WeightSeries};
use crate::root_data::{rat, RootSystem};
use crate::weight::Weight;

pub type QtSeries = WeightSeries<QtPoly>;

fn t_half(k: i64) -> QtPoly {
    QtPoly::monomial(0, k, rat(1))
}

/// The affine monomial `X^{mu + k alpha_i}` as a finite weight plus an
/// internal `q`-shift.
fn alpha_step(rs: &RootSystem, i: usize, mu: &Weight, k: i64) -> (Weight, i64) {
    if i == 0 {
        // alpha_0 = delta - theta, X^{k delta} = q^{-k}.
        (mu.sub(&rs.theta_weight().scaled(k)), -rs.denom_m * k)
    } else {
        (mu.add(&rs.simple_root_weight(i - 1).scaled(k)), 0)
    }
}

/// Demazure-Lusztig operator
/// `T_i f = t^{1/2} s_i f + (t^{1/2} - t^{-1/2}) (f - s_i f)/(1 - X^{-alpha_i})`,
/// for affine labels `0..=n`, via the closed per-monomial form.
pub fn demazure_lusztig(rs: &RootSystem, i: usize, f: &QtSeries) -> QtSeries {
    let m = rs.denom_m;
    let tdiff = t_half(1).sub(&t_half(-1));
    let mut out = QtSeries::zero();
    for (mu, coeff) in f.iter() {
        // c = <x, alpha_i^vee>; the q-part of x pairs to zero.
        let (c, smu, sshift) = if i == 0 {
            let p = rs.pairing(mu, &rs.theta);
            (-p, rs.theta_reflect(mu), -m * p)
        } else {
            (mu.0[i - 1], rs.simple_reflect(i - 1, mu), 0)
        };
        out.add_term(smu, coeff.mul(&t_half(1)).shift(sshift, 0));
        if c > 0 {
            for k in 0..c {
                let (w, sh) = alpha_step(rs, i, mu, -k);
                out.add_term(w, coeff.mul(&tdiff).shift(sh, 0));
            }
        } else if c < 0 {
            for k in 1..=(-c) {
                let (w, sh) = alpha_step(rs, i, mu, k);
                out.add_term(w, coeff.mul(&tdiff).neg().shift(sh, 0));
            }
        }
    }
    out
}

/// A length-zero extended element `(w, nu)` acts by
/// `e^mu -> q^{(w mu, nu)} e^{w mu}`; the exponent is `m (w mu, nu)` internal
/// units, always an integer.
pub fn extended_op(rs: &RootSystem, pi: &AffineWeylElt, f: &QtSeries) -> QtSeries {
    let mut out = QtSeries::zero();
    for (mu, coeff) in f.iter() {
        let wmu = pi.finite.apply(mu);
        let shift = rs.weight_pairing_m(&wmu, &pi.translation);
        out.add_term(wmu, coeff.shift(shift, 0));
    }
    out
}

/// Cherednik operator `Y_{w_j} = T_{tau_{-w_j}}`, stored as the left-greedy
/// reduced word of the antidominant translation plus its length-zero
/// remainder.
#[derive(Clone, Debug)]
pub struct YOperator {
    /// Letters `i_1..i_k` with `tau_{-w_j} = s_{i_1} ... s_{i_k} pi`.
    pub letters: Vec<usize>,
    pub pi: AffineWeylElt,
}

pub fn y_operator(rs: &RootSystem, j: usize) -> Result<YOperator> {
    let mut target = vec![0i64; rs.rank];
    target[j] = -1;
    let mut u = AffineWeylElt::translation(rs, &Weight(target));
    let mut letters = Vec::new();
    while u.length(rs) > 0 {
        let uinv = u.inverse(rs);
        // Left descent of u: s_i u shorter, i.e. u^{-1}(alpha_i) negative.
        let i = (0..=rs.rank)
            .find(|&i| uinv.right_descent(rs, i))
            .ok_or_else(|| Error::Internal("positive length without descent".into()))?;
        letters.push(i);
        u = AffineWeylElt::simple(rs, i).mul(rs, &u);
    }
    Ok(YOperator { letters, pi: u })
}

impl YOperator {
    /// Apply the remainder first, then the `T`s innermost-letter first.
    pub fn apply(&self, rs: &RootSystem, f: &QtSeries) -> QtSeries {
        let mut g = extended_op(rs, &self.pi, f);
        for &i in self.letters.iter().rev() {
            g = demazure_lusztig(rs, i, &g);
        }
        g
    }
}

/// Matrices of `Y_{w_1}..Y_{w_n}` on a Bruhat-sorted basis of weight
/// monomials: `Y e_col = sum_row mat[row][col] e_row`. Fails if any image
/// escapes the span or breaks upper-triangularity.
pub fn y_matrices(rs: &RootSystem, basis: &[Weight]) -> Result<Vec<Vec<Vec<QtPoly>>>> {
    let index: BTreeMap<&Weight, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let ops: Vec<YOperator> = (0..rs.rank)
        .map(|j| y_operator(rs, j))
        .collect::<Result<_>>()?;
    let nlen = basis.len();
    let mut mats = vec![vec![vec![QtPoly::zero(); nlen]; nlen]; rs.rank];
    for (col, mu) in basis.iter().enumerate() {
        let e = QtSeries::monomial(mu.clone(), QtPoly::one());
        for (j, op) in ops.iter().enumerate() {
            let image = op.apply(rs, &e);
            for (w, c) in image.iter() {
                let row = *index.get(w).ok_or_else(|| {
                    Error::Convention(format!(
                        "Y_{} applied to e^{mu} leaves the Bruhat span at e^{w}",
                        j + 1
                    ))
                })?;
                if row > col {
                    return Err(Error::Convention(format!(
                        "Y_{} is not triangular: e^{mu} -> e^{w}",
                        j + 1
                    )));
                }
                mats[j][row][col] = c.clone();
            }
        }
    }
    Ok(mats)
}

/// Solver-internal fraction whose denominator stays a list of factors.
/// Every denominator arising in the triangular solve is a difference of
/// `(q, t)`-monomials, so cancellation reduces to trial exact division and
/// the general polynomial gcd is deferred to the final canonicalization.
#[derive(Clone, Debug)]
struct FacFrac {
    num: QtPoly,
    den: Vec<QtPoly>,
}

impl FacFrac {
    fn zero() -> Self {
        FacFrac {
            num: QtPoly::zero(),
            den: Vec::new(),
        }
    }

    fn one() -> Self {
        FacFrac {
            num: QtPoly::one(),
            den: Vec::new(),
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Strip denominator factors that divide the numerator exactly.
    fn cancel(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let mut kept = Vec::new();
        for f in std::mem::take(&mut self.den) {
            match qt_div_exact(&self.num, &f) {
                Some(q) => self.num = q,
                None => kept.push(f),
            }
        }
        self.den = kept;
    }

    fn mul_poly(&self, p: &QtPoly) -> Self {
        if self.is_zero() || p.is_zero() {
            return FacFrac::zero();
        }
        let mut out = FacFrac {
            num: self.num.mul(p),
            den: self.den.clone(),
        };
        out.cancel();
        out
    }

    fn div_poly(&self, p: &QtPoly) -> Self {
        if self.is_zero() {
            return FacFrac::zero();
        }
        if let Some(q) = qt_div_exact(&self.num, p) {
            return FacFrac {
                num: q,
                den: self.den.clone(),
            };
        }
        let mut den = self.den.clone();
        den.push(p.clone());
        FacFrac {
            num: self.num.clone(),
            den,
        }
    }

    /// Sum over the multiset union of denominators: each side is scaled only
    /// by the factors it is missing.
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let mut used = vec![false; other.den.len()];
        for f in &self.den {
            if let Some(k) = (0..other.den.len()).find(|&k| !used[k] && other.den[k] == *f) {
                used[k] = true;
            }
        }
        let theirs_extra: Vec<&QtPoly> = other
            .den
            .iter()
            .zip(&used)
            .filter(|(_, u)| !**u)
            .map(|(g, _)| g)
            .collect();
        let mut used_mine = vec![false; self.den.len()];
        for f in &other.den {
            if let Some(k) = (0..self.den.len()).find(|&k| !used_mine[k] && self.den[k] == *f) {
                used_mine[k] = true;
            }
        }
        let mut a = self.num.clone();
        for g in &theirs_extra {
            a = a.mul(g);
        }
        let mut b = other.num.clone();
        for (g, u) in self.den.iter().zip(&used_mine) {
            if !u {
                b = b.mul(g);
            }
        }
        let mut den = self.den.clone();
        den.extend(theirs_extra.into_iter().cloned());
        let mut out = FacFrac {
            num: a.add(&b),
            den,
        };
        out.cancel();
        out
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&FacFrac {
            num: other.num.neg(),
            den: other.den.clone(),
        })
    }

    /// Canonicalize by cancelling against each small denominator factor in
    /// turn; the expensive full bivariate gcd is never run on the product.
    fn into_ratqt(self) -> Result<RatQT> {
        let mut num = self.num;
        let mut den = QtPoly::one();
        for mut f in self.den {
            loop {
                let g = qt_gcd(&num, &f);
                if g.num_terms() <= 1 {
                    break;
                }
                num = qt_div_exact(&num, &g)
                    .ok_or_else(|| Error::Internal("gcd does not divide numerator".into()))?;
                f = qt_div_exact(&f, &g)
                    .ok_or_else(|| Error::Internal("gcd does not divide factor".into()))?;
            }
            den = den.mul(&f);
        }
        RatQT::from_coprime(num, den)
    }
}

/// A nonsymmetric Macdonald polynomial `E_lambda` with exact rational-
/// function coefficients, expanded over the Bruhat lower set of `lambda`.
#[derive(Clone, Debug)]
pub struct MacdonaldE {
    pub lambda: Weight,
    /// Bruhat-sorted support; `lambda` is last.
    pub basis: Vec<Weight>,
    pub coeffs: WeightSeries<RatQT>,
    /// Eigenvalue of `Y_{w_j}` on `E_lambda` (a monomial in q, t).
    pub eigenvalues: Vec<QtPoly>,
}

/// Solve the joint `Y`-eigenproblem triangularly, normalized to coefficient
/// one on `e^lambda`, and verify the eigenvector exactly.
pub fn macdonald_e(rs: &RootSystem, lambda: &Weight, budget: usize) -> Result<MacdonaldE> {
    let od = orbit_data(rs, lambda);
    let set = lower_set_from(rs, &od, budget)?;
    let basis = bruhat_sorted(rs, &set);
    let nlen = basis.len();
    let top = nlen - 1;
    if basis[top] != *lambda {
        return Err(Error::Internal(format!(
            "{lambda} is not maximal in its own lower set"
        )));
    }
    let mats = y_matrices(rs, &basis)?;
    let d: Vec<QtPoly> = mats.iter().map(|m| m[top][top].clone()).collect();

    let mut x = vec![FacFrac::zero(); nlen];
    x[top] = FacFrac::one();
    for row in (0..top).rev() {
        let mut solved = false;
        for j in 0..rs.rank {
            let diag = &mats[j][row][row];
            if *diag == d[j] {
                continue;
            }
            let mut num = FacFrac::zero();
            for col in (row + 1)..nlen {
                let e = &mats[j][row][col];
                if e.is_zero() || x[col].is_zero() {
                    continue;
                }
                num = num.add(&x[col].mul_poly(e));
            }
            x[row] = num.div_poly(&d[j].sub(diag));
            solved = true;
            break;
        }
        if !solved {
            return Err(Error::Degenerate(format!(
                "no Cherednik operator separates {} from {lambda}",
                basis[row]
            )));
        }
    }

    // The solved vector must be a joint eigenvector for every Y.
    for j in 0..rs.rank {
        for row in 0..nlen {
            let mut acc = FacFrac::zero();
            for col in row..nlen {
                let e = &mats[j][row][col];
                if e.is_zero() || x[col].is_zero() {
                    continue;
                }
                acc = acc.add(&x[col].mul_poly(e));
            }
            if !acc.sub(&x[row].mul_poly(&d[j])).is_zero() {
                return Err(Error::Convention(format!(
                    "solved vector for {lambda} fails the Y_{} eigenequation at {}",
                    j + 1,
                    basis[row]
                )));
            }
        }
    }

    let mut coeffs = WeightSeries::zero();
    for (w, c) in basis.iter().zip(x) {
        coeffs.add_term(w.clone(), c.into_ratqt()?);
    }
    Ok(MacdonaldE {
        lambda: lambda.clone(),
        basis,
        coeffs,
        eigenvalues: d,
    })
}

/// `lim_{q -> oo} E_lambda`, coefficientwise, as Laurent polynomials in
/// `t^{1/2}`.
pub fn e_limit_q(
    rs: &RootSystem,
    lambda: &Weight,
    budget: usize,
) -> Result<WeightSeries<LaurentT>> {
    let e = macdonald_e(rs, lambda, budget)?;
    e.coeffs.try_map_coeffs(|c| c.limit_q_infinity())
}

/// The further `t -> oo` limit: integer weight multiplicities.
pub fn e_char_limit(rs: &RootSystem, lambda: &Weight, budget: usize) -> Result<WeightSeries<i64>> {
    e_char_limit_of(&e_limit_q(rs, lambda, budget)?)
}

/// `t -> oo` limit of an already q-limited expansion.
pub fn e_char_limit_of(limited: &WeightSeries<LaurentT>) -> Result<WeightSeries<i64>> {
    limited.try_map_coeffs(|l| {
        let v = l.limit_t_infinity()?;
        if !v.is_integer() {
            return Err(Error::Internal(format!("non-integer t -> oo limit {v}")));
        }
        v.to_integer()
            .to_i64()
            .ok_or_else(|| Error::Internal("limit overflows i64".into()))
    })
}

/// Expansion coefficient `c_{lambda, mu}` of `e^mu` in `E_lambda`.
pub fn c_coeff(rs: &RootSystem, lambda: &Weight, mu: &Weight, budget: usize) -> Result<RatQT> {
    Ok(macdonald_e(rs, lambda, budget)?.coeffs.coeff(mu))
}
