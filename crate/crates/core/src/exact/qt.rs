//! Bivariate Laurent polynomials and rational functions in `q^{1/m}` and
//! `t^{1/2}`, with a canonical fraction form based on a primitive-PRS gcd.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::laurent::LaurentT;
use crate::root_data::{rat, Rat};

/// Sparse bivariate Laurent polynomial. Keys are `(q_units, t_doubled)`:
/// the first entry counts powers of `q^{1/m}` (with `m` fixed by the root
/// system and supplied only for display), the second counts powers of
/// `t^{1/2}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QtPoly {
    terms: BTreeMap<(i64, i64), Rat>,
}

impl QtPoly {
    pub fn zero() -> Self {
        QtPoly::default()
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rat(rat(c))
    }

    pub fn monomial(q_units: i64, t_doubled: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((q_units, t_doubled), c);
        }
        QtPoly { terms }
    }

    pub fn from_laurent_t(p: &LaurentT) -> Self {
        let mut out = QtPoly::zero();
        for (&k, c) in p.terms() {
            out.insert(0, k, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, q_units: i64, t_doubled: i64) -> Rat {
        self.terms
            .get(&(q_units, t_doubled))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    fn insert(&mut self, q: i64, t: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(q, t)) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&(q, t));
                }
            }
            None => {
                self.terms.insert((q, t), c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(q, t), c) in &other.terms {
            out.insert(q, t, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        QtPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = QtPoly::zero();
        for (&(q1, t1), c1) in &self.terms {
            for (&(q2, t2), c2) in &other.terms {
                out.insert(q1 + q2, t1 + t2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return QtPoly::zero();
        }
        QtPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Multiply by the monomial `q^{dq} t^{dt}` (in internal units).
    pub fn shift(&self, dq: i64, dt: i64) -> Self {
        QtPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(q, t), c)| ((q + dq, t + dt), c.clone()))
                .collect(),
        }
    }

    pub fn min_q(&self) -> Option<i64> {
        self.terms.keys().map(|&(q, _)| q).min()
    }

    pub fn max_q(&self) -> Option<i64> {
        self.terms.keys().map(|&(q, _)| q).max()
    }

    pub fn min_t(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, t)| t).min()
    }

    pub fn max_t(&self) -> Option<i64> {
        self.terms.keys().map(|&(_, t)| t).max()
    }

    /// Coefficient of `q^{q_units}` as a Laurent polynomial in `t^{1/2}`.
    pub fn q_slice(&self, q_units: i64) -> LaurentT {
        let mut out = LaurentT::zero();
        for (&(q, t), c) in &self.terms {
            if q == q_units {
                out = out.add(&LaurentT::monomial(t, c.clone()));
            }
        }
        out
    }

    /// `true` when no `q` appears at all.
    pub fn is_t_only(&self) -> bool {
        self.terms.keys().all(|&(q, _)| q == 0)
    }

    pub fn to_laurent_t(&self) -> Result<LaurentT> {
        if !self.is_t_only() {
            return Err(Error::Internal(format!(
                "expected a polynomial in t only, got {}",
                self.format(1)
            )));
        }
        Ok(self.q_slice(0))
    }

    /// Render with `q`-exponents shown as multiples of `1/m` in lowest terms.
    pub fn format(&self, m: i64) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (&(q, t), c) in &self.terms {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors = Vec::new();
            if q != 0 {
                factors.push(format!("q^{{{}}}", fmt_frac(q, m)));
            }
            if t != 0 {
                factors.push(format!("t^{{{}}}", fmt_frac(t, 2)));
            }
            if factors.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&factors.join("*"));
            } else {
                out.push_str(&format!("{}*{}", mag, factors.join("*")));
            }
        }
        out
    }
}

fn fmt_frac(num: i64, den: i64) -> String {
    let g = gcd_i64(num.unsigned_abs(), den.unsigned_abs()) as i64;
    let (n, d) = (num / g, den / g);
    if d == 1 {
        format!("{n}")
    } else {
        format!("{n}/{d}")
    }
}

fn gcd_i64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a.max(1)
}

// ---------------------------------------------------------------------------
// Dense helpers for gcd and exact division. `Uni` is a polynomial in q with
// ascending rational coefficients; `Bi` is a polynomial in t whose
// coefficients are `Uni`. Both assume nonnegative exponents (callers shift
// Laurent supports to zero first).
// ---------------------------------------------------------------------------

type Uni = Vec<Rat>;

fn uni_trim(p: &mut Uni) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn uni_is_zero(p: &Uni) -> bool {
    p.is_empty()
}

fn uni_deg(p: &Uni) -> usize {
    p.len().saturating_sub(1)
}

fn uni_add(a: &Uni, b: &Uni) -> Uni {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    uni_trim(&mut out);
    out
}

fn uni_neg(a: &Uni) -> Uni {
    a.iter().map(|c| -c.clone()).collect()
}

fn uni_mul(a: &Uni, b: &Uni) -> Uni {
    if uni_is_zero(a) || uni_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    uni_trim(&mut out);
    out
}

/// Quotient and remainder over the field of rationals.
fn uni_divrem(a: &Uni, b: &Uni) -> (Uni, Uni) {
    assert!(!uni_is_zero(b), "division by zero polynomial");
    let mut rem = a.clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quo = vec![Rat::zero(); rem.len() - b.len() + 1];
    let lead = b.last().unwrap().clone();
    while rem.len() >= b.len() && !uni_is_zero(&rem) {
        let shift = rem.len() - b.len();
        let c = rem.last().unwrap() / &lead;
        quo[shift] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            let delta = bc * &c;
            rem[shift + j] -= delta;
        }
        uni_trim(&mut rem);
    }
    uni_trim(&mut quo);
    (quo, rem)
}

/// Monic gcd over the rationals.
fn uni_gcd(a: &Uni, b: &Uni) -> Uni {
    let mut a = a.clone();
    let mut b = b.clone();
    while !uni_is_zero(&b) {
        let (_, r) = uni_divrem(&a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

type Bi = Vec<Uni>;

fn bi_trim(p: &mut Bi) {
    while p.last().map(uni_is_zero).unwrap_or(false) {
        p.pop();
    }
}

fn bi_is_zero(p: &Bi) -> bool {
    p.is_empty()
}

fn bi_deg(p: &Bi) -> usize {
    p.len().saturating_sub(1)
}

fn bi_mul_uni(p: &Bi, c: &Uni) -> Bi {
    let mut out: Bi = p.iter().map(|u| uni_mul(u, c)).collect();
    bi_trim(&mut out);
    out
}

fn bi_sub(a: &Bi, b: &Bi) -> Bi {
    let mut out = vec![Vec::new(); a.len().max(b.len())];
    for (i, u) in a.iter().enumerate() {
        out[i] = u.clone();
    }
    for (i, u) in b.iter().enumerate() {
        out[i] = uni_add(&out[i], &uni_neg(u));
    }
    bi_trim(&mut out);
    out
}

/// Content in q: the monic gcd of the t-coefficients.
fn bi_content(p: &Bi) -> Uni {
    let mut g: Uni = Vec::new();
    for u in p {
        if !uni_is_zero(u) {
            g = if uni_is_zero(&g) {
                let mut u = u.clone();
                let lead = u.last().unwrap().clone();
                for c in &mut u {
                    *c /= &lead;
                }
                u
            } else {
                uni_gcd(&g, u)
            };
            if uni_deg(&g) == 0 {
                break;
            }
        }
    }
    g
}

fn bi_primitive(p: &Bi) -> Bi {
    if bi_is_zero(p) {
        return Vec::new();
    }
    let c = bi_content(p);
    let mut out: Bi = if uni_deg(&c) == 0 {
        p.clone()
    } else {
        p.iter()
            .map(|u| {
                if uni_is_zero(u) {
                    Vec::new()
                } else {
                    let (q, r) = uni_divrem(u, &c);
                    debug_assert!(uni_is_zero(&r));
                    q
                }
            })
            .collect()
    };
    bi_trim(&mut out);
    // Strip the rational scalar content too: pseudo-remainder sequences blow
    // up coefficient sizes multiplicatively otherwise.
    if let Some(lead) = out.last().and_then(|u| u.last()).cloned() {
        if !lead.is_one() {
            for u in &mut out {
                for x in u.iter_mut() {
                    *x /= &lead;
                }
            }
        }
    }
    out
}

/// Pseudo-remainder of `a` by `b` in t, with coefficients in Q[q].
fn bi_pseudo_rem(a: &Bi, b: &Bi) -> Bi {
    let lead_b = b.last().unwrap().clone();
    let mut r = a.clone();
    while !bi_is_zero(&r) && bi_deg(&r) >= bi_deg(b) {
        let shift = bi_deg(&r) - bi_deg(b);
        let lead_r = r.last().unwrap().clone();
        let mut shifted_b: Bi = vec![Vec::new(); shift];
        shifted_b.extend(b.iter().cloned());
        r = bi_sub(&bi_mul_uni(&r, &lead_b), &bi_mul_uni(&shifted_b, &lead_r));
    }
    r
}

/// Primitive-PRS gcd in (Q[q])[t], up to a rational unit.
fn bi_gcd(a: &Bi, b: &Bi) -> Bi {
    if bi_is_zero(a) {
        return b.clone();
    }
    if bi_is_zero(b) {
        return a.clone();
    }
    if bi_deg(a) == 0 && bi_deg(b) == 0 {
        return vec![uni_gcd(&a[0], &b[0])];
    }
    let content = uni_gcd(&bi_content(a), &bi_content(b));
    let mut a = bi_primitive(a);
    let mut b = bi_primitive(b);
    if bi_deg(&a) < bi_deg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = bi_pseudo_rem(&a, &b);
        if bi_is_zero(&r) {
            break;
        }
        a = b;
        b = bi_primitive(&r);
    }
    bi_mul_uni(&bi_primitive(&b), &content)
}

/// Exact division in (Q[q])[t]; `None` when the division is not exact.
fn bi_div_exact(a: &Bi, b: &Bi) -> Option<Bi> {
    if bi_is_zero(a) {
        return Some(Vec::new());
    }
    if bi_is_zero(b) {
        return None;
    }
    let lead_b = b.last().unwrap();
    let mut rem = a.clone();
    let mut quo: Bi = vec![Vec::new(); bi_deg(a).saturating_sub(bi_deg(b)) + 1];
    while !bi_is_zero(&rem) {
        if bi_deg(&rem) < bi_deg(b) {
            return None;
        }
        let shift = bi_deg(&rem) - bi_deg(b);
        let (qc, qr) = uni_divrem(rem.last().unwrap(), lead_b);
        if !uni_is_zero(&qr) {
            return None;
        }
        quo[shift] = uni_add(&quo[shift], &qc);
        let mut shifted_b: Bi = vec![Vec::new(); shift];
        shifted_b.extend(b.iter().cloned());
        rem = bi_sub(&rem, &bi_mul_uni(&shifted_b, &qc));
    }
    bi_trim(&mut quo);
    Some(quo)
}

/// Convert an ordinary (nonnegative-exponent) `QtPoly` to dense form.
fn to_bi(p: &QtPoly) -> Bi {
    if p.is_zero() {
        return Vec::new();
    }
    let qmax = p.max_q().unwrap() as usize;
    let tmax = p.max_t().unwrap() as usize;
    let mut out: Bi = vec![vec![Rat::zero(); qmax + 1]; tmax + 1];
    for (&(q, t), c) in &p.terms {
        debug_assert!(q >= 0 && t >= 0);
        out[t as usize][q as usize] = c.clone();
    }
    for u in &mut out {
        uni_trim(u);
    }
    bi_trim(&mut out);
    out
}

fn from_bi(p: &Bi) -> QtPoly {
    let mut out = QtPoly::zero();
    for (t, u) in p.iter().enumerate() {
        for (q, c) in u.iter().enumerate() {
            out.insert(q as i64, t as i64, c.clone());
        }
    }
    out
}

/// Exact division of (Laurent) bivariate polynomials; `None` when not exact.
pub fn qt_div_exact(a: &QtPoly, b: &QtPoly) -> Option<QtPoly> {
    if a.is_zero() {
        return Some(QtPoly::zero());
    }
    if b.is_zero() {
        return None;
    }
    let (aq, at) = (a.min_q().unwrap(), a.min_t().unwrap());
    let (bq, bt) = (b.min_q().unwrap(), b.min_t().unwrap());
    let qb = bi_div_exact(&to_bi(&a.shift(-aq, -at)), &to_bi(&b.shift(-bq, -bt)))?;
    Some(from_bi(&qb).shift(aq - bq, at - bt))
}

/// Gcd of (Laurent) bivariate polynomials, up to a monomial and rational
/// unit. Units come back as `1`-term polynomials.
pub fn qt_gcd(a: &QtPoly, b: &QtPoly) -> QtPoly {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let a0 = a.shift(-a.min_q().unwrap(), -a.min_t().unwrap());
    let b0 = b.shift(-b.min_q().unwrap(), -b.min_t().unwrap());
    from_bi(&bi_gcd(&to_bi(&a0), &to_bi(&b0)))
}

// ---------------------------------------------------------------------------
// Canonical fractions
// ---------------------------------------------------------------------------

/// Rational function in `q^{1/m}, t^{1/2}`, stored as a reduced fraction.
///
/// Canonical form: the numerator carries a single monomial unit times an
/// ordinary polynomial with nonzero constant term structure (no common
/// monomial with the denominator); numerator and denominator are coprime and
/// the denominator's lex-leading coefficient is 1. Equal values compare equal
/// structurally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatQT {
    num: QtPoly,
    den: QtPoly,
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT {
            num: QtPoly::zero(),
            den: QtPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatQT {
            num: QtPoly::one(),
            den: QtPoly::one(),
        }
    }

    pub fn from_poly(p: QtPoly) -> Self {
        RatQT {
            num: p,
            den: QtPoly::one(),
        }
        .reduced()
    }

    pub fn from_rat(c: Rat) -> Self {
        Self::from_poly(QtPoly::from_rat(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rat(rat(c))
    }

    pub fn fraction(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(RatQT { num, den }.reduced())
    }

    /// Build a fraction whose parts are already coprime up to monomial and
    /// rational units, skipping the gcd and normalizing the units only.
    pub(crate) fn from_coprime(num: QtPoly, den: QtPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(RatQT::zero());
        }
        let (nq, nt) = (num.min_q().unwrap(), num.min_t().unwrap());
        let (dq, dt) = (den.min_q().unwrap(), den.min_t().unwrap());
        let n0 = num.shift(-nq, -nt);
        let d0 = den.shift(-dq, -dt);
        let lead = d0
            .terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let inv = lead.recip();
        Ok(RatQT {
            num: n0.mul_rat(&inv).shift(nq - dq, nt - dt),
            den: d0.mul_rat(&inv),
        })
    }

    pub fn numerator(&self) -> &QtPoly {
        &self.num
    }

    pub fn denominator(&self) -> &QtPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    fn reduced(self) -> Self {
        let RatQT { num, den } = self;
        if num.is_zero() {
            return RatQT::zero();
        }
        // Strip monomial content from both sides; the difference becomes a
        // monomial unit on the numerator.
        let (nq, nt) = (num.min_q().unwrap(), num.min_t().unwrap());
        let (dq, dt) = (den.min_q().unwrap(), den.min_t().unwrap());
        let n0 = num.shift(-nq, -nt);
        let d0 = den.shift(-dq, -dt);
        let (uq, ut) = (nq - dq, nt - dt);

        let (n0, d0) = if d0.is_one() {
            (n0, d0)
        } else {
            let nb = to_bi(&n0);
            let db = to_bi(&d0);
            // Cheap path: the denominator often divides the numerator
            // outright after the eigen-solve's back-substitution.
            if let Some(qb) = bi_div_exact(&nb, &db) {
                (from_bi(&qb), QtPoly::one())
            } else {
                let g = bi_gcd(&nb, &db);
                if bi_deg(&g) == 0 && g.first().map(|u| uni_deg(u) == 0).unwrap_or(true) {
                    (n0, d0)
                } else {
                    let nq = bi_div_exact(&nb, &g).expect("gcd divides numerator");
                    let dq = bi_div_exact(&db, &g).expect("gcd divides denominator");
                    (from_bi(&nq), from_bi(&dq))
                }
            }
        };

        // Normalize the denominator's lex-leading coefficient to 1.
        let lead = d0
            .terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .expect("nonzero denominator");
        let inv = lead.recip();
        RatQT {
            num: n0.mul_rat(&inv).shift(uq, ut),
            den: d0.mul_rat(&inv),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        RatQT {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
        .reduced()
    }

    pub fn neg(&self) -> Self {
        RatQT {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        RatQT {
            num: self.num.mul(&other.num),
            den: self.den.mul(&other.den),
        }
        .reduced()
    }

    pub fn mul_rat(&self, c: &Rat) -> Self {
        RatQT {
            num: self.num.mul_rat(c),
            den: self.den.clone(),
        }
        .reduced()
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain("division by zero".into()));
        }
        Ok(RatQT {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        }
        .reduced())
    }

    pub fn inverse(&self) -> Result<Self> {
        RatQT::one().div(self)
    }

    /// The coefficientwise limit `q -> oo`, when it exists as a Laurent
    /// polynomial in `t^{1/2}`.
    pub fn limit_q_infinity(&self) -> Result<LaurentT> {
        if self.num.is_zero() {
            return Ok(LaurentT::zero());
        }
        let qn = self.num.max_q().unwrap();
        let qd = self.den.max_q().unwrap();
        if qn > qd {
            return Err(Error::Divergent(format!(
                "numerator q-degree {qn} exceeds denominator q-degree {qd}"
            )));
        }
        if qn < qd {
            return Ok(LaurentT::zero());
        }
        let top_n = self.num.q_slice(qn);
        let top_d = self.den.q_slice(qd);
        laurent_div_exact(&top_n, &top_d).ok_or_else(|| {
            Error::NotLaurent(format!(
                "leading t-coefficient ({}) / ({}) is not a Laurent polynomial",
                top_n, top_d
            ))
        })
    }

    pub fn format(&self, m: i64) -> String {
        if self.den.is_one() {
            self.num.format(m)
        } else {
            format!("({}) / ({})", self.num.format(m), self.den.format(m))
        }
    }
}

/// Exact division of Laurent polynomials in `t^{1/2}`; `None` on nonzero
/// remainder.
pub fn laurent_div_exact(a: &LaurentT, b: &LaurentT) -> Option<LaurentT> {
    if a.is_zero() {
        return Some(LaurentT::zero());
    }
    if b.is_zero() {
        return None;
    }
    let sa = a.min_exp().unwrap();
    let sb = b.min_exp().unwrap();
    let da: Uni = {
        let mut v = vec![Rat::zero(); (a.max_exp().unwrap() - sa) as usize + 1];
        for (&k, c) in a.terms() {
            v[(k - sa) as usize] = c.clone();
        }
        v
    };
    let db: Uni = {
        let mut v = vec![Rat::zero(); (b.max_exp().unwrap() - sb) as usize + 1];
        for (&k, c) in b.terms() {
            v[(k - sb) as usize] = c.clone();
        }
        v
    };
    let (q, r) = uni_divrem(&da, &db);
    if !uni_is_zero(&r) {
        return None;
    }
    let mut out = LaurentT::zero();
    for (i, c) in q.iter().enumerate() {
        out = out.add(&LaurentT::monomial(i as i64 + sa - sb, c.clone()));
    }
    Some(out)
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format(1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(u: i64) -> QtPoly {
        QtPoly::monomial(u, 0, rat(1))
    }

    fn t(d: i64) -> QtPoly {
        QtPoly::monomial(0, d, rat(1))
    }

    #[test]
    fn limit_simple_ratio() {
        // (q*t) / (q + 1) -> t, with q in whole units and t whole.
        let f = RatQT::fraction(q(1).mul(&t(2)), q(1).add(&QtPoly::one())).unwrap();
        let lim = f.limit_q_infinity().unwrap();
        assert_eq!(lim, LaurentT::monomial(2, rat(1)));
    }

    #[test]
    fn limit_decaying() {
        // 1 / (q - t) -> 0.
        let f = RatQT::fraction(QtPoly::one(), q(1).sub(&t(2))).unwrap();
        assert!(f.limit_q_infinity().unwrap().is_zero());
    }

    #[test]
    fn limit_fractional_exponents() {
        // (q^{1/2} + 1) / (q^{1/2} - t^{-1}) -> 1, with m = 2 so q^{1/2} is
        // one internal unit.
        let f = RatQT::fraction(
            q(1).add(&QtPoly::one()),
            q(1).sub(&QtPoly::monomial(0, -2, rat(1))),
        )
        .unwrap();
        assert_eq!(f.limit_q_infinity().unwrap(), LaurentT::one());
    }

    #[test]
    fn limit_divergent_and_not_laurent() {
        let f = RatQT::fraction(q(2), q(1).add(&QtPoly::one())).unwrap();
        assert!(matches!(f.limit_q_infinity(), Err(Error::Divergent(_))));

        // q / (q*(1 + t)) reduces to 1/(1+t), whose q->oo limit exists as a
        // rational function of t but not as a Laurent polynomial.
        let f = RatQT::fraction(q(1), q(1).mul(&QtPoly::one().add(&t(2)))).unwrap();
        assert!(matches!(f.limit_q_infinity(), Err(Error::NotLaurent(_))));
    }

    #[test]
    fn fraction_cancellation() {
        // (q^2 - t^2) / (q - t) == q + t.
        let num = q(2).sub(&t(4));
        let den = q(1).sub(&t(2));
        let f = RatQT::fraction(num, den).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(*f.numerator(), q(1).add(&t(2)));
    }

    #[test]
    fn canonical_form_is_stable() {
        // Same value built two ways normalizes identically.
        let a = RatQT::fraction(
            q(1).mul_rat(&rat(2)),
            q(1).add(&QtPoly::one()).mul_rat(&rat(2)),
        )
        .unwrap();
        let b = RatQT::fraction(q(2).mul_rat(&rat(3)), q(2).add(&q(1)).mul_rat(&rat(3))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn field_ops() {
        let x = RatQT::fraction(q(1), q(1).add(&t(2))).unwrap();
        let y = RatQT::fraction(t(2), q(1).add(&t(2))).unwrap();
        assert_eq!(x.add(&y), RatQT::one());
        let z = x.mul(&y).div(&y).unwrap();
        assert_eq!(z, x);
        assert!(x.sub(&x).is_zero());
        assert_eq!(x.inverse().unwrap().mul(&x), RatQT::one());
    }

    #[test]
    fn monomial_units_preserved() {
        // t^{-1} q^{-2} stays a Laurent monomial over denominator 1.
        let f = RatQT::from_poly(QtPoly::monomial(-2, -2, rat(5)));
        assert!(f.is_polynomial());
        assert_eq!(f.numerator().coeff(-2, -2), rat(5));
    }

    #[test]
    fn bivariate_gcd_nontrivial() {
        // gcd((q+t)(q-1), (q+t)(t+1)) = q+t up to unit.
        let common = q(1).add(&t(2));
        let a = common.mul(&q(1).sub(&QtPoly::one()));
        let b = common.mul(&t(2).add(&QtPoly::one()));
        let f = RatQT::fraction(a, b).unwrap();
        // After cancellation the denominator is monic t+1 and numerator q-1.
        assert_eq!(*f.denominator(), t(2).add(&QtPoly::one()));
        assert_eq!(*f.numerator(), q(1).sub(&QtPoly::one()));
    }

    #[test]
    fn display_fractional_q() {
        let p = q(1).add(&t(1).mul_rat(&rat(-3)));
        assert_eq!(p.format(2), "-3*t^{1/2} + q^{1/2}");
        assert_eq!(p.format(1), "-3*t^{1/2} + q^{1}");
    }
}
