//! Sparse Laurent polynomials in `t^{1/2}` with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::root_data::{rat, Rat};

/// Exponents are stored doubled, so the key `k` means `t^{k/2}`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LaurentT {
    terms: BTreeMap<i64, Rat>,
}

impl LaurentT {
    pub fn zero() -> Self {
        LaurentT::default()
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        LaurentT { terms }
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_rat(rat(c))
    }

    /// `c * t^{doubled/2}`.
    pub fn monomial(doubled: i64, c: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(doubled, c);
        }
        LaurentT { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, doubled: i64) -> Rat {
        self.terms.get(&doubled).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &Rat)> {
        self.terms.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, k: i64, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&k, c) in &other.terms {
            out.insert(k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentT {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = LaurentT::zero();
        for (&k1, c1) in &self.terms {
            for (&k2, c2) in &other.terms {
                out.insert(k1 + k2, c1 * c2);
            }
        }
        out
    }

    pub fn mul_rat(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return LaurentT::zero();
        }
        LaurentT {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Shift by `t^{doubled/2}`.
    pub fn shift(&self, doubled: i64) -> Self {
        LaurentT {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k + doubled, c.clone()))
                .collect(),
        }
    }

    /// Whether every exponent is an integer power of `t^{-1}` (or constant).
    pub fn is_poly_in_t_inverse(&self) -> bool {
        self.terms.keys().all(|&k| k <= 0 && k % 2 == 0)
    }

    /// The `t -> oo` limit; requires no strictly positive exponents.
    pub fn limit_t_infinity(&self) -> Result<Rat> {
        if let Some(k) = self.max_exp() {
            if k > 0 {
                return Err(Error::Divergent(format!("positive t-exponent in {self}")));
            }
        }
        Ok(self.coeff(0))
    }

    /// Exact evaluation at a positive rational; exponents must be integers.
    pub fn evaluate(&self, x: &Rat) -> Result<Rat> {
        let mut acc = Rat::zero();
        for (&k, c) in &self.terms {
            if k % 2 != 0 {
                return Err(Error::Domain(format!(
                    "cannot evaluate half-integer exponent t^{{{k}/2}} at a rational"
                )));
            }
            acc += c * rat_pow(x, k / 2);
        }
        Ok(acc)
    }
}

pub fn rat_pow(x: &Rat, e: i64) -> Rat {
    let mut base = if e < 0 { x.recip() } else { x.clone() };
    let mut e = e.unsigned_abs();
    let mut acc = Rat::one();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    acc
}

fn fmt_exp(doubled: i64) -> String {
    if doubled % 2 == 0 {
        format!("{}", doubled / 2)
    } else {
        format!("{doubled}/2")
    }
}

impl fmt::Display for LaurentT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&k, c) in &self.terms {
            let neg = c < &Rat::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "t^{{{}}}", fmt_exp(k))?;
            } else {
                write!(f, "{mag}*t^{{{}}}", fmt_exp(k))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::rat_frac;

    fn t(doubled: i64) -> LaurentT {
        LaurentT::monomial(doubled, rat(1))
    }

    #[test]
    fn limits() {
        // 1 - t^{-1} -> 1
        let p = LaurentT::one().sub(&t(-2));
        assert_eq!(p.limit_t_infinity().unwrap(), rat(1));
        // t^{-1/2} -> 0
        assert_eq!(t(-1).limit_t_infinity().unwrap(), rat(0));
        // 2 + 3 t^{-2} -> 2
        let p = LaurentT::from_int(2).add(&t(-4).mul_rat(&rat(3)));
        assert_eq!(p.limit_t_infinity().unwrap(), rat(2));
        // t^{1/2} diverges
        assert!(t(1).limit_t_infinity().is_err());
    }

    #[test]
    fn evaluation() {
        let p = LaurentT::one().sub(&t(-2));
        assert_eq!(p.evaluate(&rat(2)).unwrap(), rat_frac(1, 2));
        assert_eq!(t(-4).evaluate(&rat(3)).unwrap(), rat_frac(1, 9));
        assert_eq!(LaurentT::from_int(5).evaluate(&rat(7)).unwrap(), rat(5));
        assert!(t(-1).evaluate(&rat(2)).is_err());
    }

    #[test]
    fn display() {
        let p = LaurentT::one().sub(&t(-2)).add(&t(1).mul_rat(&rat(3)));
        assert_eq!(p.to_string(), "-t^{-1} + 1 + 3*t^{1/2}");
        assert_eq!(LaurentT::zero().to_string(), "0");
    }

    #[test]
    fn arithmetic() {
        let a = LaurentT::one().add(&t(2));
        let b = LaurentT::one().sub(&t(2));
        let prod = a.mul(&b);
        assert_eq!(prod, LaurentT::one().sub(&t(4)));
        assert!(a.sub(&a).is_zero());
    }
}
