//! Formal sums of weight monomials `e^mu` with coefficients in an exact ring.

use std::collections::BTreeMap;

use crate::affine_weyl::FiniteWeylElt;
use crate::exact::laurent::LaurentT;
use crate::exact::qt::{QtPoly, RatQT};
use crate::root_data::Rat;
use crate::weight::Weight;

/// The coefficient rings the engine sums weight monomials over.
pub trait CoeffRing: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
}

impl CoeffRing for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl CoeffRing for Rat {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn is_zero(&self) -> bool {
        num::Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
}

impl CoeffRing for LaurentT {
    fn zero() -> Self {
        LaurentT::zero()
    }
    fn one() -> Self {
        LaurentT::one()
    }
    fn is_zero(&self) -> bool {
        LaurentT::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        LaurentT::add(self, other)
    }
    fn neg(&self) -> Self {
        LaurentT::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentT::mul(self, other)
    }
}

impl CoeffRing for QtPoly {
    fn zero() -> Self {
        QtPoly::zero()
    }
    fn one() -> Self {
        QtPoly::one()
    }
    fn is_zero(&self) -> bool {
        QtPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        QtPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        QtPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        QtPoly::mul(self, other)
    }
}

impl CoeffRing for RatQT {
    fn zero() -> Self {
        RatQT::zero()
    }
    fn one() -> Self {
        RatQT::one()
    }
    fn is_zero(&self) -> bool {
        RatQT::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatQT::add(self, other)
    }
    fn neg(&self) -> Self {
        RatQT::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        RatQT::mul(self, other)
    }
}

/// Finite sum `sum_mu c_mu e^mu`, keyed by weight for deterministic order.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightSeries<S: CoeffRing> {
    terms: BTreeMap<Weight, S>,
}

impl<S: CoeffRing> Default for WeightSeries<S> {
    fn default() -> Self {
        WeightSeries {
            terms: BTreeMap::new(),
        }
    }
}

impl<S: CoeffRing> WeightSeries<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(mu: Weight, c: S) -> Self {
        let mut s = Self::zero();
        s.add_term(mu, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mu: &Weight) -> S {
        self.terms.get(mu).cloned().unwrap_or_else(S::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &S)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, mu: Weight, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mu) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&mu);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(mu, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (mu, c) in &other.terms {
            out.add_term(mu.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        WeightSeries {
            terms: self
                .terms
                .iter()
                .map(|(mu, c)| (mu.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, c: &S) -> Self {
        let mut out = Self::zero();
        for (mu, v) in &self.terms {
            out.add_term(mu.clone(), v.mul(c));
        }
        out
    }

    pub fn map_coeffs<T: CoeffRing>(&self, f: impl Fn(&S) -> T) -> WeightSeries<T> {
        let mut out = WeightSeries::zero();
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), f(c));
        }
        out
    }

    /// Like `map_coeffs` but the map may fail (limits, evaluation).
    pub fn try_map_coeffs<T: CoeffRing, E>(
        &self,
        f: impl Fn(&S) -> Result<T, E>,
    ) -> Result<WeightSeries<T>, E> {
        let mut out = WeightSeries::zero();
        for (mu, c) in &self.terms {
            out.add_term(mu.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Apply a finite Weyl group element to every exponent: `e^mu -> e^{w mu}`.
    pub fn weyl_substitute(&self, w: &FiniteWeylElt) -> Self {
        let mut out = Self::zero();
        for (mu, c) in &self.terms {
            out.add_term(w.apply(mu), c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::{CartanType, RootSystem};

    #[test]
    fn accumulation_and_cancellation() {
        let mut s: WeightSeries<i64> = WeightSeries::zero();
        s.add_term(Weight(vec![1, 0]), 2);
        s.add_term(Weight(vec![1, 0]), -2);
        assert!(s.is_zero());
        s.add_term(Weight(vec![0, 1]), 3);
        assert_eq!(s.coeff(&Weight(vec![0, 1])), 3);
        assert_eq!(s.coeff(&Weight(vec![1, 0])), 0);
    }

    #[test]
    fn weyl_substitute_permutes_support() {
        let ct: CartanType = "A2".parse().unwrap();
        let rs = RootSystem::build(ct).unwrap();
        let w = crate::affine_weyl::FiniteWeylElt::simple(&rs, 0);
        let s = WeightSeries::monomial(Weight(vec![1, 0]), 1i64)
            .add(&WeightSeries::monomial(Weight(vec![0, 1]), 5));
        let moved = s.weyl_substitute(&w);
        // s_1(w1) = w1 - a1 = (-1, 1); s_1 fixes w2.
        assert_eq!(moved.coeff(&Weight(vec![-1, 1])), 1);
        assert_eq!(moved.coeff(&Weight(vec![0, 1])), 5);
        // Applying twice is the identity.
        assert_eq!(moved.weyl_substitute(&w), s);
    }

    #[test]
    fn ring_like_identities() {
        let a = WeightSeries::monomial(Weight(vec![2]), 3i64);
        let b = WeightSeries::monomial(Weight(vec![-1]), 4i64);
        assert_eq!(a.add(&b).sub(&b), a);
        assert_eq!(a.neg().neg(), a);
        assert_eq!(a.scalar_mul(&0), WeightSeries::zero());
    }
}
