use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::poly::{Poly, RatFunc};
use super::time::{Branch, TimeParam};
use super::FieldScalar;
use crate::error::{Error, Result};

/// Default number of samples per branch for identity certification.
pub const IDENTITY_SAMPLES: usize = 33;

/// Largest numerator/denominator degree admitted by identity certification.
pub const IDENTITY_DEGREE_BOUND: usize = 32;

/// A function of `t` given by one rational function on `t > 0` and another on `t < 0`.
///
/// `|t|` is the pair `(t, −t)`; no branch ever sees a radical in `t`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BranchFunc {
    pos: RatFunc,
    neg: RatFunc,
}

/// Outcome of sampling-based identity certification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub samples_per_branch: usize,
    pub holds: bool,
    pub counterexample: Option<IdentityCounterexample>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityCounterexample {
    pub branch: Branch,
    pub t: FieldScalar,
    pub lhs: FieldScalar,
    pub rhs: FieldScalar,
}

impl BranchFunc {
    pub fn from_branches(pos: RatFunc, neg: RatFunc) -> Self {
        BranchFunc { pos, neg }
    }

    /// The same rational function on both branches.
    pub fn uniform(f: RatFunc) -> Self {
        BranchFunc { pos: f.clone(), neg: f }
    }

    pub fn constant(c: FieldScalar) -> Self {
        Self::uniform(RatFunc::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(FieldScalar::from_int(n))
    }

    pub fn zero() -> Self {
        Self::uniform(RatFunc::zero())
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn t() -> Self {
        Self::uniform(RatFunc::from_poly(Poly::t()))
    }

    pub fn abs_t() -> Self {
        BranchFunc { pos: RatFunc::from_poly(Poly::t()), neg: RatFunc::from_poly(Poly::t().neg()) }
    }

    /// `sign(t)` away from zero.
    pub fn sign_t() -> Self {
        BranchFunc { pos: RatFunc::constant(FieldScalar::one()), neg: RatFunc::constant(FieldScalar::from_int(-1)) }
    }

    /// `t|t|`.
    pub fn t_abs_t() -> Self {
        Self::t().mul(&Self::abs_t())
    }

    pub fn pos(&self) -> &RatFunc {
        &self.pos
    }

    pub fn neg_branch(&self) -> &RatFunc {
        &self.neg
    }

    pub fn branch(&self, b: Branch) -> Option<&RatFunc> {
        match b {
            Branch::Positive => Some(&self.pos),
            Branch::Negative => Some(&self.neg),
            Branch::Zero => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.pos.is_zero() && self.neg.is_zero()
    }

    /// Constant in `t`, with equal values on both branches.
    pub fn is_constant(&self) -> bool {
        self.pos.is_constant() && self.neg.is_constant() && self.pos == self.neg
    }

    pub fn add(&self, rhs: &Self) -> Self {
        BranchFunc { pos: self.pos.add(&rhs.pos), neg: self.neg.add(&rhs.neg) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        BranchFunc { pos: self.pos.sub(&rhs.pos), neg: self.neg.sub(&rhs.neg) }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        BranchFunc { pos: self.pos.mul(&rhs.pos), neg: self.neg.mul(&rhs.neg) }
    }

    pub fn neg(&self) -> Self {
        BranchFunc { pos: self.pos.neg(), neg: self.neg.neg() }
    }

    pub fn scale(&self, c: &FieldScalar) -> Self {
        self.mul(&Self::constant(c.clone()))
    }

    /// Fails with `DivByZero` if either branch of the divisor vanishes identically.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(BranchFunc { pos: self.pos.div(&rhs.pos)?, neg: self.neg.div(&rhs.neg)? })
    }

    /// Value at `t`; at `t = 0` the common one-sided limit.
    pub fn eval(&self, t: &TimeParam) -> Result<FieldScalar> {
        match t.branch() {
            Branch::Positive => self.pos.eval(t.value()),
            Branch::Negative => self.neg.eval(t.value()),
            Branch::Zero => {
                let (l, r) = self.limit_at_zero()?;
                if l == r {
                    Ok(l)
                } else {
                    Err(Error::DiscontinuousAtZero)
                }
            }
        }
    }

    /// Evaluates both branch formulas at an arbitrary field element on the given side.
    pub fn eval_branch(&self, b: Branch, t: &FieldScalar) -> Result<FieldScalar> {
        match b {
            Branch::Positive => self.pos.eval(t),
            Branch::Negative => self.neg.eval(t),
            Branch::Zero => Err(Error::DiscontinuousAtZero),
        }
    }

    /// Branch-wise formal derivative of the given order.
    pub fn derivative(&self, order: usize) -> Self {
        let mut f = self.clone();
        for _ in 0..order {
            f = BranchFunc { pos: f.pos.derivative(), neg: f.neg.derivative() };
        }
        f
    }

    /// One-sided limits `(left, right)` at `t = 0`.
    pub fn limit_at_zero(&self) -> Result<(FieldScalar, FieldScalar)> {
        Ok((self.neg.limit_at_zero()?, self.pos.limit_at_zero()?))
    }

    /// Largest numerator/denominator degree over both branches.
    pub fn degree(&self) -> usize {
        self.pos.degree().max(self.neg.degree())
    }

    /// Exact identity by cross-multiplication on each branch.
    pub fn equals_exact(&self, rhs: &Self) -> bool {
        self.pos.equals_exact(&rhs.pos) && self.neg.equals_exact(&rhs.neg)
    }

    /// Certifies `self ≡ rhs` on both open branches by exact equality at
    /// distinct rational samples.
    ///
    /// The sample count is `max(min_samples, d + 1)` where `d` bounds the degree
    /// of the cross-multiplied difference, so agreement proves the identity.
    pub fn certify_identity(&self, rhs: &Self, min_samples: usize) -> Result<IdentityReport> {
        let deg = self.degree().max(rhs.degree());
        if deg > IDENTITY_DEGREE_BOUND {
            return Err(Error::DegreeBound(deg));
        }
        let mut per_branch = 0;
        for (b, f, g) in [(Branch::Positive, &self.pos, &rhs.pos), (Branch::Negative, &self.neg, &rhs.neg)] {
            let cross = (f.num().degree() + g.den().degree()).max(g.num().degree() + f.den().degree());
            let needed = min_samples.max(cross + 1);
            per_branch = per_branch.max(needed);
            let sign = if b == Branch::Positive { 1 } else { -1 };
            let mut taken = 0;
            let mut k = 1i64;
            let denom = 4 * needed as i64 + 1;
            while taken < needed {
                let t = FieldScalar::from_ratio(sign * k, denom);
                k += 1;
                if k >= denom {
                    return Err(Error::PoleAt);
                }
                let (lhs, rhs_v) = match (f.eval(&t), g.eval(&t)) {
                    (Ok(a), Ok(c)) => (a, c),
                    _ => continue,
                };
                taken += 1;
                if lhs != rhs_v {
                    return Ok(IdentityReport {
                        samples_per_branch: taken,
                        holds: false,
                        counterexample: Some(IdentityCounterexample { branch: b, t, lhs, rhs: rhs_v }),
                    });
                }
            }
        }
        Ok(IdentityReport { samples_per_branch: per_branch, holds: true, counterexample: None })
    }
}

impl From<FieldScalar> for BranchFunc {
    fn from(c: FieldScalar) -> Self {
        Self::constant(c)
    }
}

impl fmt::Debug for BranchFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pos == self.neg {
            write!(f, "{:?}", self.pos)
        } else {
            write!(f, "{{t>0: {:?}; t<0: {:?}}}", self.pos, self.neg)
        }
    }
}

impl Serialize for BranchFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("BranchFunc", 2)?;
        st.serialize_field("pos", &self.pos)?;
        st.serialize_field("neg", &self.neg)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> FieldScalar {
        FieldScalar::from_ratio(n, d)
    }

    #[test]
    fn eval_examples() {
        let tt = BranchFunc::t_abs_t();
        let f = tt.checked_div(&BranchFunc::one().add(&tt)).unwrap();
        assert_eq!(f.eval(&TimeParam::ratio(1, 2)).unwrap(), q(1, 5));
        let sgn = BranchFunc::abs_t().checked_div(&BranchFunc::t()).unwrap();
        assert_eq!(sgn.eval(&TimeParam::zero()), Err(Error::DiscontinuousAtZero));
        assert_eq!(sgn.limit_at_zero().unwrap(), (q(-1, 1), q(1, 1)));
        assert_eq!(tt.eval(&TimeParam::zero()).unwrap(), FieldScalar::zero());
    }

    #[test]
    fn derivative_examples() {
        let tt = BranchFunc::t_abs_t();
        assert_eq!(tt.derivative(1).limit_at_zero().unwrap(), (q(0, 1), q(0, 1)));
        assert_eq!(tt.derivative(2).limit_at_zero().unwrap(), (q(-2, 1), q(2, 1)));
        let f = BranchFunc::one().checked_div(&BranchFunc::one().add(&tt)).unwrap();
        assert_eq!(f.derivative(1).limit_at_zero().unwrap(), (q(0, 1), q(0, 1)));
    }

    #[test]
    fn limit_examples() {
        let tt = BranchFunc::t_abs_t();
        let f = BranchFunc::one().sub(&tt).checked_div(&BranchFunc::one().add(&tt)).unwrap();
        assert_eq!(f.limit_at_zero().unwrap(), (q(1, 1), q(1, 1)));
        let t2 = BranchFunc::t().mul(&BranchFunc::t());
        let g = t2.checked_div(&BranchFunc::one().sub(&t2)).unwrap();
        assert_eq!(g.limit_at_zero().unwrap(), (q(0, 1), q(0, 1)));
        let pole = BranchFunc::one().checked_div(&BranchFunc::t()).unwrap();
        assert_eq!(pole.limit_at_zero(), Err(Error::PoleAtZero));
    }

    #[test]
    fn identity_certificate_detects_difference() {
        let tt = BranchFunc::t_abs_t();
        let t2 = BranchFunc::t().mul(&BranchFunc::t());
        let rep = tt.certify_identity(&t2, IDENTITY_SAMPLES).unwrap();
        assert!(!rep.holds);
        assert_eq!(rep.counterexample.unwrap().branch, Branch::Negative);
        let same = tt.certify_identity(&BranchFunc::abs_t().mul(&BranchFunc::t()), IDENTITY_SAMPLES).unwrap();
        assert!(same.holds);
        assert_eq!(same.samples_per_branch, IDENTITY_SAMPLES);
    }
}
