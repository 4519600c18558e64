use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::FieldScalar;
use crate::error::{Error, Result};

/// Univariate polynomial over ℚ(√2,√3); coefficients low degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<FieldScalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<FieldScalar>) -> Self {
        while coeffs.last().is_some_and(FieldScalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: FieldScalar) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(FieldScalar::one())
    }

    /// The monomial `c·tᵏ`.
    pub fn monomial(c: FieldScalar, k: usize) -> Self {
        let mut v = vec![FieldScalar::zero(); k];
        v.push(c);
        Self::new(v)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(FieldScalar::one(), 1)
    }

    pub fn coeffs(&self) -> &[FieldScalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> Option<&FieldScalar> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> FieldScalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![FieldScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &FieldScalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &FieldScalar) -> FieldScalar {
        self.coeffs.iter().rev().fold(FieldScalar::zero(), |acc, c| &(&acc * t) + c)
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &FieldScalar::from_int(k as i64))
                .collect(),
        )
    }

    /// Substitution `t ↦ −t`.
    pub fn reflect(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Euclidean division `self = q·d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let lead = d.leading().ok_or(Error::DivByZero)?;
        let lead_inv = lead.inv()?;
        let mut r = self.coeffs.clone();
        let dn = d.coeffs.len();
        if r.len() < dn {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut q = vec![FieldScalar::zero(); r.len() - dn + 1];
        for k in (0..q.len()).rev() {
            let c = &r[k + dn - 1] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(&c * dc);
            }
            q[k] = c;
        }
        r.truncate(dn - 1);
        Ok((Poly::new(q), Poly::new(r)))
    }

    /// Monic copy; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) if !l.is_one() => self.scale(&l.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({c})"),
                1 => format!("({c})t"),
                _ => format!("({c})t^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Reduced quotient `num/den` with monic denominator coprime to the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: Poly::one() };
        }
        if den.is_constant() {
            let inv = den.coeff(0).inv().expect("nonzero denominator");
            return RatFunc { num: num.scale(&inv), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).expect("gcd divides").0, den.div_rem(&g).expect("gcd divides").0)
        };
        let lead_inv = den.leading().expect("nonzero").inv().expect("nonzero");
        RatFunc { num: num.scale(&lead_inv), den: den.scale(&lead_inv) }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc { num: p, den: Poly::one() }
    }

    pub fn constant(c: FieldScalar) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return Self::reduced(self.num.add(&rhs.num), self.den.clone());
        }
        Self::reduced(self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)), self.den.mul(&rhs.den))
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        Self::reduced(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivByZero);
        }
        Ok(Self::reduced(self.num.mul(&rhs.den), self.den.mul(&rhs.num)))
    }

    pub fn eval(&self, t: &FieldScalar) -> Result<FieldScalar> {
        let d = self.den.eval(t);
        if d.is_zero() {
            return Err(Error::PoleAt);
        }
        self.num.eval(t).checked_div(&d)
    }

    /// Quotient rule.
    pub fn derivative(&self) -> RatFunc {
        let n = self.num.derivative().mul(&self.den).sub(&self.num.mul(&self.den.derivative()));
        Self::reduced(n, self.den.mul(&self.den))
    }

    /// Value at `t = 0` of the reduced fraction.
    pub fn limit_at_zero(&self) -> Result<FieldScalar> {
        let d = self.den.coeff(0);
        if d.is_zero() {
            return Err(Error::PoleAtZero);
        }
        self.num.coeff(0).checked_div(&d)
    }

    /// Substitution `t ↦ −t`.
    pub fn reflect(&self) -> RatFunc {
        Self::reduced(self.num.reflect(), self.den.reflect())
    }

    /// Exact identity by cross-multiplication.
    pub fn equals_exact(&self, rhs: &RatFunc) -> bool {
        self.num.mul(&rhs.den) == rhs.num.mul(&self.den)
    }

    /// Largest numerator or denominator degree.
    pub fn degree(&self) -> usize {
        self.num.degree().max(self.den.degree())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(serializer)
    }
}

impl Serialize for RatFunc {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RatFunc", 2)?;
        st.serialize_field("num", &self.num)?;
        st.serialize_field("den", &self.den)?;
        st.end()
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.coeff(0).is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "[{:?}] / [{:?}]", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> FieldScalar {
        FieldScalar::from_int(n)
    }

    #[test]
    fn gcd_cancels_common_factor() {
        // (t² − 1)/(t − 1) = t + 1
        let num = Poly::new(vec![c(-1), c(0), c(1)]);
        let den = Poly::new(vec![c(-1), c(1)]);
        let f = RatFunc::new(num, den).unwrap();
        assert_eq!(f.den(), &Poly::one());
        assert_eq!(f.num(), &Poly::new(vec![c(1), c(1)]));
    }

    #[test]
    fn derivative_of_quotient() {
        // d/dt 1/(1+t) = −1/(1+t)²
        let f = RatFunc::new(Poly::one(), Poly::new(vec![c(1), c(1)])).unwrap();
        let d = f.derivative();
        assert_eq!(d.eval(&c(1)).unwrap(), FieldScalar::from_ratio(-1, 4));
    }

    #[test]
    fn pole_at_zero() {
        let f = RatFunc::new(Poly::one(), Poly::t()).unwrap();
        assert_eq!(f.limit_at_zero(), Err(Error::PoleAtZero));
    }
}
