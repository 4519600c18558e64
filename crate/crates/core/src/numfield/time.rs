use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use super::FieldScalar;
use crate::error::{Error, Result};

/// Which half-line a parameter value lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Negative,
    Zero,
    Positive,
}

/// Transition parameter `t ∈ (−1, 1]` together with its sign branch.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TimeParam {
    value: FieldScalar,
    branch: Branch,
}

impl TimeParam {
    /// Fails with `OutOfInterval` unless `−1 < value ≤ 1`.
    pub fn new(value: FieldScalar) -> Result<Self> {
        let above = value.cmp_value(&FieldScalar::from_int(-1)).is_gt();
        let below = value.cmp_value(&FieldScalar::one()).is_le();
        if !(above && below) {
            return Err(Error::OutOfInterval(value.to_string()));
        }
        let branch = match value.signum() {
            1 => Branch::Positive,
            -1 => Branch::Negative,
            _ => Branch::Zero,
        };
        Ok(TimeParam { value, branch })
    }

    pub fn zero() -> Self {
        TimeParam { value: FieldScalar::zero(), branch: Branch::Zero }
    }

    pub fn one() -> Self {
        TimeParam { value: FieldScalar::one(), branch: Branch::Positive }
    }

    /// `n/d`; panics unless it lies in `(−1, 1]`.
    pub fn ratio(n: i64, d: i64) -> Self {
        Self::new(FieldScalar::from_ratio(n, d)).expect("parameter in (-1, 1]")
    }

    /// `1/√3 = √3/3`, the right-angled endpoint of the core interval.
    pub fn inv_sqrt3() -> Self {
        Self::new(inv_sqrt3()).expect("1/sqrt3 in range")
    }

    pub fn value(&self) -> &FieldScalar {
        &self.value
    }

    pub fn branch(&self) -> Branch {
        self.branch
    }

    pub fn is_zero(&self) -> bool {
        self.branch == Branch::Zero
    }

    pub fn abs(&self) -> FieldScalar {
        match self.branch {
            Branch::Negative => -&self.value,
            _ => self.value.clone(),
        }
    }

    /// `sign(t)` as a field element.
    pub fn sign(&self) -> FieldScalar {
        FieldScalar::from_int(match self.branch {
            Branch::Negative => -1,
            Branch::Zero => 0,
            Branch::Positive => 1,
        })
    }

    /// `t|t| = sign(t)·t²`, the last diagonal entry of `J_t`.
    pub fn t_abs_t(&self) -> FieldScalar {
        &self.value * &self.abs()
    }

    /// Membership in the core interval `(−1, 1/√3]`.
    pub fn in_core_interval(&self) -> bool {
        self.value.cmp_value(&inv_sqrt3()).is_le()
    }

    /// Short expression in the CLI grammar where possible.
    pub fn expr(&self) -> String {
        if let Some(q) = self.value.as_rational() {
            return if q.is_integer() { q.numer().to_string() } else { format!("{}/{}", q.numer(), q.denom()) };
        }
        if self.value == inv_sqrt3() {
            return "1/sqrt3".into();
        }
        if self.value == -inv_sqrt3() {
            return "-1/sqrt3".into();
        }
        if self.value == FieldScalar::sqrt2().scale(&num_rational::BigRational::new(1.into(), 2.into())) {
            return "sqrt2/2".into();
        }
        self.value.to_string()
    }
}

fn inv_sqrt3() -> FieldScalar {
    FieldScalar::sqrt3().scale(&num_rational::BigRational::new(1.into(), 3.into()))
}

impl FromStr for TimeParam {
    type Err = Error;

    /// Grammar: integers, fractions `p/q`, finite decimals, and the tokens
    /// `1/sqrt3`, `-1/sqrt3`, `sqrt2/2`, `-sqrt2/2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let value = match s {
            "1/sqrt3" => inv_sqrt3(),
            "-1/sqrt3" => -inv_sqrt3(),
            "sqrt2/2" => FieldScalar::sqrt2().scale(&num_rational::BigRational::new(1.into(), 2.into())),
            "-sqrt2/2" => FieldScalar::sqrt2().scale(&num_rational::BigRational::new((-1).into(), 2.into())),
            _ => {
                if s.is_empty() || s.contains("sqrt") || s.contains('+') || s.chars().skip(1).any(|c| c == '-') {
                    return Err(Error::Parse(format!("malformed t expression `{s}`")));
                }
                s.parse::<FieldScalar>().map_err(|_| Error::Parse(format!("malformed t expression `{s}`")))?
            }
        };
        TimeParam::new(value)
    }
}

impl fmt::Display for TimeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr())
    }
}

impl fmt::Debug for TimeParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t={}", self.expr())
    }
}

impl Serialize for TimeParam {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.expr())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_grammar() {
        assert_eq!("1/2".parse::<TimeParam>().unwrap(), TimeParam::ratio(1, 2));
        assert_eq!("-1/sqrt3".parse::<TimeParam>().unwrap().branch(), Branch::Negative);
        assert!("1/sqrt3".parse::<TimeParam>().unwrap().in_core_interval());
        assert!(!"2/3".parse::<TimeParam>().unwrap().in_core_interval());
        assert!(matches!("1/sqrt5".parse::<TimeParam>(), Err(Error::Parse(_))));
        assert!(matches!("abc".parse::<TimeParam>(), Err(Error::Parse(_))));
        assert!(matches!("-1".parse::<TimeParam>(), Err(Error::OutOfInterval(_))));
        assert!(matches!("3/2".parse::<TimeParam>(), Err(Error::OutOfInterval(_))));
        assert_eq!("0.9".parse::<TimeParam>().unwrap().expr(), "9/10");
    }

    #[test]
    fn t_abs_t_signs() {
        assert_eq!(TimeParam::ratio(-1, 2).t_abs_t(), FieldScalar::from_ratio(-1, 4));
        assert_eq!(TimeParam::ratio(1, 2).t_abs_t(), FieldScalar::from_ratio(1, 4));
        assert_eq!(TimeParam::inv_sqrt3().t_abs_t(), FieldScalar::from_ratio(1, 3));
        assert_eq!(TimeParam::inv_sqrt3().expr(), "1/sqrt3");
    }
}
