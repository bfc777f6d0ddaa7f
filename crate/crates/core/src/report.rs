use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::coeff::Coefficient;
use crate::error::Error;
use crate::free_baxter::BaxterElement;

/// The identities and congruences this crate can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `P^k(1) P(1) = (k+1) P^{k+1}(1) + kλ P^k(1)`
    Circ,
    /// `n! P^n(1) = Σ s(n,k) λ^{n-k} P(1)^k`
    Conn1,
    /// `P(1)^n = Σ k! S(n,k) λ^{n-k} P^k(1)`
    Conn2,
    /// coefficients of `(1⊗x)^n` are multinomials times `λ^{n-ℓ(I)}`
    Ref1,
    /// length-graded sums of those coefficients are `k! S(n,k) λ^{n-k}`
    Ref2,
    /// finite truncations of the two generating functions
    Egf,
    /// `p | S(p,I)` for `I ≠ (p)` and `p | S(p,k)` for `1 < k < p`
    Sni,
    /// `(1⊗x)^p ≡ λ^{p-1} (1⊗x^p)`
    Xpow,
    /// `P(a)^p ≡ λ^{p-1} P(a^p)`
    Pa,
    /// `(a1⊗⋯⊗an)^p ≡ λ^{(n-1)(p-1)} a1^p⊗⋯⊗an^p`
    Freshman,
    /// `a^p = a` over `F_p[x]/(x^p - x)` with `λ = 1`
    Fermat,
}

impl IdentityId {
    pub const ALL: [IdentityId; 11] = [
        IdentityId::Circ,
        IdentityId::Conn1,
        IdentityId::Conn2,
        IdentityId::Ref1,
        IdentityId::Ref2,
        IdentityId::Egf,
        IdentityId::Sni,
        IdentityId::Xpow,
        IdentityId::Pa,
        IdentityId::Freshman,
        IdentityId::Fermat,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IdentityId::Circ => "circ",
            IdentityId::Conn1 => "conn1",
            IdentityId::Conn2 => "conn2",
            IdentityId::Ref1 => "ref1",
            IdentityId::Ref2 => "ref2",
            IdentityId::Egf => "egf",
            IdentityId::Sni => "sni",
            IdentityId::Xpow => "xpow",
            IdentityId::Pa => "pa",
            IdentityId::Freshman => "freshman",
            IdentityId::Fermat => "fermat",
        }
    }

    /// True for the mod-p checks, which are parameterized by a prime.
    pub fn is_congruence(self) -> bool {
        matches!(
            self,
            IdentityId::Sni
                | IdentityId::Xpow
                | IdentityId::Pa
                | IdentityId::Freshman
                | IdentityId::Fermat
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

/// One side of a checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReportValue {
    Element(BaxterElement),
    Coefficient(Coefficient),
    List(Vec<ReportValue>),
}

impl ReportValue {
    pub fn to_json(&self) -> Value {
        match self {
            ReportValue::Element(e) => e.to_json(),
            ReportValue::Coefficient(c) => c.to_json(),
            ReportValue::List(v) => Value::Array(v.iter().map(ReportValue::to_json).collect()),
        }
    }
}

impl From<BaxterElement> for ReportValue {
    fn from(e: BaxterElement) -> Self {
        ReportValue::Element(e)
    }
}

impl From<Coefficient> for ReportValue {
    fn from(c: Coefficient) -> Self {
        ReportValue::Coefficient(c)
    }
}

impl<T: Into<ReportValue>> From<Vec<T>> for ReportValue {
    fn from(v: Vec<T>) -> Self {
        ReportValue::List(v.into_iter().map(Into::into).collect())
    }
}

/// Outcome of one check. `passed` is exact equality of the canonical sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: BTreeMap<String, Value>,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(
        identity: IdentityId,
        params: impl IntoIterator<Item = (&'static str, Value)>,
        lhs: impl Into<ReportValue>,
        rhs: impl Into<ReportValue>,
    ) -> Self {
        let lhs = lhs.into();
        let rhs = rhs.into();
        VerificationReport {
            identity,
            params: params
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
            passed: lhs == rhs,
            lhs,
            rhs,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity.as_str(),
            "params": self.params,
            "passed": self.passed,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        })
    }

    /// The report without its two sides.
    pub fn summary_json(&self) -> Value {
        json!({
            "identity": self.identity.as_str(),
            "params": self.params,
            "passed": self.passed,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.as_str().parse::<IdentityId>().unwrap(), id);
        }
        assert!("nope".parse::<IdentityId>().is_err());
    }
}
