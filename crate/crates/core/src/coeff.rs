//! Exact coefficient rings.
//!
//! A [`Ring`] pairs a base (`ℤ` or `ℤ/p`) with a weight: either the formal
//! indeterminate `λ` (coefficients are then polynomials in `λ`) or a pinned
//! constant (coefficients are then plain scalars). Running every identity with
//! a formal weight checks it for all weights at once.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Deterministic trial division; moduli in this crate are small.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    Int,
    ModP(u64),
}

impl Base {
    pub fn modulus(self) -> Option<u64> {
        match self {
            Base::Int => None,
            Base::ModP(p) => Some(p),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Weight {
    Formal,
    Pinned(BigInt),
}

/// Descriptor of the working coefficient ring together with its weight `λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    base: Base,
    weight: Weight,
}

impl Ring {
    /// Polynomials in a formal `λ` over `base`.
    pub fn formal(base: Base) -> Result<Self> {
        if let Base::ModP(p) = base {
            require_prime(p)?;
        }
        Ok(Ring {
            base,
            weight: Weight::Formal,
        })
    }

    /// Scalars of `base` with `λ` pinned to `weight`.
    pub fn pinned(base: Base, weight: impl Into<BigInt>) -> Result<Self> {
        let mut weight = weight.into();
        if let Base::ModP(p) = base {
            require_prime(p)?;
            weight = weight.mod_floor(&BigInt::from(p));
        }
        Ok(Ring {
            base,
            weight: Weight::Pinned(weight),
        })
    }

    /// `ℤ[λ]`, the default ring.
    pub fn lambda_int() -> Self {
        Ring {
            base: Base::Int,
            weight: Weight::Formal,
        }
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    pub fn is_formal(&self) -> bool {
        matches!(self.weight, Weight::Formal)
    }

    pub fn modulus(&self) -> Option<u64> {
        self.base.modulus()
    }

    pub fn zero(&self) -> Coefficient {
        match (self.base, self.is_formal()) {
            (Base::Int, false) => Coefficient::Int(BigInt::zero()),
            (Base::ModP(p), false) => Coefficient::Mod {
                value: 0,
                modulus: p,
            },
            (Base::Int, true) => Coefficient::IntPoly(Vec::new()),
            (Base::ModP(p), true) => Coefficient::ModPoly {
                coeffs: Vec::new(),
                modulus: p,
            },
        }
    }

    pub fn one(&self) -> Coefficient {
        self.from_int(1)
    }

    /// Embeds an integer through the canonical map `ℤ → C`.
    pub fn from_int(&self, n: impl Into<BigInt>) -> Coefficient {
        let n: BigInt = n.into();
        match (self.base, self.is_formal()) {
            (Base::Int, false) => Coefficient::Int(n),
            (Base::ModP(p), false) => Coefficient::Mod {
                value: residue(&n, p),
                modulus: p,
            },
            (Base::Int, true) => Coefficient::IntPoly(trim_int(vec![n])),
            (Base::ModP(p), true) => Coefficient::ModPoly {
                coeffs: trim_mod(vec![residue(&n, p)]),
                modulus: p,
            },
        }
    }

    /// The weight as a ring element.
    pub fn lambda(&self) -> Coefficient {
        self.lambda_pow(1)
    }

    pub fn lambda_pow(&self, d: u32) -> Coefficient {
        match &self.weight {
            Weight::Pinned(w) => self.from_int(num_traits::pow(w.clone(), d as usize)),
            Weight::Formal => {
                let d = d as usize;
                match self.base {
                    Base::Int => {
                        let mut c = vec![BigInt::zero(); d + 1];
                        c[d] = BigInt::one();
                        Coefficient::IntPoly(c)
                    }
                    Base::ModP(p) => {
                        let mut c = vec![0u64; d + 1];
                        c[d] = 1 % p;
                        Coefficient::ModPoly {
                            coeffs: trim_mod(c),
                            modulus: p,
                        }
                    }
                }
            }
        }
    }

    pub fn contains(&self, c: &Coefficient) -> bool {
        c.kind() == (self.base, self.is_formal())
    }

    pub fn check(&self, c: &Coefficient) -> Result<()> {
        if self.contains(c) {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: c.kind_name(),
            })
        }
    }

    /// The ring obtained by reducing an integer ring modulo `p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<Ring> {
        require_prime(p)?;
        if self.base != Base::Int {
            return Err(Error::RingMismatch {
                left: self.to_string(),
                right: "an integer-based ring".into(),
            });
        }
        match &self.weight {
            Weight::Formal => Ring::formal(Base::ModP(p)),
            Weight::Pinned(w) => Ring::pinned(Base::ModP(p), w.clone()),
        }
    }

    pub fn to_json(&self) -> Value {
        let base = match self.base {
            Base::Int => json!("int"),
            Base::ModP(p) => json!({ "mod": p }),
        };
        let weight = match &self.weight {
            Weight::Formal => json!("formal"),
            Weight::Pinned(w) => json!(w.to_string()),
        };
        json!({ "base": base, "weight": weight })
    }

    pub fn from_json(v: &Value) -> Result<Ring> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("ring descriptor must be an object".into()))?;
        let base = match obj.get("base") {
            Some(Value::String(s)) if s == "int" => Base::Int,
            Some(Value::Object(m)) => {
                let p = m
                    .get("mod")
                    .and_then(Value::as_u64)
                    .ok_or_else(|| Error::Parse("ring base needs an integer \"mod\"".into()))?;
                Base::ModP(p)
            }
            _ => {
                return Err(Error::Parse(
                    "ring base must be \"int\" or {\"mod\": p}".into(),
                ))
            }
        };
        match obj.get("weight") {
            None => Ring::formal(base),
            Some(Value::String(s)) if s == "formal" => Ring::formal(base),
            Some(Value::String(s)) => Ring::pinned(base, parse_bigint(s)?),
            _ => Err(Error::Parse(
                "ring weight must be \"formal\" or a decimal string".into(),
            )),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self.base {
            Base::Int => "Z".to_string(),
            Base::ModP(p) => format!("F_{p}"),
        };
        match &self.weight {
            Weight::Formal => write!(f, "{base}[λ]"),
            Weight::Pinned(w) => write!(f, "{base} (λ = {w})"),
        }
    }
}

/// A coefficient value. Residues live in `[0, p)`; polynomial coefficient
/// lists are indexed by `λ`-exponent and carry no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Int(BigInt),
    Mod { value: u64, modulus: u64 },
    IntPoly(Vec<BigInt>),
    ModPoly { coeffs: Vec<u64>, modulus: u64 },
}

fn residue(n: &BigInt, p: u64) -> u64 {
    n.mod_floor(&BigInt::from(p))
        .to_u64()
        .expect("residue fits in u64")
}

fn trim_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn trim_mod(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - b as u128) % p as u128) as u64
}

#[inline]
fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    s.parse::<BigInt>()
        .map_err(|_| Error::Parse(format!("not a decimal integer: {s:?}")))
}

impl Coefficient {
    fn kind(&self) -> (Base, bool) {
        match self {
            Coefficient::Int(_) => (Base::Int, false),
            Coefficient::Mod { modulus, .. } => (Base::ModP(*modulus), false),
            Coefficient::IntPoly(_) => (Base::Int, true),
            Coefficient::ModPoly { modulus, .. } => (Base::ModP(*modulus), true),
        }
    }

    fn kind_name(&self) -> String {
        match self.kind() {
            (Base::Int, false) => "Z".into(),
            (Base::ModP(p), false) => format!("F_{p}"),
            (Base::Int, true) => "Z[λ]".into(),
            (Base::ModP(p), true) => format!("F_{p}[λ]"),
        }
    }

    fn mismatch(&self, other: &Coefficient) -> Error {
        Error::RingMismatch {
            left: self.kind_name(),
            right: other.kind_name(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coefficient::Int(n) => n.is_zero(),
            Coefficient::Mod { value, .. } => *value == 0,
            Coefficient::IntPoly(c) => c.is_empty(),
            Coefficient::ModPoly { coeffs, .. } => coeffs.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coefficient::Int(n) => n.is_one(),
            Coefficient::Mod { value, .. } => *value == 1,
            Coefficient::IntPoly(c) => c.len() == 1 && c[0].is_one(),
            Coefficient::ModPoly { coeffs, .. } => coeffs == &[1],
        }
    }

    pub fn try_add(&self, other: &Coefficient) -> Result<Coefficient> {
        let mut out = self.clone();
        out.try_add_assign(other)?;
        Ok(out)
    }

    pub fn try_add_assign(&mut self, other: &Coefficient) -> Result<()> {
        match (&mut *self, other) {
            (Coefficient::Int(a), Coefficient::Int(b)) => *a += b,
            (
                Coefficient::Mod {
                    value: a,
                    modulus: p,
                },
                Coefficient::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => *a = add_mod(*a, *b, *p),
            (Coefficient::IntPoly(a), Coefficient::IntPoly(b)) => {
                if a.len() < b.len() {
                    a.resize(b.len(), BigInt::zero());
                }
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                while a.last().is_some_and(Zero::is_zero) {
                    a.pop();
                }
            }
            (
                Coefficient::ModPoly {
                    coeffs: a,
                    modulus: p,
                },
                Coefficient::ModPoly {
                    coeffs: b,
                    modulus: q,
                },
            ) if p == q => {
                if a.len() < b.len() {
                    a.resize(b.len(), 0);
                }
                for (x, y) in a.iter_mut().zip(b) {
                    *x = add_mod(*x, *y, *p);
                }
                while a.last() == Some(&0) {
                    a.pop();
                }
            }
            _ => return Err(self.mismatch(other)),
        }
        Ok(())
    }

    pub fn try_sub(&self, other: &Coefficient) -> Result<Coefficient> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Coefficient) -> Result<Coefficient> {
        Ok(match (self, other) {
            (Coefficient::Int(a), Coefficient::Int(b)) => Coefficient::Int(a * b),
            (
                Coefficient::Mod {
                    value: a,
                    modulus: p,
                },
                Coefficient::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Coefficient::Mod {
                value: mul_mod(*a, *b, *p),
                modulus: *p,
            },
            (Coefficient::IntPoly(a), Coefficient::IntPoly(b)) => {
                if a.is_empty() || b.is_empty() {
                    return Ok(Coefficient::IntPoly(Vec::new()));
                }
                let mut c = vec![BigInt::zero(); a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        c[i + j] += x * y;
                    }
                }
                Coefficient::IntPoly(trim_int(c))
            }
            (
                Coefficient::ModPoly {
                    coeffs: a,
                    modulus: p,
                },
                Coefficient::ModPoly {
                    coeffs: b,
                    modulus: q,
                },
            ) if p == q => {
                let p = *p;
                if a.is_empty() || b.is_empty() {
                    return Ok(Coefficient::ModPoly {
                        coeffs: Vec::new(),
                        modulus: p,
                    });
                }
                let mut c = vec![0u64; a.len() + b.len() - 1];
                for (i, x) in a.iter().enumerate() {
                    for (j, y) in b.iter().enumerate() {
                        c[i + j] = add_mod(c[i + j], mul_mod(*x, *y, p), p);
                    }
                }
                Coefficient::ModPoly {
                    coeffs: trim_mod(c),
                    modulus: p,
                }
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn neg(&self) -> Coefficient {
        match self {
            Coefficient::Int(a) => Coefficient::Int(-a),
            Coefficient::Mod { value, modulus } => Coefficient::Mod {
                value: sub_mod(0, *value, *modulus),
                modulus: *modulus,
            },
            Coefficient::IntPoly(a) => Coefficient::IntPoly(a.iter().map(|x| -x).collect()),
            Coefficient::ModPoly { coeffs, modulus } => Coefficient::ModPoly {
                coeffs: coeffs.iter().map(|x| sub_mod(0, *x, *modulus)).collect(),
                modulus: *modulus,
            },
        }
    }

    pub fn pow(&self, e: u32) -> Coefficient {
        let mut acc = match self {
            Coefficient::Int(_) => Coefficient::Int(BigInt::one()),
            Coefficient::Mod { modulus, .. } => Coefficient::Mod {
                value: 1 % modulus,
                modulus: *modulus,
            },
            Coefficient::IntPoly(_) => Coefficient::IntPoly(vec![BigInt::one()]),
            Coefficient::ModPoly { modulus, .. } => Coefficient::ModPoly {
                coeffs: trim_mod(vec![1 % modulus]),
                modulus: *modulus,
            },
        };
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Reduces an integer-based coefficient into the matching ring over `ℤ/p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<Coefficient> {
        require_prime(p)?;
        match self {
            Coefficient::Int(n) => Ok(Coefficient::Mod {
                value: residue(n, p),
                modulus: p,
            }),
            Coefficient::IntPoly(c) => Ok(Coefficient::ModPoly {
                coeffs: trim_mod(c.iter().map(|x| residue(x, p)).collect()),
                modulus: p,
            }),
            _ => Err(Error::RingMismatch {
                left: self.kind_name(),
                right: "an integer-based ring".into(),
            }),
        }
    }

    /// Substitutes `λ = value` into a polynomial coefficient; scalars are
    /// returned unchanged.
    pub fn eval_lambda(&self, value: &BigInt) -> Coefficient {
        match self {
            Coefficient::IntPoly(c) => {
                let mut acc = BigInt::zero();
                for x in c.iter().rev() {
                    acc = acc * value + x;
                }
                Coefficient::Int(acc)
            }
            Coefficient::ModPoly { coeffs, modulus } => {
                let v = residue(value, *modulus);
                let mut acc = 0u64;
                for x in coeffs.iter().rev() {
                    acc = add_mod(mul_mod(acc, v, *modulus), *x, *modulus);
                }
                Coefficient::Mod {
                    value: acc,
                    modulus: *modulus,
                }
            }
            scalar => scalar.clone(),
        }
    }

    /// Coefficient of `λ^d`, or the scalar itself at `d = 0`.
    pub fn lambda_coefficient(&self, d: usize) -> BigInt {
        match self {
            Coefficient::Int(n) if d == 0 => n.clone(),
            Coefficient::Mod { value, .. } if d == 0 => BigInt::from(*value),
            Coefficient::IntPoly(c) => c.get(d).cloned().unwrap_or_default(),
            Coefficient::ModPoly { coeffs, .. } => {
                coeffs.get(d).map(|&x| BigInt::from(x)).unwrap_or_default()
            }
            _ => BigInt::zero(),
        }
    }

    /// True when the printed form is a single signed monomial `cλ^d`.
    pub fn is_monomial(&self) -> bool {
        match self {
            Coefficient::IntPoly(c) => c.iter().filter(|x| !x.is_zero()).count() <= 1,
            Coefficient::ModPoly { coeffs, .. } => coeffs.iter().filter(|&&x| x != 0).count() <= 1,
            _ => true,
        }
    }

    /// Human-readable form; `ascii` spells the weight as `lambda`.
    pub fn render(&self, ascii: bool) -> String {
        let lam = if ascii { "lambda" } else { "λ" };
        let terms: Vec<(BigInt, usize)> = match self {
            Coefficient::Int(n) => return n.to_string(),
            Coefficient::Mod { value, .. } => return value.to_string(),
            Coefficient::IntPoly(c) => c
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(d, x)| (x.clone(), d))
                .collect(),
            Coefficient::ModPoly { coeffs, .. } => coeffs
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(d, x)| (BigInt::from(*x), d))
                .collect(),
        };
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (c, d)) in terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let power = match d {
                0 => String::new(),
                1 => lam.to_string(),
                d => format!("{lam}^{d}"),
            };
            if *d == 0 {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&power);
            } else {
                out.push_str(&format!("{mag}{power}"));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        match self {
            Coefficient::Int(n) => json!(n.to_string()),
            Coefficient::Mod { value, modulus } => json!({ "mod": modulus, "val": value }),
            Coefficient::IntPoly(c) => {
                json!({ "lambda": c.iter().map(|x| x.to_string()).collect::<Vec<_>>() })
            }
            Coefficient::ModPoly { coeffs, .. } => {
                json!({ "lambda": coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>() })
            }
        }
    }

    /// Parses a coefficient in the JSON encoding of `ring`, or a decimal
    /// string read as an integer constant. Values are canonicalized (reduced,
    /// trailing zeros stripped).
    pub fn from_json(v: &Value, ring: &Ring) -> Result<Coefficient> {
        match (ring.is_formal(), v) {
            (false, Value::String(s)) if ring.base == Base::Int => {
                Ok(Coefficient::Int(parse_bigint(s)?))
            }
            (false, Value::Object(m)) if ring.base != Base::Int => {
                let p = m.get("mod").and_then(Value::as_u64);
                if p != ring.modulus() {
                    return Err(Error::Parse(format!(
                        "coefficient modulus {p:?} does not match ring {ring}"
                    )));
                }
                let val = match m.get("val") {
                    Some(Value::Number(n)) => n
                        .as_u64()
                        .map(BigInt::from)
                        .or_else(|| n.as_i64().map(BigInt::from)),
                    Some(Value::String(s)) => Some(parse_bigint(s)?),
                    _ => None,
                }
                .ok_or_else(|| Error::Parse("residue needs an integer \"val\"".into()))?;
                Ok(ring.from_int(val))
            }
            (true, Value::Object(m)) => {
                let list = m
                    .get("lambda")
                    .and_then(Value::as_array)
                    .ok_or_else(|| Error::Parse("expected {\"lambda\": [...]}".into()))?;
                let mut coeffs = Vec::with_capacity(list.len());
                for x in list {
                    let s = x
                        .as_str()
                        .ok_or_else(|| Error::Parse("λ-coefficients must be strings".into()))?;
                    coeffs.push(parse_bigint(s)?);
                }
                Ok(match ring.base {
                    Base::Int => Coefficient::IntPoly(trim_int(coeffs)),
                    Base::ModP(p) => Coefficient::ModPoly {
                        coeffs: trim_mod(coeffs.iter().map(|x| residue(x, p)).collect()),
                        modulus: p,
                    },
                })
            }
            // a bare decimal is accepted as a constant in any ring
            (_, Value::String(s)) => Ok(ring.from_int(parse_bigint(s)?)),
            _ => Err(Error::Parse(format!(
                "coefficient {v} is not in the encoding of {ring}"
            ))),
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

// Operator forms panic on mismatched rings; elements check rings up front.

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        self.try_add(rhs).expect("coefficient ring mismatch")
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self.try_sub(rhs).expect("coefficient ring mismatch")
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        self.try_mul(rhs).expect("coefficient ring mismatch")
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient::neg(self)
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.try_add_assign(rhs).expect("coefficient ring mismatch")
    }
}
