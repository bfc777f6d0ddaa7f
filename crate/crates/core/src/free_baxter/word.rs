use std::cmp::Ordering;
use std::fmt;

use crate::coeff::{require_prime, Base, Ring};
use crate::combinatorics::Composition;
use crate::error::{Error, Result};

/// The commutative algebra `A` the tensor factors live in: either `C[x]` or,
/// over `C = ℤ/p`, the quotient `F_p[x]/(x^p - x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseAlgebra {
    Polynomial,
    Quotient(u64),
}

impl BaseAlgebra {
    /// Canonical exponent of `x^e`.
    #[inline]
    pub fn reduce(self, e: u32) -> u32 {
        match self {
            BaseAlgebra::Polynomial => e,
            BaseAlgebra::Quotient(_) if e == 0 => 0,
            BaseAlgebra::Quotient(p) => ((u64::from(e) - 1) % (p - 1)) as u32 + 1,
        }
    }

    #[inline]
    pub fn is_reduced(self, e: u32) -> bool {
        match self {
            BaseAlgebra::Polynomial => true,
            BaseAlgebra::Quotient(p) => u64::from(e) < p,
        }
    }

    /// Product of monomials in `A`.
    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        self.reduce(a.checked_add(b).expect("exponent overflow"))
    }
}

/// A coefficient ring, its weight, and a base algebra: everything the mixable
/// shuffle product needs.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Algebra {
    ring: Ring,
    base: BaseAlgebra,
}

impl Algebra {
    pub fn new(ring: Ring, base: BaseAlgebra) -> Result<Self> {
        if let BaseAlgebra::Quotient(p) = base {
            require_prime(p)?;
            if ring.base() != Base::ModP(p) {
                return Err(Error::RingMismatch {
                    left: ring.to_string(),
                    right: format!("F_{p}[x]/(x^{p} - x) needs coefficients in F_{p}"),
                });
            }
        }
        Ok(Algebra { ring, base })
    }

    /// Free Baxter algebra on `C[x]`.
    pub fn polynomial(ring: Ring) -> Self {
        Algebra {
            ring,
            base: BaseAlgebra::Polynomial,
        }
    }

    /// `ℤ[λ]` coefficients over `C[x]`: every weight at once.
    pub fn formal() -> Self {
        Algebra::polynomial(Ring::lambda_int())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn base(&self) -> BaseAlgebra {
        self.base
    }

    pub(crate) fn check_same(&self, other: &Algebra) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.to_string(),
                right: other.to_string(),
            })
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.base {
            BaseAlgebra::Polynomial => write!(f, "{} over C[x]", self.ring),
            BaseAlgebra::Quotient(p) => write!(f, "{} over F_{p}[x]/(x^{p} - x)", self.ring),
        }
    }
}

/// A basis word `x^{e1} ⊗ ⋯ ⊗ x^{ek}` of `A^{⊗k}`, stored as its exponent
/// vector. Exponent 0 is the unit of `A`.
///
/// Words order longest first, then lexicographically by exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorWord(Vec<u32>);

impl TensorWord {
    pub fn new(exponents: Vec<u32>) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::Parse("tensor words need at least one factor".into()));
        }
        Ok(TensorWord(exponents))
    }

    pub(crate) fn from_vec_unchecked(exponents: Vec<u32>) -> Self {
        debug_assert!(!exponents.is_empty());
        TensorWord(exponents)
    }

    /// The algebra unit, the one-factor word `1`.
    pub fn unit() -> Self {
        TensorWord(vec![0])
    }

    /// `1^{⊗n}`, which is `P^{n-1}(1)`.
    pub fn ones(n: usize) -> Self {
        assert!(n >= 1, "1^{{⊗0}} is not a word");
        TensorWord(vec![0; n])
    }

    /// `1 ⊗ x^{⊗I}`.
    pub fn from_composition(c: &Composition) -> Self {
        let mut v = Vec::with_capacity(c.length() + 1);
        v.push(0);
        v.extend_from_slice(c.parts());
        TensorWord(v)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn head(&self) -> u32 {
        self.0[0]
    }

    pub fn tail(&self) -> &[u32] {
        &self.0[1..]
    }

    pub fn render(&self, ascii: bool) -> String {
        render_factors(&self.0, ascii)
    }
}

pub(crate) fn render_factors(exponents: &[u32], ascii: bool) -> String {
    let sep = if ascii { "(x)" } else { "⊗" };
    exponents
        .iter()
        .map(|&e| match e {
            0 => "1".to_string(),
            1 => "x".to_string(),
            e => format!("x^{e}"),
        })
        .collect::<Vec<_>>()
        .join(sep)
}

pub(crate) fn word_order(a: &[u32], b: &[u32]) -> Ordering {
    b.len().cmp(&a.len()).then_with(|| a.cmp(b))
}

impl Ord for TensorWord {
    fn cmp(&self, other: &Self) -> Ordering {
        word_order(&self.0, &other.0)
    }
}

impl PartialOrd for TensorWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for TensorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}
