use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::shuffle;
use super::word::{Algebra, BaseAlgebra, TensorWord};
use crate::coeff::{Coefficient, Ring};
use crate::error::{Error, Result};

/// A finite linear combination of tensor words in canonical form: no zero
/// coefficients, terms ordered by [`TensorWord`]'s order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaxterElement {
    algebra: Algebra,
    terms: BTreeMap<TensorWord, Coefficient>,
}

impl BaxterElement {
    pub fn zero(algebra: &Algebra) -> Self {
        BaxterElement {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The multiplicative unit, the word `1`.
    pub fn unit(algebra: &Algebra) -> Self {
        Self::word(algebra, TensorWord::unit())
    }

    /// A single word with coefficient one. Exponents are reduced in the base
    /// algebra.
    pub fn word(algebra: &Algebra, word: TensorWord) -> Self {
        let one = algebra.ring().one();
        Self::monomial(algebra, word, one).expect("one lies in the ring")
    }

    pub fn monomial(algebra: &Algebra, word: TensorWord, coeff: Coefficient) -> Result<Self> {
        Self::from_terms(algebra, [(word, coeff)])
    }

    /// Builds an element from arbitrary terms, merging repeats and dropping
    /// zeros.
    pub fn from_terms(
        algebra: &Algebra,
        terms: impl IntoIterator<Item = (TensorWord, Coefficient)>,
    ) -> Result<Self> {
        let base = algebra.base();
        let mut map: BTreeMap<TensorWord, Coefficient> = BTreeMap::new();
        for (word, coeff) in terms {
            algebra.ring().check(&coeff)?;
            let word = if matches!(base, BaseAlgebra::Polynomial) {
                word
            } else {
                TensorWord::from_vec_unchecked(
                    word.exponents().iter().map(|&e| base.reduce(e)).collect(),
                )
            };
            match map.get_mut(&word) {
                Some(c) => *c += &coeff,
                None => {
                    map.insert(word, coeff);
                }
            }
        }
        map.retain(|_, c| !c.is_zero());
        Ok(BaxterElement {
            algebra: algebra.clone(),
            terms: map,
        })
    }

    /// Canonicalizes a raw accumulator whose words are already reduced.
    pub(crate) fn from_accumulator(algebra: &Algebra, acc: HashMap<Vec<u32>, Coefficient>) -> Self {
        let terms = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(w, c)| (TensorWord::from_vec_unchecked(w), c))
            .collect();
        BaxterElement {
            algebra: algebra.clone(),
            terms,
        }
    }

    /// `P^k(1) = 1^{⊗(k+1)}`.
    pub fn iterated_p_of_unit(algebra: &Algebra, k: usize) -> Self {
        Self::word(algebra, TensorWord::ones(k + 1))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn ring(&self) -> &Ring {
        self.algebra.ring()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorWord, &Coefficient)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Length of the longest word, 0 for the zero element.
    pub fn max_word_len(&self) -> usize {
        self.terms.keys().map(TensorWord::len).max().unwrap_or(0)
    }

    /// Coefficient of `word`, or the ring's zero when absent.
    pub fn coefficient_of(&self, word: &TensorWord) -> Coefficient {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(|| self.ring().zero())
    }

    pub fn try_add(&self, other: &BaxterElement) -> Result<BaxterElement> {
        self.algebra.check_same(&other.algebra)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            match terms.get_mut(w) {
                Some(acc) => *acc += c,
                None => {
                    terms.insert(w.clone(), c.clone());
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(BaxterElement {
            algebra: self.algebra.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &BaxterElement) -> Result<BaxterElement> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> BaxterElement {
        self.map_coefficients(|c| c.neg())
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Coefficient) -> Result<BaxterElement> {
        self.ring().check(c)?;
        Ok(self.map_coefficients(|x| x * c))
    }

    fn map_coefficients(&self, f: impl Fn(&Coefficient) -> Coefficient) -> BaxterElement {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (w.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        BaxterElement {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    /// The mixable shuffle product.
    pub fn product(&self, other: &BaxterElement) -> Result<BaxterElement> {
        shuffle::product(self, other)
    }

    /// The Baxter operator `P(a1⊗⋯⊗am) = 1⊗a1⊗⋯⊗am`, extended linearly.
    pub fn baxter_p(&self) -> BaxterElement {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let mut v = Vec::with_capacity(w.len() + 1);
                v.push(0);
                v.extend_from_slice(w.exponents());
                (TensorWord::from_vec_unchecked(v), c.clone())
            })
            .collect();
        BaxterElement {
            algebra: self.algebra.clone(),
            terms,
        }
    }

    /// `a^n` by repeated multiplication, `a^0` being the unit.
    pub fn power(&self, n: u32) -> BaxterElement {
        let mut acc = BaxterElement::unit(&self.algebra);
        for _ in 0..n {
            acc = self.product(&acc).expect("same algebra");
        }
        acc
    }

    /// Image under the Baxter homomorphism induced by `x ↦ 1`: every factor
    /// becomes the unit, so `x^{⊗I}` maps to `1^{⊗ℓ(I)}`.
    pub fn specialize_x_to_one(&self) -> Result<BaxterElement> {
        if self.algebra.base() != BaseAlgebra::Polynomial {
            return Err(Error::UnsupportedBase);
        }
        Self::from_terms(
            &self.algebra,
            self.terms
                .iter()
                .map(|(w, c)| (TensorWord::ones(w.len()), c.clone())),
        )
    }

    /// Termwise reduction of an integer-based element modulo `p`.
    pub fn reduce_mod_p(&self, p: u64) -> Result<BaxterElement> {
        let ring = self.ring().reduce_mod_p(p)?;
        let algebra = Algebra::new(ring, self.algebra.base())?;
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            let r = c.reduce_mod_p(p)?;
            if !r.is_zero() {
                terms.insert(w.clone(), r);
            }
        }
        Ok(BaxterElement { algebra, terms })
    }

    /// Substitutes a value for a formal weight, landing in the pinned ring.
    pub fn pin_lambda(&self, value: impl Into<BigInt>) -> Result<BaxterElement> {
        let value = value.into();
        if !self.ring().is_formal() {
            return Ok(self.clone());
        }
        let ring = Ring::pinned(self.ring().base(), value.clone())?;
        let algebra = Algebra::new(ring, self.algebra.base())?;
        Self::from_terms(
            &algebra,
            self.terms
                .iter()
                .map(|(w, c)| (w.clone(), c.eval_lambda(&value))),
        )
    }

    /// Text form such as `2 (1⊗x⊗x) + λ (1⊗x^2)`. Unit coefficients are
    /// omitted; `ascii` swaps `⊗` for `(x)` and `λ` for `lambda`.
    pub fn render(&self, ascii: bool) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let word = format!("({})", w.render(ascii));
            let (negative, body) = if c.is_monomial() {
                let s = c.render(ascii);
                match s.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, s),
                }
            } else {
                (false, format!("({})", c.render(ascii)))
            };
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if body != "1" {
                out.push_str(&body);
                out.push(' ');
            }
            out.push_str(&word);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let base = match self.algebra.base() {
            BaseAlgebra::Polynomial => json!("polynomial"),
            BaseAlgebra::Quotient(p) => json!({ "quotient": p }),
        };
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(w, c)| json!({ "coeff": c.to_json(), "word": w.exponents() }))
            .collect();
        json!({ "ring": self.ring().to_json(), "base": base, "terms": terms })
    }

    /// Parses the element JSON format. `default_ring` applies when the
    /// document has no `"ring"` key; a missing `"base"` means `C[x]`.
    /// Empty words and unreduced quotient exponents are rejected.
    pub fn from_json(v: &Value, default_ring: &Ring) -> Result<BaxterElement> {
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("element must be a JSON object".into()))?;
        let ring = match obj.get("ring") {
            Some(r) => Ring::from_json(r)?,
            None => default_ring.clone(),
        };
        let base = match obj.get("base") {
            None => BaseAlgebra::Polynomial,
            Some(Value::String(s)) if s == "polynomial" => BaseAlgebra::Polynomial,
            Some(Value::Object(m)) => match m.get("quotient").and_then(Value::as_u64) {
                Some(p) => BaseAlgebra::Quotient(p),
                None => return Err(Error::Parse("base object needs \"quotient\": p".into())),
            },
            Some(other) => return Err(Error::Parse(format!("unknown base {other}"))),
        };
        let algebra = Algebra::new(ring, base)?;
        let list = obj
            .get("terms")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("element needs a \"terms\" array".into()))?;
        let mut terms = Vec::with_capacity(list.len());
        for t in list {
            let coeff = t
                .get("coeff")
                .ok_or_else(|| Error::Parse("term needs \"coeff\"".into()))?;
            let coeff = Coefficient::from_json(coeff, algebra.ring())?;
            let word = t
                .get("word")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse("term needs a \"word\" array".into()))?;
            let mut exps = Vec::with_capacity(word.len());
            for e in word {
                let e = e
                    .as_u64()
                    .and_then(|e| u32::try_from(e).ok())
                    .ok_or_else(|| Error::Parse(format!("bad exponent {e}")))?;
                if !base.is_reduced(e) {
                    return Err(Error::Parse(format!(
                        "exponent {e} is not reduced in the quotient base"
                    )));
                }
                exps.push(e);
            }
            terms.push((TensorWord::new(exps)?, coeff));
        }
        Self::from_terms(&algebra, terms)
    }
}

impl Add for &BaxterElement {
    type Output = BaxterElement;
    fn add(self, rhs: &BaxterElement) -> BaxterElement {
        self.try_add(rhs).expect("algebra mismatch")
    }
}

impl Sub for &BaxterElement {
    type Output = BaxterElement;
    fn sub(self, rhs: &BaxterElement) -> BaxterElement {
        self.try_sub(rhs).expect("algebra mismatch")
    }
}

impl Mul for &BaxterElement {
    type Output = BaxterElement;
    fn mul(self, rhs: &BaxterElement) -> BaxterElement {
        self.product(rhs).expect("algebra mismatch")
    }
}

impl Neg for &BaxterElement {
    type Output = BaxterElement;
    fn neg(self) -> BaxterElement {
        BaxterElement::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Base;

    fn w(e: &[u32]) -> TensorWord {
        TensorWord::new(e.to_vec()).unwrap()
    }

    #[test]
    fn baxter_operator() {
        let alg = Algebra::formal();
        let x = BaxterElement::word(&alg, w(&[1]));
        assert_eq!(x.baxter_p(), BaxterElement::word(&alg, w(&[0, 1])));
        let two = alg.ring().from_int(2);
        let a = BaxterElement::monomial(&alg, w(&[1, 1]), two.clone()).unwrap();
        assert_eq!(
            a.baxter_p(),
            BaxterElement::monomial(&alg, w(&[0, 1, 1]), two).unwrap()
        );
        let mut p = BaxterElement::unit(&alg);
        for _ in 0..4 {
            p = p.baxter_p();
        }
        assert_eq!(p, BaxterElement::iterated_p_of_unit(&alg, 4));
        assert!(BaxterElement::zero(&alg).baxter_p().is_zero());
    }

    #[test]
    fn specialization() {
        let alg = Algebra::formal();
        let a = BaxterElement::word(&alg, w(&[2, 1]));
        assert_eq!(
            a.specialize_x_to_one().unwrap(),
            BaxterElement::word(&alg, w(&[0, 0]))
        );
        let u = BaxterElement::unit(&alg);
        assert_eq!(u.specialize_x_to_one().unwrap(), u);

        let r = Ring::pinned(Base::ModP(3), 1).unwrap();
        let q = Algebra::new(r, BaseAlgebra::Quotient(3)).unwrap();
        assert_eq!(
            BaxterElement::unit(&q).specialize_x_to_one(),
            Err(Error::UnsupportedBase)
        );
    }

    #[test]
    fn coefficient_lookup_defaults_to_zero() {
        let alg = Algebra::formal();
        let a = BaxterElement::word(&alg, w(&[0, 1]));
        assert!(a.coefficient_of(&w(&[0, 2])).is_zero());
        assert!(a.coefficient_of(&w(&[0, 1])).is_one());
    }

    #[test]
    fn merging_and_zero_dropping() {
        let alg = Algebra::formal();
        let r = alg.ring();
        let a = BaxterElement::from_terms(
            &alg,
            [
                (w(&[1]), r.from_int(2)),
                (w(&[1]), r.from_int(-2)),
                (w(&[2]), r.one()),
            ],
        )
        .unwrap();
        assert_eq!(a.len(), 1);
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn quotient_words_are_reduced() {
        let r = Ring::pinned(Base::ModP(3), 1).unwrap();
        let q = Algebra::new(r, BaseAlgebra::Quotient(3)).unwrap();
        let a = BaxterElement::word(&q, w(&[3, 4, 0]));
        assert_eq!(a.terms().next().unwrap().0.exponents(), &[1, 2, 0]);
    }

    #[test]
    fn reduction_mod_p() {
        let alg = Algebra::formal();
        let r = alg.ring();
        let a = BaxterElement::from_terms(
            &alg,
            [(w(&[0, 1, 1]), r.from_int(2)), (w(&[0, 2]), r.lambda())],
        )
        .unwrap();
        let red = a.reduce_mod_p(2).unwrap();
        let r2 = Ring::formal(Base::ModP(2)).unwrap();
        let alg2 = Algebra::polynomial(r2.clone());
        assert_eq!(
            red,
            BaxterElement::monomial(&alg2, w(&[0, 2]), r2.lambda()).unwrap()
        );
        assert!(BaxterElement::zero(&alg).reduce_mod_p(7).unwrap().is_zero());
        assert_eq!(a.reduce_mod_p(4), Err(Error::NotPrime(4)));
    }

    #[test]
    fn rendering() {
        let alg = Algebra::formal();
        let r = alg.ring();
        let a = BaxterElement::from_terms(
            &alg,
            [(w(&[0, 2]), r.lambda()), (w(&[0, 1, 1]), r.from_int(2))],
        )
        .unwrap();
        assert_eq!(a.render(false), "2 (1⊗x⊗x) + λ (1⊗x^2)");
        assert_eq!(a.render(true), "2 (1(x)x(x)x) + lambda (1(x)x^2)");
        assert_eq!(a.neg().render(false), "-2 (1⊗x⊗x) - λ (1⊗x^2)");
        let b = BaxterElement::monomial(&alg, w(&[1]), &r.one() + &r.lambda()).unwrap();
        assert_eq!(b.render(false), "(1 + λ) (x)");
        assert_eq!(BaxterElement::zero(&alg).render(false), "0");
    }

    #[test]
    fn json_parser_rejections() {
        let ring = Ring::lambda_int();
        let empty_word = json!({"terms": [{"coeff": {"lambda": ["1"]}, "word": []}]});
        assert!(BaxterElement::from_json(&empty_word, &ring).is_err());
        let unreduced = json!({
            "ring": {"base": {"mod": 3}, "weight": "1"},
            "base": {"quotient": 3},
            "terms": [{"coeff": {"mod": 3, "val": 1}, "word": [0, 3]}]
        });
        assert!(BaxterElement::from_json(&unreduced, &ring).is_err());
        let ok = json!({"terms": [{"coeff": {"lambda": ["0", "2"]}, "word": [0, 1]}]});
        let a = BaxterElement::from_json(&ok, &ring).unwrap();
        assert_eq!(a.render(false), "2λ (1⊗x)");
        assert_eq!(BaxterElement::from_json(&a.to_json(), &ring).unwrap(), a);
    }

    #[test]
    fn pinning_the_weight() {
        let alg = Algebra::formal();
        let r = alg.ring();
        let a = BaxterElement::monomial(&alg, w(&[0, 2]), &r.from_int(3) + &r.lambda()).unwrap();
        let pinned = a.pin_lambda(-3).unwrap();
        assert!(pinned.is_zero());
        assert!(!pinned.ring().is_formal());
    }
}
