//! Congruences modulo a prime `p` in free Baxter algebras.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::coeff::{is_prime, Base, Coefficient, Ring};
use crate::combinatorics::{compositions_of, stirling_second};
use crate::error::{check_range, Error, Result};
use crate::free_baxter::{p1x_power, Algebra, BaseAlgebra, BaxterElement, TensorWord};
use crate::report::{IdentityId, ReportValue, VerificationReport};

/// Primes accepted by the `(1⊗x)^p` checks.
pub const EXPANSION_PRIMES: [u64; 5] = [2, 3, 5, 7, 11];
/// Primes accepted by the element-level checks.
pub const ELEMENT_PRIMES: [u64; 3] = [2, 3, 5];

fn check_prime(p: u64, allowed: &[u64], range: &'static str) -> Result<()> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if !allowed.contains(&p) {
        return Err(Error::OutOfRange {
            what: "p",
            value: p,
            range,
        });
    }
    Ok(())
}

fn formal_mod(p: u64) -> Algebra {
    Algebra::polynomial(Ring::formal(Base::ModP(p)).expect("p is prime"))
}

/// `p | S(p,I)` for every composition `I ≠ (p)`, and the classical
/// `p | S(p,k)` for `1 < k < p`.
pub fn check_sni_congruence(p: u64) -> Result<VerificationReport> {
    check_prime(p, &EXPANSION_PRIMES, "{2, 3, 5, 7, 11}")?;
    let n = p as u32;
    let alg = Algebra::formal();
    let expansion = p1x_power(&alg, n);
    let rest = BaxterElement::from_terms(
        &alg,
        compositions_of(n)?
            .into_iter()
            .filter(|c| c.length() > 1)
            .map(|c| {
                let w = TensorWord::from_composition(&c);
                let coeff = expansion.coefficient_of(&w);
                (w, coeff)
            }),
    )?;
    let reduced = rest.reduce_mod_p(p)?;

    let field = Ring::pinned(Base::ModP(p), 1)?;
    let stirling: Vec<Coefficient> = (2..p as usize)
        .map(|k| field.from_int(stirling_second(p as usize, k)))
        .collect();
    let zeros = vec![field.zero(); stirling.len()];

    Ok(VerificationReport::new(
        IdentityId::Sni,
        [("p", json!(p))],
        ReportValue::List(vec![reduced.into(), stirling.into()]),
        ReportValue::List(vec![
            BaxterElement::zero(&formal_mod(p)).into(),
            zeros.into(),
        ]),
    ))
}

/// `(1⊗x)^p ≡ λ^{p-1} (1⊗x^p) mod p`.
pub fn check_x_power_congruence(p: u64) -> Result<VerificationReport> {
    check_prime(p, &EXPANSION_PRIMES, "{2, 3, 5, 7, 11}")?;
    let lhs = p1x_power(&Algebra::formal(), p as u32).reduce_mod_p(p)?;
    let target = formal_mod(p);
    let rhs = BaxterElement::monomial(
        &target,
        TensorWord::new(vec![0, p as u32])?,
        target.ring().lambda_pow(p as u32 - 1),
    )?;
    Ok(VerificationReport::new(
        IdentityId::Xpow,
        [("p", json!(p))],
        lhs,
        rhs,
    ))
}

/// `P(a)^p ≡ λ^{p-1} P(a^p) mod p` for an integer-based element `a` with at
/// most three terms of length at most two.
pub fn check_pa_congruence(p: u64, a: &BaxterElement) -> Result<VerificationReport> {
    check_prime(p, &ELEMENT_PRIMES, "{2, 3, 5}")?;
    check_range("terms", a.len() as u64, 0, 3, "0..=3")?;
    check_range("word length", a.max_word_len() as u64, 0, 2, "0..=2")?;
    let pa = a.baxter_p();
    let lhs = pa.power(p as u32).reduce_mod_p(p)?;
    let lambda = a.ring().lambda_pow(p as u32 - 1);
    let rhs = a
        .power(p as u32)
        .baxter_p()
        .scale(&lambda)?
        .reduce_mod_p(p)?;
    Ok(VerificationReport::new(
        IdentityId::Pa,
        [("p", json!(p)), ("a", a.to_json())],
        lhs,
        rhs,
    ))
}

/// `(a1⊗⋯⊗an)^p ≡ λ^{(n-1)(p-1)} a1^p⊗⋯⊗an^p mod p` for a word of at most
/// three factors, over `ℤ[λ]`.
pub fn check_tensor_freshman(p: u64, word: &TensorWord) -> Result<VerificationReport> {
    check_prime(p, &ELEMENT_PRIMES, "{2, 3, 5}")?;
    check_range("word length", word.len() as u64, 1, 3, "1..=3")?;
    let alg = Algebra::formal();
    let lhs = BaxterElement::word(&alg, word.clone())
        .power(p as u32)
        .reduce_mod_p(p)?;
    let powered = TensorWord::new(word.exponents().iter().map(|&e| e * p as u32).collect())?;
    let d = (word.len() as u32 - 1) * (p as u32 - 1);
    let target = formal_mod(p);
    let rhs = BaxterElement::monomial(&target, powered, target.ring().lambda_pow(d))?;
    Ok(VerificationReport::new(
        IdentityId::Freshman,
        [("p", json!(p)), ("word", json!(word.exponents()))],
        lhs,
        rhs,
    ))
}

/// `F_p` coefficients, weight 1, base `F_p[x]/(x^p - x)`.
pub fn quotient_algebra(p: u64) -> Result<Algebra> {
    Algebra::new(Ring::pinned(Base::ModP(p), 1)?, BaseAlgebra::Quotient(p))
}

/// A random element over the quotient base: one to three terms, words of one
/// to three factors, nonzero coefficients.
pub fn random_quotient_element(p: u64, rng: &mut impl Rng) -> BaxterElement {
    let alg = quotient_algebra(p).expect("p is prime");
    let n_terms = rng.random_range(1..=3);
    let terms: Vec<_> = (0..n_terms)
        .map(|_| {
            let len = rng.random_range(1..=3);
            let word = (0..len).map(|_| rng.random_range(0..p as u32)).collect();
            let c = rng.random_range(1..p);
            (
                TensorWord::new(word).expect("non-empty"),
                alg.ring().from_int(c),
            )
        })
        .collect();
    BaxterElement::from_terms(&alg, terms).expect("coefficients from the ring")
}

/// Seed for trial `i`, so trials are independent of each other's order.
fn trial_seed(seed: u64, i: u64) -> u64 {
    seed ^ (i.wrapping_add(1)).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

/// `a^p = a` for `trials` seeded random elements over `F_p[x]/(x^p - x)`
/// with `λ = 1`.
pub fn check_fermat_quotient_base(p: u64, trials: u32, seed: u64) -> Result<VerificationReport> {
    check_prime(p, &ELEMENT_PRIMES, "{2, 3, 5}")?;
    check_range("trials", u64::from(trials), 0, 100, "0..=100")?;
    let samples: Vec<BaxterElement> = (0..u64::from(trials))
        .map(|i| random_quotient_element(p, &mut ChaCha8Rng::seed_from_u64(trial_seed(seed, i))))
        .collect();
    let powers: Vec<BaxterElement> = samples.iter().map(|a| a.power(p as u32)).collect();
    Ok(VerificationReport::new(
        IdentityId::Fermat,
        [
            ("p", json!(p)),
            ("trials", json!(trials)),
            ("seed", json!(seed)),
        ],
        powers,
        samples,
    ))
}
