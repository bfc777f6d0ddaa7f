//! Checks of the Stirling-number identities in free Baxter algebras.
//!
//! Every check runs over `ℤ[λ]`, so a pass holds for every weight. Both sides
//! are computed as canonical elements (or coefficient lists) and compared
//! exactly.

use num_bigint::BigInt;
use serde_json::json;

use crate::coeff::Coefficient;
use crate::combinatorics::{
    compositions_of, factorial, multinomial, stirling_first, stirling_second, Composition,
};
use crate::error::{check_range, Error, Result};
use crate::free_baxter::{p1x_power, Algebra, BaxterElement, TensorWord};
use crate::report::{IdentityId, ReportValue, VerificationReport};

fn scaled(e: &BaxterElement, c: &Coefficient) -> BaxterElement {
    e.scale(c).expect("coefficient from the element's ring")
}

/// `Σ_{k=1..n} k! S(n,k) λ^{n-k} P^k(1)`.
pub fn stirling_side(algebra: &Algebra, n: u32) -> BaxterElement {
    let r = algebra.ring();
    BaxterElement::from_terms(
        algebra,
        (1..=n).map(|k| {
            let c = factorial(u64::from(k)) * stirling_second(n as usize, k as usize);
            (
                TensorWord::ones(k as usize + 1),
                &r.from_int(c) * &r.lambda_pow(n - k),
            )
        }),
    )
    .expect("coefficients from the algebra's ring")
}

/// `Σ_{|I|=n} (n; I) λ^{n-ℓ(I)} 1⊗x^{⊗I}`, the closed form of `(1⊗x)^n`.
pub fn multinomial_side(algebra: &Algebra, n: u32) -> Result<BaxterElement> {
    let r = algebra.ring();
    let mut terms = Vec::new();
    for c in compositions_of(n)? {
        let m = multinomial(u64::from(n), &c)?;
        let d = n - c.length() as u32;
        terms.push((
            TensorWord::from_composition(&c),
            &r.from_int(m) * &r.lambda_pow(d),
        ));
    }
    BaxterElement::from_terms(algebra, terms)
}

/// `P^k(1) P(1) = (k+1) P^{k+1}(1) + kλ P^k(1)` for `1 ≤ k ≤ 12`.
pub fn verify_circ(k: u32) -> Result<VerificationReport> {
    check_range("k", u64::from(k), 1, 12, "1..=12")?;
    let alg = Algebra::formal();
    let r = alg.ring();
    let pk = BaxterElement::iterated_p_of_unit(&alg, k as usize);
    let p1 = BaxterElement::iterated_p_of_unit(&alg, 1);
    let lhs = pk.product(&p1)?;
    let next = BaxterElement::iterated_p_of_unit(&alg, k as usize + 1);
    let rhs = &scaled(&next, &r.from_int(k + 1)) + &scaled(&pk, &(&r.from_int(k) * &r.lambda()));
    Ok(VerificationReport::new(
        IdentityId::Circ,
        [("k", json!(k))],
        lhs,
        rhs,
    ))
}

/// `P(1)^n = Σ k! S(n,k) λ^{n-k} P^k(1)` for `1 ≤ n ≤ 12`.
pub fn verify_thm_conn_second_kind(n: u32) -> Result<VerificationReport> {
    check_range("n", u64::from(n), 1, 12, "1..=12")?;
    let alg = Algebra::formal();
    let lhs = BaxterElement::iterated_p_of_unit(&alg, 1).power(n);
    let rhs = stirling_side(&alg, n);
    Ok(VerificationReport::new(
        IdentityId::Conn2,
        [("n", json!(n))],
        lhs,
        rhs,
    ))
}

/// `n! P^n(1) = Σ s(n,k) λ^{n-k} P(1)^k` for `1 ≤ n ≤ 10`.
pub fn verify_thm_conn_first_kind(n: u32) -> Result<VerificationReport> {
    check_range("n", u64::from(n), 1, 10, "1..=10")?;
    let alg = Algebra::formal();
    let r = alg.ring();
    let pn = BaxterElement::iterated_p_of_unit(&alg, n as usize);
    let lhs = scaled(&pn, &r.from_int(factorial(u64::from(n))));
    let p1 = BaxterElement::iterated_p_of_unit(&alg, 1);
    let mut rhs = BaxterElement::zero(&alg);
    let mut power = BaxterElement::unit(&alg);
    for k in 1..=n {
        power = p1.product(&power)?;
        let c = &r.from_int(stirling_first(n as usize, k as usize)) * &r.lambda_pow(n - k);
        rhs = &rhs + &scaled(&power, &c);
    }
    Ok(VerificationReport::new(
        IdentityId::Conn1,
        [("n", json!(n))],
        lhs,
        rhs,
    ))
}

fn check_composition(n: u32, parts: &Composition) -> Result<()> {
    check_range("n", u64::from(n), 1, 12, "1..=12")?;
    if parts.norm() != u64::from(n) {
        return Err(Error::NormMismatch {
            expected: u64::from(n),
            actual: parts.norm(),
        });
    }
    Ok(())
}

/// The full coefficient of `1⊗x^{⊗I}` in `(1⊗x)^n`, `λ`-power included.
pub fn mixcoeff(n: u32, parts: &Composition) -> Result<Coefficient> {
    check_composition(n, parts)?;
    let expansion = p1x_power(&Algebra::formal(), n);
    Ok(expansion.coefficient_of(&TensorWord::from_composition(parts)))
}

/// `(1⊗x)^n` equals its multinomial closed form. Equality of whole elements
/// also shows that only words `1⊗x^{⊗I}` with `I > 0` occur.
pub fn verify_thm_ref_part1(n: u32) -> Result<VerificationReport> {
    check_range("n", u64::from(n), 1, 12, "1..=12")?;
    let alg = Algebra::formal();
    let lhs = p1x_power(&alg, n);
    let rhs = multinomial_side(&alg, n)?;
    Ok(VerificationReport::new(
        IdentityId::Ref1,
        [("n", json!(n))],
        lhs,
        rhs,
    ))
}

/// `Σ_{ℓ(I)=k} S(n,I) = k! S(n,k) λ^{n-k}`, checked coefficient by
/// coefficient and again through the `x ↦ 1` homomorphism:
/// `f((1⊗x)^n) = (1⊗1)^n = Σ k! S(n,k) λ^{n-k} 1^{⊗(k+1)}`.
pub fn verify_thm_ref_part2(n: u32) -> Result<VerificationReport> {
    check_range("n", u64::from(n), 1, 12, "1..=12")?;
    let alg = Algebra::formal();
    let r = alg.ring();
    let expansion = p1x_power(&alg, n);

    let mut grouped = vec![r.zero(); n as usize];
    for c in compositions_of(n)? {
        let coeff = expansion.coefficient_of(&TensorWord::from_composition(&c));
        grouped[c.length() - 1] += &coeff;
    }
    let expected: Vec<Coefficient> = (1..=n)
        .map(|k| {
            let c = factorial(u64::from(k)) * stirling_second(n as usize, k as usize);
            &r.from_int(c) * &r.lambda_pow(n - k)
        })
        .collect();

    let specialized = expansion.specialize_x_to_one()?;
    let p1_power = BaxterElement::iterated_p_of_unit(&alg, 1).power(n);
    let closed = stirling_side(&alg, n);

    Ok(VerificationReport::new(
        IdentityId::Ref2,
        [("n", json!(n))],
        ReportValue::List(vec![
            grouped.into(),
            specialized.into(),
            p1_power.clone().into(),
        ]),
        ReportValue::List(vec![expected.into(), p1_power.into(), closed.into()]),
    ))
}

/// Finite content of the generating functions `e^{P(1)u}` and
/// `1/(1 - 1⊗x)`: for every `n ≤ N` the `u^n/n!` coefficient is the
/// second-kind identity, and `Σ_{n≤N} (1⊗x)^n` matches the multinomial sum.
pub fn egf_truncation_check(max_n: u32) -> Result<VerificationReport> {
    check_range("N", u64::from(max_n), 1, 10, "1..=10")?;
    let alg = Algebra::formal();
    let p1 = BaxterElement::iterated_p_of_unit(&alg, 1);
    let px = BaxterElement::word(&alg, TensorWord::new(vec![0, 1])?);

    let mut exp_lhs = Vec::new();
    let mut exp_rhs = Vec::new();
    let mut p1_power = BaxterElement::unit(&alg);
    let mut px_power = BaxterElement::unit(&alg);
    let mut geometric = BaxterElement::unit(&alg);
    let mut closed = BaxterElement::unit(&alg);
    for n in 1..=max_n {
        p1_power = p1.product(&p1_power)?;
        exp_lhs.push(p1_power.clone());
        exp_rhs.push(stirling_side(&alg, n));
        px_power = px.product(&px_power)?;
        geometric = &geometric + &px_power;
        closed = &closed + &multinomial_side(&alg, n)?;
    }
    Ok(VerificationReport::new(
        IdentityId::Egf,
        [("N", json!(max_n))],
        ReportValue::List(vec![exp_lhs.into(), geometric.into()]),
        ReportValue::List(vec![exp_rhs.into(), closed.into()]),
    ))
}

/// Runs one of the non-modular checks for every parameter `1..=max`.
pub fn verify_range(id: IdentityId, max: u32) -> Result<Vec<VerificationReport>> {
    let check: fn(u32) -> Result<VerificationReport> = match id {
        IdentityId::Circ => verify_circ,
        IdentityId::Conn1 => verify_thm_conn_first_kind,
        IdentityId::Conn2 => verify_thm_conn_second_kind,
        IdentityId::Ref1 => verify_thm_ref_part1,
        IdentityId::Ref2 => verify_thm_ref_part2,
        IdentityId::Egf => egf_truncation_check,
        other => {
            return Err(Error::Parse(format!(
                "{other} is a congruence check and takes a prime"
            )))
        }
    };
    (1..=max).map(check).collect()
}

/// `Σ_I S(n,I)` at `λ = 1`, the number of ordered set partitions of `n`.
pub fn total_mixcoeff_at_unit_weight(n: u32) -> BigInt {
    let expansion = p1x_power(&Algebra::formal(), n);
    expansion
        .terms()
        .map(|(_, c)| c.eval_lambda(&BigInt::from(1)).lambda_coefficient(0))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn circ_small() {
        for k in [1, 2, 12] {
            assert!(verify_circ(k).unwrap().passed, "k = {k}");
        }
        assert!(verify_circ(0).is_err());
        assert!(verify_circ(13).is_err());
    }

    #[test]
    fn circ_at_one_matches_expansion() {
        let alg = Algebra::formal();
        let r = alg.ring();
        let p1 = BaxterElement::iterated_p_of_unit(&alg, 1);
        let want = BaxterElement::from_terms(
            &alg,
            [
                (TensorWord::ones(3), r.from_int(2)),
                (TensorWord::ones(2), r.lambda()),
            ],
        )
        .unwrap();
        assert_eq!(p1.power(2), want);
    }

    #[test]
    fn connection_identities() {
        for n in [1, 2, 3] {
            assert!(verify_thm_conn_second_kind(n).unwrap().passed);
            assert!(verify_thm_conn_first_kind(n).unwrap().passed);
        }
        assert!(verify_thm_conn_first_kind(11).is_err());
    }

    #[test]
    fn mixcoeff_values() {
        let r = Algebra::formal().ring().clone();
        assert_eq!(
            mixcoeff(4, &comp(&[2, 2])).unwrap(),
            &r.from_int(6) * &r.lambda_pow(2)
        );
        assert_eq!(
            mixcoeff(4, &comp(&[1, 3])).unwrap(),
            &r.from_int(4) * &r.lambda_pow(2)
        );
        for n in 1..=6 {
            assert_eq!(mixcoeff(n, &comp(&[n])).unwrap(), r.lambda_pow(n - 1));
        }
        assert!(matches!(
            mixcoeff(4, &comp(&[1, 2])),
            Err(Error::NormMismatch { .. })
        ));
        assert!(mixcoeff(13, &comp(&[13])).is_err());
    }

    #[test]
    fn refinement_small() {
        for n in 1..=4 {
            assert!(verify_thm_ref_part1(n).unwrap().passed);
            assert!(verify_thm_ref_part2(n).unwrap().passed);
        }
    }

    #[test]
    fn generating_function_truncations() {
        assert!(egf_truncation_check(1).unwrap().passed);
        assert!(egf_truncation_check(4).unwrap().passed);
        assert!(egf_truncation_check(11).is_err());
    }

    #[test]
    fn ordered_set_partition_totals() {
        // Fubini numbers 1, 3, 13, 75, 541
        let want = [1, 3, 13, 75, 541];
        for (n, w) in (1..=5).zip(want) {
            assert_eq!(total_mixcoeff_at_unit_weight(n), BigInt::from(w));
        }
    }

    #[test]
    fn range_rejects_congruences() {
        assert!(verify_range(IdentityId::Sni, 3).is_err());
        assert_eq!(verify_range(IdentityId::Circ, 3).unwrap().len(), 3);
    }
}
