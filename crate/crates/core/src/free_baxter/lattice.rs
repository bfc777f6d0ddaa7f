//! Lattice-path evaluation of the mixable shuffle product.
//!
//! Terms of `u ⧢ v` correspond to monotone paths from `(0, 0)` to
//! `(|u|, |v|)` with unit right, up and diagonal steps. A right step emits the
//! next factor of `u`, an up step the next factor of `v`, a diagonal step their
//! product in `A`; the path contributes `λ^{#diagonals}`.

use std::collections::BTreeMap;

use super::element::BaxterElement;
use super::word::TensorWord;
use crate::coeff::Coefficient;
use crate::error::{check_range, Result};

/// Longest word accepted by [`product_oracle`].
pub const ORACLE_MAX_WORD_LEN: usize = 8;

fn walk(
    u: &[u32],
    v: &[u32],
    (i, j): (usize, usize),
    merge: &impl Fn(u32, u32) -> u32,
    buf: &mut Vec<u32>,
    diagonals: u32,
    emit: &mut impl FnMut(&[u32], u32),
) {
    if i == u.len() && j == v.len() {
        emit(buf, diagonals);
        return;
    }
    if i < u.len() {
        buf.push(u[i]);
        walk(u, v, (i + 1, j), merge, buf, diagonals, emit);
        buf.pop();
    }
    if j < v.len() {
        buf.push(v[j]);
        walk(u, v, (i, j + 1), merge, buf, diagonals, emit);
        buf.pop();
    }
    if i < u.len() && j < v.len() {
        buf.push(merge(u[i], v[j]));
        walk(u, v, (i + 1, j + 1), merge, buf, diagonals + 1, emit);
        buf.pop();
    }
}

/// Number of right/up/diagonal lattice paths from `(0, 0)` to `(m, n)`,
/// counted by walking them.
pub fn lattice_path_count(m: usize, n: usize) -> u64 {
    let u = vec![0; m];
    let v = vec![0; n];
    let mut count = 0u64;
    walk(
        &u,
        &v,
        (0, 0),
        &|a, b| a + b,
        &mut Vec::new(),
        0,
        &mut |_, _| count += 1,
    );
    count
}

/// The mixable shuffle product evaluated path by path, for cross-checking
/// [`BaxterElement::product`]. Words are limited to
/// [`ORACLE_MAX_WORD_LEN`] factors.
pub fn product_oracle(a: &BaxterElement, b: &BaxterElement) -> Result<BaxterElement> {
    let algebra = a.algebra();
    algebra.check_same(b.algebra())?;
    for x in [a, b] {
        check_range(
            "word length",
            x.max_word_len() as u64,
            0,
            ORACLE_MAX_WORD_LEN as u64,
            "0..=8",
        )?;
    }
    let ring = algebra.ring();
    let base = algebra.base();
    let merge = |x: u32, y: u32| base.mul(x, y);
    let mut lambda_powers: Vec<Coefficient> = vec![ring.one()];
    let mut acc: BTreeMap<TensorWord, Coefficient> = BTreeMap::new();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            let cab = ca * cb;
            let mut buf = vec![merge(wa.head(), wb.head())];
            walk(
                wa.tail(),
                wb.tail(),
                (0, 0),
                &merge,
                &mut buf,
                0,
                &mut |word, d| {
                    while lambda_powers.len() <= d as usize {
                        let next = lambda_powers.last().unwrap() * &ring.lambda();
                        lambda_powers.push(next);
                    }
                    let c = &cab * &lambda_powers[d as usize];
                    let key = TensorWord::new(word.to_vec()).expect("non-empty");
                    match acc.get_mut(&key) {
                        Some(x) => *x += &c,
                        None => {
                            acc.insert(key, c);
                        }
                    }
                },
            );
        }
    }
    BaxterElement::from_terms(algebra, acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::binomial;
    use crate::free_baxter::Algebra;
    use num_bigint::BigInt;

    fn delannoy(m: u64, n: u64) -> BigInt {
        (0..=m.min(n))
            .map(|k| binomial(m, k) * binomial(n, k) * BigInt::from(2u64.pow(k as u32)))
            .sum()
    }

    #[test]
    fn path_counts() {
        assert_eq!(lattice_path_count(1, 1), 3);
        assert_eq!(lattice_path_count(2, 1), 5);
        for m in 0..6 {
            for n in 0..6 {
                assert_eq!(
                    BigInt::from(lattice_path_count(m, n)),
                    delannoy(m as u64, n as u64)
                );
            }
        }
    }

    #[test]
    fn rejects_long_words() {
        let alg = Algebra::formal();
        let long = BaxterElement::word(&alg, TensorWord::new(vec![1; 9]).unwrap());
        let unit = BaxterElement::unit(&alg);
        assert!(product_oracle(&long, &unit).is_err());
        assert!(product_oracle(&unit, &unit).is_ok());
    }
}
