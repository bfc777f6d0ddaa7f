//! The mixable shuffle product.
//!
//! For words `a0⊗u` and `b0⊗v` the product is `(a0 b0) ⊗ (u ⧢ v)` where the
//! weight-λ shuffle of the tails satisfies
//!
//! ```text
//! ∅ ⧢ v = v,   u ⧢ ∅ = u,
//! (a·u') ⧢ (b·v') = a⊗(u' ⧢ b·v') + b⊗(a·u' ⧢ v') + λ (ab)⊗(u' ⧢ v').
//! ```
//!
//! The recursion is evaluated bottom-up over suffix pairs, merging like words
//! at every cell.

use std::collections::HashMap;

use super::element::BaxterElement;
use super::word::{word_order, Algebra};
use crate::coeff::Coefficient;
use crate::error::Result;

type Tails = HashMap<Vec<u32>, Coefficient>;

fn singleton(word: &[u32], one: &Coefficient) -> Tails {
    let mut t = Tails::with_capacity(1);
    t.insert(word.to_vec(), one.clone());
    t
}

/// Adds `scale · (head ⊗ t)` for every `t` in `src` into `acc`.
fn prepend_into(acc: &mut Tails, head: u32, src: &Tails, scale: Option<&Coefficient>) {
    for (tail, c) in src {
        let mut w = Vec::with_capacity(tail.len() + 1);
        w.push(head);
        w.extend_from_slice(tail);
        let c = match scale {
            Some(s) => s * c,
            None => c.clone(),
        };
        match acc.get_mut(&w) {
            Some(x) => *x += &c,
            None => {
                acc.insert(w, c);
            }
        }
    }
}

/// `u ⧢ v` as a map from (possibly empty) factor sequences to coefficients.
pub(crate) fn shuffle_map(algebra: &Algebra, u: &[u32], v: &[u32]) -> Tails {
    let ring = algebra.ring();
    let base = algebra.base();
    let one = ring.one();
    let lambda = ring.lambda();
    let merges = !lambda.is_zero();
    let scale = (!lambda.is_one()).then_some(&lambda);
    let (m, n) = (u.len(), v.len());

    // below[j] = u[i+1..] ⧢ v[j..] while row i is being filled
    let mut below: Vec<Tails> = (0..=n).map(|j| singleton(&v[j..], &one)).collect();
    for i in (0..m).rev() {
        let mut row: Vec<Tails> = vec![Tails::new(); n + 1];
        row[n] = singleton(&u[i..], &one);
        for j in (0..n).rev() {
            let mut acc = Tails::with_capacity(below[j].len() + row[j + 1].len());
            prepend_into(&mut acc, u[i], &below[j], None);
            prepend_into(&mut acc, v[j], &row[j + 1], None);
            if merges {
                prepend_into(&mut acc, base.mul(u[i], v[j]), &below[j + 1], scale);
            }
            acc.retain(|_, c| !c.is_zero());
            row[j] = acc;
        }
        below = row;
    }
    below.swap_remove(0)
}

/// The weight-λ shuffle `u ⧢ v` of two factor sequences, either of which may
/// be empty. Terms come back in canonical word order with nonzero
/// coefficients; `∅ ⧢ ∅` is the single empty sequence.
pub fn shuffle_tails(algebra: &Algebra, u: &[u32], v: &[u32]) -> Vec<(Vec<u32>, Coefficient)> {
    let base = algebra.base();
    let u: Vec<u32> = u.iter().map(|&e| base.reduce(e)).collect();
    let v: Vec<u32> = v.iter().map(|&e| base.reduce(e)).collect();
    let mut out: Vec<_> = shuffle_map(algebra, &u, &v).into_iter().collect();
    out.sort_by(|a, b| word_order(&a.0, &b.0));
    out
}

pub(crate) fn product(a: &BaxterElement, b: &BaxterElement) -> Result<BaxterElement> {
    let algebra = a.algebra();
    algebra.check_same(b.algebra())?;
    let base = algebra.base();
    let mut acc: HashMap<Vec<u32>, Coefficient> = HashMap::new();
    for (wa, ca) in a.terms() {
        for (wb, cb) in b.terms() {
            let head = base.mul(wa.head(), wb.head());
            let cab = ca * cb;
            let unit_scale = cab.is_one();
            for (tail, c) in shuffle_map(algebra, wa.tail(), wb.tail()) {
                let mut w = Vec::with_capacity(tail.len() + 1);
                w.push(head);
                w.extend_from_slice(&tail);
                let c = if unit_scale { c } else { &cab * &c };
                match acc.get_mut(&w) {
                    Some(x) => *x += &c,
                    None => {
                        acc.insert(w, c);
                    }
                }
            }
        }
    }
    Ok(BaxterElement::from_accumulator(algebra, acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Ring;
    use crate::free_baxter::TensorWord;

    fn w(e: &[u32]) -> TensorWord {
        TensorWord::new(e.to_vec()).unwrap()
    }

    #[test]
    fn single_letters() {
        let alg = Algebra::formal();
        let r = alg.ring();
        let got = shuffle_tails(&alg, &[1], &[1]);
        assert_eq!(
            got,
            vec![(vec![1, 1], r.from_int(2)), (vec![2], r.lambda())]
        );
    }

    #[test]
    fn empty_is_the_unit() {
        let alg = Algebra::formal();
        let one = alg.ring().one();
        assert_eq!(
            shuffle_tails(&alg, &[], &[2, 1]),
            vec![(vec![2, 1], one.clone())]
        );
        assert_eq!(
            shuffle_tails(&alg, &[2, 1], &[]),
            vec![(vec![2, 1], one.clone())]
        );
        assert_eq!(shuffle_tails(&alg, &[], &[]), vec![(vec![], one)]);
    }

    #[test]
    fn two_by_one_has_five_terms() {
        // a1 = x, a2 = x^2, b1 = x^4 so every term is a distinct word
        let alg = Algebra::formal();
        let r = alg.ring();
        let got = shuffle_tails(&alg, &[1, 2], &[4]);
        let mut want = vec![
            (vec![1, 2, 4], r.one()),
            (vec![1, 4, 2], r.one()),
            (vec![1, 6], r.lambda()),
            (vec![4, 1, 2], r.one()),
            (vec![5, 2], r.lambda()),
        ];
        want.sort_by(|a, b| word_order(&a.0, &b.0));
        assert_eq!(got, want);
    }

    #[test]
    fn degree_one_words_multiply_in_the_base() {
        let alg = Algebra::formal();
        let a = BaxterElement::word(&alg, w(&[2]));
        let b = BaxterElement::word(&alg, w(&[1, 3]));
        assert_eq!(
            a.product(&b).unwrap(),
            BaxterElement::word(&alg, w(&[3, 3]))
        );
        assert_eq!(
            b.product(&a).unwrap(),
            BaxterElement::word(&alg, w(&[3, 3]))
        );
    }

    #[test]
    fn weight_zero_is_the_plain_shuffle() {
        let ring = Ring::pinned(crate::coeff::Base::Int, 0).unwrap();
        let alg = Algebra::polynomial(ring);
        let got = shuffle_tails(&alg, &[1, 2], &[3, 4]);
        // C(4, 2) interleavings, no merges
        assert_eq!(got.len(), 6);
        assert!(got.iter().all(|(t, c)| t.len() == 4 && c.is_one()));
    }

    #[test]
    fn mismatched_algebras() {
        let a = BaxterElement::unit(&Algebra::formal());
        let b = BaxterElement::unit(&Algebra::polynomial(
            Ring::pinned(crate::coeff::Base::Int, 1).unwrap(),
        ));
        assert!(a.product(&b).is_err());
    }
}
