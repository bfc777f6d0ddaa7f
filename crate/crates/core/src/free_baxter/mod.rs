//! The free Baxter algebra `⊕_{n≥1} A^{⊗n}` on `A = C[x]` (or a quotient of
//! it), with the mixable shuffle product and the operator `P`.

mod element;
mod lattice;
mod shuffle;
mod word;

pub use element::BaxterElement;
pub use lattice::{lattice_path_count, product_oracle, ORACLE_MAX_WORD_LEN};
pub use shuffle::shuffle_tails;
pub use word::{Algebra, BaseAlgebra, TensorWord};

/// `(1⊗x)^n` over `algebra`.
pub fn p1x_power(algebra: &Algebra, n: u32) -> BaxterElement {
    let p_of_x = BaxterElement::word(algebra, TensorWord::from_vec_unchecked(vec![0, 1]));
    p_of_x.power(n)
}
