//! Graded characters in `Z[q][x_1, …, x_{n+1}]`.
//!
//! * [`qwhittaker_char`]: `ch_gr W_loc(λ) = P_λ(x; q, 0)` as a GT-pattern sum
//!   of products of Gaussian binomials.
//! * [`pop_char`]: the same character counted POP by POP (used as an oracle).
//! * [`pieri_gm`], [`product_onerow`]: the `t = 0` Pieri rule for
//!   multiplying by a one-row polynomial.
//! * [`tensor_char_lemma51`], [`truncated_char_lemma63`],
//!   [`m_module_char_prop71`]: closed-form characters of tensor products,
//!   truncated Weyl modules and `M(ν, λ)` modules.
//! * [`decompose_weyl_basis`]: expansion in the basis of local Weyl
//!   characters.

mod character;
mod decompose;
mod formulas;
mod pieri;
mod whittaker;

pub(crate) use character::bigint_to_json;
pub use character::GradedCharacter;
pub use decompose::decompose_weyl_basis;
pub use formulas::{
    assemble, lemma51_terms, lemma63_terms, m_module_char_prop71, prop71_terms, tensor_char_lemma51,
    truncated_char_lemma63, MVariant, TensorVariant, WeylTerm,
};
pub use pieri::{arm_leg, b_factor_t0, pieri_gm, product_onerow, product_onerow_char, ArmLeg};
pub use whittaker::{irreducible_char, pop_char, qwhittaker_char, qwhittaker_partition};

/// Character of a tensor product.
pub fn char_multiply(a: &GradedCharacter, b: &GradedCharacter) -> crate::Result<GradedCharacter> {
    a.multiply(b)
}
