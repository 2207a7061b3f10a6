//! Gelfand-Tsetlin patterns and partition overlaid patterns (POPs).
//!
//! A POP of `λ` is a GT pattern with bounding sequence `b_λ` together with
//! a bounded partition on every cell above the bottom row. POPs index the
//! Chari-Loktev basis of the local Weyl module; their grade is the number of
//! overlay boxes and their weight is the pattern weight, so summing
//! `q^grade x^weight` gives the graded character.
//!
//! Enumeration is streaming; nothing is materialized unless the caller
//! collects.

mod gt;
mod pop;

pub use gt::{enumerate_gt, enumerate_gt_weight, pattern_weight, GtIter, GtPattern};
pub use pop::{
    basis_word, cells, enumerate_pops, lowest_weight_pop, overlay_shape, pop_compare, pop_grade,
    pop_successor, BasisWord, Cell, Pop, PopIter, WordFactor,
};
