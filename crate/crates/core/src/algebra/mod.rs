//! Formal linear combinations of words over `{x, y}` and the operations on them.

pub mod coefficient;
pub mod combo;
pub mod maps;
pub mod products;

pub use coefficient::{int, rat, Coefficient, Rational};
pub use combo::WordCombo;
pub use maps::{interpolate, phi, phi_word, star_sum, star_sum_word};
pub use products::{
    circled, circled_indices, harmonic, quasi_shuffle, quasi_shuffle_indices, star_harmonic, Merge,
};
