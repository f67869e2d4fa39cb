//! Words, rotations, primitivity and necklace counting.

mod necklace;
mod word;

pub use necklace::{cycrep_counts, divisors, euler_phi, mobius, necklace_numerator, primitive_counts};
pub use word::{is_primitive, least_rotation_index, least_rotation_index_by, Letter, LetterOrder, Word};
