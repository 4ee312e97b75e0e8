//! Reduced words in the symmetric group.
//!
//! * [`perm`]: permutations, words, inversions, descents and `Red(σ)`.
//! * [`tableau`]: shapes and tableaux, hook lengths, column reading words.
//! * [`eg`]: Edelman-Greene insertion `w -> (P(w), Q(w))`.
//! * [`ck`]: Coxeter-Knuth moves and classes.
//! * [`wiring`]: wiring diagrams and crossings.
//! * [`bump`]: Little bumps and inverse bumps with step traces.
//! * [`grassmannian`]: `Tab` for Grassmannian words and minimal normalization.
//! * [`little`]: the Little map `LS`.
//! * [`rs`]: classical Robinson-Schensted and the odd-letter embedding.

pub mod bump;
pub mod ck;
pub mod eg;
pub mod error;
pub mod grassmannian;
pub mod little;
pub mod perm;
pub mod rs;
pub mod tableau;
pub mod wiring;

pub use bump::{
    deletion_is_reduced, inverse_bump, little_bump, little_bump_at_values, undo_bump, valid_starts,
    BumpStep, BumpTrace,
};
pub use ck::{all_ck_moves, apply_ck, ck_class, ck_moves_at, CkKind, CkMove, Direction};
pub use eg::{
    eg, eg_history, eg_insert_letter, tau, InsertionResult, InsertionStep, PathCell, RowAction,
};
pub use error::{Error, Result};
pub use grassmannian::{
    grassmannian_data, grassmannian_tab, is_grassmannian_word, minimal_grassmannian_normalize,
    GrassmannianData,
};
pub use little::{canonical_start, ls, LittleMap};
pub use perm::{Permutation, Word};
pub use rs::{halve_odd_entries, rs, rs_embedding_word};
pub use tableau::{Shape, Tableau};
pub use wiring::{crossing_of_values, wiring_diagram, WiringDiagram};
