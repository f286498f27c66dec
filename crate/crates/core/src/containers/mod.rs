//! Finite value-semantics containers.
//!
//! Sets and maps iterate in the `Ord` order of their elements, which for the
//! derived orderings used throughout the crate is a canonical term order.

mod map;
mod seq;
mod set;
mod tree;

pub use map::FiniteMap;
pub use seq::{
    is_proper_prefix, listpair_map_default, nat_max, seq_append, seq_length, seq_listmap, seq_nth,
    seq_rep, Seq,
};
pub use set::FiniteSet;
pub use tree::RoseTree;
