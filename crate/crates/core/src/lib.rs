//! Executable constructor-based algebra of Dexter-style hyperdocuments.
//!
//! The crate is layered bottom-up:
//!
//! * [`containers`]: value-semantics sets, maps, sequences and rose trees.
//! * [`attributes`]: the opaque attribute bag shared by every sort.
//! * [`anchor`] and [`link`]: anchors, specifiers and links.
//! * [`hyperdoc`]: the generic hyperdocument class, parameterized by a
//!   [`Basis`](hyperdoc::Basis) document sort and an [`Address`](hyperdoc::Address) sort.
//! * [`page`]: media objects and level-1 pages.
//! * [`hmd`]: the level-1 hypermedia document and its composite insertion.
//! * [`levels`]: the frameset (level 2) and site (level 3) sorts.
//!
//! Every value is immutable; editing functions return fresh values. Cases the
//! algebra leaves undefined are reported as [`Unspecified`].

pub mod anchor;
pub mod attributes;
pub mod containers;
mod error;
pub mod hmd;
pub mod hyperdoc;
pub mod levels;
pub mod link;
pub mod page;
pub mod term;

#[cfg(feature = "strategies")]
pub mod strategies;

pub use anchor::{Anchor, AnchorType};
pub use attributes::{Attr, AttrSet};
pub use containers::{FiniteMap, FiniteSet, RoseTree, Seq};
pub use error::{Result, Unspecified};
pub use hmd::{DocAddr, Hmd};
pub use hyperdoc::{Address, AnchorMap, AnchorMapTerm, Basis, HyperDoc};
pub use link::{ActuateType, AnchorName, Link, LinkType, ShowType, Specifier, Uri};
pub use page::{Location, MediaObject, Page, PageStruct};
