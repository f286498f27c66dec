//! Frameset (level 2) and site (level 3) documents.
//!
//! Only sorts, constructors and the wiring into the generic hyperdocument
//! class exist at these levels. Their basis documents have the shape of
//! pages, with lower-level hyperdocuments as the imported atoms; no symbol
//! atoms exist here.

use std::fmt;

use crate::attributes::AttrSet;
use crate::error::{Result, Unspecified};
use crate::hmd::{DocAddr, Hmd};
use crate::hyperdoc::{Basis, HyperDoc};
use crate::page::Location;
use crate::term::write_list;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FramesetStruct {
    HFrameset,
    VFrameset,
    AFrameset,
}

impl FramesetStruct {
    pub fn name(self) -> &'static str {
        match self {
            FramesetStruct::HFrameset => "hframeset",
            FramesetStruct::VFrameset => "vframeset",
            FramesetStruct::AFrameset => "aframeset",
        }
    }
}

impl fmt::Display for FramesetStruct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SiteStruct {
    SiteMap,
}

impl fmt::Display for SiteStruct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("sitemap")
    }
}

/// Basis document of an upper level: `S` are its struct tags and `D` the
/// lower-level documents it imports.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LevelDoc<S, D> {
    Empty,
    Import(Box<D>),
    Node {
        kind: S,
        children: Vec<LevelDoc<S, D>>,
        attrs: AttrSet,
    },
}

impl<S: Copy, D> LevelDoc<S, D> {
    pub fn mkld(kind: S, children: Vec<LevelDoc<S, D>>, attrs: AttrSet) -> Self {
        LevelDoc::Node {
            kind,
            children,
            attrs,
        }
    }

    pub fn import(doc: D) -> Self {
        LevelDoc::Import(Box::new(doc))
    }

    pub fn kind(&self) -> Option<S> {
        match self {
            LevelDoc::Node { kind, .. } => Some(*kind),
            _ => None,
        }
    }

    pub fn locate(&self, o: &Location) -> Result<&Self> {
        let mut here = self;
        for &n in o.steps() {
            here = match here {
                LevelDoc::Node { children, .. } => n
                    .checked_sub(1)
                    .and_then(|i| children.get(i))
                    .ok_or_else(|| {
                    Unspecified::new("locate", format!("location {o} does not exist"))
                })?,
                _ => {
                    return Err(Unspecified::new(
                        "locate",
                        format!("location {o} runs into an atom"),
                    ))
                }
            };
        }
        Ok(here)
    }

    pub fn has_location(&self, o: &Location) -> bool {
        self.locate(o).is_ok()
    }

    /// True iff `o` exists and holds the empty document.
    pub fn include_link_ok(&self, o: &Location) -> bool {
        matches!(self.locate(o), Ok(LevelDoc::Empty))
    }
}

impl<S, D> Basis for LevelDoc<S, D>
where
    S: Copy + Ord + fmt::Debug,
    D: Clone + Ord + fmt::Debug,
{
    type Loc = Location;

    fn embed_link_ok(&self, loc: &Location) -> bool {
        self.include_link_ok(loc)
    }
}

impl<S: fmt::Display, D: fmt::Display> fmt::Display for LevelDoc<S, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LevelDoc::Empty => f.write_str("mtdoc"),
            LevelDoc::Import(d) => write!(f, "imp_hd({d})"),
            LevelDoc::Node {
                kind,
                children,
                attrs,
            } => {
                write!(f, "mkld({kind}, ")?;
                write_list(f, '[', children, ']')?;
                write!(f, ", {attrs})")
            }
        }
    }
}

/// Chapter: frameset structure over hypermedia documents.
pub type Ld2 = LevelDoc<FramesetStruct, Hmd>;
/// Frameset document.
pub type Hd2 = HyperDoc<Ld2, DocAddr>;
/// Book: site structure over frameset documents.
pub type Ld3 = LevelDoc<SiteStruct, Hd2>;
/// Site document.
pub type Hd3 = HyperDoc<Ld3, DocAddr>;
