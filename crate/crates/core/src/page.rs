//! Media objects and level-1 pages.
//!
//! A [`Page`] is a finite term: the empty page, an imported media object, a
//! symbol, or a structured node `mkld(struct, children, attrs)`. Nodes are
//! addressed by [`Location`]s, paths of 1-based child indices.

use std::fmt;

use crate::attributes::AttrSet;
use crate::containers::{listpair_map_default, seq_nth, seq_rep, FiniteSet, RoseTree};
use crate::error::{Result, Unspecified};
use crate::hyperdoc::Basis;
use crate::link::{AnchorName, Uri};
use crate::term::{nat_list, quote, write_list};

/// An opaque media object: its URI and the anchor names links may use.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MediaObject {
    uri: Uri,
    anchor_names: FiniteSet<AnchorName>,
}

impl MediaObject {
    pub fn new(uri: impl Into<Uri>, anchor_names: FiniteSet<AnchorName>) -> Self {
        Self {
            uri: uri.into(),
            anchor_names,
        }
    }

    pub fn uri(&self) -> &Uri {
        &self.uri
    }

    pub fn anchor_names(&self) -> &FiniteSet<AnchorName> {
        &self.anchor_names
    }
}

struct QuotedName<'a>(&'a AnchorName);

impl fmt::Display for QuotedName<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&quote(self.0.as_str()))
    }
}

impl fmt::Display for MediaObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "mkmo({}, ", quote(self.uri.as_str()))?;
        write_list(f, '{', self.anchor_names.iter().map(QuotedName), '}')?;
        f.write_str(")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PageStruct {
    Basic,
    Symb,
    EmptyPage,
    List,
    Table,
    TableLine,
    Headline,
    Page,
    Text,
    LineBreak,
    Footnote,
    Paragraph,
    Copyright,
}

impl PageStruct {
    pub const ALL: [PageStruct; 13] = [
        PageStruct::Basic,
        PageStruct::Symb,
        PageStruct::EmptyPage,
        PageStruct::List,
        PageStruct::Table,
        PageStruct::TableLine,
        PageStruct::Headline,
        PageStruct::Page,
        PageStruct::Text,
        PageStruct::LineBreak,
        PageStruct::Footnote,
        PageStruct::Paragraph,
        PageStruct::Copyright,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PageStruct::Basic => "basic",
            PageStruct::Symb => "symb",
            PageStruct::EmptyPage => "emptypage",
            PageStruct::List => "list",
            PageStruct::Table => "table",
            PageStruct::TableLine => "tableline",
            PageStruct::Headline => "headline",
            PageStruct::Page => "page",
            PageStruct::Text => "text",
            PageStruct::LineBreak => "linebreak",
            PageStruct::Footnote => "footnote",
            PageStruct::Paragraph => "paragraph",
            PageStruct::Copyright => "copyright",
        }
    }

    pub fn from_name(name: &str) -> Option<PageStruct> {
        Self::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for PageStruct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Path of 1-based child indices; the empty path is the whole page.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Location(Vec<usize>);

impl Location {
    pub fn root() -> Self {
        Self(Vec::new())
    }

    pub fn new(steps: Vec<usize>) -> Self {
        Self(steps)
    }

    pub fn steps(&self) -> &[usize] {
        &self.0
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `rest`.
    pub fn append(&self, rest: &Location) -> Location {
        Location(self.0.iter().chain(&rest.0).copied().collect())
    }

    pub fn child(&self, n: usize) -> Location {
        let mut steps = self.0.clone();
        steps.push(n);
        Location(steps)
    }
}

impl<const N: usize> From<[usize; N]> for Location {
    fn from(steps: [usize; N]) -> Self {
        Location(steps.to_vec())
    }
}

impl From<Vec<usize>> for Location {
    fn from(steps: Vec<usize>) -> Self {
        Location(steps)
    }
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&nat_list(&self.0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Page {
    /// `mtpage`
    Empty,
    /// `imp_mo(mo)`
    Media(MediaObject),
    /// `imp_symbol(s)`
    Symbol(String),
    /// `mkld(kind, children, attrs)`
    Node {
        kind: PageStruct,
        children: Vec<Page>,
        attrs: AttrSet,
    },
}

/// Does `pages` have at least `n` elements? `n` counts from 1.
pub fn has_nth(n: usize, pages: &[Page]) -> Result<bool> {
    if n == 0 {
        return Err(Unspecified::new(
            "hasnth",
            "index 0 is not a 1-based position",
        ));
    }
    Ok(pages.len() >= n)
}

/// The `n`-th page of `pages`, counting from 1.
pub fn pnth(n: usize, pages: &[Page]) -> Result<&Page> {
    match n.checked_sub(1) {
        Some(i) => seq_nth(i, pages).map_err(|e| Unspecified::new("pnth", e.reason)),
        None => Err(Unspecified::new(
            "pnth",
            "index 0 is not a 1-based position",
        )),
    }
}

/// Element-wise maximum of the dimensions of `pages`.
pub fn dimension_list(pages: &[Page]) -> Vec<usize> {
    pages.iter().rev().fold(Vec::new(), |acc, p| {
        listpair_map_default(0, 0, |a, b| *a.max(b), &p.dimension(), &acc)
    })
}

impl Page {
    pub fn mkld(kind: PageStruct, children: Vec<Page>, attrs: AttrSet) -> Page {
        Page::Node {
            kind,
            children,
            attrs,
        }
    }

    pub fn symbol(s: impl Into<String>) -> Page {
        Page::Symbol(s.into())
    }

    pub fn media(mo: MediaObject) -> Page {
        Page::Media(mo)
    }

    /// A list of `n` empty items.
    pub fn list(n: usize) -> Page {
        Page::mkld(PageStruct::List, seq_rep(n, Page::Empty), AttrSet::empty())
    }

    /// An `m × n` table of empty cells.
    pub fn table(m: usize, n: usize) -> Page {
        Page::mkld(
            PageStruct::Table,
            seq_rep(m, Page::table_line(n)),
            AttrSet::empty(),
        )
    }

    pub fn table_line(n: usize) -> Page {
        Page::mkld(
            PageStruct::TableLine,
            seq_rep(n, Page::Empty),
            AttrSet::empty(),
        )
    }

    pub fn is_atomic(&self) -> bool {
        !matches!(self, Page::Node { .. })
    }

    pub fn has_location(&self, o: &Location) -> bool {
        let mut here = self;
        for &n in o.steps() {
            match here {
                Page::Node { children, .. } => match pnth(n, children) {
                    Ok(child) => here = child,
                    Err(_) => return false,
                },
                _ => return false,
            }
        }
        true
    }

    /// True iff `o` exists and holds an empty page.
    pub fn include_link_ok(&self, o: &Location) -> bool {
        matches!(self.locate(o), Ok(Page::Empty))
    }

    pub fn struct_tree(&self) -> RoseTree<PageStruct> {
        match self {
            Page::Empty => RoseTree::leaf(PageStruct::EmptyPage),
            Page::Media(_) => RoseTree::leaf(PageStruct::Basic),
            Page::Symbol(_) => RoseTree::leaf(PageStruct::Symb),
            Page::Node { kind, children, .. } => {
                RoseTree::mktree(*kind, children.iter().map(Page::struct_tree).collect())
            }
        }
    }

    /// Top-level children; unspecified for atomic pages.
    pub fn pages(&self) -> Result<&[Page]> {
        match self {
            Page::Node { children, .. } => Ok(children),
            _ => Err(Unspecified::new("pages", "atomic page has no children")),
        }
    }

    /// Top-level attributes; unspecified for atomic pages.
    pub fn attrs(&self) -> Result<&AttrSet> {
        match self {
            Page::Node { attrs, .. } => Ok(attrs),
            _ => Err(Unspecified::new("att", "atomic page has no attributes")),
        }
    }

    pub fn locate(&self, o: &Location) -> Result<&Page> {
        let mut here = self;
        for (depth, &n) in o.steps().iter().enumerate() {
            here = match here {
                Page::Node { children, .. } => pnth(n, children).map_err(|_| {
                    Unspecified::new(
                        "locate",
                        format!("location {o} does not exist (step {})", depth + 1),
                    )
                })?,
                _ => {
                    return Err(Unspecified::new(
                        "locate",
                        format!(
                            "location {o} runs into an atomic page at step {}",
                            depth + 1
                        ),
                    ))
                }
            };
        }
        Ok(here)
    }

    /// Maximum number of children per depth of the node tree.
    pub fn dimension(&self) -> Vec<usize> {
        match self {
            Page::Node { children, .. } => {
                let mut dims = vec![children.len()];
                dims.extend(dimension_list(children));
                dims
            }
            _ => Vec::new(),
        }
    }

    pub fn change_struct(&self, kind: PageStruct) -> Result<Page> {
        match self {
            Page::Node {
                children, attrs, ..
            } => Ok(Page::mkld(kind, children.clone(), attrs.clone())),
            _ => Err(Unspecified::new(
                "changestruct",
                "atomic page has no structure",
            )),
        }
    }

    /// Replaces the part at `o` with `part`, first growing any node that has
    /// too few children. Tables grow with empty table lines, everything else
    /// with empty pages.
    pub fn insert_at_extending(&self, o: &Location, part: &Page) -> Result<Page> {
        self.insert_steps(o.steps(), part)
    }

    fn insert_steps(&self, steps: &[usize], part: &Page) -> Result<Page> {
        let Some((&n, rest)) = steps.split_first() else {
            return Ok(part.clone());
        };
        match self {
            Page::Node {
                kind,
                children,
                attrs,
            } => {
                let filler = if *kind == PageStruct::Table {
                    Page::table_line(0)
                } else {
                    Page::Empty
                };
                let children = insert_children_steps(part, n, rest, children, &filler)?;
                Ok(Page::mkld(*kind, children, attrs.clone()))
            }
            _ => Err(Unspecified::new(
                "insertatlde",
                "cannot descend into an atomic page",
            )),
        }
    }

    /// Replaces the part at an existing location `o` with `part`.
    pub fn insert_at(&self, o: &Location, part: &Page) -> Result<Page> {
        if !self.has_location(o) {
            return Err(Unspecified::new(
                "insertatld",
                format!("location {o} does not exist"),
            ));
        }
        self.insert_at_extending(o, part)
    }

    pub fn add_attrs(&self, extra: &AttrSet) -> Result<Page> {
        match self {
            Page::Node {
                kind,
                children,
                attrs,
            } => Ok(Page::mkld(*kind, children.clone(), extra.concat(attrs))),
            _ => Err(Unspecified::new(
                "addattributeld",
                "atomic page has no attributes",
            )),
        }
    }

    pub fn del_attrs(&self, removed: &AttrSet) -> Result<Page> {
        match self {
            Page::Node {
                kind,
                children,
                attrs,
            } => Ok(Page::mkld(*kind, children.clone(), attrs.remove(removed))),
            _ => Err(Unspecified::new(
                "delattributeld",
                "atomic page has no attributes",
            )),
        }
    }

    /// Nesting depth of `mkld` nodes; 0 for atomic pages.
    pub fn depth(&self) -> usize {
        match self {
            Page::Node { children, .. } => 1 + children.iter().map(Page::depth).max().unwrap_or(0),
            _ => 0,
        }
    }
}

/// Child-list step of extending insertion: inserts `part` at `rest` below
/// the `n`-th (1-based) child, padding with `filler` past the end of the list.
pub fn insert_into_children(
    part: &Page,
    n: usize,
    rest: &Location,
    children: &[Page],
    filler: &Page,
) -> Result<Vec<Page>> {
    insert_children_steps(part, n, rest.steps(), children, filler)
}

fn insert_children_steps(
    part: &Page,
    n: usize,
    rest: &[usize],
    children: &[Page],
    filler: &Page,
) -> Result<Vec<Page>> {
    if n == 0 {
        return Err(Unspecified::new(
            "insertatldee",
            "index 0 is not a 1-based position",
        ));
    }
    let mut out = children.to_vec();
    if n <= out.len() {
        out[n - 1] = out[n - 1].insert_steps(rest, part)?;
    } else {
        out.resize(n - 1, filler.clone());
        out.push(filler.insert_steps(rest, part)?);
    }
    Ok(out)
}

impl Basis for Page {
    type Loc = Location;

    fn embed_link_ok(&self, loc: &Location) -> bool {
        self.include_link_ok(loc)
    }
}

impl fmt::Display for Page {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Page::Empty => f.write_str("mtpage"),
            Page::Media(mo) => write!(f, "imp_mo({mo})"),
            Page::Symbol(s) => write!(f, "imp_symbol({})", quote(s)),
            Page::Node {
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
