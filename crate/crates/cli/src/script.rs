//! JSON-lines scripts: one command object per line, keyed by `"cmd"`.

use dexterkit_core::anchor::{Anchor, AnchorType};
use dexterkit_core::link::{AnchorName, Link, LinkType, Specifier};
use dexterkit_core::{Attr, AttrSet, DocAddr, FiniteSet, Location, Page};
use serde::Deserialize;
use thiserror::Error;

use crate::syntax::{self, SyntaxError};

#[derive(Debug, Error)]
#[error("line {line}: {msg}")]
pub struct ScriptError {
    pub line: usize,
    pub msg: String,
}

type Pairs = Vec<(String, String)>;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLink {
    #[serde(default)]
    source: Vec<String>,
    #[serde(default)]
    target: Vec<String>,
    #[serde(rename = "type")]
    link_type: String,
    #[serde(default)]
    attrs: Pairs,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "cmd", rename_all = "kebab-case", deny_unknown_fields)]
enum RawCommand {
    NewPage {
        doc: String,
        page: Option<String>,
    },
    Mklist {
        doc: String,
        n: usize,
        at: Option<Vec<usize>>,
        #[serde(default)]
        extend: bool,
    },
    Mktable {
        doc: String,
        rows: usize,
        cols: usize,
        at: Option<Vec<usize>>,
        #[serde(default)]
        extend: bool,
    },
    InsertAt {
        doc: String,
        at: Vec<usize>,
        page: String,
        #[serde(default)]
        extend: bool,
    },
    AddAnchor {
        doc: String,
        name: String,
        at: Vec<usize>,
        #[serde(rename = "type")]
        anchor_type: String,
        #[serde(default)]
        attrs: Pairs,
    },
    DelAnchor {
        doc: String,
        name: String,
    },
    AddLink {
        doc: String,
        link: RawLink,
    },
    DelLink {
        doc: String,
        link: RawLink,
    },
    SetAttr {
        doc: String,
        attrs: Pairs,
        at: Option<Vec<usize>>,
    },
    DelAttr {
        doc: String,
        attrs: Pairs,
        at: Option<Vec<usize>>,
    },
    ChAddr {
        doc: String,
        to: String,
    },
    InsertHmd {
        doc: String,
        into: String,
        at: Vec<usize>,
        #[serde(rename = "as")]
        result: String,
        #[serde(default)]
        extend: bool,
    },
    Observe {
        doc: String,
        what: Observation,
        at: Option<Vec<usize>>,
    },
    Export {
        format: ExportFormat,
    },
    ValidateLink {
        doc: String,
        link: RawLink,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Observation {
    Dimension,
    Locate,
    Struct,
    Anchors,
    Links,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExportFormat {
    Dump,
    Dot,
}

/// Where a page-building command puts its result: replace the basis, or
/// insert below a location.
#[derive(Debug, Clone, PartialEq)]
pub struct Placement {
    pub at: Option<Location>,
    pub extend: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Command {
    NewPage {
        doc: DocAddr,
        page: Page,
    },
    Build {
        doc: DocAddr,
        page: Page,
        placement: Placement,
    },
    AddAnchor {
        doc: DocAddr,
        name: AnchorName,
        anchor: Anchor<Location>,
    },
    DelAnchor {
        doc: DocAddr,
        name: AnchorName,
    },
    AddLink {
        doc: DocAddr,
        link: Link,
    },
    DelLink {
        doc: DocAddr,
        link: Link,
    },
    SetAttr {
        doc: DocAddr,
        attrs: AttrSet,
        at: Option<Location>,
    },
    DelAttr {
        doc: DocAddr,
        attrs: AttrSet,
        at: Option<Location>,
    },
    ChAddr {
        doc: DocAddr,
        to: DocAddr,
    },
    InsertHmd {
        doc: DocAddr,
        into: DocAddr,
        at: Location,
        result: DocAddr,
        extend: bool,
    },
    Observe {
        doc: DocAddr,
        what: Observation,
        at: Option<Location>,
    },
    Export {
        format: ExportFormat,
    },
    ValidateLink {
        doc: DocAddr,
        link: Link,
    },
}

/// A parsed command with its 1-based script line and keyword.
#[derive(Debug, Clone, PartialEq)]
pub struct Step {
    pub line: usize,
    pub keyword: &'static str,
    pub command: Command,
}

fn attrs(pairs: Pairs) -> AttrSet {
    pairs.into_iter().map(|(k, v)| Attr::new(k, v)).collect()
}

fn term<T>(what: &str, src: &str, parse: fn(&str) -> Result<T, SyntaxError>) -> Result<T, String> {
    parse(src).map_err(|e| format!("bad {what} {src:?}: {e}"))
}

/// Splits `uri#name` at the last `#`.
pub fn parse_specifier_ref(s: &str) -> Result<Specifier, String> {
    s.rsplit_once('#')
        .map(|(uri, name)| Specifier::new(uri, name))
        .ok_or_else(|| format!("specifier {s:?} has no `#name` part"))
}

fn link(raw: RawLink) -> Result<Link, String> {
    let specs = |v: Vec<String>| {
        v.iter()
            .map(|s| parse_specifier_ref(s))
            .collect::<Result<FiniteSet<_>, _>>()
    };
    Ok(Link::new(
        specs(raw.source)?,
        specs(raw.target)?,
        term::<LinkType>("link type", &raw.link_type, syntax::parse_link_type)?,
        attrs(raw.attrs),
    ))
}

fn lower(raw: RawCommand) -> Result<(&'static str, Command), String> {
    let d = DocAddr::from;
    let loc = |v: Option<Vec<usize>>| v.map(Location::from);
    Ok(match raw {
        RawCommand::NewPage { doc, page } => {
            let page = match page {
                Some(src) => term("page", &src, syntax::parse_page)?,
                None => Page::Empty,
            };
            ("new-page", Command::NewPage { doc: d(doc), page })
        }
        RawCommand::Mklist { doc, n, at, extend } => (
            "mklist",
            Command::Build {
                doc: d(doc),
                page: Page::list(n),
                placement: Placement {
                    at: loc(at),
                    extend,
                },
            },
        ),
        RawCommand::Mktable {
            doc,
            rows,
            cols,
            at,
            extend,
        } => (
            "mktable",
            Command::Build {
                doc: d(doc),
                page: Page::table(rows, cols),
                placement: Placement {
                    at: loc(at),
                    extend,
                },
            },
        ),
        RawCommand::InsertAt {
            doc,
            at,
            page,
            extend,
        } => (
            "insert-at",
            Command::Build {
                doc: d(doc),
                page: term("page", &page, syntax::parse_page)?,
                placement: Placement {
                    at: Some(Location::from(at)),
                    extend,
                },
            },
        ),
        RawCommand::AddAnchor {
            doc,
            name,
            at,
            anchor_type,
            attrs: a,
        } => {
            let t = AnchorType::from_name(&anchor_type)
                .ok_or_else(|| format!("unknown anchor type {anchor_type:?}"))?;
            (
                "add-anchor",
                Command::AddAnchor {
                    doc: d(doc),
                    name: AnchorName::from(name),
                    anchor: Anchor::new(Location::from(at), t, attrs(a)),
                },
            )
        }
        RawCommand::DelAnchor { doc, name } => (
            "del-anchor",
            Command::DelAnchor {
                doc: d(doc),
                name: AnchorName::from(name),
            },
        ),
        RawCommand::AddLink { doc, link: l } => (
            "add-link",
            Command::AddLink {
                doc: d(doc),
                link: link(l)?,
            },
        ),
        RawCommand::DelLink { doc, link: l } => (
            "del-link",
            Command::DelLink {
                doc: d(doc),
                link: link(l)?,
            },
        ),
        RawCommand::SetAttr { doc, attrs: a, at } => (
            "set-attr",
            Command::SetAttr {
                doc: d(doc),
                attrs: attrs(a),
                at: loc(at),
            },
        ),
        RawCommand::DelAttr { doc, attrs: a, at } => (
            "del-attr",
            Command::DelAttr {
                doc: d(doc),
                attrs: attrs(a),
                at: loc(at),
            },
        ),
        RawCommand::ChAddr { doc, to } => (
            "ch-addr",
            Command::ChAddr {
                doc: d(doc),
                to: d(to),
            },
        ),
        RawCommand::InsertHmd {
            doc,
            into,
            at,
            result,
            extend,
        } => (
            "insert-hmd",
            Command::InsertHmd {
                doc: d(doc),
                into: d(into),
                at: Location::from(at),
                result: d(result),
                extend,
            },
        ),
        RawCommand::Observe { doc, what, at } => {
            if what == Observation::Locate && at.is_none() {
                return Err("observe locate needs `at`".into());
            }
            (
                "observe",
                Command::Observe {
                    doc: d(doc),
                    what,
                    at: loc(at),
                },
            )
        }
        RawCommand::Export { format } => ("export", Command::Export { format }),
        RawCommand::ValidateLink { doc, link: l } => (
            "validate-link",
            Command::ValidateLink {
                doc: d(doc),
                link: link(l)?,
            },
        ),
    })
}

/// Parses a whole script up front. Blank lines and `#` comments are skipped.
pub fn parse_script(src: &str) -> Result<Vec<Step>, ScriptError> {
    let mut steps = Vec::new();
    for (i, text) in src.lines().enumerate() {
        let text = text.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let line = i + 1;
        let raw: RawCommand = serde_json::from_str(text).map_err(|e| ScriptError {
            line,
            msg: e.to_string(),
        })?;
        let (keyword, command) = lower(raw).map_err(|msg| ScriptError { line, msg })?;
        steps.push(Step {
            line,
            keyword,
            command,
        });
    }
    Ok(steps)
}
