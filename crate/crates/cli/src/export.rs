//! Workspace serializations: the canonical dump and Graphviz DOT.

use std::collections::BTreeSet;
use std::fmt::Write;

use dexterkit_core::term::quote;
use dexterkit_core::{Address, LinkType, Specifier, Uri};
use thiserror::Error;

use crate::syntax::{self, SyntaxError};
use crate::workspace::Workspace;

#[derive(Debug, Error)]
pub enum DumpError {
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error("document address {0:?} appears twice")]
    Duplicate(String),
}

/// One `mkhd(...)` term per line, in address order.
pub fn dump(ws: &Workspace) -> String {
    ws.docs().map(|h| format!("{h}\n")).collect()
}

pub fn parse_dump(src: &str) -> Result<Workspace, DumpError> {
    let docs = syntax::parse_hmds(src)?;
    Workspace::from_docs(docs).map_err(|a| DumpError::Duplicate(a.as_str().to_owned()))
}

fn spec_ref(sp: &Specifier) -> String {
    quote(&format!("{}#{}", sp.uri(), sp.name()))
}

/// A node per document, dashed nodes for link ends outside the workspace,
/// and an edge per source/target specifier pair of every link.
pub fn dot(ws: &Workspace) -> String {
    let local: BTreeSet<Uri> = ws.docs().map(|h| h.address().integrate()).collect();
    let mut foreign = BTreeSet::new();
    let mut edges = String::new();
    for h in ws.docs() {
        for link in h.links().iter() {
            let lt = link.link_type();
            for s in link.source().iter() {
                for t in link.target().iter() {
                    for end in [s, t] {
                        if !local.contains(end.uri()) {
                            foreign.insert(end.uri().clone());
                        }
                    }
                    let _ = write!(
                        edges,
                        "  {} -> {} [label={}, taillabel={}, headlabel={}",
                        quote(s.uri().as_str()),
                        quote(t.uri().as_str()),
                        quote(&lt.to_string()),
                        spec_ref(s),
                        spec_ref(t),
                    );
                    if lt == LinkType::Bi {
                        edges.push_str(", dir=none");
                    }
                    edges.push_str("];\n");
                }
            }
        }
    }
    let mut out = String::from("digraph workspace {\n");
    for uri in &local {
        let _ = writeln!(out, "  {};", quote(uri.as_str()));
    }
    for uri in &foreign {
        let _ = writeln!(out, "  {} [style=dashed];", quote(uri.as_str()));
    }
    out.push_str(&edges);
    out.push_str("}\n");
    out
}
