//! The document store a script runs against, and the run report.

use std::fmt;

use dexterkit_core::term::{nat_list, SetTerm};
use dexterkit_core::{
    AnchorMapTerm, DocAddr, FiniteMap, Hmd, Location, Page, PageStruct, RoseTree, Unspecified,
};

use crate::export;
use crate::script::{Command, ExportFormat, Observation, Placement, Step};

/// Documents keyed by their own address.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Workspace {
    docs: FiniteMap<DocAddr, Hmd>,
}

impl Workspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Fails on two documents with the same address.
    pub fn from_docs(docs: impl IntoIterator<Item = Hmd>) -> Result<Self, DocAddr> {
        let mut ws = Self::new();
        for h in docs {
            if ws.contains(h.address()) {
                return Err(h.address().clone());
            }
            ws.put(h);
        }
        Ok(ws)
    }

    pub fn get(&self, addr: &DocAddr) -> Option<&Hmd> {
        self.docs.get(addr)
    }

    pub fn contains(&self, addr: &DocAddr) -> bool {
        self.docs.contains_key(addr)
    }

    /// Documents in address order.
    pub fn docs(&self) -> impl Iterator<Item = &Hmd> + '_ {
        self.docs.iter().map(|(_, h)| h)
    }

    pub fn len(&self) -> usize {
        self.docs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.docs.is_empty()
    }

    fn put(&mut self, h: Hmd) {
        self.docs = self.docs.upd(h.address().clone(), h);
    }

    fn take(&mut self, addr: &DocAddr) {
        self.docs = self.docs.rem(addr);
    }

    fn doc(&self, addr: &DocAddr) -> Result<&Hmd, Outcome> {
        self.get(addr)
            .ok_or_else(|| Outcome::Error(format!("unknown document {:?}", addr.as_str())))
    }

    fn vacant(&self, addr: &DocAddr, except: &[&DocAddr]) -> Result<(), Outcome> {
        if self.contains(addr) && !except.contains(&addr) {
            Err(Outcome::Error(format!(
                "document {:?} already exists",
                addr.as_str()
            )))
        } else {
            Ok(())
        }
    }

    /// Applies one command, mutating the store only on success.
    pub fn apply(&mut self, command: &Command) -> Outcome {
        self.try_apply(command).unwrap_or_else(|o| o)
    }

    fn try_apply(&mut self, command: &Command) -> Result<Outcome, Outcome> {
        match command {
            Command::NewPage { doc, page } => {
                self.vacant(doc, &[])?;
                self.put(Hmd::bare(page.clone(), doc.clone()));
            }
            Command::Build {
                doc,
                page,
                placement,
            } => {
                let h = self.doc(doc)?;
                let basis = place(h.basis(), page, placement)?;
                let h = with_basis(h, basis);
                self.put(h);
            }
            Command::AddAnchor { doc, name, anchor } => {
                let h = self.doc(doc)?.add_anchor(name.clone(), anchor.clone())?;
                self.put(h);
            }
            Command::DelAnchor { doc, name } => {
                let h = self.doc(doc)?.del_anchor(name);
                self.put(h);
            }
            Command::AddLink { doc, link } => {
                let h = self.doc(doc)?.add_link(link.clone())?;
                self.put(h);
            }
            Command::DelLink { doc, link } => {
                let h = self.doc(doc)?.del_link(link);
                self.put(h);
            }
            Command::SetAttr { doc, attrs, at } => {
                let h = self.doc(doc)?;
                let h = match at {
                    None => h.add_attrs(attrs),
                    Some(o) => with_basis(h, edit_at(h.basis(), o, |p| p.add_attrs(attrs))?),
                };
                self.put(h);
            }
            Command::DelAttr { doc, attrs, at } => {
                let h = self.doc(doc)?;
                let h = match at {
                    None => h.del_attrs(attrs),
                    Some(o) => with_basis(h, edit_at(h.basis(), o, |p| p.del_attrs(attrs))?),
                };
                self.put(h);
            }
            Command::ChAddr { doc, to } => {
                let h = self.doc(doc)?.with_address(to.clone());
                self.vacant(to, &[doc])?;
                self.take(doc);
                self.put(h);
            }
            Command::InsertHmd {
                doc,
                into,
                at,
                result,
                extend,
            } => {
                let inserted = self.doc(doc)?;
                let host = self.doc(into)?;
                self.vacant(result, &[doc, into])?;
                let h = if *extend {
                    inserted.insert_into_extending(at, host, result.clone())?
                } else {
                    inserted.insert_into(at, host, result.clone())?
                };
                self.take(doc);
                self.take(into);
                self.put(h);
            }
            Command::Observe { doc, what, at } => {
                let h = self.doc(doc)?;
                return Ok(Outcome::Ok(Some(observe(h, *what, at.as_ref())?)));
            }
            Command::Export { format } => {
                let text = match format {
                    ExportFormat::Dump => export::dump(self),
                    ExportFormat::Dot => export::dot(self),
                };
                return Ok(Outcome::Ok(Some(text.trim_end().to_owned())));
            }
            Command::ValidateLink { doc, link } => {
                let check = self.doc(doc)?.check_link(link);
                return Ok(Outcome::Ok(Some(check.report())));
            }
        }
        Ok(Outcome::Ok(None))
    }

    /// Runs every step in order. In strict mode the run stops at the first
    /// step that is not `Ok`.
    pub fn run(&mut self, steps: &[Step], strict: bool) -> Report {
        let mut report = Report::default();
        for step in steps {
            let outcome = self.apply(&step.command);
            let stop = strict && !matches!(outcome, Outcome::Ok(_));
            report.entries.push(Entry {
                line: step.line,
                keyword: step.keyword,
                subject: subject(&step.command),
                outcome,
            });
            if stop {
                report.aborted = true;
                break;
            }
        }
        report
    }
}

fn with_basis(h: &Hmd, basis: Page) -> Hmd {
    Hmd::new(
        basis,
        h.anchors().clone(),
        h.links().clone(),
        h.attrs().clone(),
        h.address().clone(),
    )
}

fn place(basis: &Page, page: &Page, placement: &Placement) -> Result<Page, Unspecified> {
    match (&placement.at, placement.extend) {
        (None, _) => Ok(page.clone()),
        (Some(o), true) => basis.insert_at_extending(o, page),
        (Some(o), false) => basis.insert_at(o, page),
    }
}

fn edit_at(
    basis: &Page,
    o: &Location,
    f: impl FnOnce(&Page) -> Result<Page, Unspecified>,
) -> Result<Page, Unspecified> {
    let edited = f(basis.locate(o)?)?;
    basis.insert_at(o, &edited)
}

fn observe(h: &Hmd, what: Observation, at: Option<&Location>) -> Result<String, Unspecified> {
    Ok(match what {
        Observation::Dimension => format!("dimension: {}", nat_list(&h.basis().dimension())),
        Observation::Locate => {
            let o = at.cloned().unwrap_or_default();
            format!("locate {o}: {}", h.basis().locate(&o)?)
        }
        Observation::Struct => format!("struct: {}", struct_term(&h.basis().struct_tree())),
        Observation::Anchors => format!("anchors: {}", AnchorMapTerm(h.anchors())),
        Observation::Links => format!("links: {}", SetTerm(h.links())),
    })
}

/// `table(tableline(emptypage), ...)`; leaves print as their label alone.
pub fn struct_term(t: &RoseTree<PageStruct>) -> String {
    if t.children.is_empty() {
        return t.label.name().to_owned();
    }
    let kids: Vec<String> = t.children.iter().map(struct_term).collect();
    format!("{}({})", t.label.name(), kids.join(", "))
}

fn subject(command: &Command) -> String {
    match command {
        Command::NewPage { doc, .. }
        | Command::Build { doc, .. }
        | Command::AddAnchor { doc, .. }
        | Command::DelAnchor { doc, .. }
        | Command::AddLink { doc, .. }
        | Command::DelLink { doc, .. }
        | Command::SetAttr { doc, .. }
        | Command::DelAttr { doc, .. }
        | Command::ChAddr { doc, .. }
        | Command::Observe { doc, .. }
        | Command::ValidateLink { doc, .. } => doc.as_str().to_owned(),
        Command::InsertHmd { doc, into, .. } => format!("{doc} -> {into}"),
        Command::Export { format } => match format {
            ExportFormat::Dump => "dump".into(),
            ExportFormat::Dot => "dot".into(),
        },
    }
}

/// Result of one command.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    /// Applied; observations carry their rendered value.
    Ok(Option<String>),
    /// The model leaves the case undefined.
    Unspecified(Unspecified),
    /// The script refers to something the workspace cannot provide.
    Error(String),
}

impl From<Unspecified> for Outcome {
    fn from(u: Unspecified) -> Self {
        Outcome::Unspecified(u)
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Ok(None) => f.write_str("ok"),
            Outcome::Ok(Some(detail)) => f.write_str(detail),
            Outcome::Unspecified(u) => write!(f, "Unspecified: {} ({})", u.reason, u.op),
            Outcome::Error(msg) => write!(f, "error: {msg}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub line: usize,
    pub keyword: &'static str,
    pub subject: String,
    pub outcome: Outcome,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub entries: Vec<Entry>,
    /// Set when strict mode stopped the run early.
    pub aborted: bool,
}

impl Report {
    pub fn all_ok(&self) -> bool {
        self.entries
            .iter()
            .all(|e| matches!(e.outcome, Outcome::Ok(_)))
    }
}

/// One line per entry; multi-line details continue indented by two spaces.
impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let text = e.outcome.to_string();
            let mut lines = text.lines();
            let first = lines.next().unwrap_or_default();
            writeln!(f, "{}: {} {}: {first}", e.line, e.keyword, e.subject)?;
            for rest in lines {
                writeln!(f, "  {rest}")?;
            }
        }
        if self.aborted {
            writeln!(f, "aborted")?;
        }
        Ok(())
    }
}
