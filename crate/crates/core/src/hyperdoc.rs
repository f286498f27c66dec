//! The generic hyperdocument class.
//!
//! A [`HyperDoc`] wraps a basis document with named anchors, a set of links,
//! attributes and a local address. The class is parameterized by the basis
//! sort (through [`Basis`], which also fixes the location sort and decides
//! where embed links may be placed) and the address sort (through
//! [`Address`], which embeds local addresses into URIs).

use std::fmt;

use crate::anchor::{Anchor, AnchorType};
use crate::attributes::AttrSet;
use crate::containers::{FiniteMap, FiniteSet};
use crate::error::{Result, Unspecified};
use crate::link::{ActuateType, AnchorName, Link, LinkType, ShowType, Specifier, Uri};
use crate::term::{quote, write_list, SetTerm};

/// A basis document sort together with its location sort.
pub trait Basis: Clone + Ord + fmt::Debug {
    type Loc: Clone + Ord + fmt::Debug + fmt::Display;

    /// Can an embed link be positioned at `loc` in this document?
    fn embed_link_ok(&self, loc: &Self::Loc) -> bool;
}

/// A local address sort.
pub trait Address: Clone + Ord + fmt::Debug {
    /// Global URI of the document stored under this address. Must be injective.
    fn integrate(&self) -> Uri;
}

pub type AnchorMap<Loc> = FiniteMap<AnchorName, Anchor<Loc>>;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HyperDoc<B: Basis, A: Address> {
    basis: B,
    anchors: AnchorMap<B::Loc>,
    links: FiniteSet<Link>,
    attrs: AttrSet,
    address: A,
}

/// The anchor bound to `name`; unspecified for unbound names.
pub fn anchor_by_name<'a, Loc: Clone + fmt::Debug>(
    name: &AnchorName,
    anchors: &'a AnchorMap<Loc>,
) -> Result<&'a Anchor<Loc>> {
    anchors.get(name).ok_or_else(|| {
        Unspecified::new(
            "anchor",
            format!("no anchor named {}", quote(name.as_str())),
        )
    })
}

/// Every name bound to `anchor`.
pub fn names_of_anchor<Loc: Clone + PartialEq>(
    anchor: &Anchor<Loc>,
    anchors: &AnchorMap<Loc>,
) -> FiniteSet<AnchorName> {
    anchors.revapply(anchor)
}

impl<B: Basis, A: Address> HyperDoc<B, A> {
    pub fn new(
        basis: B,
        anchors: AnchorMap<B::Loc>,
        links: FiniteSet<Link>,
        attrs: AttrSet,
        address: A,
    ) -> Self {
        Self {
            basis,
            anchors,
            links,
            attrs,
            address,
        }
    }

    /// A document with no anchors, links or attributes.
    pub fn bare(basis: B, address: A) -> Self {
        Self::new(
            basis,
            FiniteMap::empty(),
            FiniteSet::empty(),
            AttrSet::empty(),
            address,
        )
    }

    pub fn basis(&self) -> &B {
        &self.basis
    }

    pub fn anchors(&self) -> &AnchorMap<B::Loc> {
        &self.anchors
    }

    pub fn links(&self) -> &FiniteSet<Link> {
        &self.links
    }

    pub fn attrs(&self) -> &AttrSet {
        &self.attrs
    }

    pub fn address(&self) -> &A {
        &self.address
    }

    pub fn anchor(&self, name: &AnchorName) -> Result<&Anchor<B::Loc>> {
        anchor_by_name(name, &self.anchors)
    }

    pub fn names_of(&self, anchor: &Anchor<B::Loc>) -> FiniteSet<AnchorName> {
        names_of_anchor(anchor, &self.anchors)
    }

    /// Binds `name` to `anchor`. An existing binding at the same location is
    /// merged into one anchor of supremal type with the new attributes
    /// first; an existing binding elsewhere is unspecified.
    pub fn add_anchor(&self, name: AnchorName, anchor: Anchor<B::Loc>) -> Result<Self> {
        let bound = match self.anchors.get(&name) {
            None => anchor,
            Some(existing) if existing.location() == anchor.location() => Anchor::new(
                anchor.location().clone(),
                anchor.supremal_type(existing),
                anchor.attrs().concat(existing.attrs()),
            ),
            Some(existing) => {
                return Err(Unspecified::new(
                    "addanchor",
                    format!(
                        "anchor {} already bound at location {}, not {}",
                        quote(name.as_str()),
                        existing.location(),
                        anchor.location()
                    ),
                ))
            }
        };
        Ok(Self {
            anchors: self.anchors.upd(name, bound),
            ..self.clone()
        })
    }

    pub fn del_anchor(&self, name: &AnchorName) -> Self {
        Self {
            anchors: self.anchors.rem(name),
            ..self.clone()
        }
    }

    /// Evaluates every addlink rule against `link`.
    pub fn check_link(&self, link: &Link) -> LinkCheck {
        let outcomes = AddLinkRule::ALL
            .into_iter()
            .map(|rule| RuleOutcome {
                rule,
                result: self.eval_rule(rule, link),
            })
            .collect();
        LinkCheck { outcomes }
    }

    fn eval_rule(
        &self,
        rule: AddLinkRule,
        link: &Link,
    ) -> std::result::Result<Specifier, RuleFailure> {
        if !rule.covers(link.link_type()) {
            return Err(RuleFailure::LinkType {
                found: link.link_type(),
            });
        }
        let mut best = RuleFailure::EmptySource;
        for sp in link.source() {
            match self.eval_specifier(rule, link, sp) {
                Ok(()) => return Ok(sp.clone()),
                Err(failure) => {
                    if failure.depth() > best.depth() {
                        best = failure;
                    }
                }
            }
        }
        Err(best)
    }

    fn eval_specifier(
        &self,
        rule: AddLinkRule,
        link: &Link,
        sp: &Specifier,
    ) -> std::result::Result<(), RuleFailure> {
        let own = self.address.integrate();
        if sp.uri() != &own {
            return Err(RuleFailure::NoSelfAddressedSource { expected: own });
        }
        let anchor = self
            .anchors
            .get(sp.name())
            .ok_or_else(|| RuleFailure::UnknownAnchor {
                name: sp.name().clone(),
            })?;
        let required = rule.anchor_type();
        if anchor.anchor_type() != required {
            return Err(RuleFailure::AnchorType {
                found: anchor.anchor_type(),
                required,
            });
        }
        if rule.needs_embed_ok() && !self.basis.embed_link_ok(anchor.location()) {
            return Err(RuleFailure::EmbedNotAllowed);
        }
        if rule.needs_single_target() && link.target().card() != 1 {
            return Err(RuleFailure::TargetCard {
                found: link.target().card(),
            });
        }
        Ok(())
    }

    /// Adds `link` if one of the addlink rules accepts it.
    pub fn add_link(&self, link: Link) -> Result<Self> {
        let check = self.check_link(&link);
        if check.accepted().is_none() {
            let why = check
                .rejection()
                .map(|f| format!(": {f}"))
                .unwrap_or_default();
            return Err(Unspecified::new(
                "addlink",
                format!("no addlink rule applies{why}"),
            ));
        }
        Ok(Self {
            links: self.links.insert(link),
            ..self.clone()
        })
    }

    pub fn del_link(&self, link: &Link) -> Self {
        Self {
            links: self.links.remove(link),
            ..self.clone()
        }
    }

    pub fn add_attrs(&self, attrs: &AttrSet) -> Self {
        Self {
            attrs: attrs.concat(&self.attrs),
            ..self.clone()
        }
    }

    pub fn del_attrs(&self, attrs: &AttrSet) -> Self {
        Self {
            attrs: self.attrs.remove(attrs),
            ..self.clone()
        }
    }

    pub fn with_address(&self, address: A) -> Self {
        Self {
            address,
            ..self.clone()
        }
    }
}

/// Renders an anchor map as `{"name" -> mkanchor(..), ...}`.
pub struct AnchorMapTerm<'a, Loc>(pub &'a AnchorMap<Loc>);

impl<Loc: Clone + fmt::Display> fmt::Display for AnchorMapTerm<'_, Loc> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(
            f,
            '{',
            self.0
                .iter()
                .map(|(n, c)| format!("{} -> {c}", quote(n.as_str()))),
            '}',
        )
    }
}

impl<B, A> fmt::Display for HyperDoc<B, A>
where
    B: Basis + fmt::Display,
    A: Address + fmt::Display,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mkhd({}, {}, {}, {}, {})",
            self.basis,
            AnchorMapTerm(&self.anchors),
            SetTerm(&self.links),
            self.attrs,
            quote(&self.address.to_string())
        )
    }
}

/// The nine conditional addlink rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AddLinkRule {
    ReplaceSource,
    ReplaceLabel,
    NewSource,
    NewLabel,
    EmbedUserSource,
    EmbedUserLabel,
    EmbedAutoSource,
    EmbedAutoLabel,
    BiLabel,
}

impl AddLinkRule {
    pub const ALL: [AddLinkRule; 9] = [
        AddLinkRule::ReplaceSource,
        AddLinkRule::ReplaceLabel,
        AddLinkRule::NewSource,
        AddLinkRule::NewLabel,
        AddLinkRule::EmbedUserSource,
        AddLinkRule::EmbedUserLabel,
        AddLinkRule::EmbedAutoSource,
        AddLinkRule::EmbedAutoLabel,
        AddLinkRule::BiLabel,
    ];

    fn covers(self, t: LinkType) -> bool {
        use AddLinkRule::*;
        matches!(
            (self, t),
            (
                ReplaceSource | ReplaceLabel,
                LinkType::Uni(ShowType::Replace, _)
            ) | (NewSource | NewLabel, LinkType::Uni(ShowType::New, _))
                | (
                    EmbedUserSource | EmbedUserLabel,
                    LinkType::Uni(ShowType::Embed, ActuateType::User)
                )
                | (
                    EmbedAutoSource | EmbedAutoLabel,
                    LinkType::Uni(ShowType::Embed, ActuateType::Auto)
                )
                | (BiLabel, LinkType::Bi)
        )
    }

    fn anchor_type(self) -> AnchorType {
        use AddLinkRule::*;
        match self {
            ReplaceSource | NewSource | EmbedUserSource | EmbedAutoSource => AnchorType::Source,
            ReplaceLabel | NewLabel | EmbedUserLabel | EmbedAutoLabel | BiLabel => {
                AnchorType::Label
            }
        }
    }

    fn needs_embed_ok(self) -> bool {
        use AddLinkRule::*;
        matches!(
            self,
            EmbedUserSource | EmbedUserLabel | EmbedAutoSource | EmbedAutoLabel
        )
    }

    fn needs_single_target(self) -> bool {
        matches!(
            self,
            AddLinkRule::EmbedAutoSource | AddLinkRule::EmbedAutoLabel
        )
    }

    pub fn name(self) -> &'static str {
        use AddLinkRule::*;
        match self {
            ReplaceSource => "uni(replace,*)/source",
            ReplaceLabel => "uni(replace,*)/label",
            NewSource => "uni(new,*)/source",
            NewLabel => "uni(new,*)/label",
            EmbedUserSource => "uni(embed,user)/source",
            EmbedUserLabel => "uni(embed,user)/label",
            EmbedAutoSource => "uni(embed,auto)/source",
            EmbedAutoLabel => "uni(embed,auto)/label",
            BiLabel => "bi/label",
        }
    }
}

impl fmt::Display for AddLinkRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// First conjunct of an addlink rule that fails, in evaluation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleFailure {
    LinkType {
        found: LinkType,
    },
    EmptySource,
    NoSelfAddressedSource {
        expected: Uri,
    },
    UnknownAnchor {
        name: AnchorName,
    },
    AnchorType {
        found: AnchorType,
        required: AnchorType,
    },
    EmbedNotAllowed,
    TargetCard {
        found: usize,
    },
}

impl RuleFailure {
    /// Number of conjuncts satisfied before this failure.
    pub fn depth(&self) -> u8 {
        match self {
            RuleFailure::LinkType { .. } => 0,
            RuleFailure::EmptySource => 1,
            RuleFailure::NoSelfAddressedSource { .. } => 2,
            RuleFailure::UnknownAnchor { .. } => 3,
            RuleFailure::AnchorType { .. } => 4,
            RuleFailure::EmbedNotAllowed => 5,
            RuleFailure::TargetCard { .. } => 6,
        }
    }
}

impl fmt::Display for RuleFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleFailure::LinkType { found } => write!(f, "link type {found} not covered"),
            RuleFailure::EmptySource => f.write_str("source set is empty"),
            RuleFailure::NoSelfAddressedSource { .. } => {
                f.write_str("no self-addressed source specifier")
            }
            RuleFailure::UnknownAnchor { name } => {
                write!(f, "anchor {} is not bound", quote(name.as_str()))
            }
            RuleFailure::AnchorType { found, required } => {
                write!(f, "anchor type {found} ≠ {required}")
            }
            RuleFailure::EmbedNotAllowed => {
                f.write_str("embed link not allowed at anchor location")
            }
            RuleFailure::TargetCard { found } => write!(f, "card(target)={found} ≠ 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleOutcome {
    pub rule: AddLinkRule,
    /// The qualifying source specifier, or the deepest failure over all of them.
    pub result: std::result::Result<Specifier, RuleFailure>,
}

/// Verdict of every addlink rule for one link and document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkCheck {
    pub outcomes: Vec<RuleOutcome>,
}

impl LinkCheck {
    pub fn accepted(&self) -> Option<(AddLinkRule, &Specifier)> {
        self.outcomes
            .iter()
            .find_map(|o| o.result.as_ref().ok().map(|sp| (o.rule, sp)))
    }

    /// The failure that got furthest, when no rule accepts.
    pub fn rejection(&self) -> Option<&RuleFailure> {
        if self.accepted().is_some() {
            return None;
        }
        self.outcomes
            .iter()
            .filter_map(|o| o.result.as_ref().err())
            .fold(None, |best: Option<&RuleFailure>, f| match best {
                Some(b) if b.depth() >= f.depth() => Some(b),
                _ => Some(f),
            })
    }

    /// One summary line followed by one line per rule.
    pub fn report(&self) -> String {
        let mut out = match (self.accepted(), self.rejection()) {
            (Some((rule, _)), _) => format!("accepted by rule {rule}"),
            (None, Some(f)) => format!("rejected: {f}"),
            (None, None) => "rejected".to_owned(),
        };
        for o in &self.outcomes {
            match &o.result {
                Ok(sp) => out.push_str(&format!("\n{}: ok via {sp}", o.rule)),
                Err(f) => out.push_str(&format!("\n{}: {f}", o.rule)),
            }
        }
        out
    }
}
