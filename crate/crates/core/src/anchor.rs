//! Anchors: a location in a basis document, a type and attributes.

use std::fmt;

use crate::attributes::AttrSet;

/// Anchor types ordered by `source ≤ label` and `target ≤ label`;
/// `source` and `target` are incomparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AnchorType {
    Source,
    Target,
    Label,
}

impl AnchorType {
    pub const ALL: [AnchorType; 3] = [AnchorType::Source, AnchorType::Target, AnchorType::Label];

    /// Least upper bound in the three-element order.
    pub fn join(self, other: AnchorType) -> AnchorType {
        if self == other {
            self
        } else {
            AnchorType::Label
        }
    }

    pub fn leq(self, other: AnchorType) -> bool {
        self == other || other == AnchorType::Label
    }

    pub fn name(self) -> &'static str {
        match self {
            AnchorType::Source => "source",
            AnchorType::Target => "target",
            AnchorType::Label => "label",
        }
    }

    pub fn from_name(name: &str) -> Option<AnchorType> {
        Self::ALL.into_iter().find(|t| t.name() == name)
    }
}

impl fmt::Display for AnchorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Anchor<Loc> {
    location: Loc,
    atype: AnchorType,
    attrs: AttrSet,
}

impl<Loc: Clone> Anchor<Loc> {
    pub fn new(location: Loc, atype: AnchorType, attrs: AttrSet) -> Self {
        Self {
            location,
            atype,
            attrs,
        }
    }

    pub fn location(&self) -> &Loc {
        &self.location
    }

    pub fn anchor_type(&self) -> AnchorType {
        self.atype
    }

    pub fn attrs(&self) -> &AttrSet {
        &self.attrs
    }

    /// Supremal type of the two anchors. Only the types are consulted.
    pub fn supremal_type(&self, other: &Anchor<Loc>) -> AnchorType {
        if self.atype == AnchorType::Label || other.atype == AnchorType::Label {
            return AnchorType::Label;
        }
        if self.atype != other.atype {
            AnchorType::Label
        } else {
            self.atype
        }
    }

    pub fn with_location(&self, location: Loc) -> Self {
        Self::new(location, self.atype, self.attrs.clone())
    }

    pub fn with_type(&self, atype: AnchorType) -> Self {
        Self::new(self.location.clone(), atype, self.attrs.clone())
    }

    /// New attributes go in front of the existing ones.
    pub fn add_attrs(&self, attrs: &AttrSet) -> Self {
        Self::new(self.location.clone(), self.atype, attrs.concat(&self.attrs))
    }

    pub fn del_attrs(&self, attrs: &AttrSet) -> Self {
        Self::new(self.location.clone(), self.atype, self.attrs.remove(attrs))
    }
}

impl<Loc: fmt::Display> fmt::Display for Anchor<Loc> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mkanchor({}, {}, {})",
            self.location, self.atype, self.attrs
        )
    }
}
