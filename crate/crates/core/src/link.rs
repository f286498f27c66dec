//! Links, specifiers and link types.

use std::fmt;

use crate::attributes::AttrSet;
use crate::containers::FiniteSet;
use crate::term::{quote, SetTerm};

macro_rules! string_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub struct $name(String);

        impl $name {
            pub fn new(s: impl Into<String>) -> Self {
                Self(s.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                Self(s)
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                f.write_str(&self.0)
            }
        }
    };
}

pub(crate) use string_newtype;

string_newtype!(
    /// Global address. Compared as a plain string, without normalization.
    Uri
);
string_newtype!(
    /// Local anchor name, resolved by the document stored under a URI.
    AnchorName
);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ShowType {
    /// Embed the target into the context of the source.
    Embed,
    /// Replace the source document with the target document.
    Replace,
    /// Open the target in a new window.
    New,
}

impl ShowType {
    pub const ALL: [ShowType; 3] = [ShowType::Embed, ShowType::Replace, ShowType::New];

    pub fn name(self) -> &'static str {
        match self {
            ShowType::Embed => "embed",
            ShowType::Replace => "replace",
            ShowType::New => "new",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ActuateType {
    /// Followed on user interaction.
    User,
    /// Followed automatically.
    Auto,
}

impl ActuateType {
    pub const ALL: [ActuateType; 2] = [ActuateType::User, ActuateType::Auto];

    pub fn name(self) -> &'static str {
        match self {
            ActuateType::User => "user",
            ActuateType::Auto => "auto",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinkType {
    Uni(ShowType, ActuateType),
    /// Bidirectional; always shown as replace and actuated by the user.
    Bi,
}

impl LinkType {
    /// The classical jump link.
    pub const JUMP: LinkType = LinkType::Uni(ShowType::Replace, ActuateType::User);
    /// The include link.
    pub const INCLUDE: LinkType = LinkType::Uni(ShowType::Embed, ActuateType::Auto);

    /// All seven link types.
    pub fn all() -> impl Iterator<Item = LinkType> {
        ShowType::ALL
            .into_iter()
            .flat_map(|s| {
                ActuateType::ALL
                    .into_iter()
                    .map(move |a| LinkType::Uni(s, a))
            })
            .chain(std::iter::once(LinkType::Bi))
    }
}

impl fmt::Display for LinkType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkType::Uni(s, a) => write!(f, "uni({},{})", s.name(), a.name()),
            LinkType::Bi => f.write_str("bi"),
        }
    }
}

/// One end of a link: a document URI and an anchor name inside it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Specifier {
    uri: Uri,
    name: AnchorName,
}

impl Specifier {
    pub fn new(uri: impl Into<Uri>, name: impl Into<AnchorName>) -> Self {
        Self {
            uri: uri.into(),
            name: name.into(),
        }
    }

    pub fn uri(&self) -> &Uri {
        &self.uri
    }

    pub fn name(&self) -> &AnchorName {
        &self.name
    }

    pub fn with_uri(&self, uri: Uri) -> Self {
        Self {
            uri,
            name: self.name.clone(),
        }
    }

    pub fn with_name(&self, name: AnchorName) -> Self {
        Self {
            uri: self.uri.clone(),
            name,
        }
    }

    /// Points the specifier at `new` if it currently points at `old`.
    pub fn replace_uri(&self, old: &Uri, new: &Uri) -> Self {
        if &self.uri == old {
            self.with_uri(new.clone())
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for Specifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mkspecifier({}, {})",
            quote(self.uri.as_str()),
            quote(self.name.as_str())
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link {
    source: FiniteSet<Specifier>,
    target: FiniteSet<Specifier>,
    ltype: LinkType,
    attrs: AttrSet,
}

impl Link {
    pub fn new(
        source: FiniteSet<Specifier>,
        target: FiniteSet<Specifier>,
        ltype: LinkType,
        attrs: AttrSet,
    ) -> Self {
        Self {
            source,
            target,
            ltype,
            attrs,
        }
    }

    pub fn source(&self) -> &FiniteSet<Specifier> {
        &self.source
    }

    pub fn target(&self) -> &FiniteSet<Specifier> {
        &self.target
    }

    pub fn link_type(&self) -> LinkType {
        self.ltype
    }

    pub fn attrs(&self) -> &AttrSet {
        &self.attrs
    }

    /// Source and target specifiers together.
    pub fn specifiers(&self) -> FiniteSet<Specifier> {
        self.source.union(&self.target)
    }

    pub fn insert_source(&self, sp: Specifier) -> Self {
        Self {
            source: self.source.insert(sp),
            ..self.clone()
        }
    }

    pub fn delete_source(&self, sp: &Specifier) -> Self {
        Self {
            source: self.source.remove(sp),
            ..self.clone()
        }
    }

    pub fn insert_target(&self, sp: Specifier) -> Self {
        Self {
            target: self.target.insert(sp),
            ..self.clone()
        }
    }

    pub fn delete_target(&self, sp: &Specifier) -> Self {
        Self {
            target: self.target.remove(sp),
            ..self.clone()
        }
    }

    pub fn with_type(&self, ltype: LinkType) -> Self {
        Self {
            ltype,
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

    /// Rewrites every specifier pointing at `old` to point at `new`.
    pub fn replace_uri(&self, old: &Uri, new: &Uri) -> Self {
        Self {
            source: self.source.map(|sp| sp.replace_uri(old, new)),
            target: self.target.map(|sp| sp.replace_uri(old, new)),
            ..self.clone()
        }
    }

    pub fn mentions(&self, uri: &Uri) -> bool {
        self.specifiers().exists(|sp| sp.uri() == uri)
    }
}

impl fmt::Display for Link {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "mklink({}, {}, {}, {})",
            SetTerm(&self.source),
            SetTerm(&self.target),
            self.ltype,
            self.attrs
        )
    }
}
