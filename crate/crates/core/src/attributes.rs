//! Opaque attribute collections.
//!
//! Attributes are a bag of `key=value` string pairs. Concatenation keeps
//! order and duplicates; removal is bag difference, each removed entry
//! cancelling at most one matching occurrence.

use std::fmt;

use crate::term::{quote, write_list};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Attr {
    pub key: String,
    pub value: String,
}

impl Attr {
    pub fn new(key: impl Into<String>, value: impl Into<String>) -> Self {
        Self {
            key: key.into(),
            value: value.into(),
        }
    }
}

impl fmt::Display for Attr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", quote(&self.key), quote(&self.value))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AttrSet(Vec<Attr>);

impl AttrSet {
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn entries(&self) -> &[Attr] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entries of `self` followed by entries of `rest`.
    pub fn concat(&self, rest: &AttrSet) -> AttrSet {
        AttrSet(self.0.iter().chain(&rest.0).cloned().collect())
    }

    /// `self` with one occurrence removed for every entry of `removed`.
    pub fn remove(&self, removed: &AttrSet) -> AttrSet {
        let mut pending: Vec<&Attr> = removed.0.iter().collect();
        let mut kept = Vec::with_capacity(self.0.len());
        for entry in &self.0 {
            match pending.iter().position(|r| *r == entry) {
                Some(i) => {
                    pending.swap_remove(i);
                }
                None => kept.push(entry.clone()),
            }
        }
        AttrSet(kept)
    }
}

impl FromIterator<Attr> for AttrSet {
    fn from_iter<I: IntoIterator<Item = Attr>>(iter: I) -> Self {
        AttrSet(iter.into_iter().collect())
    }
}

impl<K: Into<String>, V: Into<String>, const N: usize> From<[(K, V); N]> for AttrSet {
    fn from(pairs: [(K, V); N]) -> Self {
        pairs.into_iter().map(|(k, v)| Attr::new(k, v)).collect()
    }
}

impl fmt::Display for AttrSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, '[', &self.0, ']')
    }
}
