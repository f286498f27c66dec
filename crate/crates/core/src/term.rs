//! Canonical constructor-term rendering.
//!
//! Every model type implements `Display` as its constructor term, e.g.
//! `mkanchor([1,2], source, ["k"="v"])`. Sets and maps render in their
//! iteration order, so equal values always render to equal text.

use std::fmt::{self, Display, Write};

use crate::containers::{FiniteMap, FiniteSet};

/// Double-quoted string literal with `\"`, `\\`, `\n`, `\t` and `\r` escaped.
pub fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\t' => out.push_str("\\t"),
            '\r' => out.push_str("\\r"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub(crate) fn write_list<T: Display>(
    f: &mut fmt::Formatter<'_>,
    open: char,
    items: impl IntoIterator<Item = T>,
    close: char,
) -> fmt::Result {
    f.write_char(open)?;
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{item}")?;
    }
    f.write_char(close)
}

/// `{e1, e2}`
pub struct SetTerm<'a, E: Ord>(pub &'a FiniteSet<E>);

impl<E: Ord + Clone + Display> Display for SetTerm<'_, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, '{', self.0.iter(), '}')
    }
}

/// `{d1 -> r1, d2 -> r2}`
pub struct MapTerm<'a, D: Ord, R>(pub &'a FiniteMap<D, R>);

impl<D: Ord + Clone + Display, R: Clone + Display> Display for MapTerm<'_, D, R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(
            f,
            '{',
            self.0.iter().map(|(d, r)| format!("{d} -> {r}")),
            '}',
        )
    }
}

/// Natural-number lists render compactly: `[2,3]`.
pub fn nat_list(ns: &[usize]) -> String {
    let inner: Vec<String> = ns.iter().map(usize::to_string).collect();
    format!("[{}]", inner.join(","))
}
