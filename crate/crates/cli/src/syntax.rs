//! Parser for the canonical constructor-term syntax produced by the
//! `Display` impls of the model types.

use dexterkit_core::anchor::{Anchor, AnchorType};
use dexterkit_core::link::{ActuateType, AnchorName, Link, LinkType, ShowType, Specifier};
use dexterkit_core::{
    Attr, AttrSet, DocAddr, FiniteMap, FiniteSet, Hmd, Location, MediaObject, Page, PageStruct,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {msg}")]
pub struct SyntaxError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Str(String),
    Num(usize),
    Punct(&'static str),
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Str(s) => write!(f, "string {s:?}"),
            Tok::Num(n) => write!(f, "number {n}"),
            Tok::Punct(p) => write!(f, "`{p}`"),
        }
    }
}

const PUNCT: [&str; 9] = ["->", "(", ")", "[", "]", "{", "}", ",", "="];

fn position(src: &str, offset: usize) -> (usize, usize) {
    let before = &src[..offset];
    let line = before.matches('\n').count() + 1;
    let col = before.rfind('\n').map_or(offset, |i| offset - i - 1) + 1;
    (line, col)
}

fn tokenize(src: &str) -> Result<Vec<(usize, Tok)>, SyntaxError> {
    let err = |at: usize, msg: String| {
        let (line, col) = position(src, at);
        SyntaxError { line, col, msg }
    };
    let mut toks = Vec::new();
    let mut chars = src.char_indices().peekable();
    while let Some(&(i, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut s = String::new();
            loop {
                match chars.next() {
                    None => return Err(err(i, "unterminated string".into())),
                    Some((_, '"')) => break,
                    Some((j, '\\')) => match chars.next() {
                        Some((_, '"')) => s.push('"'),
                        Some((_, '\\')) => s.push('\\'),
                        Some((_, 'n')) => s.push('\n'),
                        Some((_, 't')) => s.push('\t'),
                        Some((_, 'r')) => s.push('\r'),
                        _ => return Err(err(j, "bad escape".into())),
                    },
                    Some((_, ch)) => s.push(ch),
                }
            }
            toks.push((i, Tok::Str(s)));
        } else if c.is_ascii_digit() {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            let n = src[i..end]
                .parse()
                .map_err(|_| err(i, "number out of range".into()))?;
            toks.push((i, Tok::Num(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut end = i;
            while let Some(&(j, d)) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                end = j + 1;
                chars.next();
            }
            toks.push((i, Tok::Ident(src[i..end].to_owned())));
        } else if let Some(p) = PUNCT.iter().find(|p| src[i..].starts_with(**p)) {
            for _ in 0..p.len() {
                chars.next();
            }
            toks.push((i, Tok::Punct(p)));
        } else {
            return Err(err(i, format!("unexpected character {c:?}")));
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

type PResult<T> = Result<T, SyntaxError>;

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> PResult<Self> {
        Ok(Self {
            src,
            toks: tokenize(src)?,
            pos: 0,
        })
    }

    fn error(&self, msg: impl Into<String>) -> SyntaxError {
        let offset = self.toks.get(self.pos).map_or(self.src.len(), |(o, _)| *o);
        let (line, col) = position(self.src, offset);
        SyntaxError {
            line,
            col,
            msg: msg.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn next(&mut self) -> PResult<Tok> {
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| self.error("unexpected end of input"))?;
        self.pos += 1;
        Ok(tok)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    fn is_punct(&self, p: &str) -> bool {
        matches!(self.peek(), Some(Tok::Punct(q)) if *q == p)
    }

    fn expect(&mut self, p: &'static str) -> PResult<()> {
        if self.is_punct(p) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{p}`")))
        }
    }

    fn unexpected(&self, wanted: &str) -> SyntaxError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    fn ident(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        match self.peek() {
            Some(Tok::Ident(s)) if s == kw => {
                self.pos += 1;
                Ok(())
            }
            _ => Err(self.unexpected(&format!("`{kw}`"))),
        }
    }

    fn string(&mut self) -> PResult<String> {
        match self.peek() {
            Some(Tok::Str(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("string")),
        }
    }

    fn number(&mut self) -> PResult<usize> {
        match self.next()? {
            Tok::Num(n) => Ok(n),
            _ => {
                self.pos -= 1;
                Err(self.unexpected("number"))
            }
        }
    }

    /// `open item, item, ... close`
    fn seq<T>(
        &mut self,
        open: &'static str,
        close: &'static str,
        mut item: impl FnMut(&mut Self) -> PResult<T>,
    ) -> PResult<Vec<T>> {
        self.expect(open)?;
        let mut out = Vec::new();
        if self.is_punct(close) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.is_punct(",") {
                self.pos += 1;
            } else {
                self.expect(close)?;
                return Ok(out);
            }
        }
    }

    fn attrs(&mut self) -> PResult<AttrSet> {
        let entries = self.seq("[", "]", |p| {
            let k = p.string()?;
            p.expect("=")?;
            let v = p.string()?;
            Ok(Attr::new(k, v))
        })?;
        Ok(entries.into_iter().collect())
    }

    fn location(&mut self) -> PResult<Location> {
        Ok(Location::new(self.seq("[", "]", Self::number)?))
    }

    fn page(&mut self) -> PResult<Page> {
        let head = self.ident()?;
        match head.as_str() {
            "mtpage" => Ok(Page::Empty),
            "imp_symbol" => {
                self.expect("(")?;
                let s = self.string()?;
                self.expect(")")?;
                Ok(Page::Symbol(s))
            }
            "imp_mo" => {
                self.expect("(")?;
                self.keyword("mkmo")?;
                self.expect("(")?;
                let uri = self.string()?;
                self.expect(",")?;
                let names = self.seq("{", "}", |p| p.string().map(AnchorName::from))?;
                self.expect(")")?;
                self.expect(")")?;
                Ok(Page::Media(MediaObject::new(
                    uri,
                    names.into_iter().collect(),
                )))
            }
            "mkld" => {
                self.expect("(")?;
                let name = self.ident()?;
                let kind = PageStruct::from_name(&name)
                    .ok_or_else(|| self.error(format!("unknown page structure `{name}`")))?;
                self.expect(",")?;
                let children = self.seq("[", "]", Self::page)?;
                self.expect(",")?;
                let attrs = self.attrs()?;
                self.expect(")")?;
                Ok(Page::mkld(kind, children, attrs))
            }
            other => {
                self.pos -= 1;
                Err(self.error(format!("expected a page term, found `{other}`")))
            }
        }
    }

    fn anchor_type(&mut self) -> PResult<AnchorType> {
        let name = self.ident()?;
        AnchorType::from_name(&name).ok_or_else(|| {
            self.pos -= 1;
            self.error(format!("unknown anchor type `{name}`"))
        })
    }

    fn anchor(&mut self) -> PResult<Anchor<Location>> {
        self.keyword("mkanchor")?;
        self.expect("(")?;
        let loc = self.location()?;
        self.expect(",")?;
        let t = self.anchor_type()?;
        self.expect(",")?;
        let attrs = self.attrs()?;
        self.expect(")")?;
        Ok(Anchor::new(loc, t, attrs))
    }

    fn specifier(&mut self) -> PResult<Specifier> {
        self.keyword("mkspecifier")?;
        self.expect("(")?;
        let uri = self.string()?;
        self.expect(",")?;
        let name = self.string()?;
        self.expect(")")?;
        Ok(Specifier::new(uri, name))
    }

    fn link_type(&mut self) -> PResult<LinkType> {
        let head = self.ident()?;
        match head.as_str() {
            "bi" => Ok(LinkType::Bi),
            "uni" => {
                self.expect("(")?;
                let show = self.ident()?;
                let show = ShowType::ALL
                    .into_iter()
                    .find(|s| s.name() == show)
                    .ok_or_else(|| self.error(format!("unknown show type `{show}`")))?;
                self.expect(",")?;
                let act = self.ident()?;
                let act = ActuateType::ALL
                    .into_iter()
                    .find(|a| a.name() == act)
                    .ok_or_else(|| self.error(format!("unknown actuate type `{act}`")))?;
                self.expect(")")?;
                Ok(LinkType::Uni(show, act))
            }
            other => {
                self.pos -= 1;
                Err(self.error(format!("expected a link type, found `{other}`")))
            }
        }
    }

    fn link(&mut self) -> PResult<Link> {
        self.keyword("mklink")?;
        self.expect("(")?;
        let source = self.seq("{", "}", Self::specifier)?;
        self.expect(",")?;
        let target = self.seq("{", "}", Self::specifier)?;
        self.expect(",")?;
        let lt = self.link_type()?;
        self.expect(",")?;
        let attrs = self.attrs()?;
        self.expect(")")?;
        Ok(Link::new(
            source.into_iter().collect(),
            target.into_iter().collect(),
            lt,
            attrs,
        ))
    }

    fn hmd(&mut self) -> PResult<Hmd> {
        self.keyword("mkhd")?;
        self.expect("(")?;
        let basis = self.page()?;
        self.expect(",")?;
        let bindings = self.seq("{", "}", |p| {
            let n = p.string()?;
            p.expect("->")?;
            Ok((AnchorName::from(n), p.anchor()?))
        })?;
        let mut anchors = FiniteMap::empty();
        for (n, c) in bindings {
            if anchors.contains_key(&n) {
                return Err(self.error(format!("anchor name {n:?} bound twice")));
            }
            anchors = anchors.upd(n, c);
        }
        self.expect(",")?;
        let links: FiniteSet<Link> = self.seq("{", "}", Self::link)?.into_iter().collect();
        self.expect(",")?;
        let attrs = self.attrs()?;
        self.expect(",")?;
        let addr = DocAddr::from(self.string()?);
        self.expect(")")?;
        Ok(Hmd::new(basis, anchors, links, attrs, addr))
    }

    fn finish<T>(mut self, value: T) -> PResult<T> {
        if self.at_end() {
            Ok(value)
        } else {
            let t = self.next()?;
            self.pos -= 1;
            Err(self.error(format!("unexpected trailing {t}")))
        }
    }
}

macro_rules! entry_point {
    ($(#[$meta:meta])* $name:ident, $method:ident, $ty:ty) => {
        $(#[$meta])*
        pub fn $name(src: &str) -> Result<$ty, SyntaxError> {
            let mut p = Parser::new(src)?;
            let v = p.$method()?;
            p.finish(v)
        }
    };
}

entry_point!(parse_page, page, Page);
entry_point!(parse_location, location, Location);
entry_point!(parse_attrs, attrs, AttrSet);
entry_point!(parse_anchor, anchor, Anchor<Location>);
entry_point!(parse_specifier, specifier, Specifier);
entry_point!(parse_link_type, link_type, LinkType);
entry_point!(parse_link, link, Link);
entry_point!(parse_hmd, hmd, Hmd);

/// A sequence of `mkhd(...)` terms.
pub fn parse_hmds(src: &str) -> Result<Vec<Hmd>, SyntaxError> {
    let mut p = Parser::new(src)?;
    let mut out = Vec::new();
    while !p.at_end() {
        out.push(p.hmd()?);
    }
    Ok(out)
}
