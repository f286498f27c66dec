//! Proptest strategies for well-sorted model terms.

use proptest::collection::{btree_map, btree_set, vec};
use proptest::prelude::*;

use crate::anchor::{Anchor, AnchorType};
use crate::attributes::{Attr, AttrSet};
use crate::containers::{FiniteMap, FiniteSet};
use crate::hmd::{DocAddr, Hmd};
use crate::link::{ActuateType, AnchorName, Link, LinkType, ShowType, Specifier, Uri};
use crate::page::{Location, MediaObject, Page, PageStruct};

/// Addresses used by generated documents and specifiers.
pub const ADDRESSES: [&str; 4] = ["d1", "d2", "d3", "d4"];
/// Anchor names used by generated documents and specifiers.
pub const NAMES: [&str; 5] = ["n1", "n2", "n3", "n4", "n5"];

pub fn attrs() -> impl Strategy<Value = AttrSet> {
    vec(("[a-c]", "[0-2]"), 0..4)
        .prop_map(|kv| kv.into_iter().map(|(k, v)| Attr::new(k, v)).collect())
}

pub fn anchor_type() -> impl Strategy<Value = AnchorType> {
    prop::sample::select(AnchorType::ALL.to_vec())
}

pub fn show_type() -> impl Strategy<Value = ShowType> {
    prop::sample::select(ShowType::ALL.to_vec())
}

pub fn actuate_type() -> impl Strategy<Value = ActuateType> {
    prop::sample::select(ActuateType::ALL.to_vec())
}

pub fn link_type() -> impl Strategy<Value = LinkType> {
    prop::sample::select(LinkType::all().collect::<Vec<_>>())
}

pub fn page_struct() -> impl Strategy<Value = PageStruct> {
    prop::sample::select(PageStruct::ALL.to_vec())
}

pub fn address() -> impl Strategy<Value = DocAddr> {
    prop::sample::select(ADDRESSES.to_vec()).prop_map(DocAddr::from)
}

pub fn uri() -> impl Strategy<Value = Uri> {
    prop::sample::select(ADDRESSES.to_vec()).prop_map(Uri::from)
}

pub fn anchor_name() -> impl Strategy<Value = AnchorName> {
    prop::sample::select(NAMES.to_vec()).prop_map(AnchorName::from)
}

pub fn specifier() -> impl Strategy<Value = Specifier> {
    (uri(), anchor_name()).prop_map(|(u, n)| Specifier::new(u, n))
}

pub fn specifiers(max: usize) -> impl Strategy<Value = FiniteSet<Specifier>> {
    btree_set(specifier(), 0..=max).prop_map(|s| s.into_iter().collect())
}

pub fn link() -> impl Strategy<Value = Link> {
    (specifiers(3), specifiers(3), link_type(), attrs())
        .prop_map(|(s, t, lt, a)| Link::new(s, t, lt, a))
}

pub fn links(max: usize) -> impl Strategy<Value = FiniteSet<Link>> {
    btree_set(link(), 0..=max).prop_map(|s| s.into_iter().collect())
}

/// Locations with steps in `0..=max_step` (0 included to exercise the
/// unspecified case) and at most `max_len` steps.
pub fn location(max_len: usize, max_step: usize) -> impl Strategy<Value = Location> {
    vec(0..=max_step, 0..=max_len).prop_map(Location::new)
}

/// Locations with valid 1-based steps.
pub fn location_1based(max_len: usize, max_step: usize) -> impl Strategy<Value = Location> {
    vec(1..=max_step, 0..=max_len).prop_map(Location::new)
}

pub fn media_object() -> impl Strategy<Value = MediaObject> {
    (uri(), btree_set(anchor_name(), 0..3))
        .prop_map(|(u, ns)| MediaObject::new(u, ns.into_iter().collect()))
}

pub fn atomic_page() -> impl Strategy<Value = Page> {
    prop_oneof![
        3 => Just(Page::Empty),
        1 => "[a-c•]".prop_map(Page::Symbol),
        1 => media_object().prop_map(Page::Media),
    ]
}

/// Pages with at most `depth` levels of `mkld` nesting and `fanout` children per node.
pub fn page(depth: u32, fanout: usize) -> impl Strategy<Value = Page> {
    atomic_page().prop_recursive(depth, 256, fanout as u32, move |inner| {
        (page_struct(), vec(inner, 0..=fanout), attrs()).prop_map(|(k, cs, a)| Page::mkld(k, cs, a))
    })
}

/// Structured pages only.
pub fn node_page(depth: u32, fanout: usize) -> impl Strategy<Value = Page> {
    (
        page_struct(),
        vec(page(depth.saturating_sub(1), fanout), 0..=fanout),
        attrs(),
    )
        .prop_map(|(k, cs, a)| Page::mkld(k, cs, a))
}

pub fn anchor<L: Strategy>(loc: L) -> impl Strategy<Value = Anchor<L::Value>>
where
    L::Value: Clone,
{
    (loc, anchor_type(), attrs()).prop_map(|(o, t, a)| Anchor::new(o, t, a))
}

/// Every location of `p`, in pre-order.
pub fn all_locations(p: &Page) -> Vec<Location> {
    fn walk(p: &Page, here: &Location, out: &mut Vec<Location>) {
        out.push(here.clone());
        if let Page::Node { children, .. } = p {
            for (i, c) in children.iter().enumerate() {
                walk(c, &here.child(i + 1), out);
            }
        }
    }
    let mut out = Vec::new();
    walk(p, &Location::root(), &mut out);
    out
}

/// Anchor maps over existing locations of `basis`.
pub fn anchors_for(
    basis: Page,
    names: Vec<&'static str>,
) -> impl Strategy<Value = FiniteMap<AnchorName, Anchor<Location>>> {
    let locs = all_locations(&basis);
    btree_map(
        prop::sample::select(names).prop_map(AnchorName::from),
        anchor(prop::sample::select(locs)),
        0..4,
    )
    .prop_map(|m| m.into_iter().collect())
}

/// Hypermedia documents whose anchors sit at existing locations and use
/// names drawn from `names`.
pub fn hmd_with_names(
    depth: u32,
    fanout: usize,
    names: Vec<&'static str>,
) -> impl Strategy<Value = Hmd> {
    page(depth, fanout).prop_flat_map(move |p| {
        (
            Just(p.clone()),
            anchors_for(p, names.clone()),
            links(3),
            attrs(),
            address(),
        )
            .prop_map(|(p, a, l, att, addr)| Hmd::new(p, a, l, att, addr))
    })
}

pub fn hmd(depth: u32, fanout: usize) -> impl Strategy<Value = Hmd> {
    hmd_with_names(depth, fanout, NAMES.to_vec())
}
