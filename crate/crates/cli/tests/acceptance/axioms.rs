//! Every equation of the anchor, link, hyperdocument, page and hypermedia
//! document specifications as an executable equality.

use std::collections::{BTreeMap, BTreeSet};

use dexterkit_core::hmd::{combine_links, sink_location};
use dexterkit_core::page::{dimension_list, has_nth, insert_into_children, pnth};
use dexterkit_core::strategies::{self as st, all_locations};
use dexterkit_core::{
    ActuateType, Address, Anchor, AnchorName, AnchorType, DocAddr, FiniteMap, FiniteSet, Hmd, Link,
    LinkType, Location, Page, PageStruct, RoseTree, ShowType, Specifier,
};
use proptest::collection::vec;
use proptest::prelude::*;

use crate::oracle::{bag_minus, concat, pointwise_max, rewire_link, rewire_specifier};
use crate::runner::Laws;

const DEPTH: u32 = 3;
const FANOUT: usize = 4;

fn any_page() -> impl Strategy<Value = Page> {
    st::page(DEPTH, FANOUT)
}

fn pages() -> impl Strategy<Value = Vec<Page>> {
    vec(st::page(DEPTH - 1, FANOUT), 0..=FANOUT)
}

fn loc() -> impl Strategy<Value = Location> {
    st::location(4, 4)
}

fn set_of(s: &BTreeSet<Specifier>) -> FiniteSet<Specifier> {
    s.iter().cloned().collect()
}

fn btree(s: &FiniteSet<Specifier>) -> BTreeSet<Specifier> {
    s.iter().cloned().collect()
}

pub fn anchor(laws: &mut Laws) {
    let parts = || (loc(), st::anchor_type(), st::attrs());
    let mk =
        |o: &Location, t, att: &dexterkit_core::AttrSet| Anchor::new(o.clone(), t, att.clone());

    laws.check(
        "anchor",
        "loc(mkanchor(o,t,att)) = o",
        parts(),
        |(o, t, att)| {
            prop_assert_eq!(mk(&o, t, &att).location().clone(), o);
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "type(mkanchor(o,t,att)) = t",
        parts(),
        |(o, t, att)| {
            prop_assert_eq!(mk(&o, t, &att).anchor_type(), t);
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "att(mkanchor(o,t,att)) = att",
        parts(),
        |(o, t, att)| {
            prop_assert_eq!(mk(&o, t, &att).attrs().clone(), att);
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "max(mkanchor(o,label,att), c') = label",
        (loc(), st::attrs(), st::anchor(loc())),
        |(o, att, c2)| {
            prop_assert_eq!(
                mk(&o, AnchorType::Label, &att).supremal_type(&c2),
                AnchorType::Label
            );
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "max(c, mkanchor(o',label,att')) = label",
        (st::anchor(loc()), loc(), st::attrs()),
        |(c, o2, att2)| {
            prop_assert_eq!(
                c.supremal_type(&mk(&o2, AnchorType::Label, &att2)),
                AnchorType::Label
            );
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "max(mkanchor(o,t,att), mkanchor(o',t',att')) = label if t != t'",
        (parts(), parts()).prop_filter("distinct types", |(a, b)| a.1 != b.1),
        |((o, t, att), (o2, t2, att2))| {
            prop_assert_eq!(
                mk(&o, t, &att).supremal_type(&mk(&o2, t2, &att2)),
                AnchorType::Label
            );
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "max(mkanchor(o,t,att), mkanchor(o',t,att')) = t",
        (parts(), loc(), st::attrs()),
        |((o, t, att), o2, att2)| {
            prop_assert_eq!(mk(&o, t, &att).supremal_type(&mk(&o2, t, &att2)), t);
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "chlocation(o', mkanchor(o,t,att)) = mkanchor(o',t,att)",
        (parts(), loc()),
        |((o, t, att), o2)| {
            prop_assert_eq!(mk(&o, t, &att).with_location(o2.clone()), mk(&o2, t, &att));
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "chanchortype(t', mkanchor(o,t,att)) = mkanchor(o,t',att)",
        (parts(), st::anchor_type()),
        |((o, t, att), t2)| {
            prop_assert_eq!(mk(&o, t, &att).with_type(t2), mk(&o, t2, &att));
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "addattribute(att', mkanchor(o,t,att)) = mkanchor(o,t,concat(att',att))",
        (parts(), st::attrs()),
        |((o, t, att), att2)| {
            prop_assert_eq!(
                mk(&o, t, &att).add_attrs(&att2),
                mk(&o, t, &concat(&att2, &att))
            );
            Ok(())
        },
    );
    laws.check(
        "anchor",
        "delattribute(att', mkanchor(o,t,att)) = mkanchor(o,t,remove(att',att))",
        (parts(), st::attrs()),
        |((o, t, att), att2)| {
            prop_assert_eq!(
                mk(&o, t, &att).del_attrs(&att2),
                mk(&o, t, &bag_minus(&att2, &att))
            );
            Ok(())
        },
    );
}

pub fn link(laws: &mut Laws) {
    let spec = || (st::uri(), st::anchor_name());
    let parts = || {
        (
            st::specifiers(3),
            st::specifiers(3),
            st::link_type(),
            st::attrs(),
        )
    };
    let mk =
        |s: &FiniteSet<Specifier>, t: &FiniteSet<Specifier>, lt, att: &dexterkit_core::AttrSet| {
            Link::new(s.clone(), t.clone(), lt, att.clone())
        };

    laws.check("link", "add(mkspecifier(a,n)) = a", spec(), |(a, n)| {
        prop_assert_eq!(Specifier::new(a.clone(), n).uri().clone(), a);
        Ok(())
    });
    laws.check("link", "anch(mkspecifier(a,n)) = n", spec(), |(a, n)| {
        prop_assert_eq!(Specifier::new(a, n.clone()).name().clone(), n);
        Ok(())
    });
    laws.check(
        "link",
        "source(mklink(S,S',t,att)) = S",
        parts(),
        |(s, t, lt, att)| {
            prop_assert_eq!(mk(&s, &t, lt, &att).source().clone(), s);
            Ok(())
        },
    );
    laws.check(
        "link",
        "target(mklink(S,S',t,att)) = S'",
        parts(),
        |(s, t, lt, att)| {
            prop_assert_eq!(mk(&s, &t, lt, &att).target().clone(), t);
            Ok(())
        },
    );
    laws.check(
        "link",
        "specifier(mklink(S,S',t,att)) = union(S,S')",
        parts(),
        |(s, t, lt, att)| {
            let both: BTreeSet<Specifier> = btree(&s).union(&btree(&t)).cloned().collect();
            prop_assert_eq!(mk(&s, &t, lt, &att).specifiers(), set_of(&both));
            Ok(())
        },
    );
    laws.check(
        "link",
        "type(mklink(S,S',t,att)) = t",
        parts(),
        |(s, t, lt, att)| {
            prop_assert_eq!(mk(&s, &t, lt, &att).link_type(), lt);
            Ok(())
        },
    );
    laws.check(
        "link",
        "att(mklink(S,S',t,att)) = att",
        parts(),
        |(s, t, lt, att)| {
            prop_assert_eq!(mk(&s, &t, lt, &att).attrs().clone(), att);
            Ok(())
        },
    );
    laws.check(
        "link",
        "chaddrspec(a', mkspecifier(a,n)) = mkspecifier(a',n)",
        (spec(), st::uri()),
        |((a, n), a2)| {
            prop_assert_eq!(
                Specifier::new(a, n.clone()).with_uri(a2.clone()),
                Specifier::new(a2, n)
            );
            Ok(())
        },
    );
    laws.check(
        "link",
        "chname(n', mkspecifier(a,n)) = mkspecifier(a,n')",
        (spec(), st::anchor_name()),
        |((a, n), n2)| {
            prop_assert_eq!(
                Specifier::new(a.clone(), n).with_name(n2.clone()),
                Specifier::new(a, n2)
            );
            Ok(())
        },
    );
    laws.check(
        "link",
        "replaceaddrspec(a, a'', mkspecifier(a,n)) = mkspecifier(a'',n)",
        (spec(), st::uri()),
        |((a, n), a3)| {
            prop_assert_eq!(
                Specifier::new(a.clone(), n.clone()).replace_uri(&a, &a3),
                Specifier::new(a3, n)
            );
            Ok(())
        },
    );
    laws.check(
        "link",
        "replaceaddrspec(a', a'', mkspecifier(a,n)) = mkspecifier(a,n) if a' != a",
        (spec(), st::uri(), st::uri()).prop_filter("a' != a", |((a, _), a2, _)| a != a2),
        |((a, n), a2, a3)| {
            let sp = Specifier::new(a, n);
            prop_assert_eq!(sp.replace_uri(&a2, &a3), sp);
            Ok(())
        },
    );
    laws.check(
        "link",
        "insertsource(s, mklink(S,S',t,att)) = mklink(insert(s,S),S',t,att)",
        (parts(), st::specifier()),
        |((s, t, lt, att), sp)| {
            let mut s2 = btree(&s);
            s2.insert(sp.clone());
            prop_assert_eq!(
                mk(&s, &t, lt, &att).insert_source(sp),
                mk(&set_of(&s2), &t, lt, &att)
            );
            Ok(())
        },
    );
    laws.check(
        "link",
        "deletesource(s, mklink(S,S',t,att)) = mklink(remove(s,S),S',t,att)",
        (parts(), st::specifier()),
        |((s, t, lt, att), sp)| {
            let mut s2 = btree(&s);
            s2.remove(&sp);
            prop_assert_eq!(
                mk(&s, &t, lt, &att).delete_source(&sp),
                mk(&set_of(&s2), &t, lt, &att)
            );
            Ok(())
        },
    );
    laws.check(
        "link",
        "inserttarget(s, mklink(S,S',t,att)) = mklink(S,insert(s,S'),t,att)",
        (parts(), st::specifier()),
        |((s, t, lt, att), sp)| {
            let mut t2 = btree(&t);
            t2.insert(sp.clone());
            prop_assert_eq!(
                mk(&s, &t, lt, &att).insert_target(sp),
                mk(&s, &set_of(&t2), lt, &att)
            );
            Ok(())
        },
    );
    laws.check(
        "link",
        "deletetarget(s, mklink(S,S',t,att)) = mklink(S,remove(s,S'),t,att)",
        (parts(), st::specifier()),
        |((s, t, lt, att), sp)| {
            let mut t2 = btree(&t);
            t2.remove(&sp);
            prop_assert_eq!(
                mk(&s, &t, lt, &att).delete_target(&sp),
                mk(&s, &set_of(&t2), lt, &att)
            );
            Ok(())
        },
    );
    laws.check(
        "link",
        "chlinktype(t', mklink(S,S',t,att)) = mklink(S,S',t',att)",
        (parts(), st::link_type()),
        |((s, t, lt, att), lt2)| {
            prop_assert_eq!(mk(&s, &t, lt, &att).with_type(lt2), mk(&s, &t, lt2, &att));
            Ok(())
        },
    );
    laws.check(
        "link",
        "addattribute(att', mklink(S,S',t,att)) = mklink(S,S',t,concat(att',att))",
        (parts(), st::attrs()),
        |((s, t, lt, att), att2)| {
            prop_assert_eq!(
                mk(&s, &t, lt, &att).add_attrs(&att2),
                mk(&s, &t, lt, &concat(&att2, &att))
            );
            Ok(())
        },
    );
    laws.check(
        "link",
        "delattribute(att', mklink(S,S',t,att)) = mklink(S,S',t,remove(att',att))",
        (parts(), st::attrs()),
        |((s, t, lt, att), att2)| {
            prop_assert_eq!(
                mk(&s, &t, lt, &att).del_attrs(&att2),
                mk(&s, &t, lt, &bag_minus(&att2, &att))
            );
            Ok(())
        },
    );
    laws.check(
        "link",
        "replaceaddrlink(a', a, mklink(S,S',t,att)) = mklink(mapset(replaceaddrspec(a',a),S),...)",
        (parts(), st::uri(), st::uri()),
        |((s, t, lt, att), old, new)| {
            let side = |x: &FiniteSet<Specifier>| -> FiniteSet<Specifier> {
                x.iter()
                    .map(|sp| rewire_specifier(sp, &old, &new))
                    .collect()
            };
            prop_assert_eq!(
                mk(&s, &t, lt, &att).replace_uri(&old, &new),
                mk(&side(&s), &side(&t), lt, &att)
            );
            Ok(())
        },
    );
}

fn hmd() -> impl Strategy<Value = Hmd> {
    st::hmd(DEPTH, FANOUT)
}

fn parts_of(
    h: &Hmd,
) -> (
    Page,
    FiniteMap<AnchorName, Anchor<Location>>,
    FiniteSet<Link>,
    dexterkit_core::AttrSet,
    DocAddr,
) {
    (
        h.basis().clone(),
        h.anchors().clone(),
        h.links().clone(),
        h.attrs().clone(),
        h.address().clone(),
    )
}

fn map_of(m: &FiniteMap<AnchorName, Anchor<Location>>) -> BTreeMap<AnchorName, Anchor<Location>> {
    m.iter().map(|(k, v)| (k.clone(), v.clone())).collect()
}

fn finite(m: BTreeMap<AnchorName, Anchor<Location>>) -> FiniteMap<AnchorName, Anchor<Location>> {
    m.into_iter().collect()
}

fn with_link(links: &FiniteSet<Link>, l: &Link) -> FiniteSet<Link> {
    let mut all: BTreeSet<Link> = links.iter().cloned().collect();
    all.insert(l.clone());
    all.into_iter().collect()
}

/// A document holding an anchor named `n` of type `at` and a link whose
/// source contains a self-addressed specifier for `n`. With `slot`, the
/// anchor sits on an empty page; with `single`, the link has one target.
fn addlink_case(
    lt: impl Strategy<Value = LinkType>,
    at: AnchorType,
    slot: bool,
    single: bool,
) -> impl Strategy<Value = (Hmd, Link)> {
    let doc = hmd().prop_filter("needs an empty page", move |h| {
        !slot
            || all_locations(h.basis())
                .iter()
                .any(|o| h.basis().locate(o) == Ok(&Page::Empty))
    });
    let targets = if single {
        st::specifier().prop_map(FiniteSet::singleton).boxed()
    } else {
        st::specifiers(3).boxed()
    };
    (
        doc,
        lt,
        targets,
        st::specifiers(2),
        st::attrs(),
        st::anchor_name(),
        st::attrs(),
    )
        .prop_flat_map(move |(h, lt, targets, others, latt, n, catt)| {
            let locs: Vec<Location> = all_locations(h.basis())
                .into_iter()
                .filter(|o| !slot || h.basis().locate(o) == Ok(&Page::Empty))
                .collect();
            prop::sample::select(locs).prop_map(move |o| {
                let (d, a, l, att, addr) = parts_of(&h);
                let anchors = a.upd(n.clone(), Anchor::new(o, at, catt.clone()));
                let doc = Hmd::new(d, anchors, l, att, addr.clone());
                let source = others.insert(Specifier::new(addr.integrate(), n.clone()));
                (doc, Link::new(source, targets.clone(), lt, latt.clone()))
            })
        })
}

pub fn hyperdoc(laws: &mut Laws) {
    laws.check("hyperdoc", "ld(mkhd(d,A,L,att,a)) = d", hmd(), |h| {
        let (d, a, l, att, addr) = parts_of(&h);
        prop_assert_eq!(Hmd::new(d.clone(), a, l, att, addr).basis().clone(), d);
        Ok(())
    });
    laws.check("hyperdoc", "anchors(mkhd(d,A,L,att,a)) = A", hmd(), |h| {
        let (d, a, l, att, addr) = parts_of(&h);
        prop_assert_eq!(Hmd::new(d, a.clone(), l, att, addr).anchors().clone(), a);
        Ok(())
    });
    laws.check("hyperdoc", "link(mkhd(d,A,L,att,a)) = L", hmd(), |h| {
        let (d, a, l, att, addr) = parts_of(&h);
        prop_assert_eq!(Hmd::new(d, a, l.clone(), att, addr).links().clone(), l);
        Ok(())
    });
    laws.check("hyperdoc", "att(mkhd(d,A,L,att,a)) = att", hmd(), |h| {
        let (d, a, l, att, addr) = parts_of(&h);
        prop_assert_eq!(Hmd::new(d, a, l, att.clone(), addr).attrs().clone(), att);
        Ok(())
    });
    laws.check("hyperdoc", "add(mkhd(d,A,L,att,a)) = a", hmd(), |h| {
        let (d, a, l, att, addr) = parts_of(&h);
        prop_assert_eq!(Hmd::new(d, a, l, att, addr.clone()).address().clone(), addr);
        Ok(())
    });
    laws.check(
        "hyperdoc",
        "anchor(n, A) = apply(A, n)",
        (hmd(), st::anchor_name()),
        |(h, n)| {
            let expected = map_of(h.anchors()).get(&n).cloned();
            prop_assert_eq!(h.anchor(&n).ok().cloned(), expected);
            Ok(())
        },
    );
    laws.check(
        "hyperdoc",
        "anchorname(c, A) = revapply(A, c)",
        (hmd(), st::anchor(loc())),
        |(h, c)| {
            let mut probes: Vec<Anchor<Location>> = map_of(h.anchors()).into_values().collect();
            probes.push(c);
            for c in probes {
                let expected: FiniteSet<AnchorName> = map_of(h.anchors())
                    .into_iter()
                    .filter(|(_, v)| *v == c)
                    .map(|(k, _)| k)
                    .collect();
                prop_assert_eq!(h.names_of(&c), expected);
            }
            Ok(())
        },
    );
    laws.check(
        "hyperdoc",
        "addanchor(n, c, mkhd(d,A,L,att,a)) = mkhd(d,upd(n,c,A),L,att,a) if n not in dom(A)",
        (hmd(), st::anchor_name(), st::anchor(loc()))
            .prop_filter("fresh name", |(h, n, _)| !h.anchors().contains_key(n)),
        |(h, n, c)| {
            let (d, a, l, att, addr) = parts_of(&h);
            let mut m = map_of(&a);
            m.insert(n.clone(), c.clone());
            prop_assert_eq!(h.add_anchor(n, c), Ok(Hmd::new(d, finite(m), l, att, addr)));
            Ok(())
        },
    );
    laws.check(
        "hyperdoc",
        "addanchor(n, c, mkhd(d,A,L,att,a)) merges with c' = anchor(n,A) at the same location",
        hmd()
            .prop_filter("has anchors", |h| !h.anchors().is_empty())
            .prop_flat_map(|h| {
                let names: Vec<AnchorName> = map_of(h.anchors()).into_keys().collect();
                (
                    Just(h),
                    prop::sample::select(names),
                    st::anchor_type(),
                    st::attrs(),
                )
            }),
        |(h, n, t, catt)| {
            let (d, a, l, att, addr) = parts_of(&h);
            let old = map_of(&a)[&n].clone();
            let c = Anchor::new(old.location().clone(), t, catt.clone());
            let merged_type = if t == old.anchor_type() {
                t
            } else {
                AnchorType::Label
            };
            let merged = Anchor::new(
                old.location().clone(),
                merged_type,
                concat(&catt, old.attrs()),
            );
            let mut m = map_of(&a);
            m.insert(n.clone(), merged);
            prop_assert_eq!(h.add_anchor(n, c), Ok(Hmd::new(d, finite(m), l, att, addr)));
            Ok(())
        },
    );
    laws.check(
        "hyperdoc",
        "delanchor(n, mkhd(d,A,L,att,a)) = mkhd(d,rem(n,A),L,att,a)",
        (hmd(), st::anchor_name()),
        |(h, n)| {
            let (d, a, l, att, addr) = parts_of(&h);
            let mut m = map_of(&a);
            m.remove(&n);
            prop_assert_eq!(h.del_anchor(&n), Hmd::new(d, finite(m), l, att, addr));
            Ok(())
        },
    );

    let acts = || st::actuate_type();
    let rules: Vec<(&str, BoxedStrategy<LinkType>, AnchorType, bool, bool)> = vec![
        (
            "uni(replace,act), source",
            acts()
                .prop_map(|a| LinkType::Uni(ShowType::Replace, a))
                .boxed(),
            AnchorType::Source,
            false,
            false,
        ),
        (
            "uni(replace,act), label",
            acts()
                .prop_map(|a| LinkType::Uni(ShowType::Replace, a))
                .boxed(),
            AnchorType::Label,
            false,
            false,
        ),
        (
            "uni(new,act), source",
            acts().prop_map(|a| LinkType::Uni(ShowType::New, a)).boxed(),
            AnchorType::Source,
            false,
            false,
        ),
        (
            "uni(new,act), label",
            acts().prop_map(|a| LinkType::Uni(ShowType::New, a)).boxed(),
            AnchorType::Label,
            false,
            false,
        ),
        (
            "uni(embed,user), source, embedlinkok",
            Just(LinkType::Uni(ShowType::Embed, ActuateType::User)).boxed(),
            AnchorType::Source,
            true,
            false,
        ),
        (
            "uni(embed,user), label, embedlinkok",
            Just(LinkType::Uni(ShowType::Embed, ActuateType::User)).boxed(),
            AnchorType::Label,
            true,
            false,
        ),
        (
            "uni(embed,auto), source, embedlinkok, card(target)=1",
            Just(LinkType::INCLUDE).boxed(),
            AnchorType::Source,
            true,
            true,
        ),
        (
            "uni(embed,auto), label, embedlinkok, card(target)=1",
            Just(LinkType::INCLUDE).boxed(),
            AnchorType::Label,
            true,
            true,
        ),
        (
            "bi, label",
            Just(LinkType::Bi).boxed(),
            AnchorType::Label,
            false,
            false,
        ),
    ];
    for (guard, lt, at, slot, single) in rules {
        laws.check(
            "hyperdoc",
            &format!("addlink(l, mkhd(d,A,L,att,a)) = mkhd(d,A,insert(l,L),att,a) if {guard}"),
            addlink_case(lt, at, slot, single),
            |(h, l)| {
                let (d, a, links, att, addr) = parts_of(&h);
                let expected = Hmd::new(d, a, with_link(&links, &l), att, addr);
                prop_assert_eq!(h.add_link(l), Ok(expected));
                Ok(())
            },
        );
    }

    laws.check(
        "hyperdoc",
        "dellink(l, mkhd(d,A,L,att,a)) = mkhd(d,A,remove(l,L),att,a)",
        (hmd(), st::link()).prop_flat_map(|(h, extra)| {
            let mut pool: Vec<Link> = h.links().iter().cloned().collect();
            pool.push(extra);
            (Just(h), prop::sample::select(pool))
        }),
        |(h, l)| {
            let (d, a, links, att, addr) = parts_of(&h);
            let kept: FiniteSet<Link> = links.iter().filter(|x| **x != l).cloned().collect();
            prop_assert_eq!(h.del_link(&l), Hmd::new(d, a, kept, att, addr));
            Ok(())
        },
    );
    laws.check(
        "hyperdoc",
        "addattribute(att', mkhd(d,A,L,att,a)) = mkhd(d,A,L,concat(att',att),a)",
        (hmd(), st::attrs()),
        |(h, extra)| {
            let (d, a, l, att, addr) = parts_of(&h);
            prop_assert_eq!(
                h.add_attrs(&extra),
                Hmd::new(d, a, l, concat(&extra, &att), addr)
            );
            Ok(())
        },
    );
    laws.check(
        "hyperdoc",
        "delattribute(att', mkhd(d,A,L,att,a)) = mkhd(d,A,L,remove(att',att),a)",
        (hmd(), st::attrs()),
        |(h, removed)| {
            let (d, a, l, att, addr) = parts_of(&h);
            prop_assert_eq!(
                h.del_attrs(&removed),
                Hmd::new(d, a, l, bag_minus(&removed, &att), addr)
            );
            Ok(())
        },
    );
    laws.check(
        "hyperdoc",
        "chaddr(a', mkhd(d,A,L,att,a)) = mkhd(d,A,L,att,a')",
        (hmd(), st::address()),
        |(h, a2)| {
            let (d, a, l, att, _) = parts_of(&h);
            prop_assert_eq!(h.with_address(a2.clone()), Hmd::new(d, a, l, att, a2));
            Ok(())
        },
    );
}

fn node(s: PageStruct, ps: Vec<Page>, att: dexterkit_core::AttrSet) -> Page {
    Page::mkld(s, ps, att)
}

fn node_parts() -> impl Strategy<Value = (PageStruct, Vec<Page>, dexterkit_core::AttrSet)> {
    (st::page_struct(), pages(), st::attrs())
}

fn empty_locations(p: &Page) -> Vec<Location> {
    all_locations(p)
        .into_iter()
        .filter(|o| p.locate(o) == Ok(&Page::Empty))
        .collect()
}

fn prefixed(n: usize, o: &Location) -> Location {
    Location::new(
        std::iter::once(n)
            .chain(o.steps().iter().copied())
            .collect(),
    )
}

pub fn page(laws: &mut Laws) {
    laws.check("page", "atomic(mtpage) = true", Just(Page::Empty), |p| {
        prop_assert!(p.is_atomic());
        Ok(())
    });
    laws.check(
        "page",
        "atomic(imp_mo(h)) = true",
        st::media_object(),
        |mo| {
            prop_assert!(Page::media(mo).is_atomic());
            Ok(())
        },
    );
    laws.check(
        "page",
        "atomic(imp_symbol(symb)) = true",
        any::<String>(),
        |s| {
            prop_assert!(Page::symbol(s).is_atomic());
            Ok(())
        },
    );
    laws.check(
        "page",
        "atomic(mkld(s,P,att)) = false",
        node_parts(),
        |(s, ps, att)| {
            prop_assert!(!node(s, ps, att).is_atomic());
            Ok(())
        },
    );

    laws.check("page", "hasnth(1, []) = false", Just(()), |()| {
        prop_assert_eq!(has_nth(1, &[]), Ok(false));
        Ok(())
    });
    laws.check(
        "page",
        "hasnth(1, p:P) = true",
        (any_page(), pages()),
        |(p, ps)| {
            let list: Vec<Page> = std::iter::once(p).chain(ps).collect();
            prop_assert_eq!(has_nth(1, &list), Ok(true));
            Ok(())
        },
    );
    laws.check(
        "page",
        "hasnth(n+2, p:P) = hasnth(n+1, P)",
        (0..8usize, any_page(), pages()),
        |(n, p, ps)| {
            let list: Vec<Page> = std::iter::once(p).chain(ps.clone()).collect();
            prop_assert_eq!(has_nth(n + 2, &list), has_nth(n + 1, &ps));
            Ok(())
        },
    );

    laws.check("page", "haslocation([], p) = true", any_page(), |p| {
        prop_assert!(p.has_location(&Location::root()));
        Ok(())
    });
    laws.check(
        "page",
        "haslocation((n+1):o, p) = false if atomic(p)",
        (st::atomic_page(), 0..6usize, loc()),
        |(p, n, o)| {
            prop_assert!(!p.has_location(&prefixed(n + 1, &o)));
            Ok(())
        },
    );
    laws.check(
        "page",
        "haslocation((n+1):o, mkld(s,P,att)) = false if hasnth(n+1,P) = false",
        (node_parts(), 0..8usize, loc()).prop_filter("no such child", |((_, ps, _), n, _)| {
            has_nth(n + 1, ps) == Ok(false)
        }),
        |((s, ps, att), n, o)| {
            prop_assert!(!node(s, ps, att).has_location(&prefixed(n + 1, &o)));
            Ok(())
        },
    );
    laws.check(
        "page",
        "haslocation((n+1):o, mkld(s,P,att)) = haslocation(o, pnth(n+1,P)) if hasnth(n+1,P)",
        (node_parts(), 0..4usize, loc()).prop_filter("child exists", |((_, ps, _), n, _)| {
            has_nth(n + 1, ps) == Ok(true)
        }),
        |((s, ps, att), n, o)| {
            let child = pnth(n + 1, &ps).unwrap().clone();
            prop_assert_eq!(
                node(s, ps, att).has_location(&prefixed(n + 1, &o)),
                child.has_location(&o)
            );
            Ok(())
        },
    );

    laws.check(
        "page",
        "includelinkok(o, p) = false if haslocation(o,p) = false",
        (any_page(), st::location_1based(4, 4))
            .prop_filter("absent location", |(p, o)| !p.has_location(o)),
        |(p, o)| {
            prop_assert!(!p.include_link_ok(&o));
            Ok(())
        },
    );
    laws.check(
        "page",
        "includelinkok(o, p) = true if haslocation(o,p) and locate(o,p) = mtpage",
        any_page()
            .prop_filter("has an empty page", |p| !empty_locations(p).is_empty())
            .prop_flat_map(|p| {
                let locs = empty_locations(&p);
                (Just(p), prop::sample::select(locs))
            }),
        |(p, o)| {
            prop_assert!(p.include_link_ok(&o));
            Ok(())
        },
    );

    laws.check(
        "page",
        "struct(mtpage) = mktree(emptypage, [])",
        Just(Page::Empty),
        |p| {
            prop_assert_eq!(
                p.struct_tree(),
                RoseTree::mktree(PageStruct::EmptyPage, vec![])
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "struct(imp_mo(h)) = mktree(basic, [])",
        st::media_object(),
        |mo| {
            prop_assert_eq!(
                Page::media(mo).struct_tree(),
                RoseTree::mktree(PageStruct::Basic, vec![])
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "struct(imp_symbol(symb)) = mktree(symb, [])",
        any::<String>(),
        |s| {
            prop_assert_eq!(
                Page::symbol(s).struct_tree(),
                RoseTree::mktree(PageStruct::Symb, vec![])
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "struct(mkld(s,P,att)) = mktree(s, listmap(struct, P))",
        node_parts(),
        |(s, ps, att)| {
            let kids = ps.iter().map(Page::struct_tree).collect();
            prop_assert_eq!(node(s, ps, att).struct_tree(), RoseTree::mktree(s, kids));
            Ok(())
        },
    );
    laws.check(
        "page",
        "pages(mkld(s,P,att)) = P",
        node_parts(),
        |(s, ps, att)| {
            prop_assert_eq!(
                node(s, ps.clone(), att).pages().map(<[Page]>::to_vec),
                Ok(ps)
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "att(mkld(s,P,att)) = att",
        node_parts(),
        |(s, ps, att)| {
            prop_assert_eq!(node(s, ps, att.clone()).attrs().cloned(), Ok(att));
            Ok(())
        },
    );
    laws.check(
        "page",
        "pnth(n+1, P) = nth(n, P)",
        (0..6usize, pages()),
        |(n, ps)| {
            prop_assert_eq!(pnth(n + 1, &ps).ok(), ps.get(n));
            Ok(())
        },
    );
    laws.check("page", "locate([], p) = p", any_page(), |p| {
        prop_assert_eq!(p.locate(&Location::root()), Ok(&p));
        Ok(())
    });
    laws.check(
        "page",
        "locate((n+1):o, mkld(s,P,att)) = locate(o, pnth(n+1,P))",
        (node_parts(), 0..5usize, loc()),
        |((s, ps, att), n, o)| {
            let rhs = pnth(n + 1, &ps).and_then(|c| c.locate(&o)).ok().cloned();
            prop_assert_eq!(
                node(s, ps, att).locate(&prefixed(n + 1, &o)).ok().cloned(),
                rhs
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "dimension(p) = [] if atomic(p)",
        st::atomic_page(),
        |p| {
            prop_assert_eq!(p.dimension(), Vec::<usize>::new());
            Ok(())
        },
    );
    laws.check(
        "page",
        "dimension(mkld(s,P,att)) = length(P) : dimensionlist(P)",
        node_parts(),
        |(s, ps, att)| {
            let expected: Vec<usize> = std::iter::once(ps.len())
                .chain(dimension_list(&ps))
                .collect();
            prop_assert_eq!(node(s, ps, att).dimension(), expected);
            Ok(())
        },
    );
    laws.check("page", "dimensionlist([]) = []", Just(()), |()| {
        prop_assert_eq!(dimension_list(&[]), Vec::<usize>::new());
        Ok(())
    });
    laws.check(
        "page",
        "dimensionlist(p:P) = listpairmapdefault(0, 0, max, dimension(p), dimensionlist(P))",
        (any_page(), pages()),
        |(p, ps)| {
            let expected = pointwise_max(&p.dimension(), &dimension_list(&ps));
            let list: Vec<Page> = std::iter::once(p).chain(ps).collect();
            prop_assert_eq!(dimension_list(&list), expected);
            Ok(())
        },
    );
    laws.check(
        "page",
        "changestruct(s', mkld(s,P,att)) = mkld(s',P,att)",
        (node_parts(), st::page_struct()),
        |((s, ps, att), s2)| {
            prop_assert_eq!(
                node(s, ps.clone(), att.clone()).change_struct(s2),
                Ok(node(s2, ps, att))
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "mklist(n) = mkld(list, rep(n, mtpage), [])",
        0..12usize,
        |n| {
            prop_assert_eq!(
                Page::list(n),
                node(PageStruct::List, vec![Page::Empty; n], Default::default())
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "mktable(m,n) = mkld(table, rep(m, mktableline(n)), [])",
        (0..8usize, 0..8usize),
        |(m, n)| {
            prop_assert_eq!(
                Page::table(m, n),
                node(
                    PageStruct::Table,
                    vec![Page::table_line(n); m],
                    Default::default()
                )
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "mktableline(n) = mkld(tableline, rep(n, mtpage), [])",
        0..12usize,
        |n| {
            prop_assert_eq!(
                Page::table_line(n),
                node(
                    PageStruct::TableLine,
                    vec![Page::Empty; n],
                    Default::default()
                )
            );
            Ok(())
        },
    );

    laws.check(
        "page",
        "insertatlde(p', [], p) = p'",
        (any_page(), any_page()),
        |(part, p)| {
            prop_assert_eq!(p.insert_at_extending(&Location::root(), &part), Ok(part));
            Ok(())
        },
    );
    laws.check(
        "page",
        "insertatlde(p', n:o, mkld(table,P,att)) = mkld(table, insertatldee(p',n,o,P,mktableline(0)), att)",
        (any_page(), 0..6usize, loc(), pages(), st::attrs()),
        |(part, n, o, ps, att)| {
            let lhs = node(PageStruct::Table, ps.clone(), att.clone()).insert_at_extending(&prefixed(n, &o), &part);
            let rhs = insert_into_children(&part, n, &o, &ps, &Page::table_line(0))
                .map(|cs| node(PageStruct::Table, cs, att));
            prop_assert_eq!(lhs.ok(), rhs.ok());
            Ok(())
        },
    );
    laws.check(
        "page",
        "insertatlde(p', n:o, mkld(s,P,att)) = mkld(s, insertatldee(p',n,o,P,mtpage), att) if s != table",
        (any_page(), 0..6usize, loc(), node_parts()).prop_filter("not a table", |(_, _, _, (s, _, _))| *s != PageStruct::Table),
        |(part, n, o, (s, ps, att))| {
            let lhs = node(s, ps.clone(), att.clone()).insert_at_extending(&prefixed(n, &o), &part);
            let rhs = insert_into_children(&part, n, &o, &ps, &Page::Empty).map(|cs| node(s, cs, att));
            prop_assert_eq!(lhs.ok(), rhs.ok());
            Ok(())
        },
    );
    laws.check(
        "page",
        "insertatldee(p', 1, o, p:P, p'') = insertatlde(p', o, p) : P",
        (any_page(), loc(), any_page(), pages(), st::atomic_page()),
        |(part, o, p, ps, filler)| {
            let list: Vec<Page> = std::iter::once(p.clone()).chain(ps.clone()).collect();
            let rhs = p
                .insert_at_extending(&o, &part)
                .map(|q| std::iter::once(q).chain(ps).collect::<Vec<_>>());
            prop_assert_eq!(
                insert_into_children(&part, 1, &o, &list, &filler).ok(),
                rhs.ok()
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "insertatldee(p', n+2, o, p:P, p'') = p : insertatldee(p', n+1, o, P, p'')",
        (
            any_page(),
            0..6usize,
            loc(),
            any_page(),
            pages(),
            any_page(),
        ),
        |(part, n, o, p, ps, filler)| {
            let list: Vec<Page> = std::iter::once(p.clone()).chain(ps.clone()).collect();
            let rhs = insert_into_children(&part, n + 1, &o, &ps, &filler)
                .map(|rest| std::iter::once(p).chain(rest).collect::<Vec<_>>());
            prop_assert_eq!(
                insert_into_children(&part, n + 2, &o, &list, &filler).ok(),
                rhs.ok()
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "insertatldee(p', 1, o, [], p'') = [insertatlde(p', o, p'')]",
        (any_page(), loc(), any_page()),
        |(part, o, filler)| {
            let rhs = filler.insert_at_extending(&o, &part).map(|q| vec![q]);
            prop_assert_eq!(
                insert_into_children(&part, 1, &o, &[], &filler).ok(),
                rhs.ok()
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "insertatldee(p', n+2, o, [], p'') = p'' : insertatldee(p', n+1, o, [], p'')",
        (any_page(), 0..6usize, loc(), any_page()),
        |(part, n, o, filler)| {
            let rhs = insert_into_children(&part, n + 1, &o, &[], &filler).map(|rest| {
                std::iter::once(filler.clone())
                    .chain(rest)
                    .collect::<Vec<_>>()
            });
            prop_assert_eq!(
                insert_into_children(&part, n + 2, &o, &[], &filler).ok(),
                rhs.ok()
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "insertatld(p', o, p) = insertatlde(p', o, p) if haslocation(o,p)",
        (any_page(), any_page()).prop_flat_map(|(part, p)| {
            let locs = all_locations(&p);
            (Just(part), prop::sample::select(locs), Just(p))
        }),
        |(part, o, p)| {
            prop_assert_eq!(p.insert_at(&o, &part), p.insert_at_extending(&o, &part));
            prop_assert!(p.insert_at(&o, &part).is_ok());
            Ok(())
        },
    );
    laws.check(
        "page",
        "addattribute(att', mkld(s,P,att)) = mkld(s,P,concat(att',att))",
        (node_parts(), st::attrs()),
        |((s, ps, att), extra)| {
            prop_assert_eq!(
                node(s, ps.clone(), att.clone()).add_attrs(&extra),
                Ok(node(s, ps, concat(&extra, &att)))
            );
            Ok(())
        },
    );
    laws.check(
        "page",
        "delattribute(att', mkld(s,P,att)) = mkld(s,P,remove(att',att))",
        (node_parts(), st::attrs()),
        |((s, ps, att), removed)| {
            prop_assert_eq!(
                node(s, ps.clone(), att.clone()).del_attrs(&removed),
                Ok(node(s, ps, bag_minus(&removed, &att)))
            );
            Ok(())
        },
    );
}

/// Inserted document, location, host document, result address. Anchor
/// names of the two documents are disjoint.
pub fn insertion_case(fresh_address: bool) -> impl Strategy<Value = (Hmd, Location, Hmd, DocAddr)> {
    let inserted = st::hmd_with_names(2, 3, vec!["n1", "n2", "n3"]);
    let host = st::hmd_with_names(DEPTH, FANOUT, vec!["n4", "n5"]);
    let result = if fresh_address {
        Just(DocAddr::from("merged")).boxed()
    } else {
        st::address().boxed()
    };
    (inserted, host, result).prop_flat_map(|(h, host, a)| {
        let existing = prop::sample::select(all_locations(host.basis()));
        let o = prop_oneof![3 => existing, 1 => st::location_1based(3, 5)];
        (Just(h), o, Just(host), Just(a))
    })
}

/// No anchor of `doc` lies strictly below `o`.
pub fn region_free(o: &Location, doc: &Hmd) -> bool {
    doc.anchors().iter().all(|(_, c)| {
        let steps = c.location().steps();
        !(steps.len() > o.steps().len() && steps.starts_with(o.steps()))
    })
}

/// The post-state of a composite insertion, computed from its parts.
pub fn expected_insertion(h: &Hmd, o: &Location, host: &Hmd, a3: &DocAddr) -> Option<Hmd> {
    let basis = host.basis().insert_at_extending(o, h.basis()).ok()?;
    let mut anchors = BTreeMap::new();
    for (n, c) in host.anchors().iter() {
        anchors.insert(n.clone(), c.clone());
    }
    for (n, c) in h.anchors().iter() {
        let sunk = Location::new(
            o.steps()
                .iter()
                .chain(c.location().steps())
                .copied()
                .collect(),
        );
        anchors.insert(
            n.clone(),
            Anchor::new(sunk, c.anchor_type(), c.attrs().clone()),
        );
    }
    let target = a3.integrate();
    let links: FiniteSet<Link> = h
        .links()
        .iter()
        .chain(host.links().iter())
        .map(|l| rewire_link(l, &h.address().integrate(), &target))
        .map(|l| rewire_link(&l, &host.address().integrate(), &target))
        .collect();
    Some(Hmd::new(
        basis,
        finite(anchors),
        links,
        concat(h.attrs(), host.attrs()),
        a3.clone(),
    ))
}

pub fn hmd_level(laws: &mut Laws) {
    laws.check(
        "hmd",
        "insertathmde(mkhd(p,A,L,att,a), o, mkhd(p',A',L',att',a'), a'') = mkhd(insertatlde(p,o,p'), ...)",
        insertion_case(false).prop_filter("guard", |(_, o, host, _)| region_free(o, host)),
        |(h, o, host, a3)| {
            let expected = expected_insertion(&h, &o, &host, &a3);
            prop_assert_eq!(h.insert_into_extending(&o, &host, a3).ok(), expected);
            Ok(())
        },
    );
    laws.check(
        "hmd",
        "sinklocation(o, mkanchor(o',t,att)) = mkanchor(append(o,o'),t,att)",
        (loc(), st::anchor(loc())),
        |(o, c)| {
            let joined: Vec<usize> = o
                .steps()
                .iter()
                .chain(c.location().steps())
                .copied()
                .collect();
            prop_assert_eq!(
                sink_location(&o, &c),
                Anchor::new(Location::new(joined), c.anchor_type(), c.attrs().clone())
            );
            Ok(())
        },
    );
    laws.check(
        "hmd",
        "combinelink(a,a',a'',L,L') = mapset(replaceaddrlink(a',a''), mapset(replaceaddrlink(a,a''), union(L,L')))",
        (st::address(), st::address(), st::address(), st::links(3), st::links(3)),
        |(a, a2, a3, l, l2)| {
            let expected: FiniteSet<Link> = l
                .iter()
                .chain(l2.iter())
                .map(|x| rewire_link(x, &a.integrate(), &a3.integrate()))
                .map(|x| rewire_link(&x, &a2.integrate(), &a3.integrate()))
                .collect();
            prop_assert_eq!(combine_links(&a, &a2, &a3, &l, &l2), expected);
            Ok(())
        },
    );
    laws.check(
        "hmd",
        "insertathmd(h, o, h', a'') = insertathmde(h, o, h', a'') if haslocation(o, ld(h'))",
        insertion_case(false).prop_filter("existing location", |(_, o, host, _)| {
            host.basis().has_location(o)
        }),
        |(h, o, host, a3)| {
            prop_assert_eq!(
                h.insert_into(&o, &host, a3.clone()),
                h.insert_into_extending(&o, &host, a3)
            );
            Ok(())
        },
    );
}
