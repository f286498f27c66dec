//! Level-1 hypermedia documents: pages with anchors, links and an address,
//! plus composite insertion of one document into another.

use crate::anchor::Anchor;
use crate::containers::{is_proper_prefix, FiniteSet};
use crate::error::{Result, Unspecified};
use crate::hyperdoc::{Address, HyperDoc};
use crate::link::{string_newtype, Link, Uri};
use crate::page::{Location, Page};

string_newtype!(
    /// Local storage address of a document.
    DocAddr
);

impl Address for DocAddr {
    /// Identity embedding of the address string.
    fn integrate(&self) -> Uri {
        Uri::new(self.as_str())
    }
}

pub type Hmd = HyperDoc<Page, DocAddr>;

/// Which document's anchors may not lie strictly inside the replaced region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionCheck {
    /// The host document receiving the insertion.
    Host,
    /// The document being inserted.
    Inserted,
}

/// Host anchors below the insertion point would end up inside content that
/// no longer exists, so the host is the document checked.
pub const REPLACED_REGION_CHECK: RegionCheck = RegionCheck::Host;

/// Moves the anchor below `o` by prefixing its location.
pub fn sink_location(o: &Location, c: &Anchor<Location>) -> Anchor<Location> {
    c.with_location(o.append(c.location()))
}

/// Rewrites every reference to `a` or `a2` in `links ∪ links2` to `target`.
pub fn combine_links(
    a: &DocAddr,
    a2: &DocAddr,
    target: &DocAddr,
    links: &FiniteSet<Link>,
    links2: &FiniteSet<Link>,
) -> FiniteSet<Link> {
    let new_uri = target.integrate();
    let first = a.integrate();
    let second = a2.integrate();
    links
        .union(links2)
        .map(|l| l.replace_uri(&first, &new_uri))
        .map(|l| l.replace_uri(&second, &new_uri))
}

fn region_blocked(o: &Location, doc: &Hmd) -> bool {
    doc.anchors()
        .ran()
        .map(|c| c.location().clone())
        .exists(|loc| is_proper_prefix(o.steps(), loc.steps()))
}

impl Hmd {
    /// Replaces the part of `host` at `o` with `self`, growing the host page
    /// where needed, and stores the result under `address`.
    ///
    /// Anchors of `self` sink below `o`; links of both documents are rewired
    /// to the new address.
    pub fn insert_into_extending(&self, o: &Location, host: &Hmd, address: DocAddr) -> Result<Hmd> {
        let clash = self.anchors().dom().intersect(&host.anchors().dom());
        if !clash.is_empty() {
            let names: Vec<&str> = clash.iter().map(|n| n.as_str()).collect();
            return Err(Unspecified::new(
                "insertathmde",
                format!("anchor names are not disjoint: {}", names.join(", ")),
            ));
        }
        let checked = match REPLACED_REGION_CHECK {
            RegionCheck::Host => host,
            RegionCheck::Inserted => self,
        };
        if region_blocked(o, checked) {
            return Err(Unspecified::new(
                "insertathmde",
                format!("an anchor lies inside the replaced region below {o}"),
            ));
        }
        let basis = host.basis().insert_at_extending(o, self.basis())?;
        let anchors = self
            .anchors()
            .concat(|c| sink_location(o, c))
            .compose(host.anchors());
        let links = combine_links(
            self.address(),
            host.address(),
            &address,
            self.links(),
            host.links(),
        );
        let attrs = self.attrs().concat(host.attrs());
        Ok(Hmd::new(basis, anchors, links, attrs, address))
    }

    /// As [`insert_into_extending`](Self::insert_into_extending), but `o`
    /// must already exist in the host page.
    pub fn insert_into(&self, o: &Location, host: &Hmd, address: DocAddr) -> Result<Hmd> {
        if !host.basis().has_location(o) {
            return Err(Unspecified::new(
                "insertathmd",
                format!("location {o} does not exist in the host page"),
            ));
        }
        self.insert_into_extending(o, host, address)
    }
}
