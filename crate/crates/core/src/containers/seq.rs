use crate::error::{Result, Unspecified};

/// Finite ordered sequence. Plain `Vec` values; the functions below are the
/// list operations the axioms refer to.
pub type Seq<E> = Vec<E>;

/// `n` copies of `x`.
pub fn seq_rep<E: Clone>(n: usize, x: E) -> Seq<E> {
    vec![x; n]
}

/// Zero-based element access.
pub fn seq_nth<E>(n: usize, s: &[E]) -> Result<&E> {
    s.get(n).ok_or_else(|| {
        Unspecified::new(
            "nth",
            format!("index {n} out of range for length {}", s.len()),
        )
    })
}

pub fn seq_length<E>(s: &[E]) -> usize {
    s.len()
}

pub fn seq_listmap<E, F>(f: impl Fn(&E) -> F, s: &[E]) -> Seq<F> {
    s.iter().map(f).collect()
}

pub fn seq_append<E: Clone>(s: &[E], t: &[E]) -> Seq<E> {
    s.iter().chain(t).cloned().collect()
}

pub fn nat_max(m: usize, n: usize) -> usize {
    m.max(n)
}

/// `p` is a prefix of `q` and differs from it.
pub fn is_proper_prefix<E: PartialEq>(p: &[E], q: &[E]) -> bool {
    p.len() < q.len() && q.starts_with(p)
}

/// Zips `s1` and `s2` with `f`, padding the shorter list with its default.
pub fn listpair_map_default<E: Clone>(
    d1: E,
    d2: E,
    f: impl Fn(&E, &E) -> E,
    s1: &[E],
    s2: &[E],
) -> Seq<E> {
    let len = s1.len().max(s2.len());
    (0..len)
        .map(|i| f(s1.get(i).unwrap_or(&d1), s2.get(i).unwrap_or(&d2)))
        .collect()
}
