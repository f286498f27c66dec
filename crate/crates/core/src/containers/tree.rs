/// A finite rose tree: one label per node and an ordered list of subtrees.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RoseTree<E> {
    pub label: E,
    pub children: Vec<RoseTree<E>>,
}

impl<E> RoseTree<E> {
    pub fn mktree(label: E, children: Vec<RoseTree<E>>) -> Self {
        Self { label, children }
    }

    pub fn leaf(label: E) -> Self {
        Self::mktree(label, Vec::new())
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(RoseTree::size).sum::<usize>()
    }
}
