//! Terminal drawing of strict binary expression trees.
//!
//! Every node sits on an even canvas row (twice its depth); the odd row
//! below an internal node carries the `|---|` bar joining its children.

mod canvas;
mod layout;
mod sexpr;

pub use canvas::{render, CanvasError, TextCanvas};
pub use layout::{
    combine_baseline, combine_compact, compute_layout, compute_layout_baseline,
    compute_layout_compact, subtree_width, Bar, Layout, LayoutError, LayoutKind, NodeId,
    NodeLayout, WidthTriple,
};
pub use sexpr::{parse_tree_sexpr, SexprError};

/// A labeled node that is either a leaf or has exactly two children.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeNode {
    label: String,
    children: Option<Box<(TreeNode, TreeNode)>>,
}

impl TreeNode {
    pub fn leaf(label: impl Into<String>) -> Self {
        TreeNode {
            label: label.into(),
            children: None,
        }
    }

    pub fn branch(label: impl Into<String>, left: TreeNode, right: TreeNode) -> Self {
        TreeNode {
            label: label.into(),
            children: Some(Box::new((left, right))),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Label width in columns (one per byte; labels are ASCII).
    pub fn label_size(&self) -> usize {
        self.label.len()
    }

    pub fn children(&self) -> Option<(&TreeNode, &TreeNode)> {
        self.children.as_deref().map(|(l, r)| (l, r))
    }

    pub fn left(&self) -> Option<&TreeNode> {
        self.children().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&TreeNode> {
        self.children().map(|(_, r)| r)
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_none()
    }

    /// Number of nodes in the tree.
    pub fn node_count(&self) -> usize {
        1 + self
            .children()
            .map_or(0, |(l, r)| l.node_count() + r.node_count())
    }

    /// Depth of the deepest node; a lone leaf has depth 0.
    pub fn depth(&self) -> usize {
        self.children()
            .map_or(0, |(l, r)| 1 + l.depth().max(r.depth()))
    }

    /// Nodes in pre-order (node, left subtree, right subtree), the same order
    /// as [`NodeId`]s in a [`Layout`].
    pub fn preorder(&self) -> Vec<&TreeNode> {
        let mut out = Vec::with_capacity(self.node_count());
        let mut stack = vec![self];
        while let Some(node) = stack.pop() {
            out.push(node);
            if let Some((l, r)) = node.children() {
                stack.push(r);
                stack.push(l);
            }
        }
        out
    }
}

impl std::fmt::Display for TreeNode {
    /// Writes the tree back as an s-expression.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.children() {
            None => f.write_str(&self.label),
            Some((l, r)) => write!(f, "({} {} {})", self.label, l, r),
        }
    }
}
