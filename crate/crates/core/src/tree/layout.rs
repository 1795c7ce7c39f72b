use thiserror::Error;

use super::TreeNode;

/// Column widths of a subtree split into the part left of the node's central
/// region, the central region itself, and the part to its right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct WidthTriple {
    pub left: usize,
    pub mid: usize,
    pub right: usize,
}

impl WidthTriple {
    pub const ZERO: WidthTriple = WidthTriple::new(0, 0, 0);

    pub const fn new(left: usize, mid: usize, right: usize) -> Self {
        WidthTriple { left, mid, right }
    }

    pub const fn leaf(label_size: usize) -> Self {
        WidthTriple::new(0, label_size, 0)
    }

    pub const fn total(&self) -> usize {
        self.left + self.mid + self.right
    }

    /// Column of the center of the central region, relative to the subtree.
    pub const fn center(&self) -> usize {
        self.left + self.mid / 2
    }
}

/// Children side by side with the parent label between them.
pub fn combine_baseline(left: WidthTriple, right: WidthTriple, label_size: usize) -> WidthTriple {
    WidthTriple::new(left.total(), label_size, right.total())
}

/// Children slid together until one blank column separates them; the
/// central region then spans from the left child's center to the right
/// child's center, widened to the parent's label when that is longer.
pub fn combine_compact(left: WidthTriple, right: WidthTriple, label_size: usize) -> WidthTriple {
    let left_half = left.mid / 2;
    let left_rest = left.mid.div_ceil(2);
    let right_half = right.mid / 2;
    let right_rest = right.mid.div_ceil(2);
    WidthTriple::new(
        left.left + left_half,
        (left_rest + left.right + 1 + right.left + right_half).max(label_size),
        right_rest + right.right,
    )
}

/// Subtree width computed directly as a single number.
pub fn subtree_width(root: &TreeNode) -> usize {
    fn wid(node: Option<&TreeNode>) -> usize {
        let Some(node) = node else { return 0 };
        wid(node.left()) + node.label_size() + wid(node.right())
    }
    wid(Some(root))
}

/// Index of a node in pre-order.
pub type NodeId = usize;

/// Connector drawn on the row below an internal node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bar {
    pub row: usize,
    pub left_col: usize,
    pub right_col: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeLayout {
    pub depth: usize,
    pub row: usize,
    /// First column of the subtree.
    pub offset: usize,
    pub label_start: usize,
    pub label_size: usize,
    pub triple: WidthTriple,
    pub children: Option<(NodeId, NodeId)>,
    pub bar: Option<Bar>,
}

impl NodeLayout {
    pub fn width(&self) -> usize {
        self.triple.total()
    }

    /// Absolute column of the center of the central region; the parent's
    /// bar attaches here.
    pub fn anchor(&self) -> usize {
        self.offset + self.triple.center()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LayoutKind {
    #[default]
    Baseline,
    Compact,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayoutError {
    #[error("node {0} does not exist")]
    UnknownNode(NodeId),
    #[error("node {0} is a leaf and has no bar")]
    Leaf(NodeId),
}

/// Row, columns and bar for every node, indexed by pre-order [`NodeId`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layout {
    kind: LayoutKind,
    nodes: Vec<NodeLayout>,
}

impl Layout {
    pub fn kind(&self) -> LayoutKind {
        self.kind
    }

    pub fn nodes(&self) -> &[NodeLayout] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> Option<&NodeLayout> {
        self.nodes.get(id)
    }

    pub fn root(&self) -> &NodeLayout {
        &self.nodes[0]
    }

    /// Width of the whole drawing.
    pub fn width(&self) -> usize {
        self.root().width()
    }

    /// Rows needed with bars: one label row per level and a bar row between levels.
    pub fn height(&self) -> usize {
        let max_depth = self.nodes.iter().map(|n| n.depth).max().unwrap_or(0);
        2 * max_depth + 1
    }

    /// Columns `(b_e, b_d)` of the bar under an internal node.
    pub fn bar_endpoints(&self, id: NodeId) -> Result<(usize, usize), LayoutError> {
        let node = self.node(id).ok_or(LayoutError::UnknownNode(id))?;
        let bar = node.bar.ok_or(LayoutError::Leaf(id))?;
        Ok((bar.left_col, bar.right_col))
    }
}

pub fn compute_layout(root: &TreeNode, kind: LayoutKind) -> Layout {
    match kind {
        LayoutKind::Baseline => compute_layout_baseline(root),
        LayoutKind::Compact => compute_layout_compact(root),
    }
}

/// Each subtree gets `left + label + right` columns with the label between
/// the two child subtrees; nothing is shared between siblings.
pub fn compute_layout_baseline(root: &TreeNode) -> Layout {
    let mut nodes = Vec::with_capacity(root.node_count());
    fill(root, 0, &mut nodes, combine_baseline);
    place(&mut nodes, 0, 0, |nodes, id, of| {
        let n = &nodes[id];
        let label_start = of + n.triple.left;
        let Some((l, r)) = n.children else {
            return (label_start, None);
        };
        let (lt, rt) = (nodes[l].triple, nodes[r].triple);
        let b_e = of + lt.left + lt.mid / 2;
        let b_d = of + lt.total() + n.label_size + rt.left + rt.mid / 2;
        let right_of = of + n.triple.left + n.triple.mid;
        (label_start, Some((of, right_of, b_e, b_d)))
    });
    Layout {
        kind: LayoutKind::Baseline,
        nodes,
    }
}

/// Minimal-width variant: the right child is right-aligned in the parent's
/// span, the bar runs between the two child anchors and the label is
/// centered over the bar (ties lean left).
pub fn compute_layout_compact(root: &TreeNode) -> Layout {
    let mut nodes = Vec::with_capacity(root.node_count());
    fill(root, 0, &mut nodes, combine_compact);
    place(&mut nodes, 0, 0, |nodes, id, of| {
        let n = &nodes[id];
        let t = n.triple;
        let Some((_, r)) = n.children else {
            return (of + t.left, None);
        };
        let b_e = of + t.left;
        let b_d = b_e + t.mid;
        let label_start = b_e + (t.mid + 1 - n.label_size) / 2;
        let right_of = of + t.total() - nodes[r].width();
        (label_start, Some((of, right_of, b_e, b_d)))
    });
    Layout {
        kind: LayoutKind::Compact,
        nodes,
    }
}

// Pre-order walk recording rows; returns the node's triple built bottom-up.
fn fill(
    node: &TreeNode,
    level: usize,
    nodes: &mut Vec<NodeLayout>,
    combine: fn(WidthTriple, WidthTriple, usize) -> WidthTriple,
) -> WidthTriple {
    let id = nodes.len();
    nodes.push(NodeLayout {
        depth: level,
        row: 2 * level,
        offset: 0,
        label_start: 0,
        label_size: node.label_size(),
        triple: WidthTriple::ZERO,
        children: None,
        bar: None,
    });
    let triple = match node.children() {
        None => WidthTriple::leaf(node.label_size()),
        Some((l, r)) => {
            let left_id = nodes.len();
            let lt = fill(l, level + 1, nodes, combine);
            let right_id = nodes.len();
            let rt = fill(r, level + 1, nodes, combine);
            nodes[id].children = Some((left_id, right_id));
            combine(lt, rt, node.label_size())
        }
    };
    nodes[id].triple = triple;
    triple
}

/// `(label_start, Some((left_child_offset, right_child_offset, b_e, b_d)))`
type Placement = (usize, Option<(usize, usize, usize, usize)>);

fn place(
    nodes: &mut [NodeLayout],
    id: NodeId,
    offset: usize,
    rule: impl Fn(&[NodeLayout], NodeId, usize) -> Placement + Copy,
) {
    let (label_start, inner) = rule(nodes, id, offset);
    let node = &mut nodes[id];
    node.offset = offset;
    node.label_start = label_start;
    if let (Some((l, r)), Some((left_of, right_of, b_e, b_d))) = (node.children, inner) {
        node.bar = Some(Bar {
            row: node.row + 1,
            left_col: b_e,
            right_col: b_d,
        });
        place(nodes, l, left_of, rule);
        place(nodes, r, right_of, rule);
    }
}
