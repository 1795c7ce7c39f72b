use std::fmt;

use thiserror::Error;

use super::{Layout, TreeNode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanvasError {
    #[error("cell ({row}, {col}) already holds {existing:?}, refusing {glyph:?}")]
    Collision {
        row: usize,
        col: usize,
        existing: char,
        glyph: char,
    },
    #[error("cell ({row}, {col}) is outside the {height}x{width} canvas")]
    OutOfBounds {
        row: usize,
        col: usize,
        height: usize,
        width: usize,
    },
    #[error("layout has {layout} nodes but the tree has {tree}")]
    TreeMismatch { layout: usize, tree: usize },
}

/// Fixed-size grid of ASCII cells, blank-filled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TextCanvas {
    width: usize,
    cells: Vec<Vec<u8>>,
}

impl TextCanvas {
    pub fn new(height: usize, width: usize) -> Self {
        TextCanvas {
            width,
            cells: vec![vec![b' '; width]; height],
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.cells.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<char> {
        self.cells.get(row)?.get(col).map(|&b| char::from(b))
    }

    /// Writes one glyph. Rewriting a cell with the same glyph is allowed;
    /// a different glyph is a collision.
    pub fn put(&mut self, row: usize, col: usize, glyph: u8) -> Result<(), CanvasError> {
        let (height, width) = (self.height(), self.width);
        let cell = self.cells.get_mut(row).and_then(|r| r.get_mut(col)).ok_or(
            CanvasError::OutOfBounds {
                row,
                col,
                height,
                width,
            },
        )?;
        if *cell != b' ' && *cell != glyph {
            return Err(CanvasError::Collision {
                row,
                col,
                existing: char::from(*cell),
                glyph: char::from(glyph),
            });
        }
        *cell = glyph;
        Ok(())
    }

    pub fn put_str(&mut self, row: usize, col: usize, text: &str) -> Result<(), CanvasError> {
        for (i, b) in text.bytes().enumerate() {
            self.put(row, col + i, b)?;
        }
        Ok(())
    }

    /// Text of `len` cells starting at `(row, col)`.
    pub fn read(&self, row: usize, col: usize, len: usize) -> Option<String> {
        let bytes = self.cells.get(row)?.get(col..col + len)?;
        Some(String::from_utf8_lossy(bytes).into_owned())
    }

    /// Rows with trailing blanks removed.
    pub fn lines(&self) -> Vec<String> {
        self.cells
            .iter()
            .map(|r| String::from_utf8_lossy(r).trim_end().to_owned())
            .collect()
    }

    fn keep_rows(&mut self, keep: impl Fn(usize) -> bool) {
        let mut row = 0;
        self.cells.retain(|_| {
            row += 1;
            keep(row - 1)
        });
    }
}

impl fmt::Display for TextCanvas {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

/// Draws labels, and optionally bars, onto a canvas as wide as the layout.
/// Without bars the bar rows are dropped, leaving one row per level.
pub fn render(
    layout: &Layout,
    root: &TreeNode,
    with_bars: bool,
) -> Result<TextCanvas, CanvasError> {
    let nodes = root.preorder();
    if nodes.len() != layout.nodes().len() {
        return Err(CanvasError::TreeMismatch {
            layout: layout.nodes().len(),
            tree: nodes.len(),
        });
    }
    let mut canvas = TextCanvas::new(layout.height(), layout.width());
    for (node, place) in nodes.iter().zip(layout.nodes()) {
        canvas.put_str(place.row, place.label_start, node.label())?;
        if let (true, Some(bar)) = (with_bars, place.bar) {
            canvas.put(bar.row, bar.left_col, b'|')?;
            for col in bar.left_col + 1..bar.right_col {
                canvas.put(bar.row, col, b'-')?;
            }
            canvas.put(bar.row, bar.right_col, b'|')?;
        }
    }
    if !with_bars {
        canvas.keep_rows(|row| row % 2 == 0);
    }
    Ok(canvas)
}
