use thiserror::Error;

use super::TreeNode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SexprError {
    #[error("unexpected end of input")]
    UnexpectedEnd,
    #[error("unmatched ')' at offset {0}")]
    UnmatchedClose(usize),
    #[error("missing label after '(' at offset {0}")]
    EmptyLabel(usize),
    #[error("node '{label}' at offset {offset} has {found} children, expected 0 or 2")]
    Arity {
        label: String,
        offset: usize,
        found: usize,
    },
    #[error("trailing input at offset {0}")]
    TrailingInput(usize),
}

impl SexprError {
    /// Byte offset into the source text, when the error has one.
    pub fn offset(&self) -> Option<usize> {
        match self {
            SexprError::UnexpectedEnd => None,
            SexprError::UnmatchedClose(o)
            | SexprError::EmptyLabel(o)
            | SexprError::TrailingInput(o)
            | SexprError::Arity { offset: o, .. } => Some(*o),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token<'a> {
    Open,
    Close,
    Atom(&'a str),
}

struct Lexer<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<(usize, Token<'a>)> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let tok = match rest.chars().next()? {
            '(' => Token::Open,
            ')' => Token::Close,
            _ => {
                let end = rest
                    .find(|c: char| c.is_whitespace() || c == '(' || c == ')')
                    .unwrap_or(rest.len());
                Token::Atom(&rest[..end])
            }
        };
        Some((self.pos, tok))
    }

    fn next(&mut self) -> Option<(usize, Token<'a>)> {
        let (at, tok) = self.peek()?;
        self.pos += match tok {
            Token::Open | Token::Close => 1,
            Token::Atom(a) => a.len(),
        };
        Some((at, tok))
    }
}

/// Parses `label` or `(label left right)` into a tree. Labels are runs of
/// characters other than whitespace and parentheses.
pub fn parse_tree_sexpr(text: &str) -> Result<TreeNode, SexprError> {
    let mut lexer = Lexer { src: text, pos: 0 };
    let tree = parse_node(&mut lexer)?;
    match lexer.peek() {
        None => Ok(tree),
        Some((at, _)) => Err(SexprError::TrailingInput(at)),
    }
}

fn parse_node(lexer: &mut Lexer<'_>) -> Result<TreeNode, SexprError> {
    match lexer.next() {
        None => Err(SexprError::UnexpectedEnd),
        Some((_, Token::Atom(label))) => Ok(TreeNode::leaf(label)),
        Some((at, Token::Close)) => Err(SexprError::UnmatchedClose(at)),
        Some((open_at, Token::Open)) => {
            let label = match lexer.next() {
                Some((_, Token::Atom(label))) => label,
                Some(_) => return Err(SexprError::EmptyLabel(open_at)),
                None => return Err(SexprError::UnexpectedEnd),
            };
            let mut children = Vec::with_capacity(2);
            loop {
                match lexer.peek() {
                    None => return Err(SexprError::UnexpectedEnd),
                    Some((_, Token::Close)) => {
                        lexer.next();
                        break;
                    }
                    Some(_) => children.push(parse_node(lexer)?),
                }
            }
            if children.len() != 2 {
                return Err(SexprError::Arity {
                    label: label.to_owned(),
                    offset: open_at,
                    found: children.len(),
                });
            }
            let right = children.pop().unwrap();
            let left = children.pop().unwrap();
            Ok(TreeNode::branch(label, left, right))
        }
    }
}
