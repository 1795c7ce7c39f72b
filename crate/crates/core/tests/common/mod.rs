#![allow(dead_code)]

use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::Rng;
use textalgebra::poly::{Polynomial, Term};
use textalgebra::tree::TreeNode;

pub const SAMPLE_TREE: &str = "(* (atan (+ x zz) (+ yy xxx)) (atan (+ xxx zzz) (+ yyyy x)))";
pub const SAMPLE_ATAN: &str = "(atan (+ x zz) (+ yy xxx))";

pub fn data(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

/// Removes the widest run of leading blanks common to all non-empty lines.
pub fn strip_common_indent(text: &str) -> String {
    let indent = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.len() - l.trim_start().len())
        .min()
        .unwrap_or(0);
    text.lines()
        .map(|l| l.get(indent..).unwrap_or("").trim_end())
        .map(|l| format!("{l}\n"))
        .collect()
}

/// Random tree whose depth never exceeds `max_depth`, labels of 1..=6 letters.
pub fn random_tree(rng: &mut StdRng, max_depth: usize) -> TreeNode {
    let len = rng.gen_range(1..=6);
    let label: String = (0..len)
        .map(|_| rng.gen_range(b'a'..=b'z') as char)
        .collect();
    if max_depth == 0 || rng.gen_bool(0.4) {
        TreeNode::leaf(label)
    } else {
        let left = random_tree(rng, max_depth - 1);
        let right = random_tree(rng, max_depth - 1);
        TreeNode::branch(label, left, right)
    }
}

/// Raw polynomial with up to `max_terms` terms; duplicates and zeros allowed.
pub fn random_raw_poly(
    rng: &mut StdRng,
    max_terms: usize,
    max_exp: u64,
    max_coeff: i64,
) -> Polynomial {
    let n = rng.gen_range(0..=max_terms);
    Polynomial::new(
        (0..n)
            .map(|_| {
                Term::new(
                    rng.gen_range(-max_coeff..=max_coeff),
                    rng.gen_range(0..=max_exp),
                    rng.gen_range(0..=max_exp),
                )
            })
            .collect(),
    )
}

/// Exact evaluation at an integer point, independent of the product code.
pub fn evaluate(p: &Polynomial, x: i64, y: i64) -> i128 {
    p.terms()
        .iter()
        .map(|t| {
            let mut v = i128::from(t.coeff);
            for _ in 0..t.xexp {
                v *= i128::from(x);
            }
            for _ in 0..t.yexp {
                v *= i128::from(y);
            }
            v
        })
        .sum()
}

/// Every pattern over {A, B} with length 1..=max_len.
pub fn ab_patterns(max_len: usize) -> Vec<String> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for bits in 0..(1u32 << len) {
            out.push(
                (0..len)
                    .map(|i| if bits >> i & 1 == 1 { 'B' } else { 'A' })
                    .collect(),
            );
        }
    }
    out
}

pub fn random_ab(rng: &mut StdRng, len: usize) -> String {
    (0..len)
        .map(|_| if rng.gen_bool(0.5) { 'A' } else { 'B' })
        .collect()
}
