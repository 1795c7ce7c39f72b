//! Sparse polynomials in `x` and `y` with integer coefficients.
//!
//! Input uses the terse judge notation (`-yx8+9x3-1+y`), the product is the
//! plain double loop over term pairs, and output is the two-line layout with
//! exponents raised onto their own line.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("parse error at column {}: {kind}", .offset + 1)]
    Parse { offset: usize, kind: ParseErrorKind },
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("empty input")]
    EmptyInput,
    #[error("empty term")]
    EmptyTerm,
    #[error("unexpected character {0:?}")]
    UnexpectedChar(char),
    #[error("variable '{0}' repeated within one term")]
    RepeatedVariable(char),
    #[error("number does not fit in 64 bits")]
    NumberOverflow,
}

impl PolyError {
    fn parse(offset: usize, kind: ParseErrorKind) -> Self {
        PolyError::Parse { offset, kind }
    }

    /// Zero-based byte offset of a parse error within the parsed text.
    pub fn offset(&self) -> Option<usize> {
        match self {
            PolyError::Parse { offset, .. } => Some(*offset),
            PolyError::Overflow(_) => None,
        }
    }
}

/// One monomial `coeff * x^xexp * y^yexp`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: i64,
    pub xexp: u64,
    pub yexp: u64,
}

impl Term {
    pub const fn new(coeff: i64, xexp: u64, yexp: u64) -> Self {
        Term { coeff, xexp, yexp }
    }

    pub fn has_variable(&self) -> bool {
        self.xexp > 0 || self.yexp > 0
    }

    /// Multiplies coefficients and adds exponents.
    pub fn product(&self, other: &Term) -> Result<Term, PolyError> {
        Ok(Term {
            coeff: self
                .coeff
                .checked_mul(other.coeff)
                .ok_or(PolyError::Overflow("coefficient product"))?,
            xexp: self
                .xexp
                .checked_add(other.xexp)
                .ok_or(PolyError::Overflow("x exponent sum"))?,
            yexp: self
                .yexp
                .checked_add(other.yexp)
                .ok_or(PolyError::Overflow("y exponent sum"))?,
        })
    }

    /// Output order: higher x exponent first, then higher y exponent.
    /// The coefficient is ignored, so terms with equal exponents compare equal.
    pub fn order_cmp(&self, other: &Term) -> Ordering {
        other
            .xexp
            .cmp(&self.xexp)
            .then_with(|| other.yexp.cmp(&self.yexp))
    }

    fn same_monomial(&self, other: &Term) -> bool {
        self.xexp == other.xexp && self.yexp == other.yexp
    }
}

/// A list of terms. Parsing and [`multiply`] yield raw lists; the two
/// simplification routines yield the canonical form (merged, zero-free,
/// sorted by [`Term::order_cmp`]).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn new(terms: Vec<Term>) -> Self {
        Polynomial { terms }
    }

    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }

    pub fn is_canonical(&self) -> bool {
        self.terms.iter().all(|t| t.coeff != 0)
            && self
                .terms
                .windows(2)
                .all(|w| w[0].order_cmp(&w[1]) == Ordering::Less)
    }
}

impl FromStr for Polynomial {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_polynomial(s)
    }
}

/// Parses text such as `-yx8+9x3-1+y` into a raw polynomial, one term per
/// textual term. Missing coefficients and exponents default to 1 and a
/// missing variable has exponent 0. A single leading `+` is accepted.
pub fn parse_polynomial(text: &str) -> Result<Polynomial, PolyError> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(PolyError::parse(0, ParseErrorKind::EmptyInput));
    }
    let mut terms = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let negative = match bytes[pos] {
            b'-' => {
                pos += 1;
                true
            }
            b'+' => {
                pos += 1;
                false
            }
            _ if terms.is_empty() => false,
            _ => unreachable!("terms are only terminated by a sign or end of input"),
        };
        let (term, next) = parse_term(bytes, pos, negative)?;
        terms.push(term);
        pos = next;
    }
    Ok(Polynomial { terms })
}

fn parse_term(bytes: &[u8], start: usize, negative: bool) -> Result<(Term, usize), PolyError> {
    let mut pos = start;
    let mut magnitude: Option<u64> = None;
    if pos < bytes.len() && bytes[pos].is_ascii_digit() {
        let (value, next) = parse_number(bytes, pos)?;
        magnitude = Some(value);
        pos = next;
    }
    let mut xexp: Option<u64> = None;
    let mut yexp: Option<u64> = None;
    while pos < bytes.len() && !matches!(bytes[pos], b'+' | b'-') {
        let var = bytes[pos];
        let slot = match var {
            b'x' => &mut xexp,
            b'y' => &mut yexp,
            other => {
                return Err(PolyError::parse(
                    pos,
                    ParseErrorKind::UnexpectedChar(char::from(other)),
                ))
            }
        };
        if slot.is_some() {
            return Err(PolyError::parse(
                pos,
                ParseErrorKind::RepeatedVariable(char::from(var)),
            ));
        }
        pos += 1;
        let exp = if pos < bytes.len() && bytes[pos].is_ascii_digit() {
            let (value, next) = parse_number(bytes, pos)?;
            pos = next;
            value
        } else {
            1
        };
        *slot = Some(exp);
    }
    if magnitude.is_none() && xexp.is_none() && yexp.is_none() {
        return Err(PolyError::parse(start, ParseErrorKind::EmptyTerm));
    }
    let magnitude = magnitude.unwrap_or(1);
    let coeff = if negative {
        0i64.checked_sub_unsigned(magnitude)
    } else {
        i64::try_from(magnitude).ok()
    }
    .ok_or(PolyError::parse(start, ParseErrorKind::NumberOverflow))?;
    let term = Term::new(coeff, xexp.unwrap_or(0), yexp.unwrap_or(0));
    Ok((term, pos))
}

fn parse_number(bytes: &[u8], start: usize) -> Result<(u64, usize), PolyError> {
    let mut value: u64 = 0;
    let mut pos = start;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        value = value
            .checked_mul(10)
            .and_then(|v| v.checked_add(u64::from(bytes[pos] - b'0')))
            .ok_or(PolyError::parse(start, ParseErrorKind::NumberOverflow))?;
        pos += 1;
    }
    Ok((value, pos))
}

/// Every pairwise term product, unsimplified: `|p1| * |p2|` terms.
pub fn multiply(p1: &Polynomial, p2: &Polynomial) -> Result<Polynomial, PolyError> {
    let mut res = Vec::with_capacity(p1.len() * p2.len());
    for t1 in &p1.terms {
        for t2 in &p2.terms {
            res.push(t1.product(t2)?);
        }
    }
    Ok(Polynomial { terms: res })
}

// Coefficient sums accumulate in i128 so the overflow check depends only on
// the final sum, not on the merge order of the strategy.
fn narrow(sum: i128) -> Result<i64, PolyError> {
    i64::try_from(sum).map_err(|_| PolyError::Overflow("coefficient sum"))
}

/// Merges like terms by scanning the accumulated output for each input term
/// (quadratic), drops zeros, then sorts.
pub fn simplify_unsorted(p: &Polynomial) -> Result<Polynomial, PolyError> {
    let mut acc: Vec<(Term, i128)> = Vec::new();
    for term in &p.terms {
        match acc.iter_mut().find(|(t, _)| t.same_monomial(term)) {
            Some((_, sum)) => *sum += i128::from(term.coeff),
            None => acc.push((*term, i128::from(term.coeff))),
        }
    }
    let mut terms = Vec::with_capacity(acc.len());
    for (term, sum) in acc {
        let coeff = narrow(sum)?;
        if coeff != 0 {
            terms.push(Term { coeff, ..term });
        }
    }
    terms.sort_by(Term::order_cmp);
    Ok(Polynomial { terms })
}

/// Sorts first so like terms are adjacent, then merges each run in one pass.
pub fn simplify_sorted(p: &Polynomial) -> Result<Polynomial, PolyError> {
    let mut sorted = p.terms.clone();
    sorted.sort_by(Term::order_cmp);
    let mut terms = Vec::with_capacity(sorted.len());
    for run in sorted.chunk_by(|a, b| a.same_monomial(b)) {
        let sum: i128 = run.iter().map(|t| i128::from(t.coeff)).sum();
        let coeff = narrow(sum)?;
        if coeff != 0 {
            terms.push(Term { coeff, ..run[0] });
        }
    }
    Ok(Polynomial { terms })
}

/// Which cleanup routine turns a raw product into canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Unsorted,
    #[default]
    Sorted,
}

impl Strategy {
    pub fn simplify(self, p: &Polynomial) -> Result<Polynomial, PolyError> {
        match self {
            Strategy::Unsorted => simplify_unsorted(p),
            Strategy::Sorted => simplify_sorted(p),
        }
    }
}

/// Exponent line over base line, both with trailing whitespace trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoLine {
    pub exponents: String,
    pub base: String,
}

impl fmt::Display for TwoLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.exponents)?;
        writeln!(f, "{}", self.base)
    }
}

/// Renders a canonical polynomial. Signs are surrounded by single spaces, a
/// unit coefficient is dropped unless the term is a constant, exponent 1 is
/// dropped, and each exponent of 2 or more is written on the upper line
/// above the blanks it leaves in the base line.
pub fn render_two_line(p: &Polynomial) -> TwoLine {
    if p.is_empty() {
        return TwoLine {
            exponents: String::new(),
            base: "0".to_owned(),
        };
    }
    let mut base = String::new();
    let mut exps = String::new();
    for (i, term) in p.terms.iter().enumerate() {
        let sign = match (i, term.coeff < 0) {
            (0, false) => "",
            (0, true) => "- ",
            (_, false) => " + ",
            (_, true) => " - ",
        };
        base.push_str(sign);
        let magnitude = term.coeff.unsigned_abs();
        if magnitude != 1 || !term.has_variable() {
            base.push_str(&magnitude.to_string());
        }
        for (var, exp) in [('x', term.xexp), ('y', term.yexp)] {
            if exp == 0 {
                continue;
            }
            base.push(var);
            if exp >= 2 {
                let digits = exp.to_string();
                while exps.len() < base.len() {
                    exps.push(' ');
                }
                exps.push_str(&digits);
                base.extend(std::iter::repeat_n(' ', digits.len()));
            }
        }
    }
    TwoLine {
        exponents: exps.trim_end().to_owned(),
        base: base.trim_end().to_owned(),
    }
}

/// Parses both operands, multiplies, simplifies with `strategy` and renders.
pub fn multiply_and_render(
    left: &str,
    right: &str,
    strategy: Strategy,
) -> Result<TwoLine, PolyError> {
    let p1 = parse_polynomial(left)?;
    let p2 = parse_polynomial(right)?;
    let product = multiply(&p1, &p2)?;
    Ok(render_two_line(&strategy.simplify(&product)?))
}
