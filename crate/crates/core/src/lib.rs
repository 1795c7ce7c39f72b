//! Three small text algorithms and the command-line tool around them.
//!
//! * [`poly`]: products of sparse polynomials in `x` and `y`, printed in a
//!   two-line layout with exponents raised above their variables.
//! * [`fib`]: counting a pattern inside the Fibonacci strings
//!   `F0 = A`, `F1 = B`, `Fn = F(n-1) F(n-2)` by composing
//!   prefix/count/suffix summaries.
//! * [`tree`]: drawing binary expression trees on a character grid from
//!   per-node width triples.

pub mod cli;
pub mod fib;
pub mod poly;
pub mod tree;
