//! Distribution and Shannon entropy of the number of distinct colours seen after rolling
//! properly coloured dice.
//!
//! `m` dice with `r` sides are coloured with `n` colours so that no die repeats a colour.
//! Such a configuration is an `r`-uniform multi-hypergraph ([`Hypergraph`]) and a roll is a
//! uniformly random orientation of its edges. The quantity of interest is `X_H`, the number
//! of vertices hit by at least one edge.
//!
//! - [`exact_dist`]: two independent exact engines for the law of `X_H`, Monte Carlo, and
//!   closed-form moments.
//! - [`closed_form`]: fair-coin binomial laws, the cycle law, and the entropy functional.
//! - [`entropy_bounds`]: upper and lower entropy bounds and a checker.
//! - [`search`]: exhaustive entropy maximisation over small classes and conjecture checks.
//!
//! ```
//! use dice_entropy::{closed_form, exact_dist, Hypergraph};
//!
//! let c4 = Hypergraph::cycle(4).unwrap();
//! let law = exact_dist::exact_pmf_enumeration(&c4).unwrap();
//! assert_eq!(law, closed_form::cycle_colour_pmf(4).unwrap());
//! assert!((law.entropy() - 1.06128).abs() < 1e-5);
//! ```

pub mod cli;
pub mod closed_form;
pub mod entropy_bounds;
mod error;
pub mod exact_dist;
pub mod fmt;
pub mod hypergraph;
pub mod pmf;
pub mod search;

pub use error::{Error, Result};
pub use hypergraph::{Hypergraph, PairOverlap, SpecialKind};
pub use pmf::Pmf;
