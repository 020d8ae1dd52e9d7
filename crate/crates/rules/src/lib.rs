//! The rule catalog and verifier for constrained Latin squares.
//!
//! A [`Rule`] is a declarative constraint; a [`RuleSet`] is an ordered,
//! duplicate-free collection of them. [`verify`] checks any square against
//! any rule set and returns either an empty report (pass) or the complete
//! list of [`Violation`]s, each reported exactly once and in a canonical
//! deterministic order.
//!
//! Design notes:
//! - **Latin is not implicit.** A rule set holds exactly the rules given;
//!   front ends that want Latin-by-default must add it themselves. Bare
//!   rows and deliberately broken grids are first-class test subjects.
//! - **Verification never stops early.** `verify` reports every violated
//!   instance; [`passes`] is the early-exit boolean companion for search
//!   inner loops.
//! - Everything is a pure function over immutable data, safe to call from
//!   many threads at once.

mod cyclic;
mod perm;
mod rule;
mod verify;
mod violation;

pub use cyclic::{detect_cyclic, NotLatin};
pub use perm::{cyclable, nonconsecutive_perm, NotAPermutation};
pub use rule::{Adjacency, Rule, RuleSet, RuleSetError};
pub use verify::{passes, verify};
pub use violation::{note, Violation};
