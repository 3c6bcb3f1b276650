//! Finite asynchronous transducers representing homeomorphisms of the
//! Cantor spaces `C_{n,r}`, with minimization, composition, inversion,
//! synchronization analysis and outer-class classification.
//!
//! Maps act on the right throughout: `compose(a, b)` applies `a` first.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod machine;
pub mod minimize;
pub mod random;
pub mod synchro;
pub mod words;

pub use algebra::{
    compose, from_prefix_code_map, identity_core, identity_transducer, invert, product, root_core,
    twist_transducer, Permutation, PrefixCodeMap,
};
pub use classify::{
    check_permutation_state, classify_subgroup, is_in_gnr, order_in_on, outer_class_equal, outer_core,
    outer_product, unbalanced_cycle, Cycle, Order, SubgroupFlags, DEFAULT_ORDER_CAP,
};
pub use error::{Error, Result, Violation, ViolationKind, WordError};
pub use io::{parse, serialize};
pub use machine::{CanonicalForm, LocalAction, Mode, StateId, Transducer, Transition};
pub use minimize::minimize;
pub use synchro::{core_of, is_bisynchronizing, sync_level, Synchronization};
pub use words::{Alphabet, CodeDefect, EventuallyPeriodicPoint, Letter, PrefixCode, Relation, Word};
