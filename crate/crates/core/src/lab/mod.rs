//! Relation generators, verification, exact rank and the `LinKaw*` explorer.

pub mod cases;
pub mod explorer;
pub mod generators;
pub mod rank;
pub mod verify;

pub use cases::{cases, Bounds, Case, Outcome, Suite};
pub use explorer::{conjecture_explorer, drop1_dimension, fibonacci, ExplorerReport};
pub use generators::{Family, KawashimaCase, Param, RelationInstance};
pub use rank::{rank_exact, RowReducer};
pub use verify::{verify, Check, Mode, Report};
