//! Lusztig symbols for Weyl groups of type `B_n` with weight `L(t) = b`,
//! `L(s_i) = 1`: symbols and their sorted entries `kappa`, `a`-values,
//! families, the dominance order on `kappa`, its covering relations, and
//! an independent construction of Geck's preorder to check it against.

pub mod adjacency;
pub mod error;
pub mod family;
pub mod partition;
pub mod preorder;
pub mod relation;
pub mod symbol;
pub mod typea;
pub mod verify;

pub use adjacency::{adjacency_move, frame, is_adjacent, saturated_chain, AdjacencyFrame, OrderTable};
pub use error::{Error, Result};
pub use family::{enumerate_bipartitions, family_table, Family, FamilyTable, HasseDiagram};
pub use partition::{BoxMove, Partition};
pub use preorder::{
    induction_targets, preceq, preceq_oracle, truncated_targets, witness_step, InductionWitness,
    PreorderOracle,
};
pub use relation::Relation;
pub use symbol::{
    a_value, f_stat, family_members, from_sympartition, is_sympartition, kappa, n_stat, symbol,
    Bipartition, Kappa, Symbol, SymbolRecord,
};
