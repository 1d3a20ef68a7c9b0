pub mod axioms;
pub mod cli;
pub mod exact;
pub mod figures;
pub mod plane;
pub mod proportion;
