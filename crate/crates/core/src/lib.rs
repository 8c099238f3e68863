pub mod cli;
pub mod codes;
pub mod cssplus;
pub mod error;
pub mod gf2;
pub mod qstate;
pub mod registry;
pub mod search;
