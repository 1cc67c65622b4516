//! Exact combinatorics of twisted finite Coxeter groups and Deligne-Garside normal forms
//! of powers of reduced braids.

pub mod exactfield;
pub mod rootsystem;
pub mod coxeter;
pub mod eigengeometry;
pub mod braid;
pub mod cli;
