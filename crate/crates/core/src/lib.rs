//! Khovanov homology of closed positive 3-braids.
//!
//! The pipeline runs word -> left normal form -> summit representative ->
//! family tag -> closed-form table, with an independent state-sum
//! computation of the full homology to check the tables against.

pub mod braidword;
pub mod garside3;
pub mod diagram;
pub mod khovanov;
pub mod tables;
pub mod rational;
