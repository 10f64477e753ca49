//! Each chapter of `book/src` is a module here so that `cargo test` runs its
//! code samples.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/fields.md")]
pub mod fields {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/constacyclic.md")]
pub mod constacyclic {}

#[doc = include_str!("../../../book/src/conjucyclic.md")]
pub mod conjucyclic {}

#[doc = include_str!("../../../book/src/trace.md")]
pub mod trace {}

#[doc = include_str!("../../../book/src/oracle-cli.md")]
pub mod oracle_cli {}
