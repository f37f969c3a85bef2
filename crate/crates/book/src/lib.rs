//! Runs every code block of the guide under `book/src` as a doc-test. One
//! module per chapter so a failure points at its chapter.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/weyl.md")]
pub mod weyl {}
#[doc = include_str!("../../../book/src/operators.md")]
pub mod operators {}
#[doc = include_str!("../../../book/src/graphs.md")]
pub mod graphs {}
#[doc = include_str!("../../../book/src/ramsey.md")]
pub mod ramsey {}
#[doc = include_str!("../../../book/src/jacobi.md")]
pub mod jacobi {}
#[doc = include_str!("../../../book/src/oracle.md")]
pub mod oracle {}
#[doc = include_str!("../../../book/src/interference.md")]
pub mod interference {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
