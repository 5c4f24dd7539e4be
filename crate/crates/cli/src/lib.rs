//! Library side of the `mycdist` command-line tool: graph input handling and
//! the corpus verification pipeline.

pub mod input;
pub mod verify;
