pub mod commands;
pub mod expr;
pub mod parse;
pub mod report;
