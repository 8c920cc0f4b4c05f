pub mod curves;
pub mod error;
pub mod jet;
pub mod joris;
pub mod numsg;
pub mod parse;
pub mod poly;
pub mod probe;
pub mod rational;
pub mod real_roots;
pub mod resultant;
pub mod taxonomy;
