//! Script runner over a workspace of level-1 hypermedia documents.
//!
//! Scripts are JSON lines ([`script`]); page and link literals inside them use
//! the constructor-term syntax ([`syntax`]) that the model types print.

pub mod export;
pub mod script;
pub mod syntax;
pub mod workspace;

pub use export::{dot, dump, parse_dump};
pub use script::{parse_script, Step};
pub use workspace::{Outcome, Report, Workspace};
