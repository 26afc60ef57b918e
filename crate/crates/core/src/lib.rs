//! Boolean automata double-cycles: construction, asynchronous dynamics,
//! a small update-sequence language and exhaustive verification.

pub mod badc;
pub mod dynamics;
pub mod network;
pub mod seqdsl;
pub mod verify;

pub use badc::{BadcError, BadcSpec, Cycle, DoubleCycle, Kind, Layout};
pub use dynamics::{Attractor, AttractorKind, GraphError, TransitionGraph};
pub use network::{Configuration, LocalFunction, NetworkError, NetworkSpec, Sign};
pub use seqdsl::{ExecError, ParseError, Program, Trace};
pub use verify::VerificationReport;
