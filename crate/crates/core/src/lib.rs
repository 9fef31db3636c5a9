//! The Rubik's Revenge (4×4×4) state space in wreath-product coordinates.
//!
//! An assembly is stored as an element of
//! `T = (C₂≀S₂₄) × (C₃≀S₈) × S₂₄` relative to the solved state. Inside `T`
//! sit the mechanically admissible subgroup `T′`, the licit group `L`
//! generated by the twelve slice moves, and the group `I` of relabelings of
//! indistinguishable pieces. The crate decides solvability, counts the
//! double cosets `I\T/L` and `(I∩T′)\T′/L`, computes the exact solvability
//! probabilities, and checks `L = ker χ` with Schreier–Sims.
//!
//! ```
//! use revenge::counting::{self, Mode};
//!
//! assert_eq!(counting::count_classes(Mode::Marked).to_string(), "1594323");
//! assert_eq!(counting::format_rational(&counting::prob_exact(Mode::Marked)), "1/12288");
//! ```

pub mod counting;
pub mod cube;
pub mod error;
pub mod oracle;
pub mod perm;
pub mod sims;
pub mod verify;
pub mod wreath;

pub use counting::Mode;
pub use cube::{CubeElem, InvariantClass, Move, Shape};
pub use error::{Error, ParseError, Result};
pub use perm::Perm;
pub use wreath::WreathElem;
