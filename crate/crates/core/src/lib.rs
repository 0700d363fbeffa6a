//! Exact computation on finite commutative rings: ideal lattices, hollowness
//! and irreducibility predicates, quotients and localizations, and an
//! executable check registry with counterexample witnesses.

pub mod bijection;
pub mod bitset;
pub mod cache;
pub mod checks;
pub mod corpus;
pub mod export;
pub mod gcd;
pub mod hollow;
pub mod ideal;
pub mod irreducible;
pub mod lattice;
pub mod poly;
pub mod quotient;
pub mod ring;
pub mod vecspace;
pub mod verify;

pub use bitset::BitSet;
pub use ideal::{Ideal, IdealError};
pub use lattice::{IdealLattice, LatticeSummary, RingFlags};
pub use ring::{FiniteRing, RingElement, RingError};
