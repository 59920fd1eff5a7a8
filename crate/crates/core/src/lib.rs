//! S-prime spectra of finite commutative rings, with the S-Zariski and
//! S-flat topologies computed as explicit finite topologies.
//!
//! The usual flow is ring → multiplicative set → spectrum → topology:
//!
//! ```
//! use sspec_core::{FiniteRing, ideal::mult_closure, spectrum::spec_s, topology::s_flat_topology};
//!
//! let ring = FiniteRing::zn(12).unwrap();
//! let mults = mult_closure(&ring, &[3]).unwrap();
//! let space = spec_s(&ring, &mults).unwrap();
//! assert_eq!(space.len(), 2);
//! let flat = s_flat_topology(&space);
//! assert_eq!(flat.opens().len(), 2); // indiscrete
//! ```

pub mod bitset;
pub mod desc;
pub mod error;
pub mod goingdown;
pub mod ideal;
pub mod ring;
pub mod spectrum;
pub mod topology;
pub mod verifier;

pub use bitset::BitSet;
pub use desc::RingDesc;
pub use error::{Error, Result};
pub use ideal::{Ideal, MultSet};
pub use ring::{enumerate_morphisms, Caps, Elem, FiniteRing, RingMorphism};
pub use spectrum::{SpectrumPoint, SpectrumSpace};
pub use topology::{FiniteTopology, TopologyKind};
