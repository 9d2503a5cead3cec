//! Restricted root systems, Dynkin diagrams, parabolic and horospherical
//! decomposition data, and the classification of hyperpolar homogeneous
//! foliations on Riemannian symmetric spaces of noncompact type.
//!
//! The combinatorial layers ([`rootsys`], [`spacecat`], [`parabolic`],
//! [`foliate`]) work in exact arithmetic. The matrix model of
//! `SL_{r+1}(R)/SO_{r+1}` in [`slmodel`] is floating point and checks its
//! identities against the tolerances in [`slmodel::tolerance`].
//!
//! ```
//! use liefoliate::{foliate, spacecat::Catalog};
//!
//! let sl5 = Catalog::global().lookup("SL5").unwrap();
//! let classes = foliate::enumerate_foliations(&sl5, false).unwrap();
//! assert_eq!(classes.len(), 18);
//! ```

pub mod error;
pub mod exact;
pub mod foliate;
pub mod parabolic;
pub mod rootsys;
pub mod slmodel;
pub mod spacecat;
pub mod verify;

pub use error::{Error, Result};
pub use rootsys::{Family, Root, RootSystem};
pub use spacecat::SpaceDescriptor;
