//! Presentations of the small and big quantum cohomology of coadjoint
//! varieties, the Schubert products they are built from, and pipelines that
//! check them against the Chevalley operator and degree-one invariants.

pub mod big;
pub mod catalog;
pub mod classical;
pub mod fixtures;
pub mod gw;
pub mod products;
pub mod report;
pub mod small;
pub mod spectral;
pub mod type_a;
pub mod type_d;

pub use big::verify_big;
pub use catalog::{catalog, catalog_tag, Constants, Deformation, DeformationForm, PresentationSpec};
pub use classical::SchubertRing;
pub use gw::verify_gw;
pub use products::{product_fixtures, verify_products, ProductFixture};
pub use report::{Check, VerificationReport};
pub use small::verify_small;
pub use spectral::verify_spectral_match;
pub use type_a::verify_type_a;

use coadqh_core::CoreError;
use coadqh_linalg::LinalgError;
use coadqh_polyideal::PolyError;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresError {
    #[error("unsupported tag {0}")]
    Unsupported(String),
    #[error("fixture: {0}")]
    Fixture(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("linear algebra: {0}")]
    Linalg(String),
}

impl From<LinalgError> for PresError {
    fn from(e: LinalgError) -> Self {
        PresError::Linalg(e.to_string())
    }
}
