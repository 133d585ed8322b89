//! Finite groupoids and the three equivalent bicategories of generalized
//! morphisms between them: spans with a weak-equivalence leg (fractions),
//! anafunctors, and bibundles. Also Morita equivalence testing and Čech
//! cocycles on finite covers.

pub mod ana;
pub mod bibundle;
pub mod cech;
pub mod cli;
pub mod error;
pub mod files;
pub mod fractions;
pub mod fuzz;
pub mod gpd;
pub mod laws;
pub mod morita;

pub use error::{GpdError, Result};
