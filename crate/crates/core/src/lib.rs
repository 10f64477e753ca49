pub mod check;
pub mod conju;
pub mod constacyclic;
pub mod error;
pub mod factor;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod suite;
pub mod sweep;
pub mod text;
pub mod tower;
pub mod trace;

pub use error::{Error, Result};
pub use field::{Field, FieldElement};
pub use poly::Poly;
pub use tower::Tower;
