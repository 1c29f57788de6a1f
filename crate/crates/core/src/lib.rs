pub mod ar_quiver;
pub mod error;
pub mod hom_ext;
pub mod oracle;
pub mod polygon;
pub mod sms;
pub mod tilting;
pub mod verify;

pub use error::{Error, Result};
pub use polygon::{CategoryParams, Diagonal};
