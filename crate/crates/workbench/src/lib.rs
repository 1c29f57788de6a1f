//! Command line tool and HTTP service over the polygon model.

pub mod api;
pub mod cli;
pub mod export;
pub mod http;
