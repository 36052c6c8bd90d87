//! Bundled group files, embedded so the checks and tests run without paths.

pub const S3_JSON: &str = include_str!("../fixtures/s3.json");
pub const C2_JSON: &str = include_str!("../fixtures/c2.json");
