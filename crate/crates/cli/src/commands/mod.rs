pub mod bench;
pub mod generate;
pub mod simulate;
pub mod transform;
pub mod verify;

use std::io::Write;
use std::path::Path;

use chw_core::{Error, SignalFormat};

/// Write a signal to `path`, or as text to stdout.
pub fn emit_signal(x: &[f64], path: Option<&Path>, format: SignalFormat) -> chw_core::Result<()> {
    match path {
        Some(p) => chw_core::write_signal(x, p, format),
        None => std::io::stdout()
            .lock()
            .write_all(chw_core::io::encode_text(x).as_bytes())
            .map_err(|source| Error::Io {
                path: "<stdout>".into(),
                source,
            }),
    }
}
