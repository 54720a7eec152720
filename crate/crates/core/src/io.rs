//! Signal files.
//!
//! * Text: one decimal value per line; blank lines and lines starting with
//!   `#` are skipped. Values are written in shortest round-trip form.
//! * Binary: headerless little-endian IEEE-754 `f64`, length implied by the
//!   file size.
//!
//! Loaded signals must have a power-of-two number of samples.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::signal::Signal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignalFormat {
    #[default]
    Text,
    Binary,
}

impl FromStr for SignalFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(SignalFormat::Text),
            "binary" => Ok(SignalFormat::Binary),
            other => Err(Error::argument(format!("unknown signal format `{other}`"))),
        }
    }
}

fn format_err(path: &Path, msg: impl Into<String>) -> Error {
    Error::Format {
        path: path.to_path_buf(),
        msg: msg.into(),
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> Error + '_ {
    move |source| Error::Io {
        path: path.to_path_buf(),
        source,
    }
}

pub fn parse_text(path: &Path, text: &str) -> Result<Vec<f64>> {
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let v = line
            .parse::<f64>()
            .map_err(|e| format_err(path, format!("line {}: `{line}`: {e}", i + 1)))?;
        values.push(v);
    }
    Ok(values)
}

pub fn decode_binary(path: &Path, bytes: &[u8]) -> Result<Vec<f64>> {
    if !bytes.len().is_multiple_of(8) {
        return Err(format_err(
            path,
            format!("binary size {} is not a multiple of 8 bytes", bytes.len()),
        ));
    }
    Ok(bytes
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("8-byte chunk")))
        .collect())
}

pub fn read_signal(path: impl AsRef<Path>, format: SignalFormat) -> Result<Signal<f64>> {
    let path = path.as_ref();
    let values = match format {
        SignalFormat::Text => parse_text(path, &fs::read_to_string(path).map_err(io_err(path))?)?,
        SignalFormat::Binary => decode_binary(path, &fs::read(path).map_err(io_err(path))?)?,
    };
    let count = values.len();
    Signal::new(values).map_err(|_| {
        format_err(
            path,
            format!("sample count {count} is not a power of two"),
        )
    })
}

pub fn encode_text(x: &[f64]) -> String {
    let mut out = String::with_capacity(x.len() * 8);
    for v in x {
        // `Display` for f64 is the shortest representation that round-trips
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}

pub fn encode_binary(x: &[f64]) -> Vec<u8> {
    x.iter().flat_map(|v| v.to_le_bytes()).collect()
}

pub fn write_signal(x: &[f64], path: impl AsRef<Path>, format: SignalFormat) -> Result<()> {
    let path = path.as_ref();
    match format {
        SignalFormat::Text => fs::write(path, encode_text(x)),
        SignalFormat::Binary => fs::write(path, encode_binary(x)),
    }
    .map_err(io_err(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_parsing() {
        let p = Path::new("mem");
        assert_eq!(parse_text(p, "1\n0\n0\n0\n").unwrap(), vec![1.0, 0.0, 0.0, 0.0]);
        assert_eq!(
            parse_text(p, "# header\n1\n\n  # note\n-2.5\n").unwrap(),
            vec![1.0, -2.5]
        );
        let err = parse_text(p, "1\nabc\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
    }

    #[test]
    fn binary_size_check() {
        let p = Path::new("mem");
        assert!(decode_binary(p, &[0u8; 12]).is_err());
        assert_eq!(decode_binary(p, &encode_binary(&[1.5, -0.0])).unwrap()[0], 1.5);
    }

    #[test]
    fn files_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let x = [1.0, 1.0, -1.0, -1.0];
        for (name, fmt) in [("a.txt", SignalFormat::Text), ("a.bin", SignalFormat::Binary)] {
            let p = dir.path().join(name);
            write_signal(&x, &p, fmt).unwrap();
            assert_eq!(read_signal(&p, fmt).unwrap().as_slice(), &x);
        }
    }

    #[test]
    fn non_power_of_two_count_named() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("three.bin");
        fs::write(&p, encode_binary(&[1.0, 2.0, 3.0])).unwrap();
        let err = read_signal(&p, SignalFormat::Binary).unwrap_err();
        assert!(matches!(err, Error::Format { .. }));
        assert!(err.to_string().contains("count 3"));
    }

    #[test]
    fn unwritable_path() {
        let err = write_signal(&[1.0], "/nonexistent-dir/x.txt", SignalFormat::Text).unwrap_err();
        assert!(matches!(err, Error::Io { .. }));
    }
}
