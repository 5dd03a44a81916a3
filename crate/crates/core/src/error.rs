use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input. `offset` is a byte offset into the file when the
    /// JSON itself failed to parse.
    #[error("parse error{}: {message}", offset.map(|o| format!(" at byte {o}")).unwrap_or_default())]
    Parse { offset: Option<usize>, message: String },

    #[error("validation error: {0}")]
    Validation(String),

    #[error("value is not rational: {0}")]
    NotRational(String),

    #[error("missing {prime}-power map for class {class}")]
    MissingPowerMap { class: String, prime: u64 },

    #[error("{what} index {index} out of range ({len} available)")]
    IndexOutOfRange { what: &'static str, index: usize, len: usize },

    #[error("coefficient m_{degree} = {value} is not a nonnegative integer")]
    NonIntegerCoefficient { degree: usize, value: String },

    #[error("closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },

    #[error("profile covers degrees up to {available}, plan needs degree {needed}")]
    ProfileTooShort { needed: usize, available: usize },

    #[error("unknown group {0}")]
    UnknownGroup(String),

    #[error("no character table shipped for {0}")]
    MissingTable(String),

    #[error("missing group {0}")]
    MissingGroup(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn parse(message: impl Into<String>) -> Self {
        Error::Parse { offset: None, message: message.into() }
    }

    /// Converts a `serde_json` syntax error into a parse error carrying the
    /// byte offset of the failure within `input`.
    pub(crate) fn from_json(err: serde_json::Error, input: &[u8]) -> Self {
        let offset = byte_offset(input, err.line(), err.column());
        Error::Parse { offset: Some(offset), message: err.to_string() }
    }
}

fn byte_offset(input: &[u8], line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let mut offset = 0;
    for (i, l) in input.split(|&b| b == b'\n').enumerate() {
        if i + 1 == line {
            return (offset + column.saturating_sub(1)).min(input.len());
        }
        offset += l.len() + 1;
    }
    input.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offset_of_truncated_document_points_at_end() {
        let input = b"{\n\"group\": \"C2\",\n\"order\"";
        let err = serde_json::from_slice::<serde_json::Value>(input).unwrap_err();
        match Error::from_json(err, input) {
            Error::Parse { offset: Some(o), .. } => assert!(o + 1 >= input.len() && o <= input.len(), "{o}"),
            other => panic!("unexpected {other:?}"),
        }
    }
}
