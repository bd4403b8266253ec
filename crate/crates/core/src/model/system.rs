use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use super::Pairing;
use crate::error::{Error, Result};

/// An upper and a lower non-crossing pairing on the same `2n` points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MeanderSystem {
    upper: Pairing,
    lower: Pairing,
}

impl MeanderSystem {
    pub fn new(upper: Pairing, lower: Pairing) -> Result<Self> {
        if upper.n() != lower.n() {
            return Err(Error::SizeMismatch {
                upper: upper.n(),
                lower: lower.n(),
            });
        }
        Ok(MeanderSystem { upper, lower })
    }

    pub fn n(&self) -> usize {
        self.upper.n()
    }

    pub fn upper(&self) -> &Pairing {
        &self.upper
    }

    pub fn lower(&self) -> &Pairing {
        &self.lower
    }

    /// The same system reflected across the line: upper and lower swap.
    pub fn reflected(&self) -> MeanderSystem {
        MeanderSystem {
            upper: self.lower.clone(),
            lower: self.upper.clone(),
        }
    }
}

/// Wire form: `{"n": .., "upper": [..], "lower": [..]}` with 0-based
/// partner arrays of length `2n`.
#[derive(Serialize, Deserialize)]
struct Wire {
    n: usize,
    upper: Vec<u32>,
    lower: Vec<u32>,
}

/// Renders a system as a single-line JSON object.
pub fn serialize(ms: &MeanderSystem) -> String {
    let wire = Wire {
        n: ms.n(),
        upper: ms.upper.as_slice().to_vec(),
        lower: ms.lower.as_slice().to_vec(),
    };
    serde_json::to_string(&wire).expect("plain integer arrays serialize")
}

/// Parses the JSON form produced by [`serialize`], validating both pairings.
pub fn deserialize(text: &str) -> Result<MeanderSystem> {
    let wire: Wire = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    for (side, arr) in [("upper", &wire.upper), ("lower", &wire.lower)] {
        if arr.len() != 2 * wire.n {
            return Err(Error::Parse(format!(
                "{side} has {} entries, expected 2n = {}",
                arr.len(),
                2 * wire.n
            )));
        }
    }
    let upper = Pairing::new(wire.upper).map_err(|source| Error::Validation {
        side: "upper",
        source,
    })?;
    let lower = Pairing::new(wire.lower).map_err(|source| Error::Validation {
        side: "lower",
        source,
    })?;
    MeanderSystem::new(upper, lower)
}

/// Reads one system per non-blank line.
pub fn read_jsonl<R: BufRead>(reader: R) -> Result<Vec<MeanderSystem>> {
    let mut out = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let ms = deserialize(&line).map_err(|e| match e {
            Error::Parse(msg) => Error::Parse(format!("line {}: {msg}", lineno + 1)),
            other => other,
        })?;
        out.push(ms);
    }
    Ok(out)
}

pub fn write_jsonl<W: Write>(mut writer: W, systems: &[MeanderSystem]) -> Result<()> {
    for ms in systems {
        writeln!(writer, "{}", serialize(ms))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairing(v: &[u32]) -> Pairing {
        Pairing::new(v.to_vec()).unwrap()
    }

    #[test]
    fn serializes_the_smallest_system() {
        let ms = MeanderSystem::new(pairing(&[1, 0]), pairing(&[1, 0])).unwrap();
        assert_eq!(serialize(&ms), r#"{"n":1,"upper":[1,0],"lower":[1,0]}"#);
    }

    #[test]
    fn rejects_crossing_arrays_as_validation_errors() {
        let err = deserialize(r#"{"n":2,"upper":[2,3,0,1],"lower":[1,0,3,2]}"#).unwrap_err();
        assert!(
            matches!(err, Error::Validation { side: "upper", .. }),
            "{err}"
        );
        assert!(err.is_validation());
    }

    #[test]
    fn rejects_malformed_text() {
        assert!(matches!(deserialize("{\"n\":1"), Err(Error::Parse(_))));
        assert!(matches!(
            deserialize(r#"{"n":2,"upper":[1,0],"lower":[1,0]}"#),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn mismatched_sizes_are_rejected() {
        let err = MeanderSystem::new(pairing(&[1, 0]), pairing(&[1, 0, 3, 2])).unwrap_err();
        assert!(matches!(err, Error::SizeMismatch { upper: 1, lower: 2 }));
    }

    #[test]
    fn jsonl_skips_blank_lines() {
        let text = "{\"n\":1,\"upper\":[1,0],\"lower\":[1,0]}\n\n{\"n\":1,\"upper\":[1,0],\"lower\":[1,0]}\n";
        let v = read_jsonl(text.as_bytes()).unwrap();
        assert_eq!(v.len(), 2);
        let mut buf = Vec::new();
        write_jsonl(&mut buf, &v).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), text.replace("\n\n", "\n"));
    }
}
