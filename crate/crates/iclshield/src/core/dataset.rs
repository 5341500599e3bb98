use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CoreError;

/// One input→output pair. The `index` is the position in the source dataset
/// and acts as the example's stable identity: duplicate texts stay
/// distinguishable and selection tie-breaks key off it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Example {
    input: String,
    output: String,
    index: usize,
}

impl Example {
    pub fn new(input: impl Into<String>, output: impl Into<String>, index: usize) -> Result<Self, CoreError> {
        let input = input.into();
        if input.trim().is_empty() {
            return Err(CoreError::EmptyInput);
        }
        Ok(Self { input, output: output.into(), index })
    }

    pub fn input(&self) -> &str {
        &self.input
    }

    pub fn output(&self) -> &str {
        &self.output
    }

    pub fn index(&self) -> usize {
        self.index
    }

    /// True when both texts match, ignoring the index identity.
    pub fn same_text(&self, other: &Example) -> bool {
        self.input == other.input && self.output == other.output
    }
}

/// An ordered list of examples, optionally constrained to a label space
/// (classification tasks only).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dataset {
    examples: Vec<Example>,
    label_space: Option<Vec<String>>,
}

impl Dataset {
    pub fn new(examples: Vec<Example>, label_space: Option<Vec<String>>) -> Result<Self, CoreError> {
        if examples.is_empty() {
            return Err(CoreError::EmptyDataset);
        }
        if let Some(labels) = &label_space {
            for (pos, ex) in examples.iter().enumerate() {
                if !labels.iter().any(|l| l == ex.output()) {
                    return Err(CoreError::OutputNotInLabelSpace {
                        line: pos + 1,
                        output: ex.output().to_string(),
                    });
                }
            }
        }
        Ok(Self { examples, label_space })
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn get(&self, index: usize) -> Option<&Example> {
        self.examples.get(index)
    }

    pub fn examples(&self) -> &[Example] {
        &self.examples
    }

    pub fn label_space(&self) -> Option<&[String]> {
        self.label_space.as_deref()
    }
}

#[derive(Serialize, Deserialize)]
struct RawRecord {
    input: Option<String>,
    output: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    label_space: Option<Vec<String>>,
}

/// Load a dataset from a line-delimited JSON file. Each line holds an
/// `{"input": ..., "output": ...}` record; an optional `{"label_space":
/// [...]}` record may appear as the first line. Indices are assigned
/// `0..p-1` in file order.
pub fn load_dataset(path: impl AsRef<Path>) -> Result<Dataset, CoreError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| CoreError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_dataset(&text)
}

pub(crate) fn parse_dataset(text: &str) -> Result<Dataset, CoreError> {
    let mut examples = Vec::new();
    let mut label_space: Option<Vec<String>> = None;
    let mut next_index = 0usize;

    for (lineno, line) in text.lines().enumerate() {
        let line_1 = lineno + 1;
        if line.trim().is_empty() {
            continue;
        }
        let raw: RawRecord = serde_json::from_str(line).map_err(|e| CoreError::Parse {
            line: line_1,
            message: e.to_string(),
        })?;
        if let Some(labels) = raw.label_space {
            if next_index != 0 || label_space.is_some() {
                return Err(CoreError::Parse {
                    line: line_1,
                    message: "label_space record must be the first line".into(),
                });
            }
            label_space = Some(labels);
            continue;
        }
        let input = raw.input.ok_or_else(|| CoreError::Parse {
            line: line_1,
            message: "missing \"input\" field".into(),
        })?;
        let output = raw.output.ok_or_else(|| CoreError::Parse {
            line: line_1,
            message: "missing \"output\" field".into(),
        })?;
        let ex = Example::new(input, output, next_index).map_err(|e| CoreError::Parse {
            line: line_1,
            message: e.to_string(),
        })?;
        examples.push(ex);
        next_index += 1;
    }

    if examples.is_empty() {
        return Err(CoreError::EmptyDataset);
    }
    Dataset::new(examples, label_space)
}

/// Serialize a dataset back to the line-delimited format accepted by
/// [`load_dataset`]. Loading the written file yields an identical dataset.
pub fn save_dataset(ds: &Dataset, path: impl AsRef<Path>) -> Result<(), CoreError> {
    let path = path.as_ref();
    let mut out = Vec::new();
    write_dataset(ds, &mut out).map_err(|source| CoreError::Io {
        path: path.display().to_string(),
        source,
    })?;
    fs::write(path, out).map_err(|source| CoreError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_dataset(ds: &Dataset, w: &mut impl Write) -> std::io::Result<()> {
    if let Some(labels) = ds.label_space() {
        let header = serde_json::json!({ "label_space": labels });
        writeln!(w, "{header}")?;
    }
    for ex in ds.examples() {
        let record = serde_json::json!({ "input": ex.input(), "output": ex.output() });
        writeln!(w, "{record}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_three_records_with_stable_indices() {
        let text = r#"{"input": "a", "output": "x"}
{"input": "b", "output": "y"}
{"input": "c", "output": "x"}
"#;
        let ds = parse_dataset(text).unwrap();
        assert_eq!(ds.len(), 3);
        let indices: Vec<usize> = ds.examples().iter().map(Example::index).collect();
        assert_eq!(indices, vec![0, 1, 2]);
        assert_eq!(ds.get(1).unwrap().input(), "b");
    }

    #[test]
    fn missing_output_names_the_line() {
        let text = "{\"input\": \"a\", \"output\": \"x\"}\n{\"input\": \"b\"}\n";
        let err = parse_dataset(text).unwrap_err();
        match err {
            CoreError::Parse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("output"));
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn empty_file_is_an_error() {
        assert!(matches!(parse_dataset(""), Err(CoreError::EmptyDataset)));
    }

    #[test]
    fn label_space_header_constrains_outputs() {
        let ok = "{\"label_space\": [\"x\", \"y\"]}\n{\"input\": \"a\", \"output\": \"x\"}\n";
        let ds = parse_dataset(ok).unwrap();
        assert_eq!(ds.label_space(), Some(&["x".to_string(), "y".to_string()][..]));

        let bad = "{\"label_space\": [\"x\"]}\n{\"input\": \"a\", \"output\": \"z\"}\n";
        assert!(matches!(
            parse_dataset(bad),
            Err(CoreError::OutputNotInLabelSpace { line: 1, .. })
        ));
    }

    #[test]
    fn whitespace_only_input_rejected() {
        let text = "{\"input\": \"  \", \"output\": \"x\"}\n";
        assert!(matches!(parse_dataset(text), Err(CoreError::Parse { line: 1, .. })));
    }

    #[test]
    fn round_trip_preserves_dataset() {
        let text = "{\"label_space\": [\"x\", \"y\"]}\n{\"input\": \"a\", \"output\": \"x\"}\n{\"input\": \"b\", \"output\": \"y\"}\n";
        let ds = parse_dataset(text).unwrap();
        let mut buf = Vec::new();
        write_dataset(&ds, &mut buf).unwrap();
        let reloaded = parse_dataset(std::str::from_utf8(&buf).unwrap()).unwrap();
        assert_eq!(ds, reloaded);
    }
}
