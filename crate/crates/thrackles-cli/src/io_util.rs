//! Input/output plumbing: stdin-or-file reading and single-document output.

use std::io::Read;
use std::path::Path;

use serde_json::Value;

use thrackles::graph::Graph;
use thrackles::json::{artifact_type, graph_from_value};

use crate::{CliResult, Failure};

/// Read a whole input: a path, "-", or (when absent) stdin.
pub fn read_input(path: Option<&Path>) -> CliResult<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => Ok(std::fs::read_to_string(p)
            .map_err(|e| Failure::schema(format!("cannot read {}: {e}", p.display())))?),
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            Ok(buf)
        }
    }
}

pub fn read_value(path: Option<&Path>) -> CliResult<Value> {
    Ok(serde_json::from_str(&read_input(path)?)?)
}

/// Read an input that must be a plain graph document.
pub fn read_graph(path: Option<&Path>) -> CliResult<Graph> {
    let v = read_value(path)?;
    if let Some(t) = artifact_type(&v) {
        return Err(Failure::schema(format!(
            "expected a plain graph document, got artifact type {t:?}"
        )));
    }
    Ok(graph_from_value(&v)?)
}

/// Write the single JSON document of this invocation to stdout.
pub fn emit(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("JSON serialization cannot fail"));
}

pub fn write_file(path: &Path, content: &str) -> CliResult {
    std::fs::write(path, content)
        .map_err(|e| Failure::schema(format!("cannot write {}: {e}", path.display())))?;
    Ok(())
}
