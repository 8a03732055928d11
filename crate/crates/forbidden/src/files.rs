//! Family files: one graph6 line per member plus a metadata sidecar.
//!
//! The member file is sorted by canonical form, so two exports of the
//! same family are byte-identical and plain text diffs are meaningful.
//! The sidecar carries the generation arguments as `key=value` lines
//! and lives next to the member file with `.meta` appended.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use graph_core::{graph6, Graph};
use iso::CanonicalForm;

use crate::family::ForbiddenFamily;
use crate::{ForbiddenError, Parameter};

/// Writes the member file and its sidecar.
pub fn write_family(fam: &ForbiddenFamily, path: &Path) -> Result<(), ForbiddenError> {
    let mut body = String::new();
    for g in fam.members() {
        body.push_str(&graph6::encode(g));
        body.push('\n');
    }
    write_atomic(path, &body)?;
    let (low, high) = fam.vertex_range();
    let meta = format!(
        "parameter={}\nk={}\ncount={}\nvertex_range={low}..{high}\nengine_version={}\n",
        fam.parameter(),
        fam.k(),
        fam.len(),
        fam.engine_version(),
    );
    write_atomic(&sidecar_path(path), &meta)
}

/// Reads a family written by [`write_family`]. Members are
/// re-canonicalized on import, so a file edited by hand still loads as
/// long as every line is valid graph6 and the count matches.
pub fn read_family(path: &Path) -> Result<ForbiddenFamily, ForbiddenError> {
    let meta = fs::read_to_string(sidecar_path(path))?;
    let mut fields = BTreeMap::new();
    for (i, line) in meta.lines().enumerate() {
        let (key, value) = line.split_once('=').ok_or_else(|| ForbiddenError::FileFormat {
            line: i + 1,
            message: format!("metadata line without '=': {line:?}"),
        })?;
        if fields.insert(key.to_string(), value.to_string()).is_some() {
            return Err(ForbiddenError::FileFormat {
                line: i + 1,
                message: format!("duplicate metadata key {key:?}"),
            });
        }
    }
    let field = |key: &str| {
        fields.get(key).cloned().ok_or_else(|| ForbiddenError::FileFormat {
            line: 0,
            message: format!("metadata key {key:?} missing"),
        })
    };
    let bad = |key: &str, value: &str| ForbiddenError::FileFormat {
        line: 0,
        message: format!("metadata key {key:?} has unusable value {value:?}"),
    };

    let parameter_name = field("parameter")?;
    let parameter =
        Parameter::from_name(&parameter_name).ok_or_else(|| bad("parameter", &parameter_name))?;
    let k_text = field("k")?;
    let k: usize = k_text.parse().map_err(|_| bad("k", &k_text))?;
    let count_text = field("count")?;
    let count: usize = count_text.parse().map_err(|_| bad("count", &count_text))?;
    let range_text = field("vertex_range")?;
    let vertex_range = range_text
        .split_once("..")
        .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
        .ok_or_else(|| bad("vertex_range", &range_text))?;
    let engine_version = field("engine_version")?;

    let body = fs::read_to_string(path)?;
    let mut members: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for (i, line) in body.lines().enumerate() {
        let g = graph6::decode(line).map_err(|e| ForbiddenError::FileFormat {
            line: i + 1,
            message: e.to_string(),
        })?;
        let form = iso::canonical_form(&g)?;
        members.insert(form, form.to_graph());
    }
    if members.len() != count {
        return Err(ForbiddenError::FileFormat {
            line: 0,
            message: format!(
                "metadata announces {count} members, file holds {}",
                members.len()
            ),
        });
    }
    Ok(ForbiddenFamily::from_parts(
        parameter,
        k,
        members,
        vertex_range,
        engine_version,
    ))
}

fn sidecar_path(path: &Path) -> PathBuf {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!("{name}.meta"))
}

/// Writes through a sibling temporary file and renames it into place,
/// so observers never see a half-written file.
pub(crate) fn write_atomic(path: &Path, contents: &str) -> Result<(), ForbiddenError> {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    let tmp = path.with_file_name(format!("{name}.tmp"));
    fs::write(&tmp, contents)?;
    fs::rename(&tmp, path)?;
    Ok(())
}
