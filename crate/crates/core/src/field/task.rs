use serde_json::{json, Value};

use super::em::{em_from_potential, maxwell_residuals};
use super::grid::FieldGrid;
use super::lattice::max_norm;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldTask {
    Em,
    Maxwell,
}

impl FieldTask {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "em" => Ok(Self::Em),
            "maxwell" => Ok(Self::Maxwell),
            other => Err(Error::Parse(format!(
                "unknown task {other:?}; expected em or maxwell"
            ))),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Em => "em",
            Self::Maxwell => "maxwell",
        }
    }
}

/// Runs a task on a grid, returning the JSON summary and the output grid.
/// `em` reports the max-norm of each derived component, `maxwell` the
/// max-norm of each equation residual.
pub fn run_field_task(grid: &FieldGrid, task: FieldTask) -> Result<(Value, FieldGrid)> {
    let (residual, out) = match task {
        FieldTask::Em => {
            let out = em_from_potential(grid)?;
            let mut norms = serde_json::Map::new();
            for name in out.names() {
                norms.insert(name.to_string(), json!(max_norm(out.get(name)?)));
            }
            (Value::Object(norms), out)
        }
        FieldTask::Maxwell => {
            let r = maxwell_residuals(grid)?;
            (
                serde_json::to_value(r.summary())?,
                r.to_grid(&grid.lattice)?,
            )
        }
    };
    let summary = json!({
        "task": task.as_str(),
        "extent": grid.lattice.extent,
        "h": grid.lattice.spacing,
        "residual": residual,
    });
    Ok((summary, out))
}
