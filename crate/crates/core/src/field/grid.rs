//! Named complex sample arrays on a shared lattice, and their file format.

use std::path::Path;

use indexmap::IndexMap;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::lattice::Lattice;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct FieldGrid {
    pub lattice: Lattice,
    components: IndexMap<String, Vec<Complex64>>,
}

impl FieldGrid {
    pub fn new(lattice: Lattice) -> Self {
        Self {
            lattice,
            components: IndexMap::new(),
        }
    }

    pub fn insert(&mut self, name: &str, data: Vec<Complex64>) -> Result<()> {
        if data.len() != self.lattice.len() {
            return Err(Error::Grid(format!(
                "component {name} has {} samples, lattice has {}",
                data.len(),
                self.lattice.len()
            )));
        }
        self.components.insert(name.to_string(), data);
        Ok(())
    }

    pub fn with(mut self, name: &str, data: Vec<Complex64>) -> Result<Self> {
        self.insert(name, data)?;
        Ok(self)
    }

    pub fn insert_fn(
        &mut self,
        name: &str,
        f: impl Fn([f64; 4]) -> Complex64 + Sync,
    ) -> Result<()> {
        let data = self.lattice.sample(f);
        self.insert(name, data)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.components.keys().map(String::as_str)
    }

    pub fn contains(&self, name: &str) -> bool {
        self.components.contains_key(name)
    }

    pub fn get(&self, name: &str) -> Result<&[Complex64]> {
        self.components
            .get(name)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::MissingComponents(vec![name.to_string()]))
    }

    /// Fetches several components, reporting every missing one at once.
    pub fn require<const N: usize>(&self, names: [&str; N]) -> Result<[&[Complex64]; N]> {
        let missing: Vec<String> = names
            .iter()
            .filter(|n| !self.contains(n))
            .map(|n| n.to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::MissingComponents(missing));
        }
        Ok(names.map(|n| self.components[n].as_slice()))
    }

    /// A component, or zeros when it is absent.
    pub fn get_or_zero(&self, name: &str) -> Vec<Complex64> {
        self.components
            .get(name)
            .cloned()
            .unwrap_or_else(|| vec![Complex64::new(0.0, 0.0); self.lattice.len()])
    }

    pub fn derivative(&self, name: &str, axis: usize) -> Result<Vec<Complex64>> {
        self.lattice.derivative(self.get(name)?, axis)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct Header {
    extent: Vec<usize>,
    spacing: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    periodic: Option<Vec<bool>>,
    components: Vec<String>,
    #[serde(default = "row_major")]
    layout: String,
    data: Value,
}

fn row_major() -> String {
    "row-major".into()
}

fn lattice_from(h: &Header) -> Result<Lattice> {
    let periodic = h
        .periodic
        .clone()
        .unwrap_or_else(|| vec![false; h.extent.len()]);
    if h.layout != "row-major" {
        return Err(Error::Grid(format!("unsupported layout {:?}", h.layout)));
    }
    if h.spacing.len() != h.extent.len() || periodic.len() != h.extent.len() {
        return Err(Error::Grid(
            "extent, spacing and periodic must have the same length".into(),
        ));
    }
    match h.extent.len() {
        4 => Lattice::new(
            h.extent.clone().try_into().expect("4"),
            h.spacing.clone().try_into().expect("4"),
            periodic.try_into().expect("4"),
        ),
        3 => Lattice::new(
            [1, h.extent[0], h.extent[1], h.extent[2]],
            [1.0, h.spacing[0], h.spacing[1], h.spacing[2]],
            [false, periodic[0], periodic[1], periodic[2]],
        ),
        n => Err(Error::Grid(format!("expected 3 or 4 axes, got {n}"))),
    }
}

fn fill(lattice: Lattice, names: &[String], flat: &[f64]) -> Result<FieldGrid> {
    let n = lattice.len();
    if flat.len() != 2 * n * names.len() {
        return Err(Error::Grid(format!(
            "expected {} values ({} components of {n} complex samples), got {}",
            2 * n * names.len(),
            names.len(),
            flat.len()
        )));
    }
    let mut grid = FieldGrid::new(lattice);
    for (c, name) in names.iter().enumerate() {
        let data = flat[2 * n * c..2 * n * (c + 1)]
            .chunks(2)
            .map(|p| Complex64::new(p[0], p[1]))
            .collect();
        grid.insert(name, data)?;
    }
    Ok(grid)
}

impl FieldGrid {
    /// Parses a header whose `data` is either an inline array of re/im
    /// pairs or a path (relative to `base`) to little-endian `f64` values,
    /// component-major in both cases.
    pub fn from_json_str(text: &str, base: &Path) -> Result<Self> {
        let header: Header = serde_json::from_str(text)?;
        let lattice = lattice_from(&header)?;
        let flat: Vec<f64> = match &header.data {
            Value::Array(values) => values
                .iter()
                .map(|v| {
                    v.as_f64()
                        .ok_or_else(|| Error::Parse(format!("non-numeric sample {v}")))
                })
                .collect::<Result<_>>()?,
            Value::String(path) => {
                let bytes = std::fs::read(base.join(path))?;
                if bytes.len() % 8 != 0 {
                    return Err(Error::Grid(format!(
                        "sidecar {path} is not a whole number of f64 values"
                    )));
                }
                bytes
                    .chunks_exact(8)
                    .map(|b| f64::from_le_bytes(b.try_into().expect("8 bytes")))
                    .collect()
            }
            other => {
                return Err(Error::Parse(format!(
                    "data must be an array or a path, got {other}"
                )))
            }
        };
        fill(lattice, &header.components, &flat)
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text, path.parent().unwrap_or(Path::new(".")))
    }

    fn header(&self, data: Value) -> Header {
        let l = &self.lattice;
        Header {
            extent: l.extent.to_vec(),
            spacing: l.spacing.to_vec(),
            periodic: Some(l.periodic.to_vec()),
            components: self.components.keys().cloned().collect(),
            layout: row_major(),
            data,
        }
    }

    fn flat(&self) -> Vec<f64> {
        self.components
            .values()
            .flatten()
            .flat_map(|z| [z.re, z.im])
            .collect()
    }

    /// Header with the samples inline.
    pub fn to_json(&self) -> Value {
        let data = Value::Array(self.flat().into_iter().map(Value::from).collect());
        serde_json::to_value(self.header(data)).expect("header serializes")
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string(&self.to_json())?)?;
        Ok(())
    }

    /// Header at `path` plus a binary sidecar next to it.
    pub fn write_with_sidecar(&self, path: &Path, sidecar: &str) -> Result<()> {
        let dir = path.parent().unwrap_or(Path::new("."));
        let bytes: Vec<u8> = self.flat().iter().flat_map(|x| x.to_le_bytes()).collect();
        std::fs::write(dir.join(sidecar), bytes)?;
        std::fs::write(
            path,
            serde_json::to_string(&self.header(Value::String(sidecar.into())))?,
        )?;
        Ok(())
    }
}
