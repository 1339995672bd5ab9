//! JSON region descriptions.
//!
//! ```json
//! {"kind": "polygon", "vertices": [[0,0],[1,0],[1,1],[0,1]]}
//! {"kind": "disk", "center": [0,0], "radius": 0.5641895835}
//! {"kind": "named", "name": "rect", "params": {"width": 0.5}, "normalize": true}
//! ```
//!
//! Built-in names: `unit-square`, `unit-disk`, `rect` (`width`, default
//! 0.5, unit area), `regular` (`sides`, default 6, unit area).

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{ConvexRegion, Point};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ShapeSpec {
    Polygon {
        vertices: Vec<[f64; 2]>,
    },
    Disk {
        center: [f64; 2],
        radius: f64,
    },
    Named {
        name: String,
        #[serde(default)]
        params: BTreeMap<String, f64>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RegionSpec {
    #[serde(flatten)]
    pub shape: ShapeSpec,
    #[serde(default)]
    pub normalize: bool,
}

pub const BUILTIN_NAMES: [&str; 4] = ["unit-square", "unit-disk", "rect", "regular"];

impl RegionSpec {
    pub fn named(name: &str) -> Self {
        Self {
            shape: ShapeSpec::Named {
                name: name.to_string(),
                params: BTreeMap::new(),
            },
            normalize: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn build(&self) -> Result<ConvexRegion> {
        let region = match &self.shape {
            ShapeSpec::Polygon { vertices } => {
                ConvexRegion::polygon(vertices.iter().map(|&v| Point::from(v)).collect())?
            }
            ShapeSpec::Disk { center, radius } => ConvexRegion::disk((*center).into(), *radius)?,
            ShapeSpec::Named { name, params } => builtin(name, params)?,
        };
        if self.normalize {
            region.normalize_unit_area()
        } else {
            Ok(region)
        }
    }
}

pub fn builtin(name: &str, params: &BTreeMap<String, f64>) -> Result<ConvexRegion> {
    let allow = |keys: &[&str]| -> Result<()> {
        match params.keys().find(|k| !keys.contains(&k.as_str())) {
            Some(k) => Err(Error::InvalidRegion(format!(
                "unknown parameter `{k}` for region `{name}`"
            ))),
            None => Ok(()),
        }
    };
    match name {
        "unit-square" => {
            allow(&[])?;
            Ok(ConvexRegion::unit_square())
        }
        "unit-disk" => {
            allow(&[])?;
            Ok(ConvexRegion::unit_disk())
        }
        "rect" => {
            allow(&["width"])?;
            let w = params.get("width").copied().unwrap_or(0.5);
            ConvexRegion::unit_rectangle(w)
        }
        "regular" => {
            allow(&["sides"])?;
            let s = params.get("sides").copied().unwrap_or(6.0);
            if s.fract() != 0.0 || s < 3.0 {
                return Err(Error::InvalidRegion(format!(
                    "`sides` must be an integer >= 3, got {s}"
                )));
            }
            ConvexRegion::regular_polygon(s as usize)
        }
        other => Err(Error::InvalidRegion(format!(
            "unknown named region `{other}` (expected one of {})",
            BUILTIN_NAMES.join(", ")
        ))),
    }
}

pub fn load_region(path: impl AsRef<Path>) -> Result<ConvexRegion> {
    let text = std::fs::read_to_string(path)?;
    RegionSpec::from_json(&text)?.build()
}
