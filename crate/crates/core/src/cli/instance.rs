use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{in_general_position, Color, Coord, Point, Pos};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRecord {
    pub x: Coord,
    pub y: Coord,
    pub color: Color,
}

/// On-disk instance: exact coordinates as `"num/den"` strings (plain
/// integers are accepted on input).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub points: Vec<PointRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

impl InstanceFile {
    pub fn from_points(points: &[Point]) -> Self {
        InstanceFile {
            points: points
                .iter()
                .map(|p| PointRecord { x: p.pos.x().clone(), y: p.pos.y().clone(), color: p.color })
                .collect(),
            seed: None,
            metadata: BTreeMap::new(),
        }
    }

    pub fn points(&self) -> Vec<Point> {
        self.points.iter().map(|r| Point::new(Pos::new(r.x.clone(), r.y.clone()), r.color)).collect()
    }

    /// Parses and checks general position.
    pub fn parse(text: &str) -> Result<Self> {
        let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let pos: Vec<Pos> = file.points().into_iter().map(|p| p.pos).collect();
        if let Err((i, j, k)) = in_general_position(&pos) {
            return Err(Error::Input(format!("points {i}, {j}, {k} are not in general position")));
        }
        Ok(file)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        InstanceFile::parse(&text)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("instance serializes");
        s.push('\n');
        s
    }
}
