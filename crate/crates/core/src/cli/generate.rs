use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::instance::InstanceFile;
use crate::error::{Error, Result};
use crate::geometry::{orientation, Color, Orientation, Point};
use crate::pivot::{classify_hulls, HullRelation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Shape {
    Overlap,
    Contain,
    Disjoint,
    Random,
}

impl Shape {
    pub const ALL: [Shape; 4] = [Shape::Overlap, Shape::Contain, Shape::Disjoint, Shape::Random];

    fn name(self) -> &'static str {
        match self {
            Shape::Overlap => "overlap",
            Shape::Contain => "contain",
            Shape::Disjoint => "disjoint",
            Shape::Random => "random",
        }
    }

    fn wanted(self) -> Option<HullRelation> {
        match self {
            Shape::Overlap => Some(HullRelation::ProperOverlap),
            Shape::Contain => Some(HullRelation::RedContainsBlue),
            Shape::Disjoint => Some(HullRelation::Disjoint),
            Shape::Random => None,
        }
    }

    /// Sampling boxes `(x_lo, x_hi, y_lo, y_hi)` for red and blue.
    fn boxes(self) -> [(i64, i64, i64, i64); 2] {
        match self {
            Shape::Overlap => [(-1000, 250, -1000, 1000), (-250, 1000, -1000, 1000)],
            Shape::Contain => [(-1000, 1000, -1000, 1000), (-150, 150, -150, 150)],
            Shape::Disjoint => [(-1000, -50, -1000, 1000), (50, 1000, -1000, 1000)],
            Shape::Random => [(-1000, 1000, -1000, 1000); 2],
        }
    }
}

const MAX_ATTEMPTS: usize = 10_000;

fn extends_general_position(points: &[Point], cand: &Point) -> bool {
    for (i, a) in points.iter().enumerate() {
        if a.pos == cand.pos {
            return false;
        }
        for b in &points[i + 1..] {
            if orientation(&a.pos, &b.pos, &cand.pos) == Orientation::Collinear {
                return false;
            }
        }
    }
    true
}

fn sample(rng: &mut ChaCha8Rng, n_red: usize, n_blue: usize, shape: Shape) -> Vec<Point> {
    let boxes = shape.boxes();
    let mut points: Vec<Point> = Vec::with_capacity(n_red + n_blue);
    for (color, n, (x0, x1, y0, y1)) in [(Color::Red, n_red, boxes[0]), (Color::Blue, n_blue, boxes[1])] {
        let target = points.len() + n;
        while points.len() < target {
            let cand = Point::int(rng.gen_range(x0..=x1), rng.gen_range(y0..=y1), color);
            if extends_general_position(&points, &cand) {
                points.push(cand);
            }
        }
    }
    points
}

/// A random general-position instance with the requested hull relation,
/// fully determined by the arguments.
pub fn generate(n_red: usize, n_blue: usize, seed: u64, shape: Shape) -> Result<InstanceFile> {
    if n_red < 3 || n_blue < 3 {
        return Err(Error::Input(format!("need at least 3 points per color, got {n_red} red and {n_blue} blue")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let points = sample(&mut rng, n_red, n_blue, shape);
        let relation = classify_hulls(&points)?;
        if shape.wanted().is_none_or(|w| w == relation) {
            let mut file = InstanceFile::from_points(&points);
            file.seed = Some(seed);
            file.metadata.insert("shape".into(), shape.name().into());
            file.metadata.insert("relation".into(), format!("{relation:?}"));
            return Ok(file);
        }
    }
    Err(Error::Input(format!("no {} instance found in {MAX_ATTEMPTS} attempts", shape.name())))
}
