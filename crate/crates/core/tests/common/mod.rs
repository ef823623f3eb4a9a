//! Instance builders shared by the integration tests and the acceptance
//! harness.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rb_cycles::cli::generate::{generate, Shape};
use rb_cycles::geometry::{in_general_position, segments_cross, Color, Coord, Point, Pos};
use rb_cycles::jump::{canonical_config, find_4_forcings, JumpConfiguration};
use rb_cycles::radial::{gap_angles_ok, has_any_monster_jump, RadialOrder};

pub fn pt(x: i64, y: i64, color: Color) -> Point {
    Point::int(x, y, color)
}

pub fn instance(n_red: usize, n_blue: usize, seed: u64, shape: Shape) -> Vec<Point> {
    generate(n_red, n_blue, seed, shape).expect("generator succeeds").points()
}

/// Six points around the origin with alternating colors.
pub fn hexagon() -> Vec<Point> {
    let dirs = [(7, 0), (4, 6), (-3, 7), (-7, 1), (-5, -6), (4, -7)];
    dirs.iter()
        .enumerate()
        .map(|(i, &(x, y))| pt(x, y, if i % 2 == 0 { Color::Red } else { Color::Blue }))
        .collect()
}

/// A red edge over a three-point blue blob, with both blue jump endpoints
/// of that blob above it. Solved around [`forcing_pivot`], the canonical
/// configuration has exactly one 4-forcing.
pub fn forcing_template() -> Vec<Point> {
    use Color::{Blue, Red};
    vec![
        pt(-3, 2, Red),
        pt(3, 2, Red),
        pt(0, -3, Red),
        pt(-2, 4, Blue),
        pt(0, 1, Blue),
        pt(2, 4, Blue),
        pt(4, -1, Blue),
        pt(-4, -1, Blue),
    ]
}

pub fn forcing_pivot() -> Pos {
    Pos::parse("1/7", "1/11").unwrap()
}

fn c(v: i64) -> Coord {
    Coord::integer(v)
}

/// Rotation by the angle with cosine `a/h` and sine `b/h`, scaling by `s`,
/// then translation; all exact.
#[derive(Clone, Copy, Debug)]
pub struct Similarity {
    pub a: i64,
    pub b: i64,
    pub h: i64,
    pub s: i64,
    pub tx: i64,
    pub ty: i64,
}

impl Similarity {
    pub fn apply(&self, p: &Pos) -> Pos {
        let cos = Coord::new(self.a * self.s, self.h).unwrap();
        let sin = Coord::new(self.b * self.s, self.h).unwrap();
        let x = &(&cos * p.x()) - &(&sin * p.y());
        let y = &(&sin * p.x()) + &(&cos * p.y());
        Pos::new(&x + &c(self.tx), &y + &c(self.ty))
    }
}

pub const SIMILARITIES: [Similarity; 6] = [
    Similarity { a: 1, b: 0, h: 1, s: 1, tx: 0, ty: 0 },
    Similarity { a: 3, b: 4, h: 5, s: 2, tx: 7, ty: -3 },
    Similarity { a: 5, b: -12, h: 13, s: 1, tx: -40, ty: 11 },
    Similarity { a: -8, b: 15, h: 17, s: 3, tx: 2, ty: 2 },
    Similarity { a: -7, b: -24, h: 25, s: 5, tx: 1000, ty: -999 },
    Similarity { a: 20, b: 21, h: 29, s: 1, tx: 0, ty: 5 },
];

fn reflect(p: &Pos) -> Pos {
    Pos::new(-p.x().clone(), p.y().clone())
}

/// One instance of the repair corpus: points, the pivot to sort around, and
/// a label for failure messages.
#[derive(Clone, Debug)]
pub struct ForcingCase {
    pub label: String,
    pub points: Vec<Point>,
    pub pivot: Pos,
}

impl ForcingCase {
    pub fn order(&self) -> RadialOrder {
        RadialOrder::new(self.points.clone(), self.pivot.clone()).expect("corpus pivot is valid")
    }

    /// Mirror image with colors exchanged.
    pub fn mirrored(&self) -> ForcingCase {
        ForcingCase {
            label: format!("{} mirrored", self.label),
            points: self.points.iter().map(|p| Point::new(reflect(&p.pos), p.color.other())).collect(),
            pivot: reflect(&self.pivot),
        }
    }

    pub fn reflected(&self) -> ForcingCase {
        ForcingCase {
            label: format!("{} reflected", self.label),
            points: self.points.iter().map(|p| Point::new(reflect(&p.pos), p.color)).collect(),
            pivot: reflect(&self.pivot),
        }
    }

    pub fn color_swapped(&self) -> ForcingCase {
        ForcingCase {
            label: format!("{} swapped", self.label),
            points: self.points.iter().map(|p| Point::new(p.pos.clone(), p.color.other())).collect(),
            pivot: self.pivot.clone(),
        }
    }

    pub fn transformed(&self, t: &Similarity, tag: usize) -> ForcingCase {
        ForcingCase {
            label: format!("{} similarity {tag}", self.label),
            points: self.points.iter().map(|p| Point::new(t.apply(&p.pos), p.color)).collect(),
            pivot: t.apply(&self.pivot),
        }
    }

    /// Number of 4-forcings in the canonical configuration, or `None` when
    /// the case is unusable (degenerate, monster-jump, or bad gap).
    pub fn forcings(&self) -> Option<usize> {
        let pos: Vec<Pos> = self.points.iter().map(|p| p.pos.clone()).collect();
        in_general_position(&pos).ok()?;
        let order = RadialOrder::new(self.points.clone(), self.pivot.clone()).ok()?;
        if has_any_monster_jump(&order) || !gap_angles_ok(&order) {
            return None;
        }
        let config = canonical_config(&order).ok()?;
        Some(find_4_forcings(&config, &order).ok()?.len())
    }
}

/// The template in every similarity and symmetry variant, followed by
/// jittered copies that keep at least one 4-forcing.
pub fn forcing_corpus(jittered: usize) -> Vec<ForcingCase> {
    let base = ForcingCase { label: "template".into(), points: forcing_template(), pivot: forcing_pivot() };
    let mut out = Vec::new();
    for (i, t) in SIMILARITIES.iter().enumerate() {
        let moved = base.transformed(t, i);
        out.push(moved.mirrored());
        out.push(moved.reflected());
        out.push(moved.color_swapped());
        out.push(moved);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xF0_2C1);
    let mut attempts = 0;
    let mut kept = 0;
    while kept < jittered && attempts < 50 * jittered {
        attempts += 1;
        let seedling = &out[rng.gen_range(0..24)];
        let points = seedling
            .points
            .iter()
            .map(|p| {
                let dx = Coord::new(rng.gen_range(-30i64..=30), 100).unwrap();
                let dy = Coord::new(rng.gen_range(-30i64..=30), 100).unwrap();
                Point::new(Pos::new(p.pos.x() + &dx, p.pos.y() + &dy), p.color)
            })
            .collect();
        let case = ForcingCase { label: format!("{} jitter {attempts}", seedling.label), points, pivot: seedling.pivot.clone() };
        if case.forcings().is_some_and(|n| n > 0) {
            out.push(case);
            kept += 1;
        }
    }
    out
}

/// Blue-red crossings counted straight from segment tests: each blue edge
/// against the red edge that leaves the red blob right after its source.
pub fn blue_red_crossings_oracle(config: &JumpConfiguration, order: &RadialOrder) -> usize {
    let edges = config.edges();
    edges
        .iter()
        .filter(|e| e.color == Color::Blue)
        .filter(|blue| {
            let red = edges
                .iter()
                .find(|e| e.from_blob == order.next_blob(blue.from_blob))
                .expect("every blob has an outgoing edge");
            segments_cross(order.pos(blue.src), order.pos(blue.dst), order.pos(red.src), order.pos(red.dst)).unwrap()
        })
        .count()
}

/// A random point inside the hull of `points`: a convex combination of
/// three of them with random rational weights.
pub fn random_inner_point(rng: &mut ChaCha8Rng, points: &[Point]) -> Pos {
    let mut weights = [0i64; 3];
    for w in &mut weights {
        *w = rng.gen_range(1..=97);
    }
    let total: i64 = weights.iter().sum();
    let mut x = Coord::zero();
    let mut y = Coord::zero();
    for w in weights {
        let p = &points[rng.gen_range(0..points.len())].pos;
        let t = Coord::new(w, total).unwrap();
        x = &x + &(&t * p.x());
        y = &y + &(&t * p.y());
    }
    Pos::new(x, y)
}

/// Random orders around random pivots that are free of monster-jumps and
/// satisfy the gap condition. Returns the orders and the number of pivots
/// tried.
pub fn monster_jump_free_orders(count: usize, seed: u64, max_n: usize) -> (Vec<RadialOrder>, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut orders = Vec::new();
    let mut tried = 0;
    let shapes = [Shape::Overlap, Shape::Contain, Shape::Random];
    while orders.len() < count {
        let shape = shapes[rng.gen_range(0..shapes.len())];
        let n_red = rng.gen_range(3..=max_n);
        let n_blue = rng.gen_range(3..=max_n);
        let points = instance(n_red, n_blue, rng.gen(), shape);
        for _ in 0..20 {
            tried += 1;
            let pivot = random_inner_point(&mut rng, &points);
            let Ok(order) = RadialOrder::new(points.clone(), pivot) else { continue };
            if order.num_blobs() >= 4 && gap_angles_ok(&order) && !has_any_monster_jump(&order) {
                orders.push(order);
                break;
            }
        }
    }
    (orders, tried)
}
