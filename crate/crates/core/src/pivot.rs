//! Choice of the pivot point: classify how the two color hulls relate, then
//! search near a hull-boundary crossing (overlap) or next to a blue hull
//! vertex (containment) for a point whose radial order has no monster-jump.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    convex_hull, line_intersection, orientation, segments_cross, Color, ConvexHull, Coord, Orientation, Point, Pos,
};
use crate::radial::{gap_angles_ok, has_any_monster_jump, RadialOrder};

/// Halving steps allowed per search direction.
pub const MAX_HALVINGS: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum HullRelation {
    Disjoint,
    ProperOverlap,
    RedContainsBlue,
    BlueContainsRed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PivotKind {
    /// Just inside both hulls, next to a crossing of their boundaries.
    OverlapNearQ,
    /// Next to a blue hull vertex, along the adjacent hull edge.
    ContainCase1,
    /// Next to a blue hull vertex, directly in front of a red point.
    ContainCase2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PivotCandidate {
    pub p: Pos,
    pub kind: PivotKind,
    pub relation: HullRelation,
    pub epsilon: Coord,
    pub delta: Option<Coord>,
    pub halvings: usize,
    /// The monster-jump-free labeling exchanges the input colors.
    pub colors_swapped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum PivotChoice {
    Disjoint,
    Pivot(PivotCandidate),
}

fn color_hull(points: &[Point], color: Color) -> Result<ConvexHull> {
    let pos: Vec<Pos> = points.iter().filter(|p| p.color == color).map(|p| p.pos.clone()).collect();
    if pos.len() < 3 {
        return Err(Error::Input(format!("{} {color} points, need at least 3", pos.len())));
    }
    Ok(convex_hull(&pos))
}

fn hull_edges(h: &ConvexHull) -> Vec<(Pos, Pos)> {
    h.edges().map(|(a, b)| (a.clone(), b.clone())).collect()
}

pub fn classify_hulls(points: &[Point]) -> Result<HullRelation> {
    let red = color_hull(points, Color::Red)?;
    let blue = color_hull(points, Color::Blue)?;
    for (a, b) in red.edges() {
        for (c, d) in blue.edges() {
            if segments_cross(a, b, c, d)? {
                return Ok(HullRelation::ProperOverlap);
            }
        }
    }
    if blue.vertices().iter().any(|v| red.strictly_contains(v)) {
        Ok(HullRelation::RedContainsBlue)
    } else if red.vertices().iter().any(|v| blue.strictly_contains(v)) {
        Ok(HullRelation::BlueContainsRed)
    } else {
        Ok(HullRelation::Disjoint)
    }
}

pub fn swap_colors(points: &[Point]) -> Vec<Point> {
    points.iter().map(|p| Point::new(p.pos.clone(), p.color.other())).collect()
}

/// The first labeling in `labelings` (false = as given, true = swapped)
/// under which `p` is a usable pivot: strictly inside both hulls, off every
/// line through two points, all gap angles below π, and no monster-jump.
pub fn usable_labeling(points: &[Point], p: &Pos, labelings: &[bool]) -> Option<bool> {
    usable(points, p, labelings, None)
}

/// With `isolate` set, that point must also form a blob by itself.
fn usable(points: &[Point], p: &Pos, labelings: &[bool], isolate: Option<&Pos>) -> Option<bool> {
    let red = color_hull(points, Color::Red).ok()?;
    let blue = color_hull(points, Color::Blue).ok()?;
    if !red.strictly_contains(p) || !blue.strictly_contains(p) {
        return None;
    }
    let order = RadialOrder::new(points.to_vec(), p.clone()).ok()?;
    if !gap_angles_ok(&order) {
        return None;
    }
    if let Some(v) = isolate {
        let i = order.points().iter().position(|q| &q.pos == v)?;
        if order.blob(order.blob_of(i)).len() != 1 {
            return None;
        }
    }
    let swapped = order.color_swapped();
    labelings.iter().copied().find(|&s| !has_any_monster_jump(if s { &swapped } else { &order }))
}

fn scaled(v: &(Coord, Coord), t: &Coord) -> (Coord, Coord) {
    (&v.0 * t, &v.1 * t)
}

fn add(u: &(Coord, Coord), v: &(Coord, Coord)) -> (Coord, Coord) {
    (&u.0 + &v.0, &u.1 + &v.1)
}

struct Search<'a> {
    points: &'a [Point],
    kind: PivotKind,
    relation: HullRelation,
    base: Pos,
    labelings: [bool; 2],
    isolate_base: bool,
}

impl Search<'_> {
    /// `p = base + ε·v` with `ε` halved from 1; with `perp` set, the
    /// direction is tilted to `v + δ·perp` where `δ = ε`.
    fn run(&self, v: &(Coord, Coord), perp: Option<&(Coord, Coord)>) -> Option<PivotCandidate> {
        let mut eps = Coord::integer(1);
        for halvings in 0..MAX_HALVINGS {
            let dir = match perp {
                Some(w) => add(v, &scaled(w, &eps)),
                None => v.clone(),
            };
            let p = self.base.offset(&eps, &dir.0, &dir.1);
            if let Some(swapped) = usable(self.points, &p, &self.labelings, self.isolate_base.then_some(&self.base)) {
                return Some(PivotCandidate {
                    p,
                    kind: self.kind,
                    relation: self.relation,
                    epsilon: eps.clone(),
                    delta: perp.map(|_| eps.clone()),
                    halvings,
                    colors_swapped: swapped,
                });
            }
            eps = eps.halved();
        }
        None
    }
}

/// Pivot next to a point where the red and blue hull boundaries cross.
pub fn pivot_overlap(points: &[Point]) -> Result<PivotCandidate> {
    let red = color_hull(points, Color::Red)?;
    let blue = color_hull(points, Color::Blue)?;
    let mut crossings = 0;
    // hull vertices are counterclockwise, so each interior is to the left
    for (ra, rb) in hull_edges(&red) {
        for (ba, bb) in hull_edges(&blue) {
            if !segments_cross(&ra, &rb, &ba, &bb)? {
                continue;
            }
            crossings += 1;
            let q = line_intersection(&ra, &rb, &ba, &bb)
                .ok_or_else(|| Error::InternalInvariantViolation("crossing edges are parallel".into()))?;
            let mut dir = None;
            for u in [&ra, &rb] {
                for w in [&ba, &bb] {
                    let d = add(&u.sub(&q), &w.sub(&q));
                    let probe = q.offset(&Coord::integer(1), &d.0, &d.1);
                    if orientation(&ra, &rb, &probe) == Orientation::Ccw
                        && orientation(&ba, &bb, &probe) == Orientation::Ccw
                    {
                        dir = Some(d);
                    }
                }
            }
            let d = dir.ok_or_else(|| Error::InternalInvariantViolation("no direction into both hulls".into()))?;
            // clockwise hull order runs rb -> ra and bb -> ba; the labeling
            // that sees b1, r1, b2, r2 clockwise about q is tried first
            let as_given = orientation(&q, &bb, &rb) == Orientation::Cw;
            let search = Search {
                points,
                kind: PivotKind::OverlapNearQ,
                relation: HullRelation::ProperOverlap,
                base: q,
                labelings: [!as_given, as_given],
                isolate_base: false,
            };
            if let Some(c) = search.run(&d, None) {
                return Ok(c);
            }
        }
    }
    if crossings == 0 {
        return Err(Error::Input("hull boundaries do not cross".into()));
    }
    Err(Error::PivotSearchExhausted(format!("tried {crossings} boundary crossings")))
}

/// Pivot inside the blue hull when the red hull contains it.
pub fn pivot_containment(points: &[Point]) -> Result<PivotCandidate> {
    let red_pts: Vec<Pos> = points.iter().filter(|p| p.color == Color::Red).map(|p| p.pos.clone()).collect();
    color_hull(points, Color::Red)?;
    let blue = color_hull(points, Color::Blue)?;
    let mut b: Vec<Pos> = blue.vertices().to_vec();
    b.reverse();
    let k = b.len();
    // H_i: open side of line b_i b_{i+1} away from the blue points
    let in_h = |i: usize, r: &Pos| orientation(&b[i % k], &b[(i + 1) % k], r) == Orientation::Ccw;
    let mut attempts = 0;
    for s in 0..k {
        let (b1, bk) = (&b[s], &b[(s + k - 1) % k]);
        let h1 = s;
        let hk = s + k - 1;
        if !red_pts.iter().any(|r| in_h(hk, r) && !in_h(h1, r)) {
            continue;
        }
        let in_h1: Vec<&Pos> = red_pts.iter().filter(|r| in_h(h1, r)).collect();
        // smallest angle from b2 about b1: nothing further clockwise
        let Some(r2) = in_h1
            .iter()
            .copied()
            .find(|&r| in_h1.iter().all(|&o| o == r || orientation(b1, r, o) == Orientation::Ccw))
        else {
            continue;
        };
        let (kind, v) = if in_h(hk, r2) {
            (PivotKind::ContainCase2, b1.sub(r2))
        } else {
            (PivotKind::ContainCase1, bk.sub(b1))
        };
        let search = Search {
            points,
            kind,
            relation: HullRelation::RedContainsBlue,
            base: b1.clone(),
            labelings: [false, true],
            // small ε: b1 has red on both sides in the order
            isolate_base: true,
        };
        let ccw = (-v.1.clone(), v.0.clone());
        let cw = (v.1.clone(), -v.0.clone());
        for perp in [&ccw, &cw] {
            attempts += 1;
            if let Some(c) = search.run(&v, Some(perp)) {
                return Ok(c);
            }
        }
    }
    if attempts == 0 {
        return Err(Error::Input("blue hull is not inside the red hull".into()));
    }
    Err(Error::PivotSearchExhausted(format!("tried {attempts} vertex directions")))
}

pub fn choose_pivot(points: &[Point]) -> Result<PivotChoice> {
    match classify_hulls(points)? {
        HullRelation::Disjoint => Ok(PivotChoice::Disjoint),
        HullRelation::ProperOverlap => pivot_overlap(points).map(PivotChoice::Pivot),
        HullRelation::RedContainsBlue => pivot_containment(points).map(PivotChoice::Pivot),
        HullRelation::BlueContainsRed => {
            let mut c = pivot_containment(&swap_colors(points))?;
            c.relation = HullRelation::BlueContainsRed;
            c.colors_swapped = !c.colors_swapped;
            Ok(PivotChoice::Pivot(c))
        }
    }
}
