//! Clockwise radial order of a bichromatic set about a pivot, its blob
//! decomposition, and the red/blue monster-jump detectors.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::{angle_less_than_pi, dot_sign, orientation, Color, Coord, ConvexHull, Orientation, Point, Pos};

/// Compares directions around `pivot` by clockwise angle measured from the
/// ray `pivot → reference`. Two-stage: half-plane first, then orientation.
#[derive(Clone, Debug)]
pub struct ClockwiseFrom<'a> {
    pub pivot: &'a Pos,
    pub reference: &'a Pos,
}

impl ClockwiseFrom<'_> {
    /// 0 for clockwise angles in `[0, π)`, 1 for `[π, 2π)`.
    fn half(&self, a: &Pos) -> u8 {
        match orientation(self.pivot, self.reference, a) {
            Orientation::Cw => 0,
            Orientation::Ccw => 1,
            Orientation::Collinear => {
                if dot_sign(self.pivot, self.reference, a) == Ordering::Greater {
                    0
                } else {
                    1
                }
            }
        }
    }

    /// `Less` when `a` comes first clockwise. Directions on one ray compare
    /// `Equal`.
    pub fn compare(&self, a: &Pos, b: &Pos) -> Ordering {
        self.half(a).cmp(&self.half(b)).then_with(|| match orientation(self.pivot, a, b) {
            Orientation::Cw => Ordering::Less,
            Orientation::Ccw => Ordering::Greater,
            Orientation::Collinear => Ordering::Equal,
        })
    }
}

/// A maximal monochromatic run of the radial order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blob {
    pub id: usize,
    pub color: Color,
    /// Point indices in clockwise order.
    pub points: Vec<usize>,
}

impl Blob {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn first(&self) -> usize {
        self.points[0]
    }

    pub fn last(&self) -> usize {
        self.points[self.points.len() - 1]
    }

    pub fn second(&self) -> Option<usize> {
        self.points.get(1).copied()
    }

    pub fn second_to_last(&self) -> Option<usize> {
        (self.points.len() >= 2).then(|| self.points[self.points.len() - 2])
    }

    pub fn contains(&self, point: usize) -> bool {
        self.points.contains(&point)
    }
}

#[derive(Clone, Debug)]
pub struct RadialOrder {
    pivot: Pos,
    points: Vec<Point>,
    order: Vec<usize>,
    rank: Vec<usize>,
    blobs: Vec<Blob>,
    blob_of: Vec<usize>,
    hulls: Vec<ConvexHull>,
}

/// Sorts `points` clockwise about `pivot` and splits the cyclic sequence into
/// blobs. Fails when the pivot hits a point or two points are collinear with
/// the pivot.
pub fn radial_order(points: &[Point], pivot: &Pos) -> Result<RadialOrder> {
    RadialOrder::new(points.to_vec(), pivot.clone())
}

impl RadialOrder {
    pub fn new(points: Vec<Point>, pivot: Pos) -> Result<Self> {
        let n = points.len();
        for (i, pt) in points.iter().enumerate() {
            if pt.pos == pivot {
                return Err(Error::PivotOnPoint(i));
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if orientation(&pivot, &points[i].pos, &points[j].pos) == Orientation::Collinear {
                    return Err(Error::CollinearWithPivot(i, j));
                }
            }
        }
        let reference = Pos::new(pivot.x() + &Coord::integer(1), pivot.y().clone());
        let cmp = ClockwiseFrom { pivot: &pivot, reference: &reference };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&a, &b| cmp.compare(&points[a].pos, &points[b].pos));

        // rotate so the sequence starts at a blob boundary
        if let Some(start) = (0..n).find(|&i| points[order[i]].color != points[order[(i + n - 1) % n]].color) {
            order.rotate_left(start);
        }
        let mut rank = vec![0; n];
        for (r, &i) in order.iter().enumerate() {
            rank[i] = r;
        }
        let mut blobs: Vec<Blob> = Vec::new();
        for &i in &order {
            match blobs.last_mut() {
                Some(b) if b.color == points[i].color => b.points.push(i),
                _ => blobs.push(Blob { id: blobs.len(), color: points[i].color, points: vec![i] }),
            }
        }
        let mut blob_of = vec![0; n];
        for b in &blobs {
            for &i in &b.points {
                blob_of[i] = b.id;
            }
        }
        let hulls = blobs
            .iter()
            .map(|b| {
                let refs: Vec<&Pos> = b.points.iter().map(|&i| &points[i].pos).collect();
                ConvexHull::from_refs(&refs)
            })
            .collect();
        Ok(RadialOrder { pivot, points, order, rank, blobs, blob_of, hulls })
    }

    pub fn pivot(&self) -> &Pos {
        &self.pivot
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn pos(&self, i: usize) -> &Pos {
        &self.points[i].pos
    }

    pub fn color(&self, i: usize) -> Color {
        self.points[i].color
    }

    /// Point indices, clockwise.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn rank(&self, point: usize) -> usize {
        self.rank[point]
    }

    pub fn blobs(&self) -> &[Blob] {
        &self.blobs
    }

    pub fn blob(&self, id: usize) -> &Blob {
        &self.blobs[id]
    }

    pub fn blob_of(&self, point: usize) -> usize {
        self.blob_of[point]
    }

    pub fn hull(&self, blob: usize) -> &ConvexHull {
        &self.hulls[blob]
    }

    pub fn num_blobs(&self) -> usize {
        self.blobs.len()
    }

    /// Number of blobs of each color (the counts are always equal when both
    /// colors are present).
    pub fn blobs_per_color(&self) -> usize {
        if self.blobs.len() == 1 {
            1
        } else {
            self.blobs.len() / 2
        }
    }

    pub fn has_both_colors(&self) -> bool {
        self.blobs.len() >= 2
    }

    pub fn next_blob(&self, b: usize) -> usize {
        (b + 1) % self.blobs.len()
    }

    pub fn prev_blob(&self, b: usize) -> usize {
        (b + self.blobs.len() - 1) % self.blobs.len()
    }

    pub fn next_same(&self, b: usize) -> usize {
        (b + 2) % self.blobs.len()
    }

    pub fn prev_same(&self, b: usize) -> usize {
        (b + 2 * self.blobs.len() - 2) % self.blobs.len()
    }

    /// The cyclic slice from `xi` to `xj`, inclusive.
    pub fn interval(&self, xi: usize, xj: usize) -> Vec<usize> {
        let n = self.order.len();
        let (i, j) = (self.rank[xi], self.rank[xj]);
        let len = (j + n - i) % n + 1;
        (0..len).map(|k| self.order[(i + k) % n]).collect()
    }

    /// Whether position `z` (not one of the points) would be inserted into
    /// the interval from point `from` to point `to`.
    pub fn lies_between(&self, z: &Pos, from: usize, to: usize) -> bool {
        let cmp = ClockwiseFrom { pivot: &self.pivot, reference: self.pos(from) };
        cmp.compare(z, self.pos(to)) != Ordering::Greater
    }

    /// The same order with the color classes exchanged.
    pub fn color_swapped(&self) -> RadialOrder {
        let points = self
            .points
            .iter()
            .map(|p| Point::new(p.pos.clone(), p.color.other()))
            .collect();
        let mut out = self.clone();
        out.points = points;
        for b in &mut out.blobs {
            b.color = b.color.other();
        }
        out
    }
}

fn expect_pair(order: &RadialOrder, x1: usize, x2: usize, color: Color) -> Result<()> {
    let k = order.num_blobs();
    if x1 >= k || x2 >= k {
        return Err(Error::InvalidBlobPair(format!("blob index out of range ({x1}, {x2})")));
    }
    if k == 1 {
        return Err(Error::InvalidBlobPair(format!("no {} blob", color.other())));
    }
    if k == 2 {
        return Err(Error::InvalidBlobPair(format!("only one {color} blob")));
    }
    if order.blob(x1).color != color || order.blob(x2).color != color {
        return Err(Error::InvalidBlobPair(format!("blobs {x1}, {x2} are not both {color}")));
    }
    if order.next_same(x1) != x2 {
        return Err(Error::InvalidBlobPair(format!("blob {x2} does not follow blob {x1}")));
    }
    Ok(())
}

/// Red monster-jump from `r1` to the next red blob `r2`.
pub fn detect_red_monster_jump(order: &RadialOrder, r1: usize, r2: usize) -> Result<bool> {
    expect_pair(order, r1, r2, Color::Red)?;
    let red1 = order.blob(r1);
    let Some(second) = red1.second() else {
        return Ok(false);
    };
    if angle_less_than_pi(order.pivot(), order.pos(second), order.pos(order.blob(r2).first()))? {
        return Ok(false);
    }
    let b1 = order.blob(order.prev_blob(r1));
    let b2 = order.blob(order.next_blob(r1));
    Ok(order.hull(r1).intersects_segment(order.pos(b1.last()), order.pos(b2.first())))
}

/// Blue monster-jump from `b1` to the next blue blob `b2`.
pub fn detect_blue_monster_jump(order: &RadialOrder, b1: usize, b2: usize) -> Result<bool> {
    expect_pair(order, b1, b2, Color::Blue)?;
    let blue2 = order.blob(b2);
    let Some(second_to_last) = blue2.second_to_last() else {
        return Ok(false);
    };
    if angle_less_than_pi(order.pivot(), order.pos(order.blob(b1).last()), order.pos(second_to_last))? {
        return Ok(false);
    }
    let r1 = order.blob(order.next_blob(b1));
    let r2 = order.blob(order.next_blob(b2));
    Ok(order.hull(b2).intersects_segment(order.pos(r1.last()), order.pos(r2.first())))
}

/// Every consecutive same-color blob pair that forms a monster-jump.
pub fn monster_jumps(order: &RadialOrder) -> Vec<(Color, usize, usize)> {
    if order.num_blobs() < 4 {
        return Vec::new();
    }
    let mut found = Vec::new();
    for b in order.blobs() {
        let next = order.next_same(b.id);
        let hit = match b.color {
            Color::Red => detect_red_monster_jump(order, b.id, next),
            Color::Blue => detect_blue_monster_jump(order, b.id, next),
        };
        if hit.unwrap_or(false) {
            found.push((b.color, b.id, next));
        }
    }
    found
}

pub fn has_any_monster_jump(order: &RadialOrder) -> bool {
    !monster_jumps(order).is_empty()
}

/// First blob whose gap to the next blob of its color is not below π.
pub fn first_gap_violation(order: &RadialOrder) -> Option<usize> {
    if !order.has_both_colors() {
        return Some(0);
    }
    order.blobs().iter().map(|b| b.id).find(|&b| {
        let next = order.blob(order.next_same(b));
        let last = order.pos(order.blob(b).last());
        !angle_less_than_pi(order.pivot(), last, order.pos(next.first())).unwrap_or(false)
    })
}

/// For every blob, the clockwise angle from its last point to the first
/// point of the next blob of the same color is below π.
pub fn gap_angles_ok(order: &RadialOrder) -> bool {
    first_gap_violation(order).is_none()
}
