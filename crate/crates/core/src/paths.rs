//! Spanning paths inside a blob that cross a given line as few times as
//! the endpoints allow, and a plain polygonization for a whole color class.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geometry::{orientation, ConvexHull, Coord, DirectedLine, Orientation, Pos};
use crate::verify::{line_crossings, polygon_self_intersections};

/// A spanning path of a point set, as indices into that set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlobPath {
    pub vertices: Vec<usize>,
}

impl BlobPath {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths are never empty")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn crossings(&self, points: &[Pos], ell: &DirectedLine) -> usize {
        line_crossings(points, &self.vertices, ell)
    }
}

/// Fewest crossings of `ell` by a simple spanning path from `x` to `y`: 0 when all
/// points are on one side, 1 when the endpoints are split, 2 otherwise.
pub fn predicted_crossings(points: &[Pos], x: usize, y: usize, ell: &DirectedLine) -> usize {
    let sx = ell.side(&points[x]);
    let sy = ell.side(&points[y]);
    if sx != sy {
        1
    } else if points.iter().all(|p| ell.side(p) == sx) {
        0
    } else {
        2
    }
}

fn dot(a: &Pos, o: &Pos, b: &Pos) -> Coord {
    let (ax, ay) = a.sub(o);
    let (bx, by) = b.sub(o);
    &(&ax * &bx) + &(&ay * &by)
}

/// Compares the unsigned angles `∠(u, o, target)` and `∠(v, o, target)`.
fn compare_angle_to(o: &Pos, target: &Pos, u: &Pos, v: &Pos) -> Ordering {
    // cos θ = dot / (|w||t|); the common |t| cancels, so compare
    // dot_u / |u| against dot_v / |v| through signs and squares
    let du = dot(u, o, target);
    let dv = dot(v, o, target);
    let nu = dot(u, o, u);
    let nv = dot(v, o, v);
    let cos_order = match (du.signum(), dv.signum()) {
        (su, sv) if su != sv => su.cmp(&sv),
        (0, 0) => Ordering::Equal,
        (s, _) => {
            let lhs = &(&du * &du) * &nv;
            let rhs = &(&dv * &dv) * &nu;
            let mag = lhs.cmp(&rhs);
            if s > 0 {
                mag
            } else {
                mag.reverse()
            }
        }
    };
    // larger cosine means smaller angle
    cos_order.reverse()
}

/// A non-self-intersecting path through all of `points` from `x` to `y`
/// whose crossings with `ell` match [`predicted_crossings`]. `x` must be a
/// convex hull vertex of the set.
///
/// Each step moves from the current point to a hull vertex of the
/// remaining points that it sees, other than `y`, preferring one on the
/// current point's side of `ell` and then the smallest angle towards `y`.
/// Every later edge stays inside the hull of the remaining points, which
/// the new edge meets only at its far end.
pub fn spanning_path(points: &[Pos], x: usize, y: usize, ell: &DirectedLine) -> Result<BlobPath> {
    let n = points.len();
    if x >= n || y >= n {
        return Err(Error::PathRequest("endpoint out of range".into()));
    }
    if let Some(i) = points.iter().position(|p| ell.side(p) == Orientation::Collinear) {
        return Err(Error::PathRequest(format!("point {i} lies on the line")));
    }
    if n == 1 {
        return Ok(BlobPath { vertices: vec![x] });
    }
    if x == y {
        return Err(Error::PathRequest("endpoints coincide".into()));
    }
    let all: Vec<&Pos> = points.iter().collect();
    if !ConvexHull::from_refs(&all).is_vertex(&points[x]) {
        return Err(Error::PathRequest("start point is not a hull vertex".into()));
    }
    let mut remaining: Vec<usize> = (0..n).filter(|&i| i != x).collect();
    let mut vertices = vec![x];
    let mut cur = x;
    while remaining.len() > 1 {
        let refs: Vec<&Pos> = remaining.iter().map(|&i| &points[i]).collect();
        let hull = ConvexHull::from_refs(&refs);
        let side = ell.side(&points[cur]);
        let mut best: Option<usize> = None;
        for &c in &remaining {
            if c == y || !hull.is_vertex(&points[c]) || !hull.sees(&points[cur], &points[c])? {
                continue;
            }
            best = Some(match best {
                None => c,
                Some(b) => {
                    let c_same = ell.side(&points[c]) == side;
                    let b_same = ell.side(&points[b]) == side;
                    let better = match (c_same, b_same) {
                        (true, false) => true,
                        (false, true) => false,
                        _ => match compare_angle_to(&points[cur], &points[y], &points[c], &points[b]) {
                            Ordering::Less => true,
                            Ordering::Greater => false,
                            Ordering::Equal => c < b,
                        },
                    };
                    if better {
                        c
                    } else {
                        b
                    }
                }
            });
        }
        let next = best.ok_or_else(|| Error::InternalInvariantViolation("no visible hull vertex".into()))?;
        vertices.push(next);
        remaining.retain(|&i| i != next);
        cur = next;
    }
    vertices.push(y);
    Ok(BlobPath { vertices })
}

/// A simple polygon through all of `points`: the others sorted by angle
/// around the lexicographically smallest point.
pub fn close_single_blob(points: &[Pos]) -> Result<Vec<usize>> {
    let n = points.len();
    if n < 3 {
        return Err(Error::Input(format!("{n} points cannot form a cycle")));
    }
    let p0 = (0..n).min_by(|&a, &b| points[a].cmp(&points[b])).unwrap();
    let mut rest: Vec<usize> = (0..n).filter(|&i| i != p0).collect();
    // every other point lies in the half-plane to the right of p0 (or
    // straight above it), so orientation alone is a total order
    rest.sort_by(|&a, &b| match orientation(&points[p0], &points[a], &points[b]) {
        Orientation::Ccw => Ordering::Less,
        Orientation::Cw => Ordering::Greater,
        Orientation::Collinear => points[a].cmp(&points[b]),
    });
    let mut cycle = vec![p0];
    cycle.extend(rest);
    if !polygon_self_intersections(points, &cycle).is_empty() {
        return Err(Error::InternalInvariantViolation("angular polygonization is not simple".into()));
    }
    Ok(cycle)
}
