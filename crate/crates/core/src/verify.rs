//! Independent checking of cycle pairs and brute-force oracles for small
//! instances. Everything here is written against the raw segment
//! predicates only.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{on_segment, orientation, segments_cross, segments_intersect, Color, DirectedLine, Orientation, Point, Pos};

/// Largest color class accepted by [`oracle_best_k`].
pub const BEST_K_LIMIT: usize = 7;
/// Largest point set accepted by [`oracle_spanning_paths`].
pub const PATH_ORACLE_LIMIT: usize = 9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeCount {
    pub color: Color,
    /// Position of the edge in its cycle: from `cycle[i]` to `cycle[i+1]`.
    pub index: usize,
    pub from: usize,
    pub to: usize,
    pub crossings: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfIntersection {
    pub color: Color,
    pub first_edge: usize,
    pub second_edge: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingReport {
    pub per_edge_counts: Vec<EdgeCount>,
    pub max_count: usize,
    pub self_intersections: Vec<SelfIntersection>,
    pub red_spanning: bool,
    pub blue_spanning: bool,
}

impl CrossingReport {
    pub fn spanning_ok(&self) -> bool {
        self.red_spanning && self.blue_spanning
    }

    pub fn is_valid(&self, bound: usize) -> bool {
        self.spanning_ok() && self.self_intersections.is_empty() && self.max_count <= bound
    }
}

fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    let n = cycle.len();
    match n {
        0 | 1 => Vec::new(),
        2 => vec![(cycle[0], cycle[1])],
        _ => (0..n).map(|i| (cycle[i], cycle[(i + 1) % n])).collect(),
    }
}

fn spanning(points: &[Point], cycle: &[usize], color: Color) -> bool {
    let mut seen = vec![false; points.len()];
    for &i in cycle {
        if i >= points.len() || seen[i] || points[i].color != color {
            return false;
        }
        seen[i] = true;
    }
    let expected = points.iter().filter(|p| p.color == color).count();
    cycle.len() == expected && expected >= 3
}

/// Pairs of edges of a closed polygon that meet anywhere other than a
/// shared endpoint.
pub fn polygon_self_intersections(points: &[Pos], cycle: &[usize]) -> Vec<(usize, usize)> {
    pairwise_conflicts(points, &cycle_edges(cycle), true)
}

/// Same for an open path.
pub fn path_self_intersections(points: &[Pos], path: &[usize]) -> Vec<(usize, usize)> {
    let edges: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
    pairwise_conflicts(points, &edges, false)
}

fn pairwise_conflicts(points: &[Pos], edges: &[(usize, usize)], closed: bool) -> Vec<(usize, usize)> {
    let m = edges.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let adjacent = j == i + 1 || (closed && m > 2 && i == 0 && j == m - 1);
            let (pa, pb, pc, pd) = (&points[a], &points[b], &points[c], &points[d]);
            let bad = if adjacent {
                // shared vertex; anything more means a collinear fold-back
                let (shared, x, y) = if b == c { (pb, pa, pd) } else { (pa, pb, pc) };
                orientation(x, shared, y) == Orientation::Collinear
                    && (on_segment(x, shared, y) || on_segment(y, shared, x))
            } else {
                segments_intersect(pa, pb, pc, pd)
            };
            if bad {
                out.push((i, j));
            }
        }
    }
    out
}

fn crossing_or_overlap(a: &Pos, b: &Pos, c: &Pos, d: &Pos) -> bool {
    // a collinear overlap is counted as a crossing so it can never hide
    segments_cross(a, b, c, d).unwrap_or(true)
}

/// Verifies spanning, simplicity and per-edge crossing counts of a red and
/// a blue cycle given as indices into `points`.
pub fn check(points: &[Point], red_cycle: &[usize], blue_cycle: &[usize]) -> CrossingReport {
    let red_spanning = spanning(points, red_cycle, Color::Red);
    let blue_spanning = spanning(points, blue_cycle, Color::Blue);
    let pos: Vec<Pos> = points.iter().map(|p| p.pos.clone()).collect();
    let in_range = |c: &[usize]| c.iter().all(|&i| i < points.len());
    if !in_range(red_cycle) || !in_range(blue_cycle) {
        return CrossingReport {
            per_edge_counts: Vec::new(),
            max_count: 0,
            self_intersections: Vec::new(),
            red_spanning,
            blue_spanning,
        };
    }
    let red = cycle_edges(red_cycle);
    let blue = cycle_edges(blue_cycle);
    let mut red_counts = vec![0usize; red.len()];
    let mut blue_counts = vec![0usize; blue.len()];
    for (i, &(a, b)) in red.iter().enumerate() {
        for (j, &(c, d)) in blue.iter().enumerate() {
            if crossing_or_overlap(&pos[a], &pos[b], &pos[c], &pos[d]) {
                red_counts[i] += 1;
                blue_counts[j] += 1;
            }
        }
    }
    let mut per_edge_counts = Vec::with_capacity(red.len() + blue.len());
    for (color, edges, counts) in [(Color::Red, &red, &red_counts), (Color::Blue, &blue, &blue_counts)] {
        for (index, (&(from, to), &crossings)) in edges.iter().zip(counts.iter()).enumerate() {
            per_edge_counts.push(EdgeCount { color, index, from, to, crossings });
        }
    }
    let max_count = per_edge_counts.iter().map(|e| e.crossings).max().unwrap_or(0);
    let mut self_intersections = Vec::new();
    for (color, cycle) in [(Color::Red, red_cycle), (Color::Blue, blue_cycle)] {
        for (first_edge, second_edge) in polygon_self_intersections(&pos, cycle) {
            self_intersections.push(SelfIntersection { color, first_edge, second_edge });
        }
    }
    CrossingReport { per_edge_counts, max_count, self_intersections, red_spanning, blue_spanning }
}

/// Simple paths through all of `n` vertices, starting at `start` and, if
/// given, ending at `end`. `conflict[e][f]` says whether edges `e` and `f`
/// (indexed by [`edge_id`]) meet improperly; adjacency is handled by the
/// caller's construction. The callback sees each complete path.
fn for_each_simple_path(
    n: usize,
    start: usize,
    end: Option<usize>,
    conflict: &[Vec<bool>],
    visit: &mut dyn FnMut(&[usize]),
) {
    fn rec(
        n: usize,
        end: Option<usize>,
        conflict: &[Vec<bool>],
        path: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if path.len() == n {
            visit(path);
            return;
        }
        let last = *path.last().unwrap();
        for v in 0..n {
            if used[v] {
                continue;
            }
            if let Some(e) = end {
                // the fixed end vertex goes last
                if v == e && path.len() + 1 != n {
                    continue;
                }
            }
            let new_edge = edge_id(n, last, v);
            let len = path.len();
            // non-adjacent earlier edges: all but the one ending at `last`
            let clash = (0..len.saturating_sub(2)).any(|i| conflict[new_edge][edge_id(n, path[i], path[i + 1])]);
            if clash {
                continue;
            }
            used[v] = true;
            path.push(v);
            rec(n, end, conflict, path, used, visit);
            path.pop();
            used[v] = false;
        }
    }
    let mut used = vec![false; n];
    used[start] = true;
    let mut path = vec![start];
    rec(n, end, conflict, &mut path, &mut used, visit);
}

fn edge_id(n: usize, a: usize, b: usize) -> usize {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    lo * n + hi
}

fn conflict_matrix(points: &[Pos]) -> Vec<Vec<bool>> {
    let n = points.len();
    let mut m = vec![vec![false; n * n]; n * n];
    for a in 0..n {
        for b in a + 1..n {
            for c in 0..n {
                for d in c + 1..n {
                    let shares = a == c || a == d || b == c || b == d;
                    let bad = if shares {
                        false
                    } else {
                        segments_intersect(&points[a], &points[b], &points[c], &points[d])
                    };
                    m[edge_id(n, a, b)][edge_id(n, c, d)] = bad;
                }
            }
        }
    }
    m
}

/// All simple polygons through every point, each listed once (fixed first
/// vertex, one traversal direction).
pub fn simple_polygonizations(points: &[Pos]) -> Vec<Vec<usize>> {
    let n = points.len();
    if n < 3 {
        return Vec::new();
    }
    let conflict = conflict_matrix(points);
    let mut out = Vec::new();
    for_each_simple_path(n, 0, None, &conflict, &mut |path| {
        if path[1] > path[n - 1] {
            return;
        }
        let closing = edge_id(n, path[n - 1], 0);
        // the closing edge is adjacent to the first and last path edges
        let clash = (1..n - 2).any(|i| conflict[closing][edge_id(n, path[i], path[i + 1])]);
        if !clash {
            out.push(path.to_vec());
        }
    });
    out
}

/// Smallest achievable maximum per-edge crossing count over all pairs of
/// simple red and blue spanning cycles.
pub fn oracle_best_k(points: &[Point]) -> Result<usize> {
    let red: Vec<Pos> = points.iter().filter(|p| p.color == Color::Red).map(|p| p.pos.clone()).collect();
    let blue: Vec<Pos> = points.iter().filter(|p| p.color == Color::Blue).map(|p| p.pos.clone()).collect();
    for (name, set) in [("red", &red), ("blue", &blue)] {
        if set.len() > BEST_K_LIMIT {
            return Err(Error::SizeLimit(format!("{} {name} points (limit {BEST_K_LIMIT})", set.len())));
        }
        if set.len() < 3 {
            return Err(Error::Input(format!("{} {name} points, need at least 3", set.len())));
        }
    }
    let (nr, nb) = (red.len(), blue.len());
    let mut crosses = vec![vec![false; nb * nb]; nr * nr];
    for a in 0..nr {
        for b in a + 1..nr {
            for c in 0..nb {
                for d in c + 1..nb {
                    crosses[edge_id(nr, a, b)][edge_id(nb, c, d)] = crossing_or_overlap(&red[a], &red[b], &blue[c], &blue[d]);
                }
            }
        }
    }
    let edges_of = |cycle: &[usize], n: usize| -> Vec<usize> {
        (0..cycle.len()).map(|i| edge_id(n, cycle[i], cycle[(i + 1) % cycle.len()])).collect()
    };
    let red_polys: Vec<Vec<usize>> = simple_polygonizations(&red).iter().map(|c| edges_of(c, nr)).collect();
    let blue_polys: Vec<Vec<usize>> = simple_polygonizations(&blue).iter().map(|c| edges_of(c, nb)).collect();
    if red_polys.is_empty() || blue_polys.is_empty() {
        return Err(Error::InternalInvariantViolation("no simple polygonization found".into()));
    }
    let mut best = usize::MAX;
    let mut blue_counts = vec![0usize; nb];
    'pairs: for rp in &red_polys {
        for bp in &blue_polys {
            let mut worst = 0;
            blue_counts.iter_mut().for_each(|c| *c = 0);
            for &re in rp {
                let mut count = 0;
                for (j, &be) in bp.iter().enumerate() {
                    if crosses[re][be] {
                        count += 1;
                        blue_counts[j] += 1;
                    }
                }
                worst = worst.max(count);
                if worst >= best {
                    break;
                }
            }
            if worst >= best {
                continue;
            }
            worst = worst.max(blue_counts.iter().copied().max().unwrap_or(0));
            if worst < best {
                best = worst;
                if best == 0 {
                    break 'pairs;
                }
            }
        }
    }
    Ok(best)
}

/// Number of edges of `path` whose endpoints lie strictly on opposite sides
/// of `ell`.
pub fn line_crossings(points: &[Pos], path: &[usize], ell: &DirectedLine) -> usize {
    path.windows(2)
        .filter(|w| {
            let s = ell.side(&points[w[0]]);
            let t = ell.side(&points[w[1]]);
            s != Orientation::Collinear && t != Orientation::Collinear && s != t
        })
        .count()
}

/// Minimum number of crossings with `ell` over all simple spanning paths
/// of `points` from `x` to `y`, together with one path attaining it.
pub fn oracle_spanning_paths(points: &[Pos], x: usize, y: usize, ell: &DirectedLine) -> Result<(usize, Vec<usize>)> {
    let n = points.len();
    if n > PATH_ORACLE_LIMIT {
        return Err(Error::SizeLimit(format!("{n} points (limit {PATH_ORACLE_LIMIT})")));
    }
    if x >= n || y >= n {
        return Err(Error::PathRequest("endpoint out of range".into()));
    }
    if n == 1 {
        return Ok((0, vec![x]));
    }
    if x == y {
        return Err(Error::PathRequest("endpoints coincide".into()));
    }
    let conflict = conflict_matrix(points);
    let mut best: Option<(usize, Vec<usize>)> = None;
    for_each_simple_path(n, x, Some(y), &conflict, &mut |path| {
        let c = line_crossings(points, path, ell);
        if best.as_ref().is_none_or(|(b, _)| c < *b) {
            best = Some((c, path.to_vec()));
        }
    });
    best.ok_or_else(|| Error::InternalInvariantViolation("no simple spanning path".into()))
}
