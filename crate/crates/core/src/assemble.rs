//! From a forcing-free jump configuration to the two spanning cycles, and
//! the end-to-end `solve` pipeline.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{in_general_position, Color, DirectedLine, Point, Pos};
use crate::jump::{canonical_config, repair, JumpConfiguration, RepairLog};
use crate::paths::{close_single_blob, spanning_path};
use crate::pivot::{choose_pivot, classify_hulls, swap_colors, HullRelation, PivotCandidate, PivotChoice};
use crate::radial::RadialOrder;
use crate::verify::{check, CrossingReport};

/// Largest number of opposite-color edges allowed to cross any edge.
pub const CROSSING_BOUND: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceBlob {
    pub color: Color,
    pub points: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEdge {
    pub color: Color,
    pub from: usize,
    pub to: usize,
}

/// Intermediate structure behind a solution, for rendering.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Trace {
    pub pivot: Option<Pos>,
    /// Blobs in clockwise order around the pivot.
    pub blobs: Vec<TraceBlob>,
    pub jump_edges: Vec<TraceEdge>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub relation: Option<HullRelation>,
    pub pivot: Option<PivotCandidate>,
    pub colors_swapped: bool,
    pub repair: Option<RepairLog>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclePair {
    pub red_cycle: Vec<usize>,
    pub blue_cycle: Vec<usize>,
    pub provenance: Provenance,
    pub crossings: CrossingReport,
    pub trace: Trace,
}

impl CyclePair {
    fn remap(&mut self, map: &[usize]) {
        let apply = |v: &mut Vec<usize>| v.iter_mut().for_each(|i| *i = map[*i]);
        apply(&mut self.red_cycle);
        apply(&mut self.blue_cycle);
        for b in &mut self.trace.blobs {
            apply(&mut b.points);
        }
        for e in &mut self.trace.jump_edges {
            e.from = map[e.from];
            e.to = map[e.to];
        }
    }

    fn swap_colors(&mut self) {
        std::mem::swap(&mut self.red_cycle, &mut self.blue_cycle);
        for b in &mut self.trace.blobs {
            b.color = b.color.other();
        }
        for e in &mut self.trace.jump_edges {
            e.color = e.color.other();
        }
    }
}

fn verified(points: &[Point], red_cycle: Vec<usize>, blue_cycle: Vec<usize>, trace: Trace) -> Result<CyclePair> {
    let crossings = check(points, &red_cycle, &blue_cycle);
    if !crossings.is_valid(CROSSING_BOUND) {
        return Err(Error::InternalInvariantViolation(format!(
            "assembled cycles fail verification (max crossings {}, {} self-intersections, spanning {}/{})",
            crossings.max_count,
            crossings.self_intersections.len(),
            crossings.red_spanning,
            crossings.blue_spanning
        )));
    }
    Ok(CyclePair { red_cycle, blue_cycle, provenance: Provenance::default(), crossings, trace })
}

fn color_cycle(points: &[Point], color: Color) -> Result<Vec<usize>> {
    let idx: Vec<usize> = (0..points.len()).filter(|&i| points[i].color == color).collect();
    let pos: Vec<Pos> = idx.iter().map(|&i| points[i].pos.clone()).collect();
    Ok(close_single_blob(&pos)?.into_iter().map(|j| idx[j]).collect())
}

/// Cycles through the blob paths, joined by the configuration's jump
/// edges. Indices refer to `order.points()`.
pub fn assemble(order: &RadialOrder, config: &JumpConfiguration) -> Result<CyclePair> {
    let points = order.points();
    let mut trace = Trace {
        pivot: Some(order.pivot().clone()),
        blobs: order.blobs().iter().map(|b| TraceBlob { color: b.color, points: b.points.clone() }).collect(),
        jump_edges: config.edges().iter().map(|e| TraceEdge { color: e.color, from: e.src, to: e.dst }).collect(),
    };
    if config.is_empty() {
        let red = color_cycle(points, Color::Red)?;
        let blue = color_cycle(points, Color::Blue)?;
        trace.jump_edges.clear();
        return verified(points, red, blue, trace);
    }
    let mut red = Vec::new();
    let mut blue = Vec::new();
    for blob in order.blobs() {
        let entry = config.entry(order, blob.id);
        let exit = config.exit(blob.id);
        let local: Vec<Pos> = blob.points.iter().map(|&i| order.pos(i).clone()).collect();
        let at = |g: usize| blob.points.iter().position(|&i| i == g).expect("jump endpoint inside its blob");
        // the one jump edge that may pass over this blob
        let w = order.prev_blob(blob.id);
        let y = order.next_blob(blob.id);
        let ell = DirectedLine::new(order.pos(config.exit(w)).clone(), order.pos(config.entry(order, y)).clone())?;
        let path = spanning_path(&local, at(entry), at(exit), &ell)?;
        let target = if blob.color == Color::Red { &mut red } else { &mut blue };
        target.extend(path.vertices.iter().map(|&j| blob.points[j]));
    }
    verified(points, red, blue, trace)
}

/// Independent polygonizations of the two color classes; valid when their
/// hulls are disjoint.
pub fn assemble_disjoint(points: &[Point]) -> Result<CyclePair> {
    let relation = classify_hulls(points)?;
    if relation != HullRelation::Disjoint {
        return Err(Error::Input(format!("hulls are not disjoint ({relation:?})")));
    }
    let red = color_cycle(points, Color::Red)?;
    let blue = color_cycle(points, Color::Blue)?;
    let mut pair = verified(points, red, blue, Trace::default())?;
    pair.provenance.relation = Some(relation);
    Ok(pair)
}

pub fn validate_input(points: &[Point]) -> Result<()> {
    for color in [Color::Red, Color::Blue] {
        let n = points.iter().filter(|p| p.color == color).count();
        if n < 3 {
            return Err(Error::Input(format!("{n} {color} points, need at least 3")));
        }
    }
    let pos: Vec<Pos> = points.iter().map(|p| p.pos.clone()).collect();
    if let Err((i, j, k)) = in_general_position(&pos) {
        return Err(Error::Input(format!("points {i}, {j}, {k} are not in general position")));
    }
    Ok(())
}

/// The full pipeline. Cycle indices refer to `points`.
pub fn solve(points: &[Point]) -> Result<CyclePair> {
    validate_input(points)?;
    let mut perm: Vec<usize> = (0..points.len()).collect();
    perm.sort_by(|&a, &b| points[a].pos.cmp(&points[b].pos));
    let sorted: Vec<Point> = perm.iter().map(|&i| points[i].clone()).collect();
    let relation = classify_hulls(&sorted)?;
    let mut pair = match choose_pivot(&sorted)? {
        PivotChoice::Disjoint => assemble_disjoint(&sorted)?,
        PivotChoice::Pivot(candidate) => {
            let working = if candidate.colors_swapped { swap_colors(&sorted) } else { sorted.clone() };
            let order = RadialOrder::new(working, candidate.p.clone())?;
            let config = canonical_config(&order)?;
            let repaired = repair(&config, &order)?;
            let mut pair = assemble(&order, &repaired.config)?;
            if candidate.colors_swapped {
                pair.swap_colors();
            }
            pair.provenance.colors_swapped = candidate.colors_swapped;
            pair.provenance.repair = Some(repaired.log);
            pair.provenance.pivot = Some(candidate);
            pair
        }
    };
    pair.provenance.relation = Some(relation);
    pair.remap(&perm);
    pair.crossings = check(points, &pair.red_cycle, &pair.blue_cycle);
    if !pair.crossings.is_valid(CROSSING_BOUND) {
        return Err(Error::InternalInvariantViolation("solution fails verification on the input points".into()));
    }
    Ok(pair)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Color::{Blue, Red};
    use crate::jump::find_4_forcings;
    use crate::radial::radial_order;

    fn pt(x: i64, y: i64, c: Color) -> Point {
        Point::int(x, y, c)
    }

    fn hexagon() -> Vec<Point> {
        let dirs = [(7, 0), (4, 6), (-3, 7), (-7, 1), (-5, -6), (4, -7)];
        let colors = [Red, Blue, Red, Blue, Red, Blue];
        dirs.iter().zip(colors).map(|(&(x, y), c)| pt(x, y, c)).collect()
    }

    #[test]
    fn hexagon_assembles_into_two_triangles() {
        let ord = radial_order(&hexagon(), &Pos::int(0, 0)).unwrap();
        let cfg = canonical_config(&ord).unwrap();
        let pair = assemble(&ord, &cfg).unwrap();
        assert_eq!(pair.red_cycle.len(), 3);
        assert_eq!(pair.blue_cycle.len(), 3);
        assert!(pair.crossings.per_edge_counts.iter().all(|e| e.crossings == 2));
    }

    #[test]
    fn blobs_of_three() {
        // four blobs of three points, alternating colors, each on a short arc
        let pts = vec![
            pt(20, 2, Red),
            pt(19, -4, Red),
            pt(17, -9, Red),
            pt(9, -18, Blue),
            pt(3, -19, Blue),
            pt(-2, -21, Blue),
            pt(-20, -3, Red),
            pt(-19, 5, Red),
            pt(-16, 10, Red),
            pt(-8, 19, Blue),
            pt(-1, 20, Blue),
            pt(5, 18, Blue),
        ];
        let ord = radial_order(&pts, &Pos::int(0, 0)).unwrap();
        assert_eq!(ord.num_blobs(), 4);
        let cfg = repair(&canonical_config(&ord).unwrap(), &ord).unwrap().config;
        assert!(find_4_forcings(&cfg, &ord).unwrap().is_empty());
        let pair = assemble(&ord, &cfg).unwrap();
        assert!(pair.crossings.max_count <= 3);
    }

    #[test]
    fn disjoint_triangles() {
        let pts = vec![pt(0, 0, Red), pt(2, 0, Red), pt(1, 2, Red), pt(10, 1, Blue), pt(13, 2, Blue), pt(11, 4, Blue)];
        let pair = assemble_disjoint(&pts).unwrap();
        assert_eq!(pair.crossings.max_count, 0);
        let solved = solve(&pts).unwrap();
        assert_eq!(solved.provenance.relation, Some(HullRelation::Disjoint));
        assert!(solved.provenance.pivot.is_none());
        assert!(assemble_disjoint(&hexagon()).is_err());
    }

    #[test]
    fn solve_hexagon() {
        let pair = solve(&hexagon()).unwrap();
        assert_eq!(pair.crossings.max_count, 2);
        assert!(pair.red_cycle.iter().all(|&i| hexagon()[i].color == Red));
    }

    #[test]
    fn solve_rejects_bad_input() {
        let few = vec![pt(0, 0, Red), pt(2, 0, Red), pt(10, 0, Blue), pt(12, 1, Blue), pt(11, 3, Blue)];
        assert!(matches!(solve(&few), Err(Error::Input(_))));
        let collinear = vec![pt(0, 0, Red), pt(1, 1, Red), pt(2, 2, Red), pt(10, 0, Blue), pt(12, 1, Blue), pt(11, 3, Blue)];
        assert!(matches!(solve(&collinear), Err(Error::Input(_))));
    }

    #[test]
    fn solve_is_independent_of_input_order() {
        let pts = vec![
            pt(0, 0, Red),
            pt(9, 1, Red),
            pt(4, 8, Red),
            pt(6, 3, Red),
            pt(2, 5, Blue),
            pt(11, 6, Blue),
            pt(7, -3, Blue),
            pt(-2, 3, Blue),
        ];
        let a = solve(&pts).unwrap();
        let mut rev = pts.clone();
        rev.reverse();
        let b = solve(&rev).unwrap();
        let n = pts.len();
        let back: Vec<usize> = b.red_cycle.iter().map(|&i| n - 1 - i).collect();
        assert_eq!(a.red_cycle, back);
        assert_eq!(a.provenance.pivot, b.provenance.pivot);
    }
}
