//! Jump edges between consecutive same-color blobs, configuration checks,
//! 4-forcing detection, and the crossing-reduction repair loop.
//!
//! Edges are confined to one family throughout: a red edge always ends at
//! the first point of its destination blob and a blue edge always starts at
//! the last point of its source blob. Only the other endpoint moves.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{
    angle_at_most_pi, see_each_other_hulls, segments_cross, Color, DirectedLine, Orientation,
};
use crate::radial::{first_gap_violation, RadialOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JumpEdge {
    pub from_blob: usize,
    pub to_blob: usize,
    /// Point index in `from_blob`.
    pub src: usize,
    /// Point index in `to_blob`.
    pub dst: usize,
    pub color: Color,
}

impl JumpEdge {
    fn crosses(&self, other: &JumpEdge, order: &RadialOrder) -> Result<bool> {
        segments_cross(order.pos(self.src), order.pos(self.dst), order.pos(other.src), order.pos(other.dst))
    }

    fn line(&self, order: &RadialOrder) -> DirectedLine {
        DirectedLine { from: order.pos(self.src).clone(), to: order.pos(self.dst).clone() }
    }
}

/// One outgoing jump edge per blob, indexed by source blob. Empty when each
/// color forms a single blob.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct JumpConfiguration {
    edges: Vec<JumpEdge>,
}

impl JumpConfiguration {
    pub fn new(edges: Vec<JumpEdge>) -> Self {
        JumpConfiguration { edges }
    }

    pub fn empty() -> Self {
        JumpConfiguration::default()
    }

    pub fn edges(&self) -> &[JumpEdge] {
        &self.edges
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn outgoing(&self, blob: usize) -> &JumpEdge {
        &self.edges[blob]
    }

    pub fn incoming(&self, order: &RadialOrder, blob: usize) -> &JumpEdge {
        &self.edges[order.prev_same(blob)]
    }

    /// `a_X`: where the incoming edge lands in `blob`.
    pub fn entry(&self, order: &RadialOrder, blob: usize) -> usize {
        self.incoming(order, blob).dst
    }

    /// `b_X`: where the outgoing edge leaves `blob`.
    pub fn exit(&self, blob: usize) -> usize {
        self.edges[blob].src
    }
}

/// For each blob, the edge from its last point to the first point of the
/// next blob of the same color.
pub fn canonical_config(order: &RadialOrder) -> Result<JumpConfiguration> {
    if order.num_blobs() <= 2 {
        return Ok(JumpConfiguration::empty());
    }
    if let Some(b) = first_gap_violation(order) {
        return Err(Error::GapAngle(b));
    }
    let edges = order
        .blobs()
        .iter()
        .map(|b| {
            let to = order.next_same(b.id);
            JumpEdge { from_blob: b.id, to_blob: to, src: b.last(), dst: order.blob(to).first(), color: b.color }
        })
        .collect();
    let config = JumpConfiguration::new(edges);
    let report = validate_config(&config, order);
    if let Some(v) = report.first() {
        return Err(Error::InternalInvariantViolation(format!("canonical configuration: {v}")));
    }
    Ok(config)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Malformed { blob: usize, detail: String },
    NotMutuallyVisible { blob: usize },
    AngleExceedsPi { blob: usize },
    SharedEndpoint { blob: usize },
    SameColorCrossing { first: usize, second: usize },
    CrossingBound { blob: usize, crossings: usize },
    CrossingOutsideWindow { blob: usize, other: usize },
    HullPiercedOutsideWindow { blob: usize, edge: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Malformed { blob, detail } => write!(f, "malformed edge from blob {blob}: {detail}"),
            Violation::NotMutuallyVisible { blob } => {
                write!(f, "edge from blob {blob}: endpoints do not see each other")
            }
            Violation::AngleExceedsPi { blob } => write!(f, "edge from blob {blob}: angle at pivot exceeds pi"),
            Violation::SharedEndpoint { blob } => {
                write!(f, "blob {blob}: incoming and outgoing edges share an endpoint")
            }
            Violation::SameColorCrossing { first, second } => {
                write!(f, "same-color crossing between edges from blobs {first} and {second}")
            }
            Violation::CrossingBound { blob, crossings } => {
                write!(f, "crossing bound: edge from blob {blob} crossed by {crossings} opposite-color edges")
            }
            Violation::CrossingOutsideWindow { blob, other } => {
                write!(f, "edge from blob {blob} crossed by edge from blob {other} outside its window")
            }
            Violation::HullPiercedOutsideWindow { blob, edge } => {
                write!(f, "hull of blob {blob} met by edge from blob {edge} outside its window")
            }
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigReport {
    pub violations: Vec<Violation>,
}

impl ConfigReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

fn structural_check(config: &JumpConfiguration, order: &RadialOrder) -> Vec<Violation> {
    let k = order.num_blobs();
    let mut out = Vec::new();
    if k <= 2 {
        if !config.is_empty() {
            out.push(Violation::Malformed { blob: 0, detail: "expected no edges".into() });
        }
        return out;
    }
    if config.edges.len() != k {
        out.push(Violation::Malformed { blob: 0, detail: format!("{} edges for {k} blobs", config.edges.len()) });
        return out;
    }
    for (i, e) in config.edges.iter().enumerate() {
        let detail = if e.from_blob != i {
            Some("stored under the wrong blob".to_string())
        } else if e.to_blob != order.next_same(i) {
            Some("target is not the next blob of the same color".to_string())
        } else if e.color != order.blob(i).color {
            Some("color mismatch".to_string())
        } else if !order.blob(e.from_blob).contains(e.src) || !order.blob(e.to_blob).contains(e.dst) {
            Some("endpoint outside its blob".to_string())
        } else {
            None
        };
        if let Some(detail) = detail {
            out.push(Violation::Malformed { blob: i, detail });
        }
    }
    out
}

fn edge_is_jump(order: &RadialOrder, e: &JumpEdge) -> Result<(bool, bool)> {
    let visible = match see_each_other_hulls(
        order.pos(e.src),
        order.hull(e.from_blob),
        order.pos(e.dst),
        order.hull(e.to_blob),
    ) {
        Ok(v) => v,
        Err(Error::HullsIntersect) | Err(Error::ObserverInsideHull) => false,
        Err(other) => return Err(other),
    };
    let angle = angle_at_most_pi(order.pivot(), order.pos(e.src), order.pos(e.dst))?;
    Ok((visible, angle))
}

/// Checks every configuration invariant plus the crossing-window bound and
/// the hull-piercing window restriction. Violations are collected, not
/// raised.
pub fn validate_config(config: &JumpConfiguration, order: &RadialOrder) -> ConfigReport {
    let mut violations = structural_check(config, order);
    if !violations.is_empty() || config.is_empty() {
        return ConfigReport { violations };
    }
    let k = order.num_blobs();
    for e in &config.edges {
        match edge_is_jump(order, e) {
            Ok((visible, angle)) => {
                if !visible {
                    violations.push(Violation::NotMutuallyVisible { blob: e.from_blob });
                }
                if !angle {
                    violations.push(Violation::AngleExceedsPi { blob: e.from_blob });
                }
            }
            Err(_) => violations.push(Violation::AngleExceedsPi { blob: e.from_blob }),
        }
    }
    for b in order.blobs() {
        if b.len() > 1 && config.entry(order, b.id) == config.exit(b.id) {
            violations.push(Violation::SharedEndpoint { blob: b.id });
        }
    }
    let crosses = |i: usize, j: usize| config.edges[i].crosses(&config.edges[j], order).unwrap_or(true);
    for i in 0..k {
        for j in i + 1..k {
            if config.edges[i].color == config.edges[j].color && crosses(i, j) {
                violations.push(Violation::SameColorCrossing { first: i, second: j });
            }
        }
    }
    for i in 0..k {
        let window = [order.prev_blob(i), order.next_blob(i)];
        let crossers: Vec<usize> = (0..k)
            .filter(|&j| config.edges[j].color != config.edges[i].color && crosses(i, j))
            .collect();
        if crossers.len() > 2 {
            violations.push(Violation::CrossingBound { blob: i, crossings: crossers.len() });
        }
        for j in crossers {
            if !window.contains(&j) {
                violations.push(Violation::CrossingOutsideWindow { blob: i, other: j });
            }
        }
    }
    for x in 0..k {
        let window = [order.prev_same(x), order.prev_blob(x), x];
        for e in &config.edges {
            if window.contains(&e.from_blob) {
                continue;
            }
            if order.hull(x).intersects_segment(order.pos(e.src), order.pos(e.dst)) {
                violations.push(Violation::HullPiercedOutsideWindow { blob: x, edge: e.from_blob });
            }
        }
    }
    ConfigReport { violations }
}

/// A jump edge `(y1, y2)` over blob `X1` that meets its hull, crosses both
/// edges incident to `X1`, and has both of `X1`'s jump endpoints strictly on
/// one side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourForcing {
    pub center: JumpEdge,
    pub pierced_blob: usize,
    pub incoming: JumpEdge,
    pub outgoing: JumpEdge,
}

fn forcing_at(config: &JumpConfiguration, order: &RadialOrder, x1: usize) -> Result<Option<FourForcing>> {
    let center = config.outgoing(order.prev_blob(x1));
    if !order.hull(x1).intersects_segment(order.pos(center.src), order.pos(center.dst)) {
        return Ok(None);
    }
    let incoming = config.incoming(order, x1);
    let outgoing = config.outgoing(x1);
    if !center.crosses(incoming, order)? || !center.crosses(outgoing, order)? {
        return Ok(None);
    }
    let line = center.line(order);
    let side_a = line.side(order.pos(incoming.dst));
    let side_b = line.side(order.pos(outgoing.src));
    if side_a != side_b || side_a == Orientation::Collinear {
        return Ok(None);
    }
    Ok(Some(FourForcing {
        center: center.clone(),
        pierced_blob: x1,
        incoming: incoming.clone(),
        outgoing: outgoing.clone(),
    }))
}

/// All 4-forcings, in blob order of the pierced blob.
pub fn find_4_forcings(config: &JumpConfiguration, order: &RadialOrder) -> Result<Vec<FourForcing>> {
    if config.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for x in 0..order.num_blobs() {
        if let Some(f) = forcing_at(config, order, x)? {
            out.push(f);
        }
    }
    Ok(out)
}

/// Crossings between the blue edge `B1 → B2` and the red edge leaving the
/// red blob right after `B1`.
pub fn blue_red_crossings(config: &JumpConfiguration, order: &RadialOrder) -> Result<usize> {
    if config.is_empty() {
        return Ok(0);
    }
    let mut count = 0;
    for b in order.blobs().iter().filter(|b| b.color == Color::Blue) {
        let red = config.outgoing(order.next_blob(b.id));
        if config.outgoing(b.id).crosses(red, order)? {
            count += 1;
        }
    }
    Ok(count)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairLog {
    pub iterations: usize,
    /// Center edges moved back to their canonical endpoint.
    pub canonicalized: usize,
    /// Exchanges that removed a blue-red crossing.
    pub exchanges: usize,
    pub initial_blue_red: usize,
    pub final_blue_red: usize,
}

#[derive(Clone, Debug)]
pub struct Repaired {
    pub config: JumpConfiguration,
    pub log: RepairLog,
}

/// Upper bound on repair iterations for `k` blobs.
pub fn repair_bound(k: usize) -> usize {
    4 * k * k
}

/// Removes every 4-forcing by local exchanges. Each iteration takes the
/// first 4-forcing and
///
/// 1. moves the center edge's free endpoint back to its canonical choice
///    (last point of a red source, first point of a blue target); if the
///    4-forcing survives,
/// 2. re-aims the same-color edge that enters (red center) or leaves (blue
///    center) the pierced blob so that it stays on one side of the center.
///
/// Step 1 never adds a blue-red crossing and step 2 always removes one;
/// both facts are checked on every iteration.
pub fn repair(config: &JumpConfiguration, order: &RadialOrder) -> Result<Repaired> {
    let mut cfg = config.clone();
    let mut log = RepairLog::default();
    if cfg.is_empty() {
        return Ok(Repaired { config: cfg, log });
    }
    if let Some(b) = first_gap_violation(order) {
        return Err(Error::GapAngle(b));
    }
    let bound = repair_bound(order.num_blobs());
    let mut crossings = blue_red_crossings(&cfg, order)?;
    log.initial_blue_red = crossings;
    while let Some(forcing) = find_4_forcings(&cfg, order)?.into_iter().next() {
        log.iterations += 1;
        if log.iterations > bound {
            return Err(Error::NonTermination(bound));
        }
        let pierced = forcing.pierced_blob;
        let center_blob = forcing.center.from_blob;
        if canonicalize_center(&mut cfg, order, center_blob)? {
            log.canonicalized += 1;
            let now = blue_red_crossings(&cfg, order)?;
            if now > crossings {
                return Err(Error::InternalInvariantViolation(format!(
                    "canonical center from blob {center_blob} added a blue-red crossing"
                )));
            }
            crossings = now;
            if forcing_at(&cfg, order, pierced)?.is_none() {
                continue;
            }
        }
        exchange(&mut cfg, order, pierced)?;
        log.exchanges += 1;
        let now = blue_red_crossings(&cfg, order)?;
        if now >= crossings {
            return Err(Error::InternalInvariantViolation(format!(
                "exchange at blob {pierced} did not reduce blue-red crossings ({crossings} -> {now})"
            )));
        }
        crossings = now;
    }
    log.final_blue_red = crossings;
    Ok(Repaired { config: cfg, log })
}

/// Resets the free endpoint of the edge leaving `blob`. Returns whether it
/// changed.
fn canonicalize_center(cfg: &mut JumpConfiguration, order: &RadialOrder, blob: usize) -> Result<bool> {
    let mut edge = cfg.outgoing(blob).clone();
    match edge.color {
        Color::Red => {
            let last = order.blob(edge.from_blob).last();
            if edge.src == last {
                return Ok(false);
            }
            edge.src = last;
        }
        Color::Blue => {
            let first = order.blob(edge.to_blob).first();
            if edge.dst == first {
                return Ok(false);
            }
            edge.dst = first;
        }
    }
    if !admissible(cfg, order, &edge)? {
        return Err(Error::RepairStalled(format!("canonical edge from blob {blob} is not admissible")));
    }
    cfg.edges[blob] = edge;
    Ok(true)
}

/// Whether `edge` may replace the stored edge from its source blob while
/// keeping the configuration valid.
fn admissible(cfg: &JumpConfiguration, order: &RadialOrder, edge: &JumpEdge) -> Result<bool> {
    let (visible, angle) = edge_is_jump(order, edge)?;
    if !visible || !angle {
        return Ok(false);
    }
    let from = order.blob(edge.from_blob);
    if from.len() > 1 && edge.src == cfg.entry(order, edge.from_blob) {
        return Ok(false);
    }
    let to = order.blob(edge.to_blob);
    if to.len() > 1 && edge.dst == cfg.exit(edge.to_blob) {
        return Ok(false);
    }
    for other in &cfg.edges {
        if other.from_blob != edge.from_blob && other.color == edge.color && edge.crosses(other, order)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn exchange(cfg: &mut JumpConfiguration, order: &RadialOrder, pierced: usize) -> Result<()> {
    let center = cfg.outgoing(order.prev_blob(pierced)).clone();
    let line = center.line(order);
    let blob = order.blob(pierced);
    let (slot, fixed, candidates): (usize, usize, Vec<usize>) = match center.color {
        // blue pierced blob: re-aim the blue edge entering it
        Color::Red => {
            let slot = order.prev_same(pierced);
            (slot, cfg.outgoing(slot).src, blob.points.clone())
        }
        // red pierced blob: re-aim the red edge leaving it
        Color::Blue => (pierced, cfg.outgoing(pierced).dst, blob.points.iter().rev().copied().collect()),
    };
    let side = line.side(order.pos(fixed));
    for c in candidates {
        if line.side(order.pos(c)) != side {
            continue;
        }
        let mut edge = cfg.outgoing(slot).clone();
        match center.color {
            Color::Red => edge.dst = c,
            Color::Blue => edge.src = c,
        }
        if admissible(cfg, order, &edge)? {
            cfg.edges[slot] = edge;
            return Ok(());
        }
    }
    Err(Error::RepairStalled(format!("no admissible re-aim inside blob {pierced}")))
}
