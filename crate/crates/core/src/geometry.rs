//! Exact planar predicates over rational coordinates.
//!
//! Every sign test reduces to [`orientation`], which is evaluated exactly on
//! homogeneous integer coordinates. There is no floating point anywhere in
//! this module.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An exact rational coordinate, always in lowest terms with a positive
/// denominator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coord(BigRational);

impl Coord {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(Coord(BigRational::new(numer.into(), denom)))
    }

    pub fn integer(v: i64) -> Self {
        Coord(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero() -> Self {
        Coord(BigRational::zero())
    }

    pub fn from_rational(r: BigRational) -> Self {
        Coord(r)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn halved(&self) -> Self {
        Coord(&self.0 / BigRational::from_integer(BigInt::from(2)))
    }

    /// Lossy conversion, for rendering only.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Coord {
    type Err = Error;

    /// Accepts `"num/den"`, plain integers and finite decimals such as `"-0.25"`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(s.to_string());
        if let Some((n, d)) = t.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            return Coord::new(n, d).map_err(|_| bad());
        }
        if let Some((int, frac)) = t.split_once('.') {
            if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int.starts_with('-');
            let int_digits = int.trim_start_matches(['-', '+']);
            if !int_digits.chars().all(|c| c.is_ascii_digit()) {
                return Err(bad());
            }
            let digits = format!("{}{}", int_digits, frac);
            let mut n: BigInt = digits.parse().map_err(|_| bad())?;
            if negative {
                n = -n;
            }
            let d = num_traits::pow(BigInt::from(10), frac.len());
            return Coord::new(n, d);
        }
        let n: BigInt = t.parse().map_err(|_| bad())?;
        Ok(Coord(BigRational::from_integer(n)))
    }
}

impl Serialize for Coord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Str(String),
            Int(i64),
        }
        match Raw::deserialize(d)? {
            Raw::Str(s) => s.parse().map_err(serde::de::Error::custom),
            Raw::Int(v) => Ok(Coord::integer(v)),
        }
    }
}

macro_rules! coord_binop {
    ($tr:ident, $method:ident) => {
        impl<'a> $tr<&'a Coord> for &'a Coord {
            type Output = Coord;
            fn $method(self, rhs: &'a Coord) -> Coord {
                Coord((&self.0).$method(&rhs.0))
            }
        }
        impl $tr for Coord {
            type Output = Coord;
            fn $method(self, rhs: Coord) -> Coord {
                Coord(self.0.$method(rhs.0))
            }
        }
    };
}
coord_binop!(Add, add);
coord_binop!(Sub, sub);
coord_binop!(Mul, mul);

impl Neg for Coord {
    type Output = Coord;
    fn neg(self) -> Coord {
        Coord(-self.0)
    }
}

impl From<i64> for Coord {
    fn from(v: i64) -> Self {
        Coord::integer(v)
    }
}

/// Homogeneous integer form `(x·w, y·w, w)` with `w > 0`, cached so that
/// orientation tests never normalise fractions.
#[derive(Clone, Debug)]
struct Homogeneous {
    small: Option<(i64, i64)>,
    x: BigInt,
    y: BigInt,
    w: BigInt,
}

const SMALL_LIMIT: i64 = 1 << 62;

impl Homogeneous {
    fn of(x: &Coord, y: &Coord) -> Self {
        let w = x.denom().lcm(y.denom());
        let hx = x.numer() * (&w / x.denom());
        let hy = y.numer() * (&w / y.denom());
        let small = if w.is_one() {
            match (hx.to_i64(), hy.to_i64()) {
                (Some(a), Some(b)) if a.abs() < SMALL_LIMIT && b.abs() < SMALL_LIMIT => Some((a, b)),
                _ => None,
            }
        } else {
            None
        };
        Homogeneous { small, x: hx, y: hy, w }
    }
}

/// An uncolored exact position in the plane.
#[derive(Clone)]
pub struct Pos {
    x: Coord,
    y: Coord,
    hom: Homogeneous,
}

impl Pos {
    pub fn new(x: Coord, y: Coord) -> Self {
        let hom = Homogeneous::of(&x, &y);
        Pos { x, y, hom }
    }

    pub fn int(x: i64, y: i64) -> Self {
        Pos::new(Coord::integer(x), Coord::integer(y))
    }

    /// Parses a pair of coordinate strings.
    pub fn parse(x: &str, y: &str) -> Result<Self> {
        Ok(Pos::new(x.parse()?, y.parse()?))
    }

    pub fn x(&self) -> &Coord {
        &self.x
    }

    pub fn y(&self) -> &Coord {
        &self.y
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    pub fn sub(&self, other: &Pos) -> (Coord, Coord) {
        (&self.x - &other.x, &self.y - &other.y)
    }

    /// `self + t·(dx, dy)`.
    pub fn offset(&self, t: &Coord, dx: &Coord, dy: &Coord) -> Pos {
        Pos::new(&self.x + &(t * dx), &self.y + &(t * dy))
    }

    pub fn midpoint(&self, other: &Pos) -> Pos {
        Pos::new((&self.x + &other.x).halved(), (&self.y + &other.y).halved())
    }
}

#[derive(Serialize, Deserialize)]
struct PosRepr {
    x: Coord,
    y: Coord,
}

impl Serialize for Pos {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PosRepr { x: self.x.clone(), y: self.y.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Pos {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PosRepr::deserialize(d).map(|r| Pos::new(r.x, r.y))
    }
}

impl PartialEq for Pos {
    fn eq(&self, other: &Self) -> bool {
        self.x == other.x && self.y == other.y
    }
}

impl Eq for Pos {}

impl Hash for Pos {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.x.hash(state);
        self.y.hash(state);
    }
}

impl PartialOrd for Pos {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic: by `x`, then by `y`.
impl Ord for Pos {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x.cmp(&other.x).then_with(|| self.y.cmp(&other.y))
    }
}

impl fmt::Debug for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Red => "red",
            Color::Blue => "blue",
        })
    }
}

/// A colored input point. Equality compares coordinates only.
#[derive(Clone, Debug)]
pub struct Point {
    pub pos: Pos,
    pub color: Color,
}

impl Point {
    pub fn new(pos: Pos, color: Color) -> Self {
        Point { pos, color }
    }

    pub fn int(x: i64, y: i64, color: Color) -> Self {
        Point::new(Pos::int(x, y), color)
    }
}

impl PartialEq for Point {
    fn eq(&self, other: &Self) -> bool {
        self.pos == other.pos
    }
}

impl Eq for Point {}

impl Hash for Point {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.pos.hash(state);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Ccw,
    Cw,
    Collinear,
}

impl Orientation {
    pub fn reversed(self) -> Orientation {
        match self {
            Orientation::Ccw => Orientation::Cw,
            Orientation::Cw => Orientation::Ccw,
            Orientation::Collinear => Orientation::Collinear,
        }
    }

    fn from_sign(sign: Ordering) -> Orientation {
        match sign {
            Ordering::Greater => Orientation::Ccw,
            Ordering::Less => Orientation::Cw,
            Ordering::Equal => Orientation::Collinear,
        }
    }
}

/// Sign of the cross product `(b − a) × (c − a)`.
pub fn orientation(a: &Pos, b: &Pos, c: &Pos) -> Orientation {
    if let (Some((ax, ay)), Some((bx, by)), Some((cx, cy))) = (a.hom.small, b.hom.small, c.hom.small) {
        let (ax, ay, bx, by, cx, cy) = (
            ax as i128, ay as i128, bx as i128, by as i128, cx as i128, cy as i128,
        );
        let det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
        return Orientation::from_sign(det.cmp(&0));
    }
    // det | xa ya wa ; xb yb wb ; xc yc wc |, every row scaled by a positive w.
    let (ha, hb, hc) = (&a.hom, &b.hom, &c.hom);
    let det = &ha.x * (&hb.y * &hc.w - &hb.w * &hc.y) - &ha.y * (&hb.x * &hc.w - &hb.w * &hc.x)
        + &ha.w * (&hb.x * &hc.y - &hb.y * &hc.x);
    Orientation::from_sign(det.sign().cmp_zero())
}

trait SignExt {
    fn cmp_zero(self) -> Ordering;
}

impl SignExt for num_bigint::Sign {
    fn cmp_zero(self) -> Ordering {
        match self {
            num_bigint::Sign::Plus => Ordering::Greater,
            num_bigint::Sign::Minus => Ordering::Less,
            num_bigint::Sign::NoSign => Ordering::Equal,
        }
    }
}

/// Sign of the dot product `(b − a) · (c − a)`.
pub fn dot_sign(a: &Pos, b: &Pos, c: &Pos) -> Ordering {
    let (ux, uy) = b.sub(a);
    let (vx, vy) = c.sub(a);
    let d = &(&ux * &vx) + &(&uy * &vy);
    d.signum().cmp(&0)
}

/// True when `p` lies on the closed segment `ab`.
pub fn on_segment(p: &Pos, a: &Pos, b: &Pos) -> bool {
    if orientation(a, b, p) != Orientation::Collinear {
        return false;
    }
    let within = |v: &Coord, lo: &Coord, hi: &Coord| {
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        lo <= v && v <= hi
    };
    within(p.x(), a.x(), b.x()) && within(p.y(), a.y(), b.y())
}

/// A segment between two distinct positions.
#[derive(Clone, Copy, Debug)]
pub struct Segment<'a> {
    pub a: &'a Pos,
    pub b: &'a Pos,
}

impl<'a> Segment<'a> {
    pub fn new(a: &'a Pos, b: &'a Pos) -> Result<Self> {
        if a == b {
            return Err(Error::Input(format!("degenerate segment at {a}")));
        }
        Ok(Segment { a, b })
    }

    pub fn crosses(&self, other: &Segment<'_>) -> Result<bool> {
        segments_cross(self.a, self.b, other.a, other.b)
    }

    pub fn intersects(&self, other: &Segment<'_>) -> bool {
        segments_intersect(self.a, self.b, other.a, other.b)
    }
}

/// True iff the open segments `ab` and `cd` meet in exactly one point
/// interior to both. Touching at an endpoint is not a crossing. Collinear
/// segments sharing more than one point are reported as
/// [`Error::DegenerateOverlap`].
pub fn segments_cross(a: &Pos, b: &Pos, c: &Pos, d: &Pos) -> Result<bool> {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    if o1 == Orientation::Collinear && o2 == Orientation::Collinear {
        if collinear_overlap(a, b, c, d) {
            return Err(Error::DegenerateOverlap);
        }
        return Ok(false);
    }
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    Ok(opposite(o1, o2) && opposite(o3, o4))
}

fn opposite(o1: Orientation, o2: Orientation) -> bool {
    matches!(
        (o1, o2),
        (Orientation::Ccw, Orientation::Cw) | (Orientation::Cw, Orientation::Ccw)
    )
}

/// Collinear segments overlapping in more than a single point.
fn collinear_overlap(a: &Pos, b: &Pos, c: &Pos, d: &Pos) -> bool {
    // project on the dominant axis of ab (or cd if ab is a point)
    let key = |p: &Pos| (p.x().clone(), p.y().clone());
    let (mut s1, mut s2) = ((key(a), key(b)), (key(c), key(d)));
    if s1.0 > s1.1 {
        std::mem::swap(&mut s1.0, &mut s1.1);
    }
    if s2.0 > s2.1 {
        std::mem::swap(&mut s2.0, &mut s2.1);
    }
    let lo = if s1.0 > s2.0 { &s1.0 } else { &s2.0 };
    let hi = if s1.1 < s2.1 { &s1.1 } else { &s2.1 };
    lo < hi
}

/// Closed-segment intersection: any shared point counts, including
/// endpoints and collinear overlap.
pub fn segments_intersect(a: &Pos, b: &Pos, c: &Pos, d: &Pos) -> bool {
    let o1 = orientation(a, b, c);
    let o2 = orientation(a, b, d);
    let o3 = orientation(c, d, a);
    let o4 = orientation(c, d, b);
    if opposite(o1, o2) && opposite(o3, o4) {
        return true;
    }
    (o1 == Orientation::Collinear && on_segment(c, a, b))
        || (o2 == Orientation::Collinear && on_segment(d, a, b))
        || (o3 == Orientation::Collinear && on_segment(a, c, d))
        || (o4 == Orientation::Collinear && on_segment(b, c, d))
}

/// Intersection point of the lines through `ab` and `cd`, if they are not
/// parallel.
pub fn line_intersection(a: &Pos, b: &Pos, c: &Pos, d: &Pos) -> Option<Pos> {
    let (rx, ry) = b.sub(a);
    let (sx, sy) = d.sub(c);
    let denom = &(&rx * &sy) - &(&ry * &sx);
    if denom.is_zero() {
        return None;
    }
    let (qx, qy) = c.sub(a);
    let t_num = &(&qx * &sy) - &(&qy * &sx);
    let t = Coord::from_rational(t_num.as_rational() / denom.as_rational());
    Some(a.offset(&t, &rx, &ry))
}

/// Where a point sits relative to a convex hull.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Containment {
    Inside,
    Boundary,
    Outside,
}

/// Convex hull with vertices in counterclockwise order, starting at the
/// lexicographic minimum. One or two vertices for degenerate inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConvexHull {
    vertices: Vec<Pos>,
}

/// Indices of the hull vertices of `points`, counterclockwise from the
/// lexicographic minimum (monotone chain).
pub fn convex_hull_indices(points: &[&Pos]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| points[i].cmp(points[j]));
    idx.dedup_by(|i, j| points[*i] == points[*j]);
    if idx.len() <= 2 {
        return idx;
    }
    let mut lower: Vec<usize> = Vec::with_capacity(idx.len());
    for &i in &idx {
        while lower.len() >= 2
            && orientation(points[lower[lower.len() - 2]], points[lower[lower.len() - 1]], points[i])
                != Orientation::Ccw
        {
            lower.pop();
        }
        lower.push(i);
    }
    let mut upper: Vec<usize> = Vec::with_capacity(idx.len());
    for &i in idx.iter().rev() {
        while upper.len() >= 2
            && orientation(points[upper[upper.len() - 2]], points[upper[upper.len() - 1]], points[i])
                != Orientation::Ccw
        {
            upper.pop();
        }
        upper.push(i);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    // all collinear: keep the two extremes
    if lower.len() == 2 && lower[0] == lower[1] {
        lower.pop();
    }
    lower
}

pub fn convex_hull(points: &[Pos]) -> ConvexHull {
    let refs: Vec<&Pos> = points.iter().collect();
    ConvexHull::from_refs(&refs)
}

impl ConvexHull {
    pub fn from_refs(points: &[&Pos]) -> ConvexHull {
        let vertices = convex_hull_indices(points).into_iter().map(|i| points[i].clone()).collect();
        ConvexHull { vertices }
    }

    pub fn vertices(&self) -> &[Pos] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_vertex(&self, p: &Pos) -> bool {
        self.vertices.iter().any(|v| v == p)
    }

    /// Edges `(v_i, v_{i+1})`; a single edge for a two-vertex hull.
    pub fn edges(&self) -> impl Iterator<Item = (&Pos, &Pos)> + '_ {
        let n = self.vertices.len();
        let count = match n {
            0 | 1 => 0,
            2 => 1,
            _ => n,
        };
        (0..count).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    pub fn locate(&self, p: &Pos) -> Containment {
        match self.vertices.len() {
            0 => Containment::Outside,
            1 => {
                if &self.vertices[0] == p {
                    Containment::Boundary
                } else {
                    Containment::Outside
                }
            }
            2 => {
                if on_segment(p, &self.vertices[0], &self.vertices[1]) {
                    Containment::Boundary
                } else {
                    Containment::Outside
                }
            }
            _ => {
                let mut on_edge = false;
                for (a, b) in self.edges() {
                    match orientation(a, b, p) {
                        Orientation::Cw => return Containment::Outside,
                        Orientation::Collinear => on_edge = true,
                        Orientation::Ccw => {}
                    }
                }
                if on_edge {
                    Containment::Boundary
                } else {
                    Containment::Inside
                }
            }
        }
    }

    pub fn strictly_contains(&self, p: &Pos) -> bool {
        self.locate(p) == Containment::Inside
    }

    /// Closed intersection between the hull and the closed segment `ab`.
    pub fn intersects_segment(&self, a: &Pos, b: &Pos) -> bool {
        if self.locate(a) != Containment::Outside || self.locate(b) != Containment::Outside {
            return true;
        }
        match self.vertices.len() {
            0 => false,
            1 => on_segment(&self.vertices[0], a, b),
            _ => self.edges().any(|(u, v)| segments_intersect(u, v, a, b)),
        }
    }

    /// Closed intersection of two hulls.
    pub fn intersects(&self, other: &ConvexHull) -> bool {
        if self.vertices.iter().any(|v| other.locate(v) != Containment::Outside)
            || other.vertices.iter().any(|v| self.locate(v) != Containment::Outside)
        {
            return true;
        }
        self.edges()
            .any(|(a, b)| other.edges().any(|(c, d)| segments_intersect(a, b, c, d)))
    }

    /// Whether `y`, outside the hull, sees vertex `x`: the segment `xy`
    /// meets the hull only at `x`.
    pub fn sees(&self, y: &Pos, x: &Pos) -> Result<bool> {
        if self.locate(y) != Containment::Outside {
            return Err(Error::ObserverInsideHull);
        }
        let n = self.vertices.len();
        let Some(i) = self.vertices.iter().position(|v| v == x) else {
            return Ok(false);
        };
        match n {
            1 => Ok(true),
            2 => {
                let other = &self.vertices[1 - i];
                let toward = orientation(x, other, y) == Orientation::Collinear
                    && dot_sign(x, other, y) == Ordering::Greater;
                Ok(!toward)
            }
            _ => {
                let prev = &self.vertices[(i + n - 1) % n];
                let next = &self.vertices[(i + 1) % n];
                // direction y − x inside the closed interior cone at x
                let in_cone = orientation(x, next, y) != Orientation::Cw
                    && orientation(x, y, prev) != Orientation::Cw;
                Ok(!in_cone)
            }
        }
    }
}

/// Whether `y` sees `x ∈ set` across the opaque hull of `set`.
pub fn sees(y: &Pos, x: &Pos, set: &[Pos]) -> Result<bool> {
    convex_hull(set).sees(y, x)
}

/// Mutual visibility of `x ∈ xs` and `y ∈ ys`; the hulls must be disjoint.
pub fn see_each_other(x: &Pos, xs: &[Pos], y: &Pos, ys: &[Pos]) -> Result<bool> {
    let hx = convex_hull(xs);
    let hy = convex_hull(ys);
    see_each_other_hulls(x, &hx, y, &hy)
}

pub fn see_each_other_hulls(x: &Pos, hx: &ConvexHull, y: &Pos, hy: &ConvexHull) -> Result<bool> {
    if hx.intersects(hy) {
        return Err(Error::HullsIntersect);
    }
    Ok(hx.sees(y, x)? && hy.sees(x, y)?)
}

/// Clockwise angle from ray `p→x` to ray `p→y` is at most π.
pub fn angle_at_most_pi(p: &Pos, x: &Pos, y: &Pos) -> Result<bool> {
    if x == p || y == p {
        return Err(Error::DegenerateAngle);
    }
    Ok(orientation(p, x, y) != Orientation::Ccw)
}

/// Clockwise angle from ray `p→x` to ray `p→y` is strictly below π.
pub fn angle_less_than_pi(p: &Pos, x: &Pos, y: &Pos) -> Result<bool> {
    if x == p || y == p {
        return Err(Error::DegenerateAngle);
    }
    Ok(orientation(p, x, y) == Orientation::Cw)
}

/// A line through two distinct anchors, directed from `from` to `to`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectedLine {
    pub from: Pos,
    pub to: Pos,
}

impl DirectedLine {
    pub fn new(from: Pos, to: Pos) -> Result<Self> {
        if from == to {
            return Err(Error::Input("line anchors coincide".into()));
        }
        Ok(DirectedLine { from, to })
    }

    pub fn side(&self, p: &Pos) -> Orientation {
        orientation(&self.from, &self.to, p)
    }

    /// Whether the closed segment `ab` has endpoints strictly on opposite
    /// sides of the line.
    pub fn separates(&self, a: &Pos, b: &Pos) -> bool {
        opposite(self.side(a), self.side(b))
    }
}

/// True when no three of `points` are collinear and no two coincide.
pub fn in_general_position(points: &[Pos]) -> std::result::Result<(), (usize, usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Err((i, j, j));
            }
            for k in j + 1..n {
                if orientation(&points[i], &points[j], &points[k]) == Orientation::Collinear {
                    return Err((i, j, k));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64) -> Pos {
        Pos::int(x, y)
    }

    fn q(x: &str, y: &str) -> Pos {
        Pos::parse(x, y).unwrap()
    }

    #[test]
    fn orientation_examples() {
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(0, 1)), Orientation::Ccw);
        assert_eq!(orientation(&p(0, 0), &p(1, 0), &p(2, 0)), Orientation::Collinear);
        assert_eq!(orientation(&p(0, 0), &p(0, 1), &p(1, 0)), Orientation::Cw);
    }

    #[test]
    fn orientation_rational_and_integer_paths_agree() {
        let a = q("1/3", "2/7");
        let b = q("5/2", "-1/9");
        let c = q("-4/5", "3");
        let scaled = |p: &Pos| Pos::new(p.x() * &Coord::integer(630), p.y() * &Coord::integer(630));
        assert_eq!(orientation(&a, &b, &c), orientation(&scaled(&a), &scaled(&b), &scaled(&c)));
        // collinear through rationals
        assert_eq!(orientation(&q("1/2", "1/2"), &q("1/3", "1/3"), &p(7, 7)), Orientation::Collinear);
    }

    #[test]
    fn coord_parsing() {
        assert_eq!("3/6".parse::<Coord>().unwrap(), Coord::new(1, 2).unwrap());
        assert_eq!("-0.25".parse::<Coord>().unwrap(), Coord::new(-1, 4).unwrap());
        assert_eq!("4/-2".parse::<Coord>().unwrap(), Coord::integer(-2));
        assert_eq!(Coord::new(6, -4).unwrap().to_string(), "-3/2");
        assert!("1/0".parse::<Coord>().is_err());
        assert!("abc".parse::<Coord>().is_err());
        assert!("1.".parse::<Coord>().is_err());
    }

    #[test]
    fn crossing_examples() {
        assert!(segments_cross(&p(0, 0), &p(2, 2), &p(0, 2), &p(2, 0)).unwrap());
        assert!(!segments_cross(&p(0, 0), &p(1, 0), &p(1, 0), &p(2, 1)).unwrap());
        assert!(!segments_cross(&p(0, 0), &p(1, 0), &p(0, 1), &p(1, 1)).unwrap());
    }

    #[test]
    fn crossing_overlap_is_an_error() {
        assert_eq!(
            segments_cross(&p(0, 0), &p(2, 0), &p(1, 0), &p(3, 0)),
            Err(Error::DegenerateOverlap)
        );
        // collinear but only touching, or disjoint: no error
        assert_eq!(segments_cross(&p(0, 0), &p(1, 0), &p(1, 0), &p(3, 0)), Ok(false));
        assert_eq!(segments_cross(&p(0, 0), &p(1, 0), &p(2, 0), &p(3, 0)), Ok(false));
        // T-junction is not a crossing of open segments
        assert_eq!(segments_cross(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)), Ok(false));
        assert!(segments_intersect(&p(0, 0), &p(2, 0), &p(1, 0), &p(1, 5)));
    }

    #[test]
    fn hull_examples() {
        let h = convex_hull(&[p(0, 0), p(2, 0), p(1, 1), q("1", "0.5")]);
        assert_eq!(h.vertices(), &[p(0, 0), p(2, 0), p(1, 1)]);
        assert_eq!(convex_hull(&[p(0, 0)]).vertices(), &[p(0, 0)]);
        let sq = convex_hull(&[p(1, 1), p(0, 1), p(0, 0), p(1, 0)]);
        assert_eq!(sq.vertices(), &[p(0, 0), p(1, 0), p(1, 1), p(0, 1)]);
        let seg = convex_hull(&[p(3, 3), p(0, 0), p(1, 1)]);
        assert_eq!(seg.vertices(), &[p(0, 0), p(3, 3)]);
    }

    #[test]
    fn hull_location() {
        let h = convex_hull(&[p(0, 0), p(4, 0), p(0, 4)]);
        assert_eq!(h.locate(&p(1, 1)), Containment::Inside);
        assert_eq!(h.locate(&p(2, 0)), Containment::Boundary);
        assert_eq!(h.locate(&p(3, 3)), Containment::Outside);
        assert!(h.intersects_segment(&p(-1, 1), &p(5, 1)));
        assert!(!h.intersects_segment(&p(5, 5), &p(6, 1)));
        assert!(h.intersects_segment(&p(4, 0), &p(6, 1)));
    }

    #[test]
    fn sees_examples() {
        let tri = [p(0, 0), p(2, 0), p(1, 1)];
        assert!(sees(&p(3, 0), &p(2, 0), &tri).unwrap());
        assert!(!sees(&p(3, 0), &p(0, 0), &tri).unwrap());
        let x = [p(0, 0), p(2, 0), p(1, 1), q("1", "0.25")];
        assert!(sees(&p(0, 5), &p(1, 1), &x).unwrap());
        assert!(!sees(&p(0, 5), &q("1", "0.25"), &x).unwrap());
        assert_eq!(sees(&q("1", "0.5"), &p(0, 0), &tri), Err(Error::ObserverInsideHull));
    }

    #[test]
    fn see_each_other_examples() {
        assert!(see_each_other(&p(0, 0), &[p(0, 0)], &p(5, 0), &[p(5, 0)]).unwrap());
        let xs = [p(0, 0), p(2, 1), p(0, 2)];
        let ys = [p(5, 0), p(7, 1), p(5, 2)];
        // (7,1) is hidden behind its own hull
        assert!(!see_each_other(&p(0, 0), &xs, &p(7, 1), &ys).unwrap());
        assert!(see_each_other(&p(2, 1), &xs, &p(5, 0), &ys).unwrap());
        assert_eq!(
            see_each_other(&p(2, 1), &xs, &p(5, 0), &ys).unwrap(),
            see_each_other(&p(5, 0), &ys, &p(2, 1), &xs).unwrap()
        );
        let overlapping = [p(1, 0), p(6, 1), p(1, 2)];
        assert_eq!(see_each_other(&p(2, 1), &xs, &p(6, 1), &overlapping), Err(Error::HullsIntersect));
    }

    #[test]
    fn angle_examples() {
        let o = p(0, 0);
        assert!(angle_at_most_pi(&o, &p(1, 0), &p(0, -1)).unwrap());
        assert!(!angle_at_most_pi(&o, &p(1, 0), &p(0, 1)).unwrap());
        assert!(angle_at_most_pi(&o, &p(1, 0), &p(-1, -1)).unwrap());
        assert!(!angle_at_most_pi(&o, &p(1, 0), &p(-1, 1)).unwrap());
        assert_eq!(angle_at_most_pi(&o, &o, &p(1, 1)), Err(Error::DegenerateAngle));
        // exactly π is "at most" but not "less than"
        assert!(angle_at_most_pi(&o, &p(1, 0), &p(-1, 0)).unwrap());
        assert!(!angle_less_than_pi(&o, &p(1, 0), &p(-1, 0)).unwrap());
    }

    #[test]
    fn line_intersection_is_exact() {
        let x = line_intersection(&p(0, 0), &p(3, 1), &p(0, 1), &p(1, 0)).unwrap();
        assert_eq!(x, q("3/4", "1/4"));
        assert!(line_intersection(&p(0, 0), &p(1, 1), &p(0, 1), &p(1, 2)).is_none());
    }

    #[test]
    fn general_position_detects_collinear_triples() {
        assert!(in_general_position(&[p(0, 0), p(1, 2), p(3, 1)]).is_ok());
        assert_eq!(in_general_position(&[p(0, 0), p(1, 2), p(2, 4), p(9, 1)]), Err((0, 1, 2)));
    }
}
