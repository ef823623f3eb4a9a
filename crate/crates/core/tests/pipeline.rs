mod common;

use common::{blue_red_crossings_oracle, forcing_corpus, hexagon, instance, pt};
use rb_cycles::assemble::{assemble, solve, CyclePair, CROSSING_BOUND};
use rb_cycles::cli::generate::Shape;
use rb_cycles::geometry::Color::{Blue, Red};
use rb_cycles::geometry::{in_general_position, Point, Pos};
use rb_cycles::jump::{blue_red_crossings, canonical_config, find_4_forcings, repair, repair_bound, validate_config};
use rb_cycles::pivot::HullRelation;
use rb_cycles::radial::{detect_blue_monster_jump, detect_red_monster_jump, has_any_monster_jump, RadialOrder};
use rb_cycles::verify::check;

fn angle_deg(p: (f64, f64)) -> f64 {
    p.1.atan2(p.0).to_degrees()
}

/// Clockwise sweep in degrees from direction `a` to direction `b`.
fn clockwise_sweep(a: (f64, f64), b: (f64, f64)) -> f64 {
    (angle_deg(a) - angle_deg(b)).rem_euclid(360.0)
}

fn float_segments_cross(a: (f64, f64), b: (f64, f64), c: (f64, f64), d: (f64, f64)) -> bool {
    let side = |p: (f64, f64), q: (f64, f64), r: (f64, f64)| ((q.0 - p.0) * (r.1 - p.1) - (q.1 - p.1) * (r.0 - p.0)).signum();
    side(a, b, c) != side(a, b, d) && side(c, d, a) != side(c, d, b)
}

/// Blue `B1`, red `R1` of three points, blue `B2`, red `R2`, clockwise
/// around the origin. The second point of `R1` is more than a half turn
/// from the first point of `R2`, and the segment from `B1` to `B2` cuts
/// through the hull of `R1`.
fn red_monster_jump_instance() -> Vec<Point> {
    vec![pt(-10, 2, Blue), pt(-9, 6, Red), pt(-3, 3, Red), pt(6, 1, Red), pt(10, 1, Blue), pt(2, -9, Red)]
}

#[test]
fn red_monster_jump_example_matches_float_oracle() {
    let pts = red_monster_jump_instance();
    let pos: Vec<Pos> = pts.iter().map(|p| p.pos.clone()).collect();
    assert!(in_general_position(&pos).is_ok());
    let f: Vec<(f64, f64)> = pos.iter().map(|p| p.to_f64()).collect();
    // clause 1: sweep from the second point of R1 to the first of R2
    let sweep = clockwise_sweep(f[2], f[5]);
    assert!(sweep > 180.0, "sweep {sweep}");
    // clause 2: segment (-10,2)-(10,1) crosses a side of the red triangle
    let tri = [f[1], f[2], f[3]];
    let hits = (0..3).filter(|&i| float_segments_cross(f[0], f[4], tri[i], tri[(i + 1) % 3])).count();
    assert_eq!(hits, 2);

    let order = RadialOrder::new(pts, Pos::int(0, 0)).unwrap();
    assert_eq!(order.num_blobs(), 4);
    let r1 = order.blob_of(1);
    assert_eq!(order.blob(r1).len(), 3);
    assert!(detect_red_monster_jump(&order, r1, order.next_same(r1)).unwrap());
    assert!(has_any_monster_jump(&order));
}

#[test]
fn mirrored_red_monster_jump_is_blue() {
    let mirrored: Vec<Point> = red_monster_jump_instance()
        .iter()
        .map(|p| Point::new(Pos::new(-p.pos.x().clone(), p.pos.y().clone()), p.color.other()))
        .collect();
    let order = RadialOrder::new(mirrored, Pos::int(0, 0)).unwrap();
    let b2 = order.blob_of(1);
    assert_eq!(order.blob(b2).color, Blue);
    assert!(detect_blue_monster_jump(&order, order.prev_same(b2), b2).unwrap());
    assert!(has_any_monster_jump(&order));
}

#[test]
fn hexagon_solves_with_two_crossings_per_edge() {
    let pair = solve(&hexagon()).unwrap();
    assert_eq!(pair.crossings.max_count, 2);
    assert!(pair.crossings.per_edge_counts.iter().all(|e| e.crossings == 2));
}

#[test]
fn four_blobs_of_two() {
    let pts = vec![
        pt(10, 1, Red),
        pt(9, -4, Red),
        pt(4, -9, Blue),
        pt(-1, -10, Blue),
        pt(-10, -2, Red),
        pt(-9, 3, Red),
        pt(-4, 8, Blue),
        pt(2, 10, Blue),
    ];
    let order = RadialOrder::new(pts, Pos::int(0, 0)).unwrap();
    assert!(order.blobs().iter().all(|b| b.len() == 2));
    let config = canonical_config(&order).unwrap();
    assert_eq!(config.edges().len(), 4);
    for e in config.edges() {
        assert_eq!(e.src, order.blob(e.from_blob).last());
        assert_eq!(e.dst, order.blob(e.to_blob).first());
    }
    assert!(validate_config(&config, &order).is_ok());
}

#[test]
fn repair_corpus() {
    let corpus = forcing_corpus(16);
    assert!(corpus.len() >= 20);
    for case in &corpus {
        assert!(case.forcings().unwrap() > 0, "{}", case.label);
        let order = case.order();
        let config = canonical_config(&order).unwrap();
        let before = blue_red_crossings_oracle(&config, &order);
        assert_eq!(before, blue_red_crossings(&config, &order).unwrap(), "{}", case.label);
        let fixed = repair(&config, &order).unwrap_or_else(|e| panic!("{}: {e}", case.label));
        assert!(fixed.log.iterations <= repair_bound(order.num_blobs()));
        assert!(find_4_forcings(&fixed.config, &order).unwrap().is_empty(), "{}", case.label);
        assert!(validate_config(&fixed.config, &order).is_ok(), "{}", case.label);
        assert!(blue_red_crossings_oracle(&fixed.config, &order) <= before, "{}", case.label);
        let pair = assemble(&order, &fixed.config).unwrap();
        assert!(pair.crossings.is_valid(CROSSING_BOUND), "{}", case.label);
    }
}

#[test]
fn template_forcing_lifts_to_four_crossings_without_repair() {
    // the unrepaired configuration really does force an edge crossed four
    // times: assembling it must fail verification
    let case = &forcing_corpus(0)[3];
    let order = case.order();
    let config = canonical_config(&order).unwrap();
    assert!(assemble(&order, &config).is_err());
}

fn first_repaired_instance() -> (Vec<Point>, CyclePair) {
    for seed in 0..5000 {
        let pts = instance(4 + (seed as usize % 9), 4 + (seed as usize % 7), seed, Shape::Overlap);
        let pair = solve(&pts).unwrap();
        if pair.provenance.repair.as_ref().is_some_and(|r| r.exchanges > 0) {
            return (pts, pair);
        }
    }
    panic!("no generated instance needed a repair");
}

#[test]
fn solve_fires_repair_on_some_generated_instance() {
    let (pts, pair) = first_repaired_instance();
    let report = check(&pts, &pair.red_cycle, &pair.blue_cycle);
    assert!(report.is_valid(CROSSING_BOUND));
    let log = pair.provenance.repair.unwrap();
    assert!(log.iterations >= 1);
    assert!(log.final_blue_red < log.initial_blue_red);
}

#[test]
fn large_random_instance() {
    for shape in Shape::ALL {
        let pts = instance(40, 40, 40, shape);
        let pair = solve(&pts).unwrap();
        assert!(check(&pts, &pair.red_cycle, &pair.blue_cycle).is_valid(CROSSING_BOUND), "{shape:?}");
    }
}

#[test]
fn color_swap_is_undone() {
    // blue triangle around red ones: the pipeline swaps internally
    let pts = vec![
        pt(-20, -10, Blue),
        pt(25, -12, Blue),
        pt(1, 30, Blue),
        pt(0, 0, Red),
        pt(4, 1, Red),
        pt(2, 5, Red),
        pt(-3, 2, Red),
    ];
    let pair = solve(&pts).unwrap();
    assert_eq!(pair.provenance.relation, Some(HullRelation::BlueContainsRed));
    assert!(pair.provenance.colors_swapped);
    assert!(pair.red_cycle.iter().all(|&i| pts[i].color == Red));
    assert!(pair.blue_cycle.iter().all(|&i| pts[i].color == Blue));
    assert!(pair.crossings.is_valid(CROSSING_BOUND));
}

#[test]
fn cycle_pair_round_trips_through_json() {
    let (_, pair) = first_repaired_instance();
    let text = serde_json::to_string(&pair).unwrap();
    let back: CyclePair = serde_json::from_str(&text).unwrap();
    assert_eq!(back, pair);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}
