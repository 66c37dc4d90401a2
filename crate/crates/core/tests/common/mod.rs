//! Shared generators and oracles for the integration suites. The oracles here are
//! written independently of the library: regions are described by projections onto
//! the side directions and clipped with a local Sutherland-Hodgman routine.

#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};

use rand::Rng;
use tripart::{Point, Triangle};

pub type P = (f64, f64);

pub fn xy(p: Point) -> P {
    (p.x, p.y)
}

/// Keeps the part of `poly` where `dot(n, p) <= c`.
pub fn clip(poly: &[P], n: P, c: f64) -> Vec<P> {
    let f = |p: P| n.0 * p.0 + n.1 * p.1 - c;
    let mut out = Vec::with_capacity(poly.len() + 1);
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        let (fp, fq) = (f(p), f(q));
        if fp <= 0.0 {
            out.push(p);
        }
        if (fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0) {
            let t = fp / (fp - fq);
            out.push((p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1)));
        }
    }
    out
}

pub fn shoelace(poly: &[P]) -> f64 {
    let mut s = 0.0;
    for i in 0..poly.len() {
        let (p, q) = (poly[i], poly[(i + 1) % poly.len()]);
        s += p.0 * q.1 - q.0 * p.1;
    }
    0.5 * s
}

fn unit(d: P) -> P {
    let l = d.0.hypot(d.1);
    (d.0 / l, d.1 / l)
}

fn ccw(mut v: [P; 3]) -> [P; 3] {
    if shoelace(&v) < 0.0 {
        v.swap(1, 2);
    }
    v
}

/// Areas of the three regions at `x`. The region at vertex `V` is the set of points
/// that project onto the incoming side at or beyond the foot of `x` and onto the
/// outgoing side at or before it.
pub fn oracle_areas(tri: [P; 3], x: P) -> [f64; 3] {
    let v = ccw(tri);
    let g = ((v[0].0 + v[1].0 + v[2].0) / 3.0, (v[0].1 + v[1].1 + v[2].1) / 3.0);
    let v = v.map(|p| (p.0 - g.0, p.1 - g.1));
    let x = (x.0 - g.0, x.1 - g.1);
    let poly = v.to_vec();
    [0, 1, 2].map(|i| {
        let prev = v[(i + 2) % 3];
        let e_in = unit((v[i].0 - prev.0, v[i].1 - prev.1));
        let next = v[(i + 1) % 3];
        let e_out = unit((next.0 - v[i].0, next.1 - v[i].1));
        // (p - x)·e_in >= 0 and (p - x)·e_out <= 0
        let part = clip(&poly, (-e_in.0, -e_in.1), -(e_in.0 * x.0 + e_in.1 * x.1));
        let part = clip(&part, e_out, e_out.0 * x.0 + e_out.1 * x.1);
        if part.len() < 3 {
            0.0
        } else {
            shoelace(&part)
        }
    })
}

pub fn oracle_deviation(tri: [P; 3], x: P) -> f64 {
    let total = shoelace(&ccw(tri));
    oracle_areas(tri, x)
        .iter()
        .map(|a| (a - total / 3.0).abs())
        .fold(0.0, f64::max)
}

pub fn tri_points(t: &Triangle) -> [P; 3] {
    t.vertices().map(xy)
}

/// Interior angles from side lengths by the law of cosines.
pub fn oracle_angles(tri: [P; 3]) -> [f64; 3] {
    let d = |a: P, b: P| (a.0 - b.0).hypot(a.1 - b.1);
    let (a, b, c) = (d(tri[1], tri[2]), d(tri[2], tri[0]), d(tri[0], tri[1]));
    let ang = |opp: f64, s1: f64, s2: f64| ((s1 * s1 + s2 * s2 - opp * opp) / (2.0 * s1 * s2)).clamp(-1.0, 1.0).acos();
    [ang(a, b, c), ang(b, c, a), ang(c, a, b)]
}

/// Signed distances from `x` to the three side lines, positive inside, in the order
/// (side opposite vertex 0, 1, 2).
pub fn side_distances(tri: [P; 3], x: P) -> [f64; 3] {
    let v = ccw(tri);
    let dist = |p: P, q: P| {
        let (dx, dy) = (q.0 - p.0, q.1 - p.1);
        (dx * (x.1 - p.1) - dy * (x.0 - p.0)) / dx.hypot(dy)
    };
    let d = [dist(v[1], v[2]), dist(v[2], v[0]), dist(v[0], v[1])];
    // map back to the input labelling
    let mut out = [0.0; 3];
    for (i, p) in tri.iter().enumerate() {
        let j = v.iter().position(|q| q == p).expect("same vertices");
        out[i] = d[j];
    }
    out
}

/// A random similarity: rotation, log-uniform scale in [1e-3, 1e3], and translation.
pub fn similarity<R: Rng>(rng: &mut R) -> impl Fn(Point) -> Point {
    let theta = rng.gen_range(0.0..2.0 * PI);
    let scale = 10f64.powf(rng.gen_range(-3.0..3.0));
    let shift = Point::new(rng.gen_range(-10.0..10.0), rng.gen_range(-10.0..10.0)) * scale;
    let (s, c) = theta.sin_cos();
    move |p: Point| Point::new(c * p.x - s * p.y, s * p.x + c * p.y) * scale + shift
}

/// A triangle with angles `a` at the first vertex and `b` at the second (radians),
/// placed by a random similarity with a random cyclic rotation of its labels.
pub fn place<R: Rng>(rng: &mut R, a: f64, b: f64) -> Triangle {
    let c = PI - a - b;
    let p0 = Point::new(0.0, 0.0);
    let p1 = Point::new(1.0, 0.0);
    let r = b.sin() / c.sin();
    let p2 = Point::new(r * a.cos(), r * a.sin());
    let f = similarity(rng);
    let pts = [f(p0), f(p1), f(p2)];
    let k = rng.gen_range(0..3);
    Triangle::new(pts[k], pts[(k + 1) % 3], pts[(k + 2) % 3]).expect("non-degenerate")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    Acute,
    Right,
    Interior,
    Boundary,
    Exterior,
}

const MIN_ANGLE: f64 = 1.0 * PI / 180.0;

/// Independent statement of the tangent criterion for base angles `a`, `b` beside an
/// obtuse apex.
pub fn criterion(a: f64, b: f64) -> f64 {
    let (ta, tb) = (a.tan(), b.tan());
    ((1.0 + ta * ta) * tb).sqrt() + ((1.0 + tb * tb) * ta).sqrt() - (3.0 * (ta + tb)).sqrt()
}

/// Base angle `b` with `criterion(a, b) = 0`, by bisection on `(0, π/2 − a)`.
pub fn boundary_partner(a: f64) -> f64 {
    let (mut lo, mut hi) = (1e-12, FRAC_PI_2 - a - 1e-12);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if criterion(a, mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Base angles (a, b) with the third angle at the apex.
pub fn angles_for<R: Rng>(rng: &mut R, shape: Shape) -> (f64, f64) {
    loop {
        let (a, b) = match shape {
            Shape::Right => {
                let a = rng.gen_range(MIN_ANGLE..FRAC_PI_2 - MIN_ANGLE);
                (a, FRAC_PI_2 - a)
            }
            Shape::Boundary => {
                let a = rng.gen_range(5f64.to_radians()..80f64.to_radians());
                (a, boundary_partner(a))
            }
            _ => {
                let a = rng.gen_range(MIN_ANGLE..PI);
                let b = rng.gen_range(MIN_ANGLE..PI);
                (a, b)
            }
        };
        let c = PI - a - b;
        if c < MIN_ANGLE || a < MIN_ANGLE || b < MIN_ANGLE {
            continue;
        }
        let ok = match shape {
            Shape::Acute => c < FRAC_PI_2 - 1e-3 && a < FRAC_PI_2 - 1e-3 && b < FRAC_PI_2 - 1e-3,
            Shape::Right | Shape::Boundary => true,
            Shape::Interior => c > FRAC_PI_2 + 1e-3 && criterion(a, b) > 1e-6,
            Shape::Exterior => c > FRAC_PI_2 + 1e-3 && criterion(a, b) < -1e-6,
        };
        if ok {
            return (a, b);
        }
    }
}

pub fn random_triangle<R: Rng>(rng: &mut R, shape: Shape) -> Triangle {
    let (a, b) = angles_for(rng, shape);
    place(rng, a, b)
}

/// A mixed batch with every shape represented.
pub fn mixed_triangles<R: Rng>(rng: &mut R, n: usize) -> Vec<(Shape, Triangle)> {
    const CYCLE: [Shape; 10] = [
        Shape::Acute,
        Shape::Acute,
        Shape::Right,
        Shape::Interior,
        Shape::Interior,
        Shape::Interior,
        Shape::Boundary,
        Shape::Exterior,
        Shape::Exterior,
        Shape::Exterior,
    ];
    (0..n)
        .map(|i| {
            let s = CYCLE[i % CYCLE.len()];
            (s, random_triangle(rng, s))
        })
        .collect()
}

/// A random convex polygon with 3 to 12 vertices and unit area.
pub fn random_convex_polygon<R: Rng>(rng: &mut R) -> Vec<Point> {
    loop {
        let n = rng.gen_range(3..=12);
        let (ax, ay) = (rng.gen_range(0.5..2.0), rng.gen_range(0.5..2.0));
        let mut angles: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..2.0 * PI)).collect();
        angles.sort_by(f64::total_cmp);
        let pts: Vec<P> = angles.iter().map(|t| (ax * t.cos(), ay * t.sin())).collect();
        let area = shoelace(&pts);
        if area < 0.05 * PI * ax * ay {
            continue;
        }
        let s = area.sqrt();
        let shift = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        return pts
            .iter()
            .map(|p| Point::new(p.0 / s + shift.0, p.1 / s + shift.1))
            .collect();
    }
}

/// Three counter-clockwise ray angles (degrees) whose gaps all lie in
/// `[min_gap, π − min_gap]`.
pub fn random_rays<R: Rng>(rng: &mut R, min_gap: f64) -> [f64; 3] {
    loop {
        let u: [f64; 3] = [rng.gen(), rng.gen(), rng.gen()];
        let s: f64 = u.iter().sum();
        let gaps = u.map(|x| 2.0 * PI * x / s);
        if gaps.iter().all(|&g| g >= min_gap && g <= PI - min_gap) {
            let start = rng.gen_range(0.0..2.0 * PI);
            let a0 = start;
            let a1 = a0 + gaps[0];
            let a2 = a1 + gaps[1];
            return [a0, a1, a2].map(f64::to_degrees);
        }
    }
}

/// Positive fractions summing to one with each at least `floor`.
pub fn random_fractions<R: Rng>(rng: &mut R, floor: f64) -> [f64; 3] {
    let u: [f64; 3] = [rng.gen(), rng.gen(), rng.gen()];
    let s: f64 = u.iter().sum();
    let spare = 1.0 - 3.0 * floor;
    let f = u.map(|x| floor + spare * x / s);
    let sum: f64 = f.iter().sum();
    f.map(|x| x / sum)
}

/// Index of the sector containing direction `d`, rays given in radians ccw.
pub fn sector_of(rays: [f64; 3], d: P) -> usize {
    let t = d.1.atan2(d.0);
    let rel = |a: f64| (t - a).rem_euclid(2.0 * PI);
    let span = |i: usize| (rays[(i + 1) % 3] - rays[i]).rem_euclid(2.0 * PI);
    (0..3).find(|&i| rel(rays[i]) < span(i)).unwrap_or(2)
}

/// Areas of a convex polygon inside the sectors at `apex` between consecutive rays
/// (radians, counter-clockwise, every gap below π).
pub fn oracle_sector_areas(poly: &[Point], rays: [f64; 3], apex: Point) -> [f64; 3] {
    let c = poly.iter().fold(Point::new(0.0, 0.0), |s, &p| s + p) * (1.0 / poly.len() as f64);
    let local: Vec<P> = poly.iter().map(|&p| (p.x - c.x, p.y - c.y)).collect();
    let x = (apex.x - c.x, apex.y - c.y);
    [0, 1, 2].map(|i| {
        let (s0, c0) = rays[i].sin_cos();
        let (s1, c1) = rays[(i + 1) % 3].sin_cos();
        // left of the first ray: cross(d0, p - x) >= 0, i.e. (s0, -c0)·(p - x) <= 0
        let part = clip(&local, (s0, -c0), s0 * x.0 - c0 * x.1);
        // right of the second ray: cross(d1, p - x) <= 0
        let part = clip(&part, (-s1, c1), -s1 * x.0 + c1 * x.1);
        if part.len() < 3 {
            0.0
        } else {
            shoelace(&part)
        }
    })
}
