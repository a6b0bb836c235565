//! Faces by diverging chain rays: each face is swept by chain segments from an
//! apex to the points of the opposite edge. The four faces are p₁ over
//! [q₁,q₂] and [q₂,p₂], and p₂ over [q₁,q₂] and [q₁,p₁].
//!
//! The disjointness check here is a sampling check on triangulated faces. It
//! is evidence, not proof.

use std::collections::HashMap;
use std::fmt::Write as _;

use super::{Tetrahedron, Vertex};
use crate::error::{Error, Result};
use crate::heisenberg::{ChainSegment, HPoint};
use crate::scalars::Approx;

/// (apex, edge start, edge end) for the four faces.
pub const FACES: [(Vertex, Vertex, Vertex); 4] = [
    (Vertex::P1, Vertex::Q1, Vertex::Q2),
    (Vertex::P1, Vertex::Q2, Vertex::P2),
    (Vertex::P2, Vertex::Q1, Vertex::Q2),
    (Vertex::P2, Vertex::Q1, Vertex::P1),
];

#[derive(Clone, Copy, Debug)]
pub struct SampleOptions {
    /// Points per ray; 0 means "same as the edge sample count".
    pub ray_points: usize,
    /// Height at which half-rays toward ∞ are cut; 0 picks one from the
    /// tetrahedron's extent.
    pub ray_length: f64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { ray_points: 0, ray_length: 0.0 }
    }
}

#[derive(Clone, Debug)]
pub struct Face {
    pub apex: Vertex,
    pub edge: (Vertex, Vertex),
    /// The edge opposite the apex.
    pub base: Vec<[f64; 3]>,
    /// One ray per edge sample, each starting at the apex.
    pub rays: Vec<Vec<[f64; 3]>>,
}

fn extent(tet: &Tetrahedron<Approx>) -> f64 {
    let m =
        tet.vertices.iter().filter_map(HPoint::to_xyz).flat_map(|p| p.into_iter().map(f64::abs)).fold(0.0, f64::max);
    2.0 * (1.0 + m)
}

fn point(p: [f64; 3]) -> HPoint<Approx> {
    HPoint::new(Approx::new(p[0], p[1]), Approx::new(p[2], 0.0))
}

fn edge_segment(tet: &Tetrahedron<Approx>, a: Vertex, b: Vertex) -> Result<ChainSegment<Approx>> {
    ChainSegment::new(tet.vertex(a).clone(), tet.vertex(b).clone(), tet.edge_choice(a, b))
}

/// Samples the edge at n points (its midpoint when n = 1) and sweeps a chain
/// segment from the apex to each.
pub fn face_sample(
    tet: &Tetrahedron<Approx>,
    apex: Vertex,
    edge: (Vertex, Vertex),
    n: usize,
    opts: &SampleOptions,
) -> Result<Face> {
    let known = FACES.iter().any(|&(a, s, e)| a == apex && ((s, e) == edge || (e, s) == edge));
    if !known || n == 0 {
        return Err(Error::Invalid(format!("no face with apex {apex} over [{}, {}] (n = {n})", edge.0, edge.1)));
    }
    let ray_length = if opts.ray_length > 0.0 { opts.ray_length } else { extent(tet) };
    let m = if opts.ray_points >= 2 { opts.ray_points } else { n.max(2) };
    let seg = edge_segment(tet, edge.0, edge.1)?;
    let base = seg.sample(n.max(2), ray_length)?;
    let targets: Vec<[f64; 3]> = if n == 1 { vec![seg.witness(ray_length)?] } else { base.clone() };
    let apex_pt = tet.vertex(apex);
    let mut rays = Vec::with_capacity(targets.len());
    for x in targets {
        let ray = ChainSegment::new(apex_pt.clone(), point(x), None)?;
        let mut pts = ray.sample(m, ray_length)?;
        if apex_pt.is_infinity() {
            // the half-ray is sampled from the top down
            pts.reverse();
        }
        rays.push(pts);
    }
    Ok(Face { apex, edge, base, rays })
}

type Tri = [[f64; 3]; 3];

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn add_scaled(a: [f64; 3], b: [f64; 3], s: f64) -> [f64; 3] {
    [a[0] + b[0] * s, a[1] + b[1] * s, a[2] + b[2] * s]
}

fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
    dot(sub(a, b), sub(a, b)).sqrt()
}

// Closest point on a triangle (Ericson, Real-Time Collision Detection, 5.1.5).
fn closest_on_triangle(p: [f64; 3], t: &Tri) -> [f64; 3] {
    let [a, b, c] = *t;
    let ab = sub(b, a);
    let ac = sub(c, a);
    let ap = sub(p, a);
    let d1 = dot(ab, ap);
    let d2 = dot(ac, ap);
    if d1 <= 0.0 && d2 <= 0.0 {
        return a;
    }
    let bp = sub(p, b);
    let d3 = dot(ab, bp);
    let d4 = dot(ac, bp);
    if d3 >= 0.0 && d4 <= d3 {
        return b;
    }
    let vc = d1 * d4 - d3 * d2;
    if vc <= 0.0 && d1 >= 0.0 && d3 <= 0.0 {
        return add_scaled(a, ab, d1 / (d1 - d3));
    }
    let cp = sub(p, c);
    let d5 = dot(ab, cp);
    let d6 = dot(ac, cp);
    if d6 >= 0.0 && d5 <= d6 {
        return c;
    }
    let vb = d5 * d2 - d1 * d6;
    if vb <= 0.0 && d2 >= 0.0 && d6 <= 0.0 {
        return add_scaled(a, ac, d2 / (d2 - d6));
    }
    let va = d3 * d6 - d5 * d4;
    if va <= 0.0 && (d4 - d3) >= 0.0 && (d5 - d6) >= 0.0 {
        return add_scaled(b, sub(c, b), (d4 - d3) / ((d4 - d3) + (d5 - d6)));
    }
    let denom = 1.0 / (va + vb + vc);
    add_scaled(add_scaled(a, ab, vb * denom), ac, vc * denom)
}

// Distance between segments pq and rs (Ericson 5.1.9).
fn segment_distance(p1: [f64; 3], q1: [f64; 3], p2: [f64; 3], q2: [f64; 3]) -> f64 {
    let d1 = sub(q1, p1);
    let d2 = sub(q2, p2);
    let r = sub(p1, p2);
    let a = dot(d1, d1);
    let e = dot(d2, d2);
    let f = dot(d2, r);
    let eps = 1e-30;
    let (s, t);
    if a <= eps && e <= eps {
        return dist(p1, p2);
    }
    if a <= eps {
        s = 0.0;
        t = (f / e).clamp(0.0, 1.0);
    } else {
        let c = dot(d1, r);
        if e <= eps {
            t = 0.0;
            s = (-c / a).clamp(0.0, 1.0);
        } else {
            let b = dot(d1, d2);
            let denom = a * e - b * b;
            let s0 = if denom > eps { ((b * f - c * e) / denom).clamp(0.0, 1.0) } else { 0.0 };
            let t0 = (b * s0 + f) / e;
            if t0 < 0.0 {
                t = 0.0;
                s = (-c / a).clamp(0.0, 1.0);
            } else if t0 > 1.0 {
                t = 1.0;
                s = ((b - c) / a).clamp(0.0, 1.0);
            } else {
                t = t0;
                s = s0;
            }
        }
    }
    dist(add_scaled(p1, d1, s), add_scaled(p2, d2, t))
}

fn segment_hits_triangle(p: [f64; 3], q: [f64; 3], t: &Tri) -> bool {
    // Möller–Trumbore restricted to the segment.
    let dir = sub(q, p);
    let e1 = sub(t[1], t[0]);
    let e2 = sub(t[2], t[0]);
    let h = cross(dir, e2);
    let a = dot(e1, h);
    if a.abs() < 1e-300 {
        return false;
    }
    let f = 1.0 / a;
    let s = sub(p, t[0]);
    let u = f * dot(s, h);
    if !(0.0..=1.0).contains(&u) {
        return false;
    }
    let qv = cross(s, e1);
    let v = f * dot(dir, qv);
    if v < 0.0 || u + v > 1.0 {
        return false;
    }
    let w = f * dot(e2, qv);
    (0.0..=1.0).contains(&w)
}

fn triangle_distance(a: &Tri, b: &Tri) -> f64 {
    for k in 0..3 {
        if segment_hits_triangle(a[k], a[(k + 1) % 3], b) || segment_hits_triangle(b[k], b[(k + 1) % 3], a) {
            return 0.0;
        }
    }
    let mut best = f64::INFINITY;
    for k in 0..3 {
        best = best.min(dist(a[k], closest_on_triangle(a[k], b)));
        best = best.min(dist(b[k], closest_on_triangle(b[k], a)));
        for l in 0..3 {
            best = best.min(segment_distance(a[k], a[(k + 1) % 3], b[l], b[(l + 1) % 3]));
        }
    }
    best
}

/// Triangulates the ray grid, dropping triangles with a vertex rejected by `keep`.
fn triangles(face: &Face, keep: impl Fn([f64; 3]) -> bool) -> Vec<Tri> {
    let flags: Vec<Vec<bool>> = face.rays.iter().map(|r| r.iter().map(|&p| keep(p)).collect()).collect();
    let mut out = Vec::new();
    for (k, pair) in face.rays.windows(2).enumerate() {
        let (r, s) = (&pair[0], &pair[1]);
        let (fr, fs) = (&flags[k], &flags[k + 1]);
        for j in 0..r.len().min(s.len()) - 1 {
            let cand = [
                ([r[j], r[j + 1], s[j]], fr[j] && fr[j + 1] && fs[j]),
                ([r[j + 1], s[j + 1], s[j]], fr[j + 1] && fs[j + 1] && fs[j]),
            ];
            for (t, ok) in cand {
                let area2 = cross(sub(t[1], t[0]), sub(t[2], t[0]));
                if ok && dot(area2, area2) > 1e-30 {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn point_polyline_distance(p: [f64; 3], line: &[[f64; 3]]) -> f64 {
    line.windows(2).map(|w| segment_distance(p, p, w[0], w[1])).fold(f64::INFINITY, f64::min)
}

fn bbox(t: &Tri) -> ([f64; 3], [f64; 3]) {
    let mut lo = t[0];
    let mut hi = t[0];
    for p in &t[1..] {
        for k in 0..3 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    (lo, hi)
}

fn cell(x: [f64; 3], size: f64) -> [i64; 3] {
    [(x[0] / size).floor() as i64, (x[1] / size).floor() as i64, (x[2] / size).floor() as i64]
}

/// Smallest distance between two triangle soups, found by growing a probe
/// radius over a uniform grid until the best candidate lies inside it.
fn soup_distance(a: &[Tri], b: &[Tri]) -> f64 {
    if a.is_empty() || b.is_empty() {
        return f64::INFINITY;
    }
    let mean_edge = b.iter().map(|t| dist(t[0], t[1])).sum::<f64>() / b.len() as f64;
    let mut probe = mean_edge.max(1e-6);
    let span = a.iter().chain(b).flat_map(|t| t.iter()).flat_map(|p| p.iter()).fold(0.0f64, |m, x| m.max(x.abs()));
    loop {
        let size = probe.max(mean_edge);
        let mut grid: HashMap<[i64; 3], Vec<usize>> = HashMap::new();
        for (k, t) in b.iter().enumerate() {
            let (lo, hi) = bbox(t);
            let (c0, c1) = (cell(lo, size), cell(hi, size));
            for x in c0[0]..=c1[0] {
                for y in c0[1]..=c1[1] {
                    for z in c0[2]..=c1[2] {
                        grid.entry([x, y, z]).or_default().push(k);
                    }
                }
            }
        }
        let mut stamp = vec![usize::MAX; b.len()];
        let mut best = f64::INFINITY;
        for (ka, t) in a.iter().enumerate() {
            let (mut lo, mut hi) = bbox(t);
            for k in 0..3 {
                lo[k] -= probe;
                hi[k] += probe;
            }
            let (c0, c1) = (cell(lo, size), cell(hi, size));
            for x in c0[0]..=c1[0] {
                for y in c0[1]..=c1[1] {
                    for z in c0[2]..=c1[2] {
                        let Some(list) = grid.get(&[x, y, z]) else { continue };
                        for &kb in list {
                            if stamp[kb] == ka {
                                continue;
                            }
                            stamp[kb] = ka;
                            best = best.min(triangle_distance(t, &b[kb]));
                        }
                    }
                }
            }
        }
        if best <= probe || probe > 4.0 * span + 1.0 {
            return best;
        }
        probe *= 2.0;
    }
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct FacePair {
    pub faces: (usize, usize),
    pub shared_edge: (Vertex, Vertex),
    pub min_distance: f64,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct Disjointness {
    pub samples: usize,
    pub tol: f64,
    pub exclusion: f64,
    pub min_distance: f64,
    pub pairs: Vec<FacePair>,
    pub pass: bool,
}

/// Samples the four faces at n × n and measures the smallest distance between
/// each pair of faces after removing triangles within `exclusion` of the edge
/// the pair shares. Passes when every distance exceeds `tol`.
pub fn faces_disjoint(tet: &Tetrahedron<Approx>, n: usize, tol: f64, exclusion: f64) -> Result<Disjointness> {
    let opts = SampleOptions::default();
    let faces: Vec<Face> =
        FACES.iter().map(|&(apex, a, b)| face_sample(tet, apex, (a, b), n, &opts)).collect::<Result<_>>()?;
    let ray_length = extent(tet);
    let vertex_sets: Vec<[Vertex; 3]> = FACES.iter().map(|&(a, s, e)| [a, s, e]).collect();
    let mut jobs = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let shared: Vec<Vertex> = vertex_sets[i].iter().copied().filter(|v| vertex_sets[j].contains(v)).collect();
            let [u, v] = shared[..] else {
                return Err(Error::Invalid("faces of a tetrahedron share exactly one edge".into()));
            };
            jobs.push((i, j, u, v, edge_segment(tet, u, v)?.sample(4 * n, ray_length)?));
        }
    }
    let faces = &faces;
    let pairs: Vec<FacePair> = std::thread::scope(|scope| {
        let handles: Vec<_> = jobs
            .into_iter()
            .map(|(i, j, u, v, edge)| {
                scope.spawn(move || {
                    let keep = |p: [f64; 3]| exclusion <= 0.0 || point_polyline_distance(p, &edge) > exclusion;
                    let ta = triangles(&faces[i], keep);
                    let tb = triangles(&faces[j], keep);
                    FacePair { faces: (i, j), shared_edge: (u, v), min_distance: soup_distance(&ta, &tb) }
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("face pair worker panicked")).collect()
    });
    let min_distance = pairs.iter().map(|p| p.min_distance).fold(f64::INFINITY, f64::min);
    Ok(Disjointness { samples: n, tol, exclusion, min_distance, pairs, pass: min_distance > tol })
}

/// OBJ text: one base-edge polyline and n ray polylines per face, vertices
/// written as (re z, im z, t).
pub fn mesh_obj(tets: &[Tetrahedron<Approx>], n: usize) -> Result<String> {
    let mut out = String::new();
    let mut next = 1usize;
    let mut emit = |out: &mut String, line: &[[f64; 3]]| {
        for p in line {
            let _ = writeln!(out, "v {:.9} {:.9} {:.9}", p[0], p[1], p[2]);
        }
        let idx: Vec<String> = (next..next + line.len()).map(|k| k.to_string()).collect();
        let _ = writeln!(out, "l {}", idx.join(" "));
        next += line.len();
    };
    for (k, tet) in tets.iter().enumerate() {
        let _ = writeln!(out, "o tetrahedron_{}", k + 1);
        for &(apex, a, b) in &FACES {
            let face = face_sample(tet, apex, (a, b), n, &SampleOptions::default())?;
            let _ = writeln!(out, "g face_{apex}_{a}{b}");
            emit(&mut out, &face.base);
            for ray in &face.rays {
                emit(&mut out, ray);
            }
        }
    }
    Ok(out)
}
