use std::f64::consts::PI;

use jones::KnotSpec;

use crate::KnotStateError;

fn wrap(x: f64) -> f64 {
    x - x.round()
}

/// A closed subset of the torus `[0,1)^2` in `(p, q)` coordinates, invariant
/// under the lattice and under `(p, q) -> (-p, -q)`.
pub trait SupportCurve: Send + Sync {
    fn name(&self) -> String;
    /// Euclidean distance to the nearest lattice translate, capped at `cap`.
    fn distance(&self, p: f64, q: f64, cap: f64) -> f64;
}

/// The family `a p + b q in c + Z`.
#[derive(Clone, Debug, PartialEq)]
pub struct Line {
    pub a: i64,
    pub b: i64,
    pub c: f64,
    pub label: String,
}

impl Line {
    /// `D_0 = {p in Z}`.
    pub fn d0() -> Self {
        Self { a: 1, b: 0, c: 0.0, label: "D0".into() }
    }

    /// `D_s = (s mu - lambda) R + R`, i.e. `p + s q in Z`.
    pub fn d(s: i64) -> Self {
        Self { a: 1, b: s, c: 0.0, label: format!("D{s}") }
    }

    /// `D_s + lambda/2s`, i.e. `p + s q in 1/2 + Z`.
    pub fn d_shifted(s: i64) -> Self {
        Self { a: 1, b: s, c: 0.5, label: format!("D{s}+lambda/{}", 2 * s) }
    }
}

impl SupportCurve for Line {
    fn name(&self) -> String {
        self.label.clone()
    }

    fn distance(&self, p: f64, q: f64, cap: f64) -> f64 {
        let (a, b) = (self.a as f64, self.b as f64);
        (wrap(a * p + b * q - self.c).abs() / a.hypot(b)).min(cap)
    }
}

/// `X_8 = {cos(2 pi p) + 1 = cos(8 pi q) - cos(4 pi q)}`, sampled as a point
/// cloud. With `c = cos(4 pi q)` the equation is `2c^2 - c - 2 - cos(2 pi p) = 0`;
/// the root `c = (1 - sqrt(17 + 8 cos 2 pi p))/4` traces four smooth branches
/// in `q` over each `p`, and `c = 1` gives the two isolated points `(1/2, 0)`
/// and `(1/2, 1/2)`.
pub struct X8Curve {
    buckets: Vec<Vec<(f64, f64)>>,
    side: usize,
}

impl X8Curve {
    pub const SAMPLES: usize = 4096;

    pub fn new() -> Self {
        let per_branch = Self::SAMPLES / 4;
        let mut pts = Vec::with_capacity(Self::SAMPLES + 2);
        for i in 0..per_branch {
            let p = i as f64 / per_branch as f64;
            let c = (1.0 - (17.0 + 8.0 * (2.0 * PI * p).cos()).sqrt()) / 4.0;
            let a = c.clamp(-1.0, 1.0).acos() / (4.0 * PI);
            for q in [a, -a, 0.5 + a, 0.5 - a] {
                pts.push((p, q.rem_euclid(1.0)));
            }
        }
        pts.push((0.5, 0.0));
        pts.push((0.5, 0.5));
        let side = 64;
        let mut buckets = vec![Vec::new(); side * side];
        for (p, q) in pts {
            let i = ((p * side as f64) as usize).min(side - 1);
            let j = ((q * side as f64) as usize).min(side - 1);
            buckets[j * side + i].push((p, q));
        }
        Self { buckets, side }
    }

    /// Whether `(p, q)` satisfies the implicit equation to `tol`.
    pub fn residual(p: f64, q: f64) -> f64 {
        (2.0 * PI * p).cos() + 1.0 - (8.0 * PI * q).cos() + (4.0 * PI * q).cos()
    }

    pub fn points(&self) -> impl Iterator<Item = &(f64, f64)> {
        self.buckets.iter().flatten()
    }
}

impl Default for X8Curve {
    fn default() -> Self {
        Self::new()
    }
}

impl SupportCurve for X8Curve {
    fn name(&self) -> String {
        "X8".into()
    }

    fn distance(&self, p: f64, q: f64, cap: f64) -> f64 {
        let n = self.side as i64;
        let h = 1.0 / n as f64;
        let (p, q) = (p.rem_euclid(1.0), q.rem_euclid(1.0));
        let ci = (p * n as f64) as i64;
        let cj = (q * n as f64) as i64;
        let mut best = cap * cap;
        let max_ring = ((cap / h).ceil() as i64 + 1).min(n / 2 + 1);
        for r in 0..=max_ring {
            // cells in ring r are at least (r - 1) h away
            let lower = ((r - 1).max(0) as f64 * h).powi(2);
            if lower > best {
                break;
            }
            for dj in -r..=r {
                for di in -r..=r {
                    if di.abs() != r && dj.abs() != r {
                        continue;
                    }
                    let i = (ci + di).rem_euclid(n) as usize;
                    let j = (cj + dj).rem_euclid(n) as usize;
                    for &(x, y) in &self.buckets[j * self.side + i] {
                        let d2 = wrap(p - x).powi(2) + wrap(q - y).powi(2);
                        best = best.min(d2);
                    }
                }
            }
        }
        best.sqrt().min(cap)
    }
}

/// A union of curves.
pub struct SupportCurves {
    pub curves: Vec<Box<dyn SupportCurve>>,
}

impl SupportCurves {
    pub fn new(curves: Vec<Box<dyn SupportCurve>>) -> Self {
        Self { curves }
    }

    pub fn names(&self) -> Vec<String> {
        self.curves.iter().map(|c| c.name()).collect()
    }

    pub fn distance(&self, p: f64, q: f64, cap: f64) -> f64 {
        self.curves.iter().fold(cap, |d, c| d.min(c.distance(p, q, d)))
    }

    /// The expected support: `D_0` for the unknot, `D_0 + X_8` for the
    /// figure-eight knot and `D_0 + D_ab + (D_ab + lambda/2ab)` for torus knots.
    pub fn for_knot(knot: KnotSpec) -> Self {
        let mut v: Vec<Box<dyn SupportCurve>> = vec![Box::new(Line::d0())];
        match knot {
            KnotSpec::Unknot => {}
            KnotSpec::FigureEight => v.push(Box::new(X8Curve::new())),
            KnotSpec::Torus { a, b } => {
                v.push(Box::new(Line::d(a * b)));
                v.push(Box::new(Line::d_shifted(a * b)));
            }
        }
        Self::new(v)
    }

    /// `D_0` alone.
    pub fn abelian_only() -> Self {
        Self::new(vec![Box::new(Line::d0())])
    }

    /// Parses `D0+X8+D6+D6/2`, where `Ds/2` is `D_s + lambda/2s`.
    pub fn parse(spec: &str) -> Result<Self, KnotStateError> {
        let mut v: Vec<Box<dyn SupportCurve>> = Vec::new();
        for part in spec.split('+').map(str::trim) {
            let bad = || KnotStateError::UnknownCurve(part.to_string());
            if part.eq_ignore_ascii_case("x8") {
                v.push(Box::new(X8Curve::new()));
                continue;
            }
            let rest = part.strip_prefix('D').or_else(|| part.strip_prefix('d')).ok_or_else(bad)?;
            let (s, shifted) = match rest.strip_suffix("/2") {
                Some(s) => (s, true),
                None => (rest, false),
            };
            let s: i64 = s.parse().map_err(|_| bad())?;
            v.push(Box::new(match (s, shifted) {
                (0, false) => Line::d0(),
                (0, true) => return Err(bad()),
                (s, false) => Line::d(s),
                (s, true) => Line::d_shifted(s),
            }));
        }
        Ok(Self::new(v))
    }
}
