//! Seeded uniform and Poisson point processes on a convex region.
//!
//! Every draw comes from a ChaCha8 stream keyed by `(seed, stream)`, so a
//! trial's points depend only on its own key and never on which worker ran
//! it.

use std::fmt;
use std::io::{BufRead, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Poisson};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::geometry::{ConvexRegion, Point};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Process {
    /// Exactly `n` i.i.d. uniform points.
    Uniform,
    /// Poisson-distributed count with mean `intensity · area`, then uniform.
    Poisson,
}

impl fmt::Display for Process {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Process::Uniform => "uniform",
            Process::Poisson => "poisson",
        })
    }
}

impl std::str::FromStr for Process {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" => Ok(Process::Uniform),
            "poisson" => Ok(Process::Poisson),
            other => domain(format!("unknown process `{other}` (uniform|poisson)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PointSet {
    pub points: Vec<Point>,
    pub seed: u64,
    pub stream: u64,
    pub process: Process,
    pub region_id: String,
}

impl PointSet {
    /// Wraps externally supplied points (e.g. read from CSV).
    pub fn from_points(points: Vec<Point>) -> Self {
        Self {
            points,
            seed: 0,
            stream: 0,
            process: Process::Uniform,
            region_id: "external".to_string(),
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Draws one uniform point by rejection from the bounding box.
pub fn uniform_point<R: Rng + ?Sized>(region: &ConvexRegion, rng: &mut R) -> Point {
    let (lo, hi) = region.bounding_box();
    let (w, h) = (hi.x - lo.x, hi.y - lo.y);
    loop {
        let p = Point::new(
            lo.x + w * rng.random::<f64>(),
            lo.y + h * rng.random::<f64>(),
        );
        if region.contains(p) {
            return p;
        }
    }
}

pub fn sample_uniform(region: &ConvexRegion, n: usize, seed: u64) -> PointSet {
    sample_uniform_stream(region, n, seed, 0)
}

pub fn sample_uniform_stream(region: &ConvexRegion, n: usize, seed: u64, stream: u64) -> PointSet {
    let mut rng = rng_for(seed, stream);
    let points = (0..n).map(|_| uniform_point(region, &mut rng)).collect();
    PointSet {
        points,
        seed,
        stream,
        process: Process::Uniform,
        region_id: region.label().to_string(),
    }
}

pub fn sample_poisson(region: &ConvexRegion, intensity: f64, seed: u64) -> Result<PointSet> {
    sample_poisson_stream(region, intensity, seed, 0)
}

pub fn sample_poisson_stream(
    region: &ConvexRegion,
    intensity: f64,
    seed: u64,
    stream: u64,
) -> Result<PointSet> {
    if !(intensity >= 0.0) || !intensity.is_finite() {
        return domain(format!(
            "intensity must be finite and >= 0, got {intensity}"
        ));
    }
    let mut rng = rng_for(seed, stream);
    let mean = intensity * region.area();
    let count = if mean > 0.0 {
        let dist =
            Poisson::new(mean).map_err(|e| Error::Domain(format!("poisson mean {mean}: {e}")))?;
        dist.sample(&mut rng) as usize
    } else {
        0
    };
    let points = (0..count)
        .map(|_| uniform_point(region, &mut rng))
        .collect();
    Ok(PointSet {
        points,
        seed,
        stream,
        process: Process::Poisson,
        region_id: region.label().to_string(),
    })
}

/// Writes `x,y` CSV with 17 significant digits per coordinate.
pub fn write_csv<W: Write>(points: &[Point], mut out: W) -> Result<()> {
    writeln!(out, "x,y")?;
    for p in points {
        writeln!(out, "{:.16e},{:.16e}", p.x, p.y)?;
    }
    Ok(())
}

/// Reads `x,y` CSV. The header line is optional; blank lines are skipped.
/// Errors carry the 1-based line number.
pub fn read_csv<R: BufRead>(input: R) -> Result<Vec<Point>> {
    let mut pts = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line?;
        let lineno = i + 1;
        let t = line.trim();
        if t.is_empty() {
            continue;
        }
        if lineno == 1 && t.replace(' ', "").eq_ignore_ascii_case("x,y") {
            continue;
        }
        let fields: Vec<&str> = t.split(',').map(str::trim).collect();
        if fields.len() != 2 {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("expected 2 fields, found {}", fields.len()),
            });
        }
        let parse = |s: &str| {
            s.parse::<f64>()
                .ok()
                .filter(|v| v.is_finite())
                .ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: format!("`{s}` is not a finite number"),
                })
        };
        pts.push(Point::new(parse(fields[0])?, parse(fields[1])?));
    }
    Ok(pts)
}

pub fn write_json<W: Write>(points: &[Point], out: W) -> Result<()> {
    let arr: Vec<[f64; 2]> = points.iter().map(|p| [p.x, p.y]).collect();
    serde_json::to_writer(out, &arr)?;
    Ok(())
}

pub fn read_json(text: &str) -> Result<Vec<Point>> {
    let arr: Vec<[f64; 2]> = serde_json::from_str(text)?;
    Ok(arr.into_iter().map(Point::from).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn empty_and_deterministic() {
        let sq = ConvexRegion::unit_square();
        assert!(sample_uniform(&sq, 0, 3).is_empty());
        let a = sample_uniform(&sq, 100, 42);
        let b = sample_uniform(&sq, 100, 42);
        assert_eq!(a, b);
        let c = sample_uniform(&sq, 100, 43);
        assert_ne!(a.points, c.points);
        let s1 = sample_uniform_stream(&sq, 100, 42, 1);
        assert_ne!(a.points, s1.points);
        assert!(a.points.iter().all(|p| sq.contains(*p)));
    }

    #[test]
    fn disk_points_inside_and_acceptance_rate() {
        let d = ConvexRegion::unit_disk();
        let ps = sample_uniform(&d, 100_000, 7);
        let rad = 1.0 / PI.sqrt();
        assert!(ps.points.iter().all(|p| p.norm() <= rad * (1.0 + 1e-12)));

        // acceptance of the bounding-box rejection loop is π/4
        let mut rng = rng_for(7, 99);
        let (lo, hi) = d.bounding_box();
        let trials = 200_000;
        let hits = (0..trials)
            .filter(|_| {
                let p = Point::new(
                    lo.x + (hi.x - lo.x) * rng.random::<f64>(),
                    lo.y + (hi.y - lo.y) * rng.random::<f64>(),
                );
                d.contains(p)
            })
            .count();
        let rate = hits as f64 / trials as f64;
        let se = (PI / 4.0 * (1.0 - PI / 4.0) / trials as f64).sqrt();
        assert!((rate - PI / 4.0).abs() < 4.0 * se);
    }

    #[test]
    fn poisson_edge_cases() {
        let sq = ConvexRegion::unit_square();
        assert!(sample_poisson(&sq, 0.0, 1).unwrap().is_empty());
        assert!(sample_poisson(&sq, -1.0, 1).is_err());
        assert_eq!(
            sample_poisson(&sq, 50.0, 9).unwrap(),
            sample_poisson(&sq, 50.0, 9).unwrap()
        );
    }

    #[test]
    fn csv_round_trip_and_errors() {
        let pts = vec![Point::new(0.1, 1.0 / 3.0), Point::new(-2.5e-7, 1e10)];
        let mut buf = Vec::new();
        write_csv(&pts, &mut buf).unwrap();
        let back = read_csv(&buf[..]).unwrap();
        assert_eq!(pts, back);

        let bad = "x,y\n0,0\n1,zz\n";
        match read_csv(bad.as_bytes()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(read_csv("1,2,3\n".as_bytes()).is_err());
    }

    #[test]
    fn json_round_trip() {
        let pts = vec![Point::new(0.25, 0.5)];
        let mut buf = Vec::new();
        write_json(&pts, &mut buf).unwrap();
        assert_eq!(read_json(std::str::from_utf8(&buf).unwrap()).unwrap(), pts);
    }
}
