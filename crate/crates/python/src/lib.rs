//! Python bindings: regions, the closed forms, the integral, sampling,
//! exact radii and the Monte Carlo harness.
//!
//! Errors from the core library surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use rgg_core::asymptotics::{self, PredictionInput, QuadratureSpec};
use rgg_core::geometry::{self, spec::RegionSpec};
use rgg_core::montecarlo::{self, ExperimentConfig};
use rgg_core::rgg;
use rgg_core::sampling::{self, PointSet, Process};
use rgg_core::{ConvexRegion, Point};

fn err(e: rgg_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn point_set(points: Vec<(f64, f64)>) -> PointSet {
    PointSet::from_points(points.into_iter().map(|(x, y)| Point::new(x, y)).collect())
}

fn tuples(ps: &PointSet) -> Vec<(f64, f64)> {
    ps.points.iter().map(|p| (p.x, p.y)).collect()
}

/// A convex polygon or disk.
#[pyclass(name = "Region", module = "rgg_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyRegion {
    inner: ConvexRegion,
}

#[pymethods]
impl PyRegion {
    #[staticmethod]
    fn unit_square() -> Self {
        Self {
            inner: ConvexRegion::unit_square(),
        }
    }

    #[staticmethod]
    fn unit_disk() -> Self {
        Self {
            inner: ConvexRegion::unit_disk(),
        }
    }

    /// Unit-area rectangle of the given width.
    #[staticmethod]
    fn unit_rectangle(width: f64) -> PyResult<Self> {
        Ok(Self {
            inner: ConvexRegion::unit_rectangle(width).map_err(err)?,
        })
    }

    /// Unit-area regular polygon.
    #[staticmethod]
    fn regular(sides: usize) -> PyResult<Self> {
        Ok(Self {
            inner: ConvexRegion::regular_polygon(sides).map_err(err)?,
        })
    }

    #[staticmethod]
    fn polygon(vertices: Vec<(f64, f64)>) -> PyResult<Self> {
        let v = vertices
            .into_iter()
            .map(|(x, y)| Point::new(x, y))
            .collect();
        Ok(Self {
            inner: ConvexRegion::polygon(v).map_err(err)?,
        })
    }

    #[staticmethod]
    fn disk(center: (f64, f64), radius: f64) -> PyResult<Self> {
        let c = Point::new(center.0, center.1);
        Ok(Self {
            inner: ConvexRegion::disk(c, radius).map_err(err)?,
        })
    }

    /// Region from the JSON description used by the CLI.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = RegionSpec::from_json(text)
            .and_then(|s| s.build())
            .map_err(err)?;
        Ok(Self { inner })
    }

    #[getter]
    fn area(&self) -> f64 {
        self.inner.area()
    }

    #[getter]
    fn perimeter(&self) -> f64 {
        self.inner.perimeter()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn is_disk(&self) -> bool {
        self.inner.is_disk()
    }

    fn normalize_unit_area(&self) -> PyResult<Self> {
        Ok(Self {
            inner: self.inner.normalize_unit_area().map_err(err)?,
        })
    }

    fn contains(&self, p: (f64, f64)) -> bool {
        self.inner.contains(Point::new(p.0, p.1))
    }

    fn distance_to_boundary(&self, p: (f64, f64)) -> PyResult<f64> {
        self.inner
            .distance_to_boundary(Point::new(p.0, p.1))
            .map_err(err)
    }

    fn ball_intersection_area(&self, center: (f64, f64), r: f64) -> PyResult<f64> {
        self.inner
            .ball_intersection_area(Point::new(center.0, center.1), r)
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Region({}, area={}, perimeter={})",
            self.inner.label(),
            self.inner.area(),
            self.inner.perimeter()
        )
    }
}

#[pyfunction]
fn xi(k: usize, l: f64, c: f64) -> PyResult<f64> {
    asymptotics::xi(k, l, c).map_err(err)
}

#[pyfunction]
fn predicted_radius(n: f64, k: usize, c: f64, l: f64) -> PyResult<f64> {
    asymptotics::predicted_radius(&PredictionInput::new(n, k, c, l)).map_err(err)
}

#[pyfunction]
fn limit_probability(c: f64) -> f64 {
    asymptotics::limit_probability(c)
}

#[pyfunction]
#[pyo3(signature = (region, n, r, k, interior_cell=0.25, band_cell=0.0625, band_width=2.0))]
#[allow(clippy::too_many_arguments)]
fn integral_lhs<'py>(
    py: Python<'py>,
    region: &PyRegion,
    n: f64,
    r: f64,
    k: usize,
    interior_cell: f64,
    band_cell: f64,
    band_width: f64,
) -> PyResult<Bound<'py, PyDict>> {
    let quad = QuadratureSpec {
        interior_cell,
        band_cell,
        band_width,
    };
    let b = py
        .detach(|| asymptotics::integral_lhs(&region.inner, n, r, k, &quad))
        .map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("total", b.total)?;
    d.set_item("interior", b.interior)?;
    d.set_item("boundary_band", b.boundary_band)?;
    Ok(d)
}

#[pyfunction]
fn edge_strip_integral(n: f64, r: f64, k: usize) -> PyResult<f64> {
    asymptotics::edge_strip_integral(n, r, k).map_err(err)
}

#[pyfunction]
fn segment_area(r: f64, t: f64) -> PyResult<f64> {
    geometry::segment_area(r, t).map_err(err)
}

#[pyfunction]
fn lens_shadow_area(r: f64, d: f64) -> PyResult<f64> {
    geometry::lens_shadow_area_exact(r, d).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (region, n, seed, stream=0))]
fn sample_uniform(region: &PyRegion, n: usize, seed: u64, stream: u64) -> Vec<(f64, f64)> {
    tuples(&sampling::sample_uniform_stream(
        &region.inner,
        n,
        seed,
        stream,
    ))
}

#[pyfunction]
#[pyo3(signature = (region, intensity, seed, stream=0))]
fn sample_poisson(
    region: &PyRegion,
    intensity: f64,
    seed: u64,
    stream: u64,
) -> PyResult<Vec<(f64, f64)>> {
    let ps =
        sampling::sample_poisson_stream(&region.inner, intensity, seed, stream).map_err(err)?;
    Ok(tuples(&ps))
}

/// Both critical radii at order `k` as a dict.
#[pyfunction]
fn radii<'py>(py: Python<'py>, points: Vec<(f64, f64)>, k: usize) -> PyResult<Bound<'py, PyDict>> {
    let ps = point_set(points);
    let r = py.detach(|| rgg::radii(&ps, k)).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("rho_delta", r.rho_delta)?;
    d.set_item("rho_kappa", r.rho_kappa)?;
    d.set_item("k", r.k)?;
    d.set_item("equal", r.equal)?;
    Ok(d)
}

#[pyfunction]
fn min_degree_radius(points: Vec<(f64, f64)>, k: usize) -> PyResult<f64> {
    rgg::min_degree_radius(&point_set(points), k).map_err(err)
}

#[pyfunction]
fn connectivity_radius(points: Vec<(f64, f64)>, k: usize) -> PyResult<f64> {
    rgg::connectivity_radius(&point_set(points), k).map_err(err)
}

#[pyfunction]
#[pyo3(signature = (successes, trials, confidence=0.95))]
fn wilson_interval(successes: usize, trials: usize, confidence: f64) -> PyResult<(f64, f64)> {
    montecarlo::wilson_interval(successes, trials, confidence).map_err(err)
}

/// Runs the replicated experiment; returns `{"rows": [...], "equal_fraction", ...}`.
#[pyfunction]
#[pyo3(signature = (region, n, k, c_grid, replications, seed, process="uniform"))]
#[allow(clippy::too_many_arguments)]
fn run_experiment<'py>(
    py: Python<'py>,
    region: &PyRegion,
    n: usize,
    k: usize,
    c_grid: Vec<f64>,
    replications: usize,
    seed: u64,
    process: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let cfg = ExperimentConfig {
        region: region.inner.clone(),
        n,
        k,
        c_grid,
        replications,
        seed,
        process: process.parse::<Process>().map_err(err)?,
    };
    let s = py
        .detach(|| montecarlo::run_experiment(&cfg))
        .map_err(err)?;
    let rows = s
        .rows
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("c", r.c)?;
            d.set_item("r_n", r.r_n)?;
            d.set_item("p_hat_delta", r.p_hat_delta)?;
            d.set_item("ci_delta", (r.ci_lo_delta, r.ci_hi_delta))?;
            d.set_item("p_hat_kappa", r.p_hat_kappa)?;
            d.set_item("ci_kappa", (r.ci_lo_kappa, r.ci_hi_kappa))?;
            d.set_item("predicted", r.predicted)?;
            Ok(d)
        })
        .collect::<PyResult<Vec<_>>>()?;
    let out = PyDict::new(py);
    out.set_item("rows", rows)?;
    out.set_item("equal_fraction", s.equal_fraction)?;
    out.set_item("replications", s.replications)?;
    out.set_item(
        "trials",
        s.trials
            .iter()
            .map(|t| (t.rho_delta, t.rho_kappa))
            .collect::<Vec<_>>(),
    )?;
    Ok(out)
}

#[pymodule]
fn rgg_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRegion>()?;
    m.add_function(wrap_pyfunction!(xi, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_radius, m)?)?;
    m.add_function(wrap_pyfunction!(limit_probability, m)?)?;
    m.add_function(wrap_pyfunction!(integral_lhs, m)?)?;
    m.add_function(wrap_pyfunction!(edge_strip_integral, m)?)?;
    m.add_function(wrap_pyfunction!(segment_area, m)?)?;
    m.add_function(wrap_pyfunction!(lens_shadow_area, m)?)?;
    m.add_function(wrap_pyfunction!(sample_uniform, m)?)?;
    m.add_function(wrap_pyfunction!(sample_poisson, m)?)?;
    m.add_function(wrap_pyfunction!(radii, m)?)?;
    m.add_function(wrap_pyfunction!(min_degree_radius, m)?)?;
    m.add_function(wrap_pyfunction!(connectivity_radius, m)?)?;
    m.add_function(wrap_pyfunction!(wilson_interval, m)?)?;
    m.add_function(wrap_pyfunction!(run_experiment, m)?)?;
    Ok(())
}
