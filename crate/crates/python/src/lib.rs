//! Python bindings. Rationals cross the boundary as strings ("n/d" or "n");
//! inputs may also be ints or `fractions.Fraction`.

use barycev_core::locus::{explore, LocusOptions, ScanRegion};
use barycev_core::{BaryPoint, CenterKind, GeomError, Scalar};
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

create_exception!(barycev, GeometryError, PyValueError);

fn geom(e: GeomError) -> PyErr {
    GeometryError::new_err(format!("{}: {e}", e.code()))
}

fn scalar(obj: &Bound<'_, PyAny>) -> PyResult<Scalar> {
    if let Ok(i) = obj.extract::<i64>() {
        return Ok(Scalar::from(i));
    }
    obj.str()?.to_str()?.trim().parse().map_err(geom)
}

type Coords = (String, String, String);

fn coords(p: &BaryPoint) -> Coords {
    let [a, b, c] = p.coords().map(|c| c.to_string());
    (a, b, c)
}

fn point(obj: &Bound<'_, PyAny>) -> PyResult<BaryPoint> {
    let items: Vec<Bound<'_, PyAny>> = obj.try_iter()?.collect::<PyResult<_>>()?;
    let [a, b, c] = <[Bound<'_, PyAny>; 3]>::try_from(items)
        .map_err(|v| PyValueError::new_err(format!("expected 3 coordinates, got {}", v.len())))?;
    BaryPoint::new(scalar(&a)?, scalar(&b)?, scalar(&c)?).and_then(|p| p.normalize()).map_err(geom)
}

fn kind(name: &str) -> PyResult<CenterKind> {
    name.parse().map_err(geom)
}

/// Triangle with exact rational side lengths.
#[pyclass(frozen, module = "barycev")]
struct Triangle {
    inner: barycev_core::Triangle,
}

#[pymethods]
impl Triangle {
    #[new]
    fn new(a: &Bound<'_, PyAny>, b: &Bound<'_, PyAny>, c: &Bound<'_, PyAny>) -> PyResult<Self> {
        let inner = barycev_core::Triangle::new(scalar(a)?, scalar(b)?, scalar(c)?).map_err(geom)?;
        Ok(Triangle { inner })
    }

    #[getter]
    fn sides(&self) -> Coords {
        let [a, b, c] = self.inner.sides().map(|s| s.to_string());
        (a, b, c)
    }

    #[getter]
    fn cosines(&self) -> Coords {
        let t = &self.inner;
        (t.cos_a().to_string(), t.cos_b().to_string(), t.cos_c().to_string())
    }

    fn is_equilateral(&self) -> bool {
        self.inner.is_equilateral()
    }

    fn center(&self, name: &str) -> PyResult<Coords> {
        Ok(coords(&barycev_core::center(&self.inner, kind(name)?)))
    }

    fn kariya_point(&self, k: &Bound<'_, PyAny>) -> PyResult<Coords> {
        barycev_core::kariya_point(&self.inner, &scalar(k)?).map(|p| coords(&p)).map_err(geom)
    }

    fn franke_point(&self, k: &Bound<'_, PyAny>) -> PyResult<Coords> {
        barycev_core::franke_point(&self.inner, &scalar(k)?).map(|p| coords(&p)).map_err(geom)
    }

    fn excenter_point(&self, which: &str, k: &Bound<'_, PyAny>) -> PyResult<Coords> {
        barycev_core::excenter_point(&self.inner, kind(which)?, &scalar(k)?).map(|p| coords(&p)).map_err(geom)
    }

    /// Both concurrence conditions at a point, as exact strings.
    fn condition_values(&self, p: &Bound<'_, PyAny>) -> PyResult<(String, String)> {
        let v = barycev_core::condition_values(&self.inner, &point(p)?).map_err(geom)?;
        Ok((v.cond1.to_string(), v.cond2.to_string()))
    }

    fn condition_values_via_coefficients(&self, p: &Bound<'_, PyAny>) -> PyResult<(String, String)> {
        let v = barycev_core::condition_values_via_coefficients(&self.inner, &point(p)?).map_err(geom)?;
        Ok((v.cond1.to_string(), v.cond2.to_string()))
    }

    fn concurrence_conditions_hold(&self, p: &Bound<'_, PyAny>) -> PyResult<bool> {
        barycev_core::concurrence_conditions_hold(&self.inner, &point(p)?).map_err(geom)
    }

    /// Feet of the perpendiculars on BC, CA, AB.
    fn pedal_triangle(&self, p: &Bound<'_, PyAny>) -> PyResult<Vec<Coords>> {
        let feet = barycev_core::pedal_triangle(&self.inner, &point(p)?).map_err(geom)?;
        Ok(feet.feet().map(coords).to_vec())
    }

    fn scale_pedal(&self, p: &Bound<'_, PyAny>, k: &Bound<'_, PyAny>) -> PyResult<Vec<Coords>> {
        let sp = barycev_core::scale_pedal(&self.inner, &point(p)?, &scalar(k)?).map_err(geom)?;
        Ok(sp.points().map(coords).to_vec())
    }

    /// Ceva product and common point of the scaled-pedal cevians.
    fn scaled_concurrence<'py>(
        &self,
        py: Python<'py>,
        p: &Bound<'py, PyAny>,
        k: &Bound<'py, PyAny>,
    ) -> PyResult<Bound<'py, PyDict>> {
        let r = barycev_core::scaled_concurrence(&self.inner, &point(p)?, &scalar(k)?).map_err(geom)?;
        let d = PyDict::new(py);
        d.set_item("ceva_product", r.ceva_product.to_string())?;
        d.set_item("concurrent", r.concurrent)?;
        d.set_item("point", r.point.as_ref().map(coords))?;
        d.set_item("degenerate", r.degenerate)?;
        Ok(d)
    }

    /// Scans for common zeros of both conditions. Returns the JSON report.
    #[pyo3(signature = (extended=false, resolution=512, region=None))]
    fn locus(
        &self,
        py: Python<'_>,
        extended: bool,
        resolution: usize,
        region: Option<(f64, f64, f64, f64)>,
    ) -> PyResult<String> {
        let mut scan = if extended { ScanRegion::extended_region() } else { ScanRegion::default_region() };
        if let Some((a0, a1, b0, b1)) = region {
            scan = ScanRegion::new((a0, a1), (b0, b1), resolution).map_err(PyValueError::new_err)?;
        }
        scan.resolution = resolution;
        scan.validate().map_err(PyValueError::new_err)?;
        let t = &self.inner;
        Ok(py.detach(|| explore(t, &scan, &LocusOptions::default()).to_json()))
    }

    fn __repr__(&self) -> String {
        let (a, b, c) = self.sides();
        format!("Triangle({a}, {b}, {c})")
    }
}

/// Default scale factors used by the verification suites.
#[pyfunction]
fn default_k_set() -> Vec<String> {
    barycev_core::default_k_set().iter().map(Scalar::to_string).collect()
}

#[pymodule]
fn barycev(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Triangle>()?;
    m.add_function(wrap_pyfunction!(default_k_set, m)?)?;
    m.add("GeometryError", m.py().get_type::<GeometryError>())?;
    Ok(())
}
