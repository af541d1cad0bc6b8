//! Python bindings: one `Algebra` per metric, with expression evaluation
//! and the metric-free operations on `Multivector` values.

use std::fmt::Display;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use gaq::expr::{self, Context};
use gaq::{Engine, Multivector as CoreMultivector, QuadraticForm, Rational, Signature};

fn value_err(e: impl Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_engine(engine: &str) -> PyResult<Engine> {
    match engine {
        "auto" => Ok(Engine::Auto),
        "oracle" => Ok(Engine::Oracle),
        "fast" => Ok(Engine::Fast),
        other => Err(value_err(format!(
            "unknown engine {other:?} (valid: auto, oracle, fast)"
        ))),
    }
}

/// A multivector, rendered with the basis tokens of the algebra that
/// produced it. Addition and the conjugations are metric-free; products
/// live on [`Algebra`].
#[pyclass(frozen, name = "Multivector", module = "gaq_py")]
struct PyMultivector {
    inner: CoreMultivector<Rational>,
    names: Vec<String>,
}

impl PyMultivector {
    fn wrap(&self, inner: CoreMultivector<Rational>) -> PyMultivector {
        PyMultivector {
            inner,
            names: self.names.clone(),
        }
    }
}

#[pymethods]
impl PyMultivector {
    fn __str__(&self) -> String {
        expr::render_human(&self.inner, &self.names)
    }

    fn __repr__(&self) -> String {
        format!("Multivector({})", self.__str__())
    }

    fn __eq__(&self, other: &PyMultivector) -> bool {
        self.inner == other.inner
    }

    fn __add__(&self, other: &PyMultivector) -> PyResult<PyMultivector> {
        Ok(self.wrap(self.inner.try_add(&other.inner).map_err(value_err)?))
    }

    fn __sub__(&self, other: &PyMultivector) -> PyResult<PyMultivector> {
        Ok(self.wrap(self.inner.try_sub(&other.inner).map_err(value_err)?))
    }

    fn __neg__(&self) -> PyMultivector {
        self.wrap(self.inner.neg())
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn reverse(&self) -> PyMultivector {
        self.wrap(self.inner.reverse())
    }

    fn involute(&self) -> PyMultivector {
        self.wrap(self.inner.involute())
    }

    fn conjugate(&self) -> PyMultivector {
        self.wrap(self.inner.clifford_conjugate())
    }

    fn grade(&self, k: usize) -> PyMultivector {
        self.wrap(self.inner.grade_project(k))
    }

    fn even(&self) -> PyMultivector {
        self.wrap(self.inner.even_odd_parts().0)
    }

    fn odd(&self) -> PyMultivector {
        self.wrap(self.inner.even_odd_parts().1)
    }

    fn max_grade(&self) -> Option<usize> {
        self.inner.max_grade()
    }

    /// Coefficients as `{blade label: rational string}`, in
    /// (grade, bit pattern) order.
    fn blades<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let dict = PyDict::new(py);
        for (blade, coeff) in self.inner.terms() {
            dict.set_item(blade.label(&self.names), coeff.to_string())?;
        }
        Ok(dict)
    }

    fn json(&self) -> String {
        expr::render_json(&self.inner, &self.names)
    }
}

/// One algebra: a metric, its basis tokens, and a product engine.
#[pyclass(frozen, name = "Algebra", module = "gaq_py")]
struct PyAlgebra {
    ctx: Context,
}

impl PyAlgebra {
    fn wrap(&self, inner: CoreMultivector<Rational>) -> PyMultivector {
        PyMultivector {
            inner,
            names: self.ctx.names().to_vec(),
        }
    }
}

#[pymethods]
impl PyAlgebra {
    /// Algebra with `p` basis vectors squaring to +1, `q` to −1, `r` to 0.
    #[staticmethod]
    #[pyo3(signature = (p, q, r, engine = "auto"))]
    fn signature(p: usize, q: usize, r: usize, engine: &str) -> PyResult<PyAlgebra> {
        let ctx = Context::from_signature(Signature::new(p, q, r), parse_engine(engine)?)
            .map_err(value_err)?;
        Ok(PyAlgebra { ctx })
    }

    /// Named algebra: complex, quaternion, cga2, cga3, pga3, euclid2, euclid3.
    #[staticmethod]
    #[pyo3(signature = (name, engine = "auto"))]
    fn preset(name: &str, engine: &str) -> PyResult<PyAlgebra> {
        let ctx = Context::from_preset(name, parse_engine(engine)?).map_err(value_err)?;
        Ok(PyAlgebra { ctx })
    }

    /// Algebra from a metric matrix file (JSON with `dim` and `matrix`).
    #[staticmethod]
    #[pyo3(signature = (path, engine = "auto"))]
    fn metric_file(path: std::path::PathBuf, engine: &str) -> PyResult<PyAlgebra> {
        let form = QuadraticForm::from_metric_path(&path).map_err(value_err)?;
        Ok(PyAlgebra {
            ctx: Context::from_form(form, parse_engine(engine)?),
        })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.ctx.dim()
    }

    #[getter]
    fn basis_names(&self) -> Vec<String> {
        self.ctx.names().to_vec()
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra(dim={}, basis=[{}])",
            self.ctx.dim(),
            self.ctx.names().join(", ")
        )
    }

    /// Evaluate an expression, e.g. `"rev(e1*e2) + 3/2"`.
    fn eval(&self, source: &str) -> PyResult<PyMultivector> {
        let parsed = expr::parse(source).map_err(value_err)?;
        let value = expr::eval(&parsed, &self.ctx).map_err(value_err)?;
        Ok(self.wrap(value))
    }

    /// The geometric product.
    fn product(&self, a: &PyMultivector, b: &PyMultivector) -> PyResult<PyMultivector> {
        Ok(self.wrap(self.ctx.product(&a.inner, &b.inner).map_err(value_err)?))
    }

    /// The wedge (exterior) product.
    fn wedge(&self, a: &PyMultivector, b: &PyMultivector) -> PyResult<PyMultivector> {
        Ok(self.wrap(gaq::wedge_product(&a.inner, &b.inner).map_err(value_err)?))
    }

    /// The left contraction.
    fn contract(&self, a: &PyMultivector, b: &PyMultivector) -> PyResult<PyMultivector> {
        Ok(self.wrap(
            gaq::fast::left_contraction_with(
                self.ctx.engine(),
                self.ctx.form(),
                &a.inner,
                &b.inner,
            )
            .map_err(value_err)?,
        ))
    }

    /// Versor-norm inverse: requires `x * rev(x)` to be a nonzero scalar.
    fn inverse(&self, x: &PyMultivector) -> PyResult<PyMultivector> {
        let rev = x.inner.reverse();
        let norm = self
            .ctx
            .product(&x.inner, &rev)
            .map_err(value_err)?
            .scalar_part_only()
            .filter(|r| *r != gaq::rat(0, 1))
            .ok_or_else(|| value_err(gaq::Error::NotInvertible))?;
        Ok(self.wrap(rev.scale(&(gaq::rat(1, 1) / norm))))
    }

    /// Blade labels in (grade, bit pattern) order.
    fn basis(&self) -> PyResult<Vec<String>> {
        if self.ctx.dim() > 12 {
            return Err(value_err(format!(
                "basis listing limited to dimension 12, got {}",
                self.ctx.dim()
            )));
        }
        Ok(expr::basis_blades(self.ctx.dim())
            .iter()
            .map(|b| b.label(self.ctx.names()))
            .collect())
    }

    /// The blade-by-blade product table as human-readable strings.
    fn table(&self) -> PyResult<Vec<Vec<String>>> {
        let table = expr::cayley_table(&self.ctx).map_err(value_err)?;
        Ok(table
            .iter()
            .map(|row| {
                row.iter()
                    .map(|mv| expr::render_human(mv, self.ctx.names()))
                    .collect()
            })
            .collect())
    }
}

#[pymodule]
fn gaq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyMultivector>()?;
    Ok(())
}
