use pyo3::exceptions::{PyMemoryError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use decohere::analytic::dense_log_negativity;
use decohere::correlations::{self, DiscordOptions};
use decohere::harness::{self, Engine, Measure, SweepConfig};
use decohere::{AnalyticCase, Bipartition, ChannelKind, FamilyKind, Matrix, C64};

fn py_err(e: decohere::Error) -> PyErr {
    match e.exit_code() {
        2 => PyValueError::new_err(e.to_string()),
        3 => PyMemoryError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

trait IntoPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> IntoPy<T> for decohere::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

fn channel(name: &str) -> PyResult<ChannelKind> {
    ChannelKind::parse(name).py()
}

/// One of the named micro:macro states.
#[pyclass(name = "StateFamily", module = "decohere_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyStateFamily {
    inner: decohere::StateFamily,
}

#[pymethods]
impl PyStateFamily {
    /// `kind` is one of hcnm, ghz, g, dicke, product.
    #[new]
    #[pyo3(signature = (kind, n, m = 1, k = 1))]
    fn new(kind: &str, n: usize, m: usize, k: usize) -> PyResult<Self> {
        let kind = FamilyKind::parse(kind).py()?;
        let inner = match kind {
            FamilyKind::GState => decohere::StateFamily::g_state(n),
            FamilyKind::Ghz => decohere::StateFamily::ghz(n, k),
            _ => decohere::StateFamily { kind, n, m, k },
        };
        inner.validate().py()?;
        Ok(Self { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m
    }

    #[getter]
    fn k(&self) -> usize {
        self.inner.k
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label()
    }

    #[getter]
    fn num_qubits(&self) -> usize {
        self.inner.num_qubits()
    }

    fn amplitudes(&self) -> PyResult<Vec<C64>> {
        Ok(decohere::build_pure(&self.inner).py()?.amplitudes().to_vec())
    }

    fn density(&self) -> PyResult<PyDensityMatrix> {
        Ok(PyDensityMatrix { inner: decohere::build_density(&self.inner).py()? })
    }

    /// The state after `channel` with parameter `p` acts on every qubit.
    fn noisy(&self, channel: &str, p: f64) -> PyResult<PyDensityMatrix> {
        let rho = decohere::build_density(&self.inner).py()?;
        Ok(PyDensityMatrix { inner: decohere::make_channel(self::channel(channel)?, p).py()?.apply_all(&rho) })
    }

    fn __repr__(&self) -> String {
        format!("StateFamily({})", self.inner)
    }
}

#[pyclass(name = "DensityMatrix", module = "decohere_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyDensityMatrix {
    inner: decohere::DensityMatrix,
}

#[pymethods]
impl PyDensityMatrix {
    /// Validated state from a square list of rows of complex numbers.
    #[staticmethod]
    fn from_rows(rows: Vec<Vec<C64>>) -> PyResult<Self> {
        let dim = rows.len();
        if dim == 0 || !dim.is_power_of_two() || rows.iter().any(|r| r.len() != dim) {
            return Err(PyValueError::new_err("rows must form a square matrix of size 2^n"));
        }
        let matrix = Matrix::from_vec(dim, rows.into_iter().flatten().collect()).py()?;
        Ok(Self { inner: decohere::DensityMatrix::new(dim.trailing_zeros() as usize, matrix).py()? })
    }

    #[getter]
    fn num_qubits(&self) -> usize {
        self.inner.num_qubits()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn to_rows(&self) -> Vec<Vec<C64>> {
        self.inner.matrix().data().chunks(self.inner.dim()).map(<[C64]>::to_vec).collect()
    }

    fn trace(&self) -> C64 {
        self.inner.trace()
    }

    fn purity(&self) -> f64 {
        self.inner.purity()
    }

    fn eigenvalues(&self) -> PyResult<Vec<f64>> {
        self.inner.matrix().hermitian_eigenvalues().py()
    }

    /// `channel` on one qubit, or on every qubit when `qubit` is None.
    #[pyo3(signature = (channel, p, qubit = None))]
    fn apply_channel(&self, channel: &str, p: f64, qubit: Option<usize>) -> PyResult<Self> {
        let ch = decohere::make_channel(self::channel(channel)?, p).py()?;
        let inner = match qubit {
            Some(q) => ch.apply_local(&self.inner, q).py()?,
            None => ch.apply_all(&self.inner),
        };
        Ok(Self { inner })
    }

    fn partial_trace(&self, keep: Vec<usize>) -> PyResult<Self> {
        Ok(Self { inner: correlations::partial_trace(&self.inner, &keep).py()? })
    }

    fn __repr__(&self) -> String {
        format!("DensityMatrix(num_qubits={})", self.inner.num_qubits())
    }
}

fn split(rho: &PyDensityMatrix, k: usize) -> PyResult<Bipartition> {
    Bipartition::split(k, rho.inner.num_qubits()).py()
}

/// Kraus operators of a single-qubit channel.
#[pyfunction]
fn kraus_operators(channel: &str, p: f64) -> PyResult<Vec<Vec<Vec<C64>>>> {
    let ch = decohere::make_channel(self::channel(channel)?, p).py()?;
    Ok(ch.kraus_ops().iter().map(|k| k.iter().map(|row| row.to_vec()).collect()).collect())
}

/// Log-negativity across the first `k` qubits and the rest, in ebits.
#[pyfunction]
fn log_negativity(rho: &PyDensityMatrix, k: usize) -> PyResult<f64> {
    correlations::log_negativity(&rho.inner, &split(rho, k)?).py()
}

#[pyfunction]
fn von_neumann_entropy(rho: &PyDensityMatrix) -> PyResult<f64> {
    correlations::von_neumann_entropy(&rho.inner).py()
}

#[pyfunction]
fn mutual_information(rho: &PyDensityMatrix, k: usize) -> PyResult<f64> {
    correlations::mutual_information(&rho.inner, &split(rho, k)?).py()
}

/// Discord with the first `k` qubits measured; `k` is 1 or 2.
#[pyfunction]
#[pyo3(signature = (rho, k, seed = 7))]
fn discord<'py>(py: Python<'py>, rho: &PyDensityMatrix, k: usize, seed: u64) -> PyResult<Bound<'py, PyDict>> {
    let part = split(rho, k)?;
    let opts = DiscordOptions { seed, ..DiscordOptions::default() };
    let r = py.detach(|| correlations::discord_with(&rho.inner, &part, &opts)).py()?;
    let d = PyDict::new(py);
    d.set_item("discord", r.discord)?;
    d.set_item("mutual_information", r.mutual_information)?;
    d.set_item("classical_correlation", r.classical_correlation)?;
    d.set_item("angles", r.optimizer_basis.angles.clone())?;
    d.set_item("evals", r.optimizer_evals)?;
    Ok(d)
}

#[pyfunction]
fn formula_id(family: &PyStateFamily, channel: &str) -> PyResult<String> {
    Ok(AnalyticCase::new(family.inner, self::channel(channel)?).py()?.formula_id.to_string())
}

#[pyfunction]
fn analytic_log_negativity(family: &PyStateFamily, channel: &str, p: f64) -> PyResult<f64> {
    let case = AnalyticCase::new(family.inner, self::channel(channel)?).py()?;
    decohere::analytic_log_negativity(&case, p).py()
}

#[pyfunction]
fn dense_log_negativity_at(py: Python<'_>, family: &PyStateFamily, channel: &str, p: f64) -> PyResult<f64> {
    let ch = self::channel(channel)?;
    py.detach(|| dense_log_negativity(&family.inner, ch, p)).py()
}

/// Largest analytic/dense deviation on an evenly spaced grid.
#[pyfunction]
#[pyo3(signature = (family, channel, p_steps = 21))]
fn validate(py: Python<'_>, family: &PyStateFamily, channel: &str, p_steps: usize) -> PyResult<f64> {
    let case = AnalyticCase::new(family.inner, self::channel(channel)?).py()?;
    let grid = harness::p_grid(0.0, 1.0, p_steps);
    Ok(py.detach(|| decohere::validate_against_dense(&case, &grid)).py()?.max_deviation)
}

#[allow(clippy::too_many_arguments)]
fn config(
    family: &PyStateFamily,
    channel: &str,
    p_start: f64,
    p_end: f64,
    p_steps: usize,
    measures: &str,
    engine: &str,
    seed: u64,
) -> PyResult<SweepConfig> {
    Ok(SweepConfig {
        family: family.inner,
        channel: self::channel(channel)?,
        p_start,
        p_end,
        p_steps,
        measures: Measure::parse_list(measures).py()?,
        engine: Engine::parse(engine).py()?,
        seed,
    })
}

/// One dict per grid point with keys p, log_negativity, discord, engine, wall_time_s.
#[pyfunction]
#[pyo3(signature = (family, channel, p_start = 0.0, p_end = 1.0, p_steps = 101, measures = "ln", engine = "dense", seed = 7))]
#[allow(clippy::too_many_arguments)]
fn sweep<'py>(
    py: Python<'py>,
    family: &PyStateFamily,
    channel: &str,
    p_start: f64,
    p_end: f64,
    p_steps: usize,
    measures: &str,
    engine: &str,
    seed: u64,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let cfg = config(family, channel, p_start, p_end, p_steps, measures, engine, seed)?;
    let records = py.detach(|| harness::run_sweep(&cfg)).py()?;
    records
        .iter()
        .map(|r| {
            let d = PyDict::new(py);
            d.set_item("p", r.p)?;
            d.set_item("log_negativity", r.log_negativity)?;
            d.set_item("discord", r.discord)?;
            d.set_item("engine", r.engine.tag())?;
            d.set_item("wall_time_s", r.wall_time_s)?;
            Ok(d)
        })
        .collect()
}

/// Runs a sweep and writes it as CSV to `path`.
#[pyfunction]
#[pyo3(signature = (path, family, channel, p_start = 0.0, p_end = 1.0, p_steps = 101, measures = "ln", engine = "dense", seed = 7))]
#[allow(clippy::too_many_arguments)]
fn sweep_csv(
    py: Python<'_>,
    path: std::path::PathBuf,
    family: &PyStateFamily,
    channel: &str,
    p_start: f64,
    p_end: f64,
    p_steps: usize,
    measures: &str,
    engine: &str,
    seed: u64,
) -> PyResult<()> {
    let cfg = config(family, channel, p_start, p_end, p_steps, measures, engine, seed)?;
    py.detach(|| harness::emit_csv(&harness::run_sweep(&cfg)?, &path)).py()
}

#[pyfunction]
#[pyo3(signature = (family, channel, threshold = harness::DEFAULT_THRESHOLD, engine = "dense"))]
fn critical_point<'py>(
    py: Python<'py>,
    family: &PyStateFamily,
    channel: &str,
    threshold: f64,
    engine: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let (ch, engine) = (self::channel(channel)?, Engine::parse(engine).py()?);
    let cp = py.detach(|| harness::find_critical_point(family.inner, ch, threshold, engine)).py()?;
    let d = PyDict::new(py);
    d.set_item("p_star", cp.p_star)?;
    d.set_item("percent", cp.percent())?;
    d.set_item("bracket_width", cp.bracket_width)?;
    d.set_item("threshold", cp.threshold)?;
    Ok(d)
}

/// The critical-value table rendered as text.
#[pyfunction]
#[pyo3(signature = (threshold = harness::DEFAULT_THRESHOLD))]
fn table1(py: Python<'_>, threshold: f64) -> PyResult<String> {
    Ok(py.detach(|| harness::reproduce_table1(threshold)).py()?.render())
}

#[pymodule]
fn decohere_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStateFamily>()?;
    m.add_class::<PyDensityMatrix>()?;
    m.add_function(wrap_pyfunction!(kraus_operators, m)?)?;
    m.add_function(wrap_pyfunction!(log_negativity, m)?)?;
    m.add_function(wrap_pyfunction!(von_neumann_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(mutual_information, m)?)?;
    m.add_function(wrap_pyfunction!(discord, m)?)?;
    m.add_function(wrap_pyfunction!(formula_id, m)?)?;
    m.add_function(wrap_pyfunction!(analytic_log_negativity, m)?)?;
    m.add_function(wrap_pyfunction!(dense_log_negativity_at, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(sweep_csv, m)?)?;
    m.add_function(wrap_pyfunction!(critical_point, m)?)?;
    m.add_function(wrap_pyfunction!(table1, m)?)?;
    Ok(())
}
