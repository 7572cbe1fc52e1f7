//! Python bindings: `import lunar`.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use lunar_core::magic::{construct as construct_grid, ConstructParams};
use lunar_core::search::{self, EntryConstraint, SearchSpec};
use pyo3::basic::CompareOp;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: lunar_core::LunarError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A lunar number: digits in a fixed base, added by digitwise max and
/// multiplied by min-convolution.
#[pyclass(name = "LunarNat", module = "lunar", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyLunarNat(lunar_core::LunarNat);

#[pymethods]
impl PyLunarNat {
    #[new]
    #[pyo3(signature = (digits, base = 10))]
    fn new(digits: &str, base: u32) -> PyResult<Self> {
        lunar_core::LunarNat::parse(digits, base)
            .map(Self)
            .map_err(err)
    }

    /// The multiplicative identity, the single digit `base - 1`.
    #[staticmethod]
    #[pyo3(signature = (base = 10))]
    fn identity(base: u32) -> PyResult<Self> {
        lunar_core::LunarNat::identity(base).map(Self).map_err(err)
    }

    #[getter]
    fn base(&self) -> u32 {
        self.0.base()
    }

    /// Digits, least significant first.
    #[getter]
    fn digits(&self) -> Vec<u32> {
        self.0.digits().to_vec()
    }

    fn dominates(&self, other: &Self) -> PyResult<bool> {
        self.0.dominates(&other.0).map_err(err)
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_add(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &Self) -> PyResult<Self> {
        self.0.try_mul(&other.0).map(Self).map_err(err)
    }

    fn __pow__(&self, n: u32, modulo: Option<&Bound<'_, PyAny>>) -> PyResult<Self> {
        if modulo.is_some_and(|m| !m.is_none()) {
            return Err(PyValueError::new_err("lunar pow takes no modulus"));
        }
        Ok(Self(self.0.pow(n)))
    }

    /// Length-lex order, the usual order of the numerals.
    fn __richcmp__(&self, other: &Self, op: CompareOp) -> PyResult<bool> {
        let ord = self.0.compare_length_lex(&other.0).map_err(err)?;
        Ok(op.matches(ord))
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.hash(&mut h);
        h.finish()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LunarNat('{}', base={})", self.0, self.0.base())
    }
}

/// A 3×3 grid of lunar numbers.
#[pyclass(name = "Grid3", module = "lunar", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyGrid3(lunar_core::Grid3);

#[pymethods]
impl PyGrid3 {
    #[new]
    #[pyo3(signature = (rows, base = 10))]
    fn new(rows: [[String; 3]; 3], base: u32) -> PyResult<Self> {
        let rows = rows.each_ref().map(|r| r.each_ref().map(String::as_str));
        lunar_core::Grid3::parse(base, rows).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let doc = lunar_core::GridDocument::from_json(text).map_err(err)?;
        doc.to_grid().map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        lunar_core::GridDocument::from(&self.0).to_json()
    }

    #[getter]
    fn base(&self) -> u32 {
        self.0.base()
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<String>> {
        self.0
            .rows()
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect()
    }

    fn cell(&self, row: usize, col: usize) -> PyResult<PyLunarNat> {
        if row > 2 || col > 2 {
            return Err(PyValueError::new_err("row and col must be 0, 1 or 2"));
        }
        Ok(PyLunarNat(self.0.cell(row, col).clone()))
    }

    /// The common line sum, or None when the grid is not magic.
    fn magic_total(&self) -> Option<PyLunarNat> {
        self.0.magic_total().map(PyLunarNat)
    }

    fn is_magic(&self) -> bool {
        self.0.magic_total().is_some()
    }

    fn has_distinct_entries(&self) -> bool {
        self.0.has_distinct_entries()
    }

    /// Row-major indices of cells that dominate all others.
    fn dominating_cells(&self) -> Vec<usize> {
        self.0.dominating_cells()
    }

    fn digit_plane(&self, i: usize) -> Self {
        Self(self.0.digit_plane(i))
    }

    fn decompose(&self) -> Vec<Self> {
        self.0.decompose().into_iter().map(Self).collect()
    }

    fn power_family(&self, n: u32) -> Self {
        Self(self.0.power_family(n))
    }

    fn symmetric_images(&self) -> Vec<Self> {
        self.0.symmetric_images().into_iter().map(Self).collect()
    }

    fn canonical(&self) -> Self {
        Self(self.0.canonical())
    }

    fn is_canonical(&self) -> bool {
        self.0.is_canonical()
    }

    fn __add__(&self, other: &Self) -> PyResult<Self> {
        self.0.elementwise_add(&other.0).map(Self).map_err(err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __hash__(&self) -> u64 {
        let mut h = DefaultHasher::new();
        self.0.cells().hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Grid3({:?}, base={})", self.rows(), self.0.base())
    }
}

/// Result of [`find_squares`].
#[pyclass(
    name = "SearchReport",
    module = "lunar",
    frozen,
    get_all,
    skip_from_py_object
)]
struct PySearchReport {
    total: Option<PyLunarNat>,
    results: Vec<PyGrid3>,
    nodes_explored: u64,
    exhausted: bool,
    stop: String,
    totals_refuted: u64,
}

#[pymethods]
impl PySearchReport {
    fn __repr__(&self) -> String {
        format!(
            "SearchReport(total={}, results={}, nodes_explored={}, exhausted={}, stop='{}')",
            self.total
                .as_ref()
                .map_or("None".into(), |t| format!("'{}'", t.0)),
            self.results.len(),
            self.nodes_explored,
            if self.exhausted { "True" } else { "False" },
            self.stop
        )
    }
}

fn stop_name(stop: search::StopReason) -> String {
    serde_json::to_value(stop)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

#[allow(clippy::too_many_arguments)]
fn spec(
    base: u32,
    total: Option<&str>,
    entries: &str,
    distinct: bool,
    max_total_digits: Option<usize>,
    budget: u64,
    limit: usize,
    canonical: bool,
) -> PyResult<SearchSpec> {
    let entries: EntryConstraint = entries.parse().map_err(err)?;
    let mut spec = SearchSpec::new(base)
        .entries(entries)
        .distinct(distinct)
        .budget(budget)
        .emit_limit(limit)
        .canonical(canonical);
    let mut digits = max_total_digits.unwrap_or(spec.max_total_digits);
    if let Some(t) = total {
        let t = lunar_core::LunarNat::parse(t, base).map_err(err)?;
        if max_total_digits.is_none() {
            digits = digits.max(t.len());
        }
        spec = spec.total(t);
    }
    Ok(spec.max_total_digits(digits))
}

/// Magic squares with a fixed `total`, or for the least total with any
/// when `total` is None.
#[pyfunction]
#[pyo3(signature = (
    base = 10, total = None, entries = "any", distinct = false, max_total_digits = None,
    budget = 1_000_000_000, limit = 100, canonical = false, threads = 1,
))]
#[allow(clippy::too_many_arguments)]
fn find_squares(
    py: Python<'_>,
    base: u32,
    total: Option<&str>,
    entries: &str,
    distinct: bool,
    max_total_digits: Option<usize>,
    budget: u64,
    limit: usize,
    canonical: bool,
    threads: usize,
) -> PyResult<PySearchReport> {
    let spec = spec(
        base,
        total,
        entries,
        distinct,
        max_total_digits,
        budget,
        limit,
        canonical,
    )?;
    let report = py
        .detach(|| {
            if spec.total.is_some() {
                search::find_squares_with_total(&spec, threads)
            } else {
                search::find_smallest_total(&spec, threads).map(|s| s.report)
            }
        })
        .map_err(err)?;
    Ok(PySearchReport {
        total: report.total.map(PyLunarNat),
        results: report.results.into_iter().map(PyGrid3).collect(),
        nodes_explored: report.nodes_explored,
        exhausted: report.exhausted,
        stop: stop_name(report.stop),
        totals_refuted: report.totals_refuted,
    })
}

/// Pairs of distinct magic grids whose cellwise sum is one too, as
/// `(first, second, sum)` tuples.
#[pyfunction]
#[pyo3(signature = (
    base = 10, total = None, entries = "any", max_total_digits = None,
    budget = 1_000_000_000, limit = 100, threads = 1,
))]
#[allow(clippy::too_many_arguments)]
fn find_sum_pairs(
    py: Python<'_>,
    base: u32,
    total: Option<&str>,
    entries: &str,
    max_total_digits: Option<usize>,
    budget: u64,
    limit: usize,
    threads: usize,
) -> PyResult<Vec<(PyGrid3, PyGrid3, PyGrid3)>> {
    let spec = spec(
        base,
        total,
        entries,
        true,
        max_total_digits,
        budget,
        limit,
        false,
    )?;
    let report = py
        .detach(|| search::find_sum_pairs(&spec, threads))
        .map_err(err)?;
    Ok(report
        .pairs
        .into_iter()
        .map(|p| (PyGrid3(p.first), PyGrid3(p.second), PyGrid3(p.sum)))
        .collect())
}

/// The two-plane construction; `a` must dominate `b, c, d` and `alpha`
/// must dominate `beta, gamma, delta`.
#[pyfunction]
#[pyo3(signature = (a, b, c, d, alpha, beta, gamma, delta, base = 10))]
#[allow(clippy::too_many_arguments)]
fn construct(
    a: &str,
    b: &str,
    c: &str,
    d: &str,
    alpha: &str,
    beta: &str,
    gamma: &str,
    delta: &str,
    base: u32,
) -> PyResult<PyGrid3> {
    let params =
        ConstructParams::parse(base, [a, b, c, d, alpha, beta, gamma, delta]).map_err(err)?;
    Ok(PyGrid3(construct_grid(&params)))
}

#[pyfunction]
fn nth_roots(n: &PyLunarNat, k: u32) -> Vec<PyLunarNat> {
    lunar_core::numtheory::nth_roots(&n.0, k)
        .into_iter()
        .map(PyLunarNat)
        .collect()
}

#[pyfunction]
fn is_square(n: &PyLunarNat) -> bool {
    lunar_core::numtheory::is_square(&n.0)
}

#[pyfunction]
fn is_prime(n: &PyLunarNat) -> bool {
    lunar_core::numtheory::is_prime(&n.0)
}

#[pyfunction]
fn enumerate_squares(base: u32, max_digits: usize) -> PyResult<Vec<PyLunarNat>> {
    let v = lunar_core::numtheory::enumerate_squares(base, max_digits).map_err(err)?;
    Ok(v.into_iter().map(PyLunarNat).collect())
}

#[pyfunction]
fn enumerate_primes(base: u32, max_digits: usize) -> PyResult<Vec<PyLunarNat>> {
    let v = lunar_core::numtheory::enumerate_primes(base, max_digits).map_err(err)?;
    Ok(v.into_iter().map(PyLunarNat).collect())
}

#[pyfunction]
fn find_triples(
    base: u32,
    max_leg_digits: usize,
) -> PyResult<Vec<(PyLunarNat, PyLunarNat, PyLunarNat)>> {
    let v = lunar_core::numtheory::find_triples(base, max_leg_digits).map_err(err)?;
    Ok(v.into_iter()
        .map(|t| {
            (
                PyLunarNat(t.a().clone()),
                PyLunarNat(t.b().clone()),
                PyLunarNat(t.c().clone()),
            )
        })
        .collect())
}

#[pymodule]
fn lunar(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLunarNat>()?;
    m.add_class::<PyGrid3>()?;
    m.add_class::<PySearchReport>()?;
    m.add_function(wrap_pyfunction!(find_squares, m)?)?;
    m.add_function(wrap_pyfunction!(find_sum_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(construct, m)?)?;
    m.add_function(wrap_pyfunction!(nth_roots, m)?)?;
    m.add_function(wrap_pyfunction!(is_square, m)?)?;
    m.add_function(wrap_pyfunction!(is_prime, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_squares, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_primes, m)?)?;
    m.add_function(wrap_pyfunction!(find_triples, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    Ok(())
}
