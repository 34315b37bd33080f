//! Python bindings. Graphs are a real class; sequences cross the boundary as
//! plain lists (Betti entries as Python ints, so they never overflow), exact
//! rationals as "num/den" strings, and reports as their canonical JSON lines.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tricorr::arith::{format_rational, parse_rational};
use tricorr::graph::{format_monomial, MonomialStyle};
use tricorr::{correspondence, graph, random, table};
use tricorr::{Adjacency, Alhc, BettiSequence, Shift, Statistic, ThresholdGraph};

fn value_err(e: tricorr::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_err(e: serde_json::Error) -> PyErr {
    PyValueError::new_err(format!("serialization failed: {e}"))
}

fn parse_shift(mode: &str) -> PyResult<Shift> {
    match mode {
        "dominating" => Ok(Shift::Dominating),
        "isolated" => Ok(Shift::Isolated),
        _ => Err(PyValueError::new_err(format!("unknown shift `{mode}`"))),
    }
}

fn parse_style(style: &str) -> PyResult<MonomialStyle> {
    match style {
        "plain" => Ok(MonomialStyle::Plain),
        "cas" => Ok(MonomialStyle::Cas),
        _ => Err(PyValueError::new_err(format!("unknown style `{style}`"))),
    }
}

fn betti_sequence(values: Vec<BigInt>) -> PyResult<BettiSequence> {
    BettiSequence::new(values).map_err(value_err)
}

fn alhc(values: Vec<u64>, t: u64) -> PyResult<Alhc> {
    Alhc::new(values, t).map_err(value_err)
}

/// A threshold graph T(n, sigma) on the vertices {0, ..., n}.
#[pyclass(frozen, name = "ThresholdGraph", module = "tricorr_py")]
struct PyGraph {
    inner: ThresholdGraph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, sigma=Vec::new()))]
    fn new(n: usize, sigma: Vec<usize>) -> PyResult<Self> {
        Ok(PyGraph { inner: ThresholdGraph::new(n, sigma).map_err(value_err)? })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn sigma(&self) -> Vec<usize> {
        self.inner.sigma().iter().copied().collect()
    }

    fn is_edge(&self, u: usize, v: usize) -> PyResult<bool> {
        self.inner.is_edge(u, v).map_err(value_err)
    }

    fn non_edges(&self) -> Vec<(usize, usize)> {
        self.inner.non_edges().into_iter().map(|e| (e.u(), e.v())).collect()
    }

    /// Betti sequence (beta_1, ..., beta_n) of the quotient by the coedge ideal.
    fn betti(&self) -> Vec<BigInt> {
        correspondence::betti_of(&self.inner).entries().to_vec()
    }

    /// Anti-lecture hall composition (lambda_1, ..., lambda_n) with bound 1.
    fn alhc(&self) -> Vec<u64> {
        correspondence::alhc_of(&self.inner).entries().to_vec()
    }

    fn projective_dimension(&self) -> usize {
        correspondence::projective_dimension(&correspondence::betti_of(&self.inner))
    }

    fn append_dominating(&self) -> Self {
        PyGraph { inner: self.inner.append_dominating() }
    }

    fn append_isolated(&self) -> Self {
        PyGraph { inner: self.inner.append_isolated() }
    }

    /// Generators of the coedge ideal, one monomial string per non-edge.
    #[pyo3(signature = (style="plain"))]
    fn coedge_generators(&self, style: &str) -> PyResult<Vec<String>> {
        let style = parse_style(style)?;
        Ok(self
            .inner
            .coedge_generators()
            .into_iter()
            .map(|e| format_monomial(e, style))
            .collect())
    }

    /// Canonical single-line JSON: {"n":...,"sigma":[...]}.
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(json_err)
    }

    fn __repr__(&self) -> String {
        let sigma: Vec<String> = self.inner.sigma().iter().map(|s| s.to_string()).collect();
        format!("ThresholdGraph(n={}, sigma=[{}])", self.inner.n(), sigma.join(", "))
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }
}

/// Rebuild the unique graph with the given Betti sequence.
#[pyfunction]
fn graph_from_betti(values: Vec<BigInt>) -> PyResult<PyGraph> {
    let beta = betti_sequence(values)?;
    Ok(PyGraph { inner: correspondence::graph_from_betti(&beta).map_err(value_err)? })
}

/// Rebuild the unique graph with the given bound-t composition (t must be 1).
#[pyfunction]
#[pyo3(signature = (values, t=1))]
fn graph_from_alhc(values: Vec<u64>, t: u64) -> PyResult<PyGraph> {
    let lam = alhc(values, t)?;
    Ok(PyGraph { inner: correspondence::graph_from_alhc(&lam).map_err(value_err)? })
}

#[pyfunction]
#[pyo3(signature = (values, t=1))]
fn betti_from_alhc(values: Vec<u64>, t: u64) -> PyResult<Vec<BigInt>> {
    let lam = alhc(values, t)?;
    Ok(correspondence::betti_from_alhc(&lam).map_err(value_err)?.entries().to_vec())
}

#[pyfunction]
fn alhc_from_betti(values: Vec<BigInt>) -> PyResult<Vec<u64>> {
    let beta = betti_sequence(values)?;
    Ok(correspondence::alhc_from_betti(&beta).map_err(value_err)?.entries().to_vec())
}

/// Betti numbers recomputed from scratch as connected-component defects
/// over all vertex subsets; exponential, for cross-checking only.
#[pyfunction]
fn betti_oracle(g: &PyGraph) -> Vec<BigInt> {
    correspondence::betti_oracle(&g.inner).entries().to_vec()
}

#[pyfunction]
#[pyo3(signature = (values, t=1))]
fn validate_alhc(values: Vec<i64>, t: u64) -> bool {
    correspondence::validate_alhc(&values, t)
}

#[pyfunction]
#[pyo3(signature = (n, t=1))]
fn enumerate_alhc(n: usize, t: u64) -> PyResult<Vec<Vec<u64>>> {
    if n == 0 {
        return Err(value_err(tricorr::Error::NTooSmall));
    }
    let within_budget = t
        .checked_add(1)
        .and_then(|base| base.checked_pow(n as u32))
        .is_some_and(|total| total <= 1 << random::ENUMERATION_LIMIT);
    if !within_budget {
        return Err(value_err(tricorr::Error::EnumerationBudget(n)));
    }
    Ok(correspondence::enumerate_alhc(n, t).map(|lam| lam.entries().to_vec()).collect())
}

#[pyfunction]
fn shift_betti(values: Vec<BigInt>, mode: &str) -> PyResult<Vec<BigInt>> {
    let beta = betti_sequence(values)?;
    Ok(correspondence::shift_betti(&beta, parse_shift(mode)?).entries().to_vec())
}

#[pyfunction]
fn shift_alhc(values: Vec<u64>, mode: &str) -> PyResult<Vec<u64>> {
    let lam = alhc(values, 1)?;
    Ok(correspondence::shift_alhc(&lam, parse_shift(mode)?)
        .map_err(value_err)?
        .entries()
        .to_vec())
}

/// Recover (n, sigma) from an edge list on the vertices {0, ..., m}.
#[pyfunction]
fn recognize(m: usize, edges: Vec<(usize, usize)>) -> PyResult<PyGraph> {
    let adjacency = Adjacency::from_edges(m, &edges).map_err(value_err)?;
    Ok(PyGraph { inner: graph::recognize(&adjacency).map_err(value_err)? })
}

/// All 2^n rows (sigma, betti, alhc) in subset order.
#[pyfunction]
#[allow(clippy::type_complexity)]
fn correspondence_table(n: usize) -> PyResult<Vec<(Vec<usize>, Vec<BigInt>, Vec<u64>)>> {
    if n == 0 {
        return Err(value_err(tricorr::Error::NTooSmall));
    }
    if n > random::ENUMERATION_LIMIT {
        return Err(value_err(tricorr::Error::EnumerationBudget(n)));
    }
    Ok(table::correspondence_table(n)
        .into_iter()
        .map(|row| (row.sigma, row.betti, row.alhc))
        .collect())
}

/// The reference table as CSV, header included.
#[pyfunction]
fn table_csv(n: usize) -> PyResult<String> {
    if n == 0 {
        return Err(value_err(tricorr::Error::NTooSmall));
    }
    if n > random::ENUMERATION_LIMIT {
        return Err(value_err(tricorr::Error::EnumerationBudget(n)));
    }
    Ok(table::table_csv(&table::correspondence_table(n)))
}

/// Exact expected values; p is a rational string like "1/2", the result the
/// canonical JSON report line.
#[pyfunction]
fn expectation(n: usize, p: &str, stat: &str, method: &str) -> PyResult<String> {
    let p = parse_rational(p).map_err(value_err)?;
    let stat: Statistic = stat.parse().map_err(value_err)?;
    let method = method.parse().map_err(value_err)?;
    let report = random::expectation(n, &p, stat, method).map_err(value_err)?;
    serde_json::to_string(&report).map_err(json_err)
}

/// Monte Carlo estimates as the canonical JSON report line; deterministic in
/// (n, p, stat, samples, seed).
#[pyfunction]
#[pyo3(signature = (n, p, stat, samples=100_000, seed=0))]
fn monte_carlo(n: usize, p: f64, stat: &str, samples: u64, seed: u64) -> PyResult<String> {
    let stat: Statistic = stat.parse().map_err(value_err)?;
    if samples == 0 {
        return Err(PyValueError::new_err("samples must be at least 1"));
    }
    let report = random::monte_carlo(n, p, stat, samples, seed).map_err(value_err)?;
    serde_json::to_string(&report).map_err(json_err)
}

/// P(projective dimension = m) under the random model, as a rational string.
#[pyfunction]
fn prob_projdim(n: usize, p: &str, m: usize) -> PyResult<String> {
    let p = parse_rational(p).map_err(value_err)?;
    Ok(format_rational(&random::prob_projdim(n, &p, m).map_err(value_err)?))
}

#[pyfunction]
fn expected_projdim(n: usize, p: &str) -> PyResult<String> {
    let p = parse_rational(p).map_err(value_err)?;
    Ok(format_rational(&random::expected_projdim(n, &p).map_err(value_err)?))
}

/// Draw T(n, p) from the frozen generator; same seed, same graph, forever.
#[pyfunction]
fn sample(n: usize, p: f64, seed: u64) -> PyResult<PyGraph> {
    Ok(PyGraph { inner: random::sample(n, p, seed).map_err(value_err)? })
}

/// Cross-check the direct maps against the oracle for all graphs with
/// n <= max_n; returns the number of graphs checked.
#[pyfunction]
fn oracle_check(max_n: usize) -> PyResult<u64> {
    if max_n > 12 {
        return Err(PyValueError::new_err(format!("max_n is capped at 12; got {max_n}")));
    }
    correspondence::oracle_check(max_n).map_err(value_err)
}

#[pymodule]
fn tricorr_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(graph_from_betti, m)?)?;
    m.add_function(wrap_pyfunction!(graph_from_alhc, m)?)?;
    m.add_function(wrap_pyfunction!(betti_from_alhc, m)?)?;
    m.add_function(wrap_pyfunction!(alhc_from_betti, m)?)?;
    m.add_function(wrap_pyfunction!(betti_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(validate_alhc, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_alhc, m)?)?;
    m.add_function(wrap_pyfunction!(shift_betti, m)?)?;
    m.add_function(wrap_pyfunction!(shift_alhc, m)?)?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(correspondence_table, m)?)?;
    m.add_function(wrap_pyfunction!(table_csv, m)?)?;
    m.add_function(wrap_pyfunction!(expectation, m)?)?;
    m.add_function(wrap_pyfunction!(monte_carlo, m)?)?;
    m.add_function(wrap_pyfunction!(prob_projdim, m)?)?;
    m.add_function(wrap_pyfunction!(expected_projdim, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_check, m)?)?;
    Ok(())
}
