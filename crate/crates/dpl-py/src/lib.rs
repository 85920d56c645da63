//! Python bindings for the `dpl` crate.

use std::collections::BTreeMap;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dpl::chirotope::{self, ReconstructOptions};
use dpl::mutation::{self, EnumerateOptions, Setting};
use dpl::{DplError, KeyMode, SignedIndex, SignedPermutation};

fn err(e: DplError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn permutation(domain: &[u32], images: Vec<i64>) -> PyResult<SignedPermutation> {
    let imgs = images
        .into_iter()
        .map(|v| SignedIndex::from_i64(v).ok_or_else(|| PyValueError::new_err(format!("bad index {v}"))))
        .collect::<PyResult<Vec<_>>>()?;
    SignedPermutation::from_images(domain, &imgs).map_err(|e| err(e.into()))
}

#[pyclass(name = "Arrangement", module = "dpl_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyArrangement {
    inner: dpl::Arrangement,
}

#[pymethods]
impl PyArrangement {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        dpl::Arrangement::parse(text).map(|inner| PyArrangement { inner }).map_err(err)
    }

    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        dpl::catalog::arrangement(name).map(|inner| PyArrangement { inner }).map_err(err)
    }

    #[staticmethod]
    fn cyclic_thin(n: u32) -> PyResult<Self> {
        dpl::Arrangement::cyclic_thin(n).map(|inner| PyArrangement { inner }).map_err(err)
    }

    #[staticmethod]
    fn all_c64(n: u32) -> PyResult<Self> {
        dpl::Arrangement::all_c64(n).map(|inner| PyArrangement { inner }).map_err(err)
    }

    #[getter]
    fn indices(&self) -> Vec<u32> {
        self.inner.indices().to_vec()
    }

    fn genus(&self) -> u32 {
        self.inner.genus()
    }

    fn face_vector(&self) -> BTreeMap<usize, usize> {
        self.inner.face_vector()
    }

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    fn is_thin(&self) -> bool {
        self.inner.is_thin()
    }

    fn automorphism_order(&self) -> usize {
        self.inner.flags().automorphism_order()
    }

    fn orbit_count(&self) -> PyResult<usize> {
        self.inner.orbit_count().map_err(err)
    }

    /// Reindex and reorient: `images[k]` is the signed image of the k-th index.
    fn act(&self, images: Vec<i64>) -> PyResult<Self> {
        let g = permutation(self.inner.indices(), images)?;
        self.inner.act(&g).map(|inner| PyArrangement { inner }).map_err(err)
    }

    fn restriction(&self, subset: Vec<u32>) -> PyResult<Self> {
        self.inner.restriction(&subset).map(|inner| PyArrangement { inner }).map_err(err)
    }

    fn chirotope(&self) -> PyResult<PyChirotope> {
        dpl::chirotope::Chirotope::of(&self.inner).map(|inner| PyChirotope { inner }).map_err(err)
    }

    fn isomorphic(&self, other: &PyArrangement) -> bool {
        self.inner.flags().canonical_key(KeyMode::Plain) == other.inner.flags().canonical_key(KeyMode::Plain)
    }

    fn flips(&self) -> Vec<PyArrangement> {
        mutation::flips(&self.inner).into_iter().map(|inner| PyArrangement { inner }).collect()
    }

    /// Möbius counts (a, b, c, d) contributed by this arrangement.
    fn moebius_counts(&self) -> (u64, u64, u64, u64) {
        let r = mutation::moebius_counts(&self.inner);
        (r.a, r.b, r.c, r.d)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn __eq__(&self, other: &PyArrangement) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Arrangement(indices={:?}, genus={})", self.inner.indices(), self.inner.genus())
    }
}

#[pyclass(name = "Chirotope", module = "dpl_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyChirotope {
    inner: dpl::chirotope::Chirotope,
}

#[pymethods]
impl PyChirotope {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        dpl::chirotope::Chirotope::parse(text).map(|inner| PyChirotope { inner }).map_err(err)
    }

    #[staticmethod]
    fn catalog(name: &str) -> PyResult<Self> {
        let text = dpl::catalog::chirotope_text(name).map_err(err)?;
        Self::parse(text)
    }

    #[getter]
    fn indices(&self) -> Vec<u32> {
        self.inner.indices().to_vec()
    }

    /// Class names keyed by index triple.
    fn names(&self) -> BTreeMap<(u32, u32, u32), String> {
        self.inner.names().into_iter().map(|(t, n)| ((t[0], t[1], t[2]), n)).collect()
    }

    /// Returns (accepted, failing subset, reason).
    fn is_k_chirotope(&self, k: usize) -> (bool, Option<Vec<u32>>, Option<String>) {
        let r = chirotope::is_k_chirotope(&self.inner, k);
        (r.accepted, r.failing_subset, r.reason)
    }

    #[pyo3(signature = (genus = Some(1)))]
    fn reconstruct(&self, genus: Option<u32>) -> PyResult<PyArrangement> {
        chirotope::reconstruct(&self.inner, &ReconstructOptions { genus })
            .map(|inner| PyArrangement { inner })
            .map_err(err)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __eq__(&self, other: &PyChirotope) -> bool {
        self.inner == other.inner
    }
}

#[pyclass(name = "CocycleLabel", module = "dpl_py", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyCocycleLabel {
    inner: dpl::CocycleLabel,
}

#[pymethods]
impl PyCocycleLabel {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(|inner| PyCocycleLabel { inner }).map_err(err)
    }

    fn overline_reversed(&self) -> Self {
        PyCocycleLabel { inner: self.inner.overline_reversed() }
    }

    fn orbit(&self, bases: Vec<u32>) -> PyResult<Vec<String>> {
        let o = dpl::cocycle::orbit(std::slice::from_ref(&self.inner), &bases).map_err(err)?;
        Ok(o.iter().map(|l| l.to_string()).collect())
    }

    fn __eq__(&self, other: &PyCocycleLabel) -> bool {
        self.inner == other.inner
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CocycleLabel('{}')", self.inner)
    }
}

/// Census by mutation-graph traversal; returns a dict with the class count
/// and, in the Möbius setting, the counts a, b, c, d.
#[pyfunction]
#[pyo3(signature = (n, setting = "projective", simple_only = true, state_limit = None))]
fn enumerate(n: u32, setting: &str, simple_only: bool, state_limit: Option<usize>) -> PyResult<BTreeMap<String, u64>> {
    let setting = match setting {
        "projective" => Setting::Projective,
        "moebius" => Setting::Moebius,
        s => return Err(PyValueError::new_err(format!("unknown setting {s}"))),
    };
    let opts = EnumerateOptions { simple_only, state_limit, shuffle_seed: None };
    let c = mutation::enumerate(n, setting, &opts).map_err(err)?;
    let mut out = BTreeMap::from([("classes".to_string(), c.classes.len() as u64)]);
    if setting == Setting::Moebius {
        out.extend([("a", c.row.a), ("b", c.row.b), ("c", c.row.c), ("d", c.row.d)].map(|(k, v)| (k.to_string(), v)));
    }
    Ok(out)
}

#[pyfunction]
fn catalog_names() -> Vec<&'static str> {
    dpl::catalog::all().iter().map(|f| f.name).collect()
}

#[pymodule]
fn dpl_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyArrangement>()?;
    m.add_class::<PyChirotope>()?;
    m.add_class::<PyCocycleLabel>()?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(catalog_names, m)?)?;
    Ok(())
}
