//! Python bindings: an `Algebra` class exposing enumeration, defining
//! sequences, Coxeter data and group orders, plus the verification suites.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use superweyl::catalog::{build_catalog, parse_spec, AlgebraCatalog};
use superweyl::coxeter::{coxeter_matrix, emit_dot, emit_text, CoxeterGraph};
use superweyl::defseq::encode;
use superweyl::enumerator::{enumerate_borels, expected_count, BorelSet};
use superweyl::permgroup::{
    build_generator_table, element_order, group_order, GeneratorTable,
};
use superweyl::verify::run_suite;

fn err(e: superweyl::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// One algebra with its enumerated Borel set and generator permutations.
#[pyclass]
struct Algebra {
    cat: AlgebraCatalog,
    borels: BorelSet,
    table: GeneratorTable,
}

#[pymethods]
impl Algebra {
    /// Build from a spec string such as `"spo(4|5)"` or `"D(2,1;-2/3)"`.
    #[new]
    fn new(spec: &str) -> PyResult<Self> {
        let spec = parse_spec(spec).map_err(err)?;
        let cat = build_catalog(&spec).map_err(err)?;
        let borels = enumerate_borels(&cat).map_err(err)?;
        let table = build_generator_table(&cat, &borels);
        Ok(Algebra { cat, borels, table })
    }

    fn __repr__(&self) -> String {
        format!("Algebra(\"{}\", systems={})", self.cat.spec, self.borels.len())
    }

    /// Number of fundamental systems.
    fn count(&self) -> usize {
        self.borels.len()
    }

    /// Closed-form count, when the family has one.
    fn expected_count(&self) -> Option<u128> {
        expected_count(&self.cat.spec)
    }

    /// All roots, rendered over the named basis.
    fn roots(&self) -> Vec<String> {
        self.cat.roots.iter().map(|r| self.cat.pretty_root(r)).collect()
    }

    /// Every fundamental system as a list of rendered roots, id order.
    fn systems(&self) -> Vec<Vec<String>> {
        self.borels
            .systems()
            .iter()
            .map(|fs| fs.roots().iter().map(|r| self.cat.pretty_root(r)).collect())
            .collect()
    }

    /// Defining sequences per system id (`gl`/`spo` families only).
    fn defining_sequences(&self) -> PyResult<Vec<Vec<String>>> {
        self.borels
            .systems()
            .iter()
            .map(|fs| Ok(encode(&self.cat, fs).map_err(err)?.to_strings(&self.cat)))
            .collect()
    }

    /// Generator labels in extended-system order.
    fn generator_labels(&self) -> Vec<String> {
        self.table.labels.clone()
    }

    /// The Coxeter matrix of the super simple generators.
    fn coxeter_matrix(&self) -> Vec<Vec<u64>> {
        coxeter_matrix(&self.table).entries
    }

    /// The Coxeter matrix as a printable table.
    fn coxeter_text(&self) -> String {
        emit_text(&coxeter_matrix(&self.table))
    }

    /// The Coxeter graph in DOT format.
    fn dot(&self) -> String {
        emit_dot(&CoxeterGraph::from(&coxeter_matrix(&self.table)))
    }

    /// Order of the product of two generators, as a transform of the
    /// Borel set.
    fn product_order(&self, i: usize, j: usize) -> PyResult<u64> {
        let k = self.table.gens.len();
        if i >= k || j >= k {
            return Err(PyValueError::new_err(format!("generator index out of range 0..{k}")));
        }
        Ok(element_order(&self.table.gens[i].compose(&self.table.gens[j])))
    }

    /// Exact order of the super Weyl group.
    fn group_order(&self) -> num_bigint::BigUint {
        group_order(&self.table.gens).order
    }
}

/// Run a verification suite; returns `(passed, report_text)`.
#[pyfunction]
#[pyo3(signature = (suite, strict = false))]
fn verify(suite: &str, strict: bool) -> PyResult<(bool, String)> {
    let reports = run_suite(suite, strict).map_err(err)?;
    let passed = reports.iter().all(|r| r.passed());
    let text: String = reports.iter().map(|r| r.render()).collect();
    Ok((passed, text))
}

#[pymodule]
fn superweyl_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
