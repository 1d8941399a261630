//! The module driven from an embedded interpreter.

use g3tilt_py::g3tilt_py;
use pyo3::prelude::*;
use pyo3::types::PyDict;

#[test]
fn module_functions() {
    pyo3::append_to_inittab!(g3tilt_py);
    Python::initialize();
    Python::attach(|py| {
        let locals = PyDict::new(py);
        py.run(
            cr#"
import g3tilt_py as g
fam = g.classify("-7/2|1/4,13/4,-7/2")[:3]
osp = sorted(g.tilting("0|0", system="osp32"))
ok = sorted(g.tilting("0|0,0,0")) == sorted(g.derive("0|0,0,0")[0])
"#,
            None,
            Some(&locals),
        )
        .unwrap();
        let fam: (String, Option<String>, Option<String>) = locals.get_item("fam").unwrap().unwrap().extract().unwrap();
        assert_eq!(fam, ("V".into(), Some("I".into()), Some("3".into())));
        let osp: Vec<(String, i64)> = locals.get_item("osp").unwrap().unwrap().extract().unwrap();
        assert_eq!(osp.len(), 3);
        assert!(locals.get_item("ok").unwrap().unwrap().extract::<bool>().unwrap());
    });
}
