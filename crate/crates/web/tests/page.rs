//! The static page must only call functions the crate exports.

const PAGE: &str = include_str!("../www/index.html");

#[test]
fn page_imports_exported_functions() {
    let import = PAGE
        .lines()
        .find(|l| l.starts_with("import init"))
        .expect("module import line");
    for name in ["matrix_summary", "bound_curve", "asymptote_curve"] {
        assert!(import.contains(name), "{name} not imported");
    }
    assert!(import.contains("./pkg/hankel_web.js"));
}

#[test]
fn page_defaults_are_accepted() {
    assert!(hankel_web::matrix_summary_json("jacobi:alpha=0,beta=0", 3).is_ok());
    assert!(hankel_web::bound_curve_json("laguerre:alpha=0", 10).is_ok());
    assert!(hankel_web::asymptote_curve_json("laguerre:alpha=0", 4096, 60).is_ok());
}
