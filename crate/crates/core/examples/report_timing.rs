use std::time::Instant;
fn main() {
    let t0 = Instant::now();
    let report = umbral_core::verify::full_report(7).unwrap();
    let elapsed = t0.elapsed();
    println!("full_report: {:?}, checks: {}, passed: {}, measured: {}, all_asserted_pass: {}",
        elapsed, report.total(), report.passed(), report.measured(), report.all_asserted_pass());
    for f in report.failures() {
        println!("FAIL: {} abs={:.3e} rel={:.3e} tol={:.3e}", f.name, f.abs_err, f.rel_err, f.tolerance);
    }
    let json = report.to_json();
    println!("json bytes: {}", json.len());
}
