//! Runs every reproduction check and prints one line per check.

fn main() {
    let start = std::time::Instant::now();
    let checks = leibniz::verify::verify_all();
    for r in &checks {
        println!("{} {} {}", if r.passed { "PASS" } else { "FAIL" }, r.id, r.title);
        for d in r.details.iter().filter(|d| d.starts_with("FAIL")) {
            println!("    {d}");
        }
    }
    let failed = checks.iter().filter(|r| !r.passed).count();
    println!("{} checks, {failed} failed, {:.2?}", checks.len(), start.elapsed());
}
