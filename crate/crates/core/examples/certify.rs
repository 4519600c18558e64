//! Runs the full certification suite at the default samples and prints one line per check.

use halfpipe::verify::{all_passed, run_suite, VerifyConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cert = run_suite(&["all".to_string()], &VerifyConfig::default())?;
    for c in &cert {
        println!("{:<22} {:?} {:>6} ms", c.name, c.status, c.duration_ms);
        if !c.passed() {
            println!("    {}", c.actual["counterexample"]);
        }
    }
    println!("all passed: {}", all_passed(&cert));
    Ok(())
}
