//! Runs the full verification suite with timings.

use sv_core::verify::{run_verify, VerifyOptions};

fn main() {
    let report = run_verify(&VerifyOptions::default());
    print!("{}", report.render_text(true));
    if !report.all_passed() {
        std::process::exit(1);
    }
}
