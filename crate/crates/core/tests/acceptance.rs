//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use std::process::ExitCode;

use sv_core::lie::Sv;
use sv_core::solver::Truncation;
use sv_core::verify::*;

fn main() -> ExitCode {
    let t = Truncation::uniform(3, 3, 3);
    let criteria: Vec<(u32, CheckResult)> = vec![
        (1, check_lie_axioms(&Sv)),
        (2, check_m_past_l_closed_form()),
        (3, check_commutation_shapes(5)),
        (4, check_nonsingular_universal(&t)),
        (5, check_nonsingular_quotient(&t)),
        (6, check_type_rigidity(&t)),
        (7, check_trivial_psi(&t)),
        (8, check_z_elements()),
        (9, check_proper_submodules(&t, 4)),
        (10, check_nilpotency(&t, 12)),
        (11, check_filtration_isomorphism()),
        (12, check_verma_singular(&t)),
        (13, check_module_axiom(&t, 0, 200)),
    ];
    let mut failed = 0;
    for (n, c) in &criteria {
        let status = if c.passed { "PASS" } else { "FAIL" };
        println!("criterion {n:>2} [{status}] {}: {} ({} ms)", c.name, c.detail, c.elapsed_ms);
        failed += usize::from(!c.passed);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
