use sv_core::lie::{Generator, Sv};
use sv_core::module::{ModuleSpec, ModuleVector};
use sv_core::solver::{whittaker_vectors, Truncation};
use sv_core::verify::*;

#[test]
fn corrupted_relations_fail_jacobi() {
    let bad = check_lie_axioms(&CorruptedSv);
    assert!(!bad.passed);
    assert!(bad.detail.starts_with("Jacobi fails"), "{}", bad.detail);
    assert!(check_lie_axioms(&Sv).passed);
}

#[test]
fn trivial_window_has_only_the_cyclic_vector() {
    for psi in nonsingular_family() {
        let r = whittaker_vectors(&ModuleSpec::universal(psi), &Truncation::uniform(0, 0, 0)).unwrap();
        assert_eq!(r.basis, vec![ModuleVector::cyclic()]);
    }
}

#[test]
fn shape_checker_rejects_wrong_shapes() {
    // [L_2, M_{-1}] = -M_1: an L-past-M term, but not an M-past-L one
    assert!(check_shape(ShapeIdentity::LPastM, Generator::l(2), &[Generator::m(-1)]).is_ok());
    assert!(check_shape(ShapeIdentity::LPastL, Generator::l(2), &[Generator::m(-1)]).is_err());
    // [Y_{1/2}, Y_{-3/2}] = -2 M_{-1}
    assert!(check_shape(ShapeIdentity::YPastY, Generator::y(0), &[Generator::y(-2)]).is_ok());
    assert!(check_shape(ShapeIdentity::YPastL, Generator::y(0), &[Generator::y(-2)]).is_err());
    // L_1 L_0 = L_0 L_1 + L_1 keeps L_1 but lowers λ(0)
    assert!(check_shape(ShapeIdentity::LPastL, Generator::l(1), &[Generator::l(0)]).is_ok());
    assert!(check_shape(ShapeIdentity::LPastM, Generator::l(1), &[Generator::l(0)]).is_err());
}

#[test]
fn shape_instances_cover_every_identity() {
    let inst = shape_instances(5);
    for id in [
        ShapeIdentity::MPastL,
        ShapeIdentity::YPastL,
        ShapeIdentity::YPastY,
        ShapeIdentity::LPastL,
        ShapeIdentity::LPastM,
        ShapeIdentity::LPastY,
    ] {
        assert!(inst.iter().filter(|(i, _, _)| *i == id).count() >= 10, "{id:?}");
    }
}

#[test]
fn report_rendering_is_stable() {
    let report = VerifyReport {
        truncation: Truncation::uniform(1, 0, 0),
        seed: 3,
        checks: vec![check_m_past_l_closed_form(), check_z_elements()],
    };
    let text = report.render_text(false);
    assert_eq!(text, report.render_text(false));
    assert!(text.ends_with("2/2 checks passed\n"));
    assert!(report.all_passed());
}
