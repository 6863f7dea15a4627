//! Whittaker vectors inside a window, for nonsingular and trivial ψ.

use sv_core::rational::{frac, int};
use sv_core::{whittaker_vectors, ModuleSpec, Truncation, WhittakerHom};

fn main() {
    let t = Truncation::uniform(3, 3, 3);
    let cases = [
        ("W_psi, psi nonsingular", ModuleSpec::universal(WhittakerHom::new(int(1), int(2), frac(-3, 5), int(3)))),
        (
            "L_(psi,xi), psi nonsingular",
            ModuleSpec::quotient(WhittakerHom::new(int(0), int(0), int(2), int(0)), int(-2)),
        ),
        ("W_0", ModuleSpec::universal(WhittakerHom::zero())),
        ("L_(0,1)", ModuleSpec::quotient(WhittakerHom::zero(), int(1))),
    ];
    for (name, spec) in cases {
        let r = whittaker_vectors(&spec, &t).expect("solver");
        println!("{name}: {} basis vectors in a window of {}", r.dimension, t.window(&spec).len());
        for v in &r.basis {
            println!("  {v}");
        }
    }
}
