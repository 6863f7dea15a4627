//! Truncated submodules generated by z w-bar and by L_{-2} w-bar.

use sv_core::module::z_element;
use sv_core::rational::int;
use sv_core::solver::{span_touches_cyclic, submodule_closure};
use sv_core::{act, Generator, ModuleSpec, ModuleVector, Truncation, UeaElement, WhittakerHom};

fn main() {
    let t = Truncation::uniform(3, 3, 0);

    let psi = WhittakerHom::new(int(0), int(0), int(0), int(1));
    let spec = ModuleSpec::quotient(psi.clone(), int(1));
    let z = z_element(&psi, Some(&int(1))).expect("singular psi");
    let gen = act(&z, &ModuleVector::cyclic(), &spec);
    let span = submodule_closure(std::slice::from_ref(&gen), &spec, &t, 4);
    println!("U(sv) z w-bar from {gen}: dim {} in window, reaches w-bar: {}", span.len(), span_touches_cyclic(&span));

    let spec = ModuleSpec::quotient(WhittakerHom::zero(), int(0));
    let gen = act(&UeaElement::generator(Generator::l(-2)), &ModuleVector::cyclic(), &spec);
    let span = submodule_closure(&[gen], &spec, &t, 4);
    println!(
        "U(sv) L-2 w-bar: dim {} of {} window vectors, reaches w-bar: {}",
        span.len(),
        t.window(&spec).len(),
        span_touches_cyclic(&span)
    );
}
