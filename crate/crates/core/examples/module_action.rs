//! Actions on W_ψ, L_{ψ,ξ} and V(ξ,ζ), the dot action and z-elements.

use sv_core::expr::parse_vector_expression;
use sv_core::module::maxdeg;
use sv_core::rational::{frac, int};
use sv_core::{act, act_gen, dot_act, z_element, Generator, ModuleSpec, ModuleVector, WhittakerHom};

fn main() {
    let psi = WhittakerHom::new(int(1), int(-2), int(1), frac(1, 2));
    let specs = [
        ModuleSpec::universal(psi.clone()),
        ModuleSpec::quotient(psi.clone(), int(3)),
        ModuleSpec::verma(int(1), frac(-1, 2)),
    ];
    for spec in &specs {
        let v = parse_vector_expression("L-1*Y-1*w + M-2*w", spec).expect("valid vector");
        println!("{spec}");
        println!("  v = {v}, maxdeg {}", maxdeg(&v));
        for g in [Generator::l(1), Generator::m(1), Generator::y(0), Generator::l(0)] {
            println!("  {g} v = {}", act_gen(g, &v, spec));
        }
    }

    let spec = &specs[0];
    let v = parse_vector_expression("L-1*w", spec).expect("valid vector");
    let once = dot_act(Generator::m(1), &v, spec).expect("M1 is raising");
    println!("M1 . L-1 w = {once}");
    println!("M1 . (M1 . L-1 w) = {}", dot_act(Generator::m(1), &once, spec).expect("M1 is raising"));

    let singular = WhittakerHom::new(int(0), int(0), int(0), int(1));
    let z = z_element(&singular, None).expect("singular psi");
    let spec = ModuleSpec::universal(singular);
    let zw = act(&z, &ModuleVector::cyclic(), &spec);
    println!("z = {z}");
    println!("z w = {zw}");
    for g in sv_core::solver::SV_PLUS_GENERATORS {
        println!("  {g} . z w = {}", dot_act(g, &zw, &spec).expect("raising"));
    }
}
