//! Nilpotency indices of the dot action on small basis vectors.

use sv_core::rational::int;
use sv_core::solver::{generators_up_to, nilpotency_index};
use sv_core::{ModuleSpec, ModuleVector, Truncation, WhittakerHom};

fn main() {
    let spec = ModuleSpec::universal(WhittakerHom::new(int(1), int(0), int(1), int(0)));
    let gens: Vec<_> = generators_up_to(3).into_iter().filter(|g| g.is_raising()).collect();
    for b in Truncation::uniform(2, 1, 0).window(&spec) {
        let v = ModuleVector::basis(b.clone());
        let row: Vec<String> =
            gens.iter().map(|g| format!("{g}:{}", nilpotency_index(*g, &v, &spec, 12).expect("nilpotent"))).collect();
        println!("{:<16} {}", b.to_string(), row.join(" "));
    }
}
