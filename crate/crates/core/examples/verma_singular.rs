//! Singular vectors of V(ξ,ζ): only the cyclic vector when ξ ≠ 0.

use sv_core::rational::int;
use sv_core::{singular_vectors, ModuleSpec, Truncation};

fn main() {
    let t = Truncation::uniform(3, 0, 0);
    for (xi, zeta) in [(1, 0), (1, 1), (0, 0), (0, 1)] {
        let spec = ModuleSpec::verma(int(xi), int(zeta));
        let r = singular_vectors(&spec, &t).expect("solver");
        println!("V({xi},{zeta}): dimension {}", r.dimension);
        for v in r.basis.iter().take(6) {
            println!("  {v}");
        }
    }
}
