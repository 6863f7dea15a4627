//! Brackets of generators and a spot check of the Jacobi identity.

use sv_core::{bracket, bracket_gen, Generator, LieElement};

fn main() {
    let pairs = [
        (Generator::l(1), Generator::l(-1)),
        (Generator::l(2), Generator::m(-3)),
        (Generator::l(1), Generator::y(-1)),
        (Generator::l(-1), Generator::y(0)),
        (Generator::y(0), Generator::y(-1)),
        (Generator::y(2), Generator::y(-3)),
        (Generator::m(4), Generator::y(-7)),
    ];
    for (a, b) in pairs {
        println!("[{a}, {b}] = {}", bracket_gen(a, b));
    }

    let x = LieElement::from(Generator::l(2));
    let y = LieElement::from(Generator::y(-2));
    let z = LieElement::from(Generator::y(1));
    let jacobi = &(&bracket(&x, &bracket(&y, &z)) + &bracket(&y, &bracket(&z, &x))) + &bracket(&z, &bracket(&x, &y));
    println!("Jacobi(L2, Y-2, Y1) = {jacobi}");
}
