//! PBW normal forms in U(sv), in block and triangular order.

use sv_core::expr::parse_expression;
use sv_core::pbw::{commutator, normal_form_in, uea_weight};
use sv_core::rational::int;
use sv_core::{multiply, normal_form, Generator, PbwOrder, UeaElement};

fn main() {
    let word = [Generator::m(1), Generator::l(-1), Generator::l(-1)];
    println!("block:      M1*L-1*L-1 = {}", normal_form(&word, &int(1)));
    println!("triangular: M1*L-1*L-1 = {}", normal_form_in(PbwOrder::Triangular, &word, &int(1)));

    let word = [Generator::m(0), Generator::l(-5), Generator::y(-1)];
    println!("M0*L-5*Y-1 = {}", normal_form(&word, &int(1)));

    let u = parse_expression("L2*Y-1 - 1/2*M-1*L1").expect("valid expression");
    let v = parse_expression("L-2 + Y-2^2").expect("valid expression");
    let uv = multiply(&u, &v);
    println!("({u}) * ({v}) = {uv}");
    println!("weight of the product: {:?}", uea_weight(&uv));
    println!(
        "[L1^2, L-1] = {}",
        commutator(&UeaElement::power(Generator::l(1), 2), &UeaElement::generator(Generator::l(-1)))
    );
}
