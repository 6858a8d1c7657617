//! Exterior derivative, Koszul operator and the homotopy identity on a
//! small 1-form in three variables.

use trimmed_serendipity::exact::q;
use trimmed_serendipity::form::PolyForm;

fn main() {
    let n = 3;
    let x = |i| PolyForm::coordinate(n, i);
    let dx = |i| PolyForm::differential(n, i);

    // w = x1 x2 dx3 - x3^2 dx1, homogeneous of degree 2
    let w = &x(0).wedge(&x(1)).wedge(&dx(2)) - &x(2).wedge(&x(2)).wedge(&dx(0));
    println!("w        = {w}");
    println!("dw       = {}", w.exterior_derivative());
    println!("kw       = {}", w.koszul());
    println!("ddw      = {}", w.exterior_derivative().exterior_derivative());
    println!("kkw      = {}", w.koszul().koszul());

    let cartan = &w.koszul().exterior_derivative() + &w.exterior_derivative().koszul();
    println!("(dk+kd)w = {cartan}");
    assert_eq!(cartan, w.scale(&q(3)));
    println!("ldeg(w)  = {}", w.linear_degree().unwrap());
    // the trace lives on R^2, variables renumbered
    println!("w|x1=1   = {}", w.trace(0, &q(1)));
}
