//! Vector proxies in two and three dimensions and the classical element
//! families they identify.

use trimmed_serendipity::proxy::{build_ac_pair, check_prop_ac, check_prop_cf, curl3d, flat, grad, position, sharp};
use trimmed_serendipity::proxy::scalar;

fn main() -> trimmed_serendipity::Result<()> {
    let f = scalar(1, &[2, 1, 0]);
    let g = grad(&f);
    println!("grad(x1^2 x2)       = {:?}", g.components().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("flat as a 1-form    = {}", flat(&g, 1)?);
    println!("curl(grad)          = {:?}", curl3d(&g)?.components().iter().map(|c| c.is_zero()).collect::<Vec<_>>());
    let x = position(3);
    println!("sharp(flat(x), k=2) = {:?}", sharp(&flat(&x, 2)?)?.components().iter().map(ToString::to_string).collect::<Vec<_>>());

    let (v, w) = build_ac_pair(2)?;
    println!("AC pair r=2: dims {} and {}", v.dim(), w.dim());
    for r in 1..=3 {
        println!("{}", check_prop_ac(r)?);
        println!("{}", check_prop_cf(2, r)?);
    }
    for r in 1..=2 {
        println!("{}", check_prop_cf(3, r)?);
    }
    Ok(())
}
