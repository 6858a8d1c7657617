//! Traces to facets, the inclusion chain and the structural identities.

use trimmed_serendipity::exact::q;
use trimmed_serendipity::properties::{
    check_decompositions, check_inclusion, check_space_identities, check_subcomplex, check_trace,
};
use trimmed_serendipity::spaces::{generate_space, SpaceKind};

fn main() -> trimmed_serendipity::Result<()> {
    let space = generate_space(&SpaceKind::SMinus, 3, 1, 2)?;
    let w = &space.basis()[space.dim() - 1];
    println!("w          = {w}");
    println!("w|x3=-1    = {}", w.trace(2, &q(-1)));

    let (n, r) = (3, 2);
    for k in 0..=n {
        println!("{}", check_trace(n, k, r)?);
        println!("{}", check_inclusion(n, k, r)?);
        println!("{}", check_subcomplex(n, k, r)?);
        println!("{}", check_decompositions(n, k, r)?);
        println!("{}", check_space_identities(n, k, r)?);
    }
    Ok(())
}
