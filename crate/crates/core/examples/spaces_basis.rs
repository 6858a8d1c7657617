//! Build a few spaces on the square and print their echelon bases.

use trimmed_serendipity::spaces::{dim_formula, generate_space, SpaceKind};

fn main() -> trimmed_serendipity::Result<()> {
    for spec in ["Sminus", "S", "J", "Pminus", "d(J)", "kappa(S)"] {
        let kind: SpaceKind = spec.parse()?;
        let (n, k, r) = (2, 1, 2);
        let space = generate_space(&kind, n, k, r)?;
        println!("{kind} n={n} k={k} r={r}: dim {} (formula {})", space.dim(), dim_formula(&kind, n, k, r)?);
        for b in space.basis() {
            println!("    {b}");
        }
    }
    Ok(())
}
