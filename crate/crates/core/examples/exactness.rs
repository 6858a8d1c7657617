//! Rank accounting for the four polynomial de Rham complexes.

use trimmed_serendipity::properties::{check_exactness, ExactFamily};

fn main() -> trimmed_serendipity::Result<()> {
    for n in 1..=3 {
        for r in 1..=3 {
            for family in ExactFamily::ALL {
                println!("{}", check_exactness(n, r, family)?);
            }
        }
    }
    Ok(())
}
