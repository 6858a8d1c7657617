//! Compares the face-moment count with the dimension formula far beyond the
//! range where bases are built.

use trimmed_serendipity::dof::{dof_count, minimality_identity};
use trimmed_serendipity::spaces::{dim_formula, SpaceKind};

fn main() -> trimmed_serendipity::Result<()> {
    let mut checked = 0;
    for n in 1..=5 {
        for k in 0..=n {
            for r in 1..=100 {
                let dim = dim_formula(&SpaceKind::SMinus, n, k, r)?;
                assert_eq!(dof_count(n, k, r), dim, "n={n} k={k} r={r}");
                checked += 1;
            }
        }
    }
    println!("DOF count = dimension in {checked} cases (n <= 5, r <= 100)");
    println!("dim S-_100 L^2 on the 5-cube: {}", dim_formula(&SpaceKind::SMinus, 5, 2, 100)?);

    for r in [1, 5, 10] {
        let m = minimality_identity(3, 1, r)?;
        println!("n=3 k=1 r={r}: interior {} = {} + {}", m.interior_count, m.p_dim, m.dh_dim);
    }
    Ok(())
}
