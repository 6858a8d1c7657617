//! Lists the face moments of one element and checks that the moment matrix
//! is square and invertible on the space.

use trimmed_serendipity::dof::{dof_breakdown, dof_functionals, unisolvence_check};

fn main() -> trimmed_serendipity::Result<()> {
    let (n, k, r) = (2, 1, 2);
    for phi in dof_functionals(n, k, r)? {
        println!("{} {}: {}", phi.face, phi.part, phi.weight);
    }
    for c in dof_breakdown(n, k, r)? {
        println!("d={}: {} faces x {} moments", c.d, c.faces, c.p_per_face + c.dh_per_face);
    }
    for n in 2..=3 {
        for k in 0..=n {
            for r in 1..=3 {
                let u = unisolvence_check(n, k, r)?;
                println!(
                    "n={n} k={k} r={r}: {}x{} rank {} unisolvent={} trace-free dim {}",
                    u.functionals, u.dim, u.rank, u.unisolvent, u.trace_free_dim
                );
            }
        }
    }
    Ok(())
}
