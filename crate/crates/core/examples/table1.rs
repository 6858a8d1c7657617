//! Dimension table of the trimmed serendipity spaces, from closed forms.

use trimmed_serendipity::cli::{cmd_dims, Format, IntRange};

fn main() -> trimmed_serendipity::Result<()> {
    let out = cmd_dims(&IntRange::new(1, 4), &IntRange::new(1, 7), Format::Text, false)?;
    print!("{}", out.text);
    // the same for n = 5, which is only available from the formulas
    let out = cmd_dims(&IntRange::new(5, 5), &IntRange::new(1, 7), Format::Text, false)?;
    print!("{}", out.text);
    Ok(())
}
