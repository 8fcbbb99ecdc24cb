use std::io::Write;

use crate::SectionGrid;

/// Header `p,q,re,im,norm`, one row per cell with `q` as the outer loop,
/// 17 significant digits.
pub fn write_csv(grid: &SectionGrid, mut w: impl Write) -> std::io::Result<()> {
    writeln!(w, "p,q,re,im,norm")?;
    for (i, (v, n)) in grid.values.iter().zip(&grid.norms).enumerate() {
        let (p, q) = grid.coords(i);
        writeln!(w, "{p:.16e},{q:.16e},{:.16e},{:.16e},{n:.16e}", v.re, v.im)?;
    }
    Ok(())
}

/// Binary 16-bit PGM on an 8-decade log scale relative to the brightest
/// cell; the first image row is the largest `q`.
pub fn write_pgm(grid: &SectionGrid, mut w: impl Write) -> std::io::Result<()> {
    let n = grid.n;
    write!(w, "P5\n{n} {n}\n65535\n")?;
    let top = grid.max_norm();
    let mut buf = Vec::with_capacity(2 * n * n);
    for row in (0..n).rev() {
        for col in 0..n {
            let v = grid.norms[row * n + col];
            let level = if top > 0.0 && v > 0.0 { (1.0 + (v / top).log10() / 8.0).clamp(0.0, 1.0) } else { 0.0 };
            let px = (65535.0 * level).round() as u16;
            buf.extend_from_slice(&px.to_be_bytes());
        }
    }
    w.write_all(&buf)
}
