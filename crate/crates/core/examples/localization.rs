//! Roots of `K~_n` on the rays and arcs, and of `K_{a,n}` on the midline.
//! Pass a path to also write the plot table.

use kfermat::kfamily::KFamilySpec;
use kfermat::localization::{emit_plot_data, localize_report, DEFAULT_CTOL, DEFAULT_TOL};
use kfermat::RatScalar;

fn main() -> kfermat::Result<()> {
    let fermat = localize_report(&KFamilySpec::fermat(18)?, DEFAULT_TOL, DEFAULT_CTOL)?;
    println!(
        "K~_18: {} roots, claim {:?}, verdict {}",
        fermat.degree, fermat.claim, fermat.verdict
    );
    for r in &fermat.roots {
        println!(
            "  {:>+.6} {:>+.6}i  {:<6}  residual {:.1e}",
            r.re, r.im, r.label, r.residual
        );
    }
    println!("  counts {:?}", fermat.counts);

    let spec = KFamilySpec::new(RatScalar::new(-2, 5)?, 9)?;
    let line = localize_report(&spec, DEFAULT_TOL, DEFAULT_CTOL)?;
    let worst = line
        .roots
        .iter()
        .map(|r| (r.re - 0.5).abs())
        .fold(0.0, f64::max);
    println!(
        "K_{{-2/5,9}}: {} roots, max |Re z - 1/2| = {worst:.1e}, lower bound {}",
        line.roots.len(),
        line.lower_bound
    );

    if let Some(path) = std::env::args().nth(1) {
        std::fs::write(&path, emit_plot_data(&fermat)).expect("writable path");
        println!("wrote {path}");
    }
    Ok(())
}
