use kfermat::localization::density_audit;
use kfermat::RatScalar;

fn main() -> kfermat::Result<()> {
    for a in [
        RatScalar::new(1, 2)?,
        RatScalar::integer(-1),
        RatScalar::new(3, 2)?,
    ] {
        let audit = density_audit(&a, 60);
        println!(
            "a = {a}: D = [{:.4}, {:.4}], verdict {}",
            audit.domain[0], audit.domain[1], audit.verdict
        );
        for row in audit.rows.iter().filter(|r| r.n % 10 == 0) {
            println!(
                "  n = {:>2}  {:>4} points  max gap {:.5}  pi/n {:.5}",
                row.n, row.points, row.max_gap, row.bound
            );
        }
    }
    Ok(())
}
