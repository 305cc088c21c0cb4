//! Idempotent factor sets of D∞ on finite windows: prohibitions, fixed
//! points of reflections and non-isolation certificates.

use std::collections::BTreeSet;

use parsigma::dinf::{self, DInfGenerator};

fn main() -> parsigma::Result<()> {
    let gen: DInfGenerator = parsigma::io::from_json(r#"{"nu0_zeros":[2],"omega1_zeros":[[1,0]]}"#)?;
    let w = dinf::window_prohibition_check(&gen, 6)?;
    println!("window 6: {} subsets, {} prohibited, consistent = {}", w.subsets_checked, w.prohibited, w.passed);

    let index: BTreeSet<i64> = [0, 1].into_iter().collect();
    for l in -2..=2 {
        let d = dinf::delta_membership(&gen, l, &index)?;
        let m = dinf::lambda_membership(&gen, l, &index)?;
        println!("l = {l}: Δ {:?}, Λ {:?}", d.value(), m.value());
        if d.value() == Some(true) && m.value() == Some(true) {
            let c = dinf::freeness_certificate(&gen, l, &index, 6)?;
            let point: Vec<String> = c.point.iter().map(|w| w.to_string()).collect();
            println!("  ξ = {point:?}: {} excluded, {} admissible in window {}, certified = {}", c.predicted_complement.len(), c.admissible.len(), c.window, c.certified);
        }
    }
    Ok(())
}
