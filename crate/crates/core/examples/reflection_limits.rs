//! Rescaled reflection families and their one-sided limits at `t = 0`: equal to first
//! order, different at second order for the `p` and `m` families.

use halfpipe::catalog::table2_families;
use halfpipe::isometry::{conj_rescaled, family_limit, HPElement};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for f in table2_families() {
        let fam = conj_rescaled(&f.label, &f.entries)?;
        let agree: Vec<bool> = (0..3)
            .map(|k| family_limit(&fam, k).map(|(l, r)| l == r))
            .collect::<Result<_, _>>()?;
        let (limit, _) = family_limit(&fam, 0)?;
        let hp = HPElement::from_matrix(&limit).is_ok();
        println!("{:<3} one-sided agreement by order {:?}, half-pipe limit {hp}", f.label, agree);
    }
    Ok(())
}
