//! Cross-check the distance transform against the ladder oracle.

use gaussgap_core::gapfield::ladder_gap;
use gaussgap_core::WedgePoint;

use crate::cli::VerifyArgs;
use crate::commands::gaps::field_with_margin;
use crate::error::CliError;

pub fn run(args: &VerifyArgs) -> Result<(), CliError> {
    let (field, margin) =
        field_with_margin(0, args.a_max, args.margin.max(1), u64::MAX)?;
    let mut mismatches = 0u64;
    for (a, b, got) in field.iter_cells() {
        let want = ladder_gap(WedgePoint::new(a, b), 2 * margin)
            .map_err(CliError::runtime)?;
        if got as u32 != want {
            mismatches += 1;
            println!("mismatch at ({a}, {b}): transform {got}, ladder {want}");
        }
    }
    if mismatches > 0 {
        return Err(CliError::Verification(format!(
            "{mismatches} mismatches over columns 0..={}",
            args.a_max
        )));
    }
    eprintln!(
        "verify ok: transform equals ladder on all {} cells (columns 0..={})",
        field.band().core_cells(),
        args.a_max
    );
    Ok(())
}
