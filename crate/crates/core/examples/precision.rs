// Why the working precision matters: with too few bits the prolate matrix of
// closely spaced nodes is numerically singular, with the estimate it is not.

use superosc::prolate::{NodeGeometry, ProlateMatrix};
use superosc::xprec::{estimate_required_bits, to_decimal_digits, PrecisionContext};
use superosc::{Error, Result};

pub fn run_example() -> Result<()> {
    let n = 12;
    let probe = PrecisionContext::new(128)?;
    let ratio = probe.parse("0.02")?;
    let needed = estimate_required_bits(n, &ratio)?;
    println!("N = {n}, dx/lambda = 0.02: estimate {needed} bits");

    for bits in [64, 96, needed + 32] {
        let ctx = PrecisionContext::new(bits)?;
        let dx = ctx.parse("0.02")? * 2u32;
        let geom = NodeGeometry::equispaced(n, &dx, ctx.pi(), ctx.one())?;
        let prolate = ProlateMatrix::build(&geom, ctx)?;
        match prolate.smallest_eigenpair() {
            Ok((s, _)) => println!("{bits:>4} bits: s_min = {}", to_decimal_digits(&s, 12)),
            Err(e @ (Error::PrecisionExhausted { .. } | Error::NotSpd { .. })) => println!("{bits:>4} bits: {e}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
