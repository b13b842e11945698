//! CSV serialization of sweep records.
//!
//! The header is fixed; floats are written with 17 significant digits
//! so values round-trip exactly.

use std::io::{self, Write};

use steklov_core::harness::VerificationRecord;

pub const CSV_HEADER: &str = "seed,R1,volume_omega,R2_equiv,sigma1_num,sigma1_shell,rayleigh_w,grad_energy_omega,grad_energy_shell,D_omega,D_shell,inside_rbar,pass_main,pass_hl,pass_key";

fn float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_records<W: Write>(mut w: W, records: &[VerificationRecord]) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            r.seed,
            float(r.r1),
            float(r.volume_omega),
            float(r.r2_equiv),
            float(r.sigma1_num),
            float(r.sigma1_shell),
            float(r.rayleigh_w),
            float(r.grad_energy_omega),
            float(r.grad_energy_shell),
            float(r.d_omega),
            float(r.d_shell),
            r.inside_rbar,
            r.pass_main,
            r.pass_hl,
            r.pass_key,
        )?;
    }
    Ok(())
}
