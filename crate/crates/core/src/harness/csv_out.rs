use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};

use super::sweep::SweepRecord;

pub const CSV_HEADER: [&str; 5] = ["p", "log_negativity", "discord", "engine", "wall_time_s"];
pub const SIGNIFICANT_DIGITS: usize = 12;

/// `%.12g`-style rendering: fixed notation for exponents in `[-5, 12)`,
/// scientific otherwise, trailing zeros removed.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..digits as i32).contains(&exp) {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    s.trim_end_matches('0').trim_end_matches('.').to_string()
}

fn field(v: Option<f64>) -> String {
    v.map(|x| format_significant(x, SIGNIFICANT_DIGITS)).unwrap_or_default()
}

pub fn write_csv<W: Write>(records: &[SweepRecord], out: W) -> Result<()> {
    if records.is_empty() {
        return Err(Error::Precondition("no records to write".into()));
    }
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            format_significant(r.p, SIGNIFICANT_DIGITS),
            field(r.log_negativity),
            field(r.discord),
            r.engine.tag().to_string(),
            format_significant(r.wall_time_s, SIGNIFICANT_DIGITS),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn emit_csv(records: &[SweepRecord], destination: &Path) -> Result<()> {
    if records.is_empty() {
        return Err(Error::Precondition("no records to write".into()));
    }
    write_csv(records, std::io::BufWriter::new(std::fs::File::create(destination)?))
}
