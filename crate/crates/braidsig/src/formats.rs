//! Machine-readable output: JSON documents and the CSV families table.

use std::io::Write;

use serde::Serialize;

use crate::error::Result;
use crate::verifier::FamilyRow;

/// One compact JSON document followed by a newline.
pub fn write_json_line<W: Write + ?Sized, T: Serialize>(out: &mut W, doc: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, doc)?;
    out.write_all(b"\n")?;
    Ok(())
}

pub fn write_families_csv<W: Write>(out: W, rows: &[FamilyRow]) -> Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    for row in rows {
        writer.serialize(row).map_err(std::io::Error::other)?;
    }
    writer.flush()?;
    Ok(())
}
