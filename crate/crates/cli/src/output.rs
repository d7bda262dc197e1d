use std::io::{self, Write};

use nsg_core::partition::class_max_kunz;
use nsg_core::KunzVector;
use serde::Serialize;

use crate::args::Format;

#[derive(Debug, Serialize)]
pub struct OutputRecord {
    pub frobenius: usize,
    pub kunz: String,
    pub gaps: Vec<usize>,
    pub min_generators: Vec<usize>,
    pub genus: usize,
    pub irreducible: bool,
    pub homogeneous: bool,
    pub class_of: String,
}

impl OutputRecord {
    pub fn new(x: &KunzVector) -> Self {
        let s = x.to_semigroup();
        OutputRecord {
            frobenius: x.frobenius(),
            kunz: x.to_string(),
            gaps: x.ones().collect(),
            min_generators: s.minimal_generators().to_vec(),
            genus: x.popcount(),
            irreducible: x.is_irreducible(),
            homogeneous: x.is_homogeneous(),
            class_of: class_max_kunz(x).to_string(),
        }
    }
}

pub fn write_one(out: &mut impl Write, x: &KunzVector, format: Format) -> io::Result<()> {
    match format {
        Format::Jsonl => {
            serde_json::to_writer(&mut *out, &OutputRecord::new(x))?;
            writeln!(out)
        }
        Format::Bits => writeln!(out, "{x}"),
        Format::Gens => writeln!(out, "{}", x.to_semigroup()),
    }
}

pub fn write_all<'a>(
    out: &mut impl Write,
    items: impl IntoIterator<Item = &'a KunzVector>,
    format: Format,
) -> io::Result<()> {
    for x in items {
        write_one(out, x, format)?;
    }
    Ok(())
}
