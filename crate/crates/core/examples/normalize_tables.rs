//! Re-ingests table files and rewrites them in canonical form.
//!
//! cargo run --release --example normalize_tables -- data/tables/*.json

use std::time::Instant;

use sporadic::CharacterTable;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for path in std::env::args().skip(1) {
        let start = Instant::now();
        let bytes = std::fs::read(&path)?;
        let table = CharacterTable::from_json_bytes(&bytes)?;
        let text = table.to_json_string();
        if text.as_bytes() != bytes.as_slice() {
            std::fs::write(&path, text)?;
        }
        println!("{path}: {} classes, {:.2?}", table.num_classes(), start.elapsed());
    }
    Ok(())
}
