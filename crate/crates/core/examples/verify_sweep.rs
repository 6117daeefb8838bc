// A cached verification sweep: the second pass is answered from the
// JSON-lines cache.

use std::error::Error;

use grqn::cli::{verify, InclusiveRange, DEFAULT_CELL_LIMIT};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let dir = std::env::temp_dir().join(format!("grqn-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let cache = dir.join("cache.jsonl");
    let _ = std::fs::remove_file(&cache);
    let n: InclusiveRange = "1".parse()?;
    let d: InclusiveRange = "1..4".parse()?;
    let c: InclusiveRange = "1..6".parse()?;
    let first = verify(n, d, c, 4, &cache, DEFAULT_CELL_LIMIT)?;
    println!("first pass:  {first}");
    let second = verify(n, d, c, 4, &cache, DEFAULT_CELL_LIMIT)?;
    println!("second pass: {second}");
    std::fs::remove_dir_all(&dir)?;
    if !first.ok() || second.skipped != second.cells {
        return Err("sweep failed".into());
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
