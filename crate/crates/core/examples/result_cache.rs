//! Classification records and the JSON-lines cache used by `congruent classify`.

use congruent::cli::{cmd_classify_record, Cache};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("congruent-example-{}", std::process::id()));
    let cache = Cache::at(dir.join("results.jsonl"));
    let mut err = std::io::stderr();

    for n in [45u64, 5, 13, 98] {
        let (record, reduction) = cmd_classify_record(n, 200, Some(&cache), &mut err)?;
        if let Some(r) = reduction {
            println!("{r}");
        }
        println!("{}", record.to_json_line());
    }

    let contents = cache.load()?;
    println!("\n{} records in {}", contents.records.len(), cache.path().display());
    std::fs::remove_dir_all(dir)?;
    Ok(())
}
