use std::process::ExitCode;
use std::time::Instant;

use tableau_crystals::checks;

fn main() -> ExitCode {
    let mut failed = Vec::new();
    for check in checks::all() {
        let start = Instant::now();
        let outcome = check.run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS [{:>2}] {} ({secs:.1}s)", check.id, check.name),
            Err(witness) => {
                println!("FAIL [{:>2}] {} ({secs:.1}s): {witness}", check.id, check.name);
                failed.push(check.id);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {} criteria pass", checks::all().len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
