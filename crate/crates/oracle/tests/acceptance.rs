use ola_oracle::acceptance::{run_all, Status};

fn main() {
    let reports = run_all();
    for r in &reports {
        println!("{r}");
    }
    let passed = reports.iter().filter(|r| r.status == Status::Pass).count();
    let known = reports.iter().filter(|r| r.status == Status::KnownDefect).count();
    let failed = reports.iter().filter(|r| r.status == Status::Fail).count();
    println!("acceptance: {passed} passed, {known} known defects, {failed} failed");
    if failed > 0 {
        std::process::exit(1);
    }
}
