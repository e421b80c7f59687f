use bzsv::tables::{self, TableId};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let mut built = vec![];
    for t in TableId::ALL {
        for row in 1..=t.expected_rows() {
            let t0 = Instant::now();
            let params = bzsv::families::default_params(t, row).unwrap();
            match bzsv::families::instantiate(t, row, &params) {
                Ok(e) => built.push(e),
                Err(err) => println!("BUILD FAIL {t}:{row}: {err}"),
            }
            let dt = t0.elapsed().as_millis();
            if dt > 300 { println!("build {t}:{row} took {dt} ms"); }
        }
    }
    println!("built {}/75", built.len());
    let checks: Vec<String> = args;
    for e in &built {
        let t0 = Instant::now();
        let report = tables::verify_corpus(std::slice::from_ref(e), &checks);
        for er in &report.entries {
            for c in &er.checks {
                if !c.pass {
                    println!("CHECK FAIL {}:{} [{}] {}", er.table, er.row, c.check, c.detail);
                }
            }
        }
        let dt = t0.elapsed().as_millis();
        if dt > 500 { println!("verify {}:{} took {dt} ms", e.table, e.row); }
    }
}
