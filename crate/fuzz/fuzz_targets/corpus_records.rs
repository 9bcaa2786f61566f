#![no_main]

use libfuzzer_sys::fuzz_target;
use reslab::verify::{run_suite, CheckId, Source};

fuzz_target!(|data: &[u8]| {
    let text = String::from_utf8_lossy(data);
    let lines: Vec<String> = text.lines().take(16).map(str::to_owned).collect();
    let src = Source::Records { name: "fuzz".into(), lines };
    let Ok(reports) = run_suite(&src, &[CheckId::Thm1ResidueLeAlpha], 2) else { return };
    let r = &reports[0];
    assert!(r.counterexamples.is_empty());
    assert!(r.applicable <= r.scanned);
});
