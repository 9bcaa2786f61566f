#![no_main]

use libfuzzer_sys::fuzz_target;
use reslab::degseq::{hh_realization, hh_trace, DegreeSequence};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(d) = text.parse::<DegreeSequence>() else { return };
    assert_eq!(d.to_string().parse::<DegreeSequence>().unwrap(), d);
    if d.len() <= 62 && d.as_slice().iter().all(|&x| x < 62) {
        if hh_trace(&d).is_ok() {
            assert_eq!(hh_realization(&d).unwrap().degree_sequence(), d);
        }
    }
});
