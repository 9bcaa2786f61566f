#![no_main]

use libfuzzer_sys::fuzz_target;
use reslab::verify::CheckId;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(id) = text.parse::<CheckId>() {
        assert_eq!(id.as_str(), text);
    }
});
