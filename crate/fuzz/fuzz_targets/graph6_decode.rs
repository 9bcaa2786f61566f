#![no_main]

use libfuzzer_sys::fuzz_target;
use reslab::graph6::{decode_bytes, to_graph6};

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = decode_bytes(data) {
        let text = to_graph6(&g);
        let body = data.strip_prefix(reslab::graph6::HEADER.as_bytes()).unwrap_or(data);
        assert_eq!(text.as_bytes(), body);
        assert_eq!(decode_bytes(text.as_bytes()).unwrap(), g);
    }
});
