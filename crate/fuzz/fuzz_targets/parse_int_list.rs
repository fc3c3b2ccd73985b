#![no_main]

use libfuzzer_sys::fuzz_target;
use numdup::parse::{format_int_list, parse_int_list, parse_int_list_bytes};

fuzz_target!(|data: &[u8]| {
    if let Ok(values) = parse_int_list_bytes(data) {
        assert!(!values.is_empty());
        assert_eq!(parse_int_list(&format_int_list(&values)).unwrap(), values);
    }
});
