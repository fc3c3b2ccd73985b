#![no_main]

use libfuzzer_sys::fuzz_target;
use numdup::parse::parse_int_list;
use numdup::NumericalSemigroup;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // keep the membership table small; huge generators are a budget error, not a bug
    if parse_int_list(text).is_ok_and(|g| g.iter().min().is_some_and(|&m| m > 1 << 12)) {
        return;
    }
    if let Ok(s) = NumericalSemigroup::parse(text) {
        assert_eq!(NumericalSemigroup::parse(&s.to_string()).unwrap(), s);
        assert!(!s.contains(s.frobenius()));
        assert_eq!(s.gaps().len(), s.genus());
    }
});
