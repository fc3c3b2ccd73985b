#![no_main]

use libfuzzer_sys::fuzz_target;
use numdup::parse::parse_int_list;
use numdup::{NumericalSemigroup, RelativeIdeal};

// Input: "<semigroup>;<ideal>", both in the comma-separated generator format.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Some((sgp, ideal)) = text.split_once(';') else {
        return;
    };
    if parse_int_list(sgp).is_ok_and(|g| g.iter().min().is_some_and(|&m| m > 1 << 12)) {
        return;
    }
    let Ok(s) = NumericalSemigroup::parse(sgp) else {
        return;
    };
    if s.frobenius() > 200 {
        return;
    }
    if let Ok(e) = RelativeIdeal::parse(&s, ideal) {
        if e.conductor() - e.min() < 400 {
            assert_eq!(e.dual().dual(), e);
        }
    }
});
