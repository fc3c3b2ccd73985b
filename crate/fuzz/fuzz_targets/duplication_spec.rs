#![no_main]

use libfuzzer_sys::fuzz_target;
use numdup::duplication::{duplicate, DuplicationSpec, TranslatePolicy};
use numdup::parse::parse_int_list;
use numdup::{NumericalSemigroup, RelativeIdeal};

// Input: "<semigroup>;<ideal>;<b>;<auto|none>", as on the command line.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let parts: Vec<&str> = text.splitn(4, ';').collect();
    let [sgp, ideal, b, policy] = parts[..] else {
        return;
    };
    if parse_int_list(sgp).is_ok_and(|g| g.iter().min().is_some_and(|&m| m > 1 << 12)) {
        return;
    }
    let (Ok(s), Ok(b), Ok(policy)) = (
        NumericalSemigroup::parse(sgp),
        b.trim().parse::<i64>(),
        policy.trim().parse::<TranslatePolicy>(),
    ) else {
        return;
    };
    if s.frobenius() > 200 || b.abs() > 1000 {
        return;
    }
    let Ok(e) = RelativeIdeal::parse(&s, ideal) else {
        return;
    };
    if e.conductor() - e.min() > 400 {
        return;
    }
    if let Ok(spec) = DuplicationSpec::new(&e, Some(b), policy) {
        let t = duplicate(&spec).expect("validated spec");
        assert_eq!(t.frobenius(), spec.frobenius());
    }
});
