// cargo fuzz run parse_and_solve corpus/parse_and_solve

#![no_main]

use isodisc::{disc, isomorphic_discrepancy, parse_matrix, Format};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Some((&selector, body)) = data.split_first() else {
        return;
    };
    let format = match selector % 3 {
        0 => Format::Dense,
        1 => Format::Csv,
        _ => Format::Edgelist,
    };
    let Ok(m) = parse_matrix(body, format) else {
        return;
    };
    if m.rows() * m.cols() > 4096 {
        return;
    }
    let r = isomorphic_discrepancy(&m);
    assert!(r.lower_bound <= r.id && r.id <= r.disc);
    assert_eq!(disc(&r.witness()).unwrap(), r.id);
});
