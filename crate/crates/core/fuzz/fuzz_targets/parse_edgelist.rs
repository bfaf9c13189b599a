// cargo fuzz run parse_edgelist corpus/parse_edgelist

#![no_main]

use isodisc::{parse_matrix, Format};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(m) = parse_matrix(data, Format::Edgelist) {
        assert_eq!(m.row_sums().iter().sum::<usize>() as u64, m.ones());
    }
});
