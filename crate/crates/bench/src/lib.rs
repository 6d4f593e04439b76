//! Fixed inputs shared by the benchmarks in `benches/`.

use iwahori_core::braid::BraidWord;

/// A braid on `n` strands cycling through all generators with alternating
/// signs, `len` letters long.
pub fn mixed_braid(n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|k| {
            let g = (k % (n - 1)) as i32 + 1;
            if k % 3 == 2 {
                -g
            } else {
                g
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("generators in range")
}
