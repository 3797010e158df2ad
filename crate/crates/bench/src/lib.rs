//! Input sets shared by the benchmarks.

/// `n` values in `0..=255`, so conversions to `u8` always succeed.
pub fn byte_range_i32(n: usize) -> Vec<i32> {
    (0..n as i32)
        .map(|i| (i.wrapping_mul(37) + 11) & 0xFF)
        .collect()
}

/// `n` values spread over the whole `i32` range.
pub fn spread_i32(n: usize) -> Vec<i32> {
    let mut x = 0x9E37_79B9u32;
    (0..n)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 17;
            x ^= x << 5;
            x as i32
        })
        .collect()
}
