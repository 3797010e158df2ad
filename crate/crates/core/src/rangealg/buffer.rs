/// True iff `n` is a positive power of two.
pub const fn is_power_of_two(n: i64) -> bool {
    0 < n && (n & (n - 1)) == 0
}

/// The value constraint on a [`Buffer`] size.
pub const fn buffer_space(size: usize) -> bool {
    buffer_space_violation(size).is_none()
}

/// Why `size` fails [`buffer_space`], with the same message the build
/// reports.
pub const fn buffer_space_violation(size: usize) -> Option<&'static str> {
    if size < 1024 {
        Some("buffer too small")
    } else if size > i64::MAX as usize || !is_power_of_two(size as i64) {
        Some("size not binary")
    } else {
        None
    }
}

/// Fixed storage for exactly `S` elements, where `S` is at least 1024 and a
/// power of two. Any other `S` is rejected when the constructor is
/// instantiated, during the build.
pub struct Buffer<T, const S: usize> {
    buf: Box<[T; S]>,
}

impl<T: Copy + Default, const S: usize> Buffer<T, S> {
    const SPACE: () = {
        if let Some(reason) = buffer_space_violation(S) {
            panic!("{}", reason);
        }
    };

    pub fn new() -> Buffer<T, S> {
        #[allow(clippy::let_unit_value)]
        let () = Self::SPACE;
        Buffer {
            buf: Box::new([T::default(); S]),
        }
    }
}

impl<T: Copy + Default, const S: usize> Default for Buffer<T, S> {
    fn default() -> Buffer<T, S> {
        Buffer::new()
    }
}

impl<T, const S: usize> Buffer<T, S> {
    pub const CAPACITY: usize = S;

    pub fn as_slice(&self) -> &[T] {
        &self.buf[..]
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        &mut self.buf[..]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers_of_two() {
        assert!(is_power_of_two(2048));
        assert!(is_power_of_two(1));
        assert!(!is_power_of_two(10000));
        assert!(!is_power_of_two(0));
        assert!(!is_power_of_two(-4));
        assert!(is_power_of_two(1 << 62));
        for n in 1..5000i64 {
            assert_eq!(is_power_of_two(n), n.count_ones() == 1, "{n}");
        }
    }

    #[test]
    fn size_constraint() {
        assert!(!buffer_space(100));
        assert!(!buffer_space(10000));
        assert!(!buffer_space(512));
        assert!(buffer_space(1024));
        assert!(buffer_space(2048));
        assert_eq!(buffer_space_violation(100), Some("buffer too small"));
        assert_eq!(buffer_space_violation(10000), Some("size not binary"));
    }

    const _: () = assert!(buffer_space(2048) && !buffer_space(100));

    #[test]
    fn accepted_sizes_build() {
        let b3: Buffer<i32, 2048> = Buffer::new();
        assert_eq!(b3.as_slice().len(), 2048);
        let mut b4 = Buffer::<u8, 1024>::default();
        b4.as_mut_slice()[1023] = 7;
        assert_eq!(b4.as_slice()[1023], 7);
        assert_eq!(Buffer::<u8, 1024>::CAPACITY, 1024);
    }
}
