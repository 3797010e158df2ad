//! A length-carrying, bounds-checked view over contiguous elements.
//!
//! Counts and indices may be given as any numeric type. They are converted
//! with a narrowing check first, so a negative count is reported as a
//! [`NarrowError`](crate::NarrowError) instead of wrapping around to a huge
//! unsigned limit.
//!
//! ```
//! use typext::span::Span;
//!
//! let mut a = [0i32; 100];
//! let s = Span::new(&mut a);
//! assert!(s.at(10).is_ok());
//! assert!(s.at(-10).unwrap_err().is_narrow());
//! assert!(s.at(200).unwrap_err().is_range());
//!
//! let max = 100i32;
//! assert!(Span::prefix(&mut a, max - 500).unwrap_err().is_narrow());
//! ```

use std::fmt;
use std::slice;

use crate::error::{RangeError, SpanError};
use crate::narrowing::{convert_to, Num};
use crate::number::Number;

/// Types whose elements live in one contiguous block of memory.
pub trait Spanable {
    type Elem;

    fn contiguous(&self) -> &[Self::Elem];
    fn contiguous_mut(&mut self) -> &mut [Self::Elem];
}

impl<T> Spanable for [T] {
    type Elem = T;

    fn contiguous(&self) -> &[T] {
        self
    }

    fn contiguous_mut(&mut self) -> &mut [T] {
        self
    }
}

impl<T, const N: usize> Spanable for [T; N] {
    type Elem = T;

    fn contiguous(&self) -> &[T] {
        self
    }

    fn contiguous_mut(&mut self) -> &mut [T] {
        self
    }
}

impl<T> Spanable for Vec<T> {
    type Elem = T;

    fn contiguous(&self) -> &[T] {
        self
    }

    fn contiguous_mut(&mut self) -> &mut [T] {
        self
    }
}

impl<T> Spanable for Box<[T]> {
    type Elem = T;

    fn contiguous(&self) -> &[T] {
        self
    }

    fn contiguous_mut(&mut self) -> &mut [T] {
        self
    }
}

impl<T> Spanable for Span<'_, T> {
    type Elem = T;

    fn contiguous(&self) -> &[T] {
        self.data
    }

    fn contiguous_mut(&mut self) -> &mut [T] {
        self.data
    }
}

/// A non-owning view of `len` elements.
///
/// Every index is checked against the length. The only way to build a span
/// without a length derived from real storage is the `unsafe`
/// [`Span::from_raw_parts`].
pub struct Span<'a, T> {
    data: &'a mut [T],
}

fn checked_count<N: Num>(n: N) -> Result<u64, SpanError> {
    Ok(convert_to::<u64, N>(n)?)
}

impl<'a, T> Span<'a, T> {
    /// Spans the whole range `[0:size)`.
    pub fn new<R>(range: &'a mut R) -> Span<'a, T>
    where
        R: Spanable<Elem = T> + ?Sized,
    {
        Span {
            data: range.contiguous_mut(),
        }
    }

    /// Spans the first `count` elements, `[0:count)`.
    pub fn prefix<R, N>(range: &'a mut R, count: N) -> Result<Span<'a, T>, SpanError>
    where
        R: Spanable<Elem = T> + ?Sized,
        N: Num,
    {
        let count = checked_count(count)?;
        let data = range.contiguous_mut();
        if count > data.len() as u64 {
            return Err(RangeError {
                bound: count,
                len: data.len() as u64,
            }
            .into());
        }
        Ok(Span {
            data: &mut data[..count as usize],
        })
    }

    /// Spans `[low:high)`.
    pub fn subrange<R, L, H>(range: &'a mut R, low: L, high: H) -> Result<Span<'a, T>, SpanError>
    where
        R: Spanable<Elem = T> + ?Sized,
        L: Num,
        H: Num,
    {
        let low = checked_count(low)?;
        let high = checked_count(high)?;
        let data = range.contiguous_mut();
        let len = data.len() as u64;
        if high > len {
            return Err(RangeError { bound: high, len }.into());
        }
        if low > high {
            return Err(RangeError {
                bound: low,
                len: high,
            }
            .into());
        }
        Ok(Span {
            data: &mut data[low as usize..high as usize],
        })
    }

    /// Builds a span from a pointer and a count that cannot be checked.
    ///
    /// # Safety
    ///
    /// `ptr` must be valid for reads and writes of `count` consecutive `T`s
    /// for `'a`, and nothing else may access them while the span lives.
    pub unsafe fn from_raw_parts(ptr: *mut T, count: Number<u64>) -> Span<'a, T> {
        let len = usize::try_from(count.get()).expect("count exceeds address space");
        Span {
            data: slice::from_raw_parts_mut(ptr, len),
        }
    }

    #[inline]
    pub fn len(&self) -> u64 {
        self.data.len() as u64
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.data.is_empty()
    }

    /// Accepts `index` iff it addresses an element.
    #[inline]
    pub fn check(&self, index: u64) -> Result<u64, RangeError> {
        if index >= self.len() {
            return Err(RangeError {
                bound: index,
                len: self.len(),
            });
        }
        Ok(index)
    }

    #[inline]
    pub fn at<I: Num>(&self, index: I) -> Result<&T, SpanError> {
        let i = self.check(checked_count(index)?)?;
        Ok(&self.data[i as usize])
    }

    #[inline]
    pub fn at_mut<I: Num>(&mut self, index: I) -> Result<&mut T, SpanError> {
        let i = self.check(checked_count(index)?)?;
        Ok(&mut self.data[i as usize])
    }

    pub fn iter(&self) -> slice::Iter<'_, T> {
        self.data.iter()
    }

    pub fn iter_mut(&mut self) -> slice::IterMut<'_, T> {
        self.data.iter_mut()
    }

    pub fn as_slice(&self) -> &[T] {
        self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [T] {
        self.data
    }

    /// Reborrows the span for a shorter lifetime.
    pub fn reborrow(&mut self) -> Span<'_, T> {
        Span { data: self.data }
    }
}

impl<'a, T> IntoIterator for Span<'a, T> {
    type Item = &'a mut T;
    type IntoIter = slice::IterMut<'a, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.data.iter_mut()
    }
}

impl<'s, T> IntoIterator for &'s Span<'_, T> {
    type Item = &'s T;
    type IntoIter = slice::Iter<'s, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.data.iter()
    }
}

impl<'s, T> IntoIterator for &'s mut Span<'_, T> {
    type Item = &'s mut T;
    type IntoIter = slice::IterMut<'s, T>;

    fn into_iter(self) -> Self::IntoIter {
        self.data.iter_mut()
    }
}

impl<T: fmt::Debug> fmt::Debug for Span<'_, T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.data.iter()).finish()
    }
}
