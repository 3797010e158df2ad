//! Constraint-dispatched range algorithms.
//!
//! Two constraint levels describe sortable ranges. [`ForwardSortableRange`]
//! only needs in-order mutable traversal. [`SortableRange`] refines it with
//! random access to the elements as one slice. When a range satisfies both,
//! [`sort_dispatch!`](crate::sort_dispatch) picks the stricter one at
//! compile time; a range satisfying neither does not compile.
//!
//! ```
//! use std::collections::LinkedList;
//! use typext::rangealg::SortPath;
//! use typext::sort_dispatch;
//!
//! let mut vec = vec![1.0, -2.0, 2.0, 3.0];
//! assert_eq!(sort_dispatch!(vec).path, SortPath::RandomAccess);
//! assert_eq!(vec, [-2.0, 1.0, 2.0, 3.0]);
//!
//! let mut lst: LinkedList<&str> = ["d", "q", "a"].into_iter().collect();
//! assert_eq!(sort_dispatch!(lst, |a, b| a > b).path, SortPath::ForwardCopy);
//! assert!(lst.iter().eq(["q", "d", "a"].iter()));
//! ```

mod buffer;
mod draw;

use std::cell::Cell;
use std::cmp::Ordering;
use std::collections::{LinkedList, VecDeque};

pub use buffer::{buffer_space, buffer_space_violation, is_power_of_two, Buffer};
pub use draw::{draw_all, Drawable};

use crate::span::Span;

/// A range whose elements can be visited in order and assigned to.
pub trait ForwardSortableRange {
    type Item;

    fn traverse_mut(&mut self) -> impl Iterator<Item = &mut Self::Item>;
}

/// A forward range that also offers random access to its elements.
pub trait SortableRange: ForwardSortableRange {
    fn as_mut_slice(&mut self) -> &mut [Self::Item];
}

macro_rules! contiguous_ranges {
    ($([$($gen:tt)*] $ty:ty),* $(,)?) => {$(
        impl<$($gen)*> ForwardSortableRange for $ty {
            type Item = T;

            fn traverse_mut(&mut self) -> impl Iterator<Item = &mut T> {
                self.iter_mut()
            }
        }

        impl<$($gen)*> SortableRange for $ty {
            fn as_mut_slice(&mut self) -> &mut [T] {
                self
            }
        }
    )*};
}

contiguous_ranges!(
    [T] [T],
    [T] Vec<T>,
    [T] Box<[T]>,
    [T, const N: usize] [T; N],
);

impl<T> ForwardSortableRange for Span<'_, T> {
    type Item = T;

    fn traverse_mut(&mut self) -> impl Iterator<Item = &mut T> {
        self.iter_mut()
    }
}

impl<T> SortableRange for Span<'_, T> {
    fn as_mut_slice(&mut self) -> &mut [T] {
        Span::as_mut_slice(self)
    }
}

impl<T> ForwardSortableRange for VecDeque<T> {
    type Item = T;

    fn traverse_mut(&mut self) -> impl Iterator<Item = &mut T> {
        self.iter_mut()
    }
}

impl<T> SortableRange for VecDeque<T> {
    fn as_mut_slice(&mut self) -> &mut [T] {
        self.make_contiguous()
    }
}

impl<T> ForwardSortableRange for LinkedList<T> {
    type Item = T;

    fn traverse_mut(&mut self) -> impl Iterator<Item = &mut T> {
        self.iter_mut()
    }
}

fn ordering_from<T, P>(pred: &mut P) -> impl FnMut(&T, &T) -> Ordering + '_
where
    P: FnMut(&T, &T) -> bool,
{
    move |a, b| {
        if pred(a, b) {
            Ordering::Less
        } else if pred(b, a) {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    }
}

/// Sorts a random-access range ascending. Not stable.
pub fn sort<R>(range: &mut R)
where
    R: SortableRange + ?Sized,
    R::Item: PartialOrd,
{
    sort_by(range, |a, b| a < b);
}

/// Sorts a random-access range under `pred`, a strict weak ordering.
pub fn sort_by<R, P>(range: &mut R, mut pred: P)
where
    R: SortableRange + ?Sized,
    P: FnMut(&R::Item, &R::Item) -> bool,
{
    range
        .as_mut_slice()
        .sort_unstable_by(ordering_from(&mut pred));
}

/// Sorts a forward-only range by copying its elements into a vector,
/// sorting that, and writing them back in traversal order.
pub fn sort_forward_by<R, P>(range: &mut R, mut pred: P)
where
    R: ForwardSortableRange + ?Sized,
    R::Item: Clone,
    P: FnMut(&R::Item, &R::Item) -> bool,
{
    let mut scratch: Vec<R::Item> = range.traverse_mut().map(|x| x.clone()).collect();
    sort_by(&mut scratch, &mut pred);
    for (slot, value) in range.traverse_mut().zip(scratch) {
        *slot = value;
    }
}

pub fn sort_forward<R>(range: &mut R)
where
    R: ForwardSortableRange + ?Sized,
    R::Item: Clone + PartialOrd,
{
    sort_forward_by(range, |a, b| a < b);
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SortPath {
    RandomAccess,
    ForwardCopy,
}

/// Which sort ran, for observing the compile-time dispatch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SortDispatchReport {
    pub path: SortPath,
    pub element_count: usize,
}

/// Receiver for [`sort_dispatch!`](crate::sort_dispatch).
///
/// Method lookup tries [`ViaRandomAccess`] on the wrapper itself before
/// [`ViaForward`] on a reference to it, so the random-access sort wins
/// whenever its bound holds. The selection is made during type checking.
pub struct SortDispatch<'r, R: ?Sized> {
    range: Cell<Option<&'r mut R>>,
}

impl<'r, R: ?Sized> SortDispatch<'r, R> {
    pub fn new(range: &'r mut R) -> SortDispatch<'r, R> {
        SortDispatch {
            range: Cell::new(Some(range)),
        }
    }

    fn take(&self) -> &'r mut R {
        self.range.take().expect("SortDispatch consumed twice")
    }
}

pub trait ViaRandomAccess {
    type Item;

    fn sort_via<P>(&self, pred: P) -> SortDispatchReport
    where
        P: FnMut(&Self::Item, &Self::Item) -> bool;
}

pub trait ViaForward {
    type Item;

    fn sort_via<P>(&self, pred: P) -> SortDispatchReport
    where
        P: FnMut(&Self::Item, &Self::Item) -> bool;
}

impl<R: SortableRange + ?Sized> ViaRandomAccess for SortDispatch<'_, R> {
    type Item = R::Item;

    fn sort_via<P>(&self, pred: P) -> SortDispatchReport
    where
        P: FnMut(&R::Item, &R::Item) -> bool,
    {
        let range = self.take();
        sort_by(range, pred);
        SortDispatchReport {
            path: SortPath::RandomAccess,
            element_count: range.as_mut_slice().len(),
        }
    }
}

impl<R> ViaForward for &SortDispatch<'_, R>
where
    R: ForwardSortableRange + ?Sized,
    R::Item: Clone,
{
    type Item = R::Item;

    fn sort_via<P>(&self, pred: P) -> SortDispatchReport
    where
        P: FnMut(&R::Item, &R::Item) -> bool,
    {
        let range = self.take();
        sort_forward_by(range, pred);
        SortDispatchReport {
            path: SortPath::ForwardCopy,
            element_count: range.traverse_mut().count(),
        }
    }
}

/// Sorts a range with the most specific algorithm its type allows and
/// returns a [`SortDispatchReport`]. The predicate defaults to `<`.
#[macro_export]
macro_rules! sort_dispatch {
    ($range:expr) => {
        $crate::sort_dispatch!($range, |a, b| a < b)
    };
    ($range:expr, $pred:expr) => {{
        #[allow(unused_imports)]
        use $crate::rangealg::{ViaForward as _, ViaRandomAccess as _};
        (&$crate::rangealg::SortDispatch::new(&mut $range)).sort_via($pred)
    }};
}
