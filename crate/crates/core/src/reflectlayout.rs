//! Member layout descriptors for records.
//!
//! A record opts in with `#[derive(Layout)]`, which requires `#[repr(C)]`
//! so that fields are laid out in declaration order. The descriptor list is
//! a constant computed at build time.
//!
//! ```
//! use typext::reflectlayout::{layout_of, Layout};
//!
//! #[derive(Layout)]
//! #[repr(C)]
//! struct Pixel {
//!     x: u16,
//!     y: u16,
//!     rgba: u32,
//! }
//!
//! let names: Vec<_> = layout_of::<Pixel>().iter().map(|m| m.name).collect();
//! assert_eq!(names, ["x", "y", "rgba"]);
//! assert_eq!(layout_of::<Pixel>()[2].offset, 4);
//! ```

use std::fmt;

pub use typext_derive::Layout;

/// Placement of one field inside a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MemberDescriptor {
    pub name: &'static str,
    /// Bytes from the start of the record.
    pub offset: usize,
    pub size: usize,
}

impl fmt::Display for MemberDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{\"{}\", {}, {}}}", self.name, self.offset, self.size)
    }
}

/// Implemented by `#[derive(Layout)]`.
pub trait Layout: Sized {
    const NAME: &'static str;
    /// One entry per field, in declaration order.
    const LAYOUT: &'static [MemberDescriptor];
}

pub fn layout_of<T: Layout>() -> &'static [MemberDescriptor] {
    T::LAYOUT
}

/// A record type available by name at run time.
#[derive(Debug, Clone, Copy)]
pub struct RegisteredRecord {
    pub name: &'static str,
    pub size: usize,
    pub layout: &'static [MemberDescriptor],
}

impl RegisteredRecord {
    pub const fn of<T: Layout>() -> RegisteredRecord {
        RegisteredRecord {
            name: T::NAME,
            size: std::mem::size_of::<T>(),
            layout: T::LAYOUT,
        }
    }
}

/// Example records used by the command-line tool and the tests.
pub mod records {
    use super::Layout;

    /// A char, an int and an owned string.
    #[derive(Layout, Default)]
    #[repr(C)]
    pub struct X {
        pub a: u8,
        pub b: i32,
        pub c: String,
    }

    #[derive(Layout, Default)]
    #[repr(C)]
    pub struct Empty {}

    #[derive(Layout, Default)]
    #[repr(C)]
    pub struct Single {
        pub value: u64,
    }

    #[derive(Layout, Default)]
    #[repr(C)]
    pub struct Padded {
        pub flag: bool,
        pub wide: f64,
        pub small: u16,
        pub tail: u8,
    }

    #[derive(Layout, Default)]
    #[repr(C)]
    pub struct PacketHeader {
        pub version: u8,
        pub kind: u8,
        pub length: u16,
        pub sequence: u32,
        pub timestamp: i64,
        pub payload: Vec<u8>,
    }

    #[derive(Layout, Default)]
    #[repr(C)]
    pub struct Pair(pub u8, pub u64);

    #[derive(Layout, Default)]
    #[repr(C)]
    pub struct Nested {
        pub header: Single,
        pub coords: [f32; 3],
        pub label: Option<Box<str>>,
    }
}

pub const REGISTERED: &[RegisteredRecord] = &[
    RegisteredRecord::of::<records::X>(),
    RegisteredRecord::of::<records::Empty>(),
    RegisteredRecord::of::<records::Single>(),
    RegisteredRecord::of::<records::Padded>(),
    RegisteredRecord::of::<records::PacketHeader>(),
    RegisteredRecord::of::<records::Pair>(),
    RegisteredRecord::of::<records::Nested>(),
];

pub fn find_registered(name: &str) -> Option<&'static RegisteredRecord> {
    REGISTERED.iter().find(|r| r.name == name)
}
