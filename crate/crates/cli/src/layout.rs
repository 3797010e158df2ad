use std::fmt::Write;

use typext::reflectlayout::{find_registered, REGISTERED};

/// Size line followed by one descriptor per line, or `None` for an
/// unregistered name.
pub fn render(name: &str) -> Option<String> {
    let rec = find_registered(name)?;
    let mut out = format!("{} size={}\n", rec.name, rec.size);
    for d in rec.layout {
        writeln!(out, "{d}").unwrap();
    }
    Some(out)
}

pub fn registered_names() -> Vec<&'static str> {
    REGISTERED.iter().map(|r| r.name).collect()
}
