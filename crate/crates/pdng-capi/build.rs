use std::env;
use std::fs;
use std::path::PathBuf;

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");

    let crate_dir = PathBuf::from(env::var("CARGO_MANIFEST_DIR").expect("manifest dir"));
    let header = cbindgen::generate(&crate_dir).expect("cbindgen generates the header");

    let mut rendered = Vec::new();
    header.write(&mut rendered);

    // Keep the committed header current without dirtying mtimes on no-op
    // rebuilds.
    let include = crate_dir.join("include");
    fs::create_dir_all(&include).expect("create include dir");
    let path = include.join("pdng.h");
    if fs::read(&path).ok().as_deref() != Some(rendered.as_slice()) {
        fs::write(&path, &rendered).expect("write header");
    }
}
