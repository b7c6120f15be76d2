//! The chapters of the guide in `book/src` and the repository README,
//! attached as module docs so that every `rust` listing in them runs as a
//! doc-test.
//!
//! Command-line transcripts (`console` blocks) are replayed by
//! `tests/transcripts.rs`.

macro_rules! chapters {
    ($($module:ident => $file:literal),* $(,)?) => {
        $(
            #[doc = include_str!(concat!("../../../book/src/", $file))]
            pub mod $module {}
        )*

        /// Chapter files in the order they are included above.
        pub const CHAPTERS: &[&str] = &[$($file),*];
    };
}

chapters! {
    introduction => "introduction.md",
    matrices => "matrices.md",
    newton => "newton.md",
    witt => "witt.md",
    congruences => "congruences.md",
    matrix_congruences => "matrix-congruences.md",
    characters => "characters.md",
    cli => "cli.md",
}

#[doc = include_str!("../../../README.md")]
pub mod readme {}
