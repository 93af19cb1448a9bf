//! Reads an algebra from its TOML description, shows a positioned parse
//! error, and writes the algebra back out.

use leibniz::format::{emit_algebra, parse_algebra};

const TEXT: &str = r#"
name = "two-dimensional non-Lie"
dim = 2
labels = ["a", "b"]

[[brackets]]
i = 2
j = 2
terms = [{ k = 1, coeff = "1" }]
"#;

fn main() {
    let l = parse_algebra(TEXT).expect("valid file");
    println!("parsed: dim {}, Lie: {}, Leib(L) dim {}", l.dim(), l.is_lie(), l.leibniz_kernel().dim());

    let bad = TEXT.replace("k = 1", "k = 3");
    match parse_algebra(&bad) {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }

    let text = emit_algebra(l.tensor());
    print!("\nemitted:\n{text}");
    assert_eq!(parse_algebra(&text).expect("round trip"), l);
}
