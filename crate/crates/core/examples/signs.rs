//! Print the derived sign table as CSV.
use g2clasp::conjecture::{cases, derive_sign};

fn main() -> Result<(), g2clasp::Error> {
    println!("fund,m,n,word,sign");
    for c in cases() {
        println!("{},{},{},{},{}", c.fund, c.mu.a, c.mu.b, c.word, derive_sign(&c)?);
    }
    Ok(())
}
