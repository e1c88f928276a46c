//! Embedded reference manuscripts, addressable as `fixture:<name>` inputs.
//!
//! The bundled Hamlet tally pins every downstream number to a fixed
//! 135,003-letter edition, so analyses stay reproducible offline and
//! independent of whichever edition a live fetch would return.

use crate::corpus::LetterTally;
use crate::letter::ALPHABET_LEN;

/// Letter counts (A..Z) of the reference Hamlet edition, 135,003 letters.
pub const HAMLET_COUNTS: [u64; ALPHABET_LEN] = [
    10_251, // A
    1_816,  // B
    2_840,  // C
    5_375,  // D
    15_845, // E
    2_712,  // F
    2_493,  // G
    8_639,  // H
    8_905,  // I
    110,    // J
    1_257,  // K
    6_489,  // L
    4_239,  // M
    8_578,  // N
    11_450, // O
    2_006,  // P
    218,    // Q
    8_100,  // R
    8_668,  // S
    12_450, // T
    4_738,  // U
    1_219,  // V
    3_110,  // W
    177,    // X
    3_198,  // Y
    120,    // Z
];

/// The reference Hamlet tally.
pub fn hamlet() -> LetterTally {
    LetterTally::from_counts(HAMLET_COUNTS)
}

/// Names accepted by the `fixture:` input scheme.
pub fn names() -> &'static [&'static str] {
    &["hamlet"]
}

/// Looks a fixture up by name (case-insensitive).
pub fn by_name(name: &str) -> Option<LetterTally> {
    match name.to_ascii_lowercase().as_str() {
        "hamlet" => Some(hamlet()),
        _ => None,
    }
}
