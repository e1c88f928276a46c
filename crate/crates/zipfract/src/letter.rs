//! The 26-letter analysis alphabet.

use std::fmt;

/// One of the 26 basic Latin letters, the only symbols that survive
/// normalization. Internally an index 0..=25 for `A`..=`Z`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(u8);

/// Alphabet size.
pub const ALPHABET_LEN: usize = 26;

impl Letter {
    /// All 26 letters in alphabetical order.
    pub const ALL: [Letter; ALPHABET_LEN] = {
        let mut all = [Letter(0); ALPHABET_LEN];
        let mut i = 0;
        while i < ALPHABET_LEN {
            all[i] = Letter(i as u8);
            i += 1;
        }
        all
    };

    /// Maps an ASCII letter (either case) to its `Letter`; anything else is `None`.
    pub fn from_char(c: char) -> Option<Letter> {
        if c.is_ascii_alphabetic() {
            Some(Letter(c.to_ascii_uppercase() as u8 - b'A'))
        } else {
            None
        }
    }

    pub fn from_index(index: usize) -> Option<Letter> {
        if index < ALPHABET_LEN {
            Some(Letter(index as u8))
        } else {
            None
        }
    }

    /// Zero-based position in the alphabet: A = 0, Z = 25.
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// The alphabetical interval `i`: the letter's rank measured from a
    /// notional base letter at interval 0, so A = 1 and Z = 26.
    pub fn interval(self) -> usize {
        self.0 as usize + 1
    }

    pub fn as_char(self) -> char {
        (b'A' + self.0) as char
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Letter({})", self.as_char())
    }
}
