//! Manuscript acquisition, normalization and letter tallying.

use std::fs;
use std::path::Path;

use unicode_normalization::UnicodeNormalization;

use crate::error::{Error, Result};
use crate::letter::{Letter, ALPHABET_LEN};

mod remote;

pub use remote::{fetch_remote, ArchiveClient, CACHE_ENV_VAR, DEFAULT_URL_TEMPLATE};

/// Where a document's text came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    LocalFile,
    RemoteArchive,
    Inline,
}

/// A manuscript as acquired, before normalization.
#[derive(Debug, Clone)]
pub struct RawDocument {
    pub id: String,
    pub title: String,
    pub body: String,
    pub source: Source,
}

impl RawDocument {
    pub fn inline(id: impl Into<String>, body: impl Into<String>) -> RawDocument {
        let id = id.into();
        RawDocument { title: id.clone(), id, body: body.into(), source: Source::Inline }
    }

    pub fn from_file(path: &Path) -> Result<RawDocument> {
        let body = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let id = path.display().to_string();
        let title = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| id.clone());
        Ok(RawDocument { id, title, body, source: Source::LocalFile })
    }
}

/// How raw text is folded before filtering. The accept set is always the
/// 26 basic Latin letters; this only controls what gets a chance to land
/// in it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseFolding {
    ToUpper,
}

/// Normalization rules: case-fold, optionally strip diacritics down to
/// base letters, keep A-Z, discard everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalizationPolicy {
    pub case_folding: CaseFolding,
    /// When true, `é` and friends fold to their base letter instead of
    /// being discarded.
    pub fold_diacritics: bool,
}

impl Default for NormalizationPolicy {
    fn default() -> Self {
        NormalizationPolicy { case_folding: CaseFolding::ToUpper, fold_diacritics: false }
    }
}

/// Reduces text to its ordered stream of A-Z letters. Order is preserved;
/// everything outside the accept set after folding is dropped. An empty
/// result is legal here and rejected downstream by [`tally`].
pub fn normalize(text: &str, policy: &NormalizationPolicy) -> Vec<Letter> {
    let CaseFolding::ToUpper = policy.case_folding;
    if policy.fold_diacritics {
        // NFD splits accented letters into base letter + combining marks;
        // the marks fail `from_char` and fall away.
        text.nfd().filter_map(Letter::from_char).collect()
    } else {
        text.chars().filter_map(Letter::from_char).collect()
    }
}

/// Renders a letter stream back to text, the inverse of [`normalize`] on
/// its own output.
pub fn letters_to_string(letters: &[Letter]) -> String {
    letters.iter().map(|l| l.as_char()).collect()
}

/// Occurrence counts of the 26 letters in one manuscript.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LetterTally {
    counts: [u64; ALPHABET_LEN],
    total: u64,
}

impl LetterTally {
    /// Builds a tally from explicit per-letter counts (alphabetical order).
    pub fn from_counts(counts: [u64; ALPHABET_LEN]) -> LetterTally {
        let total = counts.iter().sum();
        LetterTally { counts, total }
    }

    pub fn count(&self, letter: Letter) -> u64 {
        self.counts[letter.index()]
    }

    pub fn counts(&self) -> &[u64; ALPHABET_LEN] {
        &self.counts
    }

    /// Total letters; always the sum of the 26 counts.
    pub fn total(&self) -> u64 {
        self.total
    }
}

/// Counts each letter of a normalized stream. Errors with [`Error::EmptyText`]
/// when there is nothing to count.
pub fn tally(letters: &[Letter]) -> Result<LetterTally> {
    if letters.is_empty() {
        return Err(Error::EmptyText);
    }
    let mut counts = [0u64; ALPHABET_LEN];
    for &l in letters {
        counts[l.index()] += 1;
    }
    Ok(LetterTally { counts, total: letters.len() as u64 })
}

const START_MARKER: &str = "*** START OF";
const END_MARKER: &str = "*** END OF";

/// Cuts a document down to the content between the archive's
/// `*** START OF …` / `*** END OF …` marker lines. Documents without
/// markers pass through unchanged; a lone or reversed marker pair is
/// rejected as malformed.
pub fn strip_boilerplate(raw: &RawDocument) -> Result<RawDocument> {
    let lines: Vec<&str> = raw.body.lines().collect();
    let start = lines.iter().position(|l| l.trim_start().starts_with(START_MARKER));
    let end = lines.iter().position(|l| l.trim_start().starts_with(END_MARKER));

    let body = match (start, end) {
        (None, None) => return Ok(raw.clone()),
        (Some(s), Some(e)) if s < e => lines[s + 1..e].join("\n"),
        (Some(_), Some(_)) => {
            return Err(Error::MalformedMarkers {
                reason: "end marker appears before start marker".into(),
            })
        }
        (Some(_), None) => {
            return Err(Error::MalformedMarkers {
                reason: "start marker without end marker".into(),
            })
        }
        (None, Some(_)) => {
            return Err(Error::MalformedMarkers {
                reason: "end marker without start marker".into(),
            })
        }
    };

    Ok(RawDocument { body, ..raw.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn policy() -> NormalizationPolicy {
        NormalizationPolicy::default()
    }

    #[test]
    fn normalize_strips_punctuation_and_case() {
        let letters = normalize("Hello, World!", &policy());
        assert_eq!(letters_to_string(&letters), "HELLOWORLD");
        assert_eq!(letters.len(), 10);
    }

    #[test]
    fn normalize_drops_digits_dashes_newlines() {
        let letters = normalize("a—b\nC3", &policy());
        assert_eq!(letters_to_string(&letters), "ABC");
    }

    #[test]
    fn normalize_empty_is_empty() {
        assert!(normalize("", &policy()).is_empty());
    }

    #[test]
    fn normalize_is_idempotent_on_rendered_output() {
        let text = "Mixed 123 ünïcode — and ASCII.";
        let once = normalize(text, &policy());
        let twice = normalize(&letters_to_string(&once), &policy());
        assert_eq!(once, twice);
    }

    #[test]
    fn diacritics_dropped_by_default_folded_on_request() {
        assert_eq!(letters_to_string(&normalize("café", &policy())), "CAF");
        let folding = NormalizationPolicy { fold_diacritics: true, ..policy() };
        assert_eq!(letters_to_string(&normalize("café", &folding)), "CAFE");
        assert_eq!(letters_to_string(&normalize("À la fête", &folding)), "ALAFETE");
    }

    #[test]
    fn tally_counts_hello() {
        let t = tally(&normalize("Hello", &policy())).unwrap();
        assert_eq!(t.total(), 5);
        assert_eq!(t.count(Letter::from_char('L').unwrap()), 2);
        assert_eq!(t.count(Letter::from_char('E').unwrap()), 1);
        assert_eq!(t.count(Letter::from_char('H').unwrap()), 1);
        assert_eq!(t.count(Letter::from_char('O').unwrap()), 1);
        assert_eq!(t.count(Letter::from_char('Q').unwrap()), 0);
    }

    #[test]
    fn tally_rejects_empty_stream() {
        assert!(matches!(tally(&[]), Err(Error::EmptyText)));
    }

    #[test]
    fn tally_total_equals_sum_of_counts() {
        let t = tally(&normalize("The quick brown fox jumps over the lazy dog", &policy())).unwrap();
        assert_eq!(t.total(), t.counts().iter().sum::<u64>());
    }

    #[test]
    fn strip_extracts_between_markers() {
        let doc = RawDocument::inline(
            "x",
            "header junk\n*** START OF THE ARCHIVE EBOOK X ***\nbody line 1\nbody line 2\n*** END OF THE ARCHIVE EBOOK X ***\nfooter junk",
        );
        let stripped = strip_boilerplate(&doc).unwrap();
        assert_eq!(stripped.body, "body line 1\nbody line 2");
        assert_eq!(stripped.id, "x");
    }

    #[test]
    fn strip_without_markers_is_identity() {
        let doc = RawDocument::inline("x", "just a play\nwith two lines");
        let stripped = strip_boilerplate(&doc).unwrap();
        assert_eq!(stripped.body, doc.body);
    }

    #[test]
    fn strip_rejects_reversed_markers() {
        let doc = RawDocument::inline("x", "*** END OF X ***\nbody\n*** START OF X ***");
        assert!(matches!(strip_boilerplate(&doc), Err(Error::MalformedMarkers { .. })));
    }

    #[test]
    fn strip_rejects_lone_markers() {
        let start_only = RawDocument::inline("x", "*** START OF X ***\nbody");
        assert!(matches!(strip_boilerplate(&start_only), Err(Error::MalformedMarkers { .. })));
        let end_only = RawDocument::inline("x", "body\n*** END OF X ***");
        assert!(matches!(strip_boilerplate(&end_only), Err(Error::MalformedMarkers { .. })));
    }
}
