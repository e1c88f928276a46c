//! Frequency tables, fractal dimension and fractality degree, Zipf order,
//! Zipf slope and Zipf dimension, and the three-way direct-fit comparison.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::corpus::LetterTally;
use crate::error::{Error, Result};
use crate::letter::{Letter, ALPHABET_LEN};
use crate::regression::{fit_transformed, linear_fit, FitResult, PointSeries, Transform};

/// One letter's row: alphabetical interval `i`, raw count and percentage
/// incidence `F`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrequencyRow {
    pub letter: Letter,
    /// Alphabetical interval, A = 1 .. Z = 26. The notional base letter at
    /// interval 0 has incidence 0 and carries no row.
    pub interval: usize,
    pub count: u64,
    /// F = 100 * count / total.
    pub incidence_percent: f64,
}

/// Per-letter percentage incidence for one manuscript, rows in
/// alphabetical order.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyTable {
    rows: [FrequencyRow; ALPHABET_LEN],
    total: u64,
}

impl FrequencyTable {
    pub fn rows(&self) -> &[FrequencyRow] {
        &self.rows
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn count(&self, letter: Letter) -> u64 {
        self.rows[letter.index()].count
    }

    pub fn incidence_percent(&self, letter: Letter) -> f64 {
        self.rows[letter.index()].incidence_percent
    }
}

/// Percentage incidence per letter. Errors with [`Error::EmptyText`] on an
/// all-zero tally.
pub fn frequency_table(tally: &LetterTally) -> Result<FrequencyTable> {
    let total = tally.total();
    if total == 0 {
        return Err(Error::EmptyText);
    }
    let rows = Letter::ALL.map(|letter| {
        let count = tally.count(letter);
        FrequencyRow {
            letter,
            interval: letter.interval(),
            count,
            incidence_percent: 100.0 * count as f64 / total as f64,
        }
    });
    Ok(FrequencyTable { rows, total })
}

/// The 26 letters arranged by frequency of occurrence: the Zipf order.
/// Ascending (rarest first), ties broken alphabetically, so the
/// arrangement is a deterministic permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZipfOrdering {
    ascending: [Letter; ALPHABET_LEN],
    rank_of: [usize; ALPHABET_LEN],
}

impl ZipfOrdering {
    /// Letters from rarest to most frequent.
    pub fn ascending(&self) -> &[Letter; ALPHABET_LEN] {
        &self.ascending
    }

    /// 1-based rank in the ascending arrangement (rarest letter = 1).
    pub fn rank_of(&self, letter: Letter) -> usize {
        self.rank_of[letter.index()]
    }

    /// The order as a compact string like "JZXQ…OTE".
    pub fn as_string(&self) -> String {
        self.ascending.iter().map(|l| l.as_char()).collect()
    }
}

/// Arranges the table's letters in Zipf order.
pub fn zipf_order(freq: &FrequencyTable) -> ZipfOrdering {
    let mut ascending = Letter::ALL;
    ascending.sort_by_key(|&l| (freq.count(l), l));
    let mut rank_of = [0usize; ALPHABET_LEN];
    for (pos, &l) in ascending.iter().enumerate() {
        rank_of[l.index()] = pos + 1;
    }
    ZipfOrdering { ascending, rank_of }
}

/// Which end of the Zipf order counts as rank 1 in the power-law fits.
///
/// The default reproduces the reference Hamlet numbers; the alternative
/// exists as an expert override and is recorded in every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RankConvention {
    /// Rank 1 is the rarest letter (the ascending arrangement itself).
    #[default]
    RarestFirst,
    /// Rank 1 is the most frequent letter.
    MostFrequentFirst,
}

impl RankConvention {
    /// This letter's 1-based Zipf rank under the convention.
    pub fn rank(self, order: &ZipfOrdering, letter: Letter) -> usize {
        match self {
            RankConvention::RarestFirst => order.rank_of(letter),
            RankConvention::MostFrequentFirst => ALPHABET_LEN + 1 - order.rank_of(letter),
        }
    }
}

impl fmt::Display for RankConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RankConvention::RarestFirst => "rarest-first",
            RankConvention::MostFrequentFirst => "most-frequent-first",
        };
        f.write_str(name)
    }
}

impl FromStr for RankConvention {
    type Err = Error;

    fn from_str(s: &str) -> Result<RankConvention> {
        match s {
            "rarest-first" => Ok(RankConvention::RarestFirst),
            "most-frequent-first" => Ok(RankConvention::MostFrequentFirst),
            other => Err(Error::Config(format!(
                "unknown rank convention {other:?} (expected rarest-first or most-frequent-first)"
            ))),
        }
    }
}

/// Fractal dimension of the manuscript: slope of log F against log(1/i)
/// with i the alphabetical interval, zero-count letters excluded. The
/// fit's r-squared is the degree of fractality.
pub fn fractal_dimension(freq: &FrequencyTable) -> Result<FitResult> {
    let points = freq
        .rows()
        .iter()
        .map(|row| (1.0 / row.interval as f64, row.incidence_percent))
        .collect();
    fit_transformed(&PointSeries::new("fractal dimension (F vs 1/i)", points), Transform::LogLog)
}

/// Slope of the purely linear plot of F against ascending Zipf rank,
/// all 26 letters included.
pub fn zipf_slope(freq: &FrequencyTable, order: &ZipfOrdering) -> Result<FitResult> {
    let points = order
        .ascending()
        .iter()
        .enumerate()
        .map(|(pos, &l)| ((pos + 1) as f64, freq.incidence_percent(l)))
        .collect();
    linear_fit(&PointSeries::new("zipf slope (F vs rank)", points))
}

/// Zipf dimension: the exponent of the rank/frequency power law, from the
/// log-log fit of F against Zipf rank `n`, zero-count letters excluded.
///
/// Under the default rarest-first convention the fit runs against log n;
/// under most-frequent-first it runs against log(1/n). Both orientations
/// make the exponent positive for Zipf-like tables and share their
/// r-squared with the loglog direct fit.
pub fn zipf_dimension(
    freq: &FrequencyTable,
    order: &ZipfOrdering,
    convention: RankConvention,
) -> Result<FitResult> {
    let points = Letter::ALL
        .iter()
        .map(|&l| {
            let n = convention.rank(order, l) as f64;
            let x = match convention {
                RankConvention::RarestFirst => n,
                RankConvention::MostFrequentFirst => 1.0 / n,
            };
            (x, freq.incidence_percent(l))
        })
        .collect();
    fit_transformed(&PointSeries::new("zipf dimension (F vs rank)", points), Transform::LogLog)
}

/// The three direct fits of F against Zipf rank: semilog-x, semilog-y and
/// loglog, in that order. Zero-count letters drop out of any
/// log-transformed coordinate.
pub fn direct_fits(
    freq: &FrequencyTable,
    order: &ZipfOrdering,
    convention: RankConvention,
) -> Result<[FitResult; 3]> {
    let points: Vec<(f64, f64)> = Letter::ALL
        .iter()
        .map(|&l| (convention.rank(order, l) as f64, freq.incidence_percent(l)))
        .collect();
    let series = PointSeries::new("direct fits (F vs rank)", points);
    Ok([
        fit_transformed(&series, Transform::SemilogX)?,
        fit_transformed(&series, Transform::SemilogY)?,
        fit_transformed(&series, Transform::LogLog)?,
    ])
}

/// Everything the analyses produce for one manuscript.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub manuscript_id: String,
    pub total_letters: u64,
    /// D_f: exponent of the F = c / i^D power law over alphabetical intervals.
    pub fractal_dimension: f64,
    /// ζ: the r-squared of the fractal fit, read as how strongly the
    /// manuscript follows the power-law pattern.
    pub fractality: f64,
    pub zipf_slope: f64,
    pub zipf_slope_r2: f64,
    /// D_Z: exponent of the Zipf rank/frequency power law.
    pub zipf_dimension: f64,
    pub zipf_dimension_r2: f64,
    /// r-squared of the semilog-x, semilog-y and loglog direct fits.
    pub direct_fit_r2: [f64; 3],
    pub rank_convention: RankConvention,
}

/// Runs every analysis for one tally under the default rank convention.
pub fn analyze(tally: &LetterTally, manuscript_id: &str) -> Result<DimensionReport> {
    analyze_with(tally, manuscript_id, RankConvention::default())
}

/// Runs every analysis for one tally under an explicit rank convention.
pub fn analyze_with(
    tally: &LetterTally,
    manuscript_id: &str,
    convention: RankConvention,
) -> Result<DimensionReport> {
    let freq = frequency_table(tally)?;
    let order = zipf_order(&freq);
    let fractal = fractal_dimension(&freq)?;
    let slope = zipf_slope(&freq, &order)?;
    let zipf_dim = zipf_dimension(&freq, &order, convention)?;
    let direct = direct_fits(&freq, &order, convention)?;

    Ok(DimensionReport {
        manuscript_id: manuscript_id.to_string(),
        total_letters: tally.total(),
        fractal_dimension: fractal.slope,
        fractality: fractal.r_squared,
        zipf_slope: slope.slope,
        zipf_slope_r2: slope.r_squared,
        zipf_dimension: zipf_dim.slope,
        zipf_dimension_r2: zipf_dim.r_squared,
        direct_fit_r2: [direct[0].r_squared, direct[1].r_squared, direct[2].r_squared],
        rank_convention: convention,
    })
}
