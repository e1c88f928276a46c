//! Simple linear least squares with the logarithmic transforms every
//! power-law fit here is built on.
//!
//! All logarithms are base 10. The slope of a loglog fit and every
//! r-squared are base-invariant, so this is presentational only.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coordinate transform applied before a straight-line fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Transform {
    /// No transform.
    Linear,
    /// log10 on x only.
    SemilogX,
    /// log10 on y only.
    SemilogY,
    /// log10 on both coordinates.
    LogLog,
}

impl Transform {
    fn logs_x(self) -> bool {
        matches!(self, Transform::SemilogX | Transform::LogLog)
    }

    fn logs_y(self) -> bool {
        matches!(self, Transform::SemilogY | Transform::LogLog)
    }
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Transform::Linear => "linear",
            Transform::SemilogX => "semilog-x",
            Transform::SemilogY => "semilog-y",
            Transform::LogLog => "loglog",
        };
        f.write_str(name)
    }
}

/// A labelled sequence of (x, y) points, the carrier for everything that
/// gets plotted or fitted.
#[derive(Debug, Clone, PartialEq)]
pub struct PointSeries {
    points: Vec<(f64, f64)>,
    label: String,
}

impl PointSeries {
    pub fn new(label: impl Into<String>, points: Vec<(f64, f64)>) -> PointSeries {
        PointSeries { points, label: label.into() }
    }

    pub fn points(&self) -> &[(f64, f64)] {
        &self.points
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// One fitted straight line. `slope` and `intercept` live in the
/// transformed coordinates recorded by `transform`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitResult {
    pub slope: f64,
    pub intercept: f64,
    /// Squared Pearson correlation of the fitted points, in [0, 1].
    /// Constant-y series report 0 by convention.
    pub r_squared: f64,
    pub n_points: usize,
    pub transform: Transform,
}

impl FitResult {
    /// The fitted y for a given (transformed) x.
    pub fn predict(&self, x: f64) -> f64 {
        self.slope * x + self.intercept
    }
}

/// A series after [`log_transform`], remembering how many points the
/// zero-exclusion filter dropped.
#[derive(Debug, Clone, PartialEq)]
pub struct TransformedSeries {
    series: PointSeries,
    transform: Transform,
    dropped: usize,
}

impl TransformedSeries {
    pub fn series(&self) -> &PointSeries {
        &self.series
    }

    pub fn transform(&self) -> Transform {
        self.transform
    }

    /// Points dropped because a transformed coordinate was not positive.
    pub fn dropped(&self) -> usize {
        self.dropped
    }

    /// Straight-line fit of the transformed points, stamped with the
    /// transform that produced them.
    pub fn fit(&self) -> Result<FitResult> {
        let mut fit = linear_fit(&self.series)?;
        fit.transform = self.transform;
        Ok(fit)
    }
}

/// Ordinary least squares on the raw points.
///
/// slope = Cov(x,y)/Var(x), intercept = ȳ − slope·x̄, r² = squared Pearson
/// correlation. Zero variance in y is not an error: slope 0, r² 0.
pub fn linear_fit(series: &PointSeries) -> Result<FitResult> {
    let pts = series.points();
    let n = pts.len();
    if n < 2 {
        return Err(Error::DegenerateSeries { label: series.label().to_string() });
    }

    let nf = n as f64;
    let mean_x = pts.iter().map(|p| p.0).sum::<f64>() / nf;
    let mean_y = pts.iter().map(|p| p.1).sum::<f64>() / nf;

    let mut sxx = 0.0;
    let mut syy = 0.0;
    let mut sxy = 0.0;
    for &(x, y) in pts {
        let dx = x - mean_x;
        let dy = y - mean_y;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }

    if sxx == 0.0 {
        return Err(Error::DegenerateSeries { label: series.label().to_string() });
    }

    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    let r_squared = if syy == 0.0 { 0.0 } else { ((sxy * sxy) / (sxx * syy)).min(1.0) };

    Ok(FitResult { slope, intercept, r_squared, n_points: n, transform: Transform::Linear })
}

/// Applies base-10 logarithms per `transform`, dropping any point whose
/// transformed coordinate would need log of a non-positive value.
pub fn log_transform(series: &PointSeries, transform: Transform) -> Result<TransformedSeries> {
    let mut points = Vec::with_capacity(series.len());
    let mut dropped = 0usize;

    for &(x, y) in series.points() {
        if (transform.logs_x() && x <= 0.0) || (transform.logs_y() && y <= 0.0) {
            dropped += 1;
            continue;
        }
        let tx = if transform.logs_x() { x.log10() } else { x };
        let ty = if transform.logs_y() { y.log10() } else { y };
        points.push((tx, ty));
    }

    if points.is_empty() && !series.is_empty() {
        return Err(Error::AllPointsDropped { label: series.label().to_string(), transform });
    }

    Ok(TransformedSeries {
        series: PointSeries::new(series.label(), points),
        transform,
        dropped,
    })
}

/// Transform-then-fit in one step.
pub fn fit_transformed(series: &PointSeries, transform: Transform) -> Result<FitResult> {
    log_transform(series, transform)?.fit()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(points: &[(f64, f64)]) -> PointSeries {
        PointSeries::new("test", points.to_vec())
    }

    const TOL: f64 = 1e-12;

    #[test]
    fn exact_line() {
        let fit = linear_fit(&series(&[(0.0, 1.0), (1.0, 3.0), (2.0, 5.0)])).unwrap();
        assert!((fit.slope - 2.0).abs() < TOL);
        assert!((fit.intercept - 1.0).abs() < TOL);
        assert!((fit.r_squared - 1.0).abs() < TOL);
        assert_eq!(fit.n_points, 3);
        assert_eq!(fit.transform, Transform::Linear);
    }

    #[test]
    fn constant_y_convention() {
        let fit = linear_fit(&series(&[(1.0, 2.0), (2.0, 2.0), (3.0, 2.0)])).unwrap();
        assert_eq!(fit.slope, 0.0);
        assert_eq!(fit.r_squared, 0.0);
    }

    #[test]
    fn loglog_of_reciprocal_interval_frequencies() {
        // F = 50%, 33.33%, 16.67% at x = 1/i for i = 1, 2, 3.
        let s = series(&[(1.0, 50.0), (0.5, 100.0 / 3.0), (1.0 / 3.0, 50.0 / 3.0)]);
        let fit = fit_transformed(&s, Transform::LogLog).unwrap();
        assert!((fit.slope - 0.955_307_917_036_524_1).abs() < TOL, "slope {}", fit.slope);
        assert!((fit.intercept - 1.729_023_849_792_025_8).abs() < TOL);
        assert!((fit.r_squared - 0.912_613_216_352_662_8).abs() < TOL);
        assert_eq!(fit.transform, Transform::LogLog);
    }

    #[test]
    fn two_point_percentage_per_rank_slope() {
        // A two-letter table {A:1, B:3} restricted to its present letters at
        // ranks 1 and 2: F = 25% and 75%.
        let fit = linear_fit(&series(&[(1.0, 25.0), (2.0, 75.0)])).unwrap();
        assert!((fit.slope - 50.0).abs() < TOL);
    }

    #[test]
    fn degenerate_series_rejected() {
        assert!(matches!(
            linear_fit(&series(&[(1.0, 2.0)])),
            Err(Error::DegenerateSeries { .. })
        ));
        assert!(matches!(
            linear_fit(&series(&[(1.0, 2.0), (1.0, 5.0), (1.0, 9.0)])),
            Err(Error::DegenerateSeries { .. })
        ));
        assert!(matches!(linear_fit(&series(&[])), Err(Error::DegenerateSeries { .. })));
    }

    #[test]
    fn loglog_transform_examples() {
        let t = log_transform(&series(&[(1.0, 10.0), (10.0, 100.0)]), Transform::LogLog).unwrap();
        assert_eq!(t.series().points(), &[(0.0, 1.0), (1.0, 2.0)]);
        assert_eq!(t.dropped(), 0);
    }

    #[test]
    fn semilog_y_drops_zero_y() {
        let t = log_transform(&series(&[(1.0, 0.0), (2.0, 10.0)]), Transform::SemilogY).unwrap();
        assert_eq!(t.series().points(), &[(2.0, 1.0)]);
        assert_eq!(t.dropped(), 1);
    }

    #[test]
    fn all_points_dropped() {
        let r = log_transform(&series(&[(0.0, 0.0)]), Transform::LogLog);
        assert!(matches!(r, Err(Error::AllPointsDropped { .. })));
    }

    #[test]
    fn semilog_x_keeps_y_untouched() {
        let t = log_transform(&series(&[(10.0, -3.0), (100.0, 7.0)]), Transform::SemilogX).unwrap();
        assert_eq!(t.series().points(), &[(1.0, -3.0), (2.0, 7.0)]);
    }

    #[test]
    fn linear_mode_is_identity() {
        let s = series(&[(1.0, -2.0), (0.0, 4.0)]);
        let t = log_transform(&s, Transform::Linear).unwrap();
        assert_eq!(t.series().points(), s.points());
        assert_eq!(t.dropped(), 0);
    }

    #[test]
    fn r_squared_within_unit_interval() {
        let fit = linear_fit(&series(&[(0.0, 0.1), (1.0, 0.9), (2.0, 2.2), (3.0, 2.8)])).unwrap();
        assert!(fit.r_squared >= 0.0 && fit.r_squared <= 1.0);
    }

    #[test]
    fn residual_form_matches_pearson_form() {
        let s = series(&[(0.0, 1.3), (1.0, 2.1), (2.0, 4.9), (3.0, 6.2), (4.0, 9.5)]);
        let fit = linear_fit(&s).unwrap();
        let mean_y = s.points().iter().map(|p| p.1).sum::<f64>() / s.len() as f64;
        let ssr: f64 = s.points().iter().map(|&(x, y)| (y - fit.predict(x)).powi(2)).sum();
        let sst: f64 = s.points().iter().map(|&(_, y)| (y - mean_y).powi(2)).sum();
        assert!((fit.r_squared - (1.0 - ssr / sst)).abs() < 1e-12);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_series() -> impl Strategy<Value = PointSeries> {
            proptest::collection::vec((-50.0f64..50.0, -50.0f64..50.0), 3..12)
                .prop_filter("needs two distinct x", |pts| {
                    pts.iter().any(|p| (p.0 - pts[0].0).abs() > 1e-6)
                })
                .prop_map(|pts| PointSeries::new("prop", pts))
        }

        fn arb_positive_series() -> impl Strategy<Value = PointSeries> {
            proptest::collection::vec((0.1f64..50.0, 0.1f64..50.0), 3..12)
                .prop_filter("needs two distinct x", |pts| {
                    pts.iter().any(|p| (p.0 - pts[0].0).abs() > 1e-6)
                })
                .prop_map(|pts| PointSeries::new("prop", pts))
        }

        proptest! {
            // Reversing x by an affine map x -> a - x leaves r² unchanged
            // for linear and semilog-y fits.
            #[test]
            fn r_squared_invariant_under_x_reversal(s in arb_series(), a in -10.0f64..10.0) {
                let reversed = PointSeries::new(
                    "rev",
                    s.points().iter().map(|&(x, y)| (a - x, y)).collect(),
                );
                for mode in [Transform::Linear, Transform::SemilogY] {
                    let direct = fit_transformed(&s, mode);
                    let mirrored = fit_transformed(&reversed, mode);
                    if let (Ok(d), Ok(m)) = (direct, mirrored) {
                        prop_assert!((d.r_squared - m.r_squared).abs() < 1e-9,
                            "{mode}: {} vs {}", d.r_squared, m.r_squared);
                    }
                }
            }

            // Scaling all y by k > 0 leaves the loglog slope and every r² alone.
            #[test]
            fn y_scale_invariance(s in arb_positive_series(), k in 0.01f64..100.0) {
                let scaled = PointSeries::new(
                    "scaled",
                    s.points().iter().map(|&(x, y)| (x, k * y)).collect(),
                );
                let base = fit_transformed(&s, Transform::LogLog).unwrap();
                let big = fit_transformed(&scaled, Transform::LogLog).unwrap();
                prop_assert!((base.slope - big.slope).abs() < 1e-9);
                for mode in [Transform::Linear, Transform::SemilogX, Transform::SemilogY, Transform::LogLog] {
                    let a = fit_transformed(&s, mode).unwrap();
                    let b = fit_transformed(&scaled, mode).unwrap();
                    prop_assert!((a.r_squared - b.r_squared).abs() < 1e-9,
                        "{mode}: {} vs {}", a.r_squared, b.r_squared);
                }
            }

            // r² stays in the unit interval.
            #[test]
            fn r_squared_bounded(s in arb_series()) {
                if let Ok(fit) = linear_fit(&s) {
                    prop_assert!((0.0..=1.0).contains(&fit.r_squared));
                }
            }
        }
    }
}
