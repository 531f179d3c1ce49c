use serde::Serialize;

/// Default relative tolerance for grouping nearby eigenvalues into one
/// multiplicity class.
pub const DEFAULT_GROUPING_TOL: f64 = 1e-6;

/// A sorted real eigenvalue multiset.
///
/// Values are kept ascending; multiplicity queries group values within
/// `tau * max(1, |lambda|)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct Spectrum {
    values: Vec<f64>,
    #[serde(skip)]
    tau: f64,
}

impl Spectrum {
    /// Sorts the given eigenvalues ascending. All values must be finite.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        assert!(
            values.iter().all(|v| v.is_finite()),
            "spectrum values must be finite"
        );
        values.sort_by(|a, b| a.partial_cmp(b).expect("finite values compare"));
        Spectrum {
            values,
            tau: DEFAULT_GROUPING_TOL,
        }
    }

    pub fn with_grouping_tolerance(mut self, tau: f64) -> Self {
        self.tau = tau;
        self
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn min(&self) -> Option<f64> {
        self.values.first().copied()
    }

    pub fn max(&self) -> Option<f64> {
        self.values.last().copied()
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |acc, v| acc.max(v.abs()))
    }

    pub fn sum(&self) -> f64 {
        self.values.iter().sum()
    }

    /// Number of eigenvalues within `tau * max(1, |x|)` of `x`.
    pub fn multiplicity_of(&self, x: f64) -> usize {
        let tol = self.tau * x.abs().max(1.0);
        self.values.iter().filter(|v| (*v - x).abs() <= tol).count()
    }

    /// Groups the sorted values into `(representative, multiplicity)` runs.
    /// The representative is the mean of each run.
    pub fn grouped(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut i = 0;
        while i < self.values.len() {
            let mut j = i + 1;
            let mut sum = self.values[i];
            while j < self.values.len() {
                let rep = sum / (j - i) as f64;
                if (self.values[j] - rep).abs() <= self.tau * rep.abs().max(1.0) {
                    sum += self.values[j];
                    j += 1;
                } else {
                    break;
                }
            }
            out.push((sum / (j - i) as f64, j - i));
            i = j;
        }
        out
    }

    /// Max elementwise residual against another sorted spectrum, or `None`
    /// when the cardinalities differ. Pairing sorted values is the standard
    /// stable comparison for symmetric spectra.
    pub fn max_residual(&self, other: &Spectrum) -> Option<f64> {
        if self.len() != other.len() {
            return None;
        }
        Some(
            self.values
                .iter()
                .zip(&other.values)
                .fold(0.0, |acc, (a, b)| acc.max((a - b).abs())),
        )
    }
}
