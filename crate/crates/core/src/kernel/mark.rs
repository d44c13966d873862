//! Finite mark-space discretization of the jump measure and the
//! weighted norms on functions over it.

use serde::Serialize;

use crate::error::{Error, Result};

/// Finite discretization of the mark space: points `w_k` with positive
/// rates `lambda_k` (jumps of mark `k` arrive at rate `lambda_k` per unit
/// time). An empty measure is the explicit "no jumps" case.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MarkMeasure {
    marks: Vec<Vec<f64>>,
    weights: Vec<f64>,
    total_rate: f64,
    mark_dim: usize,
}

impl MarkMeasure {
    /// Build a measure from mark points and rates.
    ///
    /// Rejects non-positive or non-finite rates, the zero mark point, and
    /// ragged mark dimensions.
    pub fn new(marks: Vec<Vec<f64>>, weights: Vec<f64>) -> Result<Self> {
        if marks.len() != weights.len() {
            return Err(Error::Dimension {
                what: "mark measure",
                expected: marks.len(),
                got: weights.len(),
            });
        }
        let mark_dim = marks.first().map_or(1, Vec::len);
        for (k, (w, &lam)) in marks.iter().zip(&weights).enumerate() {
            if w.len() != mark_dim {
                return Err(Error::Dimension {
                    what: "mark point",
                    expected: mark_dim,
                    got: w.len(),
                });
            }
            if !w.iter().all(|c| c.is_finite()) {
                return Err(Error::Config(format!("mark {k} has non-finite coordinates")));
            }
            if w.iter().all(|&c| c == 0.0) {
                return Err(Error::Config(format!(
                    "mark {k} is the zero vector; the mark space excludes the origin"
                )));
            }
            if !(lam > 0.0) || !lam.is_finite() {
                return Err(Error::Config(format!(
                    "mark {k} has rate {lam}; every rate must be finite and positive"
                )));
            }
        }
        let total_rate = weights.iter().sum::<f64>();
        Ok(Self {
            marks,
            weights,
            total_rate,
            mark_dim,
        })
    }

    /// The measure with no marks: a pure-diffusion model.
    pub fn none() -> Self {
        Self {
            marks: Vec::new(),
            weights: Vec::new(),
            total_rate: 0.0,
            mark_dim: 1,
        }
    }

    /// Single scalar mark at `w` with rate `lambda`.
    pub fn single(w: f64, lambda: f64) -> Result<Self> {
        Self::new(vec![vec![w]], vec![lambda])
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn marks(&self) -> &[Vec<f64>] {
        &self.marks
    }

    pub fn mark(&self, k: usize) -> &[f64] {
        &self.marks[k]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn weight(&self, k: usize) -> f64 {
        self.weights[k]
    }

    pub fn total_rate(&self) -> f64 {
        self.total_rate
    }

    pub fn mark_dim(&self) -> usize {
        self.mark_dim
    }

    /// `sum_k lambda_k (1 min |w_k|^2)`, always finite for a finite
    /// discretization; reported so truncations of heavier measures can be
    /// compared.
    pub fn small_jump_mass(&self) -> f64 {
        self.marks
            .iter()
            .zip(&self.weights)
            .map(|(w, lam)| {
                let norm_sq: f64 = w.iter().map(|c| c * c).sum();
                lam * norm_sq.min(1.0)
            })
            .sum()
    }
}

/// A function on the mark space, stored as its vector of values `nu(w_k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MarkFunction {
    values: Vec<f64>,
}

impl MarkFunction {
    pub fn new(values: Vec<f64>, measure: &MarkMeasure) -> Result<Self> {
        if values.len() != measure.len() {
            return Err(Error::Dimension {
                what: "mark function",
                expected: measure.len(),
                got: values.len(),
            });
        }
        if !values.iter().all(|v| v.is_finite()) {
            return Err(Error::Config("mark function has non-finite entries".into()));
        }
        Ok(Self { values })
    }

    pub fn zero(measure: &MarkMeasure) -> Self {
        Self {
            values: vec![0.0; measure.len()],
        }
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
}

/// Weighted l2 norm on mark values: `sqrt(sum_k nu_k^2 lambda_k)`.
///
/// Works on raw slices so hot paths can skip the `MarkFunction` wrapper.
pub fn lnorm2_slice(values: &[f64], measure: &MarkMeasure) -> Result<f64> {
    if values.len() != measure.len() {
        return Err(Error::Dimension {
            what: "lnorm2",
            expected: measure.len(),
            got: values.len(),
        });
    }
    Ok(lnorm2_unchecked(values, measure))
}

pub(crate) fn lnorm2_unchecked(values: &[f64], measure: &MarkMeasure) -> f64 {
    values
        .iter()
        .zip(measure.weights())
        .map(|(v, lam)| v * v * lam)
        .sum::<f64>()
        .sqrt()
}

/// Weighted l2 norm of a mark function.
pub fn lnorm2(values: &MarkFunction, measure: &MarkMeasure) -> Result<f64> {
    lnorm2_slice(values.values(), measure)
}

/// One-step compensated jump integral: `sum_k nu_k (counts_k - lambda_k dt)`.
///
/// Counts are real-valued here; the pure function admits fractional counts,
/// which makes exact-compensation checks expressible.
pub fn compensated_increment(
    counts: &[f64],
    values: &MarkFunction,
    measure: &MarkMeasure,
    dt: f64,
) -> Result<f64> {
    if counts.len() != measure.len() {
        return Err(Error::Dimension {
            what: "compensated increment counts",
            expected: measure.len(),
            got: counts.len(),
        });
    }
    if values.len() != measure.len() {
        return Err(Error::Dimension {
            what: "compensated increment values",
            expected: measure.len(),
            got: values.len(),
        });
    }
    Ok(values
        .values()
        .iter()
        .zip(counts)
        .zip(measure.weights())
        .map(|((nu, c), lam)| nu * (c - lam * dt))
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_zero_rate() {
        let err = MarkMeasure::new(vec![vec![1.0]], vec![0.0]);
        assert!(err.is_err());
        let err = MarkMeasure::new(vec![vec![1.0], vec![2.0]], vec![1.0, -0.5]);
        assert!(err.is_err());
    }

    #[test]
    fn rejects_zero_mark_point() {
        assert!(MarkMeasure::new(vec![vec![0.0, 0.0]], vec![1.0]).is_err());
    }

    #[test]
    fn total_rate_is_exact_sum() {
        let m = MarkMeasure::new(vec![vec![1.0], vec![-0.5]], vec![0.25, 1.5]).unwrap();
        assert_eq!(m.total_rate(), 0.25 + 1.5);
        assert!(m.small_jump_mass().is_finite());
    }

    #[test]
    fn lnorm2_examples() {
        let m = MarkMeasure::new(vec![vec![1.0], vec![2.0]], vec![0.5, 0.5]).unwrap();
        let nu = MarkFunction::new(vec![1.0, 1.0], &m).unwrap();
        assert_eq!(lnorm2(&nu, &m).unwrap(), 1.0);

        let zero = MarkFunction::zero(&m);
        assert_eq!(lnorm2(&zero, &m).unwrap(), 0.0);

        let m1 = MarkMeasure::new(vec![vec![1.0]], vec![4.0]).unwrap();
        let nu1 = MarkFunction::new(vec![3.0], &m1).unwrap();
        assert_eq!(lnorm2(&nu1, &m1).unwrap(), 6.0);
    }

    #[test]
    fn lnorm2_dimension_mismatch() {
        let m = MarkMeasure::new(vec![vec![1.0], vec![2.0]], vec![0.5, 0.5]).unwrap();
        assert!(lnorm2_slice(&[1.0], &m).is_err());
    }

    #[test]
    fn compensated_increment_examples() {
        let m = MarkMeasure::new(vec![vec![1.0], vec![2.0]], vec![0.5, 0.5]).unwrap();
        let nu0 = MarkFunction::zero(&m);
        assert_eq!(
            compensated_increment(&[3.0, 7.0], &nu0, &m, 1.0).unwrap(),
            0.0
        );

        // counts exactly at the compensator, fractional allowed
        let nu = MarkFunction::new(vec![2.0, -3.0], &m).unwrap();
        let dt = 0.8;
        let counts = [0.5 * dt, 0.5 * dt];
        assert_eq!(compensated_increment(&counts, &nu, &m, dt).unwrap(), 0.0);

        let ones = MarkFunction::new(vec![1.0, 1.0], &m).unwrap();
        assert_eq!(
            compensated_increment(&[2.0, 0.0], &ones, &m, 1.0).unwrap(),
            1.0
        );
    }

    #[test]
    fn empty_measure_is_no_jumps() {
        let m = MarkMeasure::none();
        assert!(m.is_empty());
        assert_eq!(m.total_rate(), 0.0);
    }
}
