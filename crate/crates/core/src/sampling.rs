//! Seeded random membership functions for property trials.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A continuous piecewise-linear function on `[0, 1]` given by its knots.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewiseLinear {
    knots: Vec<(f64, f64)>,
}

impl PiecewiseLinear {
    /// Knots must start at `x = 0`, end at `x = 1`, and be strictly increasing in `x`.
    pub fn new(knots: Vec<(f64, f64)>) -> Option<Self> {
        let ok = knots.len() >= 2
            && knots[0].0 == 0.0
            && knots[knots.len() - 1].0 == 1.0
            && knots.windows(2).all(|w| w[0].0 < w[1].0);
        ok.then_some(PiecewiseLinear { knots })
    }

    /// Between `min_knots` and `max_knots` knots (inclusive), values uniform in `[0, 1]`.
    pub fn random<R: Rng>(rng: &mut R, min_knots: usize, max_knots: usize) -> Self {
        let k = rng.gen_range(min_knots.max(2)..=max_knots.max(2));
        let mut xs: Vec<f64> = (0..k - 2).map(|_| rng.gen_range(0.01..0.99)).collect();
        xs.sort_by(|a, b| a.total_cmp(b));
        xs.dedup();
        let mut knots = vec![(0.0, rng.gen::<f64>())];
        knots.extend(xs.into_iter().map(|x| (x, rng.gen::<f64>())));
        knots.push((1.0, rng.gen::<f64>()));
        PiecewiseLinear { knots }
    }

    pub fn knots(&self) -> &[(f64, f64)] {
        &self.knots
    }

    pub fn eval(&self, x: f64) -> f64 {
        let x = x.clamp(0.0, 1.0);
        let i = self.knots.partition_point(|&(kx, _)| kx <= x);
        if i == 0 {
            return self.knots[0].1;
        }
        if i >= self.knots.len() {
            return self.knots[self.knots.len() - 1].1;
        }
        let (x0, y0) = self.knots[i - 1];
        let (x1, y1) = self.knots[i];
        y0 + (y1 - y0) * (x - x0) / (x1 - x0)
    }
}

/// A right-continuous step function on `[0, 1]`: `values[j]` on
/// `[breaks[j-1], breaks[j])`, with `breaks` implicitly bracketed by 0 and 1.
#[derive(Debug, Clone, PartialEq)]
pub struct StepFunction {
    breaks: Vec<f64>,
    values: Vec<f64>,
}

impl StepFunction {
    pub fn new(breaks: Vec<f64>, values: Vec<f64>) -> Option<Self> {
        let ok = values.len() == breaks.len() + 1 && breaks.windows(2).all(|w| w[0] < w[1]);
        ok.then_some(StepFunction { breaks, values })
    }

    /// Up to `max_pieces` pieces with breaks on `grid` and values drawn from `levels`.
    pub fn random<R: Rng>(rng: &mut R, grid: &[f64], max_pieces: usize, levels: &[f64]) -> Self {
        let pieces = rng.gen_range(1..=max_pieces.max(1));
        let interior = &grid[1..grid.len().saturating_sub(1).max(1)];
        let mut breaks: Vec<f64> = interior
            .choose_multiple(rng, (pieces - 1).min(interior.len()))
            .copied()
            .collect();
        breaks.sort_by(|a, b| a.total_cmp(b));
        let values = (0..=breaks.len())
            .map(|_| *levels.choose(rng).expect("levels must be non-empty"))
            .collect();
        StepFunction { breaks, values }
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.values[self.breaks.partition_point(|&b| b <= x)]
    }

    /// Same function with the value at the right endpoint `x = 1` replaced.
    pub fn with_last(mut self, v: f64) -> Self {
        let n = self.values.len();
        self.values[n - 1] = v;
        self
    }

    pub fn with_first(mut self, v: f64) -> Self {
        self.values[0] = v;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn piecewise_linear_interpolates() {
        let f = PiecewiseLinear::new(vec![(0.0, 0.0), (0.5, 1.0), (1.0, 0.0)]).unwrap();
        assert_eq!(f.eval(0.25), 0.5);
        assert_eq!(f.eval(0.5), 1.0);
        assert_eq!(f.eval(1.0), 0.0);
        assert!(PiecewiseLinear::new(vec![(0.1, 0.0), (1.0, 0.0)]).is_none());
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a = PiecewiseLinear::random(&mut seeded(7), 4, 8);
        let b = PiecewiseLinear::random(&mut seeded(7), 4, 8);
        assert_eq!(a, b);
        assert!((2..=8).contains(&a.knots().len()));
        for x in [0.0, 0.3, 0.77, 1.0] {
            let v = a.eval(x);
            assert!((0.0..=1.0).contains(&v));
        }
    }

    #[test]
    fn steps() {
        let s = StepFunction::new(vec![0.5], vec![0.2, 1.0]).unwrap();
        assert_eq!(s.eval(0.49), 0.2);
        assert_eq!(s.eval(0.5), 1.0);
        let grid: Vec<f64> = (0..11).map(|i| i as f64 / 10.0).collect();
        let r = StepFunction::random(&mut seeded(1), &grid, 4, &[0.0, 0.5, 1.0]);
        assert!(r.eval(0.0) >= 0.0);
    }
}
