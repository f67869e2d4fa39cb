use super::Group;

/// `Z^d` with the standard basis as generators.
#[derive(Debug, Clone, Copy)]
pub struct FreeAbelian {
    pub dim: usize,
}

impl FreeAbelian {
    pub fn new(dim: usize) -> Self {
        Self { dim }
    }

    pub fn basis_vector(&self, i: usize, scale: i64) -> Vec<i64> {
        let mut v = vec![0; self.dim];
        v[i] = scale;
        v
    }

    /// `{±2e_i, ±3e_i}`: a second generating set with the same ratio.
    pub fn alternative_generators(&self) -> Vec<Vec<i64>> {
        (0..self.dim).flat_map(|i| [self.basis_vector(i, 2), self.basis_vector(i, 3)]).collect()
    }
}

impl Group for FreeAbelian {
    type Element = Vec<i64>;

    fn identity(&self) -> Vec<i64> {
        vec![0; self.dim]
    }

    fn generators(&self) -> Vec<Vec<i64>> {
        (0..self.dim).flat_map(|i| [self.basis_vector(i, 1), self.basis_vector(i, -1)]).collect()
    }

    fn multiply(&self, x: &Vec<i64>, y: &Vec<i64>) -> Vec<i64> {
        x.iter().zip(y).map(|(a, b)| a + b).collect()
    }

    fn inverse(&self, x: &Vec<i64>) -> Vec<i64> {
        x.iter().map(|a| -a).collect()
    }

    fn conjugate(&self, x: &Vec<i64>, _by: &Vec<i64>) -> Vec<i64> {
        x.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::cayley_oracle::ball_enumerate;

    #[test]
    fn z2_balls_are_centered_squares() {
        let ball = ball_enumerate(&FreeAbelian::new(2), 6, Budget::default()).unwrap();
        let expected: Vec<f64> = (0..=6).map(|n| (2 * n * n + 2 * n + 1) as f64).collect();
        assert_eq!(ball.ball_counts().to_f64(), expected);
    }
}
