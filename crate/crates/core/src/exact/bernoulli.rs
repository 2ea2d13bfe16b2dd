//! Bernoulli numbers from the generating function `w/(e^w - 1)`.

use super::rational::{binomial, Rational};

/// `B_0, B_1, ...` in the `B_1 = -1/2` convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// First `count` Bernoulli numbers (at least `B_0`).
    pub fn new(count: usize) -> Self {
        let mut table = BernoulliTable { values: vec![Rational::one()] };
        table.extend_to(count);
        table
    }

    /// Extends the table until it holds `count` entries, using
    /// `Σ_{m=0}^{j} C(j+1, m) B_m = 0` for `j ≥ 1`.
    pub fn extend_to(&mut self, count: usize) {
        while self.values.len() < count {
            let j = self.values.len();
            if j >= 3 && j % 2 == 1 {
                self.values.push(Rational::zero());
                continue;
            }
            let j64 = j as u64;
            let acc: Rational = self
                .values
                .iter()
                .enumerate()
                .map(|(m, b)| b * &Rational::from(binomial(j64 + 1, m as u64)))
                .sum();
            self.values.push(-acc / Rational::from(j64 + 1));
        }
    }

    pub fn get(&self, j: usize) -> Option<&Rational> {
        self.values.get(j)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

/// `B_0 .. B_{count-1}`. `count = 0` is treated as 1.
pub fn bernoulli_numbers(count: usize) -> BernoulliTable {
    BernoulliTable::new(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leading_values() {
        let t = bernoulli_numbers(2);
        assert_eq!(t.values(), &[Rational::one(), Rational::new(-1, 2)]);
        assert_eq!(bernoulli_numbers(3).get(2), Some(&Rational::new(1, 6)));
        assert_eq!(bernoulli_numbers(13).get(12), Some(&Rational::new(-691, 2730)));
    }

    #[test]
    fn odd_indices_vanish() {
        let t = bernoulli_numbers(40);
        for j in (3..40).step_by(2) {
            assert!(t.get(j).unwrap().is_zero(), "B_{j}");
        }
    }

    #[test]
    fn extension_matches_fresh_table() {
        let mut t = bernoulli_numbers(5);
        t.extend_to(21);
        assert_eq!(t, bernoulli_numbers(21));
        assert_eq!(t.get(20), Some(&Rational::new(-174_611, 330)));
    }
}
