use std::sync::Mutex;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::scalar::Scalar;
use super::NumericsError;

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Falling factorial `x (x-1) ... (x-k+1)` under the product convention:
/// the empty product is 1, and any `k > x` hits a zero factor.
pub fn falling_factorial(x: u64, k: u64) -> BigInt {
    if k > x {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(x - i);
    }
    acc
}

/// Multinomial coefficient `(Σ parts)! / Π parts!`.
pub fn multinomial(parts: &[u64]) -> BigInt {
    let mut acc = BigInt::one();
    let mut seen = 0u64;
    for &part in parts {
        seen += part;
        acc *= binomial(seen, part);
    }
    acc
}

/// Triangular table of Stirling numbers of the second kind `S(n, k)` for
/// `0 <= k <= n <= max_n`, built from the recurrence
/// `S(n, k) = k S(n-1, k) + S(n-1, k-1)`.
#[derive(Debug, Clone)]
pub struct Stirling2Table {
    rows: Vec<Vec<BigInt>>,
}

impl Stirling2Table {
    pub fn new(max_n: usize) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=max_n {
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::zero());
            for k in 1..=n {
                let stay = &rows[n - 1];
                let carried = if k <= n - 1 { stay[k].clone() } else { BigInt::zero() };
                row.push(BigInt::from(k as u64) * carried + stay[k - 1].clone());
            }
            rows.push(row);
        }
        Stirling2Table { rows }
    }

    pub fn max_order(&self) -> usize {
        self.rows.len() - 1
    }

    /// `S(n, k)`, with the usual zero conventions outside the triangle.
    pub fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.rows[n][k].clone()
    }
}

static STIRLING_CACHE: OnceLock<Mutex<Stirling2Table>> = OnceLock::new();

/// Stirling number of the second kind `S(n, k)`: the number of partitions of
/// an `n`-set into `k` non-empty blocks.
///
/// Backed by a process-wide table grown on demand; moment orders are small,
/// so the triangle stays tiny.
pub fn stirling2(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let n = n as usize;
    let cache = STIRLING_CACHE.get_or_init(|| Mutex::new(Stirling2Table::new(16)));
    let mut table = cache.lock().expect("stirling cache poisoned");
    if table.max_order() < n {
        *table = Stirling2Table::new(n.max(table.max_order() * 2));
    }
    table.get(n, k as usize)
}

/// All compositions of `total` into `parts` nonnegative parts, in
/// colexicographic order: `(total, 0, .., 0)` first, `(0, .., 0, total)`
/// last. Deterministic order keeps term-by-term traces reproducible.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    assert!(parts >= 1, "compositions need at least one part");
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for last in 0..=total {
        for mut head in compositions(total - last, parts - 1) {
            head.push(last);
            out.push(head);
        }
    }
    out
}

/// Power sum over compositions: `Σ_{m_0+..+m_k = m} Π_j c_j^{m_j}`,
/// evaluated through the closed form `Σ_j c_j^{m+k} / Π_{i≠j} (c_j - c_i)`,
/// which requires the entries of `c` to be pairwise distinct.
pub fn composition_power_sum<S: Scalar>(c: &[S], m: u32) -> Result<S, NumericsError> {
    assert!(!c.is_empty(), "composition_power_sum needs at least one scalar");
    for i in 0..c.len() {
        for j in (i + 1)..c.len() {
            if !c[i].is_distinct_from(&c[j]) {
                return Err(NumericsError::DistinctnessViolated { first: i, second: j });
            }
        }
    }
    let k = (c.len() - 1) as u32;
    let mut total = S::zero();
    for (j, cj) in c.iter().enumerate() {
        let mut denom = S::one();
        for (i, ci) in c.iter().enumerate() {
            if i != j {
                denom = denom * (cj.clone() - ci.clone());
            }
        }
        total = total + cj.powi(m + k) / denom;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::ExactRational;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(0, 0), BigInt::one());
        for n in 0..20u64 {
            assert_eq!(binomial(n, 0), BigInt::one());
        }
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(50, 25), "126410606437752".parse::<BigInt>().unwrap());
    }

    #[test]
    fn falling_factorial_values() {
        assert_eq!(falling_factorial(5, 3), BigInt::from(60));
        for x in 0..10u64 {
            assert_eq!(falling_factorial(x, 0), BigInt::one());
        }
        // Product convention: k > x hits a zero factor.
        assert_eq!(falling_factorial(2, 4), BigInt::zero());
        assert_eq!(falling_factorial(0, 1), BigInt::zero());
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[2, 2]), BigInt::from(6));
        assert_eq!(multinomial(&[7]), BigInt::one());
        assert_eq!(multinomial(&[1, 1, 2]), BigInt::from(12));
        assert_eq!(multinomial(&[]), BigInt::one());
    }

    /// Brute-force count of partitions of an `n`-set into `k` non-empty
    /// blocks, by assigning each element to an existing or a fresh block.
    fn count_partitions(n: usize, k: usize) -> u64 {
        fn recurse(remaining: usize, blocks_used: usize, target: usize) -> u64 {
            if remaining == 0 {
                return u64::from(blocks_used == target);
            }
            // Next element joins one of the used blocks or opens a new one.
            let mut total = blocks_used as u64 * recurse(remaining - 1, blocks_used, target);
            if blocks_used < target {
                total += recurse(remaining - 1, blocks_used + 1, target);
            }
            total
        }
        if n == 0 {
            return u64::from(k == 0);
        }
        recurse(n - 1, 1, k)
    }

    #[test]
    fn stirling_small_values() {
        assert_eq!(stirling2(4, 2), BigInt::from(7));
        for n in 0..10u64 {
            assert_eq!(stirling2(n, n), BigInt::one());
        }
        assert_eq!(stirling2(6, 3), BigInt::from(count_partitions(6, 3)));
        assert_eq!(stirling2(6, 3), BigInt::from(90));
        assert_eq!(stirling2(3, 7), BigInt::zero());
        for n in 1..8u64 {
            assert_eq!(stirling2(n, 0), BigInt::zero());
        }
    }

    #[test]
    fn stirling_matches_brute_force_partition_counts() {
        for n in 0..=12u64 {
            for k in 0..=n {
                assert_eq!(
                    stirling2(n, k),
                    BigInt::from(count_partitions(n as usize, k as usize)),
                    "S({n},{k})"
                );
            }
        }
    }

    #[test]
    fn stirling_falling_factorial_identity() {
        // Σ_k S(n,k) x^(k falling) = x^n.
        for x in 0..=10u64 {
            for n in 0..=8u64 {
                let mut sum = BigInt::zero();
                for k in 0..=n {
                    sum += stirling2(n, k) * falling_factorial(x, k);
                }
                assert_eq!(sum, BigInt::from(x).pow(n as u32), "x={x} n={n}");
            }
        }
    }

    #[test]
    fn compositions_colex_order() {
        let comps = compositions(2, 3);
        assert_eq!(
            comps,
            vec![
                vec![2, 0, 0],
                vec![1, 1, 0],
                vec![0, 2, 0],
                vec![1, 0, 1],
                vec![0, 1, 1],
                vec![0, 0, 2],
            ]
        );
        assert_eq!(compositions(3, 1), vec![vec![3]]);
        // C(n + g - 1, g - 1) compositions in total.
        assert_eq!(compositions(5, 4).len(), 56);
    }

    /// Direct enumeration of `Σ_{|m| = m} Π c_j^{m_j}`.
    fn power_sum_by_enumeration<S: Scalar>(c: &[S], m: u32) -> S {
        let mut total = S::zero();
        for comp in compositions(m, c.len()) {
            let mut term = S::one();
            for (cj, &mj) in c.iter().zip(&comp) {
                term = term * cj.powi(mj);
            }
            total = total + term;
        }
        total
    }

    #[test]
    fn composition_power_sum_examples() {
        let c = [2.0f64, 3.0];
        assert!((composition_power_sum(&c, 2).unwrap() - 19.0).abs() < 1e-12);
        assert_eq!(power_sum_by_enumeration(&c, 2), 19.0);

        let single = [ExactRational::ratio(3, 2)];
        assert_eq!(
            composition_power_sum(&single, 4).unwrap(),
            ExactRational::ratio(81, 16)
        );

        let c = [1.0f64, 2.0, 4.0];
        assert!((composition_power_sum(&c, 3).unwrap() - 105.0).abs() < 1e-10);
        assert_eq!(power_sum_by_enumeration(&c, 3), 105.0);
    }

    #[test]
    fn composition_power_sum_rejects_coincident_entries() {
        let err = composition_power_sum(&[1.0f64, 1.0 + 1e-12], 3).unwrap_err();
        assert_eq!(err, NumericsError::DistinctnessViolated { first: 0, second: 1 });

        let c = [ExactRational::ratio(1, 3), ExactRational::ratio(1, 3)];
        assert!(composition_power_sum(&c, 2).is_err());
        // Exact backend distinguishes arbitrarily close rationals.
        let c = [
            ExactRational::ratio(1, 1_000_000_000_000),
            ExactRational::ratio(1, 1_000_000_000_001),
        ];
        assert!(composition_power_sum(&c, 2).is_ok());
    }

    #[test]
    fn composition_power_sum_matches_enumeration_exact_backend() {
        // Deterministic distinct rationals.
        for k in 0..=4usize {
            let c: Vec<ExactRational> =
                (0..=k).map(|i| ExactRational::ratio(2 * i as i64 + 1, 3 + i as i64)).collect();
            for m in 0..=8u32 {
                assert_eq!(
                    composition_power_sum(&c, m).unwrap(),
                    power_sum_by_enumeration(&c, m),
                    "k={k} m={m}"
                );
            }
        }
    }
}
