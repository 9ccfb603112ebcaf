//! Exact counting of sorting networks and reduced words.
//!
//! Everything here is exact: counts are big integers and probabilities are
//! big rationals, converted to floats only at reporting boundaries. A
//! log-space path is provided for the first-swap law at sizes where the
//! rational products are unwieldy.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::perm::{inversion_number, Permutation, SortingNetwork};
use crate::tableaux::{BigCount, Partition};

/// Exact probability as a reduced fraction.
pub type ExactRational = BigRational;

/// Largest `n` for which exact reduced-word counting is permitted; the memo
/// table is keyed by whole permutations and grows factorially.
pub const MAX_REDUCED_WORD_N: usize = 9;

/// Largest `n` for which exhaustive network enumeration is permitted
/// (`#Ω_6 = 292864`; `n = 7` is already above `10^9`).
pub const MAX_ENUMERATION_N: usize = 6;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountingError {
    #[error("n = {n} exceeds the exact-computation guard (max {max})")]
    SizeGuard { n: usize, max: usize },
    #[error("double-flip configuration requires even n, got {0}")]
    OddN(usize),
}

/// Stanley's product formula: `#Ω_n = N! / (1^{n−1} 3^{n−2} ⋯ (2n−3)^1)`.
pub fn stanley_count(n: usize) -> BigCount {
    let big_n = n * (n - 1) / 2;
    let mut num = BigUint::one();
    for k in 1..=big_n {
        num *= BigUint::from(k);
    }
    let mut den = BigUint::one();
    for j in 1..n {
        let odd = BigUint::from(2 * j - 1);
        for _ in 0..(n - j) {
            den *= &odd;
        }
    }
    num / den
}

/// Memoized counter for the number of reduced words of a permutation.
///
/// The recursion strips the last letter: `R(ν) = Σ R(ν·τ_s)` over descents
/// `s` of `ν`, with `R(id) = 1`. Concurrent use requires independent
/// instances; results are identical regardless.
pub struct ReducedWordCounter {
    memo: HashMap<u64, BigCount>,
}

fn pack(line: &[u32]) -> u64 {
    debug_assert!(line.len() <= 16);
    line.iter()
        .fold(0u64, |acc, &v| (acc << 4) | (v as u64 - 1))
}

impl ReducedWordCounter {
    pub fn new() -> Self {
        ReducedWordCounter {
            memo: HashMap::new(),
        }
    }

    pub fn count(&mut self, p: &Permutation) -> Result<BigCount, CountingError> {
        if p.n() > MAX_REDUCED_WORD_N {
            return Err(CountingError::SizeGuard {
                n: p.n(),
                max: MAX_REDUCED_WORD_N,
            });
        }
        let mut line = p.as_slice().to_vec();
        Ok(self.count_rec(&mut line))
    }

    fn count_rec(&mut self, line: &mut [u32]) -> BigCount {
        let key = pack(line);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut total = BigUint::zero();
        let mut any_descent = false;
        for s in 0..line.len() - 1 {
            if line[s] > line[s + 1] {
                any_descent = true;
                line.swap(s, s + 1);
                total += self.count_rec(line);
                line.swap(s, s + 1);
            }
        }
        if !any_descent {
            total = BigUint::one();
        }
        self.memo.insert(key, total.clone());
        total
    }
}

impl Default for ReducedWordCounter {
    fn default() -> Self {
        Self::new()
    }
}

/// Number of reduced words (partial sorting networks) of `ν`.
pub fn count_reduced_words(p: &Permutation) -> Result<BigCount, CountingError> {
    ReducedWordCounter::new().count(p)
}

/// Lexicographic stream over all `n`-element sorting networks.
pub fn enumerate_networks(n: usize) -> Result<NetworkEnumerator, CountingError> {
    if n > MAX_ENUMERATION_N {
        return Err(CountingError::SizeGuard {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    Ok(NetworkEnumerator::new(n))
}

/// Iterator over `Ω_n` in lexicographic order of swap sequences.
///
/// Backtracking over ascents of the running configuration; every branch of
/// the search tree reaches depth `N` (only `ρ` has no ascent), so there are
/// no dead ends.
pub struct NetworkEnumerator {
    n: usize,
    target: usize,
    line: Vec<u32>,
    prefix: Vec<u32>,
    // next swap location (one-based) to try at each depth
    next_try: Vec<u32>,
    done: bool,
}

impl NetworkEnumerator {
    fn new(n: usize) -> Self {
        NetworkEnumerator {
            n,
            target: n * (n - 1) / 2,
            line: (1..=n as u32).collect(),
            prefix: Vec::new(),
            next_try: vec![1],
            done: n == 0,
        }
    }

    fn backtrack(&mut self) {
        loop {
            self.next_try.pop();
            match self.prefix.pop() {
                None => {
                    self.done = true;
                    return;
                }
                Some(s) => {
                    self.line.swap(s as usize - 1, s as usize);
                    if (s as usize) < self.n - 1 {
                        self.next_try.push(s + 1);
                        return;
                    }
                }
            }
        }
    }
}

impl Iterator for NetworkEnumerator {
    type Item = SortingNetwork;

    fn next(&mut self) -> Option<SortingNetwork> {
        if self.done {
            return None;
        }
        loop {
            if self.prefix.len() == self.target {
                let item = SortingNetwork::new_unchecked(self.n, self.prefix.clone());
                self.backtrack();
                return Some(item);
            }
            let start = *self.next_try.last().unwrap();
            let mut advanced = false;
            for s in start..self.n as u32 {
                if self.line[s as usize - 1] < self.line[s as usize] {
                    self.line.swap(s as usize - 1, s as usize);
                    self.prefix.push(s);
                    *self.next_try.last_mut().unwrap() = s;
                    self.next_try.push(1);
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                self.backtrack();
                if self.done {
                    return None;
                }
            }
        }
    }
}

/// Exact probability that the uniform network passes through configuration
/// `ν` at time `k = inv(ν)`: `R(ν) R(ν⁻¹ρ) / R(ρ)`.
pub fn pass_through_probability(p: &Permutation) -> Result<ExactRational, CountingError> {
    let n = p.n();
    let rho = Permutation::reverse(n);
    let mut counter = ReducedWordCounter::new();
    let r_nu = counter.count(p)?;
    let r_rest = counter.count(&p.inverse().compose(&rho))?;
    let r_rho = counter.count(&rho)?;
    Ok(BigRational::new(
        BigInt::from(r_nu * r_rest),
        BigInt::from(r_rho),
    ))
}

fn odd_product(m: usize) -> BigUint {
    // 3·5⋯(2m−1); empty product for m ≤ 1
    let mut out = BigUint::one();
    for j in 2..=m {
        out *= BigUint::from(2 * j - 1);
    }
    out
}

fn even_product(m: usize) -> BigUint {
    // 2·4⋯(2m−2); empty product for m ≤ 1
    let mut out = BigUint::one();
    for j in 2..=m {
        out *= BigUint::from(2 * j - 2);
    }
    out
}

/// Exact law of the first swap location: `a_{n,r}` for `r = 1..n−1`.
pub fn first_swap_distribution(n: usize) -> Vec<ExactRational> {
    assert!(n >= 2);
    let big_n = BigInt::from(n * (n - 1) / 2);
    (1..n)
        .map(|r| {
            let num = odd_product(r) * odd_product(n - r);
            let den = even_product(r) * even_product(n - r);
            BigRational::new(BigInt::from(num), BigInt::from(den) * &big_n)
        })
        .collect()
}

/// `ln a_{n,r}` for `r = 1..n−1`, for sizes where exact rationals are
/// unnecessarily heavy.
pub fn first_swap_log_distribution(n: usize) -> Vec<f64> {
    assert!(n >= 2);
    // f(m) = Σ_{j=2}^m ln((2j−1)/(2j−2))
    let mut f = vec![0.0f64; n];
    for j in 2..=n - 1 {
        f[j] = f[j - 1] + ((2 * j - 1) as f64 / (2 * j - 2) as f64).ln();
    }
    let ln_big_n = (n as f64 * (n - 1) as f64 / 2.0).ln();
    (1..n).map(|r| f[r] + f[n - r] - ln_big_n).collect()
}

/// The double-flip permutation `ψ = (n/2, …, 1, n, …, n/2+1)`.
pub fn double_flip_permutation(n: usize) -> Result<Permutation, CountingError> {
    if n == 0 || n % 2 != 0 {
        return Err(CountingError::OddN(n));
    }
    let half = n as u32 / 2;
    let values = (1..=half).rev().chain((half + 1..=n as u32).rev()).collect();
    Ok(Permutation::new(values).expect("construction is a bijection"))
}

fn binomial(n: usize, k: usize) -> BigUint {
    let mut out = BigUint::one();
    for i in 0..k.min(n - k) {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

/// Exact probability that the uniform network passes through the
/// double-flip configuration `ψ` at time `h = n(n−2)/4`:
/// `C(h, h/2) d(△_{n/2})² d(□_{n/2}) / d(△_n)`.
///
/// `h = (n/2)(n/2 − 1)` is even for every even `n`, so the binomial is
/// always well formed; odd `n` is rejected.
pub fn double_flip_probability(n: usize) -> Result<ExactRational, CountingError> {
    if n == 0 || n % 2 != 0 {
        return Err(CountingError::OddN(n));
    }
    let h = n * (n - 2) / 4;
    debug_assert_eq!(h % 2, 0);
    debug_assert_eq!(h, inversion_number(&double_flip_permutation(n)?));
    let half_tri = Partition::staircase(n / 2).dimension();
    let num = binomial(h, h / 2) * &half_tri * &half_tri * Partition::square(n / 2).dimension();
    let den = Partition::staircase(n).dimension();
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Natural log of a positive big integer, stable for values far beyond
/// `f64` range.
pub fn ln_biguint(x: &BigUint) -> f64 {
    assert!(!x.is_zero());
    let bits = x.bits();
    if bits <= 53 {
        let mut v = 0u64;
        for (i, d) in x.to_u64_digits().iter().enumerate() {
            v |= d << (64 * i);
        }
        return (v as f64).ln();
    }
    let shift = bits - 53;
    let mantissa = x >> shift;
    let mut v = 0u64;
    for (i, d) in mantissa.to_u64_digits().iter().enumerate() {
        v |= d << (64 * i);
    }
    (v as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Natural log of a positive rational.
pub fn ln_rational(x: &ExactRational) -> f64 {
    ln_biguint(&x.numer().magnitude().clone()) - ln_biguint(&x.denom().magnitude().clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stanley_small_values() {
        let expect: [(usize, u64); 7] = [
            (1, 1),
            (2, 1),
            (3, 2),
            (4, 16),
            (5, 768),
            (6, 292_864),
            (7, 1_100_742_656),
        ];
        for (n, v) in expect {
            assert_eq!(stanley_count(n), BigUint::from(v));
        }
    }

    #[test]
    fn stanley_equals_staircase_dimension() {
        for n in 1..=12 {
            assert_eq!(stanley_count(n), Partition::staircase(n).dimension());
        }
    }

    #[test]
    fn reduced_word_basics() {
        let mut c = ReducedWordCounter::new();
        assert_eq!(c.count(&Permutation::identity(4)).unwrap(), BigUint::one());
        let p = Permutation::new(vec![2, 1, 4, 3]).unwrap();
        assert_eq!(c.count(&p).unwrap(), BigUint::from(2u32));
        assert_eq!(
            c.count(&Permutation::reverse(4)).unwrap(),
            BigUint::from(16u32)
        );
        assert!(c.count(&Permutation::identity(10)).is_err());
    }

    /// Forward oracle: count words by extending prefixes from the identity,
    /// independent of the memoized last-letter recursion.
    fn count_words_forward(target: &Permutation) -> u64 {
        fn rec(line: &mut Vec<u32>, remaining: usize, target: &[u32]) -> u64 {
            if remaining == 0 {
                return if line.iter().zip(target).all(|(a, b)| a == b) {
                    1
                } else {
                    0
                };
            }
            let mut total = 0;
            for s in 0..line.len() - 1 {
                if line[s] < line[s + 1] {
                    line.swap(s, s + 1);
                    total += rec(line, remaining - 1, target);
                    line.swap(s, s + 1);
                }
            }
            total
        }
        let mut line: Vec<u32> = (1..=target.n() as u32).collect();
        rec(&mut line, inversion_number(target), target.as_slice())
    }

    #[test]
    fn reduced_words_match_forward_enumeration() {
        // every permutation of S_4 and a sample of S_5
        let mut counter = ReducedWordCounter::new();
        for w in enumerate_all_permutations(4) {
            let p = Permutation::new(w).unwrap();
            assert_eq!(
                counter.count(&p).unwrap(),
                BigUint::from(count_words_forward(&p))
            );
        }
        for w in enumerate_all_permutations(5) {
            let p = Permutation::new(w).unwrap();
            assert_eq!(
                counter.count(&p).unwrap(),
                BigUint::from(count_words_forward(&p))
            );
        }
    }

    fn enumerate_all_permutations(n: usize) -> Vec<Vec<u32>> {
        fn rec(prefix: &mut Vec<u32>, used: &mut Vec<bool>, out: &mut Vec<Vec<u32>>) {
            if prefix.len() == used.len() {
                out.push(prefix.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v as u32 + 1);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn enumeration_counts_and_order() {
        let nets: Vec<_> = enumerate_networks(3).unwrap().collect();
        assert_eq!(nets.len(), 2);
        assert_eq!(nets[0].swaps(), &[1, 2, 1]);
        assert_eq!(nets[1].swaps(), &[2, 1, 2]);
        assert_eq!(enumerate_networks(4).unwrap().count(), 16);
        assert_eq!(enumerate_networks(5).unwrap().count(), 768);
        assert!(enumerate_networks(7).is_err());
        // n = 1: the empty network
        let trivial: Vec<_> = enumerate_networks(1).unwrap().collect();
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial[0].len(), 0);
    }

    #[test]
    fn enumeration_is_strictly_increasing() {
        let mut prev: Option<Vec<u32>> = None;
        for w in enumerate_networks(5).unwrap() {
            let cur = w.swaps().to_vec();
            if let Some(p) = &prev {
                assert!(*p < cur);
            }
            prev = Some(cur);
        }
    }

    #[test]
    fn pass_through_endpoints() {
        for n in 2..=5 {
            let one = BigRational::one();
            assert_eq!(
                pass_through_probability(&Permutation::identity(n)).unwrap(),
                one
            );
            assert_eq!(
                pass_through_probability(&Permutation::reverse(n)).unwrap(),
                one
            );
        }
    }

    #[test]
    fn pass_through_matches_enumeration_census() {
        // P(σ_2 = (2,1,4,3)) = 1/4: exactly 4 of the 16 networks
        let nu = Permutation::new(vec![2, 1, 4, 3]).unwrap();
        let p = pass_through_probability(&nu).unwrap();
        assert_eq!(p, BigRational::new(BigInt::from(1), BigInt::from(4)));
        let hits = enumerate_networks(4)
            .unwrap()
            .filter(|w| w.configuration(2).unwrap() == nu)
            .count();
        assert_eq!(hits, 4);
    }

    #[test]
    fn pass_through_sums_to_one_per_time_slice() {
        for n in 2..=5 {
            let big_n = n * (n - 1) / 2;
            let mut totals = vec![BigRational::zero(); big_n + 1];
            for w in enumerate_all_permutations(n) {
                let p = Permutation::new(w).unwrap();
                let k = inversion_number(&p);
                totals[k] += pass_through_probability(&p).unwrap();
            }
            for (k, total) in totals.iter().enumerate() {
                assert_eq!(*total, BigRational::one(), "n={} k={}", n, k);
            }
        }
    }

    #[test]
    fn first_swap_small_cases() {
        let d3 = first_swap_distribution(3);
        assert_eq!(d3[0], BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(d3[1], BigRational::new(BigInt::from(1), BigInt::from(2)));
        let d4 = first_swap_distribution(4);
        assert_eq!(d4[0], BigRational::new(BigInt::from(5), BigInt::from(16)));
        assert_eq!(d4[1], BigRational::new(BigInt::from(3), BigInt::from(8)));
        assert_eq!(d4[2], BigRational::new(BigInt::from(5), BigInt::from(16)));
    }

    #[test]
    fn first_swap_symmetry_and_normalization() {
        for n in 2..=50 {
            let d = first_swap_distribution(n);
            let total: BigRational = d.iter().cloned().sum();
            assert_eq!(total, BigRational::one(), "n={}", n);
            for r in 0..d.len() {
                assert_eq!(d[r], d[d.len() - 1 - r]);
            }
        }
    }

    #[test]
    fn first_swap_log_path_agrees_with_exact() {
        for n in [3usize, 10, 50] {
            let exact = first_swap_distribution(n);
            let logs = first_swap_log_distribution(n);
            for (e, l) in exact.iter().zip(&logs) {
                let ef = ln_rational(e);
                assert!((ef - l).abs() < 1e-10, "n={}", n);
            }
        }
    }

    #[test]
    fn double_flip_small_exact() {
        let p4 = double_flip_probability(4).unwrap();
        assert_eq!(p4, BigRational::new(BigInt::from(1), BigInt::from(4)));
        assert!(double_flip_probability(5).is_err());
    }

    #[test]
    fn double_flip_census_at_n4() {
        let psi = double_flip_permutation(4).unwrap();
        assert_eq!(psi.as_slice(), &[2, 1, 4, 3]);
        let hits = enumerate_networks(4)
            .unwrap()
            .filter(|w| w.configuration(2).unwrap() == psi)
            .count();
        assert_eq!(hits, 4); // 4 of 16 = 1/4
    }

    #[test]
    fn double_flip_agrees_with_reduced_word_route_at_n8() {
        let psi = double_flip_permutation(8).unwrap();
        let via_formula = double_flip_probability(8).unwrap();
        let via_words = pass_through_probability(&psi).unwrap();
        assert_eq!(via_formula, via_words);
    }

    #[test]
    fn ln_biguint_handles_large_values() {
        let x = BigUint::from(2u32).pow(5000);
        let l = ln_biguint(&x);
        assert!((l - 5000.0 * std::f64::consts::LN_2).abs() < 1e-6);
        let y = BigUint::from(10u32);
        assert!((ln_biguint(&y) - 10f64.ln()).abs() < 1e-12);
    }
}
