use num_bigint::BigUint;
use num_traits::One;

use super::Partition;

/// `n! / ∏ hook lengths`, evaluated on prime exponents so that no
/// intermediate value exceeds the result.
pub(super) fn hook_length_dimension(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    if n < 2 {
        return BigUint::one();
    }
    let spf = smallest_prime_factors(n);
    let mut exponents = vec![0i64; n + 1];

    for m in 2..=n {
        add_factorization(&spf, m, 1, &mut exponents);
    }
    for row in lambda.hook_lengths() {
        for h in row {
            add_factorization(&spf, h, -1, &mut exponents);
        }
    }

    let mut result = BigUint::one();
    for (prime, &e) in exponents.iter().enumerate() {
        debug_assert!(e >= 0, "hook-length quotient is an integer");
        if e > 0 {
            result *= BigUint::from(prime).pow(e as u32);
        }
    }
    result
}

fn smallest_prime_factors(n: usize) -> Vec<usize> {
    let mut spf: Vec<usize> = (0..=n).collect();
    let mut i = 2;
    while i * i <= n {
        if spf[i] == i {
            for j in (i * i..=n).step_by(i) {
                if spf[j] == j {
                    spf[j] = i;
                }
            }
        }
        i += 1;
    }
    spf
}

fn add_factorization(spf: &[usize], mut m: usize, sign: i64, exponents: &mut [i64]) {
    while m > 1 {
        let q = spf[m];
        exponents[q] += sign;
        m /= q;
    }
}
