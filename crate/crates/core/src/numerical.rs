//! Numerical semigroups: gcd, Apéry sets by the round-robin algorithm,
//! Frobenius number and conductor.

use num_integer::Integer;

pub fn gcd_all(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, &v| acc.gcd(&v))
}

/// Smallest element of the semigroup in each residue class modulo the
/// smallest generator (the Apéry set), via round-robin relaxation.
///
/// Requires the generators to be positive with gcd 1.
pub fn apery_set(generators: &[u64]) -> Vec<u64> {
    let a1 = *generators.iter().min().expect("nonempty generator list") as usize;
    let mut best = vec![u64::MAX; a1];
    best[0] = 0;
    for &a in generators {
        let a_mod = a as usize % a1;
        if a_mod == 0 {
            continue;
        }
        let d = a1.gcd(&a_mod);
        let cycle = a1 / d;
        for start in 0..d {
            let mut current = (0..cycle).map(|q| best[start + q * d]).min().unwrap();
            if current == u64::MAX {
                continue;
            }
            for _ in 0..cycle.saturating_sub(1) {
                current += a;
                let r = (current % a1 as u64) as usize;
                current = current.min(best[r]);
                best[r] = current;
            }
        }
    }
    best
}

/// Largest integer not in the semigroup, `-1` when the semigroup is `N`.
pub fn frobenius_number(generators: &[u64]) -> i64 {
    let a1 = *generators.iter().min().expect("nonempty generator list");
    let max = *apery_set(generators).iter().max().unwrap();
    max as i64 - a1 as i64
}

/// Least `C` with every integer `>= C` in the semigroup.
pub fn conductor(generators: &[u64]) -> u64 {
    (frobenius_number(generators) + 1) as u64
}
