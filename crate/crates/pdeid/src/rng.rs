//! Deterministic, platform-independent Gaussian noise generator.
//!
//! Each draw is a pure function of `(seed, index)`: the pair is hashed with
//! SplitMix64 and turned into a standard normal via the Box-Muller transform.
//! Because there is no sequential state, draws can be generated for any
//! subset of nodes, in any order or in parallel, with identical results.

/// SplitMix64 finalizer.
fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Uniform in (0, 1]; never returns 0 so `ln` below is safe.
fn uniform(seed: u64, index: u64, stream: u64) -> f64 {
    let bits = splitmix64(splitmix64(seed ^ stream.wrapping_mul(0xA24B_AED4_963E_E407)).wrapping_add(index));
    ((bits >> 11) as f64 + 1.0) / (1u64 << 53) as f64
}

/// Standard normal draw for node `index` under `seed` (Box-Muller).
pub fn standard_normal(seed: u64, index: u64) -> f64 {
    let u1 = uniform(seed, index, 1);
    let u2 = uniform(seed, index, 2);
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_per_node() {
        assert_eq!(standard_normal(7, 42), standard_normal(7, 42));
        assert_ne!(standard_normal(7, 42), standard_normal(8, 42));
        assert_ne!(standard_normal(7, 42), standard_normal(7, 43));
    }

    #[test]
    fn moments_near_standard_normal() {
        let n = 200_000;
        let (mut sum, mut sumsq) = (0.0, 0.0);
        for i in 0..n {
            let z = standard_normal(123, i);
            sum += z;
            sumsq += z * z;
        }
        let mean = sum / n as f64;
        let var = sumsq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.01, "mean {mean}");
        assert!((var - 1.0).abs() < 0.02, "var {var}");
    }
}
