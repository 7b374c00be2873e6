use std::f64::consts::PI;
use std::io::Write;

use nalgebra::Matrix3;
use num_complex::Complex64;

use super::operator::WalkSpec;
use crate::error::{Error, Result};

const NORM_TOLERANCE: f64 = 1e-10;

/// Amplitudes Ψ(0), …, Ψ(N−1), each a (←, •, →) triple, flattened.
#[derive(Clone, Debug, PartialEq)]
pub struct WalkState {
    amplitudes: Vec<Complex64>,
}

impl WalkState {
    pub fn new(amplitudes: Vec<Complex64>) -> Result<Self> {
        if !amplitudes.len().is_multiple_of(3) || amplitudes.is_empty() {
            return Err(Error::InvalidArgument(format!(
                "state length {} is not a positive multiple of 3",
                amplitudes.len()
            )));
        }
        Ok(WalkState { amplitudes })
    }

    /// The walker at `vertex` with the given (unnormalized) chirality weights.
    pub fn localized(n: usize, vertex: usize, chirality: [Complex64; 3]) -> Result<Self> {
        if vertex >= n {
            return Err(Error::InvalidArgument(format!(
                "vertex {vertex} outside the cycle of size {n}"
            )));
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 3 * n];
        amplitudes[3 * vertex..3 * vertex + 3].copy_from_slice(&chirality);
        WalkState { amplitudes }.normalized()
    }

    /// Equal amplitude on every vertex and chirality.
    pub fn uniform(n: usize) -> Self {
        let a = Complex64::new(1.0 / ((3 * n) as f64).sqrt(), 0.0);
        WalkState {
            amplitudes: vec![a; 3 * n],
        }
    }

    pub fn normalized(self) -> Result<Self> {
        let norm = self.norm();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::InvalidArgument(
                "initial state cannot be normalized".into(),
            ));
        }
        Ok(WalkState {
            amplitudes: self.amplitudes.iter().map(|a| a / norm).collect(),
        })
    }

    pub fn vertices(&self) -> usize {
        self.amplitudes.len() / 3
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn vertex(&self, x: usize) -> [Complex64; 3] {
        [
            self.amplitudes[3 * x],
            self.amplitudes[3 * x + 1],
            self.amplitudes[3 * x + 2],
        ]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes
            .iter()
            .map(Complex64::norm_sqr)
            .sum::<f64>()
            .sqrt()
    }

    /// Largest amplitude difference.
    pub fn distance(&self, other: &Self) -> f64 {
        self.amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Ψ_0, Ψ_1, …, Ψ_steps with Ψ_{t+1} = U_N Ψ_t in floating point.
pub fn evolve(spec: &WalkSpec, initial: &WalkState, steps: usize) -> Result<Vec<WalkState>> {
    let n = spec.n();
    if initial.amplitudes.len() != 3 * n {
        return Err(Error::DimensionMismatch {
            expected: 3 * n,
            found: initial.amplitudes.len(),
        });
    }
    if (initial.norm() - 1.0).abs() > NORM_TOLERANCE {
        return Err(Error::InvalidArgument(format!(
            "initial state has norm {} (expected 1)",
            initial.norm()
        )));
    }
    let coin = spec.routed_coin();
    let c: Matrix3<Complex64> = Matrix3::from_fn(|r, col| coin.get(r, col).eval());

    let mut out = Vec::with_capacity(steps + 1);
    out.push(initial.clone());
    let mut cur = initial.amplitudes.clone();
    for _ in 0..steps {
        let mut next = vec![Complex64::new(0.0, 0.0); 3 * n];
        for x in 0..n {
            let right = (x + 1) % n;
            let left = (x + n - 1) % n;
            for col in 0..3 {
                next[3 * x] += c[(0, col)] * cur[3 * right + col];
                next[3 * x + 1] += c[(1, col)] * cur[3 * x + col];
                next[3 * x + 2] += c[(2, col)] * cur[3 * left + col];
            }
        }
        cur = next;
        out.push(WalkState {
            amplitudes: cur.clone(),
        });
    }
    Ok(out)
}

/// Ψ̂(k) = Σ_x e^{−2πikx/N} Ψ(x), k = 0..N−1 (no normalization).
pub fn fourier_transform(state: &WalkState, n: usize) -> Result<Vec<[Complex64; 3]>> {
    if state.amplitudes.len() != 3 * n {
        return Err(Error::DimensionMismatch {
            expected: 3 * n,
            found: state.amplitudes.len(),
        });
    }
    Ok((0..n)
        .map(|k| {
            let mut acc = [Complex64::new(0.0, 0.0); 3];
            for x in 0..n {
                let w = Complex64::from_polar(1.0, -2.0 * PI * ((k * x) % n) as f64 / n as f64);
                for (a, v) in acc.iter_mut().zip(state.vertex(x)) {
                    *a += w * v;
                }
            }
            acc
        })
        .collect())
}

/// Inverse of [`fourier_transform`]: Ψ(x) = (1/N) Σ_k e^{2πikx/N} Ψ̂(k).
pub fn inverse_fourier_transform(hat: &[[Complex64; 3]]) -> WalkState {
    let n = hat.len();
    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 3 * n];
    for x in 0..n {
        for (k, h) in hat.iter().enumerate() {
            let w = Complex64::from_polar(1.0, 2.0 * PI * ((k * x) % n) as f64 / n as f64);
            for j in 0..3 {
                amplitudes[3 * x + j] += w * h[j] / n as f64;
            }
        }
    }
    WalkState { amplitudes }
}

/// Writes `t,vertex,p_left,p_stay,p_right,total` rows; `total` is the
/// probability summed over the whole cycle at time t.
pub fn write_probability_csv<W: Write>(mut out: W, states: &[WalkState]) -> std::io::Result<()> {
    writeln!(out, "t,vertex,p_left,p_stay,p_right,total")?;
    for (t, s) in states.iter().enumerate() {
        let total = s.norm().powi(2);
        for x in 0..s.vertices() {
            let [l, m, r] = s.vertex(x);
            writeln!(
                out,
                "{t},{x},{:.15e},{:.15e},{:.15e},{:.15e}",
                l.norm_sqr(),
                m.norm_sqr(),
                r.norm_sqr(),
                total
            )?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::coin::{fourier_coin, grover_coin};
    use crate::walk::operator::{build_blocks, build_full, ShiftType};
    use nalgebra::DVector;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pseudo_random_state(n: usize, seed: u64) -> WalkState {
        let mut x = seed;
        let mut next = || {
            x = x
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            ((x >> 11) as f64 / (1u64 << 53) as f64) - 0.5
        };
        let amps = (0..3 * n).map(|_| c(next(), next())).collect();
        WalkState::new(amps).unwrap().normalized().unwrap()
    }

    #[test]
    fn zero_steps_returns_initial() {
        let s = WalkSpec::new(4, grover_coin(), ShiftType::Moving).unwrap();
        let init = WalkState::uniform(4);
        assert_eq!(evolve(&s, &init, 0).unwrap(), vec![init]);
    }

    #[test]
    fn rejects_wrong_length_and_norm() {
        let s = WalkSpec::new(4, grover_coin(), ShiftType::Moving).unwrap();
        assert!(matches!(
            evolve(&s, &WalkState::uniform(3), 2),
            Err(Error::DimensionMismatch {
                expected: 12,
                found: 9
            })
        ));
        let raw = WalkState::new(vec![c(1.0, 0.0); 12]).unwrap();
        assert!(evolve(&s, &raw, 1).is_err());
        assert!(WalkState::localized(4, 1, [c(0.0, 0.0); 3]).is_err());
    }

    #[test]
    fn matches_dense_operator_and_conserves_norm() {
        for shift in [ShiftType::Moving, ShiftType::FlipFlop] {
            for n in [2, 3, 5] {
                let s = WalkSpec::new(n, fourier_coin(), shift).unwrap();
                let u = build_full(&s).unwrap().eval();
                let init = pseudo_random_state(n, n as u64 + 7);
                let states = evolve(&s, &init, 10).unwrap();
                let mut v = DVector::from_vec(init.amplitudes().to_vec());
                for st in &states[1..] {
                    v = &u * v;
                    let diff = st
                        .amplitudes()
                        .iter()
                        .zip(v.iter())
                        .map(|(a, b)| (a - b).norm())
                        .fold(0.0, f64::max);
                    assert!(diff < 1e-12);
                }
                for w in states.windows(2) {
                    assert!((w[0].norm() - w[1].norm()).abs() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn grover_n3_returns_after_six_steps() {
        let s = WalkSpec::new(3, grover_coin(), ShiftType::Moving).unwrap();
        for seed in 0..5 {
            let init = pseudo_random_state(3, seed);
            let states = evolve(&s, &init, 6).unwrap();
            assert!(states[6].distance(&init) < 1e-8);
        }
    }

    #[test]
    fn fourier_n3_returns_after_twelve_steps() {
        let s = WalkSpec::new(3, fourier_coin(), ShiftType::Moving).unwrap();
        for seed in 0..5 {
            let init = pseudo_random_state(3, seed);
            let states = evolve(&s, &init, 12).unwrap();
            assert!(states[12].distance(&init) < 1e-8);
        }
    }

    #[test]
    fn transform_examples() {
        let v = [c(1.0, 0.0), c(0.0, 2.0), c(-1.0, 1.0)];
        let n = 5;
        let uniform = WalkState::new(v.iter().cycle().take(3 * n).copied().collect()).unwrap();
        let hat = fourier_transform(&uniform, n).unwrap();
        for j in 0..3 {
            assert!((hat[0][j] - v[j] * n as f64).norm() < 1e-12);
        }
        for h in &hat[1..] {
            assert!(h.iter().all(|a| a.norm() < 1e-12));
        }
        let neg: Vec<Complex64> = v.iter().copied().chain(v.iter().map(|a| -a)).collect();
        let hat = fourier_transform(&WalkState::new(neg).unwrap(), 2).unwrap();
        for j in 0..3 {
            assert!(hat[0][j].norm() < 1e-12);
            assert!((hat[1][j] - 2.0 * v[j]).norm() < 1e-12);
        }
    }

    #[test]
    fn transform_round_trip() {
        for n in 2..9 {
            let s = pseudo_random_state(n, 99 + n as u64);
            let back = inverse_fourier_transform(&fourier_transform(&s, n).unwrap());
            assert!(back.distance(&s) < 1e-10);
        }
    }

    #[test]
    fn fourier_modes_evolve_under_blocks() {
        for shift in [ShiftType::Moving, ShiftType::FlipFlop] {
            let n = 5;
            let s = WalkSpec::new(n, grover_coin(), shift).unwrap();
            let blocks: Vec<_> = build_blocks(&s).unwrap().iter().map(|b| b.eval()).collect();
            let init = pseudo_random_state(n, 3);
            let states = evolve(&s, &init, 4).unwrap();
            let hat0 = fourier_transform(&init, n).unwrap();
            let hat4 = fourier_transform(&states[4], n).unwrap();
            for k in 0..n {
                let mut v = nalgebra::DVector::from_row_slice(&hat0[k]);
                for _ in 0..4 {
                    v = &blocks[k] * v;
                }
                for j in 0..3 {
                    assert!((v[j] - hat4[k][j]).norm() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn csv_rows() {
        let s = WalkSpec::new(3, grover_coin(), ShiftType::Moving).unwrap();
        let init = WalkState::localized(3, 0, [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)]).unwrap();
        let states = evolve(&s, &init, 1).unwrap();
        let mut buf = Vec::new();
        write_probability_csv(&mut buf, &states).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "t,vertex,p_left,p_stay,p_right,total");
        assert_eq!(lines.len(), 1 + 2 * 3);
        assert!(lines[2].starts_with("0,1,0.0"));
    }
}
