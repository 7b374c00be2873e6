use cyclowalk::{build_full, fourier_coin, grover_coin, ShiftType, WalkSpec};

pub fn all_specs(ns: impl IntoIterator<Item = usize> + Clone) -> Vec<(String, WalkSpec)> {
    let mut out = Vec::new();
    for (name, coin) in [("grover", grover_coin()), ("fourier", fourier_coin())] {
        for shift in [ShiftType::Moving, ShiftType::FlipFlop] {
            for n in ns.clone() {
                let spec = WalkSpec::new(n, coin.clone(), shift).expect("n >= 2");
                out.push((format!("{name} {shift} N={n}"), spec));
            }
        }
    }
    out
}

/// Smallest t ≤ t_max with U_N^t = I by powering the full 3N×3N matrix.
pub fn brute_force_period(spec: &WalkSpec, t_max: u64) -> Option<u64> {
    let u = build_full(spec).expect("level within cap");
    let mut power = u.clone();
    for t in 1..=t_max {
        if power.is_identity() {
            return Some(t);
        }
        power = power.mul(&u);
    }
    None
}
