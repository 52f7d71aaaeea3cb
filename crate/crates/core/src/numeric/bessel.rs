/// Below this argument magnitude the power series is summed directly;
/// above it Miller's normalised downward recurrence is used.
pub const BESSEL_SERIES_LIMIT: f64 = 12.0;

/// Bessel function of the first kind `J_m(x)` for integer order `m ≥ 0`.
pub fn bessel_j(m: u32, x: f64) -> f64 {
    if x < 0.0 {
        let v = bessel_j(m, -x);
        return if m.is_multiple_of(2) { v } else { -v };
    }
    if x == 0.0 {
        return if m == 0 { 1.0 } else { 0.0 };
    }
    if x <= BESSEL_SERIES_LIMIT {
        series(m, x)
    } else {
        miller(m, x)
    }
}

fn series(m: u32, x: f64) -> f64 {
    let half = 0.5 * x;
    let mut term = 1.0;
    for j in 1..=m {
        term *= half / j as f64;
    }
    let mut sum = term;
    let q = half * half;
    let mut k = 0u32;
    loop {
        k += 1;
        term *= -q / (k as f64 * (k + m) as f64);
        sum += term;
        if term.abs() <= 1e-17 * sum.abs().max(1e-300) && k as f64 > half {
            break;
        }
        if k > 500 {
            break;
        }
    }
    sum
}

fn miller(m: u32, x: f64) -> f64 {
    let top = (m as f64).max(x);
    let mut n = (top + 20.0 + (40.0 * top).sqrt()) as usize;
    n += n % 2;
    let mut next = 0.0_f64;
    let mut cur = 1e-30_f64;
    let mut wanted = 0.0;
    let mut norm = 0.0;
    for k in (1..=n).rev() {
        let prev = 2.0 * k as f64 / x * cur - next;
        next = cur;
        cur = prev;
        if k - 1 == m as usize {
            wanted = cur;
        }
        if (k - 1) % 2 == 0 && k - 1 > 0 {
            norm += 2.0 * cur;
        }
        if cur.abs() > 1e250 {
            cur *= 1e-250;
            next *= 1e-250;
            wanted *= 1e-250;
            norm *= 1e-250;
        }
    }
    norm += cur;
    wanted / norm
}
