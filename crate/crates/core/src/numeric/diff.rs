/// Central finite difference of `f` at `x` along `direction`.
///
/// `order` 1 gives the directional derivative, `order` 2 the second
/// directional derivative. Any other order is treated as 2.
pub fn finite_diff(
    f: impl Fn(&[f64]) -> f64,
    x: &[f64],
    direction: &[f64],
    order: u8,
    h: f64,
) -> f64 {
    let shifted = |s: f64| -> Vec<f64> {
        x.iter()
            .zip(direction)
            .map(|(xi, di)| xi + s * di)
            .collect()
    };
    let fp = f(&shifted(h));
    let fm = f(&shifted(-h));
    if order == 1 {
        (fp - fm) / (2.0 * h)
    } else {
        (fp - 2.0 * f(x) + fm) / (h * h)
    }
}
