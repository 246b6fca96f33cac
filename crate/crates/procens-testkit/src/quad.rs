//! Adaptive Gauss-Kronrod quadrature (21-point rule, recursive bisection).
//!
//! Node and weight constants are the QUADPACK dqk21 values. Endpoints are
//! never evaluated, so integrable endpoint singularities (log-type) are
//! handled by subdivision alone.

/// Kronrod abscissae on [0, 1] (half rule, symmetric).
const XGK: [f64; 11] = [
    0.995657163025808080735527280689003,
    0.973906528517171720077964012084452,
    0.930157491355708226001207180059508,
    0.865063366688984510732096688423493,
    0.780817726586416897063717578345042,
    0.679409568299024406234327365114874,
    0.562757134668604683339000099272694,
    0.433395394129247190799265943165784,
    0.294392862701460198131126603103866,
    0.148874338981631210884826001129720,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 11] = [
    0.011694638867371874278064396062192,
    0.032558162307964727478818972459390,
    0.054755896574351996031381300244580,
    0.075039674810919952767043140916190,
    0.093125454583697605535065465083366,
    0.109387158802297641899210590325805,
    0.123491976262065851077958109831074,
    0.134709217311473325928054001771707,
    0.142775938577060080797094273138717,
    0.147739104901338491374841515972068,
    0.149445554002916905664936468389821,
];

const WG: [f64; 5] = [
    0.066671344308688137593568809893332,
    0.149451349150580593145776339657697,
    0.219086362515982043995534934228163,
    0.269266719309996355091226921569469,
    0.295524224714752870173892994651338,
];

fn gk21<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = WGK[10] * fc;
    let mut gauss = 0.0;
    for j in 0..10 {
        let x = half * XGK[j];
        let fsum = f(center - x) + f(center + x);
        kronrod += WGK[j] * fsum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * fsum;
        }
    }
    let integral = kronrod * half;
    let error = ((kronrod - gauss) * half).abs();
    (integral, error)
}

// Depth 40 keeps the smallest panel wide enough that nodes cannot round
// onto a singular endpoint, while the truncated corner of an integrable
// log singularity contributes well under 1e-10.
const MAX_DEPTH: u32 = 40;

fn adaptive<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, floor: f64, depth: u32) -> f64 {
    let (integral, error) = gk21(f, a, b);
    if depth >= MAX_DEPTH {
        return integral;
    }
    if error.is_finite() && error <= tol.max(floor * (b - a)) {
        return integral;
    }
    let mid = 0.5 * (a + b);
    adaptive(f, a, mid, tol / 2.0, floor, depth + 1)
        + adaptive(f, mid, b, tol / 2.0, floor, depth + 1)
}

/// Integral of `f` over the finite interval `[a, b]` to absolute
/// tolerance roughly `tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    adaptive(&f, a, b, tol, 0.0, 0)
}

/// [`integrate`] with a per-unit-width error floor below which panels are
/// accepted as-is. Needed for integrands whose evaluation noise (for
/// cancelling mixtures, about 1e-16 times the sum of term magnitudes) sits
/// above the requested tolerance: without a floor the subdivision chases
/// noise it can never beat.
pub fn integrate_with_floor<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64, floor: f64) -> f64 {
    adaptive(&f, a, b, tol, floor, 0)
}

/// Integral of `f` over `[a, infinity)` via `z = a + (1 - t)/t`.
pub fn integrate_to_inf<F: Fn(f64) -> f64>(f: F, a: f64, tol: f64) -> f64 {
    integrate(
        move |t| {
            let z = a + (1.0 - t) / t;
            f(z) / (t * t)
        },
        0.0,
        1.0,
        tol,
    )
}

/// [`integrate_to_inf`] with the noise floor of [`integrate_with_floor`].
pub fn integrate_to_inf_with_floor<F: Fn(f64) -> f64>(f: F, a: f64, tol: f64, floor: f64) -> f64 {
    integrate_with_floor(
        move |t| {
            let z = a + (1.0 - t) / t;
            f(z) / (t * t)
        },
        0.0,
        1.0,
        tol,
        floor,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        let v = integrate(|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1e-12);
        assert!((v - 16.0).abs() < 1e-10);
    }

    #[test]
    fn exponential_tail() {
        let v = integrate_to_inf(|z| (-z).exp(), 0.0, 1e-12);
        assert!((v - 1.0).abs() < 1e-10);
    }

    #[test]
    fn log_singularity() {
        // int_0^1 ln x dx = -1
        let v = integrate(|x| x.ln(), 0.0, 1.0, 1e-12);
        assert!((v + 1.0).abs() < 1e-9, "got {v}");
    }
}
