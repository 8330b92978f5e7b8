//! Golden-section search and its nested 2-D form for concave/convex objectives.

const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Maximizes a unimodal `f` on `[a, b]` until the bracket is shorter than `tol`.
pub fn golden_max<F: FnMut(f64) -> f64>(mut f: F, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if b - a <= tol {
            break;
        }
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    if fc >= fd {
        (c, fc)
    } else {
        (d, fd)
    }
}

/// Maximizes a concave `f(x, y)` over a box; returns the best point and value.
/// For a 1-Lipschitz objective the returned value is within `2 tol` of the optimum.
pub fn nested_max<F: Fn(f64, f64) -> f64>(f: F, xr: (f64, f64), yr: (f64, f64), tol: f64) -> ([f64; 2], f64) {
    let inner = |x: f64| golden_max(|y| f(x, y), yr.0, yr.1, tol);
    let (x, _) = golden_max(|x| inner(x).1, xr.0, xr.1, tol);
    let (y, v) = inner(x);
    ([x, y], v)
}

/// Minimizes a convex `f(x, y)` over a box.
pub fn nested_min<F: Fn(f64, f64) -> f64>(f: F, xr: (f64, f64), yr: (f64, f64), tol: f64) -> ([f64; 2], f64) {
    let (p, v) = nested_max(|x, y| -f(x, y), xr, yr, tol);
    (p, -v)
}
