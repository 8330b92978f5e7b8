//! Dense vector helpers on `&[f64]` plus a few small linear solves.

use nalgebra::{DMatrix, DVector};

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

/// `a + s * b`
pub fn axpy(a: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

pub fn dist2(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

pub fn dist(a: &[f64], b: &[f64]) -> f64 {
    dist2(a, b).sqrt()
}

pub fn normalized(a: &[f64]) -> Option<Vec<f64>> {
    let n = norm(a);
    (n > 0.0 && n.is_finite()).then(|| scale(a, 1.0 / n))
}

/// Unit vector along coordinate axis `i` of `R^dim`.
pub fn axis(dim: usize, i: usize) -> Vec<f64> {
    let mut e = vec![0.0; dim];
    e[i] = 1.0;
    e
}

/// Orthonormal basis of `span(vectors)` by modified Gram-Schmidt; vectors
/// whose residual falls below `tol` (relative to their length) are dropped.
pub fn orthonormal_basis(vectors: &[Vec<f64>], tol: f64) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for v in vectors {
        let len = norm(v);
        if len == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for b in &basis {
                let c = dot(&w, b);
                w.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let n = norm(&w);
        if n > tol * len.max(1.0) {
            basis.push(scale(&w, 1.0 / n));
        }
    }
    basis
}

/// Solves the square system `m x = rhs`; `None` when numerically singular.
pub fn solve(m: DMatrix<f64>, rhs: DVector<f64>) -> Option<DVector<f64>> {
    let n = m.nrows();
    let scale = m.amax().max(1e-300);
    let lu = m.lu();
    let u = lu.u();
    let min_pivot = (0..n).map(|i| u[(i, i)].abs()).fold(f64::INFINITY, f64::min);
    if n > 0 && min_pivot <= 1e-13 * scale {
        return None;
    }
    lu.solve(&rhs)
}

/// Euclidean projection of `v` onto the probability simplex.
pub fn project_simplex(v: &[f64]) -> Vec<f64> {
    let mut u = v.to_vec();
    u.sort_by(|a, b| b.total_cmp(a));
    let mut cumsum = 0.0;
    let mut theta = 0.0;
    for (j, &uj) in u.iter().enumerate() {
        cumsum += uj;
        let t = (cumsum - 1.0) / (j as f64 + 1.0);
        if uj - t > 0.0 {
            theta = t;
        }
    }
    v.iter().map(|x| (x - theta).max(0.0)).collect()
}

/// Nearest point of `conv(points)` to `target`, with its convex weights.
#[derive(Clone, Debug)]
pub struct HullProjection {
    pub weights: Vec<f64>,
    pub point: Vec<f64>,
    pub distance: f64,
}

/// Wolfe's minimum-norm-point algorithm applied to `points - target`.
pub fn nearest_point_in_hull(points: &[Vec<f64>], target: &[f64]) -> HullProjection {
    let n = points.len();
    assert!(n > 0, "nearest_point_in_hull needs at least one point");
    let shifted: Vec<Vec<f64>> = points.iter().map(|p| sub(p, target)).collect();
    let scale = shifted.iter().map(|p| dot(p, p)).fold(0.0, f64::max).max(1e-300);
    let eps = 1e-14;

    let start = (0..n)
        .min_by(|&a, &b| dot(&shifted[a], &shifted[a]).total_cmp(&dot(&shifted[b], &shifted[b])))
        .unwrap();
    let mut active = vec![start];
    let mut lambda = vec![1.0];
    let mut x = shifted[start].clone();

    let combine = |active: &[usize], w: &[f64]| -> Vec<f64> {
        let mut y = vec![0.0; target.len()];
        for (&i, &wi) in active.iter().zip(w) {
            for (yk, pk) in y.iter_mut().zip(&shifted[i]) {
                *yk += wi * pk;
            }
        }
        y
    };

    for _major in 0..(50 * n + 100) {
        let xx = dot(&x, &x);
        let (j, xj) = (0..n)
            .map(|i| (i, dot(&x, &shifted[i])))
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .unwrap();
        if xx - xj <= eps * scale || active.contains(&j) {
            break;
        }
        active.push(j);
        lambda.push(0.0);
        loop {
            let k = active.len();
            let mut m = DMatrix::zeros(k + 1, k + 1);
            for a in 0..k {
                for b in 0..k {
                    m[(a, b)] = dot(&shifted[active[a]], &shifted[active[b]]);
                }
                m[(a, k)] = 1.0;
                m[(k, a)] = 1.0;
            }
            let mut rhs = DVector::zeros(k + 1);
            rhs[k] = 1.0;
            let mu: Vec<f64> = match solve(m, rhs) {
                Some(sol) => sol.iter().take(k).copied().collect(),
                None => {
                    // affinely dependent active set: drop the newest point
                    active.pop();
                    lambda.pop();
                    break;
                }
            };
            if mu.iter().all(|&v| v > eps) {
                lambda = mu;
                x = combine(&active, &lambda);
                break;
            }
            let mut theta = 1.0f64;
            for (l, m) in lambda.iter().zip(&mu) {
                if *m <= eps {
                    let denom = l - m;
                    if denom > 0.0 {
                        theta = theta.min(l / denom);
                    }
                }
            }
            for (l, m) in lambda.iter_mut().zip(&mu) {
                *l = theta * m + (1.0 - theta) * *l;
            }
            let mut keep_a = Vec::with_capacity(k);
            let mut keep_l = Vec::with_capacity(k);
            for (&i, &l) in active.iter().zip(&lambda) {
                if l > eps {
                    keep_a.push(i);
                    keep_l.push(l);
                }
            }
            if keep_a.is_empty() {
                keep_a.push(active[0]);
                keep_l.push(1.0);
            }
            let total: f64 = keep_l.iter().sum();
            keep_l.iter_mut().for_each(|l| *l /= total);
            active = keep_a;
            lambda = keep_l;
            x = combine(&active, &lambda);
        }
    }

    let mut weights = vec![0.0; n];
    for (&i, &l) in active.iter().zip(&lambda) {
        weights[i] += l;
    }
    let point = add(&x, target);
    HullProjection {
        weights,
        distance: norm(&x),
        point,
    }
}

/// Nonnegative least squares `min |Σ μ_i a_i − b|`, `μ ≥ 0` (Lawson–Hanson).
pub fn nnls(columns: &[Vec<f64>], b: &[f64]) -> Vec<f64> {
    let k = columns.len();
    let mut mu = vec![0.0; k];
    let mut passive = vec![false; k];
    let residual = |mu: &[f64]| {
        let mut r = b.to_vec();
        for (m, a) in mu.iter().zip(columns) {
            r = axpy(&r, -m, a);
        }
        r
    };
    let solve_passive = |passive: &[bool]| -> Vec<f64> {
        let idx: Vec<usize> = (0..k).filter(|&i| passive[i]).collect();
        let m = idx.len();
        let g = DMatrix::from_fn(m, m, |i, j| dot(&columns[idx[i]], &columns[idx[j]]));
        let rhs = DVector::from_fn(m, |i, _| dot(&columns[idx[i]], b));
        let z = g
            .clone()
            .lu()
            .solve(&rhs)
            .or_else(|| g.pseudo_inverse(1e-14).ok().map(|p| p * rhs))
            .unwrap_or_else(|| DVector::zeros(m));
        let mut out = vec![0.0; k];
        for (t, &i) in idx.iter().enumerate() {
            out[i] = z[t];
        }
        out
    };
    let scale = norm(b).max(1e-300);
    for _ in 0..3 * k + 10 {
        let r = residual(&mu);
        let w: Vec<f64> = columns.iter().map(|a| dot(a, &r)).collect();
        let Some((j, wj)) = (0..k)
            .filter(|&i| !passive[i])
            .map(|i| (i, w[i]))
            .max_by(|a, b| a.1.total_cmp(&b.1))
        else {
            break;
        };
        if wj <= 1e-14 * scale {
            break;
        }
        passive[j] = true;
        loop {
            let z = solve_passive(&passive);
            if (0..k).all(|i| !passive[i] || z[i] > 0.0) {
                mu = z;
                break;
            }
            let mut alpha = 1.0f64;
            for i in 0..k {
                if passive[i] && z[i] <= 0.0 {
                    alpha = alpha.min(mu[i] / (mu[i] - z[i]));
                }
            }
            for i in 0..k {
                mu[i] += alpha * (z[i] - mu[i]);
                if passive[i] && mu[i] <= 1e-15 {
                    passive[i] = false;
                    mu[i] = 0.0;
                }
            }
        }
    }
    mu
}
