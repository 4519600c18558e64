#![allow(dead_code)]
//! Floating-point reference computations shared by the integration tests. They rebuild
//! the half-spaces from their sign patterns and never call the exact enumerator.

pub const P_SIGNS: [[f64; 4]; 8] = [
    [1.0, 1.0, 1.0, 1.0],
    [1.0, -1.0, 1.0, -1.0],
    [1.0, -1.0, -1.0, 1.0],
    [1.0, 1.0, -1.0, -1.0],
    [-1.0, 1.0, -1.0, 1.0],
    [-1.0, 1.0, 1.0, -1.0],
    [-1.0, -1.0, 1.0, 1.0],
    [-1.0, -1.0, -1.0, -1.0],
];

/// Rescaled half-spaces as `(label, covector)` with the form `diag(−1,1,1,1,t|t|)`.
pub fn rescaled_system(t: f64) -> Vec<(String, [f64; 5])> {
    let r2 = 2f64.sqrt();
    let mut out = Vec::new();
    for (i, s) in P_SIGNS.iter().enumerate() {
        out.push((format!("p{i}"), [-r2, s[0], s[1], s[2], s[3]]));
    }
    for (i, s) in P_SIGNS.iter().enumerate() {
        // The m-planes carry the opposite last sign, scaled by t|t|.
        out.push((format!("m{i}"), [-r2, s[0], s[1], s[2], -s[3] * t * t.abs()]));
    }
    for (l, k, sg) in [("A", 1, 1.0), ("B", 2, 1.0), ("C", 3, 1.0), ("D", 3, -1.0), ("E", 2, -1.0), ("F", 1, -1.0)] {
        let mut c = [-1.0, 0.0, 0.0, 0.0, 0.0];
        c[k] = sg * r2;
        out.push((l.to_string(), c));
    }
    out
}

fn solve(mut m: Vec<[f64; 6]>) -> Option<[f64; 5]> {
    // Null vector of a 4×5 system, via elimination with x₀ = 1.
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.iter_mut().map(|r| vec![r[1], r[2], r[3], r[4], -r[0]]).collect();
    for col in 0..4 {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-9 {
            return None;
        }
        a.swap(col, piv);
        for r in 0..n {
            if r != col {
                let f = a[r][col] / a[col][col];
                for c in col..5 {
                    a[r][c] -= f * a[col][c];
                }
            }
        }
    }
    let mut x = [1.0, 0.0, 0.0, 0.0, 0.0];
    for i in 0..4 {
        x[i + 1] = a[i][4] / a[i][i];
    }
    Some(x)
}

/// Every point cut out by four of the hyperplanes that satisfies all half-spaces, with
/// its incidence set and `q_t` value.
pub fn brute_vertices(sys: &[(String, [f64; 5])], s: f64) -> Vec<(Vec<String>, [f64; 5], f64)> {
    let n = sys.len();
    let mut found: Vec<(Vec<String>, [f64; 5], f64)> = Vec::new();
    let eval = |c: &[f64; 5], x: &[f64; 5]| c.iter().zip(x).map(|(a, b)| a * b).sum::<f64>();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let rows = [a, b, c, d].map(|i| {
                        let v = sys[i].1;
                        [v[0], v[1], v[2], v[3], v[4], 0.0]
                    });
                    let Some(x) = solve(rows.to_vec()) else { continue };
                    if sys.iter().any(|(_, cv)| eval(cv, &x) > 1e-7) {
                        continue;
                    }
                    if found.iter().any(|(_, y, _)| y.iter().zip(&x).all(|(p, q)| (p - q).abs() < 1e-7)) {
                        continue;
                    }
                    let inc = sys.iter().filter(|(_, cv)| eval(cv, &x).abs() < 1e-7).map(|(l, _)| l.clone()).collect();
                    let q = -1.0 + x[1] * x[1] + x[2] * x[2] + x[3] * x[3] + s * x[4] * x[4];
                    found.push((inc, x, q));
                }
            }
        }
    }
    found
}
