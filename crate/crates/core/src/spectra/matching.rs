use super::StdEigenvalue;
use crate::error::{QuatError, Result};

/// Exact assignment is used up to this size; larger spectra use a greedy
/// matching, which can only overestimate the distance.
const EXACT_LIMIT: usize = 64;

/// Minimal total distance `sum_i |a_i - b_pi(i)|` over bijections `pi`.
pub fn spectrum_distance(a: &[StdEigenvalue], b: &[StdEigenvalue]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(QuatError::SpectrumSize { left: a.len(), right: b.len() });
    }
    let n = a.len();
    let cost: Vec<Vec<f64>> = a
        .iter()
        .map(|x| b.iter().map(|y| (x.re - y.re).hypot(x.im - y.im)).collect())
        .collect();
    if n <= EXACT_LIMIT {
        Ok(hungarian(&cost))
    } else {
        Ok(greedy(&cost))
    }
}

/// Shortest augmenting path assignment with dual potentials, O(n^3).
fn hungarian(cost: &[Vec<f64>]) -> f64 {
    let n = cost.len();
    if n == 0 {
        return 0.0;
    }
    // 1-based arrays; column 0 is a sentinel.
    let mut u = vec![0.0; n + 1];
    let mut v = vec![0.0; n + 1];
    let mut owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        owner[0] = i;
        let mut j0 = 0;
        let mut minv = vec![f64::INFINITY; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = owner[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[owner[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            owner[j0] = owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    (1..=n).map(|j| cost[owner[j] - 1][j - 1]).sum()
}

fn greedy(cost: &[Vec<f64>]) -> f64 {
    let n = cost.len();
    let mut taken = vec![false; n];
    let mut total = 0.0;
    for row in cost {
        let (j, c) = row
            .iter()
            .enumerate()
            .filter(|(j, _)| !taken[*j])
            .fold((usize::MAX, f64::INFINITY), |acc, (j, &c)| if c < acc.1 { (j, c) } else { acc });
        taken[j] = true;
        total += c;
    }
    total
}
