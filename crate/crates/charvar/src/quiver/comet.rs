use std::fmt;

use serde::Serialize;

use crate::partitions::{MultiType, Partition, TypeT};

/// Star-shaped quiver with `g` loops at the central node and one path per
/// puncture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CometQuiver {
    pub g: u32,
    /// Number of nodes on each leg.
    pub legs: Vec<usize>,
}

/// Dimension vector: central value, then each leg outward.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimVector {
    pub central: i64,
    pub legs: Vec<Vec<i64>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RootKind {
    NotRoot,
    Real,
    /// In the fundamental set without any reflection.
    ImaginaryFundamental,
    /// Reflected into the fundamental set.
    ImaginaryReflected,
}

impl RootKind {
    pub fn is_root(self) -> bool {
        self != RootKind::NotRoot
    }
}

impl fmt::Display for RootKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RootKind::NotRoot => "not a root",
            RootKind::Real => "real root",
            RootKind::ImaginaryFundamental => "imaginary root (fundamental)",
            RootKind::ImaginaryReflected => "imaginary root (reflected)",
        })
    }
}

/// Column lengths of the concatenated diagrams of a type, in its canonical
/// entry order.  Entries of degree `d` contribute their columns `d` times.
pub fn type_columns(t: &TypeT) -> Vec<u32> {
    t.entries()
        .iter()
        .flat_map(|(d, l)| {
            let cols = l.dual().parts().to_vec();
            std::iter::repeat_n(cols, *d as usize).flatten()
        })
        .collect()
}

/// Quiver and dimension vector of a multi-type; legs stop before the first
/// zero coordinate.
pub fn build_quiver(omega: &MultiType, g: u32) -> (CometQuiver, DimVector) {
    let n = omega.size() as i64;
    let mut legs = Vec::new();
    let mut values = Vec::new();
    for t in omega.types() {
        let mut leg = Vec::new();
        let mut v = n;
        for c in type_columns(t) {
            v -= c as i64;
            if v <= 0 {
                break;
            }
            leg.push(v);
        }
        legs.push(leg.len());
        values.push(leg);
    }
    (
        CometQuiver { g, legs },
        DimVector {
            central: n,
            legs: values,
        },
    )
}

/// Flat node indexing: node 0 is central, then legs in order.
struct Flat {
    adj: Vec<Vec<usize>>,
    loops: Vec<i64>,
}

impl Flat {
    fn new(q: &CometQuiver) -> Self {
        let total = 1 + q.legs.iter().sum::<usize>();
        let mut adj = vec![Vec::new(); total];
        let mut loops = vec![0; total];
        loops[0] = q.g as i64;
        let mut next = 1;
        for &len in &q.legs {
            let mut prev = 0;
            for _ in 0..len {
                adj[prev].push(next);
                adj[next].push(prev);
                prev = next;
                next += 1;
            }
        }
        Flat { adj, loops }
    }

    /// `(v, e_i) = (2 − 2·loops)vᵢ − Σ_{j adjacent} v_j`.
    fn pair_simple(&self, v: &[i64], i: usize) -> i64 {
        (2 - 2 * self.loops[i]) * v[i] - self.adj[i].iter().map(|&j| v[j]).sum::<i64>()
    }

    fn form(&self, v: &[i64]) -> i64 {
        (0..v.len()).map(|i| v[i] * self.pair_simple(v, i)).sum()
    }

    fn support_connected(&self, v: &[i64]) -> bool {
        let Some(start) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let mut seen = vec![false; v.len()];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(i) = stack.pop() {
            for &j in &self.adj[i] {
                if v[j] != 0 && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        v.iter().zip(&seen).all(|(&x, &s)| x == 0 || s)
    }
}

fn flatten(v: &DimVector) -> Vec<i64> {
    std::iter::once(v.central)
        .chain(v.legs.iter().flatten().copied())
        .collect()
}

/// `(v, v)` for the symmetric form with `(eᵢ, eᵢ) = 2 − 2·loops`.
pub fn tits_form(q: &CometQuiver, v: &DimVector) -> i64 {
    Flat::new(q).form(&flatten(v))
}

/// Kac's reduction: reflect at loop-free nodes while `(v, eᵢ) > 0`.
pub fn root_test(q: &CometQuiver, v: &DimVector) -> RootKind {
    let f = Flat::new(q);
    let mut x = flatten(v);
    if x.iter().any(|&a| a < 0) || x.iter().all(|&a| a == 0) {
        return RootKind::NotRoot;
    }
    let mut reflected = false;
    loop {
        let nonzero: Vec<usize> = (0..x.len()).filter(|&i| x[i] != 0).collect();
        if nonzero.len() == 1 && x[nonzero[0]] == 1 && f.loops[nonzero[0]] == 0 {
            return RootKind::Real;
        }
        let Some(i) = (0..x.len()).find(|&i| f.loops[i] == 0 && f.pair_simple(&x, i) > 0) else {
            break;
        };
        x[i] -= f.pair_simple(&x, i);
        reflected = true;
        if x[i] < 0 {
            return RootKind::NotRoot;
        }
    }
    let fundamental = f.support_connected(&x) && (0..x.len()).all(|i| f.pair_simple(&x, i) <= 0);
    match (fundamental, reflected) {
        (false, _) => RootKind::NotRoot,
        (true, false) => RootKind::ImaginaryFundamental,
        (true, true) => RootKind::ImaginaryReflected,
    }
}

/// `dim C = n² − Σ_{(d,λ)} d Σⱼ (λ′ⱼ)²`.
pub fn class_dimension(t: &TypeT) -> i64 {
    let n = t.size() as i64;
    let cent: i64 = t
        .entries()
        .iter()
        .map(|(d, l)| *d as i64 * l.dual().parts().iter().map(|&c| (c as i64).pow(2)).sum::<i64>())
        .sum();
    n * n - cent
}

/// `d_C = 2gn² − 2n² + 2 + Σ dim Cᵢ`.
pub fn dimension_dc(omega: &MultiType, g: u32) -> i64 {
    let n = omega.size() as i64;
    2 * g as i64 * n * n - 2 * n * n + 2 + omega.types().iter().map(class_dimension).sum::<i64>()
}

/// `d_μ = (2g+k−2)|μ|² + 2 − Σ (nⁱⱼ)²` with `nⁱⱼ` the dual parts of `μⁱ`.
pub fn dimension_unipotent(mu: &[Partition], g: u32) -> i64 {
    let n = mu[0].size() as i64;
    let k = mu.len() as i64;
    let sq: i64 = mu
        .iter()
        .flat_map(|m| m.dual().parts().to_vec())
        .map(|c| (c as i64).pow(2))
        .sum();
    (2 * g as i64 + k - 2) * n * n + 2 - sq
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parse_multitype;

    #[test]
    fn affine_d4() {
        let om = parse_multitype("[1][1];[1][1];[1][1];[1][1]").unwrap();
        let (q, v) = build_quiver(&om, 0);
        assert_eq!(q.legs, vec![1; 4]);
        assert_eq!(v.central, 2);
        assert_eq!(v.legs, vec![vec![1]; 4]);
        assert_eq!(root_test(&q, &v), RootKind::ImaginaryFundamental);
        assert_eq!(tits_form(&q, &v), 0);
        assert_eq!(dimension_dc(&om, 0), 2);
    }

    #[test]
    fn finite_d4() {
        let om = parse_multitype("[1][1];[1][1];[1][1]").unwrap();
        let (q, v) = build_quiver(&om, 0);
        assert_eq!(root_test(&q, &v), RootKind::Real);
    }

    #[test]
    fn regular_class_leg() {
        let om = parse_multitype("[4]").unwrap();
        let (_, v) = build_quiver(&om, 0);
        assert_eq!(v.legs, vec![vec![3, 2, 1]]);
        let om = parse_multitype("[1][1][1][1]").unwrap();
        let (_, v) = build_quiver(&om, 0);
        assert_eq!(v.legs, vec![vec![3, 2, 1]]);
    }

    #[test]
    fn two_two_one_one() {
        let om = parse_multitype("[2,2][1,1]").unwrap();
        let (_, v) = build_quiver(&om, 0);
        assert_eq!(v.legs, vec![vec![4, 2]]);
    }

    #[test]
    fn simple_roots_and_non_roots() {
        let q = CometQuiver { g: 0, legs: vec![1, 1] };
        let leg_simple = DimVector {
            central: 0,
            legs: vec![vec![1], vec![0]],
        };
        assert_eq!(root_test(&q, &leg_simple), RootKind::Real);
        let bad = DimVector {
            central: 1,
            legs: vec![vec![2], vec![0]],
        };
        assert_eq!(root_test(&q, &bad), RootKind::NotRoot);
    }

    #[test]
    fn genus_one_is_imaginary() {
        let om = parse_multitype("[1]").unwrap();
        let (q, v) = build_quiver(&om, 1);
        assert!(matches!(root_test(&q, &v), RootKind::ImaginaryFundamental));
        assert_eq!(dimension_dc(&om, 1), 2);
    }

    #[test]
    fn central_tuple_dimension() {
        for n in 1..=5u32 {
            let mu = vec![Partition::column(n); 3];
            assert_eq!(dimension_unipotent(&mu, 2), 2 * n as i64 * n as i64 + 2);
        }
    }
}
