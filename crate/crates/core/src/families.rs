//! Named plane ribbon-graph families and their closed-form polynomials.
//!
//! Edge numbering used by the generators:
//!
//! * `C_n`: edge `i` runs from vertex `i` (end 0) to vertex `i+1 mod n` (end 1).
//! * `P_n`: `n` edges on `n+1` vertices, edge `i` from vertex `i` to `i+1`.
//! * `D_n`: every edge from vertex 0 (end 0) to vertex 1 (end 1).
//! * `Q_n`: apex is vertex 0, path vertices `1..=n`; spokes are edges
//!   `0..n` (apex end 0), path edges `n..2n-1`.
//! * `W_n`: hub is vertex 0, rim vertices `1..=n`; spokes `0..n`, then rim
//!   edges `n..2n` with rim edge `n+i` from rim vertex `i` to `i+1 mod n`.
//! * `N_n`: the cycle `C_{2n}` with edges `0, 2, .., 2n-2` doubled; the
//!   doubles are edges `2n..3n`.
//! * `B_m`: one vertex with `m` twisted loops in the order `0.0 0.1 1.0 1.1 ..`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::map::{Corner, EdgeEnd, RibbonGraph};
use crate::poly::{pow2, IntPolynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("{family}: parameter {value} below the minimum {min}")]
    BadParam {
        family: &'static str,
        value: usize,
        min: usize,
    },
    #[error("{0} is too large for the 64-edge limit")]
    TooLarge(String),
    #[error("no closed-form Euler-genus polynomial for {0}")]
    Unsupported(String),
    #[error("unknown family `{0}`")]
    UnknownKind(String),
    #[error("fan recurrence and closed form disagree at n = {0}")]
    FanMismatch(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Cycle(usize),
    /// Path with the given number of edges.
    Path(usize),
    Dipole(usize),
    BouquetTwisted(usize),
    Necklace(usize),
    FanQ(usize),
    FanF2m2(usize),
    Wheel(usize),
    /// `W_n` with one spoke doubled.
    WheelBar(usize),
    JoinWithBouquet {
        base: Box<FamilySpec>,
        m: usize,
    },
}

/// Family names accepted by [`FamilySpec::from_name`].
pub const FAMILY_NAMES: &[&str] = &[
    "cycle",
    "path",
    "dipole",
    "bouquet_twisted",
    "necklace",
    "fan_q",
    "fan_f2m2",
    "wheel",
    "wheel_bar",
    "join_with_bm",
];

impl FamilySpec {
    /// Builds a spec from a family name and its parameters; `join_with_bm`
    /// means `C_n ∨ B_m`.
    pub fn from_name(name: &str, n: usize, m: Option<usize>) -> Result<FamilySpec, FamilyError> {
        let spec = match name {
            "cycle" => FamilySpec::Cycle(n),
            "path" => FamilySpec::Path(n),
            "dipole" => FamilySpec::Dipole(n),
            "bouquet_twisted" | "bouquet" => FamilySpec::BouquetTwisted(n),
            "necklace" => FamilySpec::Necklace(n),
            "fan_q" | "fan" => FamilySpec::FanQ(n),
            "fan_f2m2" => FamilySpec::FanF2m2(n),
            "wheel" => FamilySpec::Wheel(n),
            "wheel_bar" => FamilySpec::WheelBar(n),
            "join_with_bm" => FamilySpec::JoinWithBouquet {
                base: Box::new(FamilySpec::Cycle(n)),
                m: m.unwrap_or(1),
            },
            other => return Err(FamilyError::UnknownKind(other.to_string())),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Cycle(_) => "cycle",
            FamilySpec::Path(_) => "path",
            FamilySpec::Dipole(_) => "dipole",
            FamilySpec::BouquetTwisted(_) => "bouquet_twisted",
            FamilySpec::Necklace(_) => "necklace",
            FamilySpec::FanQ(_) => "fan_q",
            FamilySpec::FanF2m2(_) => "fan_f2m2",
            FamilySpec::Wheel(_) => "wheel",
            FamilySpec::WheelBar(_) => "wheel_bar",
            FamilySpec::JoinWithBouquet { .. } => "join_with_bm",
        }
    }

    pub fn edge_count(&self) -> usize {
        match self {
            FamilySpec::Cycle(n)
            | FamilySpec::Path(n)
            | FamilySpec::Dipole(n)
            | FamilySpec::BouquetTwisted(n) => *n,
            FamilySpec::Necklace(n) => 3 * n,
            FamilySpec::FanQ(n) => 2 * n - 1,
            FamilySpec::FanF2m2(m) => 2 * m + 5,
            FamilySpec::Wheel(n) => 2 * n,
            FamilySpec::WheelBar(n) => 2 * n + 1,
            FamilySpec::JoinWithBouquet { base, m } => base.edge_count() + m,
        }
    }

    pub fn validate(&self) -> Result<(), FamilyError> {
        let (value, min) = match self {
            FamilySpec::BouquetTwisted(m) => (*m, 0),
            FamilySpec::FanF2m2(m) => (*m, 0),
            FamilySpec::JoinWithBouquet { base, .. } => {
                return base.validate().and_then(|_| self.check_size())
            }
            FamilySpec::Cycle(n)
            | FamilySpec::Path(n)
            | FamilySpec::Dipole(n)
            | FamilySpec::Necklace(n)
            | FamilySpec::FanQ(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::WheelBar(n) => (*n, 1),
        };
        if value < min {
            return Err(FamilyError::BadParam {
                family: self.name(),
                value,
                min,
            });
        }
        self.check_size()
    }

    fn check_size(&self) -> Result<(), FamilyError> {
        if self.edge_count() > crate::map::MAX_SUBSET_WIDTH {
            return Err(FamilyError::TooLarge(self.to_string()));
        }
        Ok(())
    }

    pub fn is_orientable(&self) -> bool {
        match self {
            FamilySpec::BouquetTwisted(m) => *m == 0,
            FamilySpec::JoinWithBouquet { base, m } => *m == 0 && base.is_orientable(),
            _ => true,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Cycle(n) => write!(f, "C_{n}"),
            FamilySpec::Path(n) => write!(f, "P_{n}"),
            FamilySpec::Dipole(n) => write!(f, "D_{n}"),
            FamilySpec::BouquetTwisted(m) => write!(f, "B_{m}"),
            FamilySpec::Necklace(n) => write!(f, "N_{n}"),
            FamilySpec::FanQ(n) => write!(f, "Q_{n}"),
            FamilySpec::FanF2m2(m) => write!(f, "F_(2,{m},2)"),
            FamilySpec::Wheel(n) => write!(f, "W_{n}"),
            FamilySpec::WheelBar(n) => write!(f, "W̄_{n}"),
            FamilySpec::JoinWithBouquet { base, m } => write!(f, "{base} ∨ B_{m}"),
        }
    }
}

fn graph(rotations: Vec<Vec<EdgeEnd>>, twisted: Vec<bool>) -> RibbonGraph {
    RibbonGraph::new(rotations, twisted).expect("family generators emit valid rotation systems")
}

fn end(edge: usize, end: u8) -> EdgeEnd {
    EdgeEnd::new(edge, end)
}

fn cycle(n: usize) -> RibbonGraph {
    let rotations = (0..n)
        .map(|i| vec![end((i + n - 1) % n, 1), end(i, 0)])
        .collect();
    graph(rotations, vec![false; n])
}

fn path(n: usize) -> RibbonGraph {
    let rotations = (0..=n)
        .map(|i| {
            let mut r = Vec::new();
            if i > 0 {
                r.push(end(i - 1, 1));
            }
            if i < n {
                r.push(end(i, 0));
            }
            r
        })
        .collect();
    graph(rotations, vec![false; n])
}

fn dipole(n: usize) -> RibbonGraph {
    let u = (0..n).map(|k| end(k, 0)).collect();
    let w = (0..n).rev().map(|k| end(k, 1)).collect();
    graph(vec![u, w], vec![false; n])
}

fn bouquet(m: usize) -> RibbonGraph {
    let rot = (0..m).flat_map(|k| [end(k, 0), end(k, 1)]).collect();
    graph(vec![rot], vec![true; m])
}

fn fan(n: usize) -> RibbonGraph {
    // path along a line, apex below it
    let path_edge = |i: usize| n + i;
    let mut rotations = vec![(0..n).rev().map(|i| end(i, 0)).collect::<Vec<_>>()];
    for i in 0..n {
        let mut r = Vec::new();
        if i + 1 < n {
            r.push(end(path_edge(i), 0));
        }
        if i > 0 {
            r.push(end(path_edge(i - 1), 1));
        }
        r.push(end(i, 1));
        rotations.push(r);
    }
    graph(rotations, vec![false; 2 * n - 1])
}

fn wheel(n: usize) -> RibbonGraph {
    let rim = |i: usize| n + i;
    let mut rotations = vec![(0..n).map(|i| end(i, 0)).collect::<Vec<_>>()];
    for i in 0..n {
        rotations.push(vec![
            end(rim(i), 0),
            end(i, 1),
            end(rim((i + n - 1) % n), 1),
        ]);
    }
    graph(rotations, vec![false; 2 * n])
}

fn necklace(n: usize) -> RibbonGraph {
    (0..n).fold(cycle(2 * n), |g, i| {
        g.add_parallel_edge(2 * i).expect("edge in range")
    })
}

/// The ribbon graph of a family member.
pub fn generate(spec: &FamilySpec) -> Result<RibbonGraph, FamilyError> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Cycle(n) => cycle(*n),
        FamilySpec::Path(n) => path(*n),
        FamilySpec::Dipole(n) => dipole(*n),
        FamilySpec::BouquetTwisted(m) => bouquet(*m),
        FamilySpec::Necklace(n) => necklace(*n),
        FamilySpec::FanQ(n) => fan(*n),
        FamilySpec::FanF2m2(m) => {
            let q = fan(m + 2);
            let q = q.add_parallel_edge(0).expect("first spoke");
            q.add_parallel_edge(m + 1).expect("last spoke")
        }
        FamilySpec::Wheel(n) => wheel(*n),
        FamilySpec::WheelBar(n) => wheel(*n).add_parallel_edge(0).expect("spoke"),
        FamilySpec::JoinWithBouquet { base, m } => {
            let at = Corner { vertex: 0, gap: 0 };
            generate(base)?
                .join(at, &bouquet(*m), at)
                .expect("vertex 0 exists")
        }
    })
}

/// `2 + (2^n − 2) z`, the polynomial of `C_n` and `D_n`.
pub fn cycle_closed_form(n: usize) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![BigInt::from(2), pow2(n) - 2])
}

/// `2^n z (2 + 2z)^n + (2 − 2z)(1 + 2z)^n`.
pub fn necklace_closed_form(n: usize) -> IntPolynomial {
    let two_plus = IntPolynomial::from_i64s(&[2, 2]);
    let one_plus = IntPolynomial::from_i64s(&[1, 2]);
    let head = IntPolynomial::monomial(pow2(n), 1) * two_plus.pow(n as u32);
    head + IntPolynomial::from_i64s(&[2, -2]) * one_plus.pow(n as u32)
}

/// `Q_1, …, Q_{n_max}` from `Q_n = (4z+1) Q_{n−1} − 4z² Q_{n−2}`.
pub fn fan_sequence(n_max: usize) -> Vec<IntPolynomial> {
    let step = IntPolynomial::from_i64s(&[1, 4]);
    let back = IntPolynomial::from_i64s(&[0, 0, 4]);
    let mut out: Vec<IntPolynomial> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let next = match n {
            1 => IntPolynomial::constant(2),
            2 => IntPolynomial::from_i64s(&[2, 6]),
            _ => &step * &out[n - 2] - &back * &out[n - 3],
        };
        out.push(next);
    }
    out
}

pub fn fan_recurrence(n: usize) -> IntPolynomial {
    assert!(n >= 1, "Q_n needs n >= 1");
    fan_sequence(n).pop().expect("n >= 1")
}

/// `g(n, k) = (−1)^k 2^{2k+1} C(n, k) (1 + 4z)^{n−k} z^{2k}` for `0 ≤ k ≤ n`, else 0.
pub fn fan_g(n: i64, k: i64) -> IntPolynomial {
    if k < 0 || n < 0 || k > n {
        return IntPolynomial::zero();
    }
    let (n, k) = (n as u64, k as u64);
    let mut binom = BigInt::from(1);
    for i in 0..k {
        binom = binom * (n - i) / (i + 1);
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let c = BigInt::from(sign) * pow2(2 * k as usize + 1) * binom;
    let base = IntPolynomial::from_i64s(&[1, 4]).pow((n - k) as u32);
    base.scale(c).shift(2 * k as usize)
}

/// `Σ_{k=0}^{n} g(k, n−1−k) − z g(k, n−2−k)`, the closed form of `Q_n`.
pub fn fan_closed_form(n: usize) -> IntPolynomial {
    let n = n as i64;
    let z = IntPolynomial::z();
    (0..=n)
        .map(|k| fan_g(k, n - 1 - k) - &z * &fan_g(k, n - 2 - k))
        .sum()
}

/// `(W_n, f_n)` from the coupled wheel recurrences, starting at
/// `W_2 = 4z² + 10z + 2` and `f_2 = 2z`. `W_1 = 4` has no `f`.
pub fn wheel_system(n: usize) -> (IntPolynomial, Option<IntPolynomial>) {
    assert!(n >= 1, "W_n needs n >= 1");
    if n == 1 {
        return (IntPolynomial::constant(4), None);
    }
    let q = fan_sequence(n);
    let qn = |i: usize| &q[i - 1];
    let z = IntPolynomial::z();
    let one_minus = IntPolynomial::from_i64s(&[1, -1]);
    let two_minus = IntPolynomial::from_i64s(&[2, -2]);
    let mut w = IntPolynomial::from_i64s(&[2, 10, 4]);
    let mut f = vec![IntPolynomial::from_i64s(&[0, 2])];
    for m in 3..=n {
        let tail: IntPolynomial = (2..m).map(|i| f[i - 2].shift(m - 1 - i)).sum();
        let fm = &z * qn(m - 1) + &one_minus * &tail;
        w = &z * &w + qn(m).clone() + (&z * qn(m - 1)).scale(2) - &two_minus * &fm;
        f.push(fm);
    }
    (w, f.pop())
}

/// `W_n` with a doubled spoke: `Γ_{W_n} + 2z Γ_{Q_n}`.
pub fn wheel_bar_closed_form(n: usize) -> IntPolynomial {
    let (w, _) = wheel_system(n);
    w + fan_recurrence(n).scale(2).shift(1)
}

/// The pdG polynomial from the family's closed form or recurrence.
pub fn closed_form_pdg(spec: &FamilySpec) -> Result<IntPolynomial, FamilyError> {
    spec.validate()?;
    Ok(match spec {
        FamilySpec::Cycle(n) | FamilySpec::Dipole(n) => cycle_closed_form(*n),
        FamilySpec::Path(n) => IntPolynomial::constant(pow2(*n)),
        FamilySpec::Necklace(n) => necklace_closed_form(*n),
        FamilySpec::FanQ(n) => fan_checked(*n)?,
        FamilySpec::FanF2m2(m) => fan_checked(m + 3)?,
        FamilySpec::Wheel(n) => wheel_system(*n).0,
        FamilySpec::WheelBar(n) => wheel_bar_closed_form(*n),
        FamilySpec::BouquetTwisted(_) | FamilySpec::JoinWithBouquet { .. }
            if spec.is_orientable() =>
        {
            closed_form_euler(spec)?
                .unsubstitute_square()
                .expect("orientable Euler polynomial is even")
        }
        FamilySpec::BouquetTwisted(_) | FamilySpec::JoinWithBouquet { .. } => {
            return Err(FamilyError::Unsupported(format!(
                "the pdG polynomial of non-orientable {spec}"
            )))
        }
    })
}

fn fan_checked(n: usize) -> Result<IntPolynomial, FamilyError> {
    let p = fan_recurrence(n);
    if p != fan_closed_form(n) {
        return Err(FamilyError::FanMismatch(n));
    }
    Ok(p)
}

/// The Euler-genus polynomial of twisted bouquets and their joins.
pub fn closed_form_euler(spec: &FamilySpec) -> Result<IntPolynomial, FamilyError> {
    spec.validate()?;
    let bouquet = |m: usize| IntPolynomial::from_i64s(&[0, 2]).pow(m as u32);
    match spec {
        FamilySpec::BouquetTwisted(m) => Ok(bouquet(*m)),
        FamilySpec::JoinWithBouquet { base, m } => {
            let head = match base.as_ref() {
                b @ (FamilySpec::BouquetTwisted(_) | FamilySpec::JoinWithBouquet { .. }) => {
                    closed_form_euler(b)?
                }
                b => closed_form_pdg(b)?.substitute_square(),
            };
            Ok(head * bouquet(*m))
        }
        other => Err(FamilyError::Unsupported(other.to_string())),
    }
}
