//! Cohomology tables of the standard bundles on `Q`.
//!
//! Notation: `Σ` spinor bundle, `A` the pullback of `TP³(−1)` under a linear
//! projection `Q → P³` from a point off `Q`, `Φ = TP⁴(−1)|_Q`, `G_P` the
//! cokernel of four linear forms vanishing at a point `P ∈ Q`, and `E_P` the
//! nonsplit extension of `G_P` by `O_Q(1)`.
//!
//! Most tables come from a resolution by line bundles. The one input that is
//! not a dimension count is the rank of multiplication
//! `H⁰(O_Q(s))^k → H⁰(O_Q(s+1))` by `k` linear forms; its cokernel is the
//! degree-`(s+1)` piece of `R/(L₁,…,L_k)` with `R` the coordinate ring of `Q`,
//! which [`FormSystem::quotient_dim`] evaluates.

use std::fmt;

use serde::Serialize;

use crate::bott::{binomial, bott, tangent_coh, BottQuery};
use crate::chow::{self, ChernData};
use crate::error::{Error, Result};
use crate::hrr;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "citation")]
pub enum Provenance {
    Mechanical,
    CitedFact(String),
}

impl Provenance {
    pub fn is_cited(&self) -> bool {
        matches!(self, Provenance::CitedFact(_))
    }

    fn combine(self, other: Provenance) -> Provenance {
        match (self, other) {
            (Provenance::Mechanical, p) | (p, Provenance::Mechanical) => p,
            (Provenance::CitedFact(a), Provenance::CitedFact(b)) if a == b => {
                Provenance::CitedFact(a)
            }
            (Provenance::CitedFact(a), Provenance::CitedFact(b)) => {
                Provenance::CitedFact(format!("{a}; {b}"))
            }
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Mechanical => write!(f, "mechanical"),
            Provenance::CitedFact(c) => write!(f, "cited: {c}"),
        }
    }
}

/// `(h⁰, h¹, h², h³)` with provenance.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CohomologyTable {
    pub h0: u64,
    pub h1: u64,
    pub h2: u64,
    pub h3: u64,
    pub provenance: Provenance,
}

impl CohomologyTable {
    pub fn new(h: [u64; 4], provenance: Provenance) -> Self {
        Self {
            h0: h[0],
            h1: h[1],
            h2: h[2],
            h3: h[3],
            provenance,
        }
    }

    pub fn mechanical(h: [u64; 4]) -> Self {
        Self::new(h, Provenance::Mechanical)
    }

    pub fn cited(h: [u64; 4], citation: &str) -> Self {
        Self::new(h, Provenance::CitedFact(citation.to_string()))
    }

    pub fn values(&self) -> [u64; 4] {
        [self.h0, self.h1, self.h2, self.h3]
    }

    pub fn get(&self, i: usize) -> u64 {
        self.values()[i]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.h0 as i64 - self.h1 as i64 + self.h2 as i64 - self.h3 as i64
    }

    fn sum(self, other: CohomologyTable) -> CohomologyTable {
        let (a, b) = (self.values(), other.values());
        CohomologyTable::new(
            [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]],
            self.provenance.combine(other.provenance),
        )
    }

    fn scaled(&self, k: u64) -> [u64; 4] {
        self.values().map(|h| h * k)
    }
}

impl fmt::Display for CohomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {}) [{}]",
            self.h0, self.h1, self.h2, self.h3, self.provenance
        )
    }
}

/// `h⁰(O_Q(t)) = C(t+4, 4) − C(t+2, 4)`.
pub fn h0_line(t: i64) -> u64 {
    binomial(t + 4, 4) - binomial(t + 2, 4)
}

pub fn coh_line(t: i64) -> CohomologyTable {
    CohomologyTable::mechanical([h0_line(t), 0, 0, h0_line(-3 - t)])
}

/// A system of linear forms on `Q` and the Hilbert function of `R/(L)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormSystem {
    /// The five coordinates: `R/(L) = k`.
    AllCoordinates,
    /// Four forms cutting out a point of `Q`: `R/(L) = k[x]`.
    PointOnQ,
    /// Four forms cutting out a point off `Q`: `R/(L) = k[x]/(x²)`.
    PointOffQ,
}

impl FormSystem {
    pub fn count(self) -> u64 {
        match self {
            FormSystem::AllCoordinates => 5,
            FormSystem::PointOnQ | FormSystem::PointOffQ => 4,
        }
    }

    /// `dim (R/(L))_m`.
    pub fn quotient_dim(self, m: i64) -> u64 {
        let hit = match self {
            FormSystem::AllCoordinates => m == 0,
            FormSystem::PointOnQ => m >= 0,
            FormSystem::PointOffQ => m == 0 || m == 1,
        };
        u64::from(hit)
    }

    /// Rank of `H⁰(O_Q(s))^k → H⁰(O_Q(s+1))`.
    pub fn multiplication_rank(self, s: i64) -> u64 {
        h0_line(s + 1) - self.quotient_dim(s + 1)
    }

    /// `F(t)` for `0 → O_Q(−1) → O_Q^k → F → 0`.
    pub fn cokernel_table(self, t: i64) -> [u64; 4] {
        let k = self.count();
        let s = -3 - t;
        let rank = self.multiplication_rank(s);
        [
            k * h0_line(t) - h0_line(t - 1),
            0,
            h0_line(s + 1) - rank,
            k * h0_line(s) - rank,
        ]
    }

    /// `K(t)` for `0 → K → O_Q^k → O_Q(1) → 0`.
    pub fn kernel_table(self, t: i64) -> [u64; 4] {
        let k = self.count();
        let rank = self.multiplication_rank(t);
        [
            k * h0_line(t) - rank,
            h0_line(t + 1) - rank,
            0,
            k * h0_line(-3 - t) - h0_line(-4 - t),
        ]
    }
}

pub fn coh_spinor(t: i64) -> CohomologyTable {
    let h0 = |s: i64| -> u64 {
        if s < -1 {
            0
        } else {
            let chi = hrr::chi_hrr(&chow::twist(&SPINOR, s));
            u64::try_from(chi.to_integer()).expect("spinor sections are counted by χ")
        }
    };
    CohomologyTable::mechanical([h0(t), 0, 0, h0(-4 - t)])
}

fn bott_sum(twists: &[i64], n: i64, p: i64) -> [u64; 4] {
    let mut out = [0u64; 4];
    for (i, slot) in out.iter_mut().enumerate() {
        for &t in twists {
            *slot += bott(&BottQuery::new(n, p, t, i as i64)).expect("indices in range");
        }
    }
    out
}

/// `h^i(A(t)) = h^i(TP³(t−1)) + h^i(TP³(t−2))`.
pub fn coh_a(t: i64) -> CohomologyTable {
    let mut out = [0u64; 4];
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = tangent_coh(3, t - 1, i as i64).expect("n = 3")
            + tangent_coh(3, t - 2, i as i64).expect("n = 3");
    }
    CohomologyTable::mechanical(out)
}

/// `h^i(A^∨(t)) = h^i(Ω_{P³}(t+1)) + h^i(Ω_{P³}(t))`.
pub fn coh_a_dual(t: i64) -> CohomologyTable {
    CohomologyTable::mechanical(bott_sum(&[t + 1, t], 3, 1))
}

pub fn coh_phi(t: i64) -> CohomologyTable {
    CohomologyTable::mechanical(FormSystem::AllCoordinates.cokernel_table(t))
}

pub fn coh_phi_dual(t: i64) -> CohomologyTable {
    CohomologyTable::mechanical(FormSystem::AllCoordinates.kernel_table(t))
}

pub fn coh_gp(t: i64) -> CohomologyTable {
    CohomologyTable::mechanical(FormSystem::PointOnQ.cokernel_table(t))
}

const EP_CITATION: &str = "E_P is the nonsplit extension of G_P by O_Q(1); the connecting map \
H²(G_P(t)) → H³(O_Q(t+1)) is multiplication by the nonzero extension class, of rank 1 for t ≤ −4";

/// From `0 → O_Q(1) → E_P → G_P → 0`.
///
/// `h¹ = 0` follows from `h¹(O_Q(t+1)) = h¹(G_P(t)) = 0`. The only
/// non-forced map is `H²(G_P(t)) → H³(O_Q(t+1))`, which can be nonzero only
/// for `t ≤ −4`.
pub fn coh_ep(t: i64) -> CohomologyTable {
    let g = coh_gp(t);
    let o = coh_line(t + 1);
    let delta = u64::from(t <= -4);
    let h = [g.h0 + o.h0, 0, g.h2 - delta, o.h3 - delta + g.h3];
    if t <= -4 {
        CohomologyTable::cited(h, EP_CITATION)
    } else {
        CohomologyTable::mechanical(h)
    }
}

pub const SPINOR: ChernData = ChernData::new(2, 1, 1, 0);

/// Symbolic bundle expression.
///
/// `PullbackA(label)` distinguishes projection centres: equal labels mean the
/// same centre, hence isomorphic bundles.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StandardBundle {
    Line(i64),
    Spinor,
    PullbackA(u32),
    Phi,
    GP,
    EP,
    Dual(Box<StandardBundle>),
    Twist(Box<StandardBundle>, i64),
    DirectSum(Vec<StandardBundle>),
}

impl StandardBundle {
    pub fn a() -> Self {
        StandardBundle::PullbackA(0)
    }

    pub fn dual(self) -> Self {
        StandardBundle::Dual(Box::new(self))
    }

    pub fn twist(self, k: i64) -> Self {
        StandardBundle::Twist(Box::new(self), k)
    }

    pub fn sum(parts: Vec<StandardBundle>) -> Self {
        StandardBundle::DirectSum(parts)
    }

    /// Rewrites to a form where `Dual` only wraps `PullbackA`, `Phi`, `GP`
    /// or `EP`, twists are collapsed and pushed outside duals, and direct
    /// sums are flattened.
    pub fn normalize(&self) -> StandardBundle {
        use StandardBundle::*;
        match self {
            Line(_) | Spinor | PullbackA(_) | Phi | GP | EP => self.clone(),
            Twist(b, k) => match b.normalize() {
                Line(t) => Line(t + k),
                Twist(inner, j) if j + k == 0 => *inner,
                Twist(inner, j) => Twist(inner, j + k),
                DirectSum(parts) => {
                    DirectSum(parts.into_iter().map(|p| p.twist(*k).normalize()).collect())
                }
                other if *k == 0 => other,
                other => Twist(Box::new(other), *k),
            },
            Dual(b) => match b.normalize() {
                Line(t) => Line(-t),
                Spinor => Twist(Box::new(Spinor), -1),
                Dual(inner) => *inner,
                Twist(inner, k) => inner.dual().normalize().twist(-k).normalize(),
                DirectSum(parts) => {
                    DirectSum(parts.into_iter().map(|p| p.dual().normalize()).collect())
                }
                other => Dual(Box::new(other)),
            },
            DirectSum(parts) => {
                let mut flat = Vec::new();
                for p in parts {
                    match p.normalize() {
                        DirectSum(inner) => flat.extend(inner),
                        other => flat.push(other),
                    }
                }
                if flat.len() == 1 {
                    flat.pop().expect("one element")
                } else {
                    DirectSum(flat)
                }
            }
        }
    }

    /// Chern data from the defining sequences.
    pub fn chern_data(&self) -> ChernData {
        use StandardBundle::*;
        match self {
            Line(t) => ChernData::line(*t),
            Spinor => SPINOR,
            PullbackA(_) | GP => chow::whitney_third(&ChernData::line(-1), &ChernData::trivial(4))
                .expect("integral quotient"),
            Phi => chow::whitney_third(&ChernData::line(-1), &ChernData::trivial(5))
                .expect("integral quotient"),
            EP => chow::whitney_total(&ChernData::line(1), &GP.chern_data()),
            Dual(b) => chow::dual(&b.chern_data()),
            Twist(b, k) => chow::twist(&b.chern_data(), *k),
            DirectSum(parts) => {
                let data: Vec<ChernData> = parts.iter().map(|p| p.chern_data()).collect();
                chow::direct_sum(&data)
            }
        }
    }

    pub fn rank(&self) -> u32 {
        self.chern_data().rank
    }

    /// Whether the expression names a locally free sheaf.
    pub fn is_locally_free(&self) -> bool {
        use StandardBundle::*;
        match self {
            GP => false,
            Dual(b) | Twist(b, _) => b.is_locally_free(),
            DirectSum(parts) => parts.iter().all(|p| p.is_locally_free()),
            _ => true,
        }
    }
}

impl fmt::Display for StandardBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use StandardBundle::*;
        match self {
            Line(t) => write!(f, "O({t})"),
            Spinor => write!(f, "Σ"),
            PullbackA(0) => write!(f, "A"),
            PullbackA(c) => write!(f, "A[{c}]"),
            Phi => write!(f, "Φ"),
            GP => write!(f, "G_P"),
            EP => write!(f, "E_P"),
            Dual(b) => write!(f, "{b}^∨"),
            Twist(b, k) => write!(f, "{b}({k})"),
            DirectSum(parts) => {
                let names: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", names.join(" ⊕ "))
            }
        }
    }
}

/// `h^i(B(t))` for a catalogue expression.
pub fn coh(b: &StandardBundle, t: i64) -> Result<CohomologyTable> {
    use StandardBundle::*;
    match b.normalize() {
        Line(k) => Ok(coh_line(k + t)),
        Spinor => Ok(coh_spinor(t)),
        PullbackA(_) => Ok(coh_a(t)),
        Phi => Ok(coh_phi(t)),
        GP => Ok(coh_gp(t)),
        EP => Ok(coh_ep(t)),
        Twist(inner, k) => coh(&inner, t + k),
        Dual(inner) => match *inner {
            PullbackA(_) => Ok(coh_a_dual(t)),
            Phi => Ok(coh_phi_dual(t)),
            other => Err(Error::UnsupportedPair(format!(
                "no table for the dual of {other}"
            ))),
        },
        DirectSum(parts) => {
            let mut acc = CohomologyTable::mechanical([0; 4]);
            for p in &parts {
                acc = acc.sum(coh(p, t)?);
            }
            Ok(acc)
        }
    }
}

/// `h^i(B(t)) = h^{3−i}(B^∨(−3−t))` for all `i`.
pub fn serre_dual_check(b: &StandardBundle, t: i64) -> Result<bool> {
    if !b.is_locally_free() {
        return Err(Error::UnsupportedPair(format!("{b} is not locally free")));
    }
    let lhs = coh(b, t)?;
    let rhs = coh(&b.clone().dual(), -3 - t)?;
    Ok((0..4).all(|i| lhs.get(i) == rhs.get(3 - i)))
}

/// Bundles whose tables and duals are both available, used for sweeps.
pub fn serre_catalogue() -> Vec<StandardBundle> {
    use StandardBundle::*;
    vec![
        Line(0),
        Spinor,
        Spinor.dual(),
        StandardBundle::a(),
        StandardBundle::a().dual(),
        Phi,
        Phi.dual(),
        StandardBundle::sum(vec![Spinor, Line(1)]),
        StandardBundle::sum(vec![StandardBundle::a(), Phi.dual().twist(1)]),
    ]
}

/// Tables that need no dual, for χ sweeps.
pub fn chi_catalogue() -> Vec<StandardBundle> {
    let mut all = serre_catalogue();
    all.push(StandardBundle::GP);
    all.push(StandardBundle::EP);
    all
}

/// A named entry of the tensor-pair catalogue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairEntry {
    pub name: &'static str,
    pub left: StandardBundle,
    pub right: StandardBundle,
    pub twist: i64,
}

/// Every supported `(a, b, twist)` with its CLI name.
pub fn pair_catalogue() -> Vec<PairEntry> {
    use StandardBundle::*;
    let a = StandardBundle::a;
    let entry = |name, left, right, twist| PairEntry {
        name,
        left,
        right,
        twist,
    };
    vec![
        entry("phidual-phi", Phi.dual(), Phi, 0),
        entry("Adual-A", a().dual(), a(), 0),
        entry("Adual-A-distinct", a().dual(), PullbackA(1), 0),
        entry("phi-Adual", Phi, a().dual(), 0),
        entry("A-phidual", a(), Phi.dual(), 0),
        entry("spinor-Adual", Spinor, a().dual(), 0),
        entry("spinor-phidual", Spinor, Phi.dual(), 0),
        entry("spinor-phi", Spinor, Phi, -4),
    ]
}

pub fn pair_by_name(name: &str) -> Option<PairEntry> {
    pair_catalogue().into_iter().find(|e| e.name == name)
}

const CITE_STABLE_HOM: &str =
    "Hom between stable bundles: Hom(A_O, A_P) = 0 unless A_O ≅ A_P, which holds iff the centres agree; End(A) = k";
const CITE_A_TO_PHI: &str =
    "Hom(A, Φ) = 0: A and Φ are stable with slope(A) = 1/3 > slope(Φ) = 1/4";
const CITE_A_TO_SPINOR: &str =
    "h⁰(Σ ⊗ A_P^∨) = Hom(A_P, Σ) = 0, by restricting a map to a general conic";

fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::UnsupportedPair(format!(
            "connecting map not forced: {what}"
        )))
    }
}

/// `0 → X → M → N → 0` with `h^i(M)`, `h^i(N)` known and the `H⁰` map of
/// the given rank; every other map must be forced by vanishing.
fn kernel_les(m: [u64; 4], n: [u64; 4], h0_rank: u64) -> Result<[u64; 4]> {
    ensure(m[1] == 0 && n[1] == 0 && n[2] == 0, "kernel sequence")?;
    Ok([m[0] - h0_rank, n[0] - h0_rank, m[2], m[3] - n[3]])
}

/// `0 → K → M → X → 0` with `H¹(K) → H¹(M)` of the given rank; every other
/// connecting map must be forced.
fn cokernel_les(k: [u64; 4], m: [u64; 4], h1_rank: u64) -> Result<[u64; 4]> {
    ensure(k[0] == 0 && m[2] == 0 && k[3] == 0, "cokernel sequence")?;
    Ok([m[0] + k[1] - h1_rank, m[1] - h1_rank + k[2], 0, m[3]])
}

/// `End(TP⁴)` and `End(TP⁴)(−2)`, from `0 → Ω(s) → Ω(s+1)^5 → TP⁴ ⊗ Ω(s) → 0`.
fn end_tangent_p4(s: i64) -> Result<[u64; 5]> {
    let h = |t: i64, q: i64| bott(&BottQuery::new(4, 1, t, q)).expect("n = 4");
    let mut out = [0u64; 5];
    for (q, slot) in out.iter_mut().enumerate() {
        let q = q as i64;
        // H^q(Ω(s+1))^5 → H^q(X) → H^{q+1}(Ω(s)) → H^{q+1}(Ω(s+1))^5.
        let next_target = if q < 4 { 5 * h(s + 1, q + 1) } else { 0 };
        let next_source = if q < 4 { h(s, q + 1) } else { 0 };
        let before_source = h(s, q);
        let before_target = 5 * h(s + 1, q);
        ensure(
            (before_source == 0 || before_target == 0) && (next_source == 0 || next_target == 0),
            "Ω sequence on P⁴",
        )?;
        *slot = before_target + next_source;
    }
    Ok(out)
}

/// `End(Φ)` by restriction `0 → End(T)(−2) → End(T) → End(Φ) → 0` from `P⁴`.
fn end_phi() -> Result<[u64; 4]> {
    let big = end_tangent_p4(0)?;
    let small = end_tangent_p4(-2)?;
    let mut out = [0u64; 4];
    for (q, slot) in out.iter_mut().enumerate() {
        // H^q(End T(−2)) → H^q(End T) → H^q(End Φ) → H^{q+1}(End T(−2)) → H^{q+1}(End T).
        ensure(small[q] == 0 || big[q] == 0, "restriction to Q")?;
        ensure(small[q + 1] == 0 || big[q + 1] == 0, "restriction to Q")?;
        *slot = big[q] + small[q + 1];
    }
    Ok(out)
}

fn a_family_pair(same_centre: bool) -> Result<CohomologyTable> {
    // A_O^∨ ⊗ (0 → O(−1) → O⁴ → A_P → 0): 0 → A^∨(−1) → (A^∨)⁴ → X → 0.
    let k = coh_a_dual(-1).values();
    let m = coh_a_dual(0).scaled(4);
    let rank = if same_centre { 0 } else { 1 };
    Ok(CohomologyTable::cited(
        cokernel_les(k, m, rank)?,
        CITE_STABLE_HOM,
    ))
}

/// Tensor-pair cohomology for the catalogue in [`pair_catalogue`].
pub fn coh_pair(a: &StandardBundle, b: &StandardBundle, twist: i64) -> Result<CohomologyTable> {
    use StandardBundle::*;
    let (a, b) = (a.normalize(), b.normalize());
    let unsupported = || Error::UnsupportedPair(format!("{a} ⊗ {b} at twist {twist}"));
    let is_dual_of = |x: &StandardBundle, base: fn(&StandardBundle) -> bool| match x {
        Dual(inner) => base(inner),
        _ => false,
    };
    let is_a = |x: &StandardBundle| matches!(x, PullbackA(_));
    let is_phi = |x: &StandardBundle| matches!(x, Phi);
    let centre = |x: &StandardBundle| match x {
        PullbackA(c) => Some(*c),
        Dual(inner) => match **inner {
            PullbackA(c) => Some(c),
            _ => None,
        },
        _ => None,
    };

    for (x, y) in [(&a, &b), (&b, &a)] {
        let is_spinor = |s: &StandardBundle| matches!(s, Spinor);
        let result = if twist == 0 && is_dual_of(x, |i| matches!(i, Phi)) && is_phi(y) {
            Some(CohomologyTable::mechanical(end_phi()?))
        } else if twist == 0 && is_dual_of(x, is_a) && is_a(y) {
            Some(a_family_pair(centre(x) == centre(y))?)
        } else if twist == 0 && is_phi(x) && is_dual_of(y, is_a) {
            // A^∨ ⊗ (0 → O(−1) → O⁵ → Φ → 0).
            let k = coh_a_dual(-1).values();
            let m = coh_a_dual(0).scaled(5);
            Some(CohomologyTable::cited(
                cokernel_les(k, m, 1)?,
                CITE_A_TO_PHI,
            ))
        } else if twist == 0 && is_a(x) && is_dual_of(y, is_phi) {
            // Φ^∨ ⊗ (0 → O(−1) → O⁴ → A → 0); H⁰ of the middle term vanishes.
            let k = coh_phi_dual(-1).values();
            let m = coh_phi_dual(0).scaled(4);
            ensure(m[0] == 0 && m[1] == 0, "Φ^∨ sections")?;
            Some(CohomologyTable::mechanical(cokernel_les(k, m, 0)?))
        } else if twist == 0 && is_spinor(x) && is_dual_of(y, is_a) {
            // Σ ⊗ (0 → A^∨ → O⁴ → O(1) → 0); H⁰ map injective by Hom(A, Σ) = 0.
            let m = coh_spinor(0).scaled(4);
            let n = coh_spinor(1).values();
            Some(CohomologyTable::cited(
                kernel_les(m, n, m[0])?,
                CITE_A_TO_SPINOR,
            ))
        } else if twist == 0 && is_spinor(x) && is_dual_of(y, is_phi) {
            // Σ ⊗ (0 → A^∨ → Φ^∨ → O → 0), with Σ ⊗ A^∨ having no cohomology.
            let sub = coh_pair(&Spinor, &StandardBundle::a().dual(), 0)?;
            ensure(sub.values() == [0; 4], "Σ ⊗ A^∨ vanishes")?;
            Some(CohomologyTable::new(coh_spinor(0).values(), sub.provenance))
        } else if twist == -4 && is_spinor(x) && is_phi(y) {
            // Σ(−4) ⊗ (0 → O(−1) → O⁵ → Φ → 0). The H³ map is dual to
            // H⁰(Σ)⁵ → H⁰(Σ(1)), onto because Σ is 0-regular.
            let k = coh_spinor(-5).values();
            let m = coh_spinor(-4).scaled(5);
            let regular = (1..=3).all(|i| coh_spinor(-(i as i64)).get(i) == 0);
            ensure(
                regular && k[0] == 0 && k[1] == 0 && k[2] == 0,
                "Σ regularity",
            )?;
            ensure(m[0] == 0 && m[1] == 0 && m[2] == 0, "Σ(−4) cohomology")?;
            Some(CohomologyTable::mechanical([0, 0, 0, m[3] - k[3]]))
        } else {
            None
        };
        if let Some(table) = result {
            return Ok(table);
        }
    }
    Err(unsupported())
}

/// Chern data of `a ⊗ b` twisted, for χ cross-checks of pair tables.
pub fn pair_chern(a: &StandardBundle, b: &StandardBundle, twist: i64) -> ChernData {
    let t = chow::tensor(&a.chern_data(), &b.chern_data()).expect("integral bundle data");
    chow::twist(&t, twist)
}
