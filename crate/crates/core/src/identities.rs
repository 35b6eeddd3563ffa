//! Identities relating decompositions of topes whose negative parts are
//! combined by disjoint union or by inclusion.
//!
//! Throughout, `x(A)` is shorthand for `decompose(_{-A}T^(+))` and `sigma(s)`
//! is the `s`-th standard basis vector.

use crate::error::{Error, Result};
use crate::hypercube::{DecompVector, GroundSize, SubsetMask};

/// Where a subset meets the ends of `[t]`: `A ∩ {1, t}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundaryType {
    /// `A ∩ {1,t} = ∅`
    None,
    /// `A ∩ {1,t} = {1}`
    Left,
    /// `A ∩ {1,t} = {t}`
    Right,
    /// `A ∩ {1,t} = {1,t}`
    Both,
}

impl BoundaryType {
    pub fn of(a: SubsetMask, t: GroundSize) -> Self {
        match (a.contains(1), a.contains(t.as_usize())) {
            (false, false) => BoundaryType::None,
            (true, false) => BoundaryType::Left,
            (false, true) => BoundaryType::Right,
            (true, true) => BoundaryType::Both,
        }
    }
}

/// The case of the superset-propagation formula selected by the pair
/// `(A ∩ {1,t}, C ∩ {1,t})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SupersetCase {
    /// Equal boundary intersections.
    SameEnds,
    /// `({1},{1,t})` or `(∅,{t})`: `C` gains `t`.
    GainsRight,
    /// `(∅,{1})` or `({t},{1,t})`: `C` gains `1`.
    GainsLeft,
    /// `(∅,{1,t})`: `C` gains both ends.
    GainsBoth,
}

impl SupersetCase {
    /// Dispatch table over the nine pairs allowed by `A ⊆ C`. Returns `None`
    /// for the seven pairs that `A ⊆ C` rules out.
    pub fn classify(a: BoundaryType, c: BoundaryType) -> Option<Self> {
        use BoundaryType as B;
        Some(match (a, c) {
            (B::None, B::None) | (B::Left, B::Left) | (B::Right, B::Right) | (B::Both, B::Both) => {
                SupersetCase::SameEnds
            }
            (B::Left, B::Both) | (B::None, B::Right) => SupersetCase::GainsRight,
            (B::None, B::Left) | (B::Right, B::Both) => SupersetCase::GainsLeft,
            (B::None, B::Both) => SupersetCase::GainsBoth,
            _ => return None,
        })
    }
}

/// Signed integer work vector used while assembling identities.
#[derive(Debug, Clone)]
struct Work(Vec<i64>);

impl Work {
    fn zeros(t: GroundSize) -> Self {
        Work(vec![0; t.as_usize()])
    }

    fn from(x: &DecompVector) -> Self {
        Work(x.coords().iter().map(|&v| v as i64).collect())
    }

    fn add_sigma(&mut self, s: usize, k: i64) {
        self.0[s - 1] += k;
    }

    /// Subtracts `sum_{i in set} (sigma(i) - sigma(i+1))`.
    fn sub_differences(&mut self, set: SubsetMask) {
        for i in set.elements() {
            self.0[i - 1] -= 1;
            self.0[i] += 1;
        }
    }

    fn finish(self) -> Result<DecompVector> {
        let mut coords = Vec::with_capacity(self.0.len());
        for (i, v) in self.0.into_iter().enumerate() {
            if !(-1..=1).contains(&v) {
                return Err(Error::InvalidDecomposition(format!(
                    "coordinate {} evaluates to {v}",
                    i + 1
                )));
            }
            coords.push(v as i8);
        }
        DecompVector::new(coords)
    }
}

/// `x(A ∪ B) = -sigma(1) + x(A) + x(B)` for disjoint `A`, `B`.
///
/// Disjointness is not visible from the vectors alone; it is detected after
/// the fact by the result leaving `{-1, 0, 1}` or having even support.
pub fn x_of_disjoint_union(xa: &DecompVector, xb: &DecompVector) -> Result<DecompVector> {
    if xa.len() != xb.len() {
        return Err(Error::Dimension {
            left: xa.len(),
            right: xb.len(),
        });
    }
    let mut sum: Vec<i64> = xa
        .coords()
        .iter()
        .zip(xb.coords())
        .map(|(&a, &b)| a as i64 + b as i64)
        .collect();
    sum[0] -= 1;
    if let Some(coord) = sum.iter().position(|v| !(-1..=1).contains(v)) {
        return Err(Error::NotDisjointOrInvalid { coord: coord + 1 });
    }
    DecompVector::new(sum.into_iter().map(|v| v as i8).collect())
        .map_err(|_| Error::NotDisjointOrInvalid { coord: 1 })
}

/// `||x(A ∪ B)||^2` from `x(A)` and `x(B)`:
/// `||x(A)||^2 + ||x(B)||^2 + 2<x(A), x(B)> - 2 x_1(A) - 2 x_1(B) + 1`.
pub fn norm_of_disjoint_union(xa: &DecompVector, xb: &DecompVector) -> Result<i64> {
    let dot = xa.dot(xb)?;
    Ok(xa.norm_sq() + xb.norm_sq() + 2 * dot - 2 * xa.get(1) as i64 - 2 * xb.get(1) as i64 + 1)
}

/// `x(A)` from the boundary type of `A`, without building the tope.
pub fn x_closed_form(a: SubsetMask, t: GroundSize) -> Result<DecompVector> {
    a.check_within(t)?;
    let n = t.as_usize();
    let ends = SubsetMask::from_elements([1, n])?;
    let mut w = Work::zeros(t);
    match BoundaryType::of(a, t) {
        BoundaryType::None => w.add_sigma(1, 1),
        BoundaryType::Left => w.add_sigma(2, 1),
        BoundaryType::Right => w.add_sigma(n, -1),
        BoundaryType::Both => {
            w.add_sigma(1, -1);
            w.add_sigma(2, 1);
            w.add_sigma(n, -1);
        }
    }
    w.sub_differences(a.difference(ends));
    w.finish()
}

/// `x(C)` from `x(A)` for `A ⊆ C ⊆ [t]`.
pub fn x_superset_delta(
    xa: &DecompVector,
    a: SubsetMask,
    c: SubsetMask,
    t: GroundSize,
) -> Result<DecompVector> {
    a.check_within(t)?;
    c.check_within(t)?;
    if xa.len() != t.as_usize() {
        return Err(Error::Dimension {
            left: xa.len(),
            right: t.as_usize(),
        });
    }
    if let Some(element) = a.difference(c).elements().next() {
        return Err(Error::Containment { element });
    }
    let n = t.as_usize();
    let first = SubsetMask::from_elements([1])?;
    let last = SubsetMask::from_elements([n])?;
    let case = SupersetCase::classify(BoundaryType::of(a, t), BoundaryType::of(c, t))
        .expect("A ⊆ C admits only the nine tabulated boundary pairs");

    let mut w = Work::from(xa);
    let diff = c.difference(a);
    match case {
        SupersetCase::SameEnds => w.sub_differences(diff),
        SupersetCase::GainsRight => {
            w.add_sigma(1, -1);
            w.add_sigma(n, -1);
            w.sub_differences(diff.difference(last));
        }
        SupersetCase::GainsLeft => {
            w.add_sigma(1, -1);
            w.add_sigma(2, 1);
            w.sub_differences(diff.difference(first));
        }
        SupersetCase::GainsBoth => {
            w.add_sigma(1, -2);
            w.add_sigma(2, 1);
            w.add_sigma(n, -1);
            w.sub_differences(diff.difference(first.union(last)));
        }
    }
    w.finish()
}
