//! Degreewise exactness and isomorphism checks over a bounded window.
//!
//! A pass is evidence on the window only; it is not a certificate for all
//! degrees.

use rayon::prelude::*;

use super::{FPGradedModule, GrModError, GradedModuleMap};

/// Closed range of degrees `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeWindow {
    lo: i64,
    hi: i64,
}

impl DegreeWindow {
    pub fn new(lo: i64, hi: i64) -> Result<Self, GrModError> {
        if lo > hi {
            return Err(GrModError::InvalidWindow { lo, hi });
        }
        Ok(DegreeWindow { lo, hi })
    }

    /// `[min - 1, max + 6]` over the given generator degrees; `[-1, 6]` if
    /// there are none.
    pub fn covering(degrees: impl IntoIterator<Item = i64>) -> Self {
        let mut it = degrees.into_iter();
        let Some(first) = it.next() else {
            return DegreeWindow { lo: -1, hi: 6 };
        };
        let (lo, hi) = it.fold((first, first), |(lo, hi), d| (lo.min(d), hi.max(d)));
        DegreeWindow {
            lo: lo - 1,
            hi: hi + 6,
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

/// Exactness at one interior module of the sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositionCheck {
    pub position: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
}

impl PositionCheck {
    pub fn exact(&self) -> bool {
        self.kernel_dim == self.image_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: i64,
    /// Dimension of each module of the sequence in this degree.
    pub dims: Vec<usize>,
    /// Image dimension of each map.
    pub image_dims: Vec<usize>,
    pub positions: Vec<PositionCheck>,
}

impl DegreeReport {
    pub fn exact(&self) -> bool {
        self.positions.iter().all(PositionCheck::exact)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub window: DegreeWindow,
    pub degrees: Vec<DegreeReport>,
}

impl ExactnessReport {
    pub fn is_exact(&self) -> bool {
        self.degrees.iter().all(DegreeReport::exact)
    }

    /// `(degree, position)` of every inexact spot, in degree order.
    pub fn failures(&self) -> Vec<(i64, usize)> {
        self.degrees
            .iter()
            .flat_map(|d| {
                d.positions
                    .iter()
                    .filter(|p| !p.exact())
                    .map(move |p| (d.degree, p.position))
            })
            .collect()
    }

    pub fn witness(&self) -> Option<(i64, usize)> {
        self.failures().into_iter().next()
    }
}

/// Checks the sequence `M0 -> M1 -> ... -> Mr` degree by degree.
///
/// Positions are module indices; only interior modules `1..r` are tested.
/// In each degree every consecutive composite must realize to zero modulo
/// the relations of its target (else [`GrModError::NotComplex`] with the
/// first offending degree), and at each interior module the kernel of the
/// outgoing map must have the dimension of the image of the incoming one.
pub fn is_exact_window(
    complex: &[GradedModuleMap],
    w: DegreeWindow,
) -> Result<ExactnessReport, GrModError> {
    for (i, pair) in complex.windows(2).enumerate() {
        if pair[0].target() != pair[1].source() {
            return Err(GrModError::NotComposable { position: i });
        }
    }
    let composites = complex
        .windows(2)
        .map(|pair| pair[1].compose(&pair[0]))
        .collect::<Result<Vec<_>, _>>()?;

    let degrees: Vec<i64> = w.degrees().collect();
    let results: Vec<Result<DegreeReport, GrModError>> = degrees
        .par_iter()
        .map(|&k| degree_report(complex, &composites, k))
        .collect();
    let degrees = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(ExactnessReport { window: w, degrees })
}

fn degree_report(
    complex: &[GradedModuleMap],
    composites: &[GradedModuleMap],
    k: i64,
) -> Result<DegreeReport, GrModError> {
    for (i, comp) in composites.iter().enumerate() {
        if comp.image_dim(k) != 0 {
            return Err(GrModError::NotComplex {
                position: i + 1,
                degree: k,
            });
        }
    }
    let modules: Vec<&FPGradedModule> = complex
        .iter()
        .map(GradedModuleMap::source)
        .chain(complex.last().map(GradedModuleMap::target))
        .collect();
    let dims: Vec<usize> = modules.iter().map(|m| m.component_dim(k)).collect();
    let image_dims: Vec<usize> = complex.iter().map(|f| f.image_dim(k)).collect();
    let positions = (1..complex.len())
        .map(|p| PositionCheck {
            position: p,
            kernel_dim: dims[p] - image_dims[p],
            image_dim: image_dims[p - 1],
        })
        .collect();
    Ok(DegreeReport {
        degree: k,
        dims,
        image_dims,
        positions,
    })
}

/// Whether `f` is bijective in every degree of the window.
pub fn is_iso_window(f: &GradedModuleMap, w: DegreeWindow) -> bool {
    first_non_iso_degree(f, w).is_none()
}

/// First degree of the window in which `f` fails to be bijective.
pub fn first_non_iso_degree(f: &GradedModuleMap, w: DegreeWindow) -> Option<i64> {
    w.degrees().find(|&k| {
        let src = f.source().component_dim(k);
        let tgt = f.target().component_dim(k);
        let im = f.image_dim(k);
        !(src == tgt && im == tgt)
    })
}
