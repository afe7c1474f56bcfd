//! Everything derived from one algebra, computed once.

use crate::algebra::Algebra;
use crate::alpha::{spec_alpha, AlphaFamily};
use crate::classify::Diagram;
use crate::coann::{all_ideals, Coannihilators, LatticeIdeal, OmegaLattice};
use crate::error::Result;
use crate::filters::{all_filters, FilterFamily};
use crate::spectrum::{tau_d, tau_h, Spectrum, Topology};

#[derive(Clone, Debug)]
pub struct Analysis {
    pub alg: Algebra,
    pub filters: FilterFamily,
    pub spectrum: Spectrum,
    pub coann: Coannihilators,
    pub ideals: Vec<LatticeIdeal>,
    pub omega: OmegaLattice,
    pub alpha: AlphaFamily,
    pub spec_alpha: FilterFamily,
    pub tau_h: Topology,
    pub tau_d: Topology,
    pub diagram: Diagram,
}

impl Analysis {
    pub fn compute(alg: Algebra) -> Result<Analysis> {
        let filters = all_filters(&alg)?;
        let spectrum = Spectrum::compute(&alg, &filters)?;
        let coann = Coannihilators::compute(&alg)?;
        let ideals = all_ideals(&alg);
        let omega = OmegaLattice::compute(&alg, &ideals)?;
        let alpha = AlphaFamily::compute(&alg, &filters, &spectrum.min)?;
        let spec_alpha = spec_alpha(&spectrum.spec, &alpha.members);
        let tau_h = tau_h(&alg, &spectrum.min)?;
        let tau_d = tau_d(&alg, &spectrum.min)?;
        let diagram = Diagram::build(&alg, &spectrum.min, &coann)?;
        Ok(Analysis {
            alg,
            filters,
            spectrum,
            coann,
            ideals,
            omega,
            alpha,
            spec_alpha,
            tau_h,
            tau_d,
            diagram,
        })
    }
}
