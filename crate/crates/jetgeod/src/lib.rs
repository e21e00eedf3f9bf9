//! Sub-Riemannian geodesics on jet space: polynomial construction,
//! Hill-interval classification, period/cost integrals with singular
//! endpoints, geodesic flow integration, and the numerical
//! global-minimality certification pipeline for seagull polynomials.

pub mod diamond;
pub mod error;
pub mod flow;
pub mod invert;
pub mod hill;
pub mod periods;
pub mod poly;
pub mod quad;
pub mod registry;
pub mod roots;
pub mod scans;
pub mod seagull;
pub mod slab;

pub use diamond::{diamond_membership, tau_lines, Branch, DiamondCoords, DiamondRegion};
pub use error::{Error, Result};
pub use invert::{invert_at_infinity, InversionResult};
pub use flow::{
    dilate, horizontal_lift, integrate_jet, integrate_x, magnetic_trace, max_energy_residual,
    maxwell_pair, measure_return_time, pfaffian_residual, project_pi_f, reflect,
    theta_coordinates, JetState, JetTrace, MagneticTrace, MaxwellPair, OdeConfig, PlaneCurve,
    R3Point, XTrace,
};
pub use hill::{classify, hill_endpoint_u, hill_intervals, GeodesicClass, HillInterval, Sign};
pub use periods::{
    boundary_cost, cost0_limit, cost_functions, cost_pair_to, half_period_data, half_periods,
    heteroclinic_costs, hill_beta, lowbound, periods, singular_integral, HalfPeriodData,
    HeteroclinicCosts, Periods,
};
pub use scans::{
    cost_monotonicity_scan, default_approach, default_leg_scans, default_tau_grid,
    leg_divergence_scan, LegScan, LegScanRow, LegTarget, MonotonicityScan,
};
pub use slab::{eikonal_residual, slab_domain, EikonalCheck, SlabDomain};
pub use poly::{pencil_member, PencilPoint, Polynomial};
pub use quad::{Integral, QuadConfig};
pub use roots::{real_roots, RootInfo};
pub use seagull::{build_specific_seagull, is_seagull, SeagullReport};
