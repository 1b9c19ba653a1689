//! Shared numerical building blocks: power series, circle grids and their
//! Fourier transforms, trapezoid quadrature, real root finding and
//! radius-of-convergence estimation.

mod grid;
mod quadrature;
mod radius;
mod roots;
mod series;
mod tolerance;

pub(crate) use grid::circle_points;
pub use grid::{
    coefficients_from_grid, project_plus, real_coefficients_from_grid, seminorm_triple, CircleGrid,
};
pub use quadrature::{circle_mean, trapezoid_nodes, unit_circle_quadrature};
pub use radius::radius_estimate;
pub use roots::find_real_zeros;
pub use series::TaylorSeries;
pub use tolerance::ToleranceConfig;

pub(crate) use radius::least_squares_slope;
