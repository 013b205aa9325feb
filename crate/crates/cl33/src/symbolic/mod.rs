//! Symbolic field calculus: trig-polynomials, fields, and the
//! first-order operators built from them.

mod field;
mod trig;

pub use field::{
    coordinate_field, coordinate_field_reflected, diff, eval_rat, klein_gordon_split,
    lightcone_candidate, nabla_t, nabla_t_star, spatial_reflect, vector_derivative,
    CoordinateVector, Field,
};
pub use trig::{
    coord, LinearForm, Monomial, Point, TrigFactor, TrigPoly, COORD_COUNT, COORD_NAMES,
};
