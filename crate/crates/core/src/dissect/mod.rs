//! k-angulations of polygons under the dihedral group, and the polygon
//! models of the type B and type D cluster complexes.

mod dihedral;
mod kangulation;
mod polygon_bd;

pub use dihedral::DihedralElement;
pub use kangulation::{
    dihedral_census, enumerate_kangulations, fixed_count, polygon_count, reflection_fixed_closed_form,
    rotation_fixed_closed_form, write_census_csv, CensusRow, Dissection,
};
pub use polygon_bd::{
    enumerate_bd_facets, enumerate_type_b_facets, enumerate_type_d_facets, tau_fixed_count_bd, tau_fixed_count_bd_with, tau_reflection,
    FlavorRule,
    Diameter, Flavor, FlavoredDissection, PolygonType, Sign,
};
