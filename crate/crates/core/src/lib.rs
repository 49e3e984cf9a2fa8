//! Syzygies of toric surfaces and of curves on them.
//!
//! [`lattice`] handles lattice polygons, [`fan`] toric surfaces given by
//! complete fans, [`koszul`] the graded Betti tables of toric surfaces
//! embedded by `Δ⁽¹⁾`, [`curve`] the Betti table of canonical curves on
//! them, and [`checks`] the combinatorial predicates relating the two.

pub mod checks;
pub mod curve;
pub mod fan;
pub mod koszul;
pub mod lattice;
