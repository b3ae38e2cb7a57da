//! Exact matrix models of the equitable presentation of `U_q(sl2)` acting on the
//! irreducible module `V` of dimension `d + 1` and on its dual `V*`.

pub mod scalars;
pub mod exactla;
pub mod repkit;
pub mod modmodel;
pub mod transit;
pub mod recognize;
