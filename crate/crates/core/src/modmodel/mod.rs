//! The coordinate model of `V` and `V*`: pairing scalars, the vectors
//! `eta_x, eta_y, eta_z`, decompositions, flags, the twelve normalized bases,
//! and Gram matrices of the pairing.
//!
//! Coordinates on `V` are taken in the normalized `[y]_row` basis and on `V*`
//! in its dual basis `[y]^inv_col`, so the pairing is the dot product.

pub mod checks;

use thiserror::Error;

use crate::exactla::{ExactMatrix, LinalgError, ShapeConstraint, ShapeKind, Subspace};
use crate::repkit::{space_ring, Axis, BasisId, DecompId, Flavor, RepMatrices, SpaceId};
use crate::scalars::{QRing, Scalar, ScalarError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

/// The five freely chosen pairings `(eta_u, eta*_v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeScalars<S> {
    /// `(eta_x, eta*_y)`
    pub xy: S,
    /// `(eta_y, eta*_z)`
    pub yz: S,
    /// `(eta_z, eta*_x)`
    pub zx: S,
    /// `(eta_y, eta*_x)`
    pub yx: S,
    /// `(eta_z, eta*_y)`
    pub zy: S,
}

impl<S: Scalar> FreeScalars<S> {
    pub fn ones() -> Self {
        FreeScalars { xy: S::one(), yz: S::one(), zx: S::one(), yx: S::one(), zy: S::one() }
    }

    /// Sets a value by its key `xy*`, `yz*`, `zx*`, `yx*` or `zy*` (the `*` is optional).
    pub fn set(&mut self, key: &str, value: S) -> Result<(), ModelError> {
        let slot = match key.trim_end_matches('*') {
            "xy" => &mut self.xy,
            "yz" => &mut self.yz,
            "zx" => &mut self.zx,
            "yx" => &mut self.yx,
            "zy" => &mut self.zy,
            other => return Err(ModelError::Parameter(format!("unknown pairing key '{other}'"))),
        };
        *slot = value;
        Ok(())
    }
}

/// A module `V` of dimension `d + 1` with its dual, in concrete coordinates.
#[derive(Clone, Debug)]
pub struct ModuleSpec<S> {
    d: usize,
    ring: QRing<S>,
    free: FreeScalars<S>,
    derived: S,
    reps: [RepMatrices<S>; 2],
    etas: [[Vec<S>; 3]; 2],
    pairings: [[S; 3]; 3],
}

fn ax(a: Axis) -> usize {
    a as usize
}

fn sp(s: SpaceId) -> usize {
    s as usize
}

fn dot<S: Scalar>(u: &[S], v: &[S]) -> S {
    u.iter().zip(v).fold(S::zero(), |acc, (a, b)| if a.is_zero() || b.is_zero() { acc } else { acc + &(a.clone() * b) })
}

fn scale_vec<S: Scalar>(v: &[S], c: &S) -> Vec<S> {
    v.iter().map(|a| if a.is_zero() { S::zero() } else { a.clone() * c }).collect()
}

fn sign<S: Scalar>(k: usize) -> S {
    if k % 2 == 1 {
        -S::one()
    } else {
        S::one()
    }
}

fn binom2(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

/// The basis of `space` used for coordinates.
pub fn reference_basis(space: SpaceId) -> BasisId {
    match space {
        SpaceId::V => BasisId::row(Axis::Y),
        SpaceId::VDual => BasisId::inv_col(Axis::Y),
    }
}

/// The pairing `(eta_x, eta*_z)` forced by the five free pairings.
pub fn derived_scalar<S: Scalar>(ring: &QRing<S>, d: usize, free: &FreeScalars<S>) -> S {
    let num = free.xy.clone() * &free.yz * &free.zx;
    let den = free.yx.clone() * &free.zy;
    sign::<S>(d) * ring.pow(-((d * d.saturating_sub(1)) as i64)) * num / den
}

/// Builds the model for dimension `d + 1` with the given pairings.
pub fn make_spec<S: Scalar>(d: usize, ring: QRing<S>, free: FreeScalars<S>) -> Result<ModuleSpec<S>, ModelError> {
    for (k, v) in [("xy*", &free.xy), ("yz*", &free.yz), ("zx*", &free.zx), ("yx*", &free.yx), ("zy*", &free.zy)] {
        if v.is_zero() {
            return Err(ModelError::Parameter(format!("pairing {k} must be nonzero")));
        }
    }
    let reps = [
        RepMatrices::new(&ring, SpaceId::V, reference_basis(SpaceId::V), d),
        RepMatrices::new(&ring, SpaceId::VDual, reference_basis(SpaceId::VDual), d),
    ];
    let kernel_vector = |m: &ExactMatrix<S>| -> Result<Vec<S>, ModelError> {
        let k = Subspace::kernel(m);
        if k.dim() != 1 {
            return Err(ModelError::Consistency(format!("kernel of dimension {} where 1 was expected", k.dim())));
        }
        Ok(k.vectors().remove(0))
    };
    let ones = vec![S::one(); d + 1];
    if !reps[0].n_y.apply(&ones).iter().all(S::is_zero) {
        return Err(ModelError::Consistency("n_y does not kill the all-ones vector".into()));
    }
    let wx = kernel_vector(&reps[0].n_x)?;
    let wz = kernel_vector(&reps[0].n_z)?;
    let ws = [kernel_vector(&reps[1].n_x)?, kernel_vector(&reps[1].n_y)?, kernel_vector(&reps[1].n_z)?];

    let div = |a: &S, b: S, what: &str| -> Result<S, ModelError> {
        if b.is_zero() {
            return Err(ModelError::Consistency(format!("vanishing pairing while solving for {what}")));
        }
        Ok(a.clone() / b)
    };
    let gx = div(&free.yx, dot(&ones, &ws[0]), "eta*_x")?;
    let gz = div(&free.yz, dot(&ones, &ws[2]), "eta*_z")?;
    let beta = div(&free.zx, gx.clone() * dot(&wz, &ws[0]), "eta_z")?;
    let gy = div(&free.zy, beta.clone() * dot(&wz, &ws[1]), "eta*_y")?;
    let alpha = div(&free.xy, gy.clone() * dot(&wx, &ws[1]), "eta_x")?;

    let eta_v = [scale_vec(&wx, &alpha), ones, scale_vec(&wz, &beta)];
    let eta_vd = [scale_vec(&ws[0], &gx), scale_vec(&ws[1], &gy), scale_vec(&ws[2], &gz)];
    let pairings: [[S; 3]; 3] =
        std::array::from_fn(|u| std::array::from_fn(|v| dot(&eta_v[u], &eta_vd[v])));

    let derived = derived_scalar(&ring, d, &free);
    if pairings[ax(Axis::X)][ax(Axis::Z)] != derived {
        return Err(ModelError::Consistency(format!(
            "(eta_x, eta*_z) = {} but the six-factor identity requires {derived}",
            pairings[ax(Axis::X)][ax(Axis::Z)]
        )));
    }
    Ok(ModuleSpec { d, ring, free, derived, reps, etas: [eta_v, eta_vd], pairings })
}

impl<S: Scalar> ModuleSpec<S> {
    pub fn d(&self) -> usize {
        self.d
    }

    pub fn ring(&self) -> &QRing<S> {
        &self.ring
    }

    pub fn free_scalars(&self) -> &FreeScalars<S> {
        &self.free
    }

    /// The pairing `(eta_x, eta*_z)`.
    pub fn derived_scalar(&self) -> &S {
        &self.derived
    }

    /// Representing matrices in the reference basis of `space`.
    pub fn reps(&self, space: SpaceId) -> &RepMatrices<S> {
        &self.reps[sp(space)]
    }

    /// `eta_axis` (on `V`) or `eta*_axis` (on `V*`) in reference coordinates.
    pub fn eta(&self, space: SpaceId, axis: Axis) -> &[S] {
        &self.etas[sp(space)][ax(axis)]
    }

    /// `(eta_u, eta*_v)`.
    pub fn pairing(&self, u: Axis, v: Axis) -> &S {
        &self.pairings[ax(u)][ax(v)]
    }

    /// The pairing of a vector of `V` with a vector of `V*`, both in reference coordinates.
    pub fn pair_vectors(&self, u: &[S], f: &[S]) -> S {
        dot(u, f)
    }

    /// Components `V_0, ..., V_d` of a decomposition.
    pub fn decomposition(&self, space: SpaceId, id: DecompId) -> Vec<Subspace<S>> {
        let r = space_ring(&self.ring, space);
        let m = self.reps(space).equitable(id.axis);
        let n = self.d + 1;
        let mut comps: Vec<Subspace<S>> = (0..n)
            .map(|i| {
                let theta = r.pow(self.d as i64 - 2 * i as i64);
                Subspace::kernel(&m.sub(&ExactMatrix::identity(n).scale(&theta)))
            })
            .collect();
        if id.inverted {
            comps.reverse();
        }
        comps
    }

    /// The flag whose member `i` is `n_axis^(d-i)` applied to the space.
    pub fn flag(&self, space: SpaceId, axis: Axis) -> Vec<Subspace<S>> {
        let nmat = self.reps(space).nil(axis);
        (0..=self.d).map(|i| Subspace::column_space(&nmat.pow((self.d - i) as u32))).collect()
    }

    /// `n_axis^i` applied to the space, for `0 <= i <= d + 1`.
    pub fn flag_power(&self, space: SpaceId, axis: Axis, i: usize) -> Subspace<S> {
        Subspace::column_space(&self.reps(space).nil(axis).pow(i as u32))
    }

    /// The pairing written from the point of view of `space`, so that the closed
    /// forms for `V*` read like those for `V` with the arguments exchanged.
    fn p(&self, space: SpaceId, u: Axis, v: Axis) -> S {
        match space {
            SpaceId::V => self.pairing(u, v).clone(),
            SpaceId::VDual => self.pairing(v, u).clone(),
        }
    }

    fn power_apply(&self, space: SpaceId, axis: Axis, k: usize, v: &[S]) -> Vec<S> {
        let n = self.reps(space).nil(axis);
        (0..k).fold(v.to_vec(), |acc, _| n.apply(&acc))
    }

    /// Both closed-form versions of component `i` of `basis`.
    fn closed_forms(&self, space: SpaceId, b: BasisId, i: usize) -> (Vec<S>, Vec<S>) {
        let d = self.d;
        let r = space_ring(&self.ring, space);
        let (xi, nu, pi) = (b.axis, b.axis.next(), b.axis.prev());
        let f = |k: usize| r.q_factorial(k);
        let p = |u, v| self.p(space, u, v);
        let (di, ii) = (d as i64, i as i64);
        let a_pi = |k| self.power_apply(space, pi, k, self.eta(space, nu));
        let a_nu = |k| self.power_apply(space, nu, k, self.eta(space, pi));
        match (b.inverted, b.flavor) {
            (false, Flavor::Row) => {
                let c1 = r.pow(binom2(i)) / f(i) * p(xi, pi) / p(nu, pi);
                let c2 = sign::<S>(d - i) * r.pow(-binom2(d - i)) / f(d - i) * p(xi, nu) / p(pi, nu);
                (scale_vec(&a_pi(i), &c1), scale_vec(&a_nu(d - i), &c2))
            }
            (false, Flavor::Col) => {
                let c1 = sign::<S>(i) * f(d - i) * r.pow(ii * (1 - di) + binom2(i)) / (f(d) * p(nu, xi));
                let c2 = f(i) * r.pow((di - ii) * (di - 1) - binom2(d - i)) / (f(d) * p(pi, xi));
                (scale_vec(&a_pi(i), &c1), scale_vec(&a_nu(d - i), &c2))
            }
            (true, Flavor::Row) => {
                let c1 = sign::<S>(i) * r.pow(-binom2(i)) / f(i) * p(xi, nu) / p(pi, nu);
                let c2 = r.pow(binom2(d - i)) / f(d - i) * p(xi, pi) / p(nu, pi);
                (scale_vec(&a_nu(i), &c1), scale_vec(&a_pi(d - i), &c2))
            }
            (true, Flavor::Col) => {
                let c1 = f(d - i) * r.pow(ii * (di - 1) - binom2(i)) / (f(d) * p(pi, xi));
                let c2 = sign::<S>(d - i) * f(i) * r.pow((di - ii) * (1 - di) + binom2(d - i)) / (f(d) * p(nu, xi));
                (scale_vec(&a_nu(i), &c1), scale_vec(&a_pi(d - i), &c2))
            }
        }
    }

    /// The normalized basis `b` of `space` in reference coordinates, computed
    /// from both closed forms, which must agree.
    pub fn basis_vectors(&self, space: SpaceId, b: BasisId) -> Result<Vec<Vec<S>>, ModelError> {
        (0..=self.d)
            .map(|i| {
                let (v1, v2) = self.closed_forms(space, b, i);
                if v1 != v2 {
                    return Err(ModelError::Consistency(format!(
                        "closed forms disagree for component {i} of {b} on {space}"
                    )));
                }
                Ok(v1)
            })
            .collect()
    }

    /// The matrix whose columns are the vectors of basis `b`.
    pub fn basis_matrix(&self, space: SpaceId, b: BasisId) -> Result<ExactMatrix<S>, ModelError> {
        Ok(ExactMatrix::from_columns(self.d + 1, &self.basis_vectors(space, b)?))
    }

    /// Entry `(r, s)` is `(u_r, v_s)` for `u` the basis `b_v` of `V` and `v` the basis `b_vd` of `V*`.
    pub fn gram(&self, b_v: BasisId, b_vd: BasisId) -> Result<ExactMatrix<S>, ModelError> {
        let u = self.basis_matrix(SpaceId::V, b_v)?;
        let w = self.basis_matrix(SpaceId::VDual, b_vd)?;
        Ok(u.transpose().mul(&w))
    }

    /// The pairing-orthogonal complement in the other space.
    pub fn annihilator(&self, w: &Subspace<S>) -> Result<Subspace<S>, ModelError> {
        Ok(w.annihilator(&ExactMatrix::identity(self.d + 1))?)
    }

    /// Shape constraint relative to a decomposition of `V`.
    pub fn shape_constraint(&self, id: DecompId, kind: ShapeKind) -> ShapeConstraint<S> {
        let comps = self.decomposition(SpaceId::V, id);
        let cols: Vec<Vec<S>> = comps.iter().map(|c| c.vectors().remove(0)).collect();
        ShapeConstraint { kind, adapted: ExactMatrix::from_columns(self.d + 1, &cols) }
    }
}
