//! Canonical matrix families and the matrices representing the equitable
//! generators and `n_x, n_y, n_z` on `V` and `V*` in each of the twelve bases.

mod ids;
mod report;

use std::fmt;
use std::str::FromStr;

use crate::exactla::ExactMatrix;
use crate::scalars::{QRing, Scalar};

pub use ids::{Axis, BasisId, DecompId, Flavor, Generator, IdParseError, SpaceId};
pub use report::{first_discrepancy, Discrepancy, ReportItem, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyBase {
    K,
    Z,
    E,
    N,
    T,
    P,
}

/// A base matrix together with the three commuting modifiers: transpose,
/// `q -> q^-1`, and conjugation by `Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalFamily {
    pub base: FamilyBase,
    pub transposed: bool,
    pub q_inverted: bool,
    pub z_conjugated: bool,
}

impl CanonicalFamily {
    pub const fn plain(base: FamilyBase) -> Self {
        CanonicalFamily { base, transposed: false, q_inverted: false, z_conjugated: false }
    }

    pub const fn new(base: FamilyBase, transposed: bool, q_inverted: bool, z_conjugated: bool) -> Self {
        CanonicalFamily { base, transposed, q_inverted, z_conjugated }
    }

    /// All eight modifier combinations of a base.
    pub fn orbit(base: FamilyBase) -> Vec<CanonicalFamily> {
        (0..8).map(|m| CanonicalFamily::new(base, m & 1 != 0, m & 2 != 0, m & 4 != 0)).collect()
    }

    pub fn transpose(self) -> Self {
        CanonicalFamily { transposed: !self.transposed, ..self }
    }

    pub fn invert_q(self) -> Self {
        CanonicalFamily { q_inverted: !self.q_inverted, ..self }
    }

    pub fn z_conjugate(self) -> Self {
        CanonicalFamily { z_conjugated: !self.z_conjugated, ..self }
    }
}

impl fmt::Display for CanonicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let z = if self.z_conjugated { "Z" } else { "" };
        let base = format!("{:?}", self.base);
        let t = if self.transposed { "^t" } else { "" };
        let q = match (self.base, self.q_inverted) {
            (FamilyBase::Z, _) => "",
            (_, true) => "_{q^-1}",
            (_, false) => "_q",
        };
        write!(f, "{z}{base}{t}{q}{z}")
    }
}

impl FromStr for CanonicalFamily {
    type Err = IdParseError;

    /// Accepts forms such as `E`, `E_q`, `ZE^t_{q^-1}Z`, `N^t`, `K_{q^-1}`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || IdParseError { what: "matrix family", input: s.to_string() };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (inner, z_conjugated) = if compact.len() > 1 && compact.starts_with('Z') && compact.ends_with('Z') {
            (&compact[1..compact.len() - 1], true)
        } else {
            (compact.as_str(), false)
        };
        let mut chars = inner.chars();
        let base = match chars.next().ok_or_else(err)? {
            'K' => FamilyBase::K,
            'Z' => FamilyBase::Z,
            'E' => FamilyBase::E,
            'N' => FamilyBase::N,
            'T' => FamilyBase::T,
            'P' => FamilyBase::P,
            _ => return Err(err()),
        };
        let mut rest = chars.as_str();
        let mut transposed = false;
        if let Some(r) = rest.strip_prefix("^t") {
            transposed = true;
            rest = r;
        }
        let q_inverted = match rest {
            "" | "_q" | "_{q}" => false,
            "_{q^-1}" | "_q^-1" | "_{q^{-1}}" => true,
            _ => return Err(err()),
        };
        if let Some(r) = rest.strip_prefix("^t") {
            if !r.is_empty() {
                return Err(err());
            }
        }
        Ok(CanonicalFamily { base, transposed, q_inverted, z_conjugated })
    }
}

/// The `(d+1) x (d+1)` matrix of a canonical family.
pub fn build_canonical<S: Scalar>(ring: &QRing<S>, family: CanonicalFamily, d: usize) -> ExactMatrix<S> {
    let ring = if family.q_inverted { ring.inverted() } else { ring.clone() };
    let mut m = base_matrix(&ring, family.base, d);
    if family.transposed {
        m = m.transpose();
    }
    if family.z_conjugated {
        m = m.z_conjugate().expect("canonical matrices are square");
    }
    m
}

fn base_matrix<S: Scalar>(r: &QRing<S>, base: FamilyBase, d: usize) -> ExactMatrix<S> {
    let n = d + 1;
    let di = d as i64;
    match base {
        FamilyBase::K => ExactMatrix::diagonal((0..n).map(|i| r.pow(di - 2 * i as i64)).collect()),
        FamilyBase::Z => ExactMatrix::reversal(n),
        FamilyBase::E => ExactMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            if i == j {
                r.pow(2 * i - di)
            } else if i + 1 == j {
                r.pow(di) - r.pow(2 * j - 2 - di)
            } else {
                S::zero()
            }
        }),
        FamilyBase::N => ExactMatrix::from_fn(n, n, |i, j| {
            let i = i as i64;
            if i == j as i64 + 1 {
                r.pow(1 - i) * r.q_int(i)
            } else {
                S::zero()
            }
        }),
        FamilyBase::T => ExactMatrix::from_fn(n, n, |i, j| {
            let (i, j) = (i as i64, j as i64);
            if i == j + 1 {
                r.pow(3 * i - 2 * di - 1) * r.q_int(i)
            } else if i + 1 == j {
                -(r.pow(3 * j - di - 2) * r.q_int(di - j + 1))
            } else if i == j {
                r.pow(2 * i - di) * r.q_int(i) * r.q_int(di - i + 1) * r.q_minus_q_inv()
                    - r.pow(2 * i - di + 1) * r.q_int(2 * i - di)
            } else {
                S::zero()
            }
        }),
        FamilyBase::P => {
            let rows: Vec<Vec<S>> = (0..n).map(|i| r.q_binom_row(i)).collect();
            ExactMatrix::from_fn(n, n, |i, j| {
                if i + j < d {
                    return S::zero();
                }
                let k = d - j;
                let sign = if k % 2 == 1 { -S::one() } else { S::one() };
                sign * r.pow(k as i64 * (1 - i as i64)) * &rows[i][k]
            })
        }
    }
}

/// The backend seen by a space: `V*` is a module for `U_{q^-1}`.
pub fn space_ring<S: Scalar>(ring: &QRing<S>, space: SpaceId) -> QRing<S> {
    match space {
        SpaceId::V => ring.clone(),
        SpaceId::VDual => ring.inverted(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    Own,
    Next,
    Prev,
}

fn role(basis_axis: Axis, gen_axis: Axis) -> Role {
    if gen_axis == basis_axis {
        Role::Own
    } else if gen_axis == basis_axis.next() {
        Role::Next
    } else {
        Role::Prev
    }
}

const fn fam(base: FamilyBase, t: bool, qi: bool, z: bool) -> CanonicalFamily {
    CanonicalFamily::new(base, t, qi, z)
}

/// Table entry for `x, y, z` on `V`.
fn equitable_entry(basis: BasisId, role: Role) -> CanonicalFamily {
    use FamilyBase::{E, K};
    match (basis.inverted, basis.flavor, role) {
        (false, Flavor::Row, Role::Own) => fam(K, false, false, false),
        (false, Flavor::Row, Role::Next) => fam(E, false, true, true),
        (false, Flavor::Row, Role::Prev) => fam(E, false, false, false),
        (false, Flavor::Col, Role::Own) => fam(K, false, false, false),
        (false, Flavor::Col, Role::Next) => fam(E, true, false, false),
        (false, Flavor::Col, Role::Prev) => fam(E, true, true, true),
        (true, Flavor::Row, Role::Own) => fam(K, false, true, false),
        (true, Flavor::Row, Role::Next) => fam(E, false, true, false),
        (true, Flavor::Row, Role::Prev) => fam(E, false, false, true),
        (true, Flavor::Col, Role::Own) => fam(K, false, true, false),
        (true, Flavor::Col, Role::Next) => fam(E, true, false, true),
        (true, Flavor::Col, Role::Prev) => fam(E, true, true, false),
    }
}

/// Table entry for `n_x, n_y, n_z` on `V`, with its sign.
fn nil_entry(basis: BasisId, role: Role) -> (CanonicalFamily, bool) {
    use FamilyBase::{N, T};
    match (basis.inverted, basis.flavor, role) {
        (false, Flavor::Row, Role::Own) => (fam(T, false, false, false), false),
        (false, Flavor::Row, Role::Next) => (fam(N, false, true, true), true),
        (false, Flavor::Row, Role::Prev) => (fam(N, false, false, false), false),
        (false, Flavor::Col, Role::Own) => (fam(T, true, false, false), false),
        (false, Flavor::Col, Role::Next) => (fam(N, true, false, false), false),
        (false, Flavor::Col, Role::Prev) => (fam(N, true, true, true), true),
        (true, Flavor::Row, Role::Own) => (fam(T, false, true, false), true),
        (true, Flavor::Row, Role::Next) => (fam(N, false, true, false), true),
        (true, Flavor::Row, Role::Prev) => (fam(N, false, false, true), false),
        (true, Flavor::Col, Role::Own) => (fam(T, true, true, false), true),
        (true, Flavor::Col, Role::Next) => (fam(N, true, false, true), false),
        (true, Flavor::Col, Role::Prev) => (fam(N, true, true, false), true),
    }
}

/// The matrix representing `g` on `space` with respect to `basis`.
///
/// The `V*` matrices are the `V` matrices with `q` replaced by `q^-1`.
pub fn rep<S: Scalar>(ring: &QRing<S>, space: SpaceId, basis: BasisId, g: Generator, d: usize) -> ExactMatrix<S> {
    let r = space_ring(ring, space);
    match g {
        Generator::Equitable(a) => build_canonical(&r, equitable_entry(basis, role(basis.axis, a)), d),
        Generator::N(a) => {
            let (f, negate) = nil_entry(basis, role(basis.axis, a));
            let m = build_canonical(&r, f, d);
            if negate {
                m.neg()
            } else {
                m
            }
        }
        Generator::YInv => rep(ring, space, basis, Generator::Equitable(Axis::Y), d)
            .inverse()
            .expect("y is invertible on every basis"),
    }
}

/// All seven representing matrices for one space and basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMatrices<S> {
    pub x: ExactMatrix<S>,
    pub y: ExactMatrix<S>,
    pub y_inv: ExactMatrix<S>,
    pub z: ExactMatrix<S>,
    pub n_x: ExactMatrix<S>,
    pub n_y: ExactMatrix<S>,
    pub n_z: ExactMatrix<S>,
}

impl<S: Scalar> RepMatrices<S> {
    pub fn new(ring: &QRing<S>, space: SpaceId, basis: BasisId, d: usize) -> Self {
        let g = |g| rep(ring, space, basis, g, d);
        let y = g(Generator::Equitable(Axis::Y));
        RepMatrices {
            x: g(Generator::Equitable(Axis::X)),
            y_inv: y.inverse().expect("y is invertible on every basis"),
            y,
            z: g(Generator::Equitable(Axis::Z)),
            n_x: g(Generator::N(Axis::X)),
            n_y: g(Generator::N(Axis::Y)),
            n_z: g(Generator::N(Axis::Z)),
        }
    }

    pub fn get(&self, g: Generator) -> &ExactMatrix<S> {
        match g {
            Generator::Equitable(Axis::X) => &self.x,
            Generator::Equitable(Axis::Y) => &self.y,
            Generator::Equitable(Axis::Z) => &self.z,
            Generator::YInv => &self.y_inv,
            Generator::N(Axis::X) => &self.n_x,
            Generator::N(Axis::Y) => &self.n_y,
            Generator::N(Axis::Z) => &self.n_z,
        }
    }

    pub fn equitable(&self, a: Axis) -> &ExactMatrix<S> {
        self.get(Generator::Equitable(a))
    }

    pub fn nil(&self, a: Axis) -> &ExactMatrix<S> {
        self.get(Generator::N(a))
    }
}

/// Checks the defining relations on the matrices of one space and basis.
pub fn verify_algebra<S: Scalar>(ring: &QRing<S>, space: SpaceId, basis: BasisId, d: usize) -> VerificationReport {
    let m = RepMatrices::new(ring, space, basis, d);
    let r = space_ring(ring, space);
    let (q, qi) = (r.q().clone(), r.q_inv().clone());
    let c = r.q_minus_q_inv();
    let n = d + 1;
    let id = ExactMatrix::<S>::identity(n);
    let mut rep = VerificationReport::new();

    for a in Axis::ALL {
        let (u, v) = (m.equitable(a), m.equitable(a.next()));
        let lhs = u.mul(v).scale(&q).sub(&v.mul(u).scale(&qi));
        rep.check_eq(format!("equitable {}{}", a, a.next()), &lhs, &id.scale(&c));
    }

    let q2 = r.pow(2);
    let qm2 = r.pow(-2);
    for a in Axis::ALL {
        let u = m.equitable(a);
        let (nn, np) = (m.nil(a.next()), m.nil(a.prev()));
        rep.check_eq(format!("{a} n_{} = q^2 n_{} {a}", a.next(), a.next()), &u.mul(nn), &nn.mul(u).scale(&q2));
        rep.check_eq(format!("{a} n_{} = q^-2 n_{} {a}", a.prev(), a.prev()), &u.mul(np), &np.mul(u).scale(&qm2));
    }

    let x_rebuilt = m.y_inv.sub(&m.n_z.mul(&m.y_inv).scale(&(qi.clone() * &c)));
    rep.check_eq("x = y^-1 - q^-1(q - q^-1) n_z y^-1", &m.x, &x_rebuilt);
    let z_rebuilt = m.y_inv.sub(&m.n_x.mul(&m.y_inv).scale(&(q.clone() * &c)));
    rep.check_eq("z = y^-1 - q(q - q^-1) n_x y^-1", &m.z, &z_rebuilt);

    for a in Axis::ALL {
        let (u, v) = (m.equitable(a.next()), m.equitable(a.prev()));
        let scaled = m.nil(a).scale(&c);
        rep.check_eq(format!("(q - q^-1) n_{a} = q(1 - {}{})", a.next(), a.prev()), &scaled, &id.sub(&u.mul(v)).scale(&q));
        rep.check_eq(
            format!("(q - q^-1) n_{a} = q^-1(1 - {}{})", a.prev(), a.next()),
            &scaled,
            &id.sub(&v.mul(u)).scale(&qi),
        );
    }

    for a in Axis::ALL {
        rep.check_eq(format!("n_{a}^(d+1) = 0"), &m.nil(a).pow(n as u32), &ExactMatrix::zeros(n, n));
    }
    rep.check_eq("y y^-1 = 1", &m.y.mul(&m.y_inv), &id);
    rep
}

/// Checks that transposing the matrix of `g` on `V` in `basis` gives the matrix of
/// the image of `g` under the antiisomorphism on `V*` in the dual basis.
pub fn dagger_transpose_check<S: Scalar>(ring: &QRing<S>, basis: BasisId, d: usize) -> VerificationReport {
    let mut rep = VerificationReport::new();
    let dual = basis.dual();
    for g in Generator::ALL {
        let lhs = self::rep(ring, SpaceId::V, basis, g, d).transpose();
        let rhs = self::rep(ring, SpaceId::VDual, dual, g, d);
        let rhs = if matches!(g, Generator::N(_)) { rhs.neg() } else { rhs };
        rep.check_eq(format!("{g} on {basis} transposed vs V* {dual}"), &lhs, &rhs);
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{parse_ratfunc, RatFunc};
    use num_traits::{One, Zero};

    fn sym() -> QRing<RatFunc> {
        QRing::symbolic()
    }

    fn mat(rows: &[&[&str]]) -> ExactMatrix<RatFunc> {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| parse_ratfunc(s).unwrap()).collect()).collect())
            .unwrap()
    }

    fn plain(b: FamilyBase, d: usize) -> ExactMatrix<RatFunc> {
        build_canonical(&sym(), CanonicalFamily::plain(b), d)
    }

    #[test]
    fn reference_matrices_at_d3() {
        assert_eq!(plain(FamilyBase::K, 3), mat(&[&["q^3", "0", "0", "0"], &["0", "q", "0", "0"], &["0", "0", "q^-1", "0"], &["0", "0", "0", "q^-3"]]));
        let e = mat(&[
            &["q^-3", "q^3 - q^-3", "0", "0"],
            &["0", "q^-1", "q^3 - q^-1", "0"],
            &["0", "0", "q", "q^3 - q"],
            &["0", "0", "0", "q^3"],
        ]);
        assert_eq!(plain(FamilyBase::E, 3), e);
        let n = mat(&[
            &["0", "0", "0", "0"],
            &["1", "0", "0", "0"],
            &["0", "q^-1*(q + q^-1)", "0", "0"],
            &["0", "0", "q^-2*(q^2 + 1 + q^-2)", "0"],
        ]);
        assert_eq!(plain(FamilyBase::N, 3), n);
    }

    #[test]
    fn t_and_p_small_cases() {
        assert_eq!(plain(FamilyBase::T, 1), mat(&[&["1", "-1"], &["1", "-1"]]));
        let p = plain(FamilyBase::P, 1);
        assert_eq!(p, mat(&[&["0", "1"], &["-1", "1"]]));
        assert_eq!(p.pow(3), ExactMatrix::identity(2).neg());
    }

    #[test]
    fn t_matches_e_product_formula() {
        let r = sym();
        for d in 0..=8 {
            let e = plain(FamilyBase::E, d);
            let ezez = build_canonical(&r, CanonicalFamily::new(FamilyBase::E, false, true, true), d);
            let id = ExactMatrix::identity(d + 1);
            let scale = r.q_inv().clone() / r.q_minus_q_inv();
            assert_eq!(plain(FamilyBase::T, d), id.sub(&e.mul(&ezez)).scale(&scale), "d = {d}");
        }
    }

    #[test]
    fn ztz_is_minus_t_inverse() {
        let r = sym();
        for d in 0..=8 {
            let t = plain(FamilyBase::T, d);
            let t_inv = build_canonical(&r, CanonicalFamily::new(FamilyBase::T, false, true, false), d);
            assert_eq!(t.z_conjugate().unwrap(), t_inv.neg());
        }
    }

    #[test]
    fn p_cubed_and_inverse() {
        let r = sym();
        for d in 0..=6 {
            let p = plain(FamilyBase::P, d);
            let sign = if d % 2 == 1 { -RatFunc::one() } else { RatFunc::one() };
            let c = sign * r.pow(-((d * (d.saturating_sub(1))) as i64));
            assert_eq!(p.pow(3), ExactMatrix::identity(d + 1).scale(&c));
            let zpz = build_canonical(&r, CanonicalFamily::new(FamilyBase::P, false, true, true), d);
            assert_eq!(p.inverse().unwrap(), zpz);
        }
    }

    #[test]
    fn modifiers_commute_and_orbits_are_distinct() {
        let r = sym();
        for base in [FamilyBase::E, FamilyBase::N] {
            for d in 1..=4 {
                let orbit: Vec<_> = CanonicalFamily::orbit(base).iter().map(|&f| build_canonical(&r, f, d)).collect();
                for i in 0..8 {
                    for j in (i + 1..8).filter(|_| d >= 2) {
                        assert_ne!(orbit[i], orbit[j], "{base:?} d = {d}");
                    }
                }
                for f in CanonicalFamily::orbit(base) {
                    let m = build_canonical(&r, f, d);
                    assert_eq!(build_canonical(&r, f.transpose(), d), m.transpose());
                    assert_eq!(build_canonical(&r, f.z_conjugate(), d), m.z_conjugate().unwrap());
                    let swapped = build_canonical(&r.inverted(), f, d);
                    assert_eq!(build_canonical(&r, f.invert_q(), d), swapped);
                }
            }
        }
    }

    #[test]
    fn e_family_shapes_and_sums() {
        let r = sym();
        for d in 0..=8 {
            let n = d + 1;
            for f in CanonicalFamily::orbit(FamilyBase::E) {
                let m = build_canonical(&r, f, d);
                let upper = (0..n).all(|i| (0..n).all(|j| j == i || j == i + 1 || m.get(i, j).is_zero()));
                let lower = (0..n).all(|i| (0..n).all(|j| j == i || j + 1 == i || m.get(i, j).is_zero()));
                assert!(upper || lower);
                let diag: Vec<_> = (0..n).map(|i| m.get(i, i).clone()).collect();
                let kq = build_canonical(&r, CanonicalFamily::plain(FamilyBase::K), d);
                let kqi = build_canonical(&r, CanonicalFamily::new(FamilyBase::K, false, true, false), d);
                assert!(diag == (0..n).map(|i| kq.get(i, i).clone()).collect::<Vec<_>>()
                    || diag == (0..n).map(|i| kqi.get(i, i).clone()).collect::<Vec<_>>());
                let rows: Vec<RatFunc> =
                    (0..n).map(|i| (0..n).fold(RatFunc::zero(), |a, j| a + m.get(i, j))).collect();
                let cols: Vec<RatFunc> =
                    (0..n).map(|j| (0..n).fold(RatFunc::zero(), |a, i| a + m.get(i, j))).collect();
                let constant = |v: &[RatFunc]| {
                    v.iter().all(|s| *s == v[0]) && (v[0] == r.pow(d as i64) || v[0] == r.pow(-(d as i64)))
                };
                assert!(constant(&rows) || constant(&cols), "{f} at d = {d}");
            }
        }
    }

    #[test]
    fn rep_table_examples() {
        let r = sym();
        let y = Axis::Y;
        assert_eq!(rep(&r, SpaceId::V, BasisId::row(y), Generator::Equitable(Axis::X), 3), plain(FamilyBase::E, 3));
        assert_eq!(rep(&r, SpaceId::V, BasisId::row(Axis::X), Generator::Equitable(Axis::X), 3), plain(FamilyBase::K, 3));
        for d in 0..=4 {
            let t_inv = build_canonical(&r, CanonicalFamily::new(FamilyBase::T, false, true, false), d);
            assert_eq!(rep(&r, SpaceId::VDual, BasisId::row(y), Generator::N(Axis::Y), d), t_inv);
            let zntz = build_canonical(&r, CanonicalFamily::new(FamilyBase::N, true, false, true), d);
            assert_eq!(rep(&r, SpaceId::V, BasisId::inv_col(Axis::Z), Generator::N(Axis::X), d), zntz);
            let zetz = build_canonical(&r, CanonicalFamily::new(FamilyBase::E, true, false, true), d);
            assert_eq!(rep(&r, SpaceId::VDual, BasisId::col(Axis::X), Generator::Equitable(Axis::Z), d), zetz);
        }
    }

    #[test]
    fn dual_table_transcription() {
        // The table for V* written out directly, for the [y] bases.
        use FamilyBase::{E, K, N, T};
        let r = sym();
        let f = |b, t, qi, z| CanonicalFamily::new(b, t, qi, z);
        let cases: [(BasisId, [(CanonicalFamily, bool); 6]); 4] = [
            (BasisId::row(Axis::Y), [
                (f(E, false, true, false), false), (f(K, false, true, false), false), (f(E, false, false, true), false),
                (f(N, false, true, false), false), (f(T, false, true, false), false), (f(N, false, false, true), true),
            ]),
            (BasisId::col(Axis::Y), [
                (f(E, true, false, true), false), (f(K, false, true, false), false), (f(E, true, true, false), false),
                (f(N, true, false, true), true), (f(T, true, true, false), false), (f(N, true, true, false), false),
            ]),
            (BasisId::inv_row(Axis::Y), [
                (f(E, false, true, true), false), (f(K, false, false, false), false), (f(E, false, false, false), false),
                (f(N, false, true, true), false), (f(T, false, false, false), true), (f(N, false, false, false), true),
            ]),
            (BasisId::inv_col(Axis::Y), [
                (f(E, true, false, false), false), (f(K, false, false, false), false), (f(E, true, true, true), false),
                (f(N, true, false, false), true), (f(T, true, false, false), true), (f(N, true, true, true), false),
            ]),
        ];
        let gens = [
            Generator::Equitable(Axis::X), Generator::Equitable(Axis::Y), Generator::Equitable(Axis::Z),
            Generator::N(Axis::X), Generator::N(Axis::Y), Generator::N(Axis::Z),
        ];
        for d in 0..=4 {
            for (b, entries) in &cases {
                for (g, (fam, neg)) in gens.iter().zip(entries) {
                    let m = build_canonical(&r, *fam, d);
                    let expect = if *neg { m.neg() } else { m };
                    assert_eq!(rep(&r, SpaceId::VDual, *b, *g, d), expect, "{b} {g} d = {d}");
                }
            }
        }
    }

    #[test]
    fn algebra_holds_on_all_bases() {
        let r = sym();
        for d in [0, 1, 2, 3] {
            for space in SpaceId::ALL {
                for b in BasisId::all() {
                    let report = verify_algebra(&r, space, b, d);
                    assert!(report.all_passed(), "{space} {b} d = {d}\n{report}");
                    assert_eq!(report.len(), 21);
                }
            }
        }
        let zero = rep(&r, SpaceId::V, BasisId::row(Axis::Y), Generator::N(Axis::Y), 0);
        assert!(zero.is_zero());
    }

    #[test]
    fn dagger_transpose() {
        let r = sym();
        for d in 0..=3 {
            for b in BasisId::all() {
                let report = dagger_transpose_check(&r, b, d);
                assert!(report.all_passed(), "{b} d = {d}\n{report}");
            }
        }
    }

    #[test]
    fn spectra_are_multiplicity_free() {
        let r = sym();
        for d in 0..=4 {
            for space in SpaceId::ALL {
                let sr = space_ring(&r, space);
                for b in BasisId::all() {
                    for a in Axis::ALL {
                        let m = rep(&r, space, b, Generator::Equitable(a), d);
                        for i in 0..=d {
                            let theta = sr.pow(d as i64 - 2 * i as i64);
                            let shifted = m.sub(&ExactMatrix::identity(d + 1).scale(&theta));
                            assert_eq!(crate::exactla::Subspace::kernel(&shifted).dim(), 1);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn family_names_round_trip() {
        for base in [FamilyBase::K, FamilyBase::E, FamilyBase::N, FamilyBase::T, FamilyBase::P] {
            for f in CanonicalFamily::orbit(base) {
                let back: CanonicalFamily = f.to_string().parse().unwrap();
                assert_eq!(back, f);
            }
        }
        assert!("Q".parse::<CanonicalFamily>().is_err());
    }
}
