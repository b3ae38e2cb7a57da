//! Property suites over a [`ModuleSpec`], each returning a [`VerificationReport`].
//!
//! Every check compares computed matrices and subspaces against independently
//! stated tables, so the suites double as regression oracles.

use crate::exactla::{constrained_endomorphism_space, flatten, ExactMatrix, ShapeKind, Subspace};
use crate::repkit::{space_ring, Axis, BasisId, DecompId, Flavor, SpaceId, VerificationReport};
use crate::scalars::Scalar;

use super::{derived_scalar, ModuleSpec};

fn scaled<S: Scalar>(v: &[S], c: &S) -> Vec<S> {
    v.iter().map(|a| a.clone() * c).collect()
}

fn image<S: Scalar>(w: &Subspace<S>, m: &ExactMatrix<S>) -> Subspace<S> {
    w.image(m).expect("operator and subspace share the ambient dimension")
}

fn meet<S: Scalar>(a: &Subspace<S>, b: &Subspace<S>) -> Subspace<S> {
    a.intersect(b).expect("subspaces share the ambient dimension")
}

fn join<S: Scalar>(a: &Subspace<S>, b: &Subspace<S>) -> Subspace<S> {
    a.sum(b).expect("subspaces share the ambient dimension")
}

/// Component `k` of a decomposition, with the zero subspace outside `0..=d`.
fn comp<S: Scalar>(comps: &[Subspace<S>], k: isize) -> Subspace<S> {
    if k < 0 || k as usize >= comps.len() {
        Subspace::zero(comps[0].ambient_dim())
    } else {
        comps[k as usize].clone()
    }
}

fn shifted<S: Scalar>(m: &ExactMatrix<S>, c: &S) -> ExactMatrix<S> {
    m.sub(&ExactMatrix::identity(m.rows()).scale(c))
}

/// Whether `phi V_i` lies in the span of `V_{i+lo} .. V_{i+hi}` for every `i`.
fn maps_within<S: Scalar>(comps: &[Subspace<S>], phi: &ExactMatrix<S>, lo: isize, hi: isize) -> bool {
    (0..comps.len() as isize).all(|i| {
        let target = (i + lo..=i + hi).fold(Subspace::zero(phi.rows()), |acc, k| join(&acc, &comp(comps, k)));
        image(&comps[i as usize], phi).is_subspace_of(&target)
    })
}

/// Whether `phi V_i = V_{i+shift}` for every `i`.
fn maps_onto<S: Scalar>(comps: &[Subspace<S>], phi: &ExactMatrix<S>, shift: isize) -> bool {
    (0..comps.len() as isize).all(|i| image(&comps[i as usize], phi) == comp(comps, i + shift))
}

/// `(eta_u, eta*_v)` on `V`, and the same with arguments exchanged on `V*`.
fn p<S: Scalar>(spec: &ModuleSpec<S>, space: SpaceId, u: Axis, v: Axis) -> S {
    match space {
        SpaceId::V => spec.pairing(u, v).clone(),
        SpaceId::VDual => spec.pairing(v, u).clone(),
    }
}

fn binom2(k: usize) -> i64 {
    (k * k.saturating_sub(1) / 2) as i64
}

/// Dual pairs, the antidiagonal Gram of row bases, the six-factor identity,
/// vanishing of `(eta_u, eta*_u)` and adjointness of the generators.
pub fn pairing_suite<S: Scalar>(spec: &ModuleSpec<S>) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = spec.d();
    let n = d + 1;
    let ring = spec.ring();
    for b in BasisId::all() {
        match spec.gram(b, b.dual()) {
            Ok(g) => r.check_eq(format!("gram {b} vs dual {}", b.dual()), &g, &ExactMatrix::identity(n)),
            Err(e) => r.check_with_note(format!("gram {b} vs dual {}", b.dual()), false, e.to_string()),
        }
    }
    for xi in Axis::ALL {
        let b = BasisId::row(xi);
        let g = match spec.gram(b, b) {
            Ok(g) => g,
            Err(e) => {
                r.check_with_note(format!("gram {b} vs {b}"), false, e.to_string());
                continue;
            }
        };
        let corner = g.get(0, d).clone();
        let want = ExactMatrix::from_fn(n, n, |i, j| {
            if i + j != d {
                return S::zero();
            }
            let sign = if i % 2 == 1 { -S::one() } else { S::one() };
            let binom = ring.q_binom(d, i).expect("0 <= i <= d");
            sign * ring.pow((i * d.saturating_sub(1)) as i64) * binom * &corner
        });
        r.check_eq(format!("gram {b} vs {b} is the weighted antidiagonal"), &g, &want);
        let sign = if d % 2 == 1 { -S::one() } else { S::one() };
        let endpoint = sign * ring.pow((d * d.saturating_sub(1)) as i64) * &corner;
        r.check(format!("gram {b} vs {b} endpoint relation"), g.get(d, 0) == &endpoint);
    }
    let derived = derived_scalar(ring, d, spec.free_scalars());
    r.check("six-factor identity", *spec.pairing(Axis::X, Axis::Z) == derived);
    let products = spec.pairing(Axis::X, Axis::Y).clone()
        * spec.pairing(Axis::Y, Axis::Z)
        * spec.pairing(Axis::Z, Axis::X);
    let reversed = spec.pairing(Axis::Y, Axis::X).clone()
        * spec.pairing(Axis::Z, Axis::Y)
        * spec.pairing(Axis::X, Axis::Z);
    let sign = if d % 2 == 1 { -S::one() } else { S::one() };
    r.check("six-factor ratio", products == sign * ring.pow((d * d.saturating_sub(1)) as i64) * reversed);
    if d >= 1 {
        for a in Axis::ALL {
            r.check(format!("(eta_{a}, eta*_{a}) = 0"), spec.pairing(a, a).is_zero());
        }
    }
    let v = spec.reps(SpaceId::V);
    let w = spec.reps(SpaceId::VDual);
    for a in Axis::ALL {
        r.check_eq(format!("{a} is self-adjoint"), &v.equitable(a).transpose(), w.equitable(a));
        r.check_eq(format!("n_{a} is skew-adjoint"), &v.nil(a).transpose(), &w.nil(a).neg());
    }
    r.check_eq("y_inv is self-adjoint", &v.y_inv.transpose(), &w.y_inv);
    r
}

/// Flags, decompositions and the action tables of the generators on them.
/// `uniqueness` enables the exhaustive search for common invariant subspaces.
pub fn flag_suite<S: Scalar>(spec: &ModuleSpec<S>, uniqueness: bool) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = spec.d();
    let n = d + 1;
    for space in SpaceId::ALL {
        let ring = space_ring(spec.ring(), space);
        let reps = spec.reps(space);
        let pw = |a: Axis, k: usize| spec.flag_power(space, a, k);
        let kernel = |a: Axis| Subspace::kernel(reps.nil(a));

        for a in Axis::ALL {
            let f = spec.flag(space, a);
            let dims_ok = f.iter().enumerate().all(|(i, m)| m.dim() == i + 1);
            let nested = f.windows(2).all(|w| w[0].is_subspace_of(&w[1]));
            r.check(format!("{space}: flag {a} has dimensions 1..d+1 and is nested"), dims_ok && nested);
            let kernel_ok = (0..=d + 1).all(|i| Subspace::kernel(&reps.nil(a).pow((d + 1 - i) as u32)) == pw(a, i));
            r.check(format!("{space}: n_{a}^i V is the kernel of n_{a}^(d-i+1)"), kernel_ok);
        }
        for a in Axis::ALL {
            let b = a.next();
            let (fa, fb) = (spec.flag(space, a), spec.flag(space, b));
            let opposite = (0..n).all(|i| (0..n).filter(|j| i + j < d).all(|j| meet(&fa[i], &fb[j]).dim() == 0));
            r.check(format!("{space}: flags {a} and {b} are opposite"), opposite);
        }

        for id in DecompId::all() {
            let comps = spec.decomposition(space, id);
            let (xi, nu, pi) = (id.axis, id.axis.next(), id.axis.prev());
            let (up, down) = if id.inverted { (nu, pi) } else { (pi, nu) };
            let tag = format!("{space} {id}");

            let direct = comps.iter().all(|c| c.dim() == 1)
                && comps.iter().fold(Subspace::zero(n), |acc, c| join(&acc, c)).dim() == n;
            r.check(format!("{tag}: components are lines spanning the space"), direct);

            let desc = (0..n).all(|i| meet(&pw(down, d - i), &pw(up, i)) == comps[i]);
            r.check(format!("{tag}: components are intersections of flag members"), desc);
            let induced = (0..n).all(|i| (0..=i).fold(Subspace::zero(n), |acc, k| join(&acc, &comps[k])) == pw(down, d - i));
            r.check(format!("{tag}: induced flag is n_{down}^(d-i)"), induced);

            r.check(format!("{tag}: n_{up} raises onto the next component"), maps_onto(&comps, reps.nil(up), 1));
            r.check(format!("{tag}: n_{down} lowers onto the previous component"), maps_onto(&comps, reps.nil(down), -1));
            r.check(format!("{tag}: n_{xi} is tridiagonal"), maps_within(&comps, reps.nil(xi), -1, 1));

            let theta = |i: usize| ring.pow(if id.inverted { 2 * i as i64 - d as i64 } else { d as i64 - 2 * i as i64 });
            let eigen = (0..n).all(|i| image(&comps[i], &shifted(reps.equitable(xi), &theta(i))).dim() == 0);
            r.check(format!("{tag}: {xi} acts by its eigenvalue"), eigen);
            let raise = (0..n).all(|i| {
                image(&comps[i], &shifted(reps.equitable(down), &(S::one() / theta(i)))) == comp(&comps, i as isize + 1)
            });
            r.check(format!("{tag}: {down} minus the inverse eigenvalue raises"), raise);
            let lower = (0..n).all(|i| {
                image(&comps[i], &shifted(reps.equitable(up), &(S::one() / theta(i)))) == comp(&comps, i as isize - 1)
            });
            r.check(format!("{tag}: {up} minus the inverse eigenvalue lowers"), lower);

            let v_first = (0..n).all(|i| image(&kernel(down), &reps.nil(up).pow(i as u32)) == comps[i]);
            let v_last = (0..n).all(|i| image(&kernel(up), &reps.nil(down).pow((d - i) as u32)) == comps[i]);
            r.check(format!("{tag}: components from the kernels of n_{down} and n_{up}"), v_first && v_last);

            let last = &comps[d];
            let first = &comps[0];
            let five = image(first, reps.nil(down)).dim() == 0
                && (0..n).all(|i| image(first, &reps.nil(up).pow(i as u32)).is_subspace_of(&comps[i]))
                && image(last, reps.nil(up)).dim() == 0
                && (0..n).all(|i| image(last, &reps.nil(down).pow((d - i) as u32)).is_subspace_of(&comps[i]));
            r.check(format!("{tag}: endpoint kernel conditions"), five);

            if d >= 1 {
                let unique_pair = DecompId::all().into_iter().all(|other| {
                    let oc = spec.decomposition(space, other);
                    let holds = maps_within(&oc, reps.nil(up), 1, 1) && maps_within(&oc, reps.nil(down), -1, -1);
                    holds == (other == id)
                });
                r.check(format!("{tag}: the only decomposition with n_{up} raising and n_{down} lowering"), unique_pair);
                let quasi = DecompId::all().into_iter().all(|other| {
                    let oc = spec.decomposition(space, other);
                    let holds = maps_within(&oc, reps.equitable(up), -1, 0)
                        && maps_within(&oc, reps.equitable(xi), 0, 0)
                        && maps_within(&oc, reps.equitable(down), 0, 1);
                    holds == (other == id)
                });
                r.check(format!("{tag}: the only decomposition with {up} quasi-lowering, {xi} diagonal, {down} quasi-raising"), quasi);
            }
        }

        for a in Axis::ALL {
            let invariant = (0..=d + 1).all(|i| {
                let w = pw(a, i);
                [a.next(), a.prev()].iter().all(|&b| image(&w, reps.equitable(b)).is_subspace_of(&w))
            });
            r.check(format!("{space}: n_{a}^i V is invariant under the other two generators"), invariant);
            if uniqueness {
                let comps = spec.decomposition(space, DecompId::new(a.next(), false));
                let other = reps.equitable(a.prev());
                let mut found: Vec<Vec<Subspace<S>>> = vec![Vec::new(); n + 1];
                for mask in 0u32..(1 << n) {
                    let w = (0..n)
                        .filter(|k| mask & (1 << k) != 0)
                        .fold(Subspace::zero(n), |acc, k| join(&acc, &comps[k]));
                    if image(&w, other).is_subspace_of(&w) {
                        found[w.dim()].push(w);
                    }
                }
                let unique = (0..=n).all(|k| found[k].len() == 1 && found[k][0] == pw(a, n - k));
                r.check(format!("{space}: n_{a}^i V is the unique common invariant subspace of its dimension"), unique);
            }
        }
    }

    let vdim = |space: SpaceId, a: Axis, i: usize| spec.flag_power(space, a, i);
    for a in Axis::ALL {
        let ok = (0..=d + 1).all(|i| spec.annihilator(&vdim(SpaceId::V, a, i)).ok() == Some(vdim(SpaceId::VDual, a, d + 1 - i)));
        r.check(format!("n_{a}^i V and n_{a}^(d-i+1) V* are orthogonal complements"), ok);
    }

    let c2 = binom2(d);
    for space in SpaceId::ALL {
        let ring = space_ring(spec.ring(), space);
        let reps = spec.reps(space);
        let fact = ring.q_factorial(d);
        let sign = if d % 2 == 1 { -S::one() } else { S::one() };
        for xi in Axis::ALL {
            let (nu, pi) = (xi.next(), xi.prev());
            let eta = spec.eta(space, xi).to_vec();
            let via_pi = reps.nil(pi).pow(d as u32).apply(&eta);
            let want_pi = fact.clone() * ring.pow(-c2) * p(spec, space, xi, nu) / p(spec, space, pi, nu);
            r.check(format!("{space}: n_{pi}^d eta_{xi}"), via_pi == scaled(spec.eta(space, pi), &want_pi));
            let via_nu = reps.nil(nu).pow(d as u32).apply(&eta);
            let want_nu = sign.clone() * &fact * ring.pow(c2) * p(spec, space, xi, pi) / p(spec, space, nu, pi);
            r.check(format!("{space}: n_{nu}^d eta_{xi}"), via_nu == scaled(spec.eta(space, nu), &want_nu));
        }
    }

    if let Ok(b) = spec.basis_vectors(SpaceId::V, BasisId::row(Axis::Y)) {
        let v = spec.reps(SpaceId::V);
        let ring = spec.ring();
        let ok = v.z.apply(&b[d]) == scaled(&b[d], &ring.pow(d as i64))
            && v.n_x.apply(&b[d]).iter().all(S::is_zero)
            && v.x.apply(&b[0]) == scaled(&b[0], &ring.pow(-(d as i64)))
            && v.n_z.apply(&b[0]).iter().all(S::is_zero);
        r.check("V: endpoint eigenvectors of the [y]row basis", ok);
    } else {
        r.check("V: endpoint eigenvectors of the [y]row basis", false);
    }
    r
}

/// Agreement of both closed forms, row sums and the endpoint tables.
pub fn closed_form_suite<S: Scalar>(spec: &ModuleSpec<S>) -> VerificationReport {
    let mut r = VerificationReport::new();
    let d = spec.d();
    for space in SpaceId::ALL {
        for b in BasisId::all() {
            let tag = format!("{space} {b}");
            let vs = match spec.basis_vectors(space, b) {
                Ok(vs) => vs,
                Err(e) => {
                    r.check_with_note(format!("{tag}: closed forms agree"), false, e.to_string());
                    continue;
                }
            };
            r.check(format!("{tag}: closed forms agree"), true);
            let comps = spec.decomposition(space, b.decomposition());
            r.check(format!("{tag}: vectors lie in the induced decomposition"), vs.iter().zip(&comps).all(|(v, c)| c.contains(v)));
            if b.flavor == Flavor::Row {
                let sum = vs.iter().fold(vec![S::zero(); d + 1], |acc, v| acc.iter().zip(v).map(|(a, b)| a.clone() + b).collect());
                r.check(format!("{tag}: vectors sum to eta_{}", b.axis), sum == spec.eta(space, b.axis));
            }
            let (xi, nu, pi) = (b.axis, b.axis.next(), b.axis.prev());
            let (first, last) = match b.flavor {
                Flavor::Row => (
                    scaled(spec.eta(space, nu), &(p(spec, space, xi, pi) / p(spec, space, nu, pi))),
                    scaled(spec.eta(space, pi), &(p(spec, space, xi, nu) / p(spec, space, pi, nu))),
                ),
                Flavor::Col => (
                    scaled(spec.eta(space, nu), &(S::one() / p(spec, space, nu, xi))),
                    scaled(spec.eta(space, pi), &(S::one() / p(spec, space, pi, xi))),
                ),
            };
            let (first, last) = if b.inverted { (last, first) } else { (first, last) };
            r.check(format!("{tag}: endpoint components"), vs[0] == first && vs[d] == last);
        }
    }
    r
}

/// Endomorphisms cut out by lowering/raising and quasi-lowering/quasi-raising
/// constraints relative to two decompositions, for each axis.
pub fn shape_suite<S: Scalar>(spec: &ModuleSpec<S>) -> VerificationReport {
    let mut r = VerificationReport::new();
    let n = spec.d() + 1;
    let v = spec.reps(SpaceId::V);
    for xi in Axis::ALL {
        let (lo, hi) = (DecompId::new(xi.prev(), false), DecompId::new(xi.next(), false));
        let strict = [spec.shape_constraint(lo, ShapeKind::Lowering), spec.shape_constraint(hi, ShapeKind::Raising)];
        match constrained_endomorphism_space(n, &strict) {
            Ok(s) => r.check(
                format!("lowering for {lo} and raising for {hi} is the line through n_{xi}"),
                s == Subspace::span(n * n, &[flatten(v.nil(xi))]) && (n == 1 || s.dim() == 1),
            ),
            Err(e) => r.check_with_note(format!("lowering for {lo} and raising for {hi}"), false, e.to_string()),
        }
        let quasi = [spec.shape_constraint(lo, ShapeKind::QuasiRaising), spec.shape_constraint(hi, ShapeKind::QuasiLowering)];
        match constrained_endomorphism_space(n, &quasi) {
            Ok(s) => {
                let span = Subspace::span(n * n, &[flatten(v.equitable(xi)), flatten(&ExactMatrix::identity(n))]);
                r.check(
                    format!("quasi-raising for {lo} and quasi-lowering for {hi} is spanned by {xi} and 1"),
                    s == span && (n == 1 || s.dim() == 2),
                )
            }
            Err(e) => r.check_with_note(format!("quasi-raising for {lo} and quasi-lowering for {hi}"), false, e.to_string()),
        }
    }
    r
}
