//! The check registry: every registered statement about hollow and
//! irreducible ideals, run against a ring context. Each check counts its
//! hypothesis instances and pins a replayable witness to the first failed
//! conclusion.
//!
//! Vocabulary used in the statements: "hollow" is the pairwise splitting
//! property, "family-hollow" the arbitrary-family version, "irreducible"
//! the meet version of each, "escape sum" the sum of all ideals not
//! containing a given one, and "the radical" the intersection of the
//! maximal ideals.

use crate::gcd::{satisfies_star, GcdStatus, StarError};
use crate::hollow::{
    is_small_in, least_not_contained_in, maximal_sh_under, GreatestEscape, LeastEscape, ShClass,
};
use crate::ideal::{ideal_colon, ideal_power, ideal_product};
use crate::lattice::IdealLattice;
use crate::quotient::hom_image;
use crate::vecspace::{m_mod_m2, split_postconditions_hold, vs_split};
use crate::verify::{
    expr_at, localization_scene, quotient_scene, CheckDef, CheckOutcome, Claim, IdealExpr, Pred,
    RingContext, Scene, Witness,
};

fn wit(scene: Scene, claim: Claim, expected: bool) -> Witness {
    Witness {
        scene,
        claim,
        expected,
    }
}

fn base(claim: Claim, expected: bool) -> Witness {
    wit(Scene::Base, claim, expected)
}

fn gamma_e(e: IdealExpr) -> IdealExpr {
    IdealExpr::Gamma(Box::new(e))
}

fn colon_e(a: IdealExpr, b: IdealExpr) -> IdealExpr {
    IdealExpr::Colon(Box::new(a), Box::new(b))
}

fn sum_e(a: IdealExpr, b: IdealExpr) -> IdealExpr {
    IdealExpr::Sum(Box::new(a), Box::new(b))
}

fn meet_e(a: IdealExpr, b: IdealExpr) -> IdealExpr {
    IdealExpr::Meet(Box::new(a), Box::new(b))
}

fn prod_e(a: IdealExpr, b: IdealExpr) -> IdealExpr {
    IdealExpr::Product(Box::new(a), Box::new(b))
}

fn pow_e(a: IdealExpr, n: u32) -> IdealExpr {
    IdealExpr::Power(Box::new(a), n)
}

fn colon_in(lat: &IdealLattice, a: usize, b: usize) -> usize {
    let r = lat.ring();
    lat.index_of(&ideal_colon(r, lat.ideal(a), lat.ideal(b)).expect("same ring"))
        .expect("colon of lattice members is a lattice member")
}

fn product_in(lat: &IdealLattice, a: usize, b: usize) -> usize {
    let r = lat.ring();
    lat.index_of(&ideal_product(r, lat.ideal(a), lat.ideal(b)).expect("same ring"))
        .expect("product of lattice members is a lattice member")
}

fn power_in(lat: &IdealLattice, a: usize, n: u32) -> usize {
    let r = lat.ring();
    lat.index_of(&ideal_power(r, lat.ideal(a), n).expect("same ring"))
        .expect("power of a lattice member is a lattice member")
}

/// Maximal ideals whose power chain has an entry not containing `i`,
/// paired with the first escaping exponent.
fn power_escapes(lat: &IdealLattice, i: usize) -> Vec<(usize, u32)> {
    lat.summary()
        .maximals
        .iter()
        .filter_map(|&m| {
            lat.power_chain(m)
                .iter()
                .position(|&p| !lat.le(i, p))
                .map(|j| (m, j as u32 + 1))
        })
        .collect()
}

fn escaped_maximals(lat: &IdealLattice, i: usize) -> Vec<usize> {
    lat.summary()
        .maximals
        .iter()
        .copied()
        .filter(|&m| !lat.le(i, m))
        .collect()
}

fn chk_max_sh(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        let sh_under: Vec<usize> = (0..lat.len())
            .filter(|&j| ctx.hp[j].is_sh && lat.le(j, i))
            .collect();
        if sh_under.is_empty() {
            continue;
        }
        out.hit();
        let tops = maximal_sh_under(lat, &ctx.hp, i);
        for &m in &tops {
            out.require(&ctx.ring, ctx.hp[m].is_sh && lat.le(m, i), || {
                base(
                    Claim::and(
                        Claim::Holds(Pred::Sh, ctx.expr(m)),
                        Claim::Subset(ctx.expr(m), ctx.expr(i)),
                    ),
                    true,
                )
            });
            for j in 0..lat.len() {
                let dominated = ctx.hp[j].is_sh && lat.lt(m, j) && lat.le(j, i);
                out.require(&ctx.ring, !dominated, || {
                    base(
                        Claim::and(
                            Claim::Holds(Pred::Sh, ctx.expr(j)),
                            Claim::and(
                                Claim::StrictSubset(ctx.expr(m), ctx.expr(j)),
                                Claim::Subset(ctx.expr(j), ctx.expr(i)),
                            ),
                        ),
                        false,
                    )
                });
            }
        }
        for &j in &sh_under {
            let covered = tops.iter().any(|&m| lat.le(j, m));
            out.require(&ctx.ring, covered, || {
                let mut c = Claim::not(Claim::Subset(ctx.expr(j), ctx.expr(j)));
                for &m in &tops {
                    c = Claim::or(c, Claim::Subset(ctx.expr(j), ctx.expr(m)));
                }
                base(c, true)
            });
        }
    }
    out
}

fn chk_gamma_sandwich(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        if !ctx.hp[i].is_csh {
            continue;
        }
        out.hit();
        let g = ctx.hp[i].gamma;
        let below = lat.meet_idx(i, g);
        let above = lat.join_idx(i, g);
        out.require(&ctx.ring, lat.lt(below, i), || {
            base(
                Claim::StrictSubset(meet_e(ctx.expr(i), gamma_e(ctx.expr(i))), ctx.expr(i)),
                true,
            )
        });
        out.require(&ctx.ring, lat.lt(g, above), || {
            base(
                Claim::StrictSubset(gamma_e(ctx.expr(i)), sum_e(ctx.expr(i), gamma_e(ctx.expr(i)))),
                true,
            )
        });
        for a in 0..lat.len() {
            if lat.lt(a, i) {
                out.require(&ctx.ring, lat.le(a, below), || {
                    base(
                        Claim::Subset(ctx.expr(a), meet_e(ctx.expr(i), gamma_e(ctx.expr(i)))),
                        true,
                    )
                });
            }
            if lat.lt(g, a) {
                out.require(&ctx.ring, lat.le(above, a), || {
                    base(
                        Claim::Subset(sum_e(ctx.expr(i), gamma_e(ctx.expr(i))), ctx.expr(a)),
                        true,
                    )
                });
            }
        }
    }
    out
}

fn chk_colon_sh(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        for &a in &ctx.nzds {
            let ra_expr = IdealExpr::Gens(vec![ctx.ring.name(a).to_string()]);
            let ra = lat
                .index_of_mask(&crate::ideal::principal_ideal(&ctx.ring, a).members)
                .expect("principal ideals are lattice members");
            let met = lat.meet_idx(i, ra);
            if !ctx.hp[met].is_sh {
                continue;
            }
            out.hit();
            let c = colon_in(lat, i, ra);
            out.require(&ctx.ring, ctx.hp[c].is_sh, || {
                base(
                    Claim::Holds(Pred::Sh, colon_e(ctx.expr(i), ra_expr.clone())),
                    true,
                )
            });
            if ctx.hp[met].is_csh {
                out.require(&ctx.ring, ctx.hp[c].is_csh, || {
                    base(
                        Claim::Holds(Pred::Csh, colon_e(ctx.expr(i), ra_expr.clone())),
                        true,
                    )
                });
            }
        }
    }
    out
}

fn chk_quotient_gamma(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for q in &ctx.quotients {
        for i in 0..lat.len() {
            if !ctx.hp[i].is_sh || lat.le(i, q.by) {
                continue;
            }
            out.hit();
            let img = q.image_idx[i];
            let scene = || quotient_scene(lat, q.by);
            let img_expr = expr_at(&q.lat, img);
            out.require(&ctx.ring, q.hp[img].is_sh, || {
                wit(scene(), Claim::Holds(Pred::Sh, img_expr.clone()), true)
            });
            out.require(
                &ctx.ring,
                q.hp[img].gamma == q.image_idx[ctx.hp[i].gamma],
                || {
                    wit(
                        scene(),
                        Claim::Equals(
                            gamma_e(img_expr.clone()),
                            expr_at(&q.lat, q.image_idx[ctx.hp[i].gamma]),
                        ),
                        true,
                    )
                },
            );
            out.require(
                &ctx.ring,
                q.hp[img].l_ideal == q.image_idx[ctx.hp[i].l_ideal],
                || {
                    wit(
                        scene(),
                        Claim::Equals(
                            colon_e(gamma_e(img_expr.clone()), img_expr.clone()),
                            expr_at(&q.lat, q.image_idx[ctx.hp[i].l_ideal]),
                        ),
                        true,
                    )
                },
            );
        }
    }
    out
}

fn chk_surj_image(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for q in &ctx.quotients {
        for i in 0..lat.len() {
            if lat.le(i, q.by) {
                continue;
            }
            let img = q.image_idx[i];
            let img_expr = expr_at(&q.lat, img);
            if ctx.hp[i].is_sh {
                out.hit();
                out.require(&ctx.ring, q.hp[img].is_sh, || {
                    wit(
                        quotient_scene(lat, q.by),
                        Claim::Holds(Pred::Sh, img_expr.clone()),
                        true,
                    )
                });
            }
            if ctx.hp[i].is_csh {
                out.require(&ctx.ring, q.hp[img].is_csh, || {
                    wit(
                        quotient_scene(lat, q.by),
                        Claim::Holds(Pred::Csh, img_expr.clone()),
                        true,
                    )
                });
            }
        }
    }
    out
}

fn chk_ker_preimage(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for q in &ctx.quotients {
        let k = q.by;
        for t in 0..q.lat.len() {
            if !q.hp[t].is_sh {
                continue;
            }
            out.hit();
            let h = q.preimage_idx[t];
            for a in 0..lat.len() {
                for b in a..lat.len() {
                    if !lat.le(h, lat.join_idx(a, b)) {
                        continue;
                    }
                    let ok = lat.le(h, lat.join_idx(a, k)) || lat.le(h, lat.join_idx(b, k));
                    out.require(&ctx.ring, ok, || {
                        base(
                            Claim::or(
                                Claim::Subset(ctx.expr(h), sum_e(ctx.expr(a), ctx.expr(k))),
                                Claim::Subset(ctx.expr(h), sum_e(ctx.expr(b), ctx.expr(k))),
                            ),
                            true,
                        )
                    });
                }
            }
        }
    }
    out
}

fn chk_small_kernel(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for q in &ctx.quotients {
        let k = q.by;
        for t in 0..q.lat.len() {
            let h = q.preimage_idx[t];
            if !is_small_in(lat, k, h).expect("kernel sits inside its preimages") {
                continue;
            }
            if !q.hp[t].is_sh && !q.hp[t].is_csh {
                continue;
            }
            out.hit();
            if q.hp[t].is_sh {
                out.require(&ctx.ring, ctx.hp[h].is_sh, || {
                    base(Claim::Holds(Pred::Sh, ctx.expr(h)), true)
                });
            }
            if q.hp[t].is_csh {
                out.require(&ctx.ring, ctx.hp[h].is_csh, || {
                    base(Claim::Holds(Pred::Csh, ctx.expr(h)), true)
                });
            }
        }
    }
    out
}

fn chk_least(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        if !ctx.hp[i].is_csh {
            continue;
        }
        out.hit();
        let g = ctx.hp[i].gamma;
        out.require(&ctx.ring, !lat.le(i, g), || {
            base(Claim::NotSubset(ctx.expr(i), gamma_e(ctx.expr(i))), true)
        });
        for j in 0..lat.len() {
            let ok = lat.le(j, g) || lat.le(i, j);
            out.require(&ctx.ring, ok, || {
                base(
                    Claim::or(
                        Claim::Subset(ctx.expr(j), gamma_e(ctx.expr(i))),
                        Claim::Subset(ctx.expr(i), ctx.expr(j)),
                    ),
                    true,
                )
            });
        }
    }
    for k in 0..lat.len() {
        if let LeastEscape::Least(i) = least_not_contained_in(lat, k) {
            out.hit();
            out.require(&ctx.ring, ctx.hp[i].is_csh, || {
                base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
            });
        }
    }
    out
}

fn chk_gamma_greatest(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 1..lat.len() {
        out.hit();
        match crate::hollow::greatest_not_containing(lat, i)
            .expect("defined away from the zero ideal")
        {
            GreatestEscape::Greatest(g) => {
                out.require(&ctx.ring, ctx.hp[i].is_csh, || {
                    base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
                });
                out.require(&ctx.ring, g == ctx.hp[i].gamma, || {
                    base(Claim::Equals(gamma_e(ctx.expr(i)), ctx.expr(g)), true)
                });
            }
            GreatestEscape::NoGreatest(_) => {
                out.require(&ctx.ring, !ctx.hp[i].is_csh, || {
                    base(Claim::Holds(Pred::Csh, ctx.expr(i)), false)
                });
            }
        }
    }
    out
}

/// Full powerset scan of families when the lattice allows it.
const FAMILY_POWERSET_LIMIT: usize = 16;

/// Family splitting verdict for ideal `i`: true when every sampled family
/// whose sum contains `i` has a member containing `i`. Returns the first
/// failing family otherwise.
fn family_verdict(lat: &IdealLattice, i: usize) -> (bool, Option<Vec<usize>>) {
    let n = lat.len();
    if n <= FAMILY_POWERSET_LIMIT {
        let total = 1usize << n;
        let mut sums = vec![lat.zero_index(); total];
        for fam in 1..total {
            let low = fam.trailing_zeros() as usize;
            sums[fam] = lat.join_idx(sums[fam & (fam - 1)], low);
        }
        let mut contains_mask = 0usize;
        for j in 0..n {
            if lat.le(i, j) {
                contains_mask |= 1 << j;
            }
        }
        for fam in 0..total {
            if fam & contains_mask == 0 && lat.le(i, sums[fam]) {
                let members = (0..n).filter(|&j| fam & (1 << j) != 0).collect();
                return (false, Some(members));
            }
        }
        (true, None)
    } else {
        let mut fams: Vec<Vec<usize>> = vec![Vec::new()];
        for a in 0..n {
            for b in a..n {
                fams.push(vec![a, b]);
            }
        }
        fams.push((0..n).filter(|&j| !lat.le(i, j)).collect());
        fams.push((0..n).collect());
        for f in fams {
            let sum = f.iter().fold(lat.zero_index(), |s, &j| lat.join_idx(s, j));
            if lat.le(i, sum) && !f.iter().any(|&j| lat.le(i, j)) {
                return (false, Some(f));
            }
        }
        (true, None)
    }
}

fn chk_csh_gamma(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        out.hit();
        let (verdict, bad_family) = family_verdict(lat, i);
        out.require(&ctx.ring, verdict == ctx.hp[i].is_csh, || {
            if let Some(f) = bad_family {
                // A family summing over the ideal where no member contains
                // it, against the recorded family-hollow verdict.
                let sum = f
                    .iter()
                    .fold(IdealExpr::Zero, |s, &j| sum_e(s, ctx.expr(j)));
                let mut escape = Claim::not(Claim::Subset(ctx.expr(i), ctx.expr(i)));
                for &j in &f {
                    escape = Claim::or(escape, Claim::Subset(ctx.expr(i), ctx.expr(j)));
                }
                base(
                    Claim::and(Claim::Subset(ctx.expr(i), sum), escape),
                    true,
                )
            } else {
                base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
            }
        });
    }
    out
}

/// True when `i` is minimal among the ideals not contained in `k`.
fn is_minimal_escape(lat: &IdealLattice, i: usize, k: usize) -> bool {
    !lat.le(i, k) && (0..lat.len()).all(|j| !(lat.lt(j, i) && !lat.le(j, k)))
}

fn chk_arith_minimal(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    if !lat.flags().is_arithmetical {
        return out;
    }
    for i in 0..lat.len() {
        out.hit();
        let exists_k = (0..lat.len()).any(|k| is_minimal_escape(lat, i, k));
        out.require(&ctx.ring, exists_k == ctx.hp[i].is_csh, || {
            if ctx.hp[i].is_csh {
                // The escape sum should have worked as K: some strictly
                // smaller ideal also escapes it.
                let g = ctx.hp[i].gamma;
                let j = (0..lat.len())
                    .find(|&j| lat.lt(j, i) && !lat.le(j, g))
                    .expect("a smaller escape exists when the escape sum fails as K");
                base(
                    Claim::or(
                        Claim::Subset(ctx.expr(j), gamma_e(ctx.expr(i))),
                        Claim::Subset(ctx.expr(i), ctx.expr(j)),
                    ),
                    true,
                )
            } else {
                base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
            }
        });
    }
    out
}

fn chk_si_minimal_escape(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for k in 0..lat.len() {
        if !ctx.ip[k].is_si {
            continue;
        }
        for i in 0..lat.len() {
            if !is_minimal_escape(lat, i, k) {
                continue;
            }
            out.hit();
            out.require(&ctx.ring, ctx.hp[i].is_csh, || {
                base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
            });
        }
    }
    out
}

/// True when `k` is maximal among the ideals not containing `i`.
fn is_maximal_noncontainer(lat: &IdealLattice, k: usize, i: usize) -> bool {
    !lat.le(i, k) && (0..lat.len()).all(|j| !(lat.lt(k, j) && !lat.le(i, j)))
}

fn chk_arith_dual(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    if !lat.flags().is_arithmetical {
        return out;
    }
    for k in 0..lat.len() {
        out.hit();
        let exists_i = (0..lat.len()).any(|i| is_maximal_noncontainer(lat, k, i));
        out.require(&ctx.ring, exists_i == ctx.ip[k].is_si, || {
            if ctx.ip[k].is_si {
                // The least escape of k should witness maximality: some
                // strictly larger ideal also misses it.
                let d = match least_not_contained_in(lat, k) {
                    LeastEscape::Least(d) => d,
                    _ => k,
                };
                let j = (0..lat.len())
                    .find(|&j| lat.lt(k, j) && !lat.le(d, j))
                    .expect("a larger non-container exists when maximality fails");
                base(
                    Claim::or(
                        Claim::not(Claim::StrictSubset(ctx.expr(k), ctx.expr(j))),
                        Claim::Subset(ctx.expr(d), ctx.expr(j)),
                    ),
                    true,
                )
            } else {
                base(Claim::Holds(Pred::Si, ctx.expr(k)), true)
            }
        });
    }
    out
}

fn chk_sh_dual(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh {
            continue;
        }
        for k in 0..lat.len() {
            if !is_maximal_noncontainer(lat, k, i) {
                continue;
            }
            out.hit();
            out.require(&ctx.ring, ctx.ip[k].is_si, || {
                base(Claim::Holds(Pred::Si, ctx.expr(k)), true)
            });
        }
    }
    out
}

fn chk_escapes_jacobson(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh || lat.le(i, jac) {
            continue;
        }
        out.hit();
        out.require(&ctx.ring, ctx.hp[i].is_csh, || {
            base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
        });
        let g = ctx.hp[i].gamma;
        out.require(&ctx.ring, lat.classification(g).is_maximal, || {
            base(Claim::Holds(Pred::Maximal, gamma_e(ctx.expr(i))), true)
        });
        let escaped = escaped_maximals(lat, i);
        out.require(&ctx.ring, escaped.len() == 1, || {
            base(
                Claim::and(
                    Claim::CountEscapedMaximals {
                        ideal: ctx.expr(i),
                        at_most: 1,
                    },
                    Claim::not(Claim::CountEscapedMaximals {
                        ideal: ctx.expr(i),
                        at_most: 0,
                    }),
                ),
                true,
            )
        });
        if let [m] = escaped[..] {
            out.require(&ctx.ring, m == g, || {
                base(Claim::Equals(gamma_e(ctx.expr(i)), ctx.expr(m)), true)
            });
        }
    }
    out
}

fn chk_semiprimitive(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    if ctx.jacobson() != lat.zero_index() {
        return out;
    }
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh {
            continue;
        }
        out.hit();
        out.require(&ctx.ring, ctx.hp[i].is_csh, || {
            base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
        });
    }
    out
}

fn chk_si_min(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh || lat.le(i, jac) {
            continue;
        }
        out.hit();
        for j in 0..lat.len() {
            if lat.lt(j, i) {
                out.require(&ctx.ring, lat.le(j, jac), || {
                    base(Claim::Subset(ctx.expr(j), IdealExpr::Jacobson), true)
                });
            }
        }
    }
    out
}

fn chk_min_jr(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    for i in 0..lat.len() {
        if !is_minimal_escape(lat, i, jac) {
            continue;
        }
        out.hit();
        out.require(&ctx.ring, ctx.hp[i].is_csh, || {
            base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
        });
    }
    out
}

fn chk_colon_equal(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    for i in 0..lat.len() {
        if lat.le(i, jac) {
            continue;
        }
        for &a in &ctx.nzds {
            let ra = lat
                .index_of_mask(&crate::ideal::principal_ideal(&ctx.ring, a).members)
                .expect("principal ideals are lattice members");
            let met = lat.meet_idx(i, ra);
            if !ctx.hp[met].is_sh {
                continue;
            }
            out.hit();
            let ra_expr = IdealExpr::Gens(vec![ctx.ring.name(a).to_string()]);
            let c = colon_in(lat, i, ra);
            out.require(&ctx.ring, c == i, || {
                base(
                    Claim::Equals(colon_e(ctx.expr(i), ra_expr.clone()), ctx.expr(i)),
                    true,
                )
            });
            out.require(&ctx.ring, ctx.hp[i].is_csh, || {
                base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
            });
            let prod = product_in(lat, i, ra);
            out.require(&ctx.ring, prod == met, || {
                base(
                    Claim::Equals(
                        prod_e(ctx.expr(i), ra_expr.clone()),
                        meet_e(ctx.expr(i), ra_expr.clone()),
                    ),
                    true,
                )
            });
        }
    }
    out
}

fn chk_domain_field(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    if !ctx.ring.is_domain() {
        return out;
    }
    out.hit();
    out.require(&ctx.ring, ctx.lat.summary().is_field, || {
        base(Claim::SceneIsField, true)
    });
    for i in 0..ctx.lat.len() {
        let expect = i == ctx.lat.ring_index();
        out.require(&ctx.ring, ctx.hp[i].is_sh == expect, || {
            base(Claim::Holds(Pred::Sh, ctx.expr(i)), expect)
        });
    }
    out
}

fn chk_gamma_proper(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    for i in 0..lat.len() {
        if ctx.hp[i].gamma == lat.ring_index() {
            continue;
        }
        out.hit();
        out.require(&ctx.ring, lat.le(i, jac) || ctx.hp[i].is_csh, || {
            base(
                Claim::or(
                    Claim::Subset(ctx.expr(i), IdealExpr::Jacobson),
                    Claim::Holds(Pred::Csh, ctx.expr(i)),
                ),
                true,
            )
        });
    }
    out
}

fn chk_weakly_coprime(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        let g = ctx.hp[i].gamma;
        if g == lat.ring_index() {
            continue;
        }
        out.hit();
        let weak_applies = !lat.classification(g).is_maximal;
        for a in 0..lat.len() {
            for b in a..lat.len() {
                let j = lat.join_idx(a, b);
                let comaximal = j == lat.ring_index();
                let weakly = lat.classification(j).is_maximal && lat.le(i, j);
                if comaximal || (weak_applies && weakly) {
                    out.require(&ctx.ring, lat.le(i, a) || lat.le(i, b), || {
                        base(
                            Claim::or(
                                Claim::Subset(ctx.expr(i), ctx.expr(a)),
                                Claim::Subset(ctx.expr(i), ctx.expr(b)),
                            ),
                            true,
                        )
                    });
                }
            }
        }
    }
    out
}

/// True when `m` is the only maximal ideal containing `k`.
fn contained_in_one_maximal(lat: &IdealLattice, k: usize, m: usize) -> bool {
    lat.le(k, m)
        && lat
            .summary()
            .maximals
            .iter()
            .all(|&m2| m2 == m || !lat.le(k, m2))
}

fn chk_ann_local(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for loc in &ctx.locs {
        let m = loc.at;
        for k in 0..lat.len() {
            if !contained_in_one_maximal(lat, k, m) {
                continue;
            }
            for i in 0..lat.len() {
                if product_in(lat, i, k) != lat.zero_index() {
                    continue;
                }
                if !loc.hp[loc.image_idx[i]].is_sh {
                    continue;
                }
                out.hit();
                out.require(&ctx.ring, ctx.hp[i].is_sh, || {
                    base(Claim::Holds(Pred::Sh, ctx.expr(i)), true)
                });
            }
        }
    }
    out
}

fn chk_ann_csh(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    for loc in &ctx.locs {
        let m = loc.at;
        for k in 0..lat.len() {
            if !contained_in_one_maximal(lat, k, m) {
                continue;
            }
            for i in 0..lat.len() {
                if lat.le(i, jac) || product_in(lat, i, k) != lat.zero_index() {
                    continue;
                }
                if !loc.hp[loc.image_idx[i]].is_sh {
                    continue;
                }
                out.hit();
                out.require(&ctx.ring, ctx.hp[i].is_csh, || {
                    base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
                });
            }
        }
    }
    out
}

fn chk_ann_primary(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let nil = ctx.nilradical();
    let primes: Vec<usize> = (0..lat.len())
        .filter(|&p| lat.classification(p).is_prime)
        .collect();
    for &m in &lat.summary().maximals {
        for k in 0..lat.len() {
            let cls = lat.classification(k);
            if !cls.is_primary || cls.radical != m {
                continue;
            }
            for i in 0..lat.len() {
                if lat.le(i, nil) || product_in(lat, i, k) != lat.zero_index() {
                    continue;
                }
                out.hit();
                out.require(&ctx.ring, ctx.hp[i].is_csh, || {
                    base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
                });
                for &p in &primes {
                    if p != m {
                        out.require(&ctx.ring, lat.le(i, p), || {
                            base(Claim::Subset(ctx.expr(i), ctx.expr(p)), true)
                        });
                    }
                }
                out.require(&ctx.ring, lat.classification(m).is_minimal_prime, || {
                    base(Claim::Holds(Pred::MinimalPrime, ctx.expr(m)), true)
                });
            }
        }
    }
    out
}

fn chk_reduced_field(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    if ctx.nilradical() != lat.zero_index() {
        return out;
    }
    for loc in &ctx.locs {
        let m = loc.at;
        for k in 0..lat.len() {
            let cls = lat.classification(k);
            if !cls.is_primary || cls.radical != m {
                continue;
            }
            for i in 0..lat.len() {
                if i == lat.zero_index() || product_in(lat, i, k) != lat.zero_index() {
                    continue;
                }
                out.hit();
                out.require(&ctx.ring, loc.lat.summary().is_field, || {
                    wit(localization_scene(lat, m), Claim::SceneIsField, true)
                });
            }
        }
    }
    out
}

fn chk_vs_split(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for &m in &lat.summary().maximals {
        let v = m_mod_m2(lat, m).expect("maximal ideal");
        if v.dim() < 2 {
            continue;
        }
        for w in v.all_subspaces() {
            if w.count() <= 1 || w.count() == v.len() {
                continue;
            }
            out.hit();
            let ok = match vs_split(&v, &w) {
                Ok(s) => split_postconditions_hold(&v, &w, &s),
                Err(_) => false,
            };
            out.require(&ctx.ring, ok, || {
                base(
                    Claim::CotangentSplit {
                        at: ctx.expr(m),
                        w: w.iter().map(|x| x as u64).collect(),
                    },
                    true,
                )
            });
        }
    }
    out
}

fn chk_i_in_m2(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh || !lat.le(i, jac) {
            continue;
        }
        for &m in &lat.summary().maximals {
            let v = m_mod_m2(lat, m).expect("maximal ideal");
            if v.dim() < 2 {
                continue;
            }
            out.hit();
            let m2 = product_in(lat, m, m);
            out.require(&ctx.ring, lat.le(i, m2), || {
                base(Claim::Subset(ctx.expr(i), pow_e(ctx.expr(m), 2)), true)
            });
        }
    }
    out
}

fn chk_comax_powers(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh {
            continue;
        }
        out.hit();
        let escapes = power_escapes(lat, i);
        out.require(&ctx.ring, escapes.len() <= 1, || {
            base(
                Claim::CountPowerEscapes {
                    ideal: ctx.expr(i),
                    at_most: 1,
                    from_exponent: 0,
                },
                true,
            )
        });
    }
    out
}

fn chk_a_gamma(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh || lat.le(i, jac) {
            continue;
        }
        let g = ctx.hp[i].gamma;
        for a in 0..lat.len() {
            let chain_escapes = lat.power_chain(a).iter().any(|&p| !lat.le(i, p));
            if !chain_escapes {
                continue;
            }
            out.hit();
            out.require(&ctx.ring, lat.le(a, g), || {
                base(Claim::Subset(ctx.expr(a), gamma_e(ctx.expr(i))), true)
            });
        }
    }
    out
}

/// Claim describing a stored escape classification, for cross-checking the
/// recorded case against a fresh derivation.
fn class_claim(ctx: &RingContext, i: usize, class: &ShClass) -> Claim {
    let e = ctx.expr(i);
    match class {
        ShClass::UniqueEscapedMaximal { maximal } => Claim::and(
            Claim::NotSubset(e.clone(), ctx.expr(*maximal)),
            Claim::CountEscapedMaximals {
                ideal: e,
                at_most: 1,
            },
        ),
        ShClass::InAllMaximalPowers => Claim::CountPowerEscapes {
            ideal: e,
            at_most: 0,
            from_exponent: 0,
        },
        ShClass::UniqueShallowMaximal { maximal, exponent } => {
            let m = ctx.expr(*maximal);
            Claim::and(
                Claim::CountEscapedMaximals {
                    ideal: e.clone(),
                    at_most: 0,
                },
                Claim::and(
                    Claim::Subset(e.clone(), pow_e(m.clone(), exponent - 1)),
                    Claim::and(
                        Claim::not(Claim::Subset(e.clone(), pow_e(m, *exponent))),
                        Claim::CountPowerEscapes {
                            ideal: e,
                            at_most: 1,
                            from_exponent: 2,
                        },
                    ),
                ),
            )
        }
        ShClass::NotSh => Claim::not(Claim::Holds(Pred::Sh, e)),
    }
}

fn chk_trichotomy(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh {
            continue;
        }
        out.hit();
        let escaped = escaped_maximals(lat, i);
        let computed = if escaped.len() >= 2 {
            out.require(&ctx.ring, false, || {
                base(
                    Claim::CountEscapedMaximals {
                        ideal: ctx.expr(i),
                        at_most: 1,
                    },
                    true,
                )
            });
            continue;
        } else if let [m] = escaped[..] {
            // One escaped maximal: principal, family-hollow, escape sum is
            // that maximal, and the ideal survives inside all powers of
            // everything not under the escape sum.
            out.require(&ctx.ring, lat.is_principal(i), || {
                base(Claim::Holds(Pred::Principal, ctx.expr(i)), true)
            });
            out.require(&ctx.ring, ctx.hp[i].is_csh, || {
                base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
            });
            out.require(&ctx.ring, ctx.hp[i].gamma == m, || {
                base(Claim::Equals(gamma_e(ctx.expr(i)), ctx.expr(m)), true)
            });
            let g = ctx.hp[i].gamma;
            for a in 0..lat.len() {
                if lat.le(a, g) {
                    continue;
                }
                for (n, &p) in lat.power_chain(a).iter().enumerate() {
                    out.require(&ctx.ring, lat.le(i, p), || {
                        base(
                            Claim::Subset(ctx.expr(i), pow_e(ctx.expr(a), n as u32 + 1)),
                            true,
                        )
                    });
                }
            }
            ShClass::UniqueEscapedMaximal { maximal: m }
        } else {
            let bad = power_escapes(lat, i);
            match bad[..] {
                [] => ShClass::InAllMaximalPowers,
                [(m, e)] => {
                    out.require(&ctx.ring, e >= 2, || {
                        base(
                            Claim::CountPowerEscapes {
                                ideal: ctx.expr(i),
                                at_most: 1,
                                from_exponent: 2,
                            },
                            true,
                        )
                    });
                    ShClass::UniqueShallowMaximal {
                        maximal: m,
                        exponent: e,
                    }
                }
                _ => {
                    out.require(&ctx.ring, false, || {
                        base(
                            Claim::CountPowerEscapes {
                                ideal: ctx.expr(i),
                                at_most: 1,
                                from_exponent: 0,
                            },
                            true,
                        )
                    });
                    continue;
                }
            }
        };
        let stored = ctx.hp[i].classification_case;
        out.require(&ctx.ring, stored == computed, || {
            base(class_claim(ctx, i, &stored), true)
        });
    }
    out
}

fn chk_ci_gives_ch(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    if !lat.summary().is_local {
        return out;
    }
    let m = lat.summary().maximals[0];
    for k in 0..lat.len() {
        if !ctx.ip[k].is_si {
            continue;
        }
        let c = colon_in(lat, k, m);
        if !lat.lt(k, c) {
            continue;
        }
        out.hit();
        out.require(&ctx.ring, ctx.hp[c].is_csh, || {
            base(
                Claim::Holds(Pred::Csh, colon_e(ctx.expr(k), ctx.expr(m))),
                true,
            )
        });
    }
    out
}

fn chk_local_bijection(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    if !lat.summary().is_local {
        return out;
    }
    let m = lat.summary().maximals[0];
    for i in 0..lat.len() {
        if !ctx.hp[i].is_csh {
            continue;
        }
        out.hit();
        let g = ctx.hp[i].gamma;
        out.require(&ctx.ring, ctx.ip[g].is_si, || {
            base(Claim::Holds(Pred::Si, gamma_e(ctx.expr(i))), true)
        });
        let gc = colon_in(lat, g, m);
        out.require(&ctx.ring, lat.lt(g, gc), || {
            base(
                Claim::StrictSubset(gamma_e(ctx.expr(i)), colon_e(gamma_e(ctx.expr(i)), ctx.expr(m))),
                true,
            )
        });
        out.require(&ctx.ring, gc == i, || {
            base(
                Claim::Equals(colon_e(gamma_e(ctx.expr(i)), ctx.expr(m)), ctx.expr(i)),
                true,
            )
        });
        out.require(&ctx.ring, g == product_in(lat, i, m), || {
            base(
                Claim::Equals(gamma_e(ctx.expr(i)), prod_e(ctx.expr(i), ctx.expr(m))),
                true,
            )
        });
    }
    for k in 0..lat.len() {
        let c = colon_in(lat, k, m);
        if ctx.ip[k].is_si && c != k {
            out.hit();
            out.require(&ctx.ring, ctx.hp[c].is_csh, || {
                base(
                    Claim::Holds(Pred::Csh, colon_e(ctx.expr(k), ctx.expr(m))),
                    true,
                )
            });
            out.require(&ctx.ring, ctx.hp[c].gamma == k, || {
                base(
                    Claim::Equals(gamma_e(colon_e(ctx.expr(k), ctx.expr(m))), ctx.expr(k)),
                    true,
                )
            });
        }
        let in_image_set = ctx.ip[k].is_si && c != k;
        out.require(&ctx.ring, in_image_set == ctx.ip[k].is_csi, || {
            if ctx.ip[k].is_csi {
                base(
                    Claim::StrictSubset(ctx.expr(k), colon_e(ctx.expr(k), ctx.expr(m))),
                    true,
                )
            } else {
                base(Claim::Holds(Pred::Csi, ctx.expr(k)), true)
            }
        });
    }
    out
}

fn chk_true_bijection(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for i in 0..lat.len() {
        if ctx.hp[i].is_csh || ctx.ip[i].is_csi {
            out.hit();
        }
    }
    if out.hits == 0 {
        return out;
    }
    let report = crate::bijection::bijection_maps(lat, &ctx.hp, &ctx.ip);
    let ok =
        report.forward_lands_in_csi && report.backward_lands_in_csh && report.mutually_inverse;
    out.require(&ctx.ring, ok, || base(Claim::CshCsiMatch, true));
    out
}

fn chk_order_preserving(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let csh: Vec<usize> = (0..lat.len()).filter(|&i| ctx.hp[i].is_csh).collect();
    for &i in &csh {
        for &j in &csh {
            out.hit();
            let forward = lat.le(i, j);
            let image = lat.le(ctx.hp[i].gamma, ctx.hp[j].gamma);
            out.require(&ctx.ring, forward == image, || {
                base(
                    Claim::Subset(gamma_e(ctx.expr(i)), gamma_e(ctx.expr(j))),
                    forward,
                )
            });
        }
    }
    out
}

fn chk_waist(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    if !lat.summary().is_local {
        return out;
    }
    for k in 0..lat.len() {
        if !ctx.ip[k].is_csi {
            continue;
        }
        out.hit();
        out.require(&ctx.ring, ctx.ip[k].is_waist, || {
            base(Claim::Holds(Pred::Waist, ctx.expr(k)), true)
        });
    }
    out
}

fn chk_noetherian_csh(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for i in 0..ctx.lat.len() {
        if !ctx.hp[i].is_sh {
            continue;
        }
        out.hit();
        out.require(&ctx.ring, ctx.hp[i].is_csh, || {
            base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
        });
    }
    out
}

fn chk_localized_si(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for loc in &ctx.locs {
        let m = loc.at;
        let m_img = loc.image_idx[m];
        for i in 0..lat.len() {
            let e = loc.image_idx[i];
            if e == loc.lat.ring_index() || !loc.hp[e].is_sh {
                continue;
            }
            out.hit();
            let g_loc = loc.hp[e].gamma;
            let trace = loc.preimage_idx[g_loc];
            let t_cls = lat.classification(trace);
            out.require(&ctx.ring, t_cls.is_primary && t_cls.radical == m, || {
                base(
                    Claim::PrimaryWithRadical(ctx.expr(trace), ctx.expr(m)),
                    true,
                )
            });
            out.require(&ctx.ring, ctx.ip[trace].is_si, || {
                base(Claim::Holds(Pred::Si, ctx.expr(trace)), true)
            });
            let chain_len = loc.lat.power_chain(m_img).len() as u32;
            let exists_e = (0..=chain_len)
                .any(|n| colon_in(&loc.lat, g_loc, power_in(&loc.lat, m_img, n)) == e);
            out.require(&ctx.ring, exists_e, || {
                let e_expr = expr_at(&loc.lat, e);
                let m_expr = expr_at(&loc.lat, m_img);
                let mut c = Claim::not(Claim::Subset(e_expr.clone(), e_expr.clone()));
                for n in 0..=chain_len {
                    c = Claim::or(
                        c,
                        Claim::Equals(
                            colon_e(gamma_e(e_expr.clone()), pow_e(m_expr.clone(), n)),
                            e_expr.clone(),
                        ),
                    );
                }
                wit(localization_scene(lat, m), c, true)
            });
            for j in 0..lat.len() {
                let ok = lat.le(j, trace) || loc.lat.le(e, loc.image_idx[j]);
                out.require(&ctx.ring, ok, || {
                    let e_expr = expr_at(&loc.lat, e);
                    let j_expr = expr_at(&loc.lat, loc.image_idx[j]);
                    wit(
                        localization_scene(lat, m),
                        Claim::or(
                            Claim::Subset(j_expr.clone(), gamma_e(e_expr.clone())),
                            Claim::Subset(e_expr, j_expr),
                        ),
                        true,
                    )
                });
            }
        }
    }
    out
}

fn chk_pprimary_bij(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    for loc in &ctx.locs {
        let m = loc.at;
        let primary_at: Vec<usize> = (0..lat.len())
            .filter(|&k| {
                let cls = lat.classification(k);
                k != lat.ring_index() && cls.is_primary && cls.radical == m
            })
            .collect();
        let a_set: Vec<usize> = primary_at
            .iter()
            .copied()
            .filter(|&k| ctx.ip[k].is_si && k != m)
            .collect();
        let b_set: Vec<usize> = (0..loc.lat.len())
            .filter(|&t| t != loc.lat.ring_index() && loc.hp[t].is_sh)
            .collect();
        for &k in &a_set {
            out.hit();
            let f = loc.image_idx[colon_in(lat, k, m)];
            let lands = f != loc.lat.ring_index() && loc.hp[f].is_sh;
            out.require(&ctx.ring, lands, || {
                let f_expr = expr_at(&loc.lat, f);
                wit(
                    localization_scene(lat, m),
                    Claim::and(
                        Claim::StrictSubset(f_expr.clone(), IdealExpr::Unit),
                        Claim::Holds(Pred::Sh, f_expr),
                    ),
                    true,
                )
            });
            let back = loc.preimage_idx[loc.hp[f].gamma];
            out.require(&ctx.ring, back == k, || {
                base(Claim::Equals(ctx.expr(back), ctx.expr(k)), true)
            });
        }
        for &t in &b_set {
            out.hit();
            let back = loc.preimage_idx[loc.hp[t].gamma];
            let cls = lat.classification(back);
            let lands = cls.is_primary && cls.radical == m && ctx.ip[back].is_si && back != m;
            out.require(&ctx.ring, lands, || {
                base(
                    Claim::and(
                        Claim::PrimaryWithRadical(ctx.expr(back), ctx.expr(m)),
                        Claim::and(
                            Claim::Holds(Pred::Si, ctx.expr(back)),
                            Claim::not(Claim::Equals(ctx.expr(back), ctx.expr(m))),
                        ),
                    ),
                    true,
                )
            });
            let fwd = loc.image_idx[colon_in(lat, back, m)];
            out.require(&ctx.ring, fwd == t, || {
                wit(
                    localization_scene(lat, m),
                    Claim::Equals(expr_at(&loc.lat, fwd), expr_at(&loc.lat, t)),
                    true,
                )
            });
        }
        // Pulling the localized colon back always grows a proper primary
        // ideal strictly.
        for &k in &primary_at {
            out.hit();
            let s = loc.preimage_idx[loc.image_idx[colon_in(lat, k, m)]];
            out.require(&ctx.ring, lat.lt(k, s), || {
                base(Claim::StrictSubset(ctx.expr(k), ctx.expr(s)), true)
            });
        }
    }
    out
}

fn chk_nonprime_si(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    out.hit();
    let lhs = ctx.locs.iter().any(|loc| {
        (0..loc.lat.len()).any(|t| t != loc.lat.ring_index() && loc.hp[t].is_csh)
    });
    let rhs = (0..lat.len()).any(|k| ctx.ip[k].is_si && !lat.classification(k).is_prime);
    out.require(&ctx.ring, lhs == rhs, || {
        if lhs {
            let (loc, t) = ctx
                .locs
                .iter()
                .find_map(|loc| {
                    (0..loc.lat.len())
                        .find(|&t| t != loc.lat.ring_index() && loc.hp[t].is_csh)
                        .map(|t| (loc, t))
                })
                .expect("a localization attained the left side");
            let back = loc.preimage_idx[loc.hp[t].gamma];
            base(
                Claim::and(
                    Claim::Holds(Pred::Si, ctx.expr(back)),
                    Claim::not(Claim::Holds(Pred::Prime, ctx.expr(back))),
                ),
                true,
            )
        } else {
            let k = (0..lat.len())
                .find(|&k| ctx.ip[k].is_si && !lat.classification(k).is_prime)
                .expect("the right side held");
            let m = lat.classification(k).radical;
            let loc = ctx
                .locs
                .iter()
                .find(|loc| loc.at == m)
                .expect("radical of an irreducible ideal is maximal");
            let f = loc.image_idx[colon_in(lat, k, m)];
            let f_expr = expr_at(&loc.lat, f);
            wit(
                localization_scene(lat, m),
                Claim::and(
                    Claim::StrictSubset(f_expr.clone(), IdealExpr::Unit),
                    Claim::Holds(Pred::Csh, f_expr),
                ),
                true,
            )
        }
    });
    out
}

fn chk_colonm_local(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    let local = lat.summary().is_local;
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh || !lat.le(i, jac) {
            continue;
        }
        out.hit();
        let g = ctx.hp[i].gamma;
        let found = lat
            .summary()
            .maximals
            .iter()
            .copied()
            .find(|&m| colon_in(lat, g, m) == i);
        out.require(&ctx.ring, found.is_some() == local, || match found {
            Some(m) => base(
                Claim::and(
                    Claim::Equals(colon_e(gamma_e(ctx.expr(i)), ctx.expr(m)), ctx.expr(i)),
                    Claim::not(Claim::SceneIsLocal),
                ),
                false,
            ),
            None => {
                let m = lat.summary().maximals[0];
                base(
                    Claim::Equals(colon_e(gamma_e(ctx.expr(i)), ctx.expr(m)), ctx.expr(i)),
                    true,
                )
            }
        });
    }
    out
}

fn chk_gamma_power(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let jac = ctx.jacobson();
    let nil = ctx.nilradical();
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh || !lat.le(i, jac) || lat.le(i, nil) {
            continue;
        }
        // Unreachable over this corpus: the two radicals coincide here, so
        // the scan stays honest but empty.
        out.hit();
        let g = ctx.hp[i].gamma;
        let is_power = lat
            .summary()
            .maximals
            .iter()
            .any(|&m| lat.power_chain(m).contains(&g));
        out.require(&ctx.ring, is_power, || {
            let mut c = Claim::not(Claim::Subset(ctx.expr(i), ctx.expr(i)));
            for &m in &lat.summary().maximals {
                for n in 1..=lat.power_chain(m).len() as u32 {
                    c = Claim::or(
                        c,
                        Claim::Equals(gamma_e(ctx.expr(i)), pow_e(ctx.expr(m), n)),
                    );
                }
            }
            base(c, true)
        });
        let l = ctx.hp[i].l_ideal;
        out.require(&ctx.ring, lat.classification(l).is_maximal, || {
            base(
                Claim::Holds(Pred::Maximal, colon_e(gamma_e(ctx.expr(i)), ctx.expr(i))),
                true,
            )
        });
    }
    out
}

fn chk_artinian_csi(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    for k in 0..ctx.lat.len() {
        if !ctx.ip[k].is_si {
            continue;
        }
        out.hit();
        out.require(&ctx.ring, ctx.ip[k].is_csi, || {
            base(Claim::Holds(Pred::Csi, ctx.expr(k)), true)
        });
    }
    out
}

fn chk_artinian_min(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    let mut leasts: Vec<(usize, usize)> = Vec::new();
    for &m in &lat.summary().maximals {
        out.hit();
        match least_not_contained_in(lat, m) {
            LeastEscape::Least(i) => {
                leasts.push((m, i));
                out.require(&ctx.ring, ctx.hp[i].is_csh, || {
                    base(Claim::Holds(Pred::Csh, ctx.expr(i)), true)
                });
                for j in 0..lat.len() {
                    if ctx.hp[j].is_csh && !lat.le(j, m) {
                        out.require(&ctx.ring, lat.le(i, j), || {
                            base(Claim::Subset(ctx.expr(i), ctx.expr(j)), true)
                        });
                    }
                }
            }
            _ => {
                out.require(&ctx.ring, false, || {
                    base(Claim::Holds(Pred::Csi, ctx.expr(m)), true)
                });
            }
        }
    }
    for (a, &(_, ia)) in leasts.iter().enumerate() {
        for &(_, ib) in leasts.iter().skip(a + 1) {
            out.require(&ctx.ring, ia != ib, || {
                base(
                    Claim::CountEscapedMaximals {
                        ideal: ctx.expr(ia),
                        at_most: 1,
                    },
                    true,
                )
            });
        }
    }
    out
}

fn chk_star_fg(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    if ctx
        .gcds
        .iter()
        .any(|g| matches!(g.status, GcdStatus::NoUniqueGcd))
    {
        out.note = Some("some element pair has no unique gcd; the splitting condition is undefined here".into());
        return out;
    }
    for i in 1..lat.len() {
        let star = match satisfies_star(lat, &ctx.gcds, i) {
            Ok(b) => b,
            Err(StarError::NotGcdRing) => unreachable!("gcd table was screened above"),
        };
        if !star {
            continue;
        }
        out.hit();
        out.require(&ctx.ring, ctx.hp[i].is_sh, || {
            base(Claim::Holds(Pred::Sh, ctx.expr(i)), true)
        });
    }
    out
}

fn chk_star_bezout(ctx: &RingContext) -> CheckOutcome {
    let mut out = CheckOutcome::default();
    let lat = &ctx.lat;
    if !lat.flags().is_bezout {
        return out;
    }
    if ctx
        .gcds
        .iter()
        .any(|g| matches!(g.status, GcdStatus::NoUniqueGcd))
    {
        out.note =
            Some("principal ideal ring without unique gcds; the splitting condition is undefined".into());
        return out;
    }
    for i in 0..lat.len() {
        if !ctx.hp[i].is_sh {
            continue;
        }
        out.hit();
        let star = satisfies_star(lat, &ctx.gcds, i).expect("gcd table was screened above");
        out.require(&ctx.ring, star, || {
            base(Claim::SatisfiesStar(ctx.expr(i)), true)
        });
    }
    out
}

fn chk_quotient_hom_sound(_: &RingContext) -> CheckOutcome {
    unreachable!("placeholder never registered")
}

/// The registered checks, in a fixed order.
pub fn registry() -> &'static [CheckDef] {
    const REGISTRY: &[CheckDef] = &[
        CheckDef {
            id: "chk-max-sh",
            statement: "hollow ideals below a fixed ideal extend to inclusion-maximal ones",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_max_sh,
        },
        CheckDef {
            id: "chk-gamma-sandwich",
            statement: "meet with the escape sum is the greatest ideal strictly inside; the join is the least strictly above the escape sum",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_gamma_sandwich,
        },
        CheckDef {
            id: "chk-colon-sh",
            statement: "colon by a regular principal ideal preserves hollowness of the intersection",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_colon_sh,
        },
        CheckDef {
            id: "chk-quotient-gamma",
            statement: "hollowness, the escape sum, and its colon pass to quotients that do not swallow the ideal",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_quotient_gamma,
        },
        CheckDef {
            id: "chk-surj-image",
            statement: "surjective images of hollow ideals escaping the kernel stay hollow",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_surj_image,
        },
        CheckDef {
            id: "chk-ker-preimage",
            statement: "preimages of hollow ideals split sums after adding the kernel",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_ker_preimage,
        },
        CheckDef {
            id: "chk-small-kernel",
            statement: "a superfluous kernel lifts hollowness back through the quotient map",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_small_kernel,
        },
        CheckDef {
            id: "chk-least",
            statement: "family-hollow ideals are exactly the least escapes of some ideal, and each is the least escape of its own escape sum",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_least,
        },
        CheckDef {
            id: "chk-gamma-greatest",
            statement: "a nonzero ideal is family-hollow exactly when a greatest non-container exists, and that is the escape sum",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_gamma_greatest,
        },
        CheckDef {
            id: "chk-csh-gamma",
            statement: "the family splitting criterion agrees with the escape-sum criterion over sampled families",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_csh_gamma,
        },
        CheckDef {
            id: "chk-arith-minimal",
            statement: "with a distributive ideal lattice, family-hollow means minimal escape of some ideal",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_arith_minimal,
        },
        CheckDef {
            id: "chk-si-minimal-escape",
            statement: "a minimal escape from an irreducible ideal is family-hollow",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_si_minimal_escape,
        },
        CheckDef {
            id: "chk-arith-dual",
            statement: "with a distributive ideal lattice, irreducible means maximal non-container of some ideal",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_arith_dual,
        },
        CheckDef {
            id: "chk-sh-dual",
            statement: "maximal non-containers of hollow ideals are irreducible",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_sh_dual,
        },
        CheckDef {
            id: "chk-escapes-jacobson",
            statement: "a hollow ideal outside the radical is family-hollow and escapes exactly one maximal ideal, its escape sum",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_escapes_jacobson,
        },
        CheckDef {
            id: "chk-semiprimitive",
            statement: "with zero radical, every hollow ideal is family-hollow",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_semiprimitive,
        },
        CheckDef {
            id: "chk-si-min",
            statement: "a hollow ideal outside the radical sits minimally over it",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_si_min,
        },
        CheckDef {
            id: "chk-min-jr",
            statement: "minimal escapes of the radical are family-hollow",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_min_jr,
        },
        CheckDef {
            id: "chk-colon-equal",
            statement: "outside the radical, a hollow intersection with a regular principal ideal makes the ideal family-hollow and colon-stable",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_colon_equal,
        },
        CheckDef {
            id: "chk-domain-field",
            statement: "a ring with no zero divisors here is a field whose only hollow ideal is the whole ring",
            degenerate: true,
            fixed_hypotheses: false,
            run: chk_domain_field,
        },
        CheckDef {
            id: "chk-gamma-proper",
            statement: "a proper escape sum forces the ideal under the radical or family-hollow",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_gamma_proper,
        },
        CheckDef {
            id: "chk-weakly-coprime",
            statement: "an ideal with proper escape sum cannot straddle comaximal sums, nor maximal sums when the escape sum is not maximal",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_weakly_coprime,
        },
        CheckDef {
            id: "chk-ann-local",
            statement: "an annihilator pinned to one maximal ideal pulls hollowness back from that localization",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_ann_local,
        },
        CheckDef {
            id: "chk-ann-csh",
            statement: "the same annihilator condition outside the radical gives family-hollowness",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_ann_csh,
        },
        CheckDef {
            id: "chk-ann-primary",
            statement: "a primary annihilator of a non-nilpotent ideal forces family-hollowness and pins the prime placement",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_ann_primary,
        },
        CheckDef {
            id: "chk-reduced-field",
            statement: "in a reduced ring, a primary annihilator of a nonzero ideal makes that localization a field",
            degenerate: false,
            fixed_hypotheses: true,
            run: chk_reduced_field,
        },
        CheckDef {
            id: "chk-vs-split",
            statement: "cotangent spaces of dimension at least two split as a line plus a hyperplane avoiding any proper nonzero subspace",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_vs_split,
        },
        CheckDef {
            id: "chk-i-in-m2",
            statement: "hollow ideals under the radical drop into the square of any maximal with cotangent dimension at least two",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_i_in_m2,
        },
        CheckDef {
            id: "chk-comax-powers",
            statement: "a hollow ideal escapes powers of at most one maximal ideal",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_comax_powers,
        },
        CheckDef {
            id: "chk-a-gamma",
            statement: "for a hollow ideal outside the radical, any ideal with an escaping power lies inside the escape sum",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_a_gamma,
        },
        CheckDef {
            id: "chk-trichotomy",
            statement: "hollow ideals land in exactly one of three escape patterns, with principality and power containment in the escaping case",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_trichotomy,
        },
        CheckDef {
            id: "chk-ci-gives-ch",
            statement: "in a local ring, a strictly growing colon of an irreducible ideal by the maximal ideal is family-hollow",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_ci_gives_ch,
        },
        CheckDef {
            id: "chk-local-bijection",
            statement: "in a local ring, product with and colon by the maximal ideal pair the family-hollow ideals with the colon-growing irreducible ones",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_local_bijection,
        },
        CheckDef {
            id: "chk-true-bijection",
            statement: "escape sums and least escapes are mutually inverse between family-hollow and family-irreducible ideals",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_true_bijection,
        },
        CheckDef {
            id: "chk-order-preserving",
            statement: "the escape-sum map on family-hollow ideals preserves and reflects inclusion",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_order_preserving,
        },
        CheckDef {
            id: "chk-waist",
            statement: "in a local ring, every family-irreducible ideal is comparable to every ideal",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_waist,
        },
        CheckDef {
            id: "chk-noetherian-csh",
            statement: "every hollow ideal is family-hollow; the chain condition behind this is automatic here",
            degenerate: false,
            fixed_hypotheses: true,
            run: chk_noetherian_csh,
        },
        CheckDef {
            id: "chk-localized-si",
            statement: "a proper hollow image in a localization has a primary irreducible trace satisfying the colon and covering laws",
            degenerate: false,
            fixed_hypotheses: true,
            run: chk_localized_si,
        },
        CheckDef {
            id: "chk-pprimary-bij",
            statement: "primary irreducible ideals at a maximal, other than it, pair off with the proper hollow ideals of that localization",
            degenerate: false,
            fixed_hypotheses: true,
            run: chk_pprimary_bij,
        },
        CheckDef {
            id: "chk-nonprime-si",
            statement: "some localization has a proper family-hollow ideal exactly when some irreducible ideal is not prime",
            degenerate: false,
            fixed_hypotheses: true,
            run: chk_nonprime_si,
        },
        CheckDef {
            id: "chk-colonM-local",
            statement: "for hollow ideals under the radical, colon recovery from the escape sum at a maximal happens exactly in local rings",
            degenerate: false,
            fixed_hypotheses: true,
            run: chk_colonm_local,
        },
        CheckDef {
            id: "chk-gamma-power",
            statement: "a hollow non-nilpotent ideal under the radical has a maximal-power escape sum; no ring here populates the hypothesis",
            degenerate: true,
            fixed_hypotheses: true,
            run: chk_gamma_power,
        },
        CheckDef {
            id: "chk-artinian-csi",
            statement: "every irreducible ideal is family-irreducible; the chain condition behind this is automatic here",
            degenerate: false,
            fixed_hypotheses: true,
            run: chk_artinian_csi,
        },
        CheckDef {
            id: "chk-artinian-min",
            statement: "each maximal ideal has a least escape: a family-hollow ideal minimal among its escapes, distinct across maximals",
            degenerate: false,
            fixed_hypotheses: true,
            run: chk_artinian_min,
        },
        CheckDef {
            id: "chk-star-fg",
            statement: "when gcds exist, a nonzero ideal splitting over principal gcds is hollow",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_star_fg,
        },
        CheckDef {
            id: "chk-star-bezout",
            statement: "when every ideal is principal, hollow ideals split over principal gcds",
            degenerate: false,
            fixed_hypotheses: false,
            run: chk_star_bezout,
        },
    ];
    REGISTRY
}

pub fn find_check(id: &str) -> Option<&'static CheckDef> {
    registry().iter().find(|d| d.id == id)
}
