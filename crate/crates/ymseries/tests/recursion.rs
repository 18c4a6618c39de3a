use ymseries::exactalg::series_expand;
use ymseries::strata::{enumerate_ab_points, stratum_series, verify_recursion};
use ymseries::{GroupSpec, TopClass};

fn grid() -> Vec<(GroupSpec, TopClass)> {
    let mut out = Vec::new();
    for k in 0..2 {
        out.push((GroupSpec::u(2), TopClass::Degree(k)));
    }
    for k in 0..3 {
        out.push((GroupSpec::u(3), TopClass::Degree(k)));
    }
    out.push((GroupSpec::sp(1), TopClass::Trivial));
    out.push((GroupSpec::sp(2), TopClass::Trivial));
    for w in 0..2 {
        out.push((GroupSpec::so_odd(1), TopClass::W2(w)));
        out.push((GroupSpec::so_odd(2), TopClass::W2(w)));
        out.push((GroupSpec::so_even(2), TopClass::W2(w)));
        out.push((GroupSpec::so_even(3), TopClass::W2(w)));
    }
    out
}

#[test]
fn recursion_holds_to_degree_forty() {
    for (g, c) in grid() {
        for ell in [2, 3] {
            let rep = verify_recursion(&g, c, ell, 40).unwrap();
            assert!(
                rep.holds,
                "{g} {c} l={ell}: first nonzero residual at {:?}",
                rep.residual.coeffs.iter().position(|x| x != &0.into())
            );
        }
    }
}

#[test]
fn enumeration_is_monotone_in_the_bound() {
    for (g, c) in grid() {
        let mut prev = Vec::new();
        for bound in [0, 3, 6, 10, 15] {
            let pts = enumerate_ab_points(&g, c, 2, bound).unwrap();
            for p in &prev {
                assert!(
                    pts.contains(p),
                    "{g} {c}: lost a point when raising the bound"
                );
            }
            prev = pts;
        }
    }
}

#[test]
fn stratum_series_are_positive() {
    for (g, c) in grid() {
        for ell in [2, 3] {
            let w2 = match c {
                TopClass::W2(w) => w,
                _ => 0,
            };
            for (mu, _) in enumerate_ab_points(&g, c, ell, 12).unwrap() {
                let s = stratum_series(&mu, Some(mu.component_for_bundle(w2)), ell).unwrap();
                assert!(series_expand(&s, 60).unwrap().all_nonnegative(), "{mu}");
            }
        }
    }
}

#[test]
fn unitary_codim_matches_block_formula() {
    use ymseries::strata::codim;
    for n in 1..=4 {
        for k in 0..n as i64 {
            for ell in [1u32, 2, 3] {
                let g = GroupSpec::u(n);
                for (mu, d) in enumerate_ab_points(&g, TopClass::Degree(k), ell, 14).unwrap() {
                    let (c, l) = (&mu.composition, &mu.labels);
                    let mut cross = 0i64;
                    let mut gaps = 0i64;
                    for i in 0..c.len() {
                        for j in i + 1..c.len() {
                            cross += (c[i] * c[j]) as i64;
                            gaps += l[i] * c[j] as i64 - l[j] * c[i] as i64;
                        }
                    }
                    let want = (ell as i64 - 1) * cross + gaps;
                    assert_eq!(d as i64, want, "{mu}");
                    assert_eq!(codim(&g, &mu, ell).unwrap(), d);
                }
            }
        }
    }
}
