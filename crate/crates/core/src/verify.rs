//! Bundled recomputations of the published results, run by `weyldeg verify`
//! and by the acceptance tests.

use num_bigint::BigUint;
use num_traits::One;

use crate::dimension::{digit_count, weyl_dim, Degree, DominantWeight};
use crate::families::{family_a, family_b, family_c, family_d, ratio_c, FamilyWitness};
use crate::pell::{brute_force_star, cf_sqrt, star_solutions};
use crate::rootdata::datum_from_str;
pub use crate::search::{verify_e6_remark, verify_prop2, verify_row, Check, Report, SMALLEST_PAIRS};

pub const C159_A: &str = "613975804336172576474505";
pub const C159_B: &str = "7404460209629201092363289";
/// Recomputed digit count of the C159 giant degree. The figure 15728 quoted
/// with this example does not survive recomputation by either product formula.
pub const C159_DIGITS: usize = 14420;
/// The published (unreproduced) digit count, kept for reporting.
pub const C159_DIGITS_PUBLISHED: usize = 15728;

fn witness_check(name: String, w: crate::error::Result<FamilyWitness>, expect: Option<u64>) -> Check {
    match w {
        Ok(w) => match expect {
            Some(d) => Check::equal(name, &Degree::from(d), &w.degree),
            None => Check::new(name, true, format!("degree {}", w.degree)),
        },
        Err(e) => Check::new(name, false, e.to_string()),
    }
}

/// Closed forms for `A_l`, `B_l`, `D_l` against the Weyl formula, spot
/// values, and the smallest `C_3` pair.
pub fn verify_thm3() -> Report {
    let mut report = Report::default();
    let spots: [(char, u64, u64); 6] = [
        ('A', 3, 20),
        ('A', 4, 175),
        ('B', 3, 3003),
        ('B', 4, 383724),
        ('D', 4, 32928),
        ('D', 5, 4671810),
    ];
    for l in 3..=12u64 {
        for fam in ['A', 'B', 'D'] {
            if fam == 'D' && l < 4 {
                continue;
            }
            let w = match fam {
                'A' => family_a(l),
                'B' => family_b(l),
                _ => family_d(l),
            };
            let expect = spots.iter().find(|s| s.0 == fam && s.1 == l).map(|s| s.2);
            report.push(witness_check(format!("{fam}{l} family"), w, expect));
        }
    }
    report.extend(verify_c3());
    for l in 4..=12u64 {
        let name = format!("C{l} first Pell pair");
        report.push(match family_c(l, 1) {
            Ok(ws) => Check::new(
                name,
                true,
                format!("(a, b) = ({}, {}), degree {}", ws[0].lambda.coords()[0], ws[0].lambda.coords()[1], ws[0].degree),
            ),
            Err(e) => Check::new(name, false, e.to_string()),
        });
    }
    report
}

pub fn verify_c3() -> Report {
    let mut report = Report::default();
    let name = "C3 star_solutions(3,1) = (24,9,5)";
    report.push(match star_solutions(3, 1) {
        Ok(s) => {
            let got = (s[0].c().clone(), s[0].a().clone(), s[0].b().clone());
            let want = (BigUint::from(24u32), BigUint::from(9u32), BigUint::from(5u32));
            Check::new(name, got == want, format!("got ({}, {}, {})", got.0, got.1, got.2))
        }
        Err(e) => Check::new(name, false, e.to_string()),
    });
    let c3 = datum_from_str("C3").expect("C3 is valid");
    for w in [[9u64, 5, 0], [7, 6, 0]] {
        let name = format!("C3 dim ({},{},{})", w[0], w[1], w[2]);
        report.push(match weyl_dim(&c3, &DominantWeight::from_u64s(&w)) {
            Ok(d) => Check::equal(name, &Degree::from(548352), &d),
            Err(e) => Check::new(name, false, e.to_string()),
        });
    }
    let name = "C3 ratio(9,5) = 1";
    report.push(match ratio_c(&9u32.into(), &5u32.into(), 3) {
        Ok(r) => Check::new(name, r.is_one(), format!("got {r}")),
        Err(e) => Check::new(name, false, e.to_string()),
    });
    report
}

/// The rank-159 remark: period 48, the giant pair, its degree (14420 digits),
/// and the sporadic solution (87, 902).
pub fn verify_remark159() -> Report {
    let mut report = Report::default();
    report.push(match cf_sqrt(631) {
        Ok(cf) => Check::equal("period of sqrt(631)", 48, cf.period_len()),
        Err(e) => Check::new("period of sqrt(631)", false, e.to_string()),
    });

    let c159 = datum_from_str("C159").expect("C159 is valid");
    match star_solutions(159, 1) {
        Ok(s) => {
            let s = &s[0];
            report.push(Check::equal("C159 smallest scaled a", C159_A.to_string(), s.a().to_string()));
            report.push(Check::equal("C159 smallest scaled b", C159_B.to_string(), s.b().to_string()));
            let lambda = DominantWeight::first_two(s.a().clone(), s.b().clone(), 159);
            let mu = DominantWeight::first_two(s.a() - 2u32, s.b() + 1u32, 159);
            match (weyl_dim(&c159, &lambda), weyl_dim(&c159, &mu)) {
                (Ok(dl), Ok(dm)) => {
                    report.push(Check::new(
                        "C159 degree digits",
                        digit_count(&dl) == C159_DIGITS,
                        format!(
                            "got {} (recomputed {C159_DIGITS}; published figure {C159_DIGITS_PUBLISHED})",
                            digit_count(&dl)
                        ),
                    ));
                    report.push(Check::new(
                        "C159 giant pair equal degree",
                        dl == dm,
                        format!("{} and {} digits", digit_count(&dl), digit_count(&dm)),
                    ));
                }
                (Err(e), _) | (_, Err(e)) => {
                    report.push(Check::new("C159 degree digits", false, e.to_string()))
                }
            }
        }
        Err(e) => report.push(Check::new("C159 smallest scaled solution", false, e.to_string())),
    }

    let name = "C159 brute force a <= 100 finds (87, 902)";
    report.push(match brute_force_star(159, 100) {
        Ok(hits) => {
            let found = hits.iter().any(|s| s.a() == &BigUint::from(87u32) && s.b() == &BigUint::from(902u32));
            let list: Vec<String> = hits.iter().map(|s| format!("({}, {})", s.a(), s.b())).collect();
            Check::new(name, found, format!("hits: {}", list.join(" ")))
        }
        Err(e) => Check::new(name, false, e.to_string()),
    });
    let name = "C159 dim (87,902) = dim (85,903)";
    let lhs = weyl_dim(&c159, &DominantWeight::first_two(87u32.into(), 902u32.into(), 159));
    let rhs = weyl_dim(&c159, &DominantWeight::first_two(85u32.into(), 903u32.into(), 159));
    report.push(match (lhs, rhs) {
        (Ok(l), Ok(r)) => Check::new(name, l == r, format!("{} digits", digit_count(&l))),
        (Err(e), _) | (_, Err(e)) => Check::new(name, false, e.to_string()),
    });
    report
}
