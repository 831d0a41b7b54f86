use cga_core::{Blade, Generator, Multivector, Rational};
use cga_oracle::basis_change::basis_change_check;
use cga_oracle::rewrite::rewrite_product;
use cga_oracle::{random, rewrite, BasisChange, LeftRegularRep};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Q = Multivector<Rational>;

fn blade(b: Blade) -> Q {
    Q::from_blade(b, Rational::one())
}

fn q(s: &str) -> Rational {
    s.parse().unwrap()
}

#[test]
fn rewriting_examples() {
    use Generator::*;
    assert_eq!(rewrite_product(&[Inf, E0]).to_string(), "-2 - e[0,∞]");
    assert_eq!(rewrite_product(&[E1, E1]), Q::one());
    assert_eq!(rewrite_product(&[E1, Inf, E2, E0]).to_string(), "2 e[1,2] + e[0,1,2,∞]");
}

#[test]
fn all_blade_pairs_agree() {
    let rep = LeftRegularRep::new();
    let bc = BasisChange::new();
    for a in Blade::all() {
        for b in Blade::all() {
            let main = blade(a).geometric_product(&blade(b));
            assert_eq!(main, rewrite::product(&blade(a), &blade(b)), "{a} * {b} (rewrite)");
            assert_eq!(main, rep.product(&blade(a), &blade(b)), "{a} * {b} (matrix)");
            assert_eq!(main, bc.product(&blade(a), &blade(b)), "{a} * {b} (basis change)");
            assert_eq!(blade(a).outer_product(&blade(b)), bc.outer(&blade(a), &blade(b)), "{a} ^ {b}");
            assert_eq!(
                blade(a).left_contraction(&blade(b)),
                bc.left_contraction(&blade(a), &blade(b)),
                "{a} | {b}"
            );
        }
    }
}

#[test]
fn canonicalize_matches_rewriting_on_words() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    use rand::Rng;
    for _ in 0..500 {
        let len = rng.gen_range(0..7);
        let w: Vec<Generator> = (0..len).map(|_| Generator::ALL[rng.gen_range(0..5)]).collect();
        assert_eq!(Q::canonicalize(&w), rewrite_product(&w), "{w:?}");
    }
}

#[test]
fn grades_and_involutions_agree_with_basis_change() {
    let bc = BasisChange::new();
    for b in Blade::all() {
        let x = blade(b);
        for k in 0..=5 {
            assert_eq!(x.grade(k as i64).unwrap(), bc.grade(&x, k), "<{b}>_{k}");
        }
        assert_eq!(x.reversion(), bc.reversion(&x), "rev {b}");
        assert_eq!(x.involution(), bc.involution(&x), "inv {b}");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..200 {
        let x = random::multivector(&mut rng, 6);
        for k in 0..=5 {
            assert_eq!(x.grade(k as i64).unwrap(), bc.grade(&x, k));
        }
        assert_eq!(x.reversion(), bc.reversion(&x));
    }
}

#[test]
fn oracle_grade_examples() {
    let bc = BasisChange::new();
    let e0inf = Q::canonicalize(&[Generator::E0, Generator::Inf]);
    assert_eq!(bc.grade(&e0inf, 0), Q::scalar(q("-1")));
    assert_eq!(bc.grade(&e0inf, 2), &Q::one() + &e0inf);
    let full = Q::canonicalize(&Generator::ALL);
    let e123 = Q::canonicalize(&[Generator::E1, Generator::E2, Generator::E3]);
    assert_eq!(bc.grade(&full, 3), e123);
    assert_eq!(bc.grade(&full, 5), &full - &e123);
    assert_eq!(bc.pseudoscalar(), Q::pseudoscalar());
}

#[test]
fn basis_change_report_is_clean() {
    let bc = BasisChange::new();
    let report = basis_change_check(&bc);
    assert!(report.is_ok(), "{:?}", report.failures);
    assert_eq!(report.checked, 25 + 1 + 8);
    // forward · backward = identity
    let id = LeftRegularRep::mat_mul(&bc.forward, &bc.backward);
    for (i, row) in id.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            assert_eq!(v.is_one(), i == j);
            assert!(i == j || v.is_zero());
        }
    }
    // e0 e∞ in the orthonormal model: -1 + e- e+ (= -1 - e+ e-)
    let v = bc.to_ortho(&Q::canonicalize(&[Generator::E0, Generator::Inf]));
    let nonzero: Vec<(usize, String)> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.to_string()))
        .collect();
    assert_eq!(nonzero, vec![(0, "-1".to_string()), (24, "-1".to_string())]);
    // e0 e0 maps to zero
    assert!(bc.to_ortho(&Q::canonicalize(&[Generator::E0, Generator::E0])).iter().all(Rational::is_zero));
}

#[test]
fn representation_is_a_homomorphism() {
    let rep = LeftRegularRep::new();
    for a in Blade::all() {
        for b in Blade::all() {
            let lhs = LeftRegularRep::mat_mul(&rep.mats[a.mask() as usize], &rep.mats[b.mask() as usize]);
            let rhs = rep.matrix_of(&rewrite::product(&blade(a), &blade(b)));
            assert_eq!(lhs, rhs, "{a} {b}");
        }
    }
}

#[test]
fn matrix_oracle_examples() {
    let rep = LeftRegularRep::new();
    let i5 = Q::pseudoscalar();
    assert_eq!(rep.product(&i5, &i5), Q::scalar(q("-1")));
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let b = random::multivector(&mut rng, 8);
        assert_eq!(rep.product(&Q::one(), &b), b);
    }
}

#[test]
fn random_pairs_three_way() {
    let rep = LeftRegularRep::new();
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..1000 {
        let a = random::multivector(&mut rng, 6);
        let b = random::multivector(&mut rng, 6);
        let main = a.geometric_product(&b);
        assert_eq!(main, rep.product(&a, &b));
        assert_eq!(main, rewrite::product(&a, &b));
    }
}
