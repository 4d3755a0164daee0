use super::*;
use crate::algebra::jm_element;
use crate::arith::{parse_scalar, IntPoly, UniPoly};
use crate::diagram::{Generator, Shape};
use crate::tableaux::enumerate_tableaux;

fn gen(shape: Shape, g: Generator) -> AlgebraElement {
    AlgebraElement::generator(shape, g).unwrap()
}

fn sc(text: &str) -> DeltaScalar {
    parse_scalar(text).unwrap()
}

fn tableau(shape: Shape, spec: &str) -> WalledTableau {
    WalledTableau::parse(spec, shape).unwrap()
}

fn partial(shape: Shape, spec: &str) -> WalledTableau {
    WalledTableau::from_moves_partial(shape, &crate::tableaux::parse_moves(spec).unwrap()).unwrap()
}

fn golden() -> AlgebraElement {
    let shape = Shape::new(2, 2);
    let one = AlgebraElement::one(shape);
    let s1 = gen(shape, Generator::S(1));
    let s3 = gen(shape, Generator::S(3));
    let d = gen(shape, Generator::D);
    let left = &one - &s1;
    let middle = &(&(&d * &s1) * &s3) * &d;
    (&(&left * &middle) * &left).scale(&sc("1/(2*d*(d-1))"))
}

const GOLDEN_SPEC: &str = "L+1,1;L+2,1;L-2,1;L-1,1";

#[test]
fn golden_first_procedure() {
    let t = tableau(Shape::new(2, 2), GOLDEN_SPEC);
    assert_eq!(t.contents(), vec![sc("0"), sc("-1"), sc("1"), sc("0")]);
    let e = fusion_idempotent(&t, &FusionConfig::first()).unwrap();
    assert_eq!(e, golden());
}

#[test]
fn golden_literal_and_second() {
    let t = tableau(Shape::new(2, 2), GOLDEN_SPEC);
    assert_eq!(literal_first_idempotent(&t).unwrap(), golden());
    let h = default_h();
    assert_eq!(
        second_fusion_idempotent(&t, Variant::Forward, &h).unwrap(),
        golden()
    );
    assert_eq!(
        second_fusion_idempotent(&t, Variant::Mirror, &h).unwrap(),
        golden()
    );
    assert_eq!(
        literal_second_idempotent(&t, &h, Variant::Forward).unwrap(),
        golden()
    );
}

#[test]
fn smallest_shape() {
    let shape = Shape::new(1, 1);
    let d = gen(shape, Generator::D);
    let one = AlgebraElement::one(shape);
    let a = fusion_idempotent(&tableau(shape, "L+1,1;L-1,1"), &FusionConfig::first()).unwrap();
    assert_eq!(a, d.scale(&sc("1/d")));
    let b = fusion_idempotent(&tableau(shape, "L+1,1;R+1,1"), &FusionConfig::first()).unwrap();
    assert_eq!(b, &one - &d.scale(&sc("1/d")));
    let h = default_h();
    let a2 =
        second_fusion_idempotent(&tableau(shape, "L+1,1;L-1,1"), Variant::Forward, &h).unwrap();
    assert_eq!(a2, a);
}

#[test]
fn symmetric_stage() {
    let shape = Shape::new(2, 1);
    let one = AlgebraElement::one(shape);
    let s1 = gen(shape, Generator::S(1));
    let row = sym_group_idempotent(&partial(shape, "L+1,1;L+1,2")).unwrap();
    assert_eq!(row, (&one + &s1).scale(&sc("1/2")));
    let col = sym_group_idempotent(&partial(shape, "L+1,1;L+2,1")).unwrap();
    assert_eq!(col, (&one - &s1).scale(&sc("1/2")));
    let shape = Shape::new(1, 2);
    let first = sym_group_idempotent(&partial(shape, "L+1,1")).unwrap();
    assert_eq!(first, AlgebraElement::one(shape));
}

#[test]
fn step_function_shapes() {
    let shape = Shape::new(1, 1);
    let t = partial(shape, "L+1,1");
    let psi = step_function(&t, 2).unwrap();
    assert_eq!(psi.len(), 1);
    let rat = psi.to_rat();
    // (u·1 − d)/u
    let d = gen(shape, Generator::D);
    let expected = AlgebraRat::u_minus(&d);
    let u = Affine::plus_u(&IntPoly::zero()).to_poly();
    let one = UniPoly::constant(IntPoly::one(), IntPoly::zero());
    assert!(rat.same_function(&expected.scale_rat(&one, &u)));

    let shape = Shape::new(2, 2);
    let t = partial(shape, "L+1,1;L+2,1;L-2,1");
    let psi = step_function(&t, 4).unwrap();
    let pairs: Vec<_> = psi.factors.iter().map(|f| (f.kind, f.i, f.j)).collect();
    assert_eq!(
        pairs,
        vec![
            (BaxterKind::D, 2, 4),
            (BaxterKind::D, 1, 4),
            (BaxterKind::S, 3, 4)
        ]
    );
}

#[test]
fn prefactor_instances() {
    let shape = Shape::new(1, 1);
    let z = step_prefactor(&tableau(shape, "L+1,1;L-1,1"), 2).unwrap();
    // u/(u−δ)
    assert_eq!(z.num, vec![Affine::u_minus(&IntPoly::zero())]);
    assert_eq!(z.den, vec![Affine::u_minus(&IntPoly::from_ints(&[0, 1]))]);
    let z = step_prefactor(&tableau(Shape::new(2, 2), GOLDEN_SPEC), 4).unwrap();
    assert_eq!(z.num.len(), 3);
    assert_eq!(z.den.len(), 3);
    assert_eq!(z.order_at(&IntPoly::zero()), Some(0));
}

#[test]
fn parity_is_enforced() {
    let shape = Shape::new(2, 2);
    let arg = Affine::plus_u(&IntPoly::zero());
    assert_eq!(
        baxter_factor(shape, BaxterKind::S, 1, 3, &arg, None),
        Err(crate::Error::ParityViolation { i: 1, j: 3 })
    );
    assert_eq!(
        baxter_factor(shape, BaxterKind::D, 1, 2, &arg, None),
        Err(crate::Error::ParityViolation { i: 1, j: 2 })
    );
}

#[test]
fn evaluate_step_trivial_and_pole() {
    let shape = Shape::new(1, 1);
    let e = AlgebraElement::one(shape);
    let out = evaluate_step(
        &e,
        &FactorProduct::new(shape),
        &ScalarFactors::one(),
        &IntPoly::one(),
        1,
        true,
    )
    .unwrap();
    assert_eq!(out.element, e);
    // (u·1 − d)/u alone at u = 0 has a genuine pole
    let t = partial(shape, "L+1,1");
    let psi = step_function(&t, 2).unwrap();
    let err =
        evaluate_step(&e, &psi, &ScalarFactors::one(), &IntPoly::zero(), 2, true).unwrap_err();
    assert!(matches!(err, crate::Error::CancellationFailure { .. }));
    let err =
        evaluate_step(&e, &psi, &ScalarFactors::one(), &IntPoly::zero(), 2, false).unwrap_err();
    assert!(matches!(err, crate::Error::PoleAtEvaluation { .. }));
}

#[test]
fn eigenvalues_on_small_shapes() {
    for (r, s) in [(1, 1), (2, 1), (1, 2), (2, 2)] {
        let shape = Shape::new(r, s);
        for t in enumerate_tableaux(shape, None) {
            let e = fusion_idempotent(&t, &FusionConfig::first()).unwrap();
            assert_eq!(&e * &e, e, "{t:?}");
            for (k, c) in t.contents().iter().enumerate() {
                let x = jm_element(shape, k + 1).unwrap();
                assert_eq!(&x * &e, e.scale(c), "{t:?} step {}", k + 1);
            }
        }
    }
}

#[test]
fn minimal_prefactor_on_golden() {
    let t = tableau(Shape::new(2, 2), GOLDEN_SPEC);
    assert_eq!(t.exponents(), vec![0, 0, 1, 0]);
    let (e, report) = fusion_with_minimal_prefactor(&t).unwrap();
    assert!(report.ratio_finite);
    assert!(!report.vanished);
    assert!(!e.is_zero());
    let dropped = drop_positive_exponent(&t, 3).unwrap();
    let err = fusion_with_exponents(&t, &dropped).unwrap_err();
    assert!(matches!(
        err,
        crate::Error::CancellationFailure { step: 3, .. }
    ));
}

#[test]
fn non_generic_h_is_rejected() {
    let t = tableau(Shape::new(1, 1), "L+1,1;L-1,1");
    // u + c_2 − h vanishes at u = c_2 = 0 when h = 0
    let err = second_fusion_idempotent(&t, Variant::Forward, &DeltaScalar::zero()).unwrap_err();
    assert!(matches!(err, crate::Error::NonGenericH(_)));
}
