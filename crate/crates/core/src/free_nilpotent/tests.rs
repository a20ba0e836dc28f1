use super::*;

#[test]
fn small_hall_bases() {
    let b = HallBasis::new(2, 2).unwrap();
    assert_eq!(b.layer_sizes(), vec![2, 1]);
    assert_eq!(b.label(2), "[x2,x1]");
    assert_eq!(HallBasis::new(3, 2).unwrap().len(), 6);
    assert_eq!(HallBasis::new(2, 3).unwrap().layer_sizes(), vec![2, 1, 2]);
    assert!(HallBasis::new(1, 3).is_err());
}

#[test]
fn layer_sizes_match_necklaces() {
    assert_eq!(necklace_dimension_oracle(2, 2), vec![2, 1]);
    assert_eq!(necklace_dimension_oracle(3, 3), vec![3, 3, 8]);
    assert_eq!(necklace_dimension_oracle(2, 5), vec![2, 1, 2, 3, 6]);
    for m in 2..=4 {
        for k in 1..=4 {
            let b = HallBasis::new(m, k).unwrap();
            let expect: Vec<usize> = necklace_dimension_oracle(m, k)
                .iter()
                .map(|&x| x as usize)
                .collect();
            assert_eq!(b.layer_sizes(), expect, "m={m} k={k}");
        }
    }
}

#[test]
fn c_elements() {
    let b = HallBasis::new(2, 4).unwrap();
    assert_eq!(b.label(b.c_element(2).unwrap()), "[x2,x1]");
    assert_eq!(b.label(b.c_element(3).unwrap()), "[[x2,x1],x1]");
    let c4 = b.c_element(4).unwrap();
    assert_eq!(b.multidegree(c4), &[3, 1]);
    assert_eq!(b.degree(c4), 4);
    assert!(b.layers()[3].contains(&c4));
    assert!(b.c_element(5).is_err());
}

#[test]
fn normalize_examples() {
    let b = HallBasis::new(2, 3).unwrap();
    let mut norm = Normalizer::new(&b);
    let c2 = b.c_element(2).unwrap();
    let c3 = b.c_element(3).unwrap();
    assert_eq!(
        norm.normalize(c2, 0).unwrap(),
        WordCombination::from([(c3, Rational::one())])
    );
    assert_eq!(
        norm.normalize(0, 1).unwrap(),
        WordCombination::from([(c2, -Rational::one())])
    );
    let r = norm.normalize(c2, 1).unwrap();
    assert_eq!(r.len(), 1);
    for w in r.keys() {
        assert_eq!(b.multidegree(*w), &[1, 2]);
    }
    // Degree overflow is truncated.
    assert!(norm.normalize(c3, 0).unwrap().is_empty());
}

#[test]
fn depth_guard_trips() {
    let b = HallBasis::new(3, 4).unwrap();
    let mut shallow = Normalizer::new(&b).with_max_depth(0);
    let c3 = b.c_element(3).unwrap();
    // [[x2,x1],x1] bracketed with x3 needs rewriting only if non-standard;
    // [x3, [x2,x1]] must be flipped, which already exceeds depth 0.
    assert!(shallow.normalize(2, c3).is_err());
}

#[test]
fn free_nilpotent_examples() {
    let l = free_nilpotent(2, 2).unwrap();
    assert!(l.validate().passed);
    let h1 = LieAlgebra::from_table(3, &[(0, 1, &[(1, 2)])]);
    assert_eq!(l.invariant_vector(), h1.invariant_vector());
    let l = free_nilpotent(3, 2).unwrap();
    let dims: Vec<usize> = l.lower_central_series().iter().map(|s| s.dim()).collect();
    assert_eq!(dims, vec![6, 3, 0]);
    let l = free_nilpotent(2, 4).unwrap();
    assert_eq!(l.dim(), 8);
    assert_eq!(l.nilpotency_class(), Some(4));
    assert!(l.validate().passed);
    assert!(matches!(
        free_nilpotent_with_cap(4, 4, 1000),
        Err(LieError::ResourceCap { .. })
    ));
}
