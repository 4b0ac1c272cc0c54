//! Defining relations, rewrite independence and associativity of the engine.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use specht_core::klr::{relation_instances, Atom, Combo, KlrElement, KlrEngine};
use specht_core::{Quiver, Rational, Residue, Scalar};

fn eval(eng: &KlrEngine, combo: &Combo) -> KlrElement {
    let mut acc = KlrElement::zero(eng.n());
    for (c, w) in combo {
        if *c == 0 {
            continue;
        }
        let x: KlrElement = eng.reduce(w, None).unwrap();
        acc = acc.add(&x.scale(&Rational::from_i64(*c)));
    }
    acc
}

fn sequences(values: &[i64], n: usize) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                values.iter().map(move |&x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out
}

fn check_all_relations(q: Quiver, values: &[i64], max_n: usize) {
    for n in 1..=max_n {
        for raw in sequences(values, n) {
            let j: Vec<Residue> = raw.iter().map(|&v| q.residue(v)).collect();
            let eng = KlrEngine::new(q, n);
            for (name, lhs, rhs) in relation_instances(&q, &j) {
                let (a, b) = (eval(&eng, &lhs), eval(&eng, &rhs));
                assert_eq!(a, b, "{q} relation {name} at {j:?}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn relations_hold_affine_three() {
    check_all_relations(Quiver::affine(3).unwrap(), &[0, 1, 2], 5);
}

#[test]
fn relations_hold_affine_four() {
    check_all_relations(Quiver::affine(4).unwrap(), &[0, 1, 2, 3], 5);
}

#[test]
fn relations_hold_linear() {
    let window: Vec<i64> = (-4..=4).collect();
    check_all_relations(Quiver::linear(), &window, 4);
    // n = 5 over the full window is 59049 sequences; cover it with a narrower
    // window that still contains every adjacency pattern
    check_all_relations(Quiver::linear(), &[-1, 0, 1, 2, 4], 5);
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, len: usize) -> Vec<Atom> {
    (0..len)
        .map(|_| {
            if n > 1 && rng.gen_bool(0.7) {
                Atom::Psi(rng.gen_range(1..n))
            } else {
                Atom::Y(rng.gen_range(1..=n))
            }
        })
        .collect()
}

fn random_idempotent(rng: &mut ChaCha8Rng, q: &Quiver, n: usize) -> Vec<Residue> {
    (0..n).map(|_| q.residue(rng.gen_range(-2..=2))).collect()
}

/// Idempotent sitting to the left of `word · e(i)`.
fn idempotent_after(word: &[Atom], i: &[Residue]) -> Vec<Residue> {
    let mut j = i.to_vec();
    for a in word.iter().rev() {
        if let Atom::Psi(s) = a {
            j.swap(s - 1, *s);
        }
    }
    j
}

fn sandwich(prefix: &[Atom], combo: &Combo, suffix: &[Atom], i: &[Residue]) -> Combo {
    combo
        .iter()
        .map(|(c, w)| {
            let mut full = prefix.to_vec();
            full.extend(w.iter().cloned());
            full.extend(suffix.iter().cloned());
            full.push(Atom::E(i.to_vec()));
            (*c, full)
        })
        .collect()
}

#[test]
fn rewrite_inside_a_word_changes_nothing() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let quivers = [Quiver::affine(3).unwrap(), Quiver::affine(4).unwrap(), Quiver::linear()];
    let mut checked = 0;
    while checked < 500 {
        let q = quivers[rng.gen_range(0..3)];
        let n = rng.gen_range(2..=5);
        let i = random_idempotent(&mut rng, &q, n);
        let prefix_len = rng.gen_range(0..=4);
        let suffix_len = rng.gen_range(0..=4);
        let prefix = random_word(&mut rng, n, prefix_len);
        let suffix = random_word(&mut rng, n, suffix_len);
        let j = idempotent_after(&suffix, &i);
        let rels = relation_instances(&q, &j);
        let (name, lhs, rhs) = &rels[rng.gen_range(0..rels.len())];
        let eng = KlrEngine::new(q, n);
        let a = eval(&eng, &sandwich(&prefix, lhs, &suffix, &i));
        let fresh = KlrEngine::new(q, n);
        let b = eval(&fresh, &sandwich(&prefix, rhs, &suffix, &i));
        assert_eq!(a, b, "{q} {name}: prefix {prefix:?} suffix {suffix:?} at {i:?}");
        checked += 1;
    }
}

#[test]
fn multiplication_is_associative_and_distributive() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let quivers = [Quiver::affine(3).unwrap(), Quiver::affine(4).unwrap(), Quiver::linear()];
    for trial in 0..200 {
        let q = quivers[trial % 3];
        let n = rng.gen_range(2..=5);
        let eng = KlrEngine::new(q, n);
        let i = random_idempotent(&mut rng, &q, n);
        let build = |rng: &mut ChaCha8Rng, right: &[Residue]| {
            let len = rng.gen_range(0..=4);
            let mut w = random_word(rng, n, len);
            w.push(Atom::E(right.to_vec()));
            let x: KlrElement = eng.reduce(&w, None).unwrap();
            (x, idempotent_after(&w, right))
        };
        let (z, zl) = build(&mut rng, &i);
        let (y, yl) = build(&mut rng, &zl);
        let (x, _) = build(&mut rng, &yl);
        let xy_z = eng.multiply(&eng.multiply(&x, &y).unwrap(), &z).unwrap();
        let x_yz = eng.multiply(&x, &eng.multiply(&y, &z).unwrap()).unwrap();
        assert_eq!(xy_z, x_yz, "trial {trial}");
        let (w, _) = build(&mut rng, &yl);
        let lhs = eng.multiply(&x.add(&w), &y).unwrap();
        let rhs = eng.multiply(&x, &y).unwrap().add(&eng.multiply(&w, &y).unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn products_stay_in_the_orbit() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let q = Quiver::affine(3).unwrap();
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let i = random_idempotent(&mut rng, &q, n);
        let mut w = random_word(&mut rng, n, 6);
        w.push(Atom::E(i.clone()));
        let x: KlrElement = KlrEngine::new(q, n).reduce(&w, None).unwrap();
        let mut sorted_i = i.clone();
        sorted_i.sort();
        for (m, _) in x.terms() {
            let mut l = m.left_idempotent();
            l.sort();
            assert_eq!(l, sorted_i);
            assert_eq!(m.idempotent, i);
        }
    }
}
