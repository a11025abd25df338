use proptest::prelude::*;
use qlattice::lattice::close_family;
use qlattice::{
    algebra_closure, check_distributive, check_orthomodular, common_invariant_filter,
    context_lattice, is_invariant, is_irreducible, pauli_decompose, product_lattice,
    projector_from_subspace, projector_meet_in_context, random, subset_projector, ExactMatrix,
    GaussianRational, MaximalContext, Projector, SubsetSum, Subspace, SubspaceLattice,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-6i64..=6, 1i64..=6, -6i64..=6, 1i64..=6)
        .prop_map(|(a, b, c, d)| GaussianRational::complex(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(a.conj().conj(), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.checked_div(&b).unwrap() * &b, a.clone());
            prop_assert!((&b * &b.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn rref_rank_and_null_space(seed in any::<u64>(), rows in 1usize..=5, cols in 1usize..=5) {
        let mut r = rng(seed);
        let mut a = random::matrix(&mut r, rows, cols);
        // force some rank deficiency half of the time
        if rows > 1 && r.gen_bool(0.5) {
            let shifted = a.row(0).scale(&random::scalar(&mut r));
            let mut rows_v = a.row_vectors();
            rows_v[rows - 1] = shifted;
            a = ExactMatrix::from_row_vectors(&rows_v).unwrap();
        }
        let red = a.rref();
        prop_assert_eq!(&red.matrix.rref(), &red);
        prop_assert_eq!(red.rank, a.adjoint().rank());
        let kernel = a.null_space();
        prop_assert_eq!(kernel.len(), cols - red.rank);
        for v in kernel {
            prop_assert!(a.apply(&v).unwrap().is_zero());
        }
    }

    #[test]
    fn matmul_is_associative(seed in any::<u64>(), n in 1usize..=4, m in 1usize..=4, k in 1usize..=4, l in 1usize..=4) {
        let mut r = rng(seed);
        let (a, b, c) = (random::matrix(&mut r, n, m), random::matrix(&mut r, m, k), random::matrix(&mut r, k, l));
        prop_assert_eq!(
            a.matmul(&b).unwrap().matmul(&c).unwrap(),
            a.matmul(&b.matmul(&c).unwrap()).unwrap()
        );
    }

    #[test]
    fn subspace_lattice_identities(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let u = random::subspace(&mut r, n);
        let v = random::subspace(&mut r, n);
        let meet = u.meet(&v).unwrap();
        let join = u.join(&v).unwrap();
        prop_assert_eq!(join.orthocomplement(), u.orthocomplement().meet(&v.orthocomplement()).unwrap());
        prop_assert_eq!(u.orthocomplement().orthocomplement(), u.clone());
        prop_assert_eq!(u.dim() + u.orthocomplement().dim(), n);
        prop_assert_eq!(meet.dim() + join.dim(), u.dim() + v.dim());
        prop_assert_eq!(u.meet(&join).unwrap(), u.clone());
        prop_assert_eq!(u.join(&meet).unwrap(), u.clone());
        prop_assert!(meet.leq(&u).unwrap() && meet.leq(&v).unwrap());
        prop_assert!(u.leq(&join).unwrap() && v.leq(&join).unwrap());
        prop_assert_eq!(u.meet(&v).unwrap(), v.meet(&u).unwrap());
        prop_assert_eq!(u.meet(&u).unwrap(), u.clone());
    }

    #[test]
    fn canonical_form_ignores_spanning_set(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let u = random::subspace(&mut r, n);
        let mut span: Vec<_> = u.basis().iter().map(|b| {
            let mut s = random::scalar(&mut r);
            while s.is_zero() {
                s = random::scalar(&mut r);
            }
            b.scale(&s)
        }).collect();
        // add a redundant combination and shuffle
        if let (Some(a), Some(b)) = (span.first().cloned(), span.last().cloned()) {
            span.push(a.add(&b).unwrap());
        }
        span.shuffle(&mut r);
        prop_assert_eq!(Subspace::from_span(n, &span).unwrap(), u.clone());
        prop_assert_eq!(Subspace::from_span(n, u.basis()).unwrap(), u);
    }

    #[test]
    fn projector_round_trips(seed in any::<u64>(), n in 1usize..=5) {
        let mut r = rng(seed);
        let p = random::projector(&mut r, n);
        prop_assert_eq!(&projector_from_subspace(&p.ran()), &p);
        prop_assert_eq!(p.ran().dim() + p.ker().dim(), n);
        prop_assert_eq!(p.ker(), p.ran().orthocomplement());
        prop_assert_eq!(p.ker(), p.negation().ran());
        prop_assert_eq!(&p.negation().negation(), &p);
        prop_assert!(p.ran().join(&p.negation().ran()).unwrap().is_full());
        prop_assert!(p.ran().meet(&p.negation().ran()).unwrap().is_zero());
        let u = random::subspace(&mut r, n);
        prop_assert_eq!(projector_from_subspace(&u).ran(), u);
    }

    #[test]
    fn commuting_pairs_meet_as_product(seed in any::<u64>(), n in 2usize..=5) {
        let mut r = rng(seed);
        let (p, q, _, _) = random::commuting_pair(&mut r, n);
        prop_assert!(p.commutes(&q).unwrap());
        let pq = Subspace::column_space(&p.matrix().matmul(q.matrix()).unwrap());
        prop_assert_eq!(pq, p.ran().meet(&q.ran()).unwrap());
    }
}

fn random_context(seed: u64, n: usize) -> MaximalContext {
    let mut r = rng(seed);
    let members = r.gen_range(1..=n);
    random::context(&mut r, n, members)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn context_lattices_are_boolean(seed in any::<u64>(), n in 2usize..=5) {
        let ctx = random_context(seed, n);
        prop_assert_eq!(ctx.projectors().iter().map(Projector::rank).sum::<usize>(), n);
        let l = context_lattice(&ctx);
        prop_assert_eq!(l.len(), 1 << ctx.len());
        let (m, j) = l.closure_reports().unwrap();
        prop_assert!(m.holds && j.holds);
        prop_assert!(check_distributive(&l).unwrap().holds);
        prop_assert!(check_orthomodular(&l).unwrap().holds);
        for u in l.elements() {
            for p in ctx.projectors() {
                prop_assert!(is_invariant(u, p.matrix()).unwrap());
            }
        }
        prop_assert!(product_lattice(&ctx).same_elements(&l));
    }

    #[test]
    fn subset_algebra_matches_subspace_algebra(seed in any::<u64>(), n in 2usize..=4) {
        let ctx = random_context(seed, n);
        let k = ctx.len();
        let all: Vec<SubsetSum> = (0..1usize << k)
            .map(|mask| SubsetSum::new(&ctx, (0..k).filter(|i| mask >> i & 1 == 1)).unwrap())
            .collect();
        for s in &all {
            for t in &all {
                let (rs, rt) = (subset_projector(&ctx, s).unwrap().ran(), subset_projector(&ctx, t).unwrap().ran());
                let meet = projector_meet_in_context(&ctx, s, t).unwrap();
                prop_assert_eq!(meet.ran(), rs.meet(&rt).unwrap());
                let union = SubsetSum::new(&ctx, s.members().union(t.members()).copied()).unwrap();
                prop_assert_eq!(subset_projector(&ctx, &union).unwrap().ran(), rs.join(&rt).unwrap());
            }
        }
    }

    #[test]
    fn incompatible_contexts_break_distributivity(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let a = random::context(&mut r, n, 2);
        let b = random::context(&mut r, n, 2);
        prop_assume!(!a.projectors()[0].commutes(&b.projectors()[0]).unwrap());
        let mut gens = context_lattice(&a).into_elements();
        gens.extend(context_lattice(&b).into_elements());
        let family = close_family(gens, 256).unwrap();
        let l = SubspaceLattice::new(n, family).unwrap();
        let report = check_distributive(&l).unwrap();
        prop_assert!(!report.holds);
        prop_assert!(report.replay(l.elements()).unwrap());
        prop_assert!(check_orthomodular(&l).unwrap().holds);
    }

    #[test]
    fn closure_is_monotone_and_certified(seed in any::<u64>(), n in 2usize..=3) {
        let mut r = rng(seed);
        let gens: Vec<ExactMatrix> = (0..r.gen_range(0..=3)).map(|_| random::projector(&mut r, n).into_matrix()).collect();
        let extra = random::projector(&mut r, n).into_matrix();
        let small = algebra_closure(n, &gens).unwrap();
        let mut more = gens.clone();
        more.push(extra);
        let big = algebra_closure(n, &more).unwrap();
        prop_assert!(small.dimension() <= big.dimension());
        prop_assert!(small.is_closed() && big.is_closed());
        for b in small.basis() {
            prop_assert!(big.contains(b).unwrap());
        }
    }

    #[test]
    fn irreducible_families_have_trivial_filters(seed in any::<u64>(), n in 2usize..=3) {
        let mut r = rng(seed);
        let a = random::context(&mut r, n, n);
        let b = random::context(&mut r, n, n);
        let gens: Vec<ExactMatrix> = a.matrices().into_iter().chain(b.matrices()).collect();
        let candidates: Vec<Subspace> = (0..8).map(|_| random::subspace(&mut r, n))
            .chain(context_lattice(&a).into_elements())
            .collect();
        let verdict = is_irreducible(n, &gens, &candidates).unwrap();
        if verdict.irreducible {
            for u in common_invariant_filter(&gens, &candidates).unwrap() {
                prop_assert!(u.is_zero() || u.is_full());
            }
        } else {
            prop_assert!(verdict.span.dimension() < n * n);
        }
    }

    #[test]
    fn block_diagonal_families_are_reducible(seed in any::<u64>(), n in 2usize..=4) {
        let mut r = rng(seed);
        let split = r.gen_range(1..n);
        // random projectors supported on the first `split` coordinates
        // plus the identity on the rest
        let embed = |p: &Projector| {
            let mut m = ExactMatrix::identity(n).to_rows();
            for (i, row) in m.iter_mut().enumerate().take(split) {
                for (j, x) in row.iter_mut().enumerate().take(split) {
                    *x = p.matrix().get(i, j).clone();
                }
            }
            ExactMatrix::from_rows(m).unwrap()
        };
        let gens: Vec<ExactMatrix> = (0..3).map(|_| embed(&random::projector(&mut r, split))).collect();
        let block = Subspace::from_span(n, &(0..split).map(|k| qlattice::ExactVector::unit(n, k)).collect::<Vec<_>>()).unwrap();
        let verdict = is_irreducible(n, &gens, std::slice::from_ref(&block)).unwrap();
        prop_assert!(!verdict.irreducible);
        prop_assert_eq!(verdict.invariant_subspace, Some(block.clone()));
        prop_assert_eq!(common_invariant_filter(&gens, std::slice::from_ref(&block)).unwrap(), vec![block]);
    }

    #[test]
    fn pauli_reassembly(seed in any::<u64>()) {
        let m = random::matrix(&mut rng(seed), 2, 2);
        let d = pauli_decompose(&m).unwrap();
        prop_assert_eq!(d.reassemble(), m.clone());
        prop_assert_eq!(d.c, m.trace().unwrap() * GaussianRational::ratio(1, 2));
    }
}
