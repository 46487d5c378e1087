use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use rhg::closedform::beatty;
use rhg::lattice::{class_of, decompose, is_terminal, phi_q, recompose, terminal_set};
use rhg::solver::{export_binary, export_csv, import_binary, import_csv, solve};
use rhg::{GameConstants, GameDef, MoveSet, Outcome, Position, Window};

fn constants(max: u64) -> impl Strategy<Value = GameConstants> {
    (1..=max, 0..=max, 0..=max, 1..=max)
        .prop_filter_map("det > 0", |(p1, q1, p2, q2)| GameConstants::new(p1, q1, p2, q2).ok())
}

fn small_moves() -> impl Strategy<Value = MoveSet> {
    let pair = (0u64..=4, 0u64..=4).prop_filter("nonzero", |&m| m != (0, 0));
    (prop::collection::btree_set(pair.clone(), 1..4), prop::collection::btree_set(pair, 0..3)).prop_filter_map(
        "valid move set",
        |(f, r)| {
            let rays: Vec<_> = r.into_iter().collect();
            let finite = f.into_iter().filter(|m| !rays.contains(m)).collect();
            MoveSet::new(finite, rays).ok()
        },
    )
}

/// All positions reachable from `p` in one move of `g`.
fn options(g: &GameDef, p: Position) -> Vec<Position> {
    let step = |(dx, dy): (u64, u64), k: u64| {
        let q = Position { x: p.x.checked_sub(dx * k)?, y: p.y.checked_sub(dy * k)? };
        g.in_region(q).then_some(q)
    };
    let mut out: Vec<_> = g.finite_vectors().into_iter().filter_map(|v| step(v, 1)).collect();
    for v in g.ray_vectors() {
        // rays leave the box after at most max(x, y) steps
        out.extend((1..=p.x.max(p.y)).filter_map(|k| step(v, k)));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn terminal_count_is_det(c in constants(20)) {
        let t = terminal_set(&c);
        prop_assert_eq!(t.len() as u64, c.det());
        prop_assert!(t.windows(2).all(|w| w[0] < w[1]));
        prop_assert!(t.iter().all(|&p| is_terminal(&c, p)));
    }

    #[test]
    fn terminal_iff_no_basis_step(c in constants(12), x in 0u64..80, y in 0u64..80) {
        prop_assume!(c.contains(x, y));
        let p = Position { x, y };
        let stays = |(dx, dy): (u64, u64)| x >= dx && y >= dy && c.contains(x - dx, y - dy);
        let blocked = !stays(c.transform(1, 0)) && !stays(c.transform(0, 1));
        prop_assert_eq!(is_terminal(&c, p), blocked);
    }

    #[test]
    fn region_iff_phi_nonnegative(c in constants(12), x in 0u64..80, y in 0u64..80) {
        let (p1, q1, p2, q2) = (c.p1() as i128, c.q1() as i128, c.p2() as i128, c.q2() as i128);
        let (x1, y1) = (x as i128, y as i128);
        let inside = x1 * q2 - y1 * p2 >= 0 && y1 * p1 - x1 * q1 >= 0;
        prop_assert_eq!(c.contains(x, y), inside);
        prop_assert_eq!(phi_q(&c, Position { x, y }).is_ok(), inside);
    }

    #[test]
    fn recompose_then_decompose(c in constants(12), class_idx in any::<prop::sample::Index>(), a in 0u64..50, b in 0u64..50) {
        let t = terminal_set(&c);
        let class = t[class_idx.index(t.len())];
        let p = recompose(&c, class, a, b);
        prop_assert!(c.contains(p.x, p.y));
        let d = decompose(&c, p).unwrap();
        prop_assert_eq!((d.class, d.a, d.b), (class, a, b));
        let base = phi_q(&c, class).unwrap();
        prop_assert_eq!(phi_q(&c, p).unwrap(), Position { x: base.x + a, y: base.y + b });
    }

    #[test]
    fn decomposition_is_unique(c in constants(6), x in 0u64..40, y in 0u64..40) {
        prop_assume!(c.contains(x, y));
        let p = Position { x, y };
        let mut hits = Vec::new();
        for &class in &terminal_set(&c) {
            for a in 0..=x.max(y) {
                for b in 0..=x.max(y) {
                    if recompose(&c, class, a, b) == p {
                        hits.push((class, a, b));
                    }
                }
            }
        }
        let d = decompose(&c, p).unwrap();
        prop_assert_eq!(hits, vec![(d.class, d.a, d.b)]);
    }

    #[test]
    fn terminals_have_no_moves(c in constants(10), m in small_moves()) {
        let g = GameDef::q_subtraction(c, m);
        for p in terminal_set(&c) {
            prop_assert!(options(&g, p).is_empty(), "{} has a move", p);
        }
    }

    #[test]
    fn outcomes_are_sound(c in constants(5), m in small_moves()) {
        let g = GameDef::q_subtraction(c, m);
        let t = solve(&g, Window::square(40)).unwrap();
        for (p, o) in t.cells() {
            let to_p = options(&g, p).into_iter().any(|q| t.is_p(q));
            prop_assert_eq!(o == Outcome::N, to_p, "at {}", p);
        }
    }

    #[test]
    fn moves_preserve_class(c in constants(10), m in small_moves(), seed in any::<u64>()) {
        let g = GameDef::q_subtraction(c, m);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut p = recompose(&c, terminal_set(&c)[0], rng.gen_range(0..30), rng.gen_range(0..30));
        let class = class_of(&c, p).unwrap();
        loop {
            let opts = options(&g, p);
            if opts.is_empty() {
                break;
            }
            p = opts[rng.gen_range(0..opts.len())];
            prop_assert_eq!(class_of(&c, p).unwrap(), class);
        }
        // sparse move sets can stall above the terminal of the class
        prop_assert!(is_terminal(&c, p) == (p == class));
    }

    #[test]
    fn table_round_trips(c in constants(6), m in small_moves(), w in 0u64..30, h in 0u64..30) {
        let g = GameDef::q_subtraction(c, m);
        let window = Window::new(w, h);
        let t = solve(&g, window).unwrap();
        prop_assert_eq!(&import_csv(&g, window, &export_csv(&t)).unwrap(), &t);
        prop_assert_eq!(&import_binary(&g, &export_binary(&t)).unwrap(), &t);
    }
}

#[test]
fn beatty_sequences_are_complementary() {
    const N: u64 = 1_000_000;
    let mut seen = vec![0u8; 3 * N as usize];
    for n in 1..=N {
        let b = beatty(n).unwrap();
        assert_eq!(b.hi, b.lo + n);
        seen[b.lo as usize] += 1;
        seen[b.hi as usize] += 1;
    }
    // every positive integer below the last lower value is hit exactly once
    let last = beatty(N).unwrap().lo as usize;
    assert!(seen[1..last].iter().all(|&k| k == 1));
}
