use proptest::prelude::*;

use annular::bijections::reflect;
use annular::model::{canonical_rotation, rotate, DyckWord, GapCell, Step};
use annular::AnnularMatching;

fn dyck(max_pairs: usize) -> impl Strategy<Value = DyckWord> {
    // a random balanced word via a random sequence of pushes and pops
    prop::collection::vec(any::<bool>(), 0..=2 * max_pairs).prop_map(|bits| {
        let mut steps = Vec::new();
        let mut open = 0usize;
        for up in bits {
            if up || open == 0 {
                steps.push(Step::U);
                open += 1;
            } else {
                steps.push(Step::D);
                open -= 1;
            }
        }
        steps.extend(std::iter::repeat(Step::D).take(open));
        DyckWord::new(steps).expect("balanced by construction")
    })
}

fn cells() -> impl Strategy<Value = Vec<GapCell>> {
    prop::collection::vec((dyck(3), dyck(3)).prop_map(|(o, i)| GapCell::new(o, i)), 1..5)
}

proptest! {
    #[test]
    fn canonical_rotation_ignores_start(word in prop::collection::vec(0u8..3, 1..16), shift in 0usize..16) {
        let turned = rotate(&word, shift % word.len());
        prop_assert_eq!(canonical_rotation(&word).unwrap(), canonical_rotation(&turned).unwrap());
    }

    #[test]
    fn code_round_trip(cells in cells(), shift in 0usize..5) {
        let m = AnnularMatching::from_cells(cells.clone()).unwrap();
        let turned = AnnularMatching::from_cells(rotate(&cells, shift % cells.len())).unwrap();
        prop_assert_eq!(&m, &turned);
        prop_assert!(m.is_canonical());
        prop_assert_eq!(AnnularMatching::parse(&m.code()).unwrap(), m.clone());
        prop_assert_eq!(reflect(&reflect(&m)), m);
    }
}
