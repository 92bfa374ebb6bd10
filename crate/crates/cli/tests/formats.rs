use monocycle::format::{parse, parse_coloring, parse_graph, write_coloring, write_graph, Input};
use monocycle_core::{EdgeColoring, Graph};
use proptest::prelude::*;

fn arb_coloring() -> impl Strategy<Value = EdgeColoring> {
    (1usize..12, 1usize..5).prop_flat_map(|(n, k)| {
        let slots = Graph::complete(n).edges().to_vec();
        let m = slots.len();
        proptest::collection::vec(0..=k, m).prop_map(move |picks| {
            let triples = slots
                .iter()
                .zip(&picks)
                .filter(|(_, &c)| c > 0)
                .map(|(&(u, v), &c)| (u, v, c));
            EdgeColoring::from_triples(n, k, triples).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn coloring_round_trip(col in arb_coloring()) {
        let text = write_coloring(&col);
        prop_assert!(text.ends_with('\n') && !text.contains('\r'));
        prop_assert_eq!(parse_coloring(&text).unwrap(), col.clone());
        prop_assert_eq!(write_coloring(&parse_coloring(&text).unwrap()), text);
    }

    #[test]
    fn graph_round_trip(col in arb_coloring()) {
        let g = col.base().clone();
        let text = write_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn edge_order_in_file_does_not_matter(col in arb_coloring(), seed in any::<u64>()) {
        let text = write_coloring(&col);
        let mut lines: Vec<&str> = text.lines().skip(1).collect();
        let len = lines.len();
        if len > 1 {
            let mut s = seed;
            for i in (1..len).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                lines.swap(i, (s >> 33) as usize % (i + 1));
            }
        }
        let shuffled = format!("{}\n{}\n", text.lines().next().unwrap(), lines.join("\n"));
        prop_assert_eq!(parse_coloring(&shuffled).unwrap(), col);
    }
}

#[test]
fn kinds_are_told_apart() {
    assert!(matches!(parse("graph 2\ne 0 1\n"), Ok(Input::Graph(_))));
    assert!(matches!(
        parse("coloring 2 1\ne 0 1 1\n"),
        Ok(Input::Coloring(_))
    ));
    assert!(parse_graph("coloring 2 1\ne 0 1 1\n").is_err());
    assert!(parse_coloring("graph 2\ne 0 1\n").is_err());
}

#[test]
fn invalid_files_are_rejected() {
    for text in [
        "graph 2\ne 0 2\n",
        "graph 3\ne 0 1\ne 1 0\n",
        "coloring 3 2\ne 0 1 3\n",
        "coloring 3 2\ne 0 1 0\n",
        "coloring 3\n",
        "graph x\n",
        "graph 3\ne 0 -1\n",
    ] {
        assert!(parse(text).is_err(), "{text:?}");
    }
}
