use ferrers_core::bigraph::enumerate_connected;
use ferrers_core::campaign::{verify_graph, LevelSummary, DEFAULT_EPS};
use ferrers_core::BipartiteGraph;
use ferrers_lab::format::{
    from_graph6, graph_to_json, parse_graph_json, parse_rational, parse_rational_list, rational_to_string, to_graph6,
};
use ferrers_lab::output::{LevelLine, RecordLine};

fn fig1() -> BipartiteGraph {
    BipartiteGraph::ferrers_from_partition(&"3,3,2,1".parse().unwrap()).unwrap()
}

#[test]
fn graph6_matches_reference_strings() {
    // reference strings from an independent graph6 writer, vertices x.. then y..
    let k11 = BipartiteGraph::complete(1, 1).unwrap();
    assert_eq!(to_graph6(&k11), "A_:01");
    assert_eq!(to_graph6(&BipartiteGraph::cycle(4).unwrap()), "C]:0011");
    assert_eq!(to_graph6(&fig1()), "F?~e?:0000111");
    let big = BipartiteGraph::from_edges(
        32,
        32,
        &(0..32).flat_map(|i| (0..32).map(move |j| (i, j))).filter(|(i, j)| (i + j) % 3 == 0).collect::<Vec<_>>(),
    )
    .unwrap();
    let s = to_graph6(&big);
    let (g6, mask) = s.split_once(':').unwrap();
    assert!(g6.starts_with("~?@?"));
    assert_eq!(g6.len(), 340);
    assert!(g6.ends_with("HHHHH?????QQQQQO????QQQQQO????@HHHHG?????"));
    assert_eq!(mask.len(), 64);
    assert_eq!(from_graph6(&s).unwrap(), big);
}

#[test]
fn graph6_round_trips() {
    for n in 2..=7 {
        for g in enumerate_connected(n, false).unwrap() {
            let s = to_graph6(&g);
            assert_eq!(from_graph6(&s).unwrap(), g, "{s}");
            // without the mask the sides come back up to a swap
            let (bare, _) = s.split_once(':').unwrap();
            let h = from_graph6(bare).unwrap();
            assert_eq!(h.canonical_key().unwrap(), g.canonical_key().unwrap());
        }
    }
}

#[test]
fn graph6_rejects_bad_input() {
    assert!(from_graph6("").is_err());
    assert!(from_graph6("C").is_err());
    assert!(from_graph6("C]:001").is_err());
    assert!(from_graph6("C]:0101").is_err());
    // a triangle has no two-colouring
    assert!(from_graph6("Bw").is_err());
    assert!(from_graph6("C] ").is_ok());
}

#[test]
fn graph_json_round_trips() {
    let g = fig1();
    assert_eq!(parse_graph_json(&graph_to_json(&g)).unwrap(), g);
    let c4 = parse_graph_json(r#"{"p":2,"q":2,"edges":[[0,0],[0,1],[1,0],[1,1]]}"#).unwrap();
    assert_eq!(c4, BipartiteGraph::cycle(4).unwrap().canonical_form().unwrap());
    assert!(parse_graph_json(r#"{"p":2,"q":2,"edges":[[0,2]]}"#).is_err());
    assert!(parse_graph_json(r#"{"p":1,"q":1,"edges":[[0,0],[0,0]]}"#).is_err());
    assert!(parse_graph_json(r#"{"p":1,"q":1,"edges":[],"extra":1}"#).is_err());
    assert!(parse_graph_json("[1,2]").is_err());
}

#[test]
fn rationals_always_carry_a_denominator() {
    let four = parse_rational("4").unwrap();
    assert_eq!(rational_to_string(&four), "4/1");
    assert_eq!(rational_to_string(&parse_rational("32/10").unwrap()), "16/5");
    assert_eq!(rational_to_string(&parse_rational("-3/6").unwrap()), "-1/2");
    assert!(parse_rational("1/0").is_err());
    assert!(parse_rational("x").is_err());
    assert_eq!(parse_rational_list("5/2, 2,1").unwrap().len(), 3);
}

#[test]
fn record_and_summary_lines() {
    let r = verify_graph(&BipartiteGraph::cycle(4).unwrap(), DEFAULT_EPS).unwrap();
    let line = serde_json::to_string(&RecordLine::from(&r)).unwrap();
    assert!(line.starts_with(r#"{"type":"record","n":4,"p":2,"q":2,"#), "{line}");
    assert!(line.contains(r#""tree_count":"4","ferrers_invariant":"4/1","verdict":"Good""#));
    assert!(line.contains(r#""ferrers_equality":true"#));

    let c6 = verify_graph(&BipartiteGraph::cycle(6).unwrap(), DEFAULT_EPS).unwrap();
    let line = serde_json::to_string(&RecordLine::from(&c6)).unwrap();
    assert!(!line.contains("ferrers_equality"), "C6 is not Ferrers: {line}");

    let mut level = LevelSummary::new(4);
    level.absorb(&r);
    level.absorb(&c6);
    let back = LevelSummary::try_from(&LevelLine::from(&level)).unwrap();
    assert_eq!(back, level);
}
