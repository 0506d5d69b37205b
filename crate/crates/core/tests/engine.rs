use hpfold::families::{gen_f, gen_php, gen_s, gen_z, standard_z_embedding};
use hpfold::lattice_tree::staircase_paths;
use hpfold::render::{render, RenderFormat};
use hpfold::survey::checkpoint::Checkpoint;
use hpfold::survey::{sweep, SurveyOptions};
use hpfold::{
    bond_graph_shape, contacts, embed, enumerate_lattice_trees, enumerate_optimal, is_unique, missing_bonds,
    naive_oracle, tree_to_folding, Chain, Error, Folding, SearchOptions, ShapeKind, Topology,
};

fn chain(text: &str, topology: Topology) -> Chain {
    Chain::parse(text, topology).unwrap()
}

#[test]
fn s2_folded_by_f2_is_a_rectangle() {
    let s2 = gen_s(2).unwrap();
    assert_eq!(s2.to_string(), "PHPPHP");
    let f2 = gen_f(2).unwrap();
    assert_eq!(f2.to_string(), "EESWWN");
    let points = embed(&s2, &f2).unwrap().points;
    assert_eq!(points.len(), 6);
    assert_eq!(contacts(&s2, &f2).unwrap().len(), 1);
    assert_eq!(render(&s2, &f2, RenderFormat::Ascii).unwrap(), "P-H-P\n| : |\nP-H-P\n");
}

#[test]
fn closed_chain_validation() {
    assert!(matches!(Chain::parse("HPH", Topology::Closed), Err(Error::BadClosedLength(_))));
    assert!(matches!(Chain::parse("HX", Topology::Open), Err(Error::InvalidLabel { ch: 'X', pos: 1 })));
    assert!(matches!(
        embed(&chain("HHH", Topology::Open), &Folding::parse("EW").unwrap()),
        Err(Error::SelfIntersection { .. })
    ));
}

#[test]
fn z8_standard_embedding() {
    let z8 = gen_z(8).unwrap();
    assert_eq!(z8.to_string(), "HPHPHPHPPHPHPHPH");
    let f = standard_z_embedding(4).unwrap();
    assert_eq!(contacts(&z8, &f).unwrap().len(), 7);
    let report = missing_bonds(&z8, &f).unwrap();
    assert_eq!((report.external(), report.internal()), (4, 0));
    let r = enumerate_optimal(&z8, &SearchOptions::default()).unwrap();
    assert_eq!((r.optimum, r.class_count), (7, 1));
}

#[test]
fn php_has_a_single_ground_state_class() {
    // Both engines agree: the four-cycle ground state of (PHP)^4 is unique.
    for topology in [Topology::Open, Topology::Closed] {
        let c = gen_php(1, topology).unwrap();
        let fast = enumerate_optimal(&c, &SearchOptions::default()).unwrap();
        let slow = naive_oracle(&c).unwrap();
        assert_eq!((fast.optimum, fast.class_count), (4, 1));
        assert_eq!((slow.optimum, slow.class_count), (4, 1));
        assert!(is_unique(&c).unwrap());
    }
    let open8 = enumerate_optimal(&gen_php(2, Topology::Open).unwrap(), &SearchOptions::default()).unwrap();
    assert_eq!((open8.optimum, open8.class_count), (8, 6));
}

#[test]
fn trees_drive_php_foldings() {
    assert_eq!(enumerate_lattice_trees(4).unwrap().len(), 22);
    for k in 1..=4 {
        assert_eq!(staircase_paths(k).len(), 1 << (k - 1));
        let chain = gen_php(k, Topology::Closed).unwrap();
        for tree in staircase_paths(k) {
            let f = tree_to_folding(&tree, Topology::Closed).unwrap();
            let shape = bond_graph_shape(&contacts(&chain, &f).unwrap());
            assert_eq!(shape.kind, ShapeKind::DisjointEvenCycles);
            assert_eq!(shape.component_sizes, vec![4; k]);
        }
    }
}

#[test]
fn tree_foldings_are_pairwise_distinct() {
    let chain = gen_php(3, Topology::Open).unwrap();
    let keys: std::collections::BTreeSet<_> = enumerate_lattice_trees(3)
        .unwrap()
        .iter()
        .map(|t| hpfold::folding::orbit_key(&chain, &tree_to_folding(t, Topology::Open).unwrap()).unwrap())
        .collect();
    assert!(keys.len() >= 2);
}

#[test]
fn interrupted_sweep_resumes_to_the_same_record() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n9.ckpt");
    let fresh = sweep(9, Topology::Open, &SurveyOptions { block_size: 16, ..SurveyOptions::default() }).unwrap();

    let partial = SurveyOptions {
        block_size: 16,
        checkpoint: Some(path.clone()),
        max_blocks: Some(5),
        ..SurveyOptions::default()
    };
    let first = sweep(9, Topology::Open, &partial).unwrap();
    assert!(!first.complete);
    assert!(first.cursor < 512);
    let stored = Checkpoint::load(&path).unwrap().unwrap();
    assert_eq!(stored.cursor(), first.cursor);

    let rest = SurveyOptions { max_blocks: None, ..partial };
    let resumed = sweep(9, Topology::Open, &rest).unwrap();
    assert!(resumed.complete);
    assert_eq!((resumed.unique_count, resumed.total_count), (fresh.unique_count, fresh.total_count));
}

#[test]
fn corrupt_checkpoint_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("n8.ckpt");
    let opts = SurveyOptions {
        block_size: 32,
        checkpoint: Some(path.clone()),
        max_blocks: Some(2),
        ..SurveyOptions::default()
    };
    sweep(8, Topology::Open, &opts).unwrap();
    let mut bytes = std::fs::read(&path).unwrap();
    let last = bytes.len() - 10;
    bytes[last] ^= 0xff;
    std::fs::write(&path, &bytes).unwrap();
    assert!(matches!(sweep(8, Topology::Open, &opts), Err(Error::Checkpoint(_))));
    std::fs::write(&path, b"not a checkpoint").unwrap();
    assert!(matches!(sweep(8, Topology::Open, &opts), Err(Error::Checkpoint(_))));
}

#[test]
fn checkpoint_for_another_length_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.ckpt");
    let opts = SurveyOptions {
        checkpoint: Some(path.clone()),
        max_blocks: Some(1),
        block_size: 8,
        ..SurveyOptions::default()
    };
    sweep(7, Topology::Open, &opts).unwrap();
    assert!(matches!(sweep(8, Topology::Open, &opts), Err(Error::Checkpoint(_))));
}

#[test]
fn closed_sweep_counts_even_lengths() {
    let rec = sweep(6, Topology::Closed, &SurveyOptions::default()).unwrap();
    assert_eq!(rec.total_count, 64);
    assert!(rec.complete);
    assert!(sweep(7, Topology::Closed, &SurveyOptions::default()).is_err());
}

#[test]
fn search_result_json_shape() {
    let r = enumerate_optimal(&gen_s(2).unwrap(), &SearchOptions::default()).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["chain"]["sequence"], "PHPPHP");
    assert_eq!(v["chain"]["topology"], "closed");
    assert_eq!(v["optimum"], 1);
    assert_eq!(v["class_count"], 1);
    assert_eq!(v["representatives"][0], "EENWWS");
    assert!(v["stats"]["nodes_expanded"].as_u64().unwrap() > 0);
}
