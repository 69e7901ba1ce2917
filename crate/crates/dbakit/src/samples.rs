//! Small built-in instances shared by the examples and the test suites.

use crate::context::FormalContext;
use crate::set::BitSet;
use crate::topology::{Cts, FiniteTopology};

/// Six objects answering eleven survey properties. The running example for
/// enumeration and classification: its protoconcept algebra is fully
/// contextual but not pure, its semiconcept algebra pure but not fully
/// contextual.
pub fn questionnaire_context() -> FormalContext {
    let objects: Vec<String> = (1..=6).map(|i| format!("q{i}")).collect();
    let attributes: Vec<String> = (1..=11).map(|j| format!("s{j}")).collect();
    let crosses: &[(usize, &[usize])] = &[
        (1, &[1, 3, 5, 7, 10]),
        (2, &[2, 3, 4, 6, 8]),
        (3, &[1, 2, 4, 6, 9]),
        (4, &[1, 3, 5]),
        (5, &[5, 8, 9, 11]),
        (6, &[11]),
    ];
    let pairs: Vec<(usize, usize)> = crosses
        .iter()
        .flat_map(|&(q, ss)| ss.iter().map(move |&s| (q - 1, s - 1)))
        .collect();
    FormalContext::from_pairs(objects, attributes, &pairs).expect("static table is well formed")
}

/// Five objects, four attributes; the plain context underlying
/// [`five_object_cts`].
pub fn five_object_context() -> FormalContext {
    let objects: Vec<String> = ["a", "b", "c", "d", "e"].iter().map(|s| s.to_string()).collect();
    let attributes: Vec<String> = (1..=4).map(|j| j.to_string()).collect();
    let pairs = [
        (0, 1), // a-2
        (1, 1), // b-2
        (2, 3), // c-4
        (3, 0), // d-1
        (3, 3), // d-4
        (4, 0), // e-1
        (4, 2), // e-3
    ];
    FormalContext::from_pairs(objects, attributes, &pairs).expect("static table is well formed")
}

/// The five-object context topologized with two-block partition topologies:
/// `{{a,b,c},{d,e}}` on objects and `{{2},{1,3,4}}` on attributes.
pub fn five_object_cts() -> Cts {
    let ctx = five_object_context();
    let obj_top = FiniteTopology::new(
        5,
        vec![
            BitSet::empty(5),
            BitSet::from_indices(5, [0, 1, 2]),
            BitSet::from_indices(5, [3, 4]),
            BitSet::full(5),
        ],
    )
    .expect("partition blocks close up");
    let attr_top = FiniteTopology::new(
        4,
        vec![
            BitSet::empty(4),
            BitSet::singleton(4, 1),
            BitSet::from_indices(4, [0, 2, 3]),
            BitSet::full(4),
        ],
    )
    .expect("partition blocks close up");
    Cts::new(obj_top, attr_top, ctx).expect("widths match")
}

/// A CTS whose relation holds exactly on a fixed attribute block `C`:
/// `x R y` iff `y` is in `C`. Continuous in both directions whenever `C` is
/// clopen on the attribute side.
pub fn fixed_block_cts(
    object_topology: FiniteTopology,
    attribute_topology: FiniteTopology,
    block: &BitSet,
) -> Cts {
    let g = object_topology.width();
    let m = attribute_topology.width();
    assert_eq!(block.width(), m);
    let objects: Vec<String> = (0..g).map(|i| format!("x{i}")).collect();
    let attributes: Vec<String> = (0..m).map(|j| format!("y{j}")).collect();
    let incidence: Vec<Vec<bool>> = (0..g)
        .map(|_| (0..m).map(|j| block.contains(j)).collect())
        .collect();
    let ctx = FormalContext::new(objects, attributes, &incidence).expect("names distinct");
    Cts::new(object_topology, attribute_topology, ctx).expect("widths match")
}

/// Identity relation on two points where `{2}` is open on the attribute side
/// but not on the object side; lower semicontinuity fails on it.
pub fn semicontinuity_counterexample() -> Cts {
    let ctx = FormalContext::new(
        vec!["1".into(), "2".into()],
        vec!["1".into(), "2".into()],
        &[vec![true, false], vec![false, true]],
    )
    .expect("names distinct");
    let obj_top = FiniteTopology::new(
        2,
        vec![BitSet::empty(2), BitSet::singleton(2, 0), BitSet::full(2)],
    )
    .expect("chain closes up");
    let attr_top = FiniteTopology::discrete(2);
    Cts::new(obj_top, attr_top, ctx).expect("widths match")
}

/// Seeded small context used by exhaustive per-subset sweeps in tests.
pub fn small_context(objects: usize, attributes: usize, seed: u64) -> FormalContext {
    crate::random::random_context_default_density(seed, objects, attributes)
}
