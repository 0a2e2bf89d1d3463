//! Exhaustive small-order property suites for the inertia lemmas the
//! checkers rely on. The full order-7 sweeps live in the acceptance suite;
//! these run the same properties at order ≤ 5/6 so the core crate is
//! self-checking on its own.

use inertia_core::constructions::{add_twin, kotlov_lovasz_double, line_graph, tensor_product};
use inertia_core::generate::{graph_from_code, labeled_graph_count, BitStream, SplitMix64};
use inertia_core::inertia::{inertia, shifted_inertia, Inertia};
use inertia_core::matrix::{adjacency_matrix, IntSymMatrix};
use inertia_core::reduction::{is_reduced, reduce, twin_classes};
use inertia_core::{Graph, Rational64};

fn inertia_of(g: &Graph) -> Inertia {
    inertia(&adjacency_matrix(g))
}

fn for_each_labeled(max_order: usize, mut f: impl FnMut(&Graph)) {
    for n in 1..=max_order {
        for code in 0..labeled_graph_count(n) {
            f(&graph_from_code(n, code));
        }
    }
}

#[test]
fn open_twin_addition_preserves_nonzero_inertia() {
    for_each_labeled(5, |g| {
        let base = inertia_of(g);
        for v in 0..g.order() {
            let h = add_twin(g, v, false).unwrap();
            let hi = inertia_of(&h);
            assert_eq!(
                (hi.n_plus, hi.n_minus, hi.n_zero),
                (base.n_plus, base.n_minus, base.n_zero + 1),
                "twin at {v} of {g:?}"
            );
        }
    });
}

#[test]
fn leaf_deletion_drops_one_of_each_sign() {
    for_each_labeled(6, |g| {
        let base = inertia_of(g);
        for u in 0..g.order() {
            if g.degree(u) != 1 {
                continue;
            }
            let v = g.neighbors(u)[0];
            let keep: Vec<usize> = (0..g.order()).filter(|&w| w != u && w != v).collect();
            let h = g.induced_subgraph(&keep).unwrap();
            let hi = inertia_of(&h);
            assert_eq!(base.n_plus, hi.n_plus + 1, "leaf {u} of {g:?}");
            assert_eq!(base.n_minus, hi.n_minus + 1, "leaf {u} of {g:?}");
        }
    });
}

#[test]
fn vertex_deletion_interlaces() {
    for_each_labeled(5, |g| {
        let base = inertia_of(g);
        for v in 0..g.order() {
            let h = g.delete_vertex(v).unwrap();
            let hi = inertia_of(&h);
            // signature moves by at most one
            assert!((base.signature() - hi.signature()).abs() <= 1);
            // each signed count drops by at most one and never grows
            assert!(hi.n_plus == base.n_plus || hi.n_plus + 1 == base.n_plus);
            assert!(hi.n_minus == base.n_minus || hi.n_minus + 1 == base.n_minus);
        }
    });
}

#[test]
fn closed_neighborhood_deletion_bound() {
    for_each_labeled(6, |g| {
        if g.order() < 2 || !g.is_connected() {
            return;
        }
        let base = inertia_of(g);
        for u in 0..g.order() {
            let h = g.delete_closed_neighborhood(u).unwrap();
            let hi = inertia_of(&h);
            assert!(base.n_plus > hi.n_plus, "N[{u}] of {g:?}");
            assert!(base.n_minus > hi.n_minus, "N[{u}] of {g:?}");
        }
    });
}

#[test]
fn closed_twin_pairs_bound_negative_inertia() {
    for_each_labeled(6, |g| {
        let classes = twin_classes(g).closed_classes;
        let base = inertia_of(g);
        for class in classes.iter().filter(|c| c.len() >= 2) {
            for (i, &u) in class.iter().enumerate() {
                for &v in &class[i + 1..] {
                    let keep: Vec<usize> = (0..g.order()).filter(|&w| w != u && w != v).collect();
                    let h = g.induced_subgraph(&keep).unwrap();
                    assert!(
                        base.n_minus > inertia_of(&h).n_minus,
                        "closed twins {u},{v} of {g:?}"
                    );
                }
            }
        }
    });
}

#[test]
fn inertia_is_additive_over_components() {
    for_each_labeled(6, |g| {
        let whole = inertia_of(g);
        let mut sum = Inertia::new(0, 0, 0);
        for comp in g.connected_components() {
            sum = sum + inertia_of(&g.induced_subgraph(&comp).unwrap());
        }
        assert_eq!(whole, sum, "{g:?}");
    });
}

#[test]
fn matrix_sum_bound_on_random_splits() {
    // split each edge set randomly into B + C; n⁺(A) ≤ n⁺(B) + n⁺(C)
    let mut bits = BitStream::new(SplitMix64::new(8_0808));
    for trial in 0..400 {
        let n = 3 + (trial % 5);
        let g = inertia_core::generate::gnp_half(n, &mut bits);
        let mut b = IntSymMatrix::zeros(n);
        let mut c = IntSymMatrix::zeros(n);
        for (u, v) in g.edges() {
            if bits.next_bit() {
                b.set_sym(u, v, 1);
            } else {
                c.set_sym(u, v, 1);
            }
        }
        let a = adjacency_matrix(&g);
        assert!(inertia(&a).n_plus <= inertia(&b).n_plus + inertia(&c).n_plus);
        assert!(inertia(&a).n_minus <= inertia(&b).n_minus + inertia(&c).n_minus);
    }
}

#[test]
fn doubling_increments_both_signs() {
    for_each_labeled(5, |g| {
        let base = inertia_of(g);
        let d = kotlov_lovasz_double(g).unwrap();
        let di = inertia_of(&d);
        assert_eq!(di.n_plus, base.n_plus + 1, "{g:?}");
        assert_eq!(di.n_minus, base.n_minus + 1, "{g:?}");
    });
}

#[test]
fn reduce_is_idempotent_and_preserves_signs() {
    for_each_labeled(6, |g| {
        let r = reduce(g);
        assert!(is_reduced(&r) || r.order() == 0);
        assert_eq!(reduce(&r), r);
        let (a, b) = (inertia_of(g), inertia_of(&r));
        assert_eq!((a.n_plus, a.n_minus), (b.n_plus, b.n_minus), "{g:?}");
    });
}

#[test]
fn tensor_identity_small_exhaustive() {
    let mut graphs = Vec::new();
    for_each_labeled(4, |g| graphs.push(g.clone()));
    for g in &graphs {
        let gi = inertia_of(g);
        for h in &graphs {
            let hi = inertia_of(h);
            let prod = tensor_product(g, h).unwrap();
            let pi = inertia_of(&prod);
            assert_eq!(pi.n_plus, gi.n_plus * hi.n_plus + gi.n_minus * hi.n_minus);
            assert_eq!(pi.n_minus, gi.n_plus * hi.n_minus + gi.n_minus * hi.n_plus);
        }
    }
}

#[test]
fn line_graph_floor_small_exhaustive() {
    // λ_min(L(G)) ≥ −2 with multiplicity of −2 at least m − n
    for_each_labeled(5, |g| {
        let lg = line_graph(g);
        let shift = shifted_inertia(&adjacency_matrix(&lg), Rational64::new(-2, 1));
        assert_eq!(shift.n_minus, 0, "{g:?}");
        let deficit = g.size() as i64 - g.order() as i64;
        assert!(shift.n_zero as i64 >= deficit, "{g:?}");
    });
}
