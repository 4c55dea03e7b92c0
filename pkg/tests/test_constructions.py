import pytest

from hypersg import FiniteSemigroup, class_flags, class_h_obstructions
from hypersg.clifford import embed_clifford
from hypersg.constructions import (
    GroupAction,
    InvalidAction,
    NotAnIdeal,
    attach_zero,
    automorphism_group,
    box_product_morphism,
    brandt,
    cyclic_actions,
    direct_product,
    equivariant_lift,
    graph_subset,
    holomorph,
    mixed_radix,
    mixed_radix_coords,
    power_group,
    product_of_subset_tuples,
    rees_quotient,
    semidirect_hyper_embedding,
    semidirect_inverse,
    semidirect_product,
    trivial_action,
    zero_embedding,
)
from hypersg.hyperspace import CapExceeded, SubsetMap
from hypersg.library import cyclic, e3, klein, symmetric, trivial, two_chain
from hypersg.search import is_isomorphic
from hypersg.semigroup import ParseError, SemigroupError, inverse_of

import oracles


def test_mixed_radix_roundtrip():
    radices = (2, 3, 4)
    seen = [mixed_radix(mixed_radix_coords(i, radices), radices) for i in range(24)]
    assert seen == list(range(24))
    # rightmost coordinate moves fastest
    assert mixed_radix_coords(1, radices) == (0, 0, 1)
    assert mixed_radix_coords(4, radices) == (0, 1, 0)


def test_direct_products():
    assert direct_product([cyclic(2), cyclic(2)]) == klein()
    P = direct_product([e3(), cyclic(2)])
    f = class_flags(P)
    assert P.n == 6 and f.inverse and f.clifford
    assert is_isomorphic(direct_product([trivial(), symmetric(3)]), symmetric(3))


def test_direct_product_is_coordinatewise():
    A, B = e3(), cyclic(3)
    P = direct_product([A, B])
    for i in range(P.n):
        for j in range(P.n):
            a, b = mixed_radix_coords(i, (3, 3))
            c, d = mixed_radix_coords(j, (3, 3))
            assert P.mul(i, j) == mixed_radix((A.mul(a, c), B.mul(b, d)), (3, 3))


def test_direct_product_cap():
    with pytest.raises(CapExceeded):
        direct_product([cyclic(5)] * 3, cap=100)


def test_attach_zero():
    Z = attach_zero(cyclic(2))
    f = class_flags(Z)
    assert Z.n == 3 and f.inverse and f.clifford
    assert Z.labels == ("0", "1", "z")
    ZZ = attach_zero(Z)
    assert ZZ.n == 4 and all(ZZ.mul(x, 3) == 3 for x in range(4)) and ZZ.mul(2, 2) == 2
    E = attach_zero(e3())
    assert E.n == 4 and class_flags(E).semilattice


def test_semidirect_trivial_action_is_direct_product():
    for S in (e3(), two_chain(), cyclic(3)):
        G = cyclic(2)
        assert semidirect_product(S, G, trivial_action(G, S)) == direct_product([S, G])


def test_holomorph_of_e3():
    G, act = automorphism_group(e3())
    assert G.n == 2 and act.perms == ((0, 1, 2), (1, 0, 2))
    H = holomorph(e3())
    f = class_flags(H)
    assert H.n == 6 and f.inverse and not f.clifford
    assert not act.fixes_idempotents()


def test_holomorph_of_z3_is_s3():
    assert is_isomorphic(holomorph(cyclic(3)), symmetric(3))
    assert holomorph(trivial()).n == 1


@pytest.mark.parametrize("S, order", [(e3(), 2), (cyclic(3), 2), (two_chain(), 1), (klein(), 6)])
def test_automorphism_orders(S, order):
    G, act = automorphism_group(S)
    assert G.n == order
    brute = [f for f in oracles.all_embeddings(S.rows, S.rows)]
    assert sorted(map(list, act.perms)) == sorted(brute)


def test_automorphism_cap():
    with pytest.raises(CapExceeded):
        automorphism_group(cyclic(13))


def test_brandt():
    B = brandt(trivial(), 2)
    assert B.n == 5 and B.labels[-1] == "0"
    assert is_isomorphic(brandt(trivial(), 1), attach_zero(trivial()))
    B2 = brandt(cyclic(2), 2)
    f = class_flags(B2)
    assert B2.n == 9 and f.inverse and not f.clifford
    with pytest.raises(SemigroupError):
        brandt(trivial(), 0)


def test_rees_quotient_of_holomorph():
    H = holomorph(e3())
    Q = rees_quotient(H, [4, 5])  # {ef} x Aut(E_3)
    assert Q.n == 5
    assert is_isomorphic(Q, brandt(trivial(), 2))
    assert class_h_obstructions(Q).violations
    assert class_h_obstructions(H).clean


def test_rees_quotient_degenerate_cases():
    S = e3()
    assert rees_quotient(S, range(3)).n == 1
    Z = attach_zero(cyclic(2))
    assert is_isomorphic(rees_quotient(Z, [2]), Z)


def test_rees_quotient_rejects_non_ideal():
    with pytest.raises(NotAnIdeal) as exc:
        rees_quotient(e3(), [0])
    assert exc.value.witness == (1, 0)


# ---------------------------------------------------------------- actions

def test_action_validation():
    S = e3()
    G = cyclic(2)
    GroupAction(G, S, [(0, 1, 2), (1, 0, 2)])
    with pytest.raises(InvalidAction):
        GroupAction(G, S, [(0, 1, 2), (2, 1, 0)])  # not an automorphism
    with pytest.raises(InvalidAction):
        GroupAction(G, S, [(1, 0, 2), (1, 0, 2)])  # identity moves things
    with pytest.raises(InvalidAction):
        GroupAction(cyclic(3), S, [(0, 1, 2), (1, 0, 2), (1, 0, 2)])  # not a homomorphism


def test_action_text_roundtrip():
    S, G = e3(), cyclic(2)
    act = GroupAction(G, S, [(0, 1, 2), (1, 0, 2)])
    text = act.serialize()
    assert text == "0: 0 1 2\n1: 1 0 2\n"
    assert GroupAction.parse(text, G, S).perms == act.perms
    with pytest.raises(ParseError):
        GroupAction.parse("0: 0 1 2\n", G, S)


def test_cyclic_actions_counts():
    assert len(cyclic_actions(cyclic(2), e3())) == 2
    assert len(cyclic_actions(cyclic(3), e3())) == 1
    assert len(cyclic_actions(cyclic(2), cyclic(3))) == 2
    assert len(cyclic_actions(cyclic(1), klein())) == 1


@pytest.mark.parametrize("S", [e3(), cyclic(3), attach_zero(cyclic(2)), brandt(trivial(), 2)])
def test_semidirect_inverse_formula(S):
    G = cyclic(2)
    for act in cyclic_actions(G, S):
        P = semidirect_product(S, G, act)
        for s in range(S.n):
            for g in range(G.n):
                si, gi = semidirect_inverse(S, G, act, s, g)
                assert inverse_of(P, s * G.n + g) == si * G.n + gi


# ---------------------------------------------------------------- embedding maps

def test_subset_tuples():
    Z2 = cyclic(2)
    K = product_of_subset_tuples([Z2, Z2], [0b01, 0b11])
    assert [K.ground.label(x) for x in K] == ["(0,0)", "(0,1)"]
    single = product_of_subset_tuples([Z2, cyclic(3)], [0b10, 0b100])
    assert len(single) == 1 and single.elements() == [mixed_radix((1, 2), (2, 3))]
    with pytest.raises(SemigroupError):
        product_of_subset_tuples([Z2], [1, 1])


def test_box_product_is_injective_homomorphism():
    m, powers, target = box_product_morphism([cyclic(2), cyclic(2)])
    assert m.source.n == 9 and len(set(m.map)) == 9
    assert m.is_embedding


def test_box_product_mixed_factors():
    m, _, _ = box_product_morphism([cyclic(2), cyclic(3)])
    assert m.is_embedding


def test_zero_embedding_examples():
    Z2 = cyclic(2)
    f = SubsetMap(trivial(), cyclic(1), [1])
    ext = zero_embedding(f, Z2, inclusion=[0])
    assert ext.images == (0b01, 0b11)
    assert is_isomorphic(ext.source, two_chain())

    K = klein()
    g = SubsetMap(Z2, Z2, [0b01, 0b10])
    ext = zero_embedding(g, K, inclusion=[0, 2])  # Z2 x {0}
    assert ext.is_embedding() and ext.images[-1] == 0b1111


def test_zero_embedding_rejects_full_group():
    Z2 = cyclic(2)
    with pytest.raises(SemigroupError):
        zero_embedding(SubsetMap(Z2, Z2, [0b01, 0b10]), Z2)


def test_graph_subset_single_coordinate():
    # ({0}, 1) over H = Z2, G = Z2 -> {0} x {1} = carrier index 0*2 + 1
    assert graph_subset(0b01, 1, 2) == 0b10


def test_power_group_shift_is_action():
    for side in ("left", "right"):
        HG, shift = power_group(cyclic(2), cyclic(3), side=side)
        assert HG.n == 8
        shift._validate()
    _, left = power_group(cyclic(2), symmetric(3), side="left")
    with pytest.raises(InvalidAction):
        left._validate()
    _, right = power_group(cyclic(2), symmetric(3), side="right")
    right._validate()


def test_lift_is_equivariant():
    E = e3()
    G, act = automorphism_group(E)
    f = SubsetMap(E, klein(), [0b0011, 0b0101, 0b1111])
    lift = equivariant_lift(f, act)
    for g in range(G.n):
        for s in range(E.n):
            shifted = tuple(lift[s][G.mul(g, a)] for a in range(G.n))
            assert lift[act.act(g, s)] == shifted


def test_semidirect_embedding_trivial_group():
    f = SubsetMap(two_chain(), cyclic(2), [0b11, 0b01])
    G = cyclic(1)
    r = semidirect_hyper_embedding(f, G, trivial_action(G, two_chain()))
    assert r.verified and r.target_group.n == 2
    assert r.images == f.images


def test_semidirect_embedding_e3_swap():
    E = e3()
    G, act = automorphism_group(E)
    f = SubsetMap(E, klein(), [0b0011, 0b0101, 0b1111])
    assert f.is_embedding()
    r = semidirect_hyper_embedding(f, G, act)
    assert r.target_group.n == 32 and r.verified
    assert r.as_subset_map().is_embedding()


def test_semidirect_embedding_from_clifford_certificate():
    E = e3()
    G, act = automorphism_group(E)
    f = embed_clifford(E).as_subset_map()
    r = semidirect_hyper_embedding(f, G, act)
    assert r.target_group.n == 128 and r.verified


def test_semidirect_embedding_above_cap_is_symbolic():
    E = e3()
    G, act = automorphism_group(E)
    f = SubsetMap(E, klein(), [0b0011, 0b0101, 0b1111])
    r = semidirect_hyper_embedding(f, G, act, power_cap=8)
    assert r.images is None and r.homomorphism is None
    assert len(r.symbolic()) == 6
    with pytest.raises(SemigroupError):
        r.as_subset_map()


def test_nonabelian_group_needs_flag():
    f = SubsetMap(two_chain(), cyclic(2), [0b11, 0b01])
    G = symmetric(3)
    act = trivial_action(G, two_chain())
    with pytest.raises(SemigroupError):
        semidirect_hyper_embedding(f, G, act)
    left = semidirect_hyper_embedding(f, G, act, allow_nonabelian=True)
    assert left.homomorphism is False and left.target_group is None
    right = semidirect_hyper_embedding(f, G, act, allow_nonabelian=True, side="right")
    assert right.verified and right.target_group.n == 384


def test_semidirect_rejects_mismatched_action():
    f = SubsetMap(two_chain(), cyclic(2), [0b11, 0b01])
    G = cyclic(2)
    with pytest.raises(InvalidAction):
        semidirect_hyper_embedding(f, G, trivial_action(G, e3()))


def test_semidirect_product_validates_by_default():
    S = FiniteSemigroup([[0, 1], [1, 0]])
    G = cyclic(2)
    P = semidirect_product(S, G, trivial_action(G, S))
    assert P.check_associativity() is None
