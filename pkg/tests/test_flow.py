import random
from fractions import Fraction

from conftest import closure_brute_force
from ordineq.flow import ClosureInstance, FlowNetwork, closure_solve, max_flow

ZERO = Fraction(0)
ONE = Fraction(1)


def _cut_capacity(net: FlowNetwork, source_side) -> Fraction:
    total = ZERO
    for frm, to, cap in net.edges:
        if frm in source_side and to not in source_side:
            assert cap is not None, "min cut crosses an infinite edge"
            total += cap
    return total


def test_single_edge():
    net = FlowNetwork(num_nodes=2, source=0, sink=1, edges=((0, 1, Fraction(5)),))
    value, cut = max_flow(net)
    assert value == Fraction(5)
    assert cut == frozenset({0})


def test_bottleneck_path():
    net = FlowNetwork(
        num_nodes=3,
        source=0,
        sink=2,
        edges=((0, 1, Fraction(3)), (1, 2, Fraction(2))),
    )
    value, cut = max_flow(net)
    assert value == Fraction(2)
    assert cut == frozenset({0, 1})


def test_closure_forced_loss():
    inst = ClosureInstance(
        items=("e1", "e2"),
        values={"e1": Fraction(1), "e2": Fraction(-2)},
        implications=(("e1", "e2"),),
    )
    accepted, total = closure_solve(inst)
    assert accepted == frozenset()
    assert total == ZERO


def test_closure_worthwhile_loss():
    inst = ClosureInstance(
        items=("e1", "e2"),
        values={"e1": Fraction(1), "e2": Fraction(-1, 2)},
        implications=(("e1", "e2"),),
    )
    accepted, total = closure_solve(inst)
    assert accepted == frozenset({"e1", "e2"})
    assert total == Fraction(1, 2)


def test_closure_all_positive():
    inst = ClosureInstance(
        items=("e1", "e2"),
        values={"e1": Fraction(3), "e2": Fraction(1)},
        implications=(),
    )
    accepted, total = closure_solve(inst)
    assert accepted == frozenset({"e1", "e2"})
    assert total == Fraction(4)


def test_closure_tolerates_cycles_and_duplicates():
    inst = ClosureInstance(
        items=("a", "b"),
        values={"a": Fraction(2), "b": Fraction(-1)},
        implications=(("a", "b"), ("b", "a"), ("a", "b")),
    )
    accepted, total = closure_solve(inst)
    assert accepted == frozenset({"a", "b"})
    assert total == Fraction(1)


def _random_network(rng: random.Random) -> FlowNetwork:
    n = rng.randint(2, 7)
    edges = []
    for _ in range(rng.randint(1, 12)):
        frm, to = rng.sample(range(n), 2)
        edges.append((frm, to, Fraction(rng.randint(0, 6))))
    return FlowNetwork(num_nodes=n, source=0, sink=n - 1, edges=tuple(edges))


def test_max_flow_equals_min_cut_on_random_networks():
    rng = random.Random(7)
    for _ in range(200):
        net = _random_network(rng)
        value, cut = max_flow(net)
        assert 0 in cut and net.sink not in cut
        assert value == _cut_capacity(net, cut)


def _random_closure(rng: random.Random) -> ClosureInstance:
    n = rng.randint(1, 12)
    items = tuple(f"e{k}" for k in range(n))
    values = {
        it: Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for it in items
    }
    implications = tuple(
        tuple(rng.sample(items, 2))
        for _ in range(rng.randint(0, 2 * n) if n >= 2 else 0)
    )
    return ClosureInstance(items=items, values=values, implications=implications)


def test_closure_agrees_with_subset_enumeration():
    rng = random.Random(11)
    for trial in range(200):
        inst = _random_closure(rng)
        accepted, total = closure_solve(inst)
        # accepted must itself be implication-closed and have the right value
        for a, b in inst.implications:
            assert not (a in accepted and b not in accepted)
        assert total == sum((inst.values[it] for it in accepted), ZERO)
        _, best = closure_brute_force(inst.items, inst.values, inst.implications)
        assert total == best, f"trial {trial}"
        assert total >= ZERO
