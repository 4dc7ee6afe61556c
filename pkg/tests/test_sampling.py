from itersum.d2 import affine_dependency, difference_lattice_index
from itersum.d3 import analyze_lattice, compute_m_w, default_h_max
from itersum.geometry import OUTSIDE, PointSet, hull_membership
from itersum.sampling import SplitMix64, random_d2_instance, random_d3_instance


def test_splitmix_reference_outputs():
    rng = SplitMix64(0)
    assert rng.next() == 0xE220A8397B1DCDAF
    assert rng.next() == 0x6E789E6AA1B965F4
    rng = SplitMix64(1234567)
    assert [rng.next() for _ in range(2)] == [6457827717110365317, 3203168211198807973]


def test_randint_range_and_determinism():
    a, b = SplitMix64(99), SplitMix64(99)
    xs = [a.randint(-5, 5) for _ in range(500)]
    assert xs == [b.randint(-5, 5) for _ in range(500)]
    assert set(xs) == set(range(-5, 6))


def test_d2_instances_are_valid():
    rng = SplitMix64(3)
    for d in (1, 2, 3):
        for _ in range(10):
            inst = random_d2_instance(rng, d, 5, max_h=50)
            assert len(inst.base) == d + 2
            assert difference_lattice_index(inst.base) == 1
            assert all(abs(x) <= 5 for p in inst.base for x in p)
            assert affine_dependency(inst).r + d + 3 <= 50


def test_d3_instances_are_valid():
    rng = SplitMix64(5)
    for d in (1, 2):
        for _ in range(10):
            inst = random_d3_instance(rng, d, 5, max_h=40)
            inv = analyze_lattice(inst)
            assert inst.base.points[inst.origin_index] == (0,) * d
            simplex = PointSet.of(inst.vertices)
            assert hull_membership(inst.w, simplex) != OUTSIDE
            assert default_h_max(inst, inv, compute_m_w(inst, inv)) <= 40


def test_streams_repeat_for_equal_seeds():
    one = [random_d3_instance(SplitMix64(11), 2, 5).base for _ in range(1)]
    two = [random_d3_instance(SplitMix64(11), 2, 5).base for _ in range(1)]
    assert one == two
