import numpy as np
import pytest

from diffseq.coloring import (
    BeattyColoring,
    ColoringFormatError,
    ExplicitColoring,
    MemoryCapError,
    PeriodicColoring,
    coloring_from_description,
    read_coloring_file,
    stretch_block,
    thue_morse_block,
    write_coloring_file,
)
from diffseq.exactreal import ExactRational


@pytest.mark.parametrize("t, block", [(0, "1"), (1, "10"), (2, "1001"), (3, "10010110")])
def test_thue_morse_block(t, block):
    assert thue_morse_block(t) == block


def test_thue_morse_doubling():
    for t in range(1, 12):
        prev = thue_morse_block(t - 1)
        comp = prev.translate(str.maketrans("01", "10"))
        assert thue_morse_block(t) == prev + comp


@pytest.mark.parametrize("t, u, block", [
    (3, 1, "1100001100111100"),
    (2, 2, "1111000000001111"),
    (2, 0, "1001"),
])
def test_stretch_block(t, u, block):
    assert stretch_block(t, u) == block


def test_memory_cap():
    with pytest.raises(MemoryCapError):
        thue_morse_block(12, cap=2**11)
    with pytest.raises(MemoryCapError):
        stretch_block(6, 6, cap=2**11)
    assert len(stretch_block(5, 6, cap=2**11)) == 2**11


def test_color_of_worked_values():
    p2 = PeriodicColoring.thue_morse(2)
    assert p2.color_of(5) == 1
    assert p2.color_of(2) == 0
    assert [p2.color_of(n) for n in (1, 4, 5, 8)] == [1, 1, 1, 1]
    assert [p2.color_of(n) for n in (2, 3, 6, 7)] == [0, 0, 0, 0]
    p22 = PeriodicColoring.thue_morse(2, 2)
    assert p22.color_of(5) == 0 and p22.color_of(28) == 0


@pytest.mark.parametrize("t", range(1, 11))
def test_complement_property(t):
    c = PeriodicColoring.thue_morse(t)
    half = 2 ** (t - 1)
    for x in range(1, 2**t + 1):
        assert c.color_of(x) != c.color_of(x + half)


@pytest.mark.parametrize("t", range(1, 9))
@pytest.mark.parametrize("u", range(0, 4))
def test_stretch_consistency(t, u):
    ptu = PeriodicColoring.thue_morse(t, u)
    pt = PeriodicColoring.thue_morse(t)
    bits = ptu.materialize(2 * ptu.period)
    for n in range(1, 2 * ptu.period + 1):
        assert bits[n - 1] == pt.color_of(-(-n // 2**u))


def test_periodicity_and_materialize():
    c = PeriodicColoring.from_string("10110")
    bits = c.materialize(23)
    assert len(bits) == 23
    for n in range(1, 24):
        assert c.color_of(n) == c.color_of(n + c.period) == bits[n - 1]


def test_beatty_rational():
    c = BeattyColoring(ExactRational("5/6"))
    assert [c.color_of(n) for n in range(1, 7)] == [(n * 5 // 6) % 2 for n in range(1, 7)]
    assert c.materialize(50).tolist() == [(n * 5 // 6) % 2 for n in range(1, 51)]


def test_beatty_index_scale():
    c = BeattyColoring(ExactRational("3/7"), index_scale=3)
    bits = c.materialize(30)
    for n in range(1, 31):
        m = (n - 1) // 3 + 1
        assert bits[n - 1] == c.color_of(n) == (3 * m // 7) % 2


def test_explicit_bounds():
    c = ExplicitColoring.from_string("0110")
    assert c.color_of(4) == 0
    with pytest.raises(ValueError):
        c.color_of(5)
    with pytest.raises(ValueError):
        c.materialize(5)


def test_file_round_trip(tmp_path):
    f = tmp_path / "c.txt"
    write_coloring_file(f, PeriodicColoring.thue_morse(3, 1))
    assert f.read_text().splitlines() == ["# diffseq-coloring v1", "periodic 1100001100111100"]
    assert read_coloring_file(f) == PeriodicColoring.thue_morse(3, 1)

    write_coloring_file(f, BeattyColoring(ExactRational("2/5")), 12)
    back = read_coloring_file(f)
    assert isinstance(back, ExplicitColoring) and back.limit == 12
    assert back.materialize(12).tolist() == [(2 * n // 5) % 2 for n in range(1, 13)]


def test_file_errors(tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("periodic 1010\n")
    with pytest.raises(ColoringFormatError):
        read_coloring_file(f)
    f.write_text("# diffseq-coloring v1\nperiodic 10a0\n")
    with pytest.raises(ColoringFormatError):
        read_coloring_file(f)


def test_description_round_trip():
    for c in (PeriodicColoring.thue_morse(4), ExplicitColoring.from_string("0101"),
              BeattyColoring(ExactRational("7/9"), 2)):
        back = coloring_from_description(c.describe())
        assert np.array_equal(back.materialize(40 if c.limit is None else c.limit),
                              c.materialize(40 if c.limit is None else c.limit))
