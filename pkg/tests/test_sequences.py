import pytest

from owalinkbase.exceptions import InvalidSequence
from owalinkbase.sequences import CoefficientSequence, Tail, format_number, sequence


@pytest.mark.parametrize(
    "text, prefix, tail",
    [
        ("1,0.5,0.375;zero", (1.0, 0.5, 0.375), Tail.ZERO),
        ("1;repeat", (1.0,), Tail.REPEAT),
        ("1, 1/2, 7/75", (1.0, 0.5, 7 / 75), Tail.ZERO),
        ("1,2;REPEAT", (1.0, 2.0), Tail.REPEAT),
    ],
)
def test_parse(text, prefix, tail):
    c = CoefficientSequence.parse(text)
    assert c.prefix == prefix
    assert c.tail is tail


@pytest.mark.parametrize("text", ["", "0.5,1", "1,-0.5", "1,x", "1;forever", "1,inf", "1,1/0"])
def test_parse_rejects(text):
    with pytest.raises(InvalidSequence):
        CoefficientSequence.parse(text)


def test_tail_policies():
    zero = sequence([1, 0.5])
    repeat = sequence([1, 0.5], "repeat")
    assert [zero.coefficient(i) for i in range(1, 5)] == [1.0, 0.5, 0.0, 0.0]
    assert [repeat.coefficient(i) for i in range(1, 5)] == [1.0, 0.5, 0.5, 0.5]
    with pytest.raises(IndexError):
        zero.coefficient(0)


def test_partial_sums(eight_terms):
    p = eight_terms.partial_sums(10)
    assert p[0] == 0.0
    assert p[2] == 1.5
    assert p[5] == 2.53125
    assert p[8] == p[10] == 3.375
    assert eight_terms.total(3) == 1.875


def test_head_is_read_only(eight_terms):
    with pytest.raises(ValueError):
        eight_terms.head(4)[0] = 2.0


def test_long_heads():
    c = sequence([1, 0.5], "repeat")
    assert c.head(3).tolist() == [1.0, 0.5, 0.5]
    head = c.head(10000)
    assert len(head) == 10000
    assert head[-1] == 0.5
    assert c.total(10000) == 5000.5
    assert sequence([1, 0.5]).head(40).sum() == 1.5
    assert c.head(3).tolist() == [1.0, 0.5, 0.5]


def test_partial_sums_are_correctly_rounded():
    c = sequence([1, 0.1, 0.1, 0.1])
    assert c.partial_sums(4)[4] == 1.3
    assert c.partial_sums(4)[4] == c.total(4)


def test_support():
    assert sequence([1, 0.5, 0, 0]).support == 2
    assert sequence([1, 0.5], "repeat").support is None
    assert sequence([1, 0], "repeat").support == 1
    assert CoefficientSequence.complete().is_extreme
    assert not sequence([1, 1]).is_extreme
    assert CoefficientSequence.average().is_average
    assert CoefficientSequence.average().support is None


def test_presets():
    assert CoefficientSequence.ones(3).prefix == (1.0, 1.0, 1.0)
    assert CoefficientSequence.geometric(0.5, 3).prefix == (1.0, 0.5, 0.25)
    with pytest.raises(InvalidSequence):
        CoefficientSequence.ones(0)


def test_str():
    assert str(sequence([1, 0.5, 0.28125])) == "1,0.5,0.28125;zero"
    assert str(CoefficientSequence.parse(str(CoefficientSequence.average()))) == "1;repeat"


def test_format_number():
    assert format_number(2.0) == "2"
    assert format_number(0.1) == "0.1"
    assert format_number(-0.5) == "-0.5"
