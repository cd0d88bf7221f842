import math
import random
from fractions import Fraction

import pytest

from rootnum.padic import (
    PrecisionError,
    UnramifiedField,
    hilbert_2adic_bruteforce,
    hilbert_qp,
    hilbert_tame_unram,
    make_field,
)


def test_make_field_f1():
    k = make_field(3, 1, 8)
    assert k.q == 3
    assert k.from_rational(Fraction(1, 9)).valuation() == -2
    k2 = make_field(2, 1, 10)
    assert (k2.from_int(5) * k2.from_int(7)).unit[0] == 35


def test_make_field_f2_modulus_divides_teichmuller_relation():
    k = make_field(3, 2, 6)
    w = k.omega()
    assert (w**8).eq_at_shared_precision(k.one())
    # irreducible mod 3: the residue of omega is not in F_3
    assert all((w**j - k.from_int(c)).is_zero() is False for j in (1,) for c in range(3))
    # deterministic rebuild
    k2 = make_field(3, 2, 6)
    assert k2.modulus_low == k.modulus_low


def test_arith_and_valuations():
    k = make_field(3, 1, 8)
    u = k.from_int(7)
    assert (k.from_int(9) * u).valuation() == 2
    assert (u * u.inv()).eq_at_shared_precision(k.one())
    assert k.from_rational(Fraction(1, 9)).valuation() == -2
    with pytest.raises(ZeroDivisionError):
        k.zero().inv()


def test_addition_tracks_cancellation():
    k = make_field(3, 1, 6)
    a = k.from_int(10)
    b = k.from_int(-1)
    s = a + b
    assert s.valuation() == 2
    assert s.unit[0] == 1
    # cancellation to zero at precision
    z = k.from_int(3**6 + 1) + k.from_int(-1)
    assert z.is_zero()
    assert z.abs_prec == 6


def test_teichmuller_five_adic():
    k = make_field(5, 1, 3)
    t = k.teichmuller(2)
    assert t.unit[0] == 57
    assert (t * t).unit[0] == 125 - 1
    assert (t**4).eq_at_shared_precision(k.one())
    assert k.teichmuller(1).eq_at_shared_precision(k.one())
    km = make_field(7, 1, 4)
    assert km.teichmuller(-1).unit[0] == 7**4 - 1
    with pytest.raises(ValueError):
        k.teichmuller(0)


def test_teichmuller_fixed_points_all_residues():
    for (p, f, N) in [(3, 1, 6), (5, 1, 5), (3, 2, 5), (2, 2, 6)]:
        k = make_field(p, f, N)
        for r in k.residues():
            if not any(r):
                continue
            t = k.teichmuller(r)
            assert (t ** (k.q - 1)).eq_at_shared_precision(k.one())
            assert t.residue() == r


def test_frobenius():
    k = make_field(3, 2, 6)
    w = k.omega()
    assert w.frobenius().eq_at_shared_precision(w**3)
    assert w.frobenius().frobenius().eq_at_shared_precision(w)
    assert k.from_int(7).frobenius().eq_at_shared_precision(k.from_int(7))
    k1 = make_field(5, 1, 4)
    x = k1.from_int(13)
    assert x.frobenius().eq_at_shared_precision(x)


def test_frobenius_is_ring_hom():
    k = make_field(3, 2, 5)
    rng = random.Random(3)
    for _ in range(50):
        a = k.element((rng.randrange(3**5), rng.randrange(3**5)))
        b = k.element((rng.randrange(3**5), rng.randrange(3**5)))
        assert (a * b).frobenius().eq_at_shared_precision(a.frobenius() * b.frobenius())
        assert (a + b).frobenius().eq_at_shared_precision(a.frobenius() + b.frobenius())


def test_trace():
    k = make_field(3, 2, 6)
    assert k.trace(k.one()).eq_at_shared_precision(k.from_int(2))
    a = k.from_int(5)
    assert k.trace(a).eq_at_shared_precision(k.from_int(10))
    w = k.omega()
    tr = k.trace(w)
    expected = w + w**3
    assert tr.eq_at_shared_precision(expected)
    assert not any(tr.unit[1:])


def test_trace_invariant_under_frobenius():
    k = make_field(3, 2, 6)
    rng = random.Random(8)
    for _ in range(30):
        x = k.element((rng.randrange(3**6), rng.randrange(3**6)))
        assert k.trace(x.frobenius()).eq_at_shared_precision(k.trace(x))


def test_iwasawa_log_values():
    k = make_field(3, 1, 3)
    assert k.iwasawa_log(k.one()).is_zero()
    assert k.iwasawa_log(k.from_int(3)).is_zero()
    lg = k.iwasawa_log(k.from_int(4))
    # independent series: 3 - 9/2 + 27/3 mod 27, with 1/2 = 14
    expected = (3 - 9 * 14 + 9) % 27
    assert lg.v == 1 and (lg.unit[0] * 3) % 27 == expected % 27


def test_iwasawa_log_kills_teichmuller():
    for (p, f) in [(3, 1), (5, 1), (3, 2), (2, 1)]:
        k = make_field(p, f, 6)
        for r in list(k.residues())[:6]:
            if not any(r):
                continue
            assert k.iwasawa_log(k.teichmuller(r)).is_zero()
    k2 = make_field(2, 1, 8)
    assert k2.iwasawa_log(k2.from_int(-1)).is_zero()


def test_iwasawa_log_additive():
    rng = random.Random(5)
    for (p, f, N) in [(3, 1, 8), (5, 1, 6), (3, 2, 5), (2, 1, 10)]:
        k = make_field(p, f, N)
        units = [u for u in k.unit_residues(min(3, N))]
        for _ in range(40):
            x = rng.choice(units)
            y = rng.choice(units)
            lx, ly, lxy = k.iwasawa_log(x), k.iwasawa_log(y), k.iwasawa_log(x * y)
            assert (lx + ly).eq_at_shared_precision(lxy)


def test_iwasawa_log_valuation_matches_one_unit_depth():
    # for odd p and x in 1 + p^j O_K (j >= 1): v(log x) = v(x - 1)
    for p in (3, 5):
        k = make_field(p, 1, 8)
        for j in (1, 2, 3):
            for a in (1, 2):
                x = k.one() + k.from_int(a * p**j)
                assert k.iwasawa_log(x).valuation() == j


def test_iwasawa_log_image_scale():
    # log K^* = 2p O_K given odd p or f = 1
    for (p, f) in [(3, 1), (5, 1), (3, 2), (2, 1)]:
        k = make_field(p, f, 8)
        target = 1 if p != 2 else 2
        vals = set()
        for u in k.unit_residues(2):
            lg = k.iwasawa_log(u)
            if not lg.is_zero():
                assert lg.valuation() >= target
                vals.add(lg.valuation())
        assert target in vals


def test_unit_residues_counts():
    k = make_field(3, 1, 8)
    assert [u.unit[0] for u in k.unit_residues(1)] == [1, 2]
    assert len(list(k.unit_residues(2))) == 6
    k2 = make_field(3, 2, 4)
    assert len(list(k2.unit_residues(2))) == 72
    with pytest.raises(PrecisionError):
        list(k2.unit_residues(5))


def test_hilbert_qp_values():
    assert hilbert_qp(2, -1, 2) == 1
    assert hilbert_qp(-1, -1, 2) == -1
    assert hilbert_qp(5, 2, 5) == -1
    # independent check for (5, 2)_5: 2 is not a square mod 5
    assert 2 not in {x * x % 5 for x in range(1, 5)}
    assert hilbert_qp(3, 3, 3) == hilbert_qp(3, -1, 3)


def test_hilbert_qp_bilinear_symmetric():
    rng = random.Random(9)
    pool = [-6, -5, -3, -2, -1, 2, 3, 5, 6, 7, 10, 15]
    for p in (2, 3, 5, 7):
        for _ in range(60):
            a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
            assert hilbert_qp(a, b, p) == hilbert_qp(b, a, p)
            assert hilbert_qp(a * b, c, p) == hilbert_qp(a, c, p) * hilbert_qp(b, c, p)
            assert hilbert_qp(a, -a, p) == 1


def test_hilbert_tame_unram():
    k = make_field(3, 1, 6)
    u, v = k.from_int(2), k.from_int(5)
    assert hilbert_tame_unram(u, v) == 1
    p_elt = k.from_int(3)
    # q = 3 = 3 mod 4: -1 is not a square
    assert hilbert_tame_unram(k.from_int(-1), p_elt) == -1
    assert hilbert_tame_unram(k.from_int(-1), p_elt * p_elt) == 1
    k9 = make_field(3, 2, 6)
    # q = 9 = 1 mod 4: -1 becomes a square
    assert hilbert_tame_unram(k9.from_int(-1), k9.from_int(3)) == 1
    # agreement with the rational-symbol formula over Q_p
    for p in (3, 5, 7):
        kp = make_field(p, 1, 6)
        for a in (-1, 2, 3, p, -p, 2 * p):
            for b in (-1, 2, p, 5):
                assert hilbert_tame_unram(kp.from_rational(a), kp.from_rational(b)) == hilbert_qp(a, b, p)


def test_hilbert_2adic_bruteforce():
    k = make_field(2, 1, 8)
    five = k.from_int(5)
    for x in (1, 3, 5, 7, -1, 9, 15):
        assert hilbert_2adic_bruteforce(five, k.from_int(x)) == 1
    assert hilbert_2adic_bruteforce(five, k.from_int(2)) == -1
    assert hilbert_2adic_bruteforce(k.from_int(5), k.one()) == 1
    assert hilbert_2adic_bruteforce(k.from_int(-1), k.from_int(-1)) == -1
    with pytest.raises(ValueError):
        hilbert_2adic_bruteforce(k.from_int(2), k.one())


def test_hilbert_2adic_matches_formula():
    k = make_field(2, 1, 8)
    units = [3, 5, 7, 9, 11, 13, 15, -1, -3]
    xs = [1, 2, 3, 5, 6, 7, -1, -2, 10, 14]
    for u in units:
        ue = k.from_int(u)
        if ue.residue() != (1,):
            continue
        for x in xs:
            assert hilbert_2adic_bruteforce(ue, k.from_rational(x)) == hilbert_qp(u, x, 2)


def test_precision_guard():
    k = make_field(3, 1, 4)
    with pytest.raises(PrecisionError):
        k.element((1,), prec=0)
