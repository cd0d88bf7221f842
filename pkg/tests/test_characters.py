import math
import random
from fractions import Fraction

import pytest

from rootnum.characters import (
    MultiplicativeCharacter,
    VirtualCharacter,
    chi_alpha,
    parse_character,
    psi,
    tame_char,
    trivial_character,
)
from rootnum.cyclotomic import RootOfUnity, galois_apply
from rootnum.padic import make_field


def units_sample(fld, c, rng, count):
    pool = list(fld.unit_residues(c))
    return [rng.choice(pool) for _ in range(count)]


def test_psi_examples():
    k3 = make_field(3, 1, 6)
    assert psi(k3.one()) == RootOfUnity(1, 0)
    assert psi(k3.from_rational(Fraction(1, 9))) == RootOfUnity(9, 1)
    # nontrivial on p^-1 O_K
    assert psi(k3.from_rational(Fraction(1, 3))) == RootOfUnity(3, 1)


def test_psi_additive():
    k9 = make_field(3, 2, 6)
    rng = random.Random(21)
    for _ in range(40)    :
        x = k9.element((rng.randrange(3**6), rng.randrange(3**6))) / 9
        y = k9.element((rng.randrange(3**6), rng.randrange(3**6))) / 27
        assert psi(x + y) == psi(x) * psi(y)


def test_chi_alpha_triviality():
    k3 = make_field(3, 1, 6)
    assert chi_alpha(k3.from_rational(Fraction(1, 3))).is_trivial()
    k2 = make_field(2, 1, 8)
    assert chi_alpha(k2.from_rational(Fraction(1, 4))).is_trivial()
    chi = chi_alpha(k3.from_rational(Fraction(1, 27)))
    assert chi.conductor_exponent() == 3
    assert chi.order() == 9


def test_chi_alpha_kills_roots_of_unity_and_p():
    for (p, f) in [(3, 1), (5, 1), (3, 2)]:
        k = make_field(p, f, 7)
        chi = chi_alpha(k.from_rational(Fraction(1, p**2)))
        assert chi(k.from_int(p)) == RootOfUnity(1, 0)
        for r in list(k.residues())[:5]:
            if any(r):
                assert chi(k.teichmuller(r)) == RootOfUnity(1, 0)


def test_tame_char():
    k5 = make_field(5, 1, 6)
    assert tame_char(k5, 0).is_trivial()
    quad = tame_char(k5, 2)
    assert quad.order() == 2
    assert quad.conductor_exponent() == 1
    mixed = tame_char(k5, 1, RootOfUnity(6, 1))
    assert mixed.order() == math.lcm(4, 6)
    # tame characters kill 1-units
    assert quad(k5.from_int(6)) == RootOfUnity(1, 0)
    assert mixed(k5.from_int(1 + 5 * 3)) == RootOfUnity(6, 1) ** 0 * mixed(k5.one())


def test_eval_regression_log_character():
    # chi_{1/9}(4) over Q_3 evaluates through log(4) = 21 mod 27
    k3 = make_field(3, 1, 6)
    chi = chi_alpha(k3.from_rational(Fraction(1, 9)))
    assert chi(k3.from_int(4)) == RootOfUnity(3, 1)
    assert chi(k3.one()) == RootOfUnity(1, 0)


def test_eval_multiplicative():
    rng = random.Random(33)
    for (p, f) in [(3, 1), (5, 1), (3, 2), (2, 1)]:
        k = make_field(p, f, 8)
        alpha = k.element((1,) * f) / p**3
        chi = MultiplicativeCharacter(
            k,
            on_p=RootOfUnity(4, 1),
            tame_exp=1,
            alpha=alpha,
            sign_exp=1 if (p == 2 and f == 1) else 0,
        )
        for _ in range(30):
            x = rng.choice(list(k.unit_residues(3))) * k.from_int(p) ** rng.randrange(-2, 3)
            y = rng.choice(list(k.unit_residues(3)))
            assert chi(x * y) == chi(x) * chi(y)


def test_conductor_matches_direct_search():
    def direct_conductor(chi):
        fld = chi.field
        # smallest c >= 0 with chi trivial on 1 + p^c O_K (c = 0: all units)
        for c in range(0, fld.N - 1):
            ok = True
            for u in fld.unit_residues(fld.N - 1):
                if c > 0:
                    x = fld.one() + fld.from_int(fld.p**c) * u
                else:
                    x = u
                if chi(x) != RootOfUnity(1, 0):
                    ok = False
                    break
            if ok:
                return c
        return fld.N

    k3 = make_field(3, 1, 5)
    cases = [
        trivial_character(k3),
        tame_char(k3, 1),
        chi_alpha(k3.from_rational(Fraction(1, 9))),
        chi_alpha(k3.from_rational(Fraction(2, 27))),
        tame_char(k3, 1) * chi_alpha(k3.from_rational(Fraction(1, 9))),
    ]
    for chi in cases:
        assert chi.conductor_exponent() == direct_conductor(chi)
    k2 = make_field(2, 1, 6)
    cases2 = [
        chi_alpha(k2.from_rational(Fraction(1, 8))),
        chi_alpha(k2.from_rational(Fraction(1, 16))),
        MultiplicativeCharacter(k2, sign_exp=1),
        MultiplicativeCharacter(k2, sign_exp=1, alpha=k2.from_rational(Fraction(1, 8))),
    ]
    for chi in cases2:
        assert chi.conductor_exponent() == direct_conductor(chi)


def test_order_matches_direct_computation():
    k3 = make_field(3, 1, 6)
    samples = [k3.from_int(2), k3.from_int(4), k3.from_int(3), k3.from_int(5)]

    def direct_order(chi):
        for k in range(1, 200):
            if all((chi**k)(x) == RootOfUnity(1, 0) for x in samples) and (chi**k).is_trivial():
                return k
        raise AssertionError("order out of range")

    for chi in [
        chi_alpha(k3.from_rational(Fraction(1, 9))),
        chi_alpha(k3.from_rational(Fraction(1, 27))),
        tame_char(k3, 1, RootOfUnity(4, 1)),
    ]:
        assert chi.order() == direct_order(chi)
    # order of chi_alpha equals |2 alpha| / p with |x| = p^(-v(x))
    k9 = make_field(3, 2, 6)
    chi = chi_alpha(k9.element((1, 1)) / 27)
    assert chi.order() == 9
    k2 = make_field(2, 1, 8)
    assert chi_alpha(k2.from_rational(Fraction(1, 8))).order() == 2


def test_galois_twist_compatible_with_value_twist():
    rng = random.Random(41)
    k3 = make_field(3, 1, 7)
    chi = tame_char(k3, 1, RootOfUnity(8, 3)) * chi_alpha(k3.from_rational(Fraction(1, 27)))
    o = chi.order()
    for _ in range(25):
        k = rng.randrange(1, 3 * o)
        if math.gcd(k, o) != 1:
            continue
        tw = chi.galois_twist(k)
        x = rng.choice(list(k3.unit_residues(3))) * k3.from_int(3) ** rng.randrange(0, 3)
        assert tw(x) == chi(x) ** k
        assert tw.order() == o


def test_galois_twist_by_element():
    from rootnum.cyclotomic import GaloisElement

    k3 = make_field(3, 1, 7)
    chi = chi_alpha(k3.from_rational(Fraction(1, 27)))
    assert chi.galois_twist(GaloisElement(9, 1)) == chi
    assert chi.galois_twist(GaloisElement(9, 2)) == chi**2
    with pytest.raises(ValueError):
        chi.galois_twist(GaloisElement(6, 1))  # modulus does not contain the order
    with pytest.raises(ValueError):
        chi.galois_twist(3)


def test_adams_equals_twist_for_coprime_k():
    k3 = make_field(3, 1, 7)
    chi = chi_alpha(k3.from_rational(Fraction(1, 27))) * tame_char(k3, 1)
    for k in (2, 5, 7, 11):
        if math.gcd(k, chi.order()) == 1:
            assert chi.adams(k) == chi.galois_twist(k)
    assert chi.adams(1) == chi
    chi3 = chi_alpha(k3.from_rational(Fraction(1, 27))).adams(3)
    assert chi3.order() == 3


def test_virtual_ring():
    k3 = make_field(3, 1, 6)
    chi = chi_alpha(k3.from_rational(Fraction(1, 9)))
    chi2 = chi_alpha(k3.from_rational(Fraction(2, 9)))
    v = (1 - chi) * (1 - chi2)
    assert v.degree() == 0
    # chi * chi2 = chi_{3/9} is trivial, so it merges with the constant term
    assert v.det().is_trivial()
    comps = {c.key(): m for c, m in v.components()}
    assert comps[trivial_character(k3).key()] == 2
    assert comps[chi.key()] == -1
    one = VirtualCharacter.one(k3)
    assert (1 - chi) * one == (1 - chi)
    w = (1 - chi) * (1 - chi.inverse())
    assert w.det().is_trivial()
    assert w.degree() == 0
    assert (1 - chi) + (1 - chi) == 2 - VirtualCharacter.of(chi, 2)


def test_virtual_adams_termwise():
    k3 = make_field(3, 1, 6)
    chi = chi_alpha(k3.from_rational(Fraction(1, 27)))
    v = 1 - chi
    assert v.adams(2) == 1 - chi**2


def test_values_field():
    k3 = make_field(3, 1, 6)
    chi9 = chi_alpha(k3.from_rational(Fraction(1, 27)))
    assert chi9.values_field() == (9, 2)
    assert trivial_character(k3).values_field() == (1, 0)
    k2 = make_field(2, 1, 6)
    chi2 = chi_alpha(k2.from_rational(Fraction(1, 8)))
    assert chi2.values_field() == (2, 1)


def test_parse_character():
    k3 = make_field(3, 1, 6)
    chi = parse_character(k3, "alpha=1/9")
    assert chi.alpha is not None and chi.alpha.v == -2
    chi2 = parse_character(k3, "alpha=2/p^3;tame=1;onp=4:1")
    assert chi2.tame_exp == 1 and chi2.on_p == RootOfUnity(4, 1)
    assert chi2.conductor_exponent() == 3
    k9 = make_field(3, 2, 6)
    chi3 = parse_character(k9, "alpha=(1+2w)/27")
    assert chi3.alpha.v == -3
    assert tuple(chi3.alpha.unit)[:2] == (1, 2)
    with pytest.raises(ValueError):
        parse_character(k3, "alpha=1")
    with pytest.raises(ValueError):
        parse_character(k3, "frob=2")
