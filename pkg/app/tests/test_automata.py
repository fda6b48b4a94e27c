from fractions import Fraction

import pytest

from app.config import settings
from app.exceptions import (
    BaseMismatchError,
    DigitOutOfRangeError,
    EnumerationBoundError,
    InvalidBaseError,
    MulticubeError,
    NotRepresentableError,
)
from app.models.automata import MulRule, RationalMultiplier, TraceQuery
from app.models.digits import DigitConfig
from app.services.automata_service import (
    inverse_step,
    local_rule,
    mul_alpha,
    prime_steps,
    run,
    shift_left,
    step,
    trace_window,
    trace_words,
)
from app.services.exact_arith import config_of_real, real_of_config
from app.tests.conftest import random_config

CONFIGS_PER_RULE = 50


def divisor_rules():
    for base in range(2, 37):
        for p in range(1, base + 1):
            if base % p == 0:
                yield MulRule(p, base)


class TestMulRule:
    def test_quotient(self):
        """Test q = N / p."""
        assert MulRule(2, 10).q == 5

    def test_not_a_divisor(self):
        """Test that p must divide N."""
        with pytest.raises(InvalidBaseError):
            MulRule(3, 10)

    def test_multiplier_must_be_positive(self):
        """Test that a zero multiplier is rejected."""
        with pytest.raises(MulticubeError):
            RationalMultiplier(Fraction(0), 10)


class TestLocalRule:
    def test_doubling(self):
        """Test mul_{2,10}(7, 3)."""
        assert local_rule(MulRule(2, 10), 7, 3) == 4

    def test_zero(self):
        """Test that zero is quiescent."""
        assert all(local_rule(r, 0, 0) == 0 for r in divisor_rules())

    def test_tripling_in_base_six(self):
        """Test mul_{3,6}(4, 5)."""
        assert local_rule(MulRule(3, 6), 4, 5) == 2

    def test_digit_out_of_range(self):
        """Test that digits must be below N."""
        with pytest.raises(DigitOutOfRangeError):
            local_rule(MulRule(2, 10), 10, 0)


class TestStep:
    def test_doubling_five(self):
        """Test that 5 doubles to 10."""
        x = step(MulRule(2, 10), config_of_real(Fraction(5), 10))
        assert x == config_of_real(Fraction(10), 10)
        assert (x.start, x.digits) == (-1, (1,))

    def test_zero(self):
        """Test that the zero config is fixed."""
        assert step(MulRule(2, 10), DigitConfig.zero(10)).is_zero

    def test_tripling_one(self):
        """Test that 1 triples to 3 in base 6."""
        assert step(MulRule(3, 6), config_of_real(Fraction(1), 6)) == config_of_real(Fraction(3), 6)

    def test_periodic_tail_keeps_period(self):
        """Test that a periodic tail maps to a tail of the same period."""
        x = config_of_real(Fraction(1, 7), 10)
        y = step(MulRule(2, 10), x)
        assert len(y.tail) == len(x.tail)
        assert y == config_of_real(Fraction(2, 7), 10)

    def test_base_mismatch(self):
        """Test that rule and config must share the base."""
        with pytest.raises(BaseMismatchError):
            step(MulRule(2, 10), DigitConfig.zero(6))

    def test_agrees_with_local_rule(self, rng):
        """Test that every digit of step(x) is the local rule on x[i], x[i+1]."""
        for rule in divisor_rules():
            for _ in range(10):
                x = random_config(rng, rule.base)
                y = step(rule, x)
                for i in range(x.start - 2, x.tail_start + 4):
                    assert y.digit_at(i) == local_rule(rule, x.digit_at(i), x.digit_at(i + 1))


class TestInverseStep:
    def test_halving_one(self):
        """Test that halving 1 gives 5 at index 1."""
        x = inverse_step(MulRule(2, 10), config_of_real(Fraction(1), 10))
        assert x == config_of_real(Fraction(1, 2), 10)
        assert x.digit_at(1) == 5

    def test_zero(self):
        """Test that the zero config is fixed."""
        assert inverse_step(MulRule(3, 6), DigitConfig.zero(6)).is_zero


class TestAutomatonSemantics:
    def test_step_multiplies_value(self, rng):
        """Test real(step(x)) = p * real(x) for every rule up to base 36."""
        for rule in divisor_rules():
            for _ in range(CONFIGS_PER_RULE):
                x = random_config(rng, rule.base)
                assert real_of_config(step(rule, x)) == rule.p * real_of_config(x)

    def test_complementary_rules_shift(self, rng):
        """Test that Mul_p after Mul_q is the left shift when pq = N."""
        for rule in divisor_rules():
            other = MulRule(rule.q, rule.base)
            for _ in range(CONFIGS_PER_RULE):
                x = random_config(rng, rule.base)
                assert step(rule, step(other, x)) == shift_left(x)

    def test_inverse_round_trip(self, rng):
        """Test that inverse_step undoes step on both sides."""
        for rule in divisor_rules():
            for _ in range(CONFIGS_PER_RULE):
                x = random_config(rng, rule.base)
                assert step(rule, inverse_step(rule, x)) == x
                assert inverse_step(rule, step(rule, x)) == x

    def test_rules_commute(self, rng):
        """Test that two multiplication rules of one base commute."""
        for rule in divisor_rules():
            divisors = [p for p in range(1, rule.base + 1) if rule.base % p == 0]
            for _ in range(CONFIGS_PER_RULE):
                other = MulRule(rng.choice(divisors), rule.base)
                x = random_config(rng, rule.base)
                assert step(rule, step(other, x)) == step(other, step(rule, x))


class TestMulAlpha:
    def test_identity(self, rng):
        """Test that alpha = 1 changes nothing."""
        for _ in range(20):
            x = random_config(rng, 10)
            assert mul_alpha(RationalMultiplier(Fraction(1), 10), x) == x

    def test_three_halves(self):
        """Test 3/2 * 2 = 3 in base 6."""
        m = RationalMultiplier(Fraction(3, 2), 6)
        assert mul_alpha(m, config_of_real(Fraction(2), 6)) == config_of_real(Fraction(3), 6)

    def test_five_in_base_ten(self):
        """Test 5 * 3 = 15 in base 10."""
        m = RationalMultiplier(Fraction(5), 10)
        assert mul_alpha(m, config_of_real(Fraction(3), 10)) == config_of_real(Fraction(15), 10)

    def test_order_independent(self, rng):
        """Test that numerator-first and denominator-first agree."""
        for _ in range(200):
            base = rng.choice([6, 10, 12, 30])
            primes = [p for p in (2, 3, 5) if base % p == 0]
            alpha = Fraction(rng.choice(primes) ** rng.randint(0, 2), rng.choice(primes) ** rng.randint(0, 2))
            m = RationalMultiplier(alpha, base)
            x = random_config(rng, base)
            y = mul_alpha(m, x)
            assert y == mul_alpha(m, x, numerator_first=False)
            assert real_of_config(y) == alpha * real_of_config(x)

    def test_not_representable(self):
        """Test that a prime outside the base is refused."""
        with pytest.raises(NotRepresentableError):
            prime_steps(RationalMultiplier(Fraction(3), 10))

    def test_prime_steps(self):
        """Test the prime decomposition of 4/5 in base 10."""
        forward, backward = prime_steps(RationalMultiplier(Fraction(4, 5), 10))
        assert forward == [MulRule(2, 10), MulRule(2, 10)]
        assert backward == [MulRule(5, 10)]


class TestRun:
    def test_powers_of_three(self):
        """Test 1, 3, 9, 27 in base 6."""
        rows = run(RationalMultiplier(Fraction(3), 6), config_of_real(Fraction(1), 6), 3)
        assert [real_of_config(x) for x in rows] == [1, 3, 9, 27]

    def test_identity_rule(self):
        """Test that the identity rule gives constant rows."""
        x = config_of_real(Fraction(22, 7), 10)
        assert run(RationalMultiplier(Fraction(1), 10), x, 4) == [x] * 5

    def test_doubling_five(self):
        """Test 5, 10, 20, 40 in base 10."""
        rows = run(RationalMultiplier(Fraction(2), 10), config_of_real(Fraction(5), 10), 3)
        assert [real_of_config(x) for x in rows] == [5, 10, 20, 40]


class TestTraceWords:
    def test_doubling_successors(self):
        """Test the 20 width-1 traces of length 2 of Mul_{2,10}."""
        words = trace_words(TraceQuery(RationalMultiplier(Fraction(2), 10), width=1, horizon=1))
        assert len(words) == 20
        for a in range(10):
            successors = {word[1][0] for word in words if word[0][0] == a}
            assert successors == {2 * (a % 5), 2 * (a % 5) + 1}

    def test_identity_rule(self):
        """Test that the identity rule only has constant traces."""
        words = trace_words(TraceQuery(RationalMultiplier(Fraction(1), 4), width=2, horizon=3))
        assert len(words) == 16
        assert all(len(set(word)) == 1 for word in words)

    def test_zero_horizon(self):
        """Test that horizon 0 lists single frames."""
        words = trace_words(TraceQuery(RationalMultiplier(Fraction(3), 6), width=1, horizon=0))
        assert words == [((a,),) for a in range(6)]

    def test_words_are_real_orbits(self, rng):
        """Test that observed orbits of random configs appear among the words."""
        query = TraceQuery(RationalMultiplier(Fraction(3, 2), 6), width=2, horizon=2)
        words = set(trace_words(query))
        for _ in range(50):
            rows = run(query.multiplier, random_config(rng, 6), query.horizon)
            assert tuple(x.window(-1, 0) for x in rows) in words

    def test_halving_window(self):
        """Test that inverse steps widen the window to the left."""
        query = TraceQuery(RationalMultiplier(Fraction(1, 2), 10), width=1, horizon=1)
        assert trace_window(query) == (-1, 0)
        assert len(trace_words(query)) == 20

    def test_halving_words_follow_local_rule(self):
        """Test that a halving frame is Mul_5 read one digit to the left."""
        query = TraceQuery(RationalMultiplier(Fraction(1, 2), 10), width=1, horizon=1)
        expected = {
            ((b,), (local_rule(MulRule(5, 10), a, b),))
            for a in range(10)
            for b in range(10)
        }
        assert set(trace_words(query)) == expected

    def test_enumeration_bound(self, monkeypatch):
        """Test that oversized enumerations are refused."""
        monkeypatch.setattr(settings, "TRACE_MAX_WINDOWS", 1000)
        with pytest.raises(EnumerationBoundError) as exc:
            trace_words(TraceQuery(RationalMultiplier(Fraction(2), 10), width=3, horizon=1))
        assert exc.value.estimate == 10 ** 4

    def test_invalid_query(self):
        """Test that the width must be positive."""
        with pytest.raises(MulticubeError):
            TraceQuery(RationalMultiplier(Fraction(2), 10), width=0, horizon=1)
