import pytest

import tempra
from tempra import Rational as R


def test_rational_is_exact():
    assert R(3, 5) == R("0.6")
    assert R(1, 3) + R(1, 6) == R(1, 2)
    assert str(R(7, 20)) == "7/20"
    assert float(R(1, 4)) == 0.25
    with pytest.raises(ValueError):
        R("1/0")


def test_formula_round_trip():
    f = tempra.parse_formula(
        "P[t0](OCC(t1,t2,win-lottery)) = 0.0001 & OCC(t1,t2,win-lottery)"
    )
    assert tempra.parse_formula(str(f)) == f
    assert f.kind == tempra.FormulaKind.AND
    assert tempra.time_symbols(f) == {"t0", "t1", "t2"}
    core = tempra.desugar(tempra.parse_formula("POSS[t](HOLDS(t,t,a))"))
    assert tempra.is_core(core)


def test_parse_errors_carry_positions():
    with pytest.raises(tempra.ParseError, match="1:3"):
        tempra.parse_formula("P[")


def test_coin_fixture_probabilities():
    fx = tempra.fixture("coin")
    m = tempra.parse_model(fx.model_json)
    assert m.worlds == ["fair-heads", "fair-tails", "bias-heads", "bias-tails"]
    heads = tempra.parse_formula("OCC(t1,t2,toss-heads)")
    assert tempra.probability(m, m.denote("t0"), "fair-heads", heads) == R(3, 5)
    assert tempra.expected_future_probability(
        m, m.denote("t0"), m.denote("t1"), "fair-heads", heads
    ) == R(3, 5)
    assert tempra.check_constraints(m).clean()
    assert all(ok for _, ok, _ in tempra.run_fixture_checks(fx, m))


def test_model_serialization_round_trips():
    m = tempra.parse_model(tempra.fixture("carry").model_json)
    again = tempra.parse_model(tempra.model_to_json(m))
    assert tempra.model_to_json(again) == tempra.model_to_json(m)
    assert set(tempra.accessible(m, R(1), "w5")) == {"w5", "w6"}


def test_broken_model_is_rejected_with_the_audit_report():
    bad = tempra.fixture("coin").model_json.replace('"fair-heads": "1/4"',
                                                    '"fair-heads": "1/3"')
    assert bad != tempra.fixture("coin").model_json
    with pytest.raises(tempra.BuildError, match="C5"):
        tempra.parse_model(bad)


def test_schema_sweep_and_causality():
    m = tempra.parse_model(tempra.fixture("coin").model_json)
    for inst in tempra.sample_instances(m, tempra.Schema.MILLER, seed=1):
        assert tempra.check_schema(m, inst) is None
    r = tempra.analyze_cause(
        m,
        "bias-heads",
        tempra.EventOccurrence("choose-biased", R(0), R(1)),
        tempra.EventOccurrence("toss-heads", R(1), R(2)),
    )
    assert r.prima_facie and r.actual
    assert r.p_joint == R(7, 20)


def test_generation_and_bounded_search():
    p = tempra.GenParams()
    p.seed = 4
    p.max_worlds = 4
    m = tempra.generate_model(p)
    assert tempra.check_constraints(m).clean()
    f = tempra.sample_formula(m, seed=9, depth=2)
    assert tempra.parse_formula(str(f)) == f

    sp = tempra.SatParams()
    sp.budget = 20000
    goal = tempra.parse_formula("P[t1](OCC(t1,t2,board)) = 1/3")
    res = tempra.bounded_sat(goal, sp)
    assert res.found
    assert tempra.eval_formula(res.model, res.world, goal)


def test_unknown_world_raises():
    m = tempra.parse_model(tempra.fixture("coin").model_json)
    with pytest.raises(tempra.EvalError):
        tempra.eval_formula(m, "nowhere", tempra.parse_formula("t0 < t1"))
