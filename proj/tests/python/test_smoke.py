import sympy as sp
import pytest

import qloop

q, u, a, v = sp.symbols("q u a v")


def to_sympy(scalar):
    def poly(terms):
        out = 0
        for coef, (qh, ue, ae, ve) in terms:
            out += sp.Rational(coef) * q ** sp.Rational(qh, 2) * u**ue * a**ae * v**ve
        return out

    return poly(scalar["num"]) / poly(scalar["den"])


def dense(m):
    out = sp.zeros(m["rows"], m["cols"])
    for r, c, s in m["entries"]:
        out[r, c] = to_sympy(s)
    return out


def test_listings():
    assert set(qloop.known_suites()) == {"relations", "rmatrix", "stable", "qchar", "twist", "negative"}
    assert {"rmat-kr", "rmat-minus", "stable-plus"} <= set(qloop.matrix_builders())
    assert {"kr", "prefund-plus", "prefund-minus"} <= set(qloop.qchar_builders())


def test_kr1_matches_six_vertex():
    R = dense(qloop.emit_matrix("rmat-kr", k=1))
    den = 1 - u * q**2
    want = sp.Matrix(
        [
            [1, 0, 0, 0],
            [0, (1 - q**2) * u / den, q * (1 - u) / den, 0],
            [0, q * (1 - u) / den, (1 - q**2) / den, 0],
            [0, 0, 0, 1],
        ]
    )
    assert sp.simplify(R - want) == sp.zeros(4, 4)


def test_g_map_trivial_case_is_identity():
    G = dense(qloop.emit_matrix("g-map", k=1, ell=1))
    assert G == sp.eye(G.rows)


def test_pole_scan():
    assert qloop.pole_scan("rmat-kr", k=1) == [-2]
    assert qloop.pole_scan("rmat-minus", trunc=4) == []


def test_qchar_sizes():
    # L- has a one-dimensional weight space at each depth
    s = qloop.emit_qchar("prefund-minus", depth=5)
    assert [t["depth"] for t in s["terms"]] == [5, 4, 3, 2, 1, 0]
    assert all(t["mult"] == 1 for t in s["terms"])
    kr = qloop.emit_qchar("kr", k=3, depth=10)
    assert sum(t["mult"] for t in kr["terms"]) == 4
    assert len(qloop.emit_qchar("kr", k=3, depth=0)["terms"]) == 1
    assert "a" in qloop.qchar_text("kr", k=1, depth=2)


def test_identities_and_controls():
    for name in ("wronskian", "qq_dual", "baxter_qt"):
        assert qloop.all_pass(qloop.check(name, 6))
    assert not qloop.all_pass(qloop.check("wronskian", 6, perturb=True))
    assert not qloop.all_pass(qloop.check("baxter_qt", 6, drop_term=True))
    assert qloop.all_pass(qloop.check("iq_kr", 3, depth=6))
    assert not qloop.all_pass(qloop.check("iq_kr", 2, depth=6, marker_mismatch=True))
    assert qloop.all_pass(qloop.check("twist_prefund", 6))
    assert qloop.all_pass(qloop.check("intertwining", 2))
    assert qloop.all_pass(qloop.check("relations", "prefund-plus", trunc=5))


def test_run_suites_report():
    rep = qloop.run_suites(trunc=6, depth=6, suites=["qchar", "twist"], jobs=2)
    assert rep and qloop.all_pass(rep)
    assert [r["check_id"] for r in rep] == sorted(r["check_id"] for r in rep)
    assert set(rep[0]) == {"check_id", "paper_anchor", "window", "status", "detail"}
    assert all(r["check_id"].split(":")[0] in ("qchar", "twist") for r in rep)


def test_run_suites_is_deterministic():
    kw = dict(trunc=4, suites=["rmatrix"], strategy="spec:2", seed=11)
    assert qloop.run_suites(**kw) == qloop.run_suites(**kw)


@pytest.mark.parametrize(
    "kw",
    [dict(trunc=2), dict(strategy="spec:x"), dict(suites=["bogus"]), dict(depth=-1), dict(jobs=0)],
)
def test_bad_config_raises(kw):
    with pytest.raises(qloop.ConfigError):
        qloop.run_suites(**kw)
    assert issubclass(qloop.ConfigError, ValueError)


def test_unknown_names():
    with pytest.raises(ValueError):
        qloop.check("nope")
    with pytest.raises(ValueError):
        qloop.check("relations", "nope")
    with pytest.raises(Exception):
        qloop.emit_matrix("nope")
