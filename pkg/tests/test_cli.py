import json

import pytest

from grassvar.cli import (
    CliInputError,
    parse_polynomial,
    render_ideal,
    run_command,
)
from grassvar.fp import PrimeField
from grassvar.modules import module_to_dict, quotient_by_linear_forms
from grassvar.poly import PolyRing, buchberger_reduced, ideal

F2 = PrimeField(2)
F5 = PrimeField(5)


@pytest.fixture
def module_files(tmp_path):
    paths = {}
    specs = {
        "rx3": (F2, 3, [(1, 0, 0)]),
        "ry3": (F2, 3, [(0, 1, 0)]),
        "k2": (F2, 2, [(1, 0), (0, 1)]),
        "rx2": (F2, 2, [(1, 0)]),
    }
    for name, (field, c, forms) in specs.items():
        M = quotient_by_linear_forms(field, c, forms)
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(module_to_dict(M)))
        paths[name] = str(path)
    return paths


def _run(capsys, *argv):
    status = run_command(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


class TestParsePolynomial:
    def setup_method(self):
        self.ring = PolyRing(F5, ["a1", "a2", "a3"])

    def test_round_trip(self):
        for text in ["a1 + 2*a2", "a1*a2^2 + 4", "a3^3"]:
            poly = parse_polynomial(self.ring, text)
            assert str(poly) == text

    def test_precedence_and_parens(self):
        a1, a2, a3 = (self.ring.var(i) for i in range(3))
        assert parse_polynomial(self.ring, "a1 + a2*a3^2") == a1 + a2 * a3 * a3
        assert parse_polynomial(self.ring, "(a1 + a2)*a3") == (a1 + a2) * a3
        # chained exponents associate to the left: (a1^2)^3
        assert parse_polynomial(self.ring, "a1^2^3") == a1**6

    def test_unary_minus_and_constants(self):
        assert parse_polynomial(self.ring, "-a1 + 7") == (
            self.ring.const(4) * self.ring.var(0) + self.ring.const(2)
        )
        assert parse_polynomial(self.ring, "0").is_zero()

    def test_errors(self):
        with pytest.raises(CliInputError, match="unknown variable 'b1'"):
            parse_polynomial(self.ring, "b1 + 1")
        with pytest.raises(CliInputError, match="position"):
            parse_polynomial(self.ring, "a1 +")
        with pytest.raises(CliInputError, match="unexpected character"):
            parse_polynomial(self.ring, "a1 & a2")
        with pytest.raises(CliInputError, match="exponent"):
            parse_polynomial(self.ring, "a1^99999")


def test_render_ideal_marks_empty_variety():
    ring = PolyRing(F2, ["a1"])
    unit = buchberger_reduced(ideal(ring, [ring.one]))
    assert render_ideal(unit) == "ideal(1)  [empty variety]"
    assert render_ideal(ideal(ring, [])) == "ideal(0)"


def test_validate_ok(capsys, module_files):
    status, out, _ = _run(capsys, "validate", module_files["rx3"])
    assert status == 0
    assert out == "ok: p=2 c=3 dim=4\n"


def test_validate_reports_problems(capsys, tmp_path, module_files):
    data = json.loads(open(module_files["rx3"]).read())
    data["actions"][0][0][0] = 1
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    status, out, _ = _run(capsys, "validate", str(bad))
    assert status == 1
    assert "problem: X1^2 != 0" in out
    assert "problem: X1 and X2 do not commute" in out


def test_rank_ideal_text_and_json(capsys, module_files):
    status, out, _ = _run(capsys, "rank-ideal", module_files["rx3"])
    assert status == 0
    assert out == "ideal(a2^2, a2*a3, a3^2)\n"
    status, out, _ = _run(capsys, "rank-ideal", "--json", module_files["rx3"])
    assert status == 0
    payload = json.loads(out)
    assert payload == {
        "empty": False,
        "projectively_empty": False,
        "generators": ["a2^2", "a2*a3", "a3^2"],
        "variables": ["a1", "a2", "a3"],
    }


def test_rank_ideal_free_module_reports_emptiness(capsys, tmp_path):
    from grassvar.modules import regular_module

    path = tmp_path / "ke2.json"
    path.write_text(json.dumps(module_to_dict(regular_module(F2, 2))))
    status, out, _ = _run(capsys, "rank-ideal", str(path))
    assert status == 0
    assert out == "ideal(a1^2, a1*a2, a2^2)\nprojectively empty\n"


def test_pair_ideal(capsys, module_files):
    status, out, _ = _run(
        capsys, "pair-ideal", module_files["rx3"], module_files["ry3"]
    )
    assert status == 0
    # the two lines only meet at the origin
    assert out == "ideal(a1^2, a2^2, a1*a3, a2*a3, a3^2)\nprojectively empty\n"


def test_higher_ideal(capsys, module_files):
    status, out, _ = _run(
        capsys, "higher-ideal", "-d", "2", module_files["rx3"], module_files["rx3"]
    )
    assert status == 0
    assert out == "ideal(p_23^2)\ndim = 1\n"


def test_project_gamma(capsys):
    status, out, _ = _run(
        capsys, "project-gamma", "-p", "2", "-c", "3", "-d", "2",
        "-z", "a2", "-z", "a3",
    )
    assert status == 0
    assert out == "ideal(p_23)\ndim = 1\n"
    # semicolons inside one -z argument mean the same thing
    status, out2, _ = _run(
        capsys, "project-gamma", "-p", "2", "-c", "3", "-d", "2",
        "-z", "a2; a3",
    )
    assert status == 0
    assert out2 == out


def test_project_gamma_unit_input(capsys):
    status, out, _ = _run(
        capsys, "project-gamma", "-p", "2", "-c", "3", "-d", "1", "-z", "1"
    )
    assert status == 0
    assert out == "ideal(1)  [empty variety]\ndim = -1\n"


def test_betti_and_ext(capsys, module_files):
    status, out, _ = _run(capsys, "betti", "-n", "4", module_files["k2"])
    assert status == 0
    assert out == "1 2 3 4 5\n"
    status, out, _ = _run(
        capsys, "ext", "-n", "4", module_files["rx2"], module_files["k2"]
    )
    assert status == 0
    assert out == "1 1 1 1 1\n"


def test_oracle_single_subspace(capsys, module_files):
    status, out, _ = _run(
        capsys, "oracle", "-d", "1", "-q", "1,0,0",
        module_files["rx3"], module_files["rx3"],
    )
    assert status == 0
    assert out == (
        "(1 : 0 : 0)  geometric=yes homological=yes ideal=yes\n"
        "agree: yes\n"
    )
    status, out, _ = _run(
        capsys, "oracle", "-d", "1", "-q", "0,1,0",
        module_files["rx3"], module_files["rx3"],
    )
    assert status == 0
    assert out == (
        "(0 : 1 : 0)  geometric=no homological=no ideal=no\n"
        "agree: yes\n"
    )


def test_oracle_sweep(capsys, module_files):
    status, out, _ = _run(
        capsys, "oracle", "-d", "1", module_files["rx3"], module_files["rx3"]
    )
    assert status == 0
    lines = out.splitlines()
    assert len(lines) == 8
    assert lines[-1] == "agree: yes"
    assert sum("geometric=yes" in line for line in lines) == 1


def test_oracle_json(capsys, module_files):
    status, out, _ = _run(
        capsys, "oracle", "--json", "-d", "1", "-q", "1,0,0",
        module_files["rx3"], module_files["rx3"],
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["agree"] is True
    assert payload["rows"] == [
        {
            "subspace": [[1, 0, 0]],
            "pluecker": [1, 0, 0],
            "geometric": True,
            "homological": True,
            "ideal": True,
        }
    ]


def test_embed(capsys):
    status, out, _ = _run(
        capsys, "embed", "-p", "2", "-c", "4", "-d", "2",
        "1,0,0,1;0,1,0,1",
    )
    assert status == 0
    assert out == "(1 : 0 : 1 : 0 : 1 : 0)\n"


def test_missing_file_is_input_error(capsys, tmp_path):
    status, out, err = _run(capsys, "rank-ideal", str(tmp_path / "nope.json"))
    assert status == 1
    assert err.startswith("error: cannot read")


def test_mismatched_pair_is_input_error(capsys, module_files):
    status, _, err = _run(
        capsys, "pair-ideal", module_files["rx3"], module_files["rx2"]
    )
    assert status == 1
    assert err == "error: modules must share the same p and c\n"


def test_bad_subspace_shape(capsys):
    status, _, err = _run(
        capsys, "embed", "-p", "2", "-c", "3", "-d", "2", "1,0,0"
    )
    assert status == 1
    assert "subspace must have 2 rows" in err


def test_bad_polynomial_reports_position(capsys):
    status, _, err = _run(
        capsys, "project-gamma", "-p", "2", "-c", "3", "-d", "2", "-z", "a2 +"
    )
    assert status == 1
    assert "position 4" in err
    status, _, err = _run(
        capsys, "project-gamma", "-p", "2", "-c", "3", "-d", "2", "-z", "a9"
    )
    assert status == 1
    assert "expected one of a1, a2, a3" in err


def test_budget_exhaustion_is_resource_error(capsys):
    status, _, err = _run(
        capsys, "project-gamma", "-p", "2", "-c", "4", "-d", "2",
        "-z", "a2", "--budget", "5",
    )
    assert status == 2
    assert err.startswith("resource limit:")


def test_negative_bound_rejected(capsys, module_files):
    status, _, err = _run(capsys, "betti", "-n", "-1", module_files["k2"])
    assert status == 1
    assert "nonnegative" in err


def test_invalid_json_module(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    status, _, err = _run(capsys, "rank-ideal", str(path))
    assert status == 1
    assert err.startswith("error:")


def test_rendered_generators_reparse_to_themselves(module_files):
    # every ideal the tools print can be read back in verbatim
    from grassvar.modules import module_from_dict
    from grassvar.rankvariety import (
        coordinate_ring,
        pair_variety_ideal,
        rank_variety_ideal,
    )

    M = module_from_dict(json.loads(open(module_files["rx3"]).read()))
    N = module_from_dict(json.loads(open(module_files["ry3"]).read()))
    for I in (rank_variety_ideal(M).gb, pair_variety_ideal(M, N).gb):
        ring = I.ring
        for g in I.gens:
            assert str(parse_polynomial(ring, str(g))) == str(g)


def test_module_file_round_trip_is_byte_identical(module_files):
    from grassvar.modules import module_from_dict

    for path in module_files.values():
        canonical = json.dumps(
            module_to_dict(module_from_dict(json.loads(open(path).read()))),
            sort_keys=True,
        )
        again = json.dumps(
            module_to_dict(module_from_dict(json.loads(canonical))),
            sort_keys=True,
        )
        assert again == canonical
