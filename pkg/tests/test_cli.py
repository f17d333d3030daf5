"""The command-line surface: outputs, exit codes, and error documents."""

import json
import subprocess
import sys

import pytest

from ncindep import AlgebraSignature, FiniteProbSpace, RandomVariable
from ncindep.classical import space_to_json, variable_to_json
from ncindep.cli import main
from ncindep.moments import dump_state, load_state
from ncindep.rational import as_rational
from conftest import total_state

P1 = AlgebraSignature("A1", False, (("a", 0),))
P2 = AlgebraSignature("A2", False, (("b", 0),))
G1 = AlgebraSignature("A1", True, (("a", 1), ("b", 0)))
G2 = AlgebraSignature("A2", True, (("x", 1), ("y", 0)))


@pytest.fixture
def pair_files(tmp_path):
    s1 = tmp_path / "s1.json"
    s2 = tmp_path / "s2.json"
    dump_state(total_state(P1, 2, {"a": "1/2"}), s1)
    dump_state(total_state(P2, 2, {"b": "1/3"}), s2)
    return str(s1), str(s2)


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def error_doc(err):
    assert err.count("\n") == 1  # a single line
    doc = json.loads(err)
    assert set(doc) == {"code", "message", "context"}
    assert json.dumps(doc, sort_keys=True) + "\n" == err
    return doc


# ---------------------------------------------------------------------------
# eval


def test_eval_boolean_three_letter_word(capsys, pair_files):
    s1, s2 = pair_files
    code, out, err = run(
        capsys, "eval", "--product", "boolean", "--state", s1, s2, "--expr", "A1.a A2.b A1.a"
    )
    assert code == 0 and err == ""
    exact, decimal = out.splitlines()
    assert exact == "1/12"
    assert decimal.startswith("~ 0.083333333333")


def test_eval_degenerate_two_block_word(capsys, pair_files):
    s1, s2 = pair_files
    code, out, _ = run(
        capsys, "eval", "--product", "degenerate", "--state", s1, s2, "--expr", "A1.a A2.b"
    )
    assert code == 0
    assert out.splitlines()[0] == "0"


def test_eval_accepts_polynomials(capsys, pair_files):
    s1, s2 = pair_files
    code, out, _ = run(
        capsys, "eval", "--product", "boolean", "--state", s1, s2,
        "--expr", "6 * A1.a A2.b A1.a + 1/2 * A1.a",
    )
    assert code == 0
    assert out.splitlines()[0] == "3/4"  # 6/12 + 1/4


def test_eval_fermi_signed_word(capsys, tmp_path):
    s1 = tmp_path / "g1.json"
    s2 = tmp_path / "g2.json"
    dump_state(total_state(G1, 2, {"a a": 1}), s1)
    dump_state(total_state(G2, 2, {"x x": 1}), s2)
    code, out, _ = run(
        capsys, "eval", "--product", "fermi", "--state", str(s1), str(s2),
        "--expr", "A1.a A2.x A1.a A2.x",
    )
    assert code == 0
    assert out.splitlines()[0] == "-1"


def test_eval_q_deformed_label(capsys, pair_files):
    s1, s2 = pair_files
    code, out, _ = run(
        capsys, "eval", "--product", "q:boolean:2", "--state", s1, s2, "--expr", "A1.a A2.b"
    )
    assert code == 0
    assert out.splitlines()[0] == "1/12"  # half of the boolean value


# ---------------------------------------------------------------------------
# clt


def test_clt_free_fourth_moment(capsys):
    code, out, _ = run(
        capsys, "clt", "--product", "free", "--moments", "0,1,0,1", "--n", "2", "--order", "4"
    )
    assert code == 0
    assert out.splitlines() == ["6", "normalized: 3/2"]


def test_clt_odd_order_prints_no_normalization(capsys):
    code, out, _ = run(
        capsys, "clt", "--product", "boolean", "--moments", "0,1,0", "--n", "3", "--order", "3"
    )
    assert code == 0
    assert len(out.splitlines()) == 1


def test_clt_fermi_uses_the_graded_tensor(capsys):
    code, out, _ = run(
        capsys, "clt", "--product", "fermi", "--moments", "0,1", "--n", "2", "--order", "2"
    )
    assert code == 0
    assert out.splitlines() == ["2", "normalized: 1"]


# ---------------------------------------------------------------------------
# check


def test_check_axiom_pass_is_exit_zero(capsys):
    code, out, _ = run(
        capsys, "check", "--axiom", "associativity", "--product", "free",
        "--seed", "1", "--trials", "2", "--max-len", "4",
    )
    assert code == 0
    assert "failures=0" in out
    assert out.rstrip().splitlines()[-1] == "expected=pass observed=pass verdict=ok"


def test_check_axiom_expected_failure_is_exit_zero_with_witness(capsys):
    code, out, _ = run(
        capsys, "check", "--axiom", "factorization", "--product", "degenerate",
        "--seed", "3", "--trials", "2", "--max-len", "4",
    )
    assert code == 0
    assert "witness:" in out
    assert out.rstrip().splitlines()[-1] == "expected=fail observed=fail verdict=ok"


def test_check_axiom_on_wrong_regime_is_a_regime_error(capsys):
    code, out, err = run(capsys, "check", "--axiom", "unitlaw", "--product", "boolean")
    assert code == 3
    assert error_doc(err)["code"] == "regime"


def test_check_reduction_sweep(capsys):
    code, out, _ = run(
        capsys, "check", "reduction", "--kind", "fermi", "--seed", "1", "--trials", "2",
        "--max-len", "3",
    )
    assert code == 0
    assert "failures=0" in out
    assert "checked=" in out


def test_check_output_is_deterministic(capsys):
    argv = (
        "check", "--axiom", "symmetry", "--product", "monotone",
        "--seed", "11", "--trials", "2", "--max-len", "4",
    )
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


# ---------------------------------------------------------------------------
# classical


@pytest.fixture
def coin_files(tmp_path):
    half = as_rational("1/2")
    coin = FiniteProbSpace(("h", "t"), {"h": half, "t": half})
    quarter = as_rational("1/4")
    product = FiniteProbSpace(
        ("hh", "ht", "th", "tt"), {o: quarter for o in ("hh", "ht", "th", "tt")}
    )
    first = RandomVariable(product, {o: o[0] for o in product.outcomes})
    second = RandomVariable(product, {o: o[1] for o in product.outcomes})
    paths = {}
    for name, doc in (
        ("coin", space_to_json(coin)),
        ("product", space_to_json(product)),
        ("first", variable_to_json(first)),
        ("second", variable_to_json(second)),
    ):
        path = tmp_path / ("%s.json" % name)
        path.write_text(json.dumps(doc))
        paths[name] = str(path)
    identity = tmp_path / "identity.json"
    identity.write_text(json.dumps({"map": {"h": "h", "t": "t"}}))
    paths["identity"] = str(identity)
    return paths


def test_classical_independent_coordinates(capsys, coin_files):
    code, out, _ = run(
        capsys, "classical", "independence",
        "--space", coin_files["product"], "--x", coin_files["first"], "--y", coin_files["second"],
    )
    assert code == 0
    assert out.splitlines() == ["atomwise: true", "jointfactor: true"]


def test_classical_dependent_variable(capsys, coin_files):
    code, out, _ = run(
        capsys, "classical", "independence",
        "--space", coin_files["coin"], "--x", coin_files["identity"], "--y", coin_files["identity"],
    )
    assert code == 0
    assert out.splitlines() == ["atomwise: false", "jointfactor: false"]


# ---------------------------------------------------------------------------
# state unitize


def test_state_unitize_writes_a_unital_document(capsys, tmp_path, pair_files):
    s1, _ = pair_files
    out_path = tmp_path / "unital.json"
    code, out, _ = run(capsys, "state", "unitize", "--state", s1, "--out", str(out_path))
    assert code == 0
    extended = load_state(out_path)
    assert extended.algebra.unital
    assert extended.table[min(extended.table, key=lambda m: len(m))] == as_rational(1)


def test_state_unitize_of_a_unital_document_is_a_regime_error(capsys, tmp_path):
    unital = tmp_path / "unital.json"
    dump_state(total_state(G1, 1), unital)
    code, _, err = run(capsys, "state", "unitize", "--state", str(unital))
    assert code == 3
    assert error_doc(err)["code"] == "regime"


# ---------------------------------------------------------------------------
# errors


def test_expression_errors_carry_offsets(capsys, pair_files):
    s1, s2 = pair_files
    code, _, err = run(
        capsys, "eval", "--product", "boolean", "--state", s1, s2, "--expr", "A1.a + A9.q"
    )
    assert code == 2
    doc = error_doc(err)
    assert doc["code"] == "expression"
    assert doc["context"]["offset"] == 7


def test_missing_state_file_is_a_document_error(capsys, pair_files):
    s1, _ = pair_files
    code, _, err = run(
        capsys, "eval", "--product", "boolean", "--state", s1, "/nowhere.json", "--expr", "A1.a"
    )
    assert code == 2
    assert error_doc(err)["code"] == "document"


def test_malformed_state_file_is_a_document_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run(
        capsys, "eval", "--product", "boolean", "--state", str(bad), str(bad), "--expr", "A1.a"
    )
    assert code == 2
    assert error_doc(err)["code"] == "document"


def test_words_beyond_the_table_bound_are_degree_errors(capsys, pair_files):
    s1, s2 = pair_files
    code, _, err = run(
        capsys, "eval", "--product", "boolean", "--state", s1, s2, "--expr", "A1.a^3"
    )
    assert code == 3
    doc = error_doc(err)
    assert doc["code"] == "degree"
    assert doc["context"]["max_degree"] == 2


def test_regime_mismatch_is_exit_three(capsys, tmp_path):
    u1 = tmp_path / "u1.json"
    u2 = tmp_path / "u2.json"
    dump_state(total_state(AlgebraSignature("A1", True, (("a", 0),)), 2), u1)
    dump_state(total_state(AlgebraSignature("A2", True, (("b", 0),)), 2), u2)
    code, _, err = run(
        capsys, "eval", "--product", "boolean", "--state", str(u1), str(u2), "--expr", "A1.a"
    )
    assert code == 3
    assert error_doc(err)["code"] == "regime"


def test_unknown_product_label_is_a_usage_error(capsys, pair_files):
    s1, s2 = pair_files
    code, _, err = run(
        capsys, "eval", "--product", "sideways", "--state", s1, s2, "--expr", "A1.a"
    )
    assert code == 2
    assert error_doc(err)["code"] == "usage"


def test_unknown_subcommand_is_a_usage_error(capsys):
    code, _, err = run(capsys, "frobnicate")
    assert code == 2
    assert error_doc(err)["code"] == "usage"


def test_module_entry_point_runs_as_a_process(tmp_path):
    s1 = tmp_path / "s1.json"
    s2 = tmp_path / "s2.json"
    dump_state(total_state(P1, 2, {"a": "1/2"}), s1)
    dump_state(total_state(P2, 2, {"b": "1/3"}), s2)
    result = subprocess.run(
        [sys.executable, "-m", "ncindep", "eval", "--product", "boolean",
         "--state", str(s1), str(s2), "--expr", "A1.a A2.b A1.a"],
        capture_output=True, text=True,
    )
    assert result.returncode == 0
    assert result.stdout.splitlines()[0] == "1/12"
