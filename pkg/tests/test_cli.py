import json
import subprocess
import sys

import numpy as np
import pytest

import toepcert as tc
from toepcert.cli import main
from helpers import EXACT, nonzero_fill, unit_isometry_dense


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, (json.loads(out) if out.startswith("{") else out)


class TestCheck:
    def test_dense_identity(self, tmp_path, capsys):
        f = tmp_path / "m.json"
        tc.save_matrix(f, np.eye(4, dtype=complex))
        code, verdict = run(capsys, "check", str(f))
        assert code == 0
        assert verdict == {"structure": "toeplitz", "via": "displacement"}

    def test_dense_unit_isometry(self, tmp_path, capsys):
        f = tmp_path / "m.json"
        tc.save_matrix(f, unit_isometry_dense())
        code, verdict = run(capsys, "check", str(f))
        assert code == 0 and verdict["structure"] == "toeplitz"

    def test_dense_unstructured(self, tmp_path, capsys):
        f = tmp_path / "m.json"
        tc.save_matrix(f, np.array([[1.0, 2.0], [3.0, 4.0]], dtype=complex))
        code, verdict = run(capsys, "check", str(f))
        assert code == 1 and verdict["structure"] == "none"

    def test_dense_hankel(self, tmp_path, capsys, rng):
        f = tmp_path / "m.json"
        H = tc.flip_cols(tc.random_toeplitz(rng, 3, 4))
        tc.save_matrix(f, H.to_dense())
        code, verdict = run(capsys, "check", str(f))
        assert code == 0 and verdict["structure"] == "hankel"

    def test_structured_kind_short_circuits(self, tmp_path, capsys, rng):
        f = tmp_path / "m.json"
        tc.save_matrix(f, tc.random_toeplitz(rng, 3, 4))
        code, verdict = run(capsys, "check", str(f))
        assert code == 0
        assert verdict == {"structure": "toeplitz", "via": "direct"}

    def test_malformed_file(self, tmp_path, capsys):
        f = tmp_path / "m.json"
        f.write_text("{broken", encoding="utf-8")
        assert main(["check", str(f)]) == 2


class TestProduct:
    def _write_pair(self, tmp_path, A, B):
        fa, fb = tmp_path / "a.json", tmp_path / "b.json"
        tc.save_matrix(fa, A)
        tc.save_matrix(fb, B)
        return str(fa), str(fb)

    def test_generated_pair_proportional(self, tmp_path, capsys, rng):
        spec = tc.FamilySpec(tc.Regime.R1, 3, 5, 4, lam=2.0, seed=1,
                             a_free=nonzero_fill(rng, 4),
                             b_free=nonzero_fill(rng, 4))
        fa, fb = self._write_pair(tmp_path, *tc.gen_pair(spec))
        code, verdict = run(capsys, "product", fa, fb, "--oracle", "--json")
        assert code == 0
        assert verdict["case"] == "proportional"
        assert verdict["lambda"] == [2.0, 0.0]
        assert verdict["oracle_agrees"] is True

    def test_identity_pair_both_zero(self, tmp_path, capsys):
        fa, fb = self._write_pair(tmp_path, tc.AsymToeplitz.eye(3, 5),
                                  tc.AsymToeplitz.eye(5, 4))
        code, verdict = run(capsys, "product", fa, fb, "--json")
        assert code == 0 and verdict["case"] == "both_zero"

    def test_perturbed_pair_exits_one_never_three(self, tmp_path, capsys, rng):
        spec = tc.FamilySpec(tc.Regime.R1, 3, 5, 4, lam=2.0, seed=2,
                             a_free=nonzero_fill(rng, 4),
                             b_free=nonzero_fill(rng, 4))
        A2, B2 = tc.perturb_to_break(tc.gen_pair(spec), EXACT)
        fa, fb = self._write_pair(tmp_path, A2, B2)
        code, verdict = run(capsys, "product", fa, fb, "--oracle", "--json")
        assert code == 1
        assert verdict["structured"] is False and verdict["oracle_agrees"] is True

    def test_hankel_pair(self, tmp_path, capsys, rng):
        A = tc.random_toeplitz(rng, 3, 5)
        B = tc.random_toeplitz(rng, 5, 4)
        fa, fb = self._write_pair(tmp_path, tc.flip_cols(tc.AsymToeplitz.zero(3, 5)),
                                  tc.flip_rows_of(B))
        code, verdict = run(capsys, "product", fa, fb, "--oracle", "--json")
        assert code == 0 and verdict["product"] == "toeplitz"
        assert A.n == 3  # fixture use

    def test_mixed_hankel_toeplitz(self, tmp_path, capsys):
        H = tc.flip_rows_of(tc.AsymToeplitz.eye(3, 5))
        B = tc.AsymToeplitz.eye(5, 4)
        fa, fb = self._write_pair(tmp_path, H, B)
        code, verdict = run(capsys, "product", fa, fb, "--oracle", "--json")
        assert code == 0 and verdict["product"] == "hankel"
        assert verdict["oracle_agrees"] is True

    def test_mixed_toeplitz_hankel(self, tmp_path, capsys):
        A = tc.AsymToeplitz.eye(3, 5)
        H = tc.flip_cols(tc.AsymToeplitz.eye(5, 4))
        fa, fb = self._write_pair(tmp_path, A, H)
        code, verdict = run(capsys, "product", fa, fb, "--oracle", "--json")
        assert code == 0 and verdict["product"] == "hankel"
        assert verdict["oracle_agrees"] is True

    def test_dense_inputs_are_promoted(self, tmp_path, capsys):
        fa, fb = self._write_pair(tmp_path, np.eye(3, 5, dtype=complex),
                                  np.eye(5, 4, dtype=complex))
        code, verdict = run(capsys, "product", fa, fb, "--json")
        assert code == 0 and verdict["product"] == "toeplitz"

    def test_unstructured_dense_input_errors(self, tmp_path, capsys):
        fa, fb = self._write_pair(tmp_path,
                                  np.array([[1, 2], [3, 4]], dtype=complex),
                                  np.eye(2, 2, dtype=complex))
        assert main(["product", fa, fb]) == 2

    def test_dimension_mismatch_is_input_error(self, tmp_path):
        fa = tmp_path / "a.json"
        fb = tmp_path / "b.json"
        tc.save_matrix(fa, tc.AsymToeplitz.eye(3, 5))
        tc.save_matrix(fb, tc.AsymToeplitz.eye(4, 2))
        assert main(["product", str(fa), str(fb)]) == 2

    def test_human_readable_default(self, tmp_path, capsys):
        fa, fb = self._write_pair(tmp_path, tc.AsymToeplitz.eye(2, 3),
                                  tc.AsymToeplitz.eye(3, 2))
        code, out = run(capsys, "product", fa, fb)
        assert code == 0 and isinstance(out, str) and "yes" in out


class TestGenerate:
    @pytest.mark.parametrize("regime,n,m,l", [
        ("r1", 3, 5, 4), ("r2", 7, 3, 8), ("r3", 2, 4, 7), ("r4", 8, 4, 3),
        ("form-a", 3, 5, 4), ("form-b", 4, 5, 3),
        ("lambda-zero", 4, 3, 6), ("lambda-infinity", 6, 3, 4),
    ])
    def test_generate_then_product_passes(self, tmp_path, capsys, regime, n, m, l):
        fa, fb = str(tmp_path / "a.json"), str(tmp_path / "b.json")
        assert main(["generate", "--regime", regime, "-n", str(n), "-m", str(m),
                     "-l", str(l), "--lambda", "2,0", "--seed", "3",
                     "--out-a", fa, "--out-b", fb]) == 0
        capsys.readouterr()
        assert main(["product", fa, fb, "--oracle"]) == 0

    def test_invalid_regime_combination(self, tmp_path):
        code = main(["generate", "--regime", "r1", "-n", "6", "-m", "4", "-l", "3",
                     "--out-a", str(tmp_path / "a.json"),
                     "--out-b", str(tmp_path / "b.json")])
        assert code == 2

    def test_bad_lambda_syntax(self, tmp_path):
        code = main(["generate", "--regime", "r1", "-n", "2", "-m", "4", "-l", "3",
                     "--lambda", "two", "--out-a", str(tmp_path / "a.json"),
                     "--out-b", str(tmp_path / "b.json")])
        assert code == 2

    def test_unknown_regime_is_usage_error(self, tmp_path, capsys):
        code = main(["generate", "--regime", "r9", "-n", "2", "-m", "4", "-l", "3",
                     "--out-a", str(tmp_path / "a.json"),
                     "--out-b", str(tmp_path / "b.json")])
        assert code == 2


class TestClosure:
    def test_generate_product_closure_all_sizes(self, tmp_path, capsys):
        # every size triple in [1..8]^3, generated under its own regime,
        # must survive the full file round trip with the oracle engaged
        fa, fb = str(tmp_path / "a.json"), str(tmp_path / "b.json")
        for n in range(1, 9):
            for m in range(1, 9):
                for l in range(1, 9):
                    regime = tc.classify_regime(n, m, l).name.lower()
                    assert main(["generate", "--regime", regime,
                                 "-n", str(n), "-m", str(m), "-l", str(l),
                                 "--seed", str(n * 64 + m * 8 + l),
                                 "--out-a", fa, "--out-b", fb]) == 0
                    assert main(["product", fa, fb, "--oracle"]) == 0
        capsys.readouterr()

    def test_generate_product_closure_degenerate_forms(self, tmp_path, capsys):
        fa, fb = str(tmp_path / "a.json"), str(tmp_path / "b.json")
        for form, needs in [("form-a", "n<=m"), ("form-b", "l<=m"),
                            ("lambda-zero", ""), ("lambda-infinity", "")]:
            for n in range(1, 9, 2):
                for m in range(1, 9, 2):
                    for l in range(1, 9, 2):
                        if needs == "n<=m" and n > m:
                            continue
                        if needs == "l<=m" and l > m:
                            continue
                        assert main(["generate", "--regime", form,
                                     "-n", str(n), "-m", str(m), "-l", str(l),
                                     "--seed", "7", "--out-a", fa,
                                     "--out-b", fb]) == 0
                        assert main(["product", fa, fb, "--oracle"]) == 0
        capsys.readouterr()


class TestIsometry:
    def test_unit_example_accepted(self, tmp_path, capsys):
        f = tmp_path / "m.json"
        tc.save_matrix(f, tc.AsymToeplitz.from_dense(unit_isometry_dense()))
        code, verdict = run(capsys, "isometry", str(f))
        assert code == 0
        assert verdict["accepted"] is True
        assert abs(verdict["column_norm_sq"] - 1.0) <= 1e-12
        assert verdict["lambda"] == [0.0, 1.0]

    def test_hankel_kind(self, tmp_path, capsys):
        f = tmp_path / "m.json"
        H = tc.flip_rows_of(tc.AsymToeplitz.from_dense(unit_isometry_dense()))
        tc.save_matrix(f, H)
        code, verdict = run(capsys, "isometry", str(f))
        assert code == 0 and verdict["accepted"] is True

    def test_scaled_identity_rejected(self, tmp_path, capsys):
        f = tmp_path / "m.json"
        tc.save_matrix(f, tc.AsymToeplitz(2, 2, 2.0, [0, 0], [0, 0]))
        code, verdict = run(capsys, "isometry", str(f))
        assert code == 1 and verdict["accepted"] is False

    def test_dense_kind_rejected(self, tmp_path):
        f = tmp_path / "m.json"
        tc.save_matrix(f, np.eye(2, dtype=complex))
        assert main(["isometry", str(f)]) == 2

    def test_malformed(self, tmp_path):
        f = tmp_path / "m.json"
        f.write_text("[]", encoding="utf-8")
        assert main(["isometry", str(f)]) == 2


class TestDisplacement:
    def test_dumps_displacement_of_dense(self, tmp_path, capsys):
        from toepcert.io import parse_matrix
        f = tmp_path / "m.json"
        tc.save_matrix(f, np.array([[1.0, 2.0], [3.0, 4.0]], dtype=complex))
        assert main(["displacement", str(f)]) == 0
        D = parse_matrix(json.loads(capsys.readouterr().out))
        assert np.array_equal(D, np.array([[1, 2], [3, 3]], dtype=complex))

    def test_structured_input_realized(self, tmp_path, capsys, rng):
        from toepcert.io import parse_matrix
        A = tc.random_toeplitz(rng, 3, 4)
        f = tmp_path / "m.json"
        tc.save_matrix(f, A)
        assert main(["displacement", str(f)]) == 0
        D = parse_matrix(json.loads(capsys.readouterr().out))
        assert np.array_equal(D, tc.displacement_dense(A.to_dense()))


class TestHarness:
    def test_help_exits_zero(self):
        assert main(["--help"]) == 0

    def test_no_command_is_usage_error(self):
        assert main([]) == 2

    def test_module_entry_point(self, tmp_path):
        f = tmp_path / "m.json"
        tc.save_matrix(f, np.eye(3, dtype=complex))
        proc = subprocess.run([sys.executable, "-m", "toepcert", "check", str(f)],
                              capture_output=True, text=True)
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["structure"] == "toeplitz"
