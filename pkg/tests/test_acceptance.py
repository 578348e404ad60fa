"""End-to-end acceptance checks; all comparisons are exact."""
import io
from collections import Counter
from contextlib import redirect_stdout

import numpy as np
import pytest

from corpus import PAIRS_3, mixed_codes, small_space_codes, two_block_codes
from zpkcodes import cli, oracle
from zpkcodes.additive import MixedAlphabet, min_distance
from zpkcodes.codefile import CodeDocument, read_document, write_document
from zpkcodes.gray import build_gray_tables, phi_map, varphi_size, weight_of
from zpkcodes.perfect import (build_perfect_check, dual_one_weight_check, validate_check_matrix,
                              verify_perfect_exhaustive, verify_perfect_syndrome, weight_one_syndromes)
from zpkcodes.wenum import (COSET_CLASSES, BiPoly, coset_enumerator_closed, coset_transform_closed,
                            dual_image_enumerator, duality_check, hamming_enumerator, image_enumerator_phi,
                            image_enumerator_varphi, macwilliams_transform)

pytestmark = pytest.mark.acceptance
X, Y = BiPoly.X(), BiPoly.Y()


def _cli(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        status = cli.main([str(a) for a in argv])
    return status, buf.getvalue()


def test_1_two_weight_code(criterion, fixtures):
    with criterion(1, "enumerator of P for p=3, k=3") as c:
        W = hamming_enumerator(build_gray_tables(3, 3).codewords)
        assert W.to_text() == "X^9 + 24*X^3*Y^6 + 2*Y^9"
        words = read_document(fixtures / "P_3_3.code").code().words()
        w = Counter(int(x) for x in (words != 0).sum(axis=1) if x)
        assert dict(w) == {6: 24, 9: 2}
        assert _cli(["wenum", "hamming", "--input", fixtures / "P_3_3.code"]) == (0, "X^9 + 24*X^3*Y^6 + 2*Y^9\n")
    assert c.elapsed < 1


def test_2_coset_identities(criterion):
    with criterion(2, "coset enumerator identities, three ways") as c:
        for p, k in ((2, 2), (2, 3), (3, 2), (3, 3)):
            cosets = oracle._cosets_by_scan(p, k)  # full scan of Z_p^{p^{k-1}}
            d_size = len(cosets[0])
            for label in range(p**k):
                cls = "zero" if label == 0 else ("unit" if label % p else "divisible")
                scanned = hamming_enumerator(np.array(sorted(cosets[label])))
                assert scanned == coset_enumerator_closed(p, k, cls)
                transformed = macwilliams_transform(scanned, p, d_size)
                assert transformed == coset_transform_closed(p, k, cls)
            c.note(f"({p},{k}) ok")
    assert c.elapsed < 10


def test_3_duality_two_block(criterion, tmp_path):
    with criterion(3, "duality on 300 random two-block codes") as c:
        compared = 0
        for p, k in PAIRS_3:
            for n, code in enumerate(two_block_codes(p, k)):
                f = tmp_path / f"c_{p}_{k}_{n}.code"
                write_document(CodeDocument.from_code(code), f)
                status, out = _cli(["wenum", "duality-check", "--input", f])
                assert status == 0 and out.startswith("EQUAL: ")
                r = duality_check(code)
                assert r.equal and out == f"EQUAL: {r.left.to_text()}\n"
                dual = code.dual()
                if max(varphi_size(code), varphi_size(dual)) <= oracle.ORACLE_BUDGET:
                    assert image_enumerator_varphi(code) == oracle.brute_image_enumerator(code, "varphi")
                    assert dual_image_enumerator(code) == oracle.brute_image_enumerator(dual, "phi")
                    assert image_enumerator_varphi(dual) == oracle.brute_image_enumerator(dual, "varphi")
                    assert r.left == oracle.brute_image_enumerator(code, "phi")
                    compared += 1
        c.note(f"{compared}/300 brute-force compared")
    assert c.elapsed < 60


def test_4_duality_mixed(criterion):
    with criterion(4, "duality on 50 random Z2 x Z4 x Z8 codes") as c:
        compared = 0
        for code in mixed_codes():
            r = duality_check(code)
            assert r.equal
            dual = code.dual()
            if max(varphi_size(dual), code.size) <= 10**6:
                assert r.left == oracle.brute_image_enumerator(code, "phi")
                vb = oracle.brute_image_enumerator(dual, "varphi")
                assert macwilliams_transform(vb, 2, vb.total()) == r.left
                compared += 1
        c.note(f"{compared}/50 brute-force compared")
    assert c.elapsed < 120


def test_5_perfect_codes(criterion, fixtures):
    with criterion(5, "1-perfect constructions and the example check matrix") as c:
        for p, gammas, space in ((2, (1, 1), 128), (3, (0, 1), 27)):
            M = build_perfect_check(p, gammas)
            assert M.alphabet.space_size == space
            assert verify_perfect_exhaustive(M.code())
        M = read_document(fixtures / "example44.code").check_matrix()
        assert validate_check_matrix(M).valid
        assert verify_perfect_syndrome(M)
        assert len({tuple(s) for s in weight_one_syndromes(M).tolist()}) == 81
    assert c.elapsed < 5


def test_6_one_weight_duals(criterion):
    with criterion(6, "one-weight duals and Hamming parameters") as c:
        for p, gammas, w in ((2, (1, 1), 4), (3, (0, 1), 3)):
            r = dual_one_weight_check(build_perfect_check(p, gammas))
            assert r.weights == {w}
        code = build_perfect_check(2, (1, 1)).code()
        img = oracle.phi_image(code)
        n = len(next(iter(img)))
        assert (n, len(img), oracle.brute_min_distance(img)) == (7, 16, 3)
    assert c.elapsed < 5


def test_7_oracle_equivalence(criterion):
    with criterion(7, "structured dual equals brute-force dual; MacWilliams involution") as c:
        checked = 0
        for code in small_space_codes():
            a = code.alphabet
            dual = code.dual()
            assert oracle.code_words(dual) == oracle.brute_dual(code)
            enums = [hamming_enumerator(code.words()), hamming_enumerator(dual.words()),
                     image_enumerator_phi(code), image_enumerator_varphi(code),
                     image_enumerator_phi(dual), image_enumerator_varphi(dual)]
            for W in enums:
                assert macwilliams_transform(macwilliams_transform(W, a.p), a.p, a.p**W.degree) == W
                checked += 1
        c.note(f"{checked} enumerators")
    assert c.elapsed < 60


def test_8_metric_laws(criterion):
    with criterion(8, "phi isometry, varphi size law, varphi minimum-distance law") as c:
        rng = np.random.default_rng(8)
        for p, k in ((3, 2), (2, 3)):
            a = MixedAlphabet.two_block(p, k, 2, 3)
            for _ in range(1000):
                x = a.word(rng.integers(0, a.moduli))
                y = a.word(rng.integers(0, a.moduli))
                dh = sum(u != v for u, v in zip(phi_map(x), phi_map(y)))
                assert dh == weight_of(x - y, "star")
        violations = []
        for p, k in PAIRS_3:
            for code in two_block_codes(p, k):
                beta = code.alphabet.alphas[-1]
                img = oracle.varphi_image(code)
                assert len(img) == varphi_size(code) == code.size * p ** ((p ** (k - 1) - k) * beta)
                if code.size < 2:
                    continue
                d_prime = oracle.brute_min_distance(img)
                law = min(3 if p % 2 else 4, min_distance(code, "diamond"))
                if d_prime != law:
                    violations.append((p, k, str(code.alphabet), d_prime, law))
        c.note(f"{len(violations)} minimum-distance law violations: {violations}")
        assert not violations
    assert c.elapsed < 30


def test_9_census(criterion):
    with criterion(9, "three coset weight-distribution classes") as c:
        for p, k in ((2, 2), (2, 3), (3, 2), (3, 3)):
            classes = oracle.coset_distribution_census(p, k)
            assert [cl.min_weight for cl in classes] == [0, 1, 2]
            assert [cl.cosets for cl in classes] == [1, p**k - p ** (k - 1), p ** (k - 1) - 1]
    assert c.elapsed < 10
