"""JSON code documents shared by the library and the CLI.

    {
      "p": 3,
      "blocks": [{"exponent": 1, "length": 4}, {"exponent": 2, "length": 3}],
      "check_rows": [[...], ...],
      "row_orders": [27, 3]
    }

Exactly one of ``generators`` / ``check_rows`` is present; row entries are
flattened block by block, block entries in [0, p^exponent).
"""
from __future__ import annotations

import io
import json
from dataclasses import dataclass

import numpy as np

from .additive import AdditiveCode, MixedAlphabet
from .errors import InvalidInput
from .perfect import StructuredCheckMatrix
from .zring import is_prime, order_of

KEYS = ("p", "blocks", "generators", "check_rows", "row_orders")


class InvalidDocument(InvalidInput):
    def __init__(self, path, message):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass
class CodeDocument:
    p: int
    blocks: list  # [(exponent, length), ...]
    generators: list | None = None
    check_rows: list | None = None
    row_orders: list | None = None

    @property
    def rows(self):
        return self.generators if self.generators is not None else self.check_rows

    def alphabet(self) -> MixedAlphabet:
        k = max(e for e, _ in self.blocks)
        alphas = [0] * k
        for e, n in self.blocks:
            alphas[e - 1] = n
        return MixedAlphabet(self.p, tuple(alphas))

    def _array(self):
        n = sum(n for _, n in self.blocks)
        return np.array(self.rows, dtype=np.int64).reshape(len(self.rows), n)

    def code(self) -> AdditiveCode:
        a = self.alphabet()
        if self.generators is not None:
            return AdditiveCode(a, self._array())
        return AdditiveCode(a, self._array()).dual()

    def check_matrix(self) -> StructuredCheckMatrix:
        if self.check_rows is None:
            raise InvalidDocument("check_rows", "document has no check rows")
        a = self.alphabet()
        rows = self._array()
        orders = self.row_orders
        if orders is None:
            orders = [max((order_of(int(x), a.p, int(i)) for x, i in zip(r, a.exponents)), default=1)
                      for r in rows]
        return StructuredCheckMatrix(a.p, a.alphas, rows, tuple(orders))

    @classmethod
    def from_code(cls, code: AdditiveCode, rows=None) -> CodeDocument:
        a = code.alphabet
        rows = code.generators if rows is None else rows
        return cls(a.p, _blocks_of(a), generators=np.asarray(rows).tolist())

    @classmethod
    def from_check_matrix(cls, M: StructuredCheckMatrix) -> CodeDocument:
        return cls(M.p, _blocks_of(M.alphabet), check_rows=M.rows.tolist(), row_orders=list(M.row_orders))


def _blocks_of(a: MixedAlphabet):
    return [(i, n) for i, n in enumerate(a.alphas, start=1) if n]


def _int(value, path):
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidDocument(path, f"expected an integer, got {value!r}")
    return value


def from_dict(obj) -> CodeDocument:
    if not isinstance(obj, dict):
        raise InvalidDocument("", "document must be a JSON object")
    for key in obj:
        if key not in KEYS:
            raise InvalidDocument(key, "unknown field")
    if "p" not in obj:
        raise InvalidDocument("p", "missing")
    p = _int(obj["p"], "p")
    if not is_prime(p):
        raise InvalidDocument("p", f"{p} is not prime")
    blocks_raw = obj.get("blocks")
    if not isinstance(blocks_raw, list) or not blocks_raw:
        raise InvalidDocument("blocks", "expected a nonempty list")
    blocks = []
    for b, blk in enumerate(blocks_raw):
        path = f"blocks[{b}]"
        if not isinstance(blk, dict) or set(blk) != {"exponent", "length"}:
            raise InvalidDocument(path, "expected {\"exponent\": int, \"length\": int}")
        e = _int(blk["exponent"], path + ".exponent")
        n = _int(blk["length"], path + ".length")
        if e < 1:
            raise InvalidDocument(path + ".exponent", "must be >= 1")
        if n < 0:
            raise InvalidDocument(path + ".length", "must be >= 0")
        if blocks and e <= blocks[-1][0]:
            raise InvalidDocument(path + ".exponent", "exponents must be strictly increasing")
        blocks.append((e, n))
    if not any(n for _, n in blocks):
        raise InvalidDocument("blocks", "all blocks are empty")
    has_g, has_c = "generators" in obj, "check_rows" in obj
    if has_g == has_c:
        raise InvalidDocument("", "exactly one of 'generators' and 'check_rows' is required")
    key = "generators" if has_g else "check_rows"
    rows_raw = obj[key]
    if not isinstance(rows_raw, list):
        raise InvalidDocument(key, "expected a list of rows")
    moduli = [p**e for e, n in blocks for _ in range(n)]
    rows = []
    for r, row in enumerate(rows_raw):
        path = f"{key}[{r}]"
        if not isinstance(row, list) or len(row) != len(moduli):
            raise InvalidDocument(path, f"expected a row of {len(moduli)} integers")
        for j, (x, m) in enumerate(zip(row, moduli)):
            _int(x, f"{path}[{j}]")
            if not 0 <= x < m:
                raise InvalidDocument(f"{path}[{j}]", f"entry {x} outside [0, {m})")
        rows.append(list(row))
    orders = None
    if "row_orders" in obj:
        if not has_c:
            raise InvalidDocument("row_orders", "only allowed with check_rows")
        orders = obj["row_orders"]
        if not isinstance(orders, list) or len(orders) != len(rows):
            raise InvalidDocument("row_orders", f"expected {len(rows)} integers")
        for r, o in enumerate(orders):
            if _int(o, f"row_orders[{r}]") < 1:
                raise InvalidDocument(f"row_orders[{r}]", "must be >= 1")
    return CodeDocument(p, blocks, generators=rows if has_g else None,
                        check_rows=rows if has_c else None, row_orders=orders)


def loads(text: str) -> CodeDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidDocument(f"line {exc.lineno} column {exc.colno}", exc.msg) from exc
    return from_dict(obj)


def read_document(source) -> CodeDocument:
    """Read from a path or an open text stream."""
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        return loads(source.read())
    with open(source, encoding="utf-8") as fh:
        return loads(fh.read())


def dumps(doc: CodeDocument) -> str:
    """Canonical text: fixed key order, one row per line."""
    blocks = ", ".join(f'{{"exponent": {e}, "length": {n}}}' for e, n in doc.blocks)
    lines = ["{", f'  "p": {doc.p},', f'  "blocks": [{blocks}],']
    key = "generators" if doc.generators is not None else "check_rows"
    rows = doc.rows
    if rows:
        body = ",\n".join("    " + json.dumps([int(x) for x in r]) for r in rows)
        lines.append(f'  "{key}": [\n{body}\n  ]' + ("," if doc.row_orders is not None else ""))
    else:
        lines.append(f'  "{key}": []' + ("," if doc.row_orders is not None else ""))
    if doc.row_orders is not None:
        lines.append(f'  "row_orders": {json.dumps([int(o) for o in doc.row_orders])}')
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_document(doc: CodeDocument, target) -> None:
    text = dumps(doc)
    if hasattr(target, "write"):
        target.write(text)
    else:
        with open(target, "w", encoding="utf-8") as fh:
            fh.write(text)
