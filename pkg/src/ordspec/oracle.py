"""Brute-force ground truth: explicit matrix groups over small fields.

Everything the closed-form side claims about spectra can be cross-checked
here at small parameters: build standard generators, close them under
multiplication (breadth-first, with elements deduplicated by a packed
integer key), read off element orders modulo the computed centre, and
compare against the formulas.

Fields GF(p^m) are realized as integer codes 0..q-1 (base-p packed
polynomial coefficients) with exp/log tables for multiplication, so field
operations are table lookups.  Matrices over fields of characteristic 2
additionally get a fast path where a whole row is one int and row addition
is XOR.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
from functools import lru_cache

from . import spectra
from .errors import DomainError, ResourceError, UsageError
from .spectra import SpectrumGens

DEFAULT_CAP = 2_000_000

_ORDER_BOUND = 10_000_000


# ---------------------------------------------------------------------------
# finite fields


def _poly_mulmod(a: tuple, b: tuple, mod: tuple, p: int) -> tuple:
    """Multiply two coefficient tuples (ascending degree) modulo the monic
    polynomial mod, all over GF(p)."""
    deg_m = len(mod) - 1
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    # reduce
    for i in range(len(out) - 1, deg_m - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(deg_m):
                out[i - deg_m + j] = (out[i - deg_m + j] - c * mod[j]) % p
    out = out[:deg_m]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _monic_polys(p: int, deg: int):
    for code in range(p**deg):
        coeffs = []
        c = code
        for _ in range(deg):
            coeffs.append(c % p)
            c //= p
        yield tuple(coeffs) + (1,)


def _poly_mod(a: tuple, mod: tuple, p: int) -> tuple:
    out = list(a)
    deg_m = len(mod) - 1
    for i in range(len(out) - 1, deg_m - 1, -1):
        c = out[i]
        if c:
            out[i] = 0
            for j in range(deg_m):
                out[i - deg_m + j] = (out[i - deg_m + j] - c * mod[j]) % p
    out = out[:deg_m] if len(out) > deg_m else out
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def _is_irreducible(poly: tuple, p: int) -> bool:
    deg = len(poly) - 1
    for d in range(1, deg // 2 + 1):
        for divisor in _monic_polys(p, d):
            if _poly_mod(poly, divisor, p) == (0,):
                return False
    return True


class Field:
    """GF(p^m) on integer codes.  Code 0 is zero, code 1 is one; nonzero
    codes multiply through exp/log tables for a fixed primitive element."""

    def __init__(self, p: int, m: int):
        q = p**m
        self.p, self.m, self.q = p, m, q
        self.modulus = next(
            poly for poly in _monic_polys(p, m) if _is_irreducible(poly, p)
        )
        if q == 2:
            self.gen = 1
            self.exp = [1]
            self.log = [0, 0]
            return
        # find a primitive element and fill exp/log along the way
        for cand in range(2, q):
            cand_poly = self._decode(cand)
            exp = [1]
            cur = (1,)
            for _ in range(q - 2):
                cur = _poly_mulmod(cur, cand_poly, self.modulus, p)
                code = self._encode(cur)
                if code == 1:
                    break
                exp.append(code)
            if len(exp) == q - 1:
                break
        else:
            raise AssertionError(f"no primitive element in GF({q})")
        self.gen = cand
        self.exp = exp
        self.log = [0] * q
        for i, code in enumerate(exp):
            self.log[code] = i

    def _decode(self, code: int) -> tuple:
        p = self.p
        coeffs = []
        for _ in range(self.m):
            coeffs.append(code % p)
            code //= p
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    def _encode(self, coeffs: tuple) -> int:
        code = 0
        for c in reversed(coeffs):
            code = code * self.p + c
        return code

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p, out, mult = self.p, 0, 1
        for _ in range(self.m):
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p, out, mult = self.p, 0, 1
        for _ in range(self.m):
            out += ((p - a % p) % p) * mult
            a //= p
            mult *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DomainError("inverse of zero")
        return self.exp[(self.q - 1 - self.log[a]) % (self.q - 1)]

    def pow(self, a: int, k: int) -> int:
        if a == 0:
            if k <= 0:
                raise DomainError("0 to a non-positive power")
            return 0
        return self.exp[(self.log[a] * k) % (self.q - 1)]

    def sub_q(self) -> int:
        """The order of the index-2 subfield, for fields of even degree."""
        if self.m % 2:
            raise DomainError(f"GF({self.q}) has no index-2 subfield")
        return self.p ** (self.m // 2)

    def conj(self, a: int) -> int:
        """The involutory field automorphism x -> x^sqrt(q)."""
        return self.pow(a, self.sub_q()) if a else 0

    def __repr__(self) -> str:
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(p: int, m: int) -> Field:
    if m < 1 or p < 2:
        raise DomainError(f"bad field parameters ({p}, {m})")
    from . import arith

    if not arith.is_prime(p):
        raise DomainError(f"field characteristic {p} is not prime")
    if p**m > 4096:
        raise DomainError(f"field GF({p**m}) exceeds the supported table size")
    return Field(p, m)


def field_of_order(q: int) -> Field:
    from . import arith

    fact = arith.factorize(q)
    if len(fact.factors) != 1:
        raise DomainError(f"{q} is not a prime power")
    ((p, m),) = fact.factors.items()
    return field(p, m)


# ---------------------------------------------------------------------------
# matrices


class MatrixGF:
    """A square matrix over a Field, optionally carrying the twist flag that
    marks composition with the field automorphism x -> x^sqrt(q).

    Twisted elements multiply by (A, i)(B, j) = (A * sigma^i(B), i xor j)
    where sigma acts entrywise.
    """

    __slots__ = ("field", "rows", "twist")

    def __init__(self, fld: Field, rows, twist: int = 0):
        rows = tuple(tuple(r) for r in rows)
        dim = len(rows)
        for r in rows:
            if len(r) != dim:
                raise DomainError("matrix must be square")
            for e in r:
                if not 0 <= e < fld.q:
                    raise DomainError(f"entry {e} out of range for {fld}")
        if twist not in (0, 1):
            raise DomainError(f"twist must be 0 or 1, got {twist}")
        if twist and fld.m % 2:
            raise DomainError("twist needs a field of even degree")
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "twist", twist)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixGF is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, fld: Field, dim: int) -> MatrixGF:
        return cls(fld, tuple(
            tuple(1 if i == j else 0 for j in range(dim)) for i in range(dim)
        ))

    def is_identity(self) -> bool:
        return self.twist == 0 and all(
            e == (1 if i == j else 0)
            for i, row in enumerate(self.rows)
            for j, e in enumerate(row)
        )

    def conj_entries(self) -> MatrixGF:
        f = self.field
        return MatrixGF(
            f, tuple(tuple(f.conj(e) for e in row) for row in self.rows), self.twist
        )

    def transpose(self) -> MatrixGF:
        return MatrixGF(self.field, tuple(zip(*self.rows)), self.twist)

    def __mul__(self, other: MatrixGF) -> MatrixGF:
        f = self.field
        if other.field is not f:
            raise DomainError("matrices over different fields")
        rows_b = other.rows
        if self.twist:
            rows_b = tuple(tuple(f.conj(e) for e in row) for row in rows_b)
        d = self.dim
        cols_b = tuple(zip(*rows_b))
        out = []
        for arow in self.rows:
            out.append(tuple(
                _dot(f, arow, bcol) for bcol in cols_b
            ))
        return MatrixGF(f, out, self.twist ^ other.twist)

    def inverse(self) -> MatrixGF:
        if self.twist:
            raise DomainError("inverse of twisted elements not needed")
        f, d = self.field, self.dim
        aug = [list(row) + [1 if i == j else 0 for j in range(d)]
               for i, row in enumerate(self.rows)]
        for col in range(d):
            pivot = next(
                (r for r in range(col, d) if aug[r][col] != 0), None
            )
            if pivot is None:
                raise DomainError("matrix is singular")
            aug[col], aug[pivot] = aug[pivot], aug[col]
            inv_p = f.inv(aug[col][col])
            aug[col] = [f.mul(inv_p, e) for e in aug[col]]
            for r in range(d):
                if r != col and aug[r][col] != 0:
                    c = aug[r][col]
                    aug[r] = [
                        f.add(e, f.neg(f.mul(c, pe)))
                        for e, pe in zip(aug[r], aug[col])
                    ]
        return MatrixGF(f, tuple(tuple(row[d:]) for row in aug))

    def order(self) -> int:
        """Multiplicative order; twisted elements supported."""
        acc = self
        for k in range(1, _ORDER_BOUND + 1):
            if acc.is_identity():
                return k
            acc = acc * self
        raise ResourceError(f"order exceeds {_ORDER_BOUND}")

    def key(self) -> bytes:
        """Canonical byte encoding: entries row-major, each in the minimal
        bit width for the field, twist flag appended when set."""
        w = max(1, (self.field.q - 1).bit_length())
        acc = 0
        shift = 0
        for row in self.rows:
            for e in row:
                acc |= e << shift
                shift += w
        data = acc.to_bytes((shift + 7) // 8 or 1, "little")
        return data + b"\x01" if self.twist else data

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatrixGF)
            and self.field is other.field
            and self.rows == other.rows
            and self.twist == other.twist
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.rows, self.twist))

    def __repr__(self) -> str:
        t = ", twisted" if self.twist else ""
        return f"MatrixGF({self.field}, {self.rows}{t})"


def _dot(f: Field, a, b) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = f.add(acc, f.mul(x, y))
    return acc


# ---------------------------------------------------------------------------
# closure engines

# Engines work on compact states: for characteristic 2 a state is a tuple of
# row ints (w bits per entry, row addition is XOR); otherwise a flat tuple of
# entry codes.  Both support right multiplication by a precomputed matrix.
# Over characteristic 2 the map row -> row * B is linear over GF(2) in the
# packed bits, so for narrow rows one table indexed by the whole packed row
# turns a matrix product into dim list lookups.

_FULL_TABLE_BITS = 10


class _EngineChar2:
    def __init__(self, fld: Field, dim: int):
        self.field, self.dim = fld, dim
        self.w = fld.m
        self.mask = (1 << self.w) - 1
        self.row_bits = self.w * dim
        self.full_tables = self.row_bits <= _FULL_TABLE_BITS
        self.identity = self.pack(MatrixGF.identity(fld, dim).rows)

    def pack(self, rows) -> tuple:
        w = self.w
        out = []
        for row in rows:
            acc = 0
            for j, e in enumerate(row):
                acc |= e << (w * j)
            out.append(acc)
        return tuple(out)

    def unpack(self, state) -> tuple:
        w, mask, d = self.w, self.mask, self.dim
        return tuple(
            tuple((r >> (w * j)) & mask for j in range(d)) for r in state
        )

    def key(self, state) -> int:
        acc = 0
        for i, r in enumerate(state):
            acc |= r << (self.row_bits * i)
        return acc

    def state_from_key(self, key: int) -> tuple:
        rmask = (1 << self.row_bits) - 1
        return tuple(
            (key >> (self.row_bits * i)) & rmask for i in range(self.dim)
        )

    def _bit_contribs(self, state) -> list:
        """Packed row of (unit row with bit b set) * B, for each bit b."""
        f, w, d = self.field, self.w, self.dim
        rows = self.unpack(state)
        contribs = []
        for b in range(self.row_bits):
            k, t = divmod(b, w)
            c = 1 << t
            acc = 0
            for j, e in enumerate(rows[k]):
                acc |= f.mul(c, e) << (w * j)
            contribs.append(acc)
        return contribs

    def precompute(self, state):
        contribs = self._bit_contribs(state)
        if not self.full_tables:
            return contribs
        full = [0] * (1 << self.row_bits)
        for v in range(1, len(full)):
            low = v & -v
            full[v] = full[v ^ low] ^ contribs[low.bit_length() - 1]
        return full

    def mul(self, state, pre) -> tuple:
        if self.full_tables:
            return tuple(pre[r] for r in state)
        out = []
        for r in state:
            acc = 0
            v = r
            while v:
                low = v & -v
                acc ^= pre[low.bit_length() - 1]
                v ^= low
            out.append(acc)
        return tuple(out)


class _EngineGeneric:
    def __init__(self, fld: Field, dim: int):
        self.field, self.dim = fld, dim
        self.w = max(1, (fld.q - 1).bit_length())
        q = fld.q
        self.add_table = [
            [fld.add(a, b) for b in range(q)] for a in range(q)
        ]
        self.identity = self.pack(MatrixGF.identity(fld, dim).rows)

    def pack(self, rows) -> tuple:
        return tuple(e for row in rows for e in row)

    def unpack(self, state) -> tuple:
        d = self.dim
        return tuple(state[i * d : (i + 1) * d] for i in range(d))

    def key(self, state) -> int:
        acc = 0
        for i, e in enumerate(state):
            acc |= e << (self.w * i)
        return acc

    def state_from_key(self, key: int) -> tuple:
        mask = (1 << self.w) - 1
        return tuple(
            (key >> (self.w * i)) & mask for i in range(self.dim * self.dim)
        )

    def precompute(self, state) -> list:
        f, d = self.field, self.dim
        return [
            [
                tuple(f.mul(c, state[k * d + j]) for j in range(d))
                for c in range(f.q)
            ]
            for k in range(d)
        ]

    def mul(self, state, pre) -> tuple:
        d, add = self.dim, self.add_table
        out = []
        for i in range(d):
            row = [0] * d
            base = i * d
            for k in range(d):
                c = state[base + k]
                if c:
                    pr = pre[k][c]
                    row = [add[x][y] for x, y in zip(row, pr)]
            out.extend(row)
        return tuple(out)


def _engine_for(fld: Field, dim: int):
    return _EngineChar2(fld, dim) if fld.p == 2 else _EngineGeneric(fld, dim)


class ClosedGroup:
    """The multiplicative closure of a generator list: all elements, stored
    as packed integer keys in discovery order, plus the machinery to map
    keys back to matrices."""

    def __init__(self, fld: Field, dim: int, engine, keys, key_set, generators):
        self.field = fld
        self.dim = dim
        self.engine = engine
        self.keys = keys
        self.key_set = key_set
        self.generators = list(generators)

    def __len__(self) -> int:
        return len(self.keys)

    def contains(self, mat: MatrixGF) -> bool:
        if mat.field is not self.field or mat.dim != self.dim or mat.twist:
            return False
        return self.engine.key(self.engine.pack(mat.rows)) in self.key_set

    def elements(self):
        eng = self.engine
        for key in self.keys:
            yield MatrixGF(self.field, eng.unpack(eng.state_from_key(key)))

    def generator_hash(self) -> str:
        h = hashlib.sha256()
        for g in self.generators:
            h.update(g.key())
        return h.hexdigest()[:12]


def close_group(generators, cap: int = DEFAULT_CAP) -> ClosedGroup:
    """Breadth-first closure of the generated group.

    Raises ResourceError as soon as more than `cap` elements are seen.
    """
    gens = list(generators)
    if not gens:
        raise DomainError("no generators")
    fld, dim = gens[0].field, gens[0].dim
    for g in gens:
        if g.field is not fld or g.dim != dim:
            raise DomainError("generators live in different matrix rings")
        if g.twist:
            raise DomainError("closure of twisted elements is out of scope")
        g.inverse()  # raises on singular input
    if cap < 1:
        raise DomainError(f"cap must be positive, got {cap}")
    eng = _engine_for(fld, dim)
    pres = [eng.precompute(eng.pack(g.rows)) for g in gens]
    id_key = eng.key(eng.identity)
    keys = [id_key]
    key_set = {id_key}
    cursor = 0
    while cursor < len(keys):
        state = eng.state_from_key(keys[cursor])
        cursor += 1
        for pre in pres:
            nxt = eng.mul(state, pre)
            k = eng.key(nxt)
            if k not in key_set:
                if len(keys) >= cap:
                    raise ResourceError(
                        f"closure exceeded the cap of {cap} elements"
                    )
                key_set.add(k)
                keys.append(k)
    return ClosedGroup(fld, dim, eng, keys, key_set, gens)


def centre_of(group: ClosedGroup) -> list[MatrixGF]:
    """All elements commuting with every generator.  For a closed group this
    is exactly the centre (computed, never assumed)."""
    eng = group.engine
    gen_states = [eng.pack(g.rows) for g in group.generators]
    gen_pres = [eng.precompute(s) for s in gen_states]
    gen_t_pres = [
        eng.precompute(eng.pack(g.transpose().rows)) for g in group.generators
    ]

    def transpose_state(state):
        rows = eng.unpack(state)
        return eng.pack(tuple(zip(*rows)))

    # z commutes with g  iff  z*g == (z^T right-multiplied by g^T)^T
    survivors = group.keys
    for pre, pre_t in zip(gen_pres, gen_t_pres):
        nxt = []
        for key in survivors:
            state = eng.state_from_key(key)
            zg = eng.mul(state, pre)
            gz = transpose_state(eng.mul(transpose_state(state), pre_t))
            if zg == gz:
                nxt.append(key)
        survivors = nxt
    return [
        MatrixGF(group.field, eng.unpack(eng.state_from_key(k)))
        for k in survivors
    ]


def _validated_centre_keys(eng, generators, centre) -> set:
    """Key set for a centre argument, after checking it is made of elements
    central for the generators, is closed under product, and contains the
    identity."""
    if centre is None:
        return {eng.key(eng.identity)}
    mats = list(centre.elements() if isinstance(centre, ClosedGroup) else centre)
    if not mats:
        raise DomainError("centre argument is empty")
    fld, dim = mats[0].field, mats[0].dim
    ident = MatrixGF.identity(fld, dim)
    if ident not in mats:
        raise DomainError("centre must contain the identity")
    for z in mats:
        for g in generators:
            if z * g != g * z:
                raise DomainError(
                    "centre argument contains a non-central element"
                )
    keyset = {eng.key(eng.pack(z.rows)) for z in mats}
    for a in mats:
        for b in mats:
            if eng.key(eng.pack((a * b).rows)) not in keyset:
                raise DomainError("centre argument is not closed under product")
    return keyset


def _centre_keys(group: ClosedGroup, centre) -> set:
    keyset = _validated_centre_keys(group.engine, group.generators, centre)
    if not keyset <= group.key_set:
        raise DomainError("centre argument is not inside the group")
    return keyset


def element_orders(group: ClosedGroup, centre=None) -> SpectrumGens:
    """The set of element orders of group/centre, as a reduced generator
    list.  With centre None this is the plain order spectrum."""
    eng = group.engine
    centre_keys = _centre_keys(group, centre)
    seen: set[int] = set()
    for key in group.keys:
        if key in centre_keys:
            continue
        state = eng.state_from_key(key)
        pre = eng.precompute(state)
        acc = state
        order = 1
        while eng.key(acc) not in centre_keys:
            acc = eng.mul(acc, pre)
            order += 1
            if order > len(group.keys):
                raise AssertionError("internal: order exceeds group size")
        seen.add(order)
    if not seen:
        seen.add(1)
    label = f"enumerated[{len(group.keys)}]"
    return spectra.reduce_gens(seen, label=label)


# ---------------------------------------------------------------------------
# standard generators


def _symplectic_form(fld: Field, dim: int) -> MatrixGF:
    """The alternating form: antidiagonal, +1 above the middle, -1 below."""
    half = dim // 2
    rows = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        rows[i][dim - 1 - i] = 1 if i < half else fld.neg(1)
    return MatrixGF(fld, rows)


def _transvection(fld: Field, dim: int, v, lam: int) -> MatrixGF:
    """x -> x + lam * B(x, v) * v for the alternating form B; preserves the
    form for every v and lam."""
    j = _symplectic_form(fld, dim)
    jv = [_dot(fld, row, v) for row in j.rows]
    rows = [
        tuple(
            fld.add(1 if i == k else 0, fld.mul(lam, fld.mul(v[i], jv[k])))
            for k in range(dim)
        )
        for i in range(dim)
    ]
    return MatrixGF(fld, rows)


def preserves_symplectic_form(mat: MatrixGF) -> bool:
    j = _symplectic_form(mat.field, mat.dim)
    return mat.transpose() * j * mat == j


def _hermitian_form(fld: Field, dim: int) -> MatrixGF:
    rows = [[0] * dim for _ in range(dim)]
    for i in range(dim):
        rows[i][dim - 1 - i] = 1
    return MatrixGF(fld, rows)


def preserves_hermitian_form(mat: MatrixGF) -> bool:
    """Whether A * J * conj(A)^T = J for the antidiagonal hermitian form."""
    j = _hermitian_form(mat.field, mat.dim)
    return mat * j * mat.conj_entries().transpose() == j


def _det(mat: MatrixGF) -> int:
    f, d = mat.field, mat.dim
    rows = [list(r) for r in mat.rows]
    det = 1
    for col in range(d):
        pivot = next((r for r in range(col, d) if rows[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = f.neg(det)
        det = f.mul(det, rows[col][col])
        inv_p = f.inv(rows[col][col])
        for r in range(col + 1, d):
            if rows[r][col]:
                c = f.mul(inv_p, rows[r][col])
                rows[r] = [
                    f.add(e, f.neg(f.mul(c, pe)))
                    for e, pe in zip(rows[r], rows[col])
                ]
    return det


def _gf_basis(fld: Field) -> list[int]:
    """Codes of 1, x, x^2, ... : a GF(p)-basis of the field."""
    return [fld.p**i for i in range(fld.m)]


def _sp_generators(fld: Field, dim: int) -> list[MatrixGF]:
    """Symplectic transvections along the unit vectors and consecutive sums,
    with scalars running over a GF(p)-basis.  Verified by closure at the
    supported parameters to generate Sp(dim, q)."""
    vectors = []
    for i in range(dim):
        vectors.append(tuple(1 if j == i else 0 for j in range(dim)))
    for i in range(dim - 1):
        vectors.append(tuple(1 if j in (i, i + 1) else 0 for j in range(dim)))
    gens = []
    for v in vectors:
        for lam in _gf_basis(fld):
            gens.append(_transvection(fld, dim, v, lam))
    return [g for g in gens if not g.is_identity()]


def _su4_generators(fld: Field) -> list[MatrixGF]:
    """Generators of SU_4(q) inside SL_4(q^2), q even: two unitary
    transvections, two paired root elements, the form matrix (an element of
    the group) and a torus element."""
    one = 1
    s = fld.gen
    sq = fld.conj(s)
    neg_sq = fld.neg(sq)

    def mat(entries):
        return MatrixGF(fld, entries)

    e = [[one if i == j else 0 for j in range(4)] for i in range(4)]

    def with_entry(extra):
        rows = [list(r) for r in e]
        for (i, j), val in extra.items():
            rows[i][j] = val
        return mat(rows)

    x_t = with_entry({(0, 3): one})
    x_s = with_entry({(0, 3): _subfield_code(fld)})
    y_s = with_entry({(0, 1): s, (2, 3): neg_sq})
    z_s = with_entry({(0, 2): s, (1, 3): neg_sq})
    j = _hermitian_form(fld, 4)
    a = fld.gen
    d_a = mat([
        [a, 0, 0, 0],
        [0, fld.inv(a), 0, 0],
        [0, 0, fld.conj(a), 0],
        [0, 0, 0, fld.inv(fld.conj(a))],
    ])
    return [x_t, x_s, y_s, z_s, j, d_a]


def _subfield_code(fld: Field) -> int:
    """A generator of the index-2 subfield's multiplicative group."""
    sub = fld.sub_q()
    # gen^((q^2-1)/(q-1) ... ) lands in the subfield; its order is sub-1
    exponent = (fld.q - 1) // (sub - 1)
    return fld.pow(fld.gen, exponent)


_GOPLUS_4_2_ROWS = (
    # derived from the exhaustive filter over GF(2)^{4x4}: two elements
    # whose closure is the full 72-element orthogonal group of plus type
    ((0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)),
    ((0, 0, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1), (0, 1, 0, 0)),
)


def quadratic_form_plus_4(fld: Field, vec) -> int:
    """The plus-type quadratic form x1 x2 + x3 x4 on a 4-vector."""
    x1, x2, x3, x4 = vec
    return fld.add(fld.mul(x1, x2), fld.mul(x3, x4))


def preserves_quadratic_form_plus_4(mat: MatrixGF) -> bool:
    fld = mat.field
    cols = tuple(zip(*mat.rows))
    for code in range(fld.q**4):
        c = code
        vec = []
        for _ in range(4):
            vec.append(c % fld.q)
            c //= fld.q
        image = [
            _dot(fld, vec, col) for col in cols
        ]
        if quadratic_form_plus_4(fld, image) != quadratic_form_plus_4(fld, vec):
            return False
    return True


SUPPORTED_GENERATORS = (
    ("Sp", 4, 2),
    ("Sp", 4, 3),
    ("Sp", 4, 4),
    ("Sp", 6, 2),
    ("Sp", 6, 3),
    ("SU", 4, 2),
    ("SU", 4, 4),
    ("SU", 4, 8),
    ("SU", 4, 16),
    ("SU", 4, 32),
    ("GOplus", 4, 2),
)


def central_scalars(family: str, dim: int, q: int) -> list[MatrixGF]:
    """The scalar matrices lying in the named matrix group: +-I for Sp,
    the scalars z with z^(q+1) = z^dim = 1 for SU, only I for GO+(4, 2).
    Quotienting by them turns matrix orders into orders in the simple
    (or for GO+ the plain) quotient."""
    if (family, dim, q) not in SUPPORTED_GENERATORS:
        raise DomainError(
            f"no standard generators for ({family}, {dim}, {q}); "
            f"supported: {SUPPORTED_GENERATORS}"
        )
    if family == "SU":
        fld = field_of_order(q * q)
        codes = [
            z
            for z in range(1, fld.q)
            if fld.pow(z, q + 1) == 1 and fld.pow(z, dim) == 1
        ]
    else:
        fld = field_of_order(q)
        codes = [1] if family != "Sp" or fld.p == 2 else [1, fld.neg(1)]
    out = []
    for z in codes:
        rows = [[z if i == j else 0 for j in range(dim)] for i in range(dim)]
        out.append(MatrixGF(fld, rows))
    return out


def standard_generators(family: str, dim: int, q: int) -> list[MatrixGF]:
    """Matrices generating the named group: Sp(dim, q), SU(4, q) (as
    matrices over GF(q^2)), or the full orthogonal group GO+(4, 2)."""
    if (family, dim, q) not in SUPPORTED_GENERATORS:
        raise DomainError(
            f"no standard generators for ({family}, {dim}, {q}); "
            f"supported: {SUPPORTED_GENERATORS}"
        )
    if family == "Sp":
        gens = _sp_generators(field_of_order(q), dim)
        for g in gens:
            if not preserves_symplectic_form(g):
                raise AssertionError("internal: transvection broke the form")
        return gens
    if family == "SU":
        fld = field_of_order(q * q)
        gens = _su4_generators(fld)
        for g in gens:
            if not preserves_hermitian_form(g) or _det(g) != 1:
                raise AssertionError("internal: generator outside SU4")
        return gens
    fld = field_of_order(q)
    gens = [MatrixGF(fld, rows) for rows in _GOPLUS_4_2_ROWS]
    for g in gens:
        if not preserves_quadratic_form_plus_4(g):
            raise AssertionError("internal: generator outside GO+4")
    return gens


# ---------------------------------------------------------------------------
# the twisted element of order 8


def _twisted_b(fld: Field, t: int) -> MatrixGF:
    # For I + a E12 + b E23 + c E34 + d E13 to preserve the hermitian form
    # one needs a = conj(c), b in the subfield, and d = a * conj(b); with
    # a = t, b = 1, c = t^q that forces the (1,3) entry to be t.
    return MatrixGF(
        fld,
        (
            (1, t, t, 0),
            (0, 1, 1, 0),
            (0, 0, 1, fld.conj(t)),
            (0, 0, 0, 1),
        ),
        twist=1,
    )


def twisted_order_with_t(q: int, t: int) -> int:
    """Order of the twisted element (B(t), gamma) in SU_4(q).2, for any
    t in GF(q^2) outside GF(q)."""
    from . import arith

    fact = arith.factorize(q)
    if len(fact.factors) != 1 or fact.primes != (2,):
        raise DomainError(f"q must be a power of 2, got {q}")
    fld = field(2, 2 * fact.factors[2])
    if not 0 <= t < fld.q:
        raise DomainError(f"t code {t} out of range for {fld}")
    if fld.conj(t) == t:
        raise DomainError(f"t code {t} lies in the subfield GF({q})")
    b = _twisted_b(fld, t)
    untwisted = MatrixGF(fld, b.rows)
    if not preserves_hermitian_form(untwisted) or _det(untwisted) != 1:
        raise AssertionError("internal: B(t) outside SU4")
    order = b.order()
    # the fourth power must be the unipotent matrix I + (t^2 + conj(t)^2) E14
    fourth = b * b * b * b
    c = fld.add(fld.mul(t, t), fld.mul(fld.conj(t), fld.conj(t)))
    expected = MatrixGF(
        fld,
        (
            (1, 0, 0, c),
            (0, 1, 0, 0),
            (0, 0, 1, 0),
            (0, 0, 0, 1),
        ),
    )
    if fourth.twist != 0 or fourth != expected:
        raise AssertionError("internal: (B gamma)^4 has unexpected shape")
    if c == 0:
        raise AssertionError("internal: t^2 + conj(t)^2 vanished")
    return order


def twisted_order_b_gamma(q: int) -> int:
    """Order of (B, gamma) for the canonical choice of t (a primitive
    element of GF(q^2), never in the subfield)."""
    from . import arith

    fact = arith.factorize(q)
    if len(fact.factors) != 1 or fact.primes != (2,):
        raise DomainError(f"q must be a power of 2, got {q}")
    fld = field(2, 2 * fact.factors[2])
    return twisted_order_with_t(q, fld.gen)


# ---------------------------------------------------------------------------
# sampling and cached enumeration


def sample_orders(generators, count: int, seed: int, centre=None) -> tuple[int, ...]:
    """Orders of `count` seeded-random words in the generators (modulo the
    optional centre), as a sorted tuple.  Deterministic for a fixed seed."""
    gens = list(generators)
    if not gens:
        raise DomainError("no generators")
    if count < 1:
        raise DomainError(f"count must be positive, got {count}")
    fld, dim = gens[0].field, gens[0].dim
    for g in gens:
        if g.field is not fld or g.dim != dim or g.twist:
            raise DomainError("generators must be untwisted, same ring")
    eng = _engine_for(fld, dim)
    centre_keys = _validated_centre_keys(eng, gens, centre)
    pres = [eng.precompute(eng.pack(g.rows)) for g in gens]
    rng = random.Random(seed)
    seen = set()
    for _ in range(count):
        length = rng.randint(2, 24)
        state = eng.identity
        for _ in range(length):
            state = eng.mul(state, rng.choice(pres))
        if eng.key(state) in centre_keys:
            seen.add(1)
            continue
        pre = eng.precompute(state)
        acc = state
        order = 1
        while eng.key(acc) not in centre_keys:
            acc = eng.mul(acc, pre)
            order += 1
            if order > _ORDER_BOUND:
                raise ResourceError("sampled element order exceeds bound")
        seen.add(order)
    return tuple(sorted(seen))


def enumerate_group(
    family: str,
    dim: int,
    q: int,
    cap: int = DEFAULT_CAP,
    cache_dir: str | None = None,
):
    """Close the standard generators, compute the centre, and return
    (group order, centre size, coset-order spectrum).  Results are cached
    on disk keyed by the generator set when a cache directory is available
    (argument or ORDSPEC_CACHE_DIR)."""
    gens = standard_generators(family, dim, q)
    h = hashlib.sha256()
    for g in gens:
        h.update(g.key())
    gen_hash = h.hexdigest()[:12]
    cache_dir = cache_dir or os.environ.get("ORDSPEC_CACHE_DIR")
    cache_path = None
    if cache_dir:
        cache_path = os.path.join(
            cache_dir, f"{family}{dim}q{q}-{gen_hash}.json"
        )
        if os.path.exists(cache_path):
            try:
                with open(cache_path, "r", encoding="utf-8") as fh:
                    obj = json.load(fh)
                spec = spectra.parse_spectrum(
                    json.dumps(obj["spectrum"], sort_keys=True, separators=(",", ":"))
                )
                return int(obj["group_order"]), int(obj["centre_size"]), spec
            except (KeyError, ValueError, UsageError) as exc:
                raise UsageError(f"corrupt cache file {cache_path}: {exc}") from exc
    group = close_group(gens, cap=cap)
    centre = centre_of(group)
    spec = element_orders(group, centre if len(centre) > 1 else None)
    if cache_path:
        os.makedirs(cache_dir, exist_ok=True)
        obj = {
            "group_order": str(len(group)),
            "centre_size": len(centre),
            "spectrum": json.loads(spectra.serialize(spec)),
        }
        with open(cache_path, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, sort_keys=True, separators=(",", ":"))
    return len(group), len(centre), spec
