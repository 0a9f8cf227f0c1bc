"""Finite-dimensional (co)algebras, Hopf data, cocycles and deformations.

Everything is held as sparse structure constants over a cyclotomic field:

* algebra elements are dicts {basis index: coefficient},
* tensors in H (x) H or H (x) A are dicts keyed by index pairs,
* multilinear forms on H live in ConvForm and multiply by convolution.

Structures are treated as immutable once built; verifiers never mutate
their arguments and report failures with explicit witnesses instead of
raising.
"""

from __future__ import annotations

import json
import random

from .cyclofield import CyclotomicField, CyclotomicNumber
from .exactlinalg import Matrix, Subspace, kernel_of_sparse_columns, rank
from .reporting import VerificationReport

# ---------------------------------------------------------------------------
# sparse vector helpers
# ---------------------------------------------------------------------------


def vec_add_into(acc: dict, key, c) -> None:
    got = acc.get(key)
    if got is None:
        if not c.is_zero():
            acc[key] = c
    else:
        s = got + c
        if s.is_zero():
            del acc[key]
        else:
            acc[key] = s


def vec_scale(v: dict, c) -> dict:
    if c.is_zero():
        return {}
    return {k: c * x for k, x in v.items()}


def vec_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        vec_add_into(out, k, -c)
    return out


def vec_eq(a: dict, b: dict) -> bool:
    if len(a) != len(b):
        return False
    for k, c in a.items():
        d = b.get(k)
        if d is None or d != c:
            return False
    return True


def vec_str(v: dict, labels=None) -> str:
    if not v:
        return "0"
    items = sorted(v.items(), key=lambda kv: repr(kv[0]))
    name = (lambda k: labels[k]) if labels else (lambda k: str(k))
    return " + ".join(f"({c})*{name(k)}" for k, c in items)


# ---------------------------------------------------------------------------
# algebras and coalgebras by structure constants
# ---------------------------------------------------------------------------


class FiniteAlgebra:
    """Associative unital algebra given by a sparse multiplication table."""

    __slots__ = ("field", "dim", "labels", "mul", "unit", "_index")

    def __init__(self, fld: CyclotomicField, labels, mul, unit):
        self.field = fld
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.mul = mul  # dict (i, j) -> tuple of (k, coeff); missing = 0
        self.unit = {k: c for k, c in unit.items() if not c.is_zero()}
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    def index(self, label) -> int:
        return self._index[label]

    def basis_vec(self, i) -> dict:
        return {i: self.field.one}

    def unit_vec(self) -> dict:
        return dict(self.unit)

    def mul_basis(self, i, j):
        return self.mul.get((i, j), ())

    def mul_vec(self, a: dict, b: dict) -> dict:
        out: dict = {}
        mul = self.mul
        for i, ca in a.items():
            for j, cb in b.items():
                ent = mul.get((i, j))
                if ent:
                    c = ca * cb
                    for k, ck in ent:
                        vec_add_into(out, k, c * ck)
        return out

    def pow_vec(self, a: dict, n: int) -> dict:
        out = self.unit_vec()
        for _ in range(n):
            out = self.mul_vec(out, a)
        return out

    def describe(self, v: dict) -> str:
        return vec_str(v, self.labels)


class FiniteCoalgebra:
    """Coalgebra given by sparse comultiplication and counit tables."""

    __slots__ = ("field", "dim", "labels", "comul", "counit")

    def __init__(self, fld, labels, comul, counit):
        self.field = fld
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self.comul = comul  # dict i -> tuple of (j, k, coeff)
        self.counit = {k: c for k, c in counit.items() if not c.is_zero()}

    def comul_vec(self, v: dict) -> dict:
        out: dict = {}
        for i, c in v.items():
            for j, k, d in self.comul.get(i, ()):
                vec_add_into(out, (j, k), c * d)
        return out

    def counit_vec(self, v: dict) -> CyclotomicNumber:
        out = self.field.zero
        for i, c in v.items():
            e = self.counit.get(i)
            if e is not None:
                out = out + c * e
        return out


class HopfAlgebraData:
    """Bundled algebra, coalgebra and antipode on one basis."""

    __slots__ = ("algebra", "coalgebra", "antipode", "grouplikes", "degrees",
                 "_comul_reverse")

    def __init__(self, algebra: FiniteAlgebra, coalgebra: FiniteCoalgebra,
                 antipode: dict, degrees=None):
        assert algebra.dim == coalgebra.dim
        assert algebra.labels == coalgebra.labels
        self.algebra = algebra
        self.coalgebra = coalgebra
        self.antipode = antipode  # dict i -> dict j -> coeff
        self.degrees = tuple(degrees) if degrees is not None else None
        self.grouplikes = tuple(self._scan_grouplikes())
        self._comul_reverse = None

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    def _scan_grouplikes(self):
        one = self.field.one
        for i in range(self.dim):
            ent = self.coalgebra.comul.get(i, ())
            if len(ent) == 1:
                j, k, c = ent[0]
                if j == i and k == i and c == one \
                        and self.coalgebra.counit.get(i) == one:
                    yield i

    def antipode_vec(self, v: dict) -> dict:
        out: dict = {}
        for i, c in v.items():
            for j, d in self.antipode.get(i, {}).items():
                vec_add_into(out, j, c * d)
        return out

    def comul_reverse(self):
        """dict (j, k) -> tuple of (i, c) with Delta(e_i) containing c*(e_j x e_k)."""
        if self._comul_reverse is None:
            rev: dict = {}
            for i, ent in self.coalgebra.comul.items():
                for j, k, c in ent:
                    rev.setdefault((j, k), []).append((i, c))
            self._comul_reverse = {k: tuple(v) for k, v in rev.items()}
        return self._comul_reverse


# ---------------------------------------------------------------------------
# tensor-square products (for bialgebra / comodule verification)
# ---------------------------------------------------------------------------


def t2_mul(alg1: FiniteAlgebra, alg2: FiniteAlgebra, A: dict, B: dict) -> dict:
    """Multiply two elements of alg1 (x) alg2, keys are (i, j) pairs."""
    out: dict = {}
    m1, m2 = alg1.mul, alg2.mul
    for (i1, j1), c1 in A.items():
        for (i2, j2), c2 in B.items():
            e1 = m1.get((i1, i2))
            if not e1:
                continue
            e2 = m2.get((j1, j2))
            if not e2:
                continue
            c = c1 * c2
            for k1, d1 in e1:
                cd = c * d1
                for k2, d2 in e2:
                    vec_add_into(out, (k1, k2), cd * d2)
    return out


def _sample_tuples(rng, dim, arity, count):
    return [tuple(rng.randrange(dim) for _ in range(arity)) for _ in range(count)]


def _witness(labels, tup, lhs, rhs):
    return {
        "tuple": [labels[t] for t in tup],
        "lhs": vec_str(lhs, labels),
        "rhs": vec_str(rhs, labels),
    }


# ---------------------------------------------------------------------------
# verifiers
# ---------------------------------------------------------------------------


def verify_algebra(alg: FiniteAlgebra, mode="exhaustive", sample_count=10000,
                   seed=0, always_indices=()) -> VerificationReport:
    rep = VerificationReport({"mode": mode, "seed": seed, "dim": alg.dim})
    labels = alg.labels
    one = alg.unit_vec()

    bad = []
    for i in range(alg.dim):
        e = alg.basis_vec(i)
        if not vec_eq(alg.mul_vec(one, e), e) or not vec_eq(alg.mul_vec(e, one), e):
            bad.append(labels[i])
    rep.add("algebra-unit", "unital-multiplication", not bad,
            {"elements": bad[:5], "failing": len(bad)} if bad else None)

    if mode == "exhaustive":
        triples = [(i, j, k) for i in range(alg.dim)
                   for j in range(alg.dim) for k in range(alg.dim)]
    else:
        rng = random.Random(seed)
        triples = [(i, j, k) for i in always_indices
                   for j in always_indices for k in always_indices]
        triples += _sample_tuples(rng, alg.dim, 3, sample_count)
    bad = []
    for (i, j, k) in triples:
        ij = {m: c for m, c in alg.mul_basis(i, j)}
        jk = {m: c for m, c in alg.mul_basis(j, k)}
        lhs = alg.mul_vec(ij, alg.basis_vec(k))
        rhs = alg.mul_vec(alg.basis_vec(i), jk)
        if not vec_eq(lhs, rhs):
            bad.append(_witness(labels, (i, j, k), lhs, rhs))
    rep.add("algebra-associativity", "associative-multiplication", not bad,
            {"examples": bad[:3], "failing": len(bad),
             "checked": len(triples)} if bad else None)
    return rep


def verify_coalgebra(co: FiniteCoalgebra) -> VerificationReport:
    rep = VerificationReport({"dim": co.dim})
    labels = co.labels
    bad = []
    for i in range(co.dim):
        lhs: dict = {}
        rhs: dict = {}
        for j, k, c in co.comul.get(i, ()):
            for j1, j2, d in co.comul.get(j, ()):
                vec_add_into(lhs, (j1, j2, k), c * d)
            for k1, k2, d in co.comul.get(k, ()):
                vec_add_into(rhs, (j, k1, k2), c * d)
        if not vec_eq(lhs, rhs):
            bad.append(labels[i])
    rep.add("coalgebra-coassociativity", "coassociative-comultiplication",
            not bad, {"elements": bad[:5], "failing": len(bad)} if bad else None)

    bad = []
    for i in range(co.dim):
        left: dict = {}
        right: dict = {}
        for j, k, c in co.comul.get(i, ()):
            ej = co.counit.get(j)
            if ej is not None:
                vec_add_into(left, k, c * ej)
            ek = co.counit.get(k)
            if ek is not None:
                vec_add_into(right, j, c * ek)
        target = {i: co.field.one}
        if not vec_eq(left, target) or not vec_eq(right, target):
            bad.append(labels[i])
    rep.add("coalgebra-counit", "counit-axiom", not bad,
            {"elements": bad[:5], "failing": len(bad)} if bad else None)
    return rep


def verify_hopf(H: HopfAlgebraData, mode="exhaustive", sample_count=10000,
                seed=0, always_indices=()) -> VerificationReport:
    """Associativity, coassociativity, bialgebra compatibility, antipode."""
    alg, co = H.algebra, H.coalgebra
    labels = alg.labels
    rep = VerificationReport({"mode": mode, "seed": seed, "dim": alg.dim})

    n_assoc = sample_count // 2
    n_pairs = sample_count - n_assoc
    rep.extend(verify_algebra(alg, mode, n_assoc, seed, always_indices))
    rep.extend(verify_coalgebra(co))

    # bialgebra: Delta and counit are algebra maps, Delta(1) = 1 x 1
    one = alg.unit_vec()
    d1 = co.comul_vec(one)
    t_one = t2_mul(alg, alg, d1, d1)  # placeholder to keep shapes honest
    unit_tensor: dict = {}
    for i, c in one.items():
        for j, d in one.items():
            vec_add_into(unit_tensor, (i, j), c * d)
    rep.add("bialgebra-unit", "comultiplication-of-unit",
            vec_eq(d1, unit_tensor) and vec_eq(t_one, unit_tensor),
            None if vec_eq(d1, unit_tensor) else
            {"delta_1": vec_str(d1), "expected": vec_str(unit_tensor)})
    rep.add("bialgebra-counit-unit", "counit-of-unit",
            co.counit_vec(one) == alg.field.one, None)

    if mode == "exhaustive":
        pairs = [(i, j) for i in range(alg.dim) for j in range(alg.dim)]
    else:
        rng = random.Random(seed + 1)
        pairs = [(i, j) for i in always_indices for j in always_indices]
        pairs += _sample_tuples(rng, alg.dim, 2, n_pairs)
    bad_mult, bad_counit = [], []
    for (i, j) in pairs:
        prod = {m: c for m, c in alg.mul_basis(i, j)}
        lhs = co.comul_vec(prod)
        rhs = t2_mul(alg, alg, co.comul_vec(alg.basis_vec(i)),
                     co.comul_vec(alg.basis_vec(j)))
        if not vec_eq(lhs, rhs):
            bad_mult.append([labels[i], labels[j]])
        ei = co.counit.get(i, alg.field.zero)
        ej = co.counit.get(j, alg.field.zero)
        if co.counit_vec(prod) != ei * ej:
            bad_counit.append([labels[i], labels[j]])
    rep.add("bialgebra-multiplicativity", "comultiplication-algebra-map",
            not bad_mult, {"examples": bad_mult[:3], "failing": len(bad_mult),
                           "checked": len(pairs)} if bad_mult else None)
    rep.add("bialgebra-counit-multiplicative", "counit-algebra-map",
            not bad_counit, {"examples": bad_counit[:3],
                             "failing": len(bad_counit)} if bad_counit else None)

    # antipode axioms on every basis element
    bad = []
    for i in range(alg.dim):
        eps = co.counit.get(i, alg.field.zero)
        target = vec_scale(one, eps)
        left: dict = {}
        right: dict = {}
        for j, k, c in co.comul.get(i, ()):
            sj = H.antipode_vec({j: c})
            left_term = alg.mul_vec(sj, alg.basis_vec(k))
            for m, d in left_term.items():
                vec_add_into(left, m, d)
            sk = H.antipode_vec({k: c})
            right_term = alg.mul_vec(alg.basis_vec(j), sk)
            for m, d in right_term.items():
                vec_add_into(right, m, d)
        if not vec_eq(left, target) or not vec_eq(right, target):
            bad.append({"element": labels[i],
                        "m(S x id)Delta": vec_str(left, labels),
                        "m(id x S)Delta": vec_str(right, labels),
                        "expected": vec_str(target, labels)})
    rep.add("hopf-antipode", "antipode-axioms", not bad,
            {"examples": bad[:3], "failing": len(bad)} if bad else None)

    expected = set(H.grouplikes)
    actual = set(HopfAlgebraData(alg, co, H.antipode).grouplikes)
    rep.add("hopf-grouplikes", "grouplike-cache", expected == actual,
            None if expected == actual else
            {"cached": sorted(expected), "scanned": sorted(actual)})
    return rep


# ---------------------------------------------------------------------------
# multilinear forms under convolution
# ---------------------------------------------------------------------------


class ConvForm:
    """An n-linear form on H, multiplied by convolution through Delta.

    arity 1 gives linear functionals, arity 2 bilinear forms (cocycles).
    """

    __slots__ = ("hopf", "arity", "coords")

    def __init__(self, hopf: HopfAlgebraData, arity: int, coords: dict):
        self.hopf = hopf
        self.arity = arity
        self.coords = {k: c for k, c in coords.items() if not c.is_zero()}

    @classmethod
    def unit(cls, hopf, arity):
        """Tensor power of the counit: the convolution unit."""
        counit = hopf.coalgebra.counit
        coords: dict = {}
        keys = [()]
        for _ in range(arity):
            keys = [k + (i,) for k in keys for i in counit]
        for key in keys:
            c = hopf.field.one
            for i in key:
                c = c * counit[i]
            coords[key] = c
        return cls(hopf, arity, coords)

    @classmethod
    def tensor(cls, f: "ConvForm", g: "ConvForm"):
        assert f.hopf is g.hopf
        coords: dict = {}
        for kf, cf in f.coords.items():
            for kg, cg in g.coords.items():
                coords[kf + kg] = cf * cg
        return cls(f.hopf, f.arity + g.arity, coords)

    def __call__(self, *idx):
        assert len(idx) == self.arity
        return self.coords.get(tuple(idx), self.hopf.field.zero)

    def eval_vecs(self, *vecs) -> CyclotomicNumber:
        assert len(vecs) == self.arity
        out = self.hopf.field.zero
        for key, c in self.coords.items():
            term = c
            dead = False
            for slot, i in enumerate(key):
                v = vecs[slot].get(i)
                if v is None:
                    dead = True
                    break
                term = term * v
            if not dead:
                out = out + term
        return out

    def is_zero(self) -> bool:
        return not self.coords

    def __add__(self, other):
        assert other.hopf is self.hopf and other.arity == self.arity
        out = dict(self.coords)
        for k, c in other.coords.items():
            vec_add_into(out, k, c)
        return ConvForm(self.hopf, self.arity, out)

    def __neg__(self):
        return ConvForm(self.hopf, self.arity,
                        {k: -c for k, c in self.coords.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "ConvForm":
        return ConvForm(self.hopf, self.arity, vec_scale(self.coords, c))

    def __mul__(self, other):
        return convolution(self, other)

    def conv_pow(self, n: int) -> "ConvForm":
        out = ConvForm.unit(self.hopf, self.arity)
        for _ in range(n):
            out = convolution(out, self)
        return out

    def __eq__(self, other):
        return (isinstance(other, ConvForm) and other.hopf is self.hopf
                and other.arity == self.arity
                and vec_eq(self.coords, other.coords))

    def __repr__(self):
        return f"<ConvForm arity {self.arity}, {len(self.coords)} terms>"


def convolution(f: ConvForm, g: ConvForm) -> ConvForm:
    """(f*g)(h) = f(h_(1)) g(h_(2)) slotwise, driven by both supports."""
    if not isinstance(f, ConvForm) or not isinstance(g, ConvForm):
        raise TypeError("convolution needs two ConvForm arguments")
    if f.hopf is not g.hopf:
        raise ValueError("convolution across different Hopf data")
    if f.arity != g.arity:
        raise ValueError(f"convolution kind mismatch: arity {f.arity} vs {g.arity}")
    rev = f.hopf.comul_reverse()
    out: dict = {}
    for kf, cf in f.coords.items():
        for kg, cg in g.coords.items():
            sources = []
            dead = False
            for s in range(f.arity):
                cand = rev.get((kf[s], kg[s]))
                if not cand:
                    dead = True
                    break
                sources.append(cand)
            if dead:
                continue
            base = cf * cg
            stack = [((), base)]
            for cand in sources:
                stack = [(key + (i,), c * d) for key, c in stack for i, d in cand]
            for key, c in stack:
                vec_add_into(out, key, c)
    return ConvForm(f.hopf, f.arity, out)


def convolution_inverse(sigma: ConvForm, check="full", sample_count=2000,
                        seed=0) -> ConvForm:
    """Inverse of a form that differs from the unit by a nilpotent part.

    With nu = unit - sigma, requires nu^N = 0 (N = field order) and returns
    the geometric series; the two-sided inverse law is then verified.
    """
    H = sigma.hopf
    N = H.field.order
    unit = ConvForm.unit(H, sigma.arity)
    nu = unit - sigma
    total = unit
    p = unit
    for _ in range(N - 1):
        p = convolution(p, nu)
        total = total + p
    p = convolution(p, nu)
    if not p.is_zero():
        key = next(iter(p.coords))
        raise ValueError(
            f"form is not unit plus nilpotent: nu^{N} is nonzero at "
            f"{tuple(H.labels[i] for i in key)}"
        )
    if check == "full":
        pairs = None
    else:
        rng = random.Random(seed)
        pairs = _sample_tuples(rng, H.dim, sigma.arity, sample_count)
    _check_two_sided_inverse(sigma, total, unit, pairs)
    return total


def _check_two_sided_inverse(sigma, inv, unit, pairs):
    left = convolution(sigma, inv)
    right = convolution(inv, sigma)
    if pairs is None:
        ok = left == unit and right == unit
    else:
        z = sigma.hopf.field.zero
        ok = all(
            left.coords.get(t, z) == unit.coords.get(t, z)
            and right.coords.get(t, z) == unit.coords.get(t, z)
            for t in pairs
        )
    if not ok:
        raise ValueError("convolution inverse failed the two-sided law")


def verify_hopf_2cocycle(sigma: ConvForm, mode="exhaustive",
                         sample_count=10000, seed=0) -> VerificationReport:
    """Unitality and the 2-cocycle identity

    sigma(a1, b1) sigma(a2 b2, c) = sigma(b1, c1) sigma(a, b2 c2).
    """
    assert sigma.arity == 2
    H = sigma.hopf
    alg, co = H.algebra, H.coalgebra
    labels = alg.labels
    zero = H.field.zero
    rep = VerificationReport({"mode": mode, "seed": seed,
                              "sample_count": None if mode == "exhaustive"
                              else sample_count})

    unit_vec_ = alg.unit_vec()
    bad = []
    for i in range(alg.dim):
        eps = co.counit.get(i, zero)
        lhs = sigma.eval_vecs(alg.basis_vec(i), unit_vec_)
        rhs = sigma.eval_vecs(unit_vec_, alg.basis_vec(i))
        if lhs != eps or rhs != eps:
            bad.append(labels[i])
    rep.add("cocycle-unital", "cocycle-unitality", not bad,
            {"elements": bad[:5], "failing": len(bad)} if bad else None)

    if mode == "exhaustive":
        triples = [(a, b, c) for a in range(alg.dim)
                   for b in range(alg.dim) for c in range(alg.dim)]
    else:
        rng = random.Random(seed)
        triples = _sample_tuples(rng, alg.dim, 3, sample_count)

    sig = sigma.coords
    comul = co.comul
    mul = alg.mul
    bad = []
    for (a, b, c) in triples:
        lhs = zero
        for a1, a2, ca in comul.get(a, ()):
            for b1, b2, cb in comul.get(b, ()):
                s1 = sig.get((a1, b1))
                if s1 is None:
                    continue
                ent = mul.get((a2, b2))
                if not ent:
                    continue
                acc = zero
                for m, cm in ent:
                    s2 = sig.get((m, c))
                    if s2 is not None:
                        acc = acc + cm * s2
                if not acc.is_zero():
                    lhs = lhs + ca * cb * s1 * acc
        rhs = zero
        for b1, b2, cb in comul.get(b, ()):
            for c1, c2, cc in comul.get(c, ()):
                s1 = sig.get((b1, c1))
                if s1 is None:
                    continue
                ent = mul.get((b2, c2))
                if not ent:
                    continue
                acc = zero
                for m, cm in ent:
                    s2 = sig.get((a, m))
                    if s2 is not None:
                        acc = acc + cm * s2
                if not acc.is_zero():
                    rhs = rhs + cb * cc * s1 * acc
        if lhs != rhs:
            bad.append({"triple": [labels[a], labels[b], labels[c]],
                        "lhs": str(lhs), "rhs": str(rhs)})
    rep.add("cocycle-identity", "hopf-2-cocycle-identity", not bad,
            {"examples": bad[:3], "failing": len(bad),
             "checked": len(triples)} if bad else None)
    return rep


# ---------------------------------------------------------------------------
# antipode solving and cocycle deformation
# ---------------------------------------------------------------------------


def _invert_grouplike(alg: FiniteAlgebra, idx: int) -> dict:
    """Inverse of a grouplike basis element via its power cycle."""
    unit = alg.unit_vec()
    prev = unit
    cur = alg.basis_vec(idx)
    for _ in range(alg.dim + 1):
        if vec_eq(cur, unit):
            return prev
        prev, cur = cur, alg.mul_vec(cur, alg.basis_vec(idx))
    raise ValueError(f"basis element {alg.labels[idx]} is not of finite order")


def solve_antipode(alg: FiniteAlgebra, co: FiniteCoalgebra) -> dict:
    """Solve m (S x id) Delta = unit counit for S on a pointed-style basis.

    Works whenever every Delta(e_m) = e_m (x) B_m + sum (solved) (x) (...)
    with B_m a scalar multiple of an invertible grouplike-type basis element;
    elements are processed by a worklist until all columns are solved.
    """
    fld = alg.field
    dim = alg.dim
    unit = alg.unit_vec()
    S: dict = {}

    pending = set(range(dim))
    while pending:
        progress = False
        for m in sorted(pending):
            ent = co.comul.get(m, ())
            deps = {a for a, b, c in ent if a != m}
            if not deps <= set(S):
                continue
            bvec: dict = {}
            rest_first = []
            for a, b, c in ent:
                if a == m:
                    vec_add_into(bvec, b, c)
                else:
                    rest_first.append((a, b, c))
            if len(bvec) != 1:
                raise ValueError(
                    f"antipode system is not triangular at {alg.labels[m]}"
                )
            (bidx, bcoef), = bvec.items()
            rhs = vec_scale(unit, co.counit.get(m, fld.zero))
            for a, b, c in rest_first:
                term = alg.mul_vec(vec_scale(S[a], c), alg.basis_vec(b))
                for k, v in term.items():
                    vec_add_into(rhs, k, -v)
            binv = vec_scale(_invert_grouplike(alg, bidx), bcoef.inverse())
            S[m] = alg.mul_vec(rhs, binv)
            pending.discard(m)
            progress = True
        if not progress:
            raise ValueError(
                "antipode system unsolvable: no triangular order covers "
                + ", ".join(alg.labels[m] for m in sorted(pending))
            )
    return S


class CocycleDeformedMultiplier:
    """On-demand products a *_sigma b = sigma(a1,b1) a2 b2 sigma^{-1}(a3,b3).

    Useful at sizes where tabulating the full deformed multiplication is
    wasteful; pair products are memoised.
    """

    def __init__(self, H: HopfAlgebraData, sigma: ConvForm,
                 sigma_inv: ConvForm):
        assert sigma.arity == 2 and sigma_inv.arity == 2
        self.H = H
        self.sigma = sigma.coords
        self.sigma_inv = sigma_inv.coords
        sigL = {a for a, b in self.sigma}
        sigR = {b for a, b in self.sigma}
        invL = {a for a, b in self.sigma_inv}
        invR = {b for a, b in self.sigma_inv}
        comul = H.coalgebra.comul
        d2 = []
        for i in range(H.dim):
            terms = []
            for j, k, c in comul.get(i, ()):
                for j1, j2, d in comul.get(j, ()):
                    terms.append((j1, j2, k, c * d))
            d2.append(terms)
        self._left = [
            tuple(t for t in terms if t[0] in sigL and t[2] in invL)
            for terms in d2
        ]
        self._right = [
            tuple(t for t in terms if t[0] in sigR and t[2] in invR)
            for terms in d2
        ]
        self._memo: dict = {}

    def basis_product(self, i: int, j: int) -> dict:
        got = self._memo.get((i, j))
        if got is not None:
            return got
        sig = self.sigma
        sinv = self.sigma_inv
        mul = self.H.algebra.mul
        out: dict = {}
        for a1, a2, a3, ca in self._left[i]:
            for b1, b2, b3, cb in self._right[j]:
                s = sig.get((a1, b1))
                if s is None:
                    continue
                t = sinv.get((a3, b3))
                if t is None:
                    continue
                ent = mul.get((a2, b2))
                if not ent:
                    continue
                c = ca * cb * s * t
                for k, ck in ent:
                    vec_add_into(out, k, c * ck)
        self._memo[(i, j)] = out
        return out

    def mul_vec(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for i, ca in a.items():
            for j, cb in b.items():
                ent = self.basis_product(i, j)
                if ent:
                    c = ca * cb
                    for k, ck in ent.items():
                        vec_add_into(out, k, c * ck)
        return out

    def pow_vec(self, a: dict, n: int) -> dict:
        out = self.H.algebra.unit_vec()
        for _ in range(n):
            out = self.mul_vec(out, a)
        return out

    # facade so the multiplier can stand in for a FiniteAlgebra in
    # minimal-polynomial and antipode computations
    @property
    def field(self):
        return self.H.field

    @property
    def dim(self):
        return self.H.dim

    @property
    def labels(self):
        return self.H.labels

    def unit_vec(self) -> dict:
        return self.H.algebra.unit_vec()

    def basis_vec(self, i) -> dict:
        return {i: self.H.field.one}


def deform_hopf(H: HopfAlgebraData, sigma: ConvForm, sigma_inv=None,
                labels=None) -> HopfAlgebraData:
    """Full cocycle deformation: new multiplication table, same coalgebra,
    antipode recomputed from the antipode linear system."""
    if sigma_inv is None:
        sigma_inv = convolution_inverse(sigma)
    mult = CocycleDeformedMultiplier(H, sigma, sigma_inv)
    table: dict = {}
    for i in range(H.dim):
        for j in range(H.dim):
            ent = mult.basis_product(i, j)
            if ent:
                table[(i, j)] = tuple(sorted(ent.items()))
    alg = FiniteAlgebra(H.field, labels or H.labels, table,
                        H.algebra.unit_vec())
    co = H.coalgebra
    if labels is not None:
        co = FiniteCoalgebra(H.field, labels, co.comul, co.counit)
    antipode = solve_antipode(alg, co)
    return HopfAlgebraData(alg, co, antipode, degrees=H.degrees)


# ---------------------------------------------------------------------------
# comodule algebras
# ---------------------------------------------------------------------------


class ComoduleAlgebra:
    """A right H-simple-candidate algebra with a left H-coaction.

    coaction maps basis index i to a tuple (((h, a), c), ...) meaning
    delta(e_i) = sum c * e_h (x) e_a.
    """

    __slots__ = ("algebra", "over", "coaction", "params")

    def __init__(self, algebra: FiniteAlgebra, over: HopfAlgebraData,
                 coaction: dict, params=None):
        self.algebra = algebra
        self.over = over
        self.coaction = coaction
        self.params = dict(params or {})

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def labels(self):
        return self.algebra.labels

    def coact_vec(self, v: dict) -> dict:
        out: dict = {}
        for i, c in v.items():
            for (h, a), d in self.coaction.get(i, ()):
                vec_add_into(out, (h, a), c * d)
        return out


def verify_comodule_algebra(A: ComoduleAlgebra, mode="exhaustive",
                            sample_count=10000, seed=0) -> VerificationReport:
    H = A.over
    alg = A.algebra
    labels = alg.labels
    rep = VerificationReport({"mode": mode, "seed": seed, "dim": alg.dim,
                              "params": {k: str(v) for k, v in A.params.items()}})

    # coassociativity and counit of the coaction, every basis element
    bad_co, bad_eps = [], []
    comul = H.coalgebra.comul
    counit = H.coalgebra.counit
    for i in range(alg.dim):
        lhs: dict = {}
        rhs: dict = {}
        eps: dict = {}
        for (h, a), c in A.coaction.get(i, ()):
            for h1, h2, d in comul.get(h, ()):
                vec_add_into(lhs, (h1, h2, a), c * d)
            for (h2, a2), d in A.coaction.get(a, ()):
                vec_add_into(rhs, (h, h2, a2), c * d)
            e = counit.get(h)
            if e is not None:
                vec_add_into(eps, a, c * e)
        if not vec_eq(lhs, rhs):
            bad_co.append(labels[i])
        if not vec_eq(eps, {i: alg.field.one}):
            bad_eps.append(labels[i])
    rep.add("comodule-coassociativity", "coaction-coassociativity", not bad_co,
            {"elements": bad_co[:5], "failing": len(bad_co)} if bad_co else None)
    rep.add("comodule-counit", "coaction-counit", not bad_eps,
            {"elements": bad_eps[:5], "failing": len(bad_eps)} if bad_eps else None)

    # unit colinear
    du = A.coact_vec(alg.unit_vec())
    target: dict = {}
    for h, c in H.algebra.unit_vec().items():
        for a, d in alg.unit_vec().items():
            vec_add_into(target, (h, a), c * d)
    rep.add("comodule-unit", "coaction-of-unit", vec_eq(du, target),
            None if vec_eq(du, target) else
            {"delta_1": vec_str(du), "expected": vec_str(target)})

    # multiplicativity of the coaction
    if mode == "exhaustive":
        pairs = [(i, j) for i in range(alg.dim) for j in range(alg.dim)]
    else:
        rng = random.Random(seed)
        pairs = _sample_tuples(rng, alg.dim, 2, sample_count)
    bad = []
    for (i, j) in pairs:
        prod = {m: c for m, c in alg.mul_basis(i, j)}
        lhs = A.coact_vec(prod)
        rhs = t2_mul(H.algebra, alg,
                     A.coact_vec(alg.basis_vec(i)),
                     A.coact_vec(alg.basis_vec(j)))
        if not vec_eq(lhs, rhs):
            bad.append([labels[i], labels[j]])
    rep.add("comodule-multiplicativity", "coaction-algebra-map", not bad,
            {"examples": bad[:3], "failing": len(bad),
             "checked": len(pairs)} if bad else None)
    return rep


def deform_comodule_algebra(A: ComoduleAlgebra, sigma: ConvForm,
                            over: HopfAlgebraData) -> ComoduleAlgebra:
    """a *_sigma b = sigma(a_(-1), b_(-1)) a_(0) b_(0); coaction unchanged."""
    assert sigma.arity == 2
    sig = sigma.coords
    alg = A.algebra
    table: dict = {}
    for i in range(alg.dim):
        di = A.coaction.get(i, ())
        for j in range(alg.dim):
            dj = A.coaction.get(j, ())
            out: dict = {}
            for (h1, a1), c1 in di:
                for (h2, a2), c2 in dj:
                    s = sig.get((h1, h2))
                    if s is None:
                        continue
                    ent = alg.mul.get((a1, a2))
                    if not ent:
                        continue
                    c = c1 * c2 * s
                    for k, ck in ent:
                        vec_add_into(out, k, c * ck)
            if out:
                table[(i, j)] = tuple(sorted(out.items()))
    new_alg = FiniteAlgebra(alg.field, alg.labels, table, alg.unit_vec())
    return ComoduleAlgebra(new_alg, over, A.coaction, A.params)


def conjugate_comodule_algebra(A: ComoduleAlgebra, g_idx: int) -> ComoduleAlgebra:
    """Same algebra, coaction conjugated: a -> g a_(-1) g^{-1} (x) a_(0)."""
    H = A.over
    assert g_idx in H.grouplikes, "conjugation needs a grouplike index"
    halg = H.algebra
    gvec = halg.basis_vec(g_idx)
    ginv = _invert_grouplike(halg, g_idx)
    coaction: dict = {}
    for i, ent in A.coaction.items():
        out: dict = {}
        for (h, a), c in ent:
            conj = halg.mul_vec(gvec, halg.mul_vec(halg.basis_vec(h), ginv))
            for k, d in conj.items():
                vec_add_into(out, (k, a), c * d)
        coaction[i] = tuple(sorted(out.items()))
    params = dict(A.params)
    params["conjugated_by"] = H.labels[g_idx]
    return ComoduleAlgebra(A.algebra, H, coaction, params)


def check_comodule_algebra_morphism(f: Matrix, A: ComoduleAlgebra,
                                    B: ComoduleAlgebra,
                                    expect="bijective") -> VerificationReport:
    """f maps A to B; columns of f are images of A's basis vectors.

    expect is "bijective" for isomorphism candidates or "injective" for
    embeddings into a larger comodule algebra.
    """
    assert f.rows == B.dim and f.cols == A.dim
    assert A.over is B.over or A.over.labels == B.over.labels
    rep = VerificationReport({"source": dict(A.params), "target": dict(B.params)})
    fld = A.field

    def image(vec: dict) -> dict:
        out: dict = {}
        for i, c in vec.items():
            for j in range(B.dim):
                e = f.entries[j][i]
                if not e.is_zero():
                    vec_add_into(out, j, c * e)
        return out

    ok = vec_eq(image(A.algebra.unit_vec()), B.algebra.unit_vec())
    rep.add("morphism-unital", "algebra-map-unit", ok, None)

    bad = []
    for i in range(A.dim):
        for j in range(A.dim):
            prod = {m: c for m, c in A.algebra.mul_basis(i, j)}
            lhs = image(prod)
            rhs = B.algebra.mul_vec(image(A.algebra.basis_vec(i)),
                                    image(A.algebra.basis_vec(j)))
            if not vec_eq(lhs, rhs):
                bad.append([A.labels[i], A.labels[j]])
    rep.add("morphism-multiplicative", "algebra-map-products", not bad,
            {"examples": bad[:3], "failing": len(bad)} if bad else None)

    bad = []
    for i in range(A.dim):
        lhs = B.coact_vec(image(A.algebra.basis_vec(i)))
        rhs: dict = {}
        for (h, a), c in A.coaction.get(i, ()):
            for j, d in image({a: fld.one}).items():
                vec_add_into(rhs, (h, j), c * d)
        if not vec_eq(lhs, rhs):
            bad.append(A.labels[i])
    rep.add("morphism-colinear", "comodule-map", not bad,
            {"elements": bad[:5], "failing": len(bad)} if bad else None)

    r = rank(f)
    if expect == "bijective":
        ok = r == A.dim and A.dim == B.dim
    elif expect == "injective":
        ok = r == A.dim
    else:
        raise ValueError("expect must be 'bijective' or 'injective'")
    rep.add(f"morphism-{expect}", "linear-rank", ok,
            None if ok else
            {"rank": r, "source_dim": A.dim, "target_dim": B.dim})
    return rep


def coinvariants(A: ComoduleAlgebra) -> Subspace:
    """Kernel of delta - unit_H (x) id, as a subspace of A."""
    unit_h = A.over.algebra.unit_vec()
    cols = []
    for i in range(A.dim):
        col: dict = {}
        for (h, a), c in A.coaction.get(i, ()):
            vec_add_into(col, (h, a), c)
        for h, c in unit_h.items():
            vec_add_into(col, (h, i), -c)
        cols.append(col)
    return kernel_of_sparse_columns(A.field, cols, A.dim)


def costable_closure(V: Subspace, A: ComoduleAlgebra,
                     kind="right-ideal") -> Subspace:
    """Smallest H-costable right ideal containing V (monotone, idempotent)."""
    assert kind == "right-ideal"
    fld = A.field
    current = V
    while True:
        new_vecs = [list(row) for row in current.basis]
        for row in current.basis:
            v = {i: c for i, c in enumerate(row) if not c.is_zero()}
            # right multiplication by every basis element
            for b in range(A.dim):
                prod = A.algebra.mul_vec(v, A.algebra.basis_vec(b))
                if prod:
                    dense = [fld.zero] * A.dim
                    for k, c in prod.items():
                        dense[k] = c
                    new_vecs.append(dense)
            # functional pieces of the coaction, one per H-leg
            per_h: dict = {}
            for i, c in v.items():
                for (h, a), d in A.coaction.get(i, ()):
                    vec_add_into(per_h.setdefault(h, {}), a, c * d)
            for w in per_h.values():
                dense = [fld.zero] * A.dim
                for k, c in w.items():
                    dense[k] = c
                new_vecs.append(dense)
        bigger = Subspace.from_vectors(fld, A.dim, new_vecs)
        if bigger.dim == current.dim:
            return bigger
        current = bigger


def regular_comodule_algebra(H: HopfAlgebraData) -> ComoduleAlgebra:
    """H as a comodule algebra over itself via its comultiplication."""
    coaction = {
        i: tuple(((j, k), c) for j, k, c in H.coalgebra.comul.get(i, ()))
        for i in range(H.dim)
    }
    return ComoduleAlgebra(H.algebra, H, coaction, {"family": "regular"})


def direct_sum_comodule_algebras(A: ComoduleAlgebra,
                                 B: ComoduleAlgebra) -> ComoduleAlgebra:
    """Componentwise product and blockwise coaction (a test counterexample:
    the result is never right H-simple)."""
    assert A.over is B.over
    fld = A.field
    labels = [f"l.{s}" for s in A.labels] + [f"r.{s}" for s in B.labels]
    off = A.dim
    table: dict = {}
    for (i, j), ent in A.algebra.mul.items():
        table[(i, j)] = ent
    for (i, j), ent in B.algebra.mul.items():
        table[(i + off, j + off)] = tuple((k + off, c) for k, c in ent)
    unit: dict = dict(A.algebra.unit)
    for k, c in B.algebra.unit.items():
        unit[k + off] = c
    alg = FiniteAlgebra(fld, labels, table, unit)
    coaction: dict = {}
    for i, ent in A.coaction.items():
        coaction[i] = ent
    for i, ent in B.coaction.items():
        coaction[i + off] = tuple(((h, a + off), c) for (h, a), c in ent)
    return ComoduleAlgebra(alg, A.over, coaction,
                           {"family": "direct-sum",
                            "left": dict(A.params), "right": dict(B.params)})


# ---------------------------------------------------------------------------
# JSON round-trips (coefficients as canonical strings; exact)
# ---------------------------------------------------------------------------


def _mul_entries(alg: FiniteAlgebra):
    for (i, j), ent in sorted(alg.mul.items()):
        for k, c in ent:
            yield [i, j, k, str(c)]


def algebra_to_json(alg: FiniteAlgebra) -> dict:
    return {
        "N": alg.field.order,
        "basis": list(alg.labels),
        "mul": list(_mul_entries(alg)),
        "unit": [[i, str(c)] for i, c in sorted(alg.unit.items())],
    }


def algebra_from_json(data: dict) -> FiniteAlgebra:
    from .cyclofield import field as make_field

    fld = make_field(data["N"])
    table: dict = {}
    for i, j, k, s in data["mul"]:
        table.setdefault((i, j), []).append((k, fld.parse(s)))
    table = {k: tuple(v) for k, v in table.items()}
    unit = {i: fld.parse(s) for i, s in data["unit"]}
    return FiniteAlgebra(fld, data["basis"], table, unit)


def hopf_to_json(H: HopfAlgebraData) -> dict:
    out = algebra_to_json(H.algebra)
    out["comul"] = [
        [i, j, k, str(c)]
        for i in range(H.dim)
        for j, k, c in H.coalgebra.comul.get(i, ())
    ]
    out["counit"] = [[i, str(c)] for i, c in sorted(H.coalgebra.counit.items())]
    out["antipode"] = [
        [i, j, str(c)]
        for i in range(H.dim)
        for j, c in sorted(H.antipode.get(i, {}).items())
    ]
    if H.degrees is not None:
        out["degrees"] = list(H.degrees)
    return out


def hopf_from_json(data: dict) -> HopfAlgebraData:
    alg = algebra_from_json(data)
    fld = alg.field
    comul: dict = {}
    for i, j, k, s in data["comul"]:
        comul.setdefault(i, []).append((j, k, fld.parse(s)))
    comul = {k: tuple(v) for k, v in comul.items()}
    counit = {i: fld.parse(s) for i, s in data["counit"]}
    co = FiniteCoalgebra(fld, data["basis"], comul, counit)
    antipode: dict = {}
    for i, j, s in data["antipode"]:
        antipode.setdefault(i, {})[j] = fld.parse(s)
    return HopfAlgebraData(alg, co, antipode, degrees=data.get("degrees"))


def comodule_to_json(A: ComoduleAlgebra) -> dict:
    out = algebra_to_json(A.algebra)
    out["coaction"] = [
        [i, h, a, str(c)]
        for i in range(A.dim)
        for (h, a), c in A.coaction.get(i, ())
    ]
    out["params"] = {
        k: (str(v) if isinstance(v, CyclotomicNumber) else v)
        for k, v in sorted(A.params.items())
    }
    return out


def comodule_from_json(data: dict, over: HopfAlgebraData) -> ComoduleAlgebra:
    alg = algebra_from_json(data)
    fld = alg.field
    coaction: dict = {}
    for i, h, a, s in data["coaction"]:
        coaction.setdefault(i, []).append(((h, a), fld.parse(s)))
    coaction = {k: tuple(v) for k, v in coaction.items()}
    return ComoduleAlgebra(alg, over, coaction, data.get("params", {}))


def form_to_json(f: ConvForm) -> dict:
    return {
        "N": f.hopf.field.order,
        "arity": f.arity,
        "dim": f.hopf.dim,
        "entries": [list(k) + [str(c)] for k, c in sorted(f.coords.items())],
    }


def form_from_json(data: dict, hopf: HopfAlgebraData) -> ConvForm:
    fld = hopf.field
    coords = {
        tuple(row[:-1]): fld.parse(row[-1]) for row in data["entries"]
    }
    return ConvForm(hopf, data["arity"], coords)


def dumps_sorted(data: dict) -> str:
    return json.dumps(data, sort_keys=True, indent=2)
