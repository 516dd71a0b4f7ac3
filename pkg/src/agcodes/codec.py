"""Encoders and decoders for the three code families.

A CodeSpec fully instantiates a code: the field, the monomial order and
defining set, the code locations, the redundant/information point split
with its precomputed vanishing-ideal bases, and the derived (n, k).

Families:

* curve  - code on the nonzero-coordinate rational points of a plane
           curve (Hermitian over GF(9) is the shipped preset), weighted
           monomial order, parity on the cells of weight <= m.
* hcrs   - hyperbolic cascaded RS code on all (q-1)^2 grid positions,
           hyperbolic order, parity on the cells of product weight < m.
* rs     - classical RS code of length q-1, one-dimensional.

Codewords are lists of element logs, one per location (kind rs/curve/
hcrs alike); information vectors are lists of logs bound to carrier
positions documented on each encoder.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .bms import (
    GroebnerBasis,
    PartialArray,
    bms_with_voting,
    extend,
    parse_basis,
    vanishing_ideal_basis,
)
from .errors import (
    BadRedundancy,
    DecodingFailure,
    ExtendedDecodeUnsupported,
    NonGenericSupport,
    NotAZeroPoint,
    RankDeficient,
)
from .galois import Elt, Field, ONE, ZERO, field_new, gf9
from .geometry import (
    Cell,
    CurveSpec,
    HyperbolicOrder,
    MonomialOrder,
    Point,
    WeightedCurveOrder,
    defining_set,
    enumerate_points,
    eval_poly,
    hermitian_curve,
)
from .transform import Array2D, dft1, dft2, idft1, idft2

Word = list  # list[Elt], one value per code location
Info = list  # list[Elt], one value per information position


@dataclass(frozen=True)
class CodeSpec:
    """A fully instantiated code; immutable and safe to share."""

    field: Field
    kind: str  # "curve" | "hcrs" | "rs"
    order: MonomialOrder | None
    m: int  # degree parameter; for rs this is the redundancy r
    curve: CurveSpec | None
    points: tuple[Point, ...]
    zero_points: tuple[Point, ...]
    phi: tuple[Cell, ...]
    wp: tuple[Point, ...]  # redundant-point set, size n-k
    wp_prime: tuple[Point, ...]  # information-point set
    basis_wp: GroebnerBasis | None
    basis_all: GroebnerBasis | None
    n: int
    k: int
    t_capability: int

    @property
    def r(self) -> int:
        return self.m

    def info_cells(self) -> list[Cell]:
        """Carrier cells for non-systematic information symbols: the
        staircase of the full point ideal minus the defining set."""
        phi = set(self.phi)
        return [c for c in self.basis_all.delta if c not in phi]

    def point_cells(self) -> set[Cell]:
        return {(p.x, p.y) for p in self.points}

    def parity_positions(self) -> list[int]:
        wpset = set(self.wp)
        return [h for h, p in enumerate(self.points) if p in wpset]

    def info_positions(self) -> list[int]:
        wpset = set(self.wp)
        return [h for h, p in enumerate(self.points) if p not in wpset]


# ---------------------------------------------------------------------------
# construction


def _select_redundant_points(
    f: Field, points: Sequence[Point], phi: Sequence[Cell], order: MonomialOrder
) -> tuple[list[Point], list[Point], GroebnerBasis]:
    """Pick the redundant-point set with a generic vanishing-ideal staircase.

    Start from the first n-k points; if their staircase differs from the
    defining set, swap the last of them with successive information
    points until it matches.
    """
    nk = len(phi)
    phiset = set(phi)
    pts = list(points)
    candidates = [pts[:nk]]
    rest = pts[nk:]
    candidates += [pts[: nk - 1] + [p] for p in rest]
    for cand in candidates:
        basis = vanishing_ideal_basis(cand, order, f)
        if set(basis.delta) == phiset:
            wpset = set(cand)
            wp = [p for p in pts if p in wpset]
            wpp = [p for p in pts if p not in wpset]
            return wp, wpp, basis
    # Single swaps cannot always reach a generic set (the leading points may
    # share too many coordinate lines).  Greedy rank selection always can:
    # keep each point whose defining-set evaluation column is independent
    # of the points kept so far.  Since the defining set is a prefix of the
    # order enumeration, an invertible evaluation matrix is exactly the
    # generic-staircase condition.
    chosen: list[Point] = []
    echelon: list[tuple[list[Elt], int]] = []
    for p in pts:
        vec = [f.mul(f.pow(p.x, i), f.pow(p.y, j)) for (i, j) in phi]
        for rvec, ridx in echelon:
            if vec[ridx] != ZERO:
                fac = f.div(vec[ridx], rvec[ridx])
                vec = [f.sub(a, f.mul(fac, b)) for a, b in zip(vec, rvec)]
        piv = next((i for i, v in enumerate(vec) if v != ZERO), None)
        if piv is None:
            continue
        echelon.append((vec, piv))
        chosen.append(p)
        if len(chosen) == nk:
            break
    if len(chosen) < nk:
        raise NonGenericSupport("defining-set evaluation matrix is rank deficient")
    wpset = set(chosen)
    basis = vanishing_ideal_basis(chosen, order, f)
    if set(basis.delta) != phiset:
        raise NonGenericSupport("greedy point selection is not generic")
    return chosen, [p for p in pts if p not in wpset], basis


def _capability(kind: str, m: int, genus: int) -> int:
    if kind == "curve":
        return max((m - 2 * genus + 2 - 1) // 2, 0)
    if kind == "hcrs":
        return (m - 1) // 2
    return m // 2  # rs: redundancy r corrects r//2


def make_curve_code(
    f: Field, curve: CurveSpec, m: int, include_zero_points: bool = True
) -> CodeSpec:
    """Code on the nonzero-coordinate points of the curve with parameter m."""
    order = WeightedCurveOrder(curve.a, curve.b)
    points = enumerate_points(curve, f, include_zero=False)
    zero_points = []
    if include_zero_points:
        zero_points = [
            p
            for p in enumerate_points(curve, f, include_zero=True)
            if p.x == ZERO or p.y == ZERO
        ]
    from .geometry import code_params

    n, k = code_params(len(points), order, m, f, genus=curve.genus)
    phi = defining_set(order, m, f)
    basis_all = vanishing_ideal_basis(points, order, f)
    wp, wpp, basis_wp = _select_redundant_points(f, points, phi, order)
    return CodeSpec(
        field=f,
        kind="curve",
        order=order,
        m=m,
        curve=curve,
        points=tuple(points),
        zero_points=tuple(zero_points),
        phi=tuple(phi),
        wp=tuple(wp),
        wp_prime=tuple(wpp),
        basis_wp=basis_wp,
        basis_all=basis_all,
        n=n,
        k=k,
        t_capability=_capability("curve", m, curve.genus),
    )


def make_hcrs_code(f: Field, m: int) -> CodeSpec:
    """Hyperbolic cascaded RS code on all (q-1)^2 grid positions."""
    order = HyperbolicOrder()
    n_side = f.q - 1
    points = [Point(i, j) for i in range(n_side) for j in range(n_side)]
    phi = defining_set(order, m, f)
    if not 0 < len(phi) < len(points):
        raise ValueError(f"m={m} gives a degenerate defining set")
    basis_all = vanishing_ideal_basis(points, order, f)
    wp, wpp, basis_wp = _select_redundant_points(f, points, phi, order)
    return CodeSpec(
        field=f,
        kind="hcrs",
        order=order,
        m=m,
        curve=None,
        points=tuple(points),
        zero_points=(),
        phi=tuple(phi),
        wp=tuple(wp),
        wp_prime=tuple(wpp),
        basis_wp=basis_wp,
        basis_all=basis_all,
        n=len(points),
        k=len(points) - len(phi),
        t_capability=_capability("hcrs", m, 0),
    )


def make_rs_code(f: Field, r: int) -> CodeSpec:
    """Classical RS code of length q-1 with redundancy r."""
    if not 1 <= r < f.q - 1:
        raise BadRedundancy(f"need 1 <= r < {f.q - 1}, got {r}")
    n = f.q - 1
    return CodeSpec(
        field=f,
        kind="rs",
        order=None,
        m=r,
        curve=None,
        points=(),
        zero_points=(),
        phi=tuple((i, 0) for i in range(r)),
        wp=(),
        wp_prime=(),
        basis_wp=None,
        basis_all=None,
        n=n,
        k=n - r,
        t_capability=_capability("rs", r, 0),
    )


PRESETS = ("hermitian-q9", "hcrs-q9", "rs-q9")


def preset(name: str, m: int | None = None, r: int | None = None) -> CodeSpec:
    """Named code constructions over the canonical GF(9)."""
    f = gf9()
    if name == "hermitian-q9":
        return make_curve_code(f, hermitian_curve(f), 11 if m is None else m)
    if name == "hcrs-q9":
        return make_hcrs_code(f, 9 if m is None else m)
    if name == "rs-q9":
        return make_rs_code(f, 4 if r is None else r)
    raise ValueError(f"unknown preset {name!r}; have {', '.join(PRESETS)}")


# ---------------------------------------------------------------------------
# parity checks


def check_matrix(spec: CodeSpec) -> list[list[Elt]]:
    """Rows per location (zero-coordinate tail last), one column per
    defining-set cell: entry = x(P)^i * y(P)^j with 0^0 = 1."""
    f = spec.field
    if spec.kind == "rs":
        return [[f.pow(h, i) for (i, _) in spec.phi] for h in range(spec.n)]
    rows = []
    for p in list(spec.points) + list(spec.zero_points):
        rows.append([f.mul(f.pow(p.x, i), f.pow(p.y, j)) for (i, j) in spec.phi])
    return rows


def syndromes(spec: CodeSpec, word: Word):
    """(values on the defining set, full DFT) of a word.

    For 2-D kinds the word is embedded at its point cells (zero
    elsewhere) and the full Array2D of r(alpha^i, alpha^j) is returned;
    for rs the full length-(q-1) DFT vector is returned.
    """
    f = spec.field
    if spec.kind == "rs":
        full = dft1(f, list(word))
        return full[: spec.r], full
    if len(word) != spec.n:
        raise ValueError(f"word must have length {spec.n}")
    arr = Array2D.zeros(f.q)
    for p, v in zip(spec.points, word):
        arr[(p.x, p.y)] = v
    full = dft2(f, arr)
    return [full[c] for c in spec.phi], full


def _is_codeword(spec: CodeSpec, word: Word) -> bool:
    phi_vals, _ = syndromes(spec, word)
    return all(v == ZERO for v in phi_vals)


# ---------------------------------------------------------------------------
# linear algebra (for the generator-matrix oracle)


def matrix_rank(f: Field, rows: list[list[Elt]]) -> int:
    mat = [row[:] for row in rows]
    rank = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(mat)) if mat[r][col] != ZERO), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = f.inv(mat[rank][col])
        mat[rank] = [f.mul(inv, v) for v in mat[rank]]
        for rr in range(len(mat)):
            if rr != rank and mat[rr][col] != ZERO:
                fac = mat[rr][col]
                mat[rr] = [f.sub(a, f.mul(fac, b)) for a, b in zip(mat[rr], mat[rank])]
        rank += 1
    return rank


def _solve_square(f: Field, a: list[list[Elt]], rhs: list[Elt]) -> list[Elt]:
    """Solve a square system; raises RankDeficient when singular."""
    dim = len(a)
    mat = [row[:] + [r] for row, r in zip(a, rhs)]
    for col in range(dim):
        piv = next((r for r in range(col, dim) if mat[r][col] != ZERO), None)
        if piv is None:
            raise RankDeficient("parity system is singular")
        mat[col], mat[piv] = mat[piv], mat[col]
        inv = f.inv(mat[col][col])
        mat[col] = [f.mul(inv, v) for v in mat[col]]
        for rr in range(dim):
            if rr != col and mat[rr][col] != ZERO:
                fac = mat[rr][col]
                mat[rr] = [f.sub(x, f.mul(fac, y)) for x, y in zip(mat[rr], mat[col])]
    return [mat[r][dim] for r in range(dim)]


def encode_matrix_oracle(spec: CodeSpec, info: Info) -> Word:
    """Systematic encoding through the parity-check matrix directly.

    Information symbols go verbatim to the information positions; the
    redundant positions are solved from the linear parity system.  This
    is the independent reference for every other encoder.
    """
    f = spec.field
    if spec.kind == "rs":
        parity_idx = list(range(spec.r))
        info_idx = list(range(spec.r, spec.n))
    else:
        parity_idx = spec.parity_positions()
        info_idx = spec.info_positions()
    if len(info) != len(info_idx):
        raise ValueError(f"info must have length {len(info_idx)}")
    h = check_matrix(spec)[: spec.n]
    nphi = len(spec.phi)
    rhs = []
    for l in range(nphi):
        acc = ZERO
        for pos, v in zip(info_idx, info):
            acc = f.add(acc, f.mul(v, h[pos][l]))
        rhs.append(f.neg(acc))
    a = [[h[pos][l] for pos in parity_idx] for l in range(nphi)]
    par = _solve_square(f, a, rhs)
    word = [ZERO] * spec.n
    for pos, v in zip(info_idx, info):
        word[pos] = v
    for pos, v in zip(parity_idx, par):
        word[pos] = v
    return word


# ---------------------------------------------------------------------------
# transform-based encoders


def encode_nonsystematic(spec: CodeSpec, info: Info) -> Word:
    """Place information on the free staircase cells, extend by the point
    ideal, inverse-transform, read off the point cells."""
    if spec.kind == "rs":
        raise ValueError("use rs_encode_idft for rs codes")
    f = spec.field
    cells = spec.info_cells()
    if len(info) != len(cells):
        raise ValueError(f"info must have length {len(cells)}")
    values = {c: ZERO for c in spec.phi}
    values.update(zip(cells, info))
    full = extend(PartialArray.from_values(f.q, values), spec.basis_all, f)
    cw = idft2(f, full)
    ptcells = spec.point_cells()
    n_side = f.q - 1
    for i in range(n_side):
        for j in range(n_side):
            if (i, j) not in ptcells and cw.data[i][j] != ZERO:
                raise AssertionError("inverse transform nonzero off the point cells")
    return [cw[(p.x, p.y)] for p in spec.points]


def encode_systematic(spec: CodeSpec, info: Info) -> Word:
    """Information verbatim at the information points, redundancy generated
    by the recurrence of the redundant-point ideal."""
    if spec.kind == "rs":
        return rs_encode_euclid(spec.field, spec.r, info)
    f = spec.field
    if len(info) != spec.k:
        raise ValueError(f"info must have length {spec.k}")
    arr = Array2D.zeros(f.q)
    for p, v in zip(spec.wp_prime, info):
        arr[(p.x, p.y)] = v
    tilde = dft2(f, arr)
    known = {c: tilde[c] for c in spec.phi}
    breve = extend(PartialArray.from_values(f.q, known), spec.basis_wp, f)
    n_side = f.q - 1
    diff = Array2D(
        f.q,
        [
            [f.sub(tilde.data[i][j], breve.data[i][j]) for j in range(n_side)]
            for i in range(n_side)
        ],
    )
    cw = idft2(f, diff)
    word = [cw[(p.x, p.y)] for p in spec.points]
    for p, v in zip(spec.wp_prime, info):
        if cw[(p.x, p.y)] != v:
            raise AssertionError("systematic position does not carry its symbol")
    if not _is_codeword(spec, word):
        raise AssertionError("systematic encoder produced a parity violation")
    return word


# ---------------------------------------------------------------------------
# zero-coordinate locations (lengthened code)


def analogue_dft(spec: CodeSpec, point: Point, value: Elt) -> Array2D:
    """Transform-analogue array of one symbol at a zero-coordinate point:
    out[i][j] = value * x^i * y^j with 0^0 = 1, so the support is a single
    row, column or cell."""
    f = spec.field
    if point.x != ZERO and point.y != ZERO:
        raise NotAZeroPoint(f"{point} has no zero coordinate")
    if spec.curve is not None:
        if eval_poly(f, spec.curve.poly_dict(), point.x, point.y) != ZERO:
            raise ValueError(f"{point} is not on the curve")
    n_side = f.q - 1
    out = Array2D.zeros(f.q)
    for i in range(n_side):
        xi = f.pow(point.x, i)
        if xi == ZERO:
            continue
        for j in range(n_side):
            out.data[i][j] = f.mul(value, f.mul(xi, f.pow(point.y, j)))
    return out


def encode_systematic_extended(spec: CodeSpec, info: Info) -> Word:
    """Systematic encoding of the code lengthened by the zero-coordinate
    points.  info carries the information-point symbols followed by one
    symbol per zero point; the output word is the n point values followed
    by the zero-point values."""
    f = spec.field
    if not spec.zero_points:
        raise ValueError("this code has no zero-coordinate points")
    nz = len(spec.zero_points)
    if len(info) != spec.k + nz:
        raise ValueError(f"info must have length {spec.k + nz}")
    base, zvals = info[: spec.k], info[spec.k :]

    arr = Array2D.zeros(f.q)
    for p, v in zip(spec.wp_prime, base):
        arr[(p.x, p.y)] = v
    y_arr = dft2(f, arr)
    n_side = f.q - 1
    for zp, v in zip(spec.zero_points, zvals):
        if v == ZERO:
            continue
        a = analogue_dft(spec, zp, v)
        for i in range(n_side):
            for j in range(n_side):
                y_arr.data[i][j] = f.add(y_arr.data[i][j], a.data[i][j])

    known = {c: y_arr[c] for c in spec.phi}
    z_arr = extend(PartialArray.from_values(f.q, known), spec.basis_wp, f)
    neg_z = Array2D(
        f.q, [[f.neg(v) for v in row] for row in z_arr.data]
    )
    red = idft2(f, neg_z)
    wpcells = {(p.x, p.y) for p in spec.wp}
    for i in range(n_side):
        for j in range(n_side):
            if (i, j) not in wpcells and red.data[i][j] != ZERO:
                raise AssertionError("redundancy array nonzero off the redundant points")

    word = [ZERO] * spec.n
    wpp_vals = dict(zip(spec.wp_prime, base))
    for h, p in enumerate(spec.points):
        word[h] = wpp_vals[p] if p in wpp_vals else red[(p.x, p.y)]
    word += list(zvals)

    h = check_matrix(spec)
    for l in range(len(spec.phi)):
        acc = ZERO
        for pos in range(len(word)):
            acc = f.add(acc, f.mul(word[pos], h[pos][l]))
        if acc != ZERO:
            raise AssertionError("lengthened parity check failed")
    return word


# ---------------------------------------------------------------------------
# decoding


def decode(
    spec: CodeSpec,
    received: Word,
    mode: str = "systematic",
    stats: dict | None = None,
) -> tuple[Word, Info]:
    """Correct a received word and return (codeword, information).

    mode selects how the information is read back: "systematic" from the
    information points, "nonsystematic" from the free staircase cells of
    the recovered extension.  The corrected word always re-passes the
    parity check before it is returned.  When a dict is passed as stats
    it reports how many syndrome cells actually needed a vote
    ("voted_cells") and whether an early certificate completed the rest
    ("early_certificate").
    """
    if spec.kind == "rs":
        return _rs_decode(spec, list(received), mode)
    f = spec.field
    if len(received) == spec.n + len(spec.zero_points) and spec.zero_points:
        raise ExtendedDecodeUnsupported(
            "decoding of words with zero-coordinate positions is not supported"
        )
    if len(received) != spec.n:
        raise ValueError(f"received word must have length {spec.n}")
    _, full = syndromes(spec, received)
    known = {c: full[c] for c in spec.phi}
    basis, ext = bms_with_voting(
        f,
        PartialArray.from_values(f.q, known),
        spec.order,
        spec.t_capability,
        ambient=spec.basis_all,
        support=spec.point_cells(),
        stats=stats,
    )
    err = idft2(f, ext)
    corrected = [
        f.sub(v, err[(p.x, p.y)]) for v, p in zip(received, spec.points)
    ]
    chk, _ = syndromes(spec, corrected)
    if any(v != ZERO for v in chk):
        raise DecodingFailure("corrected word fails the parity check")
    if mode == "systematic":
        wpp_idx = spec.info_positions()
        info = [corrected[h] for h in wpp_idx]
    elif mode == "nonsystematic":
        n_side = f.q - 1
        info = [
            f.sub(full[c], ext[c]) for c in spec.info_cells()
        ]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return corrected, info


# ---------------------------------------------------------------------------
# RS codes


def rs_gen_poly(f: Field, r: int) -> list[Elt]:
    """Generator polynomial (x-1)(x-alpha)...(x-alpha^(r-1)), ascending
    coefficient logs, monic of degree r."""
    if not 1 <= r < f.q - 1:
        raise BadRedundancy(f"need 1 <= r < {f.q - 1}, got {r}")
    g = [ONE]
    for i in range(r):
        root = i  # log of alpha^i
        nxt = [ZERO] * (len(g) + 1)
        for d, c in enumerate(g):
            nxt[d + 1] = f.add(nxt[d + 1], c)
            nxt[d] = f.add(nxt[d], f.mul(c, f.neg(root)))
        g = nxt
    return g


def rs_encode_euclid(f: Field, r: int, info: Info) -> Word:
    """Systematic RS encoding by Euclidean division: c = I - (I mod G).

    info occupies coefficients r..n-1; parity lands on 0..r-1.
    """
    n = f.q - 1
    if len(info) != n - r:
        raise ValueError(f"info must have length {n - r}")
    g = rs_gen_poly(f, r)
    # remainder of I(x) = sum info[t] x^(r+t) modulo monic g
    rem = [ZERO] * r + list(info)
    for d in range(n - 1, r - 1, -1):
        c = rem[d]
        if c == ZERO:
            continue
        for t, gc in enumerate(g):
            rem[d - r + t] = f.sub(rem[d - r + t], f.mul(c, gc))
    word = [f.neg(v) for v in rem[:r]] + list(info)
    return word


def rs_encode_idft(f: Field, r: int, info: Info) -> Word:
    """Non-systematic RS encoding c_h = sum_i I_i alpha^(-ih) with the
    information on indices r..n-1."""
    n = f.q - 1
    if len(info) != n - r:
        raise ValueError(f"info must have length {n - r}")
    coeffs = [ZERO] * r + list(info)
    return [f.neg(v) for v in idft1(f, coeffs)]


def rs_encode_dh(f: Field, r: int, info: Info) -> Word:
    """Systematic RS encoding through the shift-register sequence d_h.

    d_h = I(alpha^h) for h < r and then continues by the recursion with
    the generator coefficients; the inverse transform of (d_h) recovers
    the remainder R(x), and c = I - R.  Must match rs_encode_euclid.
    """
    n = f.q - 1
    if len(info) != n - r:
        raise ValueError(f"info must have length {n - r}")
    g = rs_gen_poly(f, r)
    coeffs = [ZERO] * r + list(info)
    d = []
    for h in range(r):
        acc = ZERO  # I(alpha^h)
        for t, c in enumerate(coeffs):
            if c != ZERO:
                acc = f.add(acc, (c + t * h) % n)
        d.append(acc)
    for h in range(r, n):
        acc = ZERO
        for i in range(r):
            acc = f.add(acc, f.mul(g[i], d[i + h - r]))
        d.append(f.neg(acc))
    rem = idft1(f, d)
    word = [f.sub(c, rv) for c, rv in zip(coeffs, rem)]
    return word


def _rs_decode(spec: CodeSpec, received: Word, mode: str) -> tuple[Word, Info]:
    f = spec.field
    n = f.q - 1
    r = spec.r
    if len(received) != n:
        raise ValueError(f"received word must have length {n}")
    s_full = dft1(f, received)
    s = s_full[:r]
    if all(v == ZERO for v in s):
        corrected = list(received)
    else:
        # 1-D Berlekamp-Massey on the syndrome prefix
        cpoly = {0: ONE}
        bpoly = {0: ONE}
        big_l, gap, bdisc = 0, 1, ONE
        for i in range(r):
            d = s[i]
            for j in range(1, big_l + 1):
                cj = cpoly.get(j, ZERO)
                if cj != ZERO:
                    d = f.add(d, f.mul(cj, s[i - j]))
            if d == ZERO:
                gap += 1
                continue
            adj = f.div(d, bdisc)
            updated = dict(cpoly)
            for j, bj in bpoly.items():
                updated[j + gap] = f.sub(updated.get(j + gap, ZERO), f.mul(adj, bj))
            if 2 * big_l <= i:
                bpoly, bdisc, gap, big_l = cpoly, d, 1, i + 1 - big_l
            else:
                gap += 1
            cpoly = updated
        if big_l > spec.t_capability:
            raise DecodingFailure(f"locator degree {big_l} exceeds capability")
        ext = list(s)
        for i in range(r, n):
            acc = ZERO
            for j in range(1, big_l + 1):
                acc = f.add(acc, f.mul(cpoly.get(j, ZERO), ext[i - j]))
            ext.append(f.neg(acc))
        for i in range(n):  # the recurrence must hold cyclically
            acc = ZERO
            for j in range(0, big_l + 1):
                acc = f.add(acc, f.mul(cpoly.get(j, ZERO), ext[(i - j) % n]))
            if acc != ZERO:
                raise DecodingFailure("syndrome extension is not cyclic")
        err = idft1(f, ext)
        if sum(1 for v in err if v != ZERO) > spec.t_capability:
            raise DecodingFailure("error estimate exceeds capability")
        corrected = [f.sub(v, e) for v, e in zip(received, err)]
    chk = dft1(f, corrected)[:r]
    if any(v != ZERO for v in chk):
        raise DecodingFailure("corrected word fails the parity check")
    if mode == "systematic":
        info = corrected[r:]
    elif mode == "nonsystematic":
        full = dft1(f, corrected)
        info = [f.neg(full[i]) for i in range(r, n)]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return corrected, info


# ---------------------------------------------------------------------------
# persistence

_SPEC_HEADER = "# agcodes-spec v1"


def save_spec(spec: CodeSpec, path: str) -> None:
    """Persist a CodeSpec as plain text (versioned header line)."""
    f = spec.field
    lines = [_SPEC_HEADER]
    lines.append(f"field {f.p} {f.m} " + " ".join(map(str, f.primitive_poly)))
    lines.append(f"kind {spec.kind}")
    if spec.kind == "rs":
        lines.append(f"r {spec.r}")
    else:
        lines.append(f"m {spec.m}")
        if spec.kind == "curve":
            terms = " ".join(
                f"{i},{j},{c}" for (i, j), c in spec.curve.defining_poly
            )
            lines.append(f"curve {spec.curve.a} {spec.curve.b} {terms}")
        lines.append("points " + " ".join(f"{p.x},{p.y}" for p in spec.points))
        if spec.zero_points:
            lines.append(
                "zero_points " + " ".join(f"{p.x},{p.y}" for p in spec.zero_points)
            )
        wpset = set(spec.wp)
        idx = [str(h) for h, p in enumerate(spec.points) if p in wpset]
        lines.append("wp " + " ".join(idx))
        lines.append("[basis_wp]")
        lines.append(spec.basis_wp.serialize().rstrip())
        lines.append("[basis_all]")
        lines.append(spec.basis_all.serialize().rstrip())
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_spec(path: str) -> CodeSpec:
    with open(path) as fh:
        text = fh.read()
    lines = text.splitlines()
    if not lines or lines[0].strip() != _SPEC_HEADER:
        raise ValueError(f"{path}: not an agcodes spec file")
    fields: dict[str, str] = {}
    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    for line in lines[1:]:
        if line.startswith("["):
            current = sections.setdefault(line.strip("[]"), [])
            continue
        if current is not None:
            current.append(line)
            continue
        if line.strip():
            key, _, rest = line.partition(" ")
            fields[key] = rest.strip()
    p, m_deg, *poly = fields["field"].split()
    f = field_new(int(p), int(m_deg), [int(c) for c in poly])
    kind = fields["kind"]
    if kind == "rs":
        return make_rs_code(f, int(fields["r"]))
    m = int(fields["m"])
    points = tuple(
        Point(*(int(v) for v in tok.split(","))) for tok in fields["points"].split()
    )
    zero_points = tuple(
        Point(*(int(v) for v in tok.split(",")))
        for tok in fields.get("zero_points", "").split()
    )
    wp_idx = [int(v) for v in fields["wp"].split()]
    if kind == "curve":
        a, b, *terms = fields["curve"].split()
        poly_terms = {}
        for tok in terms:
            i, j, c = (int(v) for v in tok.split(","))
            poly_terms[(i, j)] = c
        curve = CurveSpec(int(a), int(b), tuple(sorted(poly_terms.items())))
        order: MonomialOrder = WeightedCurveOrder(curve.a, curve.b)
        genus = curve.genus
    else:
        curve = None
        order = HyperbolicOrder()
        genus = 0
    basis_wp = parse_basis("\n".join(sections["basis_wp"]), order)
    basis_all = parse_basis("\n".join(sections["basis_all"]), order)
    phi = defining_set(order, m, f)
    wpset = {points[h] for h in wp_idx}
    wp = tuple(p for p in points if p in wpset)
    wpp = tuple(p for p in points if p not in wpset)
    if len(wp) != len(phi):
        raise ValueError("redundant-point count does not match the defining set")
    return CodeSpec(
        field=f,
        kind=kind,
        order=order,
        m=m,
        curve=curve,
        points=points,
        zero_points=zero_points,
        phi=tuple(phi),
        wp=wp,
        wp_prime=wpp,
        basis_wp=basis_wp,
        basis_all=basis_all,
        n=len(points),
        k=len(points) - len(phi),
        t_capability=_capability(kind, m, genus),
    )
