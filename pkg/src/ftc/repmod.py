"""Module theory over a finite-dimensional algebra at desk scale.

Composition factors are found MeatAxe-style over finite fields: pick a
random element of the acting algebra's image (a seeded linear combination
of the basis actions), factor its minimal polynomial, spin kernel vectors
to find submodules, and certify irreducibility with Norton's dual-spin
test when an irreducible factor has nullity equal to its degree.

The same file assembles fusion data from a Hopf algebra: simple modules,
tensor-product multiplicities, and the block partition of simples (by
primitive central idempotents, cross-checked against linkage through
first extensions -- the two must agree or the run aborts).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .algebra import (
    Algebra,
    Subspace,
    center,
    characters_commutative,
    lift_idempotent,
    quotient,
    radical,
    subalgebra_on_subspace,
)
from .errors import NonScalarActionError, SplittingError, UnsupportedFieldError
from .fusion import BlockPartition, FusionRing, validate_fusion
from .linalg import Matrix, extend_to_basis, inverse, kernel, rank, rref, solve
from .poly import factor, min_poly_of_matrix

DEFAULT_SEED = 12345


@dataclass
class RepModule:
    algebra: Algebra
    dim: int
    action: list  # one dim x dim Matrix per algebra basis element

    def act(self, alg_vec) -> Matrix:
        f = self.algebra.field
        out = Matrix.zero(f, self.dim, self.dim)
        for i, c in enumerate(alg_vec):
            if f.is_zero(c):
                continue
            out = out.add(self.action[i].scale(c))
        return out

    def module_violations(self):
        """Check rho(b_i) rho(b_j) = rho(b_i b_j) and rho(1) = id."""
        a = self.algebra
        out = []
        if not self.act(a.unit).is_identity():
            out.append("unit does not act as the identity")
        for i in range(a.dim):
            for j in range(a.dim):
                lhs = self.action[i].mul(self.action[j])
                rhs = self.act(a.multiply(a.basis_vector(i), a.basis_vector(j)))
                if lhs != rhs:
                    out.append(
                        f"action breaks multiplication at "
                        f"({a.basis_names[i]}, {a.basis_names[j]})"
                    )
        return out

    def sort_key(self):
        f = self.algebra.field
        return (
            self.dim,
            tuple(
                tuple(f.sort_key(x) for row in m.rows for x in row)
                for m in self.action
            ),
        )


def regular_module(a: Algebra) -> RepModule:
    action = [a.left_mult_matrix(a.basis_vector(i)) for i in range(a.dim)]
    return RepModule(a, a.dim, action)


def trivial_module(a: Algebra, counit) -> RepModule:
    """The one-dimensional module where b_i acts by counit[i]."""
    f = a.field
    action = [Matrix(f, [[counit[i]]]) for i in range(a.dim)]
    return RepModule(a, 1, action)


def spin(action_mats, v) -> Matrix:
    """Basis (columns) of the smallest invariant subspace containing v."""
    f = action_mats[0].field if action_mats else None
    n = len(v)
    basis = []  # (pivot index, reduced row)
    raw = []

    def reduce_add(vec):
        w = list(vec)
        for piv, row in basis:
            if not f.is_zero(w[piv]):
                c = w[piv]
                w = [f.sub(x, f.mul(c, y)) for x, y in zip(w, row)]
        for idx in range(n):
            if not f.is_zero(w[idx]):
                inv = f.inv(w[idx])
                basis.append((idx, [f.mul(inv, x) for x in w]))
                basis.sort(key=lambda t: t[0])
                raw.append(list(vec))
                return True
        return False

    frontier = []
    if reduce_add(v):
        frontier.append(v)
    while frontier:
        nxt = []
        for vec in frontier:
            for m in action_mats:
                img = m.mul_vec(vec)
                if reduce_add(img):
                    nxt.append(img)
        frontier = nxt
    return Matrix(f, [[r[i] for r in raw] for i in range(n)])


def _split_along(mod: RepModule, w_basis: Matrix):
    """Restrict and project the action along an invariant subspace."""
    f = mod.algebra.field
    k = w_basis.ncols
    t = extend_to_basis(w_basis)
    t_inv = inverse(t)
    subs = []
    quots = []
    for m in mod.action:
        conj = t_inv.mul(m.mul(t))
        # invariance: lower-left block must vanish
        for r in range(k, mod.dim):
            for c in range(k):
                if not f.is_zero(conj.rows[r][c]):
                    raise AssertionError("subspace is not invariant")
        subs.append(Matrix(f, [row[:k] for row in conj.rows[:k]]))
        quots.append(Matrix(f, [row[k:] for row in conj.rows[k:]]))
    sub = RepModule(mod.algebra, k, subs)
    quo = RepModule(mod.algebra, mod.dim - k, quots)
    return sub, quo


def _random_algebra_action(mod: RepModule, rng) -> Matrix:
    # the basis actions span the image algebra, so a random combination
    # samples the whole image; no word products are needed
    f = mod.algebra.field
    coeffs = [f.random_scalar(rng) for _ in range(mod.algebra.dim)]
    return mod.act(coeffs)


def chop(mod: RepModule, seed: int = DEFAULT_SEED):
    """Composition factors [(simple RepModule, multiplicity)], seed-deterministic."""
    a = mod.algebra
    if a.field.order is None:
        raise UnsupportedFieldError(
            "composition factors require a finite field; rerun over F_p"
        )
    rng = random.Random(seed)
    factors = []

    def rec(m: RepModule):
        if m.dim == 0:
            return
        transposed = [mat.transpose() for mat in m.action]
        for _ in range(64):
            theta = _random_algebra_action(m, rng)
            mp = min_poly_of_matrix(theta)
            for g, _mult in factor(mp):
                if g.degree < 1:
                    continue
                null = kernel(g.evaluate_matrix(theta))
                split = None
                for cidx in range(null.ncols):
                    w = spin(m.action, null.col(cidx))
                    if 0 < w.ncols < m.dim:
                        split = w
                        break
                if split is not None:
                    sub, quo = _split_along(m, split)
                    rec(sub)
                    rec(quo)
                    return
                if null.ncols == g.degree:
                    # Norton: spin one dual kernel vector under the transposes
                    tnull = kernel(g.evaluate_matrix(theta.transpose()))
                    wdual = spin(transposed, tnull.col(0))
                    if wdual.ncols < m.dim:
                        perp = kernel(wdual.transpose())
                        sub, quo = _split_along(m, perp)
                        rec(sub)
                        rec(quo)
                        return
                    factors.append(m)
                    return
        raise AssertionError("chop could not split or certify after 64 attempts")

    rec(mod)
    # group isomorphic factors
    series = []
    for s in factors:
        for idx, (t, _) in enumerate(series):
            if iso_test(s, t):
                series[idx] = (t, series[idx][1] + 1)
                break
        else:
            series.append((s, 1))
    series.sort(key=lambda pair: pair[0].sort_key())
    total = sum(s.dim * m for s, m in series)
    if total != mod.dim:
        raise AssertionError("composition factors do not add up to the dimension")
    return series


def hom_space(m: RepModule, n: RepModule) -> Matrix:
    """Basis of intertwiners X with X rho_m(b) = rho_n(b) X, as columns of vec(X)."""
    f = m.algebra.field
    rows = []
    for b in range(m.algebra.dim):
        am = m.action[b]
        an = n.action[b]
        # equation entries: (X am - an X)[r][c] = 0, unknown X is n.dim x m.dim
        for r in range(n.dim):
            for c in range(m.dim):
                row = [f.zero] * (n.dim * m.dim)
                for s in range(m.dim):
                    row[r * m.dim + s] = f.add(row[r * m.dim + s], am.rows[s][c])
                for s in range(n.dim):
                    row[s * m.dim + c] = f.sub(row[s * m.dim + c], an.rows[r][s])
                rows.append(row)
    return kernel(Matrix(f, rows))


def endomorphism_dimension(m: RepModule) -> int:
    return hom_space(m, m).ncols


def iso_test(m: RepModule, n: RepModule) -> bool:
    """Existence of an invertible intertwiner.  Exact for simple modules."""
    if m.dim != n.dim:
        return False
    if m.algebra.dim != n.algebra.dim or m.algebra.field != n.algebra.field:
        raise ValueError("modules over incompatible algebras")
    f = m.algebra.field
    homs = hom_space(m, n)
    if homs.ncols == 0:
        return False
    candidates = []
    for j in range(homs.ncols):
        candidates.append(homs.col(j))
    q = f.order
    if q is not None and homs.ncols > 1 and q ** homs.ncols <= 4096:
        # small enough to enumerate every combination exactly
        candidates = []
        elems = list(f.elements())
        idx = [0] * homs.ncols
        while True:
            vec = [f.zero] * (m.dim * n.dim)
            for jj, ii in enumerate(idx):
                c = elems[ii]
                if not f.is_zero(c):
                    col = homs.col(jj)
                    vec = [f.add(x, f.mul(c, y)) for x, y in zip(vec, col)]
            candidates.append(vec)
            pos = 0
            while pos < homs.ncols:
                idx[pos] += 1
                if idx[pos] < len(elems):
                    break
                idx[pos] = 0
                pos += 1
            if pos == homs.ncols:
                break
    for vec in candidates:
        x = Matrix(f, [vec[r * m.dim : (r + 1) * m.dim] for r in range(n.dim)])
        if inverse(x) is not None:
            return True
    return False


@dataclass
class SimpleCatalog:
    simples: list  # RepModule
    names: list  # S0, S1, ...

    def index_of(self, mod: RepModule) -> int:
        for i, s in enumerate(self.simples):
            if iso_test(mod, s):
                return i
        raise ValueError("module not in catalog")


def simples(a: Algebra, seed: int = DEFAULT_SEED, unit_character=None) -> SimpleCatalog:
    """Complete catalog of simple modules, via the regular module.

    Requires every simple to have a one-dimensional endomorphism algebra
    (a splitting field); otherwise raises SplittingError naming the
    endomorphism's minimal polynomial.
    """
    series = chop(regular_module(a), seed)
    mods = [s for s, _ in series]
    if unit_character is not None:
        triv = trivial_module(a, unit_character)
        for i, s in enumerate(mods):
            if s.dim == 1 and iso_test(s, triv):
                mods.insert(0, mods.pop(i))
                break
        else:
            raise AssertionError("trivial module missing from the regular module")
    for s in mods:
        endo = hom_space(s, s)
        if endo.ncols != 1:
            f = a.field
            # name the field extension blocking the split
            obstruction = None
            for j in range(endo.ncols):
                x = Matrix(
                    f, [endo.col(j)[r * s.dim : (r + 1) * s.dim] for r in range(s.dim)]
                )
                mp = min_poly_of_matrix(x)
                if mp.degree >= 2:
                    obstruction = str(mp)
                    break
            raise SplittingError(
                [obstruction or f"endomorphism algebra of dimension {endo.ncols}"],
                hint=f"a simple module has endomorphism dimension {endo.ncols}; "
                "extend the field",
            )
    names = [f"S{i}" for i in range(len(mods))]
    return SimpleCatalog(mods, names)


def scalar_action(a: Algebra, z_vec, s: RepModule):
    """The scalar by which a central element acts on a simple module."""
    m = s.act(z_vec)
    f = a.field
    lam = m.rows[0][0]
    for r in range(s.dim):
        for c in range(s.dim):
            expect = lam if r == c else f.zero
            if m.rows[r][c] != expect:
                raise NonScalarActionError(
                    "element does not act as a scalar (is it central? is the "
                    "module simple?)"
                )
    return lam


def tensor_module(hopf, m: RepModule, n: RepModule) -> RepModule:
    """Tensor product module: the algebra acts through the comultiplication."""
    a = hopf.alg
    f = a.field
    dim = m.dim * n.dim
    action = []
    for i in range(a.dim):
        acc = Matrix.zero(f, dim, dim)
        for (j, k, c) in hopf.comult_of(i):
            term = m.action[j].kron(n.action[k]).scale(c)
            acc = acc.add(term)
        action.append(acc)
    out = RepModule(a, dim, action)
    bad = out.module_violations()
    if bad:
        raise AssertionError(f"tensor module failed verification: {bad[0]}")
    return out


def ext1_dimension(s: RepModule, t: RepModule) -> int:
    """dim Ext^1(s, t): module structures on t (+) s modulo split ones."""
    a = s.algebra
    f = a.field
    ds, dt = s.dim, t.dim
    nunk = a.dim * dt * ds

    def unknown_index(i, r, c):
        return i * dt * ds + r * ds + c

    rows = []
    # multiplicativity: T_i phi_j + phi_i S_j = sum_k c_ijk phi_k
    for i in range(a.dim):
        ti = t.action[i]
        for j in range(a.dim):
            sj = s.action[j]
            prod = a.multiply(a.basis_vector(i), a.basis_vector(j))
            for r in range(dt):
                for c in range(ds):
                    row = [f.zero] * nunk
                    # T_i phi_j contribution
                    for u in range(dt):
                        idx = unknown_index(j, u, c)
                        row[idx] = f.add(row[idx], ti.rows[r][u])
                    # phi_i S_j contribution
                    for u in range(ds):
                        idx = unknown_index(i, r, u)
                        row[idx] = f.add(row[idx], sj.rows[u][c])
                    # minus sum_k c_k phi_k
                    for k, cf in enumerate(prod):
                        if f.is_zero(cf):
                            continue
                        idx = unknown_index(k, r, c)
                        row[idx] = f.sub(row[idx], cf)
                    rows.append(row)
    # unit acts as the identity: sum u_i phi_i = 0
    for r in range(dt):
        for c in range(ds):
            row = [f.zero] * nunk
            for i, cf in enumerate(a.unit):
                if not f.is_zero(cf):
                    idx = unknown_index(i, r, c)
                    row[idx] = f.add(row[idx], cf)
            rows.append(row)
    cocycles = kernel(Matrix(f, rows)).ncols
    # coboundaries: phi_i = T_i X - X S_i
    cob_cols = []
    for r0 in range(dt):
        for c0 in range(ds):
            col = [f.zero] * nunk
            for i in range(a.dim):
                ti = t.action[i]
                si = s.action[i]
                for r in range(dt):
                    for c in range(ds):
                        val = f.zero
                        if c == c0:
                            val = f.add(val, ti.rows[r][r0])
                        if r == r0:
                            val = f.sub(val, si.rows[c0][c])
                        if not f.is_zero(val):
                            col[unknown_index(i, r, c)] = f.add(
                                col[unknown_index(i, r, c)], val
                            )
            cob_cols.append(col)
    coboundaries = rank(Matrix(f, [list(r) for r in zip(*cob_cols)])) if cob_cols else 0
    return cocycles - coboundaries


def blocks(a: Algebra, catalog: SimpleCatalog = None, seed: int = DEFAULT_SEED) -> BlockPartition:
    """Block partition of the simples by primitive central idempotents.

    A second, independent computation links simples through nonzero first
    extensions; the two partitions must agree exactly or the run fails.
    """
    if catalog is None:
        catalog = simples(a, seed)
    f = a.field
    z = center(a)
    zalg = subalgebra_on_subspace(a, z)
    try:
        zchars = characters_commutative(zalg)
    except SplittingError as err:
        err.hint = (err.hint or "") + " (while splitting the center)"
        raise
    rad_z = radical(zalg)
    if rad_z.dim:
        zq, zproj = quotient(zalg, rad_z)
    else:
        zq, zproj = zalg, Matrix.identity(f, zalg.dim)
    # primitive idempotents of the semisimple quotient: chi_j(e_i) = delta_ij
    # (characters of zalg factor through zq; re-express them there)
    t = extend_to_basis(rad_z.basis) if rad_z.dim else Matrix.identity(f, zalg.dim)
    section_cols = [t.col(j) for j in range(rad_z.dim, zalg.dim)]
    char_rows = []
    for chi in zchars:
        # chi on the section basis of zq
        char_rows.append([chi.apply(col) for col in section_cols])
    char_matrix = Matrix(f, char_rows)
    idempotents = []
    for i in range(len(zchars)):
        target = [f.one if j == i else f.zero for j in range(len(zchars))]
        coords = solve(char_matrix, target)
        if coords is None:
            raise AssertionError("characters of the center are dependent")
        # element of zq in section coordinates -> element of zalg
        e_bar = [f.zero] * zalg.dim
        for cf, col in zip(coords, section_cols):
            for r in range(zalg.dim):
                e_bar[r] = f.add(e_bar[r], f.mul(cf, col[r]))
        e_exact = lift_idempotent(zalg, e_bar, rad_z)
        # back to coordinates of a
        e_in_a = [f.zero] * a.dim
        for cf, col in zip(e_exact, z.vectors()):
            for r in range(a.dim):
                e_in_a[r] = f.add(e_in_a[r], f.mul(cf, col[r]))
        idempotents.append(e_in_a)
    # verify: orthogonal decomposition of 1
    total = [f.zero] * a.dim
    for e in idempotents:
        total = [f.add(x, y) for x, y in zip(total, e)]
    if total != a.unit:
        raise AssertionError("central idempotents do not sum to 1")
    for i in range(len(idempotents)):
        for j in range(len(idempotents)):
            prod = a.multiply(idempotents[i], idempotents[j])
            expect = idempotents[i] if i == j else [f.zero] * a.dim
            if prod != expect:
                raise AssertionError("central idempotents are not orthogonal")
    # partition simples: each sees exactly one idempotent as the identity
    assignment = []
    for s in catalog.simples:
        owner = None
        for bidx, e in enumerate(idempotents):
            lam = scalar_action(a, e, s)
            if f.is_one(lam):
                if owner is not None:
                    raise AssertionError("simple claimed by two block idempotents")
                owner = bidx
            elif not f.is_zero(lam):
                raise AssertionError("block idempotent acts as a non-0/1 scalar")
        if owner is None:
            raise AssertionError("simple not claimed by any block idempotent")
        assignment.append(owner)
    classes = []
    for bidx in range(len(idempotents)):
        cls = [catalog.names[i] for i, o in enumerate(assignment) if o == bidx]
        if cls:
            classes.append(cls)
    primary = BlockPartition(sorted(classes, key=lambda c: c[0]))
    linkage = _blocks_by_linkage(catalog)
    if _normalize_partition(primary) != _normalize_partition(linkage):
        raise AssertionError(
            "block partitions disagree: idempotents gave "
            f"{primary.classes}, linkage gave {linkage.classes}"
        )
    return primary


def _blocks_by_linkage(catalog: SimpleCatalog) -> BlockPartition:
    """Blocks as connected components under nonzero first extensions."""
    n = len(catalog.simples)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if ext1_dimension(catalog.simples[i], catalog.simples[j]) > 0:
                union(i, j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(catalog.names[i])
    classes = sorted(groups.values(), key=lambda c: c[0])
    return BlockPartition(classes)


def _normalize_partition(p: BlockPartition):
    return sorted(tuple(sorted(cls)) for cls in p.classes)


def fusion_from_hopf(hopf, seed: int = DEFAULT_SEED):
    """(FusionRing, BlockPartition) of Rep(H) over a finite splitting field."""
    a = hopf.alg
    catalog = simples(a, seed, unit_character=hopf.counit)
    labels = list(catalog.names)
    mult = {}
    for i, si in enumerate(catalog.simples):
        for j, sj in enumerate(catalog.simples):
            prod = tensor_module(hopf, si, sj)
            series = chop(prod, seed + 7919 * (i * len(labels) + j + 1))
            for s, m in series:
                k = catalog.index_of(s)
                mult[(labels[i], labels[j], labels[k])] = m
    dual = {}
    for i, si in enumerate(catalog.simples):
        dual_action = [
            si.act(hopf.antipode.col(b)).transpose() for b in range(a.dim)
        ]
        sdual = RepModule(a, si.dim, dual_action)
        bad = sdual.module_violations()
        if bad:
            raise AssertionError(f"contragredient failed verification: {bad[0]}")
        dual[labels[i]] = labels[catalog.index_of(sdual)]
    ring = FusionRing(labels, labels[0], mult, dual)
    report = validate_fusion(ring)
    if not report.is_valid:
        raise AssertionError(f"fusion ring from module chop is invalid:\n{report}")
    return ring, blocks(a, catalog, seed), catalog
