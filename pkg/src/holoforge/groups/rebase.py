"""Re-basing a holomorph along another abelian normal complement.

Given G = Hol(U, H) with a normal subgroup W isomorphic to U, a complement K
acting faithfully on W, and a free basis w_1..w_n of W, the matrices of the
conjugation action of K in that basis generate L with Hol(U, H) = Hol(U, L).
The isomorphism sends w k to ([w]_B, v(k)).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from ..errors import NotComplement, NotFaithful, NotFreeBasis, NotNormal, SizeMismatch
from ..matrix import Matrix
from .core import Holomorph, MatrixGroup, random_element
from .structure import Subgroup, is_abelian_subgroup, is_normal, subgroup_generated

# full f(g s) = f(g) f(s) sweep below this order, random sampling above
FULL_CHECK_ORDER = 2000


@dataclass
class RebaseResult:
    matrices: tuple[Matrix, ...]
    basis: tuple
    source: Holomorph
    target: Holomorph
    W: Subgroup
    K: Subgroup
    coords: dict = field(repr=False)
    action: dict = field(repr=False)
    checks: dict = field(default_factory=dict)

    def decompose(self, g):
        """(w, k) with g = w k, w in W and k in K."""
        G = self.source
        for k in self.K.elements:
            w = G.mul(g, G.inv(k))
            if w in self.W.elements:
                return w, k
        raise ValueError("element is not in W K")

    def isomorphism(self, g):
        w, k = self.decompose(g)
        return self.target.element(self.coords[w], self.action[k])

    def __call__(self, g):
        return self.isomorphism(g)


def _coordinates(G: Holomorph, basis: Sequence, W: Subgroup) -> dict:
    """Map each element of W to its coordinates in the basis, or raise NotFreeBasis."""
    q = G.ring.modulus
    n = G.n
    coords = {G.identity: (0,) * n}
    for i, b in enumerate(basis):
        if G.element_order(b) != q:
            raise NotFreeBasis(f"basis element {i} does not have order {q}")
        nxt = {}
        for e, c in coords.items():
            cur = e
            for t in range(q):
                nc = c[:i] + (t,) + c[i + 1:]
                if cur in nxt:
                    raise NotFreeBasis("basis elements are dependent")
                nxt[cur] = nc
                cur = G.mul(cur, b)
        coords = nxt
    if len(coords) != len(W) or not all(e in W.elements for e in coords):
        raise NotFreeBasis("basis does not generate W freely")
    return coords


def _action_matrix(G: Holomorph, k, basis: Sequence, coords: dict) -> Matrix:
    cols = []
    for b in basis:
        img = G.conj(k, b)
        cols.append(coords[img])
    return Matrix.from_columns(G.ring, cols)


def rebase(G: Holomorph, W_gens: Sequence, basis_B: Sequence, K_gens: Sequence,
           seed: int = 0) -> RebaseResult:
    if len(basis_B) != G.n:
        raise SizeMismatch(f"need {G.n} basis elements, got {len(basis_B)}")
    W = subgroup_generated(G, list(W_gens))
    K = subgroup_generated(G, list(K_gens))
    if not is_normal(G, W):
        raise NotNormal("W is not normal")
    if len(W.elements & K.elements) != 1 or len(W) * len(K) != G.order():
        raise NotComplement("K is not a complement of W")
    if not is_abelian_subgroup(G, W):
        raise NotFreeBasis("W is not abelian, so it cannot be a copy of U")
    coords = _coordinates(G, basis_B, W)
    gens_L = [_action_matrix(G, k, basis_B, coords) for k in K.gens]
    if not gens_L:
        gens_L = [Matrix.identity(G.ring, G.n)]
    Lgroup = MatrixGroup(gens_L)
    if len(Lgroup.elements()) != len(K):
        raise NotFaithful("K does not act faithfully on W")
    action = {k: _action_matrix(G, k, basis_B, coords) for k in K.elements}
    target = Holomorph(G.ring, G.n, Lgroup)
    result = RebaseResult(tuple(gens_L),
                          tuple(basis_B), G, target, W, K, coords, action)
    result.checks = verify_rebase(result, seed=seed)
    return result


def verify_rebase(res: RebaseResult, seed: int = 0, samples: int = 1000) -> dict:
    """Confirm the map w k -> ([w]_B, v(k)) is a bijective homomorphism.

    Multiplicativity is checked on all pairs of listed generators, and on
    f(g s) = f(g) f(s) for every g and generator s when |G| is small (which
    proves the homomorphism property), otherwise on random g.  Bijectivity
    holds because W -> U and K -> L are bijections.
    """
    G, T = res.source, res.target
    f = res.isomorphism
    special = list(dict.fromkeys(list(G.gens) + list(res.W.gens) + list(res.K.gens)))
    for s in special:
        for t in special:
            if f(G.mul(s, t)) != T.mul(f(s), f(t)):
                raise AssertionError("re-basing map is not multiplicative on generators")
    if G.order() <= FULL_CHECK_ORDER:
        pool = G.elements()
        mode = "exhaustive"
    else:
        rng = random.Random(seed)
        pool = [random_element(G, rng) for _ in range(samples)]
        mode = f"{samples} random elements"
    images = {}
    for g in pool:
        fg = f(g)
        images[g] = fg
        for s in G.gens:
            if f(G.mul(g, s)) != T.mul(fg, f(s)):
                raise AssertionError("re-basing map is not multiplicative")
    if mode == "exhaustive" and len(set(images.values())) != G.order():
        raise AssertionError("re-basing map is not injective")
    return {"generator_pairs": len(special) ** 2, "mode": mode,
            "W_to_U_bijective": len(res.coords) == G.ring.modulus ** G.n,
            "K_to_L_bijective": len(set(res.action.values())) == len(res.K)}
