"""Finite abelian groups presented by invariant factors.

A group of type (n1, ..., nr), with 2 <= n1 | n2 | ... | nr, is the direct
product Z_n1 x ... x Z_nr.  Elements are identified with mixed-radix indices
in [0, n); the first factor is the most significant digit.  Subsets are plain
Python integers used as bitmasks over element indices, so set algebra
(union, intersection, translation by a group element) costs a handful of
word-wide integer operations regardless of the set's size.

Translation of a bitmask by a group element decomposes into one block
rotation per coordinate, each built from two precomputed masks and two
shifts.  This is the workhorse of every sumset computation in the package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

#: Orders above this bound would make flat bitmasks unreasonable; formula
#: evaluation elsewhere in the package is not subject to this cap.
MAX_ORDER = 4096


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for desk-scale orders."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    if n < 1:
        raise ValueError(f"divisors undefined for {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    large.reverse()
    return small + large


def prime_factorization(n: int) -> list[tuple[int, int]]:
    """(prime, exponent) pairs of n in ascending prime order."""
    if n < 1:
        raise ValueError(f"cannot factor {n}")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def smallest_prime_divisor(n: int) -> int:
    if n < 2:
        raise ValueError(f"{n} has no prime divisor")
    if n % 2 == 0:
        return 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return f
        f += 2
    return n


class Group:
    """A finite abelian group of type (n1, ..., nr).  Immutable after
    construction; safe to share across workers.

    Elements are ints in range(order); subsets are int bitmasks.
    """

    __slots__ = ("factors", "order", "rank", "exponent", "smallest_prime",
                 "_strides", "_neg", "_trans_cache", "_trans_list")

    def __init__(self, factors):
        factors = tuple(int(f) for f in factors)
        if not factors:
            raise ValueError("invalid group type: need at least one invariant factor")
        for f in factors:
            if f < 2:
                raise ValueError(f"invalid group type {factors}: factor {f} < 2")
        for a, b in zip(factors, factors[1:]):
            if b % a:
                raise ValueError(
                    f"invalid group type {factors}: {a} does not divide {b}")
        order = math.prod(factors)
        if order > MAX_ORDER:
            raise ValueError(f"group order {order} exceeds cap {MAX_ORDER}")
        self.factors = factors
        self.order = order
        self.rank = len(factors)
        self.exponent = factors[-1]
        self.smallest_prime = smallest_prime_divisor(order)
        strides = [1] * self.rank
        for i in range(self.rank - 2, -1, -1):
            strides[i] = strides[i + 1] * factors[i + 1]
        self._strides = tuple(strides)
        self._neg = tuple(self._negate_slow(a) for a in range(order))
        self._trans_cache = {}
        self._trans_list = None

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        return isinstance(other, Group) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __repr__(self):
        return f"Group({self})"

    def __str__(self):
        return "x".join(str(f) for f in self.factors)

    @property
    def is_cyclic(self) -> bool:
        return self.rank == 1

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    # -- element arithmetic -----------------------------------------------

    def index(self, residues) -> int:
        """Mixed-radix index of a residue vector (entries reduced mod n_i)."""
        residues = tuple(residues)
        if len(residues) != self.rank:
            raise ValueError(f"expected {self.rank} residues, got {len(residues)}")
        a = 0
        for r, f, s in zip(residues, self.factors, self._strides):
            a += (r % f) * s
        return a

    def residues(self, a: int) -> tuple[int, ...]:
        return tuple((a // s) % f for f, s in zip(self.factors, self._strides))

    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        out = 0
        for f, s in zip(self.factors, self._strides):
            out += (((a // s) + (b // s)) % f) * s
        return out

    def _negate_slow(self, a: int) -> int:
        out = 0
        for f, s in zip(self.factors, self._strides):
            out += (-(a // s)) % f * s
        return out

    def negate(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def scale(self, k: int, a: int) -> int:
        """k*a for any integer k, including negative k."""
        out = 0
        for f, s in zip(self.factors, self._strides):
            out += (k * (a // s)) % f * s
        return out

    def element_order(self, a: int) -> int:
        """Least t >= 1 with t*a = 0."""
        t = 1
        for f, s in zip(self.factors, self._strides):
            r = (a // s) % f
            t = math.lcm(t, f // math.gcd(f, r) if r else 1)
        return t

    # -- bitmask sets -------------------------------------------------------

    def set_of(self, elements) -> int:
        mask = 0
        for a in elements:
            if not 0 <= a < self.order:
                raise ValueError(f"element index {a} outside group of order {self.order}")
            mask |= 1 << a
        return mask

    def elements_of(self, mask: int) -> list[int]:
        out = []
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return out

    def negate_set(self, mask: int) -> int:
        neg = self._neg
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << neg[low.bit_length() - 1]
            mask ^= low
        return out

    def dilate_set(self, b: int, mask: int) -> int:
        """Image of the set under x -> b*x; may shrink when b is not a unit."""
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << self.scale(b, low.bit_length() - 1)
            mask ^= low
        return out

    # -- translation machinery ---------------------------------------------

    def _rotation_ops(self, g: int):
        """Per-coordinate block rotations realizing mask -> mask + g."""
        ops = []
        for f, s in zip(self.factors, self._strides):
            v = (g // s) % f
            if v == 0:
                continue
            span = f * s
            t = v * s
            nblocks = self.order // span
            rep = ((1 << (nblocks * span)) - 1) // ((1 << span) - 1)
            lo = rep * ((1 << (span - t)) - 1)
            hi = rep * (((1 << t) - 1) << (span - t))
            ops.append((t, lo, hi, span - t))
        return tuple(ops)

    def translation(self, g: int):
        """A callable sending a bitmask of S to the bitmask of S + g."""
        fn = self._trans_cache.get(g)
        if fn is not None:
            return fn
        ops = self._rotation_ops(g)
        if not ops:
            fn = lambda bits: bits
        elif len(ops) == 1:
            t, lo, hi, down = ops[0]
            fn = lambda bits: ((bits & lo) << t) | ((bits & hi) >> down)
        else:
            def fn(bits, _ops=ops):
                for t, lo, hi, down in _ops:
                    bits = ((bits & lo) << t) | ((bits & hi) >> down)
                return bits
        self._trans_cache[g] = fn
        return fn

    def translations(self) -> list:
        """Translation callables for every group element, indexed by element."""
        if self._trans_list is None:
            self._trans_list = [self.translation(g) for g in range(self.order)]
        return self._trans_list

    def translate(self, mask: int, g: int) -> int:
        return self.translation(g)(mask)


@lru_cache(maxsize=None)
def _cached_group(factors: tuple[int, ...]) -> Group:
    return Group(factors)


def make_group(factors) -> Group:
    """Validated group from an invariant-factor chain; cached per type."""
    return _cached_group(tuple(int(f) for f in factors))


def cyclic(n: int) -> Group:
    return make_group((n,))


# -- classification of abelian groups ---------------------------------------

def _partitions(k: int):
    """Integer partitions of k as descending tuples."""
    if k == 0:
        yield ()
        return
    def rec(remaining, largest):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - part, part):
                yield (part,) + rest
    yield from rec(k, k)


def abelian_groups_of_order(n: int) -> list[Group]:
    """All invariant-factor types of order n, lexicographic by factor list."""
    if n < 2:
        raise ValueError(f"no abelian groups of order {n}")
    primes = prime_factorization(n)
    per_prime = [list(_partitions(e)) for _, e in primes]
    types = []
    for combo in product(*per_prime):
        r = max(len(part) for part in combo)
        chain = []
        for j in range(r):
            f = 1
            for (p, _), part in zip(primes, combo):
                if j < len(part):
                    f *= p ** part[j]
            chain.append(f)
        # parts are descending, so the chain is descending with each factor
        # a multiple of the next; reverse for the ascending convention
        chain.reverse()
        types.append(tuple(chain))
    types.sort()
    return [make_group(t) for t in types]


def involution_count(G: Group) -> int:
    """Number of elements of order exactly 2."""
    count = 1
    for f in G.factors:
        count *= math.gcd(2, f)
    return count - 1


# -- subgroups and cosets ----------------------------------------------------

@dataclass(frozen=True)
class Coset:
    """A coset rep + H of a subgroup H, with H stored as a bitmask."""
    group: Group
    subgroup: int
    rep: int

    @property
    def mask(self) -> int:
        return self.group.translate(self.subgroup, self.rep)

    @property
    def subgroup_order(self) -> int:
        return self.subgroup.bit_count()


def cyclic_divisor_subgroup(n: int, d: int) -> Coset:
    """The unique order-d subgroup {0, n/d, 2n/d, ...} of Z_n."""
    if d < 1 or n % d:
        raise ValueError(f"{d} is not a divisor of {n}")
    G = cyclic(n)
    step = n // d
    return Coset(G, G.set_of(j * step for j in range(d)), 0)


def prime_order_subgroups(G: Group, p: int) -> list[Coset]:
    """All subgroups of order p, each exactly once (p prime dividing |G|)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if G.order % p:
        raise ValueError(f"group of order {G.order} has no subgroup of order {p}")
    seen = set()
    for a in G.elements():
        if G.element_order(a) != p:
            continue
        mask = 0
        x = 0
        for _ in range(p):
            mask |= 1 << x
            x = G.add(x, a)
        seen.add(mask)
    return [Coset(G, mask, 0) for mask in sorted(seen)]


# -- text formats -------------------------------------------------------------

def parse_group(text: str) -> Group:
    """Parse "12" or "2x6" into a group; enforces the divisibility chain."""
    parts = text.strip().split("x")
    try:
        factors = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"cannot parse group {text!r}: factors must be integers") from None
    return make_group(factors)


def format_element(G: Group, a: int) -> str:
    if G.rank == 1:
        return str(a)
    return "(" + ",".join(str(r) for r in G.residues(a)) + ")"


def parse_element(G: Group, text: str) -> int:
    text = text.strip()
    if G.rank == 1:
        try:
            return int(text) % G.order
        except ValueError:
            raise ValueError(f"cannot parse element {text!r} for Z_{G.order}") from None
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"element {text!r} must be (a1,...,a{G.rank}) for this group")
    inner = text[1:-1].split(",")
    if len(inner) != G.rank:
        raise ValueError(f"element {text!r} has {len(inner)} coordinates, expected {G.rank}")
    try:
        return G.index(int(c) for c in inner)
    except ValueError:
        raise ValueError(f"cannot parse element {text!r}: coordinates must be integers") from None


def format_set(G: Group, mask: int) -> str:
    return "{" + ",".join(format_element(G, a) for a in G.elements_of(mask)) + "}"


def _split_set_literal(inner: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for i, ch in enumerate(inner):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ValueError(f"set literal: unmatched ')' at position {i + 1}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise ValueError("set literal: unmatched '('")
    if cur or parts:
        parts.append("".join(cur))
    return parts


def parse_set(G: Group, text: str) -> int:
    """Parse "{0,5,10}" or "{(0,0),(1,2)}" into a bitmask."""
    text = text.strip()
    if not (text.startswith("{") and text.endswith("}")):
        raise ValueError(f"set literal {text!r} must be wrapped in braces")
    inner = text[1:-1].strip()
    if not inner:
        return 0
    mask = 0
    for part in _split_set_literal(inner):
        if not part.strip():
            raise ValueError(f"set literal {text!r}: empty entry")
        mask |= 1 << parse_element(G, part)
    return mask
