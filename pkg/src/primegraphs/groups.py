"""Group catalog: orders, character degree sets and prime sets.

Covers four Lie-type families (PSL2, PSL3, PSU3, Suzuki), the small
alternating groups and a handful of sporadic groups, which together are all
the simple groups whose degree graphs this project reasons about.  Sporadic
and alternating data come from plain-text tables in the bundled data
directory; everything else is computed from closed order formulas.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional

from .arithmetic import (
    MAX_SUPPORTED,
    PrimeSet,
    as_prime_power,
    is_mersenne_prime_exponent,
    is_prime,
    prime_set,
)

_DATA_DIR = Path(__file__).parent / "data"

SPORADIC_NAMES = ("j1", "m11", "m23")
ALTERNATING_RANGE = (5, 6, 7, 8)


class Family(enum.Enum):
    PSL2 = "psl2"
    SUZUKI = "suzuki"
    PSL3 = "psl3"
    PSU3 = "psu3"
    SPORADIC = "sporadic"
    ALTERNATING = "alt"


class UnsupportedFamilyError(ValueError):
    """Raised when an operation has no data for the requested family."""


class FourPrimeCase(enum.Enum):
    CASE_R = "r"            # q itself is the largest prime divisor
    CASE_MERSENNE = "mersenne"  # q = 2**s with 2**s - 1 a Mersenne prime
    CASE_3T = "3t"          # q = 3**t for a prime t >= 5
    NONE = "none"


@dataclass(frozen=True)
class GroupSpec:
    """A simple group: a family tag plus parameter, or a sporadic name.

    Suzuki convention: the parameter is q**2 = 2**(2m+1), m >= 1.
    """

    family: Family
    parameter: Optional[int] = None
    name: Optional[str] = None

    def __post_init__(self) -> None:
        fam, q = self.family, self.parameter
        if fam is Family.SPORADIC:
            if self.name not in SPORADIC_NAMES:
                raise ValueError(f"unknown sporadic group {self.name!r}")
            return
        if self.name is not None:
            raise ValueError("name is only valid for sporadic groups")
        if q is None:
            raise ValueError(f"{fam.value} requires a parameter")
        if fam is Family.ALTERNATING:
            if q not in ALTERNATING_RANGE:
                raise ValueError(f"alternating degree must be in {ALTERNATING_RANGE}")
            return
        if fam is Family.SUZUKI:
            pf = as_prime_power(q) if q >= 2 else None
            if pf is None or pf[0] != 2 or pf[1] < 3 or pf[1] % 2 == 0:
                raise ValueError("Suzuki parameter must be 2**(2m+1) with m >= 1")
            return
        pf = as_prime_power(q) if q >= 2 else None
        if pf is None:
            raise ValueError(f"{fam.value} parameter must be a prime power, got {q}")
        if fam is Family.PSL2 and q < 4:
            raise ValueError("PSL2 parameter must be >= 4 (smaller groups are solvable)")
        if fam is Family.PSU3 and q < 3:
            # q = 2 gives a solvable group of order 72, not a simple group.
            raise ValueError("PSU3 parameter must be >= 3")

    def __str__(self) -> str:
        if self.family is Family.SPORADIC:
            return f"sporadic {self.name}"
        return f"{self.family.value} {self.parameter}"

    @classmethod
    def psl2(cls, q: int) -> "GroupSpec":
        return cls(Family.PSL2, q)

    @classmethod
    def suzuki(cls, q2: int) -> "GroupSpec":
        return cls(Family.SUZUKI, q2)

    @classmethod
    def psl3(cls, q: int) -> "GroupSpec":
        return cls(Family.PSL3, q)

    @classmethod
    def psu3(cls, q: int) -> "GroupSpec":
        return cls(Family.PSU3, q)

    @classmethod
    def sporadic(cls, name: str) -> "GroupSpec":
        return cls(Family.SPORADIC, name=name.lower())

    @classmethod
    def alternating(cls, n: int) -> "GroupSpec":
        return cls(Family.ALTERNATING, n)

    @classmethod
    def parse(cls, family: str, arg: str) -> "GroupSpec":
        fam = Family(family.lower())
        if fam is Family.SPORADIC:
            return cls.sporadic(arg)
        return cls(fam, int(arg))


@dataclass(frozen=True)
class DegreeSet:
    """Sorted set of character degrees; always contains 1."""

    degrees: tuple[int, ...]

    def __init__(self, degrees) -> None:
        ds = sorted(set(degrees))
        if not ds or ds[0] != 1 and 1 not in ds:
            raise ValueError("a degree set must contain 1")
        if ds[0] < 1:
            raise ValueError("degrees must be positive")
        object.__setattr__(self, "degrees", tuple(ds))

    def __iter__(self) -> Iterator[int]:
        return iter(self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __contains__(self, d: int) -> bool:
        return d in self.degrees


@dataclass(frozen=True)
class DegreeTable:
    """Full degree list with multiplicities, checked against the group order.

    The check is the column orthogonality relation: the multiplicity-weighted
    sum of squared degrees must equal the order exactly.
    """

    group: str
    order: int
    degrees_with_multiplicity: tuple[tuple[int, int], ...]
    maximal_indices: tuple[int, ...] = ()
    projective_factors: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        total = sum(m * d * d for d, m in self.degrees_with_multiplicity)
        if total != self.order:
            raise ValueError(
                f"{self.group}: sum of multiplicity*degree^2 is {total}, "
                f"expected order {self.order}"
            )
        mults = dict(self.degrees_with_multiplicity)
        if mults.get(1, 0) < 1:
            raise ValueError(f"{self.group}: degree 1 missing")

    def degree_set(self) -> DegreeSet:
        return DegreeSet(d for d, _ in self.degrees_with_multiplicity)


def _parse_int_list(text: str) -> tuple[int, ...]:
    return tuple(int(tok.strip()) for tok in text.split(",") if tok.strip())


def _load_table(path: Path) -> DegreeTable:
    fields: dict[str, str] = {}
    for line in path.read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        key, _, value = line.partition("=")
        fields[key.strip()] = value.strip()
    degrees = tuple(
        (int(d), int(m))
        for d, m in (tok.split(":") for tok in fields["degrees"].split(","))
    )
    return DegreeTable(
        group=path.stem,
        order=int(fields["order"]),
        degrees_with_multiplicity=degrees,
        maximal_indices=_parse_int_list(fields.get("maximal_indices", "")),
        projective_factors=_parse_int_list(fields.get("projective_factors", "")),
    )


_TABLES: dict[str, DegreeTable] = {}


def degree_table(name: str) -> DegreeTable:
    name = name.lower()
    if name not in _TABLES:
        path = _DATA_DIR / f"{name}.txt"
        if not path.exists():
            raise KeyError(f"no bundled degree table {name!r}")
        _TABLES[name] = _load_table(path)
    return _TABLES[name]


def bundled_table_names() -> tuple[str, ...]:
    return tuple(sorted(p.stem for p in _DATA_DIR.glob("*.txt") if p.stem != "catalog"))


# ---------------------------------------------------------------------------
# Aliases between small members of different families.

def canonical_key(spec: GroupSpec) -> str:
    """Isomorphism-invariant key, folding the small cross-family aliases."""
    fam, q = spec.family, spec.parameter
    if fam is Family.SPORADIC:
        return spec.name  # type: ignore[return-value]
    if fam is Family.ALTERNATING:
        return f"a{q}"
    if fam is Family.PSL2:
        if q in (4, 5):
            return "a5"
        if q == 9:
            return "a6"
        return f"psl2_{q}"
    if fam is Family.PSL3 and q == 2:
        return "psl2_7"  # PSL3(2) is PSL2(7)
    return f"{fam.value}_{q}"


def _table_for(spec: GroupSpec) -> Optional[DegreeTable]:
    key = canonical_key(spec)
    if key in ("a5", "a6", "a7", "a8", "j1", "m11", "m23"):
        return degree_table(key)
    return None


# ---------------------------------------------------------------------------
# Orders.

def group_order(spec: GroupSpec) -> int:
    fam, q = spec.family, spec.parameter
    if fam is Family.PSL2:
        order = q * (q * q - 1) // math.gcd(2, q - 1)
    elif fam is Family.PSL3:
        order = q**3 * (q**3 - 1) * (q * q - 1) // math.gcd(3, q - 1)
    elif fam is Family.PSU3:
        order = q**3 * (q**3 + 1) * (q * q - 1) // math.gcd(3, q + 1)
    elif fam is Family.SUZUKI:
        order = q * q * (q * q + 1) * (q - 1)  # parameter is q**2
    else:
        table = _table_for(spec)
        assert table is not None
        return table.order
    if order > MAX_SUPPORTED:
        raise OverflowError(f"|{spec}| exceeds the supported range")
    return order


# ---------------------------------------------------------------------------
# Character degrees.

def character_degrees(spec: GroupSpec) -> DegreeSet:
    """Degree set from the PSL2 closed formula or a bundled table.

    PSL3/PSU3/Suzuki degree sets are not bundled; their graphs are built
    structurally in the prime_graph module.
    """
    fam, q = spec.family, spec.parameter
    table = _table_for(spec)
    if table is not None:
        return table.degree_set()
    if fam is not Family.PSL2:
        raise UnsupportedFamilyError(f"no degree set for {spec}")
    if q % 2 == 0:
        return DegreeSet((1, q - 1, q, q + 1))
    eps = (-1) ** ((q - 1) // 2)
    return DegreeSet((1, q - 1, q, q + 1, (q + eps) // 2))


# ---------------------------------------------------------------------------
# Prime sets.

def prime_set_of_group(spec: GroupSpec) -> PrimeSet:
    # For the Lie families the factored form avoids building the full order,
    # which can exceed the supported integer range for large Suzuki
    # parameters even though every factor is small.
    if spec.family in (Family.SPORADIC, Family.ALTERNATING):
        return prime_set(group_order(spec))
    return prime_set_by_family_rule(spec)


def prime_set_by_family_rule(spec: GroupSpec) -> PrimeSet:
    """The family-specific prime-set decomposition; must agree with the order.

    Suzuki: {2} | pi(q^2-1) | pi(q^4+1) (parameter is q^2);
    PSL3:   {p} | pi((q-1)(q+1)(q^2+q+1));
    PSU3:   {p} | pi((q-1)(q+1)(q^2-q+1));
    PSL2:   {p} | pi(q-1) | pi(q+1).
    """
    fam, q = spec.family, spec.parameter
    if fam is Family.SUZUKI:
        return PrimeSet([2]) | prime_set(q - 1) | prime_set(q * q + 1)
    p, _ = as_prime_power(q)  # type: ignore[misc]
    if fam is Family.PSL2:
        return PrimeSet([p]) | prime_set(q - 1) | prime_set(q + 1)
    if fam is Family.PSL3:
        return PrimeSet([p]) | prime_set((q - 1) * (q + 1) * (q * q + q + 1))
    if fam is Family.PSU3:
        return PrimeSet([p]) | prime_set((q - 1) * (q + 1) * (q * q - q + 1))
    raise UnsupportedFamilyError(f"no family rule for {spec}")


# ---------------------------------------------------------------------------
# Four-prime PSL2 classification.

def classify_four_prime_psl2(spec: GroupSpec) -> FourPrimeCase:
    """Classify a PSL2 group with exactly four prime divisors.

    The three recognizable patterns are: the parameter is itself the largest
    prime divisor; the parameter is 2**s with 2**s - 1 a Mersenne prime equal
    to the largest prime divisor; or the parameter is 3**t for a prime
    t >= 5.  Anything else returns NONE.
    """
    if spec.family is not Family.PSL2:
        raise ValueError("classification applies to PSL2 specs only")
    pi = prime_set_of_group(spec)
    if len(pi) != 4:
        raise ValueError(f"{spec} has {len(pi)} prime divisors, need 4")
    q = spec.parameter
    assert q is not None
    if is_prime(q) and q == pi.max():
        return FourPrimeCase.CASE_R
    p, f = as_prime_power(q)  # type: ignore[misc]
    if p == 2 and is_mersenne_prime_exponent(f) and 2**f - 1 == pi.max():
        return FourPrimeCase.CASE_MERSENNE
    if p == 3 and is_prime(f) and f >= 5:
        return FourPrimeCase.CASE_3T
    return FourPrimeCase.NONE


# ---------------------------------------------------------------------------
# Sweep helpers.

def prime_powers(lo: int, hi: int) -> Iterator[int]:
    """Prime powers in [lo, hi], ascending."""
    for n in range(max(lo, 2), hi + 1):
        if as_prime_power(n) is not None:
            yield n


def suzuki_parameters(hi: int) -> Iterator[int]:
    """Suzuki parameters q^2 = 2**(2m+1) <= hi, m >= 1."""
    e = 3
    while 2**e <= hi:
        yield 2**e
        e += 2


def all_specs(
    psl2_max: int = 10**4,
    suzuki_max: int = 2**15,
    psl3_max: int = 200,
    psu3_max: int = 200,
) -> Iterator[GroupSpec]:
    """Every implemented spec within the given family bounds, deduplicated
    so each isomorphism class appears once."""
    seen: set[str] = set()

    def emit(spec: GroupSpec) -> Iterator[GroupSpec]:
        key = canonical_key(spec)
        if key not in seen:
            seen.add(key)
            yield spec

    for n in ALTERNATING_RANGE:
        yield from emit(GroupSpec.alternating(n))
    for name in SPORADIC_NAMES:
        yield from emit(GroupSpec.sporadic(name))
    for q in prime_powers(4, psl2_max):
        yield from emit(GroupSpec.psl2(q))
    for q2 in suzuki_parameters(suzuki_max):
        yield from emit(GroupSpec.suzuki(q2))
    for q in prime_powers(2, psl3_max):
        yield from emit(GroupSpec.psl3(q))
    for q in prime_powers(3, psu3_max):
        yield from emit(GroupSpec.psu3(q))
