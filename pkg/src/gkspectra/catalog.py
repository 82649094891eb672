"""Validated data store for the recognition engine.

The shipped JSON file has three top-level sections: ``simple_groups`` (order
factorizations, outer automorphism data, known spectra, Frobenius witnesses,
module facts, extension witnesses), ``targets`` (recognition targets with
their spectra), and ``axioms`` (named background theorems, each with a
citation). The loader recomputes every order from its factors, checks every
structural invariant, and rejects unknown keys, so a malformed file cannot
reach the engine. Loaded catalogs are immutable.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

from .bsgs import DEFAULT_CAP, PermutationGroup
from .errors import ValidationError
from .perm import load_generator_file
from .spectra import divisor_closure, primes_of

DATA_DIR = Path(__file__).resolve().parent / "data"

# The catalog lists every nonabelian simple group whose order primes are at
# most this bound (28 records); completeness claims stop here.
CORE_MAX_PRIME = 11

# Record and target names with a shipped permutation representation.
GENERATOR_FILES = {
    "A5": "a5", "L2(7)": "l2_7", "A6": "a6", "L2(8)": "l2_8",
    "L2(11)": "l2_11", "A7": "a7", "U3(3)": "u3_3", "M11": "m11",
    "A8": "a8", "L3(4)": "l3_4", "U4(2)": "u4_2", "L2(49)": "l2_49",
    "M12": "m12", "U3(5)": "u3_5", "A9": "a9", "M22": "m22", "J2": "j2",
    "S6(2)": "s6_2", "A10": "a10", "U4(3)": "u4_3", "U5(2)": "u5_2",
    "A11": "a11", "HS": "hs", "S4(7)": "s4_7", "O8+(2)": "o8p_2",
    "A12": "a12", "McL": "mcl", "U6(2)": "u6_2", "Suz": "suz",
    "PGL3(4)": "pgl3_4", "PGU3(5)": "pgu3_5",
    "aut-m12": "aut_m12", "aut-m22": "aut_m22", "aut-j2": "aut_j2",
    "aut-mcl": "aut_mcl", "aut-suz": "aut_suz",
}

# Matrix certificates referenced by forced_order module facts.
MODULE_FILES = {"M12": "m12_10d.txt", "M22": "m22_10d.txt"}


def default_catalog_path() -> Path:
    """Path of the catalog file shipped inside the package."""
    return DATA_DIR / "catalog.json"


def generator_path(name: str) -> Path | None:
    """Path of the generator file for a record or target name, if shipped."""
    stem = GENERATOR_FILES.get(name)
    if stem is None:
        return None
    return DATA_DIR / "generators" / f"{stem}.txt"


def module_path(name: str) -> Path | None:
    """Path of the matrix certificate file for a record name, if shipped."""
    stem = MODULE_FILES.get(name)
    if stem is None:
        return None
    return DATA_DIR / "modules" / stem


@dataclass(frozen=True)
class FrobeniusWitness:
    """A Frobenius subgroup F:C with cyclic complement, inside one record."""

    kernel_order: int
    complement_order: int
    citation: str


@dataclass(frozen=True)
class ForcedAdjacency:
    """A faithful module in this characteristic forces first ~ second."""

    first: int
    second: int

    @property
    def product(self) -> int:
        return self.first * self.second


@dataclass(frozen=True)
class ForcedDimensions:
    """Only these module dimensions are compatible with the constraints."""

    dimensions: tuple[int, ...]


@dataclass(frozen=True)
class FixedPointFreeClass:
    """The named conjugacy class acts without nonzero fixed vectors."""

    class_label: str
    element_order: int


@dataclass(frozen=True)
class ForcedOrder:
    """Coset elements above the module reach this order."""

    order: int


ModuleStatement = ForcedAdjacency | ForcedDimensions | FixedPointFreeClass | ForcedOrder


@dataclass(frozen=True)
class ModuleFact:
    """One modular-representation fact with its literature citation."""

    group: str
    characteristic: int
    statement: ModuleStatement
    citation: str


@dataclass(frozen=True)
class ExtensionWitness:
    """An element order realized in the degree-`index` extension of the record."""

    index: int
    order: int
    citation: str


@dataclass(frozen=True)
class SimpleGroupRecord:
    """One simple group: order data, outer data, spectrum, and proof facts."""

    name: str
    order_factors: tuple[tuple[int, int], ...]
    order: int
    out_order: int
    out_structure: str
    mu: tuple[int, ...] | None
    frobenius_witnesses: tuple[FrobeniusWitness, ...]
    module_facts: tuple[ModuleFact, ...]
    extension_witnesses: tuple[ExtensionWitness, ...]
    citations: tuple[str, ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.order_factors)

    @property
    def max_prime(self) -> int:
        return self.order_factors[-1][0]

    def spectrum_closure(self) -> frozenset[int] | None:
        """Divisor closure of the known spectrum, or None when mu is absent."""
        if self.mu is None:
            return None
        return divisor_closure(self.mu)


@dataclass(frozen=True)
class TargetSpec:
    """One recognition target: its spectrum and subcatalog parameters."""

    name: str
    socle: str
    mu: tuple[int, ...]
    max_prime: int
    required_prime: int | None
    citation: str

    def spectrum_closure(self) -> frozenset[int]:
        return divisor_closure(self.mu)


@dataclass(frozen=True)
class Axiom:
    """A named background theorem the engine may cite but never proves."""

    name: str
    statement: str
    citation: str


@dataclass(frozen=True)
class Catalog:
    """Immutable validated catalog: records, targets, and cited axioms."""

    records: tuple[SimpleGroupRecord, ...]
    targets: tuple[TargetSpec, ...]
    axioms: tuple[Axiom, ...]
    _by_name: dict[str, SimpleGroupRecord] = field(repr=False)
    _targets_by_name: dict[str, TargetSpec] = field(repr=False)
    _axioms_by_name: dict[str, Axiom] = field(repr=False)

    @property
    def target_table(self) -> dict[str, tuple[int, ...]]:
        """Target name to spectrum, in file order."""
        return {t.name: t.mu for t in self.targets}

    def record(self, name: str) -> SimpleGroupRecord:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValidationError(f"unknown record name: {name!r}") from None

    def target(self, name: str) -> TargetSpec:
        try:
            return self._targets_by_name[name]
        except KeyError:
            raise ValidationError(f"unknown target name: {name!r}") from None

    def axiom(self, name: str) -> Axiom:
        try:
            return self._axioms_by_name[name]
        except KeyError:
            raise ValidationError(f"unknown axiom name: {name!r}") from None


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _require_keys(obj: dict, allowed: set[str], required: set[str], where: str) -> None:
    if not isinstance(obj, dict):
        raise ValidationError(f"{where}: expected an object")
    extra = set(obj) - allowed
    if extra:
        raise ValidationError(f"{where}: unknown keys {sorted(extra)}")
    missing = required - set(obj)
    if missing:
        raise ValidationError(f"{where}: missing keys {sorted(missing)}")


def _check_mu(values, where: str) -> tuple[int, ...]:
    if (not isinstance(values, list) or not values
            or not all(isinstance(v, int) and v >= 1 for v in values)):
        raise ValidationError(f"{where}: mu must be a nonempty list of positive integers")
    mu = tuple(values)
    if list(mu) != sorted(set(mu)):
        raise ValidationError(f"{where}: mu must be strictly increasing")
    for a in mu:
        for b in mu:
            if a != b and b % a == 0:
                raise ValidationError(f"{where}: mu is not an antichain ({a} divides {b})")
    return mu


def _parse_statement(obj: dict, where: str) -> ModuleStatement:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ValidationError(f"{where}: statement must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "forced_adjacency":
        _require_keys(obj, {"kind", "primes"}, {"kind", "primes"}, where)
        primes = obj["primes"]
        if (not isinstance(primes, list) or len(primes) != 2
                or not all(_is_prime(p) for p in primes) or primes[0] == primes[1]):
            raise ValidationError(f"{where}: forced_adjacency needs two distinct primes")
        return ForcedAdjacency(primes[0], primes[1])
    if kind == "forced_dimensions":
        _require_keys(obj, {"kind", "dimensions"}, {"kind", "dimensions"}, where)
        dims = obj["dimensions"]
        if (not isinstance(dims, list) or not dims
                or not all(isinstance(d, int) and d >= 1 for d in dims)
                or dims != sorted(set(dims))):
            raise ValidationError(f"{where}: forced_dimensions needs increasing positive dimensions")
        return ForcedDimensions(tuple(dims))
    if kind == "fixed_point_free_class":
        _require_keys(obj, {"kind", "class_label", "element_order"},
                      {"kind", "class_label", "element_order"}, where)
        label, order = obj["class_label"], obj["element_order"]
        if not isinstance(label, str) or not label:
            raise ValidationError(f"{where}: class_label must be a nonempty string")
        if not isinstance(order, int) or order < 2:
            raise ValidationError(f"{where}: element_order must be an integer >= 2")
        return FixedPointFreeClass(label, order)
    if kind == "forced_order":
        _require_keys(obj, {"kind", "order"}, {"kind", "order"}, where)
        order = obj["order"]
        if not isinstance(order, int) or order < 2:
            raise ValidationError(f"{where}: order must be an integer >= 2")
        return ForcedOrder(order)
    raise ValidationError(f"{where}: unknown statement kind {kind!r}")


_RECORD_KEYS = {"name", "order_factors", "out_order", "out_structure", "mu",
                "frobenius_witnesses", "module_facts", "extension_witnesses",
                "citations"}
_RECORD_REQUIRED = _RECORD_KEYS - {"mu"}


def _parse_record(obj: dict) -> SimpleGroupRecord:
    name = obj.get("name") if isinstance(obj, dict) else None
    where = f"record {name!r}" if isinstance(name, str) else "record"
    _require_keys(obj, _RECORD_KEYS, _RECORD_REQUIRED, where)
    if not isinstance(name, str) or not name:
        raise ValidationError(f"{where}: name must be a nonempty string")

    factors = obj["order_factors"]
    if (not isinstance(factors, list) or not factors
            or not all(isinstance(pe, list) and len(pe) == 2 for pe in factors)):
        raise ValidationError(f"{where}: order_factors must be a list of [prime, exponent] pairs")
    parsed = []
    for p, e in factors:
        if not (isinstance(p, int) and _is_prime(p)):
            raise ValidationError(f"{where}: order_factors: {p} is not prime")
        if not (isinstance(e, int) and e >= 1):
            raise ValidationError(f"{where}: order_factors: exponent {e} < 1")
        parsed.append((p, e))
    primes = [p for p, _ in parsed]
    if primes != sorted(set(primes)):
        raise ValidationError(f"{where}: order_factors primes must be strictly increasing")
    if not {2, 3} <= set(primes):
        raise ValidationError(f"{where}: order must be divisible by 2 and 3")
    order = math.prod(p ** e for p, e in parsed)

    out_order = obj["out_order"]
    if not isinstance(out_order, int) or out_order < 1:
        raise ValidationError(f"{where}: out_order must be a positive integer")
    if not set(primes_of([out_order])) <= {2, 3}:
        raise ValidationError(f"{where}: out_order has a prime divisor outside {{2, 3}}")
    out_structure = obj["out_structure"]
    if not isinstance(out_structure, str) or not out_structure:
        raise ValidationError(f"{where}: out_structure must be a nonempty string")

    mu = obj.get("mu")
    if mu is not None:
        mu = _check_mu(mu, where)
        mu_primes = set(primes_of(mu))
        if not mu_primes <= set(primes):
            raise ValidationError(f"{where}: mu primes {sorted(mu_primes - set(primes))} do not divide the order")

    witnesses = []
    for i, w in enumerate(obj["frobenius_witnesses"]):
        w_where = f"{where}: frobenius_witnesses[{i}]"
        _require_keys(w, {"kernel_order", "complement_order", "citation"},
                      {"kernel_order", "complement_order", "citation"}, w_where)
        k, c, cite = w["kernel_order"], w["complement_order"], w["citation"]
        if not (isinstance(k, int) and k >= 2 and isinstance(c, int) and c >= 2):
            raise ValidationError(f"{w_where}: kernel and complement orders must be >= 2")
        if order % (k * c) != 0:
            raise ValidationError(f"{w_where}: {k}*{c} does not divide the group order")
        if not isinstance(cite, str) or not cite:
            raise ValidationError(f"{w_where}: citation must be nonempty")
        witnesses.append(FrobeniusWitness(k, c, cite))

    facts = []
    for i, f in enumerate(obj["module_facts"]):
        f_where = f"{where}: module_facts[{i}]"
        _require_keys(f, {"group", "characteristic", "statement", "citation"},
                      {"group", "characteristic", "statement", "citation"}, f_where)
        if not isinstance(f["group"], str) or not f["group"]:
            raise ValidationError(f"{f_where}: group must be a nonempty string")
        if not (isinstance(f["characteristic"], int) and _is_prime(f["characteristic"])):
            raise ValidationError(f"{f_where}: characteristic must be prime")
        if not isinstance(f["citation"], str) or not f["citation"]:
            raise ValidationError(f"{f_where}: citation must be nonempty")
        facts.append(ModuleFact(f["group"], f["characteristic"],
                                _parse_statement(f["statement"], f_where),
                                f["citation"]))

    extensions = []
    for i, x in enumerate(obj["extension_witnesses"]):
        x_where = f"{where}: extension_witnesses[{i}]"
        _require_keys(x, {"index", "order", "citation"},
                      {"index", "order", "citation"}, x_where)
        idx, xo, cite = x["index"], x["order"], x["citation"]
        if not (isinstance(idx, int) and idx >= 2 and out_order % idx == 0):
            raise ValidationError(f"{x_where}: index must be >= 2 and divide out_order")
        if not (isinstance(xo, int) and xo >= 2):
            raise ValidationError(f"{x_where}: order must be an integer >= 2")
        if not isinstance(cite, str) or not cite:
            raise ValidationError(f"{x_where}: citation must be nonempty")
        extensions.append(ExtensionWitness(idx, xo, cite))

    citations = obj["citations"]
    if (not isinstance(citations, list) or not citations
            or not all(isinstance(c, str) and c for c in citations)):
        raise ValidationError(f"{where}: citations must be a nonempty list of nonempty strings")

    return SimpleGroupRecord(
        name=name, order_factors=tuple(parsed), order=order,
        out_order=out_order, out_structure=out_structure, mu=mu,
        frobenius_witnesses=tuple(witnesses), module_facts=tuple(facts),
        extension_witnesses=tuple(extensions), citations=tuple(citations),
    )


_TARGET_KEYS = {"name", "socle", "mu", "max_prime", "required_prime", "citation"}


def _parse_target(obj: dict, record_names: set[str]) -> TargetSpec:
    name = obj.get("name") if isinstance(obj, dict) else None
    where = f"target {name!r}" if isinstance(name, str) else "target"
    _require_keys(obj, _TARGET_KEYS, _TARGET_KEYS, where)
    if not isinstance(name, str) or not name:
        raise ValidationError(f"{where}: name must be a nonempty string")
    if obj["socle"] not in record_names:
        raise ValidationError(f"{where}: socle {obj['socle']!r} is not a record name")
    mu = _check_mu(obj["mu"], where)
    mu_primes = set(primes_of(mu))
    max_prime = obj["max_prime"]
    if max_prime != max(mu_primes):
        raise ValidationError(f"{where}: max_prime {max_prime} != largest spectrum prime {max(mu_primes)}")
    required = obj["required_prime"]
    if required is not None and (not _is_prime(required) or required not in mu_primes):
        raise ValidationError(f"{where}: required_prime must be a prime dividing the spectrum")
    if not isinstance(obj["citation"], str) or not obj["citation"]:
        raise ValidationError(f"{where}: citation must be nonempty")
    return TargetSpec(name=name, socle=obj["socle"], mu=mu, max_prime=max_prime,
                      required_prime=required, citation=obj["citation"])


def load(path: str | Path | None = None) -> Catalog:
    """Load and fully validate a catalog file (default: the shipped one)."""
    if path is None:
        path = default_catalog_path()
    path = Path(path)
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise ValidationError(f"cannot read catalog file {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"catalog file {path} is not valid JSON: {exc}") from exc

    _require_keys(doc, {"simple_groups", "targets", "axioms"},
                  {"simple_groups", "targets", "axioms"}, "catalog")
    if not all(isinstance(doc[k], list) for k in ("simple_groups", "targets", "axioms")):
        raise ValidationError("catalog: top-level sections must be lists")

    records = tuple(_parse_record(obj) for obj in doc["simple_groups"])
    names = [r.name for r in records]
    dup = {n for n in names if names.count(n) > 1}
    if dup:
        raise ValidationError(f"catalog: duplicate record names {sorted(dup)}")
    core = [r for r in records if r.max_prime <= 11]
    if len(core) != 28:
        raise ValidationError(f"catalog: expected 28 records with primes <= 11, found {len(core)}")

    targets = tuple(_parse_target(obj, set(names)) for obj in doc["targets"])
    tnames = [t.name for t in targets]
    if len(tnames) != len(set(tnames)):
        raise ValidationError("catalog: duplicate target names")

    axioms = []
    for obj in doc["axioms"]:
        where = f"axiom {obj.get('name')!r}" if isinstance(obj, dict) else "axiom"
        _require_keys(obj, {"name", "statement", "citation"},
                      {"name", "statement", "citation"}, where)
        if not all(isinstance(obj[k], str) and obj[k] for k in ("name", "statement", "citation")):
            raise ValidationError(f"{where}: name, statement, citation must be nonempty strings")
        axioms.append(Axiom(obj["name"], obj["statement"], obj["citation"]))
    anames = [a.name for a in axioms]
    if len(anames) != len(set(anames)):
        raise ValidationError("catalog: duplicate axiom names")

    return Catalog(
        records=records, targets=targets, axioms=tuple(axioms),
        _by_name={r.name: r for r in records},
        _targets_by_name={t.name: t for t in targets},
        _axioms_by_name={a.name: a for a in axioms},
    )


def subcatalog(cat: Catalog, max_prime: int,
               required_prime: int | None = None) -> tuple[SimpleGroupRecord, ...]:
    """Records whose order primes are all <= max_prime, in catalog order.

    With required_prime given, keep only records it divides; by Cauchy this
    is the same as requiring an element of that order.
    """
    out = []
    for r in cat.records:
        if r.max_prime > max_prime:
            continue
        if required_prime is not None and r.order % required_prime != 0:
            continue
        out.append(r)
    return tuple(out)


def aut_order_power(record: SimpleGroupRecord, t: int) -> int:
    """|Aut(S^t)| = (|S| * out)^t * t! for a direct power of the record."""
    if t < 1:
        raise ValidationError("t must be >= 1")
    return (record.order * record.out_order) ** t * math.factorial(t)


def cross_validate_mu(cat: Catalog, cap: int = DEFAULT_CAP,
                      names: list[str] | None = None) -> list[tuple[str, bool]]:
    """Exhaustively recompute mu for every checkable record.

    A record is checkable when mu is present, a generator file is shipped,
    and the group order is at most the cap. Returns (name, ok) pairs where
    ok means the enumerated spectrum equals the divisor closure of mu.
    """
    results = []
    for r in cat.records:
        if names is not None and r.name not in names:
            continue
        if r.mu is None or r.order > cap:
            continue
        path = generator_path(r.name)
        if path is None:
            continue
        degree, gens = load_generator_file(path)
        group = PermutationGroup(degree, gens)
        if group.order() != r.order:
            results.append((r.name, False))
            continue
        spectrum = group.spectrum_exhaustive(cap=cap)
        ok = spectrum.mu == r.mu
        results.append((r.name, ok))
    return results
