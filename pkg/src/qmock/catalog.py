"""Registry of identities and the drivers that verify them.

Builders are registered once by name; identities refer to builders by
name, so the CLI, the tests and the verifier share one construction path.
A :class:`Catalog` is immutable; :meth:`Catalog.with_builder` returns a copy
with one builder swapped out (used for fault injection).
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from . import builders as b
from . import partitions, snsum
from .bivariate import ZQSeries, zq_specialize
from .series import MonomialSpec, QSeries

UNIVARIATE = "univariate"
BIVARIATE = "bivariate"
PER_N = "per_N"

DEFAULT_Q_ORDER = 200
DEFAULT_BIVARIATE = (60, 40)
DEFAULT_N_MAX = 25


class UnknownIdentityError(KeyError):
    pass


class UnknownBuilderError(KeyError):
    pass


@dataclass(frozen=True)
class SeriesBuilder:
    """A named construction; ``bivariate`` builders take ``(z_order, q_order)``."""

    func: Callable
    bivariate: bool = False


@dataclass(frozen=True)
class Specialization:
    """Univariate builder obtained from ``base`` by setting ``z = sign * q**exponent``."""

    base: str
    sign: int
    exponent: int = 0


BuilderSpec = Union[SeriesBuilder, Specialization]


def _series_from_counts(counts_fn):
    def build(q_order, **_):
        return QSeries(counts_fn(q_order))
    return build


BUILDERS: Dict[str, BuilderSpec] = {
    # two-variable
    "omega-z-eulerian": SeriesBuilder(b.build_omega_z_eulerian, True),
    "omega-z-simple": SeriesBuilder(b.build_omega_z_simple, True),
    "omega-z-slashed": SeriesBuilder(b.build_omega_z_slashed, True),
    "nu-z-eulerian": SeriesBuilder(b.build_nu_z_eulerian, True),
    "nu-z-product": SeriesBuilder(b.build_nu_z_product, True),
    "nu1-z-eulerian": SeriesBuilder(b.build_nu1_z_eulerian, True),
    "nu1-z-product": SeriesBuilder(b.build_nu1_z_product, True),
    "thm1-omega-lhs": SeriesBuilder(b.build_thm1_omega_lhs, True),
    "thm1-omega-rhs": SeriesBuilder(b.build_thm1_omega_rhs, True),
    "thm1-nu-lhs": SeriesBuilder(b.build_thm1_nu_lhs, True),
    "thm1-nu-rhs": SeriesBuilder(b.build_thm1_nu_rhs, True),
    "thm2omega-rhs": SeriesBuilder(b.build_thm2omega_rhs, True),
    # one-variable
    "omega": SeriesBuilder(b.build_omega),
    "nu": SeriesBuilder(b.build_nu),
    "q-omega": SeriesBuilder(b.build_q_omega),
    "nu-neg": SeriesBuilder(b.build_nu_neg),
    "ady-omega-lhs": SeriesBuilder(b.build_ady_omega_lhs),
    "ady-nu-lhs": SeriesBuilder(b.build_ady_nu_lhs),
    "ady-nu-rhs": SeriesBuilder(b.build_ady_nu_rhs),
    "pnt-omega-lhs": SeriesBuilder(b.build_pnt_omega_lhs),
    "pnt-omega-rhs": SeriesBuilder(b.build_pnt_omega_rhs),
    "pnt-nu-lhs": SeriesBuilder(b.build_pnt_nu_lhs),
    "pnt-nu-rhs": SeriesBuilder(b.build_pnt_nu_rhs),
    "entry-953-lhs": SeriesBuilder(b.build_entry953_lhs),
    "entry-953-rhs": SeriesBuilder(b.build_entry953_rhs),
    "entry-952-lhs": SeriesBuilder(b.build_entry952_lhs),
    "eq11-rhs": SeriesBuilder(b.build_eq11_rhs),
    "pomega-series": SeriesBuilder(_series_from_counts(partitions.omega_counts)),
    "pnu-series": SeriesBuilder(_series_from_counts(partitions.nu_counts)),
    # specializations of two-variable builders
    "omega-z-eulerian.z1": Specialization("omega-z-eulerian", 1),
    "nu-z-eulerian.z1": Specialization("nu-z-eulerian", 1),
    "thm1-omega-lhs.z1": Specialization("thm1-omega-lhs", 1),
    "thm1-nu-lhs.z1": Specialization("thm1-nu-lhs", 1),
    "thm1-omega-rhs.z1": Specialization("thm1-omega-rhs", 1),
    "thm1-nu-rhs.z1": Specialization("thm1-nu-rhs", 1),
    "thm1-omega-lhs.zm1": Specialization("thm1-omega-lhs", -1),
    "thm1-nu-lhs.zm1": Specialization("thm1-nu-lhs", -1),
}


@dataclass(frozen=True)
class IdentityRecord:
    id: str
    description: str
    formula: str
    kind: str
    lhs: Optional[str] = None
    rhs: Optional[str] = None
    # per_N records: check(N) -> CheckResult
    check: Optional[Callable[[int], snsum.CheckResult]] = field(default=None, compare=False)
    default_q_order: int = DEFAULT_Q_ORDER
    default_z_order: Optional[int] = None
    default_n_max: Optional[int] = None
    n_min: int = 0

    def __post_init__(self):
        if self.kind not in (UNIVARIATE, BIVARIATE, PER_N):
            raise ValueError(f"unknown kind {self.kind!r}")
        if self.kind == PER_N:
            if self.check is None or not self.default_n_max:
                raise ValueError(f"{self.id}: per_N records need a check and a positive N range")
        elif not (self.lhs and self.rhs) or self.default_q_order <= 0:
            raise ValueError(f"{self.id}: series records need two builders and a positive order")
        if self.kind == BIVARIATE and not self.default_z_order:
            raise ValueError(f"{self.id}: bivariate records need a positive z-order")


@dataclass(frozen=True)
class Mismatch:
    z_degree: int
    q_exponent: int
    lhs: int
    rhs: int


@dataclass(frozen=True)
class VerifyReport:
    identity: str
    status: str
    q_order: int
    z_order: Optional[int]
    first_mismatch: Optional[Mismatch]
    elapsed_ms: int

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"bad status {self.status!r}")
        if (self.status == "fail") != (self.first_mismatch is not None):
            raise ValueError("status 'fail' goes with a mismatch and only then")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def as_dict(self) -> dict:
        fm = self.first_mismatch
        return {
            "identity": self.identity,
            "status": self.status,
            "q_order": self.q_order,
            "z_order": self.z_order,
            "first_mismatch": None if fm is None else {
                "z_degree": fm.z_degree,
                "q_exponent": fm.q_exponent,
                "lhs": str(fm.lhs),
                "rhs": str(fm.rhs),
            },
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict())

    @classmethod
    def from_json(cls, text: str) -> "VerifyReport":
        d = json.loads(text)
        fm = d["first_mismatch"]
        return cls(d["identity"], d["status"], d["q_order"], d["z_order"],
                   None if fm is None else Mismatch(fm["z_degree"], fm["q_exponent"],
                                                    int(fm["lhs"]), int(fm["rhs"])),
                   d["elapsed_ms"])


def _for_each_i(fn, i_max=6):
    def run(N):
        for i in range(i_max + 1):
            res = fn(N, i)
            if not res:
                return res
        return res
    return run


def _chain(which):
    return lambda N: snsum.check_chain(N, which)


def _uni(id, desc, formula, lhs, rhs, **kw):
    return IdentityRecord(id, desc, formula, UNIVARIATE, lhs, rhs, **kw)


def _bi(id, desc, formula, lhs, rhs):
    return IdentityRecord(id, desc, formula, BIVARIATE, lhs, rhs,
                          default_q_order=DEFAULT_BIVARIATE[0], default_z_order=DEFAULT_BIVARIATE[1])


def _fam(id, desc, formula, check, n_min=0):
    return IdentityRecord(id, desc, formula, PER_N, check=check, default_n_max=DEFAULT_N_MAX, n_min=n_min)


RECORDS: Tuple[IdentityRecord, ...] = (
    _uni("watson-omega-def", "omega(q) equals omega(z;q) at z=1",
         "sum q^(2n^2+2n)/(q;q^2)_{n+1}^2 = [sum z^n q^(2n^2+2n)/((q;q^2)_{n+1}(zq;q^2)_{n+1})]_{z=1}",
         "omega", "omega-z-eulerian.z1"),
    _uni("watson-nu-def", "nu(q) equals nu(z;q) at z=1",
         "sum q^(n^2+n)/(-q;q^2)_{n+1} = [sum q^(n^2+n)/(-zq;q^2)_{n+1}]_{z=1}",
         "nu", "nu-z-eulerian.z1"),
    _uni("ady-omega", "smallest-part generating function for p_omega equals q*omega(q)",
         "sum_{n>=1} q^n/((q^n;q)_{n+1}(q^{2n+2};q^2)_inf) = sum q^(2n^2+2n+1)/(q;q^2)_{n+1}^2",
         "ady-omega-lhs", "q-omega"),
    _uni("ady-nu", "smallest-part generating function for p_nu equals nu(-q)",
         "sum q^n (-q^{n+1};q)_n (-q^{2n+2};q^2)_inf = sum q^(n^2+n)/(q;q^2)_{n+1}",
         "ady-nu-lhs", "ady-nu-rhs"),
    _uni("pomega-oracle", "counted p_omega(n) against q*omega(q)",
         "sum_n p_omega(n) q^n = q omega(q)", "pomega-series", "q-omega"),
    _uni("pnu-oracle", "counted p_nu(n) against nu(-q)",
         "sum_n p_nu(n) q^n = nu(-q)", "pnu-series", "nu-neg"),
    _uni("thm1-omega-z1", "two-variable omega LHS at z=1 gives q*omega(q)",
         "[sum_{n>=1} q^n/((zq^n;q)_{n+1}(zq^{2n+2};q^2)_inf)]_{z=1} = q omega(q)",
         "thm1-omega-lhs.z1", "q-omega"),
    _uni("thm1-nu-z1", "two-variable nu LHS at z=1 gives nu(-q)",
         "[sum q^n (-zq^{n+1};q)_n (-zq^{2n+2};q^2)_inf]_{z=1} = sum q^(n^2+n)/(q;q^2)_{n+1}",
         "thm1-nu-lhs.z1", "ady-nu-rhs"),
    _uni("thm1-omega-zm1", "two-variable omega LHS at z=-1 is the pentagonal-analogue LHS",
         "[sum_{n>=1} q^n/((zq^n;q)_{n+1}(zq^{2n+2};q^2)_inf)]_{z=-1} "
         "= sum_{n>=1} q^n/((-q^n;q)_{n+1}(-q^{2n+2};q^2)_inf)",
         "thm1-omega-lhs.zm1", "pnt-omega-lhs"),
    _uni("thm1-nu-zm1", "two-variable nu LHS at z=-1 is the pentagonal-analogue LHS",
         "[sum q^n (-zq^{n+1};q)_n (-zq^{2n+2};q^2)_inf]_{z=-1} = sum q^n (q^{n+1};q)_n (q^{2n+2};q^2)_inf",
         "thm1-nu-lhs.zm1", "pnt-nu-lhs"),
    _uni("entry-953", "sparse expansion of sum q^n/(-q;q^2)_{n+1}",
         "sum q^n/(-q;q^2)_{n+1} = sum_j (-1)^j q^(6j^2+4j) (1+q^(4j+2))",
         "entry-953-lhs", "entry-953-rhs"),
    _uni("entry-952", "sparse expansion of sum (q;q^2)_n q^n, exponents 3j^2+2j and 3j^2+4j+1",
         "sum (q;q^2)_n q^n = sum_j (-1)^j q^(3j^2+2j) (1+q^(2j+1))",
         "entry-952-lhs", "pnt-nu-rhs"),
    _uni("pnt-omega", "pentagonal-number analogue for p_omega",
         "sum_{n>=1} q^n/((-q^n;q)_{n+1}(-q^{2n+2};q^2)_inf) = sum_j (-1)^j q^(6j^2+4j+1) (1+q^(4j+2))",
         "pnt-omega-lhs", "pnt-omega-rhs"),
    _uni("pnt-nu", "pentagonal-number analogue for p_nu",
         "sum q^n (q^{n+1};q)_n (q^{2n+2};q^2)_inf = sum_j (-1)^j q^(3j^2+2j) (1+q^(2j+1))",
         "pnt-nu-lhs", "pnt-nu-rhs"),
    _uni("eq11-bridge", "omega identities at z=-1 meet",
         "sum_{n>=1} q^n/((-q^n;q)_{n+1}(-q^{2n+2};q^2)_inf) = sum q^(n+1)/(-q;q^2)_{n+1}",
         "pnt-omega-lhs", "eq11-rhs"),
    _uni("eq11-nu-bridge", "nu identities at z=-1 meet",
         "sum q^n (q^{n+1};q)_n (q^{2n+2};q^2)_inf = sum (q;q^2)_n q^n",
         "pnt-nu-lhs", "entry-952-lhs"),
    _bi("thm1-omega", "two-variable refinement of the p_omega identity",
        "sum_{n>=1} q^n/((zq^n;q)_{n+1}(zq^{2n+2};q^2)_inf) = sum z^n q^(2n^2+2n+1)/((q;q^2)_{n+1}(zq;q^2)_{n+1})",
        "thm1-omega-lhs", "thm1-omega-rhs"),
    _bi("thm1-nu", "two-variable refinement of the p_nu identity",
        "sum q^n (-zq^{n+1};q)_n (-zq^{2n+2};q^2)_inf = sum z^n q^(n^2+n)/(q;q^2)_{n+1}",
        "thm1-nu-lhs", "thm1-nu-rhs"),
    _bi("thm2omega", "two-variable omega LHS as a simple sum",
        "sum_{n>=1} q^n/((zq^n;q)_{n+1}(zq^{2n+2};q^2)_inf) = sum_{n>=1} z^(n-1) q^n/(q;q^2)_n",
        "thm1-omega-lhs", "thm2omega-rhs"),
    _bi("omega-z-forms-a", "omega(z;q): Eulerian form equals simple form",
        "sum z^n q^(2n^2+2n)/((q;q^2)_{n+1}(zq;q^2)_{n+1}) = sum z^n q^n/(q;q^2)_{n+1}",
        "omega-z-eulerian", "omega-z-simple"),
    _bi("omega-z-forms-b", "omega(z;q): simple form equals the form with z moved to the denominator",
        "sum z^n q^n/(q;q^2)_{n+1} = sum q^n/(zq;q^2)_{n+1}",
        "omega-z-simple", "omega-z-slashed"),
    _bi("nu-z-forms", "nu(z;q): Eulerian form equals product form",
        "sum q^(n^2+n)/(-zq;q^2)_{n+1} = sum (q/z;q^2)_n (-zq)^n",
        "nu-z-eulerian", "nu-z-product"),
    _bi("nu1-forms", "nu_1(z;q): Eulerian form equals product form",
        "sum z^n q^(n^2+n)/(-q;q^2)_{n+1} = sum (zq;q^2)_n (-q)^n",
        "nu1-z-eulerian", "nu1-z-product"),
    _fam("geom", "finite geometric-type sum",
         "sum_{s<=N} q^(2s)/(q^2;q^2)_s = 1/(q^2;q^2)_N", _chain("geom")),
    _fam("eq111", "coefficient of z^N in the omega identity after summing over n",
         "sum_{s<=N} q^(2s)/(q^2;q^2)_s (1/(q^{1+N+s};q)_{N-s+1} - 1) = q^(N+1)/(q;q^2)_{N+1}",
         _chain("eq111")),
    _fam("eq12", "the same, with the geometric-type sum moved across",
         "sum_{s<=N} q^(2s)/((q^2;q^2)_s (q^{1+N+s};q)_{N-s+1}) = 1/(q^2;q^2)_N + q^(N+1)/(q;q^2)_{N+1}",
         _chain("eq12")),
    _fam("eq13", "the same, cleared of denominators",
         "sum_{s<=N} q^(2s)(q;q)_{N+s}/(q^2;q^2)_s = (q;q^2)_{N+1} + q^(N+1)(q^2;q^2)_N",
         _chain("eq13")),
    _fam("eq16", "coefficient of z^N in the nu identity after summing over n",
         "sum_{s<=N} q^binom(N-s+1,2)/((q^2;q^2)_s (q^{N+s+1};q)_{N-s+1}) = 1/(q;q^2)_{N+1}",
         _chain("eq16")),
    _fam("eq17", "the same, cleared of denominators",
         "sum_{s<=N} q^binom(N-s+1,2)(q;q)_{N+s}/(q^2;q^2)_s = (q^2;q^2)_N", _chain("eq17")),
    _fam("eq18", "the same under q -> 1/q, times q^(N^2+N)",
         "sum_{s<=N} q^s (q;q)_{N+s}/(q^2;q^2)_s = (q^2;q^2)_N", _chain("eq18")),
    _fam("sn-step", "S_n(i) in terms of S_{n-1}, for i <= 6",
         "S_n(i) = S_{n-1}(i) - q^n S_{n-1}(i+1) + q^(in) (q;q^2)_n",
         _for_each_i(snsum.check_lemma2), n_min=1),
    _fam("sn-shift", "S_n(i+2) in terms of S_n(i) and S_{n+1}(i), for i <= 6",
         "S_n(i+2) = S_n(i) - q^i S_{n+1}(i) + q^(i(n+1)) (1+q^i) (q;q^2)_{n+1}",
         _for_each_i(snsum.check_lemma3)),
    _fam("sn-closed-1", "closed form of S_n(1)", "S_n(1) = (q^2;q^2)_n", snsum.check_lemma4),
    _fam("sn-closed-2", "closed form of S_n(2)",
         "S_n(2) = (q;q^2)_{n+1} + q^(n+1) (q^2;q^2)_n", snsum.check_lemma5),
    _fam("s1-recurrence", "three-term recurrence for S_n(1)",
         "S_n(1) = (1+q-q^(2n)) S_{n-1}(1) - q (1-q^(2n-2)) S_{n-2}(1)",
         snsum.check_recurrence, n_min=2),
)


class Catalog:
    def __init__(self, records: Iterable[IdentityRecord] = RECORDS,
                 builders: Mapping[str, BuilderSpec] = BUILDERS):
        recs = {}
        for r in records:
            if r.id in recs:
                raise ValueError(f"duplicate identity id {r.id!r}")
            recs[r.id] = r
        self.records: Mapping[str, IdentityRecord] = MappingProxyType(recs)
        self.builders: Mapping[str, BuilderSpec] = MappingProxyType(dict(builders))
        for r in recs.values():
            for name in (r.lhs, r.rhs):
                if name is not None:
                    self.spec(name)

    def ids(self) -> List[str]:
        return sorted(self.records)

    def with_builder(self, name: str, func: Callable, bivariate: Optional[bool] = None) -> "Catalog":
        old = self.spec(name)
        if bivariate is None:
            bivariate = isinstance(old, SeriesBuilder) and old.bivariate
        new = dict(self.builders)
        new[name] = SeriesBuilder(func, bivariate)
        return Catalog(self.records.values(), new)

    def with_record(self, record: IdentityRecord) -> "Catalog":
        recs = dict(self.records)
        recs[record.id] = record
        return Catalog(recs.values(), self.builders)

    def spec(self, name: str) -> BuilderSpec:
        try:
            return self.builders[name]
        except KeyError:
            raise UnknownBuilderError(name) from None

    def is_bivariate(self, name: str) -> bool:
        s = self.spec(name)
        return isinstance(s, SeriesBuilder) and s.bivariate

    def build(self, name: str, q_order: int, z_order: Optional[int] = None):
        """Evaluate builder ``name``; bivariate ones need ``z_order``."""
        s = self.spec(name)
        if isinstance(s, Specialization):
            base = self.spec(s.base)
            need = q_order // (b.ROW_VALUATION + s.exponent)
            grid = base.func(need, q_order)
            return zq_specialize(grid, MonomialSpec(s.sign, s.exponent))
        if s.bivariate:
            if z_order is None:
                raise ValueError(f"builder {name!r} is bivariate and needs a z-order")
            return s.func(z_order, q_order)
        return s.func(q_order)

    def verify(self, id: str, q_order: Optional[int] = None, z_order: Optional[int] = None,
               n_max: Optional[int] = None) -> VerifyReport:
        try:
            rec = self.records[id]
        except KeyError:
            raise UnknownIdentityError(id) from None
        t0 = time.perf_counter()
        if rec.kind == PER_N:
            n_max = rec.default_n_max if n_max is None else n_max
            miss = None
            for N in range(rec.n_min, n_max + 1):
                res = rec.check(N)
                if not res:
                    e, lhs, rhs = res.witness
                    miss = Mismatch(N, e, lhs, rhs)
                    break
            q_used, z_used = 4 * n_max + 4, n_max
        else:
            q_used = rec.default_q_order if q_order is None else q_order
            z_used = None
            if rec.kind == BIVARIATE:
                z_used = rec.default_z_order if z_order is None else z_order
            lhs = self.build(rec.lhs, q_used, z_used)
            rhs = self.build(rec.rhs, q_used, z_used)
            raw = lhs.first_mismatch(rhs)
            miss = None
            if raw is not None:
                miss = Mismatch(*raw) if rec.kind == BIVARIATE else Mismatch(0, *raw)
        elapsed = int(round((time.perf_counter() - t0) * 1000))
        return VerifyReport(rec.id, "pass" if miss is None else "fail", q_used, z_used, miss, elapsed)

    def verify_all(self, q_order: Optional[int] = None, z_order: Optional[int] = None,
                   n_max: Optional[int] = None, ids: Optional[Sequence[str]] = None) -> List[VerifyReport]:
        """Verify every record (or ``ids``), in sorted id order."""
        chosen = self.ids() if ids is None else sorted(ids)
        return [self.verify(i, q_order, z_order, n_max) for i in chosen]


DEFAULT_CATALOG = Catalog()


def verify(id: str, q_order: Optional[int] = None, z_order: Optional[int] = None,
           n_max: Optional[int] = None) -> VerifyReport:
    return DEFAULT_CATALOG.verify(id, q_order, z_order, n_max)


def verify_all(q_order: Optional[int] = None, z_order: Optional[int] = None,
               n_max: Optional[int] = None) -> List[VerifyReport]:
    return DEFAULT_CATALOG.verify_all(q_order, z_order, n_max)


def failures(reports: Iterable[VerifyReport]) -> int:
    return sum(1 for r in reports if not r.passed)
