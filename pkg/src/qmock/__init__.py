"""Exact truncated q-series, two-variable series, partition oracles and an identity catalog."""
from .bivariate import ZQSeries, zq_add, zq_coeff, zq_invert, zq_mul, zq_specialize
from .catalog import Catalog, IdentityRecord, VerifyReport, verify, verify_all
from .kernels import BACKEND
from .partitions import Partition, count_refined, enumerate_nu, enumerate_omega
from .series import (MonomialSpec, QSeries, poch_finite, poch_infinite, qbinom, qs_add,
                     qs_invert, qs_mul, qs_shift)
from .snsum import CheckResult, check_chain, s_poly

__all__ = [
    "BACKEND", "Catalog", "CheckResult", "IdentityRecord", "MonomialSpec", "Partition",
    "QSeries", "VerifyReport", "ZQSeries", "check_chain", "count_refined", "enumerate_nu",
    "enumerate_omega", "poch_finite", "poch_infinite", "qbinom", "qs_add", "qs_invert",
    "qs_mul", "qs_shift", "s_poly", "verify", "verify_all", "zq_add", "zq_coeff",
    "zq_invert", "zq_mul", "zq_specialize",
]
