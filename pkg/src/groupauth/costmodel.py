"""Operation counting and the computational-cost comparison table.

Costs are expressed in T_mul,q, the time of one multiplication in a 160-bit
field. The conversion chain is fixed: one elliptic-curve scalar
multiplication T_EM = 29 T_mul,p (1024-bit field multiplications), and
1 T_mul,p = 41 T_mul,q, so 1 T_EM = 1189 T_mul,q.

Only group members are charged in the comparison; the group manager and the
single confirmation point do the heavy recombination work and are tracked
separately. Hash and symmetric-cipher operations carry zero T_mul,q weight
but are still counted raw.
"""

from __future__ import annotations

from dataclasses import dataclass

EM_IN_TMULP = 29
TMULP_IN_TMULQ = 41
EM_IN_TMULQ = EM_IN_TMULP * TMULP_IN_TMULQ  # 1189

CHIEN_SLOPE, CHIEN_INTERCEPT = 7, 6785
HARN_SLOPE, HARN_INTERCEPT = 45, 1418


@dataclass
class CostCounters:
    """Per-role operation counters; only ever incremented, reset between runs."""

    ec_scalar_mults: int = 0
    pairings: int = 0
    field_mults: int = 0
    hash_calls: int = 0

    def as_dict(self) -> dict:
        return {
            "ec_scalar_mults": self.ec_scalar_mults,
            "pairings": self.pairings,
            "field_mults": self.field_mults,
            "hash_calls": self.hash_calls,
        }

    def tmulq(self) -> int:
        """Convert to T_mul,q. Pairings, hashes and symmetric ops have no
        defined weight in the comparison and are excluded."""
        return self.ec_scalar_mults * EM_IN_TMULQ + self.field_mults


@dataclass(frozen=True)
class CostReport:
    scheme: str
    m: int
    cost: int


def member_cost_proposed(m: int) -> int:
    """Per-member authentication cost: one scalar multiplication, flat in m."""
    if m < 1:
        raise ValueError("group size must be positive")
    return EM_IN_TMULQ


def member_cost_chien(m: int) -> int:
    return CHIEN_SLOPE * m + CHIEN_INTERCEPT


def member_cost_harn(m: int) -> int:
    return HARN_SLOPE * m + HARN_INTERCEPT


def comparison_rows(m_min: int = 100, m_max: int = 300, step: int = 2):
    """(m, proposed, chien, harn) tuples over the inclusive range."""
    if m_min < 1:
        raise ValueError("m_min must be at least 1")
    if m_max < m_min:
        raise ValueError("m_max must not be below m_min")
    if step < 1:
        raise ValueError("step must be positive")
    for m in range(m_min, m_max + 1, step):
        yield m, member_cost_proposed(m), member_cost_chien(m), member_cost_harn(m)


def emit_comparison(m_min: int = 100, m_max: int = 300, step: int = 2) -> str:
    """CSV with header m,proposed,chien,harn and LF line endings."""
    lines = ["m,proposed,chien,harn"]
    for m, proposed, chien, harn in comparison_rows(m_min, m_max, step):
        lines.append(f"{m},{proposed},{chien},{harn}")
    return "\n".join(lines) + "\n"
