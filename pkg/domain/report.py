"""
Results of verification runs
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .enums import CheckStatus


@dataclass
class PullbackReport:
    """
    Outcome of comparing the orbit form pulled back by mu with the chart form

    Attributes:
        pairs_checked: Number of basis pairs (a, b) with a < b
        failures: Mismatching pairs with both sides
    """
    pairs_checked: int = 0
    failures: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {'pairs_checked': self.pairs_checked, 'failures': self.failures}


@dataclass
class CheckResult:
    """
    One sample of one verification check

    Attributes:
        check: Check name
        sample: Sample index
        status: Outcome
        attempts: Draws needed to find an in-chart sample
        detail: Witness data for failures, or error text
    """
    check: str
    sample: int
    status: CheckStatus
    attempts: int = 1
    detail: Optional[Dict[str, Any]] = None

    def __post_init__(self):
        if self.sample < 0:
            raise ValueError("sample index must be non-negative")
        if self.attempts < 1:
            raise ValueError("attempts must be at least 1")

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            'name': self.check,
            'sample': self.sample,
            'status': self.status.value,
            'attempts': self.attempts,
        }
        if self.detail:
            result['detail'] = self.detail
        return result
