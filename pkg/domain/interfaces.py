from abc import ABC, abstractmethod
from typing import Any, Dict, Optional

from .report import CheckResult


class IVerificationCheck(ABC):
    """
    Verification check interface
    Each check tests one identity on freshly sampled data
    """
    name: str = ""

    @abstractmethod
    def run(self, sample: int) -> CheckResult:
        """
        Run the check on one sample
        Args:
            sample: Sample index, which also seeds the draw
        Returns:
            CheckResult: Outcome with witnesses on failure
        """
        pass

    def applies(self) -> bool:
        """
        Whether the check makes sense for the configured weight
        Returns:
            bool: True if the check should be scheduled
        """
        return True


class IReportExporter(ABC):
    """
    Report exporter interface
    """
    @abstractmethod
    def export(self, report: Dict[str, Any], destination: Optional[str] = None) -> str:
        """
        Write a report
        Args:
            report: JSON-ready report
            destination: Path, or None for standard output
        Returns:
            str: The serialized report
        """
        pass
