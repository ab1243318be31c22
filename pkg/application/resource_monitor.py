#!/usr/bin/env python3
"""
Resource Monitor - Process resource usage for run logs
"""

import logging
import time
from typing import Any, Dict

import psutil

logger = logging.getLogger(__name__)


class ResourceMonitor:
    """
    Measures the current process between start and stop
    Usage is logged only; it never enters a report
    """

    def __init__(self):
        self.process = psutil.Process()
        self.start_time = None

    def start_monitoring(self):
        """
        Start timing and prime the CPU counter
        """
        self.start_time = time.time()
        self.process.cpu_percent()

    def get_current_usage(self) -> Dict[str, Any]:
        """
        Get current process usage
        Returns:
            Dict with memory, CPU and elapsed time
        """
        memory = self.process.memory_info()
        return {
            "memory_rss_mb": memory.rss / (1024 ** 2),
            "cpu_percent": self.process.cpu_percent(),
            "num_threads": self.process.num_threads(),
            "elapsed_seconds": time.time() - self.start_time if self.start_time else 0.0,
        }

    def log_usage(self, label: str = "run"):
        """
        Log current usage at INFO level
        Args:
            label: What the measurement covers
        """
        usage = self.get_current_usage()
        logger.info(
            f"{label}: {usage['elapsed_seconds']:.2f}s, "
            f"RSS {usage['memory_rss_mb']:.1f} MB, CPU {usage['cpu_percent']:.0f}%, "
            f"{usage['num_threads']} threads"
        )
