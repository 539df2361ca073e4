"""
Process pool shared by the corpus runner.


Copyright (c) 2026 Proton AG

This file is part of Proton Stubborn Cert.

Proton Stubborn Cert is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Proton Stubborn Cert is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Proton Stubborn Cert.  If not, see <https://www.gnu.org/licenses/>.
"""
import asyncio
import concurrent.futures
import logging
from concurrent.futures import Future, ProcessPoolExecutor
from threading import Lock
from typing import Optional

from proton.stubborn.util import get_worker_count

logger = logging.getLogger(__name__)


async def wrap_future(future: concurrent.futures.Future, timeout: Optional[float] = None):
    """Wraps a concurrent.future.Future object in an asyncio.Future object."""
    return await asyncio.wait_for(
        asyncio.wrap_future(future, loop=asyncio.get_running_loop()),
        timeout=timeout
    )


class WorkerPool:
    """
    Wrapper over a process pool executor.

    Every instance submits to the same executor, which is started on first
    use and sized by STUBBORN_CERT_THREADS.
    """
    _lock = Lock()
    _executor = None
    _workers = 0

    @classmethod
    def initialize_executor_singleton(cls):
        """
        Initializes the executor singleton.

        If the singleton was initialized, this method will do nothing.

        A double-checked lock is used to avoid the possibility of multiple
        threads concurrently starting multiple process pools.
        """
        if cls._executor:
            return

        with cls._lock:
            if not cls._executor:
                cls._initialize_executor_singleton()

    @classmethod
    def _initialize_executor_singleton(cls):
        cls._workers = get_worker_count()
        cls._executor = ProcessPoolExecutor(max_workers=cls._workers)
        logger.debug(f"Started a process pool with {cls._workers} workers")

    @classmethod
    def shutdown(cls):
        """Stops the executor; the next instance starts a fresh one."""
        with cls._lock:
            if cls._executor:
                cls._executor.shutdown(wait=True)
                logger.debug("Process pool stopped")
            cls._executor = None
            cls._workers = 0

    def __init__(self):
        self.initialize_executor_singleton()

    @property
    def workers(self) -> int:
        """Number of worker processes."""
        return self._workers

    def submit(self, function, *args) -> Future:
        """Runs a picklable module-level function in a worker process."""
        return self._executor.submit(function, *args)

    async def run(self, function, *args, timeout: Optional[float] = None):
        """Awaits a function run in a worker process."""
        return await wrap_future(self.submit(function, *args), timeout=timeout)
