"""
Process-level helpers shared by the command line and the corpus runner.


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
import logging
import os
from typing import Optional


logger = logging.getLogger(__name__)

THREADS_ENV_VAR = "STUBBORN_CERT_THREADS"


def get_worker_count(default: Optional[int] = None) -> int:
    """Returns the number of corpus workers, capped by STUBBORN_CERT_THREADS."""
    default = default or os.cpu_count() or 1
    value = os.environ.get(THREADS_ENV_VAR)
    if value is None:
        return default

    try:
        workers = int(value)
    except ValueError:
        logger.error(f"Ignoring {THREADS_ENV_VAR}={value!r}: not an integer.")
        return default

    if workers < 1:
        logger.error(f"Ignoring {THREADS_ENV_VAR}={value!r}: must be at least 1.")
        return default

    return min(workers, default)
