"""
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
import pytest

from proton.stubborn.util import THREADS_ENV_VAR, get_worker_count


@pytest.mark.parametrize("value, expected", [
    (None, 4),
    ("2", 2),
    ("16", 4),
    ("0", 4),
    ("-3", 4),
    ("many", 4),
])
def test_worker_count(monkeypatch, value, expected):
    if value is None:
        monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
    else:
        monkeypatch.setenv(THREADS_ENV_VAR, value)

    assert get_worker_count(default=4) == expected
