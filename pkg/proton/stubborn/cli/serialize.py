"""
Reading command inputs and writing verdict documents.


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
import json
import logging
from pathlib import Path
from typing import Optional, TextIO

logger = logging.getLogger(__name__)

ENCODING = "utf-8"
FILE_PREFIX = "@"


def read_source(argument: str) -> str:
    """An inline expression, or the contents of a UTF-8 file given as ``@path``."""
    if not argument.startswith(FILE_PREFIX):
        return argument
    path = Path(argument[len(FILE_PREFIX):])
    text = path.read_text(encoding=ENCODING).strip()
    logger.debug(f"Read {len(text)} characters from {path}")
    return text


def dumps(document: dict) -> str:
    """Indented JSON with exact rationals kept as strings."""
    return json.dumps(document, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def write_document(document: dict, path: Optional[str] = None, stream: Optional[TextIO] = None):
    """Writes to ``path`` when given, otherwise to ``stream``."""
    text = dumps(document)
    if path:
        Path(path).write_text(text, encoding=ENCODING)
        logger.info(f"Wrote {document.get('command')} verdict to {path}")
    elif stream is not None:
        stream.write(text)


def read_document(path: str) -> dict:
    """Loads a verdict document written by ``write_document``."""
    document = json.loads(Path(path).read_text(encoding=ENCODING))
    if not isinstance(document, dict) or "job" not in document:
        raise ValueError(f"{path} is not a verdict document")
    return document
