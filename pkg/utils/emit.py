# utils/emit.py
"""
Output writers. JSON is one top-level object {"command", "records"}; CSV is a
header row plus one row per record, nested fields flattened as "energy.x1".
Both use '.' decimals and LF line endings, and both refuse NaN or infinity.
"""

import json
import logging
import sys
from typing import List, Optional, Union

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

Records = Union[List[dict], pd.DataFrame]


def render(command: str, records: Records, fmt: str) -> str:
    if fmt == "csv":
        frame = records if isinstance(records, pd.DataFrame) else pd.json_normalize(records)
        numeric = frame.select_dtypes(include="number").to_numpy(dtype=float)
        if not np.isfinite(numeric).all():
            raise ValueError(f"{command}: refusing to write non-finite values to CSV")
        return frame.to_csv(index=False, lineterminator="\n")
    if isinstance(records, pd.DataFrame):
        records = records.to_dict(orient="records")
    # allow_nan=False turns a stray NaN into a ValueError instead of invalid JSON
    return json.dumps({"command": command, "records": records}, indent=2, allow_nan=False) + "\n"


def emit(command: str, records: Records, fmt: str = "json", out: Optional[str] = None):
    text = render(command, records, fmt)
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(out, "w", encoding="utf-8", newline="") as f:
        f.write(text)
    logger.info("wrote %d bytes of %s to %s", len(text), fmt, out)
