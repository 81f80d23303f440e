#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from pathlib import Path
from typing import Dict, Union

import pandas as pd


def campaign_table(report: Dict) -> pd.DataFrame:
    """Per-theorem tallies of a serialized campaign report, one row per theorem id.

    Args:
        report (Dict): Campaign report as produced by ``CampaignReport.to_dict``.

    Returns:
        pd.DataFrame: Tallies indexed by theorem id, with the truncation counts.
    """
    table = pd.DataFrame.from_dict(report['tallies_by_theorem'], orient='index')
    table['truncated'] = [report['truncated'].get(name, 0) for name in table.index]
    return table


def write_campaign_csv(report: Dict, path_csv: Union[Path, str]) -> None:
    """Writes the per-theorem tallies of a campaign report to a CSV file.

    Args:
        report (Dict): Campaign report as produced by ``CampaignReport.to_dict``.
        path_csv (Union[Path, str]): Path of the CSV file.

    Returns:
        None.
    """
    path_csv = Path(path_csv)
    path_csv.parent.mkdir(parents=True, exist_ok=True)
    campaign_table(report).to_csv(path_csv,
                                  sep=',',
                                  encoding='utf-8',
                                  index=True,
                                  index_label='theorem')
