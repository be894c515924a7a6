"""Rebuild dji_weekly.csv from the DJIA daily closes shipped in the
rdatasets wheel (pip download rdatasets==0.2.10 --no-deps).

Usage: python build_dji_weekly.py <unpacked-wheel-dir> > dji_weekly.csv
"""
import datetime as dt
import pathlib
import sys

import pandas as pd

FIRST_WEEK = dt.date(2006, 7, 16)
LAST_WEEK = dt.date(2010, 2, 21)


def main(root: str) -> None:
    daily = pd.read_pickle(pathlib.Path(root) / "rdatasets/_data/stevedata/DJIA.pkl.compress",
                           compression="xz")
    daily["date"] = pd.to_datetime(daily["date"]).dt.date
    daily = daily.set_index("date")["value"].dropna().sort_index()

    print("date,close")
    week = FIRST_WEEK
    while week <= LAST_WEEK:
        # Trading days Monday..Friday after the labelling Sunday.
        days = daily[(daily.index > week) & (daily.index < week + dt.timedelta(days=7))]
        if len(days):
            print(f"{week.isoformat()},{days.iloc[-1]:.2f}")
        week += dt.timedelta(days=7)


if __name__ == "__main__":
    main(sys.argv[1])
