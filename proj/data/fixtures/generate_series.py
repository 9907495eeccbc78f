"""Generates component_series.csv, an illustrative monthly year-on-year
series for food, restaurants, energy, other and headline inflation.

The values are invented. They are tuned so that:
  * means from the first month up to 2021-09 are 2.4, 3.8, 4.2 and 1.7
    for food, restaurants, energy and other;
  * the three months before 2022-11 average 15.0, 8.1, 76.0 and 6.0;
  * the three months before 2023-02 average 17.0, 9.8, 88.0 and 5.0.
All values have one decimal. Run from this directory to regenerate.
"""
import math
import random

random.seed(20230201)

START = (1989, 1)
END = (2023, 3)


def months():
    y, m = START
    while (y, m) <= END:
        yield y, m
        m += 1
        if m == 13:
            y, m = y + 1, 1


HIST_MEAN = {"food": 2.4, "restaurants": 3.8, "energy": 4.2, "other": 1.7}
HIST_SD = {"food": 1.8, "restaurants": 1.0, "energy": 7.0, "other": 1.1}
CV = {"food": (14.5, 15.0, 15.5), "restaurants": (7.7, 8.1, 8.5),
      "energy": (70.1, 76.0, 81.9), "other": (5.8, 6.0, 6.2)}
MAIN = {"food": (16.4, 17.0, 17.6), "restaurants": (9.5, 10.1, 9.8),
        "energy": (85.0, 88.0, 91.0), "other": (5.1, 5.0, 4.9)}
CV_TARGET = {"food": 15.0, "restaurants": 8.1, "energy": 76.0, "other": 6.0}
MAIN_TARGET = {"food": 17.0, "restaurants": 9.8, "energy": 88.0, "other": 5.0}
TAIL_END = {"food": 18.0, "restaurants": 10.2, "energy": 80.0, "other": 4.8}


def mean(xs):
    s = 0.0
    for x in xs:
        s += x
    return s / len(xs)


def series_for(name):
    all_months = list(months())
    hist = [m for m in all_months if m <= (2021, 9)]
    n = len(hist)
    phase = random.uniform(0, 2 * math.pi)
    vals = []
    for i in range(n):
        cyc = math.sin(2 * math.pi * i / 97.0 + phase)
        vals.append(round(HIST_MEAN[name] + HIST_SD[name] * (0.8 * cyc + 0.4 * random.gauss(0, 1)), 1))
    # Shift so the mean is on target, then nudge one month at a time until
    # the floating-point mean equals the target exactly.
    diff = round(sum(vals) - HIST_MEAN[name] * n, 1)
    steps = int(round(diff * 10))
    i = 0
    while steps != 0:
        delta = -0.1 if steps > 0 else 0.1
        vals[i % n] = round(vals[i % n] + delta, 1)
        steps += -1 if steps > 0 else 1
        i += 7
    k = 0
    while mean(vals) != HIST_MEAN[name]:
        # Swap +0.1/-0.1 between two months: same decimal sum, different
        # floating-point rounding.
        a, b = (k * 13) % n, (k * 29 + 5) % n
        vals[a] = round(vals[a] + 0.1, 1)
        vals[b] = round(vals[b] - 0.1, 1)
        k += 1
        if k > 10000:
            raise SystemExit("could not hit mean for " + name)
    out = dict(zip(hist, vals))
    # 2021-10 .. 2022-07: ramp towards the cross-validation window.
    ramp = [m for m in all_months if (2021, 10) <= m <= (2022, 7)]
    lo, hi = vals[-1], CV[name][0]
    for j, m in enumerate(ramp):
        out[m] = round(lo + (hi - lo) * (j + 1) / (len(ramp) + 1), 1)
    for m, v in zip([(2022, 8), (2022, 9), (2022, 10)], CV[name]):
        out[m] = v
    for m, v in zip([(2022, 11), (2022, 12), (2023, 1)], MAIN[name]):
        out[m] = v
    out[(2023, 2)] = TAIL_END[name]
    out[(2023, 3)] = round(TAIL_END[name] * 0.97, 1)
    for tri, target in ((CV[name], CV_TARGET[name]), (MAIN[name], MAIN_TARGET[name])):
        s = 0.0
        for v in tri:
            s += v
        assert s / 3.0 == target
    return out


SHARES = {"food": 0.096, "restaurants": 0.074, "energy": 0.041, "other": 0.789}


def main():
    data = {name: series_for(name) for name in HIST_MEAN}
    rows = []
    for m in months():
        for name in ("food", "restaurants", "energy", "other"):
            rows.append((m, name, data[name][m]))
        headline = sum(SHARES[k] * data[k][m] for k in SHARES)
        rows.append((m, "headline", round(headline, 1)))
    with open("component_series.csv", "w") as f:
        f.write("# Illustrative monthly 12-month inflation rates (percent); invented values.\n")
        f.write("date,component,yoy\n")
        for (y, mo), name, v in rows:
            f.write(f"{y:04d}-{mo:02d},{name},{v:.1f}\n")


if __name__ == "__main__":
    main()
