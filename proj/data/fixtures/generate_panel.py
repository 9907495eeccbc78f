"""Generates aggregate_panel.csv from component_series.csv: quarterly means
of the food-and-restaurants, energy and other inflation rates, and an
invented survey mean perception built from them with noise."""
import csv
import random

random.seed(7)
SHARES = {"food": 0.096, "restaurants": 0.074}
series = {}
with open("component_series.csv") as f:
    for row in csv.reader(line for line in f if not line.startswith("#")):
        if row[0] == "date":
            continue
        series.setdefault(row[1], {})[row[0]] = float(row[2])


def quarter_mean(name, year, q):
    months = [f"{year:04d}-{3 * (q - 1) + k:02d}" for k in (1, 2, 3)]
    return sum(series[name][m] for m in months) / 3.0


rows = []
for year in range(2002, 2022):
    for q in (1, 2, 3, 4):
        if (year, q) > (2021, 2):
            break
        food = quarter_mean("food", year, q)
        rest = quarter_mean("restaurants", year, q)
        food_rest = (SHARES["food"] * food + SHARES["restaurants"] * rest) / (
            SHARES["food"] + SHARES["restaurants"])
        energy = quarter_mean("energy", year, q)
        other = quarter_mean("other", year, q)
        mean = 1.6 + 0.31 * food_rest + 0.02 * energy + 0.5 * other + random.gauss(0, 0.25)
        rows.append((f"{year}Q{q}", round(mean, 2), round(food_rest, 3), round(energy, 3), round(other, 3)))

with open("aggregate_panel.csv", "w") as f:
    f.write("# Illustrative quarterly panel; the survey mean is invented.\n")
    f.write("quarter,survey_mean,food_rest,energy,other\n")
    for r in rows:
        f.write(",".join(str(x) for x in r) + "\n")
