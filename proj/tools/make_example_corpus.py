#!/usr/bin/env python3
"""Generate the synthetic sector-labelled example corpus under data/example.

The texts are template-generated press-release style sentences. They carry
no real content and exist only to exercise the pipeline end to end.
Usage: make_example_corpus.py [output_dir] [--seed N]
"""

import argparse
import datetime as dt
import pathlib
import random

COMMON = ["covid", "lockdown", "india", "government", "ministry", "pandemic",
          "nationwide", "people", "measures", "ensure", "country", "support"]

SECTORS = {
    "Agriculture and Food": [
        ["food security", "farmers", "crop", "harvest", "procurement", "grain", "mandis"],
        ["farmers", "lakh", "kisan", "installment", "transfer", "issue", "agriculture"],
    ],
    "AYUSH": [
        ["ayush practice", "immunity", "ayurveda", "homeopathy", "infection", "herbal"],
        ["traditional", "preventive", "hygiene", "yoga", "immunity", "kadha"],
    ],
    "Chemicals": [
        ["medicine", "bulk supply", "medical supply", "pharma", "drugs", "pm cares"],
        ["device", "ventilators", "manufacturing", "medical supply", "production"],
        ["mask", "ppe", "sanitiser", "drug surplus", "fertilizers", "stock"],
    ],
    "Electronics & IT": [
        ["fake news", "social media", "fact check", "misinformation", "verify"],
        ["doordarshan", "episodes", "telecast", "ramayana", "broadcast", "viewers"],
        ["telecom", "network", "bandwidth", "connectivity", "digital", "operators"],
    ],
    "Health": [
        ["testing", "laboratories", "samples", "icmr", "kits", "positive"],
        ["hospitals", "beds", "ventilators", "isolation", "patients", "doctors"],
        ["quarantine", "contact tracing", "surveillance", "travellers", "screening"],
    ],
    "Home Affairs": [
        ["supply chain", "essential items", "railways", "goods", "movement"],
        ["surveillance", "drones", "drdo", "containment", "borders", "checkpoint"],
        ["restrictions", "guidelines", "states", "violations", "police", "orders"],
    ],
    "Labour & Commerce": [
        ["msme", "credit", "loans", "enterprises", "relief", "working capital"],
        ["workers", "wages", "epfo", "pension", "withdrawal", "employers"],
    ],
    "MHRD": [
        ["students", "online learning", "education", "platforms", "courses"],
        ["examinations", "schedule", "schools", "universities", "postponed"],
        ["work from home", "books", "reading", "library", "parents"],
    ],
    "PMO": [
        ["prime minister", "address", "nation", "janata curfew", "appeal", "citizens"],
        ["pm cares", "donations", "fund", "contribution", "relief", "generous"],
    ],
    "Power": [
        ["coal", "thermal", "plants", "supply", "stocks", "psu"],
        ["grid", "stability", "lighting appeal", "demand", "adequacy", "renewable"],
    ],
    "Science & Technology": [
        ["research", "proposals", "vaccines", "diagnostics", "funding", "startups"],
        ["virology", "genome", "sequencing", "laboratories", "scientists"],
    ],
    "Social Justice": [
        ["migrant workers", "shelters", "food", "camps", "stranded", "relief"],
        ["self help group", "women", "tribal", "forest produce", "livelihood"],
        ["disability", "elderly", "pension", "guidelines", "caregivers"],
    ],
    "Transport": [
        ["trains", "railways", "freight", "parcel", "essential items", "rakes"],
        ["flights", "airports", "cargo", "lifeline udan", "medical supply"],
    ],
    "Urban": [
        ["smart city", "dashboard", "war room", "monitor", "technology"],
        ["sanitise", "waste", "municipal", "disinfection", "cleaning", "tunnels"],
        ["app", "citizens", "tracking", "gis", "spatial analysis", "helpline"],
    ],
}

OPENERS = ["Shri {name} said that", "The Honourable Minister noted that",
           "Dr. {name} stated that", "An official release confirmed that",
           "It was informed that", "The {sector} department reported that", ""]
NAMES = ["Kumar", "Sharma", "Reddy", "Singh", "Patel", "Nair", "Gupta", "Rao"]
FILLERS = ["the", "of", "and", "to", "in", "for", "with", "all", "are", "has been",
           "were", "is being", "on", "under", "by"]
VERBS = ["ensured", "reviewed", "monitoring", "strengthened", "provided", "expanded",
         "launched", "supporting", "coordinated", "announced"]
NUMBERS = ["Rs. 1,700 crore", "24x7", "2020", "15 lakh", "3.5 percent", "10,000", "No. 40"]
PHRASES = sorted({w for themes in SECTORS.values() for theme in themes for w in theme
                  if " " in w} | {"supply chain", "food security"})


def slug(label):
    return "".join(c.lower() if c.isalnum() else "-" for c in label).strip("-").replace("--", "-")


def sentence(rng, sector, theme):
    words = rng.sample(theme, k=min(len(theme), rng.randint(3, 5)))
    words += rng.sample(COMMON, k=rng.randint(1, 2))
    rng.shuffle(words)
    parts = []
    for i, w in enumerate(words):
        if i:
            parts.append(rng.choice(FILLERS))
        parts.append(w)
        if i == 1:
            parts.append(rng.choice(VERBS))
    if rng.random() < 0.25:
        parts.append(rng.choice(FILLERS))
        parts.append(rng.choice(NUMBERS))
    opener = rng.choice(OPENERS).format(name=rng.choice(NAMES), sector=sector.lower())
    text = (opener + " " if opener else "") + " ".join(parts)
    text = text[0].upper() + text[1:]
    return text + rng.choice([".", ".", ".", "!", "?"])


def document(rng, sector):
    themes = SECTORS[sector]
    weights = [rng.random() + 0.2 for _ in themes]
    paragraphs = []
    for _ in range(rng.randint(3, 5)):
        n = rng.randint(3, 6)
        paragraphs.append(" ".join(
            sentence(rng, sector, rng.choices(themes, weights=weights)[0]) for _ in range(n)))
    return "\n\n".join(paragraphs) + "\n"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("out", nargs="?", default=str(pathlib.Path(__file__).resolve().parent.parent
                                                  / "data" / "example"))
    ap.add_argument("--seed", type=int, default=2020)
    ap.add_argument("--docs-per-sector", type=int, default=8)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    out = pathlib.Path(args.out)
    (out / "texts").mkdir(parents=True, exist_ok=True)
    start = dt.date(2020, 1, 15)
    span = (dt.date(2020, 4, 14) - start).days
    rows = ["id\tpath\tsector\tdate\ttitle"]
    n = 0
    for sector in SECTORS:
        for i in range(args.docs_per_sector):
            n += 1
            doc_id = f"pib-{n:03d}"
            # Spread each sector over the four months of the window.
            lo = span * i // args.docs_per_sector
            hi = span * (i + 1) // args.docs_per_sector
            date = start + dt.timedelta(days=rng.randint(lo, max(lo, hi - 1)))
            rel = f"texts/{slug(sector)}-{i + 1:02d}.txt"
            (out / rel).write_text(document(rng, sector), encoding="utf-8")
            rows.append(f"{doc_id}\t{rel}\t{sector}\t{date.isoformat()}\t{sector} release {i + 1}")
    (out / "manifest.tsv").write_text("\n".join(rows) + "\n", encoding="utf-8")
    (out / "stopwords_extra.txt").write_text(
        "# courtesy and press-release words\nshri\nsmt\nhonourable\nofficial\n"
        "release\ninformed\nstated\nsaid\nnoted\nconfirmed\nreported\ndepartment\ncrore\n"
        "lakh\npercent\ndr\n", encoding="utf-8")
    (out / "phrases.txt").write_text(
        "# merged into single terms\n" + "\n".join(PHRASES) + "\n", encoding="utf-8")
    print(f"wrote {n} documents to {out}")


if __name__ == "__main__":
    main()
