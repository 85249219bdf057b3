"""Regenerate the bundled asset-catalog fixture.

Deterministic: running it twice produces byte-identical output. Counts per
category follow the dataset summary table the catalog mirrors.

Usage: python tools/make_catalog.py [target_dir]
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

COUNTS = {
    "Indoors": 29,
    "Outdoors": 8,
    "Terrain": 6,
    "Rocks": 7,
    "Plants": 17,
    "Trees": 10,
    "Weather": 7,
    "Foods": 9,
    "Scattering": 24,
    "Materials": 206,
}

NOUNS = {
    "Indoors": ["Armchair", "Bookshelf", "Ceiling Lamp", "Coffee Table", "Curtain",
                "Desk", "Floor Tile", "Kettle", "Mug", "Picture Frame", "Plate",
                "Rug", "Sofa", "Stool", "Vase", "Wall Clock", "Window Frame",
                "Wardrobe", "Bed Frame", "Night Stand", "Mirror", "Door Handle",
                "Radiator", "Chandelier", "Bath Tub", "Sink", "Towel Rack",
                "Candle Holder", "Fruit Bowl"],
    "Outdoors": ["Park Bench", "Street Lamp", "Fence Post", "Mailbox",
                 "Fire Hydrant", "Bus Stop", "Flower Pot", "Garden Gate"],
    "Terrain": ["Rolling Hills", "Canyon Wall", "Sand Dunes", "River Bed",
                "Glacier Sheet", "Volcanic Crust"],
    "Rocks": ["Granite Boulder", "Limestone Slab", "Basalt Column", "River Pebble",
              "Slate Shard", "Sandstone Arch", "Quartz Cluster"],
    "Plants": ["Fern Cluster", "Kelp Strand", "Cactus Paddle", "Ivy Vine",
               "Moss Patch", "Reed Tuft", "Succulent Rosette", "Bramble Bush",
               "Water Lily", "Desert Shrub", "Corn Stalk", "Wheat Row",
               "Thistle Head", "Clover Carpet", "Bamboo Culm", "Lavender Spray",
               "Sunflower Head"],
    "Trees": ["Oak Tree", "Pine Tree", "Birch Tree", "Willow Tree", "Maple Tree",
              "Palm Tree", "Cypress Tree", "Baobab Tree", "Spruce Tree",
              "Acacia Tree"],
    "Weather": ["Rain Sheet", "Snow Flurry", "Fog Bank", "Lightning Bolt",
                "Hail Burst", "Dust Devil", "Cloud Deck"],
    "Foods": ["Sourdough Loaf", "Apple", "Pumpkin", "Cheese Wheel", "Carrot",
              "Mushroom Cap", "Pineapple", "Banana Bunch", "Watermelon"],
    "Scattering": ["Leaf Litter", "Pine Needle Drift", "Gravel Scatter",
                   "Twig Spread", "Seashell Strewing", "Petal Fall",
                   "Acorn Scatter", "Bark Chips", "Pebble Wash", "Ash Dusting",
                   "Feather Drift", "Pollen Haze", "Snail Shell Field",
                   "Driftwood Pieces", "Crystal Shards", "Bone Fragments",
                   "Coral Bits", "Seaweed Wrack", "Mulch Layer", "Husk Scatter",
                   "Thorn Spread", "Cone Drop", "Frost Specks", "Ember Sparks"],
    "Materials": ["Brushed Copper", "Rough Granite", "Wet Asphalt", "Aged Oak",
                  "Polished Marble", "Rusted Iron", "Woven Linen", "Cracked Clay",
                  "Frosted Glass", "Hammered Brass", "Mossy Stone", "Pine Bark",
                  "Sea Foam", "Desert Sand", "Glacier Ice", "Lava Crust",
                  "Velvet Cloth", "Carbon Weave", "Worn Leather", "River Silt"],
}

VERBS = ["procedurally builds", "synthesizes", "assembles", "generates", "composes"]
TRAITS = ["with seeded parameter jitter", "with adjustable density controls",
          "with layered noise displacement", "with configurable color ramps",
          "with physically plausible proportions", "tuned for mid-distance shots"]


def code_text(name: str, category: str, rng: random.Random) -> str:
    size = round(rng.uniform(0.2, 4.0), 3)
    detail = rng.randrange(1, 6)
    roughness = round(rng.uniform(0.0, 1.0), 3)
    return (
        f'"""{name} generator ({category})."""\n\n'
        f"PARAMS = {{\n"
        f'    "size": {size},\n'
        f'    "detail": {detail},\n'
        f'    "roughness": {roughness},\n'
        f"}}\n\n\n"
        f"def build(nt, params=PARAMS):\n"
        f'    node = nt.nodes.new("GeometryNodeGroup")\n'
        f'    node.label = "{name}"\n'
        f"    for key, value in params.items():\n"
        f"        node[key] = value\n"
        f"    return node\n"
    )


def main(target: Path) -> None:
    rng = random.Random(20240323)
    code_dir = target / "code"
    code_dir.mkdir(parents=True, exist_ok=True)
    lines = []
    for category, count in COUNTS.items():
        pool = NOUNS[category]
        for n in range(count):
            base = pool[n % len(pool)]
            name = base if n < len(pool) else f"{base} {n // len(pool) + 1:02d}"
            if category == "Materials":
                name = f"{name} Material" if "Material" not in name else name
            slug = "-".join(name.lower().split())
            verb = rng.choice(VERBS)
            trait = rng.choice(TRAITS)
            description = f"{verb} a {base.lower()} {trait}."
            rel = f"code/{slug}.py"
            (target / rel).write_text(code_text(name, category, rng), encoding="utf-8")
            lines.append(
                json.dumps(
                    {
                        "id": slug,
                        "name": name,
                        "category": category,
                        "description": description,
                        "code_path": rel,
                        "license": "CC-BY-4.0",
                    },
                    sort_keys=True,
                    ensure_ascii=True,
                )
            )
    (target / "manifest.jsonl").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} records under {target}")


if __name__ == "__main__":
    default = Path(__file__).resolve().parent.parent / "src/sceneloom/data/catalog"
    main(Path(sys.argv[1]) if len(sys.argv) > 1 else default)
