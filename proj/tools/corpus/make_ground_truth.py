#!/usr/bin/env python3
"""Builds truth/ground_truth.json from truth/annotations.json.

Every (kind, value) pair the query generator can draw from the corpus gets
an entry keyed "<Kind>:<value>". The recipe files are read only to list
those values; relevance comes from the annotations alone.

Usage: make_ground_truth.py [corpus-dir]
"""
import json
import sys
from pathlib import Path

ROOT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[2] / "corpus"


def norm(s):
    return " ".join(s.lower().split())


def value_pools(recipes):
    pools = {k: set() for k in ["LengthAtMost", "TimeAtMost", "AllergenExcludeExplicit", "IngredientExclude",
                                "IngredientInclude", "NameMatch", "CuisineMatch", "ImageIngredient", "ImageDish"]}
    counts = [sum(len(i["tasks"]) for i in r["instructions"]) for r in recipes]
    pools["LengthAtMost"] = {str(n) for n in range(min(counts), max(counts) + 1)}
    for r in recipes:
        pools["TimeAtMost"].add(str(r["prep_time"] + r["cook_time"]))
        pools["NameMatch"].add(norm(r["name"]))
        if "cuisine" in r:
            pools["CuisineMatch"].add(r["cuisine"])
        for ing in r["ingredients"]:
            pools["IngredientInclude"].add(ing["name"])
            pools["IngredientExclude"].add(ing["name"])
            pools["AllergenExcludeExplicit"].update(a["category"] for a in ing["allergens"])
            if "image_ref" in ing:
                pools["ImageIngredient"].add(ing["image_ref"])
        pools["ImageDish"].update(r["instructions"][-1]["modality"])
    return pools


class Judge:
    def __init__(self, notes):
        self.recipes = notes["recipes"]
        self.concepts = notes["concepts"]
        self.photos = notes["photos"]
        self.alias = {}
        for concept, info in self.concepts.items():
            for a in info["aliases"]:
                self.alias[norm(a)] = concept

    def concept(self, text):
        if norm(text) not in self.alias:
            raise SystemExit(f"no annotated concept for ingredient {text!r}")
        return self.alias[norm(text)]

    def made_from(self, concept):
        seen, stack = set(), [concept]
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            stack.extend(self.concepts[c].get("made_from", []))
        return seen

    def relevant(self, kind, value):
        out = []
        for rid, r in self.recipes.items():
            if kind == "LengthAtMost":
                ok = r["actions"] <= int(value)
            elif kind == "TimeAtMost":
                ok = r["minutes"] <= int(value)
            elif kind == "AllergenExcludeExplicit":
                ok = value not in r["allergens"]
            elif kind == "IngredientExclude":
                target = self.concept(value)
                ok = not any(target in self.made_from(c) for c in r["ingredients"])
            elif kind == "IngredientInclude":
                ok = self.concept(value) in r["ingredients"]
            elif kind == "NameMatch":
                ok = norm(r["title"]) == value
            elif kind == "CuisineMatch":
                ok = r["cuisine"] == value
            elif kind == "ImageIngredient":
                ok = self.photos[value] in r["ingredients"]
            elif kind == "ImageDish":
                ok = r["dish_photo"] == value
            else:
                raise SystemExit(f"unknown kind {kind}")
            if ok:
                out.append(rid)
        return sorted(out)


def main():
    recipes = [json.loads(p.read_text()) for p in sorted((ROOT / "recipes").glob("*.json"))]
    judge = Judge(json.loads((ROOT / "truth" / "annotations.json").read_text()))
    missing = {r["id"] for r in recipes} ^ set(judge.recipes)
    if missing:
        raise SystemExit(f"annotations and recipes disagree on ids: {sorted(missing)}")
    queries = {}
    for kind, values in sorted(value_pools(recipes).items()):
        for v in sorted(values):
            queries[f"{kind}:{v}"] = judge.relevant(kind, v)
    (ROOT / "truth" / "ground_truth.json").write_text(json.dumps({"queries": queries}, indent=2, sort_keys=True) + "\n")
    print(f"{len(queries)} queries")


if __name__ == "__main__":
    main()
