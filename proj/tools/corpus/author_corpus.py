#!/usr/bin/env python3
"""Writes the sample corpus: R3 recipes, their raw-text sources, media and
the embedding table.

Recipes are authored below in a compact notation. Allergen tags are copied
from lexicon/allergens.json by category; "inferred" tags carry the
embedding-inference provenance instead of the lexicon citation.

Usage: author_corpus.py [corpus-dir]   (default: <repo>/corpus)
Run `r3 fmt corpus/recipes/*.json` afterwards to canonicalize.
"""
import hashlib
import json
import math
import re
import sys
from pathlib import Path

import numpy as np
from PIL import Image

ROOT = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parents[2] / "corpus"


def ing(name, measure, unit, line, allergens=(), inferred=(), alternatives=(), quality=None, image=None):
    return dict(name=name, measure=measure, unit=unit, line=line, allergens=list(allergens),
                inferred=list(inferred), alternatives=list(alternatives), quality=quality, image=image)


def task(action, objects, tools=(), quality=None, failures=()):
    objs = []
    for o in objects:
        role, _, name = o.rpartition(":")
        objs.append({"role": role or "object", "name": name})
    return dict(action=action, objects=objs, tools=list(tools), output_quality=quality,
                failures=[{"description": d, "workaround": w} for d, w in failures])


def step(text, tasks, pre=(), post=(), images=()):
    return dict(original_text=text, tasks=tasks, input_condition=list(pre), output_condition=list(post),
                modality=list(images))


def recipe(rid, name, cuisine, prep, cook, servings, ingredients, steps):
    return dict(id=rid, name=name, cuisine=cuisine, prep=prep, cook=cook, servings=servings,
                ingredients=ingredients, steps=steps)


def dish(rid):
    return f"media/dishes/{rid}.png"


IMG = "media/ingredients/{}.png".format

RECIPES = [
    recipe("egg-drop-chicken-noodle-soup", "Egg-drop Chicken Noodle Soup", "chinese", 10, 20, 4, [
        ing("chicken broth", "6", "cup", "6 cups chicken broth"),
        ing("chicken breast", "1", "piece", "1 boneless chicken breast, thinly sliced", quality="thinly sliced"),
        ing("egg noodles", "115", "g", "115 g dried egg noodles", allergens=["egg", "wheat/gluten"]),
        ing("egg", "2", "piece", "2 eggs, beaten", allergens=["egg"], quality="beaten", image=IMG("egg")),
        ing("cornstarch", "1", "tbsp", "1 tbsp cornstarch", allergens=["maize"]),
        ing("soy sauce", "1", "tbsp", "1 tbsp light soy sauce", allergens=["soy"]),
        ing("scallion", "2", "piece", "2 scallions, chopped", quality="chopped"),
        ing("ginger", "1", "tsp", "1 tsp grated fresh ginger", quality="grated"),
    ], [
        step("Bring the chicken broth to a boil with the ginger.",
             [task("boil", ["chicken broth", "with:ginger"], tools=["pot"])], post=["boiling(chicken broth)"]),
        step("Add the sliced chicken and simmer for 8 minutes.",
             [task("add", ["chicken breast"]), task("simmer", ["chicken breast"], quality="cooked through")],
             pre=["boiling(chicken broth)"], post=["soup"]),
        step("Stir in the noodles and cook until tender.",
             [task("stir", ["egg noodles"], tools=["ladle"]), task("cook", ["egg noodles"], quality="tender")]),
        step("Whisk the cornstarch with the soy sauce and a splash of water, then stir it into the soup.",
             [task("whisk", ["cornstarch", "with:soy sauce"], tools=["cup"]),
              task("stir", ["cornstarch", "soup"], quality="thickened",
                   failures=[("Cornstarch forms lumps", "Mix it with cold liquid before adding it")])]),
        step("Slowly drizzle in the beaten eggs while stirring, then garnish with the scallions.",
             [task("drizzle", ["egg", "with:soup"], quality="ribbons",
                   failures=[("Egg clumps instead of forming ribbons", "Keep the soup at a gentle simmer and pour in a thin stream")]),
              task("garnish", ["soup", "with:scallion"])],
             images=[dish("egg-drop-chicken-noodle-soup")]),
    ]),
    recipe("scotch-eggs", "Scotch Eggs", "british", 25, 15, 4, [
        ing("egg", "5", "piece", "5 eggs", allergens=["egg"], image=IMG("egg")),
        ing("sausage meat", "400", "g", "400 g pork sausage meat"),
        ing("all-purpose flour", "3", "tbsp", "3 tbsp plain flour", allergens=["wheat/gluten"]),
        ing("breadcrumbs", "100", "g", "100 g dried breadcrumbs", allergens=["wheat/gluten"]),
        ing("vegetable oil", "1", "l", "1 litre vegetable oil, for frying", alternatives=["sunflower oil"]),
        ing("mustard powder", "1", "tsp", "1 tsp English mustard powder", allergens=["mustard"]),
        ing("salt", "1", "pinch", "a pinch of salt"),
    ], [
        step("Boil four of the eggs for 7 minutes, then cool them in iced water and peel.",
             [task("boil", ["egg"], tools=["saucepan"], quality="soft-boiled",
                   failures=[("Yolks overcook and turn grey", "Time from the moment the water returns to a boil")]),
              task("cool", ["egg"], tools=["bowl"]),
              task("peel", ["egg"])], post=["boiled(egg)"]),
        step("Season the sausage meat with the mustard powder and salt.",
             [task("season", ["sausage meat", "with:mustard powder", "with:salt"])]),
        step("Wrap each egg in a quarter of the sausage meat.",
             [task("wrap", ["egg", "with:sausage meat"],
                   failures=[("The casing splits", "Wet your hands and press the seams together")])],
             pre=["boiled(egg)"]),
        step("Beat the remaining egg. Roll the wrapped eggs in flour, dip them in the beaten egg and coat with breadcrumbs.",
             [task("beat", ["egg"], tools=["bowl"]),
              task("roll", ["egg", "with:all-purpose flour"]),
              task("dip", ["egg"]),
              task("coat", ["egg", "with:breadcrumbs"])]),
        step("Deep-fry in hot oil for 7 minutes until golden, then drain on paper towels.",
             [task("deep-fry", ["egg", "with:vegetable oil"], tools=["deep fryer"], quality="golden",
                   failures=[("Sausage is still pink inside", "Lower the oil to 160 C and fry longer")]),
              task("drain", ["egg"], tools=["paper towel"])],
             images=[dish("scotch-eggs")]),
    ]),
    recipe("bacon-and-egg-fried-rice", "Bacon and Egg Fried Rice", "chinese", 10, 15, 2, [
        ing("rice", "3", "cup", "3 cups day-old cooked rice", quality="day-old", image=IMG("rice")),
        ing("bacon", "4", "slice", "4 rashers of bacon, diced", quality="diced", image=IMG("bacon")),
        ing("egg", "3", "piece", "3 eggs", allergens=["egg"], image=IMG("egg")),
        ing("peas", "1/2", "cup", "1/2 cup frozen peas", allergens=["legume"], quality="frozen"),
        ing("soy sauce", "2", "tbsp", "2 tbsp soy sauce", allergens=["soy"]),
        ing("sesame oil", "1", "tsp", "1 tsp toasted sesame oil", allergens=["sesame"]),
        ing("scallion", "3", "piece", "3 spring onions, sliced", quality="sliced"),
    ], [
        step("Fry the bacon in a wok until crisp, then remove it.",
             [task("fry", ["bacon"], tools=["wok"], quality="crisp"), task("remove", ["bacon"], tools=["slotted spoon"])],
             post=["crisp(bacon)"]),
        step("Scramble the eggs in the bacon fat and set aside.",
             [task("scramble", ["egg"], tools=["wok"], quality="softly set")], post=["scrambled(egg)"]),
        step("Stir-fry the rice with the peas for 3 minutes.",
             [task("stir-fry", ["rice", "with:peas"], tools=["wok"],
                   failures=[("Rice turns mushy", "Use cold rice cooked the day before")])]),
        step("Return the bacon and eggs, add the soy sauce and sesame oil, and toss to combine.",
             [task("return", ["bacon", "egg"]), task("add", ["soy sauce", "sesame oil"]), task("toss", ["rice"])],
             pre=["crisp(bacon)", "scrambled(egg)"]),
        step("Scatter over the spring onions and serve.",
             [task("scatter", ["scallion"]), task("serve", ["rice"])], images=[dish("bacon-and-egg-fried-rice")]),
    ]),
    recipe("spinach-frittata", "Spinach Frittata", "italian", 10, 20, 4, [
        ing("egg", "8", "piece", "8 large eggs", allergens=["egg"], image=IMG("egg")),
        ing("spinach", "200", "g", "200 g baby spinach", image=IMG("spinach")),
        ing("feta", "100", "g", "100 g feta cheese, crumbled", allergens=["milk"], quality="crumbled"),
        ing("onion", "1", "piece", "1 onion, finely chopped", quality="finely chopped"),
        ing("olive oil", "2", "tbsp", "2 tbsp olive oil"),
        ing("milk", "60", "ml", "1/4 cup milk", allergens=["milk"]),
        ing("black pepper", "1/4", "tsp", "1/4 tsp black pepper"),
    ], [
        step("Heat the olive oil in an ovenproof skillet and soften the onion.",
             [task("heat", ["olive oil"], tools=["ovenproof skillet"]), task("soften", ["onion"], quality="translucent")]),
        step("Add the spinach and cook until wilted.",
             [task("add", ["spinach"]), task("cook", ["spinach"], quality="wilted")]),
        step("Whisk the eggs with the milk and black pepper.",
             [task("whisk", ["egg", "with:milk", "with:black pepper"], tools=["bowl", "whisk"])],
             post=["egg mixture"]),
        step("Pour the egg mixture over the spinach and scatter the feta on top.",
             [task("pour", ["egg mixture"]), task("scatter", ["feta"])]),
        step("Bake at 190 C for 15 minutes until set.",
             [task("bake", ["egg mixture"], tools=["oven"], quality="set",
                   failures=[("The centre is still runny", "Bake for 3 more minutes")])],
             images=[dish("spinach-frittata")]),
    ]),
    recipe("bacon-cheddar-quiche", "Bacon Cheddar Quiche", "french", 30, 45, 6, [
        ing("pie crust", "1", "piece", "1 unbaked pie crust", allergens=["wheat/gluten"]),
        ing("bacon", "6", "slice", "6 slices bacon, chopped", quality="chopped", image=IMG("bacon")),
        ing("cheddar", "150", "g", "150 g grated cheddar", allergens=["milk"], quality="grated", image=IMG("cheddar")),
        ing("egg", "4", "piece", "4 eggs", allergens=["egg"], image=IMG("egg")),
        ing("heavy cream", "1 1/2", "cup", "1 1/2 cups heavy cream", allergens=["milk"]),
        ing("shallot", "1", "piece", "1 shallot, minced", quality="minced"),
        ing("nutmeg", "1", "pinch", "a pinch of grated nutmeg"),
    ], [
        step("Blind-bake the crust at 200 C for 12 minutes.",
             [task("blind-bake", ["pie crust"], tools=["oven", "baking beans"], quality="pale golden",
                   failures=[("The crust shrinks down the sides", "Chill it for 30 minutes before baking")])],
             post=["baked(pie crust)"]),
        step("Cook the bacon and shallot until the bacon is crisp.",
             [task("cook", ["bacon", "shallot"], tools=["skillet"], quality="crisp")]),
        step("Scatter the bacon, shallot and cheddar over the crust.",
             [task("scatter", ["bacon", "shallot", "cheddar"])], pre=["baked(pie crust)"]),
        step("Beat the eggs with the cream and nutmeg and pour over the filling.",
             [task("beat", ["egg", "with:heavy cream", "with:nutmeg"], tools=["bowl"]), task("pour", ["custard"])],
             post=["custard", "filled(pie crust)"]),
        step("Bake at 175 C for 35 minutes, then cool for 10 minutes before slicing.",
             [task("bake", ["pie crust"], tools=["oven"], quality="set",
                   failures=[("The custard curdles", "Bake at a lower temperature")]),
              task("cool", ["pie crust"], tools=["wire rack"]),
              task("slice", ["pie crust"], tools=["knife"])],
             pre=["filled(pie crust)"], images=[dish("bacon-cheddar-quiche")]),
    ]),
    recipe("deviled-eggs", "Deviled Eggs", "american", 15, 12, 6, [
        ing("egg", "6", "piece", "6 eggs", allergens=["egg"], image=IMG("egg")),
        ing("mayonnaise", "1/4", "cup", "1/4 cup mayonnaise", allergens=["egg"]),
        ing("dijon mustard", "1", "tsp", "1 tsp Dijon mustard", allergens=["mustard"]),
        ing("worcestershire sauce", "1/2", "tsp", "1/2 tsp Worcestershire sauce"),
        ing("paprika", "1", "pinch", "smoked paprika, to dust"),
        ing("chive", "1", "tbsp", "1 tbsp snipped chives", quality="snipped"),
    ], [
        step("Hard-boil the eggs for 12 minutes and chill them in ice water.",
             [task("boil", ["egg"], tools=["saucepan"], quality="hard-boiled"), task("chill", ["egg"], tools=["bowl"])]),
        step("Peel and halve the eggs, then scoop out the yolks.",
             [task("peel", ["egg"]), task("halve", ["egg"], tools=["knife"]),
              task("scoop", ["egg"], tools=["spoon"],
                   failures=[("Whites tear", "Run the knife under hot water between cuts")])],
             post=["separated(yolk, egg white)"]),
        step("Mash the yolks with the mayonnaise, mustard and Worcestershire sauce.",
             [task("mash", ["yolk", "with:mayonnaise", "with:dijon mustard", "with:worcestershire sauce"],
                   tools=["fork"], quality="smooth")], post=["filling"]),
        step("Pipe the filling into the whites and dust with paprika and chives.",
             [task("pipe", ["filling", "egg white"], tools=["piping bag"]),
              task("dust", ["egg white", "with:paprika", "with:chive"])],
             images=[dish("deviled-eggs")]),
    ]),
    recipe("shakshuka", "Shakshuka", "middle eastern", 10, 25, 4, [
        ing("olive oil", "3", "tbsp", "3 tbsp olive oil"),
        ing("onion", "1", "piece", "1 onion, sliced", quality="sliced"),
        ing("red bell pepper", "1", "piece", "1 red bell pepper, sliced", quality="sliced"),
        ing("garlic", "3", "piece", "3 garlic cloves, minced", quality="minced"),
        ing("cumin", "1", "tsp", "1 tsp ground cumin", quality="ground"),
        ing("crushed tomato", "800", "g", "800 g canned crushed tomatoes"),
        ing("egg", "6", "piece", "6 eggs", allergens=["egg"], image=IMG("egg")),
        ing("parsley", "2", "tbsp", "2 tbsp chopped flat-leaf parsley", quality="chopped", alternatives=["cilantro"]),
    ], [
        step("Heat the oil and cook the onion and pepper until soft, about 8 minutes.",
             [task("heat", ["olive oil"], tools=["cast-iron skillet"]),
              task("cook", ["onion", "red bell pepper"], quality="soft")]),
        step("Stir in the garlic and cumin and cook for 1 minute.",
             [task("stir", ["garlic", "cumin"], quality="fragrant")]),
        step("Add the tomatoes and simmer until thickened.",
             [task("add", ["crushed tomato"]), task("simmer", ["crushed tomato"], quality="thickened")],
             post=["sauce"]),
        step("Make six wells in the sauce and crack an egg into each.",
             [task("make", ["sauce"], tools=["spoon"]),
              task("crack", ["egg"], failures=[("A yolk breaks", "Crack each egg into a cup first")])]),
        step("Cover and cook until the whites are set, then sprinkle with parsley.",
             [task("cover", ["sauce"], tools=["lid"]), task("cook", ["egg"], quality="whites set"),
              task("sprinkle", ["parsley"])],
             images=[dish("shakshuka")]),
    ]),
    recipe("egg-salad-sandwich", "Egg Salad Sandwich", "american", 15, 10, 2, [
        ing("egg", "4", "piece", "4 eggs", allergens=["egg"], image=IMG("egg")),
        ing("mayonnaise", "3", "tbsp", "3 tbsp mayonnaise", allergens=["egg"]),
        ing("celery", "1", "piece", "1 celery stalk, finely diced", allergens=["celery"], quality="finely diced"),
        ing("dijon mustard", "1", "tsp", "1 tsp Dijon mustard", allergens=["mustard"]),
        ing("white bread", "4", "slice", "4 slices white sandwich bread", allergens=["wheat/gluten"]),
        ing("lettuce", "2", "piece", "2 lettuce leaves"),
        ing("salt", "1", "pinch", "salt, to taste"),
    ], [
        step("Boil the eggs for 10 minutes, cool and peel them.",
             [task("boil", ["egg"], tools=["saucepan"], quality="hard-boiled"), task("cool", ["egg"]),
              task("peel", ["egg"])]),
        step("Chop the eggs and mix with the mayonnaise, celery and mustard.",
             [task("chop", ["egg"], tools=["knife"]),
              task("mix", ["egg", "with:mayonnaise", "with:celery", "with:dijon mustard"], tools=["bowl"])],
             post=["egg salad"]),
        step("Season with salt.", [task("season", ["egg salad", "with:salt"])]),
        step("Spread the egg salad on two slices of bread and top with the lettuce and the remaining bread.",
             [task("spread", ["egg salad", "white bread"], tools=["knife"]),
              task("top", ["white bread", "with:lettuce"])],
             images=[dish("egg-salad-sandwich")]),
    ]),
    recipe("corn-fritters", "Corn Fritters", "american", 10, 15, 4, [
        ing("corn kernels", "2", "cup", "2 cups sweetcorn kernels", allergens=["maize"], image=IMG("corn")),
        ing("all-purpose flour", "1", "cup", "1 cup plain flour", allergens=["wheat/gluten"]),
        ing("baking powder", "1", "tsp", "1 tsp baking powder"),
        ing("egg", "2", "piece", "2 eggs", allergens=["egg"], image=IMG("egg")),
        ing("milk", "1/2", "cup", "1/2 cup milk", allergens=["milk"]),
        ing("scallion", "2", "piece", "2 scallions, sliced", quality="sliced"),
        ing("vegetable oil", "4", "tbsp", "4 tbsp vegetable oil"),
        ing("salt", "1/2", "tsp", "1/2 tsp salt"),
    ], [
        step("Whisk the flour, baking powder and salt in a bowl.",
             [task("whisk", ["all-purpose flour", "baking powder", "salt"], tools=["bowl"])]),
        step("Beat in the eggs and milk to make a thick batter.",
             [task("beat", ["egg", "milk"], tools=["whisk"], quality="thick")], post=["batter"]),
        step("Fold the corn and scallions into the batter.",
             [task("fold", ["corn kernels", "scallion", "with:batter"], tools=["spatula"])]),
        step("Fry spoonfuls in hot oil for 2 minutes per side until golden.",
             [task("fry", ["batter", "with:vegetable oil"], tools=["skillet"], quality="golden",
                   failures=[("Fritters are raw inside", "Lower the heat and flatten them")])],
             post=["fritters"]),
        step("Drain on paper towels and serve warm.",
             [task("drain", ["fritters"], tools=["paper towel"]), task("serve", ["fritters"])],
             images=[dish("corn-fritters")]),
    ]),
    recipe("french-toast", "French Toast", "french", 5, 10, 2, [
        ing("brioche", "4", "slice", "4 thick slices of brioche", allergens=["wheat/gluten"], image=IMG("brioche")),
        ing("egg", "2", "piece", "2 eggs", allergens=["egg"], image=IMG("egg")),
        ing("milk", "1/2", "cup", "1/2 cup whole milk", allergens=["milk"]),
        ing("cinnamon", "1/2", "tsp", "1/2 tsp ground cinnamon", quality="ground"),
        ing("vanilla extract", "1", "tsp", "1 tsp vanilla extract"),
        ing("butter", "1", "tbsp", "1 tbsp butter", allergens=["milk"]),
        ing("maple syrup", "2", "tbsp", "maple syrup, to serve"),
    ], [
        step("Whisk the eggs, milk, cinnamon and vanilla in a shallow dish.",
             [task("whisk", ["egg", "milk", "cinnamon", "vanilla extract"], tools=["shallow dish"])],
             post=["custard"]),
        step("Soak each slice of brioche in the custard for 20 seconds.",
             [task("soak", ["brioche", "with:custard"],
                   failures=[("The bread falls apart", "Use day-old bread and soak it briefly")])]),
        step("Melt the butter in a skillet and fry the slices until golden on both sides.",
             [task("melt", ["butter"], tools=["skillet"]), task("fry", ["brioche"], tools=["spatula"], quality="golden")]),
        step("Serve drizzled with maple syrup.",
             [task("serve", ["brioche"]), task("drizzle", ["brioche", "with:maple syrup"])],
             images=[dish("french-toast")]),
    ]),
    recipe("tamagoyaki", "Tamagoyaki", "japanese", 5, 10, 2, [
        ing("egg", "4", "piece", "4 eggs", allergens=["egg"], image=IMG("egg")),
        ing("dashi", "2", "tbsp", "2 tbsp dashi stock", allergens=["fish"]),
        ing("sugar", "1", "tbsp", "1 tbsp sugar"),
        ing("soy sauce", "1", "tsp", "1 tsp soy sauce", allergens=["soy"]),
        ing("mirin", "1", "tsp", "1 tsp mirin"),
        ing("vegetable oil", "1", "tsp", "1 tsp neutral oil"),
    ], [
        step("Beat the eggs with the dashi, sugar, soy sauce and mirin.",
             [task("beat", ["egg", "with:dashi", "with:sugar", "with:soy sauce", "with:mirin"], tools=["chopsticks"])],
             post=["egg mixture"]),
        step("Oil the rectangular pan and pour in a thin layer of the egg mixture.",
             [task("grease", ["tamagoyaki pan", "with:vegetable oil"], tools=["tamagoyaki pan", "paper towel"]),
              task("pour", ["egg mixture"])]),
        step("When half set, roll the omelette toward you, then repeat with the remaining egg mixture.",
             [task("roll", ["egg mixture"], tools=["spatula"], quality="layered",
                   failures=[("The omelette tears when rolled", "Roll while the top is still slightly wet")]),
              task("repeat", ["egg mixture"])]),
        step("Rest the roll in a bamboo mat and slice.",
             [task("rest", ["egg mixture"], tools=["bamboo mat"]), task("slice", ["egg mixture"], tools=["knife"])],
             images=[dish("tamagoyaki")]),
    ]),
    recipe("spaghetti-carbonara", "Spaghetti Carbonara", "italian", 10, 15, 4, [
        ing("spaghetti", "400", "g", "400 g spaghetti", allergens=["wheat/gluten"], image=IMG("spaghetti")),
        ing("bacon", "150", "g", "150 g bacon or pancetta, cut into lardons", quality="cut into lardons",
            alternatives=["pancetta", "guanciale"], image=IMG("bacon")),
        ing("egg yolks", "4", "piece", "4 egg yolks", inferred=["egg"]),
        ing("parmesan", "50", "g", "50 g finely grated parmesan", allergens=["milk"], quality="grated"),
        ing("black pepper", "1", "tsp", "1 tsp freshly ground black pepper"),
        ing("salt", "1", "tbsp", "salt for the pasta water"),
    ], [
        step("Cook the spaghetti in salted boiling water until al dente.",
             [task("cook", ["spaghetti", "with:salt"], tools=["pot"], quality="al dente")]),
        step("Fry the bacon until the fat renders.",
             [task("fry", ["bacon"], tools=["skillet"], quality="rendered")]),
        step("Whisk the egg yolks with the parmesan and black pepper.",
             [task("whisk", ["egg yolks", "with:parmesan", "with:black pepper"], tools=["bowl"])],
             post=["egg mixture"]),
        step("Drain the pasta and toss it with the bacon off the heat, then stir in the egg mixture and a splash of pasta water.",
             [task("drain", ["spaghetti"], tools=["colander"]),
              task("toss", ["spaghetti", "with:bacon"]),
              task("stir", ["egg mixture", "spaghetti"], quality="glossy",
                   failures=[("The eggs scramble", "Take the pan off the heat and loosen with pasta water")])],
             images=[dish("spaghetti-carbonara")]),
    ]),
    recipe("huevos-rancheros", "Huevos Rancheros", "mexican", 10, 20, 2, [
        ing("corn tortilla", "4", "piece", "4 corn tortillas", allergens=["maize"], image=IMG("tortilla")),
        ing("egg", "4", "piece", "4 eggs", allergens=["egg"], image=IMG("egg")),
        ing("refried beans", "1", "cup", "1 cup refried beans", allergens=["legume"]),
        ing("salsa", "1", "cup", "1 cup tomato salsa"),
        ing("avocado", "1", "piece", "1 avocado, sliced", quality="sliced", image=IMG("avocado")),
        ing("queso fresco", "50", "g", "50 g crumbled queso fresco", allergens=["milk"], quality="crumbled"),
        ing("vegetable oil", "2", "tbsp", "2 tbsp vegetable oil"),
        ing("cilantro", "2", "tbsp", "2 tbsp chopped coriander leaves", quality="chopped"),
    ], [
        step("Warm the refried beans and the salsa in separate pans.",
             [task("warm", ["refried beans"], tools=["saucepan"]), task("warm", ["salsa"], tools=["saucepan"])]),
        step("Fry the tortillas in the oil until lightly crisp.",
             [task("fry", ["corn tortilla", "with:vegetable oil"], tools=["skillet"], quality="lightly crisp")]),
        step("Fry the eggs sunny side up.",
             [task("fry", ["egg"], tools=["skillet"], quality="sunny side up",
                   failures=[("The whites are glassy", "Cover the pan for the last minute")])]),
        step("Top each tortilla with beans, an egg and salsa, then garnish with avocado, queso fresco and cilantro.",
             [task("top", ["corn tortilla", "with:refried beans", "with:egg", "with:salsa"]),
              task("garnish", ["corn tortilla", "with:avocado", "with:queso fresco", "with:cilantro"])],
             images=[dish("huevos-rancheros")]),
    ]),
]


# ---- allergen tags ----------------------------------------------------------

def load_lexicon():
    classes = json.loads((ROOT / "lexicon" / "allergens.json").read_text())
    return {c["category"].lower(): c for c in classes}


def slug(s):
    return re.sub(r"-+", "-", re.sub(r"[^a-z0-9]+", "-", s.lower())).strip("-")


def allergen_info(lexicon, category, source_ref=None):
    c = lexicon[category]
    return {"allergen_id": c["allergen_id"], "category": category,
            "source_ref": source_ref or c["source_ref"], "kg_ref": "kg:allergen/" + slug(category)}


# ---- documents ----------------------------------------------------------------

def r3_document(r, lexicon):
    ingredients = []
    for i in r["ingredients"]:
        doc = {"name": i["name"], "quantity": {"measure": i["measure"], "unit": i["unit"]},
               "allergens": [allergen_info(lexicon, a) for a in i["allergens"]] +
                            [allergen_info(lexicon, a, "inferred:embedding") for a in i["inferred"]],
               "alternatives": i["alternatives"]}
        if i["quality"]:
            doc["quality_characteristic"] = i["quality"]
        if i["image"]:
            doc["image_ref"] = i["image"]
        ingredients.append(doc)
    instructions = []
    for s in r["steps"]:
        tasks = []
        for t in s["tasks"]:
            td = {"action": t["action"], "objects": t["objects"], "tools": t["tools"],
                  "failures": [{k: v for k, v in f.items() if v is not None} for f in t["failures"]]}
            if t["output_quality"]:
                td["output_quality"] = t["output_quality"]
            tasks.append(td)
        instructions.append({"original_text": s["original_text"], "input_condition": s["input_condition"],
                             "output_condition": s["output_condition"], "tasks": tasks, "modality": s["modality"]})
    return {"r3_version": 1, "id": r["id"], "name": r["name"], "cuisine": r["cuisine"], "prep_time": r["prep"],
            "cook_time": r["cook"], "servings": r["servings"], "ingredients": ingredients,
            "instructions": instructions}


def raw_document(r):
    return {"title": r["name"], "ingredients": [i["line"] for i in r["ingredients"]],
            "steps": [s["original_text"] for s in r["steps"]],
            "step_images": [s["modality"] or None for s in r["steps"]]}


# ---- media --------------------------------------------------------------------

SIDE = 96
GRID = 4


def texture(name):
    """A 4x4 mosaic of gratings. Each cell's stripe direction sits at the
    centre of one of the descriptor's orientation bins, so unrelated images
    disagree in most cells."""
    seed = int.from_bytes(hashlib.sha256(name.encode()).digest()[:8], "little")
    rng = np.random.default_rng(seed)
    cell = SIDE // GRID
    yy, xx = np.mgrid[0:cell, 0:cell].astype(np.float64)
    img = np.zeros((SIDE, SIDE, 3))
    base = rng.uniform(60, 200, size=3)
    for cy in range(GRID):
        for cx in range(GRID):
            angle = (rng.integers(0, 4) * 45 + 22.5) * math.pi / 180
            period = rng.uniform(5, 9)
            phase = rng.uniform(0, 2 * math.pi)
            wave = np.sin(2 * math.pi * (xx * math.cos(angle) + yy * math.sin(angle)) / period + phase)
            amp = rng.uniform(35, 55)
            tint = rng.uniform(0.7, 1.3, size=3)
            for ch in range(3):
                img[cy * cell:(cy + 1) * cell, cx * cell:(cx + 1) * cell, ch] = base[ch] * tint[ch] + amp * wave
    return np.clip(np.rint(img), 0, 255).astype(np.uint8)


def write_png(path, pixels):
    path.parent.mkdir(parents=True, exist_ok=True)
    Image.fromarray(pixels, "RGB").save(path, optimize=False)


# ---- embeddings ------------------------------------------------------------------

AXES = ["egg", "dairy", "peanut", "treenut", "soy", "wheat", "fish", "shellfish", "sesame", "maize",
        "mustard", "celery", "lupin", "wine", "mollusc", "legume", "seed", "meat", "vegetable", "herb",
        "spice", "sweet", "fat", "liquid", "condiment"]

# Head nouns of compound names ("egg noodles", "pie crust") get a larger norm
# so the mean phrase vector leans toward what the ingredient is rather than
# its modifier.
HEAD_SCALE = {"noodles": 1.8, "noodle": 1.8, "crust": 1.8, "tortilla": 1.8, "tortillas": 1.8}

# token -> {axis: weight}
EMBED = {
    "egg": {"egg": 1.0}, "eggs": {"egg": 1.0}, "yolk": {"egg": 0.95, "fat": 0.2}, "yolks": {"egg": 0.95, "fat": 0.2},
    "white": {"egg": 0.6, "liquid": 0.2}, "whites": {"egg": 0.75, "liquid": 0.2}, "duck": {"egg": 0.4, "meat": 0.8},
    "quail": {"egg": 0.5, "meat": 0.7}, "mayonnaise": {"egg": 0.8, "fat": 0.5}, "meringue": {"egg": 0.7, "sweet": 0.6},
    "custard": {"egg": 0.7, "dairy": 0.5, "sweet": 0.4}, "aioli": {"egg": 0.7, "fat": 0.5, "herb": 0.2},
    "hollandaise": {"egg": 0.7, "dairy": 0.5, "fat": 0.3}, "omelette": {"egg": 0.9, "fat": 0.1},
    "milk": {"dairy": 1.0, "liquid": 0.3}, "whole": {"dairy": 0.3, "liquid": 0.1}, "butter": {"dairy": 0.85, "fat": 0.5},
    "cheese": {"dairy": 1.0}, "cheddar": {"dairy": 0.95}, "parmesan": {"dairy": 0.95}, "feta": {"dairy": 0.95},
    "mozzarella": {"dairy": 0.95}, "queso": {"dairy": 0.8}, "fresco": {"dairy": 0.6, "vegetable": 0.2},
    "cream": {"dairy": 0.95, "fat": 0.3}, "heavy": {"dairy": 0.3, "fat": 0.4}, "sour": {"dairy": 0.5, "liquid": 0.2},
    "yogurt": {"dairy": 0.95}, "buttermilk": {"dairy": 0.95, "liquid": 0.3}, "ghee": {"dairy": 0.8, "fat": 0.6},
    "peanut": {"peanut": 1.0}, "peanuts": {"peanut": 1.0}, "almond": {"treenut": 1.0}, "almonds": {"treenut": 1.0},
    "walnut": {"treenut": 1.0}, "walnuts": {"treenut": 1.0}, "cashew": {"treenut": 1.0}, "cashews": {"treenut": 1.0},
    "pecan": {"treenut": 1.0}, "hazelnut": {"treenut": 1.0}, "pistachio": {"treenut": 1.0}, "macadamia": {"treenut": 1.0},
    "soy": {"soy": 1.0}, "soybean": {"soy": 1.0}, "soybeans": {"soy": 1.0}, "tofu": {"soy": 0.95},
    "edamame": {"soy": 0.8, "legume": 0.4}, "miso": {"soy": 0.9}, "tamari": {"soy": 0.9, "liquid": 0.3},
    "sauce": {"condiment": 1.0}, "flour": {"wheat": 1.0}, "all-purpose": {"wheat": 0.8}, "wheat": {"wheat": 1.0},
    "bread": {"wheat": 0.95}, "breadcrumbs": {"wheat": 0.95}, "panko": {"wheat": 0.9}, "pasta": {"wheat": 0.95},
    "spaghetti": {"wheat": 0.95}, "noodles": {"wheat": 0.9}, "noodle": {"wheat": 0.9}, "brioche": {"wheat": 0.8, "egg": 0.3, "dairy": 0.3},
    "pie": {"wheat": 0.6, "sweet": 0.3}, "crust": {"wheat": 0.8}, "tortilla": {"wheat": 0.5, "maize": 0.5},
    "couscous": {"wheat": 0.9}, "semolina": {"wheat": 0.95}, "fish": {"fish": 1.0}, "anchovy": {"fish": 1.0},
    "anchovies": {"fish": 1.0}, "salmon": {"fish": 1.0}, "tuna": {"fish": 1.0}, "cod": {"fish": 1.0},
    "dashi": {"fish": 0.8, "liquid": 0.5}, "shrimp": {"shellfish": 1.0}, "prawn": {"shellfish": 1.0},
    "prawns": {"shellfish": 1.0}, "crab": {"shellfish": 1.0}, "lobster": {"shellfish": 1.0}, "crayfish": {"shellfish": 1.0},
    "sesame": {"sesame": 1.0}, "seeds": {"seed": 0.9}, "oil": {"fat": 1.0}, "tahini": {"sesame": 0.9},
    "corn": {"maize": 1.0}, "cornstarch": {"maize": 0.95}, "cornmeal": {"maize": 0.95}, "kernels": {"maize": 0.6, "vegetable": 0.3},
    "tortillas": {"wheat": 0.5, "maize": 0.5}, "polenta": {"maize": 0.95}, "syrup": {"sweet": 1.0},
    "popcorn": {"maize": 0.95}, "masa": {"maize": 0.9}, "harina": {"maize": 0.5, "wheat": 0.3},
    "mustard": {"mustard": 1.0}, "dijon": {"mustard": 0.9}, "powder": {"spice": 0.4},
    "celery": {"celery": 1.0}, "celeriac": {"celery": 0.95}, "salt": {"spice": 0.6},
    "lupin": {"lupin": 1.0}, "lupini": {"lupin": 0.95}, "beans": {"legume": 0.9},
    "wine": {"wine": 1.0}, "red": {"vegetable": 0.2}, "dried": {"sweet": 0.2}, "apricots": {"wine": 0.4, "sweet": 0.8},
    "sherry": {"wine": 0.9}, "squid": {"mollusc": 1.0}, "octopus": {"mollusc": 1.0}, "mussels": {"mollusc": 1.0},
    "clams": {"mollusc": 1.0}, "oysters": {"mollusc": 1.0}, "oyster": {"mollusc": 0.95}, "scallops": {"mollusc": 1.0},
    "chickpeas": {"legume": 1.0}, "lentils": {"legume": 1.0}, "black": {"spice": 0.2}, "kidney": {"legume": 0.5, "meat": 0.4},
    "peas": {"legume": 0.9, "vegetable": 0.4}, "refried": {"legume": 0.5}, "pinto": {"legume": 0.8},
    "sunflower": {"seed": 0.9}, "pumpkin": {"seed": 0.5, "vegetable": 0.7}, "poppy": {"seed": 0.9},
    "flaxseed": {"seed": 0.95}, "chia": {"seed": 0.95},
    "bacon": {"meat": 1.0, "fat": 0.3}, "pancetta": {"meat": 1.0, "fat": 0.3}, "guanciale": {"meat": 1.0, "fat": 0.3},
    "chicken": {"meat": 1.0}, "breast": {"meat": 0.8}, "broth": {"meat": 0.5, "liquid": 0.8}, "sausage": {"meat": 1.0},
    "meat": {"meat": 1.0}, "rice": {"vegetable": 0.3, "sweet": 0.1, "liquid": 0.05}, "spinach": {"vegetable": 1.0},
    "onion": {"vegetable": 1.0}, "scallion": {"vegetable": 0.9, "herb": 0.3}, "shallot": {"vegetable": 0.95},
    "garlic": {"vegetable": 0.7, "spice": 0.5}, "ginger": {"spice": 0.8, "vegetable": 0.4}, "pepper": {"spice": 0.7, "vegetable": 0.5},
    "bell": {"vegetable": 0.8}, "tomato": {"vegetable": 1.0}, "crushed": {"vegetable": 0.2}, "lettuce": {"vegetable": 1.0},
    "avocado": {"vegetable": 0.9, "fat": 0.3}, "salsa": {"vegetable": 0.8, "liquid": 0.3}, "parsley": {"herb": 1.0},
    "cilantro": {"herb": 1.0}, "coriander": {"herb": 1.0}, "chive": {"herb": 1.0}, "chives": {"herb": 1.0},
    "paprika": {"spice": 1.0}, "cumin": {"spice": 1.0}, "nutmeg": {"spice": 1.0}, "cinnamon": {"spice": 0.8, "sweet": 0.4},
    "vanilla": {"sweet": 0.8, "spice": 0.4}, "extract": {"liquid": 0.4, "sweet": 0.2}, "sugar": {"sweet": 1.0},
    "maple": {"sweet": 0.9}, "honey": {"sweet": 1.0}, "mirin": {"wine": 0.3, "sweet": 0.7, "liquid": 0.4},
    "baking": {"spice": 0.3, "wheat": 0.1}, "worcestershire": {"liquid": 0.5, "spice": 0.6, "sweet": 0.2},
    "vegetable": {"vegetable": 0.6, "fat": 0.2}, "olive": {"fat": 0.6, "vegetable": 0.4}, "water": {"liquid": 1.0},
    "stock": {"liquid": 0.9, "meat": 0.2},
}


def embedding_lines():
    rows = []
    for token in sorted(EMBED):
        weights = EMBED[token]
        h = hashlib.sha256(token.encode()).digest()
        vec = []
        for k, axis in enumerate(AXES):
            noise = (h[k % len(h)] / 255.0 - 0.5) * 0.04
            vec.append((weights.get(axis, 0.0) + noise) * HEAD_SCALE.get(token, 1.0))
        rows.append(token + " " + " ".join(f"{v:.4f}" for v in vec))
    return [f"{len(rows)} {len(AXES)}"] + rows


def main():
    lexicon = load_lexicon()
    (ROOT / "recipes").mkdir(parents=True, exist_ok=True)
    (ROOT / "raw").mkdir(parents=True, exist_ok=True)
    images = set()
    for r in RECIPES:
        (ROOT / "recipes" / f"{r['id']}.json").write_text(json.dumps(r3_document(r, lexicon), indent=2) + "\n")
        (ROOT / "raw" / f"{r['id']}.json").write_text(json.dumps(raw_document(r), indent=2) + "\n")
        images.update(i["image"] for i in r["ingredients"] if i["image"])
        for s in r["steps"]:
            images.update(s["modality"])
    for ref in sorted(images):
        write_png(ROOT / ref, texture(ref))
    (ROOT / "lexicon" / "embeddings.txt").write_text("\n".join(embedding_lines()) + "\n")
    print(f"{len(RECIPES)} recipes, {len(images)} images")


if __name__ == "__main__":
    main()
