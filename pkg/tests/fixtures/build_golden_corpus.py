#!/usr/bin/env python3
"""Regenerate the golden 50-review fixture corpus.

The corpus is hand-annotated: every review below carries its expected
framing features, and the committed outputs (CoNLL-U, coref sidecar,
gold feature CSV, manifest, raw NDJSON inputs, census fixture) are the
single source of truth for the extraction tests. Rerun deliberately and
re-audit the diff when the fixture changes.

Usage: python tests/fixtures/build_golden_corpus.py [out_dir]
"""

import json
import random
import sys
from pathlib import Path

# token: (form, lemma, upos, head, deprel)
# review: (review_id, business_id, stars, [sentence, ...], chains, gold)
# gold: (lemma, category, sentence_index, path)

REVIEWS = [
    ("r001", "bus-as-01", 2, [[
        ("The", "the", "DET", 2, "det"),
        ("restaurant", "restaurant", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("stinky", "stinky", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("stinky", "venue", 0, "predicative")]),

    ("r002", "bus-as-01", 4, [[
        ("I", "i", "PRON", 2, "nsubj"),
        ("had", "have", "VERB", 0, "root"),
        ("the", "the", "DET", 5, "det"),
        ("stinky", "stinky", "ADJ", 5, "amod"),
        ("tofu", "tofu", "NOUN", 2, "obj"),
        (".", ".", "PUNCT", 2, "punct"),
    ]], [], []),

    ("r003", "bus-as-01", 3, [[
        ("The", "the", "DET", 2, "det"),
        ("kitchen", "kitchen", "NOUN", 5, "nsubj"),
        ("was", "be", "AUX", 5, "cop"),
        ("not", "not", "PART", 5, "advmod"),
        ("clean", "clean", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 5, "punct"),
    ]], [], []),

    ("r004", "bus-as-02", 5, [[
        ("The", "the", "DET", 2, "det"),
        ("noodles", "noodle", "NOUN", 4, "nsubj"),
        ("were", "be", "AUX", 4, "cop"),
        ("great", "great", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ], [
        ("They", "they", "PRON", 3, "nsubj"),
        ("were", "be", "AUX", 3, "cop"),
        ("fresh", "fresh", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [[(0, 2, 2), (1, 1, 1)]],
     [("great", "food", 0, "predicative"), ("fresh", "food", 1, "coref")]),

    ("r005", "bus-lat-01", 5, [[
        ("The", "the", "DET", 2, "det"),
        ("place", "place", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("clean", "clean", "ADJ", 0, "root"),
        ("and", "and", "CCONJ", 6, "cc"),
        ("cheap", "cheap", "ADJ", 4, "conj"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("clean", "venue", 0, "predicative"), ("cheap", "venue", 0, "conjoined")]),

    ("r006", "bus-lat-01", 5, [[
        ("We", "we", "PRON", 2, "nsubj"),
        ("loved", "love", "VERB", 0, "root"),
        ("the", "the", "DET", 5, "det"),
        ("authentic", "authentic", "ADJ", 5, "amod"),
        ("tacos", "taco", "NOUN", 2, "obj"),
        (".", ".", "PUNCT", 2, "punct"),
    ]], [], [("authentic", "food", 0, "attributive")]),

    ("r007", "bus-us-01", 4, [[
        ("The", "the", "DET", 2, "det"),
        ("waiter", "waiter", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("friendly", "friendly", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("friendly", "staff", 0, "predicative")]),

    ("r008", "bus-eur-01", 2, [[
        ("The", "the", "DET", 2, "det"),
        ("pasta", "pasta", "NOUN", 6, "nsubj"),
        ("was", "be", "AUX", 6, "cop"),
        ("n't", "not", "PART", 3, "advmod"),
        ("very", "very", "ADV", 6, "advmod"),
        ("fresh", "fresh", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 6, "punct"),
    ]], [], []),

    ("r009", "bus-eur-01", 4, [[
        ("A", "a", "DET", 3, "det"),
        ("quaint", "quaint", "ADJ", 3, "amod"),
        ("spot", "spot", "NOUN", 0, "root"),
        ("with", "with", "ADP", 6, "case"),
        ("exotic", "exotic", "ADJ", 6, "amod"),
        ("dishes", "dish", "NOUN", 3, "nmod"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], [("quaint", "venue", 0, "attributive"), ("exotic", "food", 0, "attributive")]),

    ("r010", "bus-us-02", 2, [[
        ("The", "the", "DET", 2, "det"),
        ("soup", "soup", "NOUN", 5, "nsubj"),
        ("was", "be", "AUX", 5, "cop"),
        ("hardly", "hardly", "ADV", 5, "advmod"),
        ("fresh", "fresh", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 5, "punct"),
    ]], [], []),

    ("r011", "bus-us-02", 1, [[
        ("No", "no", "DET", 3, "det"),
        ("clean", "clean", "ADJ", 3, "amod"),
        ("tables", "table", "NOUN", 0, "root"),
        ("here", "here", "ADV", 3, "advmod"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], []),

    ("r012", "bus-eur-02", 4, [[
        ("I", "i", "PRON", 4, "nsubj"),
        ("am", "be", "AUX", 4, "cop"),
        ("a", "a", "DET", 4, "det"),
        ("regular", "regular", "NOUN", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], []),

    ("r013", "bus-eur-02", 2, [[
        ("The", "the", "DET", 2, "det"),
        ("server", "server", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("rude", "rude", "ADJ", 0, "root"),
        ("and", "and", "CCONJ", 6, "cc"),
        ("slow", "slow", "ADJ", 4, "conj"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("rude", "staff", 0, "predicative"), ("slow", "staff", 0, "conjoined")]),

    ("r014", "bus-as-02", 3, [[
        ("Their", "they", "PRON", 2, "nmod:poss"),
        ("menu", "menu", "NOUN", 3, "nsubj"),
        ("includes", "include", "VERB", 0, "root"),
        ("the", "the", "DET", 6, "det"),
        ("usual", "usual", "ADJ", 6, "amod"),
        ("dishes", "dish", "NOUN", 3, "obj"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], [("usual", "food", 0, "attributive")]),

    ("r015", "bus-as-01", 3, [[
        ("The", "the", "DET", 2, "det"),
        ("atmosphere", "atmosphere", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("cozy", "cozy", "ADJ", 0, "root"),
        ("but", "but", "CCONJ", 9, "cc"),
        ("the", "the", "DET", 7, "det"),
        ("prices", "price", "NOUN", 9, "nsubj"),
        ("were", "be", "AUX", 9, "cop"),
        ("steep", "steep", "ADJ", 4, "conj"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("cozy", "venue", 0, "predicative")]),

    ("r016", "bus-lat-02", 5, [[
        ("The", "the", "DET", 3, "det"),
        ("handmade", "handmade", "ADJ", 3, "amod"),
        ("pasta", "pasta", "NOUN", 5, "nsubj"),
        ("was", "be", "AUX", 5, "cop"),
        ("delicious", "delicious", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 5, "punct"),
    ]], [], [("handmade", "food", 0, "attributive"), ("delicious", "food", 0, "predicative")]),

    ("r017", "bus-lat-02", 4, [[
        ("The", "the", "DET", 4, "det"),
        ("hand", "hand", "NOUN", 3, "compound"),
        ("made", "made", "ADJ", 4, "amod"),
        ("dumplings", "dumpling", "NOUN", 6, "nsubj"),
        ("were", "be", "AUX", 6, "cop"),
        ("tasty", "tasty", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 6, "punct"),
    ]], [], [("made", "food", 0, "attributive"), ("tasty", "food", 0, "predicative")]),

    ("r018", "bus-eur-02", 4, [[
        ("The", "the", "DET", 2, "det"),
        ("vibe", "vibe", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("laid-back", "laid-back", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("laid-back", "venue", 0, "predicative")]),

    ("r019", "bus-as-02", 4, [[
        ("The", "the", "DET", 2, "det"),
        ("chef", "chef", "NOUN", 3, "nsubj"),
        ("plated", "plate", "VERB", 0, "root"),
        ("the", "the", "DET", 5, "det"),
        ("noodles", "noodle", "NOUN", 3, "obj"),
        (".", ".", "PUNCT", 3, "punct"),
    ], [
        ("They", "they", "PRON", 3, "nsubj"),
        ("were", "be", "AUX", 3, "cop"),
        ("amazing", "amazing", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [[(0, 2, 2), (0, 5, 5), (1, 1, 1)]], []),

    ("r020", "bus-us-01", 3, [[
        ("The", "the", "DET", 2, "det"),
        ("fries", "fry", "NOUN", 4, "nsubj"),
        ("were", "be", "AUX", 4, "cop"),
        ("greasy", "greasy", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("greasy", "food", 0, "predicative")]),

    ("r021", "bus-us-01", 4, [[
        ("Service", "service", "NOUN", 3, "nsubj"),
        ("was", "be", "AUX", 3, "cop"),
        ("quick", "quick", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], []),

    ("r022", "bus-eur-01", 5, [[
        ("An", "a", "DET", 3, "det"),
        ("elegant", "elegant", "ADJ", 3, "amod"),
        ("room", "room", "NOUN", 0, "root"),
        ("with", "with", "ADP", 6, "case"),
        ("exquisite", "exquisite", "ADJ", 6, "amod"),
        ("desserts", "dessert", "NOUN", 3, "nmod"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], [("elegant", "venue", 0, "attributive"), ("exquisite", "food", 0, "attributive")]),

    ("r023", "bus-lat-01", 4, [[
        ("The", "the", "DET", 2, "det"),
        ("tacos", "taco", "NOUN", 4, "nsubj"),
        ("never", "never", "ADV", 4, "advmod"),
        ("tasted", "taste", "VERB", 0, "root"),
        ("stale", "stale", "ADJ", 4, "xcomp"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], []),

    ("r024", "bus-lat-01", 4, [[
        ("The", "the", "DET", 3, "det"),
        ("dirty", "dirty", "ADJ", 3, "amod"),
        ("rice", "rice", "NOUN", 5, "nsubj"),
        ("was", "be", "AUX", 5, "cop"),
        ("flavorful", "flavorful", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 5, "punct"),
    ]], [], [("flavorful", "food", 0, "predicative")]),

    ("r025", "bus-as-01", 3, [[
        ("The", "the", "DET", 2, "det"),
        ("broth", "broth", "NOUN", 5, "nsubj"),
        ("was", "be", "AUX", 5, "cop"),
        ("n't", "not", "PART", 5, "advmod"),
        ("bad", "bad", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 5, "punct"),
    ]], [], []),

    ("r026", "bus-as-01", 5, [[
        ("A", "a", "DET", 3, "det"),
        ("traditional", "traditional", "ADJ", 3, "amod"),
        ("place", "place", "NOUN", 0, "root"),
        ("with", "with", "ADP", 6, "case"),
        ("friendly", "friendly", "ADJ", 6, "amod"),
        ("servers", "server", "NOUN", 3, "nmod"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], [("traditional", "venue", 0, "attributive"), ("friendly", "staff", 0, "attributive")]),

    ("r027", "bus-us-02", 4, [[
        ("The", "the", "DET", 2, "det"),
        ("bartender", "bartender", "NOUN", 3, "nsubj"),
        ("seemed", "seem", "VERB", 0, "root"),
        ("nice", "nice", "ADJ", 3, "xcomp"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], []),

    ("r028", "bus-us-02", 4, [[
        ("The", "the", "DET", 2, "det"),
        ("decor", "decor", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("dated", "dated", "ADJ", 0, "root"),
        ("but", "but", "CCONJ", 6, "cc"),
        ("charming", "charming", "ADJ", 4, "conj"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("dated", "venue", 0, "predicative"), ("charming", "venue", 0, "conjoined")]),

    ("r029", "bus-eur-02", 5, [[
        ("The", "the", "DET", 2, "det"),
        ("escargot", "escargot", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("exquisite", "exquisite", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], []),

    ("r030", "bus-eur-01", 2, [[
        ("The", "the", "DET", 3, "det"),
        ("cheap", "cheap", "ADJ", 3, "amod"),
        ("wine", "wine", "NOUN", 4, "nsubj"),
        ("ruined", "ruin", "VERB", 0, "root"),
        ("an", "a", "DET", 8, "det"),
        ("otherwise", "otherwise", "ADV", 7, "advmod"),
        ("lovely", "lovely", "ADJ", 8, "amod"),
        ("dinner", "dinner", "NOUN", 4, "obj"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("cheap", "food", 0, "attributive")]),

    ("r031", "bus-lat-02", 5, [[
        ("The", "the", "DET", 2, "det"),
        ("waitstaff", "waitstaff", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("attentive", "attentive", "ADJ", 0, "root"),
        ("and", "and", "CCONJ", 9, "cc"),
        ("the", "the", "DET", 7, "det"),
        ("patio", "patio", "NOUN", 9, "nsubj"),
        ("was", "be", "AUX", 9, "cop"),
        ("lovely", "lovely", "ADJ", 4, "conj"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("attentive", "staff", 0, "predicative"), ("lovely", "venue", 0, "predicative")]),

    ("r032", "bus-lat-02", 1, [[
        ("Nothing", "nothing", "PRON", 3, "nsubj"),
        ("was", "be", "AUX", 3, "cop"),
        ("fresh", "fresh", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], []),

    ("r033", "bus-as-02", 5, [[
        ("The", "the", "DET", 2, "det"),
        ("curry", "curry", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("spicy", "spicy", "ADJ", 0, "root"),
        (",", ",", "PUNCT", 6, "punct"),
        ("rich", "rich", "ADJ", 4, "conj"),
        (",", ",", "PUNCT", 9, "punct"),
        ("and", "and", "CCONJ", 9, "cc"),
        ("fragrant", "fragrant", "ADJ", 4, "conj"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("spicy", "food", 0, "predicative"), ("rich", "food", 0, "conjoined"),
             ("fragrant", "food", 0, "conjoined")]),

    ("r034", "bus-us-01", 2, [[
        ("Our", "we", "PRON", 2, "nmod:poss"),
        ("server", "server", "NOUN", 3, "nsubj"),
        ("brought", "bring", "VERB", 0, "root"),
        ("cold", "cold", "ADJ", 5, "amod"),
        ("fries", "fry", "NOUN", 3, "obj"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], [("cold", "food", 0, "attributive")]),

    ("r035", "bus-us-02", 5, [[
        ("The", "the", "DET", 3, "det"),
        ("dining", "dining", "NOUN", 3, "compound"),
        ("room", "room", "NOUN", 5, "nsubj"),
        ("was", "be", "AUX", 5, "cop"),
        ("grand", "grand", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 5, "punct"),
    ]], [], [("grand", "venue", 0, "predicative")]),

    ("r036", "bus-eur-01", 3, [[
        ("The", "the", "DET", 2, "det"),
        ("owner", "owner", "NOUN", 5, "nsubj"),
        ("was", "be", "AUX", 5, "cop"),
        ("not", "not", "PART", 5, "advmod"),
        ("rude", "rude", "ADJ", 0, "root"),
        (",", ",", "PUNCT", 8, "punct"),
        ("just", "just", "ADV", 8, "advmod"),
        ("busy", "busy", "ADJ", 5, "conj"),
        (".", ".", "PUNCT", 5, "punct"),
    ]], [], []),

    ("r037", "bus-eur-02", 4, [[
        ("The", "the", "DET", 2, "det"),
        ("sommelier", "sommelier", "NOUN", 3, "nsubj"),
        ("suggested", "suggest", "VERB", 0, "root"),
        ("a", "a", "DET", 6, "det"),
        ("lavish", "lavish", "ADJ", 6, "amod"),
        ("pairing", "pairing", "NOUN", 3, "obj"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], []),

    ("r038", "bus-lat-01", 5, [[
        ("The", "the", "DET", 2, "det"),
        ("salsa", "salsa", "NOUN", 3, "nsubj"),
        ("tasted", "taste", "VERB", 0, "root"),
        ("authentic", "authentic", "ADJ", 3, "xcomp"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], []),

    ("r039", "bus-lat-01", 4, [[
        ("An", "a", "DET", 3, "det"),
        ("affordable", "affordable", "ADJ", 3, "amod"),
        ("spot", "spot", "NOUN", 0, "root"),
        ("for", "for", "ADP", 6, "case"),
        ("cheap", "cheap", "ADJ", 6, "amod"),
        ("eats", "eats", "NOUN", 3, "nmod"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], [("affordable", "venue", 0, "attributive")]),

    ("r040", "bus-as-01", 2, [[
        ("The", "the", "DET", 2, "det"),
        ("waiter", "waiter", "NOUN", 4, "nsubj"),
        ("never", "never", "ADV", 4, "advmod"),
        ("smiled", "smile", "VERB", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], []),

    ("r041", "bus-as-02", 5, [[
        ("Fresh", "fresh", "ADJ", 2, "amod"),
        ("rolls", "roll", "NOUN", 0, "root"),
        (",", ",", "PUNCT", 5, "punct"),
        ("hot", "hot", "ADJ", 5, "amod"),
        ("soup", "soup", "NOUN", 2, "conj"),
        (",", ",", "PUNCT", 10, "punct"),
        ("and", "and", "CCONJ", 10, "cc"),
        ("a", "a", "DET", 10, "det"),
        ("clean", "clean", "ADJ", 10, "amod"),
        ("table", "table", "NOUN", 2, "conj"),
        (".", ".", "PUNCT", 2, "punct"),
    ]], [], [("fresh", "food", 0, "attributive"), ("hot", "food", 0, "attributive"),
             ("clean", "venue", 0, "attributive")]),

    ("r042", "bus-us-01", 3, [[
        ("A", "a", "DET", 3, "det"),
        ("generic", "generic", "ADJ", 3, "amod"),
        ("place", "place", "NOUN", 0, "root"),
        ("with", "with", "ADP", 6, "case"),
        ("standard", "standard", "ADJ", 6, "amod"),
        ("fare", "fare", "NOUN", 3, "nmod"),
        (".", ".", "PUNCT", 3, "punct"),
    ]], [], [("generic", "venue", 0, "attributive")]),

    ("r043", "bus-us-02", 4, [[
        ("The", "the", "DET", 3, "det"),
        ("brunch", "brunch", "NOUN", 3, "compound"),
        ("menu", "menu", "NOUN", 5, "nsubj"),
        ("was", "be", "AUX", 5, "cop"),
        ("classic", "classic", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 5, "punct"),
    ]], [], [("classic", "food", 0, "predicative")]),

    ("r044", "bus-eur-01", 4, [[
        ("Without", "without", "ADP", 4, "case"),
        ("the", "the", "DET", 4, "det"),
        ("noisy", "noisy", "ADJ", 4, "amod"),
        ("crowd", "crowd", "NOUN", 8, "obl"),
        (",", ",", "PUNCT", 8, "punct"),
        ("the", "the", "DET", 7, "det"),
        ("room", "room", "NOUN", 8, "nsubj"),
        ("felt", "feel", "VERB", 0, "root"),
        ("calm", "calm", "ADJ", 8, "xcomp"),
        (".", ".", "PUNCT", 8, "punct"),
    ]], [], []),

    ("r045", "bus-eur-02", 5, [[
        ("The", "the", "DET", 3, "det"),
        ("refined", "refined", "ADJ", 3, "amod"),
        ("atmosphere", "atmosphere", "NOUN", 4, "nsubj"),
        ("justified", "justify", "VERB", 0, "root"),
        ("the", "the", "DET", 6, "det"),
        ("price", "price", "NOUN", 4, "obj"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("refined", "venue", 0, "attributive")]),

    ("r046", "bus-lat-02", 4, [[
        ("The", "the", "DET", 2, "det"),
        ("plantains", "plantain", "NOUN", 4, "nsubj"),
        ("were", "be", "AUX", 4, "cop"),
        ("sweet", "sweet", "ADJ", 0, "root"),
        ("and", "and", "CCONJ", 9, "cc"),
        ("the", "the", "DET", 7, "det"),
        ("rice", "rice", "NOUN", 9, "nsubj"),
        ("was", "be", "AUX", 9, "cop"),
        ("smoky", "smoky", "ADJ", 4, "conj"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("smoky", "food", 0, "predicative")]),

    ("r047", "bus-as-01", 4, [[
        ("The", "the", "DET", 2, "det"),
        ("interior", "interior", "NOUN", 4, "nsubj"),
        ("was", "be", "AUX", 4, "cop"),
        ("sleek", "sleek", "ADJ", 0, "root"),
        (".", ".", "PUNCT", 4, "punct"),
    ]], [], [("sleek", "venue", 0, "predicative")]),

    ("r048", "bus-as-02", 2, [[
        ("The", "the", "DET", 2, "det"),
        ("tea", "tea", "NOUN", 5, "nsubj"),
        ("was", "be", "AUX", 5, "cop"),
        ("n't", "not", "PART", 5, "advmod"),
        ("hot", "hot", "ADJ", 0, "root"),
        (",", ",", "PUNCT", 12, "punct"),
        ("and", "and", "CCONJ", 12, "cc"),
        ("the", "the", "DET", 9, "det"),
        ("dumplings", "dumpling", "NOUN", 12, "nsubj"),
        ("were", "be", "AUX", 12, "cop"),
        ("n't", "not", "PART", 12, "advmod"),
        ("warm", "warm", "ADJ", 5, "conj"),
        (".", ".", "PUNCT", 5, "punct"),
    ]], [], []),

    ("r049", "bus-us-01", 3, [], [], []),
    ("r050", "bus-lat-01", 4, [], [], []),
]

BUSINESSES = [
    ("bus-us-01", "Golden Fork Diner", "PA", "19103", 39.9526, -75.1652,
     "American (Traditional), Restaurants", 2, 3.5),
    ("bus-us-02", "Maple & Main", "PA", "19104", 39.9600, -75.1900,
     "American (New), Restaurants", 3, 4.0),
    ("bus-us-03", "Dixie Porch", "PA", "90000", 39.9700, -75.2000,
     "Southern, Restaurants", 1, 3.0),
    ("bus-us-04", "Hearth & Holler", "FL", "90001", 25.7600, -80.1800,
     "Soul Food, Restaurants", 4, 4.5),
    ("bus-eur-01", "Trattoria Lucca", "FL", "33101", 25.7743, -80.1937,
     "Italian, Restaurants", 3, 4.5),
    ("bus-eur-02", "Chez Odette", "FL", "33102", 25.7800, -80.2000,
     "French, Restaurants", 4, 4.0),
    ("bus-eur-03", "Athena Corner", "PA", "90002", 39.9400, -75.1500,
     "Greek, Restaurants", 1, 3.5),
    ("bus-eur-04", "Casa Iberica", "FL", "90003", 25.7500, -80.1700,
     "Spanish, Restaurants", 2, 4.0),
    ("bus-lat-01", "Taqueria El Sol", "PA", "90004", 39.9500, -75.1700,
     "Mexican, Restaurants", 1, 4.5),
    ("bus-lat-02", "Habana Azul", "FL", "90005", 25.7700, -80.1900,
     "Cuban, Restaurants", 2, 4.0),
    ("bus-lat-03", "Arepa Luna", "PA", "90006", 39.9300, -75.1600,
     "Latin American, Restaurants", 3, 3.5),
    ("bus-lat-04", "Cocina Roja", "FL", "90007", 25.7400, -80.1600,
     "Mexican, Restaurants", 4, 4.0),
    ("bus-as-01", "Jade Garden", "PA", "90008", 39.9610, -75.1950,
     "Chinese, Restaurants", 2, 3.5),
    ("bus-as-02", "Bangkok Alley", "FL", "90009", 25.7810, -80.2050,
     "Thai, Restaurants", 3, 4.5),
    ("bus-as-03", "Sakura Lane", "PA", "90010", 39.9200, -75.1400,
     "Japanese, Restaurants", 1, 4.0),
    ("bus-as-04", "Pho Station", "FL", "90011", 25.7300, -80.1500,
     "Vietnamese, Restaurants", 4, 3.0),
]

# reviews name a region's -01/-02 business; spread them over all four
# of the region's outlets so business-level covariates vary
BUSINESS_BY_REGION = {}
for _bid, *_rest in BUSINESSES:
    BUSINESS_BY_REGION.setdefault(_bid.split("-")[1], []).append(_bid)


def assign_business(index, declared_business_id):
    region = declared_business_id.split("-")[1]
    outlets = BUSINESS_BY_REGION[region]
    return outlets[index % len(outlets)]


def detokenize(sentences):
    parts = []
    for sent in sentences:
        words = []
        for form, *_ in sent:
            if form in {".", ",", "!", "?"} or form.startswith("n't"):
                if words:
                    words[-1] += form
                    continue
            words.append(form)
        parts.append(" ".join(words))
    return " ".join(parts)


def write_conllu(path):
    lines = []
    for review_id, _, _, sentences, _, _ in REVIEWS:
        lines.append(f"# review_id = {review_id}")
        for sent in sentences:
            for i, (form, lemma, upos, head, deprel) in enumerate(sent, start=1):
                lines.append(
                    "\t".join([str(i), form, lemma, upos, "_", "_", str(head), deprel, "_", "_"])
                )
            lines.append("")
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_coref(path):
    with open(path, "w", encoding="utf-8") as fh:
        for review_id, _, _, _, chains, _ in REVIEWS:
            if not chains:
                continue
            obj = {
                "review_id": review_id,
                "chains": [
                    [{"sent": s, "start": a, "end": b} for s, a, b in chain]
                    for chain in chains
                ],
            }
            fh.write(json.dumps(obj) + "\n")


def write_gold(path):
    rows = ["review_id,lemma,category,sentence,path"]
    for review_id, _, _, _, _, gold in REVIEWS:
        for lemma, category, sentence, feat_path in gold:
            rows.append(f"{review_id},{lemma},{category},{sentence},{feat_path}")
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def write_manifest(path):
    manifest = {
        review_id: {
            "sentences": len(sentences),
            "tokens": sum(len(s) for s in sentences),
        }
        for review_id, _, _, sentences, _, _ in REVIEWS
    }
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def write_reviews_ndjson(path):
    with open(path, "w", encoding="utf-8") as fh:
        for i, (review_id, business_id, stars, sentences, _, _) in enumerate(REVIEWS):
            rec = {
                "review_id": review_id,
                "business_id": assign_business(i, business_id),
                "user_id": f"user-{i % 10:02d}",
                "stars": stars,
                "text": detokenize(sentences),
                "date": "2019-06-01",
            }
            fh.write(json.dumps(rec) + "\n")


def write_businesses_ndjson(path):
    with open(path, "w", encoding="utf-8") as fh:
        for bid, name, state, zipcode, lat, lon, categories, price, stars in BUSINESSES:
            rec = {
                "business_id": bid,
                "name": name,
                "address": "1 Main St",
                "city": "Testville",
                "state": state,
                "postal_code": zipcode,
                "latitude": lat,
                "longitude": lon,
                "stars": stars,
                "review_count": 40,
                "is_open": 1,
                "attributes": {"RestaurantsPriceRange2": str(price)},
                "categories": categories,
            }
            fh.write(json.dumps(rec) + "\n")


def write_census_csv(path):
    rng = random.Random(20240131)
    rows = ["zipcode,median_income,count_white,count_black,count_asian,"
            "count_hispanic,count_native,count_pacific,count_other"]
    zips = ["19103", "19104", "33101", "33102"] + [f"{90000 + i}" for i in range(26)]
    for z in zips:
        income = rng.randint(32000, 110000)
        counts = [rng.randint(500, 20000) for _ in range(7)]
        rows.append(f"{z},{income}," + ",".join(str(c) for c in counts))
    path.write_text("\n".join(rows) + "\n", encoding="utf-8")


def main(out_dir="tests/fixtures/golden"):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_conllu(out / "golden.conllu")
    write_coref(out / "golden_coref.jsonl")
    write_gold(out / "golden_features.csv")
    write_manifest(out / "golden_manifest.json")
    write_reviews_ndjson(out / "reviews.ndjson")
    write_businesses_ndjson(out / "businesses.ndjson")
    write_census_csv(out / "census.csv")
    n_sentences = sum(len(s) for _, _, _, s, _, _ in REVIEWS)
    print(f"wrote {len(REVIEWS)} reviews / {n_sentences} sentences to {out}")


if __name__ == "__main__":
    main(*sys.argv[1:])
