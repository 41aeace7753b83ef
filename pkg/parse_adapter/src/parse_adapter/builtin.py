"""Deterministic rule-based English parser backend.

A small lexicon-and-pattern parser producing UD-style trees for the
simple declarative sentences that dominate restaurant reviews:
attributive modifiers inside noun phrases, copular clauses rooted at
the adjectival or nominal predicate, transitive clauses, prepositional
attachment, and flat coordination. Pronoun coreference links they/it
to the most recent number-compatible noun.

Accuracy degrades gracefully on text outside these patterns (everything
still attaches into a single-rooted tree); for production-quality
parses install the spacy extra and use ``--backend spacy``. The rules
and lexicons below are versioned: golden fixtures regenerate
identically for a given BACKEND_VERSION.
"""

from __future__ import annotations

import re
from typing import NamedTuple

BACKEND_NAME = "builtin"
BACKEND_VERSION = "0.1.0"


class Word(NamedTuple):
    index: int
    form: str
    lemma: str
    upos: str
    head: int
    deprel: str


class Chain(NamedTuple):
    mentions: tuple[tuple[int, int], ...]  # (sentence index, 1-based token index)


class ParseFailure(Exception):
    pass


# ---------------------------------------------------------------------------
# lexicons
# ---------------------------------------------------------------------------

DETS = {"the", "a", "an", "no", "this", "that", "these", "those", "every", "some", "any"}
POSS_PRON = {"my", "our", "your", "their", "his", "her", "its"}
PRONOUNS = {"i", "we", "you", "they", "he", "she", "it", "us", "them", "me", "him",
            "nothing", "everything", "something", "everyone", "anyone"}
AUXES = {"is", "are", "was", "were", "am", "be", "been", "being"}
PARTS = {"not", "n't"}
CCONJ = {"and", "but", "or", "nor"}
ADPS = {"with", "for", "in", "on", "at", "of", "from", "without", "by", "near",
        "inside", "outside", "during", "after", "before"}
ADVS = {"very", "never", "hardly", "here", "there", "just", "otherwise", "always",
        "so", "too", "really", "quite", "extremely", "barely", "only", "even",
        "again", "still", "pretty"}
PUNCT = {".", ",", "!", "?", ";", ":"}

ADJECTIVES = {
    # framing vocabulary
    "abnormal", "bizarre", "different", "distinct", "distinctive", "exotic",
    "fascinating", "foreign", "intriguing", "odd", "peculiar", "strange",
    "unfamiliar", "unnatural", "unsettling", "unusual", "weird",
    "archetypal", "average", "basic", "characteristic", "classic", "classical",
    "common", "commonplace", "definitive", "emblematic", "essential", "everyday",
    "exemplary", "generic", "habitual", "mundane", "normal", "ordinary",
    "predictable", "quintessential", "regular", "standard", "stereotypical",
    "typical", "unremarkable", "usual",
    "accurate", "authentic", "hand-made", "handmade", "home-made", "homemade",
    "homey", "humble", "idyllic", "laid-back", "laidback", "legit", "legitimate",
    "modest", "original", "pastoral", "proper", "quaint", "real", "rural",
    "rustic", "simple", "traditional", "true", "unassuming", "uncomplicated",
    "unfussy", "unpretentious",
    "alluring", "astonishing", "breathtaking", "classy", "dazzling", "delicate",
    "dignified", "elaborate", "elegant", "enchanting", "enticing", "exquisite",
    "extraordinary", "extravagant", "fashionable", "glamorous", "glorious",
    "graceful", "grand", "lavish", "lush", "luxurious", "magnificent", "majestic",
    "marvelous", "ornate", "outstanding", "picturesque", "pleasing", "polished",
    "posh", "refined", "regal", "remarkable", "sleek", "sophisticated",
    "spectacular", "stylish", "tasteful", "voluptuous",
    "affordable", "budget", "cheap", "costly", "economical", "exorbitant",
    "expensive", "inexpensive", "low-cost", "low-priced", "overpriced", "pricey",
    "uncostly", "unexpensive",
    "clean", "dirty", "disgusting", "filthy", "grimy", "gross", "hygienic",
    "unhygienic", "messy", "nasty", "sanitary", "unsanitary", "smelly",
    "spotless", "stinking", "stinky", "tidy",
    # common evaluative adjectives
    "great", "good", "bad", "fresh", "friendly", "rude", "slow", "quick",
    "delicious", "tasty", "greasy", "cozy", "steep", "dated", "charming",
    "lovely", "attentive", "amazing", "nice", "busy", "stale", "flavorful",
    "cold", "hot", "warm", "calm", "noisy", "sweet", "smoky", "spicy", "rich",
    "fragrant", "crispy", "bland", "dry", "juicy", "tender", "crowded",
    "empty", "loud", "quiet", "fast", "fine", "decent", "terrible", "awful",
    "wonderful", "fantastic", "excellent", "perfect", "solid", "huge", "small",
    "big", "large", "tiny", "long", "short", "new", "old", "favorite", "tough",
    "salty", "sour", "bitter", "creamy", "crunchy", "soggy", "made",
}

NOUNS = {
    "food", "dish", "meal", "cuisine", "menu", "appetizer", "entree", "dessert",
    "snack", "portion", "serving", "plate", "bowl", "platter", "noodle", "rice",
    "soup", "salad", "bread", "sandwich", "burger", "pizza", "pasta", "taco",
    "burrito", "sushi", "ramen", "curry", "dumpling", "tofu", "chicken", "beef",
    "pork", "lamb", "duck", "fish", "shrimp", "seafood", "steak", "egg",
    "cheese", "sauce", "broth", "wing", "fry", "fries", "roll", "wrap", "pho",
    "kebab", "falafel", "hummus", "pancake", "waffle", "drink", "cocktail",
    "wine", "beer", "coffee", "tea", "flavor", "ingredient", "veggie",
    "vegetable", "staff", "waiter", "waitress", "server", "waitstaff",
    "employee", "bartender", "barista", "host", "hostess", "chef", "cook",
    "owner", "manager", "cashier", "busser", "sommelier", "crew", "team",
    "personnel", "worker", "attendant", "runner", "greeter", "dishwasher",
    "place", "restaurant", "spot", "venue", "location", "establishment",
    "eatery", "joint", "atmosphere", "ambiance", "ambience", "decor",
    "interior", "room", "space", "patio", "seating", "table", "booth",
    "bathroom", "restroom", "kitchen", "vibe", "environment", "setting",
    "service", "price", "prices", "dinner", "lunch", "breakfast", "brunch",
    "night", "time", "experience", "visit", "order", "bill", "check", "crowd",
    "line", "wait", "hand", "dining", "escargot", "plantain", "salsa", "eats",
    "pairing", "fare", "stuff", "value", "quality", "star", "review", "minute",
    "hour", "day", "week", "year", "tip", "money", "people", "family", "friend",
    "kid", "date", "party", "group", "town", "city", "area", "neighborhood",
}

VERBS = {
    "had", "have", "has", "loved", "love", "like", "liked", "includes",
    "include", "included", "plated", "plate", "tasted", "taste", "seemed",
    "seem", "seems", "brought", "bring", "brings", "ruined", "ruin", "ruins",
    "suggested", "suggest", "smiled", "smile", "felt", "feel", "feels",
    "justified", "justify", "enjoyed", "enjoy", "impressed", "impress",
    "waited", "wait", "ordered", "came", "come", "went", "go", "got", "get",
    "ate", "eat", "served", "serve", "serves", "tried", "try", "visited",
    "visit", "recommend", "recommends", "recommended", "returned", "return",
    "arrived", "arrive", "sat", "sit", "left", "leave", "made", "make",
    "looked", "look", "looks", "smelled", "smell", "smells", "said", "say",
    "told", "tell", "took", "take", "asked", "ask", "paid", "pay", "found",
    "find", "thought", "think", "knew", "know", "wanted", "want", "needed",
    "need", "stopped", "stop",
}

LEMMA_EXCEPTIONS = {
    "was": "be", "were": "be", "is": "be", "are": "be", "am": "be",
    "been": "be", "being": "be", "n't": "not",
    "had": "have", "has": "have", "loved": "love", "liked": "like",
    "includes": "include", "included": "include", "plated": "plate",
    "tasted": "taste", "seemed": "seem", "seems": "seem", "brought": "bring",
    "brings": "bring", "ruined": "ruin", "ruins": "ruin",
    "suggested": "suggest", "smiled": "smile", "felt": "feel", "feels": "feel",
    "justified": "justify", "enjoyed": "enjoy", "impressed": "impress",
    "waited": "wait", "ordered": "order", "came": "come", "went": "go",
    "got": "get", "ate": "eat", "served": "serve", "serves": "serve",
    "tried": "try", "visited": "visit", "recommends": "recommend",
    "recommended": "recommend", "returned": "return", "arrived": "arrive",
    "sat": "sit", "left": "leave", "looked": "look", "looks": "look",
    "smelled": "smell", "smells": "smell", "said": "say", "told": "tell",
    "took": "take", "asked": "ask", "paid": "pay", "found": "find",
    "thought": "think", "knew": "know", "wanted": "want", "needed": "need",
    "stopped": "stop",
    "us": "we", "our": "we", "my": "i", "me": "i", "them": "they",
    "their": "they", "his": "he", "him": "he", "her": "she", "its": "it",
    "an": "a", "eats": "eats", "people": "people", "fries": "fry",
    "made": "made",  # participial adjective keeps its surface lemma
}

PLURAL_ONLY = {"people", "eats", "fries"}

_CONTRACTIONS = re.compile(r"(n't|'s|'re|'ve|'ll|'d|'m)$", re.IGNORECASE)
_SENT_SPLIT = re.compile(r"(?<=[.!?])\s+")


# ---------------------------------------------------------------------------
# tokenization / tagging / lemmas
# ---------------------------------------------------------------------------

def split_sentences(text: str) -> list[str]:
    return [s for s in _SENT_SPLIT.split(text.strip()) if s]


def tokenize(sentence: str) -> list[str]:
    tokens: list[str] = []
    for raw in sentence.split():
        lead: list[str] = []
        trail: list[str] = []
        while raw and raw[0] in "\"'(“‘":
            lead.append(raw[0])
            raw = raw[1:]
        while raw and raw[-1] in ".,!?;:)\"'”’":
            trail.append(raw[-1])
            raw = raw[:-1]
        parts = []
        if raw:
            m = _CONTRACTIONS.search(raw)
            if m and len(raw) > len(m.group(0)):
                parts = [raw[: m.start()], m.group(0)]
            else:
                parts = [raw]
        tokens.extend(lead + parts + list(reversed(trail)))
    return tokens


def tag(forms: list[str]) -> list[str]:
    tags: list[str] = []
    ambiguous: list[int] = []  # VERB/ADJ participials, provisionally ADJ
    for i, form in enumerate(forms):
        low = form.lower()
        if low in PUNCT or (len(form) == 1 and not form.isalnum()):
            tags.append("PUNCT")
        elif low in PARTS:
            tags.append("PART")
        elif low in DETS:
            tags.append("DET")
        elif low in POSS_PRON or low in PRONOUNS:
            tags.append("PRON")
        elif low in AUXES:
            tags.append("AUX")
        elif low in CCONJ:
            tags.append("CCONJ")
        elif low in ADPS:
            tags.append("ADP")
        elif low in ADVS:
            tags.append("ADV")
        elif low in VERBS and low in ADJECTIVES:
            # participial forms: adjectival after a noun or determiner run
            prev = tags[-1] if tags else None
            if prev in ("NOUN", "DET", "ADV", "ADJ"):
                ambiguous.append(i)
                tags.append("ADJ")
            else:
                tags.append("VERB")
        elif low in ADJECTIVES:
            tags.append("ADJ")
        elif low in VERBS:
            tags.append("VERB")
        elif low in NOUNS:
            tags.append("NOUN")
        elif low.endswith("ly") and len(low) > 4:
            tags.append("ADV")
        elif low.endswith("ed") and tags and tags[-1] in ("NOUN", "PRON"):
            tags.append("VERB")
        else:
            tags.append("NOUN")
    # a participial is the main verb when the sentence has no other predicate
    if ambiguous and "VERB" not in tags and "AUX" not in tags:
        tags[ambiguous[0]] = "VERB"
    # nominal use of an adjective: DET + ADJ at clause end ("a regular.")
    for i, t in enumerate(tags):
        if t != "ADJ":
            continue
        prev = tags[i - 1] if i > 0 else None
        nxt = tags[i + 1] if i + 1 < len(tags) else None
        if prev == "DET" and (nxt is None or nxt == "PUNCT"):
            tags[i] = "NOUN"
    return tags


def lemmatize(form: str, upos: str) -> str:
    low = form.lower()
    if low in LEMMA_EXCEPTIONS:
        return LEMMA_EXCEPTIONS[low]
    if upos == "NOUN":
        if low in NOUNS:
            # lexicon nouns listed in singular form stay as-is
            pass
        if low.endswith("ies") and len(low) > 4:
            return low[:-3] + "y"
        if low.endswith(("shes", "ches", "sses", "xes", "zes")):
            return low[:-2]
        if low.endswith("s") and not low.endswith("ss") and len(low) > 3:
            return low[:-1]
        return low
    if upos == "VERB":
        if low.endswith("ies") and len(low) > 4:
            return low[:-3] + "y"
        if low.endswith("ed") and len(low) > 4:
            return low[:-2]
        if low.endswith("s") and not low.endswith("ss") and len(low) > 3:
            return low[:-1]
        return low
    return low


def is_plural_noun(form: str, lemma: str) -> bool:
    return lemma in PLURAL_ONLY or form.lower() != lemma


# ---------------------------------------------------------------------------
# dependency parsing
# ---------------------------------------------------------------------------

class _NP(NamedTuple):
    start: int  # 0-based token positions, inclusive
    end: int
    head: int


def _chunk_nps(tags: list[str]) -> list[_NP | int]:
    """Segment the sentence into NP chunks and loose token positions."""
    items: list[_NP | int] = []
    i = 0
    n = len(tags)
    while i < n:
        if tags[i] in ("DET", "PRON", "ADJ", "NOUN", "ADV"):
            j = i
            while j < n and tags[j] in ("DET", "PRON", "ADJ", "NOUN", "ADV"):
                j += 1
            window = range(i, j)
            nominal = [k for k in window if tags[k] in ("NOUN", "PRON")]
            if nominal:
                head = nominal[-1]
                items.append(_NP(i, head, head))
                for k in range(head + 1, j):
                    items.append(k)  # trailing modifiers belong to the clause
            else:
                items.extend(window)  # bare ADJ/ADV material
            i = j
        else:
            items.append(i)
            i += 1
    return items


def _attach_np(np: _NP, tags: list[str], forms: list[str], heads, rels) -> None:
    head = np.head
    positions = list(range(np.start, np.end + 1))
    for k in positions:
        if k == head:
            continue
        t = tags[k]
        low = forms[k].lower()
        if t == "DET":
            heads[k], rels[k] = head, "det"
        elif t == "PRON" and low in POSS_PRON:
            heads[k], rels[k] = head, "nmod:poss"
        elif t == "ADV":
            nxt = next((m for m in positions if m > k and tags[m] == "ADJ"), head)
            heads[k], rels[k] = nxt, "advmod"
        elif t == "ADJ":
            heads[k], rels[k] = head, "amod"
        elif t == "NOUN":
            nxt = k + 1
            if nxt <= np.end and tags[nxt] == "ADJ":
                heads[k], rels[k] = nxt, "compound"  # "hand made", "slow cooked"
            else:
                heads[k], rels[k] = head, "compound"
        else:
            heads[k], rels[k] = head, "dep"


def parse_sentence(forms: list[str], tags: list[str]) -> tuple[list[int], list[str]]:
    """Heads (1-based, 0 = root) and relations for one sentence."""
    n = len(forms)
    heads = [None] * n
    rels = [None] * n
    items = _chunk_nps(tags)
    for item in items:
        if isinstance(item, _NP):
            _attach_np(item, tags, forms, heads, rels)

    pos = 0  # cursor over items

    def peek(offset=0):
        return items[pos + offset] if pos + offset < len(items) else None

    def is_np(item):
        return isinstance(item, _NP)

    def tag_of(item):
        return tags[item] if isinstance(item, int) else None

    def parse_clause():
        """Parse one clause/fragment starting at the cursor; returns its root
        (0-based) or None."""
        nonlocal pos
        leading_pp: list[int] = []   # PP heads waiting for a verbal root
        leading_punct: list[int] = []
        subj = None

        # optional sentence-initial PP: "Without the noisy crowd , ..."
        while peek() is not None and tag_of(peek()) == "ADP" and is_np(peek(1)):
            adp = peek()
            np = peek(1)
            heads[adp], rels[adp] = np.head, "case"
            leading_pp.append(np.head)
            pos += 2
            if peek() is not None and tag_of(peek()) == "PUNCT" and forms[peek()] == ",":
                leading_punct.append(peek())
                pos += 1

        if is_np(peek()):
            subj = peek()
            pos += 1

        # middle particles/adverbs before the predicate
        middles: list[int] = []
        while peek() is not None and tag_of(peek()) in ("PART", "ADV"):
            middles.append(peek())
            pos += 1

        item = peek()
        root = None

        if item is not None and tag_of(item) == "AUX":
            aux = item
            pos += 1
            while peek() is not None and tag_of(peek()) in ("PART", "ADV"):
                middles.append(peek())
                pos += 1
            pred = peek()
            if pred is not None and tag_of(pred) == "ADJ":
                root = pred
                pos += 1
            elif is_np(pred):
                root = pred.head
                pos += 1
            else:
                root = aux  # "It was there." and other leftovers
            if root != aux:
                heads[aux], rels[aux] = root, "cop"
            for m in middles:
                heads[m], rels[m] = root, "advmod"
            if subj is not None:
                heads[subj.head], rels[subj.head] = root, "nsubj"
            if tags[root] == "ADJ":
                _adjective_coordination(root)
        elif item is not None and tag_of(item) == "VERB":
            root = item
            pos += 1
            for m in middles:
                heads[m], rels[m] = root, "advmod"
            if subj is not None:
                heads[subj.head], rels[subj.head] = root, "nsubj"
            _verb_dependents(root)
        elif subj is not None:
            # nominal fragment: "A quaint spot with exotic dishes."
            root = subj.head
            for m in middles:
                heads[m], rels[m] = root, "advmod"
            _fragment_tail(root)
        elif item is not None:
            root = item if isinstance(item, int) else item.head
            pos += 1

        if root is None and leading_pp:
            root = leading_pp.pop()  # PP-only fragment: the nominal is the root
        for head in leading_pp:
            heads[head], rels[head] = root, "obl"
        for p in leading_punct:
            heads[p], rels[p] = root, "punct"
        return root

    def _adjective_coordination(first_adj):
        """clean and cheap / spicy , rich , and fragrant / not rude , just busy"""
        nonlocal pos
        while True:
            pending: list[tuple[int, str]] = []
            look = 0
            while True:
                item = peek(look)
                if item is None or is_np(item):
                    return
                t = tag_of(item)
                if t == "PUNCT" and forms[item] == ",":
                    pending.append((item, "punct"))
                elif t == "CCONJ":
                    # a clause follows the conjunction, not another adjective
                    nxt = peek(look + 1)
                    if nxt is not None and is_np(nxt):
                        return
                    pending.append((item, "cc"))
                elif t in ("ADV", "PART"):
                    pending.append((item, "advmod"))
                elif t == "ADJ":
                    break
                else:
                    return
                look += 1
            adj = peek(look)
            heads[adj], rels[adj] = first_adj, "conj"
            for tok, rel in pending:
                heads[tok], rels[tok] = adj, rel
            pos += look + 1

    def _verb_dependents(root):
        nonlocal pos
        while True:
            item = peek()
            if item is None:
                return
            if is_np(item):
                if rels[item.head] is None:
                    heads[item.head], rels[item.head] = root, "obj"
                pos += 1
            elif tag_of(item) == "ADJ":
                heads[item], rels[item] = root, "xcomp"
                pos += 1
            elif tag_of(item) == "ADV":
                heads[item], rels[item] = root, "advmod"
                pos += 1
            elif tag_of(item) == "ADP" and is_np(peek(1)):
                adp, np = item, peek(1)
                heads[adp], rels[adp] = np.head, "case"
                heads[np.head], rels[np.head] = root, "obl"
                pos += 2
            else:
                return

    def _fragment_tail(root):
        nonlocal pos
        last_nominal = root
        while True:
            item = peek()
            if item is None:
                return
            if tag_of(item) == "ADP" and is_np(peek(1)):
                adp, np = item, peek(1)
                heads[adp], rels[adp] = np.head, "case"
                heads[np.head], rels[np.head] = last_nominal, "nmod"
                last_nominal = np.head
                pos += 2
            elif tag_of(item) == "PUNCT" and forms[item] == "," and is_np(peek(1)):
                # NP coordination: "Fresh rolls , hot soup , and a clean table ."
                comma, np = item, peek(1)
                heads[np.head], rels[np.head] = root, "conj"
                heads[comma], rels[comma] = np.head, "punct"
                pos += 2
            elif tag_of(item) == "CCONJ" and is_np(peek(1)):
                cc, np = item, peek(1)
                heads[np.head], rels[np.head] = root, "conj"
                heads[cc], rels[cc] = np.head, "cc"
                pos += 2
            else:
                return

    main_root = parse_clause()

    # clause coordination: ", and the patio was lovely"
    while peek() is not None:
        item = peek()
        t = tag_of(item)
        if t == "PUNCT" and forms[item] == "," and (
            (peek(1) is not None and tag_of(peek(1)) == "CCONJ") or is_np(peek(1))
        ):
            comma = item
            pos += 1
            cc = None
            if peek() is not None and tag_of(peek()) == "CCONJ":
                cc = peek()
                pos += 1
            sub_root = parse_clause()
            if sub_root is None:
                heads[comma], rels[comma] = main_root, "punct"
                if cc is not None:
                    heads[cc], rels[cc] = main_root, "cc"
                break
            heads[sub_root], rels[sub_root] = main_root, "conj"
            heads[comma], rels[comma] = sub_root, "punct"
            if cc is not None:
                heads[cc], rels[cc] = sub_root, "cc"
        elif t == "CCONJ":
            cc = item
            pos += 1
            sub_root = parse_clause()
            if sub_root is None:
                heads[cc], rels[cc] = main_root, "cc"
                break
            heads[sub_root], rels[sub_root] = main_root, "conj"
            heads[cc], rels[cc] = sub_root, "cc"
        elif t == "PUNCT":
            heads[item], rels[item] = main_root, "punct"
            pos += 1
        else:
            root = item if isinstance(item, int) else item.head
            if rels[root] is None:
                heads[root], rels[root] = main_root, "dep"
            pos += 1

    if main_root is None:
        main_root = 0
    heads[main_root], rels[main_root] = -1, "root"  # -1 marks 0 in 1-based output

    # anything untouched (or attached to a vanished clause) hangs off the root
    for k in range(n):
        if rels[k] is None or heads[k] is None:
            if k == main_root:
                continue
            heads[k] = main_root
            rels[k] = "punct" if tags[k] == "PUNCT" else "dep"

    out_heads = [0 if h == -1 else h + 1 for h in heads]
    _validate_tree(out_heads)
    return out_heads, rels


def _validate_tree(heads: list[int]) -> None:
    n = len(heads)
    if sum(1 for h in heads if h == 0) != 1:
        raise ParseFailure("not single-rooted")
    for i, h in enumerate(heads, start=1):
        if not (0 <= h <= n) or h == i:
            raise ParseFailure(f"bad head {h} at {i}")
        seen = set()
        cur = i
        while cur != 0:
            if cur in seen:
                raise ParseFailure(f"cycle through {cur}")
            seen.add(cur)
            cur = heads[cur - 1]


# ---------------------------------------------------------------------------
# public backend API
# ---------------------------------------------------------------------------

def parse_review(text: str) -> tuple[list[list[Word]], list[Chain]]:
    """Sentences of parsed Words plus pronoun coreference chains."""
    sentences: list[list[Word]] = []
    for raw in split_sentences(text):
        forms = tokenize(raw)
        if not forms:
            continue
        tags = tag(forms)
        heads, rels = parse_sentence(forms, tags)
        words = [
            Word(i + 1, forms[i], lemmatize(forms[i], tags[i]), tags[i], heads[i], rels[i])
            for i in range(len(forms))
        ]
        sentences.append(words)
    return sentences, _resolve_pronouns(sentences)


def _resolve_pronouns(sentences: list[list[Word]]) -> list[Chain]:
    chains: dict[tuple[int, int], list[tuple[int, int]]] = {}
    seen_nouns: list[tuple[int, int, bool]] = []  # (sent, index, plural)
    for s_idx, sent in enumerate(sentences):
        for word in sent:
            low = word.form.lower()
            if word.upos == "NOUN":
                seen_nouns.append((s_idx, word.index, is_plural_noun(word.form, word.lemma)))
            elif word.upos == "PRON" and low in ("they", "it"):
                want_plural = low == "they"
                antecedent = next(
                    (
                        (s, i)
                        for s, i, plural in reversed(seen_nouns)
                        if plural == want_plural and (s, i) != (s_idx, word.index)
                    ),
                    None,
                )
                if antecedent is not None:
                    chains.setdefault(antecedent, [antecedent]).append((s_idx, word.index))
    return [Chain(tuple(mentions)) for mentions in chains.values() if len(mentions) >= 2]
