"""Regenerate the resources bundled with the mini corpus.

Writes, under src/hybridsumm/data/minicorpus/:

* mini.lex            hand-written taxonomy covering the corpus vocabulary
* mini_vectors.txt    synthetic 50-d word vectors, clustered by taxonomy branch
* mini_embeddings.txt synthetic 64-d sentence vectors for every corpus sentence

The vectors are not trained on anything. Each word vector mixes the direction
of its taxonomy category with word-specific noise from a fixed seed, so words
in the same branch end up close together. Sentence embeddings are a fixed
random projection of the sentence's mean word vector plus noise.

Usage: python3 tools/build_mini_resources.py
"""

from __future__ import annotations

import glob
import os

import numpy as np

from hybridsumm.lexicon import load_lexicon
from hybridsumm.preprocess import preprocess_document

ROOT = os.path.join(os.path.dirname(__file__), "..", "src", "hybridsumm", "data", "minicorpus")
SEED = 20240611
VEC_DIM = 50
EMB_DIM = 64

# (category, parent, gloss, members). Categories become synsets themselves;
# members are leaf lemmas whose synset has the category as hypernym.
NOUNS = [
    ("entity", None, "anything that exists", []),
    ("person", "entity", "a human being", ["people", "child", "resident", "family"]),
    ("worker", "person", "a person who does a job for pay",
     ["doctor", "nurse", "scientist", "engineer", "economist", "analyst", "firefighter", "soldier",
      "farmer", "investigator", "reviewer", "executive", "coach"]),
    ("leader", "person", "a person who rules or guides others",
     ["minister", "governor", "official", "speaker", "captain", "delegate", "negotiator"]),
    ("participant", "person", "a person who takes part in an activity",
     ["player", "striker", "fan", "voter", "observer", "investor", "rival", "host"]),
    ("group", "entity", "a number of things or people considered together",
     ["crowd", "crew", "opposition", "majority"]),
    ("organization", "group", "a group of people with a shared purpose",
     ["agency", "company", "commission", "department", "government", "parliament", "cabinet",
      "army", "team", "supplier"]),
    ("location", "entity", "a point or area in space", ["site", "center", "space", "orbit", "outside"]),
    ("region", "location", "a large area of land or a political division",
     ["country", "nation", "city", "town", "village", "north", "world", "america", "asia", "europe",
      "coast", "port"]),
    ("landform", "location", "a natural feature of the surface of the earth",
     ["valley", "hill", "mountain", "ground", "forest", "river", "ocean", "sea", "hectare"]),
    ("structure", "location", "something built such as a building or road",
     ["building", "house", "home", "hospital", "clinic", "school", "shelter", "store", "stadium",
      "levee", "road", "street", "highway", "square", "ruin", "roof"]),
    ("artifact", "entity", "an object made by people", ["bed", "blanket", "tent", "net"]),
    ("vehicle", "artifact", "a machine that carries people or goods",
     ["boat", "rocket", "aircraft", "satellite"]),
    ("device", "artifact", "a machine or tool made for a purpose",
     ["phone", "smartphone", "camera", "battery", "processor", "valve"]),
    ("substance", "entity", "a particular kind of matter", ["supply", "water", "oil", "coal", "carbon", "fuel"]),
    ("food", "substance", "something that people or animals eat", ["crop"]),
    ("medicine", "substance", "a drug used to treat illness", ["drug", "vaccine", "dose"]),
    ("animal", "entity", "a living creature that moves", ["cattle", "dog"]),
    ("event", "entity", "something that happens at a given place and time", ["result", "record"]),
    ("disaster", "event", "a sudden event causing great damage or loss of life",
     ["earthquake", "quake", "aftershock", "flood", "flooding", "drought", "wildfire", "blaze",
      "landslide", "collapse", "storm"]),
    ("weather", "event", "the state of the air with rain wind and temperature",
     ["rain", "wind", "cloud", "smoke", "climate", "temperature", "warming"]),
    ("contest", "event", "a competition between rivals",
     ["election", "competition", "championship", "final", "poll", "vote", "victory", "turnout",
      "trial"]),
    ("meeting", "event", "a gathering of people for a purpose",
     ["summit", "conference", "talk", "parade"]),
    ("action", "event", "something done by people",
     ["rescue", "evacuation", "liftoff", "delivery", "sale", "aid", "help", "fight", "kick",
      "header", "mistake", "football", "defence", "emergency", "step", "challenge", "prevention", "work", "service", "mission",
      "program", "survey", "manufacture", "damage", "death", "emission", "protest"]),
    ("change", "event", "an event in which something becomes different",
     ["growth", "rise", "increase", "decline", "fall", "decrease"]),
    ("illness", "event", "a disease or period of sickness", ["disease", "malaria", "health"]),
    ("abstraction", "entity", "an idea or quality rather than a physical thing",
     ["life", "problem", "priority", "control", "joy", "fear", "belief", "confidence", "method",
      "technology", "design", "model", "limit", "target", "half", "end", "past", "level"]),
    ("quantity", "abstraction", "an amount or number of something",
     ["number", "percent", "magnitude", "meter", "one", "two", "three", "four", "six", "eight",
      "nine", "ten", "twenty", "forty", "seventy", "hundred", "thousand", "million", "dozen"]),
    ("finance", "abstraction", "the management of money prices and markets",
     ["money", "dollar", "currency", "price", "cost", "tax", "share", "rate", "index", "inflation",
      "unemployment", "economy", "demand", "market"]),
    ("time_period", "abstraction", "an amount of time",
     ["day", "week", "weekend", "month", "year", "decade", "century", "night", "morning", "minute",
      "time", "monday", "tuesday", "wednesday", "thursday", "friday", "saturday", "sunday"]),
    ("communication", "abstraction", "information given or exchanged",
     ["report", "announcement", "speech", "forecast", "photograph", "signal", "agreement",
      "decision", "plan", "draft"]),
]

VERBS = [
    ("change", None, "cause to become different",
     ["increase", "reduce", "raise", "improve", "slow", "expand", "develop", "adapt", "restore",
      "replace", "turn", "combine", "separate", "warm"]),
    ("destroy", "change", "damage something so badly that it no longer exists",
     ["kill", "damage", "burn", "collapse", "explode", "drown", "injure", "break"]),
    ("move", None, "change position or place",
     ["go", "leave", "flee", "escape", "lift", "push", "carry", "enter", "reach", "visit",
      "gather", "follow", "displace", "strike", "shake", "rise", "fall", "drop", "flood"]),
    ("transfer", "move", "move something from one person or place to another",
     ["give", "pay", "sell", "provide", "deliver", "send", "take"]),
    ("communicate", None, "give information by speaking or writing",
     ["say", "tell", "ask", "call", "announce", "report", "warn", "urge", "praise", "argue",
      "predict", "promise", "protest", "congratulate", "declare", "cheer", "show", "unveil"]),
    ("decide", "communicate", "make a choice after thinking",
     ["approve", "accept", "vote", "elect", "negotiate", "plan", "order"]),
    ("act", None, "do something for a purpose",
     ["help", "rescue", "treat", "work", "try", "start", "stop", "avoid", "meet", "cover",
      "contain", "block", "trap", "close", "center", "govern", "farm", "lead", "direct", "host", "use",
      "delay", "set", "end", "survey", "charge", "measure", "search", "watch", "celebrate",
      "campaign", "sleep"]),
    ("compete", "act", "try to win against others", ["win", "lose", "score", "beat", "equalize", "kick", "fight"]),
    ("make", "act", "bring something into existence", ["produce", "build", "design", "manufacture"]),
    ("cause", "act", "make something happen", ["affect", "force", "determine"]),
    ("feel", None, "experience an emotion or sensation", ["fear", "expect", "suffer"]),
]

ADJECTIVES = [
    "powerful", "strong", "weak", "heavy", "severe", "serious", "dramatic", "early", "previous",
    "effective", "national", "international", "regional", "global", "rural", "remote", "coastal",
    "central", "northern", "western", "tropical", "dry", "warm", "high", "low", "large", "small",
    "giant", "new", "young", "poor", "rich", "cheap", "fast", "slow", "safe", "free", "fair",
    "full", "bright", "clean", "hard", "long", "short", "narrow", "major", "main", "necessary",
    "possible", "single", "normal", "frequent", "economic", "environmental", "medical", "clinical",
    "solar", "electoral", "geological", "public", "prime", "last", "next", "first", "second",
    "near", "nearby", "several", "many", "close", "bad",
]
ADVERBS = [
    "accurately", "extremely", "largely", "nearly", "partly", "sharply", "unexpectedly", "almost",
    "already", "twice",
]

# Second senses so that sense disambiguation has real choices. They are
# listed after the primary sense of each lemma.
EXTRA_SENSES = [
    ("bank", "n", "finance", "a financial institution that accepts deposits and lends money to investors",
     ["the central bank raised interest rates"]),
    ("bank", "n", "landform", "sloping land beside a river or lake", ["water rose over the river bank"]),
    ("interest", "n", "finance", "money paid for the use of borrowed money", ["interest rates rose"]),
    ("interest", "n", "abstraction", "a feeling of wanting to know about something", []),
    ("launch", "n", "action", "the act of sending a rocket or satellite into space",
     ["the rocket launch was delayed by weather"]),
    ("launch", "n", "vehicle", "a motorboat used on rivers", []),
    ("match", "n", "contest", "a sports game between two teams or players",
     ["the team won the football match"]),
    ("match", "n", "device", "a small stick that produces fire when struck", []),
    ("fire", "n", "disaster", "burning that destroys forest and houses with flames and smoke",
     ["firefighters fought the forest fire"]),
    ("fire", "n", "action", "the shooting of weapons by soldiers", []),
    ("state", "n", "region", "a country or a region of a country with its own government",
     ["the state government ordered an evacuation"]),
    ("state", "n", "abstraction", "the condition of something at a time", []),
    ("stock", "n", "finance", "shares of a company traded on a market by investors",
     ["stock prices fell"]),
    ("stock", "n", "substance", "a supply of goods kept for use", []),
    ("power", "n", "substance", "electricity or energy supplied to homes", ["power lines were damaged"]),
    ("power", "n", "abstraction", "the ability to control people and events", []),
    ("energy", "n", "substance", "power from fuel coal oil or the sun", []),
    ("plant", "n", "structure", "a factory or power station that produces energy", ["coal plants"]),
    ("plant", "n", "animal", "a living organism such as a tree or crop", []),
    ("party", "n", "organization", "a political group that campaigns in an election",
     ["the governing party lost votes"]),
    ("party", "n", "meeting", "a social gathering for fun", []),
    ("club", "n", "organization", "a team or association of football players and fans", []),
    ("club", "n", "artifact", "a heavy stick used as a weapon", []),
    ("goal", "n", "action", "a score in football when the ball enters the net",
     ["the striker scored a goal"]),
    ("goal", "n", "abstraction", "an aim or target that someone wants to reach", []),
    ("screen", "n", "device", "the display of a phone camera or computer", ["a bright screen"]),
    ("screen", "n", "artifact", "a panel that hides or protects something", []),
    ("chip", "n", "device", "a small processor in a phone or computer", []),
    ("chip", "n", "food", "a thin fried slice of potato", []),
    ("line", "n", "structure", "a cable or wire carrying power or phone signal", []),
    ("line", "n", "abstraction", "a row of people waiting", []),
    ("station", "n", "structure", "a building or place for radio weather or space equipment", []),
    ("train", "n", "vehicle", "a series of railway carriages", []),
    ("net", "n", "artifact", "mosquito nets that protect people from malaria while they sleep", []),
    ("house", "n", "organization", "a chamber of parliament", []),
]

# Irregular forms (surface, pos, lemma).
EXCEPTIONS = [
    ("struck", "v", "strike"), ("fell", "v", "fall"), ("fought", "v", "fight"),
    ("shook", "v", "shake"), ("led", "v", "lead"), ("lost", "v", "lose"), ("made", "v", "make"),
    ("said", "v", "say"), ("sent", "v", "send"), ("slept", "v", "sleep"), ("sold", "v", "sell"),
    ("told", "v", "tell"), ("took", "v", "take"), ("went", "v", "go"), ("broke", "v", "break"),
    ("rose", "v", "rise"), ("risen", "v", "rise"), ("left", "v", "leave"), ("gave", "v", "give"),
    ("dropped", "v", "drop"), ("trapped", "v", "trap"), ("winning", "v", "win"),
    ("beating", "v", "beat"), ("children", "n", "child"), ("cheaper", "a", "cheap"), ("closest", "a", "close"),
    ("worst", "a", "bad"), ("stronger", "a", "strong"), ("weaker", "a", "weak"),
    ("faster", "a", "fast"), ("higher", "a", "high"), ("longer", "a", "long"),
    ("warmer", "a", "warm"),
]


def _quote(text: str) -> str:
    return '"' + text.replace('"', "'") + '"'


def lexicon_lines() -> list[str]:
    lines = ["# Mini lexicon for the bundled corpus; generated by tools/build_mini_resources.py"]
    counters: dict[tuple[str, str], int] = {}

    def sid(lemma, pos):
        counters[(lemma, pos)] = counters.get((lemma, pos), 0) + 1
        return f"{lemma}.{pos}.{counters[(lemma, pos)]:02d}"

    def emit(lemma, pos, hyper, gloss, examples=()):
        s = sid(lemma, pos)
        lines.append(
            f"SYN {s} {pos} lemmas={lemma} hyper={hyper or ''} gloss={_quote(gloss)} ex={_quote('|'.join(examples))}"
        )
        return s

    for table, pos in ((NOUNS, "n"), (VERBS, "v")):
        cat_ids = {}
        for cat, parent, gloss, members in table:
            cat_ids[cat] = emit(cat, pos, cat_ids.get(parent), gloss)
        for cat, parent, gloss, members in table:
            for m in members:
                if m in cat_ids and pos == "n" and m == cat:
                    continue
                emit(m, pos, cat_ids[cat], f"a kind of {cat.replace('_', ' ')}; {gloss}")
        if pos == "n":
            for lemma, _, cat, g, ex in EXTRA_SENSES:
                emit(lemma, "n", cat_ids[cat], g, ex)
    for a in ADJECTIVES:
        emit(a, "a", None, f"{a} in quality or degree")
    for r in ADVERBS:
        emit(r, "r", None, f"in a {r} manner")
    for surface, pos, lemma in EXCEPTIONS:
        lines.append(f"EXC {pos} {surface} {lemma}")
    return lines


def corpus_documents(lexicon):
    docs = []
    for path in sorted(glob.glob(os.path.join(ROOT, "docs", "*.txt"))):
        with open(path, encoding="utf-8") as fh:
            docs.append(preprocess_document(fh.read(), os.path.splitext(os.path.basename(path))[0], lexicon))
    return docs


def word_vectors(lexicon, docs, rng):
    node_dir: dict[str, np.ndarray] = {}

    def direction(sid):
        if sid not in node_dir:
            node_dir[sid] = rng.standard_normal(VEC_DIM)
        return node_dir[sid]

    words: dict[str, np.ndarray] = {}
    for sid in sorted(lexicon.synsets):
        chain = [sid]
        while lexicon.hypernyms.get(chain[-1]):
            chain.append(lexicon.hypernyms[chain[-1]][0])
        # ancestors dominate so that siblings share most of their direction
        vec = sum(direction(node) * 0.6 ** (len(chain) - 1 - k) for k, node in enumerate(reversed(chain)))
        for lemma in lexicon.synsets[sid].lemmas:
            if lemma not in words:
                words[lemma] = vec + 0.5 * rng.standard_normal(VEC_DIM)
    extra = sorted({t.normalized for d in docs for s in d.sentences for t in s.tokens
                    if t.is_content and (t.lemma or t.normalized) not in words})
    for w in extra:
        words[w] = rng.standard_normal(VEC_DIM)
    return {w: np.round(v / np.linalg.norm(v), 6) for w, v in sorted(words.items())}


def sentence_embeddings(docs, vectors, rng):
    proj = rng.standard_normal((VEC_DIM, EMB_DIM)) / np.sqrt(VEC_DIM)
    rows = []
    for doc in docs:
        for s in doc.sentences:
            vs = [vectors[t.lemma] if t.lemma in vectors else vectors.get(t.normalized)
                  for t in s.tokens if t.is_content]
            vs = [v for v in vs if v is not None]
            mean = np.mean(vs, axis=0) if vs else np.zeros(VEC_DIM)
            emb = mean @ proj + 0.05 * rng.standard_normal(EMB_DIM)
            rows.append((doc.id, s.index, np.round(emb, 6)))
    return rows


def main():
    lex_path = os.path.join(ROOT, "mini.lex")
    with open(lex_path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lexicon_lines()) + "\n")
    lexicon = load_lexicon(lex_path)
    docs = corpus_documents(lexicon)
    rng = np.random.default_rng(SEED)
    vectors = word_vectors(lexicon, docs, rng)
    with open(os.path.join(ROOT, "mini_vectors.txt"), "w", encoding="utf-8") as fh:
        for w, v in vectors.items():
            fh.write(w + " " + " ".join(f"{x:.6f}" for x in v) + "\n")
    rows = sentence_embeddings(docs, vectors, rng)
    with open(os.path.join(ROOT, "mini_embeddings.txt"), "w", encoding="utf-8") as fh:
        fh.write(f"DIM {EMB_DIM}\n")
        for doc_id, idx, v in rows:
            fh.write(f"{doc_id} {idx} " + " ".join(f"{x:.6f}" for x in v) + "\n")
    print(f"{len(lexicon.synsets)} synsets, {len(vectors)} vectors, {len(rows)} sentence embeddings")


if __name__ == "__main__":
    main()
