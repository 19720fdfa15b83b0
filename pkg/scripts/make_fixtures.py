#!/usr/bin/env python3
"""Regenerates the bundled fixture data under src/cfedit/data/.

Everything is deterministic: a fixed word inventory becomes the taxonomy,
seeded noise around per-synset anchors becomes the embedding table, and
seeded templates become the two toy corpora.  The emitted files are checked
in; rerun this script only when the inventory changes.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import numpy as np

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "src" / "cfedit" / "data"
sys.path.insert(0, str(ROOT / "src"))

SEED = 20240817
EMBED_DIM = 24

# --------------------------------------------------------------------------
# Word inventory: pos -> family -> list of leaf synsets (synonym groups).
# The family name itself becomes a one-word synset at the middle level, so
# leaf words sit exactly two hypernym hops below the POS root.
# --------------------------------------------------------------------------

NOUNS = {
    "animal": [
        ["dog", "hound"], ["cat", "kitten"], ["horse"], ["cow"], ["sheep"], ["goat"],
        ["pig"], ["rabbit"], ["fox"], ["wolf"], ["bear"], ["lion"], ["tiger"],
        ["elephant"], ["monkey"], ["deer"], ["mouse"], ["squirrel"], ["bird"],
        ["eagle"], ["hawk"], ["owl"], ["duck"], ["goose"], ["chicken"], ["fish"],
        ["salmon"], ["shark"], ["whale"], ["snake"], ["frog"], ["insect"], ["bee"],
    ],
    "food": [
        ["bread"], ["cheese"], ["butter"], ["milk"], ["coffee"], ["tea"], ["juice"],
        ["wine"], ["beer"], ["soup"], ["salad"], ["pasta"], ["rice"], ["meat"],
        ["beef"], ["pork"], ["cake"], ["pie"], ["cookie"], ["candy"], ["chocolate"],
        ["sugar"], ["salt"], ["pepper"], ["fruit"], ["apple"], ["banana"],
        ["orange"], ["grape"], ["lemon"], ["berry"], ["vegetable"], ["potato"],
        ["carrot"], ["onion"], ["bean"], ["corn"], ["egg"], ["stew"], ["pancake"],
    ],
    "place": [
        ["city"], ["town"], ["village"], ["street"], ["road"], ["park"], ["garden"],
        ["forest"], ["mountain"], ["river"], ["lake"], ["ocean"], ["beach"],
        ["island"], ["desert"], ["field"], ["farm"], ["school"], ["hospital"],
        ["library"], ["museum"], ["theater"], ["cinema"], ["restaurant"], ["cafe"],
        ["hotel"], ["airport"], ["station"], ["harbor"], ["market"], ["shop"],
        ["office"], ["factory"], ["church"], ["castle"], ["bridge"], ["tower"],
        ["valley"], ["coast"], ["plaza"],
    ],
    "artifact": [
        ["car"], ["truck"], ["bus"], ["train"], ["boat"], ["ship"], ["plane"],
        ["bicycle"], ["knife"], ["fork"], ["spoon"], ["plate"], ["cup"], ["glass"],
        ["bottle"], ["box"], ["bag"], ["chair"], ["table"], ["bed"], ["sofa"],
        ["lamp", "light"], ["clock", "watch"], ["phone"], ["computer"], ["camera"],
        ["radio"], ["television"], ["screen"], ["book"], ["pen"], ["pencil"],
        ["paper"], ["letter"], ["map"], ["key"], ["door"], ["window"], ["wall"],
        ["roof"], ["floor"], ["engine"], ["wheel"],
    ],
    "person": [
        ["man"], ["woman"], ["child"], ["boy"], ["girl"], ["friend"], ["teacher"],
        ["student"], ["doctor"], ["nurse"], ["actor"], ["actress"], ["director"],
        ["writer"], ["singer"], ["dancer"], ["artist"], ["painter"], ["farmer"],
        ["driver"], ["pilot"], ["soldier"], ["king"], ["queen"], ["hero"],
        ["villain"], ["stranger"], ["neighbor"], ["guest"], ["audience"], ["crew"],
    ],
    "event": [
        ["movie", "film"], ["story", "tale"], ["plot"], ["scene"], ["script"],
        ["dialogue"], ["character"], ["ending"], ["sequel"], ["comedy"], ["drama"],
        ["thriller"], ["romance"], ["musical"], ["documentary"], ["cartoon"],
        ["show", "play"], ["episode"], ["series"], ["performance", "play"],
        ["music"], ["song"], ["dance"], ["game"], ["match"], ["race"], ["party"],
        ["festival"], ["concert"], ["wedding"], ["journey", "trip"], ["holiday"],
        ["adventure"], ["meeting"], ["lesson"], ["war"], ["battle"],
    ],
    "feeling": [
        ["joy"], ["happiness"], ["sadness"], ["anger"], ["fear"], ["hope"],
        ["love"], ["hate"], ["pride"], ["shame"], ["surprise"], ["dream"],
        ["idea"], ["thought"], ["memory"], ["truth"], ["lie"], ["success"],
        ["failure"], ["victory"], ["defeat"], ["luck"], ["trouble"], ["peace"],
        ["noise"], ["silence"], ["beauty"], ["talent"], ["skill"], ["courage"],
        ["wisdom"], ["humor"],
    ],
}

VERBS = {
    "motion": [
        ["walk"], ["run"], ["jump"], ["climb"], ["swim"], ["fly"], ["drive"],
        ["ride"], ["travel"], ["arrive"], ["leave"], ["enter"], ["exit"], ["fall"],
        ["rise"], ["turn"], ["move"], ["wander"], ["crawl"], ["march"], ["chase"],
    ],
    "communication": [
        ["say"], ["tell"], ["speak"], ["talk"], ["shout"], ["whisper"], ["ask"],
        ["answer"], ["call"], ["write"], ["read"], ["sing"], ["describe"],
        ["explain"], ["argue"], ["discuss"], ["praise"], ["blame"], ["promise"],
        ["warn"], ["announce"], ["complain"],
    ],
    "perception": [
        ["see"], ["watch"], ["look"], ["hear"], ["listen"], ["feel"], ["touch"],
        ["smell"], ["taste"], ["notice"], ["observe"], ["ignore"],
    ],
    "creation": [
        ["make"], ["build"], ["create"], ["draw"], ["paint"], ["cook"], ["bake"],
        ["design"], ["produce"], ["compose"], ["invent"], ["repair"], ["destroy"],
        ["break"], ["ruin"],
    ],
    "cognition": [
        ["think"], ["know"], ["believe"], ["understand"], ["remember"], ["forget"],
        ["learn"], ["teach"], ["decide"], ["guess"], ["doubt"], ["imagine"],
        ["plan"], ["wonder"],
    ],
    "social": [
        ["love"], ["hate"], ["like"], ["enjoy"], ["prefer"], ["admire"],
        ["respect"], ["trust"], ["help"], ["thank"], ["welcome"], ["greet"],
        ["meet"], ["marry"], ["win"], ["lose"], ["fight"], ["play"],
    ],
    "consumption": [
        ["eat"], ["drink"], ["bite"], ["chew"], ["swallow"], ["serve"], ["share"],
        ["buy"], ["sell"], ["pay"], ["spend"], ["save"],
    ],
}

ADJS = {
    "positive_quality": [
        ["good"], ["great"], ["excellent"], ["wonderful"], ["amazing"],
        ["fantastic"], ["brilliant"], ["superb"], ["outstanding"], ["perfect"],
        ["fine"], ["nice"], ["pleasant"], ["lovely"], ["delightful"], ["charming"],
        ["enjoyable"], ["impressive"], ["remarkable"], ["splendid"],
    ],
    "negative_quality": [
        ["bad"], ["terrible"], ["awful"], ["horrible"], ["dreadful"], ["poor"],
        ["disappointing"], ["mediocre"], ["lousy"], ["atrocious"], ["unpleasant"],
        ["nasty"], ["miserable"], ["painful"], ["annoying"], ["boring"], ["dull"],
        ["tedious"], ["bland"], ["forgettable"],
    ],
    "mood": [
        ["happy"], ["glad"], ["cheerful"], ["joyful"], ["merry"], ["pleased"],
        ["delighted"], ["sad"], ["unhappy"], ["gloomy"], ["sorrowful"],
        ["depressed"], ["upset"], ["troubled"],
    ],
    "size": [
        ["big"], ["large"], ["huge"], ["enormous"], ["giant"], ["small"],
        ["little"], ["tiny"], ["narrow"], ["wide"],
    ],
    "pace": [["fast"], ["quick"], ["rapid"], ["swift"], ["slow"], ["sluggish"]],
    "temperature": [["hot"], ["warm"], ["cold"], ["cool"], ["freezing"]],
    "appearance": [
        ["bright"], ["shiny"], ["dark"], ["dim"], ["beautiful"], ["pretty"],
        ["gorgeous"], ["ugly"], ["hideous"], ["clean"], ["dirty"], ["light"],
    ],
    "age": [["new"], ["fresh"], ["modern"], ["young"], ["old"], ["ancient"]],
    "difficulty": [
        ["easy"], ["simple"], ["hard"], ["difficult"], ["tough"], ["complex"],
    ],
    "character": [
        ["strong"], ["powerful"], ["weak"], ["fragile"], ["clever"], ["smart"],
        ["wise"], ["foolish"], ["stupid"], ["silly"], ["funny"], ["hilarious"],
        ["witty"], ["serious"], ["calm"], ["quiet"], ["loud"], ["noisy"],
        ["rich"], ["wealthy"], ["expensive"], ["cheap"], ["busy"], ["lazy"],
        ["brave"], ["bold"], ["timid"], ["shy"], ["kind"], ["gentle"], ["cruel"],
        ["mean"], ["honest"], ["true"], ["false"], ["real"], ["fake"], ["tall"],
        ["short"], ["deep"], ["shallow"], ["full"], ["empty"],
    ],
}

ADVS = {
    "manner": [
        ["well"], ["nicely"], ["beautifully"], ["wonderfully"], ["brilliantly"],
        ["superbly"], ["gracefully"], ["smoothly"], ["perfectly"], ["cleverly"],
        ["badly"], ["poorly"], ["terribly"], ["awfully"], ["horribly"],
        ["clumsily"], ["crudely"], ["roughly"],
    ],
    "speed": [["quickly"], ["rapidly"], ["swiftly"], ["slowly"], ["gradually"]],
    "degree": [
        ["very"], ["quite"], ["rather"], ["extremely"], ["truly"], ["really"],
        ["almost"], ["nearly"], ["barely"], ["hardly"],
    ],
    "frequency": [
        ["always"], ["often"], ["usually"], ["sometimes"], ["rarely"], ["seldom"],
        ["never"], ["again"], ["once"], ["twice"],
    ],
    "time": [["now"], ["soon"], ["later"], ["early"], ["today"], ["tomorrow"]],
}

ANTONYMS = {
    "adj": [
        ("good", "bad"), ("great", "terrible"), ("excellent", "awful"),
        ("wonderful", "horrible"), ("fantastic", "dreadful"),
        ("brilliant", "dull"), ("superb", "atrocious"), ("outstanding", "poor"),
        ("perfect", "mediocre"), ("fine", "lousy"), ("nice", "nasty"),
        ("pleasant", "unpleasant"), ("lovely", "hideous"),
        ("delightful", "annoying"), ("enjoyable", "boring"),
        ("impressive", "forgettable"), ("remarkable", "bland"),
        ("charming", "tedious"), ("splendid", "disappointing"),
        ("happy", "sad"), ("happy", "unhappy"), ("glad", "gloomy"),
        ("cheerful", "miserable"), ("joyful", "sorrowful"), ("merry", "depressed"),
        ("pleased", "upset"), ("delighted", "troubled"),
        ("big", "small"), ("large", "little"), ("huge", "tiny"),
        ("wide", "narrow"), ("fast", "slow"), ("quick", "sluggish"),
        ("hot", "cold"), ("warm", "cool"), ("bright", "dark"), ("shiny", "dim"),
        ("new", "old"), ("modern", "ancient"), ("young", "old"),
        ("easy", "hard"), ("simple", "difficult"), ("strong", "weak"),
        ("powerful", "fragile"), ("clever", "foolish"), ("smart", "stupid"),
        ("wise", "silly"), ("funny", "serious"), ("quiet", "loud"),
        ("calm", "noisy"), ("clean", "dirty"), ("rich", "poor"),
        ("expensive", "cheap"), ("busy", "lazy"), ("brave", "timid"),
        ("bold", "shy"), ("kind", "cruel"), ("gentle", "mean"),
        ("true", "false"), ("real", "fake"), ("beautiful", "ugly"),
        ("pretty", "hideous"), ("tall", "short"), ("deep", "shallow"),
        ("full", "empty"),
    ],
    "adv": [
        ("well", "badly"), ("nicely", "poorly"), ("beautifully", "terribly"),
        ("wonderfully", "awfully"), ("brilliantly", "horribly"),
        ("smoothly", "roughly"), ("gracefully", "clumsily"),
        ("perfectly", "crudely"), ("quickly", "slowly"),
        ("rapidly", "gradually"), ("always", "never"), ("often", "rarely"),
        ("usually", "seldom"),
    ],
    "verb": [
        ("love", "hate"), ("win", "lose"), ("build", "destroy"),
        ("create", "ruin"), ("make", "break"), ("remember", "forget"),
        ("arrive", "leave"), ("enter", "exit"), ("rise", "fall"),
        ("buy", "sell"), ("praise", "blame"), ("save", "spend"),
        ("trust", "doubt"), ("whisper", "shout"),
    ],
    "noun": [
        ("success", "failure"), ("victory", "defeat"), ("joy", "sadness"),
        ("happiness", "sadness"), ("love", "hate"), ("truth", "lie"),
        ("peace", "war"), ("noise", "silence"), ("pride", "shame"),
        ("hope", "fear"),
    ],
}


def build_taxonomy_lines() -> tuple[list[str], dict[str, list[str]]]:
    """Returns the file lines plus a word -> synset-ids index (for embeddings)."""
    lines = ["# toy lexical taxonomy fixture (generated by scripts/make_fixtures.py)"]
    word_synsets: dict[str, list[str]] = {}
    inventories = [("noun", "n", NOUNS, "entity"), ("verb", "v", VERBS, "act"),
                   ("adj", "a", ADJS, "quality"), ("adv", "r", ADVS, "manner_root")]
    for pos, prefix, families, root_word in inventories:
        root_id = f"{prefix}.root"
        lines.append(f"synset {root_id} {pos} {root_word}")
        word_synsets.setdefault(root_word, []).append(root_id)
        for family, synsets in families.items():
            fam_id = f"{prefix}.{family}"
            fam_word = family.replace("_", "")
            fam_word = {"positivequality": "goodness", "negativequality": "badness",
                        "mannerroot": "manner"}.get(fam_word, fam_word)
            lines.append(f"synset {fam_id} {pos} {fam_word}")
            lines.append(f"hyper {fam_id} {root_id}")
            word_synsets.setdefault(fam_word, []).append(fam_id)
            for k, words in enumerate(synsets):
                sid = f"{fam_id}.{k}"
                lines.append(f"synset {sid} {pos} {','.join(words)}")
                lines.append(f"hyper {sid} {fam_id}")
                for w in words:
                    word_synsets.setdefault(w, []).append(sid)
    for pairs in ANTONYMS.values():
        for a, b in pairs:
            lines.append(f"ant {a} {b}")
    return lines, word_synsets


def build_embeddings(word_synsets: dict[str, list[str]]) -> tuple[list[str], np.ndarray]:
    """Structured vectors: shared per-synset anchors plus small word noise,
    with antonym pairs pushed toward negative correlation.  The generator
    asserts all pairwise cosines stay above -0.7 so that a 10x cross-POS
    penalty always exceeds the heaviest normal edge cost."""
    rng = np.random.RandomState(SEED)
    synset_ids = sorted({sid for sids in word_synsets.values() for sid in sids})
    anchors = {}
    family_anchor: dict[str, np.ndarray] = {}
    for sid in synset_ids:
        family = ".".join(sid.split(".")[:2])
        if family not in family_anchor:
            family_anchor[family] = rng.normal(0, 1, EMBED_DIM)
        anchors[sid] = family_anchor[family] + 0.8 * rng.normal(0, 1, EMBED_DIM)

    words = sorted(word_synsets)
    vectors = np.zeros((len(words), EMBED_DIM))
    index = {w: k for k, w in enumerate(words)}
    for w in words:
        base = np.mean([anchors[sid] for sid in word_synsets[w]], axis=0)
        vec = base + 0.35 * rng.normal(0, 1, EMBED_DIM)
        vectors[index[w]] = vec / np.linalg.norm(vec)

    # antonyms: re-derive the second word from the negated first
    for pairs in ANTONYMS.values():
        for a, b in pairs:
            va = vectors[index[a]]
            noise = 0.45 * rng.normal(0, 1, EMBED_DIM)
            vb = -0.8 * va + noise
            vectors[index[b]] = vb / np.linalg.norm(vb)

    # common positive anchor keeps extreme negative cosines away
    anchor = np.ones(EMBED_DIM) / np.sqrt(EMBED_DIM)
    vectors = vectors + 0.55 * anchor
    vectors /= np.linalg.norm(vectors, axis=1, keepdims=True)

    gram = vectors @ vectors.T
    min_cos = gram[~np.eye(len(words), dtype=bool)].min()
    assert min_cos > -0.7, f"pairwise cosine floor violated: {min_cos}"
    assert abs(float(vectors[index["good"]] @ vectors[index["bad"]])) < 0.95
    return words, vectors


POS_REVIEW_TEMPLATES = [
    "a {p1} {ev} with a {p2} {ev2}",
    "the {ev} was {p1} and the {per} performed {pv}",
    "i enjoyed the {p1} {ev} because the {ev2} felt {p2}",
    "this {p1} {ev} made the {ev2} look {p2}",
    "the {per} was {p1} and the {ev} stayed {p2} until the ending",
    "a {p1} {ev} that the {per} carried {pv}",
    "truly a {p1} {ev} with a {p2} {ev2} and a {p3} ending",
    "the {ev} felt {p1} , the {ev2} was {p2} and the music fit {pv}",
]

NEG_REVIEW_TEMPLATES = [
    "a {n1} {ev} with a {n2} {ev2}",
    "the {ev} was {n1} and the {per} performed {nv}",
    "i regretted the {n1} {ev} because the {ev2} felt {n2}",
    "this {n1} {ev} made the {ev2} look {n2}",
    "the {per} was {n1} and the {ev} stayed {n2} until the ending",
    "a {n1} {ev} that the {per} carried {nv}",
    "sadly a {n1} {ev} with a {n2} {ev2} and a {n3} ending",
    "the {ev} felt {n1} , the {ev2} was {n2} and the music fit {nv}",
]

POS_ADJ = [w for syn in ADJS["positive_quality"] for w in syn]
NEG_ADJ = [w for syn in ADJS["negative_quality"] for w in syn]
POS_ADV = ["well", "nicely", "beautifully", "wonderfully", "brilliantly",
           "superbly", "gracefully", "smoothly", "perfectly"]
NEG_ADV = ["badly", "poorly", "terribly", "awfully", "horribly", "clumsily", "roughly"]
EVENT_NOUNS = [w for syn in NOUNS["event"] for w in syn]
PERSON_NOUNS = [w for syn in NOUNS["person"] for w in syn]


def make_sentiment_corpus(count=400) -> list[dict]:
    rng = np.random.RandomState(SEED + 1)
    docs = []
    for k in range(count):
        positive = k < count // 2
        templates = POS_REVIEW_TEMPLATES if positive else NEG_REVIEW_TEMPLATES
        adjs = POS_ADJ if positive else NEG_ADJ
        advs = POS_ADV if positive else NEG_ADV
        n_sentences = 1 + int(rng.randint(0, 3))
        sentences = []
        for _ in range(n_sentences):
            template = templates[rng.randint(len(templates))]
            a = list(rng.choice(adjs, size=3, replace=False))
            fields = {
                "p1": a[0], "p2": a[1], "p3": a[2],
                "n1": a[0], "n2": a[1], "n3": a[2],
                "pv": advs[rng.randint(len(advs))],
                "nv": advs[rng.randint(len(advs))],
                "ev": EVENT_NOUNS[rng.randint(len(EVENT_NOUNS))],
                "ev2": EVENT_NOUNS[rng.randint(len(EVENT_NOUNS))],
                "per": PERSON_NOUNS[rng.randint(len(PERSON_NOUNS))],
            }
            sentences.append(template.format(**fields))
        docs.append({
            "id": f"sent-{k:04d}",
            "text": (" . ".join(sentences) + " .").replace("  ", " "),
            "label": "positive" if positive else "negative",
        })
    return docs


TOPIC_FIELDS = {
    "animals": (NOUNS["animal"], ["field", "forest", "farm", "river", "park"]),
    "food": (NOUNS["food"], ["restaurant", "cafe", "market", "table"]),
    "travel": (NOUNS["place"], ["journey", "trip", "holiday", "adventure"]),
}

TOPIC_TEMPLATES = [
    "the {w1} and the {w2} were near the {w3}",
    "we saw a {w1} beside the {w2} during the {w3}",
    "a {w1} with a {w2} appeared at the {w3}",
    "the {w1} stayed close to the {w2} all day at the {w3}",
]


def make_topic_corpus(count=300) -> list[dict]:
    rng = np.random.RandomState(SEED + 2)
    labels = list(TOPIC_FIELDS)
    docs = []
    per_class = count // len(labels)
    k = 0
    for label in labels:
        groups, extras = TOPIC_FIELDS[label]
        words = [w for syn in groups for w in syn]
        for _ in range(per_class):
            template = TOPIC_TEMPLATES[rng.randint(len(TOPIC_TEMPLATES))]
            picks = list(rng.choice(words, size=2, replace=False))
            extra = extras[rng.randint(len(extras))]
            text = template.format(w1=picks[0], w2=picks[1], w3=extra) + " ."
            docs.append({"id": f"topic-{k:04d}", "text": text, "label": label})
            k += 1
    return docs


def main():
    DATA.mkdir(parents=True, exist_ok=True)
    lines, word_synsets = build_taxonomy_lines()
    (DATA / "taxonomy.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"taxonomy: {len(word_synsets)} words, {len(lines)} lines")

    words, vectors = build_embeddings(word_synsets)
    out = [f"{len(words)} {EMBED_DIM}"]
    for w, vec in zip(words, vectors):
        out.append(w + " " + " ".join(f"{x:.6f}" for x in vec))
    (DATA / "embeddings.txt").write_text("\n".join(out) + "\n", encoding="utf-8")
    print(f"embeddings: {len(words)} x {EMBED_DIM}")

    for name, docs in (("sentiment.jsonl", make_sentiment_corpus()),
                       ("topics.jsonl", make_topic_corpus())):
        with open(DATA / name, "w", encoding="utf-8") as fh:
            for rec in docs:
                fh.write(json.dumps(rec) + "\n")
        print(f"{name}: {len(docs)} documents")

    # sanity: the taxonomy must parse and keep the documented fixture facts
    from cfedit.lexicon import parse_taxonomy, path_similarity, pos_tag, PosTag

    taxonomy = parse_taxonomy((DATA / "taxonomy.txt").read_text(encoding="utf-8"))
    assert taxonomy.antonyms("happy") == {"sad", "unhappy"}
    assert pos_tag("movie", taxonomy) == PosTag.NOUN
    assert path_similarity(taxonomy, "dog", "hound") == 1.0
    assert path_similarity(taxonomy, "dog", "animal") == 0.5
    assert path_similarity(taxonomy, "dog", "pasta") == 0.2
    sims = [path_similarity(taxonomy, "good", w) for w in ("walk", "dog", "well")]
    assert min(sims) >= 1.0 / 8.0, sims
    print("taxonomy fixture facts verified")


if __name__ == "__main__":
    main()
