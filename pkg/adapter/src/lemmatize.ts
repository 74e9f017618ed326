// Rule-based lemmatization for the restricted ordering-problem vocabulary.

const IRREGULAR_NOUNS: Record<string, string> = {
  children: "child",
  people: "person",
  men: "man",
  women: "woman",
  geese: "goose",
  mice: "mouse",
  feet: "foot",
  teeth: "tooth",
  oxen: "ox",
  leaves: "leaf",
  knives: "knife",
  wolves: "wolf",
  shelves: "shelf",
  loaves: "loaf",
  kiwis: "kiwi",
  taxis: "taxi",
  buses: "bus",
};

const VERB_SEEDS: Record<string, string> = {
  eating: "eat",
  finished: "finish",
  finishing: "finish",
  arranged: "arrange",
  placed: "place",
  racing: "race",
  raced: "race",
  ranked: "rank",
  ordered: "order",
  scheduled: "schedule",
  parked: "park",
  priced: "price",
  seated: "seat",
  compared: "compare",
  displayed: "display",
};

function undouble(stem: string): string {
  if (
    stem.length >= 3 &&
    stem[stem.length - 1] === stem[stem.length - 2] &&
    !"lsz".includes(stem[stem.length - 1])
  ) {
    return stem.slice(0, -1);
  }
  return stem;
}

export function lemmatizeNoun(word: string): string {
  const w = word.toLowerCase();
  if (w in IRREGULAR_NOUNS) return IRREGULAR_NOUNS[w];
  if (w.endsWith("ies") && w.length > 4) return w.slice(0, -3) + "y";
  if (/(ses|xes|zes|ches|shes|oes)$/.test(w)) return w.slice(0, -2);
  if (w.endsWith("s") && !/(ss|us|is)$/.test(w)) return w.slice(0, -1);
  return w;
}

export function lemmatizeVerb(word: string): string {
  const w = word.toLowerCase();
  if (w in VERB_SEEDS) return VERB_SEEDS[w];
  if (w.endsWith("ying") && w.length > 5) return w.slice(0, -4);
  if (w.endsWith("ing") && w.length > 4) return undouble(w.slice(0, -3));
  if (w.endsWith("ied") && w.length > 4) return w.slice(0, -3) + "y";
  if (w.endsWith("ed") && w.length > 3) return undouble(w.slice(0, -2));
  return w;
}
