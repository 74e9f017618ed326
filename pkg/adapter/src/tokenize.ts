// Tokenizer for the canonical ordering sublanguage: splits words, collapses
// multiword positional and adjacency phrases, and assigns fine-grained tags.

import { lemmatizeNoun, lemmatizeVerb } from "./lemmatize";
import { RawToken } from "./types";

const ARTICLES = new Set(["a", "an", "the"]);
const COPULAS = new Set(["is", "are", "was", "were"]);
const RELATIONS = new Set(["before", "after"]);
const FUNCTION_WORDS = new Set([
  "there", "here", "on", "in", "at", "of", "to", "from",
  "one", "two", "three", "four", "five", "six", "seven", "eight", "nine",
]);

const ORDINALS: Record<string, number> = {
  first: 1, second: 2, third: 3, fourth: 4, fifth: 5,
  sixth: 6, seventh: 7, eighth: 8, ninth: 9,
  "1st": 1, "2nd": 2, "3rd": 3, "4th": 4, "5th": 5,
  "6th": 6, "7th": 7, "8th": 8, "9th": 9,
};

const ORDINAL_NAMES = ["", "first", "second", "third", "fourth", "fifth", "sixth", "seventh", "eighth", "ninth"];

function ordinalWord(word: string): string | null {
  const k = ORDINALS[word.toLowerCase()];
  return k === undefined ? null : ORDINAL_NAMES[k];
}

export function tokenizeSentence(sentence: string): RawToken[] {
  const cleaned = sentence.trim().replace(/[.?!]+$/, "").replace(/,/g, " , ");
  const words = cleaned.split(/\s+/).filter((w) => w.length > 0);
  const tokens: RawToken[] = [];
  const groups: number[] = []; // comma-delimited group per token
  let group = 0;
  const emit = (token: RawToken) => {
    tokens.push(token);
    groups.push(group);
  };
  let i = 0;
  while (i < words.length) {
    if (words[i] === ",") {
      group += 1;
      i += 1;
      continue;
    }
    const lower = words[i].toLowerCase();

    if ((lower === "immediately" || lower === "directly") && i + 1 < words.length) {
      const next = words[i + 1].toLowerCase();
      if (next === "before" || next === "after") {
        emit({
          text: `${words[i]} ${words[i + 1]}`,
          lemma: next === "after" ? "succeed" : "precede",
          tag: "REL",
          ner: null,
        });
        i += 2;
        continue;
      }
    }

    // [the] <ordinal> from the <left|right>
    let j = i;
    if (lower === "the" && j + 1 < words.length) j += 1;
    const ord = j < words.length ? ordinalWord(words[j]) : null;
    if (
      ord !== null &&
      j + 3 < words.length &&
      words[j + 1].toLowerCase() === "from" &&
      words[j + 2].toLowerCase() === "the" &&
      (words[j + 3].toLowerCase() === "left" || words[j + 3].toLowerCase() === "right")
    ) {
      const side = words[j + 3].toLowerCase() === "right" ? "L" : "";
      emit({
        text: words.slice(i, j + 4).join(" "),
        lemma: ord + side,
        tag: "OD",
        ner: null,
      });
      i = j + 4;
      continue;
    }

    if (ARTICLES.has(lower)) {
      emit({ text: words[i], lemma: lower, tag: "DT", ner: null });
    } else if (COPULAS.has(lower)) {
      emit({ text: words[i], lemma: "be", tag: "AUX", ner: null });
    } else if (lower === "not") {
      emit({ text: words[i], lemma: "not", tag: "NEG", ner: null });
    } else if (lower === "and") {
      emit({ text: words[i], lemma: "and", tag: "CC", ner: null });
    } else if (RELATIONS.has(lower)) {
      emit({ text: words[i], lemma: lower, tag: "REL", ner: null });
    } else if (ordinalWord(words[i]) !== null) {
      emit({ text: words[i], lemma: ordinalWord(words[i])!, tag: "OD", ner: null });
    } else if (lower === "last") {
      emit({ text: words[i], lemma: "last", tag: "JJ", ner: null });
    } else if (FUNCTION_WORDS.has(lower)) {
      emit({ text: words[i], lemma: lower, tag: "FW", ner: null });
    } else if (
      lower.endsWith("ing") &&
      tokens.length > 0 &&
      (tokens[tokens.length - 1].tag === "AUX" || tokens[tokens.length - 1].tag === "NEG")
    ) {
      emit({ text: words[i], lemma: lemmatizeVerb(lower), tag: "VBG", ner: null });
    } else if (/^[A-Z]/.test(words[i])) {
      emit({ text: words[i], lemma: lower, tag: "NNP", ner: "ENTITY" });
    } else {
      const lemma = lemmatizeNoun(lower);
      emit({ text: words[i], lemma, tag: lemma !== lower ? "NNS" : "NN", ner: null });
    }
    i += 1;
  }

  // "A" names an entity unless a content word follows
  for (let k = 0; k < tokens.length; k += 1) {
    if (tokens[k].text === "A" && tokens[k].tag === "DT") {
      const next = k + 1 < tokens.length ? tokens[k + 1] : null;
      if (next === null || !["NN", "NNS", "JJ"].includes(next.tag)) {
        tokens[k] = { text: "A", lemma: "a", tag: "NNP", ner: "ENTITY" };
      }
    }
  }

  // adjacent names in the same comma group form one two-part name
  const merged: RawToken[] = [];
  const mergedGroups: number[] = [];
  for (let k = 0; k < tokens.length; k += 1) {
    const prev = merged.length > 0 ? merged[merged.length - 1] : null;
    if (
      prev !== null &&
      prev.tag === "NNP" &&
      tokens[k].tag === "NNP" &&
      mergedGroups[mergedGroups.length - 1] === groups[k]
    ) {
      merged[merged.length - 1] = {
        text: `${prev.text} ${tokens[k].text}`,
        lemma: `${prev.lemma}-${tokens[k].lemma}`,
        tag: "NNP",
        ner: "ENTITY",
      };
      continue;
    }
    merged.push(tokens[k]);
    mergedGroups.push(groups[k]);
  }
  return merged;
}
