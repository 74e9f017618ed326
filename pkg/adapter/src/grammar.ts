// n-ary constituency builder for the canonical sublanguage. Trees stay
// n-ary here; the consumer binarizes them itself.

import { NaryTree, RawToken, UnsupportedSentenceError } from "./types";

interface Cursor {
  tokens: RawToken[];
  i: number;
  sentence: string;
}

function peek(c: Cursor): RawToken | null {
  return c.i < c.tokens.length ? c.tokens[c.i] : null;
}

function take(c: Cursor): RawToken {
  const t = c.tokens[c.i];
  c.i += 1;
  return t;
}

function fail(c: Cursor, why: string): never {
  throw new UnsupportedSentenceError(c.sentence, why);
}

interface Phrase {
  tree: NaryTree;
  tokens: RawToken[];
}

// token indices are assigned after the full token list is known
type IndexedLeafMaker = (token: RawToken) => NaryTree;

function parseNounPhrase(c: Cursor, leaf: IndexedLeafMaker): Phrase {
  const tok = peek(c);
  if (tok === null) fail(c, "expected a noun phrase");
  if (tok.tag === "NNP") {
    take(c);
    return { tree: { label: "NP", children: [leaf(tok)] }, tokens: [tok] };
  }
  if (tok.tag !== "DT") fail(c, `expected article or name, saw ${tok.text}`);
  const det = take(c);
  const content: RawToken[] = [];
  while (true) {
    const next = peek(c);
    if (next !== null && ["NN", "NNS", "JJ"].includes(next.tag) && next.lemma !== "last") {
      content.push(take(c));
    } else {
      break;
    }
  }
  if (content.length === 0) fail(c, `article ${det.text} without a noun`);
  const fixed = content.map((t, idx) =>
    idx < content.length - 1 && t.tag !== "JJ" ? { ...t, tag: "JJ" } : t,
  );
  const children: NaryTree[] = [leaf(det), ...fixed.map((t) => leaf(t))];
  return { tree: { label: "NP", children }, tokens: [det, ...fixed] };
}

function parsePredicate(c: Cursor, leaf: IndexedLeafMaker): Phrase {
  const tok = peek(c);
  if (tok === null) fail(c, "missing predicate after copula");
  if (tok.tag === "OD" || (tok.tag === "JJ" && tok.lemma === "last")) {
    take(c);
    return { tree: leaf(tok), tokens: [tok] };
  }
  if (tok.tag === "REL" || tok.tag === "VBG") {
    const verb = take(c);
    const verbLeaf = leaf(verb); // before the object NP claims leaf indices
    const np = parseNounPhrase(c, leaf);
    return {
      tree: { label: "VP2", children: [verbLeaf, np.tree] },
      tokens: [verb, ...np.tokens],
    };
  }
  if (["NN", "NNS", "JJ"].includes(tok.tag)) {
    const word = take(c);
    if (peek(c) !== null && ["NN", "NNS", "JJ"].includes(peek(c)!.tag)) {
      fail(c, "multiword predicate");
    }
    const adjective = { ...word, tag: "JJ" };
    return { tree: leaf(adjective), tokens: [adjective] };
  }
  fail(c, `cannot use ${tok.text} as a predicate`);
}

function parseEntityList(c: Cursor, leaf: IndexedLeafMaker): Phrase {
  const groups: Phrase[] = [];
  let conj: RawToken | null = null;
  let conjLeaf: NaryTree | null = null;
  while (peek(c) !== null) {
    const tok = peek(c)!;
    if (tok.tag === "CC") {
      if (conj !== null || groups.length === 0) fail(c, "misplaced conjunction");
      conj = take(c);
      conjLeaf = leaf(conj); // leaf indices must stay left to right
      if (peek(c) === null) fail(c, "dangling conjunction");
      groups.push(parseNounPhrase(c, leaf));
      if (peek(c) !== null) fail(c, "tokens after the final list item");
      break;
    }
    groups.push(parseNounPhrase(c, leaf));
  }
  if (groups.length === 0) fail(c, "empty entity list");
  if (groups.length === 1 && conj === null) return groups[0];
  const children: NaryTree[] = [];
  const tokens: RawToken[] = [];
  for (const group of groups.slice(0, -1)) {
    children.push(group.tree);
    tokens.push(...group.tokens);
  }
  if (conj !== null && conjLeaf !== null) {
    children.push(conjLeaf);
    tokens.push(conj);
  }
  const lastGroup = groups[groups.length - 1];
  children.push(lastGroup.tree);
  tokens.push(...lastGroup.tokens);
  return { tree: { label: "LST", children }, tokens };
}

export interface BuiltParse {
  tree: NaryTree;
  tokens: RawToken[];
}

export function buildParse(sentence: string, tokens: RawToken[]): BuiltParse {
  // leaf nodes reference final token positions; collect used tokens in order
  const used: RawToken[] = [];
  const leaf: IndexedLeafMaker = (token) => {
    used.push(token);
    return { leaf: used.length - 1 };
  };

  const colon = sentence.indexOf(":");
  if (colon >= 0) {
    const c: Cursor = { tokens, i: 0, sentence };
    const list = parseEntityList(c, leaf);
    return { tree: list.tree, tokens: used };
  }

  const c: Cursor = { tokens, i: 0, sentence };
  const subject = parseNounPhrase(c, leaf);
  const auxTok = peek(c);
  if (auxTok === null || auxTok.tag !== "AUX") fail(c, "expected is/are after the subject");
  const aux = take(c);
  let negation: RawToken | null = null;
  if (peek(c) !== null && peek(c)!.tag === "NEG") negation = take(c);
  const auxLeaf = leaf(aux);
  const negLeaf = negation !== null ? leaf(negation) : null;
  const predicate = parsePredicate(c, leaf);
  if (peek(c) !== null) fail(c, `trailing tokens from ${peek(c)!.text}`);

  const vpChildren: NaryTree[] = [auxLeaf];
  if (negLeaf !== null) {
    vpChildren.push({ label: "NEG", children: [negLeaf, predicate.tree] });
  } else {
    vpChildren.push(predicate.tree);
  }
  const tree: NaryTree = {
    label: "S",
    children: [subject.tree, { label: "VP", children: vpChildren }],
  };
  return { tree, tokens: used };
}
