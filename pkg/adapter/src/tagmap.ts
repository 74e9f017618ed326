// Source-tag to fixed-tagset mapping for the built-in rule backend.
// The table is data: edit it when wiring a backend with different tags.

import { TagMappingError } from "./types";

export const RULE_BACKEND_TAGMAP: Record<string, string> = {
  DT: "determiner",
  NN: "noun",
  NNS: "noun",
  NNP: "propernoun",
  JJ: "adjective",
  VBG: "verb",
  REL: "verb",
  AUX: "auxiliary",
  NEG: "negation",
  CC: "conjunction",
  OD: "numeral",
  RB: "adverb",
  FW: "other",
};

export function mapTags(
  tags: string[],
  table: Record<string, string> = RULE_BACKEND_TAGMAP,
): string[] {
  const unmapped = [...new Set(tags.filter((t) => !(t in table)))];
  if (unmapped.length > 0) {
    throw new TagMappingError(unmapped);
  }
  return tags.map((t) => table[t]);
}
