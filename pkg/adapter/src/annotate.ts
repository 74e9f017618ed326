// Annotation pipeline: raw sentences in, schema-ready annotations out.
// Backends are pluggable; the built-in "rules" backend implements
// tokenization, tagging, lemmatization, and constituency parses for the
// canonical ordering sublanguage without external services.

import { buildParse } from "./grammar";
import { mapTags, RULE_BACKEND_TAGMAP } from "./tagmap";
import { tokenizeSentence } from "./tokenize";
import {
  AdapterConfig,
  AnnotatedToken,
  BackendUnavailableError,
  DEFAULT_CONFIG,
  RawToken,
  SentenceAnnotation,
} from "./types";

export type Backend = (sentence: string) => SentenceAnnotation;

function rulesBackend(sentence: string): SentenceAnnotation {
  const colon = sentence.indexOf(":");
  const body = colon >= 0 ? sentence.slice(colon + 1) : sentence;
  const raw = tokenizeSentence(body);
  const built = buildParse(sentence, raw);
  const fixed = mapTags(built.tokens.map((t) => t.tag), RULE_BACKEND_TAGMAP);
  const tokens: AnnotatedToken[] = built.tokens.map((t: RawToken, i: number) => ({
    text: t.text,
    lemma: t.lemma,
    pos: fixed[i],
    ner: t.ner,
  }));
  return { sentence, tokens, tree: built.tree };
}

const BACKENDS: Record<string, Backend> = {
  rules: rulesBackend,
};

export function resolveBackend(config: AdapterConfig): Backend {
  const backend = BACKENDS[config.backend];
  if (backend === undefined) {
    throw new BackendUnavailableError(
      `backend ${JSON.stringify(config.backend)} is not available ` +
        `(have: ${Object.keys(BACKENDS).join(", ")})`,
    );
  }
  if (config.language !== "en") {
    throw new BackendUnavailableError(
      `backend ${config.backend} only handles language "en", got ${config.language}`,
    );
  }
  return backend;
}

export function annotate(
  texts: string[],
  config: AdapterConfig = DEFAULT_CONFIG,
): SentenceAnnotation[] {
  const backend = resolveBackend(config);
  const out: SentenceAnnotation[] = [];
  for (let start = 0; start < texts.length; start += config.batchSize) {
    for (const sentence of texts.slice(start, start + config.batchSize)) {
      const trimmed = sentence.trim();
      if (trimmed.length === 0) continue;
      out.push(backend(trimmed));
    }
  }
  return out;
}

export function toJsonl(annotations: SentenceAnnotation[]): string {
  return annotations.map((a) => JSON.stringify(a)).join("\n") + (annotations.length ? "\n" : "");
}
