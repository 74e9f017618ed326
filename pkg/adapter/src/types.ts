// Shared shapes for the annotation pipeline and the JSONL exchange format.

export interface AnnotatedToken {
  text: string;
  lemma: string;
  pos: string; // fixed downstream tagset, produced via the tag map
  ner: string | null;
}

// internal token before tag mapping; tags are fine-grained treebank style
export interface RawToken {
  text: string;
  lemma: string;
  tag: string;
  ner: string | null;
}

export type NaryTree =
  | { leaf: number }
  | { label: string; children: NaryTree[] };

export interface SentenceAnnotation {
  sentence: string;
  tokens: AnnotatedToken[];
  tree: NaryTree;
}

export interface AdapterConfig {
  backend: string;
  language: string;
  batchSize: number;
  outputPath: string | null;
}

export const DEFAULT_CONFIG: AdapterConfig = {
  backend: "rules",
  language: "en",
  batchSize: 64,
  outputPath: null,
};

export class BackendUnavailableError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "BackendUnavailableError";
  }
}

export class TagMappingError extends Error {
  readonly unmapped: string[];
  constructor(unmapped: string[]) {
    super(`no fixed-tagset mapping for: ${unmapped.join(", ")}`);
    this.name = "TagMappingError";
    this.unmapped = unmapped;
  }
}

export class UnsupportedSentenceError extends Error {
  constructor(sentence: string, why: string) {
    super(`cannot build a constituency parse (${why}): ${JSON.stringify(sentence)}`);
    this.name = "UnsupportedSentenceError";
  }
}
