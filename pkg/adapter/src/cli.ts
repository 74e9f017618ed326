#!/usr/bin/env node
// fsli-annotate --in texts.txt --out trees.jsonl [--backend NAME]
//               [--lang CODE] [--batch N]
// One input sentence per line; one annotated-tree JSON object per output line.

import * as fs from "fs";
import { annotate, toJsonl } from "./annotate";
import { AdapterConfig, DEFAULT_CONFIG } from "./types";

function usage(): never {
  process.stderr.write(
    "usage: fsli-annotate --in <texts.txt> --out <trees.jsonl> " +
      "[--backend NAME] [--lang CODE] [--batch N]\n",
  );
  process.exit(2);
}

function parseArgs(argv: string[]): { input: string; config: AdapterConfig } {
  let input: string | null = null;
  const config: AdapterConfig = { ...DEFAULT_CONFIG };
  for (let i = 0; i < argv.length; i += 1) {
    const flag = argv[i];
    const value = argv[i + 1];
    switch (flag) {
      case "--in":
        if (value === undefined) usage();
        input = value;
        i += 1;
        break;
      case "--out":
        if (value === undefined) usage();
        config.outputPath = value;
        i += 1;
        break;
      case "--backend":
        if (value === undefined) usage();
        config.backend = value;
        i += 1;
        break;
      case "--lang":
        if (value === undefined) usage();
        config.language = value;
        i += 1;
        break;
      case "--batch":
        if (value === undefined || Number.isNaN(Number(value)) || Number(value) < 1) usage();
        config.batchSize = Number(value);
        i += 1;
        break;
      default:
        usage();
    }
  }
  if (input === null || config.outputPath === null) usage();
  return { input, config };
}

function main(): number {
  const { input, config } = parseArgs(process.argv.slice(2));
  let text: string;
  try {
    text = fs.readFileSync(input, "utf-8");
  } catch (err) {
    process.stderr.write(`cannot read ${input}: ${(err as Error).message}\n`);
    return 2;
  }
  const sentences = text.split(/\r?\n/).filter((line) => line.trim().length > 0);
  try {
    const annotations = annotate(sentences, config);
    fs.writeFileSync(config.outputPath!, toJsonl(annotations), "utf-8");
    process.stderr.write(`annotated ${annotations.length} sentences -> ${config.outputPath}\n`);
    return 0;
  } catch (err) {
    const e = err as Error;
    process.stderr.write(`${e.name}: ${e.message}\n`);
    return 1;
  }
}

process.exit(main());
