/** Corpus loading: generic JSONL pairs, partition manifests, vocabulary. */

import * as fs from "fs";

export const LABELS = ["entailment", "neutral", "contradiction"] as const;
export type LabelName = (typeof LABELS)[number];

export interface Pair {
  id: string;
  premise: string;
  hypothesis: string;
  label: number; // ordinal into LABELS
}

export const UNK = "<unk>";

// Same rule as the audit package: lowercase, whitespace split, edge punctuation
// stripped, empty pieces dropped.
const STRIP = new Set([".", ",", "!", "?", ";", ":", '"', "'", "(", ")"]);

export function tokenize(text: string): string[] {
  const tokens: string[] = [];
  for (const piece of text.toLowerCase().split(/\s+/)) {
    let start = 0;
    let end = piece.length;
    while (start < end && STRIP.has(piece[start])) start++;
    while (end > start && STRIP.has(piece[end - 1])) end--;
    if (end > start) tokens.push(piece.slice(start, end));
  }
  return tokens;
}

export function loadPairs(path: string): Pair[] {
  const pairs: Pair[] = [];
  const lines = fs.readFileSync(path, "utf-8").split("\n");
  lines.forEach((line, i) => {
    if (!line.trim()) return;
    let record: Record<string, unknown>;
    try {
      record = JSON.parse(line);
    } catch (err) {
      throw new Error(`${path}:${i + 1}: malformed JSON (${err})`);
    }
    for (const key of ["id", "premise", "hypothesis", "label"]) {
      if (typeof record[key] !== "string") {
        throw new Error(`${path}:${i + 1}: missing string field '${key}'`);
      }
    }
    const label = LABELS.indexOf((record.label as string).toLowerCase() as LabelName);
    if (label < 0) throw new Error(`${path}:${i + 1}: unknown label '${record.label}'`);
    pairs.push({
      id: record.id as string,
      premise: record.premise as string,
      hypothesis: record.hypothesis as string,
      label,
    });
  });
  return pairs;
}

export interface Manifest {
  easyIds: Set<string>;
  hardIds: Set<string>;
}

export function loadManifest(path: string): Manifest {
  const lines = fs.readFileSync(path, "utf-8").split("\n");
  if (lines[0] !== "#easy") throw new Error(`${path}: manifest must start with '#easy'`);
  const hardAt = lines.indexOf("#hard");
  if (hardAt < 0) throw new Error(`${path}: manifest missing '#hard' section`);
  return {
    easyIds: new Set(lines.slice(1, hardAt).filter((l) => l)),
    hardIds: new Set(lines.slice(hardAt + 1).filter((l) => l)),
  };
}

/**
 * Token-to-index map built from training pairs. Index 0 is the shared unknown
 * row, used for OOV tokens and for the premise-masking symbol.
 */
export class Vocab {
  index = new Map<string, number>([[UNK, 0]]);

  static fromPairs(pairs: Pair[]): Vocab {
    const vocab = new Vocab();
    for (const pair of pairs) {
      for (const token of [...tokenize(pair.premise), ...tokenize(pair.hypothesis)]) {
        if (!vocab.index.has(token)) vocab.index.set(token, vocab.index.size);
      }
    }
    return vocab;
  }

  get size(): number {
    return this.index.size;
  }

  lookup(token: string): number {
    return this.index.get(token) ?? 0;
  }

  ids(tokens: string[]): number[] {
    return tokens.map((t) => this.lookup(t));
  }

  toJSON(): string[] {
    const tokens = new Array<string>(this.index.size);
    for (const [token, i] of this.index) tokens[i] = token;
    return tokens;
  }

  static fromJSON(tokens: string[]): Vocab {
    const vocab = new Vocab();
    vocab.index = new Map(tokens.map((t, i) => [t, i]));
    return vocab;
  }
}
