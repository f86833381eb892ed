/** Subset evaluation against an easy/hard partition manifest. */

import { Manifest, Pair } from "./data.js";
import { ProbeModel } from "./models.js";

export interface SubsetAccuracies {
  full: number;
  easy: number;
  hard: number;
  easyCount: number;
  hardCount: number;
}

export function evaluateSubsets(model: ProbeModel, test: Pair[],
                                manifest: Manifest): SubsetAccuracies {
  let easyCorrect = 0;
  let hardCorrect = 0;
  let easyCount = 0;
  let hardCount = 0;
  for (const pair of test) {
    const inEasy = manifest.easyIds.has(pair.id);
    const inHard = manifest.hardIds.has(pair.id);
    if (inEasy === inHard) {
      throw new Error(`pair ${pair.id} is ${inEasy ? "in both" : "in neither"} ` +
        "manifest section");
    }
    const correct = model.predict(pair.premise, pair.hypothesis) === pair.label;
    if (inEasy) {
      easyCount++;
      if (correct) easyCorrect++;
    } else {
      hardCount++;
      if (correct) hardCorrect++;
    }
  }
  if (easyCount !== manifest.easyIds.size || hardCount !== manifest.hardIds.size) {
    throw new Error("manifest ids do not cover the test split exactly");
  }
  const total = easyCount + hardCount;
  return {
    full: total ? (easyCorrect + hardCorrect) / total : 0,
    easy: easyCount ? easyCorrect / easyCount : 0,
    hard: hardCount ? hardCorrect / hardCount : 0,
    easyCount,
    hardCount,
  };
}

export interface ProbeResults {
  model: string;
  seed: number;
  full: number;
  easy: number;
  hard: number;
  masked_full: number | null;
  masked_easy: number | null;
  masked_hard: number | null;
}

export function buildResults(model: ProbeModel, plain: SubsetAccuracies,
                             masked: SubsetAccuracies | null): ProbeResults {
  return {
    model: model.config.kind,
    seed: model.config.seed,
    full: plain.full,
    easy: plain.easy,
    hard: plain.hard,
    masked_full: masked ? masked.full : null,
    masked_easy: masked ? masked.easy : null,
    masked_hard: masked ? masked.hard : null,
  };
}
