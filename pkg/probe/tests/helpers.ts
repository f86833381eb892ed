import { Mat, Rng } from "../src/mat.js";
import { Pair, Vocab } from "../src/data.js";
import { ProbeConfig, ProbeModel } from "../src/models.js";

export const TOY_WORDS = ["a", "man", "dog", "runs", "sits", "park", "red",
  "ball", "two", "the"];

const MARKERS = ["yes", "maybe", "no"]; // leak label 0/1/2 into the hypothesis

export function syntheticPairs(n: number, seed: number, leak = true): Pair[] {
  const rng = new Rng(seed);
  const pairs: Pair[] = [];
  for (let i = 0; i < n; i++) {
    const label = i % 3;
    const pick = (k: number) =>
      Array.from({ length: k }, () => TOY_WORDS[rng.int(TOY_WORDS.length)]);
    const hypothesis = pick(3);
    if (leak) hypothesis.splice(rng.int(hypothesis.length + 1), 0, MARKERS[label]);
    pairs.push({
      id: `p${i}`,
      premise: pick(4 + rng.int(3)).join(" "),
      hypothesis: hypothesis.join(" "),
      label,
    });
  }
  return pairs;
}

export function toyModel(kind: "parallel" | "sequential", seed = 3,
                         pairs?: Pair[]): ProbeModel {
  const vocab = Vocab.fromPairs(pairs ?? syntheticPairs(30, 11));
  const config: ProbeConfig = { kind, embeddingDim: 8, hiddenDim: 6, seed };
  return new ProbeModel(config, vocab);
}

export function flattenParams(model: ProbeModel): { mats: Mat[]; values: number[] } {
  const mats = model.params();
  const values: number[] = [];
  for (const mat of mats) values.push(...mat.w);
  return { mats, values };
}
