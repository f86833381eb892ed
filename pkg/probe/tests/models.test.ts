import { describe, expect, it } from "vitest";

import { softmax } from "../src/graph.js";
import { Mat } from "../src/mat.js";
import { tokenize } from "../src/data.js";
import { ProbeModel } from "../src/models.js";
import { syntheticPairs, toyModel } from "./helpers.js";

function proba(model: ProbeModel, premise: string, hypothesis: string): number[] {
  return model.predictProba(premise, hypothesis);
}

describe("tokenize parity with the audit package", () => {
  it("lowercases, splits, strips edge punctuation", () => {
    expect(tokenize("Two boys are swimming in the pool."))
      .toEqual(["two", "boys", "are", "swimming", "in", "the", "pool"]);
    expect(tokenize("('Hello'), WORLD!!")).toEqual(["hello", "world"]);
    expect(tokenize("")).toEqual([]);
    expect(tokenize("<unk> <unk>")).toEqual(["<unk>", "<unk>"]);
  });
});

describe("forward pass", () => {
  for (const kind of ["parallel", "sequential"] as const) {
    it(`${kind}: output is a probability simplex`, () => {
      const model = toyModel(kind);
      for (let seed = 0; seed < 5; seed++) {
        const probs = proba(toyModel(kind, seed), "a man runs", "dog sits maybe");
        const total = probs.reduce((s, v) => s + v, 0);
        expect(probs).toHaveLength(3);
        expect(Math.abs(total - 1)).toBeLessThan(1e-6);
        for (const p of probs) expect(p).toBeGreaterThanOrEqual(0);
      }
      expect(model).toBeDefined();
    });

    it(`${kind}: empty hypothesis is an error`, () => {
      const model = toyModel(kind);
      expect(() => model.predictProba("a man runs", "")).toThrow(/hypothesis/);
    });

    it(`${kind}: accepts an empty premise (fully stripped text)`, () => {
      const model = toyModel(kind);
      const probs = model.predictProba("...", "dog sits");
      expect(Math.abs(probs.reduce((s, v) => s + v, 0) - 1)).toBeLessThan(1e-6);
    });
  }

  it("parallel: premise token order changes the output", () => {
    const model = toyModel("parallel");
    const a = proba(model, "a man runs park", "dog sits");
    const b = proba(model, "park runs man a", "dog sits");
    expect(Math.max(...a.map((v, i) => Math.abs(v - b[i])))).toBeGreaterThan(1e-9);
  });

  it("sequential: zeroed premise-state projection cuts premise dependence", () => {
    const model = toyModel("sequential");
    model.Whh.w.fill(0);
    const a = proba(model, "a man runs park", "dog sits");
    const b = proba(model, "red ball two the", "dog sits");
    for (let i = 0; i < 3; i++) expect(a[i]).toBeCloseTo(b[i], 12);
  });

  it("sequential: with premise-state transfer the premise matters", () => {
    const model = toyModel("sequential");
    const a = proba(model, "a man runs park", "dog sits");
    const b = proba(model, "red ball two the", "dog sits");
    expect(Math.max(...a.map((v, i) => Math.abs(v - b[i])))).toBeGreaterThan(1e-12);
  });

  it("unknown words share the unk embedding row", () => {
    const model = toyModel("parallel");
    const a = proba(model, "zzzz man runs", "dog sits");
    const b = proba(model, "<unk> man runs", "dog sits");
    for (let i = 0; i < 3; i++) expect(a[i]).toBeCloseTo(b[i], 12);
  });
});

describe("softmax", () => {
  it("is stable for large logits", () => {
    const logits = new Mat(3, 1);
    logits.w.set([1000, 1001, 999]);
    const probs = softmax(logits);
    expect(Math.abs(probs.reduce((s, v) => s + v, 0) - 1)).toBeLessThan(1e-12);
    expect(probs[1]).toBeGreaterThan(probs[0]);
  });
});

describe("serialization", () => {
  for (const kind of ["parallel", "sequential"] as const) {
    it(`${kind}: JSON round trip preserves predictions`, () => {
      const model = toyModel(kind);
      const restored = ProbeModel.fromJSON(JSON.parse(JSON.stringify(model.toJSON())));
      const pairs = syntheticPairs(10, 42);
      for (const pair of pairs) {
        const a = model.predictProba(pair.premise, pair.hypothesis);
        const b = restored.predictProba(pair.premise, pair.hypothesis);
        for (let i = 0; i < 3; i++) expect(a[i]).toBeCloseTo(b[i], 12);
      }
    });
  }
});
