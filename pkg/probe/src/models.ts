/**
 * The two sentence-pair classifiers.
 *
 * Both embed tokens with a shared matrix and feed each encoder the embedded
 * word plus a projection of its previous hidden state. The parallel model runs
 * two independent encoders and classifies their concatenated final states
 * through three tanh layers; the sequential model initializes the hypothesis
 * encoder from a projection of the premise encoder's final state and uses a
 * single tanh layer.
 */

import { Mat, Rng, randMat } from "./mat.js";
import { Graph, softmax } from "./graph.js";
import { Vocab, tokenize } from "./data.js";

export type ModelKind = "parallel" | "sequential";

export interface ProbeConfig {
  kind: ModelKind;
  embeddingDim: number; // 300 at full scale
  hiddenDim: number; // 100 for both models
  seed: number;
}

const N_CLASSES = 3;

interface LstmParams {
  Wix: Mat; Wih: Mat; bi: Mat;
  Wfx: Mat; Wfh: Mat; bf: Mat;
  Wox: Mat; Woh: Mat; bo: Mat;
  Wcx: Mat; Wch: Mat; bc: Mat;
}

function lstmParams(inputDim: number, hiddenDim: number, rng: Rng): LstmParams {
  const gate = () => ({
    x: randMat(hiddenDim, inputDim, rng),
    h: randMat(hiddenDim, hiddenDim, rng),
    b: new Mat(hiddenDim, 1),
  });
  const [i, f, o, c] = [gate(), gate(), gate(), gate()];
  // forget bias starts positive so early training retains cell state
  f.b.w.fill(1.0);
  return {
    Wix: i.x, Wih: i.h, bi: i.b,
    Wfx: f.x, Wfh: f.h, bf: f.b,
    Wox: o.x, Woh: o.h, bo: o.b,
    Wcx: c.x, Wch: c.h, bc: c.b,
  };
}

interface LstmState {
  h: Mat;
  c: Mat;
}

function lstmStep(g: Graph, p: LstmParams, input: Mat, prev: LstmState): LstmState {
  const inputGate = g.sigmoid(g.add(g.add(g.mul(p.Wix, input), g.mul(p.Wih, prev.h)), p.bi));
  const forgetGate = g.sigmoid(g.add(g.add(g.mul(p.Wfx, input), g.mul(p.Wfh, prev.h)), p.bf));
  const outputGate = g.sigmoid(g.add(g.add(g.mul(p.Wox, input), g.mul(p.Woh, prev.h)), p.bo));
  const cellWrite = g.tanh(g.add(g.add(g.mul(p.Wcx, input), g.mul(p.Wch, prev.h)), p.bc));
  const c = g.add(g.eltmul(forgetGate, prev.c), g.eltmul(inputGate, cellWrite));
  const h = g.eltmul(outputGate, g.tanh(c));
  return { h, c };
}

export class ProbeModel {
  config: ProbeConfig;
  We: Mat; // vocab x embedding
  Whp: Mat; // hidden -> embedding space, premise side
  Whh: Mat; // hidden -> embedding space, hypothesis side
  lstmP: LstmParams;
  lstmH: LstmParams;
  // parallel head: three tanh layers; sequential head: single tanh layer
  W1?: Mat; B1?: Mat;
  W2?: Mat; B2?: Mat;
  W3?: Mat; B3?: Mat;
  Wl?: Mat; Bl?: Mat;
  vocab: Vocab;

  constructor(config: ProbeConfig, vocab: Vocab) {
    this.config = config;
    this.vocab = vocab;
    const rng = new Rng(config.seed);
    const { embeddingDim: e, hiddenDim: h } = config;
    this.We = randMat(vocab.size, e, rng);
    this.Whp = randMat(e, h, rng);
    this.Whh = randMat(e, h, rng);
    this.lstmP = lstmParams(e, h, rng);
    this.lstmH = lstmParams(e, h, rng);
    if (config.kind === "parallel") {
      const d = 2 * h;
      this.W1 = randMat(d, d, rng);
      this.B1 = new Mat(d, 1);
      this.W2 = randMat(d, d, rng);
      this.B2 = new Mat(d, 1);
      this.W3 = randMat(N_CLASSES, d, rng);
      this.B3 = new Mat(N_CLASSES, 1);
    } else {
      this.Wl = randMat(N_CLASSES, h, rng);
      this.Bl = new Mat(N_CLASSES, 1);
    }
  }

  params(): Mat[] {
    const mats = [this.We, this.Whp, this.Whh];
    for (const lstm of [this.lstmP, this.lstmH]) {
      mats.push(...Object.values(lstm));
    }
    for (const m of [this.W1, this.B1, this.W2, this.B2, this.W3, this.B3,
                     this.Wl, this.Bl]) {
      if (m) mats.push(m);
    }
    return mats;
  }

  private zeroState(): LstmState {
    const h = this.config.hiddenDim;
    return { h: new Mat(h, 1), c: new Mat(h, 1) };
  }

  private encode(g: Graph, lstm: LstmParams, project: Mat, tokenIds: number[]): LstmState {
    let state = this.zeroState();
    for (const id of tokenIds) {
      const input = g.add(g.rowPluck(this.We, id), g.mul(project, state.h));
      state = lstmStep(g, lstm, input, state);
    }
    return state;
  }

  /** Class logits for one pair of token-id sequences. */
  forward(g: Graph, premiseIds: number[], hypothesisIds: number[]): Mat {
    if (hypothesisIds.length === 0) throw new Error("empty hypothesis");
    const premiseState = this.encode(g, this.lstmP, this.Whp, premiseIds);
    if (this.config.kind === "parallel") {
      const hypothesisState = this.encode(g, this.lstmH, this.Whh, hypothesisIds);
      const pairVec = g.concat(premiseState.h, hypothesisState.h);
      const l1 = g.tanh(g.add(g.mul(this.W1!, pairVec), this.B1!));
      const l2 = g.tanh(g.add(g.mul(this.W2!, l1), this.B2!));
      return g.tanh(g.add(g.mul(this.W3!, l2), this.B3!));
    }
    // sequential: transfer the premise state through the hypothesis-side
    // projection as a wordless first step, then continue over the hypothesis
    let state = lstmStep(g, this.lstmH, g.mul(this.Whh, premiseState.h), this.zeroState());
    for (const id of hypothesisIds) {
      const input = g.add(g.rowPluck(this.We, id), g.mul(this.Whh, state.h));
      state = lstmStep(g, this.lstmH, input, state);
    }
    return g.tanh(g.add(g.mul(this.Wl!, state.h), this.Bl!));
  }

  /** Per-class probabilities for raw sentences (no gradients). */
  predictProba(premise: string, hypothesis: string): number[] {
    const g = new Graph(false);
    const logits = this.forward(g, this.vocab.ids(tokenize(premise)),
                                this.vocab.ids(tokenize(hypothesis)));
    return softmax(logits);
  }

  predict(premise: string, hypothesis: string): number {
    const probs = this.predictProba(premise, hypothesis);
    let best = 0;
    for (let i = 1; i < probs.length; i++) if (probs[i] > probs[best]) best = i;
    return best;
  }

  toJSON(): object {
    return {
      schema_version: 1,
      config: this.config,
      vocab: this.vocab.toJSON(),
      weights: Object.fromEntries(
        this.namedParams().map(([name, mat]) => [name, mat.toJSON()]),
      ),
    };
  }

  namedParams(): Array<[string, Mat]> {
    const entries: Array<[string, Mat]> = [
      ["We", this.We], ["Whp", this.Whp], ["Whh", this.Whh],
    ];
    (["lstmP", "lstmH"] as const).forEach((side) => {
      for (const [name, mat] of Object.entries(this[side])) {
        entries.push([`${side}.${name}`, mat as Mat]);
      }
    });
    for (const name of ["W1", "B1", "W2", "B2", "W3", "B3", "Wl", "Bl"] as const) {
      if (this[name]) entries.push([name, this[name]!]);
    }
    return entries;
  }

  static fromJSON(doc: any): ProbeModel {
    const model = new ProbeModel(doc.config, Vocab.fromJSON(doc.vocab));
    for (const [name, mat] of model.namedParams()) {
      const saved = doc.weights[name];
      if (!saved) throw new Error(`missing weight ${name}`);
      mat.w.set(saved.w);
    }
    return model;
  }
}
