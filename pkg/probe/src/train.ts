/** Cross-entropy training with Adam, dev-selected across epochs. */

import { Mat, Rng } from "./mat.js";
import { Graph, softmax } from "./graph.js";
import { Pair, Vocab, tokenize } from "./data.js";
import { ModelKind, ProbeModel } from "./models.js";

export interface TrainConfig {
  kind: ModelKind;
  embeddingDim: number;
  hiddenDim: number;
  epochs: number;
  batchSize: number;
  learningRate: number;
  seed: number;
  trainLimit?: number; // optional subset size for desk-scale runs
  quiet?: boolean;
}

export const DEFAULT_TRAIN: Omit<TrainConfig, "kind"> = {
  embeddingDim: 300,
  hiddenDim: 100,
  epochs: 10,
  batchSize: 128,
  learningRate: 1e-3,
  seed: 1,
};

class Adam {
  private m: Float64Array[];
  private v: Float64Array[];
  private t = 0;

  constructor(private params: Mat[], private lr: number,
              private beta1 = 0.9, private beta2 = 0.999, private eps = 1e-8) {
    this.m = params.map((p) => new Float64Array(p.w.length));
    this.v = params.map((p) => new Float64Array(p.w.length));
  }

  step(): void {
    this.t++;
    const correction1 = 1 - Math.pow(this.beta1, this.t);
    const correction2 = 1 - Math.pow(this.beta2, this.t);
    this.params.forEach((p, idx) => {
      const m = this.m[idx];
      const v = this.v[idx];
      for (let i = 0; i < p.w.length; i++) {
        const grad = p.dw[i];
        m[i] = this.beta1 * m[i] + (1 - this.beta1) * grad;
        v[i] = this.beta2 * v[i] + (1 - this.beta2) * grad * grad;
        p.w[i] -= (this.lr * (m[i] / correction1)) /
          (Math.sqrt(v[i] / correction2) + this.eps);
      }
      p.dw.fill(0);
    });
  }
}

/**
 * Forward one pair on the training tape and accumulate gradients of the
 * cross-entropy loss. Returns the loss.
 */
export function lossAndGrad(model: ProbeModel, pair: Pair): number {
  const g = new Graph(true);
  const logits = model.forward(g, model.vocab.ids(tokenize(pair.premise)),
                               model.vocab.ids(tokenize(pair.hypothesis)));
  const probs = softmax(logits);
  // d(loss)/d(logit) = softmax - onehot
  for (let i = 0; i < probs.length; i++) {
    logits.dw[i] = probs[i] - (i === pair.label ? 1 : 0);
  }
  g.backward();
  return -Math.log(Math.max(probs[pair.label], 1e-300));
}

export function accuracy(model: ProbeModel, pairs: Pair[]): number {
  if (pairs.length === 0) return 0;
  let correct = 0;
  for (const pair of pairs) {
    if (model.predict(pair.premise, pair.hypothesis) === pair.label) correct++;
  }
  return correct / pairs.length;
}

export interface TrainResult {
  model: ProbeModel;
  devAccuracies: number[];
  bestEpoch: number;
}

export async function trainProbe(
  config: TrainConfig, train: Pair[], dev: Pair[],
  initModel?: (model: ProbeModel) => Promise<void> | void,
): Promise<TrainResult> {
  let pairs = train;
  if (config.trainLimit && config.trainLimit < train.length) {
    pairs = train.slice(0, config.trainLimit);
  }
  const vocab = Vocab.fromPairs(pairs);
  const model = new ProbeModel({
    kind: config.kind,
    embeddingDim: config.embeddingDim,
    hiddenDim: config.hiddenDim,
    seed: config.seed,
  }, vocab);
  if (initModel) await initModel(model);
  const optimizer = new Adam(model.params(), config.learningRate);
  const rng = new Rng(config.seed + 17);
  const order = pairs.map((_, i) => i);
  const devAccuracies: number[] = [];
  let bestWeights: Float64Array[] | null = null;
  let bestAccuracy = -1;
  let bestEpoch = -1;

  for (let epoch = 0; epoch < config.epochs; epoch++) {
    rng.shuffle(order);
    let epochLoss = 0;
    for (let start = 0; start < order.length; start += config.batchSize) {
      const batch = order.slice(start, start + config.batchSize);
      let batchLoss = 0;
      for (const idx of batch) {
        batchLoss += lossAndGrad(model, pairs[idx]);
      }
      batchLoss /= batch.length;
      if (!Number.isFinite(batchLoss)) {
        throw new Error(`training diverged: loss=${batchLoss} at epoch ${epoch}, ` +
          `batch offset ${start} (lr=${config.learningRate})`);
      }
      for (const p of model.params()) {
        for (let i = 0; i < p.dw.length; i++) p.dw[i] /= batch.length;
      }
      optimizer.step();
      epochLoss += batchLoss * batch.length;
    }
    const selectionSet = dev.length > 0 ? dev : pairs;
    const devAccuracy = accuracy(model, selectionSet);
    devAccuracies.push(devAccuracy);
    if (!config.quiet) {
      console.error(`epoch ${epoch}: loss ${(epochLoss / pairs.length).toFixed(4)} ` +
        `selection accuracy ${(devAccuracy * 100).toFixed(1)}%`);
    }
    if (devAccuracy > bestAccuracy) {
      bestAccuracy = devAccuracy;
      bestEpoch = epoch;
      bestWeights = model.params().map((p) => p.w.slice());
    }
  }
  if (bestWeights) {
    model.params().forEach((p, i) => p.w.set(bestWeights![i]));
  }
  return { model, devAccuracies, bestEpoch };
}
